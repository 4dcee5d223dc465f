"""JSON and Graphviz DOT renderers."""

from __future__ import annotations

import json
from typing import Any

from .codes import code_label
from .orders import IntervalPoset
from .permcore import Permutation
from .posets import FinitePoset

__all__ = ["dumps", "emit_dot", "format_label"]


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def format_label(x: Any) -> str:
    if isinstance(x, Permutation):
        return str(x)
    if isinstance(x, frozenset):
        return "{" + ",".join(format_label(y) for y in sorted(x)) + "}"
    if isinstance(x, tuple) and all(isinstance(y, int) for y in x):
        return code_label(x)
    return str(x)


def _layers(P: FinitePoset) -> list[int]:
    try:
        return P.rank_function()
    except ValueError:
        # unranked: fall back to longest chain from below
        height = [0] * P.size
        order = sorted(range(P.size), key=lambda i: bin(P.down_masks[i]).count("1"))
        for b in order:
            height[b] = max((height[a] + 1 for a in P.lower_covers(b)), default=0)
        return height


def emit_dot(P: FinitePoset | IntervalPoset, name: str = "poset") -> str:
    """Hasse diagram as a DOT digraph drawn bottom to top, one layer per rank."""
    if isinstance(P, IntervalPoset):
        layer = [P.rank[u] for u in P.elements]
        P = P.to_poset()
    else:
        layer = _layers(P)
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(P.size):
        label = format_label(P.label(i)).replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    for r in sorted(set(layer)):
        members = "; ".join(f"n{i}" for i in range(P.size) if layer[i] == r)
        lines.append(f"  {{ rank=same; {members}; }}")
    for a, b in P.sorted_covers():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
