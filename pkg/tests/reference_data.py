"""Hand-transcribed reference values (Hasse diagrams of the running example)."""

INTERVAL_32514 = [
    "12345", "21345", "12435", "21435", "31425", "13425", "23415", "32415",
    "12534", "21534", "31524", "13524", "23514", "32514",
]

# (lower, upper) pairs of the left weak order diagram
INTERVAL_32514_COVERS = [
    ("12345", "21345"), ("12345", "12435"), ("21345", "21435"), ("12435", "21435"),
    ("21435", "31425"), ("12435", "13425"), ("13425", "23415"), ("31425", "32415"),
    ("23415", "32415"), ("12435", "12534"), ("21435", "21534"), ("12534", "21534"),
    ("31425", "31524"), ("21534", "31524"), ("13425", "13524"), ("12534", "13524"),
    ("23415", "23514"), ("13524", "23514"), ("32415", "32514"), ("31524", "32514"),
    ("23514", "32514"),
]

CODES_32514 = [
    "00000", "10000", "00100", "10100", "20100", "01100", "11100", "21100",
    "00200", "10200", "20200", "01200", "11200", "21200",
]

CODES_32514_COVERS = [
    ("00000", "10000"), ("00000", "00100"), ("10000", "10100"), ("00100", "10100"),
    ("10100", "20100"), ("00100", "01100"), ("10100", "11100"), ("01100", "11100"),
    ("20100", "21100"), ("11100", "21100"), ("00100", "00200"), ("10100", "10200"),
    ("00200", "10200"), ("20100", "20200"), ("10200", "20200"), ("01100", "01200"),
    ("00200", "01200"), ("11100", "11200"), ("10200", "11200"), ("01200", "11200"),
    ("21100", "21200"), ("20200", "21200"), ("11200", "21200"),
]

EXTENDED_31524 = [
    [0, 0, 1, 1, 2, 2],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 2],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]


def digits(s: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in s)
