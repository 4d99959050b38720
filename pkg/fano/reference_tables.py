"""
Printed reference data, kept in the labels it was published with.

The printed drawings of the Fano plane use the lines
123, 147, 156, 246, 257, 345, 367; our XOR plane uses
123, 145, 167, 246, 257, 347, 356. DRAWN_TO_XOR converts the first
labeling into the second (it swaps 5 and 7).

P¹(F7) points are written 0..6 and "∞".
"""

DRAWN_TO_XOR = {1: 1, 2: 2, 3: 3, 4: 4, 5: 7, 6: 6, 7: 5}

DRAWN_LINES = ("123", "147", "156", "246", "257", "345", "367")

# ---- Harmonic cubes ----
# bottom face then top face, each read cyclically; vertex k of the top
# face sits above vertex k of the bottom face. Keys are Fano points
# (p-cubes) or drawn lines (ℓ-cubes).
FIGURE_CUBES = {
    "1": ("5326", "0∞14"),
    "123": ("6532", "0∞14"),
    "2": ("25∞6", "4310"),
    "147": ("5612", "04∞3"),
    "3": ("14∞5", "3206"),
    "156": ("62∞3", "4105"),
    "4": ("54∞6", "2031"),
    "246": ("45∞3", "0261"),
    "5": ("42∞6", "5103"),
    "367": ("6143", "05∞2"),
    "6": ("45∞3", "1026"),
    "257": ("42∞6", "3510"),
    "7": ("34∞2", "0615"),
    "345": ("54∞6", "1203"),
}

# ---- Triangle ↔ pair correspondence ----
TRIANGLE_PAIR_TABLE = {
    "01": "256", "02": "346", "03": "457", "04": "124", "05": "167", "06": "237", "0∞": "135",
    "12": "145", "13": "234", "14": "136", "15": "357", "16": "467", "1∞": "127", "23": "137",
    "24": "235", "25": "247", "26": "126", "2∞": "567", "34": "267", "35": "125", "36": "356",
    "3∞": "146", "45": "456", "46": "157", "4∞": "347", "56": "134", "5∞": "236", "6∞": "245",
}

# ---- The eight Steiner systems of triangles ----
# column headers are drawn lines; the triangle in a column avoids its header
T_SYSTEM_COLUMNS = ("123", "174", "156", "246", "257", "345", "376")
T_SYSTEM_TABLE = {
    "0": ("475", "265", "273", "135", "364", "167", "142"),
    "1": ("467", "265", "234", "375", "163", "172", "154"),
    "2": ("576", "253", "247", "173", "364", "126", "154"),
    "3": ("475", "356", "234", "173", "146", "276", "125"),
    "4": ("456", "253", "374", "157", "163", "276", "142"),
    "5": ("456", "236", "247", "375", "134", "167", "125"),
    "6": ("467", "356", "273", "157", "134", "126", "245"),
    "∞": ("576", "236", "374", "135", "465", "172", "245"),
}

# ---- Grading quadruples ----
QUADRUPLES_E7 = ("1247", "1256", "1346", "1357", "2345", "2367", "4567")
QUADRUPLES_E8 = (
    "1234", "5678", "1256", "3478", "1278", "3456", "1357",
    "2468", "1368", "2457", "1458", "2367", "1467", "2358",
)

# rows and columns labelled 1..8
XOR_ARRAY = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (2, 3, 0, 1, 6, 7, 4, 5),
    (3, 2, 1, 0, 7, 6, 5, 4),
    (4, 5, 6, 7, 0, 1, 2, 3),
    (5, 4, 7, 6, 1, 0, 3, 2),
    (6, 7, 4, 5, 2, 3, 0, 1),
    (7, 6, 5, 4, 3, 2, 1, 0),
)

# cells holding j, as pairs of row and column labels
PAIR_PARTITIONS = (
    "(12)(34)(56)(78)",
    "(13)(24)(57)(68)",
    "(14)(23)(58)(67)",
    "(15)(26)(37)(48)",
    "(16)(25)(38)(47)",
    "(17)(28)(35)(46)",
    "(18)(27)(36)(45)",
)

# ---- Syzygetic tetrad sign tables of one e8 factor ----
TETRAD_SIGN_TABLES = (
    ("++++", "++--", "--+-", "---+"),
    ("+-+-", "+--+", "-+++", "-+--"),
)


def drawn_points(text: str):
    """'256' -> (2, 7, 6) in XOR labels."""
    return tuple(DRAWN_TO_XOR[int(ch)] for ch in text)
