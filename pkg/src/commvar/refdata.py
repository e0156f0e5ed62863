"""Explicit data printed alongside the reducibility arguments.

Roots are coordinates over the Bourbaki-numbered simple roots.  Each graded
basis element of the E7 orbit computation is a list of ``(sign, root)`` terms.
"""

from __future__ import annotations

import csv
from importlib import resources

E7_ORBIT_LABEL = (0, 2, 0, 0, 0, 0, 0)

E7_ORBIT_REPRESENTATIVE = (
    (0, 1, 1, 2, 1, 1, 0),
    (1, 1, 2, 2, 1, 0, 0),
    (1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 2, 2, 1, 0),
    (0, 1, 1, 2, 2, 1, 1),
)

# h = 4h_1 + 7h_2 + 8h_3 + 12h_4 + 9h_5 + 6h_6 + 3h_7
E7_NEUTRAL = (4, 7, 8, 12, 9, 6, 3)

E7_DEGREE2_CENTRALIZER = (
    [(1, (0, 1, 0, 0, 0, 0, 0))],
    [(1, (0, 1, 0, 1, 0, 0, 0))],
    [(1, (0, 1, 1, 1, 0, 0, 0)), (1, (0, 1, 0, 1, 1, 1, 0))],
    [(1, (0, 1, 0, 1, 1, 0, 0))],
    [(1, (1, 1, 1, 1, 0, 0, 0)), (1, (0, 1, 1, 2, 1, 0, 0))],
    [(1, (0, 1, 1, 1, 1, 0, 0))],
    [(1, (0, 1, 0, 1, 1, 1, 0)), (1, (1, 1, 1, 1, 1, 0, 0))],
    [(1, (0, 1, 1, 2, 1, 0, 0)), (1, (0, 1, 0, 1, 1, 1, 1))],
    [(1, (0, 1, 1, 1, 1, 1, 0))],
    [(1, (1, 1, 1, 2, 1, 0, 0))],
    [(1, (1, 1, 1, 1, 1, 1, 0)), (-1, (0, 1, 1, 1, 1, 1, 1))],
    [(1, (0, 1, 1, 2, 1, 1, 0)), (1, (1, 1, 1, 1, 1, 1, 1))],
    [(1, (0, 1, 1, 1, 1, 1, 1)), (-1, (0, 1, 1, 2, 2, 1, 0))],
    [(1, (1, 1, 2, 2, 1, 0, 0))],
    [(1, (1, 1, 1, 2, 1, 1, 0)), (-1, (0, 1, 1, 2, 1, 1, 1))],
    [(1, (0, 1, 1, 2, 1, 1, 1)), (-1, (1, 1, 1, 2, 2, 1, 1))],
    [(1, (1, 1, 2, 2, 1, 1, 0)), (-1, (0, 1, 1, 2, 2, 2, 1))],
    [(1, (1, 1, 1, 2, 2, 1, 0))],
    [(1, (1, 1, 1, 2, 1, 1, 1))],
    [(1, (0, 1, 1, 2, 2, 1, 1))],
    [(1, (1, 1, 2, 2, 2, 1, 0))],
    [(1, (1, 1, 2, 2, 1, 1, 1)), (1, (1, 1, 2, 3, 2, 1, 0))],
    [(1, (0, 1, 1, 2, 2, 2, 1)), (-1, (1, 1, 2, 2, 2, 1, 1))],
    [(1, (1, 1, 2, 3, 2, 1, 0)), (-1, (1, 1, 1, 2, 2, 2, 1))],
    [(1, (1, 1, 2, 3, 2, 1, 1))],
    [(1, (1, 1, 2, 2, 2, 2, 1))],
    [(1, (1, 1, 2, 3, 2, 2, 1))],
    [(1, (1, 1, 2, 3, 3, 2, 1))],
)

E7_DEGREE4_CENTRALIZER = (
    [(1, (1, 2, 2, 3, 2, 1, 0))],
    [(1, (1, 2, 2, 3, 2, 1, 1))],
    [(1, (1, 2, 2, 3, 2, 2, 1))],
    [(1, (1, 2, 2, 3, 3, 2, 1))],
    [(1, (1, 2, 2, 4, 3, 2, 1))],
    [(1, (1, 2, 3, 4, 3, 2, 1))],
    [(1, (2, 2, 3, 4, 3, 2, 1))],
)

# G2 sign table column/row labels in file order, as root coordinates.
G2_LABELS = {
    "a": (1, 0), "-a": (-1, 0),
    "b": (0, 1), "-b": (0, -1),
    "a+b": (1, 1), "-a-b": (-1, -1),
    "2a+b": (2, 1), "-2a-b": (-2, -1),
    "3a+b": (3, 1), "-3a-b": (-3, -1),
    "3a+2b": (3, 2), "-3a-2b": (-3, -2),
}


def g2_sign_table() -> dict:
    """``{(phi, psi): R}`` from the packaged CSV; ``None`` marks ``psi = -phi``."""
    text = resources.files("commvar.data").joinpath("g2_signs.csv").read_text()
    rows = list(csv.reader(text.splitlines()))
    header = rows[0][1:]
    table = {}
    for row in rows[1:]:
        phi = G2_LABELS[row[0]]
        for col, entry in zip(header, row[1:]):
            table[(phi, G2_LABELS[col])] = None if entry == "#" else int(entry)
    return table
