"""Root systems of the simple Lie algebras.

Roots are integer tuples of coordinates over the simple roots, numbered as in
Bourbaki (Humphreys, Theorem 11.4).  For G2 the first simple root is the short
one, so ``(1, 0)`` is alpha and ``(0, 1)`` is beta.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

__all__ = [
    "SimpleType",
    "RootSystem",
    "cartan_matrix",
    "build_root_system",
    "parse_type",
    "classify_cartan",
    "sub_system",
    "root_sum",
    "precedes",
]

Root = tuple


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        ok = (
            (f == "A" and r >= 1)
            or (f in "BC" and len(f) == 1 and r >= 2)
            or (f == "D" and r >= 4)
            or (f == "E" and r in (6, 7, 8))
            or (f == "F" and r == 4)
            or (f == "G" and r == 2)
        )
        if not ok:
            raise ValueError("inadmissible simple type %s%s" % (f, r))

    def __str__(self) -> str:
        return "%s%d" % (self.family, self.rank)

    @property
    def dimension(self) -> int:
        l = self.rank
        return {
            "A": l * l + 2 * l,
            "B": 2 * l * l + l,
            "C": 2 * l * l + l,
            "D": 2 * l * l - l,
            "E": {6: 78, 7: 133, 8: 248}.get(l, 0),
            "F": 52,
            "G": 14,
        }[self.family]


def parse_type(text) -> SimpleType:
    """Accept ``"E7"``, ``"e7"``, ``("E", 7)`` or a SimpleType."""
    if isinstance(text, SimpleType):
        return text
    if isinstance(text, tuple):
        return SimpleType(text[0].upper(), int(text[1]))
    s = str(text).strip()
    if len(s) < 2 or not s[1:].isdigit():
        raise ValueError("cannot parse simple type %r" % (text,))
    return SimpleType(s[0].upper(), int(s[1:]))


def cartan_matrix(t: SimpleType) -> tuple:
    """Cartan matrix with entries ``<alpha_i, alpha_j^vee>`` (Bourbaki numbering)."""
    f, l = t.family, t.rank
    a = [[0] * l for _ in range(l)]
    for i in range(l):
        a[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if f in "ABCD":
        chain = l - 1 if f != "D" else l - 2
        for i in range(chain):
            link(i, i + 1)
        if f == "B":
            link(l - 2, l - 1, -2, -1)
        elif f == "C":
            link(l - 2, l - 1, -1, -2)
        elif f == "D":
            link(l - 3, l - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, l - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif f == "G":
        link(0, 1, -1, -3)
    return tuple(tuple(r) for r in a)


def _half_lengths(cartan) -> tuple:
    """``d_i = (alpha_i, alpha_i) / 2`` normalised so the short roots have 1."""
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                # a_ij d_j = a_ji d_i
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    for i in range(n):
        if d[i] is None:
            d[i] = Fraction(1)
    m = min(d)
    return tuple(int(x / m) for x in d)


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: tuple
    half_lengths: tuple
    positive: tuple
    roots: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def simple_roots(self) -> tuple:
        return self.positive[: self.rank]

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def positive_index(self) -> dict:
        return {r: i for i, r in enumerate(self.positive)}

    def __contains__(self, v) -> bool:
        return tuple(v) in self.root_set

    def is_positive(self, r: Root) -> bool:
        return any(c > 0 for c in r)

    def height(self, r: Root) -> int:
        return sum(r)

    def inner(self, a: Root, b: Root) -> int:
        """Invariant form with short simple roots of squared length 2."""
        s = 0
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = self.cartan[i]
            for j, bj in enumerate(b):
                if bj and row[j]:
                    s += ai * bj * row[j] * self.half_lengths[j]
        return s

    def norm(self, a: Root) -> int:
        return self.inner(a, a)

    def pairing(self, b: Root, a: Root) -> int:
        """Cartan integer ``<b, a^vee> = 2 (b, a) / (a, a)``."""
        num = 2 * self.inner(b, a)
        den = self.norm(a)
        q, r = divmod(num, den)
        assert r == 0, "non-integral Cartan pairing"
        return q

    def coroot_coefficients(self, a: Root) -> tuple:
        """Coefficients of ``h_a`` over the simple coroots ``h_1..h_l``."""
        da = self.norm(a) // 2
        out = []
        for c, d in zip(a, self.half_lengths):
            q, r = divmod(c * d, da)
            assert r == 0
            out.append(q)
        return tuple(out)

    def string(self, a: Root, b: Root) -> tuple:
        """``(p, q)`` with ``b + i a`` a root for exactly ``-p <= i <= q``."""
        p = 0
        while _add(b, a, -(p + 1)) in self.root_set:
            p += 1
        q = 0
        while _add(b, a, q + 1) in self.root_set:
            q += 1
        return p, q

    def highest_root(self) -> Root:
        return self.positive[-1]

    def to_json(self) -> str:
        doc = {
            "type": str(self.type),
            "cartan": [list(r) for r in self.cartan],
            "roots": [list(r) for r in self.roots],
        }
        return json.dumps(doc, indent=1)


def _add(a: Root, b: Root, k: int = 1) -> Root:
    return tuple(x + k * y for x, y in zip(a, b))


def _order_key(r: Root):
    return (sum(r), tuple(-c for c in r))


def build_root_system(t) -> RootSystem:
    """Enumerate all roots from the Cartan matrix, layer by layer in height."""
    t = parse_type(t)
    a = cartan_matrix(t)
    l = t.rank
    simple = [tuple(1 if i == j else 0 for j in range(l)) for i in range(l)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for b in layer:
            for i in range(l):
                # <b, alpha_i^vee> from the Cartan matrix columns.
                pair = sum(b[j] * a[j][i] for j in range(l))
                p = 0
                e = simple[i]
                while _add(b, e, -(p + 1)) in found:
                    p += 1
                if p - pair > 0:
                    nxt.add(_add(b, e))
        nxt -= found
        found |= nxt
        layer = sorted(nxt)
    positive = tuple(sorted(found, key=_order_key))
    negative = [tuple(-c for c in r) for r in positive]
    roots = tuple(sorted(list(positive) + negative, key=_order_key))
    return RootSystem(t, a, _half_lengths(a), positive, roots)


def classify_cartan(cartan) -> SimpleType:
    """Name the type of a connected (indecomposable) Cartan matrix."""
    n = len(cartan)
    degree = [sum(1 for j in range(n) if j != i and cartan[i][j]) for i in range(n)]
    edges = sum(degree) // 2
    if n == 0 or edges != n - 1 or not _connected(cartan, range(n)):
        raise ValueError("Cartan matrix is not of finite connected type")
    multi = [(i, j) for i in range(n) for j in range(n) if i != j and cartan[i][j] < -1]
    if multi:
        (i, j), = multi
        m = -cartan[i][j]
        if m == 3:
            return SimpleType("G", 2)
        if n == 4 and max(degree) == 2 and degree[i] == 2 and degree[j] == 2:
            return SimpleType("F", 4)
        # a_ij = -2 means alpha_j is short: B if the short root is the last node.
        if n == 2:
            return SimpleType("B" if j == 1 else "C", 2)
        return SimpleType("B" if degree[j] == 1 else "C", n)
    branch = [i for i in range(n) if degree[i] == 3]
    if not branch:
        return SimpleType("A", n)
    (c,) = branch
    arms = []
    for nb in (j for j in range(n) if j != c and cartan[c][j]):
        length, prev, cur = 1, c, nb
        while True:
            nxt = [k for k in range(n) if k not in (prev, cur) and cartan[cur][k]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return SimpleType("D", n)
    if arms[0] == 1 and arms[1] == 2:
        return SimpleType("E", n)
    raise ValueError("not a finite type diagram")


def _connected(cartan, nodes: Iterable[int]) -> bool:
    nodes = list(nodes)
    if not nodes:
        return False
    seen = {nodes[0]}
    stack = [nodes[0]]
    allowed = set(nodes)
    while stack:
        i = stack.pop()
        for j in allowed:
            if j not in seen and cartan[i][j]:
                seen.add(j)
                stack.append(j)
    return seen == allowed


@dataclass(frozen=True)
class SubSystem:
    delta_prime: tuple
    roots: tuple
    irreducible: bool
    type: Optional[SimpleType]


def sub_system(rs: RootSystem, delta_prime) -> SubSystem:
    """Roots supported on ``delta_prime`` (0-based simple-root indices)."""
    dp = tuple(sorted(set(delta_prime)))
    if not dp:
        raise ValueError("delta_prime must be nonempty")
    if any(i < 0 or i >= rs.rank for i in dp):
        raise ValueError("simple root index out of range")
    outside = [i for i in range(rs.rank) if i not in dp]
    roots = tuple(r for r in rs.roots if all(r[i] == 0 for i in outside))
    irreducible = _connected(rs.cartan, dp)
    sub_type = None
    if irreducible:
        sub_type = classify_cartan([[rs.cartan[i][j] for j in dp] for i in dp])
    return SubSystem(dp, roots, irreducible, sub_type)


def root_sum(a: Root, b: Root, rs: RootSystem) -> Optional[Root]:
    if a not in rs or b not in rs:
        raise ValueError("arguments must be roots")
    s = _add(a, b)
    return s if s in rs.root_set else None


def precedes(a: Root, b: Root, rs: RootSystem) -> bool:
    """``a < b`` in the partial order: ``b - a`` is a positive root."""
    d = _add(b, a, -1)
    return d in rs.root_set and rs.is_positive(d)


def _isomorphism_class(t: SimpleType) -> SimpleType:
    # B2 and C2 are one diagram read in two orders.
    return SimpleType("B", 2) if (t.family, t.rank) == ("C", 2) else t


def embeddings(rs: RootSystem, sub) -> list:
    """All connected sets of simple roots whose diagram has the given type."""
    from itertools import combinations

    sub = _isomorphism_class(parse_type(sub))
    out = []
    for nodes in combinations(range(rs.rank), sub.rank):
        if not _connected(rs.cartan, nodes):
            continue
        found = classify_cartan([[rs.cartan[i][j] for j in nodes] for i in nodes])
        if _isomorphism_class(found) == sub:
            out.append(nodes)
    return out
