"""Dynkin diagrams and Cartan data of the twisted affine types.

Five types are supported, written X_ñ^(k):

    A2n_2    A_{2n}^(2)     n >= 1
    A2nm1_2  A_{2n-1}^(2)   n >= 3
    Dnp1_2   D_{n+1}^(2)    n >= 2
    E6_2     E_6^(2)        n = 4
    D4_3     D_4^(3)        n = 2

Vertex 0 is always the affine vertex, so that the null root is normalized
by ``r_0 = 1``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from .errors import DomainError, InvalidAffineMatrix, NotSymmetrizable


class Family(enum.Enum):
    A2n_2 = "A2n_2"
    A2nm1_2 = "A2nm1_2"
    Dnp1_2 = "Dnp1_2"
    E6_2 = "E6_2"
    D4_3 = "D4_3"


MIN_RANK = {
    Family.A2n_2: 1,
    Family.A2nm1_2: 3,
    Family.Dnp1_2: 2,
    Family.E6_2: 4,
    Family.D4_3: 2,
}
FIXED_RANK = {Family.E6_2: 4, Family.D4_3: 2}


@dataclass(frozen=True)
class Edge:
    """An edge of multiplicity ``mult``; ``arrow`` is the vertex pointed at."""

    i: int
    j: int
    mult: int = 1
    arrow: int | None = None

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("loops are not allowed")
        if self.mult not in (1, 2, 3, 4):
            raise ValueError(f"edge multiplicity {self.mult} not in 1..4")
        if self.mult > 1 and self.arrow not in (self.i, self.j):
            raise ValueError("multiple edges need an arrow on one of their ends")
        if self.mult == 1 and self.arrow is not None:
            raise ValueError("simple edges carry no arrow")

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.i, self.j))


@dataclass(frozen=True)
class DynkinDiagram:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        vs = set(self.vertices)
        seen = set()
        for e in self.edges:
            if not e.ends <= vs:
                raise ValueError(f"edge {e} leaves the vertex set")
            if e.ends in seen:
                raise ValueError(f"duplicate edge between {e.i} and {e.j}")
            seen.add(e.ends)
        if not self._connected():
            raise ValueError("Dynkin diagram is not connected")

    def _connected(self) -> bool:
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            adj[e.i].add(e.j)
            adj[e.j].add(e.i)
        stack, seen = [self.vertices[0]], {self.vertices[0]}
        while stack:
            for w in adj[stack.pop()] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.vertices)

    def edge(self, i: int, j: int) -> Edge | None:
        for e in self.edges:
            if e.ends == {i, j}:
                return e
        return None


CartanMatrix = tuple[tuple[int, ...], ...]


def cartan_matrix(diagram: DynkinDiagram) -> CartanMatrix:
    """Read the Cartan matrix off a diagram.

    ``a_ij`` is minus the number of edges between i and j when an arrow
    points at i (or there is no edge at all), and -1 otherwise.
    """
    index = {v: p for p, v in enumerate(diagram.vertices)}
    size = len(index)
    a = [[0] * size for _ in range(size)]
    for p in range(size):
        a[p][p] = 2
    for e in diagram.edges:
        for src, dst in ((e.i, e.j), (e.j, e.i)):
            if e.mult == 1 or e.arrow == src:
                a[index[src]][index[dst]] = -e.mult
            else:
                a[index[src]][index[dst]] = -1
    return tuple(tuple(row) for row in a)


def diagram_from_matrix(a: CartanMatrix) -> DynkinDiagram:
    """Inverse of :func:`cartan_matrix` on matrices of the supported shapes."""
    size = len(a)
    edges = []
    for i in range(size):
        for j in range(i + 1, size):
            aij, aji = a[i][j], a[j][i]
            if aij == 0 and aji == 0:
                continue
            if (aij == 0) != (aji == 0):
                raise ValueError(f"a[{i}][{j}] and a[{j}][{i}] must vanish together")
            if aij == aji == -1:
                edges.append(Edge(i, j))
            elif aji == -1:
                edges.append(Edge(i, j, -aij, arrow=i))
            elif aij == -1:
                edges.append(Edge(i, j, -aji, arrow=j))
            else:
                raise ValueError(f"entries ({aij}, {aji}) do not come from a diagram")
    return DynkinDiagram(tuple(range(size)), tuple(edges))


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((p for p in range(rank, len(m)) if m[p][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for p in range(len(m)):
            if p != rank and m[p][col] != 0:
                f = m[p][col] / m[rank][col]
                m[p] = [x - f * y for x, y in zip(m[p], m[rank])]
        rank += 1
    return rank


def corank(a: CartanMatrix) -> int:
    return len(a) - _rank([[Fraction(x) for x in row] for row in a])


def symmetrizers(a: CartanMatrix) -> tuple[int, ...]:
    """Positive integers d with min 1 and ``d_i a_ij = d_j a_ji``.

    Ratios are propagated along a spanning tree of the diagram, then every
    nonzero entry is checked and the vector scaled to be integral.
    """
    size = len(a)
    d: list[Fraction | None] = [None] * size
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(size):
            if j != i and a[i][j] != 0 and d[j] is None:
                if a[j][i] == 0:
                    raise NotSymmetrizable(f"a[{i}][{j}] != 0 but a[{j}][{i}] == 0")
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise NotSymmetrizable("matrix is decomposable")
    for i in range(size):
        for j in range(size):
            if d[i] * a[i][j] != d[j] * a[j][i]:
                raise NotSymmetrizable(f"relation fails at ({i}, {j})")
    if any(x <= 0 for x in d):
        raise NotSymmetrizable("symmetrizer is not positive")
    den = lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    g = gcd(*ints)
    # min 1 is only reachable if the smallest entry divides the others
    ints = [x // g for x in ints]
    lo = min(ints)
    if any(x % lo for x in ints):
        raise NotSymmetrizable("no integral symmetrizer with minimum 1")
    return tuple(x // lo for x in ints)


def delta_marks(a: CartanMatrix) -> tuple[int, ...]:
    """The kernel vector of ``a`` normalized by ``r_0 = 1``."""
    size = len(a)
    if corank(a) != 1:
        raise InvalidAffineMatrix(f"corank is {corank(a)}, expected 1")
    # drop column 0 and solve a[:,1:] r' = -a[:,0]
    rows = [[Fraction(x) for x in row[1:]] + [Fraction(-row[0])] for row in a]
    m = rows
    ncols = size - 1
    piv_row = 0
    pivots = []
    for col in range(ncols):
        pivot = next((p for p in range(piv_row, size) if m[p][col] != 0), None)
        if pivot is None:
            continue
        m[piv_row], m[pivot] = m[pivot], m[piv_row]
        lead = m[piv_row][col]
        m[piv_row] = [x / lead for x in m[piv_row]]
        for p in range(size):
            if p != piv_row and m[p][col] != 0:
                f = m[p][col]
                m[p] = [x - f * y for x, y in zip(m[p], m[piv_row])]
        pivots.append(col)
        piv_row += 1
    if len(pivots) != ncols:
        raise InvalidAffineMatrix("kernel is not normalizable by r_0 = 1")
    r = [Fraction(1)] + [m[p][-1] for p in range(ncols)]
    for row in a:
        if sum(x * y for x, y in zip(row, r)) != 0:
            raise InvalidAffineMatrix("inconsistent kernel system")
    if any(x.denominator != 1 or x <= 0 for x in r):
        raise InvalidAffineMatrix(f"normalized kernel {r} is not a positive integer vector")
    return tuple(int(x) for x in r)


def _chain(lo: int, hi: int) -> list[Edge]:
    return [Edge(i, i + 1) for i in range(lo, hi)]


def _diagram(family: Family, n: int) -> DynkinDiagram:
    if family is Family.A2n_2:
        if n == 1:
            edges = [Edge(0, 1, 4, arrow=1)]
        else:
            edges = [Edge(1, 2, 2, arrow=1), *_chain(2, n), Edge(0, n, 2, arrow=n)]
    elif family is Family.A2nm1_2:
        edges = [Edge(1, 2, 2, arrow=2), *_chain(2, n), Edge(0, n - 1)]
    elif family is Family.Dnp1_2:
        edges = [Edge(1, 2, 2, arrow=1), *_chain(2, n), Edge(n, 0, 2, arrow=0)]
    elif family is Family.E6_2:
        edges = [Edge(0, 1), Edge(1, 2), Edge(2, 3, 2, arrow=2), Edge(3, 4)]
    else:
        edges = [Edge(0, 1), Edge(1, 2, 3, arrow=1)]
    return DynkinDiagram(tuple(range(n + 1)), tuple(edges))


@dataclass(frozen=True)
class TwistedType:
    family: Family
    n: int
    diagram: DynkinDiagram = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < MIN_RANK[self.family]:
            raise DomainError(
                f"rank-out-of-range: {self.family.value} needs n >= {MIN_RANK[self.family]}, got {self.n}"
            )
        fixed = FIXED_RANK.get(self.family)
        if fixed is not None and self.n != fixed:
            raise DomainError(f"rank-out-of-range: {self.family.value} has fixed n = {fixed}, got {self.n}")
        object.__setattr__(self, "diagram", _diagram(self.family, self.n))

    @property
    def k(self) -> int:
        return 3 if self.family is Family.D4_3 else 2

    @property
    def ntilde(self) -> int:
        return {
            Family.A2n_2: 2 * self.n,
            Family.A2nm1_2: 2 * self.n - 1,
            Family.Dnp1_2: self.n + 1,
            Family.E6_2: 6,
            Family.D4_3: 4,
        }[self.family]

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(self.n + 1))

    @property
    def finite_index_set(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @cached_property
    def cartan(self) -> CartanMatrix:
        return cartan_matrix(self.diagram)

    @cached_property
    def d(self) -> tuple[int, ...]:
        return symmetrizers(self.cartan)

    @cached_property
    def marks(self) -> tuple[int, ...]:
        return delta_marks(self.cartan)

    @cached_property
    def symmetrized(self) -> CartanMatrix:
        a, d = self.cartan, self.d
        return tuple(tuple(d[i] * a[i][j] for j in range(len(a))) for i in range(len(a)))

    @property
    def name(self) -> str:
        letter = "A" if self.family in (Family.A2n_2, Family.A2nm1_2) else self.family.value[0]
        return f"{letter}{self.ntilde}_{self.k}"

    def __str__(self) -> str:
        return self.name


def build_type(family: Family | str, n: int) -> TwistedType:
    if isinstance(family, str):
        try:
            family = Family(family)
        except ValueError:
            raise DomainError(f"unknown family {family!r}") from None
    return TwistedType(family, n)


_SPEC_RE = re.compile(r"^([ADE])(\d+)_(\d)$")


def parse_type(spec: str) -> TwistedType:
    """Parse a type specifier such as ``"A4_2"``, ``"D3_2"`` or ``"D4_3"``."""
    m = _SPEC_RE.match(spec.strip())
    if not m:
        raise DomainError(f"cannot parse type specifier {spec!r}; expected <X><n>_<k>")
    letter, nt, k = m.group(1), int(m.group(2)), int(m.group(3))
    if k == 3:
        if (letter, nt) != ("D", 4):
            raise DomainError(f"{spec}: the only k=3 twisted type is D4_3")
        return build_type(Family.D4_3, 2)
    if k != 2:
        raise DomainError(f"{spec}: twist order must be 2 or 3")
    if letter == "A":
        if nt % 2 == 0:
            return build_type(Family.A2n_2, nt // 2)
        return build_type(Family.A2nm1_2, (nt + 1) // 2)
    if letter == "D":
        return build_type(Family.Dnp1_2, nt - 1)
    if nt != 6:
        raise DomainError(f"{spec}: the only twisted E type is E6_2")
    return build_type(Family.E6_2, 4)
