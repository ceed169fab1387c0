"""Positive roots of a twisted affine root system.

Real roots are found by closing the simple roots under simple reflections
inside a slab of bounded δ-degree.  The δ-degree of a lattice vector is its
0-th coordinate, which is legitimate because the null root has ``r_0 = 1``.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Sequence

from .cartan import Family, TwistedType
from .errors import DomainError, InternalInconsistency, OutOfRange, ResourceLimit

Vector = tuple[int, ...]

BFS_MARGIN = 2
MAX_ROOTS = 500_000


@dataclass(frozen=True, order=True)
class RealRoot:
    v: Vector
    d_alpha: int

    @property
    def ddeg(self) -> int:
        return self.v[0]

    @property
    def weight(self) -> Vector:
        return self.v

    def __str__(self):
        return render_vector(self.v)


@dataclass(frozen=True, order=True)
class ImaginaryRoot:
    """The slot ``(rδ, i)``, one copy of rδ in the multiset of positive roots."""

    r: int
    slot: int

    def weight_in(self, t: TwistedType) -> Vector:
        return scale(self.r, t.marks)

    def __str__(self):
        return f"({self.r}d,{self.slot})"


RootEntry = RealRoot | ImaginaryRoot


def scale(c: int, v: Sequence[int]) -> Vector:
    return tuple(c * x for x in v)


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def simple_root(t: TwistedType, i: int) -> Vector:
    return tuple(int(j == i) for j in t.index_set)


def render_vector(v: Sequence[int]) -> str:
    """``(1, 2, 0)`` -> ``"a0+2a1"``."""
    parts = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(("-" if c < 0 else "+") + f"{mag}a{i}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def form(t: TwistedType, u: Sequence[int], w: Sequence[int]) -> int:
    """The invariant form (u, w) = sum u_i d_i a_ij w_j."""
    b = t.symmetrized
    return sum(u[i] * b[i][j] * w[j] for i in range(len(u)) for j in range(len(w)) if u[i] and w[j])


def reflect(t: TwistedType, i: int, v: Sequence[int]) -> Vector:
    a = t.cartan
    pairing = sum(a[i][j] * v[j] for j in range(len(v)))
    out = list(v)
    out[i] -= pairing
    return tuple(out)


def ddeg(v: Sequence[int]) -> int:
    return v[0]


def imaginary_slots(t: TwistedType, r: int) -> tuple[int, ...]:
    """The index set I^r of multiplicity slots at rδ."""
    if r < 1:
        raise DomainError(f"imaginary degree must be positive, got {r}")
    if t.family is Family.A2n_2:
        return t.finite_index_set
    return tuple(i for i in t.finite_index_set if r % t.d[i] == 0)


def imaginary_multiplicity(t: TwistedType, r: int) -> int:
    return len(imaginary_slots(t, r))


class RootClass(enum.Enum):
    REAL_POSITIVE = "real"
    IMAGINARY_POSITIVE = "imaginary"
    NOT_POSITIVE_ROOT = "none"


@dataclass(frozen=True)
class RootCatalog:
    type: TwistedType
    cutoff: int
    reals: tuple[RealRoot, ...]

    @cached_property
    def real_set(self) -> frozenset[Vector]:
        return frozenset(a.v for a in self.reals)

    def imaginary_multiplicity(self, r: int) -> int:
        return imaginary_multiplicity(self.type, r)

    def imaginary_slots(self, r: int) -> tuple[int, ...]:
        return imaginary_slots(self.type, r)

    def covers(self, v: Sequence[int]) -> bool:
        return ddeg(v) <= self.cutoff

    def require(self, v: Sequence[int]) -> None:
        if len(v) != len(self.type.index_set):
            raise DomainError(f"vector {tuple(v)} has wrong length for {self.type}")
        if not self.covers(v):
            raise OutOfRange(f"δ-degree {ddeg(v)} exceeds catalog cutoff {self.cutoff}")

    def to_json(self) -> list[dict]:
        return [{"coords": list(a.v), "ddeg": a.ddeg, "d_alpha": a.d_alpha} for a in self.reals]


def real_roots_upto(t: TwistedType, cutoff: int, *, max_roots: int = MAX_ROOTS) -> RootCatalog:
    """All positive real roots of δ-degree at most ``cutoff``."""
    if cutoff < 0:
        raise DomainError(f"δ-degree cutoff must be >= 0, got {cutoff}")
    bound = cutoff + BFS_MARGIN
    norms = set(t.d)
    simple = [simple_root(t, i) for i in t.index_set]
    seen: dict[Vector, int] = {}
    queue = deque()
    for i, s in enumerate(simple):
        for v in (s, scale(-1, s)):
            seen[v] = t.d[i]
            queue.append(v)
    while queue:
        v = queue.popleft()
        for i in t.index_set:
            w = reflect(t, i, v)
            if abs(ddeg(w)) > bound or w in seen:
                continue
            half = form(t, w, w)
            if half % 2 or half // 2 not in norms:
                raise InternalInconsistency(f"reflection produced {w} with (w,w) = {half}")
            seen[w] = half // 2
            queue.append(w)
            if len(seen) > max_roots:
                raise ResourceLimit(
                    f"real root enumeration for {t} up to δ-degree {cutoff} exceeds {max_roots} vectors"
                )
    inner = {v: d for v, d in seen.items() if all(x >= 0 for x in v) and ddeg(v) <= cutoff}
    # closure sweep: reflections of inner roots stay roots
    for v in inner:
        for i in t.index_set:
            w = reflect(t, i, v)
            if abs(ddeg(w)) <= bound and w not in seen:
                raise InternalInconsistency(f"s_{i}({v}) = {w} missing from the closure")
    reals = tuple(sorted((RealRoot(v, d) for v, d in inner.items()), key=lambda a: (a.ddeg, a.v)))
    return RootCatalog(t, cutoff, reals)


def classify(t: TwistedType, v: Sequence[int], catalog: RootCatalog) -> tuple[RootClass, int | None]:
    """Classify a lattice vector; imaginary roots also report their degree r."""
    v = tuple(v)
    catalog.require(v)
    r = v[0]
    if r >= 1 and v == scale(r, t.marks):
        return RootClass.IMAGINARY_POSITIVE, r
    if v in catalog.real_set:
        return RootClass.REAL_POSITIVE, None
    return RootClass.NOT_POSITIVE_ROOT, None


def l_alpha(root: RealRoot | int, l: int) -> int:
    """Smallest power of the root vector E_α that is central at ε."""
    d = root.d_alpha if isinstance(root, RealRoot) else root
    return l // gcd(l, d)
