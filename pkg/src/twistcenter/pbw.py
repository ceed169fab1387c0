"""Counting PBW monomials: par(η) = #P(η).

P(η) is the set of multisets of positive roots counted with multiplicity
(each imaginary slot ``(rδ, i)`` is its own letter) whose weights add up to
η.  The count is an unbounded knapsack over the root lattice.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .cartan import TwistedType
from .errors import DomainError, ResourceLimit
from .roots import ImaginaryRoot, RealRoot, RootCatalog, RootEntry, leq, scale, sub

Letter = RootEntry

MAX_ENUMERATION = 200_000


def _letter_key(letter: Letter):
    if isinstance(letter, RealRoot):
        return (letter.ddeg, 0, letter.v)
    return (letter.r, 1, (letter.slot,))


def letter_weight(t: TwistedType, letter: Letter) -> tuple[int, ...]:
    if isinstance(letter, RealRoot):
        return letter.v
    return scale(letter.r, t.marks)


def pbw_alphabet(catalog: RootCatalog, bound: Sequence[int]) -> list[Letter]:
    """Positive roots with multiplicity whose weight fits under ``bound``."""
    t = catalog.type
    bound = tuple(bound)
    catalog.require(bound)
    letters: list[Letter] = [a for a in catalog.reals if leq(a.v, bound)]
    r = 1
    while leq(scale(r, t.marks), bound):
        letters.extend(ImaginaryRoot(r, i) for i in catalog.imaginary_slots(r))
        r += 1
    return sorted(letters, key=_letter_key)


def _check_weight(eta: Sequence[int], size: int) -> tuple[int, ...]:
    eta = tuple(int(x) for x in eta)
    if len(eta) != size:
        raise DomainError(f"weight {eta} must have {size} coordinates")
    if any(x < 0 for x in eta):
        raise DomainError(f"weight {eta} has a negative coordinate")
    return eta


def count_table(weights: Iterable[Sequence[int]], bound: Sequence[int]) -> np.ndarray:
    """Number of multisets of ``weights`` summing to each x <= bound.

    Weights are nonnegative and nonzero; equal weights count as distinct
    letters.  Entries are Python ints (object array), so nothing overflows.
    """
    bound = tuple(bound)
    shape = tuple(b + 1 for b in bound)
    dp = np.zeros(shape, dtype=object)
    dp[(0,) * len(shape)] = 1
    for w in weights:
        w = tuple(w)
        if not leq(w, bound):
            continue
        if any(x < 0 for x in w) or not any(w):
            raise DomainError(f"letter weight {w} is not a nonzero element of Q_+")
        axis = next(p for p, x in enumerate(w) if x)
        step = w[axis]
        tgt = [slice(x, b + 1) for x, b in zip(w, bound)]
        src = [slice(0, b + 1 - x) for x, b in zip(w, bound)]
        # increasing layers along ``axis``: earlier layers already include
        # this letter, which makes the letter reusable without limit
        for s in range(step, bound[axis] + 1):
            tgt[axis] = s
            src[axis] = s - step
            dp[tuple(tgt)] += dp[tuple(src)]
    return dp


class PartitionTable:
    """par(x) for every x under a fixed bound, computed once."""

    def __init__(self, catalog: RootCatalog, bound: Sequence[int]):
        t = catalog.type
        self.catalog = catalog
        self.bound = _check_weight(bound, len(t.index_set))
        self.alphabet = pbw_alphabet(catalog, self.bound)
        self._table = count_table((letter_weight(t, a) for a in self.alphabet), self.bound)

    def __call__(self, x: Sequence[int]) -> int:
        x = tuple(x)
        if any(c < 0 for c in x):
            return 0
        if not leq(x, self.bound):
            raise DomainError(f"{x} lies outside the table bound {self.bound}")
        return int(self._table[x])


def par(t: TwistedType, eta: Sequence[int], catalog: RootCatalog) -> int:
    eta = _check_weight(eta, len(t.index_set))
    return PartitionTable(catalog, eta)(eta)


def enumerate_partitions(
    t: TwistedType, eta: Sequence[int], catalog: RootCatalog, *, limit: int = MAX_ENUMERATION
) -> list[tuple[Letter, ...]]:
    """Every multiset in P(η), each as a sorted tuple of letters."""
    eta = _check_weight(eta, len(t.index_set))
    alphabet = pbw_alphabet(catalog, eta)
    weights = [letter_weight(t, a) for a in alphabet]
    out: list[tuple[Letter, ...]] = []
    chosen: list[Letter] = []

    def go(idx: int, rest: tuple[int, ...]):
        if not any(rest):
            out.append(tuple(chosen))
            if len(out) > limit:
                raise ResourceLimit(f"more than {limit} partitions of {eta}")
            return
        if idx == len(alphabet):
            return
        w = weights[idx]
        go(idx + 1, rest)
        pushed = 0
        while True:
            rest = sub(rest, w)
            if any(c < 0 for c in rest):
                break
            chosen.append(alphabet[idx])
            pushed += 1
            go(idx + 1, rest)
        del chosen[len(chosen) - pushed:]

    go(0, eta)
    return out
