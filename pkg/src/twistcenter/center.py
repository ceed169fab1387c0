"""Generators of the center of the quantum algebra specialized at ε.

Covers the ε-multiplicity of det H^r, the two counts that bound the
dimension of central weight spaces (the highest-coefficient count and the
count over the generating set J = J' ∪ J''), the extra imaginary central
elements E*, and the catalog of generators with the single relation P_Z
among the Cartan-part generators.

Two readings of the source are fixed here:

* The coefficients of E* are attached to E_(rδ,i); the source writes
  ``E_(mδ,i)`` for the A_{2n}^(2) case and omits the root vector entirely
  for A_{2n-1}^(2) / E_6^(2).
* The ε-multiplicity of det H^r is taken from the product formula
  ``[r]_q^{#I^r} * F``.  The printed case table says ``#I_0`` whenever
  l | r, which differs from ``#I^r`` when k does not divide r.  Both are
  computed and every disagreement is reported through :class:`Discrepancy`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

from .cartan import Family, TwistedType
from .errors import DomainError, InternalInconsistency, NotAStarDegree
from .pbw import PartitionTable, count_table
from .qlaurent import ONE, LaurentPoly, eval_at_eps, mult_eps, qint
from .roots import (
    RealRoot,
    RootCatalog,
    imaginary_slots,
    l_alpha,
    leq,
    real_roots_upto,
    render_vector,
    scale,
    sub,
)


def check_order(t: TwistedType, l: int) -> None:
    """l must be an odd integer bigger than k."""
    if not isinstance(l, int) or isinstance(l, bool) or l % 2 == 0 or l <= t.k:
        raise DomainError(f"l must be an odd integer > k = {t.k} for {t}, got {l!r}")


def admissible_orders(t: TwistedType, upto: int) -> list[int]:
    return [l for l in range(t.k + 1, upto + 1) if l % 2]


# --------------------------------------------------------------------------
# det H^r


@dataclass(frozen=True)
class Discrepancy:
    context: dict
    expected: object
    got: object

    def to_json(self) -> dict:
        return {"context": self.context, "expected": self.expected, "got": self.got}


@dataclass(frozen=True)
class DetHr:
    r: int
    l: int
    product: LaurentPoly
    table_mult: int
    formula_mult: int

    @property
    def discrepancy(self) -> bool:
        return self.table_mult != self.formula_mult


def _case_factor(t: TwistedType, r: int) -> LaurentPoly:
    if t.family is Family.A2n_2:
        return qint(2 * t.n + 1, r) if r % 2 else ONE
    if r % t.k:
        return qint((t.ntilde - t.n) // (t.k - 1) + 1, r)
    return ONE


def _middle_case(t: TwistedType, r: int, l: int) -> bool:
    """l ∤ r, 2 ∤ r and l | c·r, with c = 2n+1 or ñ-n+1 depending on the family."""
    if r % l == 0 or r % 2 == 0:
        return False
    if t.family is Family.A2n_2:
        return (2 * t.n + 1) * r % l == 0
    if t.family in (Family.A2nm1_2, Family.E6_2):
        return (t.ntilde - t.n + 1) * r % l == 0
    return False


def table_mult(t: TwistedType, r: int, l: int) -> int:
    """The printed case split for mult_ε(det H^r)."""
    if r % l == 0:
        return len(t.finite_index_set)
    return int(_middle_case(t, r, l))


def det_hr(t: TwistedType, r: int, l: int) -> DetHr:
    check_order(t, l)
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    product = qint(r, 1) ** len(imaginary_slots(t, r)) * _case_factor(t, r)
    return DetHr(r, l, product, table_mult(t, r, l), mult_eps(product, l))


def det_hr_discrepancies_at(t: TwistedType, r: int, l: int) -> list[Discrepancy]:
    h = det_hr(t, r, l)
    if not h.discrepancy:
        return []
    return [Discrepancy({"source": "det_hr", "type": t.name, "r": r, "l": l}, h.table_mult, h.formula_mult)]


def det_hr_discrepancies(t: TwistedType, l: int, r_max: int) -> list[Discrepancy]:
    return [d for r in range(1, r_max + 1) for d in det_hr_discrepancies_at(t, r, l)]


# --------------------------------------------------------------------------
# J = J' ∪ J''


def i_star(t: TwistedType) -> int | None:
    if t.family in (Family.A2n_2, Family.A2nm1_2):
        return t.n
    if t.family is Family.E6_2:
        return 2
    return None


def in_jsecond(t: TwistedType, r: int, l: int) -> bool:
    return _middle_case(t, r, l)


@dataclass(frozen=True)
class ImaginaryDescriptor:
    """``(l·r·δ, i)`` in J'; ``exists`` tells whether the slot is in Φ̃_+."""

    degree: int
    slot: int
    exists: bool


@dataclass(frozen=True)
class JSet:
    type: TwistedType
    l: int
    r_max: int
    jprime_imaginary: tuple[ImaginaryDescriptor, ...]
    jsecond: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "type": self.type.name,
            "l": self.l,
            "rmax": self.r_max,
            "jprime": {
                "real": "all positive real roots",
                "imaginary": [
                    {"degree": d.degree, "slot": d.slot, "exists": d.exists} for d in self.jprime_imaginary
                ],
            },
            "jsecond": [{"r": r, "i_star": i} for r, i in self.jsecond],
        }


def jsets(t: TwistedType, l: int, r_max: int) -> JSet:
    """J' imaginary descriptors with l·r <= l·r_max and J'' for r <= r_max."""
    check_order(t, l)
    if r_max < 1:
        raise DomainError(f"rmax must be >= 1, got {r_max}")
    jprime = []
    for r in range(1, r_max + 1):
        present = set(imaginary_slots(t, l * r))
        jprime.extend(ImaginaryDescriptor(l * r, i, i in present) for i in t.finite_index_set)
    jsecond = tuple((r, i_star(t)) for r in range(1, r_max + 1) if in_jsecond(t, r, l))
    return JSet(t, l, r_max, tuple(jprime), jsecond)


# --------------------------------------------------------------------------
# the two multiplicity counts


def _table_for(catalog: RootCatalog, eta: Sequence[int], table: PartitionTable | None) -> PartitionTable:
    if table is not None and leq(eta, table.bound) and table.catalog.type == catalog.type:
        return table
    return PartitionTable(catalog, eta)


def _multiples(eta: tuple[int, ...], w: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """η - m·w for m = 1, 2, ... while it stays in Q_+."""
    rest = sub(eta, w)
    while all(c >= 0 for c in rest):
        yield rest
        rest = sub(rest, w)


def _imag_sum(par: PartitionTable, eta: tuple[int, ...], w: Sequence[int]) -> int:
    return sum(par(x) for x in _multiples(eta, w))


def highest_coeff_mult(
    t: TwistedType, eta: Sequence[int], l: int, catalog: RootCatalog, *, table: PartitionTable | None = None
) -> int:
    """ε-multiplicity of the highest coefficient of det H_η.

    Each factor is measured directly with :func:`mult_eps`: the real part
    through ``[m]_{q^{d_α}}`` and the imaginary part through det H^r.
    """
    check_order(t, l)
    eta = tuple(eta)
    catalog.require(eta)
    par = _table_for(catalog, eta, table)
    total = 0
    for a in catalog.reals:
        for m, rest in enumerate(_multiples(eta, a.v), start=1):
            c = par(rest)
            if c:
                total += c * mult_eps(qint(m, a.d_alpha), l)
    r = 1
    while leq(scale(r, t.marks), eta):
        fm = det_hr(t, r, l).formula_mult
        if fm:
            total += fm * _imag_sum(par, eta, scale(r, t.marks))
        r += 1
    return total


def ziz_bound(
    t: TwistedType,
    eta: Sequence[int],
    l: int,
    catalog: RootCatalog,
    *,
    table: PartitionTable | None = None,
    printed_slots: bool = True,
) -> int:
    """Σ_{α∈J, m>0} par(η - m·f(α)·p(α)) for J = J' ∪ J''.

    With ``printed_slots`` the J' imaginary part runs over all of I_0 at
    every degree l·r; otherwise only over the slots I^{l·r} that exist.
    """
    check_order(t, l)
    eta = tuple(eta)
    catalog.require(eta)
    par = _table_for(catalog, eta, table)
    total = 0
    for a in catalog.reals:
        total += _imag_sum(par, eta, scale(l_alpha(a, l), a.v))
    r = 1
    while leq(scale(l * r, t.marks), eta):
        slots = len(t.finite_index_set) if printed_slots else len(imaginary_slots(t, l * r))
        total += slots * _imag_sum(par, eta, scale(l * r, t.marks))
        r += 1
    r = 1
    while leq(scale(r, t.marks), eta):
        if in_jsecond(t, r, l):
            total += _imag_sum(par, eta, scale(r, t.marks))
        r += 1
    return total


def discrepancy_excess(
    t: TwistedType, eta: Sequence[int], l: int, catalog: RootCatalog, *, table: PartitionTable | None = None
) -> int:
    """Contribution of flagged det H^r degrees: Σ (table - formula)·Σ_m par(η - m·rδ).

    ``ziz_bound - highest_coeff_mult`` must equal this number exactly.
    """
    check_order(t, l)
    eta = tuple(eta)
    catalog.require(eta)
    par = _table_for(catalog, eta, table)
    total = 0
    r = 1
    while leq(scale(r, t.marks), eta):
        h = det_hr(t, r, l)
        if h.discrepancy:
            total += (h.table_mult - h.formula_mult) * _imag_sum(par, eta, scale(r, t.marks))
        r += 1
    return total


def real_part_sides(
    t: TwistedType, eta: Sequence[int], a: RealRoot, l: int, par: PartitionTable
) -> tuple[int, int]:
    """Both sides of Σ_m par(η-mα)·mult_ε([m]_{q^{d_α}}) = Σ_m par(η-m·l_α·α)."""
    eta = tuple(eta)
    lhs = sum(
        par(rest) * mult_eps(qint(m, a.d_alpha), l)
        for m, rest in enumerate(_multiples(eta, a.v), start=1)
    )
    rhs = _imag_sum(par, eta, scale(l_alpha(a, l), a.v))
    return lhs, rhs


# --------------------------------------------------------------------------
# E* elements


@dataclass(frozen=True)
class StarElement:
    type: TwistedType
    r: int
    l: int
    coeffs: dict[int, LaurentPoly] = field(hash=False)
    i_star: int

    def to_json(self) -> dict:
        return {
            "type": self.type.name,
            "r": self.r,
            "l": self.l,
            "i_star": self.i_star,
            "coeffs": {str(i): str(c) for i, c in sorted(self.coeffs.items())},
            "i_star_value_at_eps": str(eval_at_eps(self.coeffs[self.i_star], self.l)),
        }


def star_coeffs(t: TwistedType, r: int, l: int) -> StarElement:
    """Coefficients A_i of E*_(rδ,i*) = Σ_i A_i E_(rδ,i)."""
    check_order(t, l)
    if r < 1 or not in_jsecond(t, r, l):
        raise NotAStarDegree(f"r = {r} is not in J'' for {t} at l = {l}")
    sign = -1 if r % 2 else 1
    if t.family is Family.A2n_2:
        n = t.n
        coeffs = {1: qint(n, 2 * r)}
        for i in t.finite_index_set[1:]:
            coeffs[i] = -sign * qint(2, 1) * qint(n - i + 1, r)
    else:
        nu = t.n if t.family is Family.A2nm1_2 else t.ntilde - t.n
        coeffs = {i: sign * qint(nu - i + 1, r) for i in imaginary_slots(t, r)}
    star = i_star(t)
    if star not in coeffs or eval_at_eps(coeffs[star], l).is_zero():
        raise InternalInconsistency(f"E* coefficient at i* = {star} vanishes at ε for {t}, r={r}, l={l}")
    return StarElement(t, r, l, coeffs, star)


# --------------------------------------------------------------------------
# generator catalog


@dataclass(frozen=True)
class CentralGenerator:
    tag: str
    weight: tuple[int, ...]
    params: dict = field(hash=False)

    def to_json(self) -> dict:
        return {"tag": self.tag, "weight": list(self.weight), "params": self.params}


@dataclass(frozen=True)
class PZRelation:
    type: TwistedType
    l: int
    exponents: tuple[int, ...]
    l_i: tuple[int, ...]

    @property
    def statement(self) -> str:
        rhs = " * ".join(f"(K{i}^{li})^{e}" for i, (li, e) in enumerate(zip(self.l_i, self.exponents)))
        return f"K_delta^{self.l} - {rhs}"

    def weight_identity(self) -> bool:
        lhs = scale(self.l, self.type.marks)
        rhs = tuple(e * li for e, li in zip(self.exponents, self.l_i))
        return lhs == rhs

    def to_json(self) -> dict:
        return {
            "type": self.type.name,
            "l": self.l,
            "exponents": list(self.exponents),
            "l_i": list(self.l_i),
            "statement": self.statement,
        }


def pz_relation(t: TwistedType, l: int) -> PZRelation:
    check_order(t, l)
    l_i = tuple(l_alpha(d, l) for d in t.d)
    exps = []
    for i, li in enumerate(l_i):
        if (l * t.marks[i]) % li:
            raise InternalInconsistency(f"l·r_{i}/l_{i} is not an integer for {t}, l={l}")
        exps.append(l * t.marks[i] // li)
    return PZRelation(t, l, tuple(exps), l_i)


@dataclass(frozen=True)
class CenterCatalog:
    type: TwistedType
    l: int
    cutoff: int
    generators: tuple[CentralGenerator, ...]
    pz: PZRelation
    log: tuple[Discrepancy, ...]

    def to_json(self) -> dict:
        return {
            "type": self.type.name,
            "l": self.l,
            "ddeg": self.cutoff,
            "generators": [g.to_json() for g in self.generators],
            "pz": self.pz.to_json(),
            "log": [d.to_json() for d in self.log],
        }


def center_generators(t: TwistedType, l: int, cutoff: int, catalog: RootCatalog | None = None) -> CenterCatalog:
    """Generators of Z(U_ε) whose weights have δ-degree at most ``cutoff``."""
    check_order(t, l)
    if cutoff < 0:
        raise DomainError(f"δ-degree cutoff must be >= 0, got {cutoff}")
    if catalog is None or catalog.cutoff < cutoff:
        catalog = real_roots_upto(t, cutoff)
    positive: list[CentralGenerator] = []
    log: list[Discrepancy] = []
    for a in catalog.reals:
        la = l_alpha(a, l)
        if la * a.ddeg <= cutoff:
            positive.append(
                CentralGenerator("RealPower", scale(la, a.v), {"root": list(a.v), "name": render_vector(a.v), "power": la})
            )
    r = 1
    while l * r <= cutoff:
        present = set(imaginary_slots(t, l * r))
        for i in t.finite_index_set:
            if i in present:
                positive.append(CentralGenerator("ImaginarySlot", scale(l * r, t.marks), {"degree": l * r, "slot": i}))
            else:
                log.append(
                    Discrepancy(
                        {"source": "imaginary_slot", "type": t.name, "l": l, "r": r, "i": i},
                        "slot present in the positive roots",
                        f"d_{i} = {t.d[i]} does not divide {l * r}",
                    )
                )
        r += 1
    for r in range(1, cutoff + 1):
        if in_jsecond(t, r, l):
            star = star_coeffs(t, r, l)
            positive.append(
                CentralGenerator(
                    "Star",
                    scale(r, t.marks),
                    {"r": r, "i_star": star.i_star, "coeffs": {str(i): str(c) for i, c in sorted(star.coeffs.items())}},
                )
            )
    negative = [CentralGenerator("Neg" + g.tag, scale(-1, g.weight), g.params) for g in positive]
    zero = (0,) * len(t.index_set)
    pz = pz_relation(t, l)
    kpart = [CentralGenerator("KPower", zero, {"i": i, "power": li}) for i, li in enumerate(pz.l_i)]
    kpart.append(CentralGenerator("KDelta", zero, {}))
    log.extend(det_hr_discrepancies(t, l, cutoff))
    return CenterCatalog(t, l, cutoff, tuple(positive + negative + kpart), pz, tuple(log))


def generator_weights(t: TwistedType, l: int, catalog: RootCatalog, bound: Sequence[int]) -> list[tuple[int, ...]]:
    """Weights of the positive-part generators that fit under ``bound``."""
    bound = tuple(bound)
    weights = []
    for a in catalog.reals:
        w = scale(l_alpha(a, l), a.v)
        if leq(w, bound):
            weights.append(w)
    r = 1
    while leq(scale(l * r, t.marks), bound):
        weights.extend(scale(l * r, t.marks) for _ in imaginary_slots(t, l * r))
        r += 1
    r = 1
    while leq(scale(r, t.marks), bound):
        if in_jsecond(t, r, l):
            weights.append(scale(r, t.marks))
        r += 1
    return weights


def graded_center_dim(t: TwistedType, l: int, eta: Sequence[int], catalog: RootCatalog) -> int:
    """Number of monomials of weight η in the positive central generators."""
    check_order(t, l)
    eta = tuple(eta)
    if any(c < 0 for c in eta):
        raise DomainError(f"weight {eta} has a negative coordinate")
    catalog.require(eta)
    return int(count_table(generator_weights(t, l, catalog, eta), eta)[eta])
