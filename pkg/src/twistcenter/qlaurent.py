"""Integer Laurent polynomials in q, q-integers and specialization at ε.

ε is a primitive l-th root of unity.  Since all polynomials here have
integer coefficients, the multiplicity of (q - ε) in f equals the
multiplicity of the l-th cyclotomic polynomial Φ_l in f, so everything is
computed exactly over the integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DomainError, UndefinedMultiplicity


class LaurentPoly:
    """Immutable element of Z[q, q^-1], stored as ``{exponent: coefficient}``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def support(self) -> list[int]:
        return sorted(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    @staticmethod
    def _lift(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, t: int) -> "LaurentPoly":
        """Multiply by q^t."""
        return LaurentPoly({e + t: c for e, c in self._c.items()})

    def substitute_power(self, r: int) -> "LaurentPoly":
        """q -> q^r."""
        return LaurentPoly({e * r: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """q -> q^-1."""
        return self.substitute_power(-1)

    def to_poly(self) -> tuple[int, list[int]]:
        """Split as q^v * p(q) with p an ordinary polynomial, p(0) != 0."""
        v = self.valuation()
        coeffs = [0] * (self.degree() - v + 1)
        for e, c in self._c.items():
            coeffs[e - v] = c
        return v, coeffs

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in Z[q, q^-1]; raises if ``other`` does not divide ``self``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        v1, p1 = self.to_poly()
        v2, p2 = other.to_poly()
        quo, rem = poly_divmod(p1, p2)
        if any(rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        return LaurentPoly(dict(enumerate(quo))).shift(v1 - v2)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)


def poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division of integer polynomials (coefficients low to high).

    The leading coefficient of ``den`` must divide every leading term met
    during the division, which always holds for monic ``den``.
    """
    num = list(num)
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
    lead = den[-1]
    if len(num) < len(den):
        return [0], num
    quo = [0] * (len(num) - len(den) + 1)
    for k in range(len(quo) - 1, -1, -1):
        top = num[k + len(den) - 1]
        if top == 0:
            continue
        if top % lead:
            raise ArithmeticError("non-integral quotient")
        c = top // lead
        quo[k] = c
        for j, dc in enumerate(den):
            num[k + j] -= c * dc
    return quo, num[: len(den) - 1] or [0]


def qint(m: int, r: int = 1) -> LaurentPoly:
    """[m]_{q^r} = sum_{s=0}^{m-1} q^{r(m-1-2s)}."""
    if m < 0:
        raise DomainError(f"q-integer needs m >= 0, got {m}")
    if r < 1:
        raise DomainError(f"q-integer needs r >= 1, got {r}")
    return LaurentPoly({r * (m - 1 - 2 * s): 1 for s in range(m)})


def qfactorial(m: int, r: int = 1) -> LaurentPoly:
    out = ONE
    for s in range(1, m + 1):
        out = out * qint(s, r)
    return out


def qbinom(m: int, mp: int, r: int = 1) -> LaurentPoly:
    if not 0 <= mp <= m:
        raise DomainError(f"q-binomial needs 0 <= m' <= m, got m={m}, m'={mp}")
    return qfactorial(m, r).exact_div(qfactorial(mp, r) * qfactorial(m - mp, r))


@lru_cache(maxsize=None)
def cyclotomic(l: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the l-th cyclotomic polynomial."""
    if l < 1:
        raise DomainError(f"cyclotomic index must be positive, got {l}")
    num = [-1] + [0] * (l - 1) + [1]
    for d in range(1, l):
        if l % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic(d)))
            assert not any(rem)
    return tuple(num)


def _check_order(l: int) -> None:
    if not isinstance(l, int) or l < 2:
        raise DomainError(f"root-of-unity order must be an integer > 1, got {l!r}")


def mult_eps(f: LaurentPoly, l: int) -> int:
    """Multiplicity of ε (primitive l-th root of 1) as a root of ``f``.

    Monomial factors q^t are units and ignored.
    """
    _check_order(l)
    if f.is_zero():
        raise UndefinedMultiplicity("the zero polynomial has no ε-multiplicity")
    phi = list(cyclotomic(l))
    _, p = f.to_poly()
    t = 0
    while len(p) >= len(phi):
        quo, rem = poly_divmod(p, phi)
        if any(rem):
            break
        p, t = quo, t + 1
    return t


def qint_mult_rule(m: int, r: int, l: int) -> int:
    """Closed form for mult_eps([m]_{q^r}, l): 1 iff l | mr and l does not divide r."""
    return int(m != 0 and (m * r) % l == 0 and r % l != 0)


@dataclass(frozen=True)
class CycloElement:
    """A Laurent polynomial reduced modulo Φ_l, i.e. its value at ε."""

    l: int
    residue: LaurentPoly

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def _same(self, other: "CycloElement") -> None:
        if self.l != other.l:
            raise ValueError(f"cannot combine values at different orders {self.l} and {other.l}")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._same(other)
        return eval_at_eps(self.residue + other.residue, self.l)

    def __neg__(self):
        return CycloElement(self.l, -self.residue)

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        return self + (-other)

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        self._same(other)
        return eval_at_eps(self.residue * other.residue, self.l)

    def __str__(self):
        return str(self.residue)


def eval_at_eps(f: LaurentPoly, l: int) -> CycloElement:
    _check_order(l)
    if f.is_zero():
        return CycloElement(l, ZERO)
    # q^l = 1 modulo Φ_l, so exponents can first be taken mod l
    folded: dict[int, int] = {}
    for e, c in f.coeffs.items():
        folded[e % l] = folded.get(e % l, 0) + c
    coeffs = [folded.get(e, 0) for e in range(l)]
    _, rem = poly_divmod(coeffs, list(cyclotomic(l)))
    return CycloElement(l, LaurentPoly(dict(enumerate(rem))))


def product(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ONE
    for f in factors:
        out = out * f
    return out
