"""Exact recovery of Hall polynomials from prime-field counts.

The polynomial is fitted by Lagrange interpolation in exact rational
arithmetic through oracle counts at the smallest primes, then validated
at one held-out prime and checked for integer coefficients.  Floating
point is never used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InfeasibleError, InterpolationError
from .oracle import SUPPORTED_PRIMES, PrimeField, hall_number
from .partitions import Partition


def n_stat(p: Partition) -> int:
    """The statistic sum of (row index) * part, rows counted from zero.

    Bounds the degree of the Hall polynomial: the budget for the triple
    (quotient, sub, outer) is n_stat(outer) - n_stat(quotient) - n_stat(sub).
    """
    return sum(i * v for i, v in enumerate(p.parts))


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; coefficients constant term first."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __str__(self) -> str:
        """Canonical ascending form with every coefficient shown,
        e.g. "-1 + 0*t + 1*t^2"; the zero polynomial is "0"."""
        if not self.coeffs:
            return "0"
        chunks: list[str] = []
        for d, c in enumerate(self.coeffs):
            mag = str(abs(c)) if d == 0 else (
                f"{abs(c)}*t" if d == 1 else f"{abs(c)}*t^{d}"
            )
            if not chunks:
                chunks.append(mag if c >= 0 else f"-{mag}")
            else:
                chunks.append(f"+ {mag}" if c >= 0 else f"- {mag}")
        return " ".join(chunks)


def usable_primes(weight: int) -> list[int]:
    """Sample primes whose enumeration cap admits the given weight."""
    return [p for p in SUPPORTED_PRIMES if weight <= PrimeField(p).weight_cap]


def _mul_linear(poly: list[Fraction], constant: int) -> list[Fraction]:
    out = [Fraction(0)] * (len(poly) + 1)
    for d, c in enumerate(poly):
        out[d] += c * constant
        out[d + 1] += c
    return out


def _lagrange_integer(xs: list[int], ys: list[int]) -> list[int]:
    acc = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = [Fraction(1)]
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = _mul_linear(num, -xj)
            den *= xi - xj
        weight = Fraction(yi, den)
        for d, c in enumerate(num):
            acc[d] += c * weight
    out = []
    for c in acc:
        if c.denominator != 1:
            raise InterpolationError(f"non-integer coefficient {c}")
        out.append(int(c))
    return out


def interpolate_hall_poly(
    quotient: Partition, sub: Partition, outer: Partition
) -> IntPoly:
    """Exact Hall polynomial for the triple, or raise.

    Fits through oracle counts at the first budget+1 usable primes and
    validates at one more; raises InfeasibleError when fewer primes are
    available than needed, InterpolationError on any inconsistency.
    """
    if quotient.weight + sub.weight != outer.weight:
        raise ValueError(
            f"weight mismatch: |{quotient}| + |{sub}| != |{outer}|"
        )
    primes = usable_primes(outer.weight)
    if not primes:
        raise InfeasibleError(
            f"no sample prime admits weight {outer.weight}: infeasible at desk scale"
        )
    budget = n_stat(outer) - n_stat(quotient) - n_stat(sub)
    if budget < 0:
        # The count must vanish identically; confirm at the smallest prime.
        if hall_number(outer, quotient, sub, primes[0]) != 0:
            raise InterpolationError(
                "negative degree budget with a nonzero count at "
                f"p={primes[0]} for ({quotient}, {sub}, {outer})"
            )
        return IntPoly()
    if len(primes) < budget + 2:
        raise InfeasibleError(
            f"need {budget + 2} sample primes for ({quotient}, {sub}, {outer}), "
            f"only {len(primes)} available: infeasible at desk scale"
        )
    xs = primes[: budget + 1]
    ys = [hall_number(outer, quotient, sub, p) for p in xs]
    poly = IntPoly(tuple(_lagrange_integer(xs, ys)))
    check = primes[budget + 1]
    expected = hall_number(outer, quotient, sub, check)
    got = poly(check)
    if got != expected:
        raise InterpolationError(
            f"validation failed at p={check}: polynomial gives {got}, "
            f"enumeration gives {expected}"
        )
    return poly


def constant_term_via_interpolation(
    quotient: Partition, sub: Partition, outer: Partition
) -> int:
    """Constant coefficient of the interpolated Hall polynomial."""
    return interpolate_hall_poly(quotient, sub, outer).constant
