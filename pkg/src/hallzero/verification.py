"""Cross-check suite wiring the algebra against the enumeration oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import constant_term, f_map, h0_multiply
from .degeneration import leq_deg, partitions_of
from .errors import InfeasibleError
from .interpolate import interpolate_hall_poly, n_stat, usable_primes
from .monoid import check_extension_bound
from .oracle import hall_number
from .partitions import Partition


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_fmap_multiplicative(max_weight: int) -> CheckResult:
    """f_map turns generic extension (partition addition) into the product."""
    name = "fmap_multiplicative"
    pairs = 0
    for wa in range(max_weight + 1):
        for wb in range(max_weight + 1 - wa):
            for a in partitions_of(wa):
                for b in partitions_of(wb):
                    pairs += 1
                    if h0_multiply(f_map(a), f_map(b)) != f_map(a + b):
                        return CheckResult(name, False, f"fails at {a} * {b}")
    return CheckResult(name, True, f"{pairs} products checked")


def check_ones_constant_terms(max_weight: int) -> CheckResult:
    """For all-ones factors the constant term is 1 exactly on the support
    of the count at p=2, and 0 elsewhere."""
    name = "ones_constant_terms"
    triples = 0
    for n in range(max_weight + 1):
        for m in range(max_weight + 1 - n):
            a = Partition((1,) * n)
            b = Partition((1,) * m)
            for g in partitions_of(n + m):
                triples += 1
                value = constant_term(a, b, g)
                positive = hall_number(g, a, b, 2) > 0
                if value not in (0, 1) or (value == 1) != positive:
                    return CheckResult(
                        name, False, f"fails at ({a}, {b}, {g}): {value}"
                    )
    return CheckResult(name, True, f"{triples} triples checked")


def check_extension_extremality(max_weight: int) -> CheckResult:
    """Every extension counted at p=2 sits between the generic extension
    and the direct sum, and satisfies the prefix-sum bound; the generic
    extension itself is always counted."""
    name = "extension_extremality"
    checked = 0
    for wq in range(max_weight + 1):
        for ws in range(max_weight + 1 - wq):
            for quo in partitions_of(wq):
                for sub in partitions_of(ws):
                    minimal = quo + sub
                    maximal = quo.union(sub)
                    if hall_number(minimal, quo, sub, 2) <= 0:
                        return CheckResult(
                            name, False, f"generic extension of ({quo}, {sub}) not counted"
                        )
                    for mid in partitions_of(wq + ws):
                        if hall_number(mid, quo, sub, 2) <= 0:
                            continue
                        checked += 1
                        if not (
                            leq_deg(minimal, mid)
                            and leq_deg(mid, maximal)
                            and check_extension_bound(mid, quo, sub)
                        ):
                            return CheckResult(
                                name, False, f"fails at ({mid}; {quo}, {sub})"
                            )
    return CheckResult(name, True, f"{checked} extensions checked")


def check_interpolation_agreement(max_weight: int) -> CheckResult:
    """Wherever interpolation is feasible the polynomial matches the
    enumeration at every sampled prime and its constant term matches the
    matrix algorithm."""
    name = "interpolation_agreement"
    feasible = skipped = 0
    for w in range(max_weight + 1):
        for outer in partitions_of(w):
            for wq in range(w + 1):
                for quo in partitions_of(wq):
                    for sub in partitions_of(w - wq):
                        try:
                            poly = interpolate_hall_poly(quo, sub, outer)
                        except InfeasibleError:
                            skipped += 1
                            continue
                        feasible += 1
                        if poly.constant != constant_term(quo, sub, outer):
                            return CheckResult(
                                name,
                                False,
                                f"constant mismatch at ({quo}, {sub}, {outer})",
                            )
                        budget = max(
                            0, n_stat(outer) - n_stat(quo) - n_stat(sub)
                        )
                        for p in usable_primes(w)[: budget + 2]:
                            if poly(p) != hall_number(outer, quo, sub, p):
                                return CheckResult(
                                    name,
                                    False,
                                    f"value mismatch at p={p} for "
                                    f"({quo}, {sub}, {outer})",
                                )
    return CheckResult(
        name, True, f"{feasible} feasible triples checked, {skipped} infeasible"
    )


def run_all(max_weight: int = 5) -> list[CheckResult]:
    return [
        check_fmap_multiplicative(max_weight),
        check_ones_constant_terms(max_weight),
        check_extension_extremality(max_weight),
        check_interpolation_agreement(max_weight),
    ]
