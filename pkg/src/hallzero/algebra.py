"""The degenerate Hall algebra on partition-indexed basis symbols.

The algebra has one basis symbol u_p per partition p, and the structure
constant on u_target in u_left * u_right is the constant term of the
corresponding classical Hall polynomial.  Products are computed in
closed matrix form: expand each factor through the Moebius matrix of
its weight poset, add partitions pairwise, and push back through the
zeta matrix.  This is the unitriangular back-substitution equivalent of
eliminating step by step along the degeneration order.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .degeneration import poset_of
from .partitions import Partition


def canonical_key(p: Partition) -> tuple[int, tuple[int, ...]]:
    """Sort key: by weight, then descending lexicographic."""
    return (p.weight, tuple(-v for v in p.parts))


class H0Element:
    """Formal integer linear combination of basis symbols u_p."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: "Mapping[Partition, int] | Iterable[tuple[Partition, int]]" = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for part, coeff in items:
            acc[part] = acc.get(part, 0) + coeff
        self._terms = {p: c for p, c in acc.items() if c}

    @classmethod
    def basis(cls, p: Partition) -> "H0Element":
        return cls({p: 1})

    def coefficient(self, p: Partition) -> int:
        return self._terms.get(p, 0)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms sorted in the canonical partition order."""
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]))

    def support(self) -> set[Partition]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, H0Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "H0Element") -> "H0Element":
        if not isinstance(other, H0Element):
            return NotImplemented
        return H0Element(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "H0Element":
        return H0Element({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "H0Element") -> "H0Element":
        if not isinstance(other, H0Element):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar: int) -> "H0Element":
        if not isinstance(scalar, int):
            return NotImplemented
        return H0Element({p: scalar * c for p, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for p, c in self.items():
            mag = f"u{p}" if abs(c) == 1 else f"{abs(c)}*u{p}"
            if not chunks:
                chunks.append(mag if c > 0 else f"-{mag}")
            else:
                chunks.append(f"+ {mag}" if c > 0 else f"- {mag}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"H0Element({dict(self.items())!r})"

    def to_json_terms(self) -> list[dict]:
        return [{"partition": str(p), "coeff": c} for p, c in self.items()]


def f_map(alpha: Partition) -> H0Element:
    """Image of the module class M(alpha): the sum of u_b over everything
    alpha degenerates to, all coefficients 1."""
    return H0Element({b: 1 for b in poset_of(alpha.weight).up_set(alpha)})


def f_inverse(x: H0Element) -> H0Element:
    """Coordinates of x in the embedded module basis {f_map(b)}.

    Inverts f_map by Moebius inversion, one weight component at a time.
    """
    out: dict[Partition, int] = {}
    by_weight: dict[int, list[tuple[Partition, int]]] = {}
    for p, c in x.items():
        by_weight.setdefault(p.weight, []).append((p, c))
    for weight, terms in by_weight.items():
        poset = poset_of(weight)
        for p, c in terms:
            row = poset.moebius[poset.index(p)]
            for j, v in enumerate(row):
                if v:
                    b = poset.elements[j]
                    out[b] = out.get(b, 0) + c * v
    return H0Element(out)


def constant_term(left: Partition, right: Partition, target: Partition) -> int:
    """Constant term of the Hall polynomial for (left, right, target).

    This is the coefficient of u_target in u_left * u_right.  Weight
    mismatches return 0, matching the grading of the algebra.
    """
    if left.weight + right.weight != target.weight:
        return 0
    pl = poset_of(left.weight)
    pr = poset_of(right.weight)
    pt = poset_of(target.weight)
    target_idx = pt.index(target)
    mo_left = pl.moebius[pl.index(left)]
    mo_right = pr.moebius[pr.index(right)]
    total = 0
    for i, cl in enumerate(mo_left):
        if not cl:
            continue
        si = pl.elements[i]
        for j, cr in enumerate(mo_right):
            if not cr:
                continue
            if pt.zeta[pt.index(si + pr.elements[j])][target_idx]:
                total += cl * cr
    return total


def h0_multiply(x: H0Element, y: H0Element) -> H0Element:
    """Bilinear product of two algebra elements."""
    out: dict[Partition, int] = {}
    for a, ca in x.items():
        pa = poset_of(a.weight)
        mo_a = pa.moebius[pa.index(a)]
        for b, cb in y.items():
            pb = poset_of(b.weight)
            mo_b = pb.moebius[pb.index(b)]
            pt = poset_of(a.weight + b.weight)
            folded: dict[int, int] = {}
            for i, ma in enumerate(mo_a):
                if not ma:
                    continue
                si = pa.elements[i]
                for j, mb in enumerate(mo_b):
                    if not mb:
                        continue
                    idx = pt.index(si + pb.elements[j])
                    folded[idx] = folded.get(idx, 0) + ma * mb
            scale = ca * cb
            for idx, g in folded.items():
                row = pt.zeta[idx]
                for t, bit in enumerate(row):
                    if bit:
                        tgt = pt.elements[t]
                        out[tgt] = out.get(tgt, 0) + scale * g
    return H0Element(out)
