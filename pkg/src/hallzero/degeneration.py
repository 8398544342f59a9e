"""The degeneration order on partitions of a fixed weight.

M(lam) degenerates to M(nu) exactly when every prefix sum of the
conjugate of lam is bounded by the corresponding prefix sum of the
conjugate of nu.  For each weight n the poset of all partitions of n is
materialized with its zeta matrix (incidence matrix) and the exact
integer inverse (Moebius matrix), which together drive the constant-term
algorithm in :mod:`hallzero.algebra`.
"""

from __future__ import annotations

import json
import os
import tempfile
from functools import lru_cache

import numpy as np

from .errors import CapExceededError
from .partitions import Partition, parse_partition

DEFAULT_WEIGHT_CAP = 30
CACHE_FORMAT = "degposet/1"


def _conjugate_prefix(p: Partition, length: int) -> tuple[int, ...]:
    """Prefix sums of the conjugate partition, padded to `length` entries."""
    conj = p.conjugate().parts
    sums = []
    total = 0
    for i in range(length):
        if i < len(conj):
            total += conj[i]
        sums.append(total)
    return tuple(sums)


def leq_deg(lam: Partition, nu: Partition) -> bool:
    """Degeneration test: do conjugate prefix sums compare pointwise?"""
    if lam.weight != nu.weight:
        raise ValueError(
            f"weight mismatch: |{lam}| = {lam.weight} but |{nu}| = {nu.weight}"
        )
    length = max(lam.parts[0] if lam else 0, nu.parts[0] if nu else 0)
    a = _conjugate_prefix(lam, length)
    b = _conjugate_prefix(nu, length)
    return all(x <= y for x, y in zip(a, b))


def partitions_of(n: int, cap: int = DEFAULT_WEIGHT_CAP) -> list[Partition]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("weight must be non-negative")
    if n > cap:
        raise CapExceededError(f"weight {n} exceeds the partition cap {cap}")
    out: list[Partition] = []

    def emit(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for v in range(min(remaining, largest), 0, -1):
            prefix.append(v)
            emit(remaining - v, v, prefix)
            prefix.pop()

    emit(n, n, [])
    return out


class DegPoset:
    """All partitions of one weight, ordered by degeneration.

    Elements are listed in descending lexicographic order, which is
    verified at construction to be a linear extension of the order, so
    the zeta matrix is upper unitriangular and its integer inverse is
    obtained by back substitution.
    """

    def __init__(
        self,
        n: int,
        elements: tuple[Partition, ...],
        zeta: tuple[tuple[int, ...], ...],
        moebius: tuple[tuple[int, ...], ...],
    ):
        self.n = n
        self.elements = elements
        self.zeta = zeta
        self.moebius = moebius
        self._index = {p: i for i, p in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"DegPoset(n={self.n}, size={len(self.elements)})"

    def index(self, p: Partition) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise ValueError(f"{p} is not a partition of {self.n}") from None

    def leq(self, lam: Partition, nu: Partition) -> bool:
        return bool(self.zeta[self.index(lam)][self.index(nu)])

    def up_set(self, lam: Partition) -> list[Partition]:
        """Everything lam degenerates to, in element order (lam included)."""
        row = self.zeta[self.index(lam)]
        return [self.elements[j] for j, bit in enumerate(row) if bit]

    def hasse_edges(self) -> list[tuple[Partition, Partition]]:
        """Covering pairs (lam, nu) with lam strictly below nu."""
        m = len(self.elements)
        edges = []
        for i in range(m):
            ups = [j for j in range(i + 1, m) if self.zeta[i][j]]
            for j in ups:
                if not any(self.zeta[k][j] for k in ups if k < j):
                    edges.append((self.elements[i], self.elements[j]))
        return edges

    def dot(self) -> str:
        """Graphviz source; the unique minimal element renders at the top."""
        lines = ["digraph degeneration {", "  rankdir=TB;"]
        for p in self.elements:
            lines.append(f'  "{p}";')
        for a, b in self.hasse_edges():
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _zeta_matrix(elements: list[Partition], n: int) -> tuple[tuple[int, ...], ...]:
    m = len(elements)
    length = max(1, n)
    pref = np.array(
        [_conjugate_prefix(p, length) for p in elements], dtype=np.int64
    )
    rows: list[tuple[int, ...]] = []
    chunk = max(1, (1 << 22) // (m * length))
    for start in range(0, m, chunk):
        block = (pref[start : start + chunk, None, :] <= pref[None, :, :]).all(axis=2)
        rows.extend(tuple(int(v) for v in row) for row in block)
    zeta = tuple(rows)
    for i in range(m):
        if zeta[i][i] != 1:
            raise RuntimeError("degeneration order is not reflexive (internal bug)")
        for j in range(i):
            if zeta[i][j]:
                raise RuntimeError(
                    "descending lexicographic order is not a linear extension "
                    f"of the degeneration order at weight {n}"
                )
    return zeta


def _invert_unitriangular(
    zeta: tuple[tuple[int, ...], ...]
) -> tuple[tuple[int, ...], ...]:
    """Exact integer inverse of an upper unitriangular 0/1 matrix."""
    m = len(zeta)
    supports = [
        tuple(j for j in range(i + 1, m) if zeta[i][j]) for i in range(m)
    ]
    sparse: list[dict[int, int]] = [{} for _ in range(m)]
    for i in range(m - 1, -1, -1):
        row = {i: 1}
        for k in supports[i]:
            for j, v in sparse[k].items():
                row[j] = row.get(j, 0) - v
        sparse[i] = {j: v for j, v in row.items() if v}
    return tuple(
        tuple(sparse[i].get(j, 0) for j in range(m)) for i in range(m)
    )


def build_poset(
    n: int, cap: int = DEFAULT_WEIGHT_CAP, cache_dir: str | None = None
) -> DegPoset:
    """Build (or load from the disk cache) the degeneration poset of weight n."""
    if cache_dir is not None:
        try:
            return load_poset(n, cache_dir)
        except (OSError, ValueError, KeyError):
            pass
    elements = partitions_of(n, cap)
    zeta = _zeta_matrix(elements, n)
    poset = DegPoset(n, tuple(elements), zeta, _invert_unitriangular(zeta))
    if cache_dir is not None:
        save_poset(poset, cache_dir)
    return poset


@lru_cache(maxsize=None)
def poset_of(n: int) -> DegPoset:
    """In-process memoized poset, shared by the algebra routines."""
    return build_poset(n)


def up_set(lam: Partition) -> list[Partition]:
    """Everything lam degenerates to, over the memoized poset of |lam|."""
    return poset_of(lam.weight).up_set(lam)


def _cache_path(cache_dir: str, n: int) -> str:
    return os.path.join(cache_dir, f"degposet-{n}.json")


def _row_bits(row: tuple[int, ...]) -> int:
    bits = 0
    for j, v in enumerate(row):
        if v:
            bits |= 1 << j
    return bits


def save_poset(poset: DegPoset, cache_dir: str) -> str:
    """Write the poset cache file atomically (temp file, then rename)."""
    payload = {
        "format": CACHE_FORMAT,
        "n": poset.n,
        "elements": [str(p) for p in poset.elements],
        "zeta_rows": [format(_row_bits(row), "x") for row in poset.zeta],
    }
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, poset.n)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(payload, handle)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_poset(n: int, cache_dir: str) -> DegPoset:
    """Load a cached poset; the Moebius matrix is always recomputed."""
    with open(_cache_path(cache_dir, n)) as handle:
        payload = json.load(handle)
    if payload.get("format") != CACHE_FORMAT:
        raise ValueError("unrecognized cache format")
    if payload.get("n") != n:
        raise ValueError("cache file is for a different weight")
    elements = tuple(parse_partition(text) for text in payload["elements"])
    if list(elements) != partitions_of(n):
        raise ValueError("cached element list does not match the enumeration")
    m = len(elements)
    zeta_rows = []
    for i, text in enumerate(payload["zeta_rows"]):
        bits = int(text, 16)
        if bits >> m:
            raise ValueError("zeta row has bits outside the matrix")
        row = tuple((bits >> j) & 1 for j in range(m))
        zeta_rows.append(row)
    if len(zeta_rows) != m:
        raise ValueError("zeta row count does not match the element list")
    zeta = tuple(zeta_rows)
    for i in range(m):
        if zeta[i][i] != 1 or any(zeta[i][j] for j in range(i)):
            raise ValueError("cached zeta matrix is not upper unitriangular")
    return DegPoset(n, elements, zeta, _invert_unitriangular(zeta))
