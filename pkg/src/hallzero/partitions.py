"""Integer partitions as canonical weakly decreasing tuples.

A partition doubles as the isomorphism class of a finite dimensional
nilpotent module: the parts are the Jordan block sizes.  Two commutative
monoid structures live on partitions, componentwise addition and multiset
union, and conjugation exchanges them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby, zip_longest
from typing import Iterable, Iterator

MAX_PART = 2**31 - 1

_DIGITS = "0123456789"


class PartitionParseError(ValueError):
    """Raised for text that does not match the partition grammar."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers.

    Trailing zeros are stripped at construction, so structural equality
    coincides with equality of partitions.  The empty tuple is the zero
    partition.  Input that is not weakly decreasing is rejected rather
    than sorted; use :meth:`from_multiset` to sort an arbitrary multiset
    of parts explicitly.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for i, value in enumerate(parts):
            if value < 0:
                raise ValueError(f"negative part {value} at index {i}")
            if value > MAX_PART:
                raise ValueError(f"part {value} exceeds the 32-bit part bound")
            if i and parts[i - 1] < value:
                raise ValueError(
                    f"parts not weakly decreasing: {parts[i - 1]} < {value} at index {i}"
                )
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_multiset(cls, values: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(tuple(sorted(values, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: entry i counts parts >= i+1."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(
                sum(1 for v in self.parts if v >= i)
                for i in range(1, self.parts[0] + 1)
            )
        )

    def __add__(self, other: "Partition") -> "Partition":
        """Componentwise sum, the shorter operand padded with zeros."""
        if not isinstance(other, Partition):
            return NotImplemented
        return Partition(
            tuple(a + b for a, b in zip_longest(self.parts, other.parts, fillvalue=0))
        )

    def union(self, other: "Partition") -> "Partition":
        """Merge of the two multisets of parts, sorted descending."""
        return Partition.from_multiset(self.parts + other.parts)

    def exponent_form(self) -> str:
        """Canonical text form, e.g. (3^2,2^3,1^4); the zero partition is ()."""
        if not self.parts:
            return "()"
        terms = []
        for value, run in groupby(self.parts):
            count = len(list(run))
            terms.append(f"{value}^{count}" if count > 1 else f"{value}")
        return "(" + ",".join(terms) + ")"

    def __str__(self) -> str:
        return self.exponent_form()

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)


ZERO = Partition()


def _scan_number(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos] in _DIGITS:
        pos += 1
    if pos == start:
        raise PartitionParseError("expected a digit", text, pos)
    return int(text[start:pos]), pos


def _parse_exponent_form(text: str) -> Partition:
    if len(text) >= 2 and text[1] == ")":
        if len(text) != 2:
            raise PartitionParseError("trailing characters", text, 2)
        return ZERO
    values: list[int] = []
    prev: int | None = None
    pos = 1
    while True:
        term_start = pos
        value, pos = _scan_number(text, pos)
        count = 1
        if pos < len(text) and text[pos] == "^":
            count, pos = _scan_number(text, pos + 1)
        if count:
            if prev is not None and value > prev:
                raise PartitionParseError(
                    f"parts not weakly decreasing ({value} after {prev})",
                    text,
                    term_start,
                )
            prev = value
            values.extend([value] * count)
        if pos >= len(text):
            raise PartitionParseError("missing closing parenthesis", text, pos)
        if text[pos] == ")":
            if pos + 1 != len(text):
                raise PartitionParseError("trailing characters", text, pos + 1)
            return Partition(tuple(values))
        if text[pos] != ",":
            raise PartitionParseError(
                f"unexpected character {text[pos]!r}", text, pos
            )
        pos += 1


def _parse_comma_form(text: str) -> Partition:
    values: list[int] = []
    prev: int | None = None
    pos = 0
    while True:
        term_start = pos
        value, pos = _scan_number(text, pos)
        if prev is not None and value > prev:
            raise PartitionParseError(
                f"parts not weakly decreasing ({value} after {prev})",
                text,
                term_start,
            )
        prev = value
        values.append(value)
        if pos == len(text):
            return Partition(tuple(values))
        if text[pos] != ",":
            raise PartitionParseError(
                f"unexpected character {text[pos]!r}", text, pos
            )
        pos += 1


def parse_partition(text: str) -> Partition:
    """Parse comma form ("3,1,1") or exponent form ("(3,1^2)").

    "0" and "()" both denote the zero partition.  Whitespace is not part
    of the grammar and is rejected.
    """
    if not text:
        raise PartitionParseError("empty input", text, 0)
    if text[0] == "(":
        return _parse_exponent_form(text)
    return _parse_comma_form(text)
