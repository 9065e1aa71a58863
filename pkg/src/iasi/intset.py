"""Exact arithmetic on finite sets of non-negative integers.

Vertex and edge labels are finite subsets of the non-negative integers.
This module provides the set type, sumsets A+B = {a+b : a in A, b in B},
the cardinality bounds max(|A|,|B|) <= |A+B| <= |A||B|, arithmetic
progression structure, and Sidon sequences (all pairwise sums distinct,
doubled elements included) used to keep induced edge labels injective.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError

# Elements stay within an unsigned 64-bit range; constructing a set with a
# larger element (e.g. from a sumset) raises, so overflow is a checked error.
MAX_ELEMENT = 2**64 - 1


@dataclass(frozen=True)
class IntSet:
    """Non-empty finite set of non-negative integers, stored sorted ascending.

    Immutable and hashable, so labelings can deduplicate labels by value.
    The empty set is rejected: an empty vertex label would induce an empty
    edge label, which is outside the label alphabet.
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise ValueError("IntSet must be non-empty")
        if elems[0] < 0:
            raise ValueError(f"IntSet elements must be non-negative, got {elems[0]}")
        if elems[-1] > MAX_ELEMENT:
            raise ValueError(f"IntSet element {elems[-1]} exceeds the 64-bit range")
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, value: int) -> bool:
        return value in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"

    def __add__(self, other: "IntSet") -> "IntSet":
        return sumset(self, other)


@dataclass(frozen=True)
class ApDescriptor:
    """The arithmetic progression {start, start+difference, ..., start+(length-1)*difference}.

    Singletons are progressions of any difference; their canonical
    descriptor fixes difference = 1.
    """

    start: int
    difference: int
    length: int

    def __post_init__(self):
        if self.start < 0:
            raise ValueError("AP start must be non-negative")
        if self.difference < 1:
            raise ValueError("AP difference must be positive")
        if self.length < 1:
            raise ValueError("AP length must be positive")

    def as_intset(self) -> IntSet:
        d = self.difference
        return IntSet(self.start + i * d for i in range(self.length))


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """Return {x + y : x in a, y in b}."""
    return IntSet({x + y for x in a.elements for y in b.elements})


def cardinality_bounds(a: IntSet, b: IntSet) -> tuple[int, int]:
    """Bounds (max(|a|,|b|), |a|*|b|) that always bracket |sumset(a, b)|."""
    return max(len(a), len(b)), len(a) * len(b)


def as_arithmetic_progression(a: IntSet) -> ApDescriptor | None:
    """Return the AP descriptor of ``a`` if its gaps are constant, else None."""
    elems = a.elements
    if len(elems) == 1:
        return ApDescriptor(start=elems[0], difference=1, length=1)
    d = elems[1] - elems[0]
    for prev, cur in zip(elems, elems[1:]):
        if cur - prev != d:
            return None
    return ApDescriptor(start=elems[0], difference=d, length=len(elems))


def sidon_sequence(count: int, minimum: int = 0) -> tuple[int, ...]:
    """Greedily build ``count`` integers >= ``minimum`` with all pairwise sums distinct.

    Distinctness covers doubled elements: for index pairs {p,q} != {r,t}
    (p = q allowed), s[p]+s[q] != s[r]+s[t].  Greedy choice of the smallest
    admissible next integer keeps the output deterministic and small enough
    for desk-scale graphs.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if minimum < 0:
        raise ValueError("minimum must be non-negative")
    seq: list[int] = []
    sums: set[int] = set()
    candidate = minimum
    while len(seq) < count:
        new_sums = [candidate + x for x in seq]
        new_sums.append(candidate + candidate)
        if all(s not in sums for s in new_sums):
            seq.append(candidate)
            sums.update(new_sums)
        candidate += 1
    return tuple(seq)


_INTSET_RE = re.compile(r"^\{(\d+(?:,\d+)*)\}$")


def parse_intset(text: str) -> IntSet:
    """Parse the textual form ``{a,b,c}`` (ascending, no spaces)."""
    m = _INTSET_RE.match(text)
    if not m:
        raise ParseError(f"malformed set literal {text!r}, expected {{a,b,c}}")
    values = [int(tok) for tok in m.group(1).split(",")]
    if any(y <= x for x, y in zip(values, values[1:])):
        raise ParseError(f"set literal {text!r} must list elements in strictly ascending order")
    return IntSet(values)
