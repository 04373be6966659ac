"""Bitmask model of the hypercube Q_n: subsets of [n], GF(2) algebra, walks.

A vertex of Q_n is a subset of [n] = {1, ..., n}, stored as an int bitmask
with element i on bit i-1.  Two vertices are adjacent when they differ in a
single element; that element is the direction of the edge.  Everything here
is a pure function over immutable values and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Masks live in a machine word; materialized graphs stay far below this.
MAX_DIMENSION = 32
# Eager span materialization refuses more than 2^28 combinations.
SPAN_GUARD = 28


class DimensionMismatch(ValueError):
    """Operands live in hypercubes of different dimension."""


def mask_of(elements: Iterable[int]) -> int:
    """Encode 1-based elements as a bitmask."""
    mask = 0
    for i in elements:
        mask |= 1 << (i - 1)
    return mask


def elements_of(bits: int) -> tuple[int, ...]:
    """Decode a bitmask into its sorted 1-based elements."""
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def edge_direction(u: int, v: int) -> int:
    """Direction of the hypercube edge {u, v}; raises if u, v are not adjacent."""
    diff = u ^ v
    if diff == 0 or diff & (diff - 1):
        raise ValueError(f"masks {u:#x} and {v:#x} do not span a hypercube edge")
    return diff.bit_length()


@dataclass(frozen=True)
class VertexSet:
    """A subset of [n], i.e. a vertex of Q_n."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_DIMENSION:
            raise ValueError(f"dimension must be in [1, {MAX_DIMENSION}], got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"mask {self.bits:#x} has bits above dimension {self.n}")

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "VertexSet":
        return cls(mask_of(elements), n)

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        if not isinstance(other, VertexSet):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"n={self.n} vs n={other.n}")
        return VertexSet(self.bits ^ other.bits, self.n)

    def antipode(self) -> "VertexSet":
        return VertexSet(self.bits ^ ((1 << self.n) - 1), self.n)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool((self.bits >> (element - 1)) & 1)

    def __repr__(self) -> str:
        inner = "{" + ",".join(map(str, self.elements())) + "}"
        return f"VertexSet({inner}, n={self.n})"


def symm_diff(x: VertexSet, y: VertexSet) -> VertexSet:
    """Symmetric difference x (+) y, the GF(2) sum of the two vertices."""
    return x ^ y


def antipode(x: VertexSet) -> VertexSet:
    """Complement of x with respect to the ground set [n]."""
    return x.antipode()


@dataclass(frozen=True)
class FlipSequence:
    """Directions of successive edges along a path or cycle in Q_n."""

    entries: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if not 1 <= e <= self.n:
                raise ValueError(f"flip {e} outside [1, {self.n}]")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def reversed(self) -> "FlipSequence":
        return FlipSequence(self.entries[::-1], self.n)


@dataclass(frozen=True)
class CubePath:
    """A walk in Q_n given by its start vertex and flip sequence."""

    start: VertexSet
    flips: FlipSequence

    def __post_init__(self) -> None:
        if self.start.n != self.flips.n:
            raise DimensionMismatch(
                f"start has n={self.start.n}, flips have n={self.flips.n}"
            )

    def vertices(self) -> list[VertexSet]:
        return walk(self.start, self.flips)

    @property
    def end(self) -> VertexSet:
        bits = self.start.bits
        for f in self.flips:
            bits ^= 1 << (f - 1)
        return VertexSet(bits, self.start.n)


@dataclass(frozen=True)
class CubeCycle(CubePath):
    """A closed walk in Q_n; every direction must be flipped an even number of times."""

    def __post_init__(self) -> None:
        super().__post_init__()
        acc = 0
        for f in self.flips:
            acc ^= 1 << (f - 1)
        if acc:
            raise ValueError("flip sequence does not close up into a cycle")

    def vertices(self) -> list[VertexSet]:
        # Without the repeated start vertex at the end.
        return walk(self.start, self.flips)[:-1]


def walk(start: VertexSet, flips: FlipSequence) -> list[VertexSet]:
    """Vertex sequence v_0 = start, v_j = v_{j-1} (+) {flip_j}."""
    if start.n != flips.n:
        raise DimensionMismatch(f"start has n={start.n}, flips have n={flips.n}")
    out = [start]
    bits = start.bits
    for f in flips:
        bits ^= 1 << (f - 1)
        out.append(VertexSet(bits, start.n))
    return out


def is_isometric(p: CubePath) -> bool:
    """Whether the path or cycle is distance-preserving in Q_n.

    A path qualifies iff no direction repeats.  A cycle qualifies iff every
    direction occurs 0 or 2 times with the two occurrences lying oppositely
    on the cycle.
    """
    entries = p.flips.entries
    if isinstance(p, CubeCycle):
        length = len(entries)
        positions: dict[int, list[int]] = {}
        for idx, f in enumerate(entries):
            positions.setdefault(f, []).append(idx)
        for idxs in positions.values():
            if len(idxs) != 2 or idxs[1] - idxs[0] != length // 2:
                return False
        return True
    return len(set(entries)) == len(entries)


def span(basis: Sequence[VertexSet], n: int | None = None) -> set[VertexSet]:
    """All GF(2) combinations of the basis, materialized eagerly.

    An empty basis spans {empty set}; pass n explicitly in that case.
    """
    if n is None:
        if not basis:
            raise ValueError("empty basis needs an explicit dimension n")
        n = basis[0].n
    for b in basis:
        if b.n != n:
            raise DimensionMismatch(f"basis element has n={b.n}, expected {n}")
    if len(basis) > SPAN_GUARD:
        raise ValueError(
            f"span of {len(basis)} generators exceeds the 2^{SPAN_GUARD} guard"
        )
    return {VertexSet(m, n) for m in span_bits([b.bits for b in basis])}


def span_bits(masks: Sequence[int]) -> list[int]:
    """Sorted list of all XOR combinations of the given masks."""
    out = {0}
    for m in masks:
        out |= {s ^ m for s in out}
    return sorted(out)


def _insert_pivot(pivots: dict[int, int], mask: int) -> bool:
    """Reduce mask against the pivot table; insert the remainder if nonzero."""
    cur = mask
    while cur:
        lead = cur.bit_length() - 1
        if lead in pivots:
            cur ^= pivots[lead]
        else:
            pivots[lead] = cur
            return True
    return False


def rank_gf2(vectors: Sequence[VertexSet]) -> int:
    """GF(2) rank of the vertices viewed as characteristic vectors."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        if _insert_pivot(pivots, v.bits):
            rank += 1
    return rank


def in_span(vec: VertexSet, basis: Sequence[VertexSet]) -> bool:
    """GF(2) membership test via elimination, without materializing the span."""
    pivots: dict[int, int] = {}
    for b in basis:
        _insert_pivot(pivots, b.bits)
    cur = vec.bits
    while cur:
        lead = cur.bit_length() - 1
        if lead not in pivots:
            return False
        cur ^= pivots[lead]
    return True
