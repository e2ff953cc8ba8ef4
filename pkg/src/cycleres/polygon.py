"""Diagonals and dissections of a convex labeled n-gon.

Vertices are labeled 1..n around the polygon.  A diagonal is a chord
between two non-adjacent vertices; a dissection is a set of pairwise
non-crossing diagonals.  Everything here is pure combinatorics on
integer pairs: crossing is decided by cyclic interleaving, never by
coordinates.  All values are immutable and all functions are pure.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

Pair = tuple[int, int]


class Diagonal(NamedTuple):
    """A chord (a, b) of the n-gon, stored with a < b."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


class SupportClass(Enum):
    """How the endpoint count of a dissection compares to d + 1.

    A dissection with d diagonals touching s polygon vertices is proper
    when s = d + 1, superproper when s > d + 1 and subproper when
    s < d + 1.
    """

    PROPER = "proper"
    SUPERPROPER = "superproper"
    SUBPROPER = "subproper"


def is_diagonal(a: int, b: int, n: int) -> bool:
    """True iff (a, b) is a diagonal of the n-gon (not a boundary edge)."""
    return 1 <= a < b <= n and b - a >= 2 and (a, b) != (1, n)


def diagonal(a: int, b: int, n: int) -> Diagonal:
    """Checked constructor; raises ValueError unless {a, b} is a diagonal."""
    a, b = min(a, b), max(a, b)
    if not is_diagonal(a, b, n):
        raise ValueError(f"({a}, {b}) is not a diagonal of the {n}-gon")
    return Diagonal(a, b)


def crosses(d1: Pair, d2: Pair) -> bool:
    """True iff two diagonals intersect in the interior of the polygon.

    Decided purely by interleaving of the sorted endpoint pairs: the
    diagonals cross exactly when one endpoint of each lies strictly
    inside the arc cut off by the other.  Diagonals sharing an endpoint
    never cross.
    """
    a, b = d1
    c, d = d2
    return a < c < b < d or c < a < d < b


def all_diagonals(n: int) -> list[Diagonal]:
    """The n(n-3)/2 diagonals of the n-gon in lexicographic order."""
    if n < 4:
        raise ValueError(f"the polygon needs n >= 4 vertices, got {n}")
    return [
        Diagonal(a, b)
        for a in range(1, n + 1)
        for b in range(a + 2, n + 1)
        if (a, b) != (1, n)
    ]


def support(diagonals: Iterable[Pair]) -> frozenset[int]:
    """The set of polygon vertices used as endpoints by the diagonals."""
    verts: set[int] = set()
    for a, b in diagonals:
        verts.add(a)
        verts.add(b)
    return frozenset(verts)


def classify(diagonals: Iterable[Pair]) -> SupportClass:
    """Support classification of a nonempty dissection."""
    ds = tuple(diagonals)
    if not ds:
        raise ValueError("support classification is undefined for the empty dissection")
    s = len(support(ds))
    if s == len(ds) + 1:
        return SupportClass.PROPER
    if s > len(ds) + 1:
        return SupportClass.SUPERPROPER
    return SupportClass.SUBPROPER


def is_tree(diagonals: Iterable[Pair]) -> bool:
    """True iff the diagonals form a connected acyclic graph on their support."""
    ds = tuple(diagonals)
    if not ds:
        raise ValueError("is_tree is undefined for the empty dissection")
    verts = support(ds)
    if len(ds) != len(verts) - 1:
        return False
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b in ds:
        adj[a].append(b)
        adj[b].append(a)
    seen = {ds[0][0]}
    stack = [ds[0][0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


@dataclass(frozen=True)
class Dissection:
    """A duplicate-free set of pairwise non-crossing diagonals of the n-gon.

    Diagonals are normalized to lexicographic order at construction and
    validity (range, non-adjacency, pairwise non-crossing) is checked.
    """

    n: int
    diagonals: tuple[Diagonal, ...]

    def __post_init__(self) -> None:
        ds = tuple(sorted(diagonal(a, b, self.n) for a, b in self.diagonals))
        object.__setattr__(self, "diagonals", ds)
        if len(set(ds)) != len(ds):
            raise ValueError("duplicate diagonals in dissection")
        for i, d1 in enumerate(ds):
            for d2 in ds[i + 1 :]:
                if crosses(d1, d2):
                    raise ValueError(f"diagonals {d1} and {d2} cross")

    def __len__(self) -> int:
        return len(self.diagonals)

    def __iter__(self) -> Iterator[Diagonal]:
        return iter(self.diagonals)

    def __str__(self) -> str:
        return "{" + ",".join(str(d) for d in self.diagonals) + "}"

    @property
    def support(self) -> frozenset[int]:
        return support(self.diagonals)

    def classify(self) -> SupportClass:
        return classify(self.diagonals)

    def is_tree(self) -> bool:
        return is_tree(self.diagonals)

    def to_json(self) -> list[list[int]]:
        return [[d.a, d.b] for d in self.diagonals]

    @classmethod
    def from_json(cls, n: int, data: Iterable[Sequence[int]]) -> "Dissection":
        return cls(n, tuple(Diagonal(int(a), int(b)) for a, b in data))


def iter_noncrossing(
    diagonals: Sequence[Diagonal],
    *,
    size: int | None = None,
    max_size: int | None = None,
) -> Iterator[tuple[Diagonal, ...]]:
    """Yield non-crossing subsets of ``diagonals`` as lexicographic tuples.

    Backtracks over the given order with incremental crossing checks, so
    partial crossing sets are pruned immediately.  Without ``size`` every
    subset is yielded (the empty tuple first); with ``size`` only subsets
    of exactly that cardinality appear.
    """
    m = len(diagonals)
    depth = size if size is not None else max_size
    chosen: list[Diagonal] = []

    def walk(start: int) -> Iterator[tuple[Diagonal, ...]]:
        if size is None:
            yield tuple(chosen)
        elif len(chosen) == size:
            yield tuple(chosen)
            return
        if depth is not None and len(chosen) >= depth:
            return
        for i in range(start, m):
            if size is not None and len(chosen) + (m - i) < size:
                break
            d = diagonals[i]
            if all(not crosses(d, c) for c in chosen):
                chosen.append(d)
                yield from walk(i + 1)
                chosen.pop()

    return walk(0)


def iter_dissections(n: int, d: int) -> Iterator[tuple[Diagonal, ...]]:
    """All dissections of the n-gon with exactly d diagonals."""
    if not 0 <= d <= n - 3:
        raise ValueError(f"need 0 <= d <= n - 3, got d={d} for n={n}")
    return iter_noncrossing(all_diagonals(n), size=d)


def count_by_support(n: int, d: int) -> dict[int, int]:
    """Counts of d-diagonal dissections bucketed by support size."""
    counts: Counter[int] = Counter()
    for ds in iter_dissections(n, d):
        counts[len(support(ds))] += 1
    return dict(sorted(counts.items()))


def count_by_class(n: int, d: int) -> dict[SupportClass, int]:
    """Counts of d-diagonal dissections by support classification, d >= 1."""
    if d < 1:
        raise ValueError("classification needs d >= 1")
    out = {cls: 0 for cls in SupportClass}
    for s, c in count_by_support(n, d).items():
        if s == d + 1:
            out[SupportClass.PROPER] += c
        elif s > d + 1:
            out[SupportClass.SUPERPROPER] += c
        else:
            out[SupportClass.SUBPROPER] += c
    return out


def count_trees(n: int, d: int) -> int:
    """Number of d-diagonal dissections whose diagonals form a tree.

    The empty dissection has no vertices and is not counted as a tree.
    """
    if d == 0:
        if not 0 <= d <= n - 3:
            raise ValueError(f"need 0 <= d <= n - 3, got d={d} for n={n}")
        return 0
    return sum(1 for ds in iter_dissections(n, d) if is_tree(ds))
