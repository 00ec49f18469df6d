"""Complete multipartite graphs, edge deletion and equitable quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of K_{t_1,...,t_k}, stored in non-increasing order."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        ps = tuple(int(p) for p in parts)
        if len(ps) < 2:
            raise ValueError(f"need at least 2 parts, got {len(ps)}")
        if any(p < 1 for p in ps):
            raise ValueError(f"part sizes must be positive, got {ps}")
        object.__setattr__(self, "parts", tuple(sorted(ps, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> PartitionSpec:
        """Parse a comma-separated list such as ``"1,3,1"``."""
        try:
            sizes = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed part list {text!r}") from None
        return cls(sizes)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def offset(self, part: int) -> int:
        """First vertex of ``part`` in the contiguous layout."""
        return sum(self.parts[:part])

    def vertices(self, part: int) -> range:
        start = self.offset(part)
        return range(start, start + self.parts[part])

    def index_of_size(self, size: int, skip: int = 0) -> int:
        """Index of the ``skip``-th part (0-based) having the given size."""
        seen = 0
        for idx, p in enumerate(self.parts):
            if p == size:
                if seen == skip:
                    return idx
                seen += 1
        raise ValueError(f"{self} has fewer than {skip + 1} parts of size {size}")

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class EdgeLocus:
    """Pair of distinct part indices an edge runs between."""

    part_a: int
    part_b: int

    def __post_init__(self):
        if self.part_a == self.part_b:
            raise ValueError("no edges exist inside a part")

    @classmethod
    def between_sizes(cls, spec: PartitionSpec, size_a: int, size_b: int) -> EdgeLocus:
        """Canonical locus joining a part of ``size_a`` with a part of ``size_b``."""
        a = spec.index_of_size(size_a)
        b = spec.index_of_size(size_b, skip=1 if size_a == size_b else 0)
        return cls(a, b).canonical(spec)

    def validate(self, spec: PartitionSpec) -> None:
        for p in (self.part_a, self.part_b):
            if not 0 <= p < spec.k:
                raise ValueError(f"part index {p} out of range for {spec.k} parts")

    def sizes(self, spec: PartitionSpec) -> tuple[int, int]:
        return spec.parts[self.part_a], spec.parts[self.part_b]

    def canonical(self, spec: PartitionSpec) -> EdgeLocus:
        """Representative locus with the same part sizes.

        Equal-size parts are interchangeable under automorphisms, so the
        representative uses the lowest indices of each size and orders the
        pair by (size, index).
        """
        self.validate(spec)
        sa, sb = self.sizes(spec)
        a = spec.index_of_size(sa)
        b = spec.index_of_size(sb, skip=1 if sa == sb else 0)
        pa, pb = sorted([(sa, a), (sb, b)])
        return EdgeLocus(pa[1], pb[1])

    def __str__(self) -> str:
        return f"{self.part_a},{self.part_b}"


def canonical_loci(spec: PartitionSpec) -> list[EdgeLocus]:
    """One representative locus per automorphism class of edges."""
    out = {EdgeLocus(a, b).canonical(spec)
           for a in range(spec.k) for b in range(a + 1, spec.k)}
    return sorted(out, key=lambda loc: (loc.part_a, loc.part_b))


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Dense simple graph; ``part_of`` is set for multipartite-derived graphs."""

    adjacency: np.ndarray
    part_of: tuple[int, ...] | None = None

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=np.int8, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency must have zero diagonal")
        if np.any((a != 0) & (a != 1)):
            raise ValueError("adjacency must be 0/1")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def induced(self, vertices: Sequence[int]) -> LabeledGraph:
        idx = list(vertices)
        return LabeledGraph(self.adjacency[np.ix_(idx, idx)])

    def permuted(self, order: Sequence[int]) -> LabeledGraph:
        """Relabel so that new vertex ``j`` is old vertex ``order[j]``."""
        idx = list(order)
        return LabeledGraph(self.adjacency[np.ix_(idx, idx)])

    def as_float(self) -> np.ndarray:
        return self.adjacency.astype(float)


def disjoint_union(*graphs: LabeledGraph) -> LabeledGraph:
    n = sum(g.n for g in graphs)
    a = np.zeros((n, n), dtype=np.int8)
    start = 0
    for g in graphs:
        a[start:start + g.n, start:start + g.n] = g.adjacency
        start += g.n
    return LabeledGraph(a)


def edge_subgraph(n: int, edges: Iterable[tuple[int, int]]) -> LabeledGraph:
    a = np.zeros((n, n), dtype=np.int8)
    for u, v in edges:
        a[u, v] = a[v, u] = 1
    return LabeledGraph(a)


def build_complete_multipartite(spec: PartitionSpec) -> LabeledGraph:
    part_of = tuple(idx for idx, size in enumerate(spec.parts) for _ in range(size))
    labels = np.array(part_of)
    a = (labels[:, None] != labels[None, :]).astype(np.int8)
    return LabeledGraph(a, part_of)


def delete_edge(g: LabeledGraph, u: int, v: int) -> LabeledGraph:
    if u == v:
        raise ValueError("endpoints must differ")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    a = g.adjacency.copy()
    a[u, v] = a[v, u] = 0
    return LabeledGraph(a, g.part_of)


def canonical_edge(spec: PartitionSpec, locus: EdgeLocus) -> tuple[int, int]:
    """First vertices of the two parts of the canonical locus, smaller label first."""
    loc = locus.canonical(spec)
    u, v = spec.offset(loc.part_a), spec.offset(loc.part_b)
    return (u, v) if u < v else (v, u)


def remove_locus_edge(spec: PartitionSpec, locus: EdgeLocus) -> LabeledGraph:
    """K_{spec} minus the representative edge of ``locus``."""
    return delete_edge(build_complete_multipartite(spec), *canonical_edge(spec, locus))


@dataclass(frozen=True)
class QuotientMatrix:
    """Neighbour-count matrix of an equitable partition."""

    b: tuple[tuple[int, ...], ...]
    cell_sizes: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.cell_sizes)

    def as_array(self) -> np.ndarray:
        return np.array(self.b, dtype=float)


def multipartite_quotient(spec: PartitionSpec) -> QuotientMatrix:
    """Quotient of the part partition: b[i][j] = t_j off the diagonal."""
    k = spec.k
    b = tuple(tuple(0 if i == j else spec.parts[j] for j in range(k)) for i in range(k))
    cells = tuple(tuple(spec.vertices(i)) for i in range(k))
    return QuotientMatrix(b, spec.parts, cells)


def merged_singletons_quotient(spec: PartitionSpec) -> QuotientMatrix:
    """Coarser quotient with every 1-part merged into one clique cell, placed last."""
    big = [i for i, p in enumerate(spec.parts) if p > 1]
    ones = [i for i, p in enumerate(spec.parts) if p == 1]
    if not ones:
        return multipartite_quotient(spec)
    cells = [tuple(spec.vertices(i)) for i in big]
    cells.append(tuple(spec.offset(i) for i in ones))
    return quotient_of(build_complete_multipartite(spec), cells)


def deleted_edge_quotient(spec: PartitionSpec, locus: EdgeLocus) -> QuotientMatrix:
    """Quotient of K_{spec} - e for the equitable partition that isolates both endpoints.

    With the canonical locus (smaller part first as ``a``) the cells are
    {v_b}, {u_a}, rest of b, rest of a, then the untouched parts in
    canonical order.  Empty remainders are dropped.
    """
    loc = locus.canonical(spec)
    u, v = spec.offset(loc.part_a), spec.offset(loc.part_b)
    cells = [(v,), (u,)]
    for part, endpoint in ((loc.part_b, v), (loc.part_a, u)):
        rest = tuple(x for x in spec.vertices(part) if x != endpoint)
        if rest:
            cells.append(rest)
    for idx in range(spec.k):
        if idx not in (loc.part_a, loc.part_b):
            cells.append(tuple(spec.vertices(idx)))
    g = delete_edge(build_complete_multipartite(spec), u, v)
    return quotient_of(g, cells)


def _check_cover(n: int, cells: Sequence[Sequence[int]]) -> None:
    flat = [v for c in cells for v in c]
    if any(len(c) == 0 for c in cells):
        raise ValueError("cells must be non-empty")
    if sorted(flat) != list(range(n)):
        raise ValueError("cells must partition the vertex set")


def _counts(g: LabeledGraph, cells: Sequence[Sequence[int]]) -> np.ndarray:
    """counts[v, j] = number of neighbours of v in cell j."""
    member = np.zeros((g.n, len(cells)), dtype=np.int64)
    for j, c in enumerate(cells):
        member[list(c), j] = 1
    return g.adjacency.astype(np.int64) @ member


def verify_equitable(g: LabeledGraph, cells: Sequence[Sequence[int]]) -> bool:
    _check_cover(g.n, cells)
    counts = _counts(g, cells)
    return all(np.all(counts[list(c)] == counts[c[0]]) for c in cells)


def quotient_of(g: LabeledGraph, cells: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Quotient matrix of ``cells``; raises if the partition is not equitable."""
    if not verify_equitable(g, cells):
        raise ValueError("partition is not equitable")
    counts = _counts(g, cells)
    b = tuple(tuple(int(x) for x in counts[c[0]]) for c in cells)
    return QuotientMatrix(b, tuple(len(c) for c in cells), tuple(tuple(c) for c in cells))
