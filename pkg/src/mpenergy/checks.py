"""Sufficient conditions for an energy increase and the spectral bounds they rely on.

Each checker evaluates its hypotheses on a concrete graph.  Checkers that
promise a conclusion also verify it numerically and raise
:class:`ConclusionViolated` if the conclusion fails, so a true result is
never silently unsound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .graphs import (
    EdgeLocus,
    PartitionSpec,
    build_complete_multipartite,
    edge_subgraph,
    remove_locus_edge,
)
from .poly import f_a
from .spectra import (
    eig_symmetric,
    graph_energy,
    perron_components,
    second_eigenvalue,
    spectral_radius,
)


class ConclusionViolated(AssertionError):
    """A sufficient condition held but the promised energy increase did not."""


@lru_cache(maxsize=8192)
def _energy(spec: PartitionSpec) -> float:
    return graph_energy(build_complete_multipartite(spec))


@lru_cache(maxsize=8192)
def _deleted(spec: PartitionSpec, locus: EdgeLocus) -> tuple[float, float]:
    """(energy, second eigenvalue) of K_{spec} - e."""
    values = eig_symmetric(remove_locus_edge(spec, locus)).values
    return float(sum(abs(x) for x in values)), values[1]


def energy_delta(spec: PartitionSpec, locus: EdgeLocus) -> float:
    locus = locus.canonical(spec)
    return _deleted(spec, locus)[0] - _energy(spec)


def _confirm(holds: bool, spec, delta: float, what: str) -> bool:
    if holds and not delta > 0:
        raise ConclusionViolated(f"{what} holds for {spec} but delta = {delta:.3e}")
    return holds


@dataclass(frozen=True)
class EdgeSubsetSpec:
    """A non-empty set of inter-part edges of K_{spec}."""

    spec: PartitionSpec
    edges: frozenset[tuple[int, int]]

    def __init__(self, spec: PartitionSpec, edges: Iterable[tuple[int, int]]):
        es = frozenset(tuple(sorted(e)) for e in edges)
        if not es:
            raise ValueError("edge subset must be non-empty")
        g = build_complete_multipartite(spec)
        for u, v in es:
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) does not join two distinct parts")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "edges", es)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.edges for v in e}))

    def induced(self):
        """The subgraph H formed by the edges of S on their endpoints."""
        verts = self.vertices
        pos = {v: j for j, v in enumerate(verts)}
        return edge_subgraph(len(verts), ((pos[u], pos[v]) for u, v in self.edges))

    @property
    def u_counts(self) -> tuple[int, ...]:
        part_of = build_complete_multipartite(self.spec).part_of
        counts = [0] * self.spec.k
        for v in self.vertices:
            counts[part_of[v]] += 1
        return tuple(counts)

    def removed_from(self):
        g = build_complete_multipartite(self.spec)
        a = g.adjacency.copy()
        for u, v in self.edges:
            a[u, v] = a[v, u] = 0
        return type(g)(a, g.part_of)


def subset_condition(subset: EdgeSubsetSpec) -> bool:
    """Every part satisfies |V_i| >= 2 lambda(H) |U_i|."""
    lam = spectral_radius(subset.induced())
    return all(t >= 2 * lam * u for t, u in zip(subset.spec.parts, subset.u_counts))


def check_subset_deletion(spec: PartitionSpec, subset: EdgeSubsetSpec) -> bool:
    """Size condition for deleting an edge set; confirms E(G - S) > E(G) when it holds."""
    if subset.spec != spec:
        raise ValueError("subset belongs to a different spec")
    holds = subset_condition(subset)
    if holds:
        delta = graph_energy(subset.removed_from()) - _energy(spec)
        _confirm(holds, spec, delta, "subset size condition")
    return holds


def check_rey(spec: PartitionSpec, locus: EdgeLocus, a: float) -> bool:
    """lambda_2(G - e) > a together with x_1^2 + x_2^2 <= a at the endpoint parts."""
    if not 0 < a < 1:
        raise ValueError(f"a must lie in (0, 1), got {a}")
    locus = locus.canonical(spec)
    x = perron_components(spec).components
    _, lam2 = _deleted(spec, locus)
    holds = lam2 > a and x[locus.part_a] ** 2 + x[locus.part_b] ** 2 <= a
    return _confirm(holds, spec, energy_delta(spec, locus), "Rayleigh deletion test")


def _unit_locus_shape(spec: PartitionSpec, locus: EdgeLocus) -> int:
    """Return i for a 1-part/i-part locus with i >= 2 in a spec with k >= 3."""
    locus.validate(spec)
    ta, tb = sorted(locus.sizes(spec))
    if spec.k < 3 or ta != 1 or tb < 2:
        raise ValueError(
            f"need k >= 3 and an edge between a 1-part and an i-part (i >= 2); "
            f"got {spec} with sizes ({ta}, {tb})")
    return tb


def check_cond1(spec: PartitionSpec, locus: EdgeLocus, a) -> bool:
    """(2i+1)/(i(i+2)) < a < 1 and f_a(n, i) > 0, with lambda_2(G - e) > a."""
    i = _unit_locus_shape(spec, locus)
    locus = locus.canonical(spec)
    gate = Fraction(2 * i + 1, i * (i + 2)) < a < 1
    holds = gate and f_a(spec.n, i, a) > 0 and _deleted(spec, locus)[1] > a
    return _confirm(holds, spec, energy_delta(spec, locus), "growth condition")


def check_cond2(spec: PartitionSpec, locus: EdgeLocus, a) -> bool:
    """2(n-1)/(lambda^2 + n - 1) < a, with lambda_2(G - e) > a."""
    _unit_locus_shape(spec, locus)
    if not a > 0:
        raise ValueError("a must be positive")
    locus = locus.canonical(spec)
    lam = perron_components(spec).radius
    n = spec.n
    holds = 2 * (n - 1) / (lam * lam + n - 1) < a and _deleted(spec, locus)[1] > a
    return _confirm(holds, spec, energy_delta(spec, locus), "radius condition")


def check_lembound(n: int, i: int, one_parts_only: bool = False) -> bool:
    """Lower bounds on the spectral radius of K_{1,i,...}.

    With ``one_parts_only`` the graph is K_{i,1,...,1} (n - i ones) and both
    the product bound and the n - i + 0.67 bound are checked; otherwise the
    graph is K_{1,i,n-i-1} and only the product bound applies.
    """
    if one_parts_only:
        if not 2 <= i <= n - 5:
            raise ValueError(f"the n - i + 0.67 bound needs 2 <= i <= n - 5, got n={n}, i={i}")
        spec = PartitionSpec([i] + [1] * (n - i))
    else:
        if not (i >= 1 and n - i - 1 >= 1):
            raise ValueError(f"K_(1,{i},{n - i - 1}) is not a valid tripartite graph")
        spec = PartitionSpec((1, i, n - i - 1))
    lam = spectral_radius(build_complete_multipartite(spec))
    ok = lam > math.sqrt((n - i) * (i + 1))
    if one_parts_only:
        ok = ok and lam > n - i + 0.67
    return ok


def radius_gain(spec: PartitionSpec, part_i: int, part_j: int) -> float:
    """lambda after moving one vertex from part_i to part_j, minus lambda before."""
    ti, tj = spec.parts[part_i], spec.parts[part_j]
    if ti - tj < 2:
        raise ValueError(f"need t_i - t_j >= 2, got {ti} and {tj}")
    parts = list(spec.parts)
    parts[part_i] -= 1
    parts[part_j] += 1
    before = perron_components(spec).radius
    after = perron_components(PartitionSpec(parts)).radius
    return after - before


def check_monotonicity(spec: PartitionSpec, part_i: int, part_j: int,
                       margin: float = 0.0) -> bool:
    return radius_gain(spec, part_i, part_j) > margin


def second_eigenvalue_after(spec: PartitionSpec, locus: EdgeLocus) -> float:
    return second_eigenvalue(remove_locus_edge(spec, locus.canonical(spec)))
