"""Classification oracle for one-edge deletion and the exhaustive sweeps that test it."""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .graphs import (
    EdgeLocus,
    PartitionSpec,
    build_complete_multipartite,
    canonical_loci,
    remove_locus_edge,
)
from .spectra import graph_energy

SIGN_TOL = 1e-8
SWEEP_NMAX = 14
TRIPARTITE_NMAX = 40


class Sign(str, enum.Enum):
    INCREASE = "Increase"
    DECREASE = "Decrease"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class EnergyComparison:
    spec: PartitionSpec
    locus: EdgeLocus
    energy_g: float
    energy_g_minus_e: float
    delta: float
    predicted: Sign
    observed: Sign
    margin: float

    @property
    def agrees(self) -> bool:
        return self.predicted == self.observed

    def row(self) -> dict:
        return {
            "spec": str(self.spec),
            "locus": str(self.locus),
            "energy_g": self.energy_g,
            "energy_ge": self.energy_g_minus_e,
            "delta": self.delta,
            "predicted": self.predicted.value,
            "observed": self.observed.value,
            "margin": self.margin,
        }


def predict_sign(spec: PartitionSpec, locus: EdgeLocus) -> Sign:
    """Direction of the energy change predicted by the classification theorem."""
    locus.validate(spec)
    ta, tb = locus.sizes(spec)
    if spec.k >= 4:
        decrease = ta == 1 and tb == 1
    elif spec.k == 3:
        decrease = ta + tb <= 3
    else:
        decrease = min(ta, tb) == 1
    return Sign.DECREASE if decrease else Sign.INCREASE


def observe_sign(spec: PartitionSpec, locus: EdgeLocus,
                 sign_tolerance: float = SIGN_TOL) -> EnergyComparison:
    if sign_tolerance <= 0:
        raise ValueError("sign_tolerance must be positive")
    locus = locus.canonical(spec)
    e_g = graph_energy(build_complete_multipartite(spec))
    e_ge = graph_energy(remove_locus_edge(spec, locus))
    delta = e_ge - e_g
    if abs(delta) <= sign_tolerance:
        observed = Sign.INCONCLUSIVE
    else:
        observed = Sign.INCREASE if delta > 0 else Sign.DECREASE
    return EnergyComparison(spec, locus, e_g, e_ge, delta,
                            predict_sign(spec, locus), observed, abs(delta))


def integer_partitions(n: int, min_parts: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-increasing partitions of n in lexicographic order."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(1, min(cap, remaining) + 1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for p in rec(n, n):
        if len(p) >= min_parts:
            yield p


def theorem_cases(n_max: int, n_min: int = 3) -> list[tuple[PartitionSpec, EdgeLocus]]:
    cases = []
    for n in range(n_min, n_max + 1):
        for parts in integer_partitions(n, min_parts=2):
            spec = PartitionSpec(parts)
            cases.extend((spec, loc) for loc in canonical_loci(spec))
    return cases


def tripartite_cases(n_max: int, n_min: int = 3) -> list[tuple[PartitionSpec, EdgeLocus]]:
    """Every K_{1,i,n-i-1} with the edge between the 1-part and the i-part."""
    cases = []
    for n in range(n_min, n_max + 1):
        for i in range(1, n - 1):
            spec = PartitionSpec((1, i, n - i - 1))
            cases.append((spec, EdgeLocus.between_sizes(spec, 1, i)))
    return cases


def _unit_and_part(n_max: int, i_values: Iterable[int], min_k: int,
                   max_k: int | None = None) -> list[tuple[PartitionSpec, EdgeLocus]]:
    """Specs with a 1-part and an i-part (any other parts), edge between those two."""
    cases = []
    i_values = list(i_values)
    for n in range(3, n_max + 1):
        for parts in integer_partitions(n, min_parts=min_k):
            if max_k is not None and len(parts) > max_k:
                continue
            spec = PartitionSpec(parts)
            for i in i_values:
                if 1 in parts and i in parts and (i != 1 or parts.count(1) >= 2):
                    cases.append((spec, EdgeLocus.between_sizes(spec, 1, i)))
    return sorted(set(cases), key=_case_key)


def _case_key(case: tuple[PartitionSpec, EdgeLocus]):
    spec, loc = case
    return (spec.n, tuple(reversed(spec.parts)), loc.part_a, loc.part_b)


# Residual small cases the analytic arguments leave to machine checking.
SUBSWEEPS: dict[str, Callable[[], list[tuple[PartitionSpec, EdgeLocus]]]] = {
    "multipartite-i4": lambda: _unit_and_part(11, [4], min_k=4),
    "multipartite-i5": lambda: _unit_and_part(8, [5], min_k=4),
    "multipartite-small-i": lambda: _unit_and_part(7, [2, 3], min_k=4),
    "tripartite": lambda: tripartite_cases(34),
}


@dataclass
class SweepReport:
    rows: list[EnergyComparison]
    summary: dict = field(default_factory=dict)

    @property
    def disagreements(self) -> list[EnergyComparison]:
        return [r for r in self.rows
                if r.observed != Sign.INCONCLUSIVE and not r.agrees]

    @property
    def inconclusive(self) -> list[EnergyComparison]:
        return [r for r in self.rows if r.observed == Sign.INCONCLUSIVE]

    @property
    def passed(self) -> bool:
        return not self.disagreements and not self.inconclusive


def _observe(args) -> EnergyComparison:
    spec, loc, tol = args
    return observe_sign(spec, loc, tol)


def run_cases(cases: list[tuple[PartitionSpec, EdgeLocus]],
              sign_tolerance: float = SIGN_TOL, workers: int = 1) -> SweepReport:
    """Observe every case; row order follows ``cases`` regardless of ``workers``."""
    jobs = [(spec, loc, sign_tolerance) for spec, loc in cases]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_observe, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        rows = [_observe(j) for j in jobs]
    report = SweepReport(rows)
    inconclusive = len(report.inconclusive)
    disagree = len(report.disagreements)
    report.summary = {
        "cases": len(rows),
        "agree": len(rows) - disagree - inconclusive,
        "disagree": disagree,
        "inconclusive": inconclusive,
        "min_margin": min((r.margin for r in rows), default=0.0),
        # two-part cases rest on numerics alone
        "bipartite_numeric_only": sum(1 for r in rows if r.spec.k == 2),
    }
    return report


def sweep_theorem(n_max: int, sign_tolerance: float = SIGN_TOL,
                  workers: int = 1) -> SweepReport:
    if not 3 <= n_max <= SWEEP_NMAX:
        raise ValueError(f"n_max must lie in [3, {SWEEP_NMAX}], got {n_max}")
    return run_cases(theorem_cases(n_max), sign_tolerance, workers)


def sweep_tripartite(n_max: int, sign_tolerance: float = SIGN_TOL,
                     workers: int = 1) -> SweepReport:
    if not 3 <= n_max <= TRIPARTITE_NMAX:
        raise ValueError(f"n_max must lie in [3, {TRIPARTITE_NMAX}], got {n_max}")
    return run_cases(tripartite_cases(n_max), sign_tolerance, workers)


def unit_parts_isomorphism(spec: PartitionSpec) -> list[int]:
    """Vertex order turning K_{1,1,rest} - e (e joining two 1-parts) into K_{2,rest}.

    Returns ``order`` with ``remove_locus_edge(spec, locus).permuted(order)``
    equal to ``build_complete_multipartite(merged)`` where the two 1-parts
    are merged into a 2-part.
    """
    locus = EdgeLocus.between_sizes(spec, 1, 1)
    u, v = (spec.offset(locus.part_a), spec.offset(locus.part_b))
    merged = merge_unit_parts(spec)
    order: list[int] = []
    pending_pair = True
    for size in merged.parts:
        if size == 2 and pending_pair:
            order.extend([u, v])
            pending_pair = False
            continue
        idx = _next_unused_part(spec, size, order, exclude={u, v})
        order.extend(spec.vertices(idx))
    return order


def _next_unused_part(spec: PartitionSpec, size: int, used: list[int], exclude: set[int]) -> int:
    taken = set(used) | exclude
    for idx, p in enumerate(spec.parts):
        if p == size and spec.offset(idx) not in taken:
            return idx
    raise ValueError("no unused part of that size")


def merge_unit_parts(spec: PartitionSpec) -> PartitionSpec:
    parts = list(spec.parts)
    if parts.count(1) < 2:
        raise ValueError(f"{spec} has fewer than two 1-parts")
    parts.remove(1)
    parts.remove(1)
    if not parts:
        raise ValueError("merging leaves a single part")
    return PartitionSpec(parts + [2])
