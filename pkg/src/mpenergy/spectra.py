"""Spectra, energy and Perron data for adjacency and quotient matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import (
    LabeledGraph,
    PartitionSpec,
    QuotientMatrix,
    multipartite_quotient,
)
from .poly import char_poly, real_roots

EIG_RESIDUAL_TOL = 1e-10
SYMMETRY_TOL = 1e-12
PERRON_RESIDUAL_TOL = 1e-9


class EigenSolveError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order plus the worst eigenpair residual."""

    values: tuple[float, ...]
    residual_bound: float

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]


def _matrix(m) -> np.ndarray:
    if isinstance(m, LabeledGraph):
        return m.as_float()
    return np.asarray(m, dtype=float)


def eig_symmetric(m, tol: float = EIG_RESIDUAL_TOL) -> Spectrum:
    a = _matrix(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.size and np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")
    if a.shape[0] == 0:
        return Spectrum((), 0.0)
    w, v = np.linalg.eigh(a)
    residual = float(np.max(np.linalg.norm(a @ v - v * w, axis=0)))
    scale = 1.0 + float(np.linalg.norm(a, 2))
    if residual > tol * scale:
        raise EigenSolveError(f"eigen residual {residual:.3e} exceeds {tol * scale:.3e}")
    return Spectrum(tuple(float(x) for x in w[::-1]), residual)


def eig_quotient(q: QuotientMatrix | np.ndarray) -> Spectrum:
    """Eigenvalues of a quotient matrix via its characteristic polynomial.

    Quotients of equitable partitions have real spectra, so a shortfall in
    the certified real-root count means the input was not such a quotient.
    """
    b = q.b if isinstance(q, QuotientMatrix) else q
    dim = len(b)
    roots = real_roots(char_poly(b))
    if roots.certified_count < dim:
        raise EigenSolveError(
            f"only {roots.certified_count} of {dim} eigenvalues are real")
    return Spectrum(tuple(reversed(roots.real_roots)), roots.width)


def graph_energy(g) -> float:
    return float(sum(abs(x) for x in eig_symmetric(g).values))


def spectral_radius(g) -> float:
    spec = eig_symmetric(g)
    return spec.values[0] if spec.values else 0.0


def second_eigenvalue(g) -> float:
    spec = eig_symmetric(g)
    if len(spec) < 2:
        raise ValueError("second eigenvalue needs at least 2 vertices")
    return spec.values[1]


@dataclass(frozen=True)
class PerronData:
    """Per-part entries of the unit Perron vector of K_{spec}."""

    components: tuple[float, ...]
    radius: float


@lru_cache(maxsize=4096)
def perron_components(spec: PartitionSpec) -> PerronData:
    q = multipartite_quotient(spec)
    radius = eig_quotient(q).values[0]
    b = q.as_array()
    # null vector of (B - radius I)
    _, _, vt = np.linalg.svd(b - radius * np.eye(q.dim))
    x = vt[-1]
    x = x if x.sum() > 0 else -x
    sizes = np.array(spec.parts, dtype=float)
    x = x / np.sqrt(np.sum(sizes * x * x))
    if np.any(x <= 0):
        raise EigenSolveError("Perron components are not strictly positive")
    residual = np.max(np.abs(radius * x - b @ x))
    if residual > PERRON_RESIDUAL_TOL:
        raise EigenSolveError(f"Perron residual {residual:.3e} did not converge")
    return PerronData(tuple(float(c) for c in x), radius)
