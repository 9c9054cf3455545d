"""Subtractive mountain clustering over the word-distance matrix.

Pairwise potentials P(r, s) = B(r, s) * exp(-alpha * D(r, s)^2) reward
word pairs that sit close together and co-occur often; a word's potential
is its row sum.  Centers are picked greedily by maximum potential.  After
each pick the potential landscape is lowered around the new center,

    P(r, s) <- max(0, P(r, s) - Pk * B(r, s) * exp(-beta * D(center, s)^2)),

so the next center lands elsewhere.  A candidate center must satisfy the
spacing test d_min / r_a + Pk / P1 >= 1 against the already accepted
centers; a rejected candidate has its word potential zeroed and selection
moves to the next highest word.  Selection stops when the best remaining
potential drops below epsilon * P1, when every candidate is rejected, or
after N centers (safety cap).

Cluster membership follows the fuzzy c-means rule

    U(i, j) = 1 / sum_k (D(i, c_j) / D(i, c_k)) ** (2 / (m - 1)),

with one-hot rows for the centers themselves.  All ties break toward the
lowest word code, so runs are deterministic.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ShapeError


@dataclass(frozen=True)
class SmcParams:
    """Clustering radii, stop fraction and fuzziness exponent."""

    r_a: float = 12.0
    r_b: float = 14.0
    epsilon: float = 0.1
    m: float = 2.0

    def __post_init__(self):
        if self.r_a <= 0 or self.r_b <= 0:
            raise ValueError("radii r_a and r_b must be positive")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.m <= 1.0:
            raise ValueError("fuzziness m must exceed 1")
        if self.r_b < self.r_a:
            warnings.warn(
                "r_b < r_a: the damping radius is narrower than the "
                "influence radius, centers may crowd",
                stacklevel=2,
            )

    @property
    def alpha(self) -> float:
        return 4.0 / self.r_a**2

    @property
    def beta(self) -> float:
        return 4.0 / self.r_b**2


@dataclass(frozen=True)
class PotentialState:
    """Pairwise potentials P (zero diagonal) and their row sums p."""

    P: np.ndarray
    p: np.ndarray


@dataclass(frozen=True)
class ClusterModel:
    """Accepted centers in selection order, their potentials, and U."""

    centers: tuple[int, ...]
    center_potentials: tuple[float, ...]
    U: np.ndarray

    @property
    def n_clusters(self) -> int:
        return len(self.centers)


def initial_potentials(D: np.ndarray, B: np.ndarray, params: SmcParams) -> PotentialState:
    """Pairwise potentials from distance and co-occurrence matrices."""
    if D.shape != B.shape or D.ndim != 2 or D.shape[0] != D.shape[1]:
        raise ShapeError(f"incompatible shapes {D.shape} and {B.shape}")
    P = B * np.exp(-params.alpha * D**2)
    np.fill_diagonal(P, 0.0)
    return PotentialState(P=P, p=P.sum(axis=1))


def select_center(state: PotentialState) -> tuple[int, float]:
    """Word with the greatest potential; ties go to the lowest code."""
    idx = int(np.argmax(state.p))
    return idx, float(state.p[idx])


def subtract_potential(
    state: PotentialState,
    center: int,
    center_potential: float,
    B: np.ndarray,
    D: np.ndarray,
    params: SmcParams,
) -> PotentialState:
    """Lower every pair potential around the newly accepted center."""
    kernel = np.exp(-params.beta * D[center] ** 2)
    P = np.maximum(state.P - center_potential * B * kernel[None, :], 0.0)
    np.fill_diagonal(P, 0.0)
    return PotentialState(P=P, p=P.sum(axis=1))


def accept_center(
    candidate: int,
    candidate_potential: float,
    first_potential: float,
    centers,
    D: np.ndarray,
    params: SmcParams,
) -> bool:
    """Spacing test against accepted centers; the first center always passes."""
    if not centers:
        return True
    d_min = float(np.min(D[candidate, list(centers)]))
    return d_min / params.r_a + candidate_potential / first_potential >= 1.0


def run_smc(D: np.ndarray, B: np.ndarray, params: SmcParams) -> ClusterModel:
    """Full center-selection loop followed by the membership computation."""
    state = initial_potentials(D, B, params)
    n = D.shape[0]

    first_code, first_potential = select_center(state)
    centers = [first_code]
    potentials = [first_potential]

    if n > 1 and first_potential > 0.0:
        state = subtract_potential(state, first_code, first_potential, B, D, params)
        p = state.p.copy()
        p[centers] = 0.0
        while len(centers) < n:
            candidate = int(np.argmax(p))
            candidate_potential = float(p[candidate])
            if candidate_potential < params.epsilon * first_potential:
                break
            if accept_center(candidate, candidate_potential, first_potential, centers, D, params):
                centers.append(candidate)
                potentials.append(candidate_potential)
                state = subtract_potential(state, candidate, candidate_potential, B, D, params)
                p = state.p.copy()
                p[centers] = 0.0
            else:
                p[candidate] = 0.0

    U = memberships(centers, D, params)
    return ClusterModel(
        centers=tuple(centers), center_potentials=tuple(potentials), U=U
    )


def memberships(centers, D: np.ndarray, params: SmcParams) -> np.ndarray:
    """N x C fuzzy membership matrix; rows sum to one, centers are one-hot."""
    centers = list(centers)
    n = D.shape[0]
    c = len(centers)
    exponent = 2.0 / (params.m - 1.0)
    U = np.zeros((n, c))
    dist = D[:, centers]
    for i in range(n):
        zeros = np.flatnonzero(dist[i] == 0.0)
        if zeros.size:
            # zero distance to a center means the word is that center
            U[i, zeros[0]] = 1.0
            continue
        weights = dist[i] ** (-exponent)
        U[i] = weights / weights.sum()
    return U
