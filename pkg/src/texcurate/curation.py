"""Diverse subset selection by K-means under Soergel distance, and the Fisher score.

The clustering alternates nearest-centre assignment (Soergel) with
per-dimension arithmetic-mean updates until the assignment repeats, then
snaps every final centre back to its nearest unused pool candidate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .features import FeatureVector, as_matrix, soergel_matrix


@dataclass
class ClusterState:
    centers: np.ndarray
    assignment: np.ndarray
    iteration: int = 0


@dataclass(frozen=True)
class CurationResult:
    selected: list[str]
    selected_indices: list[int]
    final_centers: np.ndarray
    iterations: int
    converged: bool
    fisher: float
    seed: int

    def to_dict(self) -> dict:
        return {
            "selected": list(self.selected),
            "selected_indices": [int(i) for i in self.selected_indices],
            "final_centers": [[float(x) for x in c] for c in self.final_centers],
            "iterations": int(self.iterations),
            "converged": bool(self.converged),
            "fisher": float(self.fisher),
            "seed": int(self.seed),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def cluster_mean(members) -> np.ndarray:
    X = as_matrix(members)
    if len(X) == 0:
        raise ValueError("cannot average an empty cluster")
    return X.mean(axis=0)


def assign(X: np.ndarray, centers: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nearest centre per row of ``X`` (ties go to the lowest index).

    Returns the assignment and the full distance matrix.
    """
    D = soergel_matrix(X, centers)
    return np.argmin(D, axis=1), D


def update_centers(X: np.ndarray, labels: np.ndarray, D: np.ndarray, n_clusters: int) -> np.ndarray:
    """Cluster means; an empty cluster is reseeded with a pool candidate.

    The replacement is the candidate worst served by its current centre
    (largest distance to it), skipping candidates already used as a
    replacement in this step. Ties go to the lowest pool index.
    """
    centers = np.empty((n_clusters, X.shape[1]))
    served = D[np.arange(len(X)), labels].copy()
    for j in range(n_clusters):
        members = X[labels == j]
        if len(members):
            centers[j] = members.mean(axis=0)
        else:
            i = int(np.argmax(served))
            centers[j] = X[i]
            served[i] = -np.inf
    return centers


def snap_to_candidates(X: np.ndarray, centers: np.ndarray) -> list[int]:
    """Nearest unused candidate for each centre, greedily in centre order."""
    D = soergel_matrix(centers, X)
    used: set[int] = set()
    picks = []
    for row in D:
        for i in np.argsort(row, kind="stable"):
            if int(i) not in used:
                used.add(int(i))
                picks.append(int(i))
                break
    return picks


def fisher(selected) -> float:
    """Mean Soergel distance over all ordered pairs, self-pairs included."""
    S = as_matrix(selected)
    C = len(S)
    if C == 0:
        raise ValueError("fisher measure needs at least one vector")
    return float(soergel_matrix(S, S).sum() / C ** 2)


def curate(
    pool: Sequence[FeatureVector] | np.ndarray,
    N: int,
    seed: int = 0,
    max_iter: int = 100,
) -> CurationResult:
    """Pick ``N`` mutually diverse candidates from a normalised pool.

    Parameters
    ----------
    pool
        Feature vectors normalised with shared bounds. Plain arrays are
        accepted; their ids are the row indices.
    N
        Number of candidates to select.
    seed
        Seeds the choice of the ``N`` initial centres.
    max_iter
        Upper bound on centre updates; the loop stops earlier once an
        assignment pass reproduces the previous one.
    """
    X = as_matrix(pool)
    n = len(X)
    if N < 1:
        raise ValueError("N must be at least 1")
    if N > n:
        raise ValueError(f"N={N} exceeds pool size {n}")
    if isinstance(pool, np.ndarray):
        ids = [str(i) for i in range(n)]
    else:
        ids = [v.source_id or str(i) for i, v in enumerate(pool)]

    rng = np.random.default_rng(seed)
    start = rng.choice(n, size=N, replace=False)
    state = ClusterState(centers=X[start].copy(), assignment=np.full(n, -1))
    converged = False
    while True:
        labels, D = assign(X, state.centers)
        if np.array_equal(labels, state.assignment):
            converged = True
            break
        if state.iteration >= max_iter:
            break
        state.centers = update_centers(X, labels, D, N)
        state.assignment = labels
        state.iteration += 1

    picks = snap_to_candidates(X, state.centers)
    return CurationResult(
        selected=[ids[i] for i in picks],
        selected_indices=picks,
        final_centers=state.centers,
        iterations=state.iteration,
        converged=converged,
        fisher=fisher(X[picks]),
        seed=seed,
    )
