"""Dense symmetric eigendecomposition and the matrix machinery built on it.

The eigensolver is a cyclic Jacobi iteration: unconditionally stable for
real symmetric input and deterministic for identical input.  Everything
else (matrix absolute value, polar factor, vec/Kronecker identities) is
derived from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Kronecker products are materialized densely; they are verification tools,
# not a production path, so result dimensions are capped.
KRON_DIM_CAP = 10_000

_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi iteration failed to converge within the sweep cap."""


class NotApplicableError(ValueError):
    """Operation precondition not met (e.g. isolated vertex)."""


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral factorization m = W diag(eigenvalues) W^T.

    eigenvalues are sorted non-increasing; column r of `vectors` is the unit
    eigenvector for eigenvalues[r].
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray


def _as_symmetric(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    scale = np.max(np.abs(a)) if a.size else 0.0
    if np.max(np.abs(a - a.T)) > 1e-12 * (1.0 + scale):
        raise ValueError("matrix is not symmetric")
    return a


def _jacobi(m: np.ndarray, vectors: bool):
    a = np.array(m, dtype=float)
    n = a.shape[0]
    v = np.eye(n) if vectors else None
    thresh = 1e-12 * np.linalg.norm(m)
    rot = np.empty((2, 2))
    for sweep in range(_MAX_SWEEPS + 1):
        off = math.sqrt(np.sum(np.square(a - np.diag(np.diag(a)))))
        if off <= thresh:
            return np.diag(a).copy(), v
        if sweep == _MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi did not converge in {_MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {off:.3e}, threshold {thresh:.3e})"
            )
        # first sweeps rotate only significant entries; later sweeps take all
        skip = 0.05 * off / n if sweep < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0 or abs(apq) <= skip:
                    continue
                dp = a[p, p]
                dq = a[q, q]
                if abs(dp) > 1e14 * abs(apq) and abs(dq) > 1e14 * abs(apq):
                    # below the representational noise of the diagonal
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = (dq - dp) / (2.0 * apq)
                if abs(theta) > 1e140:  # avoid overflow in theta**2
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot[0, 0] = c
                rot[0, 1] = -s
                rot[1, 0] = s
                rot[1, 1] = c
                pq = [p, q]
                a[pq, :] = rot @ a[pq, :]
                a[:, pq] = a[:, pq] @ rot.T
                a[p, q] = 0.0
                a[q, p] = 0.0
                if vectors:
                    v[:, pq] = v[:, pq] @ rot.T
    raise AssertionError("unreachable")


def eig_symmetric(m) -> EigenDecomposition:
    """Full spectral factorization of a real symmetric matrix."""
    a = _as_symmetric(m)
    evals, vecs = _jacobi(a, vectors=True)
    # non-increasing eigenvalues; ties keep original index order
    order = np.argsort(-evals, kind="stable")
    return EigenDecomposition(eigenvalues=evals[order], vectors=vecs[:, order])


def eigvals_symmetric(m) -> np.ndarray:
    """Eigenvalues only (non-increasing); cheaper than eig_symmetric."""
    a = _as_symmetric(m)
    evals, _ = _jacobi(a, vectors=False)
    return np.sort(evals)[::-1]


def matrix_abs(m) -> np.ndarray:
    """|m| = (m m^T)^(1/2), computed spectrally as W diag(|lambda|) W^T."""
    dec = eig_symmetric(m)
    w = dec.vectors
    out = (w * np.abs(dec.eigenvalues)) @ w.T
    return (out + out.T) / 2.0


def polar_factor(m) -> np.ndarray:
    """Orthogonal U with m = |m| U.

    U = Q P^T where P holds the eigenvectors and Q flips the sign of every
    column whose eigenvalue is <= 0 (zero eigenvalues take the flipped
    branch; U stays orthogonal and the identity still holds).
    """
    dec = eig_symmetric(m)
    p = dec.vectors
    signs = np.where(dec.eigenvalues > 0.0, 1.0, -1.0)
    q = p * signs
    return q @ p.T


def kronecker(x, y, dim_cap: int = KRON_DIM_CAP) -> np.ndarray:
    """Dense Kronecker product with a result-dimension guard."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 2 or y.ndim != 2:
        raise ValueError("kronecker expects 2-d matrices")
    rows = x.shape[0] * y.shape[0]
    cols = x.shape[1] * y.shape[1]
    if rows > dim_cap or cols > dim_cap:
        raise ValueError(f"kronecker result {rows}x{cols} exceeds dimension cap {dim_cap}")
    return np.kron(x, y)


def vec(m) -> np.ndarray:
    """Column-major stacking of a matrix into a column vector."""
    return np.asarray(m, dtype=float).reshape(-1, order="F")


def trace(m) -> float:
    return float(np.trace(np.asarray(m, dtype=float)))


def operator_norm(m) -> float:
    """Largest singular value; for symmetric input this is max |eigenvalue|."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = np.max(np.abs(a)) if a.size else 0.0
    if np.max(np.abs(a - a.T)) <= 1e-12 * (1.0 + scale):
        return float(np.max(np.abs(eigvals_symmetric(a)))) if a.size else 0.0
    gram = a.T @ a
    gram = (gram + gram.T) / 2.0
    top = float(np.max(eigvals_symmetric(gram)))
    return math.sqrt(max(top, 0.0))


def spectral_radius(m) -> float:
    """max |eigenvalue| of a symmetric matrix."""
    return float(np.max(np.abs(eigvals_symmetric(m))))


def verify_S_identity(g) -> float:
    """Residual of vec(|A_ex|) = S vec(|A|) for a graph without isolated vertices.

    S = (1/2) (U x I) ((D^-1 x D) + (D x D^-1)) (V^T x I) with U, V the polar
    factors of the extended and ordinary adjacency matrices and D the degree
    matrix.  Also checks the precursor relation
    A_ex = (1/2)(D A D^-1 + D^-1 A D) to 1e-12; the identity is exact in
    exact arithmetic, so the returned max-norm residual measures only
    floating-point error.
    """
    from .energy import adjacency_matrix, degree_matrix, extended_adjacency_matrix

    degrees = g.degrees()
    if min(degrees) < 1:
        raise NotApplicableError("S-identity needs an invertible degree matrix (no isolated vertices)")
    if g.n * g.n > KRON_DIM_CAP:
        raise ValueError(f"S-identity materializes n^2 x n^2 matrices; n={g.n} exceeds the cap")

    a = adjacency_matrix(g)
    a_ex = extended_adjacency_matrix(g)
    d = degree_matrix(g)
    d_inv = np.diag(1.0 / np.diag(d))

    precursor = 0.5 * (d @ a @ d_inv + d_inv @ a @ d)
    pre_res = float(np.max(np.abs(a_ex - precursor)))
    if pre_res > 1e-12:
        raise AssertionError(f"precursor relation residual {pre_res:.3e} exceeds 1e-12")

    eye = np.eye(g.n)
    u = polar_factor(a_ex)
    v = polar_factor(a)
    middle = kronecker(d_inv, d) + kronecker(d, d_inv)
    s = 0.5 * kronecker(u, eye) @ middle @ kronecker(v.T, eye)
    residual = vec(matrix_abs(a_ex)) - s @ vec(matrix_abs(a))
    return float(np.max(np.abs(residual)))
