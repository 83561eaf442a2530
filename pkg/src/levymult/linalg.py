"""Small dense linear-algebra helpers shared across the package."""

from __future__ import annotations

import numpy as np


class NotPositiveSemidefinite(ValueError):
    pass


def operator_norm(a) -> float:
    """Spectral norm (largest singular value)."""
    a = np.atleast_2d(np.asarray(a))
    return float(np.linalg.norm(a, 2))


def pivoted_cholesky(m: np.ndarray, tol: float = 1e-12):
    """Diagonally pivoted Cholesky factorisation of a symmetric PSD matrix.

    Returns L (n x rank, lower triangular up to the pivot order) and the
    pivot index list, with m[piv][:, piv] = L L^T.  Rank-deficient input
    is accepted; a residual diagonal below -tol*scale raises.
    """
    m = np.array(m, dtype=float)
    n = m.shape[0]
    piv = list(range(n))
    l = np.zeros((n, n))
    scale = max(1.0, float(np.max(np.abs(np.diag(m)))) if n else 1.0)
    rank = n
    for k in range(n):
        # pivot on the largest remaining diagonal entry
        rem = np.diag(m)[k:]
        j = k + int(np.argmax(rem))
        if j != k:
            m[[k, j], :] = m[[j, k], :]
            m[:, [k, j]] = m[:, [j, k]]
            l[[k, j], :] = l[[j, k], :]
            piv[k], piv[j] = piv[j], piv[k]
        d = m[k, k]
        if d <= tol * scale:
            if d < -tol * scale:
                raise NotPositiveSemidefinite(
                    f"pivot {d:.3e} below tolerance; matrix is not PSD"
                )
            rank = k
            break
        root = np.sqrt(d)
        l[k, k] = root
        if k + 1 < n:
            col = m[k + 1 :, k] / root
            l[k + 1 :, k] = col
            m[k + 1 :, k + 1 :] -= np.outer(col, col)
            # residual negative mass beyond rounding means the input was not PSD
            if np.min(np.diag(m)[k + 1 :]) < -10 * tol * scale:
                raise NotPositiveSemidefinite("negative Schur complement; matrix is not PSD")
    # un-permute the rows so that Lambda Lambda^T = m_original
    out = np.zeros((n, rank))
    for i in range(n):
        out[piv[i], :] = l[i, :rank]
    return out, piv, rank


def expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring plus a Taylor tail.

    Intended for the small (d <= 32) matrices used here; accurate to
    machine precision for them.
    """
    a = np.asarray(a, dtype=complex)
    norm = np.linalg.norm(a, np.inf)
    squarings = 0
    if norm > 0.25:
        squarings = int(np.ceil(np.log2(norm / 0.25)))
        a = a / (2.0**squarings)
    n = a.shape[0]
    term = np.eye(n, dtype=complex)
    out = np.eye(n, dtype=complex)
    for k in range(1, 24):
        term = term @ a / k
        out += term
        if np.linalg.norm(term, np.inf) < 1e-20 * max(1.0, np.linalg.norm(out, np.inf)):
            break
    for _ in range(squarings):
        out = out @ out
    return out


def expm_skew(h_times_i: np.ndarray) -> np.ndarray:
    """exp(i*H) for Hermitian H, via the eigendecomposition (exactly unitary)."""
    w, v = np.linalg.eigh(h_times_i)
    return (v * np.exp(1j * w)) @ v.conj().T
