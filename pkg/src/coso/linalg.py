"""Dense float64 matrix kernels used by every optimizer component.

All operations take and return row-major float64 2-D numpy arrays. The SVD
is computed in full via LAPACK and truncated afterwards, then sign-normalized
so repeated calls on identical input are bitwise identical and the factors
are unique whenever the singular values are distinct.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import QR_DROP_TOL
from .errors import ContractViolation, InputError

MAT_MAGIC = "COSO-MAT v1"


def matrix(data) -> np.ndarray:
    """Validate and return a row-major float64 matrix.

    Raises ContractViolation for anything that is not a non-empty 2-D array,
    InputError if any entry is NaN or infinite.
    """
    a = np.ascontiguousarray(data, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ContractViolation(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise InputError("matrix contains NaN or Inf entries")
    return a


@dataclass(frozen=True)
class TruncatedSVD:
    """Top-r SVD factors: u (m x r, orthonormal), singulars (descending, >= 0),
    v (n x r, orthonormal). Signs follow the largest-magnitude-entry convention
    on the columns of u."""

    u: np.ndarray
    singulars: np.ndarray
    v: np.ndarray


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with explicit dimension checking."""
    a = matrix(a)
    b = matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ContractViolation(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def transpose(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(matrix(a).T)


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def spectral_norm(a: np.ndarray) -> float:
    """Largest singular value."""
    return float(np.linalg.svd(a, compute_uv=False)[0])


def _sign_normalize(u: np.ndarray, v: np.ndarray) -> None:
    # Flip each column pair so the largest-|.| entry of the u column is >= 0.
    for j in range(u.shape[1]):
        i = int(np.argmax(np.abs(u[:, j])))
        if u[i, j] < 0.0:
            u[:, j] = -u[:, j]
            v[:, j] = -v[:, j]


def truncated_svd(a: np.ndarray, r: int) -> TruncatedSVD:
    """Top-r singular factors of a.

    The full decomposition is computed and truncated; with distinct singular
    values the sign convention makes the result unique.
    """
    a = matrix(a)
    if not 1 <= r <= min(a.shape):
        raise ContractViolation(
            f"rank {r} out of range for a {a.shape[0]}x{a.shape[1]} matrix"
        )
    u_full, s_full, vt_full = np.linalg.svd(a, full_matrices=False)
    u = np.ascontiguousarray(u_full[:, :r])
    s = np.ascontiguousarray(s_full[:r])
    v = np.ascontiguousarray(vt_full[:r].T)
    _sign_normalize(u, v)
    return TruncatedSVD(u=u, singulars=s, v=v)


def qr_orthonormalize(a: np.ndarray) -> np.ndarray:
    """Orthonormal basis for the retained column space of a.

    Columns whose residual after the preceding columns falls below
    QR_DROP_TOL (relative to the column norm) are dropped, so rank-deficient
    input shrinks the output width instead of erroring. Signs are fixed so an
    already-orthonormal input is returned unchanged.
    """
    a = matrix(a)
    m, n = a.shape
    if m < n:
        raise ContractViolation(f"need rows >= cols, got {a.shape}")
    cols = a
    while True:
        q, r = np.linalg.qr(cols)
        diag = np.abs(np.diag(r))
        norms = np.linalg.norm(cols, axis=0)
        keep = diag > QR_DROP_TOL * norms
        if keep.all():
            break
        cols = np.ascontiguousarray(cols[:, keep])
        if cols.shape[1] == 0:
            return np.zeros((m, 0))
    signs = np.sign(np.diag(r))
    signs[signs == 0.0] = 1.0
    return np.ascontiguousarray(q * signs)


def save_matrix(a: np.ndarray, path) -> None:
    """Write a in the COSO-MAT v1 checkpoint format: an ASCII header line
    ``COSO-MAT v1 <rows> <cols>`` followed by the row-major little-endian
    float64 payload."""
    a = matrix(a)
    try:
        with open(path, "wb") as fh:
            fh.write(f"{MAT_MAGIC} {a.shape[0]} {a.shape[1]}\n".encode("utf-8"))
            fh.write(a.astype("<f8", copy=False).tobytes(order="C"))
    except OSError as exc:
        raise OSError(f"cannot write matrix checkpoint {path}: {exc}") from exc


def load_matrix(path) -> np.ndarray:
    """Read a COSO-MAT v1 checkpoint written by save_matrix."""
    try:
        with open(path, "rb") as fh:
            header = fh.readline().decode("utf-8").rstrip("\n")
            payload = fh.read()
    except OSError as exc:
        raise OSError(f"cannot read matrix checkpoint {path}: {exc}") from exc
    parts = header.split()
    if len(parts) != 4 or " ".join(parts[:2]) != MAT_MAGIC:
        raise InputError(f"{path}: not a {MAT_MAGIC} file (header {header!r})")
    rows, cols = int(parts[2]), int(parts[3])
    expected = rows * cols * 8
    if len(payload) != expected:
        raise InputError(
            f"{path}: payload is {len(payload)} bytes, expected {expected}"
        )
    flat = np.frombuffer(payload, dtype="<f8")
    return matrix(flat.reshape(rows, cols))
