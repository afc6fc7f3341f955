"""Dense complex matrix kernel.

Every other module funnels its numerics through the handful of operations
here, so the tolerance regime is defined in one place: ``Tolerance.eq_tol``
bounds residuals of equality assertions and ``Tolerance.psd_margin`` is the
minimum-eigenvalue bound below which positivity is not trusted.

All operations are pure functions of their inputs and deterministic: the
same input bits produce the same output bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotHermitian,
    RankDeficient,
    SingularSystem,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "Tolerance",
    "as_complex_matrix",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "inverse_sqrt_hpd",
    "max_abs",
    "orthonormal_column_basis",
    "singular_values",
    "solve_right",
]


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerance regime threaded through all checks.

    eq_tol: residual bound for equality assertions.
    psd_margin: minimum-eigenvalue bound for strict positivity.
    """

    eq_tol: float = 1e-9
    psd_margin: float = 1e-10

    def __post_init__(self) -> None:
        if not 0.0 < self.psd_margin < self.eq_tol < 1.0:
            raise ValueError(
                "tolerances must satisfy 0 < psd_margin < eq_tol < 1, got "
                f"psd_margin={self.psd_margin!r}, eq_tol={self.eq_tol!r}"
            )


DEFAULT_TOLERANCE = Tolerance()


def as_complex_matrix(data, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Validate and freeze a 2-d complex matrix.

    Ensures a two-dimensional complex128 array with at least one row and
    column and no NaN/Inf entries.  The returned array is marked read-only
    so values can be shared freely.
    """
    m = np.array(data, dtype=np.complex128, order="C")
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatch(f"matrix must be at least 1x1, got {m.shape}")
    if rows is not None and m.shape[0] != rows:
        raise DimensionMismatch(f"expected {rows} rows, got {m.shape[0]}")
    if cols is not None and m.shape[1] != cols:
        raise DimensionMismatch(f"expected {cols} columns, got {m.shape[1]}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise DimensionMismatch("matrix entries must be finite")
    m.setflags(write=False)
    return m


def max_abs(m: np.ndarray) -> float:
    """Entrywise max-norm."""
    return float(np.abs(m).max()) if m.size else 0.0


def _require_square(m: np.ndarray, what: str) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"{what} must be square, got shape {m.shape}")


def hermitian_eigenvalues(m: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix.

    The input is checked against ``m == m*`` up to ``eq_tol`` and then
    symmetrized as (m + m*)/2 before the eigensolve, so representation
    noise in near-Hermitian products does not leak into the spectrum.
    """
    return hermitian_eigensystem(m, tol)[0]


def hermitian_eigensystem(
    m: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors of a Hermitian matrix."""
    m = np.asarray(m, dtype=np.complex128)
    _require_square(m, "hermitian matrix")
    defect = max_abs(m - m.conj().T)
    if defect > tol.eq_tol:
        raise NotHermitian(f"matrix deviates from Hermitian by {defect:.3e} > {tol.eq_tol:.3e}")
    sym = 0.5 * (m + m.conj().T)
    try:
        values, vectors = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(f"eigendecomposition failed: {exc}") from exc
    return values, vectors


def singular_values(m: np.ndarray) -> np.ndarray:
    """Descending singular values; count = min(rows, cols)."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got ndim={m.ndim}")
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(f"SVD failed: {exc}") from exc


def solve_right(
    a: np.ndarray, b: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray:
    """Solve X @ b = a for X, with b square and well conditioned.

    Rejects systems whose condition number exceeds 1/psd_margin and
    verifies the residual ``max|X b - a| <= eq_tol * max|a|`` before
    returning.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    _require_square(b, "right-hand factor")
    if a.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"incompatible shapes {a.shape} and {b.shape}")
    sv = singular_values(b)
    if sv[-1] <= 0.0 or sv[0] / sv[-1] > 1.0 / tol.psd_margin:
        raise SingularSystem(f"condition number exceeds {1.0 / tol.psd_margin:.3e}")
    try:
        x = np.linalg.solve(b.T, a.T).T
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(f"solve failed: {exc}") from exc
    residual = max_abs(x @ b - a)
    if residual > tol.eq_tol * max(max_abs(a), 1.0):
        raise SingularSystem(f"solution residual {residual:.3e} exceeds tolerance")
    return x


def orthonormal_column_basis(
    m: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray:
    """Orthonormal basis of the column span, via QR.

    Columns are normalized so the triangular factor has positive real
    diagonal; a single unit column is therefore returned unchanged.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got ndim={m.ndim}")
    if m.shape[1] > m.shape[0]:
        raise RankDeficient(f"more columns than rows: {m.shape}")
    sv = singular_values(m)
    if sv[-1] <= tol.psd_margin:
        raise RankDeficient(f"smallest singular value {sv[-1]:.3e} <= {tol.psd_margin:.3e}")
    q, r = np.linalg.qr(m, mode="reduced")
    diag = np.diagonal(r).copy()
    phases = np.where(np.abs(diag) > 0.0, diag / np.abs(diag), 1.0)
    return q * np.conj(phases)[np.newaxis, :]


def inverse_sqrt_hpd(m: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE) -> np.ndarray:
    """Inverse square root of a Hermitian positive-definite matrix."""
    values, vectors = hermitian_eigensystem(m, tol)
    if values[0] <= tol.psd_margin:
        raise RankDeficient(f"matrix not positive definite within margin: {values[0]:.3e}")
    return (vectors * (values ** -0.5)[np.newaxis, :]) @ vectors.conj().T
