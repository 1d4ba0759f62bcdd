"""
Dense symmetric eigendecomposition with main-eigenvalue bookkeeping.

The decomposition itself is LAPACK's tridiagonal-reduction driver (through
``numpy.linalg.eigh``); everything on top of it is checked here: residuals,
orthonormality, clustering of numerically equal eigenvalues, and the main
angle of each distinct eigenvalue with respect to the all-ones vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .errors import DomainError, NumericalError, SingularShiftError


@dataclass(frozen=True)
class Tolerances:
    eig_tol: float = 1e-10
    group_tol: float = 1e-7
    main_tol: float = 1e-7
    qec_match_tol: float = 1e-7

    def __post_init__(self):
        for name in ("eig_tol", "group_tol", "main_tol", "qec_match_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.qec_match_tol < self.eig_tol:
            raise ValueError("qec_match_tol must be >= eig_tol")


DEFAULT_TOLS = Tolerances()


@dataclass(frozen=True)
class EigenGroup:
    """One distinct eigenvalue: its value, multiplicity and main angle."""

    value: float
    multiplicity: int
    main_angle: float
    is_main: bool
    indices: tuple  # positions in Spectrum.eigenvalues


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray  # descending
    eigenvectors: np.ndarray  # columns aligned with eigenvalues
    groups: tuple = field(default=())

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def distinct(self) -> list[float]:
        return [g.value for g in self.groups]

    def group_of(self, theta: float, group_tol: float) -> Optional[EigenGroup]:
        best = None
        for g in self.groups:
            if abs(g.value - theta) <= group_tol and (best is None or abs(g.value - theta) < abs(best.value - theta)):
                best = g
        return best

    def eigenspace(self, group: EigenGroup) -> np.ndarray:
        return self.eigenvectors[:, list(group.indices)]

    def delta(self, k: int) -> float:
        """k-th largest eigenvalue, 1-based."""
        return float(self.eigenvalues[k - 1])


def check_symmetric(M) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix is not exactly symmetric")
    return M


def eigen_sym(M, eig_tol: float = DEFAULT_TOLS.eig_tol) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix, eigenvalues descending.

    Raises NumericalError if the solver fails or if the residual
    ``max_k |M u_k - d_k u_k|`` or the orthonormality defect exceeds
    ``eig_tol * ||M||`` (with ||M|| taken as at least 1).
    """
    M = check_symmetric(M)
    try:
        w, U = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver did not converge: {exc}") from exc
    order = np.argsort(-w, kind="stable")
    w, U = w[order], U[:, order]
    # fix the sign of each eigenvector so identical input gives identical output
    for k in range(U.shape[1]):
        j = int(np.argmax(np.abs(U[:, k])))
        if U[j, k] < 0:
            U[:, k] = -U[:, k]
    scale = max(1.0, float(np.linalg.norm(M, 2))) if M.size else 1.0
    residual = float(np.max(np.linalg.norm(M @ U - U * w, axis=0))) if M.size else 0.0
    ortho = float(np.max(np.abs(U.T @ U - np.eye(len(w))))) if M.size else 0.0
    worst = max(residual / scale, ortho)
    if worst > eig_tol:
        raise NumericalError("eigendecomposition failed its accuracy check", worst)
    return Spectrum(w, U)


def group_eigenvalues(spec: Spectrum, group_tol: float = DEFAULT_TOLS.group_tol,
                      main_tol: float = DEFAULT_TOLS.main_tol) -> Spectrum:
    """Cluster eigenvalues closer than ``group_tol`` and attach main angles.

    Clusters are formed by single linkage along the sorted eigenvalues; each
    distinct eigenvalue is the cluster mean. The main angle is the norm of
    the projection of 1/sqrt(n) onto the cluster's eigenspace.
    """
    w, U = spec.eigenvalues, spec.eigenvectors
    n = len(w)
    ones = np.full(n, 1.0 / math.sqrt(n))
    coeffs = U.T @ ones
    groups = []
    start = 0
    for k in range(1, n + 1):
        if k == n or w[k - 1] - w[k] > group_tol:
            idx = tuple(range(start, k))
            beta = float(np.linalg.norm(coeffs[start:k]))
            groups.append(EigenGroup(
                value=float(np.mean(w[start:k])),
                multiplicity=len(idx),
                main_angle=min(beta, 1.0),
                is_main=beta > main_tol,
                indices=idx,
            ))
            start = k
    return replace(spec, groups=tuple(groups))


def spectrum(M, tols: Tolerances = DEFAULT_TOLS) -> Spectrum:
    """eigen_sym followed by group_eigenvalues."""
    return group_eigenvalues(eigen_sym(M, tols.eig_tol), tols.group_tol, tols.main_tol)


def kernel_vector_orthogonal_to_ones(spec: Spectrum, theta: float,
                                     tols: Tolerances = DEFAULT_TOLS) -> Optional[np.ndarray]:
    """Unit vector in the theta-eigenspace orthogonal to 1, or None if none exists.

    Raises DomainError if theta is not a distinct eigenvalue within group_tol.
    """
    g = spec.group_of(theta, tols.group_tol)
    if g is None:
        raise DomainError(f"{theta!r} is not an eigenvalue (group_tol={tols.group_tol})")
    if spec.n == 1:
        return None
    E = spec.eigenspace(g)
    if g.multiplicity == 1:
        if g.main_angle > tols.main_tol:
            return None
        return E[:, 0].copy()
    # c = E^T 1; any unit v with <c, v> = 0 gives E v orthogonal to 1
    c = E.T @ np.ones(spec.n)
    _, _, Vt = np.linalg.svd(c[None, :])
    x = E @ Vt[-1]
    return x / np.linalg.norm(x)


def has_kernel_vector_orthogonal_to_ones(A, theta: float, tols: Tolerances = DEFAULT_TOLS,
                                         spec: Optional[Spectrum] = None):
    """Does ker(A - theta I) meet the hyperplane orthogonal to 1?

    Returns ``(flag, witness)`` where witness is a unit vector or None.
    """
    if spec is None:
        spec = spectrum(A, tols)
    x = kernel_vector_orthogonal_to_ones(spec, theta, tols)
    return x is not None, x


def solve_shifted(A, lam: float, b, tols: Tolerances = DEFAULT_TOLS,
                  spec: Optional[Spectrum] = None) -> np.ndarray:
    """Solve (A + (2 + lam) I) x = b.

    Raises SingularShiftError when -2 - lam lies within group_tol of an
    eigenvalue of A.
    """
    A = check_symmetric(A)
    b = np.asarray(b, dtype=float)
    if spec is None:
        spec = eigen_sym(A, tols.eig_tol)
    shift = 2.0 + lam
    gap = float(np.min(np.abs(spec.eigenvalues + shift)))
    if gap <= tols.group_tol:
        raise SingularShiftError(f"-2 - lam = {-shift!r} is within {gap:.2e} of an eigenvalue")
    S = A + shift * np.eye(len(A))
    x = np.linalg.solve(S, b)
    bnorm = max(float(np.linalg.norm(b)), np.finfo(float).tiny)
    for _ in range(3):
        r = b - S @ x
        if np.linalg.norm(r) <= tols.eig_tol * bnorm:
            return x
        x = x + np.linalg.solve(S, r)
    r = float(np.linalg.norm(b - S @ x))
    if r > tols.eig_tol * bnorm:
        raise NumericalError("shifted solve did not meet its residual bound", r / bnorm)
    return x
