"""
Direct computation of the quadratic embedding constant.

QEC(D) = max <f, D f> over unit f orthogonal to the all-ones vector. The
feasible set is the unit sphere of the hyperplane 1^perp, so the maximum
is the top eigenvalue of D compressed to an orthonormal basis of that
hyperplane, and no iterative optimisation is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .spectral import DEFAULT_TOLS, check_symmetric, eigen_sym


@dataclass(frozen=True)
class QecCertificate:
    """A maximiser of the constrained Rayleigh quotient.

    ``value`` is the QEC, ``witness`` the unit vector f orthogonal to 1, and
    ``multiplier`` the mu with (D - value) f = (mu / 2) 1.
    """

    value: float
    witness: np.ndarray
    multiplier: float


def ones_complement_basis(n: int) -> np.ndarray:
    """Orthonormal basis of {x : <1, x> = 0} as the columns of an n x (n-1) array.

    Uses the Householder reflector that maps 1/sqrt(n) to the first unit
    vector; its remaining columns span the complement.
    """
    v = np.full(n, 1.0 / math.sqrt(n))
    v[0] -= 1.0
    norm = np.linalg.norm(v)
    if norm == 0.0:  # n == 1
        return np.zeros((1, 0))
    v /= norm
    Q = np.eye(n) - 2.0 * np.outer(v, v)
    return Q[:, 1:]


def qec_direct(D, eig_tol: float = DEFAULT_TOLS.eig_tol) -> QecCertificate:
    D = check_symmetric(D)
    n = len(D)
    if n < 2:
        raise PreconditionError("QEC needs at least 2 vertices")
    Q = ones_complement_basis(n)
    B = Q.T @ D @ Q
    B = (B + B.T) / 2.0
    spec = eigen_sym(B, eig_tol)
    f = Q @ spec.eigenvectors[:, 0]
    f -= f.mean()
    f /= np.linalg.norm(f)
    value = float(f @ D @ f)
    mu = 2.0 * float(np.sum(D @ f)) / n
    return QecCertificate(value, f, mu)


def verify_stationarity(D, cert: QecCertificate) -> float:
    """Max-norm of (D - value) f - (mu / 2) 1."""
    D = np.asarray(D, dtype=float)
    f = cert.witness
    r = D @ f - cert.value * f - 0.5 * cert.multiplier
    return float(np.max(np.abs(r)))


def qec_value(D) -> float:
    return qec_direct(D).value
