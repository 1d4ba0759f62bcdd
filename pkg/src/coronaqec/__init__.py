"""Quadratic embedding constants of graphs and corona products."""

from .corona import (
    CoronaQecReport,
    Delta2Report,
    GammaReport,
    PsiProfile,
    QeVerdict,
    classify_case,
    delta2_equality,
    gamma2,
    gamma3,
    psi_eval,
    psi_inverse_largest,
    qe_class,
    qec_corona,
)
from .graphs import Graph, corona, corona_distance_kronecker, distance_matrix, generate
from .qec import QecCertificate, qec_direct, verify_stationarity
from .spectral import Spectrum, Tolerances, eigen_sym, group_eigenvalues, spectrum

__version__ = "0.1.0"
