"""
Quadratic embedding constant of corona graphs G ⊙ H.

QEC(G ⊙ H) is the largest of three candidates whenever -2 - psi^{-1}(QEC(G))
is not an adjacency eigenvalue of H:

* ``psi^{-1}(QEC(G))``, the largest solution of psi_H(lam) = QEC(G) with
  psi_H(lam) = lam / (1 + lam <1, (A_H + 2 + lam)^{-1} 1>);
* ``gamma2`` = 0 if QEC(G) = 0 or -2 is an eigenvalue of A_H, else absent;
* ``gamma3`` = max(-2 - theta) over eigenvalues theta of A_H whose eigenspace
  contains a nonzero vector orthogonal to 1, else absent.

Absent candidates are represented by None, never by a float infinity.
Every report also carries the value computed directly from the distance
matrix of the corona, so the formula can always be checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import FormulaInapplicableError, PoleError, PreconditionError
from .graphs import Graph, corona, distance_matrix
from .qec import qec_direct, verify_stationarity
from .spectral import DEFAULT_TOLS, Spectrum, Tolerances, kernel_vector_orthogonal_to_ones, spectrum

# |QEC(G)| below this counts as QEC(G) = 0
QEC_ZERO_TOL = 1e-8
POLE_TOL = 1e-12
# candidate roots this close to a pole of psi are rejected
ROOT_POLE_TOL = 1e-9
PSI_ROUNDTRIP_TOL = 1e-9


# ---------------------------------------------------------------------------
# psi_H
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PsiProfile:
    """The spectral data of H that psi_H depends on.

    ``kind == "regular"`` uses only (n, kappa). ``kind == "general"`` uses the
    distinct adjacency eigenvalues ``thetas`` (strictly decreasing) and their
    main angles ``betas``; then <1, (A + 2 + lam)^{-1} 1> equals
    sum_j n beta_j^2 / (theta_j + 2 + lam).
    """

    kind: str
    n: int
    kappa: Optional[int] = None
    thetas: tuple = ()
    betas: tuple = ()

    def __post_init__(self):
        if self.kind == "regular":
            if self.n < 1 or self.kappa is None or not 0 <= self.kappa <= max(self.n - 1, 0):
                raise ValueError(f"invalid regular profile n={self.n}, kappa={self.kappa}")
        elif self.kind == "general":
            if len(self.thetas) != len(self.betas) or not self.thetas:
                raise ValueError("general profile needs matching thetas and betas")
            if any(a <= b for a, b in zip(self.thetas, self.thetas[1:])):
                raise ValueError("thetas must be strictly decreasing")
            if abs(sum(b * b for b in self.betas) - 1.0) > 1e-8:
                raise ValueError("main angles must satisfy sum beta^2 = 1")
        else:
            raise ValueError(f"unknown profile kind {self.kind!r}")

    @classmethod
    def regular(cls, n: int, kappa: int) -> "PsiProfile":
        return cls("regular", n, kappa)

    @classmethod
    def general(cls, thetas: Sequence[float], betas: Sequence[float], n: int) -> "PsiProfile":
        return cls("general", n, None, tuple(float(t) for t in thetas), tuple(float(b) for b in betas))

    @classmethod
    def from_spectrum(cls, spec: Spectrum, kappa: Optional[int] = None,
                      force_general: bool = False) -> "PsiProfile":
        if kappa is not None and not force_general:
            return cls.regular(spec.n, kappa)
        return cls.general([g.value for g in spec.groups], [g.main_angle for g in spec.groups], spec.n)

    def main_terms(self, beta_tol: float = DEFAULT_TOLS.main_tol) -> list[tuple[float, float]]:
        """(theta_j + 2, n beta_j^2) for the main eigenvalues."""
        if self.kind == "regular":
            return [(self.kappa + 2.0, float(self.n))]
        return [(t + 2.0, self.n * b * b) for t, b in zip(self.thetas, self.betas) if b > beta_tol]

    def poles(self) -> list[float]:
        """Values of lam where psi is undefined."""
        if self.kind == "regular":
            return [-(self.kappa + 2.0) / (self.n + 1)]
        return [-a for a, _ in self.main_terms()]


def psi_eval(profile: PsiProfile, lam: float) -> float:
    """psi_H(lam); raises PoleError within 1e-12 of a pole."""
    if profile.kind == "regular":
        n, k = profile.n, profile.kappa
        den = lam * (n + 1) + k + 2
        if abs(den) <= POLE_TOL:
            raise PoleError(f"psi has a pole at lam = {lam!r}")
        return lam * (lam + k + 2) / den
    total = 0.0
    for a, w in profile.main_terms():
        if abs(a + lam) <= POLE_TOL:
            raise PoleError(f"A_H + 2 + lam is singular at lam = {lam!r}")
        total += w / (a + lam)
    den = 1.0 + lam * total
    if abs(den) <= POLE_TOL:
        raise PoleError(f"psi has a pole at lam = {lam!r}")
    return lam / den


def psi_polynomial(profile: PsiProfile, c: float) -> np.ndarray:
    """Coefficients (highest degree first) of the cleared equation psi_H(lam) = c.

    With a_j = theta_j + 2 and w_j = n beta_j^2 over main eigenvalues,
    (lam - c) prod_j (lam + a_j) - c lam sum_j w_j prod_{k != j} (lam + a_k).
    """
    terms = profile.main_terms()
    lin = [np.array([1.0, a]) for a, _ in terms]
    full = np.array([1.0])
    for p in lin:
        full = np.polymul(full, p)
    poly = np.polymul(np.array([1.0, -c]), full)
    for j, (_, w) in enumerate(terms):
        rest = np.array([1.0])
        for k, p in enumerate(lin):
            if k != j:
                rest = np.polymul(rest, p)
        poly = np.polysub(poly, c * w * np.polymul(np.array([1.0, 0.0]), rest))
    return np.trim_zeros(poly, "f")


def _psi_inverse_regular(n: int, kappa: int, c: float) -> float:
    b = (n + 1) * c - (kappa + 2)
    disc = b * b + 4 * (kappa + 2) * c
    assert disc >= 0, f"negative discriminant {disc} for c={c}"
    root = math.sqrt(disc)
    if b >= 0:
        return 0.5 * (b + root)
    # same root, written to avoid cancellation when b < 0
    return -2.0 * (kappa + 2) * c / (b - root) if b - root != 0 else 0.0


def _h(terms, lam):
    # 1 / psi_H(lam) = 1/lam + sum_j w_j / (lam + a_j)
    return 1.0 / lam + sum(w / (lam + a) for a, w in terms)


def _brackets(terms, c):
    """Intervals holding the solutions of h(lam) = 1/c, rightmost first.

    h is strictly decreasing between consecutive points of {0} and {-a_j},
    running from +inf to -inf on each bounded gap, from +inf to 0 right of
    the last point and from 0 to -inf left of the first. So every bounded
    gap holds exactly one solution, the right end holds one when c > 0 and
    the left end one when c < 0.
    """
    points = sorted([0.0] + [-a for a, _ in terms])
    # points closer than ROOT_POLE_TOL are one singularity; keep (min, max)
    clusters = [[points[0], points[0]]]
    for x in points[1:]:
        if x - clusters[-1][1] <= ROOT_POLE_TOL:
            clusters[-1][1] = x
        else:
            clusters.append([x, x])
    target = 1.0 / c
    if c > 0:
        lo, step = clusters[-1][1], 1.0
        while _h(terms, lo + step) >= target:
            step *= 2.0
        yield lo, lo + step
    for k in range(len(clusters) - 1, 0, -1):
        yield clusters[k - 1][1], clusters[k][0]
    if c < 0:
        hi, step = clusters[0][0], 1.0
        while _h(terms, hi - step) <= target:
            step *= 2.0
        yield hi - step, hi


def _solve_in(terms, target, lo, hi):
    # bisect to full precision; h - target goes from + to - on (lo, hi)
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _h(terms, mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def psi_inverse_largest(profile: PsiProfile, c: float) -> float:
    """Largest lam with psi_H(lam) = c, excluding lam with A_H + 2 + lam singular."""
    if profile.kind == "regular":
        return _psi_inverse_regular(profile.n, profile.kappa, c)
    terms = profile.main_terms()
    if c == 0.0 or not math.isfinite(1.0 / c):
        # subnormal c is zero to working precision
        if any(abs(a) <= ROOT_POLE_TOL for a, _ in terms):
            raise FormulaInapplicableError("psi_H(lam) = 0 only at lam = 0, where A_H + 2 + lam is singular")
        return 0.0
    for lo, hi in _brackets(terms, c):
        r = _solve_in(terms, 1.0 / c, lo, hi)
        if r == 0.0 or any(abs(r + a) <= ROOT_POLE_TOL for a, _ in terms):
            continue
        try:
            if abs(psi_eval(profile, r) - c) <= PSI_ROUNDTRIP_TOL * max(1.0, abs(c)):
                return float(r)
        except PoleError:
            continue
    raise FormulaInapplicableError(f"psi_H(lam) = {c!r} has no admissible real root")


# ---------------------------------------------------------------------------
# gamma terms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaReport:
    gamma2: Optional[float]
    gamma2_reason: str  # "qec_zero", "minus2_in_spectrum" or "empty"
    gamma3: Optional[float]
    gamma3_witness_eigenvalue: Optional[float]


def gamma2(qec_G: float, spec_H: Spectrum, tols: Tolerances = DEFAULT_TOLS):
    """(0.0, reason) when lam = 0 is feasible, else (None, "empty")."""
    if abs(qec_G) <= QEC_ZERO_TOL:
        return 0.0, "qec_zero"
    if spec_H.group_of(-2.0, tols.group_tol) is not None:
        return 0.0, "minus2_in_spectrum"
    return None, "empty"


def gamma3(spec_H: Spectrum, tols: Tolerances = DEFAULT_TOLS):
    """(max(-2 - theta), theta) over eigenvalues with an eigenvector orthogonal to 1.

    Returns (None, None) if no eigenspace meets 1^perp, which is always the
    case for a single-vertex H.
    """
    for g in sorted(spec_H.groups, key=lambda g: g.value):
        if kernel_vector_orthogonal_to_ones(spec_H, g.value, tols) is not None:
            return -2.0 - g.value, g.value
    return None, None


def gamma3_regular(spec_H: Spectrum) -> float:
    """-2 - min ev(A_H), valid for regular H on two or more vertices."""
    return -2.0 - float(spec_H.eigenvalues[-1])


def gamma_report(qec_G: float, spec_H: Spectrum, tols: Tolerances = DEFAULT_TOLS) -> GammaReport:
    g2, reason = gamma2(qec_G, spec_H, tols)
    g3, theta = gamma3(spec_H, tols)
    return GammaReport(g2, reason, g3, theta)


def _max_present(*values):
    present = [v for v in values if v is not None]
    return max(present) if present else None


# ---------------------------------------------------------------------------
# case analysis for regular H
# ---------------------------------------------------------------------------

CASE_LABELS = (
    "psi(i)", "psi(ii)", "psi(iii)",
    "zero(i)", "zero(ii)",
    "gamma3(i)", "gamma3(ii)", "gamma3(iii)",
)


def gamma3_threshold(g3: Optional[float], n: int, kappa: int) -> float:
    """The c with psi^{-1}(c) = gamma3, i.e. psi(gamma3) on the increasing branch.

    psi^{-1} never goes below the pole -(kappa + 2) / (n + 1); a gamma3 at or
    below the pole is beaten by psi^{-1} for every c, so the threshold is
    -inf there.
    """
    if g3 is None:
        return -math.inf
    den = g3 * (n + 1) + kappa + 2
    if den <= POLE_TOL:
        return -math.inf
    return (g3 * g3 + g3 * (kappa + 2)) / den


def branch_for(qec_G: float, g3: Optional[float], n: int, kappa: int,
               assumption_ok: bool = True, tols: Tolerances = DEFAULT_TOLS) -> str:
    """Which sufficient condition for the value of QEC(G ⊙ H) holds.

    ``psi(*)``: the value is psi^{-1}(QEC(G)); ``zero(*)``: it is 0;
    ``gamma3(*)``: it is -2 - min ev(A_H). Returns "uncovered" when no
    condition applies.
    """
    t = gamma3_threshold(g3, n, kappa)
    q_pos = qec_G > QEC_ZERO_TOL
    q_zero = abs(qec_G) <= QEC_ZERO_TOL
    q_nonpos = not q_pos
    g3_zero = g3 is not None and abs(g3) <= tols.group_tol
    g3_pos = g3 is not None and g3 > tols.group_tol
    g3_neg = not (g3_zero or g3_pos)

    if assumption_ok:
        if g3_neg and t < qec_G and qec_G < -QEC_ZERO_TOL:
            return "psi(i)"
        if q_pos and not g3_pos:
            return "psi(ii)"
        if g3_pos and qec_G > t:
            return "psi(iii)"
    if q_zero and not g3_pos:
        return "zero(i)"
    if q_nonpos and g3_zero:
        return "zero(ii)"
    if g3_neg and qec_G <= t:
        return "gamma3(i)"
    if g3_pos and q_nonpos:
        return "gamma3(ii)"
    if g3_pos and q_pos and qec_G <= t:
        return "gamma3(iii)"
    return "uncovered"


def predicted_value(label: str, psi_inverse: float, g3: Optional[float]) -> Optional[float]:
    if label.startswith("psi"):
        return psi_inverse
    if label.startswith("zero"):
        return 0.0
    if label.startswith("gamma3"):
        return g3
    return None


# ---------------------------------------------------------------------------
# full report
# ---------------------------------------------------------------------------

@dataclass
class CoronaQecReport:
    G: str
    H: str
    h_order: int
    h_degree: Optional[int]
    qec_G: float
    profile_kind: str
    psi_inverse: Optional[float]  # None when psi_H(lam) = QEC(G) has no admissible root
    gamma: GammaReport
    assumption_ok: bool
    assumption_margin: float
    qec_formula: Optional[float]
    winner: Optional[str]
    qec_direct: float
    stationarity_residual: float
    delta1: float
    delta2: float
    case_label: Optional[str]
    qe_class: bool
    qe_class_direct: bool
    tolerances: Tolerances = field(default=DEFAULT_TOLS)

    @property
    def formula_error(self) -> Optional[float]:
        if self.qec_formula is None:
            return None
        return abs(self.qec_formula - self.qec_direct)


def qec_corona(G: Graph, H: Graph, tols: Tolerances = DEFAULT_TOLS,
               force_general: bool = False) -> CoronaQecReport:
    """Evaluate the corona formula for QEC(G ⊙ H) and check it against the direct value.

    If -2 - psi^{-1}(QEC(G)) is an eigenvalue of A_H (within group_tol) the
    formula does not apply: ``qec_formula`` is None and the direct value
    stands alone. No exception is raised in that case.
    """
    if G.vertex_count < 2 or not G.is_connected():
        raise PreconditionError("G must be connected with at least 2 vertices")
    D_G = distance_matrix(G)
    qec_G = qec_direct(D_G, tols.eig_tol).value

    spec_H = spectrum(H.adjacency(), tols)
    kappa = H.regular_degree()
    profile = PsiProfile.from_spectrum(spec_H, kappa, force_general)
    try:
        psi_inv = psi_inverse_largest(profile, qec_G)
    except FormulaInapplicableError:
        psi_inv = None
    gam = gamma_report(qec_G, spec_H, tols)

    if psi_inv is None:
        margin, assumption_ok = 0.0, False
    else:
        margin = float(np.min(np.abs(spec_H.eigenvalues - (-2.0 - psi_inv))))
        assumption_ok = margin > tols.group_tol

    qec_formula = winner = None
    if assumption_ok:
        candidates = {"psi_inverse": psi_inv, "gamma2": gam.gamma2, "gamma3": gam.gamma3}
        qec_formula = _max_present(*candidates.values())
        winner = max((k for k, v in candidates.items() if v is not None), key=lambda k: candidates[k])

    D = distance_matrix(corona(G, H))
    cert = qec_direct(D, tols.eig_tol)
    w = np.linalg.eigvalsh(D)

    case_label = None
    criterion = direct_qe = cert.value <= QEC_ZERO_TOL
    if kappa is not None:
        case_label = branch_for(qec_G, gam.gamma3, H.vertex_count, kappa, assumption_ok, tols)
        criterion = qec_G <= QEC_ZERO_TOL and spec_H.eigenvalues[-1] >= -2.0 - tols.group_tol

    return CoronaQecReport(
        G=str(G), H=str(H), h_order=H.vertex_count, h_degree=kappa,
        qec_G=qec_G, profile_kind=profile.kind, psi_inverse=psi_inv, gamma=gam,
        assumption_ok=assumption_ok, assumption_margin=margin,
        qec_formula=qec_formula, winner=winner,
        qec_direct=cert.value, stationarity_residual=verify_stationarity(D, cert),
        delta1=float(w[-1]), delta2=float(w[-2]),
        case_label=case_label, qe_class=bool(criterion), qe_class_direct=bool(direct_qe),
        tolerances=tols,
    )


def classify_case(report: CoronaQecReport, n: int, kappa: int) -> str:
    return branch_for(report.qec_G, report.gamma.gamma3, n, kappa,
                      report.assumption_ok, report.tolerances)


# ---------------------------------------------------------------------------
# QE class and the second distance eigenvalue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QeVerdict:
    criterion: Optional[bool]  # None when H is not regular
    direct: bool

    @property
    def agree(self) -> bool:
        return self.criterion is None or self.criterion == self.direct

    def __bool__(self):
        return self.direct if self.criterion is None else self.criterion


def qe_class(G: Graph, H: Graph, tols: Tolerances = DEFAULT_TOLS) -> QeVerdict:
    """Is G ⊙ H in the QE class?

    For regular H the verdict is "QEC(G) <= 0 and min ev(A_H) >= -2"; the
    direct verdict QEC(G ⊙ H) <= 0 is always computed alongside.
    """
    direct = qec_direct(distance_matrix(corona(G, H)), tols.eig_tol).value <= QEC_ZERO_TOL
    criterion = None
    if H.regular_degree() is not None:
        qec_G = qec_direct(distance_matrix(G), tols.eig_tol).value
        min_ev = float(np.linalg.eigvalsh(H.adjacency())[0])
        criterion = qec_G <= QEC_ZERO_TOL and min_ev >= -2.0 - tols.group_tol
    return QeVerdict(criterion, bool(direct))


DELTA2_TOL = 1e-7


@dataclass(frozen=True)
class Delta2Report:
    lhs_holds: bool  # QEC(G ⊙ H) == delta2(D[G ⊙ H])
    rhs_holds: bool  # QEC(G) == delta2(D_G)
    claim1_ok: bool
    claim2_ok: Optional[bool]  # None when rhs does not hold
    qec_corona: float
    delta2_corona: float
    qec_G: float
    delta2_G: float
    claim1_worst: float
    claim2_worst: Optional[float]


def _distance_to_spectrum(values, eigs) -> float:
    eigs = np.asarray(eigs)
    return max((float(np.min(np.abs(eigs - v))) for v in values), default=0.0)


def delta2_equality(G: Graph, H: Graph, tols: Tolerances = DEFAULT_TOLS) -> Delta2Report:
    """Compare QEC with the second largest distance eigenvalue for G and G ⊙ H.

    Also checks that -2 - lam_j (j >= 2, adjacency eigenvalues of H) are
    distance eigenvalues of G ⊙ H, and, when QEC(G) = delta2(D_G), that both
    roots of lam^2 - ((n+1) d2 - kappa - 2) lam - (kappa + 2) d2 are too.
    """
    kappa = H.regular_degree()
    if kappa is None:
        raise PreconditionError("delta2_equality needs a regular H")
    if G.vertex_count < 2 or not G.is_connected():
        raise PreconditionError("G must be connected with at least 2 vertices")
    n = H.vertex_count

    D_G = distance_matrix(G)
    qec_G = qec_direct(D_G, tols.eig_tol).value
    d2_G = float(np.linalg.eigvalsh(D_G)[-2])

    D = distance_matrix(corona(G, H))
    qec_C = qec_direct(D, tols.eig_tol).value
    eigs = np.linalg.eigvalsh(D)
    d2_C = float(eigs[-2])

    lam_H = np.sort(np.linalg.eigvalsh(H.adjacency()))[::-1]
    claim1 = _distance_to_spectrum([-2.0 - x for x in lam_H[1:]], eigs)

    rhs = abs(qec_G - d2_G) <= DELTA2_TOL
    claim2 = None
    if rhs:
        b = (n + 1) * d2_G - kappa - 2
        disc = b * b + 4 * (kappa + 2) * d2_G
        roots = [0.5 * (b + s * math.sqrt(max(disc, 0.0))) for s in (1, -1)]
        claim2 = _distance_to_spectrum(roots, eigs)

    return Delta2Report(
        lhs_holds=abs(qec_C - d2_C) <= DELTA2_TOL,
        rhs_holds=rhs,
        claim1_ok=claim1 <= DELTA2_TOL,
        claim2_ok=None if claim2 is None else claim2 <= DELTA2_TOL,
        qec_corona=qec_C, delta2_corona=d2_C, qec_G=qec_G, delta2_G=d2_G,
        claim1_worst=claim1, claim2_worst=claim2,
    )
