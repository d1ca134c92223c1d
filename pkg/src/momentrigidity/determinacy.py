"""
Finite-truncation diagnostics for determinacy and the index of determinacy.

Nothing here is a theorem about the infinite sequence.  A Hamburger problem
is indeterminate exactly when both ``sum P_k(0)**2`` and ``sum Q_k(0)**2``
converge; from ``K`` terms we can only grade the evidence, and ``UNKNOWN``
is a legitimate, common answer.

Two tail models are tested on the nonzero terms of each series:

* geometric: every trailing ratio ``t_{k'}/t_k`` is below ``ratio_threshold``
  and the geometric tail bound is below ``tol``;
* power law: every trailing local decay exponent
  ``log(t_k / t_{k'}) / log((k'+1)/(k+1))`` is at least ``converge_exponent``
  (summable, ``> 1``).

The series is declared diverging when its partial sum exceeds
``divergence_factor`` times its first nonzero term, when the trailing terms
do not decrease, or when every trailing exponent is at most
``diverge_exponent`` and the exponents are not climbing across the window
(a settled non-summable power law such as ``k**-0.5``).
"""

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Optional, Tuple

import mpmath

from .core import DEFAULT_PRECISION, Kind, MomentSequence, as_rat, convex_combine, entries_of, symmetrize, to_real, trim
from .errors import DegenerateError, DomainError, KindError, TruncationError
from .hankel import MinorTable
from .orthopoly import zero_data


@dataclass(frozen=True)
class DiagParams:
    """Thresholds of the series diagnostics (frozen after a K = 24 sweep)."""

    window: int = 4
    ratio_threshold: float = 0.9
    tol: Fraction = Fraction(1, 2 ** 30)
    divergence_factor: int = 10 ** 6
    converge_exponent: float = 1.5
    diverge_exponent: float = 1.0
    precision: int = DEFAULT_PRECISION


class SeriesVerdict(enum.Enum):
    CONVERGING = "converging"
    DIVERGING = "diverging"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SeriesDiag:
    partial_sums: Tuple[Fraction, ...]
    tail_ratios: Tuple[mpmath.mpf, ...]
    decay_exponents: Tuple[mpmath.mpf, ...]
    verdict: SeriesVerdict
    window: int
    ratio_threshold: float
    tail_bound: Optional[mpmath.mpf] = None
    reason: str = ""

    @property
    def last_ratio(self):
        return self.tail_ratios[-1] if self.tail_ratios else None


def series_diag(terms, params: Optional[DiagParams] = None, **overrides) -> SeriesDiag:
    """Grade the convergence of ``sum terms`` from a finite prefix.

    Parameters
    ----------
    terms : sequence of rationals
        Nonnegative terms; zeros are skipped when forming ratios.
    params : DiagParams, optional
        Thresholds; keyword ``overrides`` replace individual fields.

    Returns
    -------
    SeriesDiag
    """
    params = replace(params or DiagParams(), **overrides)
    if params.window < 2:
        raise DomainError("window must be at least 2")
    terms = [as_rat(t) for t in terms]
    if any(t < 0 for t in terms):
        raise DomainError("series terms must be nonnegative")

    partial = []
    acc = Fraction(0)
    for t in terms:
        acc += t
        partial.append(acc)

    prec = params.precision
    nonzero = [(k, t) for k, t in enumerate(terms) if t != 0]
    ratios, exponents = [], []
    with mpmath.workprec(prec):
        for (k1, t1), (k2, t2) in zip(nonzero, nonzero[1:]):
            r = to_real(t2 / t1, prec)
            ratios.append(r)
            exponents.append(-mpmath.log(r) / mpmath.log(to_real(Fraction(k2 + 1, k1 + 1), prec)))

    def result(verdict, reason, bound=None):
        return SeriesDiag(tuple(partial), tuple(ratios), tuple(exponents), verdict,
                          params.window, params.ratio_threshold, bound, reason)

    if nonzero and partial[-1] > params.divergence_factor * nonzero[0][1]:
        return result(SeriesVerdict.DIVERGING, "partial sum above divergence bound")
    if len(ratios) < params.window:
        return result(SeriesVerdict.UNKNOWN, "too few nonzero terms")

    w_ratios = ratios[-params.window:]
    w_exps = exponents[-params.window:]
    k_last, t_last = nonzero[-1]
    with mpmath.workprec(prec):
        tol = to_real(params.tol, prec)
        if all(r >= 1 - tol for r in w_ratios):
            return result(SeriesVerdict.DIVERGING, "trailing terms do not decrease")
        # an accelerating decay (exponents still climbing) is not evidence of divergence
        steady = w_exps[-1] <= w_exps[0] + tol
        if steady and all(p <= params.diverge_exponent + tol for p in w_exps):
            return result(SeriesVerdict.DIVERGING, "non-summable power-law decay")
        if all(r < params.ratio_threshold for r in w_ratios):
            r = max(w_ratios)
            bound = to_real(t_last, prec) * r / (1 - r)
            if bound < tol:
                return result(SeriesVerdict.CONVERGING, "geometric tail", bound)
        if all(p >= params.converge_exponent for p in w_exps):
            p = min(w_exps)
            bound = to_real(t_last, prec) * (k_last + 1) / (p - 1)
            return result(SeriesVerdict.CONVERGING, "summable power-law tail", bound)
    return result(SeriesVerdict.UNKNOWN, "no tail model fits the window")


class Status(enum.Enum):
    INDETERMINATE_EVIDENCE = "IndeterminateEvidence"
    DETERMINATE_EVIDENCE = "DeterminateEvidence"
    UNKNOWN = "Unknown"


FINITE_SUPPORT = "finite_support"


@dataclass(frozen=True)
class Verdict:
    status: Status
    K: int
    p2: Optional[SeriesDiag] = None
    q2: Optional[SeriesDiag] = None
    flags: Tuple[str, ...] = ()
    rank: Optional[int] = None

    @property
    def finite_support(self) -> bool:
        return FINITE_SUPPORT in self.flags

    def to_dict(self) -> dict:
        def ratio(d):
            if d is None or d.last_ratio is None:
                return None
            return mpmath.nstr(d.last_ratio, 12)

        return {
            "status": self.status.value,
            "K": self.K,
            "p2_tail_ratio": ratio(self.p2),
            "q2_tail_ratio": ratio(self.q2),
            "flags": list(self.flags),
        }


def indeterminacy_diag(h, K: int, params: Optional[DiagParams] = None) -> Verdict:
    """Grade the evidence that ``h`` (read as a Hamburger sequence) is indeterminate.

    A vanishing Hankel minor short-circuits to ``DeterminateEvidence`` with the
    ``finite_support`` flag: a singular Hankel form means a finitely
    supported measure, whose moment sequence is determinate.
    """
    params = params or DiagParams()
    try:
        zd = zero_data(h, K)
    except DegenerateError as exc:
        return Verdict(Status.DETERMINATE_EVIDENCE, K, flags=(FINITE_SUPPORT,), rank=exc.rank)
    dp = series_diag(zd.P2, params)
    dq = series_diag(zd.Q2, params)
    if dp.verdict is SeriesVerdict.CONVERGING and dq.verdict is SeriesVerdict.CONVERGING:
        status = Status.INDETERMINATE_EVIDENCE
    elif SeriesVerdict.DIVERGING in (dp.verdict, dq.verdict):
        status = Status.DETERMINATE_EVIDENCE
    else:
        status = Status.UNKNOWN
    return Verdict(status, K, dp, dq)


@dataclass(frozen=True)
class RatioData:
    """Finite prefixes of the ratios in Hamburger's criterion.

    ``r0[n - 1] = Delta_n^(0) / Delta_{n-1}^(1)`` for ``n = 1..N`` and
    ``rk[k][n - k - 1] = Delta_{n-k}^(k) / Delta_{n-k-1}^(k+1)`` for
    ``n = k+1..N``.  ``ind_0 = 0`` corresponds to ``r0 -> 0`` with positive
    finite limits of the shifted ratios; that limit is reported, not decided.
    """

    r0: Tuple[Fraction, ...]
    rk: Dict[int, Tuple[Fraction, ...]] = field(default_factory=dict)


def ratio_criterion(h, N: int, kmax: int = 0) -> RatioData:
    table = MinorTable(h)
    if 2 * N - 1 > len(entries_of(h)):
        raise TruncationError(f"ratios up to order {N} need {2 * N - 1} entries")

    def ratio(num, den, what):
        if den == 0:
            raise DegenerateError(f"vanishing denominator in {what}", rank=None)
        return num / den

    r0 = tuple(
        ratio(table.minor(n, 0), table.minor(n - 1, 1), f"r_{n}") for n in range(1, N + 1)
    )
    rk = {}
    for k in range(1, kmax + 1):
        rk[k] = tuple(
            ratio(table.minor(n - k, k), table.minor(n - k - 1, k + 1), f"r^({k})_{n}")
            for n in range(k + 1, N + 1)
        )
    return RatioData(r0, rk)


@dataclass(frozen=True)
class IndexWindow:
    """Estimated window ``lower <= ind <= upper`` for the index of determinacy.

    ``lower`` is the largest ``n`` such that every trim level ``m <= n`` shows
    determinate evidence (``-1`` if level 0 does not).  ``upper`` is one less
    than the first level with indeterminate evidence, or ``None`` (unbounded).
    ``upper == -1`` means the sequence itself looks indeterminate.
    """

    lower: int
    upper: Optional[int]
    verdicts: Tuple[Verdict, ...]

    def to_list(self):
        return [self.lower, self.upper]


def _window(verdicts) -> IndexWindow:
    lower = -1
    for v in verdicts:
        if v.status is not Status.DETERMINATE_EVIDENCE:
            break
        lower += 1
    upper = None
    for n, v in enumerate(verdicts):
        if v.status is Status.INDETERMINATE_EVIDENCE:
            upper = n - 1
            break
    return IndexWindow(lower, upper, tuple(verdicts))


def index_estimate(h, nmax: int, K: int, params: Optional[DiagParams] = None) -> IndexWindow:
    """Window for ``ind_0(h)``: runs :func:`indeterminacy_diag` on ``trim(h, 2n)``, ``n <= nmax``.

    The sequence is read as a Hamburger sequence whatever its declared kind.
    """
    if not isinstance(h, MomentSequence):
        h = MomentSequence(tuple(h))
    if len(h) < 2 * nmax + 2 * K + 1:
        raise TruncationError(
            f"index estimate with nmax={nmax}, K={K} needs {2 * nmax + 2 * K + 1} entries"
        )
    verdicts = [indeterminacy_diag(trim(h, 2 * n), K, params) for n in range(nmax + 1)]
    return _window(verdicts)


def stieltjes_index_estimate(s: MomentSequence, nmax: int, K: int,
                             params: Optional[DiagParams] = None) -> IndexWindow:
    """Window for the Stieltjes index ``ind(s)`` via the symmetric correspondence."""
    if s.kind is not Kind.STIELTJES:
        raise KindError("stieltjes_index_estimate expects a Stieltjes sequence")
    if len(s) < nmax + K + 1:
        raise TruncationError(f"Stieltjes index estimate needs {nmax + K + 1} entries")
    verdicts = [indeterminacy_diag(symmetrize(trim(s, n)), K, params) for n in range(nmax + 1)]
    return _window(verdicts)


def index_convexity_check(h: MomentSequence, t: MomentSequence, eta, nmax: int, K: int,
                          params: Optional[DiagParams] = None) -> bool:
    """Diagnostic form of ``ind_0(eta h + (1 - eta) t) <= min(ind_0 h, ind_0 t)``.

    The combination must show indeterminate evidence at every trim level
    where either summand does.
    """
    combo = convex_combine(h, t, eta)
    wh = index_estimate(h, nmax, K, params)
    wt = index_estimate(t, nmax, K, params)
    wc = index_estimate(combo, nmax, K, params)
    for vh, vt, vc in zip(wh.verdicts, wt.verdicts, wc.verdicts):
        either = Status.INDETERMINATE_EVIDENCE in (vh.status, vt.status)
        if either and vc.status is not Status.INDETERMINATE_EVIDENCE:
            return False
    return True
