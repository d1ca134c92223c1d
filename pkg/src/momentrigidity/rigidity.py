"""
Prepend regions, indeterminate extensions, single-entry perturbation
intervals and the rigidity classification.

Prepending ``(c_{-2}, c_{-1})`` to ``h`` keeps a moment sequence iff

    c_{-2} >= A c_{-1}**2 + 2 B c_{-1} + C

with ``A = sum P_k(0)**2``, ``B = sum P_k(0) Q_k(0)``, ``C = sum Q_k(0)**2``.
Truncating the sums at ``K`` terms gives exactly the Schur complement
condition of the prepended Hankel block of order ``K + 1``, which is how
:func:`prepend_region` computes it.  The ``P/Q`` route lives in
:func:`momentrigidity.orthopoly.abcd_derivatives`; the two must agree.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .core import Kind, MomentSequence, as_rat, desymmetrize, perturb_entry, rat_str, symmetrize
from .determinacy import DiagParams, IndexWindow, index_estimate, stieltjes_index_estimate
from .errors import ConstructionError, DegenerateError, DomainError, KindError, NotAMomentPrefixError, TruncationError
from .hankel import PsdStatus, hankel_matrix, max_order, psd_prefix
from .orthopoly import zero_data

TRUNCATED_BOUNDARY = "truncated_boundary"


def _solve(a: List[List[Fraction]], rhs: List[List[Fraction]]) -> List[List[Fraction]]:
    """Solve ``a x = b`` for several right-hand sides (columns of ``rhs``), exactly."""
    n = len(a)
    m = len(rhs)
    aug = [list(a[i]) + [rhs[j][i] for j in range(m)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise DegenerateError("singular Hankel block", rank=col)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / p
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [[aug[i][n + j] / aug[i][i] for i in range(n)] for j in range(m)]


@dataclass(frozen=True)
class PrependRegion:
    """Truncated feasible set ``c_{-2} >= A c_{-1}**2 + 2 B c_{-1} + C``."""

    A: Fraction
    B: Fraction
    C: Fraction
    K: int
    vertex_c1: Fraction
    vertex_c2: Fraction
    rho0: Fraction
    caveats: Tuple[str, ...] = (TRUNCATED_BOUNDARY,)

    def bound(self, c_m1) -> Fraction:
        t = as_rat(c_m1)
        return self.A * t * t + 2 * self.B * t + self.C

    def feasible(self, c_m1, c_m2) -> bool:
        return as_rat(c_m2) >= self.bound(c_m1)

    def to_dict(self) -> dict:
        return {
            "A": rat_str(self.A),
            "B": rat_str(self.B),
            "C": rat_str(self.C),
            "K": self.K,
            "vertex": [rat_str(self.vertex_c1), rat_str(self.vertex_c2)],
            "rho0": rat_str(self.rho0),
            "caveats": list(self.caveats),
        }


def prepend_region(h, K: int) -> PrependRegion:
    """Truncated prepend region of ``h`` with ``K`` terms.

    Parameters
    ----------
    h : MomentSequence or sequence of rationals
        Needs ``2K - 1`` entries and a positive definite Hankel block of
        order ``K``.
    K : int
        Number of orthonormal polynomials in the truncated sums.

    Raises
    ------
    DegenerateError
        Finite-support prefix (singular Hankel block).
    NotAMomentPrefixError
        The Hankel block is not PSD.
    """
    if K < 1:
        raise DomainError("K must be at least 1")
    c = h.entries if isinstance(h, MomentSequence) else tuple(as_rat(v) for v in h)
    if len(c) < 2 * K - 1:
        raise TruncationError(f"region with K={K} needs {2 * K - 1} entries, have {len(c)}")
    verdict = psd_prefix(c, K)
    if verdict.status is PsdStatus.NOT_PSD:
        raise NotAMomentPrefixError("Hankel block is not PSD", verdict.witness_order)
    if verdict.status is PsdStatus.PSD_SINGULAR:
        raise DegenerateError("Hankel block is singular: finite support", rank=verdict.rank)
    H = hankel_matrix(c, K)
    e0 = [Fraction(1)] + [Fraction(0)] * (K - 1)
    w = [Fraction(0)] + list(c[: K - 1])
    x, y = _solve(H, [e0, w])
    A = x[0]
    B = y[0]
    C = sum(wi * yi for wi, yi in zip(w, y))
    return PrependRegion(A, B, C, K, -B / A, C - B * B / A, 1 / A)


class Placement(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY_AT_TRUNCATION = "BoundaryAtTruncation"


def prepend(h: MomentSequence, c_m1, c_m2, K: int, rel_margin=Fraction(1, 2 ** 20),
            kind: Optional[Kind] = None, region: Optional[PrependRegion] = None):
    """Return ``(c_{-2}, c_{-1}, c_0, ...)`` and its placement in the region.

    ``Interior`` needs a slack above ``rel_margin * |bound|`` and a positive
    definite Hankel block at the full available order.  Anything else inside
    the truncated region is ``BoundaryAtTruncation``; such a prefix may fail
    PSD at orders above ``K + 1`` because the truncated bound lies below the
    true one.

    Raises
    ------
    NotAMomentPrefixError
        Below the truncated bound.
    KindError
        A Stieltjes result was requested; prepending an arbitrary
        ``c_{-1}`` only yields a Hamburger sequence.
    """
    if kind is not None and Kind(kind) is not Kind.HAMBURGER:
        raise KindError("prepend produces Hamburger sequences; use stieltjes_extend")
    if not isinstance(h, MomentSequence):
        h = MomentSequence(tuple(h))
    c_m1, c_m2 = as_rat(c_m1), as_rat(c_m2)
    rel_margin = as_rat(rel_margin)
    if region is None:
        region = prepend_region(h, K)
    bound = region.bound(c_m1)
    out = MomentSequence((c_m2, c_m1) + h.entries, Kind.HAMBURGER,
                         f"prepend({h.name})" if h.name else None)
    slack = c_m2 - bound
    if slack < 0:
        witness = psd_prefix(out, K + 1)
        raise NotAMomentPrefixError(
            f"c_-2 = {rat_str(c_m2)} lies below the truncated bound {rat_str(bound)}",
            witness.witness_order,
        )
    if slack > rel_margin * abs(bound) and psd_prefix(out, max_order(out)).is_pd:
        return out, Placement.INTERIOR
    return out, Placement.BOUNDARY_AT_TRUNCATION


def zeroth_moment_slack(h, K: int) -> Fraction:
    """Truncated ``rho(0) = 1 / sum_{k<K} P_k(0)**2``, nonincreasing in ``K``."""
    return 1 / sum(zero_data(h, K).P2)


@dataclass(frozen=True)
class ExtensionStep:
    step: int
    c_m1: Fraction
    c_m2: Fraction
    bound: Fraction
    region: PrependRegion


def extend_indeterminate(h: MomentSequence, n: int, odd_values, margins, K: int,
                         rel_margin=Fraction(1, 2 ** 20), full_output: bool = False):
    """Prepend ``n`` pairs, each strictly inside the recomputed region.

    Step ``i`` uses ``c_{-1} = odd_values[i]`` and ``c_{-2} = bound + margins[i]``
    with the region of the sequence produced by the previous step, so the
    bounds depend on every earlier choice.

    Returns
    -------
    MomentSequence, or ``(MomentSequence, list of ExtensionStep)`` if
    ``full_output``.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    odd_values = [as_rat(v) for v in odd_values]
    margins = [as_rat(v) for v in margins]
    if len(odd_values) != n or len(margins) != n:
        raise DomainError("odd_values and margins need exactly n entries")
    if any(m < 0 for m in margins):
        raise DomainError("margins must be nonnegative")
    cur = h if isinstance(h, MomentSequence) else MomentSequence(tuple(h))
    steps = []
    for i in range(n):
        try:
            region = prepend_region(cur, K)
            bound = region.bound(odd_values[i])
            cur, placement = prepend(cur, odd_values[i], bound + margins[i], K, rel_margin, region=region)
        except (NotAMomentPrefixError, DegenerateError) as exc:
            raise ConstructionError(f"step {i}: {exc}", step=i) from exc
        if placement is not Placement.INTERIOR:
            raise ConstructionError(f"step {i} landed on the truncated boundary", step=i)
        steps.append(ExtensionStep(i, odd_values[i], bound + margins[i], bound, region))
    return (cur, steps) if full_output else cur


def stieltjes_extend(s: MomentSequence, n: int, margins, K: int, rel_margin=Fraction(1, 2 ** 20)):
    """Stieltjes version: extend ``symmetrize(s)`` with zero odd entries."""
    if s.kind is not Kind.STIELTJES:
        raise KindError("stieltjes_extend expects a Stieltjes sequence")
    if n == 0:
        return s
    ext = extend_indeterminate(symmetrize(s), n, [0] * n, margins, K, rel_margin)
    out = desymmetrize(ext)
    assert len(out) == len(s) + n
    return out


@dataclass(frozen=True)
class PerturbInterval:
    """Feasible ``gamma`` for ``c_m -> c_m + gamma`` at a fixed Hankel order.

    ``lo`` and ``hi`` are feasible rationals (or infinite); the true
    endpoints lie in ``lo_bracket`` / ``hi_bracket``, each of width at most
    ``certified_width_bound``.
    """

    m: int
    order: int
    lo: Union[Fraction, float]
    hi: Union[Fraction, float]
    lo_bracket: Optional[Tuple[Fraction, Fraction]] = None
    hi_bracket: Optional[Tuple[Fraction, Fraction]] = None
    certified_width_bound: Fraction = Fraction(0)

    def contains(self, gamma) -> bool:
        g = as_rat(gamma)
        return (self.lo == float("-inf") or self.lo <= g) and (self.hi == float("inf") or g <= self.hi)

    def to_dict(self) -> dict:
        def end(v, inf):
            return inf if v in (float("inf"), float("-inf")) else rat_str(v)

        out = {"m": self.m, "order": self.order, "lo": end(self.lo, "-inf"), "hi": end(self.hi, "+inf")}
        if self.lo_bracket:
            out["lo_bracket"] = [rat_str(v) for v in self.lo_bracket]
        if self.hi_bracket:
            out["hi_bracket"] = [rat_str(v) for v in self.hi_bracket]
        return out


def _feasible_fn(h: MomentSequence, N: int):
    shifted_order = N if len(h) >= 2 * N else N - 1
    stieltjes = h.kind is Kind.STIELTJES

    def feasible(seq) -> bool:
        if psd_prefix(seq, N).status is PsdStatus.NOT_PSD:
            return False
        if stieltjes and shifted_order >= 1:
            return psd_prefix(seq.entries[1:], shifted_order).status is not PsdStatus.NOT_PSD
        return True

    return feasible


def perturb_interval(h: MomentSequence, m: int, N: int, tol=Fraction(1, 2 ** 40)) -> PerturbInterval:
    """Interval of ``gamma`` keeping ``perturb_entry(h, m, gamma)`` feasible at order ``N``.

    Each endpoint is bracketed by doubling from 1 and then bisected
    dyadically to width ``tol``.  An endpoint is infinite exactly when the
    direction matrix (Hankel block of the unit sequence at ``m``, plus its
    shift for Stieltjes kind) is PSD.
    """
    if not isinstance(h, MomentSequence):
        h = MomentSequence(tuple(h))
    if N < 1 or not 0 <= m < 2 * N - 1:
        raise DomainError(f"need 0 <= m < 2N - 1, got m={m}, N={N}")
    if len(h) < 2 * N - 1:
        raise TruncationError(f"order {N} needs {2 * N - 1} entries")
    tol = as_rat(tol)
    feasible = _feasible_fn(h, N)
    if not feasible(h):
        raise NotAMomentPrefixError("unperturbed prefix is infeasible", psd_prefix(h, N).witness_order)

    def ok(gamma):
        return feasible(perturb_entry(h, m, gamma))

    def endpoint(sign):
        unit = MomentSequence(tuple(Fraction(sign) if i == m else Fraction(0) for i in range(len(h))), h.kind)
        if feasible(unit):
            return (float("inf") * sign), None
        good, step = Fraction(0), Fraction(1)
        while ok(sign * step):
            good, step = sign * step, step * 2
        bad = sign * step
        while abs(bad - good) > tol:
            mid = (good + bad) / 2
            if ok(mid):
                good = mid
            else:
                bad = mid
        return good, tuple(sorted((good, bad)))

    lo, lo_br = endpoint(-1)
    hi, hi_br = endpoint(1)
    widths = [br[1] - br[0] for br in (lo_br, hi_br) if br is not None]
    return PerturbInterval(m, N, lo, hi, lo_br, hi_br, max(widths, default=Fraction(0)))


class Classification(enum.Enum):
    RIGID_ALL_BUT_ZEROTH = "RigidAllButZeroth"
    NONRIGID_UP_TO = "NonrigidUpTo"
    INDETERMINATE_FREE_VARIATION = "IndeterminateFreeVariation"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class RigidityReport:
    classification: Classification
    index_window: IndexWindow
    frozen_prefix_bound: Optional[int]
    intervals: Tuple[PerturbInterval, ...] = ()
    nonrigid_order: Optional[int] = None
    K: Optional[int] = None

    @property
    def label(self) -> str:
        if self.classification is Classification.NONRIGID_UP_TO:
            return f"NonrigidUpTo({self.nonrigid_order})"
        return self.classification.value

    def to_dict(self) -> dict:
        return {
            "classification": self.label,
            "index_window": self.index_window.to_list(),
            "frozen_prefix_bound": self.frozen_prefix_bound,
            "intervals": [iv.to_dict() for iv in self.intervals],
        }


def rigidity_report(h: MomentSequence, nmax: int, params: Optional[DiagParams] = None,
                    K: Optional[int] = None, order: Optional[int] = None) -> RigidityReport:
    """Classify ``h`` from index-of-determinacy evidence and perturbation intervals.

    Parameters
    ----------
    h : MomentSequence
        Hamburger or Stieltjes; the Stieltjes route trims by one entry per
        level and freezes ``n - 1`` entries instead of ``2n - 1``.
    nmax : int
        Deepest trim level examined.
    K : int, optional
        Truncation; defaults to the largest one the length allows, capped at 16.
    order : int, optional
        Hankel order of the perturbation sweep (default ``min(3, max order)``);
        ``0`` skips the sweep.
    """
    stieltjes = h.kind is Kind.STIELTJES
    if K is None:
        room = len(h) - nmax - 1 if stieltjes else (len(h) - 2 * nmax - 1) // 2
        K = min(16, room)
        if K < 1:
            raise TruncationError(f"sequence of length {len(h)} too short for nmax={nmax}")
    if stieltjes:
        window = stieltjes_index_estimate(h, nmax, K, params)
    else:
        window = index_estimate(h, nmax, K, params)

    if order is None:
        order = min(3, max_order(h))
    intervals = tuple(perturb_interval(h, m, order) for m in range(2 * order - 1)) if order else ()

    nonrigid = None
    frozen = None
    if all(v.finite_support for v in window.verdicts):
        cls = Classification.RIGID_ALL_BUT_ZEROTH
        frozen = len(h) - 1
    elif window.upper == -1:
        cls = Classification.INDETERMINATE_FREE_VARIATION
    elif window.upper is not None:
        cls = Classification.NONRIGID_UP_TO
        nonrigid = window.upper + 1
    else:
        cls = Classification.INCONCLUSIVE
    if cls is not Classification.RIGID_ALL_BUT_ZEROTH and window.lower >= 1:
        frozen = window.lower - 1 if stieltjes else 2 * window.lower - 1
    return RigidityReport(cls, window, frozen, intervals, nonrigid, K)
