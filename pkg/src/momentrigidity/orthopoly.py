"""
Three-term recurrences, first- and second-kind polynomials, and the
exact data at the origin.

Monic convention::

    p_{k+1}(x) = (x - alpha_k) p_k(x) - beta_k p_{k-1}(x),   p_0 = 1, p_{-1} = 0
    q_{k+1}(x) = (x - alpha_k) q_k(x) - beta_k q_{k-1}(x),   q_0 = 0, q_1 = c_0

so that ``q_k(x) = L_t[(p_k(x) - p_k(t)) / (x - t)]`` for the moment
functional ``L``.  The orthonormal polynomials are ``P_k = p_k / ||p_k||``
and ``Q_k = q_k / ||p_k||`` with ``||p_k||**2 = Delta_{k+1} / Delta_k``.
Their values are irrational in general, so only the rational squares and
cross products are exposed exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import mpmath

from .core import DEFAULT_PRECISION, as_rat, entries_of, to_real
from .errors import DegenerateError, DomainError, NotAMomentPrefixError, PrecisionError, TruncationError


@dataclass(frozen=True)
class Recurrence:
    """Monic recurrence coefficients recovered from ``2K + 1`` moments.

    Attributes
    ----------
    alpha : tuple of Fraction
        ``alpha_0 .. alpha_{K-1}``.
    beta : tuple of Fraction
        ``beta_1 .. beta_{K-1}``; ``beta[k - 1]`` is ``beta_k``.
    c0 : Fraction
        Zeroth moment.
    norms : tuple of Fraction
        ``||p_0||**2 .. ||p_K||**2``, all strictly positive.
    """

    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]
    c0: Fraction
    norms: Tuple[Fraction, ...]

    @property
    def K(self) -> int:
        return len(self.alpha)

    def beta_at(self, k: int) -> Fraction:
        return self.beta[k - 1]


def recurrence_from_moments(h, K: int) -> Recurrence:
    """Recurrence coefficients by the (exact) Chebyshev algorithm.

    Parameters
    ----------
    h : MomentSequence or sequence of rationals
        Needs at least ``2K + 1`` entries.
    K : int
        Number of ``alpha`` coefficients to recover.

    Raises
    ------
    DegenerateError
        If some ``||p_k||**2`` vanishes (finitely supported prefix); ``rank``
        is the number of positive norms found.
    NotAMomentPrefixError
        If some ``||p_k||**2`` is negative.
    """
    if K < 1:
        raise DomainError("K must be at least 1")
    c = entries_of(h)
    if len(c) < 2 * K + 1:
        raise TruncationError(f"recurrence of depth {K} needs {2 * K + 1} moments, have {len(c)}")
    c = c[: 2 * K + 1]

    def check(norm, k):
        if norm == 0:
            raise DegenerateError(f"||p_{k}||^2 vanishes: prefix has rank {k}", rank=k)
        if norm < 0:
            raise NotAMomentPrefixError(f"||p_{k}||^2 = {norm} < 0", witness_order=k + 1)

    check(c[0], 0)
    # sigma[k][l] = L(p_k(x) x^l)
    prev = [Fraction(0)] * len(c)
    cur = list(c)
    alpha = [c[1] / c[0]]
    beta = []
    norms = [c[0]]
    for k in range(1, K + 1):
        b = norms[k - 1] / norms[k - 2] if k >= 2 else Fraction(0)
        a = alpha[k - 1]
        nxt = [Fraction(0)] * len(c)
        for l in range(k, 2 * K - k + 1):
            nxt[l] = cur[l + 1] - a * cur[l] - b * prev[l]
        check(nxt[k], k)
        norms.append(nxt[k])
        if k < K:
            beta.append(nxt[k] / cur[k - 1])
            alpha.append(nxt[k + 1] / nxt[k] - cur[k] / cur[k - 1])
        prev, cur = cur, nxt
    return Recurrence(tuple(alpha), tuple(beta), c[0], tuple(norms))


def eval_monic(rec: Recurrence, x, K: int = None) -> Tuple[List, List]:
    """Values ``p_0(x) .. p_K(x)`` and ``q_0(x) .. q_K(x)``.

    ``x`` may be a rational (exact result) or any number type closed under
    ``+`` and ``*`` with Fractions, e.g. an mpmath complex.
    """
    if K is None:
        K = rec.K
    if not 0 <= K <= rec.K:
        raise TruncationError(f"recurrence has depth {rec.K}, asked for {K}")
    if isinstance(x, (int, str)):
        x = as_rat(x)
    p = [Fraction(1)]
    q = [Fraction(0)]
    if K >= 1:
        p.append(x - rec.alpha[0])
        q.append(rec.c0)
    for k in range(1, K):
        a, b = rec.alpha[k], rec.beta[k - 1]
        p.append((x - a) * p[k] - b * p[k - 1])
        q.append((x - a) * q[k] - b * q[k - 1])
    return p, q


def moments_from_recurrence(rec: Recurrence, L: int) -> List[Fraction]:
    """Moments ``c_0 .. c_{L-1}`` reproduced by a recurrence (``L <= 2K``).

    ``x**a`` is expanded in the ``p_k`` basis and ``c_{a+b}`` is read off as
    ``sum_k u_k w_k ||p_k||**2`` via orthogonality.
    """
    K = rec.K
    if not 1 <= L <= 2 * K:
        raise TruncationError(f"a depth-{K} recurrence determines at most {2 * K} moments")
    # expansions[a][k] = coefficient of p_k in x**a, for a <= K
    expansions = [[Fraction(1)] + [Fraction(0)] * K]
    for a in range(1, K + 1):
        v = expansions[-1]
        w = [Fraction(0)] * (K + 1)
        for k in range(a):
            if v[k] == 0:
                continue
            # x p_k = p_{k+1} + alpha_k p_k + beta_k p_{k-1}
            w[k + 1] += v[k]
            w[k] += rec.alpha[k] * v[k]
            if k >= 1:
                w[k - 1] += rec.beta[k - 1] * v[k]
        expansions.append(w)
    out = []
    for i in range(L):
        a, b = (i + 1) // 2, i // 2
        u, w = expansions[a], expansions[b]
        out.append(sum(u[k] * w[k] * rec.norms[k] for k in range(K)))
    return out


@dataclass(frozen=True)
class ZeroData:
    """``P_k(0)**2``, ``P_k(0) Q_k(0)`` and ``Q_k(0)**2`` for ``k < K``."""

    P2: Tuple[Fraction, ...]
    PQ: Tuple[Fraction, ...]
    Q2: Tuple[Fraction, ...]

    @property
    def K(self) -> int:
        return len(self.P2)

    def sums(self) -> Tuple[Fraction, Fraction, Fraction]:
        return sum(self.P2), sum(self.PQ), sum(self.Q2)


def zero_data(h, K: int) -> ZeroData:
    """Exact orthonormal data at the origin, truncated to ``k < K``."""
    rec = recurrence_from_moments(h, K)
    p, q = eval_monic(rec, Fraction(0), K)
    P2 = tuple(p[k] * p[k] / rec.norms[k] for k in range(K))
    PQ = tuple(p[k] * q[k] / rec.norms[k] for k in range(K))
    Q2 = tuple(q[k] * q[k] / rec.norms[k] for k in range(K))
    return ZeroData(P2, PQ, Q2)


@dataclass(frozen=True)
class AbcdDerivatives:
    """Truncated derivatives at 0 of the Nevanlinna functions ``a, b, c, d``."""

    a1: Fraction
    b1: Fraction
    c1: Fraction
    d1: Fraction
    K: int

    def c_minus1(self, t) -> Fraction:
        return -as_rat(t)

    def c_minus2(self, t) -> Fraction:
        """``t**2 d'(0) + a'(0) - t (b'(0) + c'(0))``."""
        t = as_rat(t)
        return t * t * self.d1 + self.a1 - t * (self.b1 + self.c1)


def abcd_derivatives(h, K: int) -> AbcdDerivatives:
    zd = zero_data(h, K)
    d1, b1, a1 = zd.sums()
    return AbcdDerivatives(a1=a1, b1=b1, c1=b1, d1=d1, K=K)


def _as_complex(z):
    if isinstance(z, tuple):
        re, im = z
        return mpmath.mpc(_as_mp(re), _as_mp(im))
    return mpmath.mpc(z)


def _as_mp(v):
    if isinstance(v, (Fraction, int, str)):
        return to_real(v, mpmath.mp.prec)
    return mpmath.mpf(v)


def nevanlinna_truncated(h, z, K: int, prec: int = DEFAULT_PRECISION):
    """Partial-sum Nevanlinna functions ``(a_K(z), b_K(z), c_K(z), d_K(z))``.

    ``a_K(z) = z sum Q_k(0) Q_k(z)``, ``b_K(z) = -1 + z sum Q_k(0) P_k(z)``,
    ``c_K(z) = 1 + z sum P_k(0) Q_k(z)``, ``d_K(z) = z sum P_k(0) P_k(z)``.
    """
    rec = recurrence_from_moments(h, K)
    p0, q0 = eval_monic(rec, Fraction(0), K)
    with mpmath.workprec(prec):
        zz = _as_complex(z)
        pz, qz = eval_monic(rec, zz, K)
        sa = sb = sc = sd = mpmath.mpc(0)
        for k in range(K):
            inv = 1 / to_real(rec.norms[k], prec)
            sa += to_real(q0[k], prec) * qz[k] * inv
            sb += to_real(q0[k], prec) * pz[k] * inv
            sc += to_real(p0[k], prec) * qz[k] * inv
            sd += to_real(p0[k], prec) * pz[k] * inv
        return zz * sa, -1 + zz * sb, 1 + zz * sc, zz * sd


def parseval_partial(h, z, t, K: int, prec: int = DEFAULT_PRECISION):
    """Both sides of Parseval's equality for ``(x - z)**-1`` at truncation ``K``.

    Returns ``(lhs, rhs)`` with ``lhs = (m_K(z;t) - m_K(conj z;t)) / (z - conj z)``
    and ``rhs = sum_{k<K} |m_K(z;t) P_k(z) + Q_k(z)|**2``.  The two agree only
    in the limit ``K -> inf``; inspect their difference across ``K``.
    """
    rec = recurrence_from_moments(h, K)
    with mpmath.workprec(prec):
        zz = _as_complex(z)
        if zz.imag == 0:
            raise DomainError("z must have a nonzero imaginary part")
        tt = _as_mp(t)

        def m_of(w):
            a, b, c, d = nevanlinna_truncated(h, w, K, prec)
            den = b - tt * d
            if abs(den) < mpmath.mpf(2) ** (-prec + 8) * (abs(b) + abs(tt * d) + 1):
                raise PrecisionError("denominator b - t d vanishes at working precision")
            return -(a - tt * c) / den

        m = m_of(zz)
        m_bar = m_of(mpmath.conj(zz))
        lhs = ((m - m_bar) / (zz - mpmath.conj(zz))).real
        pz, qz = eval_monic(rec, zz, K)
        rhs = mpmath.mpf(0)
        for k in range(K):
            rhs += abs(m * pz[k] + qz[k]) ** 2 / to_real(rec.norms[k], prec)
        if not (mpmath.isfinite(lhs) and mpmath.isfinite(rhs)):
            raise PrecisionError("non-finite Parseval partial sums")
        return +lhs, +rhs
