"""
Exact Hankel-minor calculus.

``minor(e, n, k)`` is the determinant of the ``n x n`` Hankel matrix whose
top-left entry is ``e[2k]``, i.e. entry ``(i, j)`` equals ``e[2k + i + j]``.
``bordered_minor`` borders that block with one extra row and column, and
``f_matrix`` collects the bordered minors into the symmetric matrix entering
Sylvester's determinant identity.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .core import as_rat, entries_of
from .errors import DomainError, SingularPivotError, TruncationError


def _common_denominator(values) -> int:
    d = 1
    for v in values:
        d = d * v.denominator // math.gcd(d, v.denominator)
    return d


def bareiss_det(matrix: List[List[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(matrix) -> Fraction:
    """Exact determinant of a square matrix of rationals.

    Denominators are cleared once, the integer matrix is reduced with
    :func:`bareiss_det`, and the scale is divided back out.
    """
    rows = [[as_rat(v) for v in row] for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    d = _common_denominator(v for row in rows for v in row)
    ints = [[(v * d).numerator for v in row] for row in rows]
    return Fraction(bareiss_det(ints), d ** n)


def hankel_matrix(e, n: int, k: int = 0) -> List[List[Fraction]]:
    """The ``n x n`` Hankel block ``(e[2k + i + j])``."""
    c = entries_of(e)
    if n > 0 and 2 * k + 2 * n - 2 >= len(c):
        raise TruncationError(
            f"order {n} at shift {k} needs {2 * k + 2 * n - 1} entries, have {len(c)}"
        )
    return [[c[2 * k + i + j] for j in range(n)] for i in range(n)]


def minor(e, n: int, k: int = 0) -> Fraction:
    """Shifted Hankel minor ``Delta_n^(k)[e]``; ``n = 0`` gives 1."""
    if n < 0 or k < 0:
        raise DomainError("order and shift must be nonnegative")
    if n == 0:
        return Fraction(1)
    c = entries_of(e)
    if 2 * k + 2 * n - 2 >= len(c):
        raise TruncationError(
            f"order {n} at shift {k} needs {2 * k + 2 * n - 1} entries, have {len(c)}"
        )
    window = c[2 * k: 2 * k + 2 * n - 1]
    d = _common_denominator(window)
    ints = [(v * d).numerator for v in window]
    return Fraction(bareiss_det([[ints[i + j] for j in range(n)] for i in range(n)]), d ** n)


class MinorTable:
    """Memoised minors of one sequence.

    The cache is a plain dict keyed by ``(n, k)``.  Concurrent callers may
    recompute a value but can never read a wrong one, since entries are only
    ever written with the freshly computed minor.
    """

    def __init__(self, source):
        self.source = source
        self._entries = entries_of(source)
        self._cache = {}

    def minor(self, n: int, k: int = 0) -> Fraction:
        key = (n, k)
        try:
            return self._cache[key]
        except KeyError:
            value = minor(self._entries, n, k)
            self._cache[key] = value
            return value

    def __len__(self):
        return len(self._cache)


def bordered_matrix(e, i: int, j: int, k: int, n: int) -> List[List[Fraction]]:
    """Matrix of ``f_{i,j}^(k)[e; n]``: the Hankel block bordered by row ``i`` and column ``j``."""
    if not (0 <= i < k and 0 <= j < k):
        raise DomainError(f"bordered minor needs 0 <= i, j < k, got i={i}, j={j}, k={k}")
    if n < 0:
        raise DomainError("block order must be nonnegative")
    c = entries_of(e)
    need = max(i + j, 2 * k + 2 * n - 2 if n else 0, i + k + n - 1, j + k + n - 1)
    if need >= len(c):
        raise TruncationError(f"bordered minor needs {need + 1} entries, have {len(c)}")
    top = [c[i + j]] + [c[i + k + s] for s in range(n)]
    rows = [top]
    for r in range(n):
        rows.append([c[j + k + r]] + [c[2 * k + r + s] for s in range(n)])
    return rows


def bordered_minor(e, i: int, j: int, k: int, n: int) -> Fraction:
    return det(bordered_matrix(e, i, j, k, n))


@dataclass(frozen=True)
class FMatrix:
    """The symmetric ``k x k`` matrix of bordered minors and its determinant."""

    entries: Tuple[Tuple[Fraction, ...], ...]
    det: Fraction
    k: int
    n: int


def f_matrix(e, k: int, n: int) -> FMatrix:
    """``F_n^(k)[e] = (f_{i,j}^(k)[e; n])_{i,j<k}``."""
    if k < 1:
        raise DomainError("F-matrix needs k >= 1")
    rows = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            v = bordered_minor(e, i, j, k, n)
            rows[i][j] = rows[j][i] = v
    return FMatrix(tuple(tuple(r) for r in rows), det(rows), k, n)


def _pivot_minor(e, n: int, m: int) -> Fraction:
    if not 0 <= m <= n - 1:
        raise DomainError(f"need 0 <= m <= n - 1, got n={n}, m={m}")
    return minor(e, n - m - 1, m + 1)


def sylvester_identity_check(e, n: int, m: int) -> bool:
    """Check ``Delta_n^(0) * (Delta_{n-m-1}^(m+1))**m == det F_{n-m-1}^(m+1)`` exactly.

    Raises
    ------
    SingularPivotError
        If the pivot block ``Delta_{n-m-1}^(m+1)`` vanishes.
    """
    pivot = _pivot_minor(e, n, m)
    if pivot == 0:
        raise SingularPivotError(f"pivot minor Delta_{n - m - 1}^({m + 1}) vanishes")
    lhs = minor(e, n, 0) * pivot ** m
    rhs = f_matrix(e, m + 1, n - m - 1).det
    return lhs == rhs


def hadamard_check(e, m: int, n: int, strict: bool = False) -> bool:
    """Check ``f_{i,i} <= c_{2i} * Delta_{n-m-1}^(m+1)`` for every ``i <= m``.

    With ``strict=True`` the inequality must be strict for every ``i``.
    """
    c = entries_of(e)
    pivot = _pivot_minor(c, n, m)
    for i in range(m + 1):
        f = bordered_minor(c, i, i, m + 1, n - m - 1)
        bound = c[2 * i] * pivot
        if f > bound or (strict and f == bound):
            return False
    return True


class PsdStatus(enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    PSD_SINGULAR = "psd_singular"
    NOT_PSD = "not_psd"


@dataclass(frozen=True)
class PsdVerdict:
    """Outcome of an exact semidefiniteness test of a Hankel block.

    ``rank`` counts the positive pivots seen (only meaningful when the block
    is PSD).  ``witness_order`` is the order of the leading block in which the
    failure was detected, for ``NOT_PSD``.
    """

    status: PsdStatus
    order: int
    rank: int
    witness_order: Optional[int] = None

    @property
    def is_psd(self) -> bool:
        return self.status is not PsdStatus.NOT_PSD

    @property
    def is_pd(self) -> bool:
        return self.status is PsdStatus.POSITIVE_DEFINITE

    def to_dict(self) -> dict:
        out = {"status": self.status.value, "order": self.order, "rank": self.rank}
        if self.witness_order is not None:
            out["witness_order"] = self.witness_order
        return out


def psd_matrix(a: List[List[Fraction]]) -> PsdVerdict:
    """Exact PSD test of a symmetric rational matrix by symmetric elimination.

    A zero pivot is only admissible when the rest of its row is zero too;
    leading principal minors alone cannot certify semidefiniteness.
    """
    a = [list(row) for row in a]
    n = len(a)
    rank = 0
    for i in range(n):
        pivot = a[i][i]
        if pivot < 0:
            return PsdVerdict(PsdStatus.NOT_PSD, n, rank, i + 1)
        if pivot == 0:
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    return PsdVerdict(PsdStatus.NOT_PSD, n, rank, j + 1)
            continue
        rank += 1
        row_i = a[i]
        for r in range(i + 1, n):
            if row_i[r] == 0:
                continue
            f = row_i[r] / pivot
            row_r = a[r]
            for s in range(r, n):
                row_r[s] -= f * row_i[s]
            for s in range(r + 1, n):
                a[s][r] = row_r[s]
    status = PsdStatus.POSITIVE_DEFINITE if rank == n else PsdStatus.PSD_SINGULAR
    return PsdVerdict(status, n, rank)


def psd_prefix(e, n: int) -> PsdVerdict:
    """Exact PSD test of the ``n x n`` Hankel matrix ``(c_{i+j})``."""
    if n < 1:
        raise DomainError("order must be at least 1")
    return psd_matrix(hankel_matrix(e, n, 0))


def stieltjes_prefix_check(s, n: int) -> Tuple[PsdVerdict, PsdVerdict]:
    """Verdicts for ``(s_i)`` and the once-shifted ``(s_{i+1})`` at order ``n``.

    The prefix is Stieltjes-feasible at order ``n`` iff neither verdict is
    ``NOT_PSD``.
    """
    c = entries_of(s)
    if len(c) < 2 * n:
        raise TruncationError(f"Stieltjes check of order {n} needs {2 * n} entries, have {len(c)}")
    return psd_prefix(c, n), psd_prefix(c[1:], n)


def max_order(e) -> int:
    """Largest ``n`` with ``psd_prefix(e, n)`` defined."""
    return (len(entries_of(e)) + 1) // 2


@dataclass(frozen=True)
class GammaPolynomial:
    """``p_n(gamma) = det(f_{i,j}[h] / Delta + gamma * [i + j == m])``.

    ``coeffs[d]`` is the coefficient of ``gamma**d``.
    """

    m: int
    n: int
    coeffs: Tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __call__(self, gamma) -> Fraction:
        gamma = as_rat(gamma)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * gamma + c
        return acc


def _newton_to_monomial(xs, ys) -> List[Fraction]:
    # divided differences, then expand the Newton form
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs * (x - xs[i]) + dd[i]
        new = [Fraction(0)] * n
        for d in range(n - 1):
            new[d + 1] += coeffs[d]
            new[d] -= coeffs[d] * xs[i]
        new[0] += dd[i]
        coeffs = new
    return coeffs


def gamma_polynomial(h, m: int, n: int) -> GammaPolynomial:
    """Polynomial in ``gamma`` governing positivity when ``c_m`` moves to ``c_m + gamma``.

    The matrix ``F_{n-m-1}^(m+1)[h] / Delta_{n-m-1}^(m+1)[h]`` is shifted by
    ``gamma`` along its anti-diagonal and the determinant is recovered by
    exact interpolation at ``m + 2`` integer nodes.
    """
    if m < 0:
        raise DomainError("m must be nonnegative")
    pivot = _pivot_minor(h, n, m)
    if pivot <= 0:
        raise SingularPivotError(f"pivot minor Delta_{n - m - 1}^({m + 1}) = {pivot} is not positive")
    fm = f_matrix(h, m + 1, n - m - 1)
    base = [[v / pivot for v in row] for row in fm.entries]
    xs = [Fraction(g) for g in range(m + 2)]
    ys = []
    for g in xs:
        shifted = [
            [base[i][j] + (g if i + j == m else 0) for j in range(m + 1)]
            for i in range(m + 1)
        ]
        ys.append(det(shifted))
    coeffs = _newton_to_monomial(xs, ys)
    return GammaPolynomial(m, n, tuple(coeffs))
