"""Independent reference implementations used only by the test-suite."""

import random
from fractions import Fraction

from momentrigidity.core import AtomicMeasure, moments_from_atoms


def cofactor_det(m):
    """Laplace expansion along the first row; exponential, fine for n <= 6."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(sub)
    return total


def hankel(c, n, k=0):
    return [[Fraction(c[2 * k + i + j]) for j in range(n)] for i in range(n)]


def hankel_det(c, n, k=0):
    return cofactor_det(hankel(c, n, k))


def _shifted_det(c, n):
    # Hankel block with its last column advanced by one index
    if n == 0:
        return Fraction(0)
    m = [[Fraction(c[i + j]) for j in range(n - 1)] + [Fraction(c[i + n])] for i in range(n)]
    return cofactor_det(m)


def beta_oracle(c, k):
    """``beta_k = D_{k+1} D_{k-1} / D_k**2`` from plain Hankel determinants."""
    d = [hankel_det(c, n) for n in (k - 1, k, k + 1)]
    return d[2] * d[0] / (d[1] * d[1])


def alpha_oracle(c, k):
    """``alpha_k`` as a difference of sub-leading coefficients of monic ``p_{k+1}``, ``p_k``."""
    return _shifted_det(c, k + 1) / hankel_det(c, k + 1) - _shifted_det(c, k) / (hankel_det(c, k) if k else 1)


def random_rationals(rng: random.Random, n, num=9, den=6):
    return [Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(n)]


def random_atoms(rng: random.Random, count, positive=False):
    positions = set()
    while len(positions) < count:
        lo = 0 if positive else -6
        positions.add(Fraction(rng.randint(lo, 6), rng.randint(1, 3)))
    atoms = [(x, Fraction(rng.randint(1, 5), rng.randint(1, 4))) for x in sorted(positions)]
    return AtomicMeasure(tuple(atoms), stieltjes=positive)


def random_atom_sequence(rng: random.Random, count, L, positive=False):
    return moments_from_atoms(random_atoms(rng, count, positive), L)
