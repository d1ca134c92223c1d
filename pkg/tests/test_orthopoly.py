import random
from fractions import Fraction

import mpmath
import pytest

from momentrigidity.corpus import corpus_get
from momentrigidity.errors import DegenerateError, DomainError, NotAMomentPrefixError, TruncationError
from momentrigidity.orthopoly import (abcd_derivatives, eval_monic, moments_from_recurrence, parseval_partial,
                                      recurrence_from_moments, zero_data)
from oracles import alpha_oracle, beta_oracle, random_atom_sequence

CORPUS = ("gaussian", "factorial", "catalan", "heavy_tail")


class TestRecurrence:
    @pytest.mark.parametrize("name", CORPUS)
    def test_against_determinant_oracles(self, name):
        c = corpus_get(name, 13).entries
        rec = recurrence_from_moments(c, 6)
        for k in range(6):
            assert rec.alpha[k] == alpha_oracle(c, k)
        for k in range(1, 6):
            assert rec.beta_at(k) == beta_oracle(c, k)

    def test_closed_forms(self):
        g = recurrence_from_moments(corpus_get("gaussian", 9), 4)
        assert g.alpha == (0, 0, 0, 0) and g.beta == (1, 2, 3)
        f = recurrence_from_moments(corpus_get("factorial", 9), 4)
        assert f.alpha == (1, 3, 5, 7) and f.beta == (1, 4, 9)
        c = recurrence_from_moments(corpus_get("catalan", 9), 4)
        assert c.alpha == (1, 2, 2, 2) and c.beta == (1, 1, 1)

    def test_errors(self):
        with pytest.raises(TruncationError):
            recurrence_from_moments((1, 0, 1), 2)
        with pytest.raises(DegenerateError) as info:
            recurrence_from_moments(corpus_get("two_atom", 9), 4)
        assert info.value.rank == 2
        with pytest.raises(NotAMomentPrefixError) as info:
            recurrence_from_moments((1, 2, 1), 1)
        assert info.value.witness_order == 2

    @pytest.mark.parametrize("name", CORPUS)
    def test_moment_round_trip(self, name):
        c = corpus_get(name, 17).entries
        rec = recurrence_from_moments(c, 8)
        assert tuple(moments_from_recurrence(rec, 16)) == c[:16]

    def test_round_trip_on_atoms(self):
        rng = random.Random(3)
        for _ in range(10):
            c = random_atom_sequence(rng, 6, 11).entries
            rec = recurrence_from_moments(c, 5)
            assert tuple(moments_from_recurrence(rec, 10)) == c[:10]


class TestEvaluation:
    def test_gaussian_at_zero(self):
        rec = recurrence_from_moments(corpus_get("gaussian", 9), 4)
        p, q = eval_monic(rec, 0)
        assert p == [1, 0, -1, 0, 3]
        assert q == [0, 1, 0, -2, 0]

    @pytest.mark.parametrize("name", CORPUS)
    def test_wronskian(self, name):
        h = corpus_get(name, 17)
        rec = recurrence_from_moments(h, 8)
        for x in (Fraction(0), Fraction(-3, 2), Fraction(7, 5)):
            p, q = eval_monic(rec, x)
            prod = Fraction(1)
            for k in range(8):
                if k >= 1:
                    prod *= rec.beta_at(k)
                assert p[k + 1] * q[k] - p[k] * q[k + 1] == -rec.c0 * prod


class TestZeroData:
    def test_gaussian(self):
        zd = zero_data(corpus_get("gaussian", 11), 5)
        assert zd.P2 == (1, 0, Fraction(1, 2), 0, Fraction(3, 8))
        assert zd.Q2[1] == 1
        assert zd.PQ[0] == 0 and zd.Q2[0] == 0

    @pytest.mark.parametrize("name", CORPUS)
    def test_invariants(self, name):
        h = corpus_get(name, 21)
        zd = zero_data(h, 10)
        assert zd.P2[0] == 1 / h[0]
        for a, b, c in zip(zd.P2, zd.PQ, zd.Q2):
            assert a >= 0 and c >= 0 and b * b == a * c
        sums = [sum(zd.P2[:k]) for k in range(11)]
        assert sums == sorted(sums)

    def test_abcd(self):
        d = abcd_derivatives(corpus_get("gaussian", 7), 3)
        assert d.d1 == Fraction(3, 2)
        assert d.b1 == d.c1
        assert d.c_minus1(5) == -5
        assert d.c_minus2(0) == d.a1


class TestParseval:
    def test_identity_holds_per_truncation(self):
        h = corpus_get("heavy_tail")
        for K in (2, 6, 12):
            lhs, rhs = parseval_partial(h, (0, 1), 0, K)
            assert abs(lhs - rhs) <= mpmath.mpf(2) ** -200 * abs(lhs)

    def test_single_term(self):
        h = corpus_get("gaussian", 5)
        lhs, rhs = parseval_partial(h, (0, 1), 0, 1)
        assert rhs == 0 and abs(lhs) < mpmath.mpf(2) ** -200
        lhs, rhs = parseval_partial(h, (Fraction(1, 2), 2), 3, 1)
        assert abs(lhs - rhs) < mpmath.mpf(2) ** -200

    def test_conjugation_symmetry(self):
        h = corpus_get("heavy_tail")
        a = parseval_partial(h, (1, 2), Fraction(1, 3), 8)
        b = parseval_partial(h, (1, -2), Fraction(1, 3), 8)
        for x, y in zip(a, b):
            assert abs(x - y) <= mpmath.mpf(2) ** -200 * abs(x)

    @pytest.mark.parametrize("name", ["heavy_tail", "gaussian"])
    def test_lhs_nondecreasing_in_truncation(self, name):
        h = corpus_get(name)
        values = [parseval_partial(h, (0, 1), 0, K)[0] for K in range(2, 15)]
        assert values[0] > 0
        assert all(b - a >= -abs(a) * mpmath.mpf(2) ** -200 for a, b in zip(values, values[1:]))

    def test_real_z_rejected(self):
        with pytest.raises(DomainError):
            parseval_partial(corpus_get("gaussian", 5), (1, 0), 0, 2)
