import json
from fractions import Fraction

import pytest

from momentrigidity.core import Kind, MomentSequence, convex_combine, symmetrize, trim
from momentrigidity.corpus import corpus_get
from momentrigidity.determinacy import (DiagParams, SeriesVerdict, Status, index_convexity_check, index_estimate,
                                        indeterminacy_diag, ratio_criterion, series_diag,
                                        stieltjes_index_estimate)
from momentrigidity.errors import DegenerateError, DomainError, KindError, TruncationError
from momentrigidity.hankel import minor, psd_prefix
from momentrigidity.orthopoly import zero_data
from momentrigidity.rigidity import zeroth_moment_slack

INDET = Status.INDETERMINATE_EVIDENCE
DET = Status.DETERMINATE_EVIDENCE


def as_hamburger(s):
    return s.with_entries(s.entries, kind=Kind.HAMBURGER)


class TestSeriesDiag:
    def test_geometric_converges(self):
        d = series_diag([Fraction(1, 2 ** k) for k in range(40)])
        assert d.verdict is SeriesVerdict.CONVERGING
        assert d.tail_bound < 2 ** -30

    def test_constant_diverges(self):
        assert series_diag([1] * 20).verdict is SeriesVerdict.DIVERGING

    def test_gaussian_p2_never_converges(self):
        terms = zero_data(corpus_get("gaussian", 49), 24).P2
        for K in range(2, 25):
            assert series_diag(terms[:K]).verdict is not SeriesVerdict.CONVERGING

    def test_power_laws(self):
        assert series_diag([Fraction(1, (k + 1) ** 2) for k in range(20)]).verdict is SeriesVerdict.CONVERGING
        assert series_diag([Fraction(1, k + 1) for k in range(20)]).verdict is SeriesVerdict.DIVERGING

    def test_too_short_is_unknown(self):
        assert series_diag([1, Fraction(1, 2)]).verdict is SeriesVerdict.UNKNOWN

    def test_partial_sums_exact(self):
        d = series_diag([1, Fraction(1, 3), 0, Fraction(1, 9)])
        assert d.partial_sums == (1, Fraction(4, 3), Fraction(4, 3), Fraction(13, 9))
        assert len(d.tail_ratios) == 2

    def test_errors(self):
        with pytest.raises(DomainError):
            series_diag([1, -1])
        with pytest.raises(DomainError):
            series_diag([1, 1], window=1)

    def test_divergence_bound(self):
        assert series_diag([1, 10 ** 7], window=4).verdict is SeriesVerdict.DIVERGING


class TestIndeterminacyDiag:
    def test_heavy_tail(self):
        v = indeterminacy_diag(corpus_get("heavy_tail"), 12)
        assert v.status is INDET

    @pytest.mark.parametrize("name", ["gaussian", "factorial", "catalan"])
    def test_determinate_never_indeterminate(self, name):
        h = corpus_get(name, 33)
        for K in range(1, 17):
            assert indeterminacy_diag(h, K).status is not INDET

    def test_finite_support(self):
        v = indeterminacy_diag(corpus_get("two_atom"), 8)
        assert v.status is DET and v.finite_support and v.rank == 2

    def test_json(self):
        doc = indeterminacy_diag(corpus_get("heavy_tail"), 12).to_dict()
        assert set(doc) == {"status", "K", "p2_tail_ratio", "q2_tail_ratio", "flags"}
        assert doc["status"] == "IndeterminateEvidence"
        float(doc["p2_tail_ratio"])
        json.dumps(doc)
        assert indeterminacy_diag(corpus_get("dirac0"), 4).to_dict()["flags"] == ["finite_support"]

    def test_stable_under_more_terms(self):
        h = corpus_get("heavy_tail", 33)
        first = next(K for K in range(1, 17) if indeterminacy_diag(h, K).status is INDET)
        assert all(indeterminacy_diag(h, K).status is INDET for K in range(first, 17))

    @pytest.mark.parametrize("name", ["gaussian", "factorial", "catalan", "heavy_tail", "two_atom", "dirac0"])
    def test_monotone_under_trimming(self, name):
        h = as_hamburger(corpus_get(name))
        for K in (8, 12):
            for n in range(1, 4):
                if indeterminacy_diag(trim(h, 2 * n), K).status is DET:
                    assert indeterminacy_diag(h, K).status is not INDET

    def test_custom_params(self):
        strict = DiagParams(converge_exponent=3.0)
        assert indeterminacy_diag(corpus_get("heavy_tail"), 12, strict).status is not INDET


class TestRatioCriterion:
    def test_gaussian(self):
        r = ratio_criterion(corpus_get("gaussian", 9), 3).r0
        assert r[1] == 1
        assert r[2] == Fraction(2, 3)

    def test_catalan(self):
        r = ratio_criterion(corpus_get("catalan", 21), 10, 1)
        assert r.r0 == tuple(Fraction(1, n) for n in range(1, 11))
        assert r.rk[1][0] == minor(corpus_get("catalan", 21), 1, 1)

    @pytest.mark.parametrize("name", ["gaussian", "factorial", "heavy_tail"])
    def test_equals_truncated_rho0(self, name):
        h = corpus_get(name, 17)
        r = ratio_criterion(h, 8).r0
        for n in range(1, 9):
            assert r[n - 1] == zeroth_moment_slack(h, n)

    def test_degenerate(self):
        ratio_criterion(corpus_get("two_atom", 9), 3)
        with pytest.raises(DegenerateError):
            ratio_criterion(corpus_get("two_atom", 9), 4)
        with pytest.raises(DegenerateError):
            ratio_criterion(corpus_get("dirac0", 5), 2)

    def test_positive_denominators_when_pd(self):
        h = corpus_get("factorial", 21)
        assert psd_prefix(h, 10).is_pd
        r = ratio_criterion(h, 10, 3)
        assert all(v > 0 for v in r.r0)
        assert all(v > 0 for vals in r.rk.values() for v in vals)


class TestIndexEstimate:
    def test_heavy_tail(self):
        w = index_estimate(as_hamburger(corpus_get("heavy_tail")), 2, 12)
        assert w.upper == -1 and w.lower == -1

    def test_gaussian_lower_grows(self):
        g = corpus_get("gaussian", 40)
        lowers = [index_estimate(g, n, 12).lower for n in range(5)]
        assert lowers == [0, 1, 2, 3, 4]
        assert all(index_estimate(g, n, 12).upper is None for n in range(5))

    def test_boundary_prepend_window_contains_zero(self):
        w = index_estimate(corpus_get("boundary_prepend"), 3, 12)
        assert w.lower <= 0 <= w.upper

    def test_needs_enough_entries(self):
        with pytest.raises(TruncationError):
            index_estimate(corpus_get("gaussian", 10), 2, 4)


class TestStieltjesIndex:
    def test_factorial(self):
        w = stieltjes_index_estimate(corpus_get("factorial"), 3, 12)
        assert all(v.status is not INDET for v in w.verdicts)
        assert w.upper is None

    def test_heavy_tail(self):
        w = stieltjes_index_estimate(corpus_get("heavy_tail"), 2, 12)
        assert w.verdicts[0].status is INDET and w.upper == -1

    def test_single_atom_at_one(self):
        s = MomentSequence((1,) * 16, Kind.STIELTJES)
        w = stieltjes_index_estimate(s, 3, 6)
        assert all(v.finite_support for v in w.verdicts)

    @pytest.mark.parametrize("name", ["factorial", "catalan", "heavy_tail", "dirac0"])
    def test_agrees_with_symmetrized_route(self, name):
        s = corpus_get(name, 20)
        w = stieltjes_index_estimate(s, 2, 10)
        for n, v in enumerate(w.verdicts):
            assert indeterminacy_diag(symmetrize(trim(s, n)), 10).status is v.status

    def test_kind_checked(self):
        with pytest.raises(KindError):
            stieltjes_index_estimate(corpus_get("gaussian"), 1, 4)


class TestConvexity:
    def test_indeterminate_summand_dominates(self):
        g = corpus_get("gaussian")
        t = as_hamburger(corpus_get("heavy_tail"))
        combo = convex_combine(g, t, Fraction(1, 2))
        assert index_estimate(combo, 2, 12).verdicts[0].status is INDET
        assert index_convexity_check(g, t, Fraction(1, 2), 2, 12)

    def test_same_sequence(self):
        g = corpus_get("gaussian")
        assert index_convexity_check(g, g, Fraction(1, 3), 2, 12)
        w1 = index_estimate(convex_combine(g, g, Fraction(1, 3)), 2, 12)
        assert w1.to_list() == index_estimate(g, 2, 12).to_list()

    def test_finite_support_union(self):
        a = corpus_get("two_atom")
        b = as_hamburger(corpus_get("dirac0"))
        v = indeterminacy_diag(convex_combine(a, b, Fraction(1, 3)), 8)
        assert v.finite_support and v.rank <= 2 + 1
