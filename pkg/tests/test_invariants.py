import json
from fractions import Fraction
from math import factorial, gcd

import pytest
from hypothesis import given, settings, strategies as st

from hirzebruch.invariants import (
    POSITIVE_SIGNATURE_ROWS,
    ChernPair,
    FactorialMultiple,
    GroupDescriptor,
    SurfaceParams,
    branch_invariants,
    c1sq_expanded_bracket,
    c1sq_factored_bracket,
    c2_expanded_bracket,
    c2_factored_bracket,
    chern_Y,
    chern_k0,
    chern_k1,
    classify,
    equal_chern_pair,
    galois_chern,
    general_type_table,
    hirzebruch_data,
    parse_predicates,
    pi1,
    positive_signature_table,
    scan,
    signature,
    spin_table,
    veronese_chern,
)

params = st.builds(SurfaceParams, st.integers(0, 6), st.integers(1, 8), st.integers(1, 8))


def galois_formula(EK, n, c1X=8, c2X=4):
    # typed independently of the package
    c1 = Fraction(EK * EK + 6 * n * EK + 9 * n * n - 12 * EK - 36 * n + 36, 4)
    c2 = Fraction(72 - 10 * c1X - 54 * EK - 114 * n + 27 * n * n + 14 * c2X + 3 * EK * EK + 18 * n * EK, 24)
    return c1, c2


class TestParams:
    @pytest.mark.parametrize("bad", [(-1, 1, 1), (0, 1, 0), (0, 0, 2), (2, 0, 3)])
    def test_rejected(self, bad):
        with pytest.raises(ValueError):
            SurfaceParams(*bad)

    def test_veronese_extension_allowed(self):
        assert SurfaceParams(1, 0, 3).n == 9


class TestHirzebruchData:
    def test_examples(self):
        assert hirzebruch_data((0, 1, 1)) == (-4, 2, 8, 4)
        assert hirzebruch_data((1, 0, 5))[0] == -15
        assert hirzebruch_data((2, 2, 3))[1] == 30

    def test_vanishing_bracket(self):
        assert galois_chern(0, 2, 8, 4).c1sq_coeff == 0

    def test_k0_example(self):
        assert chern_Y((0, 2, 2)).c1sq.expanded() == 40320 * 25


class TestChernForms:
    @settings(max_examples=200, deadline=None)
    @given(params)
    def test_forms_agree(self, p):
        k, a, b = p.as_tuple()
        assert c1sq_expanded_bracket(k, a, b) == c1sq_factored_bracket(k, a, b)
        assert c2_expanded_bracket(k, a, b) == c2_factored_bracket(k, a, b)
        c = chern_Y(p)
        assert (c.c1sq_coeff, c.c2_coeff) == galois_formula(*hirzebruch_data(p)[:2])

    @settings(max_examples=200, deadline=None)
    @given(params)
    def test_signature_identity(self, p):
        c = chern_Y(p)
        assert signature(p) == c.tau

    @settings(max_examples=100, deadline=None)
    @given(params)
    def test_c2_denominator(self, p):
        assert 24 % chern_Y(p).c2_coeff.denominator == 0

    @settings(max_examples=100, deadline=None)
    @given(st.builds(SurfaceParams, st.integers(0, 3), st.integers(1, 4), st.integers(1, 3)))
    def test_integral_and_noether(self, p):
        c = chern_Y(p)
        if p.n <= 40:
            c1, c2 = c.expanded()
            assert (c1 + c2) % 12 == 0

    @pytest.mark.parametrize("a", range(1, 11))
    def test_specializations(self, a):
        for b in range(1, 11):
            assert chern_Y((0, a, b)) == chern_k0(a, b)
            assert chern_Y((1, a, b)) == chern_k1(a, b)
            n0 = 2 * a * b
            assert chern_k0(a, b).c1sq.expanded(10 ** 6) == factorial(n0) * (3 * a * b - a - b - 3) ** 2

    @pytest.mark.parametrize("b", range(1, 13))
    def test_veronese(self, b):
        assert chern_Y((1, 0, b)) == veronese_chern(b)
        assert chern_Y((1, 0, b)).c1sq_coeff == Fraction(9, 4) * (b - 2) ** 2 * (b + 1) ** 2

    def test_veronese_values(self):
        v = veronese_chern(3)
        assert v.expanded() == (13063680, 7257600)
        assert v.ratio == Fraction(9, 5)
        assert veronese_chern(1).c1sq_coeff == 9
        assert veronese_chern(2).c1sq_coeff == 0
        with pytest.raises(ValueError):
            veronese_chern(0)

    def test_expansion_cap(self):
        c = chern_Y((1, 5, 4))
        assert c.factorial_index == 56
        assert c.expanded() is None
        assert c.expanded(60)[0] == c.c1sq_coeff * factorial(56)

    def test_json(self):
        d = json.loads(json.dumps(chern_Y((0, 2, 2)).to_json()))
        assert d["c1sq_coeff"] == [25, 1]
        assert d["expanded"]["c1sq"] == str(40320 * 25)


class TestSignature:
    @pytest.mark.parametrize("p", [(0, 7, 4), (1, 5, 4), (2, 3, 4), (3, 1, 4)])
    def test_zero(self, p):
        assert signature(p).coeff == 0

    @pytest.mark.parametrize("b", range(5, 9))
    def test_positive(self, b):
        assert signature((1, 3, b)).sign == 1

    def test_factorial_multiple(self):
        f = FactorialMultiple(5, Fraction(-1, 3))
        assert f.sign == -1
        assert f.expanded() == -40
        with pytest.raises(ArithmeticError):
            FactorialMultiple(2, Fraction(1, 3)).expanded()


class TestGroups:
    def test_examples(self):
        assert pi1((0, 2, 2)) == GroupDescriptor(2, 6)
        assert str(pi1((0, 2, 2))) == "(Z_2)^6"
        assert pi1((1, 3, 5)).trivial
        with pytest.raises(ValueError):
            pi1((1, 0, 3))

    @settings(max_examples=100, deadline=None)
    @given(params)
    def test_trivial_iff_coprime(self, p):
        assert pi1(p).trivial == (gcd(p.a, p.b) == 1)
        assert pi1(p).rank == p.n - 2


class TestBranch:
    def test_veronese_case(self):
        assert branch_invariants((1, 0, 3)) == branch_invariants((1, 0, 3)).__class__(9, 18, 12, 42, 84)

    def test_examples(self):
        assert branch_invariants((1, 5, 4)).m == 146
        assert branch_invariants((1, 5, 4)).d is None

    @pytest.mark.parametrize("a", range(1, 11))
    def test_k1_matches_line_count(self, a):
        for b in range(1, 11):
            assert branch_invariants((1, a, b)).m == 6 * a * b - 2 * a - 3 * b + 3 * b * b


class TestClassification:
    def test_examples(self):
        c = classify((0, 7, 4))
        assert (c.general_type, c.spin, c.simply_connected, c.signature_sign) == (True, True, True, 0)
        assert not classify((1, 1, 1)).general_type
        with pytest.raises(ValueError):
            classify((1, 0, 3))

    def test_residue_and_degree_criteria(self):
        for k in range(11):
            for a in range(1, 21):
                for b in range(1, 21):
                    m = branch_invariants((k, a, b)).m
                    assert spin_table(k, a, b) == (m % 4 != 0)
                    assert general_type_table(k, a, b) == (m > 6)

    def test_signature_table_default_reading(self):
        for k in range(11):
            for a in range(1, 21):
                for b in range(1, 21):
                    assert (signature((k, a, b)).sign > 0) == positive_signature_table(k, a, b)

    def test_no_small_b_positive(self):
        for k in range(7):
            for a in range(1, 13):
                for b in range(1, 4):
                    assert signature((k, a, b)).sign <= 0

    def test_literal_rows(self):
        assert len(POSITIVE_SIGNATURE_ROWS) == 11
        # the listed k = 0 rows miss the mirror image a <-> b, and the k >= 4 row stops at a = 1
        assert positive_signature_table(0, 4, 8) and not positive_signature_table(0, 4, 8, literal=True)
        assert signature((0, 4, 8)).sign > 0
        assert signature((4, 2, 4)).sign > 0 and not positive_signature_table(4, 2, 4, literal=True)
        bad = sum(classify((k, a, b), literal_table=True).consistent is False
                  for k in range(11) for a in range(1, 21) for b in range(1, 21))
        assert bad == 2289

    def test_json(self):
        d = classify((1, 3, 5)).to_json()
        assert d["m"] == branch_invariants((1, 3, 5)).m and d["consistent"]


class TestScan:
    def test_positive_family_is_not_all_spin(self):
        hits = scan([1], [3], range(5, 9), ["sc", "gt", "tau>0", "spin"])
        assert [p.as_tuple() for p in hits] == [(1, 3, 7), (1, 3, 8)]

    def test_positive_family_without_spin(self):
        hits = scan([1], [3], range(5, 9), ["gt", "tau>0"])
        assert [p.b for p in hits] == [5, 6, 7, 8]

    def test_k0_rows(self):
        hits = {p.as_tuple() for p in scan([0], range(1, 13), range(1, 13), ["tau>0"])}
        for a in range(8, 13):
            assert (0, a, 4) in hits
        for a in range(6, 13):
            for b in range(5, 13):
                assert (0, a, b) in hits

    def test_contradiction(self):
        assert scan(range(3), range(1, 5), range(1, 5), ["sc", "!sc"]) == []

    def test_errors(self):
        with pytest.raises(ValueError):
            scan([], [1], [1])
        with pytest.raises(ValueError):
            parse_predicates("sc,bogus")
        assert parse_predicates(" sc , tau>0 ") == ("sc", "tau>0")


class TestEqualChernPair:
    def test_smallest(self):
        r = equal_chern_pair(1, 1)
        assert r.first.as_tuple() == (1, 1, 2) and r.second.as_tuple() == (0, 2, 2)
        assert r.first.n == r.second.n == 8
        assert r.chern_equal and r.groups_differ
        assert r.pi1_first.trivial and r.pi1_second == GroupDescriptor(2, 6)

    @pytest.mark.parametrize("s", [1, 3, 5, 7, 9])
    def test_range(self, s):
        for t in (1, 3, 5, 7, 9):
            if gcd(s, t) != 1:
                continue
            r = equal_chern_pair(s, t)
            assert r.chern_equal and r.groups_differ
            assert r.pi1_second == GroupDescriptor(2, 4 * s * t + 4 * t * t - 2)
            # the displayed c1^2 bracket is off by exactly 6 t^3; the c2 bracket is exact
            assert r.displayed_c1sq_offset == 6 * t ** 3
            assert r.displayed_c2_offset == 0

    @pytest.mark.parametrize("bad", [(2, 1), (1, 2), (3, 3), (0, 1)])
    def test_rejected(self, bad):
        with pytest.raises(ValueError):
            equal_chern_pair(*bad)

    def test_json(self):
        d = json.loads(json.dumps(equal_chern_pair(3, 1).to_json()))
        assert d["chern_equal"] and d["displayed_c1sq_offset"] == [6, 1]
