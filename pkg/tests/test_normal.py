"""Left-canonical form, the word-problem decision, and normal-form algebra."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bandbraid import (
    BraidError,
    BraidWord,
    NormalForm,
    delta_word,
    enumerate_factors,
    equal,
    identity_factor,
    delta_factor,
    random_word,
    invert_normal_form,
    invert_word,
    left_canonical_form,
    left_weight_pair,
    multiply,
    normal_form_word,
    parse_word,
    render_normal_form,
    to_delta_positive,
    to_band_word,
)
from bandbraid.factors import complement_set, starting_set
from bandbraid.normal import is_left_weighted, normal_form_of_factor
from bandbraid.oracle import equal_via_oracle

from conftest import mutate_word
from test_words import words_st


def is_factor_form(nf: NormalForm) -> bool:
    return nf.inf >= 0 and nf.sup <= 1


class TestGolden:
    def test_half_twist_in_b3(self):
        nf = left_canonical_form(parse_word("s1 s2 s1", 3))
        assert render_normal_form(nf) == "D^1 . (3,2)"
        assert (nf.inf, nf.sup) == (1, 2)

    def test_identity(self):
        nf = left_canonical_form(BraidWord(4))
        assert (nf.inf, nf.sup) == (0, 0)
        assert render_normal_form(nf) == "D^0 ."

    def test_delta(self):
        nf = left_canonical_form(delta_word(4))
        assert (nf.inf, nf.sup) == (1, 1)
        assert nf.factors == ()

    def test_braid_relation(self):
        assert equal(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3))

    def test_distinct_generators_differ(self):
        assert not equal(parse_word("a(2,1)", 3), parse_word("a(3,2)", 3))

    def test_strand_count_mismatch(self):
        with pytest.raises(BraidError):
            equal(BraidWord(3), BraidWord(4))


class TestToDeltaPositive:
    def test_trivial_cases(self):
        assert to_delta_positive(BraidWord(4)) == (0, BraidWord(4))
        p, q = to_delta_positive(delta_word(4))
        assert p == 0 and q == delta_word(4)

    def test_single_negative_letter(self):
        p, q = to_delta_positive(parse_word("a(3,1)^-1", 4))
        assert p == -1
        assert q == parse_word("a(4,3) a(2,1)", 4)

    @settings(max_examples=50)
    @given(words_st(max_n=5, max_len=8))
    def test_output_is_positive_and_equal(self, w):
        p, q = to_delta_positive(w)
        assert q.is_positive()
        assert p == -sum(1 for x in w.letters if x.sign < 0)
        dp = BraidWord(w.n, delta_word(w.n).letters * max(p, 0))
        if p < 0:
            dp = BraidWord(w.n, invert_word(delta_word(w.n)).letters * (-p))
        assert equal(dp * q, w)

    @settings(max_examples=20)
    @given(words_st(max_n=3, max_len=4))
    def test_agrees_with_group_element_via_oracle(self, w):
        # q = D^-p w with p <= 0, so D^-p is a positive padding
        p, q = to_delta_positive(w)
        padding = BraidWord(w.n, delta_word(w.n).letters * (-p))
        assert equal_via_oracle(q, padding * w)


class TestLeftWeighting:
    @pytest.mark.parametrize("n", range(2, 5))
    def test_pairs_exhaustive(self, n):
        for a, b in product(enumerate_factors(n), repeat=2):
            a2, b2 = left_weight_pair(a, b)
            assert is_left_weighted(a2, b2)
            lhs = left_canonical_form(to_band_word(a) * to_band_word(b))
            rhs = left_canonical_form(to_band_word(a2) * to_band_word(b2))
            assert lhs.key() == rhs.key()

    @pytest.mark.parametrize("n", range(2, 5))
    def test_two_characterizations_agree(self, n):
        from bandbraid.factors import obstructing_pair

        for a, b in product(enumerate_factors(n), repeat=2):
            via_sets = not (complement_set(a) & starting_set(b))
            wa = to_band_word(a)
            via_words = all(
                obstructing_pair(wa * BraidWord(n, (x,))) is not None
                for x in to_letter_choices(b)
            )
            assert is_left_weighted(a, b) == via_sets == via_words

    @pytest.mark.parametrize("n", range(2, 5))
    def test_maximal_head_property(self, n):
        # For a left-weighted pair (A, B), every factor dividing AB on the
        # left already divides A.
        fs = enumerate_factors(n)
        words = {a: to_band_word(a) for a in fs}

        def quotient(x, w):
            return left_canonical_form(invert_word(words[x]) * w)

        proper = [a for a in fs if not a.is_identity() and not a.is_delta()]
        for a, b in product(proper, repeat=2):
            if not is_left_weighted(a, b):
                continue
            ab = words[a] * words[b]
            for x in fs:
                if quotient(x, ab).inf >= 0:
                    assert is_factor_form(quotient(x, words[a]))

    @pytest.mark.parametrize("n", range(2, 5))
    def test_head_absorbs_canonical_products(self, n):
        # With AB and BC canonical factors: (A, C) left-weighted iff (AB, C) is.
        fs = enumerate_factors(n)
        words = {a: to_band_word(a) for a in fs}
        prod = {}
        for a, b in product(fs, repeat=2):
            nf = left_canonical_form(words[a] * words[b])
            if is_factor_form(nf):
                if nf.factors:
                    prod[a, b] = nf.factors[0]
                else:
                    prod[a, b] = delta_factor(n) if nf.u else identity_factor(n)
        for (a, b), ab in prod.items():
            for c in fs:
                if (b, c) in prod:
                    assert is_left_weighted(a, c) == is_left_weighted(ab, c)


def to_letter_choices(b):
    from bandbraid.words import BandLetter

    return [BandLetter(t, s) for t, s in starting_set(b)]


class TestNormalFormInvariants:
    @given(words_st(max_n=6, max_len=12))
    def test_structural_invariants(self, w):
        nf = left_canonical_form(w)
        for a in nf.factors:
            assert not a.is_identity() and not a.is_delta()
        for a, b in zip(nf.factors, nf.factors[1:]):
            assert is_left_weighted(a, b)
        assert nf.canonical_length == len(nf.factors)
        assert (nf.inf, nf.sup) == (nf.u, nf.u + len(nf.factors))

    @given(words_st(max_n=6, max_len=10))
    def test_round_trip_through_word(self, w):
        nf = left_canonical_form(w)
        assert left_canonical_form(normal_form_word(nf)).key() == nf.key()

    def test_uniqueness_under_mutation(self, rng):
        for _ in range(100):
            n = rng.randint(2, 6)
            w = random_word(n, rng.randint(0, 12), rng)
            w2 = mutate_word(w, rng, rng.randint(1, 10))
            assert left_canonical_form(w).key() == left_canonical_form(w2).key()


class TestInverse:
    def test_golden(self):
        nf = left_canonical_form(parse_word("s1 s2 s1", 3))
        inv = invert_normal_form(nf)
        assert (inv.inf, inv.sup) == (-2, -1)

    @given(words_st(max_n=6, max_len=10))
    def test_matches_word_inversion_and_is_normal(self, w):
        nf = left_canonical_form(w)
        inv = invert_normal_form(nf)
        assert inv.key() == left_canonical_form(invert_word(w)).key()
        for a, b in zip(inv.factors, inv.factors[1:]):
            assert is_left_weighted(a, b)
        assert multiply(nf, inv).key() == left_canonical_form(BraidWord(w.n)).key()


class TestMultiply:
    @given(words_st(max_n=5, max_len=8), st.data())
    def test_matches_concatenation(self, v, data):
        w = data.draw(words_st(min_n=v.n, max_n=v.n, max_len=8))
        got = multiply(left_canonical_form(v), left_canonical_form(w))
        assert got.key() == left_canonical_form(v * w).key()

    @given(words_st(max_n=5, max_len=8), st.data())
    def test_inf_sup_sub_super_additive(self, v, data):
        w = data.draw(words_st(min_n=v.n, max_n=v.n, max_len=8))
        a, b = left_canonical_form(v), left_canonical_form(w)
        c = multiply(a, b)
        assert c.inf >= a.inf + b.inf
        assert c.sup <= a.sup + b.sup

    def test_strand_count_mismatch(self):
        with pytest.raises(BraidError):
            multiply(
                left_canonical_form(BraidWord(3)),
                left_canonical_form(BraidWord(4)),
            )


class TestCentrality:
    @given(words_st(max_n=5, max_len=8))
    def test_delta_nth_power_is_central(self, w):
        dn = BraidWord(w.n, delta_word(w.n).letters * w.n)
        assert equal(dn * w, w * dn)


class TestFactorNormalForm:
    @pytest.mark.parametrize("n", range(2, 5))
    def test_agrees_with_word_normalization(self, n):
        for a in enumerate_factors(n):
            nf = normal_form_of_factor(a)
            assert nf.key() == left_canonical_form(to_band_word(a)).key()


class TestOracleAgreement:
    def test_random_sample(self, rng):
        for _ in range(60):
            n = rng.randint(2, 4)
            v = random_word(n, rng.randint(0, 6), rng)
            w = random_word(n, rng.randint(0, 6), rng)
            assert equal(v, w) == equal_via_oracle(v, w)
