"""Word problem, orders, and factorization predicates."""

import itertools

import pytest

from heckecells.coxeter import INFINITY, CoxeterSystem, WeightFunction
from heckecells.errors import HorizonExceeded, InfiniteParabolic, UnknownGenerator

from oracles import oracle_normal_form, oracle_reduced_words


def words_up_to(system, n):
    for k in range(n + 1):
        for combo in itertools.product(system.labels, repeat=k):
            yield "".join(combo)


class TestNormalForm:
    def test_squares_cancel(self, fix245):
        assert fix245.system.word(fix245.e("rr")) == ""

    def test_commuting_pair_sorted(self, fix245):
        assert fix245.system.word(fix245.e("tr")) == "rt"

    def test_braid_orbit_shortlex_least(self):
        sys = CoxeterSystem.rank3(3, 3, 2, 10)
        assert sys.word(sys.element("srs")) == "rsr"

    @pytest.mark.parametrize("bonds", [(4, 5), (3, 3), (INFINITY, 3), (7, 3)])
    def test_against_braid_move_oracle(self, bonds):
        sys = CoxeterSystem.rank3(*bonds, 2, ball_radius_limit=8)
        for word in words_up_to(sys, 5):
            assert sys.word(sys.normal_form(word)) == oracle_normal_form(sys, word)

    def test_idempotent_and_braid_constant(self, fix245):
        sys = fix245.system
        for w in sys.ball(5):
            canon = sys.word(w)
            assert sys.word(sys.normal_form(canon)) == canon
            for other in oracle_reduced_words(sys, canon):
                assert sys.normal_form(other) == w

    def test_unknown_generator(self, fix245):
        with pytest.raises(UnknownGenerator):
            fix245.system.normal_form("rx")

    def test_horizon_fails_loudly(self):
        sys = CoxeterSystem.rank3(4, 5, 2, ball_radius_limit=3)
        with pytest.raises(HorizonExceeded):
            sys.normal_form("rsrt")


class TestMultInverse:
    def test_identity(self, fix245):
        w = fix245.e("rst")
        assert fix245.system.mult(0, w) == w
        assert fix245.system.mult(w, 0) == w

    def test_inverse_pair(self, fix245):
        sys = fix245.system
        assert sys.mult(fix245.e("rs"), fix245.e("sr")) == 0

    def test_cancellation(self):
        sys = CoxeterSystem.rank3(4, 5, 2, 10)
        assert sys.word(sys.mult(sys.element("rsr"), sys.element("r"))) == "rs"

    def test_inverse_table(self, fix245):
        sys = fix245.system
        for w in sys.ball(6):
            assert sys.mult(w, sys.inverse(w)) == 0

    def test_length_changes_by_one(self, fix245):
        sys = fix245.system
        for w in sys.ball(6):
            for g in range(sys.rank):
                assert abs(sys.length(sys.right_mult(w, g)) - sys.length(w)) == 1


class TestLengthWeight:
    def test_length_of_identity(self, fix245):
        assert fix245.system.length(0) == 0

    def test_weight_additive(self, fix245):
        sys, L = fix245.system, fix245.weights
        assert sys.weight_of(L, fix245.e("rsr")) == 11

    def test_weight_longest_st(self):
        sys = CoxeterSystem.rank3(4, 6, 2, 10)
        L = WeightFunction((2, 1, 1))
        assert sys.weight_of(L, sys.element("ststst")) == 6

    def test_odd_bond_forces_equal_weights(self):
        sys = CoxeterSystem.rank3(4, 5, 2, 4)
        with pytest.raises(ValueError):
            sys.validate_weights(WeightFunction((5, 1, 2)))
        sys.validate_weights(WeightFunction((5, 1, 1)))


class TestDescents:
    def test_identity_has_none(self, fix245):
        assert fix245.system.descents(0, "left") == frozenset()

    def test_rst_left_right(self, fix245):
        sys = fix245.system
        w = fix245.e("rst")
        assert sys.descents(w, "left") == {"r"}
        assert sys.descents(w, "right") == {"t"}

    def test_against_length_oracle(self, fix245):
        sys = fix245.system
        for w in sys.ball(5):
            left = {lab for g, lab in enumerate(sys.labels)
                    if sys.length(sys.left_mult(g, w)) < sys.length(w)}
            assert sys.descents(w, "left") == left


class TestBruhat:
    def test_identity_below_all(self, fix245):
        for w in fix245.system.ball(4):
            assert fix245.system.bruhat_leq(0, w)

    def test_subword_examples(self, fix245):
        sys = fix245.system
        assert sys.bruhat_leq(fix245.e("rt"), fix245.e("rst"))
        assert not sys.bruhat_leq(fix245.e("sts"), fix245.e("st"))

    def test_partial_order(self, fix245):
        sys = fix245.system
        ball = list(sys.ball(4))
        for x in ball:
            for y in ball:
                if sys.bruhat_leq(x, y) and sys.bruhat_leq(y, x):
                    assert x == y
                if sys.bruhat_leq(x, y) and x != y:
                    assert sys.length(x) < sys.length(y)

    def test_dihedral_total_on_chains(self):
        sys = CoxeterSystem.dihedral(5, "st", 10)
        ball = list(sys.ball(5))
        for x in ball:
            for y in ball:
                if sys.length(x) < sys.length(y):
                    assert sys.bruhat_leq(x, y)


class TestFactorizations:
    def test_prefixes_contain_ends(self, fix245):
        sys = fix245.system
        for w in sys.ball(5):
            pref = sys.weak_prefixes(w)
            assert 0 in pref and w in pref
            assert len(pref) >= sys.length(w) + 1

    def test_prefixes_examples(self, fix245):
        sys = fix245.system
        assert [sys.word(x) for x in sys.weak_prefixes(fix245.e("rst"))] == \
            ["", "r", "rs", "rst"]
        assert [sys.word(x) for x in sys.weak_prefixes(fix245.e("rt"))] == \
            ["", "r", "t", "rt"]

    def test_prefixes_against_oracle(self, fix245):
        sys = fix245.system
        for w in sys.ball(5):
            brute = {
                x for x in sys.ball(sys.length(w))
                if sys.strip_left_factor(x, w) is not None
            }
            assert set(sys.weak_prefixes(w)) == brute

    def test_contains_factor(self, fix245):
        sys = fix245.system
        assert sys.contains_factor(fix245.e("ststs"), fix245.e("sts"))
        assert not sys.contains_factor(fix245.e("rst"), fix245.e("rt"))
        assert sys.contains_factor(fix245.e("ststsr"), fix245.e("rt"))
        for w in sys.ball(4):
            assert sys.contains_factor(w, 0)


class TestLongestAndBall:
    def test_dihedral_longest(self, fix245):
        sys = fix245.system
        assert sys.word(sys.longest_element("st")) == "ststs"
        assert sys.word(sys.longest_element("rs")) == "rsrs"

    def test_infinite_parabolic(self):
        sys = CoxeterSystem.rank3(INFINITY, 3, 2, 8)
        with pytest.raises(InfiniteParabolic):
            sys.longest_element("rs")

    def test_ball_counts(self, fix245):
        sys = fix245.system
        assert list(sys.ball(0)) == [0]
        assert len(sys.ball(1)) == 4
        assert len(sys.ball(2)) == 9
        assert [sys.word(x) or "e" for x in sys.ball(2)] == \
            ["e", "r", "s", "t", "rs", "rt", "sr", "st", "ts"]

    def test_spherical_group_order(self, spherical233):
        sys = spherical233.system
        assert sys.is_finite()
        assert sys.size == 24
        assert sys.length(sys.longest_element("rst")) == 6

    def test_ball_sorted(self, fix245):
        sys = fix245.system
        ball = list(sys.ball(5))
        keys = [(sys.length(w), sys.word_indices(w)) for w in ball]
        assert keys == sorted(keys)


class TestInfiniteBondFacts:
    def test_no_double_descent_across_infinite_bond(self):
        # with no braid relation on r, s an element never ends in both
        sys = CoxeterSystem.rank3(INFINITY, 3, 2, 10)
        r, s = sys.gen_index("r"), sys.gen_index("s")
        for w in sys.ball(10):
            mask = sys.right_descent_mask(w)
            assert not (mask >> r & 1 and mask >> s & 1)
