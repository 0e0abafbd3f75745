"""Exact Laurent arithmetic: ring axioms, bar, truncation, serialization."""

from hypothesis import given, settings
from hypothesis import strategies as st

from heckecells.laurent import NEG_INF, LaurentPoly, xi

polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-50, max_value=50),
    max_size=6,
).map(LaurentPoly.from_terms)


class TestDegree:
    def test_zero(self):
        assert LaurentPoly.zero().degree == NEG_INF

    def test_plain(self):
        p = LaurentPoly.from_terms({3: 1, -3: 1})
        assert p.degree == 3
        assert p.min_degree == -3

    def test_xi(self):
        assert xi(2) == LaurentPoly.from_terms({2: 1, -2: -1})
        assert xi(2).degree == 2

    @given(polys, polys)
    @settings(max_examples=80)
    def test_degree_multiplicative(self, p, q):
        if p.is_zero() or q.is_zero():
            assert (p * q).is_zero()
        else:
            assert (p * q).degree == p.degree + q.degree


class TestRingAxioms:
    @given(polys, polys, polys)
    @settings(max_examples=80)
    def test_associativity_distributivity(self, p, q, r):
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert (p + q) + r == p + (q + r)

    @given(polys)
    @settings(max_examples=50)
    def test_units_and_negation(self, p):
        one = LaurentPoly.one()
        assert p * one == p
        assert p - p == LaurentPoly.zero()
        assert -(-p) == p

    @given(polys, polys)
    @settings(max_examples=50)
    def test_commutative(self, p, q):
        assert p * q == q * p


class TestBar:
    def test_bar_q(self):
        assert LaurentPoly.monomial(1, 1).bar() == LaurentPoly.monomial(1, -1)

    def test_bar_flips_xi(self):
        assert xi(2).bar() == -xi(2)

    @given(polys)
    @settings(max_examples=50)
    def test_involution(self, p):
        assert p.bar().bar() == p

    @given(polys, polys)
    @settings(max_examples=50)
    def test_ring_map(self, p, q):
        assert (p * q).bar() == p.bar() * q.bar()
        assert (p + q).bar() == p.bar() + q.bar()


class TestNegativePart:
    def test_examples(self):
        p = LaurentPoly.from_terms({2: 1, 0: 3, -1: 1})
        assert p.negative_part() == LaurentPoly.from_terms({-1: 1})
        assert LaurentPoly.zero().negative_part() == LaurentPoly.zero()

    @given(polys)
    @settings(max_examples=80)
    def test_splitting_uniqueness(self, p):
        # for any anti-invariant f (bar f = -f) the strictly negative part
        # determines f: f = neg(f) - bar(neg(f))
        f = p - p.bar()
        assert f.bar() == -f
        neg = f.negative_part()
        assert neg - neg.bar() == f


class TestSerialization:
    @given(polys)
    @settings(max_examples=50)
    def test_pairs_round_trip(self, p):
        assert LaurentPoly.from_pairs(p.to_pairs()) == p

    def test_pairs_sorted(self):
        p = LaurentPoly.from_terms({5: 2, -3: 7, 0: -1})
        assert p.to_pairs() == [[-3, 7], [0, -1], [5, 2]]

    def test_repr_readable(self):
        assert repr(LaurentPoly.from_terms({1: 1, -1: -1})) == "q-q^-1"
        assert repr(LaurentPoly.zero()) == "0"
