"""a-function data, gamma coefficients, distinguished elements, P checks."""

from collections import Counter

import pytest

from heckecells.afun import (
    ExactA,
    HSweep,
    PChecker,
    PredictedA,
    delta_n,
    distinguished_ball,
    exact_a_table,
    gamma_coeff,
)
from heckecells.errors import UnsupportedWithoutPrediction


class TestDeltaN:
    def test_identity(self, fix245):
        assert delta_n(fix245.algebra, 0) == (0, 1)

    def test_generator(self, fix245):
        assert delta_n(fix245.algebra, fix245.e("s")) == (1, 1)
        assert delta_n(fix245.algebra, fix245.e("r")) == (5, 1)

    def test_equal_parameter_dihedral_element(self, spherical233):
        d, n = delta_n(spherical233.algebra, spherical233.e("rsr"))
        assert (d, n) == (3, 1)

    def test_example_distinguished(self, fix245):
        d, n = delta_n(fix245.algebra, fix245.e("rsr"))
        assert d == 9 and n in (1, -1)


class TestDistinguishedBall:
    def test_contains_identity_and_generators(self, fix245):
        dball = distinguished_ball(fix245.algebra, 3, fix245.a_pred)
        assert 0 in dball
        for g in "rst":
            assert fix245.e(g) in dball

    def test_contains_rsr(self, fix245):
        dball = distinguished_ball(fix245.algebra, 5, fix245.a_pred)
        assert fix245.e("rsr") in dball

    def test_needs_a_source(self, fix245):
        with pytest.raises(UnsupportedWithoutPrediction):
            distinguished_ball(fix245.algebra, 3, None)


class TestGamma:
    def test_gamma_sss(self, fix245):
        s = fix245.e("s")
        assert gamma_coeff(fix245.algebra, s, s, s, 1) == 1

    def test_gamma_sse(self, fix245):
        s = fix245.e("s")
        assert gamma_coeff(fix245.algebra, s, s, 0, 0) == 0

    def test_gamma_unit_rows(self, fix245):
        y = fix245.e("st")
        z = fix245.system.inverse(y)
        a_z = fix245.dset.a_pred(z)
        val = gamma_coeff(fix245.algebra, 0, y, z, a_z)
        assert val == (1 if a_z == 0 else 0)

    def test_sweep_matches_direct(self, fix245):
        sweep = fix245.sweep(4)
        alg, sys = fix245.algebra, fix245.system
        for x_w, y_w, z_w in (("s", "s", "s"), ("rs", "sr", "r"),
                              ("st", "ts", "s")):
            x, y, z = fix245.e(x_w), fix245.e(y_w), fix245.e(z_w)
            assert sweep.gamma(x, y, z) == gamma_coeff(
                alg, x, y, z, fix245.dset.a_pred(z))


class TestSweep:
    def test_a_ball_examples(self, fix245):
        sweep = fix245.sweep(4)
        val, wit = sweep.a_ball(0)
        assert val == 0 and wit == (0, 0)
        s = fix245.e("s")
        val, wit = sweep.a_ball(s)
        assert val == 1 and wit == (s, s)

    def test_monotone_in_radius(self, fix245):
        small = HSweep(fix245.algebra, 2, fix245.a_pred)
        big = fix245.sweep(4)
        for w in fix245.system.ball(2):
            assert small.max_deg.get(w, 0) <= big.max_deg.get(w, 0)

    def test_inverse_symmetric(self, fix245):
        sweep = fix245.sweep(4)
        sys = fix245.system
        for w in sys.ball(4):
            assert sweep.max_deg.get(w) == sweep.max_deg.get(sys.inverse(w))

    def test_never_exceeds_prediction(self, fix246):
        sweep = fix246.sweep(4)
        for z, deg in sweep.max_deg.items():
            assert deg <= fix246.dset.a_pred(z)


class TestExactTable:
    def test_multiset(self, spherical233):
        counts = Counter(spherical233.a_table.values())
        assert sorted(counts) == [0, 1, 2, 3, 6]
        assert counts[0] == 1 and counts[6] == 1

    def test_longest_element_value(self, spherical233):
        w0 = spherical233.system.longest_element("rst")
        assert spherical233.a_table[w0] == 6

    def test_delta_dominates(self, spherical233):
        for w, a in spherical233.a_table.items():
            assert a <= delta_n(spherical233.algebra, w)[0]


class TestPCheckSmall:
    def test_p6_on_245(self, fix245):
        chk = PChecker(fix245.algebra, fix245.a_pred, 4,
                       sweep=fix245.sweep(4), cert_radius=4)
        assert chk.check(6).passed

    def test_p1_on_spherical(self, spherical233):
        chk = PChecker(spherical233.algebra, spherical233.a_exact, 6)
        assert chk.check(1).passed

    def test_p7_spot(self, fix245):
        sweep = fix245.sweep(4)
        s = fix245.e("s")
        assert sweep.gamma(s, s, s) == sweep.gamma(s, s, s)

    def test_report_shape(self, fix245):
        chk = PChecker(fix245.algebra, fix245.a_pred, 3,
                       sweep=fix245.sweep(4), cert_radius=4)
        rep = chk.check(1)
        blob = rep.to_json()
        assert blob["statement"] == "P1" and blob["radius"] == 3
        assert blob["result"] in ("pass", "fail")
        assert isinstance(blob["caveats"], list)
