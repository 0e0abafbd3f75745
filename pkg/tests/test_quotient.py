"""Truncated algebra and product-expansion verification."""

import pytest

from heckecells.errors import UnsupportedLemma
from heckecells.hecke import HeckeElt
from heckecells.laurent import LaurentPoly
from heckecells.quotient import (
    EXPANSION_CASES,
    TruncatedAlgebra,
    all_expansion_case_ids,
    mirror_case,
    verify_expansion,
)


@pytest.fixture(scope="module")
def trunc9(fix245):
    return TruncatedAlgebra(fix245.algebra, fix245.dset, 9)


class TestNTReduce:
    def test_identity_below_cut(self, fix245, trunc9):
        h = fix245.algebra.t(fix245.e("st"))
        assert trunc9.nt_reduce(h) == h

    def test_identity_when_cut_above_everything(self, fix245):
        trunc = TruncatedAlgebra(fix245.algebra, fix245.dset, 12)
        w = fix245.e("rsrs")
        assert trunc.nt_reduce(fix245.algebra.t(w)) == fix245.algebra.t(w)

    def test_c_of_over_element_dies(self, fix245, trunc9):
        c = fix245.algebra.c_basis(fix245.e("rsrs"))
        assert trunc9.nt_reduce(c).is_zero()

    def test_t_of_over_element_expands_downward(self, fix245, trunc9):
        w = fix245.e("rsrs")
        reduced = trunc9.nt_reduce(fix245.algebra.t(w))
        col = fix245.algebra._solve_column(w)
        expected = HeckeElt({
            y: -LaurentPoly(dict(p)) for y, p in col.items() if y != w
        })
        assert reduced == expected

    def test_linear_and_idempotent(self, fix245, trunc9):
        alg = fix245.algebra
        h1 = alg.t_mult(alg.t(fix245.e("rsr")), alg.t(fix245.e("rs")))
        h2 = alg.t(fix245.e("ststs"))
        r1, r2 = trunc9.nt_reduce(h1), trunc9.nt_reduce(h2)
        assert trunc9.nt_reduce(r1) == r1
        assert trunc9.nt_reduce(h1 + h2) == r1 + r2

    def test_support_below_cut(self, fix245, trunc9):
        h = trunc9.nt_product(fix245.e("rsr"), fix245.e("rsr"))
        for w in h.support():
            assert fix245.dset.a_pred(w) <= 9


class TestNfConstants:
    def test_unit(self, fix245, trunc9):
        y = fix245.e("rst")
        assert trunc9.nf_const(0, y, y) == LaurentPoly.one()

    def test_peak_degree_attained(self, fix245, trunc9):
        rsr = fix245.e("rsr")
        assert trunc9.nt_product(rsr, rsr).degree == 9

    def test_agrees_with_f_below_cut(self, fix245, trunc9):
        alg = fix245.algebra
        x, y = fix245.e("st"), fix245.e("ts")
        prod = alg.t_mult(alg.t(x), alg.t(y))
        if all(fix245.dset.a_pred(z) <= 9 for z in prod.support()):
            for z in prod.support():
                assert trunc9.nf_const(x, y, z) == prod.get(z)

    def test_over_elements_have_negative_degree(self, fix245, trunc9):
        sys = fix245.system
        for z in sys.ball(6):
            if fix245.dset.a_pred(z) > 9:
                assert trunc9.nt_reduce(fix245.algebra.t(z)).degree < 0


class TestBounds:
    def test_bound_small_radius(self, fix245, trunc9):
        rep = trunc9.check_bound(4)
        assert rep["passed"]
        for xw, yw in rep["equality_witnesses"]:
            x, y = fix245.e(xw), fix245.e(yw)
            assert fix245.dset.a_pred(x) == fix245.dset.a_pred(y) == 9

    def test_strict_small_radius(self, fix245, trunc9):
        rep = trunc9.check_strict(fix245.e("rsr"), 3)
        assert rep["passed"] and rep["checked"] > 0

    def test_trivial_cut_quantifies_identity_only(self, fix245):
        # below every positive level the eligible set is just {e}
        trunc = TruncatedAlgebra(fix245.algebra, fix245.dset, 0)
        rep = trunc.check_bound(2)
        assert rep["passed"] and rep["pairs"] == 1


class TestExpansions:
    def test_registry_complete(self):
        ids = all_expansion_case_ids()
        assert len(ids) == 49
        assert sum(1 for i in ids if i.startswith("reduced0:")) == 2
        assert sum(1 for i in ids if i.startswith("reduced:")) == 8
        assert sum(1 for i in ids if i.startswith("reduced2:")) == 39

    @pytest.mark.parametrize("case_id", [
        "reduced0:1", "reduced0:2", "reduced:1", "reduced:3",
        "reduced2:3.1", "reduced2:8.2", "reduced2:8.17",
    ])
    def test_spot_cases(self, case_id):
        rep = verify_expansion(case_id)
        assert rep.passed and rep.samples_run >= 1

    def test_case_84_at_both_bonds(self):
        assert verify_expansion("reduced2:8.4").passed
        assert verify_expansion(
            "reduced2:8.4", {"m_rs": 8, "weights": (4, 2, 2)}).passed

    def test_mirror(self):
        rep = verify_expansion("reduced0:2", mirror=True)
        assert rep.passed

    def test_mirror_case_data(self):
        case = mirror_case(EXPANSION_CASES["reduced:3"])
        assert case.w == "tr"
        assert "Wst" in case.x_pieces[1]

    def test_unknown_case(self):
        with pytest.raises(UnsupportedLemma):
            verify_expansion("reduced9:1")

    def test_sample_cap(self):
        rep = verify_expansion("reduced0:2", max_samples=5)
        assert rep.samples_run <= 5
