"""Weight-space forms, critical values and lines, triple points, exports."""

import json
from fractions import Fraction as F

import pytest

from heckecells.coxeter import CoxeterSystem, WeightFunction
from heckecells.errors import NotApplicableSystem, UndefinedInChamber
from heckecells.params import (
    LinearForm,
    aprime_form,
    arrangement_svg,
    critical_lines_2d,
    critical_values_1d,
    d_levels,
    export_arrangement,
    loci_from_json,
    loci_to_csv,
    loci_to_json,
    triple_points,
)


class TestForms:
    def test_generator(self):
        assert aprime_form("r", 4, 6) == LinearForm(ca=F(1))

    def test_short_element_m4(self):
        # a > b: a + (a - b) = 2a - b
        f = aprime_form("sw_rs", 4, 6, (1, 0))
        assert f == LinearForm(F(2), F(-1), F(0))
        assert f.eval(5, 1, 1) == 9

    def test_longest_st_m6(self):
        assert aprime_form("w_st", 4, 6) == LinearForm(F(0), F(3), F(3))

    def test_chamber_guard(self):
        with pytest.raises(UndefinedInChamber):
            aprime_form("sw_rs", 4, 6, (-1, 0))
        with pytest.raises(UndefinedInChamber):
            aprime_form("sw_rs", 5, 6, (1, 0))


class TestCriticalValues:
    def test_245(self):
        assert critical_values_1d(2, 5) == [
            F(1, 2), F(1), F(3, 2), F(2), F(3), F(4)]

    def test_238(self):
        assert critical_values_1d(4, 3) == [
            F(1, 3), F(1), F(4, 3), F(3, 2), F(2)]

    def test_264(self):
        assert critical_values_1d(3, 4) == [
            F(1, 3), F(2, 3), F(1), F(3, 2), F(2), F(3)]

    def test_affine_rejected(self):
        with pytest.raises(NotApplicableSystem):
            critical_values_1d(3, 3)


class TestTriplePoints:
    def test_246_points(self):
        pts = triple_points(2, 3)
        coords = {(p.x, p.y): set(p.symbols) for p in pts}
        assert coords == {
            (F(1), F(1)): {"r", "s", "t"},
            (F(2, 5), F(6, 5)): {"rw_rs", "w_rt", "sw_st"},
            (F(3, 5), F(4, 5)): {"rw_rs", "w_rt", "tw_st"},
            (F(3, 2), F(1, 2)): {"sw_rs", "w_rt", "tw_st"},
            (F(4), F(3)): {"sw_rs", "w_rt", "sw_st"},
        }

    def test_points_really_have_triple_levels(self):
        sys = CoxeterSystem.rank3(4, 6, 2, 8)
        for p in triple_points(2, 3):
            den = p.x.denominator * p.y.denominator
            weights = WeightFunction((int(p.x * den), den, int(p.y * den)))
            levels = d_levels(sys, weights)
            assert max(len(v) for v in levels.values()) == 3

    def test_named_coincidence_structure(self):
        # among the named weight points only the triple points carry a
        # level with three members; (2,1) and (14,8) stay below three
        sys = CoxeterSystem.rank3(4, 6, 2, 8)
        for a, b, c in ((2, 1, 1), (14, 1, 8)):
            levels = d_levels(sys, WeightFunction((a, b, c)))
            assert max(len(v) for v in levels.values()) == 2


class TestDLevels:
    def test_245_table(self, fix245):
        assert d_levels(fix245.system, fix245.weights) == {
            0: ["e"], 1: ["s", "t"], 5: ["r", "ststs"],
            6: ["rt"], 9: ["rsr"], 12: ["rsrs"],
        }


class Test2DLoci:
    @pytest.fixture(scope="class")
    def loci(self):
        return critical_lines_2d(2, 3)

    def test_sample_points_lie_on_loci(self, loci):
        for rec in loci:
            x, y = rec.sample
            assert rec.form.eval(x, 1, y) == 0

    def test_rt_locus_verdicts(self, loci):
        rt = [rec for rec in loci if (rec.d1, rec.d2) == ("r", "t")]
        verdicts = {rec.chamber: rec.critical for rec in rt}
        assert verdicts == {("a<b", "b>c"): False, ("a>b", "b<c"): True}

    def test_w_rs_t_is_dotted(self, loci):
        recs = [rec for rec in loci if {rec.d1, rec.d2} == {"t", "w_rs"}]
        assert recs and all(not rec.critical for rec in recs)

    def test_w_rt_w_rs_is_solid(self, loci):
        recs = [rec for rec in loci if {rec.d1, rec.d2} == {"w_rt", "w_rs"}]
        assert recs and all(rec.critical for rec in recs)
        assert recs[0].form in (LinearForm(F(-1), F(-2), F(1)),
                                LinearForm(F(1), F(2), F(-1)))

    def test_variant_pairs_split_at_level_line(self, loci):
        pair = [rec for rec in loci if {rec.d1, rec.d2} == {"sw_rs", "tw_st"}]
        assert len(pair) == 2
        by_side = {rec.chamber[-1]: rec.critical for rec in pair}
        assert by_side == {"a+c<N": True, "a+c>N": False}

    def test_unsplit_variant_pair_always_critical(self, loci):
        pair = [rec for rec in loci if {rec.d1, rec.d2} == {"rw_rs", "tw_st"}]
        assert pair and all(rec.critical for rec in pair)


class TestExport:
    @pytest.fixture(scope="class")
    def loci(self):
        return critical_lines_2d(2, 3)

    def test_csv_golden_head(self, loci):
        text = loci_to_csv(loci)
        lines = text.strip().splitlines()
        assert lines[0] == "d1,d2,alpha,beta,gamma,chamber,critical"
        assert lines[1] == "r,t,1,0,-1,a<b;b>c,false"
        assert lines[2] == "r,t,1,0,-1,a>b;b<c,true"
        assert len(lines) == len(loci) + 1

    def test_json_round_trip(self, loci):
        blob = loci_to_json(loci, 2, 3)
        back = loci_from_json(json.loads(json.dumps(blob)))
        assert back == loci

    def test_svg_deterministic_and_marked(self, loci, tmp_path):
        p1, p2 = tmp_path / "a.svg", tmp_path / "b.svg"
        pts = [("A", F(2, 5), F(6, 5))]
        export_arrangement(loci, "svg", p1, m=2, n=3, points=pts)
        export_arrangement(loci, "svg", p2, m=2, n=3, points=pts)
        body = p1.read_text()
        assert p1.read_bytes() == p2.read_bytes()
        assert body.startswith("<svg")
        assert "stroke-dasharray" in body  # non-critical segments dashed
        assert "<circle" in body

    def test_empty_loci_svg_valid(self, tmp_path):
        path = tmp_path / "empty.svg"
        export_arrangement([], "svg", path)
        text = path.read_text()
        assert text.startswith("<svg") and text.rstrip().endswith("</svg>")

    def test_csv_file_round(self, loci, tmp_path):
        path = tmp_path / "arr.csv"
        export_arrangement(loci, "csv", path, m=2, n=3)
        assert path.read_text() == loci_to_csv(loci)
