"""Dihedral verification sweeps for the structure-constant lemmas.

Everything here lives in a two-generator system on s, t with bond m
(possibly infinite; then a length window stands in for the group, which
is exact for the statements restricted to that window).

T-basis structure constants f_{u,v,w} of a dihedral group are honest
polynomials in xi_s, xi_t with nonnegative integer coefficients.  The
sweeps recover that two-variable monomial support exactly from a single
numeric run: with auxiliary weights (1, M) and M larger than any
possible xi_s-exponent, distinct monomials xi_s^p xi_t^q have distinct
leading q-degrees p + qM, so greedily peeling the top monomial (whose
coefficient is the leading coefficient, positive) reconstructs the
support.  The support is weight-independent, while the degree laws are
then checked at the sweep's own weights.

Lemma identifiers:

  fuvw, fuvw2        monomial classification of f_{u,v,sts} / f_{u,v,st}
  infinite1/2        the same at m = infinity
  plusdeg            deg f_{u,v,w_I} = L(u)+L(v)-L(w_I) when nonzero
  degfp, degfp-cor   case table for deg f_{u,v,w_I} p_{sts,w_I}
  degfp2             deg f_{u,v,w_I} p_{st,w_I}
  aaa                deg p_{w,d_I} = L'(w) - L'(d_I) on [e, d_I]
  Fuv                recursion and base values of
                     F(u,v) = f_{u,v,d_I} - p_{d_I,w_I} f_{u,v,w_I}
  degnfp, degnfp2    case table for deg (F(u,v)) p_{sts,d_I} / p_{st,d_I}
  bbb1, bbb2, bbb3   the three strict bounds deg(...) < L(w)

Here d_I = s2 w_I and d'_I = s1 w_I for {s1, s2} = {s, t} ordered by
L(s1) > L(s2), and L' is the signed weight with L'(s2) = -L(s2); these
exist only for even m >= 4 and unequal weights, and sweeps whose
hypotheses are empty at the given parameters pass vacuously with a note.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import INFINITY, CoxeterSystem, WeightFunction
from .errors import UnsupportedLemma
from .hecke import HeckeAlgebra
from .laurent import LaurentPoly

LEMMA_IDS = (
    "fuvw", "infinite2", "fuvw2", "infinite1",
    "plusdeg", "degfp", "degfp-cor", "degfp2",
    "aaa", "Fuv", "degnfp", "degnfp2",
    "bbb1", "bbb2", "bbb3",
)

_ALIASES = {"bbb-part1": "bbb1", "bbb-part2": "bbb2", "bbb-part3": "bbb3"}


@dataclass
class SweepReport:
    lemma: str
    m: object
    weights: tuple[int, int]
    checked: int = 0
    passed: bool = True
    counterexample: dict | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "m": "inf" if self.m == INFINITY else self.m,
            "weights": list(self.weights),
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "note": self.note,
        }


class DihedralSweeper:
    """Shared state for the sweeps at one (m, weights) pair."""

    def __init__(self, m, weights: tuple[int, int], window: int = 12):
        self.m = m
        self.window = window if m == INFINITY else m
        limit = 2 * self.window + 2
        self.system = CoxeterSystem.dihedral(m, "st", ball_radius_limit=limit)
        self.weights = WeightFunction(tuple(weights))
        self.algebra = HeckeAlgebra(self.system, self.weights)
        # Separating auxiliary algebra for monomial-support recovery.  An
        # odd bond forces xi_s = xi_t, so only the collapsed one-variable
        # support is recoverable (or meaningful) there.
        self.collapsed = m != INFINITY and m % 2 == 1
        self._M = 1 if self.collapsed else 2 * self.window + 2
        self._sep = HeckeAlgebra(
            CoxeterSystem.dihedral(m, "st", ball_radius_limit=limit),
            WeightFunction((1, self._M)),
        )
        self.elements = list(self.system.ball(self.window))
        self._sep_xi_pows: dict[tuple[int, int], LaurentPoly] = {}

    # ---------------------------------------------------------------- helpers

    def L(self, x: int) -> int:
        return self.algebra.weight_of(x)

    def f(self, u: int, v: int, w: int) -> LaurentPoly:
        return self.algebra.f_const(u, v, w)

    def elt(self, word: str) -> int:
        return self.system.element(word)

    @property
    def w_I(self) -> int:
        if self.m == INFINITY:
            raise UnsupportedLemma("w_I does not exist at m = infinity")
        return self.system.longest_element("st")

    def signed_pair(self):
        """(heavy, light) generator indices, or None for equal weights."""
        ls, lt = self.weights[0], self.weights[1]
        if ls == lt:
            return None
        return (0, 1) if ls > lt else (1, 0)

    def d_I(self) -> int | None:
        """s2 w_I for unequal weights and even m >= 4, else None."""
        if self.m == INFINITY or self.m < 4 or self.m % 2:
            return None
        pair = self.signed_pair()
        if pair is None:
            return None
        _, light = pair
        return self.system.left_mult(light, self.w_I)

    def d_I_prime(self) -> int | None:
        pair = self.signed_pair()
        if pair is None or self.d_I() is None:
            return None
        heavy, _ = pair
        return self.system.left_mult(heavy, self.w_I)

    def signed_weight(self, x: int) -> int:
        """L' over any reduced word (heavy letter positive, light negative)."""
        pair = self.signed_pair()
        heavy, light = pair
        vals = {heavy: self.weights[heavy], light: -self.weights[light]}
        return sum(vals[g] for g in self.system.word_indices(x))

    # ---------------------------------------------------------------- support recovery

    def xi_support(self, u: int, v: int, w: int) -> dict[tuple[int, int], int]:
        """{(p, q): coefficient} of f_{u,v,w} as a polynomial in xi_s, xi_t.

        In collapsed mode (odd m) the keys are (k, 0) for total degree k
        in the single variable xi = xi_s = xi_t.
        """
        f = self._sep.f_const(u, v, w)
        out: dict[tuple[int, int], int] = {}
        guard = 0
        while f:
            guard += 1
            if guard > 10_000:
                raise RuntimeError("support recovery failed to terminate")
            d = f.degree
            if d < 0:
                raise RuntimeError(
                    "negative top degree during support recovery; "
                    "separating weight too small"
                )
            q_, p_ = (0, d) if self.collapsed else divmod(d, self._M)
            c = f.coefficient(d)
            out[(p_, q_)] = c
            key = (p_, q_)
            mono = self._sep_xi_pows.get(key)
            if mono is None:
                mono = (self._sep.xi[0] ** p_) * (self._sep.xi[1] ** q_)
                self._sep_xi_pows[key] = mono
            f = f - mono * c
        return out

    def has_monomial(self, sup: dict, p: int, q: int) -> bool:
        """Is xi_s^p xi_t^q visible in a recovered support?

        Collapsed mode can only see total degrees, which is exactly the
        distinguishable content of the statements when xi_s = xi_t.
        """
        if self.collapsed:
            return (p + q, 0) in sup
        return (p, q) in sup

    # ---------------------------------------------------------------- patterns

    def _split_pair(self, u: int, v: int, left: int, right: int) -> bool:
        """True when u = left * u' and v = u'^-1 * right, both reduced."""
        sys = self.system
        up = sys.strip_left_factor(left, u)
        if up is None:
            return False
        want = sys.mult(sys.inverse(up), right)
        return want == v and sys.length(want) == sys.length(up) + sys.length(right)


def _check(report: SweepReport, ok: bool, detail: dict) -> bool:
    report.checked += 1
    if not ok:
        report.passed = False
        report.counterexample = detail
        return False
    return True


def dihedral_sweep(m, weights, lemma_id: str, window: int = 12) -> SweepReport:
    """Run one lemma's sweep at bond m (INFINITY allowed) and weights."""
    lemma = _ALIASES.get(lemma_id, lemma_id)
    if lemma not in LEMMA_IDS:
        raise UnsupportedLemma(f"unknown lemma id {lemma_id!r}")
    sweeper = DihedralSweeper(m, tuple(weights), window)
    report = SweepReport(lemma, m, tuple(weights))
    fn = _LEMMAS[lemma]
    fn(sweeper, report)
    return report


# ---------------------------------------------------------------------- lemmas


def _require(report: SweepReport, cond: bool, why: str) -> bool:
    if not cond:
        report.note = f"vacuous: {why}"
        return False
    return True


def _lem_fuvw(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY and sw.m >= 3, "needs 3 <= m < inf"):
        return
    sys = sw.system
    sts, st, ts, s, t = map(sw.elt, ("sts", "st", "ts", "s", "t"))
    w_I = sw.w_I
    swi, twi = sys.left_mult(0, w_I), sys.left_mult(1, w_I)
    wis, wit = sys.right_mult(w_I, 0), sys.right_mult(w_I, 1)
    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            sup = sw.xi_support(u, v, sts)
            sit1 = not sup or (0, 0) in sup
            sit2 = sw.has_monomial(sup, 1, 0) and (
                sw._split_pair(u, v, s, sts)
                or (u, v) == (twi, wis)
                or sw._split_pair(u, v, sts, s)
                or (u, v) == (swi, wit)
            )
            sit3 = sw.has_monomial(sup, 0, 1) and (
                sw._split_pair(u, v, st, ts) or (u, v) == (swi, wis)
            )
            if not _check(rep, sit1 or sit2 or sit3,
                          {"u": sys.word(u), "v": sys.word(v),
                           "support": sorted(sup)}):
                return


def _lem_infinite2(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m == INFINITY, "needs m = infinity"):
        return
    sys = sw.system
    sts, st, ts, s = map(sw.elt, ("sts", "st", "ts", "s"))
    for u in sw.elements:
        for v in sw.elements:
            sup = sw.xi_support(u, v, sts)
            sit1 = not sup or (0, 0) in sup
            sit2 = (1, 0) in sup and sys.length(sys.mult(s, u)) < sys.length(u) \
                and sys.length(sys.mult(v, s)) < sys.length(v)
            sit3 = (0, 1) in sup and sw._split_pair(u, v, st, ts)
            if not _check(rep, sit1 or sit2 or sit3,
                          {"u": sys.word(u), "v": sys.word(v),
                           "support": sorted(sup)}):
                return


def _lem_fuvw2(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY and sw.m >= 2, "needs finite m"):
        return
    sys = sw.system
    st, s, t = map(sw.elt, ("st", "s", "t"))
    w_I = sw.w_I
    swi = sys.left_mult(0, w_I)
    wit = sys.right_mult(w_I, 1)
    for u in sw.elements:
        for v in sw.elements:
            sup = sw.xi_support(u, v, st)
            sit1 = not sup or (0, 0) in sup
            sit2 = sw.has_monomial(sup, 1, 1) and (u, v) == (w_I, w_I)
            sit3 = sw.has_monomial(sup, 1, 0) and (
                sw._split_pair(u, v, s, st) or (u, v) == (w_I, wit)
            )
            sit4 = sw.has_monomial(sup, 0, 1) and (
                sw._split_pair(u, v, st, t) or (u, v) == (swi, w_I)
            )
            if not _check(rep, sit1 or sit2 or sit3 or sit4,
                          {"u": sys.word(u), "v": sys.word(v),
                           "support": sorted(sup)}):
                return


def _lem_infinite1(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m == INFINITY, "needs m = infinity"):
        return
    sys = sw.system
    st, s, t = map(sw.elt, ("st", "s", "t"))
    for u in sw.elements:
        for v in sw.elements:
            sup = sw.xi_support(u, v, st)
            sit1 = not sup or (0, 0) in sup
            sit2 = (1, 0) in sup and sw._split_pair(u, v, s, st)
            sit3 = (0, 1) in sup and sw._split_pair(u, v, st, t)
            if not _check(rep, sit1 or sit2 or sit3,
                          {"u": sys.word(u), "v": sys.word(v),
                           "support": sorted(sup)}):
                return


def _lem_plusdeg(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY and sw.m >= 3, "needs 3 <= m < inf"):
        return
    sys = sw.system
    w_I = sw.w_I
    LwI = sw.L(w_I)
    for u in sw.elements:
        for v in sw.elements:
            f = sw.f(u, v, w_I)
            if f.is_zero():
                rep.checked += 1
                continue
            want = sw.L(u) + sw.L(v) - LwI
            if not _check(rep, f.degree == want,
                          {"u": sys.word(u), "v": sys.word(v),
                           "deg": f.degree, "expected": want}):
                return


def _lem_degfp(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY and sw.m >= 3, "needs 3 <= m < inf"):
        return
    sys, alg = sw.system, sw.algebra
    w_I = sw.w_I
    p_sts = alg.kl_poly(sw.elt("sts"), w_I)
    Ls, Lt = sw.weights[0], sw.weights[1]
    d_i, d_ip = sw.d_I(), sw.d_I_prime()
    swi, twi = sys.left_mult(0, w_I), sys.left_mult(1, w_I)
    LwI = sw.L(w_I)
    Lst, Ltst = Ls + Lt, Ls + 2 * Lt
    def in_cases(u: int, v: int, delta: int) -> bool:
        return (
            delta <= 0
            or (Ls == Lt and delta == Ls
                and sys.length(u) == sys.length(v) == sw.m - 1)
            or (Ls != Lt and delta == Lt and u == v == swi)
            or (Ls != Lt and d_i is not None and delta == Ls
                and {u, v} == {d_i, d_ip})
            or (Ls != Lt and delta == 2 * Ls - Lt > 0 and u == v == twi)
            or (Ls > Lt and d_i is not None and delta == Ls - Lt
                and u == d_i and sw.L(v) == LwI - Lst)
            or (Ls > Lt and d_i is not None and delta == Ls - 2 * Lt
                and u == d_i and sw.L(v) == LwI - Ltst)
        )

    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            delta = (sw.f(u, v, w_I) * p_sts).degree
            # f_{u,v,w_I} is invariant under (u, v) -> (v^-1, u^-1), and
            # the case list is stated up to that transpose
            ok = in_cases(u, v, delta) or in_cases(
                sys.inverse(v), sys.inverse(u), delta
            )
            if not _check(rep, ok, {"u": sys.word(u), "v": sys.word(v),
                                    "delta": delta}):
                return


def _lem_degfp_cor(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY and sw.m >= 3, "needs 3 <= m < inf"):
        return
    sys, alg = sw.system, sw.algebra
    w_I = sw.w_I
    p_sts = alg.kl_poly(sw.elt("sts"), w_I)
    Ls, Lt = sw.weights[0], sw.weights[1]
    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            delta = (sw.f(u, v, w_I) * p_sts).degree
            su_lt = sys.length(sys.left_mult(0, u)) < sys.length(u)
            vs_lt = sys.length(sys.right_mult(v, 0)) < sys.length(v)
            tu_lt = sys.length(sys.left_mult(1, u)) < sys.length(u)
            vt_lt = sys.length(sys.right_mult(v, 1)) < sys.length(v)
            ok = (
                delta <= 0
                or ((su_lt or vs_lt) and delta < 2 * Ls)
                or (tu_lt and vt_lt and delta == Lt)
            )
            if not _check(rep, ok, {"u": sys.word(u), "v": sys.word(v),
                                    "delta": delta}):
                return


def _lem_degfp2(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY and sw.m >= 3, "needs 3 <= m < inf"):
        return
    sys, alg = sw.system, sw.algebra
    w_I = sw.w_I
    p_st = alg.kl_poly(sw.elt("st"), w_I)
    Ls, Lt = sw.weights[0], sw.weights[1]
    d_i = sw.d_I()
    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            delta = (sw.f(u, v, w_I) * p_st).degree
            ok = delta <= 0 or (
                Ls != Lt and d_i is not None
                and delta == abs(Ls - Lt) and u == v == d_i
            )
            if not _check(rep, ok, {"u": sys.word(u), "v": sys.word(v),
                                    "delta": delta}):
                return


def _lem_aaa(sw: DihedralSweeper, rep: SweepReport) -> None:
    d_i = sw.d_I()
    if not _require(rep, d_i is not None,
                    "needs even m >= 4 and unequal weights"):
        return
    alg, sys = sw.algebra, sw.system
    base = sw.signed_weight(d_i)
    for w in alg.interval_below(d_i):
        p = alg.kl_poly(w, d_i)
        want = sw.signed_weight(w) - base
        if not _check(rep, (not p.is_zero()) and p.degree == want,
                      {"w": sys.word(w), "deg": str(p.degree), "expected": want}):
            return


def _lem_Fuv(sw: DihedralSweeper, rep: SweepReport) -> None:
    d_i = sw.d_I()
    if not _require(rep, d_i is not None,
                    "needs even m >= 4 and unequal weights"):
        return
    sys, alg = sw.system, sw.algebra
    heavy, light = sw.signed_pair()
    w_I = sw.w_I
    p_dw = alg.kl_poly(d_i, w_I)
    L_light = sw.weights[light]
    qinv = LaurentPoly.monomial(-1, -L_light)
    base_d = sw.signed_weight(d_i)

    def F(u: int, v: int) -> LaurentPoly:
        return sw.f(u, v, d_i) - p_dw * sw.f(u, v, w_I)

    xi_light, xi_heavy = alg.xi[light], alg.xi[heavy]
    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            fuv = F(u, v)
            lu, lv = sys.length(u), sys.length(v)
            if sys.length(sys.right_mult(v, light)) < lv:
                want = qinv * F(u, sys.right_mult(v, light))
            elif sys.length(sys.left_mult(light, u)) < lu:
                want = qinv * F(sys.left_mult(light, u), v)
            elif lu + lv < sw.m - 1:
                want = LaurentPoly.zero()
            elif lu + lv == sw.m - 1:
                want = LaurentPoly.one()
            elif lu + lv == sw.m:
                want = xi_light if lu % 2 == 0 else xi_heavy
            else:
                ok = fuv.degree == sw.signed_weight(u) + sw.signed_weight(v) - base_d
                if not _check(rep, ok, {"u": sys.word(u), "v": sys.word(v),
                                        "deg": str(fuv.degree)}):
                    return
                continue
            if not _check(rep, fuv == want,
                          {"u": sys.word(u), "v": sys.word(v),
                           "F": str(fuv), "expected": str(want)}):
                return


def _lem_degnfp(sw: DihedralSweeper, rep: SweepReport) -> None:
    d_i = sw.d_I()
    sts = sw.elt("sts") if sw.m != INFINITY and sw.m >= 2 else None
    applicable = d_i is not None and sts not in (sw.w_I, d_i)
    if not _require(rep, applicable,
                    "needs even m >= 4, unequal weights, sts outside {w_I, d_I}"):
        return
    sys, alg = sw.system, sw.algebra
    w_I = sw.w_I
    p_dw = alg.kl_poly(d_i, w_I)
    p_sts_d = alg.kl_poly(sts, d_i)
    Ls, Lt = sw.weights[0], sw.weights[1]
    for u in sw.elements:
        if u in (w_I, d_i):
            continue
        for v in sw.elements:
            if v in (w_I, d_i):
                continue
            F = sw.f(u, v, d_i) - sw.f(u, v, w_I) * p_dw
            gamma = (F * p_sts_d).degree
            su_lt = sys.length(sys.left_mult(0, u)) < sys.length(u)
            vs_lt = sys.length(sys.right_mult(v, 0)) < sys.length(v)
            ok = gamma <= 0 or (Ls > Lt and su_lt and vs_lt and gamma <= Lt)
            if not _check(rep, ok, {"u": sys.word(u), "v": sys.word(v),
                                    "gamma": str(gamma)}):
                return


def _lem_degnfp2(sw: DihedralSweeper, rep: SweepReport) -> None:
    d_i = sw.d_I()
    st = sw.elt("st") if sw.m != INFINITY and sw.m >= 2 else None
    applicable = d_i is not None and st not in (sw.w_I, d_i)
    if not _require(rep, applicable,
                    "needs even m >= 4, unequal weights, st outside {w_I, d_I}"):
        return
    sys, alg = sw.system, sw.algebra
    p_dw = alg.kl_poly(d_i, sw.w_I)
    p_st_d = alg.kl_poly(st, d_i)
    for u in sw.elements:
        if u in (sw.w_I, d_i):
            continue
        for v in sw.elements:
            if v in (sw.w_I, d_i):
                continue
            F = sw.f(u, v, d_i) - sw.f(u, v, sw.w_I) * p_dw
            gamma = (F * p_st_d).degree
            if not _check(rep, gamma <= 0,
                          {"u": sys.word(u), "v": sys.word(v),
                           "gamma": str(gamma)}):
                return


def _lem_bbb1(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY, "needs finite m"):
        return
    sys = sw.system
    w_I = sw.w_I
    targets = [w for w in sw.elements if sys.length(w) >= 2]
    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            for w in targets:
                if not _check(rep, sw.f(u, v, w).degree < sw.L(w),
                              {"u": sys.word(u), "v": sys.word(v),
                               "w": sys.word(w)}):
                    return


def _lem_bbb2(sw: DihedralSweeper, rep: SweepReport) -> None:
    if not _require(rep, sw.m != INFINITY, "needs finite m"):
        return
    sys, alg = sw.system, sw.algebra
    w_I = sw.w_I
    targets = [(w, alg.kl_poly(w, w_I)) for w in sw.elements
               if sys.length(w) >= 2]
    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            fw = sw.f(u, v, w_I)
            for w, p in targets:
                if not _check(rep, (fw * p).degree < sw.L(w),
                              {"u": sys.word(u), "v": sys.word(v),
                               "w": sys.word(w)}):
                    return


def _lem_bbb3(sw: DihedralSweeper, rep: SweepReport) -> None:
    d_i = sw.d_I()
    if not _require(rep, d_i is not None,
                    "needs even m >= 4 and unequal weights"):
        return
    sys, alg = sw.system, sw.algebra
    w_I = sw.w_I
    p_dw = alg.kl_poly(d_i, w_I)
    targets = [(w, alg.kl_poly(w, d_i)) for w in alg.interval_below(d_i)
               if sys.length(w) >= 2]
    for u in sw.elements:
        if u == w_I:
            continue
        for v in sw.elements:
            if v == w_I:
                continue
            F = sw.f(u, v, d_i) - sw.f(u, v, w_I) * p_dw
            for w, p in targets:
                if not _check(rep, (F * p).degree < sw.L(w),
                              {"u": sys.word(u), "v": sys.word(v),
                               "w": sys.word(w)}):
                    return


_LEMMAS = {
    "fuvw": _lem_fuvw,
    "infinite2": _lem_infinite2,
    "fuvw2": _lem_fuvw2,
    "infinite1": _lem_infinite1,
    "plusdeg": _lem_plusdeg,
    "degfp": _lem_degfp,
    "degfp-cor": _lem_degfp_cor,
    "degfp2": _lem_degfp2,
    "aaa": _lem_aaa,
    "Fuv": _lem_Fuv,
    "degnfp": _lem_degnfp,
    "degnfp2": _lem_degnfp2,
    "bbb1": _lem_bbb1,
    "bbb2": _lem_bbb2,
    "bbb3": _lem_bbb3,
}


def sweep_grid(ms=(2, 3, 4, 5, 6, 7, 8, INFINITY), weight_range=(1, 2, 3),
               lemmas=LEMMA_IDS, window: int = 12):
    """All sweeps over a parameter grid; yields SweepReport objects.

    Weight pairs that are invalid at a bond (odd m forces equal weights)
    are skipped rather than reported.
    """
    for m in ms:
        for ls in weight_range:
            for lt in weight_range:
                if m != INFINITY and m % 2 == 1 and ls != lt:
                    continue
                for lemma in lemmas:
                    yield dihedral_sweep(m, (ls, lt), lemma, window)
