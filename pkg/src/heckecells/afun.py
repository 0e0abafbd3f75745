"""Ball-restricted a-function data and the P1-P15 instance checkers.

The a-function a(w) = max_{x,y} deg h_{x,y,w} is not computable by
enumeration on an infinite group.  This module therefore separates

* a_ball(w, R): the certified lower bound obtained by maximizing over
  x, y in the ball of radius R, and
* the predicted value a_pred(w) from the cells module,

and never conflates them.  Delta(w) and n_w come from p_{e,w}; the
distinguished set within a ball is {z : a(z) = Delta(z)} for whichever
a-source the caller supplies (prediction, or exact values on a finite
group).

The engine behind everything is HSweep: for every pair (x, y) in a ball
it produces the complete C-coordinates of C_x C_y.  Products are built
in C-coordinates throughout, by the recursion

    T_{g u} C_y = T_g (T_u C_y),
    T_g C_z     = q^{L(g)} C_z                    if gz < z,
    T_g C_z     = (peeled product row)            if gz > z,

so intermediate supports stay as sparse as the answers.  The sweep
aggregates per-coordinate max degrees (with witnesses and attainment
radii) and the coefficient of q^{a(z)} in h_{x,y,z}, which is exactly
the gamma data the conjecture checkers consume:

    gamma_{x,y,z} = coefficient of q^{a(z^-1)} in h_{x,y,z^-1}.

Pair work is halved through h_{x,y,z} = h_{y^-1,x^-1,z^-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cells import DSet, cell_graph
from .coxeter import CoxeterSystem, WeightFunction
from .errors import UnsupportedWithoutPrediction
from .hecke import HeckeAlgebra
from .laurent import NEG_INF, LaurentPoly, addmul_raw, deg_raw

# ---------------------------------------------------------------------- a sources


class ASource:
    """Total a-value oracle on the working ball."""

    kind = "abstract"

    def a(self, w: int) -> int:  # pragma: no cover - interface
        raise NotImplementedError


class PredictedA(ASource):
    """a from the distinguished-factor prediction (cells.DSet)."""

    kind = "predicted"

    def __init__(self, dset: DSet):
        self.dset = dset

    def a(self, w: int) -> int:
        return self.dset.a_pred(w)


class ExactA(ASource):
    """a from a full brute-force table (finite groups only)."""

    kind = "exact"

    def __init__(self, table: dict[int, int]):
        self.table = table

    def a(self, w: int) -> int:
        return self.table[w]


# ---------------------------------------------------------------------- profiles


def delta_n(algebra: HeckeAlgebra, w: int) -> tuple[int, int]:
    """(Delta(w), n_w) read off p_{e,w}; Delta = -deg, n = its coefficient."""
    if w == 0:
        return 0, 1
    p = algebra.kl_poly(0, w)
    if p.is_zero():
        raise ValueError(
            f"p_e,{algebra.system.word(w)} vanished; Delta undefined"
        )
    d = p.degree
    return -d, p.coefficient(d)


def distinguished_ball(algebra: HeckeAlgebra, radius: int, a_of: ASource) -> list[int]:
    """{z in ball : a(z) = Delta(z)} for the supplied a-source."""
    if a_of is None:
        raise UnsupportedWithoutPrediction("an a-source is required")
    out = []
    for z in algebra.system.ball(radius):
        if a_of.a(z) == delta_n(algebra, z)[0]:
            out.append(z)
    return out


def gamma_coeff(algebra: HeckeAlgebra, x: int, y: int, z: int, a_of_z: int) -> int:
    """gamma_{x,y,z}: coefficient of q^a(z^-1) in h_{x,y,z^-1}.

    The caller supplies a(z); a is inverse-invariant for every source
    used here, so a(z^-1) = a_of_z.
    """
    zi = algebra.system.inverse(z)
    return algebra.h_const(x, y, zi).coefficient(a_of_z)


# ---------------------------------------------------------------------- the sweep


@dataclass
class HSweep:
    """All C_x C_y rows for x, y in ball(radius), aggregated.

    gamma data is recorded only when an a-source is supplied.  Aggregates:

    max_deg[z]   max over pairs of deg h_{x,y,z} (z over full supports);
    witness[z]   one (x, y) attaining it;
    attain_r[z]  minimal max(l(x), l(y)) over attaining pairs;
    topc[(x,y,u)] nonzero coefficient of q^a(u) in h_{x,y,u}.
    """

    algebra: HeckeAlgebra
    radius: int
    a_of: ASource | None = None
    max_deg: dict[int, int] = field(default_factory=dict)
    witness: dict[int, tuple[int, int]] = field(default_factory=dict)
    attain_r: dict[int, int] = field(default_factory=dict)
    topc: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self._run()

    # -- helpers ---------------------------------------------------------

    def _th_row(self, g: int, z: int) -> dict[int, dict]:
        """C-coordinates of T_g C_z for an ascent g of z."""
        key = (g, z)
        row = self._th.get(key)
        if row is None:
            alg = self.algebra
            ge = alg.system.right_mult(0, g)
            raw = alg._t_mult_raw({ge: {0: 1}}, alg._solve_column(z))
            row = alg._to_c_raw(raw)
            self._th[key] = row
        return row

    def _cc_rows(self, y: int) -> dict[int, dict[int, dict]]:
        """u -> C-coordinates of T_u C_y, for all u in the ball."""
        alg = self.algebra
        sys = alg.system
        ldesc = sys._ldesc
        qgen = [{self.algebra.weights[g]: 1} for g in range(sys.rank)]
        cc: dict[int, dict[int, dict]] = {0: {y: {0: 1}}}
        for u in sys.ball(self.radius):
            if u == 0:
                continue
            g = sys.word_indices(u)[0]
            vec = cc[sys.left_mult(g, u)]
            out: dict[int, dict] = {}
            for z, pz in vec.items():
                if ldesc[z] >> g & 1:
                    tgt = out.get(z)
                    if tgt is None:
                        tgt = out[z] = {}
                    addmul_raw(tgt, pz, qgen[g])
                else:
                    for z2, r in self._th_row(g, z).items():
                        tgt = out.get(z2)
                        if tgt is None:
                            tgt = out[z2] = {}
                        addmul_raw(tgt, pz, r)
            cc[u] = {z: p for z, p in out.items() if p}
        return cc

    def _consume(self, x: int, y: int, row: dict[int, dict]) -> None:
        inv = self.algebra.system.inverse
        length = self.algebra.system._length
        pr = max(length[x], length[y])
        a_of = self.a_of
        for z, p in row.items():
            d = max(p)
            zi = inv(z)
            for zz, xx, yy in ((z, x, y), (zi, inv(y), inv(x))):
                old = self.max_deg.get(zz, NEG_INF)
                if d > old:
                    self.max_deg[zz] = d
                    self.witness[zz] = (xx, yy)
                    self.attain_r[zz] = pr
                elif d == old and pr < self.attain_r[zz]:
                    self.attain_r[zz] = pr
            if a_of is not None:
                c = p.get(a_of.a(z), 0)
                if c:
                    self.topc[(x, y, z)] = c
                    self.topc[(inv(y), inv(x), zi)] = c

    def _run(self) -> None:
        alg = self.algebra
        sys = alg.system
        inv = sys.inverse
        self._th: dict[tuple[int, int], dict[int, dict]] = {}
        ball = list(sys.ball(self.radius))
        cols = {x: alg._solve_column(x) for x in ball}
        for y in ball:
            cc = self._cc_rows(y)
            yi = inv(y)
            for x in ball:
                # mirror pair (inv y, inv x) is derived in _consume; keep
                # the lexicographically smaller representative only.
                if (yi, inv(x)) < (x, y):
                    continue
                row: dict[int, dict] = {}
                for u, pux in cols[x].items():
                    for z, pz in cc[u].items():
                        tgt = row.get(z)
                        if tgt is None:
                            tgt = row[z] = {}
                        addmul_raw(tgt, pux, pz)
                self._consume(x, y, {z: p for z, p in row.items() if p})

    # -- readers ---------------------------------------------------------

    def gamma(self, x: int, y: int, z: int) -> int:
        """gamma_{x,y,z} for x, y in the swept ball."""
        return self.topc.get((x, y, self.algebra.system.inverse(z)), 0)

    def a_ball(self, w: int) -> tuple[int, tuple[int, int] | None]:
        d = self.max_deg.get(w, NEG_INF)
        if d is NEG_INF:
            return 0, None
        return d, self.witness[w]


def a_ball(algebra: HeckeAlgebra, w: int, radius: int, sweep: HSweep | None = None):
    """(max_{x,y in ball(radius)} deg h_{x,y,w}, witness pair)."""
    if sweep is None or sweep.radius < radius:
        sweep = HSweep(algebra, radius)
    value, wit = sweep.a_ball(w)
    return value, wit


@dataclass(frozen=True)
class AProfile:
    """Everything the a-function machinery knows about one element.

    a_ball is a certified lower bound (it never overshoots the true
    value); a_pred is the factor prediction when one applies.
    """

    element: int
    a_ball: int
    witness: tuple[int, int] | None
    a_pred: int | None
    delta: int
    n_w: int


def a_profile(algebra: HeckeAlgebra, w: int, radius: int,
              a_pred: int | None = None, sweep: HSweep | None = None) -> AProfile:
    value, wit = a_ball(algebra, w, radius, sweep)
    d, n = delta_n(algebra, w)
    return AProfile(w, value, wit, a_pred, d, n)


def exact_a_table(algebra: HeckeAlgebra) -> dict[int, int]:
    """Brute-force a-values over a whole finite group."""
    sys = algebra.system
    if not sys.is_finite():
        raise UnsupportedWithoutPrediction(
            "exact a-values require a finite group; use a prediction instead"
        )
    radius = max(sys.length(w) for w in sys.ball(sys.ball_radius_limit))
    sweep = HSweep(algebra, radius, None)
    return {w: sweep.max_deg.get(w, 0) for w in sys.ball(radius)}


# ---------------------------------------------------------------------- reports


@dataclass
class PReport:
    statement: str
    radius: int
    result: str  # "pass" | "fail"
    counterexample: dict | None = None
    caveats: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.result == "pass"

    def to_json(self) -> dict:
        out = {
            "statement": self.statement,
            "radius": self.radius,
            "result": self.result,
            "caveats": self.caveats,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class PChecker:
    """Desk-scale checkers for the fifteen conjectural statements.

    Quantifiers run over ball(radius); KL-preorder certificates
    (mutual reachability) may be searched in a slightly larger ball,
    which is sound: reachability inside any ball witnesses the global
    preorder.  Statements whose quantifiers inherently escape the ball
    carry a truncation caveat in their report.
    """

    def __init__(
        self,
        algebra: HeckeAlgebra,
        a_of: ASource,
        radius: int,
        sweep: HSweep | None = None,
        cert_radius: int | None = None,
    ):
        if a_of is None:
            raise UnsupportedWithoutPrediction("check_P needs an a-source")
        self.algebra = algebra
        self.sys = algebra.system
        self.a_of = a_of
        self.radius = radius
        self.cert_radius = cert_radius if cert_radius is not None else radius
        self.sweep = sweep if sweep is not None and sweep.radius >= radius else None
        self._graphs: dict[str, object] = {}
        self._dball: list[int] | None = None

    # -- shared lazies ----------------------------------------------------

    def _sweep(self) -> HSweep:
        if self.sweep is None or self.sweep.a_of is None:
            self.sweep = HSweep(self.algebra, self.radius, self.a_of)
        return self.sweep

    def _graph(self, flavor: str):
        g = self._graphs.get(flavor)
        if g is None:
            g = cell_graph(self.algebra, self.cert_radius, flavor)
            self._graphs[flavor] = g
        return g

    def _distinguished(self) -> list[int]:
        if self._dball is None:
            self._dball = distinguished_ball(self.algebra, self.radius, self.a_of)
        return self._dball

    def _gamma(self, x: int, y: int, z: int) -> int:
        return self._sweep().gamma(x, y, z)

    # -- dispatch ----------------------------------------------------------

    def check(self, k: int) -> PReport:
        try:
            fn = getattr(self, f"_p{k}")
        except AttributeError:
            raise ValueError(f"unknown statement P{k}") from None
        return fn()

    # -- the fifteen statements --------------------------------------------

    def _p1(self) -> PReport:
        for w in self.sys.ball(self.radius):
            a = self.a_of.a(w)
            d, _ = delta_n(self.algebra, w)
            if a > d:
                return PReport("P1", self.radius, "fail",
                               {"w": self.sys.word(w), "a": a, "Delta": d})
        return PReport("P1", self.radius, "pass")

    def _p2(self) -> PReport:
        sweep = self._sweep()
        dball = set(self._distinguished())
        inv = self.sys.inverse
        inball = set(self.sys.ball(self.radius))
        for (x, y, u), c in sorted(sweep.topc.items()):
            if x not in inball or y not in inball:
                continue
            z = inv(u)
            if z in dball and c and x != inv(y):
                return PReport("P2", self.radius, "fail",
                               {"x": self.sys.word(x), "y": self.sys.word(y),
                                "z": self.sys.word(z), "gamma": c})
        return PReport("P2", self.radius, "pass")

    def _p3(self) -> PReport:
        # z ranges over every distinguished element seen in the product
        # supports (up to length 2R), not just ball(radius).
        sweep = self._sweep()
        inv = self.sys.inverse
        hits: dict[int, set[int]] = {y: set() for y in self.sys.ball(self.radius)}
        for (x, y, u), c in sweep.topc.items():
            if y not in hits or x != inv(y):
                continue
            if c:
                z = inv(u)
                if self.a_of.a(z) == delta_n(self.algebra, z)[0]:
                    hits[y].add(z)
        caveats = ["uniqueness is relative to the distinguished elements "
                   "visible inside the swept ball"]
        for y, zs in sorted(hits.items()):
            if len(zs) != 1:
                return PReport("P3", self.radius, "fail",
                               {"y": self.sys.word(y),
                                "z_count": len(zs),
                                "zs": sorted(self.sys.word(z) for z in zs)},
                               caveats)
        return PReport("P3", self.radius, "pass", None, caveats)

    def _monotone(self, flavor: str, name: str) -> PReport:
        graph = self._graph(flavor)
        inball = set(self.sys.ball(self.radius))
        for w in graph.vertices:
            if w not in inball:
                continue
            aw = self.a_of.a(w)
            for y in graph.edges[w]:
                if y in inball and self.a_of.a(y) < aw:
                    return PReport(name, self.radius, "fail",
                                   {"w": self.sys.word(w), "w'": self.sys.word(y),
                                    "a(w)": aw, "a(w')": self.a_of.a(y)})
        return PReport(name, self.radius, "pass")

    def _p4(self) -> PReport:
        return self._monotone("twosided", "P4")

    def _p5(self) -> PReport:
        dball = self._distinguished()
        inv = self.sys.inverse
        for z in dball:
            nz = delta_n(self.algebra, z)[1]
            for y in self.sys.ball(self.radius):
                c = self._gamma(inv(y), y, z)
                if c and not (c == nz and c in (1, -1)):
                    return PReport("P5", self.radius, "fail",
                                   {"y": self.sys.word(y), "z": self.sys.word(z),
                                    "gamma": c, "n_z": nz})
        return PReport("P5", self.radius, "pass")

    def _p6(self) -> PReport:
        for z in self._distinguished():
            if self.sys.mult(z, z) != 0:
                return PReport("P6", self.radius, "fail", {"z": self.sys.word(z)})
        return PReport("P6", self.radius, "pass")

    def _p7(self) -> PReport:
        sweep = self._sweep()
        inv = self.sys.inverse
        inball = set(self.sys.ball(self.radius))
        for (x, y, u), c in sorted(sweep.topc.items()):
            z = inv(u)
            if x not in inball or y not in inball or z not in inball:
                continue
            c2 = sweep.gamma(y, z, x)
            c3 = sweep.gamma(z, x, y)
            if not (c == c2 == c3):
                return PReport("P7", self.radius, "fail",
                               {"x": self.sys.word(x), "y": self.sys.word(y),
                                "z": self.sys.word(z),
                                "gammas": [c, c2, c3]})
        return PReport("P7", self.radius, "pass")

    def _p8(self) -> PReport:
        sweep = self._sweep()
        inv = self.sys.inverse
        inball = set(self.sys.ball(self.radius))
        graph = self._graph("left")
        caveats = ["equivalences are certified by mutual reachability "
                   f"inside ball({self.cert_radius})"]
        for (x, y, u), c in sorted(sweep.topc.items()):
            z = inv(u)
            if x not in inball or y not in inball or z not in inball or not c:
                continue
            for a, b in ((x, inv(y)), (y, inv(z)), (z, inv(x))):
                if not graph.mutually_reachable(a, b):
                    return PReport("P8", self.radius, "fail",
                                   {"x": self.sys.word(x), "y": self.sys.word(y),
                                    "z": self.sys.word(z),
                                    "uncertified": [self.sys.word(a), self.sys.word(b)]},
                                   caveats)
        return PReport("P8", self.radius, "pass", None, caveats)

    def _equal_a_implies_cell(self, flavor: str, name: str) -> PReport:
        graph = self._graph(flavor)
        inball = set(self.sys.ball(self.radius))
        caveats = [f"cells certified inside ball({self.cert_radius})"]
        for w in sorted(inball):
            aw = self.a_of.a(w)
            reach = [y for y in inball
                     if y != w and graph.reaches(w, y) and self.a_of.a(y) == aw]
            for y in reach:
                if not graph.mutually_reachable(w, y):
                    return PReport(name, self.radius, "fail",
                                   {"w": self.sys.word(w), "w'": self.sys.word(y),
                                    "a": aw}, caveats)
        return PReport(name, self.radius, "pass", None, caveats)

    def _p9(self) -> PReport:
        return self._equal_a_implies_cell("left", "P9")

    def _p10(self) -> PReport:
        return self._equal_a_implies_cell("right", "P10")

    def _p11(self) -> PReport:
        return self._equal_a_implies_cell("twosided", "P11")

    def _p12(self) -> PReport:
        sys = self.sys
        for nJ in range(1, sys.rank):
            for J in _subsets(sys.labels, nJ):
                sub, embed = _parabolic_algebra(self.algebra, J, self.radius)
                sub_a = _parabolic_a_source(sub)
                back = {embed[w]: w for w in embed}
                for w_sub in sub.system.ball(min(self.radius, sub.system.ball_radius_limit)):
                    w = embed[w_sub]
                    if sys.length(w) > self.radius:
                        continue
                    a_in = sub_a.a(w_sub)
                    a_out = self.a_of.a(w)
                    if a_in != a_out:
                        return PReport("P12", self.radius, "fail",
                                       {"J": "".join(J), "y": sys.word(w),
                                        "a_parabolic": a_in, "a_full": a_out})
        return PReport("P12", self.radius, "pass")

    def _p13(self) -> PReport:
        graph = self._graph("left")
        inball = set(self.sys.ball(self.radius))
        dball = set(self._distinguished())
        inv = self.sys.inverse
        caveats = ["ball SCCs may be fragments of true left cells; "
                   "fragments without a distinguished element are not failures"]
        for scc in graph.sccs:
            members = [w for w in scc if w in inball]
            if not members:
                continue
            ds = sorted(z for z in members if z in dball)
            if len(ds) > 1:
                return PReport("P13", self.radius, "fail",
                               {"cell": [self.sys.word(w) for w in members],
                                "distinguished": [self.sys.word(z) for z in ds]},
                               caveats)
            if len(ds) == 1:
                z = ds[0]
                for y in members:
                    if self._gamma(inv(y), y, z) == 0:
                        return PReport("P13", self.radius, "fail",
                                       {"y": self.sys.word(y), "z": self.sys.word(z),
                                        "gamma": 0}, caveats)
        return PReport("P13", self.radius, "pass", None, caveats)

    def _p14(self) -> PReport:
        graph = self._graph("twosided")
        inv = self.sys.inverse
        caveats = [f"w ~ w^-1 certified inside ball({self.cert_radius})"]
        for w in self.sys.ball(self.radius):
            if not graph.mutually_reachable(w, inv(w)):
                return PReport("P14", self.radius, "fail",
                               {"w": self.sys.word(w)}, caveats)
        return PReport("P14", self.radius, "pass", None, caveats)

    def _p15(self) -> PReport:
        # Tensor identity; the z-sum is complete because product rows are
        # complete, but pairs (z, w') reach outside the swept ball, so each
        # needed row is computed exactly on demand.
        alg = self.algebra
        sys = self.sys
        ball = list(sys.ball(self.radius))
        rows: dict[tuple[int, int], dict[int, LaurentPoly]] = {}

        def row(a: int, b: int) -> dict[int, LaurentPoly]:
            r = rows.get((a, b))
            if r is None:
                r = alg.c_mult(a, b)
                rows[(a, b)] = r
            return r

        def tensor_sum(pairs):
            """sum over z of h1(z) (x) h2(z) as {(e1, e2): int}."""
            acc: dict[tuple[int, int], int] = {}
            for h1, h2 in pairs:
                for e1, c1 in h1.terms.items():
                    for e2, c2 in h2.terms.items():
                        k = (e1, e2)
                        v = acc.get(k, 0) + c1 * c2
                        if v:
                            acc[k] = v
                        elif k in acc:
                            del acc[k]
            return acc

        for x in ball:
            ax = self.a_of.a(x)
            for y in ball:
                if self.a_of.a(y) != ax:
                    continue
                for w in ball:
                    for wp in ball:
                        # sum_z h_{w,x,z} (x) h_{z,w',y} vs
                        # sum_z h_{w,z,y} (x) h_{x,w',z}
                        lhs = tensor_sum(
                            (h1, h2) for z, h1 in row(w, x).items()
                            if (h2 := row(z, wp).get(y)) is not None)
                        rhs_acc = tensor_sum(
                            (h1, h2) for z, h2 in row(x, wp).items()
                            if (h1 := row(w, z).get(y)) is not None)
                        if lhs != rhs_acc:
                            return PReport(
                                "P15", self.radius, "fail",
                                {"w": sys.word(w), "x": sys.word(x),
                                 "w'": sys.word(wp), "y": sys.word(y)})
        return PReport("P15", self.radius, "pass")


def _subsets(labels, n):
    import itertools

    return list(itertools.combinations(labels, n))


def _parabolic_algebra(algebra: HeckeAlgebra, J, radius: int):
    """Standalone algebra of W_J plus the embedding of its elements."""
    sys = algebra.system
    idx = [sys.gen_index(a) for a in J]
    limit = max(2 * radius, 16)
    if len(J) == 1:
        sub_sys = CoxeterSystem(J, {}, ball_radius_limit=limit)
    else:
        m = sys._m[idx[0]][idx[1]]
        sub_sys = CoxeterSystem(J, {(J[0], J[1]): m}, ball_radius_limit=limit)
    sub = HeckeAlgebra(sub_sys, WeightFunction(tuple(algebra.weights[i] for i in idx)))
    embed = {}
    for w in sub_sys.ball(min(limit, sub_sys.ball_radius_limit)):
        embed[w] = sys.normal_form(sub_sys.word(w))
    return sub, embed


def _parabolic_a_source(sub: HeckeAlgebra) -> ASource:
    if sub.system.is_finite():
        return ExactA(exact_a_table(sub))
    return PredictedA(DSet(sub.system, sub.weights))


def check_P(
    k: int,
    algebra: HeckeAlgebra,
    a_of: ASource,
    radius: int,
    sweep: HSweep | None = None,
    cert_radius: int | None = None,
) -> PReport:
    """Check one of the fifteen statements over ball(radius)."""
    return PChecker(algebra, a_of, radius, sweep, cert_radius).check(k)
