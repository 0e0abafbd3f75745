"""The truncated algebra at a level N, and product-expansion verification.

Writing W_>N for the elements whose predicted a-value exceeds N, the
span of {C_z : z in W_>N} is a two-sided ideal and the quotient has the
images NT_w (w in W_<=N) as a basis.  Reduction to that basis repeatedly
replaces a maximal over-level support element z by the relation C_z = 0,
i.e. T_z -> -sum_{y<z} p_{y,z} T_y, which terminates because lengths
drop.  Structure constants Nf, the degree bound deg(NT_x NT_y) <= N with
its equality condition, and the strict estimates against -deg p_{w,d}
are all instance-checked here.

verify_expansion checks the explicit T-basis product identities used to
control non-reduced triple products T_x T_w T_y in rank 3 (one commuting
pair; the three families below differ in which bonds are large).  Each
subcase is stored declaratively: joinable word pieces for x and y (with
optional free slots subject to descent constraints), the middle factor
w, and the expected right side as (xi-monomial, pieces) terms.  The
verifier instantiates conforming samples, asserts every dotted join is
reduced, and compares both sides exactly; transposed and r<->t mirrored
variants are generated from the same data.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .cells import DSet
from .coxeter import INFINITY, CoxeterSystem, WeightFunction
from .errors import ConstraintUnsatisfiable, UnsupportedLemma
from .hecke import HeckeAlgebra, HeckeElt
from .laurent import NEG_INF, LaurentPoly, deg_raw, submul_raw


class TruncatedAlgebra:
    """H_<=N for one (algebra, distinguished-set, N) triple."""

    def __init__(self, algebra: HeckeAlgebra, dset: DSet, N: int):
        self.algebra = algebra
        self.dset = dset
        self.N = N

    def over(self, z: int) -> bool:
        """z in W_>N, decided by the factor prediction."""
        return self.dset.a_pred(z) > self.N

    # ---------------------------------------------------------------- reduction

    def _nt_reduce_raw(self, coords: dict[int, dict]) -> dict[int, dict]:
        alg = self.algebra
        heap = [-z for z in coords]
        heapq.heapify(heap)
        queued = set(coords)
        while heap:
            z = -heapq.heappop(heap)
            queued.discard(z)
            p = coords.get(z)
            if not p or not self.over(z):
                continue
            del coords[z]
            for u, pu in alg._rows_below(z):
                tgt = coords.get(u)
                if tgt is None:
                    tgt = coords[u] = {}
                submul_raw(tgt, p, pu)
                if u not in queued:
                    queued.add(u)
                    heapq.heappush(heap, -u)
        return {w: p for w, p in coords.items() if p}

    def nt_reduce(self, h: HeckeElt) -> HeckeElt:
        """Image of h in the NT basis (supported on W_<=N)."""
        raw = self._nt_reduce_raw({w: dict(p.terms) for w, p in h.coords.items()})
        return HeckeElt({w: LaurentPoly(p) for w, p in raw.items()})

    def nt_product(self, *elements: int) -> HeckeElt:
        """NT_x1 * ... * NT_xk, reduced to the NT basis."""
        raw = {elements[0]: {0: 1}}
        for x in elements[1:]:
            raw = self.algebra._t_mult_raw(raw, {x: {0: 1}})
            raw = self._nt_reduce_raw(raw)
        return HeckeElt({w: LaurentPoly(p) for w, p in raw.items()})

    def nf_const(self, x: int, y: int, z: int) -> LaurentPoly:
        """Structure constant of NT_x NT_y at NT_z."""
        return self.nt_product(x, y).get(z)

    # ---------------------------------------------------------------- bounds

    def check_bound(self, radius: int) -> dict:
        """deg(NT_x NT_y) <= N over the ball, equality only inside
        Omega_{>=N}; returns the attained equality witnesses."""
        sys = self.algebra.system
        N = self.N
        eligible = [x for x in sys.ball(radius) if self.dset.a_pred(x) <= N]
        attained = []
        for x in eligible:
            for y in eligible:
                d = self.nt_product(x, y).degree
                if d > N:
                    return {
                        "passed": False,
                        "pairs": None,
                        "counterexample": {
                            "x": sys.word(x), "y": sys.word(y), "degree": d,
                        },
                    }
                if d == N:
                    if self.dset.a_pred(x) < N or self.dset.a_pred(y) < N:
                        return {
                            "passed": False,
                            "pairs": None,
                            "counterexample": {
                                "x": sys.word(x), "y": sys.word(y),
                                "reason": "equality outside Omega_>=N",
                            },
                        }
                    attained.append((sys.word(x), sys.word(y)))
        return {
            "passed": True,
            "pairs": len(eligible) ** 2,
            "equality_witnesses": attained,
            "counterexample": None,
        }

    def check_strict(self, d: int, radius: int) -> dict:
        """deg(NT_x NT_w NT_y) <= -deg p_{w,d} for w <= d over U_d^-1 x U_d,
        strict when w < d and x in B_d, y in B_d^-1, or l(w) >= 2."""
        alg, sys = self.algebra, self.algebra.system
        us = self.dset.u_set(d, radius)
        xs = [sys.inverse(y) for y in us]
        b_of = {x: self.dset.in_b_set(d, x) for x in xs}
        binv_of = {y: self.dset.in_b_set(d, sys.inverse(y)) for y in us}
        checked = 0
        for w in alg.interval_below(d):
            p = alg.kl_poly(w, d)
            if p.is_zero():
                continue
            bound = -p.degree
            for x in xs:
                for y in us:
                    deg = self.nt_product(x, w, y).degree
                    checked += 1
                    if deg > bound:
                        return {
                            "passed": False, "checked": checked,
                            "counterexample": {
                                "w": sys.word(w), "x": sys.word(x),
                                "y": sys.word(y), "degree": deg, "bound": bound,
                            },
                        }
                    strict = w != d and (
                        b_of[x] or binv_of[y] or sys.length(w) >= 2
                    )
                    if strict and deg >= bound:
                        return {
                            "passed": False, "checked": checked,
                            "counterexample": {
                                "w": sys.word(w), "x": sys.word(x),
                                "y": sys.word(y), "degree": deg,
                                "strict_bound": bound,
                            },
                        }
        return {"passed": True, "checked": checked, "counterexample": None}


# ---------------------------------------------------------------------- expansions


@dataclass(frozen=True)
class ExpansionCase:
    case_id: str
    family: str  # reduced0 | reduced | reduced2
    w: str
    x_pieces: tuple[str, ...]
    y_pieces: tuple[str, ...]
    rhs: tuple[tuple[str, tuple[str, ...]], ...]  # (xi letters, pieces)
    m_rs: object = None  # None = family default, int = required value
    m_st: object = None
    x_constraint: frozenset | None = None  # allowed right-descent letters of X
    y_constraint: frozenset | None = None  # allowed left-descent letters of Y
    extra: str | None = None
    degree_bound: str | None = None  # for degree-only subcases


def _mirror_unit(unit: str) -> str:
    swap = {"r": "t", "t": "r", "s": "s"}
    if unit in ("X", "Y"):
        return unit
    if unit.startswith("W"):
        return "W" + "".join(sorted(swap[ch] for ch in unit[1:]))
    return "".join(swap[ch] for ch in unit)


def _mirror_piece(piece: str) -> str:
    return " ".join(_mirror_unit(u) for u in piece.split())


def mirror_case(case: ExpansionCase) -> ExpansionCase:
    """The same subcase with the two outer generators exchanged."""
    return ExpansionCase(
        case_id=case.case_id + "~mirror",
        family=case.family,
        w=_mirror_piece(case.w),
        x_pieces=tuple(_mirror_piece(p) for p in case.x_pieces),
        y_pieces=tuple(_mirror_piece(p) for p in case.y_pieces),
        rhs=tuple((_mirror_piece(xi), tuple(_mirror_piece(p) for p in pieces))
                  for xi, pieces in case.rhs),
        m_rs=case.m_st,
        m_st=case.m_rs,
        x_constraint=None if case.x_constraint is None
        else frozenset(_mirror_unit(ch) for ch in case.x_constraint),
        y_constraint=None if case.y_constraint is None
        else frozenset(_mirror_unit(ch) for ch in case.y_constraint),
        extra=case.extra,
        degree_bound=case.degree_bound,
    )


def _c(xi: str, *pieces: str) -> tuple[str, tuple[str, ...]]:
    return (xi, pieces)


EXPANSION_CASES: dict[str, ExpansionCase] = {}


def _add(case: ExpansionCase) -> None:
    EXPANSION_CASES[case.case_id] = case


# -- family reduced0: m_rs = infinity > m_st >= 3 ---------------------------

_add(ExpansionCase(
    "reduced0:1", "reduced0", w="srs", m_rs=INFINITY,
    x_pieces=("X", "Wst s"), y_pieces=("s Wst", "Y"),
    x_constraint=frozenset("r"), y_constraint=frozenset("r"),
    rhs=(
        _c("t", "X", "Wst", "r", "t Wst", "Y"),
        _c("", "X", "Wst t", "r", "t Wst", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced0:2", "reduced0", w="rs", m_rs=INFINITY,
    x_pieces=("X", "t"), y_pieces=("s Wst", "Y"),
    x_constraint=frozenset("s"), y_constraint=frozenset("r"),
    rhs=(
        _c("t", "X", "r", "Wst", "Y"),
        _c("", "X", "r", "t Wst", "Y"),
    ),
))

# -- family reduced: 4 <= m_rs, m_st < inf, not (4,4) ------------------------

_add(ExpansionCase(
    "reduced:1", "reduced", w="srs",
    x_pieces=("X", "Wst s"), y_pieces=("s Wst", "Y"),
    x_constraint=frozenset("r"), y_constraint=frozenset("r"),
    rhs=(
        _c("t", "X", "Wst", "r", "t Wst", "Y"),
        _c("", "X", "Wst t", "r", "t Wst", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced:2", "reduced", w="rsr", m_st=4,
    x_pieces=("X", "Wrs r", "t"), y_pieces=("t", "r Wrs", "Y"),
    x_constraint=frozenset("t"), y_constraint=frozenset("t"),
    rhs=(
        _c("s", "X", "Wrs", "tst", "s Wrs", "Y"),
        _c("", "X", "Wrs s", "tst", "s Wrs", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced:3", "reduced", w="rt",
    x_pieces=("X", "Wrs r"), y_pieces=("t Wst", "Y"),
    x_constraint=frozenset("t"), y_constraint=frozenset("r"),
    rhs=(
        _c("s", "X", "Wrs", "s Wst", "Y"),
        _c("", "X", "Wrs s", "s Wst", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced:4.1", "reduced", w="rs",
    x_pieces=("X", "Wrs r", "t"), y_pieces=("s Wst", "Y"),
    x_constraint=frozenset("t"), y_constraint=frozenset("r"),
    extra="stwst_y_left_t",
    rhs=(
        _c("ts", "X", "Wrs s", "Wst", "Y"),
        _c("t", "X", "Wrs s", "s Wst", "Y"),
        _c("s", "X", "Wrs", "st Wst", "Y"),
        _c("", "X", "Wrs s", "st Wst", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced:4.2", "reduced", w="rs", m_st=4,
    x_pieces=("X", "Wrs r", "t"), y_pieces=("s Wst", "s Wrs", "Y"),
    x_constraint=frozenset("t"), y_constraint=frozenset("t"),
    rhs=(
        _c("ts", "X", "Wrs s", "Wst", "s Wrs", "Y"),
        _c("t", "X", "Wrs s", "s Wst", "s Wrs", "Y"),
        _c("sr", "X", "Wrs r", "t", "Wrs", "Y"),
        _c("s", "X", "Wrs r", "t", "r Wrs", "Y"),
        _c("r", "X", "Wrs sr", "t", "Wrs", "Y"),
        _c("", "X", "Wrs sr", "t", "r Wrs", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced:4.3", "reduced", w="rs",
    x_pieces=("X", "t"), y_pieces=("s Wst", "Y"),
    x_constraint=frozenset("s"), y_constraint=frozenset("r"),
    extra="case_4_3",
    rhs=(
        _c("t", "X", "r", "Wst", "Y"),
        _c("", "X", "r", "t Wst", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced:4.4", "reduced", w="rs", m_st=4,
    x_pieces=("X", "Wrs sr", "t"), y_pieces=("s Wst", "s Wrs", "Y"),
    x_constraint=frozenset("t"), y_constraint=frozenset("t"),
    rhs=(
        _c("t", "X", "Wrs s", "Wst", "s Wrs", "Y"),
        _c("r", "X", "Wrs r", "t", "Wrs", "Y"),
        _c("", "X", "Wrs r", "t", "r Wrs", "Y"),
    ),
))
_add(ExpansionCase(
    "reduced:4.5", "reduced", w="rs",
    x_pieces=("X", "Wrs r", "t"), y_pieces=("st Wst", "Y"),
    x_constraint=frozenset("t"), y_constraint=frozenset("r"),
    rhs=(
        _c("s", "X", "Wrs", "s Wst", "Y"),
        _c("", "X", "Wrs s", "s Wst", "Y"),
    ),
))

# -- family reduced2: m_rs >= 7, m_st = 3 ------------------------------------

_add(ExpansionCase(
    "reduced2:1", "reduced2", w="rsrsr", m_st=3,
    x_pieces=("Wrs r", "t"), y_pieces=("t", "r Wrs"),
    rhs=(
        _c("t", "Wrs", "tsrst", "s Wrs"),
        _c("", "Wrs s", "tsrst", "s Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:2", "reduced2", w="rsrs", m_st=3,
    x_pieces=("Wrs r", "t"), y_pieces=("ts",),
    rhs=(
        _c("s", "Wrs", "tsrst"),
        _c("", "Wrs s", "tsrst"),
    ),
))
_add(ExpansionCase(
    "reduced2:3.1", "reduced2", w="srs", m_st=3,
    x_pieces=("st",), y_pieces=("ts",),
    rhs=(
        _c("t", "tstrst"),
        _c("", "tsrst"),
    ),
))
_add(ExpansionCase(
    "reduced2:3.2", "reduced2", w="srs", m_st=3, m_rs=8,
    x_pieces=("Wrs s", "tsrst"), y_pieces=("tsrst", "s Wrs"),
    rhs=(
        _c("t", "Wrs s", "tsrtstrstrst", "s Wrs"),
        _c("r", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("", "Wrs r", "t", "r Wrs", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:3.3", "reduced2", w="srs", m_st=3, m_rs=7,
    x_pieces=("Wrs s", "tsrst"), y_pieces=("tsrst", "s Wrs"),
    rhs=(
        _c("t", "Wrs s", "tsrtstrstrst", "s Wrs"),
        _c("rr", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("r", "Wrs r", "t", "Wrs r", "t", "r Wrs"),
        _c("r", "Wrs r", "t", "r Wrs", "t", "r Wrs"),
        _c("", "Wrs r", "t", "r Wrs r", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:3.4", "reduced2", w="srs", m_st=3, m_rs=7,
    x_pieces=("Wrs s", "tsrst"), y_pieces=("tsrst",),
    rhs=(
        _c("t", "Wrs s", "tsrtstrstrst"),
        _c("r", "Wrs r", "t", "Wrs", "ts"),
        _c("", "Wrs r", "t", "r Wrs", "ts"),
    ),
))
_add(ExpansionCase(
    "reduced2:4.1", "reduced2", w="rsr", m_st=3,
    x_pieces=("Wrs sr", "t"), y_pieces=("t", "rs Wrs"),
    rhs=(
        _c("r", "Wrs", "t", "r Wrs"),
        _c("", "Wrs r", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:4.2", "reduced2", w="rsr", m_st=3,
    x_pieces=("Wrs r", "t"), y_pieces=("t", "r Wrs"),
    rhs=(
        _c("ssr", "Wrs r", "t", "Wrs"),
        _c("ss", "Wrs r", "t", "r Wrs"),
        _c("sr", "Wrs r", "t", "s Wrs"),
        _c("s", "Wrs r", "t", "rs Wrs"),
        _c("sr", "Wrs s", "t", "r Wrs"),
        _c("s", "Wrs sr", "t", "r Wrs"),
        _c("r", "Wrs sr", "t", "s Wrs"),
        _c("", "Wrs sr", "t", "rs Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:4.3", "reduced2", w="rsr", m_st=3,
    x_pieces=("Wrs sr", "t"), y_pieces=("t", "r Wrs"),
    rhs=(
        _c("sr", "Wrs", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "r Wrs"),
        _c("r", "Wrs r", "t", "s Wrs"),
        _c("", "Wrs r", "t", "rs Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:4.4", "reduced2", w="rsr", m_st=3,
    x_pieces=("t",), y_pieces=("t", "r Wrs"),
    rhs=(
        _c("t", "rst", "Wrs"),
        _c("", "rst", "s Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:5", "reduced2", w="sts", m_st=3,
    x_pieces=("Wrs s",), y_pieces=("s Wrs",),
    rhs=(
        _c("r", "Wrs", "t", "r Wrs"),
        _c("", "Wrs r", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:6.1", "reduced2", w="rt", m_st=3,
    x_pieces=("Wrs r",), y_pieces=("st",),
    rhs=(
        _c("s", "Wrs", "ts"),
        _c("", "Wrs s", "ts"),
    ),
))
_add(ExpansionCase(
    "reduced2:6.2", "reduced2", w="rt", m_st=3,
    x_pieces=("Wrs r",), y_pieces=("st", "s Wrs"),
    rhs=(
        _c("sr", "Wrs r", "t", "Wrs"),
        _c("s", "Wrs r", "t", "r Wrs"),
        _c("r", "Wrs sr", "t", "Wrs"),
        _c("", "Wrs sr", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:6.3", "reduced2", w="rt", m_st=3,
    x_pieces=("Wrs sr",), y_pieces=("st", "s Wrs"),
    rhs=(
        _c("r", "Wrs", "t", "r Wrs"),
        _c("", "Wrs r", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.1", "reduced2", w="st", m_st=3,
    x_pieces=("Wrs rs",), y_pieces=("rst",),
    rhs=(
        _c("s", "Wrs", "ts"),
        _c("", "Wrs s", "ts"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.2", "reduced2", w="st", m_st=3,
    x_pieces=("Wrs rs",), y_pieces=("rst", "s Wrs"),
    rhs=(
        _c("sr", "Wrs r", "t", "Wrs"),
        _c("s", "Wrs r", "t", "r Wrs"),
        _c("r", "Wrs sr", "t", "Wrs"),
        _c("", "Wrs sr", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.3", "reduced2", w="st", m_st=3,
    x_pieces=("Wrs srs",), y_pieces=("rst", "s Wrs"),
    rhs=(
        _c("r", "Wrs", "t", "r Wrs"),
        _c("", "Wrs r", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.4", "reduced2", w="st", m_st=3,
    x_pieces=("Wrs s",), y_pieces=("r",),
    rhs=(
        _c("r", "Wrs", "t"),
        _c("", "Wrs r", "t"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.5", "reduced2", w="st", m_st=3,
    x_pieces=("Wrs s",), y_pieces=("rst",),
    rhs=(
        _c("rs", "Wrs", "ts"),
        _c("r", "Wrs s", "ts"),
        _c("s", "Wrs r", "ts"),
        _c("", "Wrs rs", "ts"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.6", "reduced2", w="st", m_st=3, m_rs=7,
    x_pieces=("Wrs r", "t", "Wrs s"), y_pieces=("rst", "sr Wrs"),
    rhs=(
        _c("rs", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("r", "Wrs r", "t", "Wrs s", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs r", "t", "r Wrs"),
        _c("s", "Wrs s", "tsrst", "Wrs"),
        _c("", "Wrs s", "tsrst", "s Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.7", "reduced2", w="st", m_st=3,
    x_pieces=("Wrs s",), y_pieces=("rst", "s Wrs"),
    rhs=(
        _c("rrs", "Wrs r", "t", "Wrs"),
        _c("rs", "Wrs r", "t", "r Wrs"),
        _c("rr", "Wrs sr", "t", "Wrs"),
        _c("r", "Wrs sr", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs"),
        _c("r", "Wrs rs", "t", "r Wrs"),
        _c("", "Wrs rsr", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:7.8", "reduced2", w="st", m_st=3, m_rs=7,
    x_pieces=("Wrs r", "t", "Wrs s"), y_pieces=("rst", "s Wrs"),
    rhs=(
        _c("rrs", "Wrs r", "t", "Wrs r", "t", "Wrs"),
        _c("rs", "Wrs r", "t", "Wrs r", "t", "r Wrs"),
        _c("rr", "Wrs r", "t", "Wrs sr", "t", "Wrs"),
        _c("r", "Wrs r", "t", "Wrs sr", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs r", "t", "Wrs"),
        _c("rs", "Wrs s", "tsrst", "Wrs"),
        _c("r", "Wrs s", "tsrst", "s Wrs"),
        _c("s", "Wrs s", "tsrst", "r Wrs"),
        _c("", "Wrs s", "tsrst", "sr Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.1", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs r", "t"), y_pieces=("t",),
    rhs=(
        _c("s", "Wrs", "ts"),
        _c("", "Wrs s", "ts"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.2", "reduced2", w="rs", m_st=3,
    x_pieces=("t",), y_pieces=("ts",),
    rhs=(
        _c("t", "rsts"),
        _c("", "rst"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.3", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs rsr", "t"), y_pieces=("tsrst",),
    rhs=(
        _c("t", "Wrs r", "tsrst"),
        _c("s", "Wrs", "ts"),
        _c("", "Wrs s", "ts"),
    ),
))
# The printed source's third term here repeats the constant term's
# element; machine expansion at both bond values (with unequal weights
# at the even one) gives xi_s on w_rs r * t * r w_rs instead.
_add(ExpansionCase(
    "reduced2:8.4", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs rsr", "t"), y_pieces=("tsrst", "s Wrs"),
    rhs=(
        _c("t", "Wrs r", "tsrst", "s Wrs"),
        _c("sr", "Wrs r", "t", "Wrs"),
        _c("s", "Wrs r", "t", "r Wrs"),
        _c("r", "Wrs sr", "t", "Wrs"),
        _c("", "Wrs sr", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.5", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs srsr", "t"), y_pieces=("tsrst", "s Wrs"),
    rhs=(
        _c("t", "Wrs sr", "tsrst", "s Wrs"),
        _c("r", "Wrs", "t", "r Wrs"),
        _c("", "Wrs r", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.6", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs sr", "t"), y_pieces=("tsr",),
    rhs=(
        _c("t", "Wrs", "tsr"),
        _c("r", "Wrs", "t"),
        _c("", "Wrs r", "t"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.7", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs sr", "t"), y_pieces=("tsrst",),
    rhs=(
        _c("t", "Wrs", "tsrst"),
        _c("rs", "Wrs", "ts"),
        _c("r", "Wrs s", "ts"),
        _c("s", "Wrs r", "ts"),
        _c("", "Wrs rs", "ts"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.8", "reduced2", w="rs", m_st=3, m_rs=7,
    x_pieces=("Wrs r", "t", "Wrs sr", "t"), y_pieces=("tsrst", "sr Wrs"),
    rhs=(
        _c("t", "Wrs r", "t", "Wrs", "tsrst", "sr Wrs"),
        _c("rs", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("r", "Wrs r", "t", "Wrs s", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs r", "t", "r Wrs"),
        _c("s", "Wrs s", "tsrst", "Wrs"),
        _c("", "Wrs s", "tsrst", "s Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.9", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs sr", "t"), y_pieces=("tsrst", "s Wrs"),
    rhs=(
        _c("t", "Wrs", "tsrst", "s Wrs"),
        _c("rrs", "Wrs r", "t", "Wrs"),
        _c("rs", "Wrs r", "t", "r Wrs"),
        _c("rr", "Wrs sr", "t", "Wrs"),
        _c("r", "Wrs sr", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs"),
        _c("r", "Wrs rs", "t", "r Wrs"),
        _c("", "Wrs rsr", "t", "r Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.10", "reduced2", w="rs", m_st=3, m_rs=7,
    x_pieces=("Wrs r", "t", "Wrs sr", "t"), y_pieces=("tsrst", "s Wrs"),
    rhs=(
        _c("t", "Wrs r", "t", "Wrs", "tsrst", "s Wrs"),
        _c("rrs", "Wrs r", "t", "Wrs r", "t", "Wrs"),
        _c("rs", "Wrs r", "t", "Wrs r", "t", "r Wrs"),
        _c("rr", "Wrs r", "t", "Wrs sr", "t", "Wrs"),
        _c("r", "Wrs r", "t", "Wrs sr", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs r", "t", "Wrs"),
        _c("rs", "Wrs s", "tsrst", "Wrs"),
        _c("r", "Wrs s", "tsrst", "s Wrs"),
        _c("s", "Wrs s", "tsrst", "r Wrs"),
        _c("", "Wrs s", "tsrst", "sr Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.11", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs r", "t"), y_pieces=("ts",),
    rhs=(
        _c("ts", "Wrs", "ts"),
        _c("t", "Wrs s", "ts"),
        _c("s", "Wrs", "t"),
        _c("", "Wrs s", "t"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.12", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs r", "t"), y_pieces=("tsr",),
    rhs=(
        _c("ts", "Wrs", "tsr"),
        _c("t", "Wrs s", "tsr"),
        _c("sr", "Wrs", "t"),
        _c("s", "Wrs r", "t"),
        _c("r", "Wrs s", "t"),
        _c("", "Wrs sr", "t"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.13", "reduced2", w="rs", m_st=3,
    x_pieces=("Wrs r", "t"), y_pieces=("tsrst",),
    rhs=(
        _c("ts", "Wrs", "tsrst"),
        _c("t", "Wrs s", "tsrst"),
        _c("ssr", "Wrs", "ts"),
        _c("sr", "Wrs s", "ts"),
        _c("ss", "Wrs r", "ts"),
        _c("s", "Wrs rs", "ts"),
        _c("r", "Wrs", "ts"),
        _c("s", "Wrs sr", "ts"),
        _c("", "Wrs srs", "ts"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.14", "reduced2", w="rs", m_st=3, m_rs=8,
    x_pieces=("Wrs r", "t", "Wrs r", "t"), y_pieces=("tsrst", "sr Wrs"),
    rhs=(
        _c("ts", "Wrs r", "t", "Wrs", "tsrst", "sr Wrs"),
        _c("t", "Wrs r", "t", "Wrs s", "tsrst", "sr Wrs"),
        _c("ssr", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("sr", "Wrs r", "t", "Wrs s", "t", "r Wrs"),
        _c("ss", "Wrs r", "t", "Wrs r", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs rs", "t", "r Wrs"),
        _c("r", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs sr", "t", "r Wrs"),
        _c("t", "Wrs", "tsrst", "s Wrs"),
        _c("", "Wrs s", "tsrst", "s Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.15", "reduced2", w="rs", m_st=3, m_rs=7,
    x_pieces=("st", "Wrs r", "t"), y_pieces=("tsrst", "sr Wrs"),
    rhs=(
        _c("ts", "st", "Wrs", "tsrst", "sr Wrs"),
        _c("t", "st", "Wrs s", "tsrst", "sr Wrs"),
        _c("ssr", "st", "Wrs", "t", "r Wrs"),
        _c("sr", "st", "Wrs s", "t", "r Wrs"),
        _c("ss", "st", "Wrs r", "t", "r Wrs"),
        _c("s", "st", "Wrs rs", "t", "r Wrs"),
        _c("r", "st", "Wrs", "t", "r Wrs"),
        _c("s", "st", "Wrs sr", "t", "r Wrs"),
        _c("s", "tsrst", "Wrs"),
        _c("", "tsrst", "s Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.16", "reduced2", w="rs", m_st=3, m_rs=7,
    x_pieces=("Wrs r", "t", "Wrs r", "t"), y_pieces=("tsrst", "sr Wrs"),
    rhs=(
        _c("ts", "Wrs r", "t", "Wrs", "tsrst", "sr Wrs"),
        _c("t", "Wrs r", "t", "Wrs s", "tsrst", "sr Wrs"),
        _c("ssr", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("sr", "Wrs r", "t", "Wrs s", "t", "r Wrs"),
        _c("ss", "Wrs r", "t", "Wrs r", "t", "r Wrs"),
        _c("st", "Wrs", "tsrst", "s Wrs"),
        _c("s", "Wrs s", "tsrst", "s Wrs"),
        _c("r", "Wrs r", "t", "Wrs", "t", "r Wrs"),
        _c("s", "Wrs r", "t", "Wrs sr", "t", "r Wrs"),
        _c("s", "Wrs r", "tsrst", "s Wrs"),
        _c("", "Wrs rs", "tsrst", "s Wrs"),
    ),
))
_add(ExpansionCase(
    "reduced2:8.17", "reduced2", w="rs", m_st=3,
    x_pieces=("X", "Wrs r", "t"), y_pieces=("tsrst", "s Wrs", "Y"),
    x_constraint=frozenset("t"), y_constraint=frozenset("t"),
    rhs=(),
    degree_bound="L(rsrs)",
))


# ---------------------------------------------------------------------- runner


@dataclass
class ExpansionSample:
    x_word: str
    y_word: str
    passed: bool
    detail: str = ""


@dataclass
class ExpansionReport:
    case_id: str
    params: dict
    samples_run: int
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.samples_run > 0 and not self.failures

    def to_json(self) -> dict:
        return {
            "case_id": self.case_id,
            "params": self.params,
            "samples_run": self.samples_run,
            "failures": self.failures,
        }


def _piece_length_bound(piece: str, m_rs, m_st) -> int:
    total = 0
    for unit in piece.split():
        if unit in ("X", "Y"):
            total += 4
        elif unit.startswith("W"):
            total += {"Wrs": m_rs, "Wst": m_st, "Wrt": 2}[unit] + 2
        else:
            total += len(unit)
    return total


def _default_params(case: ExpansionCase) -> dict:
    m_rs, m_st = case.m_rs, case.m_st
    if case.family == "reduced":
        # both bonds finite >= 4, never (4, 4)
        if m_rs is None:
            m_rs = 6 if m_st in (None, 4) else 4
        if m_st is None:
            m_st = 4 if m_rs != 4 else 6
    else:
        # reduced0 / reduced2 mark one bond (INFINITY resp. 3) on the case;
        # the free bond defaults to 3 resp. 7
        if m_rs is None:
            m_rs = 3 if case.family == "reduced0" else 7
        if m_st is None:
            m_st = 3 if case.family == "reduced0" else 7
    a, b, c = 4, 2, 1
    if m_rs != INFINITY and m_rs % 2:
        a = b
    if m_st != INFINITY and m_st % 2:
        c = b
    return {"m_rs": m_rs, "m_st": m_st, "weights": (a, b, c)}


class ExpansionVerifier:
    """Build and check the samples of one subcase on one system."""

    def __init__(self, case: ExpansionCase, params: dict | None = None,
                 max_samples: int = 32, pool_length: int = 4):
        if case.case_id not in EXPANSION_CASES and not case.case_id.endswith("~mirror"):
            raise UnsupportedLemma(case.case_id)
        self.case = case
        self.params = dict(_default_params(case), **(params or {}))
        self.max_samples = max_samples
        self.pool_length = pool_length
        m_rs, m_st = self.params["m_rs"], self.params["m_st"]
        brs = 0 if m_rs == INFINITY else m_rs
        bst = 0 if m_st == INFINITY else m_st
        bound = (
            _piece_length_bound(" ".join(case.x_pieces), brs, bst)
            + len(case.w)
            + _piece_length_bound(" ".join(case.y_pieces), brs, bst)
        )
        # the spec horizon for infinite-bond subcases; finite subcases size
        # the ball to their own products
        self.horizon = 14 if m_rs == INFINITY or m_st == INFINITY else bound + 2
        self.system = CoxeterSystem.rank3(m_rs, m_st, 2, ball_radius_limit=self.horizon)
        self.algebra = HeckeAlgebra(self.system, WeightFunction(self.params["weights"]))

    # -- piece evaluation --------------------------------------------------

    def _unit(self, unit: str) -> int:
        sys = self.system
        if unit.startswith("W"):
            return sys.longest_element(unit[1:])
        return sys.normal_form(unit)

    def _piece(self, piece: str) -> int:
        sys = self.system
        units = piece.split()
        val = self._unit(units[0])
        for u in units[1:]:
            val = sys.mult(val, self._unit(u))
        return val

    def _join(self, pieces, X: int, Y: int) -> int | None:
        """Reduced product of the pieces; None when a join is not reduced."""
        sys = self.system
        val = 0
        for piece in pieces:
            if piece == "X":
                nxt = X
            elif piece == "Y":
                nxt = Y
            else:
                nxt = self._piece(piece)
            val = sys.extend_reduced(val, nxt)
            if val is None:
                return None
        return val

    # -- pools ---------------------------------------------------------------

    def _pool(self, constraint: frozenset | None, side: str) -> list[int]:
        sys = self.system
        if constraint is None:
            return [0]
        out = []
        for x in sys.ball(self.pool_length):
            desc = sys.descents(x, "right" if side == "x" else "left")
            if desc <= constraint:
                out.append(x)
        return out

    def _extra_ok(self, X: int, Y: int) -> bool:
        sys = self.system
        extra = self.case.extra
        if extra is None:
            return True
        if extra == "stwst_y_left_t":
            probe = sys.mult(self._piece("st Wst"), Y)
            return sys.descents(probe, "left") == {"t"}
        if extra == "case_4_3":
            # mirrored instances use the swapped letters
            mirrored = self.case.case_id.endswith("~mirror")
            r, t = ("t", "r") if mirrored else ("r", "t")
            m_out = self.params["m_rs"] if mirrored else self.params["m_st"]
            if sys.descents(sys.mult(X, sys.element(r)), "right") != {r}:
                return False
            if m_out >= 5:
                return True
            if sys.descents(sys.mult(X, self._piece(r + "s")), "right") == {"s"}:
                return True
            return sys.descents(sys.mult(sys.element("s"), Y), "left") == {"s"}
        raise UnsupportedLemma(f"unknown extra predicate {extra!r}")

    # -- verification ----------------------------------------------------------

    def _term_element(self, pieces) -> int:
        sys = self.system
        val = 0
        for piece in pieces:
            nxt = self._piece(piece)
            val2 = sys.extend_reduced(val, nxt)
            if val2 is None:
                raise ConstraintUnsatisfiable(
                    f"non-reduced join in RHS term {pieces} of {self.case.case_id}"
                )
            val = val2
        return val

    def _xi_poly(self, letters: str) -> LaurentPoly:
        p = LaurentPoly.one()
        for ch in letters:
            p = p * self.algebra.xi[self.system.gen_index(ch)]
        return p

    def _rhs_elt(self, X: int, Y: int) -> HeckeElt:
        sys = self.system
        out = HeckeElt()
        for letters, pieces in self.case.rhs:
            resolved = []
            for piece in pieces:
                if piece == "X":
                    resolved.append(("elt", X))
                elif piece == "Y":
                    resolved.append(("elt", Y))
                else:
                    resolved.append(("elt", self._piece(piece)))
            val = 0
            for _, e in resolved:
                val2 = sys.extend_reduced(val, e)
                if val2 is None:
                    raise ConstraintUnsatisfiable(
                        f"non-reduced RHS join in {self.case.case_id}: {pieces}"
                    )
                val = val2
            out = out + HeckeElt({val: self._xi_poly(letters)})
        return out

    def run(self, check_transpose: bool = True) -> ExpansionReport:
        case, sys, alg = self.case, self.system, self.algebra
        report = ExpansionReport(case.case_id, self.params, 0)
        w = sys.normal_form(case.w)
        pool_x = self._pool(case.x_constraint, "x")
        pool_y = self._pool(case.y_constraint, "y")
        combos = itertools.product(pool_x, pool_y)
        ran = 0
        for X, Y in combos:
            if ran >= self.max_samples:
                break
            if not self._extra_ok(X, Y):
                continue
            x = self._join(case.x_pieces, X, Y)
            y = self._join(case.y_pieces, X, Y)
            if x is None or y is None:
                continue
            if sys.length(x) + len(case.w) + sys.length(y) > self.horizon:
                continue
            lhs = alg.t_mult_many(alg.t(x), alg.t(w), alg.t(y))
            if case.degree_bound is not None:
                bound = self._degree_bound_value()
                ok = lhs.degree <= bound
                detail = {"x": sys.word(x), "y": sys.word(y),
                          "degree": lhs.degree, "bound": bound}
            else:
                rhs = self._rhs_elt(X, Y)
                ok = lhs == rhs
                detail = {"x": sys.word(x), "y": sys.word(y)}
                if ok and check_transpose and ran == 0:
                    tl = alg.t_mult_many(
                        alg.t(sys.inverse(y)), alg.t(sys.inverse(w)),
                        alg.t(sys.inverse(x)))
                    tr = HeckeElt({sys.inverse(e): c for e, c in rhs.coords.items()})
                    if tl != tr:
                        ok = False
                        detail["transpose"] = "failed"
            ran += 1
            if not ok:
                report.failures.append(detail)
        if ran == 0:
            raise ConstraintUnsatisfiable(
                f"no conforming sample for {case.case_id} at {self.params}"
            )
        report.samples_run = ran
        return report

    def _degree_bound_value(self) -> int:
        assert self.case.degree_bound == "L(rsrs)"
        mirrored = self.case.case_id.endswith("~mirror")
        word = "stst" if mirrored else "rsrs"
        return self.algebra.weight_of(self.system.normal_form(word))


def verify_expansion(case_id: str, params: dict | None = None,
                     max_samples: int = 32, mirror: bool = False) -> ExpansionReport:
    """Verify one subcase (optionally its r<->t mirror) exactly."""
    base = EXPANSION_CASES.get(case_id)
    if base is None:
        raise UnsupportedLemma(f"unknown expansion case {case_id!r}")
    case = mirror_case(base) if mirror else base
    return ExpansionVerifier(case, params, max_samples=max_samples).run()


def all_expansion_case_ids() -> list[str]:
    return sorted(EXPANSION_CASES)
