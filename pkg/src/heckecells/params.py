"""Weight-space analysis: critical values, hyperplanes, triple points.

Weights are treated symbolically as (a, b, c) = (L(r), L(s), L(t)) with
exact rational coefficients.  Every candidate distinguished element has
a linear predicted-a-value form (chamber-dependent for the short
elements s w_rs etc., which only exist on one side of a = b resp.
b = c), and coincidences a'(d1) = a'(d2) cut loci in weight space.

A locus segment is *critical* when the two elements lie in the same
two-sided cell there, which is decided by the exact case classifier
from the cells module at a rational sample point of the segment.  The
verdict can change only where one of a - b, b - c, or a + c - N changes
sign (N the common level), so segments are split at those breakpoints
and classified piecewise; all of this is exact rational arithmetic, and
floating point appears only in SVG layout.

The candidate loci are generated from all pairs of distinguished
symbols, never copied from a list; the published value tables serve as
regression oracles in the test suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .cells import DSet, classify_symbol_pair
from .coxeter import INFINITY, CoxeterSystem, WeightFunction
from .errors import NotApplicableSystem, UndefinedInChamber

# ---------------------------------------------------------------------- forms


@dataclass(frozen=True)
class LinearForm:
    """ca*a + cb*b + cc*c with exact rational coefficients."""

    ca: Fraction = Fraction(0)
    cb: Fraction = Fraction(0)
    cc: Fraction = Fraction(0)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.ca + other.ca, self.cb + other.cb, self.cc + other.cc)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.ca - other.ca, self.cb - other.cb, self.cc - other.cc)

    def scaled(self, k) -> "LinearForm":
        k = Fraction(k)
        return LinearForm(self.ca * k, self.cb * k, self.cc * k)

    def eval(self, a, b, c) -> Fraction:
        return self.ca * a + self.cb * b + self.cc * c

    def eval_xy(self, x: Fraction, y: Fraction) -> Fraction:
        """Value at (a, b, c) = (x, 1, y)."""
        return self.ca * x + self.cb + self.cc * y

    def is_zero(self) -> bool:
        return self.ca == self.cb == self.cc == 0

    def __repr__(self) -> str:
        return f"{self.ca}*a + {self.cb}*b + {self.cc}*c"


_A = LinearForm(ca=Fraction(1))
_B = LinearForm(cb=Fraction(1))
_C = LinearForm(cc=Fraction(1))

# chamber signs: sign of a - b and of b - c; 0 means unconstrained
Chamber = tuple[int, int]

CHAMBER_TEXT = {
    ("ab", 1): "a>b", ("ab", -1): "a<b",
    ("bc", 1): "b>c", ("bc", -1): "b<c",
}


def symbol_exists(symbol: str, m_rs, m_st, chamber: Chamber) -> bool:
    ab, bc = chamber
    if symbol in ("e", "r", "s", "t", "w_rt"):
        return True
    if symbol == "w_rs":
        return m_rs != INFINITY
    if symbol == "w_st":
        return m_st != INFINITY
    if symbol == "sw_rs":
        return m_rs != INFINITY and m_rs % 2 == 0 and m_rs >= 4 and ab > 0
    if symbol == "rw_rs":
        return m_rs != INFINITY and m_rs % 2 == 0 and m_rs >= 4 and ab < 0
    if symbol == "sw_st":
        return m_st != INFINITY and m_st % 2 == 0 and m_st >= 4 and bc < 0
    if symbol == "tw_st":
        return m_st != INFINITY and m_st % 2 == 0 and m_st >= 4 and bc > 0
    raise UndefinedInChamber(f"unknown symbol {symbol!r}")


def aprime_form(symbol: str, m_rs, m_st, chamber: Chamber = (0, 0)) -> LinearForm:
    """The predicted a-value of a distinguished symbol as a LinearForm.

    Pair symbols of odd bonds are valid only where the two weights are
    equal; the form returned uses the first generator's weight then.
    """
    if not symbol_exists(symbol, m_rs, m_st, chamber):
        raise UndefinedInChamber(f"{symbol} does not exist in chamber {chamber}")
    if symbol == "e":
        return LinearForm()
    if symbol == "r":
        return _A
    if symbol == "s":
        return _B
    if symbol == "t":
        return _C
    if symbol == "w_rt":
        return _A + _C
    if symbol == "w_rs":
        if m_rs % 2 == 0:
            return (_A + _B).scaled(Fraction(m_rs, 2))
        return _A.scaled(m_rs)  # odd bond forces a = b
    if symbol == "w_st":
        if m_st % 2 == 0:
            return (_B + _C).scaled(Fraction(m_st, 2))
        return _B.scaled(m_st)
    half = {"sw_rs": m_rs, "rw_rs": m_rs, "sw_st": m_st, "tw_st": m_st}[symbol] // 2
    if symbol == "sw_rs":  # a > b
        return _A + (_A - _B).scaled(half - 1)
    if symbol == "rw_rs":  # a < b
        return _B + (_B - _A).scaled(half - 1)
    if symbol == "sw_st":  # c > b
        return _C + (_C - _B).scaled(half - 1)
    return _B + (_B - _C).scaled(half - 1)  # tw_st, b > c


# ---------------------------------------------------------------------- loci


@dataclass(frozen=True)
class CriticalLocus:
    d1: str
    d2: str
    form: LinearForm  # a'(d1) - a'(d2), zero on the locus
    chamber: tuple[str, ...]  # sign constraints delimiting this segment
    critical: bool
    sample: tuple[Fraction, Fraction]  # an interior (a/b, c/b) point
    witness: str | None = None

    def to_json(self) -> dict:
        return {
            "d1": self.d1,
            "d2": self.d2,
            "alpha": str(self.form.ca),
            "beta": str(self.form.cb),
            "gamma": str(self.form.cc),
            "chamber": list(self.chamber),
            "critical": self.critical,
            "sample": [str(self.sample[0]), str(self.sample[1])],
            "witness": self.witness,
        }


def _classifier_system(m_rs: int, m_st: int) -> CoxeterSystem:
    return CoxeterSystem.rank3(m_rs, m_st, 2, ball_radius_limit=2)


def _classify_at(system: CoxeterSystem, sym1: str, sym2: str,
                 x: Fraction, y: Fraction, m_rs: int, m_st: int) -> bool:
    """True when the pair is same-cell (critical) at (a/b, c/b) = (x, y)."""
    den = x.denominator * y.denominator
    a, b, c = int(x * den), den, int(y * den)
    chamber = (_sign(a - b), _sign(b - c))
    f1 = aprime_form(sym1, m_rs, m_st, chamber)
    f2 = aprime_form(sym2, m_rs, m_st, chamber)
    n1, n2 = f1.eval(a, b, c), f2.eval(a, b, c)
    if n1 != n2:
        raise AssertionError(
            f"sample point off the locus: a'({sym1})={n1} != a'({sym2})={n2}"
        )
    weights = WeightFunction((a, b, c))
    verdict = classify_symbol_pair(system, weights, sym1, sym2, int(n1))
    return verdict == "same"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _segment_records(system, m_rs, m_st, sym1, sym2, chamber: Chamber,
                     xmax: Fraction = Fraction(64)) -> list[CriticalLocus]:
    """Classified open segments of the locus a'(d1)=a'(d2) in one chamber."""
    ab, bc = chamber
    f1 = aprime_form(sym1, m_rs, m_st, chamber)
    f2 = aprime_form(sym2, m_rs, m_st, chamber)
    form = f1 - f2
    if form.is_zero():
        return []
    # parametrize the line in the (x, y) = (a/b, c/b) plane, b = 1
    al, be, ga = form.ca, form.cb, form.cc
    if ga != 0:
        # y(t) = -(al*t + be)/ga with t = x
        def point(t: Fraction) -> tuple[Fraction, Fraction]:
            return t, -(al * t + be) / ga
    elif al != 0:
        x0 = -be / al

        def point(t: Fraction) -> tuple[Fraction, Fraction]:
            return x0, t
    else:
        return []

    # constraints as affine functions of the parameter: f(point(t)) > 0
    cons: list[tuple[LinearForm, str]] = [
        (_A, "a>0"), (_C, "c>0"),
    ]
    if ab:
        cons.append(((_A - _B).scaled(ab), CHAMBER_TEXT[("ab", ab)]))
    if bc:
        cons.append(((_B - _C).scaled(bc), CHAMBER_TEXT[("bc", bc)]))
    # interval of t where all constraints hold
    lo, hi = Fraction(0), xmax
    for g, _txt in cons:
        v0 = g.eval_xy(*point(Fraction(0)))
        v1 = g.eval_xy(*point(Fraction(1)))
        slope = v1 - v0
        if slope == 0:
            if v0 <= 0:
                return []
        elif slope > 0:
            lo = max(lo, -v0 / slope)
        else:
            hi = min(hi, -v0 / slope)
    if lo >= hi:
        return []
    # split where a + c - N changes sign (N = a'(d1) on the locus)
    disc = _A + _C - f1
    breaks = []
    v0 = disc.eval_xy(*point(Fraction(0)))
    v1 = disc.eval_xy(*point(Fraction(1)))
    slope = v1 - v0
    if slope != 0:
        root = -v0 / slope
        if lo < root < hi:
            breaks.append(root)
    cuts = [lo] + sorted(breaks) + [hi]
    chamber_txt = tuple(txt for _g, txt in cons[2:])
    out = []
    for i in range(len(cuts) - 1):
        mid = (cuts[i] + cuts[i + 1]) / 2
        x, y = point(mid)
        extra: tuple[str, ...] = ()
        if breaks:
            v = disc.eval_xy(x, y)
            extra = ("a+c>N",) if v > 0 else ("a+c<N",) if v < 0 else ()
        critical = _classify_at(system, sym1, sym2, x, y, m_rs, m_st)
        out.append(CriticalLocus(
            d1=sym1, d2=sym2, form=form,
            chamber=chamber_txt + extra, critical=critical, sample=(x, y),
        ))
    return out


_SYMBOL_ORDER = ("r", "s", "t", "w_rt", "w_rs", "w_st",
                 "sw_rs", "rw_rs", "sw_st", "tw_st")


def critical_lines_2d(m: int, n: int) -> list[CriticalLocus]:
    """All classified locus segments for m_rs = 2m, m_st = 2n.

    Deterministic order: (d1, d2) by symbol order, then chamber text.
    """
    m_rs, m_st = 2 * m, 2 * n
    if not _hyperbolic(m_rs, m_st):
        raise NotApplicableSystem(f"({m_rs},{m_st}) is not in the supported family")
    system = _classifier_system(m_rs, m_st)
    seen: set[tuple] = set()
    out: list[CriticalLocus] = []
    chambers = [(sab, sbc) for sab in (1, -1) for sbc in (1, -1)]
    for i, s1 in enumerate(_SYMBOL_ORDER):
        for s2 in _SYMBOL_ORDER[i + 1:]:
            for chamber in chambers:
                if not (symbol_exists(s1, m_rs, m_st, chamber)
                        and symbol_exists(s2, m_rs, m_st, chamber)):
                    continue
                for rec in _segment_records(system, m_rs, m_st, s1, s2, chamber):
                    key = (rec.d1, rec.d2, rec.form, rec.chamber)
                    if key not in seen:
                        seen.add(key)
                        out.append(rec)
    out.sort(key=lambda r: (_SYMBOL_ORDER.index(r.d1),
                            _SYMBOL_ORDER.index(r.d2), r.chamber))
    return out


def _hyperbolic(m_rs, m_st) -> bool:
    if m_rs == INFINITY or m_st == INFINITY:
        return not (m_rs == INFINITY and m_st == INFINITY)
    return m_rs * m_st > 2 * (m_rs + m_st)


def critical_values_1d(m: int, k: int) -> list[Fraction]:
    """Sorted critical values of a/b in the b = c regime, m_rs = 2m, m_st = k.

    A value is critical when some pair of distinguished symbols shares
    its predicted a-value there and lies in one two-sided cell.
    """
    m_rs, m_st = 2 * m, k
    if not _hyperbolic(m_rs, m_st):
        raise NotApplicableSystem(f"({m_rs},{m_st}) is not in the supported family")
    system = _classifier_system(m_rs, m_st)
    values: set[Fraction] = set()
    for ab in (1, -1, 0):
        chamber = (ab, 0)
        symbols = [s for s in _SYMBOL_ORDER
                   if s not in ("sw_st", "tw_st")  # b = c kills those
                   and symbol_exists(s, m_rs, m_st, chamber)]
        for i, s1 in enumerate(symbols):
            for s2 in symbols[i + 1:]:
                f = (aprime_form(s1, m_rs, m_st, chamber)
                     - aprime_form(s2, m_rs, m_st, chamber))
                # at b = c = 1 the form is slope * x + const
                slope, const = f.ca, f.cb + f.cc
                if slope == 0:
                    continue
                x0 = -Fraction(const) / slope
                if x0 <= 0:
                    continue
                if ab and _sign(x0 - 1) != ab:
                    continue
                if not ab and x0 != 1:
                    # the chamber-free pass only contributes the a = b point;
                    # other coincidences are found in the signed passes
                    continue
                if _classify_at(system, s1, s2, x0, Fraction(1), m_rs, m_st):
                    values.add(x0)
    return sorted(values)


# ---------------------------------------------------------------------- triples


@dataclass(frozen=True)
class TriplePoint:
    x: Fraction
    y: Fraction
    symbols: tuple[str, str, str]
    level: Fraction  # common a' value at (a, b, c) = (x, 1, y)

    def to_json(self) -> dict:
        return {
            "x": str(self.x), "y": str(self.y),
            "symbols": list(self.symbols), "level": str(self.level),
        }


def triple_points(m: int, n: int) -> list[TriplePoint]:
    """Weight points where three distinguished elements share one level.

    One per chamber (the short rs-element, w_rt, and the short
    st-element), plus the equal-weight point with {r, s, t}.
    """
    m_rs, m_st = 2 * m, 2 * n
    if not _hyperbolic(m_rs, m_st):
        raise NotApplicableSystem(f"({m_rs},{m_st}) is not in the supported family")
    out = [TriplePoint(Fraction(1), Fraction(1), ("r", "s", "t"), Fraction(1))]
    for ab in (1, -1):
        for bc in (1, -1):
            chamber = (ab, bc)
            d_rs = "sw_rs" if ab > 0 else "rw_rs"
            d_st = "tw_st" if bc > 0 else "sw_st"
            f1 = aprime_form(d_rs, m_rs, m_st, chamber)
            f2 = aprime_form("w_rt", m_rs, m_st, chamber)
            f3 = aprime_form(d_st, m_rs, m_st, chamber)
            # solve f1 = f2 = f3 at b = 1 for (x, y)
            g1, g2 = f1 - f2, f3 - f2
            det = g1.ca * g2.cc - g2.ca * g1.cc
            if det == 0:
                continue
            x = (-g1.cb * g2.cc + g2.cb * g1.cc) / det
            y = (-g1.ca * g2.cb + g2.ca * g1.cb) / det
            if x <= 0 or y <= 0:
                continue
            if _sign(x - 1) != ab or _sign(1 - y) != bc:
                continue
            out.append(TriplePoint(x, y, (d_rs, "w_rt", d_st),
                                   f2.eval_xy(x, y)))
    out.sort(key=lambda p: (p.x, p.y))
    return out


# ---------------------------------------------------------------------- levels


def d_levels(system: CoxeterSystem, weights: WeightFunction) -> dict[int, list[str]]:
    """a' level -> canonical words of the distinguished elements there."""
    dset = DSet(system, weights)
    return {
        lvl: [system.word(d.element) or "e" for d in ds]
        for lvl, ds in sorted(dset.levels().items())
    }


# ---------------------------------------------------------------------- export


def loci_to_json(loci, m: int, n: int) -> dict:
    return {
        "m_rs": 2 * m, "m_st": 2 * n,
        "loci": [rec.to_json() for rec in loci],
    }


def loci_from_json(blob: dict) -> list[CriticalLocus]:
    out = []
    for rec in blob["loci"]:
        out.append(CriticalLocus(
            d1=rec["d1"], d2=rec["d2"],
            form=LinearForm(Fraction(rec["alpha"]), Fraction(rec["beta"]),
                            Fraction(rec["gamma"])),
            chamber=tuple(rec["chamber"]),
            critical=bool(rec["critical"]),
            sample=(Fraction(rec["sample"][0]), Fraction(rec["sample"][1])),
            witness=rec.get("witness"),
        ))
    return out


def loci_to_csv(loci) -> str:
    lines = ["d1,d2,alpha,beta,gamma,chamber,critical"]
    for rec in loci:
        chamber = ";".join(rec.chamber)
        lines.append(
            f"{rec.d1},{rec.d2},{rec.form.ca},{rec.form.cb},{rec.form.cc},"
            f"{chamber},{str(rec.critical).lower()}"
        )
    return "\n".join(lines) + "\n"


def arrangement_svg(loci, points=(), xmax: float = 5.0, ymax: float = 5.0,
                    size: int = 480) -> str:
    """Deterministic SVG: solid lines for critical segments, dashed for
    non-critical, labeled dots for the given points."""
    pad = 40.0
    scale_x = (size - 2 * pad) / xmax
    scale_y = (size - 2 * pad) / ymax

    def px(x: float) -> float:
        return pad + x * scale_x

    def py(y: float) -> float:
        return size - pad - y * scale_y

    def fmt(v: float) -> str:
        return f"{v:.2f}"

    rows = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{fmt(px(0))}" y1="{fmt(py(0))}" x2="{fmt(px(xmax))}" '
        f'y2="{fmt(py(0))}" stroke="black" stroke-width="1"/>',
        f'<line x1="{fmt(px(0))}" y1="{fmt(py(0))}" x2="{fmt(px(0))}" '
        f'y2="{fmt(py(ymax))}" stroke="black" stroke-width="1"/>',
    ]
    for rec in loci:
        al, be, ga = (float(rec.form.ca), float(rec.form.cb), float(rec.form.cc))
        pts = []
        # clip the line al*x + ga*y + be = 0 against the viewport box
        for x_edge in (0.0, xmax):
            if ga:
                y = -(al * x_edge + be) / ga
                if 0 <= y <= ymax:
                    pts.append((x_edge, y))
        for y_edge in (0.0, ymax):
            if al:
                x = -(ga * y_edge + be) / al
                if 0 <= x <= xmax:
                    pts.append((x, y_edge))
        pts = sorted(set(pts))
        if len(pts) < 2:
            continue
        (x1, y1), (x2, y2) = pts[0], pts[-1]
        dash = '' if rec.critical else ' stroke-dasharray="6 4"'
        label = f"{rec.d1},{rec.d2}"
        rows.append(
            f'<line x1="{fmt(px(x1))}" y1="{fmt(py(y1))}" x2="{fmt(px(x2))}" '
            f'y2="{fmt(py(y2))}" stroke="{"black" if rec.critical else "gray"}" '
            f'stroke-width="1"{dash}><title>{label} '
            f'[{";".join(rec.chamber)}]</title></line>'
        )
    for label, x, y in points:
        rows.append(
            f'<circle cx="{fmt(px(float(x)))}" cy="{fmt(py(float(y)))}" r="3" '
            f'fill="black"/>'
        )
        rows.append(
            f'<text x="{fmt(px(float(x)) + 5)}" y="{fmt(py(float(y)) - 5)}" '
            f'font-size="12">{label}</text>'
        )
    rows.append("</svg>")
    return "\n".join(rows) + "\n"


def export_arrangement(loci, fmt: str, path, m: int = 0, n: int = 0,
                       points=()) -> None:
    """Write an arrangement in one of svg, csv, json (deterministic)."""
    if fmt == "csv":
        text = loci_to_csv(loci)
    elif fmt == "json":
        text = json.dumps(loci_to_json(loci, m, n), indent=2, sort_keys=True) + "\n"
    elif fmt == "svg":
        text = arrangement_svg(loci, points)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
