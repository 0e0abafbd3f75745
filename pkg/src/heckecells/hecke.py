"""T-basis arithmetic, bar involution, and the Kazhdan-Lusztig basis.

Conventions (one variable q, weight function L):

* quadratic relation  T_s^2 = 1 + xi_s T_s  with  xi_s = q^L(s) - q^-L(s);
* bar involution      bar(q) = q^-1,  bar(T_w) = T_{w^-1}^-1;
* KL basis            C_w = sum_{y <= w} p_{y,w} T_y, bar-invariant, with
                      p_{w,w} = 1 and deg p_{y,w} < 0 for y < w.

The bar expansion of T_w in the T-basis (its coordinates are called
r_{y,w} here; they are artifact-internal) is unitriangular with support
exactly the Bruhat interval [e, w], which this module also uses as the
interval oracle.  A KL column p_{.,w} is solved by descending induction:

    p_{y,w} = negative_part( sum_{y < z <= w} r_{y,z} * bar(p_{z,w}) )

and the pre-truncation right side must be anti-invariant under bar;
InconsistentBar is raised otherwise.  The solve pushes contributions
downward from nonzero p's only, so sparse columns are cheap.

Hot loops work on raw {exponent: coefficient} dicts (see laurent raw
kernels); LaurentPoly/HeckeElt objects appear only at the API surface.
Everything is memoized per algebra instance, and a solved KL table can
be persisted to a JSON-lines cache file keyed by a system+weights
fingerprint.
"""

from __future__ import annotations

import hashlib
import heapq
import json

from .coxeter import INFINITY, CoxeterSystem, WeightFunction
from .errors import FingerprintMismatch, InconsistentBar
from .laurent import (
    ONE,
    LaurentPoly,
    add_raw,
    addmul_raw,
    bar_raw,
    mul_raw,
    neg_part_raw,
    submul_raw,
    xi,
)

KL_CACHE_FORMAT = "heckecells-kl-v1"


class HeckeElt:
    """A finite A-linear combination of T-basis elements.

    coords maps element ids to nonzero LaurentPoly coefficients.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: dict[int, LaurentPoly] | None = None):
        self.coords = coords or {}

    @classmethod
    def basis(cls, w: int) -> "HeckeElt":
        return cls({w: ONE})

    def get(self, w: int) -> LaurentPoly:
        return self.coords.get(w, LaurentPoly())

    def support(self) -> list[int]:
        return sorted(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    @property
    def degree(self):
        """Max coefficient degree over the support (NEG_INF for 0)."""
        return max((p.degree for p in self.coords.values()), default=float("-inf"))

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        out = dict(self.coords)
        for w, p in other.coords.items():
            q = out.get(w)
            v = p if q is None else q + p
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return HeckeElt(out)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        out = dict(self.coords)
        for w, p in other.coords.items():
            q = out.get(w)
            v = -p if q is None else q - p
            if v:
                out[w] = v
            elif w in out:
                del out[w]
        return HeckeElt(out)

    def scaled(self, p: LaurentPoly) -> "HeckeElt":
        if not p:
            return HeckeElt()
        return HeckeElt({w: c * p for w, c in self.coords.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElt) and self.coords == other.coords

    def render(self, system: CoxeterSystem) -> str:
        if not self.coords:
            return "0"
        bits = []
        for w in sorted(self.coords):
            word = system.word(w) or "e"
            bits.append(f"({self.coords[w]})*T[{word}]")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"HeckeElt({self.coords!r})"


def _wrap(raw: dict[int, dict]) -> HeckeElt:
    return HeckeElt({w: LaurentPoly(p) for w, p in raw.items() if p})


def _unwrap(h: HeckeElt) -> dict[int, dict]:
    return {w: p.terms for w, p in h.coords.items()}


def _is_anti_invariant(a: dict) -> bool:
    return all(a.get(-e, 0) == -c for e, c in a.items())


class HeckeAlgebra:
    """Hecke algebra of a weighted Coxeter system, with KL machinery."""

    def __init__(self, system: CoxeterSystem, weights: WeightFunction):
        system.validate_weights(weights)
        self.system = system
        self.weights = weights
        self.xi = [xi(weights[g]) for g in range(system.rank)]
        self._xi_raw = [p.terms for p in self.xi]
        self._bar_cache: dict[int, dict[int, dict]] = {0: {0: {0: 1}}}
        self._kl_cols: dict[int, dict[int, dict]] = {}
        self._cb_rows: dict[int, list[tuple[int, dict]]] = {}
        self._c_cache: dict[int, HeckeElt] = {}
        self.kl_columns_solved = 0
        self.kl_columns_loaded = 0

    # ---------------------------------------------------------------- identity data

    @property
    def fingerprint(self) -> str:
        sys = self.system
        blob = json.dumps(
            {
                "generators": list(sys.labels),
                "bonds": [
                    [sys.labels[i], sys.labels[j],
                     "inf" if sys._m[i][j] == INFINITY else sys._m[i][j]]
                    for i in range(sys.rank)
                    for j in range(i + 1, sys.rank)
                ],
                "weights": list(self.weights.values),
            },
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def weight_of(self, x: int) -> int:
        return self.system.weight_of(self.weights, x)

    # ---------------------------------------------------------------- raw kernels

    def _gen_right_raw(self, vec: dict[int, dict], g: int) -> dict[int, dict]:
        """vec * T_g; returns fresh dicts, inputs untouched."""
        sys = self.system
        length = sys._length
        xg = self._xi_raw[g]
        out: dict[int, dict] = {}
        for x, p in vec.items():
            y = sys.right_mult(x, g)
            tgt = out.get(y)
            if tgt is None:
                out[y] = dict(p)
            else:
                add_raw(tgt, p)
            if length[y] < length[x]:
                tgt = out.get(x)
                if tgt is None:
                    tgt = out[x] = {}
                addmul_raw(tgt, p, xg)
        return {w: p for w, p in out.items() if p}

    def _gen_left_raw(self, g: int, vec: dict[int, dict]) -> dict[int, dict]:
        sys = self.system
        length = sys._length
        xg = self._xi_raw[g]
        out: dict[int, dict] = {}
        for x, p in vec.items():
            y = sys.left_mult(g, x)
            tgt = out.get(y)
            if tgt is None:
                out[y] = dict(p)
            else:
                add_raw(tgt, p)
            if length[y] < length[x]:
                tgt = out.get(x)
                if tgt is None:
                    tgt = out[x] = {}
                addmul_raw(tgt, p, xg)
        return {w: p for w, p in out.items() if p}

    def _t_mult_raw(self, raw1: dict[int, dict], raw2: dict[int, dict]) -> dict[int, dict]:
        sys = self.system
        memo: dict[int, dict[int, dict]] = {0: raw1}
        out: dict[int, dict] = {}

        def prefix_vec(w: int) -> dict[int, dict]:
            chain = []
            u = w
            while u not in memo:
                chain.append(u)
                u = sys._parent_elt[u]
            vec = memo[u]
            for v in reversed(chain):
                vec = self._gen_right_raw(vec, sys._parent_gen[v])
                memo[v] = vec
            return vec

        for w2 in sorted(raw2):
            p2 = raw2[w2]
            for x, p in prefix_vec(w2).items():
                tgt = out.get(x)
                if tgt is None:
                    tgt = out[x] = {}
                addmul_raw(tgt, p, p2)
        return {w: p for w, p in out.items() if p}

    # ---------------------------------------------------------------- T-basis products

    def t(self, w: int) -> HeckeElt:
        return HeckeElt.basis(w)

    def t_mult(self, h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
        """Product in T-coordinates.

        Right factors are folded letter by letter along canonical words;
        the partial products h1 * T_prefix are memoized per call, so
        supports sharing prefixes (every Bruhat interval does) are cheap.
        """
        return _wrap(self._t_mult_raw(_unwrap(h1), _unwrap(h2)))

    def t_mult_many(self, *factors: HeckeElt) -> HeckeElt:
        out = factors[0]
        for f in factors[1:]:
            out = self.t_mult(out, f)
        return out

    def f_const(self, x: int, y: int, z: int) -> LaurentPoly:
        """Structure constant of T_x T_y at T_z."""
        return self.t_mult(HeckeElt.basis(x), HeckeElt.basis(y)).get(z)

    # ---------------------------------------------------------------- bar involution

    def _bar_raw(self, w: int) -> dict[int, dict]:
        cached = self._bar_cache.get(w)
        if cached is not None:
            return cached
        sys = self.system
        chain = []
        u = w
        while u not in self._bar_cache:
            chain.append(u)
            u = sys._parent_elt[u]
        vec = self._bar_cache[u]
        for v in reversed(chain):
            g = sys._parent_gen[v]
            # multiply by bar(T_g) = T_g^-1 = T_g - xi_g
            vec2 = self._gen_right_raw(vec, g)
            xg = self._xi_raw[g]
            for x, p in vec.items():
                tgt = vec2.get(x)
                if tgt is None:
                    tgt = vec2[x] = {}
                submul_raw(tgt, p, xg)
            vec2 = {x: p for x, p in vec2.items() if p}
            self._bar_cache[v] = vec2
            vec = vec2
        return vec

    def bar_coords(self, w: int) -> dict[int, LaurentPoly]:
        """T-coordinates of bar(T_w); support is the Bruhat interval [e, w]."""
        return {x: LaurentPoly(dict(p)) for x, p in self._bar_raw(w).items()}

    def bar_expand(self, w: int) -> HeckeElt:
        return HeckeElt(self.bar_coords(w))

    def bar(self, h: HeckeElt) -> HeckeElt:
        """Full bar involution of an element given in T-coordinates."""
        out: dict[int, dict] = {}
        for w, p in h.coords.items():
            pb = bar_raw(p.terms)
            for x, r in self._bar_raw(w).items():
                tgt = out.get(x)
                if tgt is None:
                    tgt = out[x] = {}
                addmul_raw(tgt, pb, r)
        return _wrap(out)

    def interval_below(self, w: int) -> list[int]:
        """{z : z <= w} ascending, read off the bar expansion support."""
        return sorted(self._bar_raw(w))

    # ---------------------------------------------------------------- KL basis

    def _solve_column(self, w: int) -> dict[int, dict]:
        col = self._kl_cols.get(w)
        if col is not None:
            return col
        interval = self.interval_below(w)
        bar_rows = {z: self._bar_raw(z) for z in interval}
        col = {w: {0: 1}}
        rhs: dict[int, dict] = {}
        for z in reversed(interval):
            if z == w:
                p = {0: 1}
            else:
                acc = rhs.pop(z, {})
                if not _is_anti_invariant(acc):
                    raise InconsistentBar(
                        f"bar anti-invariance failed at (y={self.system.word(z)!r}, "
                        f"w={self.system.word(w)!r})"
                    )
                p = neg_part_raw(acc)
                if not p:
                    continue
                col[z] = p
            # push r_{u,z} * bar(p) down to every u < z
            pb = bar_raw(p)
            for u, r in bar_rows[z].items():
                if u == z:
                    continue
                tgt = rhs.get(u)
                if tgt is None:
                    tgt = rhs[u] = {}
                addmul_raw(tgt, r, pb)
        self._kl_cols[w] = col
        self._cb_rows[w] = [(u, p) for u, p in col.items() if u != w]
        self.kl_columns_solved += 1
        return col

    def kl_poly(self, y: int, w: int) -> LaurentPoly:
        """p_{y,w}; zero unless y <= w in Bruhat order."""
        if y == w:
            return ONE
        if not self.system.bruhat_leq(y, w):
            return LaurentPoly()
        p = self._solve_column(w).get(y)
        return LaurentPoly(dict(p)) if p else LaurentPoly()

    def c_basis(self, w: int) -> HeckeElt:
        c = self._c_cache.get(w)
        if c is None:
            col = self._solve_column(w)
            c = HeckeElt({y: LaurentPoly(dict(p)) for y, p in col.items()})
            self._c_cache[w] = c
        return c

    def _rows_below(self, z: int) -> list[tuple[int, dict]]:
        rows = self._cb_rows.get(z)
        if rows is None:
            self._solve_column(z)
            rows = self._cb_rows[z]
        return rows

    def _to_c_raw(self, coords: dict[int, dict]) -> dict[int, dict]:
        """C-coordinates by peeling maximal support; consumes `coords`.

        Row subtractions happen only at support elements whose final
        coordinate is nonzero, so sparse answers are cheap even when the
        intermediate T-support is a whole Bruhat interval.
        """
        heap = [-z for z in coords]
        heapq.heapify(heap)
        done = set()
        out: dict[int, dict] = {}
        while heap:
            z = -heapq.heappop(heap)
            if z in done:
                continue
            done.add(z)
            p = coords.get(z)
            if not p:
                continue
            out[z] = p
            for u, pu in self._rows_below(z):
                tgt = coords.get(u)
                if tgt is None:
                    tgt = coords[u] = {}
                    if u not in done:
                        heapq.heappush(heap, -u)
                submul_raw(tgt, p, pu)
        return out

    def to_c_coords(self, h: HeckeElt) -> dict[int, LaurentPoly]:
        """Unique C-basis coordinates of h (round trip with c_basis)."""
        raw = self._to_c_raw({w: dict(p.terms) for w, p in h.coords.items()})
        return {w: LaurentPoly(p) for w, p in raw.items()}

    def from_c_coords(self, cc: dict[int, LaurentPoly]) -> HeckeElt:
        out: dict[int, dict] = {}
        for z, p in cc.items():
            for y, pz in self._solve_column(z).items():
                tgt = out.get(y)
                if tgt is None:
                    tgt = out[y] = {}
                addmul_raw(tgt, p.terms, pz)
        return _wrap(out)

    def c_mult(self, x: int, y: int) -> dict[int, LaurentPoly]:
        """C-coordinates of C_x C_y (the h_{x,y,.} row)."""
        raw = self._t_mult_raw(self._solve_column(x), self._solve_column(y))
        raw = self._to_c_raw(raw)
        return {w: LaurentPoly(p) for w, p in raw.items()}

    def h_const(self, x: int, y: int, z: int) -> LaurentPoly:
        return self.c_mult(x, y).get(z, LaurentPoly())

    # ---------------------------------------------------------------- KL cache file

    def save_kl_cache(self, path) -> int:
        """Write all solved KL columns as JSON lines; returns entry count."""
        sys = self.system
        n = 0
        with open(path, "w", encoding="utf-8") as fh:
            header = {
                "format": KL_CACHE_FORMAT,
                "fingerprint": self.fingerprint,
                "generators": "".join(sys.labels),
                "weights": list(self.weights.values),
            }
            fh.write(json.dumps(header, sort_keys=True) + "\n")
            for w in sorted(self._kl_cols):
                col = self._kl_cols[w]
                for y in sorted(col):
                    rec = {
                        "y": sys.word(y),
                        "w": sys.word(w),
                        "p": LaurentPoly(col[y]).to_pairs(),
                    }
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")
                    n += 1
        return n

    def load_kl_cache(self, path) -> int:
        """Load a cache written by save_kl_cache; returns entry count.

        Raises FingerprintMismatch when the file belongs to a different
        system or weights, ValueError on a corrupted file.
        """
        sys = self.system
        cols: dict[int, dict[int, dict]] = {}
        with open(path, "r", encoding="utf-8") as fh:
            try:
                header = json.loads(fh.readline())
            except json.JSONDecodeError as exc:
                raise ValueError(f"corrupted KL cache header: {exc}") from exc
            if header.get("format") != KL_CACHE_FORMAT:
                raise ValueError("not a KL cache file")
            if header.get("fingerprint") != self.fingerprint:
                raise FingerprintMismatch(
                    f"cache fingerprint {header.get('fingerprint')} != {self.fingerprint}"
                )
            for line in fh:
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    y = sys.element(rec["y"])
                    w = sys.element(rec["w"])
                    p = LaurentPoly.from_pairs(rec["p"])
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise ValueError(f"corrupted KL cache line: {exc}") from exc
                if p:
                    cols.setdefault(w, {})[y] = p.terms
                else:
                    cols.setdefault(w, {})
        n = 0
        for w, col in cols.items():
            if w not in self._kl_cols:
                col[w] = {0: 1}
                self._kl_cols[w] = col
                self._cb_rows[w] = [(u, p) for u, p in col.items() if u != w]
                self.kl_columns_loaded += 1
                n += len(col)
        return n
