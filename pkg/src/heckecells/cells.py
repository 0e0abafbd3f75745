"""Distinguished elements, predicted a-values, and cell machinery.

For a dimension-2 weighted system the candidate distinguished set is

    D = {w_J : J with W_J finite}  u  {g2 * w_{g1 g2} : m finite >= 4,
                                       L(g1) > L(g2)}

with predicted a-values

    a'(w_J)       = L(w_J),
    a'(g2 * w_J)  = L(g1) + (m/2 - 1) (L(g1) - L(g2)).

Every element of W embeds some d in D as a reduced factor (e always
does), and the predicted a-value of w is the largest a'(d) over embedded
factors d; the level sets of that prediction are the Omega_N sets.  On
the supported hyperbolic rank-3 families (and on all rank <= 2 systems)
the prediction is the actual a-function, W_N = Omega_N, and

    Omega_N = disjoint union over d in D_N, b in B_d of  b d U_d

is the right-cell partition.  U_d collects the y with d*y reduced still
at level N; B_d collects the x in U_d^-1 all of whose proper splittings
x*d = w*v drop below level N.

Factor containment is monotone: if v is a weak prefix (or suffix) of w,
every reduced factor of v is one of w, so predicted a-values only grow
along weak factors.  The singleton-cell certificate below rests on that
monotonicity: if every one-letter reduced extension of d already sits
above level a'(d), then U_d = B_d = {e} globally, and {d} is a whole
two-sided cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import INFINITY, CoxeterSystem, WeightFunction
from .errors import (
    NonUniqueDecomposition,
    NotApplicableSystem,
    NotDimensionTwo,
    NotInD,
    UnequalAValues,
)

# Symbolic names for distinguished elements.  Pair symbols use the two
# generator labels in system order, e.g. "w_rs", "sw_rs" (= s * w_rs,
# exists when L(r) > L(s)), "rw_rs" (= r * w_rs, exists when L(s) > L(r)).


@dataclass(frozen=True)
class Distinguished:
    symbol: str
    element: int
    aprime: int


class DSet:
    """The candidate distinguished set of a dimension-2 weighted system."""

    def __init__(self, system: CoxeterSystem, weights: WeightFunction):
        system.validate_weights(weights)
        if system.rank == 3 and system.is_finite():
            raise NotDimensionTwo(
                "the whole rank-3 group is finite; no dimension-2 structure"
            )
        self.system = system
        self.weights = weights
        self.entries: list[Distinguished] = []
        self._a_cache: dict[int, int] = {}
        self._build()

    def _build(self) -> None:
        sys, L = self.system, self.weights
        self.entries.append(Distinguished("e", 0, 0))
        for g in range(sys.rank):
            self.entries.append(
                Distinguished(sys.labels[g], sys.right_mult(0, g), L[g])
            )
        for i in range(sys.rank):
            for j in range(i + 1, sys.rank):
                m = sys._m[i][j]
                if m == INFINITY:
                    continue
                pair = sys.labels[i] + sys.labels[j]
                w_j = sys.longest_element(pair)
                self.entries.append(
                    Distinguished(f"w_{pair}", w_j, sys.weight_of(L, w_j))
                )
                if m >= 4 and L[i] != L[j]:
                    hi, lo = (i, j) if L[i] > L[j] else (j, i)
                    d = sys.left_mult(lo, w_j)
                    ap = L[hi] + (m // 2 - 1) * (L[hi] - L[lo])
                    self.entries.append(
                        Distinguished(f"{sys.labels[lo]}w_{pair}", d, ap)
                    )
        self.entries.sort(key=lambda d: (d.aprime, d.element))
        self.by_element = {d.element: d for d in self.entries}
        self.by_symbol = {d.symbol: d for d in self.entries}

    # ---------------------------------------------------------------- levels

    def levels(self) -> dict[int, list[Distinguished]]:
        """a' value -> distinguished elements at that level."""
        out: dict[int, list[Distinguished]] = {}
        for d in self.entries:
            out.setdefault(d.aprime, []).append(d)
        return out

    def level_of(self, d: int) -> int:
        entry = self.by_element.get(d)
        if entry is None:
            raise NotInD(f"{self.system.word(d)!r} is not distinguished")
        return entry.aprime

    # ---------------------------------------------------------------- predicted a

    def _require_applicable(self) -> None:
        if not is_paper_family(self.system):
            raise NotApplicableSystem(
                "predicted a-values are only available for rank <= 2 systems "
                "and the supported hyperbolic rank-3 families"
            )

    def a_pred(self, w: int) -> int:
        """Predicted a-value: max a'(d) over reduced factors d of w."""
        self._require_applicable()
        cached = self._a_cache.get(w)
        if cached is not None:
            return cached
        sys = self.system
        best = 0
        ld = [(d.element, d.aprime, sys.length(d.element))
              for d in self.entries if d.aprime > 0]
        for x, v in sys.weak_prefix_pairs(w):
            lv = sys.length(v)
            for elt, ap, le in ld:
                if ap > best and le <= lv and sys.strip_left_factor(elt, v) is not None:
                    best = ap
        self._a_cache[w] = best
        return best

    def omega_level(self, w: int) -> int:
        return self.a_pred(w)

    # ---------------------------------------------------------------- U_d and B_d

    def u_set(self, d: int, radius: int) -> list[int]:
        """y in ball(radius) with d*y reduced and still at level a'(d)."""
        N = self.level_of(d)
        self._require_applicable()
        return [y for y in self.system.ball(radius) if self.in_u_set(d, y)]

    def in_u_set(self, d: int, y: int) -> bool:
        N = self.level_of(d)
        dy = self.system.extend_reduced(d, y)
        return dy is not None and self.a_pred(dy) == N

    def in_b_set(self, d: int, x: int) -> bool:
        """x in U_d^-1 whose proper splittings of x*d all drop below N."""
        N = self.level_of(d)
        sys = self.system
        if not self.in_u_set(d, sys.inverse(x)):
            return False
        xd = sys.extend_reduced(x, d)
        for v in sys.weak_suffixes(xd):
            if v == 0:
                continue
            w = sys.strip_right_factor(xd, v)
            if self.a_pred(w) >= N:
                return False
        return True

    def b_set(self, d: int, radius: int) -> list[int]:
        return [x for x in self.system.ball(radius) if self.in_b_set(d, x)]

    def singleton_cell_certificate(self, d: int) -> bool:
        """True when U_d = B_d = {e} globally.

        Checked exactly: predicted a-values are monotone under weak
        factors, so it is enough that every one-letter reduced extension
        d*g already exceeds level a'(d).
        """
        N = self.level_of(d)
        sys = self.system
        for g in range(sys.rank):
            y = sys.right_mult(d, g)
            if sys.length(y) > sys.length(d) and self.a_pred(y) <= N:
                return False
        return True

    # ---------------------------------------------------------------- decomposition

    def decompose(self, w: int) -> tuple[int, int, int]:
        """The unique (b, d, y) with w = b*d*y reduced, d in D_N, b in B_d,
        y in U_d, where N is the predicted a-value of w."""
        self._require_applicable()
        sys = self.system
        N = self.a_pred(w)
        level = [d for d in self.entries if d.aprime == N]
        found = []
        for b, v in sys.weak_prefix_pairs(w):
            for entry in level:
                y = sys.left_factor_quotient(entry.element, v)
                if y is None:
                    continue
                if self.in_u_set(entry.element, y) and self.in_b_set(entry.element, b):
                    found.append((b, entry.element, y))
        if len(found) != 1:
            raise NonUniqueDecomposition(
                f"{len(found)} decompositions for {sys.word(w)!r} at level {N}: "
                f"{[(sys.word(b), sys.word(d), sys.word(y)) for b, d, y in found]}"
            )
        return found[0]

    def length_additivity_check(self, d: int, radius: int) -> dict:
        """Verify l(b d y) = l(b) + l(d) + l(y) over B_d x U_d in the ball."""
        sys = self.system
        bs = self.b_set(d, radius)
        us = self.u_set(d, radius)
        checked = 0
        for b in bs:
            bd = sys.mult(b, d)
            for y in us:
                w = sys.mult(bd, y)
                checked += 1
                if sys.length(w) != sys.length(b) + sys.length(d) + sys.length(y):
                    return {
                        "passed": False,
                        "checked": checked,
                        "counterexample": {"b": sys.word(b), "y": sys.word(y)},
                    }
        return {"passed": True, "checked": checked, "counterexample": None}

    # ---------------------------------------------------------------- connectivity

    def connect_witness(self, d1: int, d2: int, radius: int) -> int | None:
        """Shortest w at level a'(d1) with w = d1*x = y*d2 reduced, if any.

        Such a witness puts d1 and d2 in one two-sided cell.
        """
        N = self.level_of(d1)
        if self.level_of(d2) != N:
            raise UnequalAValues("witness search needs a'(d1) = a'(d2)")
        sys = self.system
        l1, l2 = sys.length(d1), sys.length(d2)
        for w in sys.ball(radius):
            if sys.length(w) < max(l1, l2):
                continue
            if sys.strip_left_factor(d1, w) is None:
                continue
            if sys.strip_right_factor(w, d2) is None:
                continue
            if self.a_pred(w) == N:
                return w
        return None


# ---------------------------------------------------------------------- system family


def is_paper_family(system: CoxeterSystem) -> bool:
    """Rank <= 2, or one of the supported hyperbolic rank-3 families.

    Rank 3 requires one commuting pair and 1/m1 + 1/m2 < 1/2 for the two
    remaining bonds, with at most one of them infinite.
    """
    if system.rank <= 2:
        return True
    ms = [system._m[0][1], system._m[0][2], system._m[1][2]]
    if ms.count(2) != 1:
        return False
    rest = sorted((m for m in ms if m != 2), key=lambda m: (m == INFINITY, m))
    m1, m2 = rest
    if m2 == INFINITY:
        if m1 == INFINITY:
            return False
        return m1 >= 3
    return m1 * m2 > 2 * (m1 + m2) > 0  # 1/m1 + 1/m2 < 1/2


def two_sided_classifier(dset: DSet, d1: int, d2: int) -> str:
    """'same' or 'different': do d1, d2 (with equal a') share a two-sided cell?

    Implements the complete rank-3 case list (with its r <-> t mirror):
    two equal-level distinguished elements lie in different cells exactly
    for {w_rs, t}; {r, t} with b > a; {sw_rs, t}; {sw_rs, tw_st} or
    {rw_rs, sw_st} with a + c > N; {sw_rs, sw_st} with a + c > N;
    {rw_rs, rt} when m_st = 3 (and mirrors).
    """
    sys = dset.system
    if sys.rank != 3 or not is_paper_family(sys):
        raise NotApplicableSystem("classification needs a supported rank-3 system")
    e1 = dset.by_element.get(d1)
    e2 = dset.by_element.get(d2)
    if e1 is None or e2 is None:
        raise NotInD("both elements must be distinguished")
    if e1.aprime != e2.aprime:
        raise UnequalAValues(f"a' values differ: {e1.aprime} != {e2.aprime}")
    N = e1.aprime
    return classify_symbol_pair(sys, dset.weights, e1.symbol, e2.symbol, N)


def _commuting_pair(system: CoxeterSystem) -> str:
    for i in range(system.rank):
        for j in range(i + 1, system.rank):
            if system._m[i][j] == 2:
                return system.labels[i] + system.labels[j]
    raise NotApplicableSystem("no commuting generator pair")


def classify_symbol_pair(
    system: CoxeterSystem,
    weights: WeightFunction,
    sym1: str,
    sym2: str,
    N: int,
) -> str:
    """Symbol-level version of the two-sided classification at level N."""
    rt = _commuting_pair(system)
    r, t = rt[0], rt[1]
    (s,) = set(system.labels) - set(rt)

    def wof(g: str) -> int:
        return weights[system.gen_index(g)]

    def kind(sym: str):
        # returns ("gen", g) / ("pair", {g,h}) / ("short", g, {g,h}) / other
        if sym in system.labels:
            return ("gen", sym)
        if sym.startswith("w_"):
            return ("pair", frozenset(sym[2:]))
        if len(sym) >= 4 and sym[1] == "w":
            return ("short", sym[0], frozenset(sym[3:]))
        return (sym,)

    k1, k2 = kind(sym1), kind(sym2)
    pair = {sym1, sym2}

    for a, c in ((r, t), (t, r)):
        sbond = frozenset((s, a))  # the {a, s} bond
        obond = frozenset((s, c))
        # (1) {w_as, c}
        if pair == {f"w_{''.join(sorted(sbond, key=system.labels.index))}", c}:
            return "different"
        # (3) {s w_as, c}  (the short element exists only when L(a) > L(s))
        if k1 == ("short", s, sbond) and k2 == ("gen", c):
            return "different"
        if k2 == ("short", s, sbond) and k1 == ("gen", c):
            return "different"
        # (6) {a w_as, a c} with m_sc = 3
        short_a = ("short", a, sbond)
        if (k1 == short_a and sym2 == f"w_{rt}") or (k2 == short_a and sym1 == f"w_{rt}"):
            if system.bond(s, c) == 3:
                return "different"
        # (4) {s w_as, c w_cs} with a+c > N  (both short elements point "down")
        if {k1, k2} == {("short", s, sbond), ("short", c, obond)}:
            if wof(a) + wof(c) > N:
                return "different"
    # (2) {r, t} with b > a (= c)
    if pair == {r, t} and wof(s) > wof(r):
        return "different"
    # (5) {s w_rs, s w_st} with a+c > N
    if {k1, k2} == {
        ("short", s, frozenset((s, r))),
        ("short", s, frozenset((s, t))),
    } and wof(r) + wof(t) > N:
        return "different"
    return "same"


# ---------------------------------------------------------------------- cell graphs


@dataclass
class CellGraph:
    flavor: str
    vertices: list[int]
    edges: dict[int, set[int]]  # w -> one-step predecessors under <=_flavor
    sccs: list[list[int]] = field(default_factory=list)
    scc_index: dict[int, int] = field(default_factory=dict)

    def mutually_reachable(self, x: int, y: int) -> bool:
        return self.scc_index.get(x) == self.scc_index.get(y)

    def reaches(self, w: int, y: int) -> bool:
        """True when y <= w in the one-step preorder (within the graph)."""
        if w == y:
            return True
        seen = {w}
        stack = [w]
        while stack:
            u = stack.pop()
            for v in self.edges.get(u, ()):
                if v == y:
                    return True
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False


def cell_graph(algebra, radius: int, flavor: str) -> CellGraph:
    """Elementary-edge graph of the KL preorder restricted to a ball.

    An edge w -> y (y one step below w) is recorded when y has nonzero
    coordinate in some C_g C_w (left), C_w C_g (right), or either
    (twosided).  SCCs certify equal cells; absence of paths inside a
    ball proves nothing.
    """
    if flavor not in ("left", "right", "twosided"):
        raise ValueError(f"unknown flavor {flavor!r}")
    sys = algebra.system
    vertices = list(sys.ball(radius))
    inball = set(vertices)
    edges: dict[int, set[int]] = {w: set() for w in vertices}
    gens = [sys.right_mult(0, g) for g in range(sys.rank)]
    for w in vertices:
        targets = set()
        if flavor in ("left", "twosided"):
            for g in gens:
                targets.update(algebra.c_mult(g, w))
        if flavor in ("right", "twosided"):
            for g in gens:
                targets.update(algebra.c_mult(w, g))
        edges[w] = {y for y in targets if y != w and y in inball}
    graph = CellGraph(flavor, vertices, edges)
    graph.sccs = _sccs(vertices, edges)
    graph.scc_index = {v: i for i, scc in enumerate(graph.sccs) for v in scc}
    return graph


def _sccs(vertices: list[int], edges: dict[int, set[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components sorted deterministically."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    onstack: set[int] = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = [0]

    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(sorted(edges.get(root, ()))))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        onstack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(sorted(edges.get(w, ())))))
                    advanced = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index[w])
            if not advanced:
                work.pop()
                if work:
                    pv = work[-1][0]
                    low[pv] = min(low[pv], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        onstack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    out.append(sorted(comp))
    out.sort(key=lambda comp: comp[0])
    return out


def right_cell_comparison(algebra, dset: DSet, radius: int) -> dict:
    """Compare SCCs of the right graph with the predicted partition b d U_d.

    For each predicted right cell met by the ball, reports whether all
    its ball elements are mutually reachable (certified) and whether any
    SCC mixes two predicted cells (which would refute the prediction).
    """
    sys = algebra.system
    graph = cell_graph(algebra, radius, "right")
    predicted: dict[tuple[int, int], list[int]] = {}
    for w in sys.ball(radius):
        b, d, _y = dset.decompose(w)
        predicted.setdefault((b, d), []).append(w)
    certified, incomplete = [], []
    for key, members in sorted(predicted.items()):
        classes = {graph.scc_index[w] for w in members}
        cell = {"b": sys.word(key[0]), "d": sys.word(key[1]), "size": len(members)}
        (certified if len(classes) == 1 else incomplete).append(cell)
    mixed = []
    for scc in graph.sccs:
        keys = {dset.decompose(w)[:2] for w in scc}
        if len(keys) > 1:
            mixed.append([sys.word(w) for w in scc])
    return {
        "radius": radius,
        "predicted_cells": len(predicted),
        "certified": certified,
        "incomplete": incomplete,
        "mixed_sccs": mixed,
    }
