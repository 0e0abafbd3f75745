"""Word problem and combinatorics for Coxeter systems of rank <= 3.

Elements are interned: a `CoxeterSystem` builds the Cayley ball up to a
configured radius once, and every element is an integer index into that
ball.  Indices are assigned in (length, ShortLex) order, so sorting ids
*is* sorting elements canonically, and the canonical word of an element
is the ShortLex-least reduced word under the fixed generator order.

The ball is built by breadth-first search.  A candidate x*g at level
l+1 coincides with an earlier candidate x'*g' exactly when the element
has both g and g' as right descents, i.e. it factors as z * w_{gg'}
through the longest element of the finite dihedral in {g, g'}.  That is
detected by walking the alternating descent chain g', g, g', ... of
length m_{gg'}-1 down from x; the walk only visits shorter elements
whose edges are already known, so the construction is exact and never
needs a geometric representation.

Multiplication folds canonical words through the edge tables and fails
loudly (HorizonExceeded) whenever a step leaves the built ball.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass

from .errors import HorizonExceeded, InfiniteParabolic, UnknownGenerator

INFINITY = float("inf")

_UNKNOWN = -1


@dataclass(frozen=True)
class WeightFunction:
    """Positive integer weights, one per generator, in generator order."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not all(isinstance(v, int) and v >= 1 for v in self.values):
            raise ValueError(f"weights must be positive integers: {self.values}")

    def __getitem__(self, gen_index: int) -> int:
        return self.values[gen_index]

    def __len__(self) -> int:
        return len(self.values)


class CoxeterSystem:
    """A weighted-Coxeter-ready Coxeter system of rank <= 3.

    Parameters
    ----------
    generators:
        Generator labels in the fixed ShortLex order, e.g. ``"rst"``.
    bonds:
        Mapping from unordered label pairs to orders m >= 2; use
        :data:`INFINITY` for an absent braid relation.  Missing rank-2
        pairs are not allowed.
    ball_radius_limit:
        Working horizon.  All elements of length <= limit are interned.
    """

    def __init__(self, generators, bonds, ball_radius_limit: int = 16):
        labels = tuple(generators)
        if not 1 <= len(labels) <= 3:
            raise ValueError(f"rank must be 1..3, got {len(labels)}")
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be distinct")
        self.labels = labels
        self.rank = len(labels)
        self.ball_radius_limit = int(ball_radius_limit)

        self._m = [[1] * self.rank for _ in range(self.rank)]
        seen = set()
        for (a, b), m in dict(bonds).items():
            i, j = labels.index(a), labels.index(b)
            if i == j:
                raise ValueError("diagonal bonds are fixed at 1")
            if not (m == INFINITY or (isinstance(m, int) and m >= 2)):
                raise ValueError(f"bond order must be an integer >= 2 or INFINITY: {m}")
            self._m[i][j] = self._m[j][i] = m
            seen.add(frozenset((i, j)))
        for i, j in itertools.combinations(range(self.rank), 2):
            if frozenset((i, j)) not in seen:
                raise ValueError(f"missing bond order for pair {labels[i]}{labels[j]}")

        self._build_ball()

    # ---------------------------------------------------------------- factories

    @classmethod
    def rank3(cls, m_rs, m_st, m_rt=2, ball_radius_limit: int = 16) -> "CoxeterSystem":
        """The rank-3 system on r < s < t with the given bond orders."""
        return cls(
            "rst",
            {("r", "s"): m_rs, ("s", "t"): m_st, ("r", "t"): m_rt},
            ball_radius_limit,
        )

    @classmethod
    def dihedral(cls, m, labels="st", ball_radius_limit: int = 16) -> "CoxeterSystem":
        """The dihedral system I_2(m) on two generators."""
        a, b = labels
        return cls(labels, {(a, b): m}, ball_radius_limit)

    # ---------------------------------------------------------------- construction

    def _build_ball(self) -> None:
        nG = self.rank
        words: list[tuple[int, ...]] = [()]
        length: list[int] = [0]
        right: list[list[int]] = [[_UNKNOWN] * nG]
        rdesc: list[int] = [0]
        parent_elt: list[int] = [_UNKNOWN]  # canonical-prefix chain
        parent_gen: list[int] = [_UNKNOWN]
        level_start = [0, 1]  # level_start[l] = first id of length l

        lo, hi = 0, 1
        for level in range(self.ball_radius_limit):
            pending: dict[tuple[int, frozenset[int]], int] = {}
            for x in range(lo, hi):
                dx = rdesc[x]
                for g in range(nG):
                    if dx >> g & 1:
                        continue
                    keys = []
                    for h in range(nG):
                        if h == g or not dx >> h & 1:
                            continue
                        m = self._m[g][h]
                        if m == INFINITY:
                            continue
                        u, ok = x, True
                        for i in range(m - 1):
                            c = h if i % 2 == 0 else g
                            if rdesc[u] >> c & 1:
                                u = right[u][c]
                            else:
                                ok = False
                                break
                        if ok:
                            keys.append((u, frozenset((g, h))))
                    y = next((pending[k] for k in keys if k in pending), _UNKNOWN)
                    if y == _UNKNOWN:
                        y = len(words)
                        words.append(words[x] + (g,))
                        length.append(level + 1)
                        right.append([_UNKNOWN] * nG)
                        rdesc.append(1 << g | sum(1 << h for _, hs in keys for h in hs - {g}))
                        parent_elt.append(x)
                        parent_gen.append(g)
                        for k in keys:
                            pending[k] = y
                    right[x][g] = y
                    right[y][g] = x
            lo, hi = hi, len(words)
            level_start.append(hi)
            if lo == hi:  # finite group exhausted
                break

        self._words = words
        self._length = length
        self._right = right
        self._rdesc = rdesc
        self._parent_elt = parent_elt
        self._parent_gen = parent_gen
        self._level_start = level_start
        self.size = len(words)

        inverse = [0] * self.size
        for x in range(self.size):
            u = 0
            for g in reversed(words[x]):
                u = right[u][g]
            inverse[x] = u
        self._inverse = inverse
        self._ldesc = [rdesc[inverse[x]] for x in range(self.size)]
        self._left = [
            [
                _UNKNOWN
                if (e := right[inverse[x]][g]) == _UNKNOWN
                else inverse[e]
                for g in range(nG)
            ]
            for x in range(self.size)
        ]

    # ---------------------------------------------------------------- basics

    @property
    def identity(self) -> int:
        return 0

    def is_finite(self) -> bool:
        """True when the whole group was exhausted inside the ball."""
        return self._level_start[-1] == self._level_start[-2]

    def gen_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownGenerator(f"unknown generator {label!r}") from None

    def gen(self, label: str) -> int:
        """Element id of a generator."""
        return self.right_mult(0, self.gen_index(label))

    def bond(self, a: str, b: str):
        return self._m[self.gen_index(a)][self.gen_index(b)]

    def length(self, x: int) -> int:
        return self._length[x]

    def word(self, x: int) -> str:
        return "".join(self.labels[g] for g in self._words[x])

    def word_indices(self, x: int) -> tuple[int, ...]:
        return self._words[x]

    def parent(self, x: int) -> tuple[int, int]:
        """(prefix element, last letter) of the canonical word of x != e."""
        return self._parent_elt[x], self._parent_gen[x]

    def inverse(self, x: int) -> int:
        return self._inverse[x]

    def right_mult(self, x: int, g: int) -> int:
        y = self._right[x][g]
        if y == _UNKNOWN:
            raise HorizonExceeded(
                f"x*g leaves the ball of radius {self.ball_radius_limit}"
            )
        return y

    def left_mult(self, g: int, x: int) -> int:
        y = self._left[x][g]
        if y == _UNKNOWN:
            raise HorizonExceeded(
                f"g*x leaves the ball of radius {self.ball_radius_limit}"
            )
        return y

    def mult(self, x: int, y: int) -> int:
        """Canonical product xy; raises HorizonExceeded off the ball."""
        u = x
        for g in self._words[y]:
            u = self.right_mult(u, g)
        return u

    def normal_form(self, letters: str) -> int:
        """Element of an arbitrary word in the generator labels."""
        u = 0
        for ch in letters:
            u = self.right_mult(u, self.gen_index(ch))
        return u

    def element(self, letters: str) -> int:
        """Alias of :meth:`normal_form` for readability at call sites."""
        return self.normal_form(letters)

    # ---------------------------------------------------------------- descents

    def right_descent_mask(self, x: int) -> int:
        return self._rdesc[x]

    def left_descent_mask(self, x: int) -> int:
        return self._ldesc[x]

    def descents(self, x: int, side: str) -> frozenset[str]:
        mask = self._ldesc[x] if side == "left" else self._rdesc[x]
        return frozenset(self.labels[g] for g in range(self.rank) if mask >> g & 1)

    # ---------------------------------------------------------------- ball and order

    def ball(self, radius: int) -> range:
        """Ids of all elements of length <= radius, in (length, ShortLex) order."""
        if radius > self.ball_radius_limit:
            raise HorizonExceeded(
                f"radius {radius} exceeds limit {self.ball_radius_limit}"
            )
        top = min(radius, len(self._level_start) - 2)
        return range(self._level_start[top + 1])

    def sphere(self, radius: int) -> range:
        """Ids of all elements of length exactly radius."""
        if radius > self.ball_radius_limit:
            raise HorizonExceeded(
                f"radius {radius} exceeds limit {self.ball_radius_limit}"
            )
        if radius > len(self._level_start) - 2:
            return range(0, 0)
        return range(self._level_start[radius], self._level_start[radius + 1])

    def bruhat_leq(self, x: int, w: int) -> bool:
        """Bruhat order test by greedy right-to-left matching on word(w)."""
        v = x
        for g in reversed(self._words[w]):
            if self._rdesc[v] >> g & 1:
                v = self._right[v][g]
        return v == 0

    def bruhat_interval_below(self, w: int) -> list[int]:
        """All z <= w in Bruhat order, ascending."""
        return [z for z in self.ball(self._length[w]) if self.bruhat_leq(z, w)]

    # ---------------------------------------------------------------- reduced factorizations

    def weak_prefix_pairs(self, w: int) -> list[tuple[int, int]]:
        """All (x, v) with w = x * v reduced, as id pairs, x ascending."""
        seen = {0}
        out = []
        stack = [(0, w)]
        while stack:
            x, v = stack.pop()
            out.append((x, v))
            mask = self._ldesc[v]
            for g in range(self.rank):
                if mask >> g & 1:
                    x2 = self._right[x][g]
                    if x2 not in seen:
                        seen.add(x2)
                        stack.append((x2, self._left[v][g]))
        out.sort()
        return out

    def weak_prefixes(self, w: int) -> list[int]:
        """All x with length(x) + length(x^-1 w) = length(w), ascending."""
        return [x for x, _ in self.weak_prefix_pairs(w)]

    def weak_suffixes(self, w: int) -> list[int]:
        """All v with w = u * v reduced, ascending."""
        wi = self._inverse[w]
        return sorted(self._inverse[p] for p in self.weak_prefixes(wi))

    def is_reduced_product(self, *factors: int) -> bool:
        total, u = 0, 0
        for f in factors:
            total += self._length[f]
            u = self.mult(u, f)
        return self._length[u] == total

    def extend_reduced(self, x: int, y: int) -> int | None:
        """x * y when the product is reduced, else None.

        Folds the word of y and aborts at the first shortening step, so
        the walk never climbs past the true product length.
        """
        u = x
        for g in self._words[y]:
            v = self.right_mult(u, g)
            if self._length[v] < self._length[u]:
                return None
            u = v
        return u

    def strip_left_factor(self, d: int, w: int) -> int | None:
        """v with w = d * v reduced, else None.  Only walks downward."""
        v = w
        for g in self._words[d]:
            if not self._ldesc[v] >> g & 1:
                return None
            v = self._left[v][g]
        return v

    def strip_right_factor(self, w: int, d: int) -> int | None:
        """u with w = u * d reduced, else None.  Only walks downward."""
        u = w
        for g in reversed(self._words[d]):
            if not self._rdesc[u] >> g & 1:
                return None
            u = self._right[u][g]
        return u

    def left_factor_quotient(self, d: int, w: int) -> int | None:
        """v with w = d * v reduced, or None when d is not a weak prefix."""
        return self.strip_left_factor(d, w)

    def contains_factor(self, w: int, d: int) -> bool:
        """True when w = x * d * y reduced for some x, y."""
        ld = self._length[d]
        for x, v in self.weak_prefix_pairs(w):
            if self._length[v] >= ld and self.strip_left_factor(d, v) is not None:
                return True
        return False

    # ---------------------------------------------------------------- parabolic data

    def parabolic_order(self, J: tuple[str, ...]):
        """Order of W_J, or INFINITY."""
        idx = sorted(self.gen_index(a) for a in J)
        if len(idx) == 0:
            return 1
        if len(idx) == 1:
            return 2
        if len(idx) == 2:
            m = self._m[idx[0]][idx[1]]
            return INFINITY if m == INFINITY else 2 * m
        ms = [
            self._m[idx[0]][idx[1]],
            self._m[idx[0]][idx[2]],
            self._m[idx[1]][idx[2]],
        ]
        if any(m == INFINITY for m in ms):
            return INFINITY
        excess = sum(1 / m for m in ms)
        if excess <= 1:
            return INFINITY
        # spherical rank 3: enumerate W_J inside the ball
        members = self._parabolic_members(idx)
        if members is None:
            raise HorizonExceeded("finite parabolic does not fit in the ball")
        return len(members)

    def _parabolic_members(self, idx: list[int]) -> list[int] | None:
        members = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in idx:
                    y = self._right[x][g]
                    if y == _UNKNOWN:
                        return None
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(members)

    def longest_element(self, J) -> int:
        """Longest element of W_J for a finite parabolic subgroup."""
        J = tuple(J)
        idx = sorted(self.gen_index(a) for a in J)
        if len(idx) == 0:
            return 0
        if len(idx) == 1:
            return self.right_mult(0, idx[0])
        if len(idx) == 2:
            m = self._m[idx[0]][idx[1]]
            if m == INFINITY:
                raise InfiniteParabolic(f"W_{{{''.join(J)}}} is infinite")
            u = 0
            for k in range(m):
                u = self.right_mult(u, idx[k % 2])
            return u
        if self.parabolic_order(J) == INFINITY:
            raise InfiniteParabolic(f"W_{{{''.join(J)}}} is infinite")
        members = self._parabolic_members(idx)
        return max(members, key=lambda x: self._length[x])

    # ---------------------------------------------------------------- weights

    def validate_weights(self, weights: WeightFunction) -> None:
        """Reject weight tuples that are not additive on the system."""
        if len(weights) != self.rank:
            raise ValueError(f"expected {self.rank} weights, got {len(weights)}")
        for i, j in itertools.combinations(range(self.rank), 2):
            m = self._m[i][j]
            if m != INFINITY and m % 2 == 1 and weights[i] != weights[j]:
                raise ValueError(
                    f"odd bond m_{self.labels[i]}{self.labels[j]}={m} forces equal "
                    f"weights, got {weights[i]} != {weights[j]}"
                )

    def weight_of(self, weights: WeightFunction, x: int) -> int:
        """Sum of generator weights over any reduced word of x."""
        return sum(weights[g] for g in self._words[x])

    def __repr__(self) -> str:
        bonds = ",".join(
            f"m_{self.labels[i]}{self.labels[j]}={self._m[i][j]}"
            for i, j in itertools.combinations(range(self.rank), 2)
        )
        return f"CoxeterSystem({''.join(self.labels)}; {bonds}; limit={self.ball_radius_limit})"
