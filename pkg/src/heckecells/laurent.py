"""Exact Laurent polynomials in one variable q over the integers.

Terms are stored sparsely as a dict {exponent: coefficient} with no zero
coefficients; the empty dict is 0 and its degree is NEG_INF.  Coefficients
are plain Python ints, so nothing ever overflows.  Values are treated as
immutable: arithmetic returns fresh objects and nothing mutates a poly
after it has been handed out.
"""

from __future__ import annotations

NEG_INF = float("-inf")


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        # Trusted constructor: callers must not pass zero coefficients.
        self.terms = terms or {}

    # ---------------------------------------------------------------- builders

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coef: int, exp: int) -> "LaurentPoly":
        return cls({exp: coef}) if coef else cls()

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "LaurentPoly":
        return cls({e: c for e, c in terms.items() if c})

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls.from_terms({int(e): int(c) for e, c in pairs})

    def to_pairs(self) -> list[list[int]]:
        """Sorted [exponent, coefficient] pairs (the serialization form)."""
        return [[e, self.terms[e]] for e in sorted(self.terms)]

    # ---------------------------------------------------------------- queries

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        return max(self.terms) if self.terms else NEG_INF

    @property
    def min_degree(self):
        return min(self.terms) if self.terms else NEG_INF

    def coefficient(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    @property
    def leading_coefficient(self) -> int:
        return self.terms[max(self.terms)] if self.terms else 0

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    # ---------------------------------------------------------------- arithmetic

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly(out)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly()
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of polynomials are not defined")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # ---------------------------------------------------------------- structure maps

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1 (negates every exponent)."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def negative_part(self) -> "LaurentPoly":
        """Sum of the terms with strictly negative exponent."""
        return LaurentPoly({e: c for e, c in self.terms.items() if e < 0})

    def shifted(self, k: int) -> "LaurentPoly":
        """q^k * self."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    # ---------------------------------------------------------------- dunder misc

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if e != 0 and c == 1:
                body = mono
            elif e != 0 and c == -1:
                body = f"-{mono}"
            elif e == 0:
                body = str(c)
            else:
                body = f"{c}*{mono}"
            chunks.append(body)
        text = "+".join(chunks).replace("+-", "-")
        return text


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})


def xi(weight: int) -> LaurentPoly:
    """q^w - q^-w, the quadratic-relation coefficient for weight w."""
    return LaurentPoly({weight: 1, -weight: -1})


# ----------------------------------------------------------------------
# Raw-dict kernels.  Hot loops in the Hecke machinery run on plain
# {exponent: coefficient} dicts to avoid object churn; results are
# wrapped in LaurentPoly only at module boundaries.  Callers must treat
# every dict handed out by these helpers as frozen.

def mul_raw(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            v = get(e, 0) + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def addmul_raw(acc: dict, a: dict, b: dict) -> None:
    """acc += a * b, in place."""
    if not a or not b:
        return
    if len(a) > len(b):
        a, b = b, a
    get = acc.get
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            v = get(e, 0) + c1 * c2
            if v:
                acc[e] = v
            elif e in acc:
                del acc[e]


def submul_raw(acc: dict, a: dict, b: dict) -> None:
    """acc -= a * b, in place."""
    if not a or not b:
        return
    if len(a) > len(b):
        a, b = b, a
    get = acc.get
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            v = get(e, 0) - c1 * c2
            if v:
                acc[e] = v
            elif e in acc:
                del acc[e]


def add_raw(acc: dict, a: dict) -> None:
    get = acc.get
    for e, c in a.items():
        v = get(e, 0) + c
        if v:
            acc[e] = v
        elif e in acc:
            del acc[e]


def bar_raw(a: dict) -> dict:
    return {-e: c for e, c in a.items()}


def neg_part_raw(a: dict) -> dict:
    return {e: c for e, c in a.items() if e < 0}


def deg_raw(a: dict):
    return max(a) if a else NEG_INF
