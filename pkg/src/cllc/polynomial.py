"""Dense univariate polynomials over the integers.

Coefficients are Python ints, so nothing overflows.  Division helpers are
integer-only (pseudo-remainders); exact rationals only show up when a
polynomial is evaluated at a :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable

from .errors import ConsistencyError, ParseError, UsageError


class IntPolynomial:
    """Immutable integer polynomial; ``coeffs[k]`` is the coefficient of z^k.

    The zero polynomial has empty ``coeffs``; otherwise the last entry is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        """prod (z - r) over the given integer roots."""
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return to_text(self)

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def scale(self, k: int) -> IntPolynomial:
        return IntPolynomial([k * c for c in self.coeffs])

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by z^k."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def exact_div(self, k: int) -> IntPolynomial:
        """Divide every coefficient by k; raises ConsistencyError when inexact."""
        if k == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for i, c in enumerate(self.coeffs):
            q, r = divmod(c, k)
            if r:
                raise ConsistencyError(f"coefficient {c} at degree {i} is not divisible by {k}")
            out.append(q)
        return IntPolynomial(out)

    def __call__(self, x):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_square(self) -> IntPolynomial:
        """p(z^2)."""
        out = [0] * (2 * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return IntPolynomial(out)

    def content(self) -> int:
        """gcd of the coefficients, signed like the leading coefficient."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return -g if self.lead < 0 else g

    def primitive(self) -> IntPolynomial:
        """Divide by the content; the result has positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        return IntPolynomial([c // g for c in self.coeffs])

    def sign_at_pos_inf(self) -> int:
        return (self.lead > 0) - (self.lead < 0)

    def sign_at_neg_inf(self) -> int:
        s = self.sign_at_pos_inf()
        return -s if self.degree % 2 else s


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return NotImplemented


Z = IntPolynomial([0, 1])


def even_part(p: IntPolynomial) -> IntPolynomial:
    """Coefficients a_0, a_2, a_4, ... moved to degrees 0, 1, 2, ..."""
    return IntPolynomial(p.coeffs[0::2])


def odd_part(p: IntPolynomial) -> IntPolynomial:
    """Coefficients a_1, a_3, a_5, ... moved to degrees 0, 1, 2, ..."""
    return IntPolynomial(p.coeffs[1::2])


def derivative(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial([k * c for k, c in enumerate(p.coeffs)][1:])


def pseudo_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Sign-preserving pseudo-division.

    Returns (q, r) with |lc(b)|^(deg a - deg b + 1) * a == q*b + r and
    deg r < deg b.  Using the absolute value of the leading coefficient keeps
    the sign of the remainder meaningful, which Sturm chains rely on.
    """
    if b.is_zero():
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    if a.degree < b.degree:
        return IntPolynomial(), a
    lc = b.lead
    mult = abs(lc)
    sgn = 1 if lc > 0 else -1
    r = list(a.coeffs)
    db = b.degree
    q = [0] * (a.degree - db + 1)
    for k in range(a.degree - db, -1, -1):
        # r <- |lc| r - r_top * sgn * z^k b ; track q the same way
        top = r[k + db]
        r = [mult * c for c in r]
        q = [mult * c for c in q]
        if top:
            f = top * sgn
            q[k] += f
            for j, c in enumerate(b.coeffs):
                r[k + j] -= f * c
    return IntPolynomial(q), IntPolynomial(r)


def divides(d: IntPolynomial, p: IntPolynomial) -> bool:
    """True when d | p over the rationals."""
    return pseudo_divmod(p, d)[1].is_zero()


def exact_quotient(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """p / d, required to be exact with integer coefficients."""
    q, r = pseudo_divmod(p, d)
    if r:
        raise ConsistencyError(f"{d} does not divide {p}")
    mult = abs(d.lead) ** (p.degree - d.degree + 1) if p.degree >= d.degree else 1
    return q.exact_div(mult)


def gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if p.is_zero() and q.is_zero():
        raise UsageError("gcd(0, 0) is undefined")
    a, b = p, q
    if a.degree < b.degree:
        a, b = b, a
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        _, r = pseudo_divmod(a, b)
        a, b = b, r.primitive()
    return a.primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), made primitive with positive leading coefficient."""
    if p.degree <= 0:
        return p.primitive()
    g = gcd(p, derivative(p))
    return exact_quotient(p.primitive(), g).primitive()


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: squarefree, pairwise coprime a_i with p ~ prod a_i^i.

    Only factors of positive degree are returned.  Quotients stay exact over Z
    because every divisor used is primitive (Gauss's lemma).
    """
    if p.is_zero():
        raise UsageError("squarefree decomposition of the zero polynomial")
    f = p.primitive()
    if f.degree <= 0:
        return []
    df = derivative(f)
    a = gcd(f, df)
    b = exact_quotient(f, a)
    c = exact_quotient(df, a)
    d = c - derivative(b)
    out = []
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a.primitive(), i))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a) if d else d
        d = c - derivative(b)
        i += 1
    return out


# text and JSON forms

def to_text(p: IntPolynomial, var: str = "z") -> str:
    """Canonical form ``"8 + 15*z + z^2"``, ascending degree."""
    if p.is_zero():
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((c < 0, body))
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z_]\w*)|(?P<op>\*\*|[-+*^])|(?P<bad>\S))")


def parse(text: str, var: str = "z") -> IntPolynomial:
    """Parse sums of terms ``c``, ``c*z``, ``z^k``, ``c*z^k`` (``**`` also accepted).

    Terms may repeat and come in any order; like terms are summed.
    """
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.end() == pos:
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", text, start)
        if kind == "var" and m.group(kind) != var:
            raise ParseError(f"unknown variable {m.group(kind)!r} (expected {var!r})", text, start)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    if not toks:
        raise ParseError("empty polynomial", text, 0)

    coeffs: dict[int, int] = {}
    i = 0

    def peek():
        return toks[i] if i < len(toks) else (None, None, len(text.rstrip()))

    first = True
    while i < len(toks):
        sign = 1
        kind, val, at = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, at)
        first = False
        kind, val, at = peek()
        coef = None
        if kind == "num":
            coef = int(val)
            i += 1
            kind, val, at = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, at = peek()
                if kind != "var":
                    raise ParseError(f"expected {var!r} after '*'", text, at)
            elif kind == "var":
                raise ParseError("missing '*' between coefficient and variable", text, at)
        if kind == "var" and (coef is None or toks[i - 1][1] == "*"):
            i += 1
            exp = 1
            kind, val, at = peek()
            if kind == "op" and val in ("^", "**"):
                i += 1
                kind, val, at = peek()
                if kind != "num":
                    raise ParseError("expected an exponent", text, at)
                exp = int(val)
                i += 1
            coef = 1 if coef is None else coef
        elif coef is None:
            raise ParseError("expected a coefficient or variable", text, at)
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
    deg = max(coeffs)
    return IntPolynomial([coeffs.get(k, 0) for k in range(deg + 1)])


def to_json(p: IntPolynomial) -> list[str]:
    """Degree-indexed list of decimal strings."""
    return [str(c) for c in p.coeffs]


def from_json(items: Iterable[str | int]) -> IntPolynomial:
    return IntPolynomial(int(x) for x in items)


def evaluate_sign(p: IntPolynomial, x: Fraction | int) -> int:
    v = p(Fraction(x))
    return (v > 0) - (v < 0)
