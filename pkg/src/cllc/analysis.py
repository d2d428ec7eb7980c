"""Exact certificates: log-concavity, real-rootedness, interlacing, Hermite-Biehler.

Root questions are settled with Sturm chains built from integer
pseudo-remainders and bisection on rational endpoints.  No floating point
is involved, so a certificate is a proof for the polynomial it names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import UsageError
from .polynomial import (
    IntPolynomial,
    derivative,
    even_part,
    exact_quotient,
    gcd,
    odd_part,
    pseudo_divmod,
    squarefree_decomposition,
    squarefree_part,
    to_json,
    to_text,
)


class LogConcavity(NamedTuple):
    log_concave: bool
    witness: int | None
    contiguous: bool


def is_log_concave(p: IntPolynomial | Sequence[int]) -> LogConcavity:
    """a_k^2 >= a_{k-1} a_{k+1} at every internal index of the coefficient list.

    ``witness`` is the first violating index.  Whether the nonzero
    coefficients form one unbroken run is reported separately as ``contiguous``.
    """
    coeffs = tuple(p.coeffs if isinstance(p, IntPolynomial) else IntPolynomial(p).coeffs)
    if not coeffs:
        raise UsageError("log-concavity of the zero polynomial is undefined")
    witness = None
    for k in range(1, len(coeffs) - 1):
        if coeffs[k] ** 2 < coeffs[k - 1] * coeffs[k + 1]:
            witness = k
            break
    support = [k for k, c in enumerate(coeffs) if c]
    contiguous = support[-1] - support[0] + 1 == len(support)
    return LogConcavity(witness is None, witness, contiguous)


# Sturm machinery

def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """p, p', then negated pseudo-remainders, each divided by its positive content."""
    chain = [p, derivative(p)]
    while chain[-1].degree > 0:
        _, r = pseudo_divmod(chain[-2], chain[-1])
        if r.is_zero():
            break
        r = -r
        g = abs(r.content())
        chain.append(IntPolynomial(c // g for c in r.coeffs))
    return [q for q in chain if not q.is_zero()]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_variations(chain: Sequence[IntPolynomial], x) -> int:
    """Sign changes of the chain at x; x may be a rational, or None for -inf/+inf via ``'-inf'``/``'+inf'``."""
    if x == "-inf":
        return _variations(q.sign_at_neg_inf() for q in chain)
    if x == "+inf":
        return _variations(q.sign_at_pos_inf() for q in chain)
    x = Fraction(x)
    return _variations(_sign(q(x)) for q in chain)


def _check_squarefree(p: IntPolynomial) -> None:
    if p.degree > 0 and gcd(p, derivative(p)).degree > 0:
        raise UsageError(f"{to_text(p)} is not squarefree; pass its squarefree part")


def sturm_real_root_count(p: IntPolynomial, interval=(None, None), chain=None) -> int:
    """Distinct real roots of a squarefree p in (a, b]; None stands for an infinite end."""
    if p.is_zero():
        raise UsageError("the zero polynomial has no finite root count")
    if chain is None:
        _check_squarefree(p)
        chain = sturm_chain(p)
    a, b = interval
    va = sign_variations(chain, "-inf" if a is None else a)
    vb = sign_variations(chain, "+inf" if b is None else b)
    return va - vb


@dataclass(frozen=True)
class RootInterval:
    """Either the exact point lo == hi, or the open interval (lo, hi)."""

    lo: Fraction
    hi: Fraction

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def to_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def root_bound(p: IntPolynomial) -> Fraction:
    """Cauchy's bound 1 + max|a_i| / |a_lead|: every root has modulus below it."""
    lead = abs(p.lead)
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead) if p.degree > 0 else Fraction(1)


def isolate_real_roots(p: IntPolynomial, chain=None) -> list[RootInterval]:
    """Sorted, pairwise disjoint isolating intervals for the real roots of squarefree p."""
    if p.degree < 1:
        return []
    if p.degree == 1:
        r = Fraction(-p.coeffs[0], p.coeffs[1])
        return [RootInterval(r, r)]
    if chain is None:
        chain = sturm_chain(p)
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        count = sturm_real_root_count(p, (a, b), chain)
        if count == 0:
            continue
        if count == 1:
            if p(b) == 0:
                out.append(RootInterval(b, b))
            else:
                out.append(RootInterval(a, b))
            continue
        m = (a + b) / 2
        stack.append((m, b))
        stack.append((a, m))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine(p: IntPolynomial, iv: RootInterval, chain=None) -> RootInterval:
    """Halve an isolating interval of squarefree p."""
    if iv.is_point:
        return iv
    m = (iv.lo + iv.hi) / 2
    if p(m) == 0:
        return RootInterval(m, m)
    if chain is None:
        chain = sturm_chain(p)
    if sturm_real_root_count(p, (iv.lo, m), chain) == 1:
        return RootInterval(iv.lo, m)
    return RootInterval(m, iv.hi)


@dataclass(frozen=True)
class RootCertificate:
    polynomial: IntPolynomial
    squarefree_degree: int
    distinct_real_roots: int
    real_rooted: bool
    isolating_intervals: tuple[RootInterval, ...] = ()

    def to_json(self) -> dict:
        return {
            "polynomial": to_text(self.polynomial),
            "coeffs": to_json(self.polynomial),
            "squarefree_degree": self.squarefree_degree,
            "distinct_real_roots": self.distinct_real_roots,
            "real_rooted": self.real_rooted,
            "isolating_intervals": [iv.to_json() for iv in self.isolating_intervals],
        }


def certify_real_rooted(p: IntPolynomial) -> RootCertificate:
    """Decide whether every complex root of p is real, with isolating intervals as evidence."""
    if p.is_zero():
        raise UsageError("real-rootedness of the zero polynomial is undefined")
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return RootCertificate(p, 0, 0, True, ())
    chain = sturm_chain(sf)
    count = sturm_real_root_count(sf, (None, None), chain)
    intervals = tuple(isolate_real_roots(sf, chain))
    if len(intervals) != count:
        raise AssertionError("root isolation disagrees with the Sturm count")
    return RootCertificate(p, sf.degree, count, count == sf.degree, intervals)


# interlacing

@dataclass
class _Piece:
    poly: IntPolynomial
    mult_f: int
    mult_g: int
    chain: list = field(default_factory=list)
    intervals: list = field(default_factory=list)


def _coprime_pieces(f: IntPolynomial, g: IntPolynomial) -> list[_Piece]:
    """Split the roots of f and g into pairwise coprime squarefree pieces.

    Each piece records the multiplicity its roots carry in f and in g.
    """
    fd = squarefree_decomposition(f)
    gd = squarefree_decomposition(g)
    pieces = []
    f_rest = {i: a for a, i in fd}
    g_rest = {j: b for b, j in gd}
    for a, i in fd:
        for b, j in gd:
            c = gcd(a, b)
            if c.degree > 0:
                pieces.append(_Piece(c, i, j))
                f_rest[i] = exact_quotient(f_rest[i], c).primitive()
                g_rest[j] = exact_quotient(g_rest[j], c).primitive()
    pieces += [_Piece(a, i, 0) for i, a in f_rest.items() if a.degree > 0]
    pieces += [_Piece(b, 0, j) for j, b in g_rest.items() if b.degree > 0]
    return pieces


def _overlap(a: RootInterval, b: RootInterval) -> bool:
    return not (a.hi <= b.lo or b.hi <= a.lo)


def merged_roots(f: IntPolynomial, g: IntPolynomial) -> list[tuple[RootInterval, int, int]]:
    """Distinct real roots of f*g in increasing order, tagged with (mult in f, mult in g)."""
    pieces = _coprime_pieces(f, g)
    items = []
    for piece in pieces:
        piece.chain = sturm_chain(piece.poly)
        for iv in isolate_real_roots(piece.poly, piece.chain):
            items.append([iv, piece])
    # refine until no two isolating intervals overlap; pieces are coprime so this terminates
    changed = True
    while changed:
        changed = False
        for x in range(len(items)):
            for y in range(x + 1, len(items)):
                while _overlap(items[x][0], items[y][0]):
                    for it in (items[x], items[y]):
                        it[0] = refine(it[1].poly, it[0], it[1].chain)
                    changed = True
    items.sort(key=lambda it: (it[0].lo, it[0].hi))
    return [(iv, piece.mult_f, piece.mult_g) for iv, piece in items]


def _weave_ok(first: list[int], second: list[int], strict: bool) -> bool:
    """first[0] <= second[0] <= first[1] <= second[1] <= ... over root ranks."""
    seq = []
    for i in range(max(len(first), len(second))):
        if i < len(first):
            seq.append(first[i])
        if i < len(second):
            seq.append(second[i])
    if strict:
        return all(a < b for a, b in zip(seq, seq[1:]))
    return all(a <= b for a, b in zip(seq, seq[1:]))


def interlaces(g: IntPolynomial, f: IntPolynomial, strict: bool = False) -> bool:
    """Whether g interlaces f (roots counted with multiplicity).

    With s = deg f and t = deg g: for s == t the pattern is
    g1 <= f1 <= g2 <= ... <= gt <= fs; for s == t + 1 it is
    f1 <= g1 <= f2 <= ... <= gt <= fs.  Strict mode requires every
    inequality to be strict.  Any other degree gap gives False.
    """
    if f.is_zero() or g.is_zero():
        raise UsageError("interlacing is undefined for the zero polynomial")
    for name, q in (("f", f), ("g", g)):
        if not certify_real_rooted(q).real_rooted:
            raise UsageError(f"{name} = {to_text(q)} is not real-rooted")
    s, t = f.degree, g.degree
    if s - t not in (0, 1):
        return False
    f_ranks, g_ranks = [], []
    for rank, (_, mf, mg) in enumerate(merged_roots(f, g)):
        f_ranks += [rank] * mf
        g_ranks += [rank] * mg
    if s == t:
        return _weave_ok(g_ranks, f_ranks, strict)
    return _weave_ok(f_ranks, g_ranks, strict)


# Hermite-Biehler

@dataclass
class HermiteBiehlerReport:
    polynomial: IntPolynomial
    weak: bool
    even: IntPolynomial
    odd: IntPolynomial
    even_real_rooted: bool
    odd_real_rooted: bool
    even_roots_ok: bool
    odd_roots_ok: bool
    interlacing: bool

    @property
    def ok(self) -> bool:
        return (self.even_real_rooted and self.odd_real_rooted and self.even_roots_ok
                and self.odd_roots_ok and self.interlacing)

    def to_json(self) -> dict:
        return {
            "polynomial": to_text(self.polynomial),
            "mode": "weak" if self.weak else "strict",
            "even_part": to_text(self.even),
            "odd_part": to_text(self.odd),
            "even_real_rooted": self.even_real_rooted,
            "odd_real_rooted": self.odd_real_rooted,
            "even_roots_ok": self.even_roots_ok,
            "odd_roots_ok": self.odd_roots_ok,
            "interlacing": self.interlacing,
            "ok": self.ok,
        }


def roots_nonpositive(p: IntPolynomial, real_rooted: bool, strict: bool = False) -> bool:
    """Sign-pattern test: a real-rooted p whose coefficients share one sign has roots <= 0.

    Strict mode also demands a nonzero constant term, which rules out the root 0.
    """
    if not real_rooted:
        return False
    nonzero = [c for c in p.coeffs if c]
    one_sign = all(c > 0 for c in nonzero) or all(c < 0 for c in nonzero)
    if strict and p.coeffs[0] == 0:
        return False
    return one_sign


def hermite_biehler_check(p: IntPolynomial, weak: bool = True) -> HermiteBiehlerReport:
    """Check the even/odd-part conditions equivalent to (weak) Hurwitz stability.

    The interlacing conjunct is tested as ``interlaces(odd, even)``: with the
    root-ordering convention of :func:`interlaces`, that is the orientation
    satisfied by stable polynomials (e.g. (z+1)(z+2)(z+3) has even part
    6 + 6z, odd part 11 + z, and -11 <= -1).
    """
    pe, po = even_part(p), odd_part(p)
    if pe.is_zero() or po.is_zero():
        raise UsageError("even part times odd part vanishes identically")
    e_rr = certify_real_rooted(pe).real_rooted
    o_rr = certify_real_rooted(po).real_rooted
    e_ok = roots_nonpositive(pe, e_rr, strict=not weak)
    o_ok = roots_nonpositive(po, o_rr, strict=not weak)
    inter = e_rr and o_rr and interlaces(po, pe, strict=not weak)
    return HermiteBiehlerReport(p, weak, pe, po, e_rr, o_rr, e_ok, o_ok, inter)


def consecutive_interlacing(a: IntPolynomial, b: IntPolynomial, strict: bool = False) -> str | None:
    """Which of ``a`` and ``b`` interlaces the other: "a<b", "b<a", or None."""
    if interlaces(a, b, strict):
        return "a<b"
    if interlaces(b, a, strict):
        return "b<a"
    return None
