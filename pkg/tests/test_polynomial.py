import pytest
from hypothesis import given
from hypothesis import strategies as st

from cllc.errors import ConsistencyError, ParseError, UsageError
from cllc.polynomial import (
    IntPolynomial,
    derivative,
    divides,
    even_part,
    exact_quotient,
    from_json,
    gcd,
    odd_part,
    parse,
    pseudo_divmod,
    squarefree_decomposition,
    squarefree_part,
    to_json,
    to_text,
)

from oracles import poly_from_rational_roots, rising_factorial_coeffs

polys = st.lists(st.integers(-50, 50), max_size=9).map(IntPolynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_normalisation():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial().degree == -1


def test_ring_examples():
    one_z = IntPolynomial([1, 1])
    assert one_z + one_z == IntPolynomial([2, 2])
    assert 3 * one_z == IntPolynomial([3, 3])
    z = IntPolynomial([0, 1])
    assert z * z == IntPolynomial([0, 0, 1])
    assert one_z - one_z == IntPolynomial()
    assert one_z ** 3 == IntPolynomial([1, 3, 3, 1])


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)


def test_even_odd_examples():
    p = IntPolynomial([1, 2, 3])
    assert even_part(p) == IntPolynomial([1, 3])
    assert odd_part(p) == IntPolynomial([2])
    z = IntPolynomial([0, 1])
    assert even_part(z).is_zero() and odd_part(z) == IntPolynomial([1])
    s4 = IntPolynomial(rising_factorial_coeffs(4))
    assert s4 == IntPolynomial([0, 6, 11, 6, 1])
    assert even_part(s4) == IntPolynomial([0, 11, 1])
    assert odd_part(s4) == IntPolynomial([6, 6])


@given(polys)
def test_even_odd_recombine(p):
    z = IntPolynomial([0, 1])
    assert p == even_part(p).compose_square() + z * odd_part(p).compose_square()


def test_derivative_and_gcd_examples():
    assert derivative(parse("z^2 + 1")) == parse("2*z")
    assert gcd(parse("z^2 - 1"), parse("z - 1")) == parse("z - 1")
    assert gcd(parse("z^2 + 1"), parse("z")) == IntPolynomial([1])
    assert gcd(parse("-2*z + 2"), IntPolynomial()) == parse("z - 1")
    with pytest.raises(UsageError):
        gcd(IntPolynomial(), IntPolynomial())


@given(nonzero_polys, nonzero_polys)
def test_pseudo_division_identity(a, b):
    q, r = pseudo_divmod(a, b)
    k = max(a.degree - b.degree + 1, 0)
    assert a.scale(abs(b.lead) ** k) == q * b + r
    assert r.degree < b.degree


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b, common):
    x, y = a * common, b * common
    g = gcd(x, y)
    assert g.lead > 0
    assert divides(g, x) and divides(g, y)
    assert divides(common.primitive(), g) or common.degree == 0


def test_exact_quotient_and_div():
    p = parse("z^3 - 1")
    assert exact_quotient(p, parse("z - 1")) == parse("z^2 + z + 1")
    with pytest.raises(ConsistencyError):
        exact_quotient(p, parse("z + 2"))
    with pytest.raises(ConsistencyError):
        IntPolynomial([3, 6, 7]).exact_div(3)


def test_squarefree():
    p = IntPolynomial(poly_from_rational_roots([-1, -1, -1, -2, -2, -3, 0]))
    assert squarefree_part(p) == IntPolynomial(poly_from_rational_roots([-1, -2, -3, 0]))
    dec = squarefree_decomposition(p)
    assert dec == [(IntPolynomial(poly_from_rational_roots([-3, 0])), 1),
                   (IntPolynomial(poly_from_rational_roots([-2])), 2),
                   (IntPolynomial(poly_from_rational_roots([-1])), 3)]
    assert squarefree_decomposition(parse("4")) == []


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7))
def test_squarefree_decomposition_reassembles(roots):
    p = IntPolynomial(poly_from_rational_roots(roots)).scale(6)
    prod = IntPolynomial([1])
    for factor, mult in squarefree_decomposition(p):
        prod = prod * factor ** mult
    assert prod == p.primitive()


def test_text_form():
    assert to_text(IntPolynomial([8, 15, 1])) == "8 + 15*z + z^2"
    assert to_text(IntPolynomial([25, -2])) == "25 - 2*z"
    assert to_text(IntPolynomial([0, -1, 0, 3])) == "-z + 3*z^3"
    assert to_text(IntPolynomial()) == "0"
    assert str(IntPolynomial([5, 1])) == "5 + z"


@given(polys)
def test_text_round_trip(p):
    assert parse(to_text(p)) == p


def test_parse_variants():
    assert parse("8+15*z+z^2") == IntPolynomial([8, 15, 1])
    assert parse("z**3 - z + z") == IntPolynomial([0, 0, 0, 1])
    assert parse("-3") == IntPolynomial([-3])
    assert parse("2*z^2 + 1 + z^2") == IntPolynomial([1, 0, 3])


@pytest.mark.parametrize("text,pos", [("8 + 15*x", 7), ("8 + + z", 4), ("3z", 1), ("z^", 2),
                                      ("", 0), ("1 2", 2), ("8 & z", 2)])
def test_parse_errors_point_at_column(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    caret_line = str(info.value).splitlines()[-1]
    assert caret_line.index("^") == pos + 2


@given(polys)
def test_json_round_trip(p):
    items = to_json(p)
    assert all(isinstance(x, str) for x in items)
    assert from_json(items) == p


def test_big_integers_survive():
    p = IntPolynomial([10**40, 1])
    assert (p * p)[0] == 10**80
    assert from_json(to_json(p * p)) == p * p
