from fractions import Fraction

import pytest

from src.domain.entities.polynomial import Polynomial, VariableContext
from src.domain.exceptions.domain_exceptions import DimensionMismatchException, DomainException


def test_zero_coefficients_are_dropped():
    p = Polynomial(2, {(1, 0): 0, (0, 1): Fraction(3, 2)})
    assert dict(p.terms) == {(0, 1): Fraction(3, 2)}
    assert Polynomial(2, {(0, 0): 0}).is_zero()


def test_from_terms_sums_repeated_exponents():
    p = Polynomial.from_terms(2, [((1, 0), 1), ((1, 0), -1), ((0, 2), 2)])
    assert dict(p.terms) == {(0, 2): Fraction(2)}


def test_ring_operations(parse):
    x, y = parse("x"), parse("y")
    assert x * y == parse("x*y")
    assert parse("y - x^2") + parse("x^2 - y") == Polynomial.zero(2)
    assert (x - 1) * (x + 1) == parse("x^2 - 1")
    assert -x == parse("-x")
    assert x.scale(Fraction(1, 2)) == parse("1/2*x")
    assert (x + y) ** 2 == parse("x^2 + 2*x*y + y^2")


def test_product_of_nonzero_is_nonzero(rng):
    for _ in range(500):
        n = int(rng.integers(1, 4))
        f, g = _random_nonzero(rng, n), _random_nonzero(rng, n)
        assert not (f * g).is_zero()


def test_canonical_form_ignores_term_order(rng):
    for _ in range(200):
        entries = [
            (tuple(int(e) for e in rng.integers(0, 3, 2)), Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))))
            for _ in range(int(rng.integers(1, 7)))
        ]
        shuffled = [entries[i] for i in rng.permutation(len(entries))]
        p, q = Polynomial.from_terms(2, entries), Polynomial.from_terms(2, shuffled)
        assert dict(p.terms) == dict(q.terms)
        assert p == q and hash(p) == hash(q)
        assert all(c != 0 for c in p.terms.values())


def test_ring_mismatch_raises():
    with pytest.raises(DimensionMismatchException):
        Polynomial.variable(0, 1) + Polynomial.variable(0, 2)


def test_evaluate_examples(parse):
    point = (Fraction(1), Fraction(3, 2))
    assert parse("y - x^2").evaluate(point) == Fraction(1, 2)
    assert parse("2*x^2 - y").evaluate(point) == Fraction(1, 2)
    assert Polynomial.one(2).evaluate((Fraction(7), Fraction(-3))) == 1


def test_evaluate_length_mismatch(parse):
    with pytest.raises(DimensionMismatchException):
        parse("x").evaluate((1,))


def test_evaluation_is_a_ring_homomorphism(rng):
    for _ in range(100):
        f, g = _random_polynomial(rng), _random_polynomial(rng)
        point = tuple(Fraction(int(a), int(b)) for a, b in zip(rng.integers(-9, 10, 2), rng.integers(1, 6, 2)))
        assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
        assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)


def test_to_string_orders_highest_terms_first(parse):
    ctx = VariableContext(("x", "y"))
    assert parse("-y + 2*x^2").to_string(ctx) == "2*x^2 - y"
    assert Polynomial.zero(2).to_string(ctx) == "0"
    assert parse("-3/2*x").to_string(ctx) == "-3/2*x"


def test_bool_coefficients_are_rejected():
    with pytest.raises(DomainException):
        Polynomial(1, {(1,): True})


def test_negative_exponent_is_rejected():
    with pytest.raises(DomainException):
        Polynomial(2, {(-1, 0): 1})


def _random_polynomial(rng, n=2, terms=4, degree=3):
    entries = []
    for _ in range(terms):
        exponent = tuple(int(e) for e in rng.integers(0, degree + 1, n))
        entries.append((exponent, Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))))
    return Polynomial.from_terms(n, entries)


def _random_nonzero(rng, n):
    while True:
        f = _random_polynomial(rng, n=n, terms=int(rng.integers(1, 4)))
        if not f.is_zero():
            return f
