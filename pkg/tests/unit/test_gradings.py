from fractions import Fraction

import pytest

from src.application.services.grading_service import GradingService
from src.domain.entities.polynomial import Polynomial, VariableContext
from src.domain.exceptions.domain_exceptions import (
    DimensionMismatchException,
    InvalidGradingException,
    ZeroPolynomialException,
)
from src.domain.gradings import (
    Comparison,
    GradedDegree,
    TermOrder,
    TermOrderGrading,
    TermOrderKind,
    ZGrading,
    ZVector,
)

DEGLEX_XY = TermOrder(TermOrderKind.DEGREE_THEN_LEX, (0, 1))
LEX_YX = TermOrder(TermOrderKind.PURE_LEX, (1, 0))


def test_z_degree_examples(parse):
    assert GradingService.z_degree(parse("y - x^2"), ZVector.of(1, 2)).value == 2
    assert GradingService.z_degree(parse("1 - x^2*y"), ZVector.of(1, -1)).value == 1
    assert GradingService.z_degree(Polynomial.zero(2), ZVector.of(1, 1)).is_bottom()


def test_z_max_part_examples(parse):
    assert GradingService.z_max_part(parse("1 - x^2*y"), ZVector.of(1, -1)) == parse("-x^2*y")
    assert GradingService.z_max_part(parse("x*y + 1"), ZVector.of(1, -1)) == parse("x*y + 1")
    assert GradingService.z_max_part(parse("2*x^2 - y"), ZVector.of(1, -1)) == parse("2*x^2")
    assert GradingService.z_max_part(parse("1 - x*y + y"), ZVector.of(1, -1)) == parse("1 - x*y")


def test_z_max_part_of_zero_raises():
    with pytest.raises(ZeroPolynomialException):
        GradingService.z_max_part(Polynomial.zero(2), ZVector.of(1, 0))


def test_homogeneous_decomposition_is_increasing_and_sums_back(parse):
    f = parse("x^2*y - 3*x + y^2 + 5")
    pieces = GradingService.z_homogeneous_decomposition(f, ZVector.of(1, -1))
    degrees = [degree for degree, _ in pieces]
    assert degrees == sorted(set(degrees))
    total = Polynomial.zero(2)
    for _, piece in pieces:
        total = total + piece
    assert total == f


def test_zero_z_vector_is_rejected():
    with pytest.raises(InvalidGradingException):
        ZVector.of(0, 0)


def test_finite_dimensionality():
    assert ZGrading(ZVector.of(1, 2)).is_finite_dimensional()
    assert not ZGrading(ZVector.of(1, 0)).is_finite_dimensional()
    assert TermOrderGrading(DEGLEX_XY).is_finite_dimensional()
    assert not TermOrderGrading(TermOrder(TermOrderKind.PURE_LEX, (0, 1))).is_finite_dimensional()
    assert TermOrderGrading(TermOrder(TermOrderKind.PURE_LEX, (0,))).is_finite_dimensional()


def test_term_order_leading(parse):
    assert GradingService.term_order_leading(parse("1 - x*y"), DEGLEX_XY) == ((1, 1), Fraction(-1))
    assert GradingService.term_order_leading(parse("x - 1/2"), DEGLEX_XY) == ((1, 0), Fraction(1))
    assert GradingService.term_order_leading(parse("x^3 + y"), LEX_YX) == ((0, 1), Fraction(1))
    with pytest.raises(ZeroPolynomialException):
        GradingService.term_order_leading(Polynomial.zero(2), DEGLEX_XY)


def test_compare_exponents():
    assert GradingService.compare_exponents(DEGLEX_XY, (1, 0), (0, 1)) is Comparison.GT
    assert GradingService.compare_exponents(DEGLEX_XY, (0, 2), (1, 0)) is Comparison.GT
    assert GradingService.compare_exponents(LEX_YX, (5, 0), (0, 1)) is Comparison.LT
    assert GradingService.compare_exponents(DEGLEX_XY, (1, 1), (1, 1)) is Comparison.EQ
    with pytest.raises(DimensionMismatchException):
        GradingService.compare_exponents(DEGLEX_XY, (1,), (0, 1))


def test_invalid_permutation():
    with pytest.raises(InvalidGradingException):
        TermOrder(TermOrderKind.PURE_LEX, (0, 0))


def test_parse_z_vector():
    assert GradingService.parse_z_vector("1, -1", 2) == ZVector.of(1, -1)
    with pytest.raises(InvalidGradingException):
        GradingService.parse_z_vector("1;2", 2)
    with pytest.raises(DimensionMismatchException):
        GradingService.parse_z_vector("1,2,3", 2)


def test_parse_term_order():
    ctx = VariableContext(("x", "y"))
    assert GradingService.parse_term_order("deglex:x,y", ctx) == DEGLEX_XY
    assert GradingService.parse_term_order("lex:y,x", ctx) == LEX_YX
    for text in ["deglex", "grevlex:x,y", "lex:x", "lex:x,x", "lex:x,z"]:
        with pytest.raises(InvalidGradingException):
            GradingService.parse_term_order(text, ctx)


def test_bottom_degree_is_absorbing_and_smallest():
    bottom = GradedDegree.bottom()
    assert bottom < GradedDegree(-100)
    assert (bottom + GradedDegree(3)).is_bottom()


def test_degree_laws_on_random_pairs(rng):
    """Aditividad del grado, multiplicatividad de la parte máxima y ley de cuadrados"""
    for _ in range(500):
        n = int(rng.integers(1, 4))
        z = _random_z(rng, n)
        grading = ZGrading(z)
        f, g = _random_nonzero(rng, n), _random_nonzero(rng, n)

        assert grading.degree(f * g).value == grading.degree(f).value + grading.degree(g).value
        assert grading.max_part(f * g) == grading.max_part(f) * grading.max_part(g)
        top = max(grading.degree(f).value, grading.degree(g).value)
        assert grading.degree(f * f + g * g).value == 2 * top


def test_term_order_degree_laws_on_random_pairs(rng):
    for _ in range(200):
        n = int(rng.integers(1, 4))
        order = _random_order(rng, n)
        f, g = _random_nonzero(rng, n), _random_nonzero(rng, n)
        lead_f, c_f = GradingService.term_order_leading(f, order)
        lead_g, c_g = GradingService.term_order_leading(g, order)
        lead_fg, c_fg = GradingService.term_order_leading(f * g, order)
        assert lead_fg == tuple(a + b for a, b in zip(lead_f, lead_g))
        assert c_fg == c_f * c_g


def test_term_order_is_translation_invariant(rng):
    for _ in range(500):
        n = int(rng.integers(1, 4))
        order = _random_order(rng, n)
        a, b, c = (tuple(int(e) for e in rng.integers(0, 5, n)) for _ in range(3))
        shifted_a = tuple(x + y for x, y in zip(a, c))
        shifted_b = tuple(x + y for x, y in zip(b, c))
        assert GradingService.compare_exponents(order, a, b) is GradingService.compare_exponents(
            order, shifted_a, shifted_b
        )


def test_homogeneous_parts_are_their_own_highest_part(rng):
    for _ in range(300):
        n = int(rng.integers(1, 4))
        z = _random_z(rng, n)
        f = _random_nonzero(rng, n)
        total = Polynomial.zero(n)
        for degree, part in GradingService.z_homogeneous_decomposition(f, z):
            assert GradingService.z_max_part(part, z) == part
            assert GradingService.z_degree(part, z).value == degree
            total = total + part
        assert total == f


def _random_order(rng, n):
    return TermOrder(
        TermOrderKind.DEGREE_THEN_LEX if rng.integers(0, 2) else TermOrderKind.PURE_LEX,
        tuple(int(i) for i in rng.permutation(n)),
    )


def _random_z(rng, n):
    while True:
        entries = tuple(int(e) for e in rng.integers(-3, 4, n))
        if any(entries):
            return ZVector(entries)


def _random_nonzero(rng, n):
    while True:
        terms = [
            (tuple(int(e) for e in rng.integers(0, 4, n)), Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))))
            for _ in range(int(rng.integers(1, 4)))
        ]
        f = Polynomial.from_terms(n, terms)
        if not f.is_zero():
            return f
