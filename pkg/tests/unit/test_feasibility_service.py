from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from src.application.services.feasibility_service import FeasibilityService
from src.domain.entities.feasibility import (
    BoundedWitness,
    CoveringCertificate,
    CoveringStatus,
    FarkasWitness,
    LinearSystem,
    Multipliers,
    OnlyConstants,
    Relation,
)
from src.domain.exceptions.domain_exceptions import DimensionMismatchException
from src.domain.exceptions.service_exceptions import FeasibilityException
from src.domain.gradings import ZVector

GE, GT = Relation.GE, Relation.GT


def test_rational_feasible_returns_a_solution():
    system = LinearSystem.build([([1, 1], GE, 1), ([1, -1], GT, 0), ([-1, 0], GE, -3)])
    solution = FeasibilityService.rational_feasible(system)
    assert solution is not None
    assert system.is_satisfied(solution)


def test_rational_feasible_detects_infeasibility():
    system = LinearSystem.build([([1], GT, 0), ([-1], GE, 0)])
    assert FeasibilityService.rational_feasible(system) is None
    assert FeasibilityService.rational_feasible(LinearSystem.build([([-1, -1], GE, 1)]), nonneg_vars=True) is None


def test_rational_feasible_handles_fractional_only_solutions():
    # 2x > 0 y 2x < 1: ningún entero, solución racional
    system = LinearSystem.build([([2], GT, 0), ([-2], GT, -1)])
    solution = FeasibilityService.rational_feasible(system)
    assert solution is not None and 0 < solution[0] < Fraction(1, 2)


def test_rational_feasible_empty_system_raises():
    with pytest.raises(FeasibilityException):
        FeasibilityService.rational_feasible(LinearSystem(()))


def test_rational_feasible_agrees_with_vertex_oracle(rng):
    """Sistemas de 2 variables acotados por la caja [-4, 4]^2: factible si y solo si algún vértice lo es"""
    for _ in range(60):
        rows = [([1, 0], GE, -4), ([-1, 0], GE, -4), ([0, 1], GE, -4), ([0, -1], GE, -4)]
        for _ in range(int(rng.integers(1, 4))):
            a = [int(v) for v in rng.integers(-3, 4, 2)]
            rows.append((a, GE, int(rng.integers(-4, 5))))
        system = LinearSystem.build(rows)
        solution = FeasibilityService.rational_feasible(system)
        oracle = any(system.is_satisfied(point) for point in _vertices(system))
        assert (solution is not None) == oracle
        if solution is not None:
            assert system.is_satisfied(solution)


def test_positive_combination_examples():
    assert FeasibilityService.positive_combination([ZVector.of(1, -1), ZVector.of(-1, 1)]) == FarkasWitness((1, 1))
    assert FeasibilityService.positive_combination([ZVector.of(1, 0)]) == FarkasWitness((0, 1))
    outcome = FeasibilityService.positive_combination([ZVector.of(-1, 2), ZVector.of(1, -1)])
    assert isinstance(outcome, Multipliers)
    assert outcome.verify([ZVector.of(-1, 2), ZVector.of(1, -1)])


def test_positive_combination_is_deterministic():
    zs = [ZVector.of(0, 1), ZVector.of(1, -1), ZVector.of(-2, 3)]
    assert FeasibilityService.positive_combination(zs) == FeasibilityService.positive_combination(zs)


def test_positive_combination_dimension_mismatch():
    with pytest.raises(DimensionMismatchException):
        FeasibilityService.positive_combination([ZVector.of(1, 0), ZVector.of(1, 0, 0)])


def test_farkas_exclusivity_against_brute_force():
    """Los rayos extremos del cono de Farkas tienen entradas <= 50 para n <= 3 y |a_ij| <= 5"""
    rng = np.random.default_rng(7)
    grids = {n: np.array(list(product(range(51), repeat=n))[1:]) for n in (1, 2, 3)}
    for _ in range(200):
        n, m = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        matrix = rng.integers(-5, 6, size=(m, n))
        while not matrix.any(axis=1).all():
            matrix = rng.integers(-5, 6, size=(m, n))
        zs = [ZVector(tuple(int(e) for e in row)) for row in matrix]
        outcome = FeasibilityService.positive_combination(zs)
        assert outcome.verify(zs)

        blocked = (grids[n] @ matrix.T <= 0).all(axis=1)
        if isinstance(outcome, Multipliers):
            assert not blocked.any()
        else:
            assert blocked.any()


def test_bounded_monomials_examples():
    assert isinstance(FeasibilityService.bounded_monomials([ZVector.of(-1, 2), ZVector.of(1, -1)]), OnlyConstants)
    assert FeasibilityService.bounded_monomials([ZVector.of(1, -1), ZVector.of(-1, 1)]) == BoundedWitness((1, 1))
    assert isinstance(FeasibilityService.bounded_monomials([ZVector.of(1, 1)]), OnlyConstants)


def test_covering_examples():
    result = FeasibilityService.covering_check(ZVector.of(1, 1), [ZVector.of(1, 0), ZVector.of(0, 1)], 16)
    assert result.status is CoveringStatus.COVERED
    assert result.certificate == CoveringCertificate((1, 1), (1, 1))

    zs = [ZVector.of(0, 1), ZVector.of(1, -1)]
    result = FeasibilityService.covering_check(ZVector.of(1, 1), zs, 16)
    assert result.status is CoveringStatus.COVERED
    assert result.certificate == CoveringCertificate((2, 1), (1, 1))
    assert result.certificate.verify(ZVector.of(1, 1), zs)


def test_covering_infeasible_relaxation():
    result = FeasibilityService.covering_check(ZVector.of(2, 2), [ZVector.of(1, 0)], 16)
    assert result.status is CoveringStatus.NOT_COVERED
    assert result.certificate is None


def test_covering_bound_exhausted():
    result = FeasibilityService.covering_check(ZVector.of(20, 20), [ZVector.of(1, 0), ZVector.of(0, 1)], 16)
    assert result.status is CoveringStatus.UNKNOWN


def test_covering_rejects_bad_bound():
    with pytest.raises(FeasibilityException):
        FeasibilityService.covering_check(ZVector.of(1, 1), [ZVector.of(1, 0)], 0)


def test_tampered_covering_certificate_fails():
    zs = [ZVector.of(1, 0), ZVector.of(0, 1)]
    assert not CoveringCertificate((1, 0), (1, 1)).verify(ZVector.of(1, 1), zs)
    assert not CoveringCertificate((1, 1), (0, 1)).verify(ZVector.of(1, 1), zs)


def _vertices(system):
    """Intersecciones de pares de filas (candidatos a vértice del poliedro)"""
    points = []
    rows = system.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            (a, b), (c, d) = rows[i].coefficients, rows[j].coefficients
            det = a * d - b * c
            if det == 0:
                continue
            e, f = rows[i].rhs, rows[j].rhs
            points.append(((e * d - b * f) / det, (a * f - e * c) / det))
    return points
