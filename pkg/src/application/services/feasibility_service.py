import logging
from fractions import Fraction
from math import ceil, floor, gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from src.domain.entities.feasibility import (
    BoundedMonomialsOutcome,
    BoundedWitness,
    CoveringCertificate,
    CoveringResult,
    CoveringStatus,
    FarkasWitness,
    FeasibilityOutcome,
    LinearSystem,
    Multipliers,
    OnlyConstants,
    Relation,
    integer_vector,
)
from src.domain.exceptions.domain_exceptions import DimensionMismatchException
from src.domain.exceptions.service_exceptions import CertificateException, FeasibilityException
from src.domain.gradings.z_grading import ZVector

logger = logging.getLogger(__name__)

# (coeficientes, estricta, lado derecho) normalizados a enteros primitivos
_Row = Tuple[Tuple[Fraction, ...], bool, Fraction]


class FeasibilityService:
    """Factibilidad lineal racional exacta y sus consecuencias enteras

    El núcleo es una eliminación de Fourier-Motzkin exacta sobre Fraction que
    elimina las variables en orden de índice fijo y reconstruye una solución
    por sustitución hacia atrás, de modo que las salidas son reproducibles.
    """

    @staticmethod
    def rational_feasible(system: LinearSystem, nonneg_vars: bool = False) -> Optional[List[Fraction]]:
        """Devuelve una solución racional exacta o None si el sistema es infactible"""
        if not system.rows:
            raise FeasibilityException("El sistema lineal está vacío")
        width = system.variable_count
        rows: List[_Row] = [
            (row.coefficients, row.relation is Relation.GT, row.rhs) for row in system.rows
        ]
        if nonneg_vars:
            for i in range(width):
                unit = tuple(Fraction(1 if k == i else 0) for k in range(width))
                rows.append((unit, False, Fraction(0)))

        prepared = _prepare(rows)
        if prepared is None:
            return None
        tableau = [prepared]
        for k in range(width):
            reduced = _eliminate(tableau[-1], k)
            if reduced is None:
                logger.debug("Fourier-Motzkin: contradicción al eliminar x%d", k)
                return None
            logger.debug("Fourier-Motzkin: x%d eliminada, %d filas", k, len(reduced))
            tableau.append(reduced)

        solution = [Fraction(0)] * width
        for k in reversed(range(width)):
            solution[k] = _choose_value(tableau[k], k, solution)

        if not all(_row_holds(row, solution) for row in rows):
            raise CertificateException(
                f"La sustitución hacia atrás produjo una solución inválida: {solution}"
            )
        return solution

    @staticmethod
    def positive_combination(zs: Sequence[ZVector]) -> FeasibilityOutcome:
        """Multiplicadores r en N^m con sum r_j z^(j) > 0, o un testigo de Farkas"""
        n = _check_vectors(zs)
        m = len(zs)

        # El sistema estricto es homogéneo: se normaliza a ">= 1" en cada coordenada.
        primal = LinearSystem.build([
            ([z.entries[i] for z in zs], Relation.GE, 1) for i in range(n)
        ])
        solution = FeasibilityService.rational_feasible(primal, nonneg_vars=True)
        if solution is not None:
            outcome: FeasibilityOutcome = Multipliers(tuple(integer_vector(solution)))
        else:
            rows = [([-e for e in z.entries], Relation.GE, 0) for z in zs]
            rows.append(([1] * n, Relation.GE, 1))
            rows.append(([-1] * n, Relation.GE, -1))
            alternative = FeasibilityService.rational_feasible(
                LinearSystem.build(rows), nonneg_vars=True
            )
            if alternative is None:
                raise CertificateException(
                    "Ni el sistema primal ni el alternativo son factibles"
                )
            delta = integer_vector(alternative)
            divisor = gcd(*delta)
            outcome = FarkasWitness(tuple(e // divisor for e in delta))

        if not outcome.verify(zs):
            raise CertificateException(f"Certificado de factibilidad inválido: {outcome}")
        logger.debug("positive_combination(m=%d, n=%d) -> %s", m, n, outcome)
        return outcome

    @staticmethod
    def bounded_monomials(zs: Sequence[ZVector]) -> BoundedMonomialsOutcome:
        """OnlyConstants si hay r con sum r_j z^(j) > 0; si no, el monomio acotado X^delta"""
        outcome = FeasibilityService.positive_combination(zs)
        if isinstance(outcome, Multipliers):
            return OnlyConstants(outcome)
        return BoundedWitness(outcome.delta)

    @staticmethod
    def covering_check(z: ZVector, zs: Sequence[ZVector], bound: int) -> CoveringResult:
        """Busca r, t en {0..bound}^m que certifiquen que las z^(j)-graduaciones cubren la z-graduación"""
        if bound < 1:
            raise FeasibilityException(f"La cota debe ser >= 1 (recibido {bound})")
        n = _check_vectors(zs)
        if z.n != n:
            raise DimensionMismatchException(f"z tiene {z.n} entradas y los z^(j) {n}")
        m = len(zs)

        relaxation = LinearSystem.build([
            ([z_j.entries[i] for z_j in zs], Relation.GE, z.entries[i]) for i in range(n)
        ])
        if FeasibilityService.rational_feasible(relaxation, nonneg_vars=True) is None:
            logger.debug("covering_check: relajación de r infactible")
            return CoveringResult(CoveringStatus.NOT_COVERED)
        for z_j in zs:
            single = LinearSystem.build([
                ([z.entries[i]], Relation.GE, z_j.entries[i]) for i in range(n)
            ])
            if FeasibilityService.rational_feasible(single, nonneg_vars=True) is None:
                logger.debug("covering_check: relajación de t infactible para %s", z_j)
                return CoveringResult(CoveringStatus.NOT_COVERED)

        r = _lexicographic_search(z, zs, bound)
        t = []
        for z_j in zs:
            t_j = next(
                (value for value in range(bound + 1)
                 if all(value * a >= b for a, b in zip(z.entries, z_j.entries))),
                None,
            )
            t.append(t_j)
        if r is None or any(value is None for value in t):
            logger.info("covering_check: sin solución entera con cota %d", bound)
            return CoveringResult(CoveringStatus.UNKNOWN)

        certificate = CoveringCertificate(tuple(r), tuple(t))
        if not certificate.verify(z, zs):
            raise CertificateException(f"Certificado de cubrimiento inválido: {certificate}")
        logger.debug("covering_check(m=%d) -> %s", m, certificate)
        return CoveringResult(CoveringStatus.COVERED, certificate)


def _check_vectors(zs: Sequence[ZVector]) -> int:
    if not zs:
        raise FeasibilityException("Se necesita al menos un vector z")
    n = zs[0].n
    if any(z.n != n for z in zs):
        raise DimensionMismatchException("Los vectores z tienen longitudes distintas")
    return n


def _normalize(row: _Row) -> Optional[_Row]:
    """Escala positivamente a enteros primitivos; None si la fila es trivialmente cierta.

    Lanza _Contradiction si la fila no tiene variables y es falsa.
    """
    coefficients, strict, rhs = row
    if all(a == 0 for a in coefficients):
        holds = 0 > rhs if strict else 0 >= rhs
        if not holds:
            raise _Contradiction()
        return None
    scale = lcm(*(value.denominator for value in coefficients + (rhs,)))
    integers = [int(value * scale) for value in coefficients + (rhs,)]
    divisor = gcd(*integers)
    integers = [value // divisor for value in integers]
    return tuple(Fraction(value) for value in integers[:-1]), strict, Fraction(integers[-1])


class _Contradiction(Exception):
    pass


def _prepare(rows: List[_Row]) -> Optional[List[_Row]]:
    try:
        normalized = [_normalize(row) for row in rows]
    except _Contradiction:
        return None
    return list(dict.fromkeys(row for row in normalized if row is not None))


def _eliminate(rows: List[_Row], k: int) -> Optional[List[_Row]]:
    positive = [row for row in rows if row[0][k] > 0]
    negative = [row for row in rows if row[0][k] < 0]
    result: Dict[_Row, None] = {row: None for row in rows if row[0][k] == 0}
    try:
        for p_coefficients, p_strict, p_rhs in positive:
            for q_coefficients, q_strict, q_rhs in negative:
                a, b = -q_coefficients[k], p_coefficients[k]
                combined = (
                    tuple(a * p + b * q for p, q in zip(p_coefficients, q_coefficients)),
                    p_strict or q_strict,
                    a * p_rhs + b * q_rhs,
                )
                normalized = _normalize(combined)
                if normalized is not None:
                    result[normalized] = None
    except _Contradiction:
        return None
    return list(result)


def _row_holds(row: _Row, point: Sequence[Fraction]) -> bool:
    coefficients, strict, rhs = row
    lhs = sum((a * x for a, x in zip(coefficients, point)), Fraction(0))
    return lhs > rhs if strict else lhs >= rhs


def _choose_value(rows: List[_Row], k: int, solution: List[Fraction]) -> Fraction:
    """Valor para x_k compatible con las filas de la etapa k (x_{k+1..} ya fijadas)"""
    lower: Optional[Tuple[Fraction, bool]] = None
    upper: Optional[Tuple[Fraction, bool]] = None
    for coefficients, strict, rhs in rows:
        a = coefficients[k]
        if a == 0:
            continue
        rest = sum((c * x for c, x in zip(coefficients[k + 1:], solution[k + 1:])), Fraction(0))
        bound = (rhs - rest) / a
        if a > 0:
            if lower is None or bound > lower[0] or (bound == lower[0] and strict):
                lower = (bound, strict)
        else:
            if upper is None or bound < upper[0] or (bound == upper[0] and strict):
                upper = (bound, strict)

    low_int = None
    if lower is not None:
        low_int = floor(lower[0]) + 1 if lower[1] else ceil(lower[0])
    high_int = None
    if upper is not None:
        high_int = ceil(upper[0]) - 1 if upper[1] else floor(upper[0])
    if low_int is None or high_int is None or low_int <= high_int:
        # entero más cercano a 0 dentro del intervalo
        value = 0
        if low_int is not None:
            value = max(value, low_int)
        if high_int is not None:
            value = min(value, high_int)
        return Fraction(value)
    if lower[0] == upper[0]:
        return lower[0]
    return (lower[0] + upper[0]) / 2


def _lexicographic_search(z: ZVector, zs: Sequence[ZVector], bound: int) -> Optional[List[int]]:
    """Menor r en orden lexicográfico dentro de {0..bound}^m con sum r_j z^(j) >= z.

    Cada rama se poda con la relajación racional de las variables restantes
    acotadas a [0, bound].
    """
    m, n = len(zs), z.n

    def relaxation_feasible(prefix: List[int]) -> bool:
        fixed = len(prefix)
        residual = [
            z.entries[i] - sum(r * z_j.entries[i] for r, z_j in zip(prefix, zs))
            for i in range(n)
        ]
        remaining = m - fixed
        if remaining == 0:
            return all(value <= 0 for value in residual)
        rows = [
            ([z_j.entries[i] for z_j in zs[fixed:]], Relation.GE, residual[i]) for i in range(n)
        ]
        for j in range(remaining):
            rows.append(([-1 if k == j else 0 for k in range(remaining)], Relation.GE, -bound))
        return FeasibilityService.rational_feasible(
            LinearSystem.build(rows), nonneg_vars=True
        ) is not None

    def search(prefix: List[int]) -> Optional[List[int]]:
        if len(prefix) == m:
            return prefix
        for value in range(bound + 1):
            candidate = prefix + [value]
            if relaxation_feasible(candidate):
                found = search(candidate)
                if found is not None:
                    return found
        return None

    return search([])
