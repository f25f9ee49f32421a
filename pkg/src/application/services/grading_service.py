import re
from fractions import Fraction
from typing import List, Tuple

from src.domain.entities.polynomial import ExponentVector, Polynomial, VariableContext
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

_Z_VECTOR = re.compile(r'^\s*-?\d+(\s*,\s*-?\d+)*\s*$')


class GradingService:
    """Servicio de graduaciones: grados, partes de mayor grado y términos líderes"""

    @staticmethod
    def z_degree(f: Polynomial, z: ZVector) -> GradedDegree:
        """max{z·d : d en el soporte de f}; -inf para f = 0"""
        return ZGrading(z).degree(f)

    @staticmethod
    def z_max_part(f: Polynomial, z: ZVector) -> Polynomial:
        return ZGrading(z).max_part(f)

    @staticmethod
    def z_homogeneous_decomposition(f: Polynomial, z: ZVector) -> List[Tuple[int, Polynomial]]:
        return [(degree.value, part) for degree, part in ZGrading(z).decompose(f)]

    @staticmethod
    def term_order_leading(f: Polynomial, order: TermOrder) -> Tuple[ExponentVector, Fraction]:
        """Exponente máximo del soporte según el orden y su coeficiente"""
        grading = TermOrderGrading(order)
        if f.is_zero():
            raise ZeroPolynomialException("El polinomio 0 no tiene término líder")
        exponent = grading.degree(f).value
        return exponent, f.coefficient(exponent)

    @staticmethod
    def compare_exponents(order: TermOrder, a: ExponentVector, b: ExponentVector) -> Comparison:
        if len(a) != len(b):
            raise DimensionMismatchException(f"Exponentes de longitudes distintas: {a} y {b}")
        return order.compare(a, b)

    @staticmethod
    def parse_z_vector(text: str, n: int) -> ZVector:
        """Sintaxis de la CLI: enteros separados por comas, p. ej. "1,-1" """
        if not _Z_VECTOR.match(text or ""):
            raise InvalidGradingException(f"Vector z inválido: '{text}'")
        z = ZVector(tuple(int(part) for part in text.split(',')))
        if z.n != n:
            raise DimensionMismatchException(
                f"El vector z '{text}' tiene {z.n} entradas y el sistema {n} variables"
            )
        return z

    @staticmethod
    def parse_term_order(text: str, ctx: VariableContext) -> TermOrder:
        """Sintaxis de la CLI: "deglex:x,y" o "lex:x,y" (mayor prioridad primero)"""
        kind_text, sep, names_text = (text or "").partition(':')
        kinds = {kind.value: kind for kind in TermOrderKind}
        if not sep or kind_text.strip() not in kinds:
            raise InvalidGradingException(
                f"Orden de términos inválido: '{text}' (use 'deglex:x,y' o 'lex:x,y')"
            )
        names = [name.strip() for name in names_text.split(',')]
        priority = []
        for name in names:
            index = ctx.index_of(name)
            if index is None:
                raise InvalidGradingException(f"Variable desconocida en el orden: '{name}'")
            priority.append(index)
        if len(priority) != ctx.n or len(set(priority)) != ctx.n:
            raise InvalidGradingException(
                f"El orden debe listar cada variable exactamente una vez: '{text}'"
            )
        return TermOrder(kinds[kind_text.strip()], tuple(priority))
