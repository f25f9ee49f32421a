from abc import ABC, abstractmethod
from typing import Dict, List, Tuple

from src.domain.entities.polynomial import ExponentVector, Polynomial, VariableContext
from src.domain.exceptions.domain_exceptions import (
    DimensionMismatchException,
    ZeroPolynomialException,
)
from src.domain.gradings.graded_degree import GradedDegree


class GradingInterface(ABC):
    """Interfaz para graduaciones del anillo de polinomios (patrón Strategy)

    Las implementaciones solo definen el grado de un monomio; grado, parte de
    mayor grado y descomposición homogénea se derivan aquí para ambas familias.
    """

    @property
    @abstractmethod
    def n(self) -> int:
        pass

    @abstractmethod
    def monomial_degree(self, exponent: ExponentVector) -> GradedDegree:
        """Grado del monomio X^exponent"""
        pass

    @abstractmethod
    def is_finite_dimensional(self) -> bool:
        """Si la filtración inducida tiene piezas de dimensión finita"""
        pass

    @abstractmethod
    def describe(self, ctx: VariableContext) -> str:
        pass

    def _check(self, f: Polynomial):
        if f.n != self.n:
            raise DimensionMismatchException(
                f"El polinomio tiene {f.n} variables y la graduación {self.n}"
            )

    def degree(self, f: Polynomial) -> GradedDegree:
        self._check(f)
        if f.is_zero():
            return GradedDegree.bottom()
        return max(self.monomial_degree(exponent) for exponent in f.support())

    def decompose(self, f: Polynomial) -> List[Tuple[GradedDegree, Polynomial]]:
        """Partes homogéneas no nulas con grados estrictamente crecientes"""
        self._check(f)
        if f.is_zero():
            raise ZeroPolynomialException("El polinomio 0 no tiene descomposición homogénea")
        buckets: Dict[GradedDegree, Dict[ExponentVector, object]] = {}
        for exponent, coefficient in f.terms.items():
            buckets.setdefault(self.monomial_degree(exponent), {})[exponent] = coefficient
        return [(degree, Polynomial(f.n, buckets[degree])) for degree in sorted(buckets)]

    def max_part(self, f: Polynomial) -> Polynomial:
        """Parte de mayor grado f^max"""
        self._check(f)
        if f.is_zero():
            raise ZeroPolynomialException("El polinomio 0 no tiene parte de mayor grado")
        top = self.degree(f)
        return Polynomial(f.n, {
            exponent: coefficient
            for exponent, coefficient in f.terms.items()
            if self.monomial_degree(exponent) == top
        })
