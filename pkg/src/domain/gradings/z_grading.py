from dataclasses import dataclass
from typing import Sequence, Tuple

from src.domain.entities.polynomial import ExponentVector, VariableContext
from src.domain.exceptions.domain_exceptions import (
    DimensionMismatchException,
    InvalidGradingException,
)
from src.domain.gradings.graded_degree import GradedDegree
from src.domain.gradings.grading_interface import GradingInterface


@dataclass(frozen=True)
class ZVector:
    """Vector z en Z^n que define la z-graduación (grado de X^d = z·d)"""
    entries: Tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise InvalidGradingException("El vector z no puede estar vacío")
        if any(isinstance(e, bool) or not isinstance(e, int) for e in self.entries):
            raise InvalidGradingException(f"El vector z debe ser entero: {self.entries}")
        if all(e == 0 for e in self.entries):
            raise InvalidGradingException("El vector z nulo no define una graduación útil")

    @classmethod
    def of(cls, *entries: int) -> 'ZVector':
        return cls(tuple(int(e) for e in entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def dot(self, exponent: Sequence[int]) -> int:
        if len(exponent) != self.n:
            raise DimensionMismatchException(
                f"Longitudes incompatibles: z tiene {self.n}, el exponente {len(exponent)}"
            )
        return sum(z * d for z, d in zip(self.entries, exponent))

    def is_positive(self) -> bool:
        return all(e > 0 for e in self.entries)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


class ZGrading(GradingInterface):
    """z-graduación A = ⊕ A_d con A_d generado por los X^d con z·d = d"""

    def __init__(self, z: ZVector):
        self.z = z

    @property
    def n(self) -> int:
        return self.z.n

    def monomial_degree(self, exponent: ExponentVector) -> GradedDegree:
        return GradedDegree(self.z.dot(exponent))

    def is_finite_dimensional(self) -> bool:
        return self.z.is_positive()

    def describe(self, ctx: VariableContext) -> str:
        return f"z=({self.z})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ZGrading) and other.z == self.z

    def __hash__(self) -> int:
        return hash(('z', self.z))
