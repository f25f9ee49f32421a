from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from src.domain.entities.polynomial import ExponentVector, VariableContext
from src.domain.exceptions.domain_exceptions import (
    DimensionMismatchException,
    InvalidGradingException,
)


class TermOrderKind(Enum):
    """Órdenes de términos soportados"""
    PURE_LEX = "lex"
    DEGREE_THEN_LEX = "deglex"


class Comparison(Enum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class TermOrder:
    """Orden lineal en N^n compatible con la suma (lex puro o grado y luego lex).

    `priority` lista los índices de variables de mayor a menor prioridad.
    """
    kind: TermOrderKind
    priority: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.priority) != list(range(len(self.priority))) or not self.priority:
            raise InvalidGradingException(
                f"La prioridad {self.priority} no es una permutación de 0..n-1"
            )

    @property
    def n(self) -> int:
        return len(self.priority)

    def key(self, exponent: ExponentVector) -> Tuple[int, ...]:
        if len(exponent) != self.n:
            raise DimensionMismatchException(
                f"Exponente {tuple(exponent)} incompatible con un orden en {self.n} variables"
            )
        lex = tuple(exponent[i] for i in self.priority)
        if self.kind is TermOrderKind.DEGREE_THEN_LEX:
            return (sum(exponent),) + lex
        return lex

    def compare(self, a: ExponentVector, b: ExponentVector) -> Comparison:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return Comparison.LT
        if ka > kb:
            return Comparison.GT
        return Comparison.EQ

    def to_string(self, ctx: VariableContext) -> str:
        return f"{self.kind.value}:" + ",".join(ctx.names[i] for i in self.priority)
