from src.domain.entities.polynomial import ExponentVector, VariableContext
from src.domain.gradings.graded_degree import GradedDegree
from src.domain.gradings.grading_interface import GradingInterface
from src.domain.gradings.term_order import TermOrder, TermOrderKind


class TermOrderGrading(GradingInterface):
    """Graduación inducida por un orden de términos: cada monomio es su propia pieza"""

    def __init__(self, order: TermOrder):
        self.order = order

    @property
    def n(self) -> int:
        return self.order.n

    def monomial_degree(self, exponent: ExponentVector) -> GradedDegree:
        # valida la longitud a través de la clave del orden
        self.order.key(exponent)
        return GradedDegree(tuple(exponent), self.order)

    def is_finite_dimensional(self) -> bool:
        # lex puro solo tiene piezas finitas en una variable
        return self.order.kind is TermOrderKind.DEGREE_THEN_LEX or self.n == 1

    def describe(self, ctx: VariableContext) -> str:
        return self.order.to_string(ctx)

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrderGrading) and other.order == self.order

    def __hash__(self) -> int:
        return hash(('order', self.order))
