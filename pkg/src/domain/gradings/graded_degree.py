from dataclasses import dataclass
from functools import total_ordering
from typing import TYPE_CHECKING, Optional, Tuple, Union

from src.domain.entities.polynomial import ExponentVector
from src.domain.exceptions.domain_exceptions import DomainException

if TYPE_CHECKING:
    from src.domain.gradings.term_order import TermOrder


@total_ordering
@dataclass(frozen=True)
class GradedDegree:
    """Grado graduado: entero (z-graduación) o vector de exponentes (orden de términos).

    `value is None` representa el elemento mínimo -inf, que es el grado de 0 y
    es absorbente para la suma. Para órdenes de términos la comparación usa la
    clave del orden (`order.key`).
    """
    value: Optional[Union[int, ExponentVector]]
    order: Optional['TermOrder'] = None

    @classmethod
    def bottom(cls) -> 'GradedDegree':
        return cls(None)

    def is_bottom(self) -> bool:
        return self.value is None

    def _rank(self) -> Tuple:
        if isinstance(self.value, int):
            return (self.value,)
        return self.order.key(self.value)

    def __lt__(self, other: 'GradedDegree') -> bool:
        if not isinstance(other, GradedDegree):
            return NotImplemented
        if self.is_bottom():
            return not other.is_bottom()
        if other.is_bottom():
            return False
        return self._rank() < other._rank()

    def __add__(self, other: 'GradedDegree') -> 'GradedDegree':
        if self.is_bottom() or other.is_bottom():
            return GradedDegree.bottom()
        if isinstance(self.value, int) and isinstance(other.value, int):
            return GradedDegree(self.value + other.value)
        if isinstance(self.value, tuple) and isinstance(other.value, tuple):
            return GradedDegree(tuple(a + b for a, b in zip(self.value, other.value)), self.order)
        raise DomainException("No se pueden sumar grados de graduaciones distintas")

    def residue_mod_two(self) -> Tuple[int, ...]:
        """Clase del grado módulo 2·Gamma (Gamma = Z o Z^n)"""
        if self.is_bottom():
            raise DomainException("El grado -inf no tiene residuo módulo 2")
        if isinstance(self.value, int):
            return (self.value % 2,)
        return tuple(e % 2 for e in self.value)

    def __str__(self) -> str:
        if self.is_bottom():
            return "-inf"
        if isinstance(self.value, int):
            return str(self.value)
        return "(" + ",".join(str(e) for e in self.value) + ")"
