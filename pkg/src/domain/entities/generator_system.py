from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import List, Optional, Tuple

from src.domain.entities.polynomial import Polynomial, VariableContext
from src.domain.exceptions.domain_exceptions import (
    DimensionMismatchException,
    InvalidGeneratorSystemException,
)


class SystemMode(Enum):
    QUADRATIC_MODULE = "quadratic-module"
    PREORDERING = "preordering"


@dataclass(frozen=True)
class GeneratorSystem:
    """Generadores f_1..f_s de QM(f_1, ..., f_s); el generador implícito f_0 = 1 tiene índice 0"""
    ctx: VariableContext
    generators: Tuple[Polynomial, ...]
    mode: SystemMode = SystemMode.QUADRATIC_MODULE
    name: Optional[str] = None
    labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.generators:
            raise InvalidGeneratorSystemException("El sistema necesita al menos un generador")
        for index, generator in enumerate(self.generators, start=1):
            if generator.n != self.ctx.n:
                raise DimensionMismatchException(
                    f"El generador f_{index} tiene {generator.n} variables, el contexto {self.ctx.n}"
                )
            if generator.is_zero():
                raise InvalidGeneratorSystemException(f"El generador f_{index} es nulo")
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(g.to_string(self.ctx) for g in self.generators))
        elif len(self.labels) != len(self.generators):
            raise InvalidGeneratorSystemException("Debe haber tantas etiquetas como generadores")

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def size(self) -> int:
        return len(self.generators)

    def with_unit(self) -> List[Polynomial]:
        """Generadores con f_0 = 1 al principio (índice 0)"""
        return [Polynomial.one(self.n)] + list(self.generators)

    def as_preordering(self) -> 'GeneratorSystem':
        """Productos f_e = f_1^e_1 ... f_t^e_t, e en {0,1}^t sin e = 0, que generan PO(f_1..f_t) como módulo cuadrático

        Orden: por tamaño del subconjunto y después por índices.
        """
        if self.mode is SystemMode.PREORDERING:
            return self
        products: List[Polynomial] = []
        labels: List[str] = []
        for size in range(1, self.size + 1):
            for subset in combinations(range(self.size), size):
                product = Polynomial.one(self.n)
                for index in subset:
                    product = product * self.generators[index]
                products.append(product)
                labels.append("*".join(f"({self.labels[index]})" for index in subset)
                              if size > 1 else self.labels[subset[0]])
        return GeneratorSystem(self.ctx, tuple(products), SystemMode.PREORDERING, self.name, tuple(labels))
