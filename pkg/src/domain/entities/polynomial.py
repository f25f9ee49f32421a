import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.domain.exceptions.domain_exceptions import (
    DimensionMismatchException,
    DomainException,
)

ExponentVector = Tuple[int, ...]
Scalar = Union[int, Fraction]

_IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


def graded_lex_key(exponent: ExponentVector) -> Tuple:
    """Clave de orden graduado-lexicográfico usada para el almacenamiento canónico"""
    return (sum(exponent), exponent)


def to_rational(value) -> Fraction:
    """Convierte enteros y racionales exactos a Fraction; rechaza flotantes"""
    if isinstance(value, bool) or not isinstance(value, numbers.Rational):
        raise DomainException(f"Coeficiente no racional: {value!r}")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass(frozen=True)
class VariableContext:
    """Nombres de las variables; la posición en la lista fija el índice de coordenada"""
    names: Tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise DomainException("El contexto de variables no puede estar vacío")
        for name in self.names:
            if not _IDENTIFIER.match(name):
                raise DomainException(f"Nombre de variable inválido: '{name}'")
        if len(set(self.names)) != len(self.names):
            raise DomainException("Los nombres de variables deben ser distintos")

    @classmethod
    def from_names(cls, names: Iterable[str]) -> 'VariableContext':
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> Optional[int]:
        try:
            return self.names.index(name)
        except ValueError:
            return None


class Polynomial:
    """Polinomio disperso en n variables con coeficientes racionales exactos.

    Los términos se guardan sin coeficientes nulos y ordenados por la clave
    graduado-lexicográfica, de modo que dos polinomios iguales tienen
    exactamente el mismo mapa de términos. Las instancias son inmutables.
    """

    __slots__ = ('_n', '_terms', '_hash')

    def __init__(self, n: int, terms: Optional[Mapping[ExponentVector, Scalar]] = None):
        if not isinstance(n, int) or n < 1:
            raise DomainException(f"El número de variables debe ser >= 1 (recibido {n!r})")
        clean: Dict[ExponentVector, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            key = self._check_exponent(exponent, n)
            value = to_rational(coefficient)
            if value != 0:
                clean[key] = value
        self._n = n
        self._terms = {key: clean[key] for key in sorted(clean, key=graded_lex_key)}
        self._hash = None

    @staticmethod
    def _check_exponent(exponent: Sequence[int], n: int) -> ExponentVector:
        key = tuple(int(e) for e in exponent)
        if len(key) != n:
            raise DimensionMismatchException(
                f"El exponente {key} no tiene longitud {n}"
            )
        if any(e < 0 for e in key):
            raise DomainException(f"Exponente con entradas negativas: {key}")
        return key

    # Constructores

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Tuple[ExponentVector, Scalar]]) -> 'Polynomial':
        """Construye sumando términos repetidos (el orden de inserción no importa)"""
        accumulated: Dict[ExponentVector, Fraction] = {}
        for exponent, coefficient in terms:
            key = cls._check_exponent(exponent, n)
            accumulated[key] = accumulated.get(key, Fraction(0)) + to_rational(coefficient)
        return cls(n, accumulated)

    @classmethod
    def zero(cls, n: int) -> 'Polynomial':
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: Scalar) -> 'Polynomial':
        return cls(n, {(0,) * n: value})

    @classmethod
    def one(cls, n: int) -> 'Polynomial':
        return cls.constant(n, 1)

    @classmethod
    def monomial(cls, exponent: ExponentVector, coefficient: Scalar = 1) -> 'Polynomial':
        return cls(len(exponent), {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, index: int, n: int) -> 'Polynomial':
        if not 0 <= index < n:
            raise DimensionMismatchException(f"Índice de variable {index} fuera de rango para n={n}")
        exponent = [0] * n
        exponent[index] = 1
        return cls(n, {tuple(exponent): 1})

    # Consultas

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[ExponentVector, Fraction]:
        return MappingProxyType(self._terms)

    def support(self) -> List[ExponentVector]:
        return list(self._terms)

    def coefficient(self, exponent: ExponentVector) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(exponent) == 0 for exponent in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, tuple(self._terms.items())))
        return self._hash

    # Aritmética del anillo

    def _check_same_ring(self, other: 'Polynomial'):
        if self._n != other._n:
            raise DimensionMismatchException(
                f"Polinomios con distinto número de variables ({self._n} vs {other._n})"
            )

    def _coerce(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            self._check_same_ring(other)
            return other
        return Polynomial.constant(self._n, to_rational(other))

    def __add__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            result[exponent] = result.get(exponent, Fraction(0)) + coefficient
        return Polynomial(self._n, result)

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial(self._n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> 'Polynomial':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'Polynomial':
        return self._coerce(other) - self

    def __mul__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        result: Dict[ExponentVector, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self._n, result)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> 'Polynomial':
        value = to_rational(factor)
        return Polynomial(self._n, {e: c * value for e, c in self._terms.items()})

    def __pow__(self, exponent: int) -> 'Polynomial':
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainException(f"Exponente no natural: {exponent!r}")
        result = Polynomial.one(self._n)
        base = self
        # exponenciación binaria
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # Evaluación

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Evalúa exactamente en un punto racional de longitud n"""
        if len(point) != self._n:
            raise DimensionMismatchException(
                f"El punto tiene {len(point)} coordenadas, se esperaban {self._n}"
            )
        values = [to_rational(x) for x in point]
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            term = coefficient
            for x, e in zip(values, exponent):
                if e:
                    term *= x ** e
            total += term
        return total

    # Representación

    def to_string(self, ctx: Optional[VariableContext] = None) -> str:
        """Imprime en la gramática del parser, términos de mayor a menor grado"""
        if ctx is None:
            ctx = VariableContext(tuple(f"x{i}" for i in range(self._n)))
        elif ctx.n != self._n:
            raise DimensionMismatchException("El contexto no coincide con el número de variables")
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for exponent in reversed(list(self._terms)):
            coefficient = self._terms[exponent]
            factors = []
            for name, e in zip(ctx.names, exponent):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial(n={self._n}, {self.to_string()!r})"
