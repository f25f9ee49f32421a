from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

from src.domain.entities.polynomial import ExponentVector
from src.domain.exceptions.domain_exceptions import DimensionMismatchException, DomainException
from src.domain.gradings.z_grading import ZVector


class Relation(Enum):
    GE = ">="
    GT = ">"


@dataclass(frozen=True)
class LinearRow:
    """Fila a·x (>= | >) b con coeficientes racionales"""
    coefficients: Tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    def is_satisfied(self, point: Sequence[Fraction]) -> bool:
        lhs = sum((a * x for a, x in zip(self.coefficients, point)), Fraction(0))
        if self.relation is Relation.GT:
            return lhs > self.rhs
        return lhs >= self.rhs


@dataclass(frozen=True)
class LinearSystem:
    """Sistema de desigualdades lineales con un número común de variables"""
    rows: Tuple[LinearRow, ...]

    def __post_init__(self):
        if self.rows:
            width = len(self.rows[0].coefficients)
            if any(len(row.coefficients) != width for row in self.rows):
                raise DimensionMismatchException("Las filas del sistema tienen longitudes distintas")

    @classmethod
    def build(cls, rows: Sequence[Tuple[Sequence, Relation, object]]) -> 'LinearSystem':
        return cls(tuple(
            LinearRow(tuple(Fraction(a) for a in coefficients), relation, Fraction(rhs))
            for coefficients, relation, rhs in rows
        ))

    @property
    def variable_count(self) -> int:
        return len(self.rows[0].coefficients) if self.rows else 0

    def is_satisfied(self, point: Sequence[Fraction]) -> bool:
        return all(row.is_satisfied(point) for row in self.rows)


def combination(multipliers: Sequence[int], zs: Sequence[ZVector]) -> Tuple[int, ...]:
    """Suma r_1 z^(1) + ... + r_m z^(m)"""
    if len(multipliers) != len(zs):
        raise DimensionMismatchException("Número de multiplicadores distinto al de vectores z")
    n = zs[0].n
    return tuple(sum(r * z.entries[i] for r, z in zip(multipliers, zs)) for i in range(n))


@dataclass(frozen=True)
class Multipliers:
    """r en N^m con r_1 z^(1) + ... + r_m z^(m) > 0 en cada coordenada"""
    r: Tuple[int, ...]

    def verify(self, zs: Sequence[ZVector]) -> bool:
        if len(self.r) != len(zs) or any(value < 0 for value in self.r):
            return False
        return all(entry > 0 for entry in combination(self.r, zs))


@dataclass(frozen=True)
class FarkasWitness:
    """d en N^n, d != 0, con d·z^(j) <= 0 para todo j"""
    delta: ExponentVector

    def verify(self, zs: Sequence[ZVector]) -> bool:
        if any(z.n != len(self.delta) for z in zs):
            return False
        if any(e < 0 for e in self.delta) or all(e == 0 for e in self.delta):
            return False
        return all(z.dot(self.delta) <= 0 for z in zs)


FeasibilityOutcome = Union[Multipliers, FarkasWitness]


@dataclass(frozen=True)
class OnlyConstants:
    """Las únicas funciones polinomiales acotadas en la unión de tentáculos son constantes"""
    multipliers: Multipliers


@dataclass(frozen=True)
class BoundedWitness:
    """El monomio X^delta es no constante y acotado en la unión de tentáculos"""
    delta: ExponentVector


BoundedMonomialsOutcome = Union[OnlyConstants, BoundedWitness]


@dataclass(frozen=True)
class CoveringCertificate:
    """r, t en N^m con sum r_j z^(j) >= z y t_j z >= z^(j) (componente a componente)"""
    r: Tuple[int, ...]
    t: Tuple[int, ...]

    def verify(self, z: ZVector, zs: Sequence[ZVector]) -> bool:
        if len(self.r) != len(zs) or len(self.t) != len(zs):
            return False
        if any(value < 0 for value in self.r + self.t):
            return False
        total = combination(self.r, zs)
        if any(a < b for a, b in zip(total, z.entries)):
            return False
        for t_j, z_j in zip(self.t, zs):
            if any(t_j * a < b for a, b in zip(z.entries, z_j.entries)):
                return False
        return True


class CoveringStatus(Enum):
    COVERED = "Covered"
    NOT_COVERED = "NotCovered"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CoveringResult:
    status: CoveringStatus
    certificate: Optional[CoveringCertificate] = None

    def __post_init__(self):
        if (self.status is CoveringStatus.COVERED) != (self.certificate is not None):
            raise DomainException("Solo un resultado Covered lleva certificado")


def integer_vector(values: Sequence[Fraction]) -> List[int]:
    """Escala un vector racional por el mcm de sus denominadores"""
    scale = lcm(*(value.denominator for value in values)) if values else 1
    return [int(value * scale) for value in values]
