from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from src.domain.entities.polynomial import ExponentVector
from src.domain.exceptions.domain_exceptions import DomainException
from src.domain.gradings.grading_interface import GradingInterface
from src.domain.gradings.term_order import TermOrder
from src.domain.gradings.z_grading import ZVector


class VerdictStatus(Enum):
    STABLE = "Stable"
    NOT_TOTALLY_STABLE = "NotTotallyStable"
    UNKNOWN = "Unknown"


class VerdictScope(Enum):
    """Qué afirma un veredicto Stable"""
    STABLE = "stable"
    TOTALLY_STABLE = "totally-stable"


class ChainStep(Enum):
    """Resultados aplicados, en el orden en que se encadenan"""
    MOD_TWO_REDUCTION = "mod-two-reduction"
    DENSE_HIGHEST_PARTS = "dense-highest-parts"
    TENTACLE_CONTAINMENT = "tentacle-containment"
    COVERING = "covering"
    STABILITY_TRANSFER = "stability-transfer"
    POSITIVE_COMBINATION = "positive-combination"
    TERM_ORDER_SIGN_RULE = "term-order-sign-rule"


@dataclass(frozen=True)
class ResidueClass:
    """Generadores (índice 0 = f_0 = 1) cuyos grados coinciden módulo 2·Gamma"""
    label: str
    residue: Tuple[int, ...]
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class ClassPartition:
    classes: Tuple[ResidueClass, ...]
    grading: GradingInterface

    def class_of(self, index: int) -> ResidueClass:
        for residue_class in self.classes:
            if index in residue_class.indices:
                return residue_class
        raise DomainException(f"El índice {index} no pertenece a ninguna clase")


@dataclass(frozen=True)
class PositivityWitness:
    """Punto racional donde las partes de mayor grado de los generadores `indices` son > 0"""
    point: Tuple[Fraction, ...]
    values: Tuple[Fraction, ...]
    indices: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.indices):
            raise DomainException("Cada valor del testigo necesita su índice de generador")


@dataclass(frozen=True)
class DirectionCertificate:
    """Testigos de positividad para las partes de mayor grado respecto de z"""
    z: ZVector
    witnesses: Tuple[PositivityWitness, ...]


@dataclass(frozen=True)
class ClassAnalysis:
    """Términos líderes de una clase módulo 2Z^n respecto de un orden de términos"""
    label: str
    residue: Tuple[int, ...]
    indices: Tuple[int, ...]
    leading_exponents: Tuple[ExponentVector, ...]
    leading_coefficients: Tuple[Fraction, ...]

    def sign_rule_holds(self) -> bool:
        """Mismo signo en toda la clase, y positivo si el residuo es 0"""
        if not self.leading_coefficients:
            return True
        if all(e == 0 for e in self.residue):
            return all(c > 0 for c in self.leading_coefficients)
        return all(c > 0 for c in self.leading_coefficients) or all(
            c < 0 for c in self.leading_coefficients
        )


@dataclass(frozen=True)
class TermOrderCertificate:
    order: TermOrder
    classes: Tuple[ClassAnalysis, ...]


@dataclass(frozen=True)
class Consequences:
    closed: bool = False
    fails_smp: bool = False


@dataclass(frozen=True)
class StabilityVerdict:
    """Veredicto de estabilidad con su cadena de resultados y certificados verificables"""
    status: VerdictStatus
    n: int
    generator_count: int
    chain: Tuple[ChainStep, ...] = ()
    scope: VerdictScope = VerdictScope.STABLE
    consequences: Consequences = field(default_factory=Consequences)
    directions: Tuple[DirectionCertificate, ...] = ()
    multipliers: Optional[Tuple[int, ...]] = None
    term_order: Optional[TermOrderCertificate] = None
    unknown_directions: Tuple[ZVector, ...] = ()
    obstruction: Optional[ExponentVector] = None
    violation: Optional[ClassAnalysis] = None
    note: str = ""

    def __post_init__(self):
        if self.consequences.fails_smp and self.n < 2:
            raise DomainException("El fallo de la SMP solo se afirma en dimensión >= 2")
        if self.status is not VerdictStatus.STABLE and (
            self.consequences.closed or self.consequences.fails_smp
        ):
            raise DomainException("Solo un veredicto Stable tiene consecuencias")
        if self.status is VerdictStatus.NOT_TOTALLY_STABLE and self.violation is None:
            raise DomainException("Un veredicto NotTotallyStable necesita la clase que lo viola")

    @property
    def is_stable(self) -> bool:
        return self.status is VerdictStatus.STABLE
