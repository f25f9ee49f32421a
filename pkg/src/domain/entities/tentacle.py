from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.domain.exceptions.domain_exceptions import InvalidTentacleException
from src.domain.gradings.z_grading import ZVector


@dataclass(frozen=True)
class TentacleSpec:
    """Tentáculo {(l^z_1 x_1, ..., l^z_n x_n) | l >= 1, x en K} con K una caja racional"""
    z: ZVector
    box: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.box) != self.z.n:
            raise InvalidTentacleException(
                f"La caja tiene {len(self.box)} intervalos y z {self.z.n} entradas"
            )
        for low, high in self.box:
            if not low < high:
                raise InvalidTentacleException(f"Intervalo degenerado [{low}, {high}]")


@dataclass(frozen=True)
class TentacleViolation:
    generator_index: int
    lam: Fraction
    base_point: Tuple[Fraction, ...]
    value: Fraction


@dataclass(frozen=True)
class TentacleReport:
    points_checked: int
    violations: Tuple[TentacleViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations
