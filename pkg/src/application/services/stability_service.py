import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Dict, List, Sequence, Tuple

from src.application.dtos.search_config import SearchConfig
from src.application.services.feasibility_service import FeasibilityService
from src.application.services.grading_service import GradingService
from src.application.services.positivity_search_service import PositivitySearchService
from src.domain.entities.feasibility import Multipliers
from src.domain.entities.generator_system import GeneratorSystem
from src.domain.entities.tentacle import TentacleReport, TentacleSpec, TentacleViolation
from src.domain.entities.verdict import (
    ChainStep,
    ClassAnalysis,
    ClassPartition,
    Consequences,
    DirectionCertificate,
    ResidueClass,
    StabilityVerdict,
    TermOrderCertificate,
    VerdictScope,
    VerdictStatus,
)
from src.domain.exceptions.domain_exceptions import (
    DimensionMismatchException,
    InvalidGradingException,
    InvalidTentacleException,
)
from src.domain.exceptions.service_exceptions import ServiceException
from src.domain.gradings import GradingInterface, TermOrder, TermOrderGrading, ZGrading, ZVector

logger = logging.getLogger(__name__)

_DIRECTION_CHAIN = (ChainStep.DENSE_HIGHEST_PARTS, ChainStep.TENTACLE_CONTAINMENT)
_COMBINATION_CHAIN = (
    ChainStep.COVERING,
    ChainStep.STABILITY_TRANSFER,
    ChainStep.POSITIVE_COMBINATION,
)


def residue_label(grading: GradingInterface, residue: Tuple[int, ...]) -> str:
    """"0"/"1" para z-graduaciones, "(a,b,...)" para órdenes de términos"""
    if isinstance(grading, ZGrading):
        return str(residue[0])
    return "(" + ",".join(str(e) for e in residue) + ")"


def _consequences(finite_dimensional: bool, n: int) -> Consequences:
    return Consequences(closed=finite_dimensional, fails_smp=finite_dimensional and n >= 2)


class StabilityService:
    """Criterios de estabilidad: reducción módulo 2, orden de términos, z-direcciones y su combinación"""

    @staticmethod
    def partition_mod_two(system: GeneratorSystem, grading: GradingInterface) -> ClassPartition:
        if grading.n != system.n:
            raise DimensionMismatchException(
                f"La graduación tiene {grading.n} variables y el sistema {system.n}"
            )
        groups: Dict[Tuple[int, ...], List[int]] = {}
        for index, generator in enumerate(system.with_unit()):
            residue = grading.degree(generator).residue_mod_two()
            groups.setdefault(residue, []).append(index)
        classes = tuple(
            ResidueClass(residue_label(grading, residue), residue, tuple(indices))
            for residue, indices in groups.items()
        )
        return ClassPartition(classes, grading)

    @staticmethod
    def term_order_total_stability(system: GeneratorSystem, order: TermOrder) -> StabilityVerdict:
        """Regla de signos por clase; criterio exacto, nunca devuelve Unknown"""
        if order.n != system.n:
            raise DimensionMismatchException(
                f"El orden tiene {order.n} variables y el sistema {system.n}"
            )
        grading = TermOrderGrading(order)
        partition = StabilityService.partition_mod_two(system, grading)
        analyses = tuple(
            StabilityService.analyze_class(system, order, residue_class)
            for residue_class in partition.classes
        )
        certificate = TermOrderCertificate(order, analyses)
        chain = (ChainStep.MOD_TWO_REDUCTION, ChainStep.TERM_ORDER_SIGN_RULE)

        violation = next((a for a in analyses if not a.sign_rule_holds()), None)
        if violation is not None:
            logger.info("Orden %s: la clase %s viola la regla de signos", order, violation.label)
            return StabilityVerdict(
                status=VerdictStatus.NOT_TOTALLY_STABLE,
                n=system.n,
                generator_count=system.size,
                chain=chain,
                term_order=certificate,
                violation=violation,
                note=f"Coeficientes líderes de signo incompatible en la clase {violation.label}",
            )

        finite = grading.is_finite_dimensional()
        logger.info("Orden %s: totalmente estable (finito=%s)", order, finite)
        return StabilityVerdict(
            status=VerdictStatus.STABLE,
            n=system.n,
            generator_count=system.size,
            chain=chain,
            scope=VerdictScope.STABLE if finite else VerdictScope.TOTALLY_STABLE,
            consequences=_consequences(finite, system.n),
            term_order=certificate,
        )

    @staticmethod
    def analyze_class(system: GeneratorSystem, order: TermOrder, residue_class: ResidueClass) -> ClassAnalysis:
        polynomials = system.with_unit()
        leads = [GradingService.term_order_leading(polynomials[i], order) for i in residue_class.indices]
        return ClassAnalysis(
            label=residue_class.label,
            residue=residue_class.residue,
            indices=residue_class.indices,
            leading_exponents=tuple(exponent for exponent, _ in leads),
            leading_coefficients=tuple(coefficient for _, coefficient in leads),
        )

    @staticmethod
    def z_total_stability(system: GeneratorSystem, z: ZVector, cfg: SearchConfig) -> StabilityVerdict:
        """Stable si las partes de mayor grado tienen un punto común de positividad; si no, Unknown"""
        if z.n != system.n:
            raise DimensionMismatchException(f"z tiene {z.n} entradas y el sistema {system.n} variables")
        grading = ZGrading(z)
        polynomials = system.with_unit()
        if cfg.by_class:
            partition = StabilityService.partition_mod_two(system, grading)
            groups = [residue_class.indices for residue_class in partition.classes]
            chain = (ChainStep.MOD_TWO_REDUCTION,) + _DIRECTION_CHAIN
        else:
            groups = [tuple(range(1, system.size + 1))]
            chain = _DIRECTION_CHAIN

        witnesses = []
        for group in groups:
            parts = [grading.max_part(polynomials[i]) for i in group]
            witness = PositivitySearchService.find_positivity_witness(parts, cfg, group)
            if witness is None:
                logger.info("z=(%s): sin testigo para los generadores %s", z, group)
                return StabilityVerdict(
                    status=VerdictStatus.UNKNOWN,
                    n=system.n,
                    generator_count=system.size,
                    unknown_directions=(z,),
                    note=f"Sin testigo de positividad para z=({z}) con el presupuesto dado",
                )
            witnesses.append(witness)

        finite = z.is_positive()
        logger.info("z=(%s): totalmente estable con %d testigo(s)", z, len(witnesses))
        return StabilityVerdict(
            status=VerdictStatus.STABLE,
            n=system.n,
            generator_count=system.size,
            chain=chain,
            scope=VerdictScope.STABLE if finite else VerdictScope.TOTALLY_STABLE,
            consequences=_consequences(finite, system.n),
            directions=(DirectionCertificate(z, tuple(witnesses)),),
        )

    @staticmethod
    def stability_verdict(system: GeneratorSystem, zs: Sequence[ZVector], cfg: SearchConfig) -> StabilityVerdict:
        """Combina varias direcciones: Stable si las direcciones estables admiten r con sum r_j z^(j) > 0"""
        if not zs:
            raise ServiceException("Se necesita al menos un vector z")

        def run(z: ZVector) -> StabilityVerdict:
            return StabilityService.z_total_stability(system, z, cfg)

        if cfg.max_workers > 1 and len(zs) > 1:
            with ThreadPoolExecutor(max_workers=cfg.max_workers) as executor:
                results = list(executor.map(run, zs))
        else:
            results = [run(z) for z in zs]

        directions = tuple(d for result in results if result.is_stable for d in result.directions)
        unknown = tuple(z for z, result in zip(zs, results) if not result.is_stable)
        prefix = (ChainStep.MOD_TWO_REDUCTION,) if cfg.by_class else ()

        if not directions:
            return StabilityVerdict(
                status=VerdictStatus.UNKNOWN,
                n=system.n,
                generator_count=system.size,
                unknown_directions=unknown,
                note="Ninguna dirección quedó certificada",
            )

        outcome = FeasibilityService.positive_combination([d.z for d in directions])
        if isinstance(outcome, Multipliers):
            logger.info("Combinación positiva r=%s", outcome.r)
            return StabilityVerdict(
                status=VerdictStatus.STABLE,
                n=system.n,
                generator_count=system.size,
                chain=prefix + _DIRECTION_CHAIN + _COMBINATION_CHAIN,
                scope=VerdictScope.STABLE,
                consequences=_consequences(True, system.n),
                directions=directions,
                multipliers=outcome.r,
                unknown_directions=unknown,
            )

        logger.info("Obstrucción de Farkas delta=%s", outcome.delta)
        return StabilityVerdict(
            status=VerdictStatus.UNKNOWN,
            n=system.n,
            generator_count=system.size,
            chain=prefix + _DIRECTION_CHAIN,
            directions=directions,
            unknown_directions=unknown,
            obstruction=outcome.delta,
            note="Las direcciones certificadas no admiten una combinación positiva",
        )

    @staticmethod
    def tentacle_sample_check(
        system: GeneratorSystem,
        tentacle: TentacleSpec,
        lambdas: Sequence[Fraction],
        grid: int,
    ) -> TentacleReport:
        """Evalúa los generadores en (l^z_1 x_1, ..., l^z_n x_n) sobre una rejilla de la caja

        Solo sirve para refutar la inclusión del tentáculo, no para probarla.
        """
        if tentacle.z.n != system.n:
            raise DimensionMismatchException("El tentáculo y el sistema tienen dimensiones distintas")
        if grid < 1:
            raise InvalidTentacleException(f"La rejilla debe ser >= 1 (recibido {grid})")
        if not lambdas:
            raise InvalidTentacleException("Se necesita al menos un valor de lambda")
        lambdas = [Fraction(value) for value in lambdas]
        if any(value < 1 for value in lambdas):
            raise InvalidTentacleException("Todos los valores de lambda deben ser >= 1")

        axes = [_grid_axis(low, high, grid) for low, high in tentacle.box]
        violations: List[TentacleViolation] = []
        checked = 0
        for lam in lambdas:
            for base in product(*axes):
                point = tuple(lam ** z_i * x_i for z_i, x_i in zip(tentacle.z.entries, base))
                checked += 1
                for index, generator in enumerate(system.generators, start=1):
                    value = generator.evaluate(point)
                    if value < 0:
                        violations.append(TentacleViolation(index, lam, tuple(base), value))
        logger.info("Tentáculo z=(%s): %d puntos, %d violaciones", tentacle.z, checked, len(violations))
        return TentacleReport(checked, tuple(violations))

    @staticmethod
    def suggest_z_vectors(system: GeneratorSystem, bound: int, include_negatives: bool = True) -> List[ZVector]:
        """Vectores primitivos con |z|_inf <= bound, ordenados por |z|_inf y después lexicográficamente

        Con include_negatives=False solo se conservan los de primera entrada no nula positiva.
        """
        if bound < 1:
            raise InvalidGradingException(f"La cota debe ser >= 1 (recibido {bound})")
        candidates = []
        for entries in product(range(-bound, bound + 1), repeat=system.n):
            if all(e == 0 for e in entries) or gcd(*entries) != 1:
                continue
            if not include_negatives and next(e for e in entries if e != 0) < 0:
                continue
            candidates.append(entries)
        candidates.sort(key=lambda entries: (max(abs(e) for e in entries), entries))
        return [ZVector(entries) for entries in candidates]


def _grid_axis(low: Fraction, high: Fraction, grid: int) -> List[Fraction]:
    if grid == 1:
        return [(low + high) / 2]
    step = (high - low) / (grid - 1)
    return [low + step * k for k in range(grid)]
