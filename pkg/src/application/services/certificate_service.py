import logging
from typing import Set

from src.application.services.stability_service import StabilityService
from src.domain.entities.feasibility import FarkasWitness, Multipliers
from src.domain.entities.generator_system import GeneratorSystem
from src.domain.entities.verdict import (
    DirectionCertificate,
    StabilityVerdict,
    TermOrderCertificate,
    VerdictScope,
    VerdictStatus,
)
from src.domain.exceptions.service_exceptions import CertificateException
from src.domain.gradings import TermOrderGrading, ZGrading

logger = logging.getLogger(__name__)


class CertificateService:
    """Re-verificación exacta de un veredicto contra su sistema de generadores"""

    @staticmethod
    def verify_certificate(verdict: StabilityVerdict, system: GeneratorSystem) -> bool:
        """True si cada eslabón del certificado se cumple al recalcularlo

        Lanza CertificateException si el veredicto no corresponde estructuralmente al sistema.
        """
        _check_structure(verdict, system)
        if verdict.status is VerdictStatus.NOT_TOTALLY_STABLE:
            return _verify_violation(verdict, system)
        if verdict.term_order is not None:
            return _verify_term_order(verdict, system)

        for direction in verdict.directions:
            if not _verify_direction(direction, system):
                logger.info("Testigos inválidos para z=(%s)", direction.z)
                return False
        zs = [direction.z for direction in verdict.directions]

        if verdict.status is VerdictStatus.UNKNOWN:
            if verdict.obstruction is not None:
                return bool(zs) and FarkasWitness(verdict.obstruction).verify(zs)
            return True

        if not verdict.directions:
            return False
        if verdict.multipliers is not None:
            if not Multipliers(verdict.multipliers).verify(zs):
                logger.info("Los multiplicadores %s no dan una combinación positiva", verdict.multipliers)
                return False
            finite = True
        else:
            if len(zs) != 1:
                return False
            finite = zs[0].is_positive()
        return _consequences_allowed(verdict, finite)

    @staticmethod
    def verify_direction(direction: DirectionCertificate, system: GeneratorSystem) -> bool:
        return _verify_direction(direction, system)


def _check_structure(verdict: StabilityVerdict, system: GeneratorSystem):
    if verdict.n != system.n or verdict.generator_count != system.size:
        raise CertificateException(
            f"El veredicto es para n={verdict.n}, s={verdict.generator_count}; "
            f"el sistema tiene n={system.n}, s={system.size}"
        )
    for direction in verdict.directions:
        if direction.z.n != system.n:
            raise CertificateException(f"La dirección z=({direction.z}) no tiene {system.n} entradas")
        for witness in direction.witnesses:
            if len(witness.point) != system.n:
                raise CertificateException(f"El testigo {witness.point} no tiene {system.n} coordenadas")
            if any(index < 0 or index > system.size for index in witness.indices):
                raise CertificateException(f"Índices de generador fuera de rango: {witness.indices}")
    if verdict.obstruction is not None and len(verdict.obstruction) != system.n:
        raise CertificateException("La obstrucción de Farkas no tiene la dimensión del sistema")
    if verdict.term_order is not None and verdict.term_order.order.n != system.n:
        raise CertificateException("El orden de términos no tiene la dimensión del sistema")


def _consequences_allowed(verdict: StabilityVerdict, finite: bool) -> bool:
    expected_scope = VerdictScope.STABLE if finite else VerdictScope.TOTALLY_STABLE
    if verdict.scope is not expected_scope:
        return False
    if verdict.consequences.closed and not finite:
        return False
    if verdict.consequences.fails_smp and not (finite and verdict.n >= 2):
        return False
    return True


def _verify_direction(direction: DirectionCertificate, system: GeneratorSystem) -> bool:
    grading = ZGrading(direction.z)
    polynomials = system.with_unit()
    partition = StabilityService.partition_mod_two(system, grading)
    covered: Set[int] = set()
    for witness in direction.witnesses:
        members = set(witness.indices)
        # con varios testigos cada grupo debe ser unión de clases
        if len(direction.witnesses) > 1:
            for residue_class in partition.classes:
                overlap = members.intersection(residue_class.indices)
                if overlap and len(overlap) != len(residue_class.indices):
                    return False
        for index, value in zip(witness.indices, witness.values):
            actual = grading.max_part(polynomials[index]).evaluate(witness.point)
            if actual != value or actual <= 0:
                return False
        covered |= members
    return covered.issuperset(range(1, system.size + 1))


def _recomputed_analyses(certificate: TermOrderCertificate, system: GeneratorSystem):
    partition = StabilityService.partition_mod_two(system, TermOrderGrading(certificate.order))
    return tuple(
        StabilityService.analyze_class(system, certificate.order, residue_class)
        for residue_class in partition.classes
    )


def _verify_term_order(verdict: StabilityVerdict, system: GeneratorSystem) -> bool:
    certificate = verdict.term_order
    if certificate.classes != _recomputed_analyses(certificate, system):
        logger.info("El análisis de clases no coincide con el recalculado")
        return False
    if verdict.status is VerdictStatus.STABLE:
        if not all(analysis.sign_rule_holds() for analysis in certificate.classes):
            return False
        return _consequences_allowed(verdict, TermOrderGrading(certificate.order).is_finite_dimensional())
    return False


def _verify_violation(verdict: StabilityVerdict, system: GeneratorSystem) -> bool:
    if verdict.term_order is None or verdict.violation is None:
        return False
    if verdict.term_order.classes != _recomputed_analyses(verdict.term_order, system):
        return False
    return verdict.violation in verdict.term_order.classes and not verdict.violation.sign_rule_holds()
