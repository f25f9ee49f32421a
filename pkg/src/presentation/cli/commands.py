import argparse
import logging
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List

from src.application.dtos.report import (
    BoundedModel,
    CoveringModel,
    ExampleRunModel,
    Report,
    ReportMapper,
    TentacleModel,
    TentacleViolationModel,
)
from src.application.dtos.search_config import SearchConfig
from src.application.services.certificate_service import CertificateService
from src.application.services.feasibility_service import FeasibilityService
from src.application.services.grading_service import GradingService
from src.application.services.stability_service import StabilityService
from src.application.services.system_file_service import SystemFileService
from src.domain.entities.feasibility import CoveringStatus, OnlyConstants
from src.domain.entities.generator_system import GeneratorSystem
from src.domain.entities.polynomial import Polynomial, VariableContext
from src.domain.entities.tentacle import TentacleSpec
from src.domain.entities.verdict import StabilityVerdict, VerdictStatus
from src.domain.exceptions.domain_exceptions import InvalidTentacleException
from src.domain.exceptions.service_exceptions import CertificateException, ServiceException
from src.domain.gradings import ZVector
from src.infrastructure.config.settings import Settings
from src.infrastructure.io.example_catalog import EXAMPLES, ExampleCase
from src.infrastructure.io.system_file_reader import SystemFileReader

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNKNOWN = 2
EXIT_NEGATIVE = 3

_VERDICT_EXIT = {
    VerdictStatus.STABLE: EXIT_OK,
    VerdictStatus.UNKNOWN: EXIT_UNKNOWN,
    VerdictStatus.NOT_TOTALLY_STABLE: EXIT_NEGATIVE,
}
_DEFAULT_LAMBDAS = ("1", "2", "4")


class CommandHandlers:
    """Un método por comando; cada uno devuelve el informe con su código de salida"""

    def __init__(self, settings: Settings):
        self.settings = settings

    def handler_for(self, command: str) -> Callable[[argparse.Namespace], Report]:
        handlers: Dict[str, Callable[[argparse.Namespace], Report]] = {
            "check": self.check,
            "term-order": self.term_order,
            "bounded": self.bounded,
            "covering": self.covering,
            "tentacle-sample": self.tentacle_sample,
            "suggest-z": self.suggest_z,
            "examples": self.examples,
        }
        return handlers[command]

    def search_config(self, args: argparse.Namespace) -> SearchConfig:
        return self.settings.search_config(
            seed=getattr(args, "seed", None),
            max_scale=getattr(args, "max_scale", None),
            samples_per_scale=getattr(args, "samples", None),
            denom_bound=getattr(args, "denom_bound", None),
            max_workers=getattr(args, "workers", None),
            preordering=getattr(args, "preordering", False),
            by_class=getattr(args, "by_class", False),
        )

    @staticmethod
    def load_system(path: str, preordering: bool) -> GeneratorSystem:
        return SystemFileService.build_system(SystemFileReader.read(path), preordering)

    def check(self, args: argparse.Namespace) -> Report:
        cfg = self.search_config(args)
        system = self.load_system(args.file, cfg.preordering)
        if args.verify:
            return self._verify_saved(args, cfg, system)
        if not args.z:
            raise ServiceException("check necesita al menos un --z")
        zs = [GradingService.parse_z_vector(text, system.n) for text in args.z]
        verdict = StabilityService.stability_verdict(system, zs, cfg)
        return self._verdict_report(args, cfg, system, verdict)

    def term_order(self, args: argparse.Namespace) -> Report:
        cfg = self.search_config(args)
        system = self.load_system(args.file, cfg.preordering)
        if args.verify:
            return self._verify_saved(args, cfg, system)
        order = GradingService.parse_term_order(args.order, system.ctx)
        verdict = StabilityService.term_order_total_stability(system, order)
        return self._verdict_report(args, cfg, system, verdict)

    def bounded(self, args: argparse.Namespace) -> Report:
        zs = _parse_vectors(args.z)
        outcome = FeasibilityService.bounded_monomials(zs)
        if isinstance(outcome, OnlyConstants):
            model = BoundedModel(outcome="OnlyConstants", multipliers=list(outcome.multipliers.r))
            code = EXIT_OK
        else:
            ctx = default_context(len(outcome.delta))
            model = BoundedModel(
                outcome="Witness",
                delta=list(outcome.delta),
                monomial=Polynomial.monomial(outcome.delta).to_string(ctx),
            )
            code = EXIT_NEGATIVE
        return Report(command=args.command, arguments=_echo(args), bounded=model, exit_code=code)

    def covering(self, args: argparse.Namespace) -> Report:
        target = _parse_vectors([args.target])[0]
        zs = [GradingService.parse_z_vector(text, target.n) for text in args.z]
        bound = args.bound if args.bound is not None else self.settings.cover_bound
        result = FeasibilityService.covering_check(target, zs, bound)
        certificate = result.certificate
        model = CoveringModel(
            status=result.status.value,
            r=list(certificate.r) if certificate else None,
            t=list(certificate.t) if certificate else None,
        )
        code = {
            CoveringStatus.COVERED: EXIT_OK,
            CoveringStatus.UNKNOWN: EXIT_UNKNOWN,
            CoveringStatus.NOT_COVERED: EXIT_NEGATIVE,
        }[result.status]
        return Report(command=args.command, arguments=_echo(args), covering=model, exit_code=code)

    def tentacle_sample(self, args: argparse.Namespace) -> Report:
        system = self.load_system(args.file, False)
        z = GradingService.parse_z_vector(args.z, system.n)
        box = tuple(_parse_interval(text) for text in args.box)
        tentacle = TentacleSpec(z, box)
        lambdas = [_parse_rational(text) for text in (args.lambdas or _DEFAULT_LAMBDAS)]
        result = StabilityService.tentacle_sample_check(system, tentacle, lambdas, args.grid)
        model = TentacleModel(
            z=list(z.entries),
            box=[[str(low), str(high)] for low, high in box],
            points_checked=result.points_checked,
            violations=[
                TentacleViolationModel(
                    generator_index=v.generator_index,
                    lam=str(v.lam),
                    base_point=[str(x) for x in v.base_point],
                    value=str(v.value),
                )
                for v in result.violations
            ],
        )
        return Report(
            command=args.command,
            arguments=_echo(args),
            system=ReportMapper.system_to_model(system),
            tentacle=model,
            exit_code=EXIT_OK if result.ok else EXIT_NEGATIVE,
        )

    def suggest_z(self, args: argparse.Namespace) -> Report:
        system = self.load_system(args.file, False)
        vectors = StabilityService.suggest_z_vectors(
            system, args.bound, include_negatives=not args.positive_leading
        )
        return Report(
            command=args.command,
            arguments=_echo(args),
            system=ReportMapper.system_to_model(system),
            suggestions=[list(z.entries) for z in vectors],
        )

    def examples(self, args: argparse.Namespace) -> Report:
        cfg = self.search_config(args)
        runs: List[ExampleRunModel] = [self._run_example(case, cfg) for case in EXAMPLES]
        mismatches = [run for run in runs if not run.matches]
        if not mismatches:
            code = EXIT_OK
        elif all(run.expected == "Stable" and run.status == "Unknown" and run.verified for run in mismatches):
            code = EXIT_UNKNOWN
        else:
            code = EXIT_NEGATIVE
        logger.info("Ejemplos: %d/%d coinciden", len(runs) - len(mismatches), len(runs))
        return Report(
            command=args.command,
            arguments=_echo(args),
            config=asdict(cfg),
            examples=runs,
            exit_code=code,
        )

    def _run_example(self, case: ExampleCase, cfg: SearchConfig) -> ExampleRunModel:
        system = self.load_system(str(case.path), cfg.preordering)
        if case.command == "term-order":
            order = GradingService.parse_term_order(case.order, system.ctx)
            verdict = StabilityService.term_order_total_stability(system, order)
        else:
            zs = [GradingService.parse_z_vector(text, system.n) for text in case.zs]
            verdict = StabilityService.stability_verdict(system, zs, cfg)
        verified = CertificateService.verify_certificate(verdict, system)
        return ExampleRunModel(
            name=case.name,
            command=case.describe(),
            expected=case.expected,
            status=verdict.status.value,
            matches=verdict.status.value == case.expected and verified,
            verified=verified,
        )

    def _verdict_report(
        self, args: argparse.Namespace, cfg: SearchConfig, system: GeneratorSystem, verdict: StabilityVerdict
    ) -> Report:
        return Report(
            command=args.command,
            arguments=_echo(args),
            config=asdict(cfg),
            system=ReportMapper.system_to_model(system),
            verdict=ReportMapper.verdict_to_model(verdict, system),
            exit_code=_VERDICT_EXIT[verdict.status],
        )

    def _verify_saved(self, args: argparse.Namespace, cfg: SearchConfig, system: GeneratorSystem) -> Report:
        verdict = ReportMapper.verdict_from_payload(Path(args.verify).read_text(encoding="utf-8"))
        try:
            valid = CertificateService.verify_certificate(verdict, system)
        except CertificateException as e:
            logger.warning("Certificado incompatible con el sistema: %s", e)
            valid = False
        return Report(
            command=args.command,
            arguments=_echo(args),
            config=asdict(cfg),
            system=ReportMapper.system_to_model(system),
            verdict=ReportMapper.verdict_to_model(verdict, system) if valid else None,
            verification=valid,
            exit_code=EXIT_OK if valid else EXIT_NEGATIVE,
        )


def default_context(n: int) -> VariableContext:
    """x, y, z para n <= 3; x1..xn en otro caso"""
    if n <= 3:
        return VariableContext(("x", "y", "z")[:n])
    return VariableContext(tuple(f"x{i}" for i in range(1, n + 1)))


def _parse_vectors(texts: List[str]) -> List[ZVector]:
    n = len(texts[0].split(','))
    return [GradingService.parse_z_vector(text, n) for text in texts]


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidTentacleException(f"Número racional inválido: '{text}'") from None


def _parse_interval(text: str):
    low, sep, high = text.partition(':')
    if not sep:
        raise InvalidTentacleException(f"Intervalo inválido '{text}' (use LO:HI)")
    return _parse_rational(low), _parse_rational(high)


def _echo(args: argparse.Namespace) -> Dict:
    """Argumentos del comando sin los flags de presentación"""
    hidden = {"text", "timing", "log_level"}
    return {key: value for key, value in sorted(vars(args).items()) if key not in hidden}
