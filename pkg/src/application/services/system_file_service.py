import logging

from src.application.dtos.system_file import SystemFile
from src.application.services.polynomial_parser_service import PolynomialParserService
from src.domain.entities.generator_system import GeneratorSystem, SystemMode
from src.domain.entities.polynomial import VariableContext
from src.domain.exceptions.domain_exceptions import DomainException
from src.domain.exceptions.service_exceptions import SystemFileException

logger = logging.getLogger(__name__)


class SystemFileService:
    """Construye el sistema de generadores a partir de un archivo ya leído"""

    @staticmethod
    def build_system(system_file: SystemFile, preordering: bool = False) -> GeneratorSystem:
        """Parsea variables y generadores; `preordering` fuerza el modo preordenación"""
        try:
            ctx = VariableContext.from_names(system_file.variables)
        except DomainException as e:
            raise SystemFileException(f"Variables inválidas: {e}") from e
        modes = {mode.value: mode for mode in SystemMode}
        if system_file.mode not in modes:
            raise SystemFileException(
                f"Modo desconocido '{system_file.mode}' (use {', '.join(modes)})"
            )
        if not system_file.generators:
            raise SystemFileException("El archivo no declara ningún generador")

        lines = system_file.generator_lines or [None] * len(system_file.generators)
        generators = []
        for text, line in zip(system_file.generators, lines):
            try:
                polynomial = PolynomialParserService.parse(text, ctx)
            except DomainException as e:
                raise SystemFileException(str(e), line) from e
            if polynomial.is_zero():
                raise SystemFileException(f"El generador '{text}' es nulo", line)
            generators.append(polynomial)

        system = GeneratorSystem(ctx, tuple(generators), SystemMode.QUADRATIC_MODULE, system_file.name)
        if preordering or modes[system_file.mode] is SystemMode.PREORDERING:
            system = system.as_preordering()
            logger.debug("Preordenación: %d generadores", system.size)
        return system
