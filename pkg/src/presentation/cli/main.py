import logging
import sys
import time
from typing import List, Optional

from pydantic import ValidationError

from src.domain.exceptions.domain_exceptions import DomainException
from src.domain.exceptions.service_exceptions import ServiceException
from src.infrastructure.config.settings import Settings
from src.infrastructure.io.report_writer import ReportWriter
from src.presentation.cli.commands import CommandHandlers
from src.presentation.cli.parser import build_parser

logger = logging.getLogger(__name__)

EXIT_ERROR = 1


def main(argv: Optional[List[str]] = None) -> int:
    """Ejecuta un comando y devuelve su código de salida; el informe va a stdout"""
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(
        level=args.log_level or settings.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    handlers = CommandHandlers(settings)
    started = time.perf_counter()
    try:
        report = handlers.handler_for(args.command)(args)
    except (DomainException, ServiceException, OSError, ValueError, ValidationError) as e:
        logger.debug("Fallo en '%s'", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    if args.timing:
        report.elapsed_seconds = time.perf_counter() - started

    print(ReportWriter.render(report, as_text=args.text))
    return report.exit_code
