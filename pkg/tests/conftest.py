from pathlib import Path

import numpy as np
import pytest

from src.application.dtos.search_config import SearchConfig
from src.application.services.polynomial_parser_service import PolynomialParserService
from src.application.services.system_file_service import SystemFileService
from src.domain.entities.generator_system import GeneratorSystem
from src.domain.entities.polynomial import VariableContext
from src.infrastructure.io.system_file_reader import SystemFileReader

SYSTEMS_DIR = Path(__file__).resolve().parent.parent / "data" / "systems"


@pytest.fixture
def ctx_xy() -> VariableContext:
    return VariableContext(("x", "y"))


@pytest.fixture
def parse(ctx_xy):
    def _parse(text: str, ctx: VariableContext = None):
        return PolynomialParserService.parse(text, ctx or ctx_xy)
    return _parse


@pytest.fixture
def make_system(ctx_xy):
    def _make(*generators: str, ctx: VariableContext = None) -> GeneratorSystem:
        ctx = ctx or ctx_xy
        return GeneratorSystem(ctx, tuple(PolynomialParserService.parse(g, ctx) for g in generators))
    return _make


@pytest.fixture
def load_example():
    def _load(filename: str, preordering: bool = False) -> GeneratorSystem:
        return SystemFileService.build_system(SystemFileReader.read(SYSTEMS_DIR / filename), preordering)
    return _load


@pytest.fixture
def cfg() -> SearchConfig:
    return SearchConfig()


@pytest.fixture
def small_cfg() -> SearchConfig:
    """Presupuesto reducido para búsquedas que se espera que se agoten"""
    return SearchConfig(max_scale=3, samples_per_scale=64)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
