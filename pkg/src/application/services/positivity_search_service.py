import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from src.application.dtos.search_config import SearchConfig
from src.domain.entities.polynomial import Polynomial
from src.domain.entities.verdict import PositivityWitness
from src.domain.exceptions.domain_exceptions import DimensionMismatchException, ZeroPolynomialException
from src.domain.exceptions.service_exceptions import CertificateException, ServiceException

logger = logging.getLogger(__name__)


class PositivitySearchService:
    """Búsqueda de un punto racional donde todas las partes dadas son estrictamente positivas

    El conjunto {x : p(x) > 0 para toda p} es abierto, así que un punto en él
    certifica que es Zariski denso. La búsqueda es unilateral: agotar el
    presupuesto no demuestra nada.
    """

    @staticmethod
    def find_positivity_witness(
        parts: Sequence[Polynomial],
        cfg: SearchConfig,
        indices: Optional[Sequence[int]] = None,
    ) -> Optional[PositivityWitness]:
        """Muestreo con semilla sobre cajas [-2^k, 2^k]^n, k = 0..max_scale

        Las coordenadas son num/denom_bound con num entero. `indices` son los
        índices de generador que se registran en el testigo (por defecto 1..len).
        """
        if not parts:
            raise ServiceException("La lista de partes está vacía")
        n = parts[0].n
        for part in parts:
            if part.n != n:
                raise DimensionMismatchException("Las partes tienen números de variables distintos")
            if part.is_zero():
                raise ZeroPolynomialException("Las partes de mayor grado deben ser no nulas")
        labels = tuple(indices) if indices is not None else tuple(range(1, len(parts) + 1))
        if len(labels) != len(parts):
            raise ServiceException("Debe haber un índice por cada parte")

        rng = np.random.default_rng(cfg.seed)
        denominator = cfg.denom_bound
        for scale in range(cfg.max_scale + 1):
            limit = (2 ** scale) * denominator
            numerators = rng.integers(
                -limit, limit, size=(cfg.samples_per_scale, n), endpoint=True, dtype=np.int64
            )
            for row in numerators:
                point = tuple(Fraction(int(value), denominator) for value in row)
                values = _positive_values(parts, point)
                if values is not None:
                    witness = PositivityWitness(point, tuple(values), labels)
                    if not PositivitySearchService.verify_witness(parts, witness):
                        raise CertificateException(f"Testigo inválido: {witness}")
                    logger.debug("Testigo encontrado en la escala %d: %s", scale, point)
                    return witness
            logger.debug("Escala %d agotada (%d puntos)", scale, cfg.samples_per_scale)
        logger.info("Sin testigo de positividad tras %d escalas", cfg.max_scale + 1)
        return None

    @staticmethod
    def verify_witness(parts: Sequence[Polynomial], witness: PositivityWitness) -> bool:
        if len(parts) != len(witness.values):
            return False
        for part, value in zip(parts, witness.values):
            if len(witness.point) != part.n:
                return False
            actual = part.evaluate(witness.point)
            if actual != value or actual <= 0:
                return False
        return True


def _positive_values(parts: Sequence[Polynomial], point) -> Optional[List[Fraction]]:
    values = []
    for part in parts:
        value = part.evaluate(point)
        if value <= 0:
            return None
        values.append(value)
    return values
