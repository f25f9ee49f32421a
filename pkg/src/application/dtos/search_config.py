from dataclasses import dataclass

# Los numeradores muestreados deben caber en un entero de 64 bits.
_NUMERATOR_LIMIT = 2 ** 62


@dataclass
class SearchConfig:
    """DTO con los parámetros de búsqueda de testigos"""
    seed: int = 0
    max_scale: int = 12
    samples_per_scale: int = 512
    denom_bound: int = 256
    preordering: bool = False
    by_class: bool = False
    max_workers: int = 1

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError(f"La semilla debe ser >= 0 (recibido {self.seed})")
        if self.max_scale < 0:
            raise ValueError(f"max_scale debe ser >= 0 (recibido {self.max_scale})")
        for name in ('samples_per_scale', 'denom_bound', 'max_workers'):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} debe ser >= 1 (recibido {getattr(self, name)})")
        if 2 ** self.max_scale * self.denom_bound >= _NUMERATOR_LIMIT:
            raise ValueError("2^max_scale * denom_bound debe ser < 2^62")
