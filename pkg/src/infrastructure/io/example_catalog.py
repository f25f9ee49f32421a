from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

SYSTEMS_DIR = Path(__file__).parent.parent.parent.parent / 'data' / 'systems'


@dataclass(frozen=True)
class ExampleCase:
    """Sistema incluido con el comando que lo decide y el veredicto esperado"""
    name: str
    filename: str
    command: str
    expected: str
    zs: Tuple[str, ...] = ()
    order: Optional[str] = None

    @property
    def path(self) -> Path:
        return SYSTEMS_DIR / self.filename

    def describe(self) -> str:
        if self.command == "term-order":
            return f"term-order --order {self.order}"
        return "check " + " ".join(f"--z {z}" for z in self.zs)


EXAMPLES: List[ExampleCase] = [
    ExampleCase("parabola wedge", "ex1_parabola_wedge.qm", "check", "Stable", zs=("1,2",)),
    ExampleCase("two cylinders", "ex2_cylinders.qm", "check", "Stable", zs=("1,0", "0,1")),
    ExampleCase(
        "cylinder and hyperbola", "ex3_cylinder_and_hyperbola.qm", "check", "Stable",
        zs=("0,1", "1,-1"),
    ),
    ExampleCase(
        "narrow tentacles", "ex4_narrow_tentacles.qm", "check", "Stable", zs=("-1,2", "1,-1"),
    ),
    ExampleCase(
        "quadrant under hyperbola", "m1_quadrant_hyperbola.qm", "term-order", "Stable",
        order="deglex:x,y",
    ),
    ExampleCase(
        "shifted quadrant under hyperbola", "m2_compact_hyperbola.qm", "term-order", "Stable",
        order="deglex:x,y",
    ),
]
