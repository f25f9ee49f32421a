from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class SystemFile:
    """DTO con el contenido de un archivo de sistema (.qm) sin interpretar"""
    variables: List[str]
    generators: List[str]
    mode: str = "quadratic-module"
    name: Optional[str] = None
    generator_lines: List[int] = field(default_factory=list)
    source: Optional[str] = None
