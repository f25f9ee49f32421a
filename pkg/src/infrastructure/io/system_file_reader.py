import logging
from pathlib import Path
from typing import Union

from src.application.dtos.system_file import SystemFile
from src.domain.exceptions.service_exceptions import SystemFileException

logger = logging.getLogger(__name__)


class SystemFileReader:
    """Lector del formato de texto de sistemas: una directiva por línea

        # comentario
        name <etiqueta>
        vars x,y
        gen <polinomio>
        mode preordering
    """

    @staticmethod
    def read(path: Union[str, Path]) -> SystemFile:
        path = Path(path)
        logger.debug("Leyendo sistema desde %s", path)
        return SystemFileReader.parse_text(path.read_text(encoding="utf-8"), source=str(path))

    @staticmethod
    def parse_text(text: str, source: str = None) -> SystemFile:
        variables = None
        generators, generator_lines = [], []
        mode = "quadratic-module"
        name = None
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith('#'):
                continue
            directive, _, rest = line.partition(' ')
            rest = rest.strip()
            if directive == "vars":
                if variables is not None:
                    raise SystemFileException("Directiva 'vars' repetida", number)
                variables = [part.strip() for part in rest.split(',')] if rest else []
            elif directive == "gen":
                if not rest:
                    raise SystemFileException("'gen' necesita un polinomio", number)
                generators.append(rest)
                generator_lines.append(number)
            elif directive == "mode":
                mode = rest
            elif directive == "name":
                name = rest or None
            else:
                raise SystemFileException(f"Directiva desconocida '{directive}'", number)
        if variables is None:
            raise SystemFileException("Falta la directiva 'vars'")
        if not generators:
            raise SystemFileException("El archivo no declara ningún generador")
        return SystemFile(variables, generators, mode, name, generator_lines, source)
