import pytest

from src.application.dtos.system_file import SystemFile
from src.application.services.system_file_service import SystemFileService
from src.domain.entities.generator_system import SystemMode
from src.domain.exceptions.service_exceptions import SystemFileException
from src.infrastructure.io.system_file_reader import SystemFileReader

TEXT = """
# sistema de prueba
name wedge
vars x,y
gen x
gen y - x^2
"""


def test_parse_text_directives():
    system_file = SystemFileReader.parse_text(TEXT)
    assert system_file.variables == ["x", "y"]
    assert system_file.generators == ["x", "y - x^2"]
    assert system_file.name == "wedge"
    assert system_file.generator_lines == [5, 6]


def test_build_system_and_preordering():
    system = SystemFileService.build_system(SystemFileReader.parse_text(TEXT))
    assert system.size == 2 and system.name == "wedge"
    assert system.mode is SystemMode.QUADRATIC_MODULE
    closed = SystemFileService.build_system(SystemFileReader.parse_text(TEXT + "mode preordering\n"))
    assert closed.mode is SystemMode.PREORDERING and closed.size == 3
    assert closed.labels[-1] == "(x)*(-x^2 + y)"


@pytest.mark.parametrize("text", [
    "gen x\n",
    "vars x\n",
    "vars x\nvars y\ngen x\n",
    "vars x\nfoo bar\ngen x\n",
    "vars x\ngen\n",
])
def test_malformed_files(text):
    with pytest.raises(SystemFileException):
        SystemFileReader.parse_text(text)


def test_bad_generator_reports_line():
    with pytest.raises(SystemFileException) as error:
        SystemFileService.build_system(SystemFileReader.parse_text("vars x,y\ngen x\ngen x + * y\n"))
    assert error.value.line == 3


def test_zero_generator_and_bad_mode():
    with pytest.raises(SystemFileException):
        SystemFileService.build_system(SystemFile(["x"], ["x - x"]))
    with pytest.raises(SystemFileException):
        SystemFileService.build_system(SystemFile(["x"], ["x"], mode="ideal"))
    with pytest.raises(SystemFileException):
        SystemFileService.build_system(SystemFile(["x", "x"], ["x"]))


def test_read_from_disk(tmp_path):
    path = tmp_path / "system.qm"
    path.write_text(TEXT, encoding="utf-8")
    assert SystemFileReader.read(path).source == str(path)
