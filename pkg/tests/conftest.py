import pytest

from src.machine_file import write_machine_file
from tests.machines import IDENTITY, ODOMETER, V11, V12, V12_INVERSE, V20


@pytest.fixture
def machine_path(tmp_path):
    """Write a machine file and return its path."""
    def write(m, start=None, name=None):
        path = tmp_path / f"{name or m.name}.mm"
        write_machine_file(str(path), m, start)
        return str(path)
    return write


@pytest.fixture
def fixture_paths(machine_path):
    return {
        "V11": machine_path(V11, "0"),
        "V12": machine_path(V12, "q0"),
        "V12'": machine_path(V12_INVERSE, "q0", name="V12_inverse"),
        "V20": machine_path(V20),
        "odometer": machine_path(ODOMETER, "s"),
        "I": machine_path(IDENTITY),
    }
