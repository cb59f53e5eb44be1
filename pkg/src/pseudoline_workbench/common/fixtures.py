"""
Access to the data files shipped with the package.

The fixtures cover the named arrangements in every format the loader reads:
A(13,2), A(6,1), A(9,1), the A(15,1) t-vector, Kelly-Moser, a near pencil
and the triangle.
"""

from pathlib import Path
from typing import List

from pseudoline_workbench.arrangement.formats import LoadedInput, load_input


def get_data_file_path(filename: str) -> Path:
    """
    Get the full path to a file in the fixture_data directory.

    Args:
        filename: Name of the file to locate

    Returns:
        Path object to the requested file
    """
    return Path(__file__).parent / "fixture_data" / filename


def fixture_names() -> List[str]:
    """Every shipped fixture file name, sorted."""
    return sorted(path.name for path in (Path(__file__).parent / "fixture_data").iterdir() if path.is_file())


def load_fixture(filename: str) -> LoadedInput:
    """
    Parse a shipped fixture with the format inferred from its extension.

    Args:
        filename: e.g. "a13_2.lines"

    Returns:
        LoadedInput for the file
    """
    return load_input(str(get_data_file_path(filename)))
