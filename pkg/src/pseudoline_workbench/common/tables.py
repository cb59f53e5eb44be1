"""
Tabular helpers built on pandas.

Reports hand lists of row dicts here; the functions build DataFrames with a
fixed column order and render them deterministically. All cells are ints,
bools or strings (rationals are pre-rendered), so no float formatting is
involved.
"""
from typing import Any, Dict, Sequence

import pandas as pd  # type: ignore


def rows_to_frame(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> pd.DataFrame:
    """
    Build a DataFrame with the given column order.

    Args:
        rows: Row dictionaries (missing keys become empty strings)
        columns: Column order of the result

    Returns:
        DataFrame with exactly `columns`, object dtype
    """
    data = [{column: row.get(column, "") for column in columns} for row in rows]
    return pd.DataFrame(data, columns=list(columns), dtype=object)


def render_frame(frame: pd.DataFrame) -> str:
    """
    Render a DataFrame as fixed-width text.

    Args:
        frame: The table to render

    Returns:
        Text table; an empty frame renders as its header plus "(no rows)"
    """
    if frame.empty:
        return "  ".join(str(column) for column in frame.columns) + "\n(no rows)"
    return frame.astype(str).to_string(index=False)

