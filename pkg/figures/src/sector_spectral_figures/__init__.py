"""Figure rendering for sector-spectral experiment CSVs."""

__version__ = "0.1.0"

from .io import REQUIRED, SchemaError, read_many, read_rows
from .render import BUILDERS, FigureInfo, build_figure, render, save_figure

__all__ = ["REQUIRED", "SchemaError", "read_many", "read_rows", "BUILDERS",
           "FigureInfo", "build_figure", "render", "save_figure"]
