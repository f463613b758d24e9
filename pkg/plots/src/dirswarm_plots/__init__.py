from .render import (
    EmptyCsvError,
    MissingColumnError,
    PlotSpec,
    load_series,
    render,
    smooth,
)

__all__ = [
    "EmptyCsvError",
    "MissingColumnError",
    "PlotSpec",
    "load_series",
    "render",
    "smooth",
]
