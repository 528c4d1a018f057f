"""Parameter sweeps and the preset curves behind the published figures."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .entanglement import delta_derivative, frame_concurrences
from .qcore import RejectedInput
from .states import ScenarioKind, ScenarioSpec

OUTPUTS = (
    "c_spin_rest",
    "c_spin_boosted",
    "c_mom_rest",
    "c_mom_boosted",
    "delta_spin",
    "delta_mom",
)
DERIVATIVE_OUTPUTS = ("d_delta_spin", "d_delta_mom")
FIGURE_POINTS = 101
XI_RANGE = (0.001, 0.999)
UNIT_RANGE = (0.0, 1.0)
DEFAULT_PRECISION = 12


@dataclass(frozen=True)
class SweepConfig:
    kind: ScenarioKind
    vary: str  # "param" or "phi"
    fixed: float
    start: float
    end: float
    steps: int
    outputs: tuple = OUTPUTS
    sign: str = "plus"

    def __post_init__(self):
        object.__setattr__(self, "kind", ScenarioKind(self.kind))
        if self.vary not in ("param", "phi"):
            raise RejectedInput(f"vary must be 'param' or 'phi', got {self.vary!r}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise RejectedInput(f"steps must be an integer >= 2, got {self.steps!r}")
        bad = [o for o in self.outputs if o not in OUTPUTS + DERIVATIVE_OUTPUTS]
        if bad or not self.outputs:
            raise RejectedInput(f"unknown outputs {bad}; choose from {OUTPUTS + DERIVATIVE_OUTPUTS}")
        for value in (self.fixed, self.start, self.end):
            if not math.isfinite(value):
                raise RejectedInput("sweep bounds and fixed value must be finite")
        # endpoints and the fixed parameter must be legal for the scenario
        params = (self.start, self.end) if self.vary == "param" else (self.fixed,)
        for p in params:
            ScenarioSpec(self.kind, p, self.sign)

    @property
    def x_name(self) -> str:
        if self.vary == "phi":
            return "phi"
        return "eta" if self.kind is ScenarioKind.ETA else "xi"

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.end, int(self.steps))

    def point(self, x: float) -> tuple:
        """(parameter, phi) for the sweep coordinate ``x``."""
        return (x, self.fixed) if self.vary == "param" else (self.fixed, x)


def sweep(config: SweepConfig) -> list:
    """Rows of ``(x, *outputs)`` in grid order."""
    direction = "parameter" if config.vary == "param" else "phi"
    rows = []
    for x in config.grid():
        param, phi = config.point(float(x))
        values = {}
        if any(o in OUTPUTS for o in config.outputs):
            values.update(frame_concurrences(ScenarioSpec(config.kind, param, config.sign), phi))
        if any(o in DERIVATIVE_OUTPUTS for o in config.outputs):
            for which, key in (("spin", "d_delta_spin"), ("momentum", "d_delta_mom")):
                values[key] = delta_derivative(config.kind, which, direction, param, phi,
                                               sign=config.sign)
        rows.append((float(x),) + tuple(values[o] for o in config.outputs))
    return rows


def format_number(value: float, precision: int = DEFAULT_PRECISION) -> str:
    if value == 0.0:
        value = 0.0  # drop the sign of negative zero
    return f"{value:.{precision}g}"


def to_csv(header, rows, precision: int = DEFAULT_PRECISION) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v, precision) for v in row])
    return buf.getvalue()


def rounded(value: float, precision: int = DEFAULT_PRECISION) -> float:
    return float(format_number(value, precision))


@dataclass(frozen=True)
class Curve:
    name: str
    config: SweepConfig


@dataclass(frozen=True)
class FigureRecipe:
    figure_id: int
    description: str
    curves: tuple


def _curves(fig: int, kind, vary: str, x_range, fixed_values, outputs, label: str):
    out = []
    for tag, value in fixed_values:
        config = SweepConfig(kind=kind, vary=vary, fixed=value, start=x_range[0],
                             end=x_range[1], steps=FIGURE_POINTS, outputs=outputs)
        out.append(Curve(name=f"fig{fig}_{label}{tag}.csv", config=config))
    return tuple(out)


PHI_PRESETS = (("0", 0.0), ("_pi10", math.pi / 10), ("_pi8", math.pi / 8))
ETA_PRESETS = (("0", 0.0), ("1_8", 0.125), ("1_4", 0.25))
XI_PRESETS = (("1_2", 0.5), ("1_4", 0.25), ("1_8", 0.125))
BOOSTED = ("c_spin_boosted", "c_mom_boosted")

FIGURES = {
    1: FigureRecipe(1, "eta scenario: boosted spin and momentum concurrence vs eta",
                    _curves(1, "eta", "param", UNIT_RANGE, PHI_PRESETS, BOOSTED, "phi")),
    2: FigureRecipe(2, "eta scenario: boosted spin and momentum concurrence vs phi",
                    _curves(2, "eta", "phi", UNIT_RANGE, ETA_PRESETS, BOOSTED, "eta")),
    3: FigureRecipe(3, "xi scenario: boosted spin concurrence vs xi",
                    _curves(3, "xi", "param", XI_RANGE, PHI_PRESETS, ("c_spin_boosted",), "phi")),
    4: FigureRecipe(4, "xi scenario: boosted momentum concurrence vs xi",
                    _curves(4, "xi", "param", XI_RANGE, PHI_PRESETS, ("c_mom_boosted",), "phi")),
    5: FigureRecipe(5, "xi scenario: boosted spin concurrence vs phi",
                    _curves(5, "xi", "phi", UNIT_RANGE, XI_PRESETS, ("c_spin_boosted",), "xi")),
    6: FigureRecipe(6, "xi scenario: boosted momentum concurrence vs phi",
                    _curves(6, "xi", "phi", UNIT_RANGE, XI_PRESETS, ("c_mom_boosted",), "xi")),
    7: FigureRecipe(7, "xi scenario: slopes of both entanglement changes in xi at phi = pi/10",
                    _curves(7, "xi", "param", XI_RANGE, (("_pi10", math.pi / 10),),
                            DERIVATIVE_OUTPUTS, "phibar")),
    8: FigureRecipe(8, "xi scenario: slopes of both entanglement changes in phi at xi = 1/4",
                    _curves(8, "xi", "phi", UNIT_RANGE, (("1_4", 0.25),),
                            DERIVATIVE_OUTPUTS, "xibar")),
}


def figure_recipe(figure_id: int) -> FigureRecipe:
    try:
        return FIGURES[int(figure_id)]
    except (KeyError, ValueError, TypeError):
        raise RejectedInput(f"unknown figure {figure_id!r}; choose 1..8") from None


def figure_tables(figure_id: int, precision: int = DEFAULT_PRECISION) -> dict:
    """Mapping of CSV file name to CSV text for every curve of a figure."""
    out = {}
    for curve in figure_recipe(figure_id).curves:
        cfg = curve.config
        out[curve.name] = to_csv((cfg.x_name,) + tuple(cfg.outputs), sweep(cfg), precision)
    return out
