"""
Suite input: a pydantic model validated before any case runs.

Values are layered: suite.json defaults, then a --config JSON file, then
command-line flags. Unknown keys, unknown manifolds and function
expressions that do not parse are all rejected here.
"""

import json
from pathlib import Path
from typing import Literal

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, ValidationError, model_validator

from shared.geometry.charts import Chart
from shared.geometry.functions import SmoothFunction
from shared.geometry.presets import get_preset

SuiteName = Literal[
    "core-axioms",
    "associativity",
    "equivariance",
    "holonomy",
    "psi-homomorphism",
    "laplacian-mode",
    "invariants-dim",
]

REPORT_VERSION = "1.0"

DEFAULT_FUNCTIONS = {
    "flat": "x^2 + y^2",
    "torus": "sin(2*pi*x)*cos(2*pi*y)",
    "s2": "cos(theta)",
    "hyperbolic": "x^2*y",
}


class ConfigError(Exception):
    """Suite configuration could not be loaded or validated."""


class SuiteConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    suite: SuiteName
    manifold: str | None = None
    function: str | None = None
    dim: int = Field(2, ge=1, le=4)
    max_weight: int = Field(3, ge=0, le=6)
    order: int = Field(4, ge=0, le=8, validation_alias=AliasChoices("order", "K"))
    tol: float = Field(1e-6, gt=0)
    steps: int = Field(1000, gt=0)
    points: int = Field(10, ge=1)
    grid: list[list[float]] | None = None
    seed: int = 0
    out: str | None = None

    @model_validator(mode="before")
    @classmethod
    def _default_function(cls, data):
        if isinstance(data, dict) and data.get("function") is None and data.get("manifold") in DEFAULT_FUNCTIONS:
            data = {**data, "function": DEFAULT_FUNCTIONS[data["manifold"]]}
        return data

    @model_validator(mode="after")
    def _check_geometry(self):
        if self.manifold is not None:
            chart = get_preset(self.manifold)
            if self.function is not None:
                SmoothFunction.from_expression(self.function, chart.coords)
            for p in self.grid or ():
                if len(p) != chart.dim:
                    raise ValueError(f"grid point {p} does not have {chart.dim} coordinates")
        return self

    def chart(self) -> Chart:
        if self.manifold is None:
            raise ConfigError(f"suite {self.suite} needs a manifold")
        return get_preset(self.manifold)

    def smooth_function(self) -> SmoothFunction:
        if self.function is None:
            raise ConfigError(f"suite {self.suite} needs a function expression")
        return SmoothFunction.from_expression(self.function, self.chart().coords)

    def evaluation_points(self) -> list:
        if self.grid:
            return [tuple(p) for p in self.grid]
        return [tuple(float(c) for c in p) for p in self.chart().sample_points(self.points, self.seed)]


def load_suite_config(suite: str, defaults: dict | None = None, config_file: str | None = None,
                      overrides: dict | None = None) -> SuiteConfig:
    """Merge defaults < file < overrides and validate; every failure is a ConfigError."""
    data: dict = dict(defaults or {})
    if config_file:
        try:
            loaded = json.loads(Path(config_file).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config file {config_file}: {e}") from None
        if not isinstance(loaded, dict):
            raise ConfigError(f"config file {config_file} must hold a JSON object")
        file_suite = loaded.pop("suite", suite)
        if file_suite != suite:
            raise ConfigError(f"config file is for suite {file_suite!r}, not {suite!r}")
        if "K" in loaded:
            loaded["order"] = loaded.pop("K")
        data.update(loaded)
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    data["suite"] = suite
    try:
        return SuiteConfig.model_validate(data)
    except ValidationError as e:
        details = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(details) from None
