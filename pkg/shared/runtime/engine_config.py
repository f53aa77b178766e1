"""
Engine configuration: numerical knobs shared by every suite.

  - finite-difference step and RK4 step count for the geometry backend
  - tolerances for parallel certification and the invariant-tensor nullspace
  - worker count for concurrent case execution
  - optional directory for JSONL run logs

The active config is held in a module-level singleton, read from the
environment (``.env`` is loaded first) and written back to ``.env`` on update
when that file exists.
"""

import os
from pathlib import Path

from dotenv import load_dotenv, set_key

ENV_FILE = Path(__file__).parents[2] / ".env"
load_dotenv(ENV_FILE)


def _float_env(key: str, default: float) -> float:
    raw = os.getenv(key, "")
    return float(raw) if raw.strip() else default


def _int_env(key: str, default: int) -> int:
    raw = os.getenv(key, "")
    return int(raw) if raw.strip() else default


class EngineConfig:
    """Singleton that holds the active numerical settings."""

    # ---- Geometry ----------------------------------------------------------
    fd_step: float = _float_env("VOA_FD_STEP", 1e-3)
    rk4_steps: int = _int_env("VOA_RK4_STEPS", 1000)
    domain_margin: float = _float_env("VOA_DOMAIN_MARGIN", 0.1)

    # ---- Certification -----------------------------------------------------
    cert_tol: float = _float_env("VOA_CERT_TOL", 1e-6)
    cert_deriv_tol: float = _float_env("VOA_CERT_DERIV_TOL", 1e-5)
    svd_threshold: float = _float_env("VOA_SVD_THRESHOLD", 1e-8)

    # ---- Runner ------------------------------------------------------------
    max_workers: int = _int_env("VOA_MAX_WORKERS", 4)
    run_log_dir: str = os.getenv("VOA_RUN_LOG_DIR", "")

    _FIELDS = {
        "fd_step": ("VOA_FD_STEP", float),
        "rk4_steps": ("VOA_RK4_STEPS", int),
        "domain_margin": ("VOA_DOMAIN_MARGIN", float),
        "cert_tol": ("VOA_CERT_TOL", float),
        "cert_deriv_tol": ("VOA_CERT_DERIV_TOL", float),
        "svd_threshold": ("VOA_SVD_THRESHOLD", float),
        "max_workers": ("VOA_MAX_WORKERS", int),
    }

    def to_dict(self) -> dict:
        out = {name: getattr(self, name) for name in self._FIELDS}
        out["run_log_dir"] = self.run_log_dir
        return out

    def update(self, data: dict):
        """Apply a partial update and persist it to .env."""
        unknown = set(data) - set(self._FIELDS) - {"run_log_dir"}
        if unknown:
            raise ValueError(f"Unknown engine settings: {sorted(unknown)}")

        for name, (env_key, kind) in self._FIELDS.items():
            if name not in data:
                continue
            try:
                value = kind(data[name])
            except (TypeError, ValueError):
                raise ValueError(f"Invalid {name}: {data[name]!r}") from None
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value!r}")
            if name == "domain_margin" and value >= 0.5:
                raise ValueError(f"domain_margin must be below 0.5, got {value!r}")
            setattr(self, name, value)
            _set_env(env_key, str(value))

        if "run_log_dir" in data:
            self.run_log_dir = str(data["run_log_dir"]).strip()
            _set_env("VOA_RUN_LOG_DIR", self.run_log_dir)


# Module-level singleton
_config = EngineConfig()


def get_engine_config() -> EngineConfig:
    return _config


def _set_env(key: str, value: str):
    """Persist a key-value pair to the .env file."""
    if ENV_FILE.exists():
        set_key(str(ENV_FILE), key, value)
    os.environ[key] = value
