"""
Unit tests for EngineConfig.

The singleton reads the environment at import time, so each test works on
a fresh instance and patches ``_set_env`` to keep .env untouched.

Run:
    python -m pytest tests/test_engine_config.py -v
"""

import sys
import unittest
from pathlib import Path
from unittest.mock import patch

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from shared.runtime.engine_config import EngineConfig, get_engine_config  # noqa: E402


class TestEngineConfig(unittest.TestCase):

    def _make_config(self) -> EngineConfig:
        cfg = EngineConfig()
        cfg.fd_step = 1e-3
        cfg.rk4_steps = 1000
        cfg.domain_margin = 0.1
        cfg.cert_tol = 1e-6
        cfg.cert_deriv_tol = 1e-5
        cfg.svd_threshold = 1e-8
        cfg.max_workers = 4
        cfg.run_log_dir = ""
        return cfg

    def test_singleton(self):
        self.assertIs(get_engine_config(), get_engine_config())

    def test_to_dict_structure(self):
        d = self._make_config().to_dict()
        self.assertEqual(
            set(d),
            {"fd_step", "rk4_steps", "domain_margin", "cert_tol", "cert_deriv_tol",
             "svd_threshold", "max_workers", "run_log_dir"},
        )
        self.assertEqual(d["rk4_steps"], 1000)

    def test_update_numeric_fields(self):
        cfg = self._make_config()
        with patch("shared.runtime.engine_config._set_env") as set_env:
            cfg.update({"fd_step": "0.002", "rk4_steps": 500})
        self.assertEqual(cfg.fd_step, 0.002)
        self.assertEqual(cfg.rk4_steps, 500)
        set_env.assert_any_call("VOA_FD_STEP", "0.002")
        set_env.assert_any_call("VOA_RK4_STEPS", "500")

    def test_update_run_log_dir(self):
        cfg = self._make_config()
        with patch("shared.runtime.engine_config._set_env"):
            cfg.update({"run_log_dir": "  logs/runs  "})
        self.assertEqual(cfg.run_log_dir, "logs/runs")

    def test_unknown_setting_raises(self):
        with self.assertRaises(ValueError):
            self._make_config().update({"model": "phi-4"})

    def test_invalid_value_raises(self):
        cfg = self._make_config()
        with patch("shared.runtime.engine_config._set_env"):
            with self.assertRaises(ValueError):
                cfg.update({"rk4_steps": "many"})
            with self.assertRaises(ValueError):
                cfg.update({"cert_tol": 0})
            with self.assertRaises(ValueError):
                cfg.update({"domain_margin": 0.7})
        self.assertEqual(cfg.cert_tol, 1e-6)


if __name__ == "__main__":
    unittest.main(verbosity=2)
