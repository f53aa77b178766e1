from shared.runtime.case_wrapper import CaseOutcome, InstrumentedCase, outcome, report_outcome
from shared.runtime.orchestrations import build_report, run_cases
from shared.runtime.suite_config import ConfigError, SuiteConfig, load_suite_config

__all__ = [
    "CaseOutcome",
    "InstrumentedCase",
    "outcome",
    "report_outcome",
    "build_report",
    "run_cases",
    "ConfigError",
    "SuiteConfig",
    "load_suite_config",
]
