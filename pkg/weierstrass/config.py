"""Configuration management backed by a .env file."""

import os
from typing import Any

from dotenv import load_dotenv
from sympy import isprime

from weierstrass.exceptions import ConfigurationError
from weierstrass.fields import MAX_CHARACTERISTIC


class WeierstrassConfig:
    """Settings for logging, report export and the verification suites."""

    DEFAULTS = {
        "WEIERSTRASS_LOG_DIR": "logs",
        "WEIERSTRASS_REPORT_DIR": "reports",
        "WEIERSTRASS_AUTO_SAVE": "false",
        "WEIERSTRASS_SEED": 1729,
        "WEIERSTRASS_TRIALS": 1000,
        "WEIERSTRASS_SAMPLE_PRIME": 2147483647,
        "WEIERSTRASS_MAX_RETRIES": 64,
        "WEIERSTRASS_WORKERS": 1,
        "WEIERSTRASS_MAX_REPORTS": 1000,
        "WEIERSTRASS_DEFAULT_ENCODING": "utf-8",
    }

    _AT_LEAST_ONE = (
        "WEIERSTRASS_TRIALS",
        "WEIERSTRASS_MAX_RETRIES",
        "WEIERSTRASS_WORKERS",
        "WEIERSTRASS_MAX_REPORTS",
    )

    def __init__(self, env_file: str = ".env"):
        """
        Load settings, letting the env file override the process environment.

        Args:
            env_file: Path to the .env file; a missing file leaves the defaults.
        """
        load_dotenv(env_file, override=True)
        self._config = {}
        self._load_config()
        self._validate_config()

    def _load_config(self):
        for key, default_value in self.DEFAULTS.items():
            self._config[key] = os.getenv(key, default_value)

    def _validate_config(self):
        """Convert values to their types and check ranges."""
        try:
            for key in ("WEIERSTRASS_SEED", "WEIERSTRASS_SAMPLE_PRIME") + self._AT_LEAST_ONE:
                self._config[key] = int(self._config[key])
            self._config["WEIERSTRASS_AUTO_SAVE"] = (
                str(self._config["WEIERSTRASS_AUTO_SAVE"]).strip().lower() == "true"
            )
        except (ValueError, AttributeError) as e:
            raise ConfigurationError(f"Invalid configuration value: {e}")

        for key in self._AT_LEAST_ONE:
            if self._config[key] < 1:
                raise ConfigurationError(f"{key} must be at least 1")
        if self._config["WEIERSTRASS_SEED"] < 0:
            raise ConfigurationError("WEIERSTRASS_SEED must be non-negative")
        prime = self._config["WEIERSTRASS_SAMPLE_PRIME"]
        if not isprime(prime) or prime >= MAX_CHARACTERISTIC:
            raise ConfigurationError(
                f"WEIERSTRASS_SAMPLE_PRIME must be a prime below 2^31, got {prime}"
            )

    def get(self, key: str, default: Any = None) -> Any:
        return self._config.get(key, default)

    @property
    def log_dir(self) -> str:
        return self._config["WEIERSTRASS_LOG_DIR"]

    @property
    def report_dir(self) -> str:
        return self._config["WEIERSTRASS_REPORT_DIR"]

    @property
    def auto_save(self) -> bool:
        """Whether `verify` exports its reports to CSV without --report-csv."""
        return self._config["WEIERSTRASS_AUTO_SAVE"]

    @property
    def seed(self) -> int:
        return self._config["WEIERSTRASS_SEED"]

    @property
    def trials(self) -> int:
        return self._config["WEIERSTRASS_TRIALS"]

    @property
    def sample_prime(self) -> int:
        return self._config["WEIERSTRASS_SAMPLE_PRIME"]

    @property
    def max_retries(self) -> int:
        return self._config["WEIERSTRASS_MAX_RETRIES"]

    @property
    def workers(self) -> int:
        return self._config["WEIERSTRASS_WORKERS"]

    @property
    def max_reports(self) -> int:
        return self._config["WEIERSTRASS_MAX_REPORTS"]

    @property
    def default_encoding(self) -> str:
        return self._config["WEIERSTRASS_DEFAULT_ENCODING"]
