import os
from dataclasses import dataclass
from typing import Optional
from dotenv import load_dotenv

from src.errors import ConfigError
from src.logs import get_logger, banner

load_dotenv()

logger = get_logger(__name__)

OUTPUT_FORMATS = ("text", "json", "dot")


@dataclass
class SweepConfig:
    max_degree: int = 6
    num_samples: int = 200
    max_d: int = 3
    max_n: int = 5
    max_weight: int = 4
    max_coefficient: int = 5
    max_attempts: int = 50
    seed: int = 0


@dataclass
class OutputConfig:
    format: str = "text"
    results_dir: str = "results"
    indent: int = 2


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


def _env_flag(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in ("1", "true", "yes", "on")


class Config:
    def __init__(self, max_degree: Optional[int] = None, verbose: Optional[bool] = None,
                 seed: Optional[int] = None, num_samples: Optional[int] = None,
                 results_dir: Optional[str] = None, output_format: Optional[str] = None):
        self.sweep = SweepConfig()
        self.output = OutputConfig()

        self.sweep.max_degree = _env_int("GLORDER_MAX_DEGREE", self.sweep.max_degree)
        self.sweep.num_samples = _env_int("GLORDER_SWEEP_SAMPLES", self.sweep.num_samples)
        self.sweep.seed = _env_int("GLORDER_SEED", self.sweep.seed)
        self.output.results_dir = os.getenv("GLORDER_RESULTS_DIR", self.output.results_dir)
        self.verbose = _env_flag("GLORDER_VERBOSE")

        if max_degree is not None:
            self.sweep.max_degree = max_degree
        if verbose is not None:
            self.verbose = verbose
        if seed is not None:
            self.sweep.seed = seed
        if num_samples is not None:
            self.sweep.num_samples = num_samples
        if results_dir is not None:
            self.output.results_dir = results_dir
        if output_format is not None:
            self.output.format = output_format

        self._validate()

        banner(logger, "CONFIGURATION")
        logger.info(f"  Max degree: {self.sweep.max_degree}")
        logger.info(f"  Sweep samples: {self.sweep.num_samples} (seed {self.sweep.seed})")
        logger.info(f"  Results dir: {self.output.results_dir}")

    def _validate(self):
        if self.sweep.max_degree < 0:
            raise ConfigError("max_degree must be nonnegative")
        if self.sweep.num_samples < 1:
            raise ConfigError("num_samples must be positive")
        for name in ("max_d", "max_n", "max_weight", "max_coefficient", "max_attempts"):
            if getattr(self.sweep, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.output.format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output.format!r}")
