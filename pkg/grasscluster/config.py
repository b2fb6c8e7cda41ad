import os
import logging
from dataclasses import dataclass

from grasscluster.errors import ParameterError

logger = logging.getLogger(__name__)

# Directory layout mirrors the root path.py so the package also works when installed
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_DATA_DIR = os.path.join(BASE_DIR, 'data')

RESAMPLE_CAP = 1000          # attempts for random_generic_matrix before giving up
DEFAULT_TRIALS = 100         # random configurations per CLI verification
CSP_COST_CAP = 5_000_000     # |P(a,b,c)| * n allowed for verify_csp
FLOAT_TOLERANCE = 1e-6       # only for the CLI --float display path

THREADS_ENV = "GRASSCLUSTER_THREADS"
DATA_DIR_ENV = "GRASSCLUSTER_DATA_DIR"


@dataclass(frozen=True)
class Settings:
    threads: int
    data_dir: str

    @classmethod
    def from_env(cls, environ=None) -> "Settings":
        """
        Read settings from the environment.

        Parameters:
        - environ: mapping to read from (default os.environ)

        Returns:
        - settings: Settings with the worker cap and the data directory
        """
        environ = os.environ if environ is None else environ
        raw = environ.get(THREADS_ENV)
        if raw is None or raw == "":
            threads = os.cpu_count() or 1
        else:
            try:
                threads = int(raw)
            except ValueError:
                raise ParameterError(f"{THREADS_ENV} must be an integer, got {raw!r}")
            if threads < 1:
                raise ParameterError(f"{THREADS_ENV} must be at least 1, got {threads}")
        data_dir = environ.get(DATA_DIR_ENV) or DEFAULT_DATA_DIR
        logger.debug("settings: threads=%d data_dir=%s", threads, data_dir)
        return cls(threads=threads, data_dir=data_dir)


def get_settings() -> Settings:
    return Settings.from_env()
