import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)

DEFAULT_MAX_TRANSFORM_LENGTH = 1 << 22
ENGINES = ("numpy", "radix2", "bluestein")


class Settings:
    @property
    def max_transform_length(self) -> int:
        """Largest logical transform length a plan may be built for.

        Read from ``FASTBEZIER_MAX_TRANSFORM_LENGTH``; invalid values fall back
        to the default with a warning.
        """
        raw = os.environ.get("FASTBEZIER_MAX_TRANSFORM_LENGTH", "").strip()
        if not raw:
            return DEFAULT_MAX_TRANSFORM_LENGTH
        try:
            value = int(raw)
        except ValueError:
            logger.warning(
                f"Ignoring FASTBEZIER_MAX_TRANSFORM_LENGTH={raw!r}: not an integer"
            )
            return DEFAULT_MAX_TRANSFORM_LENGTH
        if value < 1:
            logger.warning(
                f"Ignoring FASTBEZIER_MAX_TRANSFORM_LENGTH={raw!r}: must be positive"
            )
            return DEFAULT_MAX_TRANSFORM_LENGTH
        return value

    @property
    def fft_engine(self) -> str:
        engine = os.environ.get("FASTBEZIER_FFT_ENGINE", "").strip().lower()
        if not engine:
            return "numpy"
        if engine not in ENGINES:
            logger.warning(
                f"Unknown FASTBEZIER_FFT_ENGINE={engine!r}, using 'numpy'"
            )
            return "numpy"
        return engine

    @property
    def output_dir(self) -> Path:
        env_path = os.environ.get("FASTBEZIER_OUTPUT_DIR", "")
        if env_path:
            return Path(env_path).expanduser()
        return Path.cwd()


# Global instance that can be mocked in tests
settings = Settings()
