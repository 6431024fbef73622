import logging
from typing import Any


class LevelFormatter(logging.Formatter):
    """Bare messages for progress, a marker for problems, the logger name for debug."""

    FORMATS = {
        logging.DEBUG: "[%(name)s] %(message)s",
        logging.INFO: "%(message)s",
        logging.WARNING: "⚠️  %(message)s",
        logging.ERROR: "❌ %(message)s",
        logging.CRITICAL: "🚨 %(message)s",
    }

    def __init__(self) -> None:
        super().__init__()
        self._formatters = {
            level: logging.Formatter(fmt) for level, fmt in self.FORMATS.items()
        }

    def format(self, record: Any) -> str:
        formatter = self._formatters.get(record.levelno, self._formatters[logging.INFO])
        return formatter.format(record)


def configure_logging(level: int = logging.INFO) -> None:
    """Route fastbezier logs and Python warnings (numpy overflow etc.) to stderr."""
    handler = logging.StreamHandler()
    handler.setFormatter(LevelFormatter())

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers = []
    root_logger.addHandler(handler)

    logging.captureWarnings(True)
