import logging
import os
import sys
from io import StringIO
from typing import Any

IMPORTANT: int = logging.INFO + 5


def log_level(self, message: Any, *args, **kwargs):
    # disable pylint checks for using `self._log`
    # pylint: disable=W0212
    if self.isEnabledFor(IMPORTANT):
        self._log(IMPORTANT, message, args, **kwargs)


def log_root(message: Any, *args, **kwargs):
    logging.log(IMPORTANT, message, *args, **kwargs)


logging.addLevelName(IMPORTANT, "IMPORTANT")
setattr(logging, "IMPORTANT", IMPORTANT)
setattr(logging.getLoggerClass(), "important", log_level)
setattr(logging, "important", log_root)

LOGGER_NAMES: tuple = ("coordsynth", "synthesis", "verify")

logger: logging.Logger = logging.getLogger("coordsynth")
logger.setLevel(logging.DEBUG)

synthesis: logging.Logger = logging.getLogger("synthesis")
synthesis.setLevel(logging.DEBUG)

verify: logging.Logger = logging.getLogger("verify")
verify.setLevel(logging.DEBUG)

formatter: logging.Formatter = logging.Formatter(
    "[%(levelname)-9s] (%(name)-13s) %(asctime)s  %(message)s"
)

LOG_STREAM: StringIO = StringIO()
string_handler: logging.StreamHandler = logging.StreamHandler(LOG_STREAM)
string_handler.setLevel(logging.INFO)
string_handler.setFormatter(formatter)
for _name in LOGGER_NAMES:
    logging.getLogger(_name).addHandler(string_handler)

_configured: list = []


def configure(config: dict) -> None:
    """Attach the console handler and, when enabled, the info/debug log files.

    Safe to call more than once; handlers from an earlier call are replaced.
    """
    settings: dict = config.get("logging", {})
    level = logging.getLevelName(str(settings.get("level", "WARNING")).upper())
    if not isinstance(level, int):
        level = logging.WARNING

    for handler in _configured:
        for name in LOGGER_NAMES:
            logging.getLogger(name).removeHandler(handler)
        handler.close()
    _configured.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    _configured.append(console_handler)

    if settings.get("files", False):
        directory = settings.get("directory", "logs")
        os.makedirs(directory, exist_ok=True)

        file_handler = logging.FileHandler(os.path.join(directory, "info.log"), mode="w")
        file_handler.setLevel(logging.INFO)
        file_handler.setFormatter(formatter)
        _configured.append(file_handler)

        debug_file_handler = logging.FileHandler(os.path.join(directory, "debug.log"), mode="w")
        debug_file_handler.setLevel(logging.DEBUG)
        debug_file_handler.setFormatter(formatter)
        _configured.append(debug_file_handler)

    for handler in _configured:
        for name in LOGGER_NAMES:
            logging.getLogger(name).addHandler(handler)

    logger.info("STARTED LOGGING")
