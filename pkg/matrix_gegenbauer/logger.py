# path: matrix_gegenbauer/logger.py

import os
import sys
import logging
import structlog
from typing import List, Literal
from logging.handlers import RotatingFileHandler

HANDLER_PREFIX = 'matrix_gegenbauer.'
LOG_FILE = 'matrix_gegenbauer.log'

# exact arithmetic backends, chatty at DEBUG
QUIET_LOGGERS = ['sympy', 'mpmath']


def _processors() -> List:
    return [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
    ]


def _replace_handlers(root_logger: logging.Logger, handlers: List[logging.Handler]) -> None:
    """Swap out handlers from an earlier configure_logging call, leave foreign ones alone."""
    for handler in [h for h in root_logger.handlers if (h.get_name() or '').startswith(HANDLER_PREFIX)]:
        root_logger.removeHandler(handler)
        handler.close()
    for handler in handlers:
        root_logger.addHandler(handler)


def configure_logging(log_level: str, logging_dir: str = 'logs',
                      environment: Literal['dev', 'prod', 'test'] = 'dev') -> None:
    """
    Configure logging for a run.

    Values bound with structlog.contextvars (suite, size, nu) are merged into every event.

    :param log_level: The log level to use.
    :param logging_dir: The directory to store log files.
    :param environment: The environment to configure logging for, can be 'dev', 'prod' or 'test'.
    """
    level = logging.INFO if environment == 'prod' else getattr(logging, log_level.upper(), logging.INFO)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(level, logging.INFO))

    os.makedirs(logging_dir, exist_ok=True)

    structlog.configure(
        processors=_processors(),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,  # type: ignore[attr-defined]
        cache_logger_on_first_use=True,
    )
    renderer = structlog.dev.ConsoleRenderer() if environment == 'dev' else structlog.processors.JSONRenderer()
    formatter = structlog.stdlib.ProcessorFormatter(processor=renderer)

    # stdout is reserved for command output
    console = logging.StreamHandler(sys.stderr)
    console.set_name(f"{HANDLER_PREFIX}stream")
    rotating = RotatingFileHandler(os.path.join(logging_dir, LOG_FILE), maxBytes=10 * 1024 * 1024, backupCount=5)
    rotating.set_name(f"{HANDLER_PREFIX}file")
    for handler in (console, rotating):
        handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    _replace_handlers(root_logger, [console, rotating])
