import logging

from .event import EventHook
from .log import LOG, set_loglevel, set_logs_enabled
from .numeric import format_float, is_strictly_increasing, relative_deviation, first_nonfinite, geometric_grid, \
    linear_grid


# library code only reports warnings unless the caller asks for more
set_logs_enabled(LOG.ALL)
for _log_enum, _logger in LOG.items():
    if _logger.level == logging.NOTSET:
        _logger.setLevel(logging.WARNING)

__all__ = ["EventHook", "LOG", "set_loglevel", "set_logs_enabled", "format_float", "is_strictly_increasing",
           "relative_deviation", "first_nonfinite", "geometric_grid", "linear_grid"]
