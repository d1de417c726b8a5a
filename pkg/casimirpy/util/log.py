import logging
from enum import IntEnum


class LOG(IntEnum):
    NONE = 0 << 0  # log nothing
    MATERIALS = 1 << 0  # log permittivity model warnings
    OPTICS = 1 << 1  # log reflection coefficient guards
    QUADRATURE = 1 << 2  # log refinement and convergence of every double integral
    FORCES = 1 << 3  # log stress and force evaluations
    SWEEP = 1 << 4  # log sweep rows and closed form regime warnings
    ORACLE = 1 << 5  # log brute force cross-checks
    CLI = 1 << 6  # log configuration parsing and file output
    ALL = 0b1111111  # log all events

    def logger_name(self):
        """
        :return: name of the corresponding logger instance
        """
        if self == LOG.MATERIALS:
            return "MaterialsLogger"
        if self == LOG.OPTICS:
            return "OpticsLogger"
        if self == LOG.QUADRATURE:
            return "QuadratureLogger"
        if self == LOG.FORCES:
            return "ForcesLogger"
        if self == LOG.SWEEP:
            return "SweepLogger"
        if self == LOG.ORACLE:
            return "OracleLogger"
        if self == LOG.CLI:
            return "CommandLineLogger"
        return ""

    def get_logger(self):
        """
        :return: reference to the corresponding logger instance
        """
        return logging.getLogger(self.logger_name())

    @classmethod
    def items(cls):
        """
        Iterate over all LOG enums and the corresponding logger instances.
        """
        i = LOG.MATERIALS.value
        while i < LOG.ALL.value:
            log_enum = LOG(i)
            yield log_enum, log_enum.get_logger()
            i <<= 1


def set_logs_enabled(logs):
    """
    Usage: set_logs_enabled(LOG.QUADRATURE | LOG.SWEEP)

    :param logs: different logs to enable
    """
    for log_enum, logger in LOG.items():
        # enable or disable the propagation
        logger.propagate = bool(log_enum & logs)


def set_loglevel(logs, level):
    """
    Change the loglevel for all specified logs.
    Usage: set_loglevel(LOG.QUADRATURE | LOG.FORCES, logging.DEBUG)
    :param logs: different logs to change
    :param level: log level
    """
    min_log_level = level

    for log_enum, logger in LOG.items():
        # change the log level
        if log_enum & logs:
            logger.setLevel(level)
        if logger.level != logging.NOTSET:
            min_log_level = min(logger.level, min_log_level)

    # the basic config needs to be enabled for the lowest required loglevel
    logging.basicConfig(level=min_log_level)
    logging.getLogger().setLevel(min_log_level)
