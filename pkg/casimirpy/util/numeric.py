import math

import numpy as np


def format_float(value):
    """
    Format a float in scientific notation with enough digits to round trip.
    :param value: float or None
    :return: string, empty for None
    """
    if value is None:
        return ""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return "{0:.16e}".format(value)


def is_strictly_increasing(values):
    """
    :param values: sequence of numbers
    :return: True if every value is larger than its predecessor
    """
    values = np.asarray(values, dtype=float)
    return bool(np.all(np.diff(values) > 0))


def relative_deviation(value, reference):
    """
    :param value: computed number
    :param reference: reference number
    :return: |value - reference| / |reference|, or the absolute deviation if the reference vanishes
    """
    value = np.asarray(value, dtype=float)
    reference = np.asarray(reference, dtype=float)
    scale = np.where(reference == 0, 1.0, np.abs(reference))
    return np.abs(value - reference) / scale


def first_nonfinite(values, *coordinates):
    """
    Locate the first NaN or inf entry.
    :param values: array of integrand values
    :param coordinates: arrays broadcastable to values
    :return: tuple with the coordinates of the first non finite entry, or None if all entries are finite
    """
    values = np.asarray(values)
    bad = ~np.isfinite(values)
    if not bad.any():
        return None
    index = np.unravel_index(np.argmax(bad), values.shape)
    return tuple(float(np.broadcast_to(c, values.shape)[index]) for c in coordinates)


def geometric_grid(start, stop, num):
    """
    :param start: first value (> 0)
    :param stop: last value (> start)
    :param num: number of points
    :return: log spaced grid as a tuple of floats
    """
    return tuple(float(v) for v in np.geomspace(start, stop, int(num)))


def linear_grid(start, stop, num):
    """
    :param start: first value
    :param stop: last value
    :param num: number of points
    :return: evenly spaced grid as a tuple of floats, rounded to remove representation noise
    """
    return tuple(float(v) for v in np.round(np.linspace(start, stop, int(num)), 12))
