"""
All possible exceptions.
"""


class DomainError(ValueError):
    """
    Thrown when an argument lies outside the domain of an operation (non-positive thickness or energy, negative
    imaginary frequency, z outside of (-1, 1), ...).
    """
    pass


class UsageError(TypeError):
    """
    Thrown when a model is used in a role it can not play, e.g. asking a perfect mirror for its permittivity or
    putting it inside the cavity.
    """
    pass


class NumericalSingularityError(ArithmeticError):
    """
    Thrown when a multiple reflection denominator hits the guard or an integrand returns NaN.
    The offending spectral point is available as `xi` and `k` (None if unknown).
    """

    def __init__(self, message, xi=None, k=None):
        super(NumericalSingularityError, self).__init__(message)
        self.xi = xi
        self.k = k

    def __str__(self):
        msg = super(NumericalSingularityError, self).__str__()
        if self.xi is None and self.k is None:
            return msg
        return "{0} at (xi={1!r}, k={2!r})".format(msg, self.xi, self.k)


class ConfigValidationError(ValueError):
    """
    Thrown when a run configuration is invalid. All detected problems are listed in `problems`.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super(ConfigValidationError, self).__init__("; ".join(self.problems))


class UnknownConfigKeysError(ConfigValidationError):
    """
    Thrown when a run configuration contains keys which are not part of the schema.
    """

    def __init__(self, keys, where="configuration"):
        self.keys = sorted(keys)
        super(UnknownConfigKeysError, self).__init__(
            "unknown keys in {0}: {1}".format(where, ", ".join(self.keys)))


class UnsupportedSchemaError(ConfigValidationError):
    """
    Thrown when the "schema" field of a run configuration is missing or names an unsupported version.
    """
    pass


class UnknownMaterialError(ConfigValidationError):
    """
    Thrown when a material definition names an unknown dielectric model.
    """
    pass
