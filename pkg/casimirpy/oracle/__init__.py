from .grid import GridOracleSpec, brute_force_integral
from .transfer import Layer, StackDescription, transfer_matrix_r
from .checks import verify_stack_coefficients, verify_quadrature, random_configuration

__all__ = ["GridOracleSpec", "brute_force_integral", "Layer", "StackDescription", "transfer_matrix_r",
           "verify_stack_coefficients", "verify_quadrature", "random_configuration"]
