from .cavity import CavityConfig, QuadratureSpec, PressureResult
from .quadrature import integrate_2d
from .forces import layer_force_integrand, slab_coefficients, gap_coefficients, stress_integrand, gap_integrand, \
    net_force_integrand, stress_in_slab, gap_force, net_force_on_slab

__all__ = ["CavityConfig", "QuadratureSpec", "PressureResult", "integrate_2d", "layer_force_integrand",
           "slab_coefficients", "gap_coefficients", "stress_integrand", "gap_integrand", "net_force_integrand",
           "stress_in_slab", "gap_force", "net_force_on_slab"]
