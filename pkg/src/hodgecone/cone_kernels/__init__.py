from .bessel import (BesselEval, bessel_i, bessel_i_prime, bessel_i_scaled, bessel_k, bessel_k_prime,
                     bessel_k_scaled, log_bessel_i, log_bessel_k, wronskian)
from .kernel import (ModeKernel, ModelKernelResult, MomentCheck, OdeCheck, ZfLimitReport, ktilde_moment,
                     mode_green, model_kernel, verify_mode_ode, wronskian_jump, zf_limit, zf_limit_check)

__all__ = [
    "BesselEval",
    "bessel_i",
    "bessel_i_prime",
    "bessel_i_scaled",
    "bessel_k",
    "bessel_k_prime",
    "bessel_k_scaled",
    "log_bessel_i",
    "log_bessel_k",
    "wronskian",
    "ModeKernel",
    "ModelKernelResult",
    "MomentCheck",
    "OdeCheck",
    "ZfLimitReport",
    "ktilde_moment",
    "mode_green",
    "model_kernel",
    "verify_mode_ode",
    "wronskian_jump",
    "zf_limit",
    "zf_limit_check",
]
