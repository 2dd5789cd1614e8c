"""The per-mode Green's function I_nu(min) K_nu(max) and the summed model kernel.

Prints the finite-difference residual order of the mode ODE, the derivative
jump across the diagonal (which must be -1/kappa0), the approach to the
limit e^(-nu |log s|)/(2 nu) along kappa -> 0, and finally the model kernel
on the cone over S^3 in degree 2 with its tail bound for growing radius.
"""
from hodgecone import sphere_preset
from hodgecone.cone_kernels import model_kernel, verify_mode_ode, wronskian_jump, zf_limit_check


def main():
    for nu in (0.5, 1.0, 3.0):
        check = verify_mode_ode(nu, 2.5)
        print(f"nu={nu}: residuals {['%.2e' % r for r in check.residuals]}, order {check.order:.3f}")
    for k0 in (0.01, 1.0, 50.0):
        print(f"jump at kappa0={k0}: {wronskian_jump(2.0, k0):.15g} (expected {-1 / k0:.15g})")
    rep = zf_limit_check(1.0, 2.0)
    for k, d in zip(rep.kappas, rep.deviations):
        print(f"kappa={k:.0e}: |g - limit| = {d:.3e}")
    cs = sphere_preset(4, 40)
    for radius in (3, 6, 12, 18):
        res = model_kernel(cs, 2, 0.5, 1.0, radius)
        print(f"radius {radius:>2}: {len(res.modes)} modes, sum {res.total:.15f}, tail <= {res.tail_bound:.2e}")


if __name__ == "__main__":
    main()
