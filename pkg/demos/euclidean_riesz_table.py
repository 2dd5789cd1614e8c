"""Riesz-transform intervals on R^n, degree by degree.

R^n is the cone over the round sphere S^(n-1).  For every degree q the
script prints nu0, the decay index nu_D and the sharp L^p interval, first
with a trivial L^2 kernel and then for kernels decaying like r^-(n/2) and
r^-(n/2 - 1).
"""
import sys
from fractions import Fraction

from hodgecone import TopologyInput, riesz_interval, sphere_preset
from hodgecone.spectral_data import sphere_jmax_for_radius


def main(ns=(3, 4, 5, 6, 7, 8)):
    for n in ns:
        cs = sphere_preset(n, sphere_jmax_for_radius(10))
        half = Fraction(n, 2)
        print(f"R^{n}")
        for q in range(n + 1):
            # functions and top forms need the injectivity of e_1, which depends on the number of ends
            flags = {"e_injective_q_plus_1": True} if q == 0 else (
                {"e_injective_n_minus_q_plus_1": True} if q == n else {})
            plain = riesz_interval(cs, q, TopologyInput(**flags))
            line = f"  q={q}: nu0={plain.nu0}, nu_D={plain.nu_D}, no kernel {plain.sharp_interval}"
            if 0 < q < n:
                slow = riesz_interval(cs, q, TopologyInput(kernel_dim=1, kernel_decay=float(half)))
                line += f", kernel ~ r^-{half}: {slow.sharp_interval}"
                if half - 1 > 1:
                    slower = riesz_interval(cs, q, TopologyInput(kernel_dim=1, kernel_decay=float(half - 1)))
                    line += f", kernel ~ r^-{half - 1}: {slower.sharp_interval}"
            print(line)
        one_end = riesz_interval(cs, 0, TopologyInput(e_injective_q_plus_1=False))
        print(f"  functions, e_1 not injective (two ends): case {one_end.case}, {one_end.sharp_interval}")


if __name__ == "__main__":
    main(tuple(int(a) for a in sys.argv[1:]) or (3, 4, 5, 6, 7, 8))
