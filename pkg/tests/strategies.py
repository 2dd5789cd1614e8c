"""Hypothesis strategies for random cross-sections."""
import random
from fractions import Fraction

from hypothesis import strategies as st

import oracles
from hodgecone.spectral_data import from_lists


@st.composite
def cross_sections(draw, dims=(2, 7), zero_root_bias=False):
    """(cs, dim, betti, exact, q) built from a random seed.

    With ``zero_root_bias`` the degree-q exact list may receive the
    eigenvalue 1 - (n/2 - q)^2 that puts 0 into the indicial set.
    """
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    dim = rng.randint(*dims)
    betti = oracles.random_betti(rng, dim)
    exact = oracles.random_exact_lists(rng, dim)
    q = draw(st.integers(0, dim + 1))
    if zero_root_bias and 1 <= q <= dim and draw(st.booleans()):
        c = Fraction(dim + 1, 2) - q
        level = 1 - c * c
        if level > 0 and level not in [e for e, _ in exact[q]]:
            exact[q] = sorted(exact[q] + [(level, 1)])
    cs = from_lists(dim, betti, exact, oracles.truncations(dim, exact))
    return cs, dim, betti, exact, q
