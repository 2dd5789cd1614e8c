import math

import numpy as np
import pytest

from hodgecone.torsion import RadialProblem, radial_eigenvalues
from hodgecone.torsion.radial import check_end_tags, discretize


def test_round_three_sphere_modes():
    # S^3 = sin-warped over S^2: the angular degree-l block has eigenvalues k(k+2), k >= l
    for l in (0, 1, 2):
        res = radial_eigenvalues(RadialProblem(np.sin, (0.0, math.pi), l * (l + 1), 1e-2, 3), 3)
        expect = [k * (k + 2) for k in range(l, l + 3)]
        assert np.allclose(res.eigenvalues, expect, atol=1e-6)
        assert np.all(np.abs(res.eigenvalues - expect) <= 10 * res.error + 1e-9)
        moving = np.abs(res.eigenvalues) > 1e-6  # the constant mode has no discretization error
        assert np.all((res.ratio[moving] > 3.5) & (res.ratio[moving] < 4.5))


def test_round_two_sphere_functions():
    res = radial_eigenvalues(RadialProblem(np.sin, (0.0, math.pi), 0.0, 1e-2, 2), 4)
    assert np.allclose(res.eigenvalues, [0, 2, 6, 12], atol=1e-6)


def test_neumann_interval():
    # f = 1 on [0, 1] with walls: Neumann eigenvalues (k pi)^2
    res = radial_eigenvalues(RadialProblem(lambda r: np.ones_like(r), (0.0, 1.0), 0.0, 1e-2, 3, "wall", "wall"), 3)
    assert np.allclose(res.eigenvalues, [(k * math.pi) ** 2 for k in range(3)], atol=1e-6)


def test_tags_are_checked():
    with pytest.raises(ValueError, match="pole"):
        check_end_tags(RadialProblem(lambda r: r * (2 - r), (0.0, 2.0), 0.0, 1e-2, 3))
    check_end_tags(RadialProblem(lambda r: 0.5 * r * (2 - r), (0.0, 2.0), 0.0, 1e-2, 3))
    with pytest.raises(ValueError, match="wall"):
        check_end_tags(RadialProblem(np.sin, (0.0, math.pi), 0.0, 1e-2, 3, "wall", "pole"))
    with pytest.raises(ValueError, match="does not vanish"):
        check_end_tags(RadialProblem(lambda r: r + 1, (0.0, 1.0), 0.0, 1e-2, 3, "pole", "wall"))
    check_end_tags(RadialProblem(lambda r: 0.5 * np.sin(r), (0.0, math.pi), 0.0, 1e-2, 3, "cone", "cone"))


def test_problem_validation():
    with pytest.raises(ValueError):
        RadialProblem(np.sin, (1.0, 1.0))
    with pytest.raises(ValueError):
        RadialProblem(np.sin, (0.0, 1.0), -1.0)
    with pytest.raises(ValueError):
        RadialProblem(np.sin, (0.0, 1.0), 0.0, 2.0)
    with pytest.raises(ValueError):
        RadialProblem(np.sin, (0.0, 1.0), left="edge")
    with pytest.raises(ValueError):
        radial_eigenvalues(RadialProblem(np.sin, (0.0, math.pi)), 0)
    with pytest.raises(ValueError, match="positive"):
        discretize(RadialProblem(np.cos, (0.0, math.pi)))
