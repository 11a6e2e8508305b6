"""Offspring laws: built-in pmfs, generating functions, validation."""

import math

import numpy as np
import pytest

import pairdom as pd
from pairdom.errors import DomainError, InvalidDistribution


@pytest.mark.parametrize("name,var", [("binary", 0.5), ("plane", 2.0), ("labelled", 1.0)])
def test_builtin_moments(name, var):
    dist = pd.get_distribution(name)
    assert abs(float(dist.pmf.sum()) - 1.0) < 1e-12
    assert abs(dist.mean - 1.0) < 1e-12
    assert abs(dist.variance - var) < 1e-9
    assert dist.pmf[0] > 0
    assert dist.d0 == 2


def test_builtin_pmf_values():
    assert np.allclose(pd.binary_offspring().pmf, [0.25, 0.5, 0.25])
    plane = pd.plane_offspring()
    assert np.allclose(plane.pmf[:4], [0.5, 0.25, 0.125, 0.0625])
    lab = pd.labelled_offspring()
    assert abs(lab.pmf[0] - math.exp(-1)) < 1e-15
    assert abs(lab.pmf[3] - math.exp(-1) / 6) < 1e-15


@pytest.mark.parametrize("name", ["binary", "plane", "labelled"])
def test_pgf_series_matches_closed_form(name):
    dist = pd.get_distribution(name)
    for x in np.linspace(0.0, 1.0, 21):
        assert abs(dist.pgf(float(x)) - dist.pgf_series(float(x))) < 1e-12


def test_pgf_endpoints():
    plane = pd.plane_offspring()
    assert abs(pd.evaluate_pgf(plane, 0.0) - 0.5) < 1e-15
    assert abs(pd.evaluate_pgf(plane, 1.0) - 1.0) < 1e-12
    lab = pd.labelled_offspring()
    assert abs(lab.pgf(0.5) - math.exp(-0.5)) < 1e-15
    assert abs(lab.pgf_series(0.5) - math.exp(-0.5)) < 1e-12
    for dist in (plane, lab, pd.binary_offspring()):
        assert abs(dist.pgf(1.0) - 1.0) < 1e-12


def test_pgf_monotone():
    dist = pd.labelled_offspring()
    grid = [dist.pgf(x) for x in np.linspace(0, 1, 50)]
    assert all(a <= b + 1e-15 for a, b in zip(grid, grid[1:]))


def test_pgf_domain():
    with pytest.raises(DomainError):
        pd.binary_offspring().pgf(1.5)
    with pytest.raises(DomainError):
        pd.evaluate_pgf(pd.binary_offspring(), -0.1)


def test_custom_valid():
    dist = pd.custom_offspring([0.6, 0.0, 0.1, 0.2 / 3 * 3 - 0.0, 0.0])
    # support {0, 2, 3} with mean 1: p2 = 0.2, p3 = 0.2, p0 = 0.6
    dist = pd.custom_offspring([0.6, 0.0, 0.2, 0.2])
    assert dist.name == "custom"
    assert dist.d0 == 2
    assert abs(dist.pgf(0.5) - (0.6 + 0.2 * 0.25 + 0.2 * 0.125)) < 1e-15


def test_custom_rejections():
    with pytest.raises(InvalidDistribution):
        pd.custom_offspring([0.5, 0.5])  # mean 1/2, not critical
    with pytest.raises(InvalidDistribution):
        pd.custom_offspring([0.0, 1.0])  # no chance of zero offspring
    with pytest.raises(InvalidDistribution):
        pd.custom_offspring([0.5, 0.0, 0.5])  # gcd of support is 2
    with pytest.raises(InvalidDistribution):
        pd.custom_offspring([0.7, 0.2, 0.2])  # does not sum to 1
    with pytest.raises(InvalidDistribution):
        pd.custom_offspring([1.0])  # degenerate, zero variance
    with pytest.raises(InvalidDistribution):
        pd.custom_offspring([0.6, -0.2, 0.6])
    with pytest.raises(InvalidDistribution):
        pd.get_distribution("nosuch")


def test_custom_d0_examples():
    dist = pd.custom_offspring([0.5, 1.0 / 6, 0.0, 1.0 / 3])
    assert dist.d0 == 3


def test_sampling_matches_support():
    gen = np.random.default_rng(0)
    for name in pd.BUILTIN_MODELS:
        dist = pd.get_distribution(name)
        draws = dist.sample(gen, 2000)
        assert draws.min() >= 0
        if name == "binary":
            assert draws.max() <= 2
    custom = pd.custom_offspring([0.6, 0.0, 0.2, 0.2])
    draws = custom.sample(gen, 2000)
    assert set(np.unique(draws)) <= {0, 2, 3}


def test_load_pmf_file(tmp_path):
    path = tmp_path / "law.pmf"
    path.write_text("# comment\n0 0.6\n2 0.2\n3 0.2\n")
    pmf = pd.load_pmf_file(path)
    assert np.allclose(pmf, [0.6, 0.0, 0.2, 0.2])
    dist = pd.get_distribution("custom", pmf=pmf)
    assert dist.d0 == 2

    bad = tmp_path / "bad.pmf"
    bad.write_text("0 0.5 extra\n")
    with pytest.raises(InvalidDistribution):
        pd.load_pmf_file(bad)
    with pytest.raises(InvalidDistribution):
        pd.load_pmf_file(tmp_path / "bad2.pmf") if (tmp_path / "bad2.pmf").write_text("") else None
