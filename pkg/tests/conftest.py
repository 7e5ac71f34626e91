"""Shared fixtures: random smooth compactly supported radial profiles.

Profiles are C^1 with exact closed-form derivatives so norm tests are not
polluted by differentiation error.
"""

import numpy as np
import pytest

from funkball import ModelParams, RadialFunction


def bump_callables(rng, r_support=None):
    """Random u(r) = (1 - (r/R)^2)_+^p * (c0 + c1 r + c2 r^2) with exact du.

    Support radius R < 1, p >= 2 so du is continuous at R.
    """
    R = float(r_support) if r_support is not None else float(rng.uniform(0.35, 0.85))
    p = int(rng.integers(2, 4))
    coef = rng.standard_normal(3)
    if np.max(np.abs(coef)) < 0.1:
        coef[0] += 1.0  # keep the profile visibly nonzero

    def u(r):
        r = np.asarray(r, dtype=float)
        inside = np.clip(1.0 - (r / R) ** 2, 0.0, None)
        return inside**p * (coef[0] + coef[1] * r + coef[2] * r * r)

    def du(r):
        r = np.asarray(r, dtype=float)
        inside = np.clip(1.0 - (r / R) ** 2, 0.0, None)
        dbase = np.where(inside > 0.0, -2.0 * p * r / (R * R) * inside ** (p - 1), 0.0)
        poly = coef[0] + coef[1] * r + coef[2] * r * r
        return dbase * poly + inside**p * (coef[1] + 2.0 * coef[2] * r)

    return u, du, R


def random_profile(rng, r_support=None):
    u, du, _ = bump_callables(rng, r_support)
    return RadialFunction.from_callables(u, du, r_max=1.0)


def random_ball_point(rng, n, r_cap=0.95):
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    return v * rng.uniform(0.0, r_cap)


@pytest.fixture
def rng():
    return np.random.default_rng(20260825)


@pytest.fixture(params=[2, 3, 4])
def dim(request):
    return request.param


@pytest.fixture
def params3(request):
    return ModelParams(n=3, a=0.5)
