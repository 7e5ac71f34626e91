"""Radial quadrature on the truncated unit ball.

Integrals of radially symmetric functions over the ball reduce to weighted
1-d integrals,

    int_B f(|x|) dmu = n*omega_n * int_0^Rmax f(r) rho(r) r^(n-1) dr,

where rho is the density of the selected measure against Lebesgue measure.
The Klein density (1-r^2)^(-(n+1)/2) blows up at r = 1, so all rules live on
a truncated interval [0, Rmax] with Rmax < 1; panels are refined
geometrically toward the boundary so the blow-up profile is resolved
cheaply.  A Monte-Carlo ball integrator provides a non-radial oracle for
cross-checks.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MEASURES",
    "QuadratureConfig",
    "RadialGrid",
    "ball_integral_mc",
    "measure_density",
    "radial_grid",
    "radial_integral",
    "sphere_area",
    "unit_ball_volume",
]

#: Recognized measure tags: plain Lebesgue measure, the Klein (hyperbolic)
#: volume, and the canonical volume of the interpolating metric at the `a`
#: stored in the model parameters ("finsler" is accepted as a shorthand).
MEASURES = ("lebesgue", "klein", "finsler_a")


def _canonical_measure(measure):
    if measure == "finsler":
        return "finsler_a"
    if measure in MEASURES:
        return measure
    raise ValueError(f"unknown measure {measure!r}; expected one of {MEASURES}")


def _gamma_half(twice_x):
    """Gamma(twice_x / 2) for a positive integer twice_x.

    Only integer and half-integer arguments occur in ball volumes, so a
    factorial formula covers everything and keeps the core free of
    special-function imports.
    """
    k = int(twice_x)
    if k != twice_x or k <= 0:
        raise ValueError(f"argument must be a positive multiple of 1/2, got {twice_x / 2}")
    if k % 2 == 0:
        return float(math.factorial(k // 2 - 1))
    m = (k - 1) // 2
    return math.factorial(2 * m) / (4.0**m * math.factorial(m)) * math.sqrt(math.pi)


def unit_ball_volume(n):
    """Euclidean volume omega_n = pi^(n/2) / Gamma(n/2 + 1) of the unit ball."""
    if n < 0 or n != int(n):
        raise ValueError(f"dimension must be a nonnegative integer, got {n}")
    n = int(n)
    return math.pi ** (0.5 * n) / _gamma_half(n + 2)


def sphere_area(n):
    """Surface area of the unit sphere S^(n-1), i.e. n * omega_n."""
    return n * unit_ball_volume(n)


@dataclass(frozen=True)
class QuadratureConfig:
    """Knobs for the radial quadrature rule.

    Parameters
    ----------
    m : int
        Gauss-Legendre points per panel.  The default 64 makes each panel
        essentially exact for smooth integrands.
    r_max : float
        Truncation radius, strictly inside the unit interval.  Integrals
        that diverge as the truncation approaches 1 are exhibited by
        sweeping ``r_max``, never by evaluating at 1.
    scheme : str
        ``"geometric"`` refines panels toward the boundary (default);
        ``"uniform"`` splits [0, r_max] into ``n_panels`` equal panels,
        which is mainly useful for convergence-order studies.
    n_panels : int
        Panel count for the uniform scheme.
    """

    m: int = 64
    r_max: float = 1.0 - 1e-6
    scheme: str = "geometric"
    n_panels: int = 8

    def __post_init__(self):
        if self.m < 8:
            raise ValueError(f"need at least 8 points per panel, got {self.m}")
        if not 0.0 < self.r_max < 1.0:
            raise ValueError(f"r_max must lie in (0, 1), got {self.r_max}")
        if self.scheme not in ("geometric", "uniform"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.n_panels < 1:
            raise ValueError("n_panels must be positive")


@dataclass(frozen=True)
class RadialGrid:
    """A flattened 1-d quadrature rule on (0, r_max].

    ``sum(weights * phi(nodes))`` approximates ``int_0^r_max phi(r) dr``.
    """

    nodes: np.ndarray
    weights: np.ndarray
    r_max: float
    m: int

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        if nodes.ndim != 1 or nodes.shape != weights.shape:
            raise ValueError("nodes and weights must be matching 1-d arrays")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")
        if np.any(weights <= 0):
            raise ValueError("weights must be positive")
        if not 0.0 < self.r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")


def _panel_edges(cfg):
    if cfg.scheme == "uniform":
        return np.linspace(0.0, cfg.r_max, cfg.n_panels + 1)
    # Geometric refinement toward the singularity at r = 1: each panel halves
    # the remaining distance to 1, stopping once the next edge would pass
    # r_max.  Panel widths then track the (1-r) scale of the Klein blow-up.
    edges = [0.0]
    while True:
        nxt = 1.0 - 0.5 * (1.0 - edges[-1])
        if nxt >= cfg.r_max - 0.25 * (1.0 - cfg.r_max):
            break
        edges.append(nxt)
    edges.append(cfg.r_max)
    return np.array(edges)


def radial_grid(cfg=None):
    """Build the panel Gauss-Legendre rule described by ``cfg``."""
    if cfg is None:
        cfg = QuadratureConfig()
    gx, gw = np.polynomial.legendre.leggauss(cfg.m)
    edges = _panel_edges(cfg)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(lo + half * (gx + 1.0))
        weights.append(half * gw)
    return RadialGrid(
        nodes=np.concatenate(nodes),
        weights=np.concatenate(weights),
        r_max=cfg.r_max,
        m=cfg.m,
    )


def measure_density(params, r, measure):
    """Density of the tagged measure against Lebesgue measure at radius r.

    ``"lebesgue"`` is 1, ``"klein"`` is (1-r^2)^(-(n+1)/2), and
    ``"finsler_a"`` is ((1 - a^2 r^2)/(1 - r^2))^((n+1)/2) for the `a` held
    in ``params``.
    """
    measure = _canonical_measure(measure)
    r = np.asarray(r, dtype=float)
    if measure == "lebesgue":
        return np.ones_like(r)
    p = 0.5 * (params.n + 1)
    if measure == "klein":
        return (1.0 - r * r) ** (-p)
    return ((1.0 - (params.a * r) ** 2) / (1.0 - r * r)) ** p


def _sample_radial(f, r):
    vals = np.asarray(f(r), dtype=float)
    if vals.shape != r.shape:
        vals = np.array([float(f(ri)) for ri in r])
    return vals


def radial_integral(f, params, measure, cfg=None):
    """Integrate a radial function over the truncated ball.

    Parameters
    ----------
    f : callable
        Radial profile ``f(r)``; may accept arrays or scalars.
    params : ModelParams
        Supplies the dimension (and `a` for the ``"finsler"`` measure).
    measure : str
        One of :data:`MEASURES`.
    cfg : QuadratureConfig, optional

    Returns
    -------
    float

    Raises
    ------
    ValueError
        If any integrand sample is non-finite, or the measure tag is
        unknown.
    """
    if cfg is None:
        cfg = QuadratureConfig()
    grid = radial_grid(cfg)
    r = grid.nodes
    vals = _sample_radial(f, r)
    if not np.all(np.isfinite(vals)):
        bad = r[~np.isfinite(vals)][:3]
        raise ValueError(f"non-finite integrand samples near r = {bad}")
    rho = measure_density(params, r, measure)
    return sphere_area(params.n) * float(
        np.sum(grid.weights * vals * rho * r ** (params.n - 1))
    )


def ball_integral_mc(f, params, measure, samples, seed, r_max=1.0):
    """Monte-Carlo integral of a (not necessarily radial) function.

    Draws ``samples`` points uniformly from the ball of radius ``r_max``
    and averages ``f * density``.  Deterministic for a fixed ``seed``.

    Parameters
    ----------
    f : callable
        Accepts an ``(N, n)`` array of points and returns ``(N,)`` values;
        a scalar signature ``f(x)`` also works.
    samples : int
        At least 1000.
    r_max : float
        Sampling radius; use a truncated radius when the selected measure
        is singular at the boundary.

    Returns
    -------
    (estimate, standard_error) : tuple of float
    """
    if samples < 1000:
        raise ValueError(f"need at least 1000 samples, got {samples}")
    if not 0.0 < r_max <= 1.0:
        raise ValueError("r_max must lie in (0, 1]")
    n = params.n
    rng = np.random.default_rng(seed)
    dirs = rng.standard_normal((samples, n))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    radii = r_max * rng.random(samples) ** (1.0 / n)
    pts = dirs * radii[:, None]
    try:
        vals = np.asarray(f(pts), dtype=float)
        if vals.shape != (samples,):
            raise TypeError
    except TypeError:
        vals = np.array([float(f(x)) for x in pts])
    if not np.all(np.isfinite(vals)):
        raise ValueError("non-finite integrand samples")
    weighted = vals * measure_density(params, radii, measure)
    vol = unit_ball_volume(n) * r_max**n
    est = vol * float(np.mean(weighted))
    stderr = vol * float(np.std(weighted, ddof=1)) / np.sqrt(samples)
    return est, stderr
