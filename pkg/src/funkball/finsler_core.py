"""Closed-form metric calculus for the Funk-type metric family on the ball.

The family interpolates, through a parameter ``a`` in [0, 1], between the
Klein model of hyperbolic space (a = 0) and the non-reversible Funk metric
(a = 1).  On the open unit ball, with s = |x|^2,

    F_a(x, y) = ( sqrt(|y|^2 (1-s) + <x,y>^2) + a <x,y> ) / (1 - s),

a Randers-type norm on each tangent space: the Klein norm perturbed by the
one-form beta = a*x/(1-s).  Every quantity here (dual norm, Legendre map,
volume density, reversibility, distance) has an exact closed form, and each
closed form is paired with a brute-force sampling oracle so transcription
errors in either path are caught by the tests.

All functions are pure; inputs are never mutated.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BallPoint",
    "CoVec",
    "GeometryError",
    "ModelParams",
    "TanVec",
    "beta_norm",
    "funk_distance",
    "klein_cometric",
    "klein_cometric_matrix",
    "klein_metric",
    "klein_metric_matrix",
    "legendre_gradient",
    "legendre_gradient_fd",
    "polar_F_star",
    "polar_F_star_oracle",
    "randers_F",
    "reversibility",
    "reversibility_oracle",
    "uniformity_lF",
    "volume_density",
]

# Constructors reject points this close to the boundary: every closed form
# divides by (1 - |x|^2), which is catastrophically ill-conditioned there.
BOUNDARY_GUARD = 1e-14

#: Tangent vectors and covectors are plain coordinate arrays.
TanVec = np.ndarray
CoVec = np.ndarray


class GeometryError(ValueError):
    """Invalid geometric input (point outside the ball, a = 1 where
    a < 1 is required, inconsistent dimensions, ...)."""


@dataclass(frozen=True)
class ModelParams:
    """Dimension and interpolation parameter of the metric family.

    ``a = 0`` is the Klein model, ``a = 1`` the Funk model; operations that
    are only defined for a < 1 must call :meth:`require_a_below_one`.
    """

    n: int
    a: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise GeometryError(f"dimension must be an integer >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if not 0.0 <= self.a <= 1.0:
            raise GeometryError(f"interpolation parameter must lie in [0, 1], got {self.a}")
        object.__setattr__(self, "a", float(self.a))

    def require_a_below_one(self, what):
        if self.a >= 1.0:
            raise GeometryError(f"{what} requires a < 1 (got a = {self.a})")


class BallPoint:
    """A point strictly inside the unit ball.

    Rejects |x| >= 1 - 1e-14; the guard keeps (1 - |x|^2) well away from
    rounding noise.  The stored coordinate array is read-only.
    """

    __slots__ = ("x", "r")

    def __init__(self, x):
        if isinstance(x, BallPoint):
            object.__setattr__(self, "x", x.x)
            object.__setattr__(self, "r", x.r)
            return
        arr = np.array(x, dtype=float).reshape(-1)
        if arr.size < 2:
            raise GeometryError("points need at least 2 coordinates")
        if not np.all(np.isfinite(arr)):
            raise GeometryError("point coordinates must be finite")
        r = float(np.linalg.norm(arr))
        if r >= 1.0 - BOUNDARY_GUARD:
            raise GeometryError(f"|x| = {r} is not strictly inside the unit ball")
        arr.flags.writeable = False
        object.__setattr__(self, "x", arr)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name, value):
        raise AttributeError("BallPoint is immutable")

    def __repr__(self):
        return f"BallPoint({self.x.tolist()})"

    @property
    def n(self):
        return self.x.size


def _point(p):
    return p if isinstance(p, BallPoint) else BallPoint(p)


def _vec(v, n, name):
    arr = np.asarray(v, dtype=float).reshape(-1)
    if arr.size != n:
        raise GeometryError(f"{name} has length {arr.size}, expected {n}")
    if not np.all(np.isfinite(arr)):
        raise GeometryError(f"{name} must be finite")
    return arr


# ---------------------------------------------------------------------------
# Klein metric and co-metric
# ---------------------------------------------------------------------------

def klein_metric_matrix(p):
    """Matrix of the Klein metric: delta_ij/(1-s) + x_i x_j/(1-s)^2."""
    p = _point(p)
    s = p.r**2
    return np.eye(p.n) / (1.0 - s) + np.outer(p.x, p.x) / (1.0 - s) ** 2


def klein_cometric_matrix(p):
    """Inverse Klein matrix: (1-s) (delta_ij - x_i x_j)."""
    p = _point(p)
    return (1.0 - p.r**2) * (np.eye(p.n) - np.outer(p.x, p.x))


def klein_metric(p, y):
    """Klein quadratic form h_K(y, y) = (|y|^2 (1-s) + <x,y>^2) / (1-s)^2."""
    p = _point(p)
    y = _vec(y, p.n, "tangent vector")
    s = p.r**2
    return (float(y @ y) * (1.0 - s) + float(p.x @ y) ** 2) / (1.0 - s) ** 2


def klein_cometric(p, alpha):
    """Dual Klein form h_K*(alpha, alpha) = (1-s)(|alpha|^2 - <x,alpha>^2)."""
    p = _point(p)
    alpha = _vec(alpha, p.n, "covector")
    return (1.0 - p.r**2) * (float(alpha @ alpha) - float(p.x @ alpha) ** 2)


# ---------------------------------------------------------------------------
# The interpolating metric, its dual, and derived constants
# ---------------------------------------------------------------------------

def randers_F(params, p, y):
    """Norm F_a(x, y) of a tangent vector."""
    p = _point(p)
    y = _vec(y, p.n, "tangent vector")
    s = p.r**2
    xy = float(p.x @ y)
    root = math.sqrt(max(float(y @ y) * (1.0 - s) + xy * xy, 0.0))
    return max((root + params.a * xy) / (1.0 - s), 0.0)


def _randers_F_rows(params, p, Y):
    """Vectorized F_a over the rows of Y; used by the sampling oracles."""
    s = p.r**2
    xy = Y @ p.x
    yy = np.einsum("ij,ij->i", Y, Y)
    root = np.sqrt(np.maximum(yy * (1.0 - s) + xy * xy, 0.0))
    return np.maximum((root + params.a * xy) / (1.0 - s), 0.0)


def polar_F_star(params, p, alpha):
    """Dual norm of a covector.

    Closed form, with s = |x|^2 and t = <x, alpha>:

        ( sqrt((1-s)(1-a^2 s)|alpha|^2 - (1-a^2)(1-s) t^2) - a (1-s) t )
        / (1 - a^2 s).
    """
    p = _point(p)
    alpha = _vec(alpha, p.n, "covector")
    a, s = params.a, p.r**2
    t = float(p.x @ alpha)
    arg = (1.0 - s) * (1.0 - a * a * s) * float(alpha @ alpha) - (1.0 - a * a) * (1.0 - s) * t * t
    return max((math.sqrt(max(arg, 0.0)) - a * (1.0 - s) * t) / (1.0 - a * a * s), 0.0)


def beta_norm(params, p):
    """Norm of the drift one-form, which equals a*|x|.

    The closed form is cross-checked on the spot against the quadratic-form
    route through :func:`klein_cometric`; a mismatch raises.  The check
    tolerance is 1e-12 plus the rounding bound of the cancellation inside
    the quadratic form, which grows near the boundary.
    """
    p = _point(p)
    s = p.r**2
    value = params.a * p.r
    beta = params.a * p.x / (1.0 - s)
    direct = math.sqrt(max(klein_cometric(p, beta), 0.0))
    # |beta|^2 - <x,beta>^2 cancels to O(eps/(1-s)) relative accuracy.
    cond = 32.0 * np.finfo(float).eps * params.a * p.r / max(1.0 - s, 1e-300)
    if abs(direct - value) > 1e-12 + cond:
        raise GeometryError(
            f"drift-norm cross-check failed: closed form {value}, quadratic form {direct}"
        )
    return value


def reversibility(params):
    """Largest ratio F(x,y)/F(x,-y) over the ball: (1+a)/(1-a), or inf at a = 1."""
    if params.a >= 1.0:
        return math.inf
    return (1.0 + params.a) / (1.0 - params.a)


def uniformity_lF(params):
    """Uniformity constant ((1-a)/(1+a))^2; degenerates to 0 at a = 1.

    This is the modulus in the monotonicity inequality of the Legendre map,
    and the reciprocal square of :func:`reversibility`.
    """
    if params.a >= 1.0:
        return 0.0
    return ((1.0 - params.a) / (1.0 + params.a)) ** 2


def volume_density(params, p):
    """Density of the canonical volume against Lebesgue measure.

    ((1 - a^2 |x|^2) / (1 - |x|^2))^((n+1)/2); identically 1 at a = 1.
    """
    p = _point(p)
    s = p.r**2
    return float(((1.0 - params.a**2 * s) / (1.0 - s)) ** (0.5 * (params.n + 1)))


# ---------------------------------------------------------------------------
# Legendre transform
# ---------------------------------------------------------------------------

def legendre_gradient(params, p, alpha):
    """Legendre map J*(x, alpha): the gradient of (1/2) F_a*^2 in alpha.

    Maps the derivative covector of a function to its metric gradient
    vector.  Satisfies alpha(J*(alpha)) = F*^2(x, alpha) and
    F(x, J*(alpha)) = F*(x, alpha).  The zero covector maps to the zero
    vector by convention (the one-sided limit along every ray).
    """
    p = _point(p)
    alpha = _vec(alpha, p.n, "covector")
    if not np.any(alpha):
        return np.zeros(p.n)
    a, s = params.a, p.r**2
    denom = 1.0 - a * a * s
    c1 = (1.0 - s) * denom
    c2 = (1.0 - a * a) * (1.0 - s)
    t = float(p.x @ alpha)
    q = c1 * float(alpha @ alpha) - c2 * t * t
    fstar = polar_F_star(params, p, alpha)
    return (fstar / denom) * ((c1 * alpha - c2 * t * p.x) / math.sqrt(q) - a * (1.0 - s) * p.x)


def legendre_gradient_fd(params, p, alpha, step=1e-6):
    """Central finite differences of (1/2) F_a*^2; cross-check for the exact map."""
    p = _point(p)
    alpha = _vec(alpha, p.n, "covector")
    grad = np.zeros(p.n)
    for i in range(p.n):
        e = np.zeros(p.n)
        e[i] = step
        fp = polar_F_star(params, p, alpha + e) ** 2
        fm = polar_F_star(params, p, alpha - e) ** 2
        grad[i] = (fp - fm) / (4.0 * step)
    return grad


# ---------------------------------------------------------------------------
# Distance for the Funk case
# ---------------------------------------------------------------------------

def funk_distance(p1, p2):
    """Non-symmetric distance of the a = 1 metric between two interior points.

    d(x1, x2) = ln( (A - <x1, x2-x1>) / (A - <x2, x2-x1>) ) with
    A = sqrt(|x1-x2|^2 - (|x1|^2 |x2|^2 - <x1,x2>^2)); in particular
    d(0, x) = -ln(1 - |x|).  Finite toward the boundary, infinite coming
    back, hence directed: only d(x,z) <= d(x,y) + d(y,z) holds.
    """
    p1, p2 = _point(p1), _point(p2)
    if p1.n != p2.n:
        raise GeometryError("points must share a dimension")
    d = p2.x - p1.x
    dd = float(d @ d)
    if dd == 0.0:
        return 0.0
    gram = (p1.r * p2.r) ** 2 - float(p1.x @ p2.x) ** 2
    root = math.sqrt(max(dd - gram, 0.0))
    num = root - float(p1.x @ d)
    den = root - float(p2.x @ d)
    return math.log(num / den)


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------

def _orthonormal_pair(u, v):
    """Orthonormal basis of span{u, v}, padding with a coordinate axis when
    the span degenerates."""
    n = u.size
    nu = np.linalg.norm(u)
    if nu < 1e-13:
        u, v = v, u
        nu = np.linalg.norm(u)
    e1 = u / nu
    w = v - (v @ e1) * e1
    nw = np.linalg.norm(w)
    if nw < 1e-12 * max(1.0, np.linalg.norm(v)):
        k = int(np.argmin(np.abs(e1)))
        w = np.zeros(n)
        w[k] = 1.0
        w -= (w @ e1) * e1
        nw = np.linalg.norm(w)
    return e1, w / nw


def _golden_max(fn, lo, hi, tol=1e-10, max_iter=200):
    """Golden-section maximization on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(max_iter):
        if b - a < tol:
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
    mid = 0.5 * (a + b)
    return max(fn(mid), fc, fd)


def _circle_refined_max(fn_theta, coarse=512, tol=1e-10):
    thetas = np.linspace(0.0, 2.0 * math.pi, coarse, endpoint=False)
    vals = np.array([fn_theta(t) for t in thetas])
    k = int(np.argmax(vals))
    h = 2.0 * math.pi / coarse
    return _golden_max(fn_theta, thetas[k] - h, thetas[k] + h, tol=tol)


def polar_F_star_oracle(params, p, alpha, samples=10000, seed=0, refine_tol=1e-10):
    """Dual norm by brute force: sup over directions of alpha(y)/F(x, y).

    Coarse uniform sampling of the unit sphere followed by golden-section
    refinement of the angle in the plane spanned by x and alpha (the norm
    depends on y only through |y| and <x, y>, so the maximizer lies in that
    plane).  Always a lower bound on the true dual norm, converging to it
    as the sampling is refined.
    """
    if samples < 100:
        raise GeometryError(f"need at least 100 samples, got {samples}")
    p = _point(p)
    alpha = _vec(alpha, p.n, "covector")
    if not np.any(alpha):
        return 0.0
    rng = np.random.default_rng(seed)
    Y = rng.standard_normal((samples, p.n))
    Y /= np.linalg.norm(Y, axis=1, keepdims=True)
    best = float(np.max((Y @ alpha) / _randers_F_rows(params, p, Y)))

    e1, e2 = _orthonormal_pair(p.x, alpha)

    def ratio(theta):
        y = math.cos(theta) * e1 + math.sin(theta) * e2
        f = randers_F(params, p, y)
        return float(alpha @ y) / f if f > 0.0 else -math.inf

    return max(best, _circle_refined_max(ratio, tol=refine_tol))


def reversibility_oracle(params, p, samples=10000, seed=0, refine_tol=1e-10):
    """Pointwise reversibility by brute force: sup of F(x,y)/F(x,-y).

    Approaches (1 + a|x|)/(1 - a|x|) at the given point; the global
    constant of :func:`reversibility` is the supremum of this over the
    ball.
    """
    if samples < 100:
        raise GeometryError(f"need at least 100 samples, got {samples}")
    p = _point(p)
    if p.r == 0.0:
        return 1.0
    rng = np.random.default_rng(seed)
    Y = rng.standard_normal((samples, p.n))
    Y /= np.linalg.norm(Y, axis=1, keepdims=True)
    fwd = _randers_F_rows(params, p, Y)
    bwd = _randers_F_rows(params, p, -Y)
    best = float(np.max(fwd / bwd))

    e1, e2 = _orthonormal_pair(p.x, np.roll(p.x, 1))

    def ratio(theta):
        y = math.cos(theta) * e1 + math.sin(theta) * e2
        return randers_F(params, p, y) / randers_F(params, p, -y)

    return max(best, _circle_refined_max(ratio, tol=refine_tol))
