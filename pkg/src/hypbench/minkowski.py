"""Minkowski-space primitives shared by every representation.

Points of the hyperbolic plane/space live on the unit timelike sheet of the
Minkowski hyperboloid: g(x,x) = -1 with positive last coordinate.  Points are
plain tuples of d+1 floats so they stay cheap and hashable; all functions here
are pure.
"""

import math

__all__ = [
    "RepresentationError",
    "origin",
    "minkowski_inner",
    "safe_acosh",
    "distance_between",
    "distance_to_origin",
    "midpoint",
    "normalize_point",
    "project_klein",
    "project_poincare",
    "klein_to_point",
    "poincare_to_point",
    "poincare_to_halfplane",
    "halfplane_to_poincare",
]

# acosh arguments may fall below 1 by rounding; deficits within this tolerance
# clamp to 1, anything worse means the state is corrupted.
ACOSH_CLAMP = 1e-9


class RepresentationError(Exception):
    """A representation state became unusable (overflow, corruption, domain)."""


def origin(dim):
    """The point C0 = (0, ..., 0, 1) of H^dim."""
    return (0.0,) * dim + (1.0,)


def minkowski_inner(x, y):
    """Minkowski inner product: sum of spatial products minus the last one."""
    s = 0.0
    for i in range(len(x) - 1):
        s += x[i] * y[i]
    return s - x[-1] * y[-1]


def safe_acosh(x):
    """acosh with clamping of slightly-too-small arguments.

    Arguments in [1 - ACOSH_CLAMP, 1) are treated as 1 (distance 0); larger
    deficits or non-finite input raise RepresentationError.
    """
    if x >= 1.0:
        return math.acosh(x)
    if x > 1.0 - ACOSH_CLAMP:
        return 0.0
    raise RepresentationError("acosh argument %r below domain" % (x,))


def distance_between(x, y):
    """Geodesic distance between two normalized hyperboloid points."""
    return safe_acosh(-minkowski_inner(x, y))


def distance_to_origin(x):
    """Distance from C0, scale-invariant in the input.

    Works for denormalized (careless / binary / flattened) coordinates: any
    positive multiple of x gives the same result.
    """
    q = -minkowski_inner(x, x)
    if not q > 0.0 or not math.isfinite(q):
        raise RepresentationError("point has non-timelike norm %r" % (q,))
    return safe_acosh(x[-1] / math.sqrt(q))


def midpoint(x, y):
    """Midpoint of the geodesic arc from x to y (both normalized)."""
    s = tuple(a + b for a, b in zip(x, y))
    q = -minkowski_inner(s, s)
    if not q > 0.0:
        raise RepresentationError("midpoint of degenerate pair")
    r = 1.0 / math.sqrt(q)
    return tuple(a * r for a in s)


def normalize_point(x):
    """Rescale x onto the hyperboloid sheet: g(x,x) = -1, last coordinate > 0."""
    q = -minkowski_inner(x, x)
    if not q > 0.0 or not math.isfinite(q):
        raise RepresentationError("cannot normalize point with norm %r" % (q,))
    r = 1.0 / math.sqrt(q)
    if x[-1] < 0.0:
        r = -r
    return tuple(a * r for a in x)


def project_klein(x):
    """Beltrami-Klein coordinates: divide the spatial part by the last one."""
    w = x[-1]
    return tuple(a / w for a in x[:-1])


def project_poincare(x):
    """Poincare disk/ball coordinates: divide the spatial part by (last + 1)."""
    w = x[-1] + 1.0
    return tuple(a / w for a in x[:-1])


def klein_to_point(u):
    """Inverse of project_klein, for |u| < 1."""
    q = 1.0 - sum(a * a for a in u)
    if not q > 0.0:
        raise RepresentationError("Klein coordinates outside the unit ball")
    r = 1.0 / math.sqrt(q)
    return tuple(a * r for a in u) + (r,)


def poincare_to_point(u):
    """Inverse of project_poincare, for |u| < 1."""
    n = sum(a * a for a in u)
    q = 1.0 - n
    if not q > 0.0:
        raise RepresentationError("Poincare coordinates outside the unit ball")
    return tuple(2.0 * a / q for a in u) + ((1.0 + n) / q,)


def poincare_to_halfplane(z):
    """Map the Poincare disk onto the upper half-plane: w = i(1+z)/(1-z).

    Sends 0 to i and the +x disk axis up the imaginary axis; with this choice
    the SL(2,R) export of the even Clifford algebra acts on the half-plane
    exactly as the matrix action does on the hyperboloid.
    """
    if abs(z) >= 1.0:
        raise RepresentationError("not a material disk point: |z| >= 1")
    return 1j * (1.0 + z) / (1.0 - z)


def halfplane_to_poincare(w):
    """Inverse of poincare_to_halfplane."""
    if w.imag <= 0.0:
        raise RepresentationError("not an upper half-plane point")
    return (w - 1j) / (w + 1j)
