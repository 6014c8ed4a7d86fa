"""Linear representation: hyperboloid points, isometries as (d+1)x(d+1) matrices.

Matrices are tuples of row tuples of floats.  The point variant controls the
renormalization of points and matrices after each operation; the independent
+F/-F axis controls whether matrices are re-orthonormalized ("fixed") after
every composition.
"""

import math

from . import variants as vr
from .minkowski import (
    RepresentationError,
    distance_to_origin,
    minkowski_inner,
    normalize_point,
    origin,
    safe_acosh,
)

__all__ = ["LinearRepresentation", "lin_fix", "matrix_renormalize"]


def _identity(n):
    return tuple(
        tuple(1.0 if i == j else 0.0 for j in range(n)) for i in range(n)
    )


def _matmul(a, b, n):
    return tuple(
        tuple(
            sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)
        )
        for i in range(n)
    )


def _matvec(m, p, n):
    return tuple(sum(m[i][k] * p[k] for k in range(n)) for i in range(n))


def _col_inner(u, v):
    s = 0.0
    for i in range(len(u) - 1):
        s += u[i] * v[i]
    return s - u[-1] * v[-1]


def lin_fix(m):
    """Re-orthonormalize under the Minkowski inner product (Gram-Schmidt).

    Spacelike columns are normalized to +1, the last column to -1 with a
    positive last entry.  Orthogonal matrices are fixed points (up to float
    noise); badly degenerate input raises.
    """
    n = len(m)
    cols = [[m[r][c] for r in range(n)] for c in range(n)]
    for c in range(n - 1):
        v = cols[c]
        for j in range(c):
            w = cols[j]
            coef = _col_inner(v, w)
            v = [a - coef * b for a, b in zip(v, w)]
        q = _col_inner(v, v)
        if not (q > 0.0 and math.isfinite(q)):
            raise RepresentationError("cannot fix matrix: spacelike norm %r" % (q,))
        r = 1.0 / math.sqrt(q)
        cols[c] = [a * r for a in v]
    v = cols[n - 1]
    for j in range(n - 1):
        w = cols[j]
        coef = _col_inner(v, w)
        v = [a - coef * b for a, b in zip(v, w)]
    q = -_col_inner(v, v)
    if not (q > 0.0 and math.isfinite(q)):
        raise RepresentationError("cannot fix matrix: timelike norm %r" % (q,))
    r = 1.0 / math.sqrt(q)
    if v[-1] < 0.0:
        r = -r
    cols[n - 1] = [a * r for a in v]
    return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))


def matrix_renormalize(m, variant, fixed):
    """Variant renormalization of an isometry matrix, then the +F fix."""
    if variant == vr.FLATTENED:
        w = m[-1][-1]
        if w == 0.0 or not math.isfinite(w):
            raise RepresentationError("flattened matrix with corner %r" % (w,))
        m = tuple(tuple(a / w for a in row) for row in m)
    elif variant == vr.BINARY:
        f = vr.binary_factor(max(abs(row[-1]) for row in m))
        if f != 1.0:
            m = tuple(tuple(a * f for a in row) for row in m)
    elif variant == vr.FORCED:
        return lin_fix(m)
    elif variant == vr.WEAKLY_FORCED:
        try:
            return lin_fix(m)
        except RepresentationError:
            return m
    if fixed:
        return lin_fix(m)
    return m


class LinearRepresentation:
    """H^dim with matrix isometries; variant x (+F/-F) error handling."""

    family = "linear"

    def __init__(self, dim=2, variant=vr.INVARIANT, fixed=False):
        vr.check_variant(variant)
        self.dim = dim
        self.n = dim + 1
        self.variant = variant
        self.fixed = fixed
        self.name = "linear:%s%s" % (variant, "+F" if fixed else "-F")

    # -- state constructors -----------------------------------------------

    def origin(self):
        return origin(self.dim)

    def identity(self):
        return _identity(self.n)

    def translation(self, x):
        c, s = math.cosh(x), math.sinh(x)
        m = [list(row) for row in _identity(self.n)]
        m[0][0] = c
        m[0][-1] = s
        m[-1][0] = s
        m[-1][-1] = c
        return tuple(tuple(row) for row in m)

    def rotation(self, alpha, axes=(0, 1)):
        i, j = axes
        c, s = math.cos(alpha), math.sin(alpha)
        m = [list(row) for row in _identity(self.n)]
        m[i][i] = c
        m[i][j] = -s
        m[j][i] = s
        m[j][j] = c
        return tuple(tuple(row) for row in m)

    # -- operations ----------------------------------------------------------

    def compose(self, f, g):
        return matrix_renormalize(_matmul(f, g, self.n), self.variant, self.fixed)

    def invert(self, f):
        n = self.n
        out = [[f[j][i] for j in range(n)] for i in range(n)]
        for k in range(n - 1):
            out[-1][k] = -out[-1][k]
            out[k][-1] = -out[k][-1]
        return tuple(tuple(row) for row in out)

    def apply(self, f, p):
        return vr.renormalize_point(_matvec(f, p, self.n), self.variant)

    # -- measurements ----------------------------------------------------------

    def distance0(self, p):
        return distance_to_origin(p)

    def angle_dist0(self, p):
        r = distance_to_origin(p)
        if self.dim == 2:
            return math.atan2(p[1], p[0]), r
        norm = math.sqrt(sum(a * a for a in p[:-1]))
        if norm == 0.0:
            return (1.0, 0.0, 0.0), r
        return tuple(a / norm for a in p[:-1]), r

    def point_distance(self, p, q):
        num = -minkowski_inner(p, q)
        den2 = minkowski_inner(p, p) * minkowski_inner(q, q)
        if not (den2 > 0.0 and math.isfinite(den2)) or not math.isfinite(num):
            raise RepresentationError("distance between corrupted points")
        return safe_acosh(num / math.sqrt(den2))

    # -- conversions (shared comparison space) -------------------------------

    def to_point(self, p):
        return normalize_point(p)

    def from_point(self, x):
        return vr.renormalize_point(x, self.variant)

    def is_finite(self, f):
        return all(math.isfinite(a) for row in f for a in row)

    def is_finite_point(self, p):
        return all(math.isfinite(a) for a in p)
