"""Representations built on the even Clifford algebra Cl+ over (R^{d+1}, g-).

Three flavours share the rotor machinery:

  * mixed    -- points on the hyperboloid, isometries as even rotors
  * reduced  -- points as the d+1 "reduced" coordinates (the hyperboloid
                coordinates of the half-way point mid(C0, x)), isometries as
                rotors; halves every stored distance
  * gyro     -- reduced with the isometry split into a flattened translation
                part (Poincare coordinates) and an invariant rotation part

The reduced coordinate tuple y corresponds to the even element
y_{d+1} - sum_i y_i e_i e_{d+1}, so that its sandwich moves C0 to the
doubled point.
"""

import math

from . import variants as vr
from .cliffords import hyperbolic_algebra
from .minkowski import (
    RepresentationError,
    distance_to_origin,
    minkowski_inner,
    normalize_point,
    origin,
    poincare_to_point,
    project_poincare,
    safe_acosh,
)

__all__ = [
    "MixedRepresentation",
    "ReducedRepresentation",
    "GyroRepresentation",
    "rotor_to_sl2r",
    "rotor_to_sl2c",
    "element_renormalize",
]

SANDWICH_RESIDUE_TOL = 1e-6


def element_renormalize(alg, a, variant):
    """Variant renormalization of an even isometry element."""
    if variant == vr.INVARIANT or variant == vr.CARELESS:
        return a
    if variant == vr.FLATTENED:
        s = a[0]
        if s == 0.0 or not math.isfinite(s):
            raise RepresentationError(
                "isometry not representable flattened (unit component %r)" % (s,)
            )
        return tuple(c / s for c in a)
    if variant == vr.FORCED:
        s, _res = alg.even_norm_parts(a)
        if not (s > 0.0 and math.isfinite(s)):
            raise RepresentationError("forced element has norm %r" % (s,))
        r = 1.0 / math.sqrt(s)
        return tuple(c * r for c in a)
    if variant == vr.WEAKLY_FORCED:
        s, _res = alg.even_norm_parts(a)
        if not (s > 0.0 and math.isfinite(s)):
            return a
        r = math.sqrt(s)
        if r == 0.0 or not math.isfinite(r):
            return a
        return tuple(c / r for c in a)
    if variant == vr.BINARY:
        key = a[0] if a[0] != 0.0 else max(a, key=abs)
        f = vr.binary_factor(key)
        if f == 1.0:
            return a
        return tuple(c * f for c in a)
    raise ValueError("unknown variant %r" % (variant,))


def _checked_sandwich(alg, a, w):
    v, res = alg.sandwich(a, w)
    scale = max(1.0, max(abs(c) for c in v))
    if res > SANDWICH_RESIDUE_TOL * scale:
        raise RepresentationError("sandwich residue %r: corrupted element" % (res,))
    return v


class _CliffordBase:
    def __init__(self, dim, variant):
        self.dim = dim
        self.n = dim + 1
        self.variant = variant
        self.alg = hyperbolic_algebra(dim)

    def identity(self):
        return self.alg.even_one()

    def translation(self, x):
        return self.alg.translation_rotor(x)

    def rotation(self, alpha, axes=(0, 1)):
        return self.alg.rotation_rotor(alpha, axes)

    def compose(self, f, g):
        return element_renormalize(self.alg, self.alg.mul_even(f, g), self.variant)

    def invert(self, f):
        try:
            return self.alg.invert_even(f)
        except ZeroDivisionError as exc:
            raise RepresentationError(str(exc)) from None

    def is_finite(self, f):
        return all(math.isfinite(c) for c in f)

    def is_finite_point(self, p):
        return all(math.isfinite(c) for c in p)


class MixedRepresentation(_CliffordBase):
    """Hyperboloid points moved by even rotors."""

    family = "mixed"

    def __init__(self, dim=2, variant=vr.INVARIANT):
        vr.check_variant(variant)
        super().__init__(dim, variant)
        self.name = "mixed:%s" % (variant,)

    def origin(self):
        return origin(self.dim)

    def apply(self, f, p):
        return vr.renormalize_point(
            _checked_sandwich(self.alg, f, p), self.variant
        )

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

    def to_point(self, p):
        return normalize_point(p)

    def from_point(self, x):
        return vr.renormalize_point(x, self.variant)


def reduced_rotor(alg, y):
    """Even element of the reduced coordinate tuple y."""
    blades = {0: y[-1]}
    last = 1 << (alg.n - 1)
    for i in range(alg.n - 1):
        blades[(1 << i) | last] = -y[i]
    return alg.even_from_blades(blades)


def reduce_coords(x, scale):
    """Reduced coordinates of the (possibly denormalized) hyperboloid point x.

    scale must be sqrt(-g(x,x)); the result is the un-normalized direction of
    mid(C0, x), so no division happens here and careless states stay careless.
    """
    return x[:-1] + (x[-1] + scale,)


def double_point(y):
    """Hyperboloid coordinates of the point whose reduced coordinates are y.

    Scale-invariant in y; the result is normalized.
    """
    w = y[-1]
    v = y[:-1]
    q = w * w - sum(a * a for a in v)
    if not (q > 0.0 and math.isfinite(q)):
        raise RepresentationError("reduced point outside the model: norm %r" % (q,))
    return tuple(2.0 * w * a / q for a in v) + ((w * w + sum(a * a for a in v)) / q,)


class ReducedRepresentation(_CliffordBase):
    """Points stored at half distance as rotor coordinates."""

    family = "reduced"

    def __init__(self, dim=2, variant=vr.INVARIANT):
        vr.check_variant(variant)
        super().__init__(dim, variant)
        self.name = "reduced:%s" % (variant,)
        self._c0 = origin(dim)

    def origin(self):
        return (0.0,) * self.dim + (1.0,)

    def apply(self, f, y):
        z = self.alg.mul_even(f, reduced_rotor(self.alg, y))
        x = _checked_sandwich(self.alg, z, self._c0)
        q = -minkowski_inner(x, x)
        if not (q > 0.0 and math.isfinite(q)):
            raise RepresentationError("reduced apply left the model: norm %r" % (q,))
        out = reduce_coords(x, math.sqrt(q))
        return vr.renormalize_point(out, self.variant)

    def distance0(self, y):
        return 2.0 * distance_to_origin(y)

    def angle_dist0(self, y):
        r = 2.0 * distance_to_origin(y)
        if self.dim == 2:
            return math.atan2(y[1], y[0]), r
        norm = math.sqrt(sum(a * a for a in y[:-1]))
        if norm == 0.0:
            return (1.0, 0.0, 0.0), r
        return tuple(a / norm for a in y[:-1]), r

    def point_distance(self, y1, y2):
        x1 = double_point(y1)
        x2 = double_point(y2)
        return safe_acosh(-minkowski_inner(x1, x2))

    def to_point(self, y):
        return double_point(y)

    def from_point(self, x):
        xn = normalize_point(x)
        y = normalize_point(reduce_coords(xn, 1.0))
        return vr.renormalize_point(y, self.variant)


class GyroRepresentation:
    """Reduced with gyro-split isometries: flattened mover + invariant rotor.

    Points are Poincare coordinates (d floats); an isometry is the pair
    (mover coordinates, rotation rotor).
    """

    family = "reduced"

    def __init__(self, dim=2):
        self.dim = dim
        self.n = dim + 1
        self.variant = "gyro"
        self.alg = hyperbolic_algebra(dim)
        self.name = "reduced:gyro"
        self._c0 = origin(dim)

    # mover coords t are Poincare coordinates of the image of C0
    def _mover_rotor(self, t):
        return reduced_rotor(self.alg, t + (1.0,))

    def _full_rotor(self, f):
        t, r = f
        return self.alg.mul_even(self._mover_rotor(t), r)

    def _split(self, a):
        x = _checked_sandwich(self.alg, a, self._c0)
        q = -minkowski_inner(x, x)
        if not (q > 0.0 and math.isfinite(q)):
            raise RepresentationError("gyro split outside the model: norm %r" % (q,))
        y = reduce_coords(x, math.sqrt(q))
        if y[-1] == 0.0 or not math.isfinite(y[-1]):
            raise RepresentationError("gyro mover flattens to infinity")
        t = tuple(a_ / y[-1] for a_ in y[:-1])
        yn = normalize_point(y)
        mover = reduced_rotor(self.alg, yn)
        rot = self.alg.mul_even(self.alg.conj_even(mover), a)
        return t, rot

    def origin(self):
        return (0.0,) * self.dim

    def identity(self):
        return ((0.0,) * self.dim, self.alg.even_one())

    def translation(self, x):
        return self._split(self.alg.translation_rotor(x))

    def rotation(self, alpha, axes=(0, 1)):
        return ((0.0,) * self.dim, self.alg.rotation_rotor(alpha, axes))

    def compose(self, f, g):
        return self._split(self.alg.mul_even(self._full_rotor(f), self._full_rotor(g)))

    def invert(self, f):
        try:
            return self._split(self.alg.invert_even(self._full_rotor(f)))
        except ZeroDivisionError as exc:
            raise RepresentationError(str(exc)) from None

    def apply(self, f, p):
        z = self.alg.mul_even(self._full_rotor(f), self._mover_rotor(p))
        x = _checked_sandwich(self.alg, z, self._c0)
        q = -minkowski_inner(x, x)
        if not (q > 0.0 and math.isfinite(q)):
            raise RepresentationError("gyro apply outside the model: norm %r" % (q,))
        y = reduce_coords(x, math.sqrt(q))
        if y[-1] == 0.0 or not math.isfinite(y[-1]):
            raise RepresentationError("gyro point flattens to infinity")
        return tuple(a_ / y[-1] for a_ in y[:-1])

    def distance0(self, p):
        n = math.sqrt(sum(a * a for a in p))
        if n >= 1.0:
            raise RepresentationError("gyro point outside the disk")
        return 2.0 * math.atanh(n)

    def angle_dist0(self, p):
        r = self.distance0(p)
        if self.dim == 2:
            return math.atan2(p[1], p[0]), r
        norm = math.sqrt(sum(a * a for a in p))
        if norm == 0.0:
            return (1.0, 0.0, 0.0), r
        return tuple(a / norm for a in p), r

    def point_distance(self, p, q):
        du = sum((a - b) ** 2 for a, b in zip(p, q))
        np_ = 1.0 - sum(a * a for a in p)
        nq = 1.0 - sum(a * a for a in q)
        if not (np_ > 0.0 and nq > 0.0):
            raise RepresentationError("gyro points outside the disk")
        return safe_acosh(1.0 + 2.0 * du / (np_ * nq))

    def to_point(self, p):
        return poincare_to_point(p)

    def from_point(self, x):
        return project_poincare(normalize_point(x))

    def is_finite(self, f):
        t, r = f
        return all(math.isfinite(a) for a in t) and all(math.isfinite(c) for c in r)

    def is_finite_point(self, p):
        return all(math.isfinite(a) for a in p)


# -- base-change exports ------------------------------------------------------
#
# The even blade order is ascending bitmask, which makes the k-indices of the
# 2x2 exports literally the blade masks: 2D (k0, k3, k2, k1) at positions
# (0, 1, 2, 3); 3D k0,k3,k5,k6,k9,k10,k12,k15 at positions 0..7.  With the
# rotor conventions of this package (sandwich w -> a w conj(a), composition
# M(ab) = M(a) o M(b)) the homomorphic export is the transpose of the k-matrix
# one gets for the opposite rotor handedness; tests pin it down by checking
# both the homomorphism property and the point action through the model maps.


def rotor_to_sl2r(a):
    """SL(2,R) matrix of a 2D even element; acts on the upper half-plane."""
    k0, k3, k2, k1 = a
    return ((k0 - k2, k1 - k3), (k1 + k3, k0 + k2))


def rotor_to_sl2c(a):
    """SL(2,C) matrix of a 3D even element; acts on the upper half-space."""
    k0, k3, k5, k6, k9, k10, k12, k15 = a
    return (
        (complex(k0 - k9, k15 - k6), complex(k10 - k3, k12 - k5)),
        (complex(k3 + k10, -k5 - k12), complex(k0 + k9, k6 + k15)),
    )
