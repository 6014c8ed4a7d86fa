"""Normalization policies ("variants") applied after every operation.

Each representation runs the same geometric recipe and differs only in what
it does to the freshly computed state: nothing (invariant), nothing on
purpose with scale treated as projective (careless), dividing by the last
coordinate (flattened), renormalizing (forced), renormalizing when possible
(weakly-forced), or power-of-two rescaling (binary).
"""

import math

from .minkowski import RepresentationError, minkowski_inner

INVARIANT = "invariant"
CARELESS = "careless"
FLATTENED = "flattened"
FORCED = "forced"
WEAKLY_FORCED = "weakly-forced"
BINARY = "binary"

POINT_VARIANTS = (INVARIANT, CARELESS, FLATTENED, FORCED, WEAKLY_FORCED, BINARY)


def check_variant(variant, allowed=POINT_VARIANTS):
    if variant not in allowed:
        raise ValueError("unknown variant %r (expected one of %s)" % (variant, allowed))
    return variant


def binary_factor(x):
    """Power of two that brings |x| into [0.5, 1); 1.0 for zero/non-finite x."""
    if x == 0.0 or not math.isfinite(x):
        return 1.0
    return math.ldexp(1.0, -math.frexp(abs(x))[1])


def renormalize_point(p, variant):
    """Apply a point variant to hyperboloid-style coordinates."""
    if variant == INVARIANT or variant == CARELESS:
        return p
    if variant == FLATTENED:
        w = p[-1]
        if w == 0.0 or not math.isfinite(w):
            raise RepresentationError("flattened point with last coordinate %r" % (w,))
        return tuple(a / w for a in p[:-1]) + (1.0,)
    if variant == FORCED:
        q = -minkowski_inner(p, p)
        if not (q > 0.0 and math.isfinite(q)):
            raise RepresentationError("forced point has norm %r" % (q,))
        r = 1.0 / math.sqrt(q)
        if p[-1] < 0.0:
            r = -r
        return tuple(a * r for a in p)
    if variant == WEAKLY_FORCED:
        q = -minkowski_inner(p, p)
        if not (q > 0.0 and math.isfinite(q)):
            return p
        r = math.sqrt(q)
        if r == 0.0 or not math.isfinite(r):
            return p
        r = 1.0 / r
        if p[-1] < 0.0:
            r = -r
        return tuple(a * r for a in p)
    if variant == BINARY:
        f = binary_factor(p[-1])
        if f == 1.0:
            return p
        return tuple(a * f for a in p)
    raise ValueError("unknown point variant %r" % (variant,))
