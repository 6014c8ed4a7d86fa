"""High-precision reference geometry (the ground-truth side of every test).

Everything here runs on gmpy2 mpfr scalars inside an explicit precision
context, so results are deterministic and independent of any global precision
state.  The oracle works in the linear (matrix) formulation internally; only
angles, distances and positions ever get compared against measured
representations.
"""

import math

import gmpy2

DEFAULT_BITS = 256


class OracleGeometry:
    """Exact-enough hyperbolic geometry of H^dim at a fixed bit budget.

    Matrices are (dim+1)x(dim+1) tuples of mpfr; points are (dim+1)-tuples.
    Public methods enter the precision context themselves, so they are safe to
    call from anywhere; hot loops can enter ``self.context()`` once instead.
    """

    def __init__(self, dim=2, bits=DEFAULT_BITS):
        if bits < 64:
            raise ValueError("oracle needs at least 64 bits")
        self.dim = dim
        self.n = dim + 1
        self.bits = bits

    def context(self):
        return gmpy2.context(precision=self.bits)

    # -- scalars ----------------------------------------------------------

    def mpfr(self, x):
        with self.context():
            return gmpy2.mpfr(x)

    def pi(self):
        with self.context():
            return gmpy2.const_pi()

    # -- construction ------------------------------------------------------

    def origin(self):
        with self.context():
            one = gmpy2.mpfr(1)
            zero = gmpy2.mpfr(0)
            return (zero,) * self.dim + (one,)

    def identity(self):
        with self.context():
            one = gmpy2.mpfr(1)
            zero = gmpy2.mpfr(0)
            return tuple(
                tuple(one if i == j else zero for j in range(self.n))
                for i in range(self.n)
            )

    def translation(self, x):
        """Lorentz boost by x along the first spatial axis."""
        with self.context():
            x = gmpy2.mpfr(x)
            c, s = gmpy2.cosh(x), gmpy2.sinh(x)
            m = [list(row) for row in self.identity()]
            m[0][0] = c
            m[0][self.n - 1] = s
            m[self.n - 1][0] = s
            m[self.n - 1][self.n - 1] = c
            return tuple(tuple(row) for row in m)

    def rotation(self, alpha, axes=(0, 1)):
        """Rotation by alpha in the spatial plane spanned by the given axes."""
        i, j = axes
        if not (0 <= i < self.dim and 0 <= j < self.dim and i != j):
            raise ValueError("rotation axes must be distinct spatial indices")
        with self.context():
            a = gmpy2.mpfr(alpha)
            c, s = gmpy2.cos(a), gmpy2.sin(a)
            m = [list(row) for row in self.identity()]
            m[i][i] = c
            m[i][j] = -s
            m[j][i] = s
            m[j][j] = c
            return tuple(tuple(row) for row in m)

    # -- algebra -----------------------------------------------------------

    def compose(self, a, b):
        with self.context():
            n = self.n
            return tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )

    def invert(self, m):
        """Inverse of a Minkowski-orthogonal matrix: G M^T G."""
        with self.context():
            n = self.n
            out = [[m[j][i] for j in range(n)] for i in range(n)]
            for k in range(n - 1):
                out[n - 1][k] = -out[n - 1][k]
                out[k][n - 1] = -out[k][n - 1]
            return tuple(tuple(row) for row in out)

    def apply(self, m, p):
        with self.context():
            n = self.n
            return tuple(sum(m[i][k] * p[k] for k in range(n)) for i in range(n))

    def inner(self, x, y):
        with self.context():
            s = gmpy2.mpfr(0)
            for i in range(self.n - 1):
                s += x[i] * y[i]
            return s - x[-1] * y[-1]

    # -- measurements ------------------------------------------------------

    def distance0(self, p):
        with self.context():
            q = -self.inner(p, p)
            arg = p[-1] / gmpy2.sqrt(q)
            if arg < 1:
                arg = gmpy2.mpfr(1)
            return gmpy2.acosh(arg)

    def distance(self, p, q):
        with self.context():
            num = -self.inner(p, q)
            den = gmpy2.sqrt(self.inner(p, p) * self.inner(q, q))
            arg = num / den
            if arg < 1:
                arg = gmpy2.mpfr(1)
            return gmpy2.acosh(arg)

    def midpoint(self, p, q):
        with self.context():
            s = tuple(a + b for a, b in zip(p, q))
            r = 1 / gmpy2.sqrt(-self.inner(s, s))
            return tuple(a * r for a in s)

    def angle_dist0(self, p):
        """Polar data of a point: its distance from C0 plus the direction.

        Returns (angle, dist) in 2D; (unit direction tuple, dist) in 3D.
        """
        with self.context():
            r = self.distance0(p)
            if self.dim == 2:
                return gmpy2.atan2(p[1], p[0]), r
            norm = gmpy2.sqrt(sum(a * a for a in p[:-1]))
            if norm == 0:
                return (gmpy2.mpfr(1), gmpy2.mpfr(0), gmpy2.mpfr(0)), r
            return tuple(a / norm for a in p[:-1]), r

    def law_of_cosines(self, r1, r2, dphi):
        """Distance between (0,r1) and (dphi,r2) in native polar terms."""
        with self.context():
            r1 = gmpy2.mpfr(r1)
            r2 = gmpy2.mpfr(r2)
            dphi = gmpy2.mpfr(dphi)
            arg = gmpy2.cosh(r1 - r2) + (1 - gmpy2.cos(dphi)) * gmpy2.sinh(
                r1
            ) * gmpy2.sinh(r2)
            if arg < 1:
                arg = gmpy2.mpfr(1)
            return gmpy2.acosh(arg)

    # -- projections (for cross-checks) -------------------------------------

    def project_klein(self, p):
        with self.context():
            return tuple(a / p[-1] for a in p[:-1])

    def project_poincare(self, p):
        with self.context():
            w = p[-1] + 1
            return tuple(a / w for a in p[:-1])

    # -- descriptor interface ------------------------------------------------

    _OPS = {
        "origin",
        "identity",
        "translation",
        "rotation",
        "compose",
        "invert",
        "apply",
        "inner",
        "distance0",
        "distance",
        "midpoint",
        "angle_dist0",
        "law_of_cosines",
        "project_klein",
        "project_poincare",
    }

    def evaluate(self, op, *args):
        """Run a named operation; the escape hatch for table-driven callers."""
        if op not in self._OPS:
            raise ValueError("unsupported oracle operation %r" % (op,))
        return getattr(self, op)(*args)


def to_float(x):
    """Collapse an mpfr scalar or (nested) tuple structure to binary64."""
    if isinstance(x, tuple):
        return tuple(to_float(a) for a in x)
    return float(x)


def wrap_angle(a):
    """Fold an angle into [-pi, pi); works for floats and mpfr."""
    if isinstance(a, float):
        return (a + math.pi) % (2.0 * math.pi) - math.pi
    pi = gmpy2.const_pi()
    r = gmpy2.fmod(a + pi, 2 * pi)
    if r < 0:
        r += 2 * pi
    return r - pi


def angle_gap(a, b):
    """Circular distance between two angles, in [0, pi]."""
    d = abs(wrap_angle(a - b))
    return d


def tiling_step(p, q, bits=DEFAULT_BITS):
    """Center-to-center distance of adjacent tiles in the {p,q} tessellation.

    Twice the tile inradius, from the right orthoscheme triangle with angles
    pi/p, pi/q, pi/2; only defined when 1/p + 1/q < 1/2.
    """
    with gmpy2.context(precision=bits):
        pi = gmpy2.const_pi()
        arg = gmpy2.cos(pi / q) / gmpy2.sin(pi / p)
        if not arg > 1:
            raise ValueError("{%d,%d} is not a hyperbolic tessellation" % (p, q))
        return 2 * gmpy2.acosh(arg)


def honeycomb_step(bits=DEFAULT_BITS):
    """Center-to-center distance in the {4,3,5} honeycomb.

    The cube of the honeycomb is a Klein-coordinate box |u_i| <= c whose
    dihedral angle is 2*pi/5; solving cos(dihedral) = c^2/(1-c^2) gives the
    inradius atanh(c).  Validated by the five-cube edge-cycle closure.
    """
    with gmpy2.context(precision=bits):
        pi = gmpy2.const_pi()
        co = gmpy2.cos(2 * pi / 5)
        c = gmpy2.sqrt(co / (1 + co))
        return 2 * gmpy2.atanh(c)
