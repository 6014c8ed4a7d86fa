"""Clifford algebra engine over R^n with a diagonal signature.

Blades are bitmasks over the basis vectors; elements are dense coefficient
tuples over a fixed blade subset (even subalgebra, vectors, odd part).
Products are table-driven: every (subset x subset) product is precompiled to a
flat list of (i, j, k, sign) terms, which keeps the hot paths free of any
blade bookkeeping.

Conventions (fixed once, verified against the matrix representation in tests):
  * conj(e_i) = -e_i, conj(xy) = conj(y) conj(x)
  * an isometry element x acts on a vector w by the sandwich w -> x w conj(x),
    and M(xy) = M(x) o M(y)
  * rotation by +a in the (e_i, e_j) plane is cos(a/2) - sin(a/2) e_i e_j;
    translation by +x along e_1 (hyperbolic signature) is
    cosh(x/2) - sinh(x/2) e_1 e_n
"""

import math

__all__ = ["CliffordAlgebra", "algebra"]


def _reorder_sign(a, b):
    # parity of swaps needed to merge two ascending blade words
    a >>= 1
    s = 0
    while a:
        s += (a & b).bit_count()
        a >>= 1
    return -1 if (s & 1) else 1


class CliffordAlgebra:
    def __init__(self, signature):
        self.signature = tuple(signature)
        self.n = len(self.signature)
        masks = list(range(1 << self.n))
        self.even = tuple(m for m in masks if m.bit_count() % 2 == 0)
        self.odd = tuple(m for m in masks if m.bit_count() % 2 == 1)
        self.vector = tuple(1 << i for i in range(self.n))
        self.even_index = {m: i for i, m in enumerate(self.even)}
        self.odd_index = {m: i for i, m in enumerate(self.odd)}
        # conj sign of a grade-k blade: (-1)^(k(k+1)/2)
        self.even_conj = tuple(
            -1.0 if (m.bit_count() * (m.bit_count() + 1)) // 2 % 2 else 1.0
            for m in self.even
        )
        self._t_even_even = self._table(self.even, self.even, self.even_index)
        self._t_even_vec = self._table(self.even, self.vector, self.odd_index)
        self._t_odd_even = self._table(self.odd, self.even, self.odd_index)
        # positions of the grade-1 components inside the odd part
        self.vec_in_odd = tuple(self.odd_index[m] for m in self.vector)
        self._res_in_odd = tuple(
            i for i, m in enumerate(self.odd) if m.bit_count() != 1
        )

    def _blade_mul(self, a, b):
        sign = _reorder_sign(a, b)
        common = a & b
        i = 0
        while common:
            if common & 1 and self.signature[i] < 0:
                sign = -sign
            common >>= 1
            i += 1
        return a ^ b, sign

    def _table(self, sub_a, sub_b, out_index):
        terms = []
        for i, ma in enumerate(sub_a):
            for j, mb in enumerate(sub_b):
                mask, sign = self._blade_mul(ma, mb)
                terms.append((i, j, out_index[mask], float(sign)))
        return tuple(terms)

    # -- even subalgebra ----------------------------------------------------

    def even_zero(self):
        return (0.0,) * len(self.even)

    def even_one(self):
        return (1.0,) + (0.0,) * (len(self.even) - 1)

    def even_from_blades(self, pairs):
        """Build an even element from {blade_mask: coefficient}."""
        out = [0.0] * len(self.even)
        for mask, c in pairs.items():
            out[self.even_index[mask]] = c
        return tuple(out)

    def mul_even(self, a, b):
        out = [0.0] * len(self.even)
        for i, j, k, s in self._t_even_even:
            out[k] += s * a[i] * b[j]
        return tuple(out)

    def conj_even(self, a):
        return tuple(s * c for s, c in zip(self.even_conj, a))

    def even_norm_parts(self, a):
        """Scalar part of a*conj(a) and the largest non-scalar residue."""
        n = self.mul_even(a, self.conj_even(a))
        res = max(abs(c) for c in n[1:]) if len(n) > 1 else 0.0
        return n[0], res

    def invert_even(self, a):
        """Inverse of an isometry element: conj(a) / scalar(a conj(a))."""
        s, _ = self.even_norm_parts(a)
        if s == 0.0 or not math.isfinite(s):
            raise ZeroDivisionError("even element has no usable norm")
        return tuple(c / s for c in self.conj_even(a))

    # -- action on vectors ---------------------------------------------------

    def sandwich(self, a, w):
        """Apply the isometry element a to the vector w: a w conj(a).

        Returns (vector components, residue) where residue is the largest
        grade-3+ coefficient left over (zero in exact arithmetic).
        """
        odd = [0.0] * len(self.odd)
        for i, j, k, s in self._t_even_vec:
            odd[k] += s * a[i] * w[j]
        ac = self.conj_even(a)
        out = [0.0] * len(self.odd)
        for i, j, k, s in self._t_odd_even:
            out[k] += s * odd[i] * ac[j]
        vec = tuple(out[k] for k in self.vec_in_odd)
        res = max((abs(out[k]) for k in self._res_in_odd), default=0.0)
        return vec, res

    # -- rotors ---------------------------------------------------------------

    def rotation_rotor(self, alpha, axes=(0, 1)):
        """Rotor acting as rotation by +alpha in the given coordinate plane."""
        i, j = axes
        mask = (1 << i) | (1 << j)
        return self.even_from_blades(
            {0: math.cos(0.5 * alpha), mask: -math.sin(0.5 * alpha)}
        )

    def translation_rotor(self, x):
        """Rotor acting as the boost by +x along e_1 (hyperbolic signature)."""
        if self.signature[-1] > 0:
            raise ValueError("translation rotor needs a timelike last vector")
        mask = 1 | (1 << (self.n - 1))
        return self.even_from_blades(
            {0: math.cosh(0.5 * x), mask: -math.sinh(0.5 * x)}
        )


_CACHE = {}


def algebra(signature):
    """Shared CliffordAlgebra instance for a signature tuple."""
    key = tuple(signature)
    alg = _CACHE.get(key)
    if alg is None:
        alg = _CACHE[key] = CliffordAlgebra(key)
    return alg


def hyperbolic_algebra(dim):
    """Cl(R^{dim+1}) with Minkowski signature (+,...,+,-)."""
    return algebra((1,) * dim + (-1,))


def spherical_algebra(n=3):
    """Cl(R^n) with all-positive signature (rotations of the sphere)."""
    return algebra((1,) * n)
