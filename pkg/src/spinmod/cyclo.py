"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Every quantity in this package (quantum dimensions, twists, Hopf-link
matrices, invariant values, Gauss sums) lives in a single cyclotomic field
fixed when a category is built.  A number is stored as an integer
coordinate vector over one positive denominator, in the power basis
1, zeta, ..., zeta^(phi(N)-1), always reduced modulo the N-th cyclotomic
polynomial.  The representation is canonical, so equality (in particular
exactness of vanishing results) is coefficient-wise.

No floating point enters any computation; ``embed_complex`` exists only
for display and diagnostics.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


class FieldMismatchError(ValueError):
    """Raised when combining numbers from different cyclotomic fields."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first), monic divisor."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    if any(num):
        raise ValueError("division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first, monic.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


_FIELDS: dict[int, "CycloField"] = {}


def cyclo_field(order: int) -> "CycloField":
    """The field Q(zeta_order); instances are interned so identity == equality."""
    field = _FIELDS.get(order)
    if field is None:
        field = CycloField(order)
        _FIELDS[order] = field
    return field


class CycloField:
    """Q(zeta_N) with precomputed reduction data for the power basis."""

    __slots__ = (
        "order", "degree", "phi_coeffs", "_red", "_zeta_cache",
        "_conj_rows", "_complex_powers", "zero", "one",
    )

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        phi = cyclotomic_polynomial(order)
        self.phi_coeffs = phi
        d = len(phi) - 1
        self.degree = d
        # x^k mod Phi_N for k = d .. max(N-1, 2d-2), as integer rows.
        top = max(order - 1, 2 * d - 2)
        rows: list[tuple[int, ...]] = []
        base = tuple(-phi[j] for j in range(d))
        cur = base
        rows.append(cur)
        for _ in range(d + 1, top + 1):
            shifted = [0] + list(cur[: d - 1])
            lead = cur[d - 1]
            if lead:
                for j in range(d):
                    shifted[j] += lead * base[j]
            cur = tuple(shifted)
            rows.append(cur)
        self._red = tuple(rows)
        self._zeta_cache: dict[int, CycloNumber] = {}
        conj_rows = []
        for j in range(d):
            k = (-j) % order
            conj_rows.append(self._monomial(k))
        self._conj_rows = tuple(conj_rows)
        z = cmath.exp(2j * cmath.pi / order)
        self._complex_powers = tuple(z ** j for j in range(d))
        self.zero = CycloNumber(self, (0,) * d, 1)
        self.one = self._monomial_number(0)

    def _monomial(self, k: int) -> tuple[int, ...]:
        """Coordinates of x^(k mod N) reduced modulo Phi_N."""
        k %= self.order
        d = self.degree
        if k < d:
            return tuple(1 if j == k else 0 for j in range(d))
        return self._red[k - d]

    def _monomial_number(self, k: int) -> "CycloNumber":
        return CycloNumber(self, self._monomial(k), 1)

    def zeta(self, k: int = 1) -> "CycloNumber":
        """The root of unity zeta_N^k in canonical form."""
        k %= self.order
        num = self._zeta_cache.get(k)
        if num is None:
            num = self._monomial_number(k)
            self._zeta_cache[k] = num
        return num

    def from_integer(self, value: int) -> "CycloNumber":
        d = self.degree
        return CycloNumber(self, (value,) + (0,) * (d - 1), 1)

    def from_rational(self, value: Fraction | int) -> "CycloNumber":
        q = Fraction(value)
        d = self.degree
        return CycloNumber(self, (q.numerator,) + (0,) * (d - 1), q.denominator)

    def from_coeffs(self, coeffs) -> "CycloNumber":
        """Build a number from phi(N) rational coordinates in the power basis."""
        qs = [Fraction(c) for c in coeffs]
        if len(qs) != self.degree:
            raise ValueError(
                f"expected {self.degree} coordinates, got {len(qs)}")
        den = math.lcm(*[q.denominator for q in qs]) if qs else 1
        nums = tuple(int(q * den) for q in qs)
        return CycloNumber(self, nums, den)

    def embed(self, value: "CycloNumber") -> "CycloNumber":
        """Embed a number from a subfield Q(zeta_M), M | N, via zeta_M = zeta_N^(N/M)."""
        src = value.field
        if src is self:
            return value
        if self.order % src.order != 0:
            raise FieldMismatchError(
                f"Q(zeta_{src.order}) does not embed in Q(zeta_{self.order})")
        step = self.order // src.order
        acc = [0] * self.degree
        for j, c in enumerate(value.num):
            if c:
                row = self._monomial(j * step)
                for i in range(self.degree):
                    if row[i]:
                        acc[i] += c * row[i]
        return CycloNumber(self, tuple(acc), value.den)

    def __repr__(self) -> str:
        return f"CycloField({self.order})"


def _normalized(nums: tuple[int, ...] | list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = math.gcd(den, *nums)
    if g == 0:
        return tuple(nums), 1
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    if not any(nums):
        den = 1
    return tuple(nums), den


class CycloNumber:
    """An element of Q(zeta_N), canonical modulo Phi_N.

    Immutable; all arithmetic returns new values, so numbers are freely
    shareable.  Integers and Fractions coerce on the right/left of ring
    operations.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycloField, num: tuple[int, ...], den: int = 1,
                 _normalize: bool = True):
        self.field = field
        if _normalize:
            num, den = _normalized(num, den)
        self.num = num
        self.den = den

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other) -> "CycloNumber | None":
        if isinstance(other, CycloNumber):
            if other.field is not self.field:
                raise FieldMismatchError(
                    f"cannot combine Q(zeta_{self.field.order}) with "
                    f"Q(zeta_{other.field.order}) values")
            return other
        if isinstance(other, int):
            return self.field.from_integer(other)
        if isinstance(other, Fraction):
            return self.field.from_rational(other)
        return None

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        den = self.den
        return tuple(Fraction(v, den) for v in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self == self.field.one

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("number is not rational")
        return Fraction(self.num[0], self.den)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        da, db = self.den, b.den
        if da == db:
            return CycloNumber(self.field,
                               [x + y for x, y in zip(self.num, b.num)], da)
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        return CycloNumber(
            self.field,
            [x * ma + y * mb for x, y in zip(self.num, b.num)],
            da * ma)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.field, tuple(-v for v in self.num), self.den,
                           _normalize=False)

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other):
        if isinstance(other, Fraction):
            return CycloNumber(self.field,
                               [v * other.numerator for v in self.num],
                               self.den * other.denominator)
        if isinstance(other, int):
            return CycloNumber(self.field, [v * other for v in self.num],
                               self.den)
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        field = self.field
        d = field.degree
        a_num, b_num = self.num, b.num
        prod = [0] * (2 * d - 1)
        for i in range(d):
            ai = a_num[i]
            if ai:
                for j in range(d):
                    bj = b_num[j]
                    if bj:
                        prod[i + j] += ai * bj
        red = field._red
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                row = red[k - d]
                for j in range(d):
                    rj = row[j]
                    if rj:
                        prod[j] += c * rj
        return CycloNumber(field, prod[:d], self.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self * b.invert()

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return b * self.invert()

    def __pow__(self, exponent: int) -> "CycloNumber":
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "CycloNumber":
        """Multiplicative inverse, via the multiplication-by-self linear system."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        field = self.field
        d = field.degree
        if self.is_rational():
            q = 1 / self.as_rational()
            return field.from_rational(q)
        # Columns of M are self * zeta^j (integer part only); solve M x = e0,
        # then scale by den: inverse = den * x in the power basis.
        cols = []
        shifted = CycloNumber(field, self.num, 1, _normalize=False)
        for _ in range(d):
            cols.append(shifted.num)
            shifted = shifted * field.zeta(1)
        mat = [[Fraction(cols[j][i]) for j in range(d)] for i in range(d)]
        rhs = [Fraction(1 if i == 0 else 0) for i in range(d)]
        sol = _solve_linear(mat, rhs)
        if sol is None:
            raise ZeroDivisionError("number is a zero divisor (corrupt data)")
        return field.from_coeffs([self.den * x for x in sol])

    def conj(self) -> "CycloNumber":
        """The automorphism zeta -> zeta^(N-1); complex conjugation on embedding."""
        field = self.field
        d = field.degree
        acc = [0] * d
        for j, c in enumerate(self.num):
            if c:
                row = field._conj_rows[j]
                for i in range(d):
                    if row[i]:
                        acc[i] += c * row[i]
        return CycloNumber(field, acc, self.den)

    def scale(self, q: Fraction | int) -> "CycloNumber":
        q = Fraction(q)
        return CycloNumber(self.field,
                           [v * q.numerator for v in self.num],
                           self.den * q.denominator)

    # -- embedding and display ----------------------------------------------

    def embed_complex(self) -> complex:
        """Evaluate at zeta_N = exp(2 pi i / N).  Diagnostics only."""
        powers = self.field._complex_powers
        total = 0j
        for j, c in enumerate(self.num):
            if c:
                total += c * powers[j]
        return total / self.den

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNumber):
            return (self.field is other.field and self.num == other.num
                    and self.den == other.den)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.num, self.den))

    def __repr__(self) -> str:
        terms = []
        for j, c in enumerate(self.num):
            if not c:
                continue
            q = Fraction(c, self.den)
            if j == 0:
                terms.append(f"{q}")
            elif j == 1:
                terms.append(f"{q}*z")
            else:
                terms.append(f"{q}*z^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclo({self.field.order}: {body})"


def _solve_linear(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gaussian elimination over Q; returns None for a singular system."""
    n = len(mat)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if a[r][col]:
                pivot = r
                break
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def make_root(order: int, k: int) -> CycloNumber:
    """zeta_order^k in canonical form; make_root(N, 0) is the unit."""
    return cyclo_field(order).zeta(k)


def gauss_sum(m: int, xi: CycloNumber) -> CycloNumber:
    """The quadratic sum over Z_m of xi^(i^2), exactly."""
    if m < 1:
        raise ValueError("m must be positive")
    total = xi.field.one
    term = xi.field.one
    # xi^(i^2) stepped multiplicatively: (i+1)^2 - i^2 = 2i + 1.
    odd = xi
    xi2 = xi * xi
    for _ in range(1, m):
        term = term * odd
        total = total + term
        odd = odd * xi2
    return total
