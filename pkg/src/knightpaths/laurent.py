"""Truncated Laurent series with exact rational coefficients.

A LaurentSeries is a coefficient window [valuation, order) plus an implicit
O(x**order) error term; order None means the series is an exact Laurent
polynomial (all coefficients outside the window are exactly zero).  Every
operation propagates the largest order that remains exact, so results never
silently invent or drop coefficients — asking for a coefficient at or past
the truncation order is an error, not a zero.

The variable is abstract.  The grand-knight engine uses series in w with
w**2 = z (the kernel radicals need half-integer powers of z); the zigzag
engine uses ordinary series in z.  Division and square root follow the
truncated-Newton/long-division schemes and are exact over Fraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

Rat = int | Fraction


def _min_order(*orders: int | None) -> int | None:
    finite = [o for o in orders if o is not None]
    return min(finite) if finite else None


def _as_ints(coeffs: list[Fraction]) -> list[int] | None:
    """Numerators if every coefficient is integral, else None.

    Most series here count things, so convolutions usually run on plain
    ints; that skips Fraction's per-operation gcd normalisation.
    """
    if all(c.denominator == 1 for c in coeffs):
        return [c.numerator for c in coeffs]
    return None


class LaurentSeries:
    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, valuation: int, coeffs: Iterable[Rat], order: int | None):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
            valuation += 1
        if order is not None:
            keep = order - valuation
            if keep < len(cs):
                raise ValueError("coefficient window extends past the stated order")
        else:
            while cs and cs[-1] == 0:
                cs.pop()
        if not cs:
            valuation = order if order is not None else 0
        self.valuation = valuation
        self.coeffs = cs
        self.order = order

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_poly(cls, terms: Mapping[int, Rat]) -> LaurentSeries:
        """Exact Laurent polynomial, e.g. from_poly({2: 1}) for x**2."""
        terms = {e: Fraction(c) for e, c in terms.items() if c != 0}
        if not terms:
            return cls(0, [], None)
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(i, 0) for i in range(lo, hi + 1)], None)

    @classmethod
    def zero(cls, order: int | None = None) -> LaurentSeries:
        return cls(order if order is not None else 0, [], order)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        """True if every known coefficient is zero (to the stated order)."""
        return not self.coeffs

    def coefficient(self, exponent: int) -> Fraction:
        if self.order is not None and exponent >= self.order:
            raise ValueError(
                f"coefficient of x**{exponent} requested but series is only "
                f"exact below order {self.order}"
            )
        i = exponent - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def coefficients(self, lo: int, hi: int) -> list[Fraction]:
        """Coefficients of x**lo .. x**(hi-1)."""
        return [self.coefficient(i) for i in range(lo, hi)]

    def truncate(self, order: int) -> LaurentSeries:
        if self.order is not None and order > self.order:
            raise ValueError("cannot extend a truncated series")
        keep = max(order - self.valuation, 0)
        return LaurentSeries(self.valuation, self.coeffs[:keep], order)

    def agrees_with(self, other: LaurentSeries, upto: int) -> bool:
        """Coefficient-wise equality on exponents below `upto`."""
        lo = min(self.valuation, other.valuation, 0)
        return all(
            self.coefficient(i) == other.coefficient(i) for i in range(lo, upto)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.valuation == other.valuation
            and self.coeffs == other.coeffs
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.valuation, tuple(self.coeffs), self.order))

    def __repr__(self) -> str:
        head = ", ".join(
            f"{c}*x^{self.valuation + i}" for i, c in enumerate(self.coeffs[:4])
        )
        if len(self.coeffs) > 4:
            head += ", ..."
        tail = "" if self.order is None else f" + O(x^{self.order})"
        return f"<LaurentSeries {head or '0'}{tail}>"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: LaurentSeries | Rat) -> LaurentSeries:
        other = _coerce(other)
        order = _min_order(self.order, other.order)
        if self.is_zero() and other.is_zero():
            return LaurentSeries.zero(order)
        vals = [s.valuation for s in (self, other) if not s.is_zero()]
        lo = min(vals)
        hi = max(
            s.valuation + len(s.coeffs) for s in (self, other) if not s.is_zero()
        )
        if order is not None:
            hi = min(hi, order)
        out = [Fraction(0)] * (hi - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.valuation + i
                if lo <= e < hi:
                    out[e - lo] += c
        return LaurentSeries(lo, out, order)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.valuation, [-c for c in self.coeffs], self.order)

    def __sub__(self, other: LaurentSeries | Rat) -> LaurentSeries:
        return self + (-_coerce(other))

    def __rsub__(self, other: Rat) -> LaurentSeries:
        return _coerce(other) - self

    def __mul__(self, other: LaurentSeries | Rat) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(
                self.valuation, [c * other for c in self.coeffs], self.order
            )
        a, b = self, other
        # error(a)*lead(b) enters at order_a + val_b, and symmetrically
        if a.is_zero() or b.is_zero():
            if (a.is_zero() and a.order is None) or (b.is_zero() and b.order is None):
                return LaurentSeries(0, [], None)  # exact zero factor
            bounds = []
            for x, y in ((a, b), (b, a)):
                if x.order is None:
                    continue
                # y zero-to-order acts as if its valuation were that order
                bounds.append(x.order + (y.order if y.is_zero() else y.valuation))
            return LaurentSeries.zero(min(bounds))
        order = _min_order(
            None if a.order is None else a.order + b.valuation,
            None if b.order is None else b.order + a.valuation,
        )
        v = a.valuation + b.valuation
        n = len(a.coeffs) + len(b.coeffs) - 1
        if order is not None:
            n = min(n, order - v)
        a_ints = _as_ints(a.coeffs)
        b_ints = _as_ints(b.coeffs) if a_ints is not None else None
        xs = a_ints if b_ints is not None else a.coeffs
        ys = b_ints if b_ints is not None else b.coeffs
        out = [0 if b_ints is not None else Fraction(0)] * n
        for i, x in enumerate(xs):
            if x == 0:
                continue
            top = min(len(ys), n - i)
            for j in range(top):
                out[i + j] += x * ys[j]
        return LaurentSeries(v, out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentSeries.from_poly({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self, order: int | None = None) -> LaurentSeries:
        """Multiplicative inverse, exact to the propagated relative order."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of a series that is zero to its order")
        rel = _min_order(
            None if self.order is None else self.order - self.valuation, order
        )
        if rel is None:
            raise ValueError("inverse of an exact polynomial needs a truncation order")
        lead = self.coeffs[0]
        ints = _as_ints(self.coeffs)
        if ints is not None and abs(ints[0]) == 1:
            sign = ints[0]
            out_i = [0] * rel
            out_i[0] = sign
            for n in range(1, rel):
                s = 0
                for i in range(1, min(n, len(ints) - 1) + 1):
                    s += ints[i] * out_i[n - i]
                out_i[n] = -s * sign
            return LaurentSeries(-self.valuation, out_i, -self.valuation + rel)
        out = [Fraction(0)] * rel
        out[0] = 1 / lead
        for n in range(1, rel):
            s = Fraction(0)
            for i in range(1, min(n, len(self.coeffs) - 1) + 1):
                s += self.coeffs[i] * out[n - i]
            out[n] = -s / lead
        return LaurentSeries(-self.valuation, out, -self.valuation + rel)

    def __truediv__(self, other: LaurentSeries | Rat) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def divide(self, other: LaurentSeries, order: int | None = None) -> LaurentSeries:
        """self / other with an explicit truncation order for exact divisors."""
        return self * other.inverse(order=order)

    def sqrt(self, order: int | None = None) -> LaurentSeries:
        """Square root by Newton iteration b <- (b + a/b)/2, doubling exact terms.

        Requires an even valuation and a leading coefficient that is the
        square of a rational.
        """
        if self.is_zero():
            raise ValueError("sqrt of a series that is zero to its order")
        if self.valuation % 2:
            raise ValueError(f"sqrt needs an even valuation, got {self.valuation}")
        lead = self.coeffs[0]
        if lead < 0:
            raise ValueError(f"leading coefficient {lead} is negative")
        rn = math.isqrt(lead.numerator)
        rd = math.isqrt(lead.denominator)
        if rn * rn != lead.numerator or rd * rd != lead.denominator:
            raise ValueError(f"leading coefficient {lead} is not a rational square")
        rel = _min_order(
            None if self.order is None else self.order - self.valuation, order
        )
        if rel is None:
            raise ValueError("sqrt of an exact polynomial needs a truncation order")
        unit = LaurentSeries(0, self.coeffs[:rel], rel) * (1 / lead)
        b = LaurentSeries(0, [Fraction(1)], 1)
        exact = 1
        while exact < rel:
            exact = min(2 * exact, rel)
            cur = LaurentSeries(0, b.coeffs, exact)
            b = (cur + unit.truncate(exact).divide(cur)) * Fraction(1, 2)
        half_val = self.valuation // 2
        return LaurentSeries(half_val, (b * Fraction(rn, rd)).coeffs, half_val + rel)

    def derivative(self) -> LaurentSeries:
        """Term-by-term derivative with respect to the series variable."""
        out = {
            self.valuation + i - 1: c * (self.valuation + i)
            for i, c in enumerate(self.coeffs)
        }
        order = None if self.order is None else self.order - 1
        lo = self.valuation - 1
        hi = lo + len(self.coeffs)
        return LaurentSeries(lo, [out.get(i, 0) for i in range(lo, hi)], order)


def _coerce(value: LaurentSeries | Rat) -> LaurentSeries:
    if isinstance(value, LaurentSeries):
        return value
    return LaurentSeries.from_poly({0: value})


class RationalGF:
    """A rational generating function num/den with integer coefficients.

    Expansion runs the linear recurrence induced by the denominator, so
    coefficients up to n = 10**5 are cheap.  den[0] must be nonzero; every
    expanded coefficient must come out an integer (asserted), since these
    functions enumerate discrete objects.
    """

    def __init__(self, num: Iterable[int], den: Iterable[int]):
        self.num = tuple(int(c) for c in num)
        self.den = tuple(int(c) for c in den)
        if not self.den or self.den[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")

    def expand(self, count: int) -> list[int]:
        """First `count` series coefficients."""
        num, den = self.num, self.den
        d0 = Fraction(den[0])
        out: list[int] = []
        for n in range(count):
            s = Fraction(num[n]) if n < len(num) else Fraction(0)
            for j in range(1, min(n, len(den) - 1) + 1):
                s -= den[j] * out[n - j]
            q = s / d0
            if q.denominator != 1:
                raise ArithmeticError(
                    f"coefficient {n} is not an integer: {q}"
                )
            out.append(int(q))
        return out
