"""Exact dense polynomial arithmetic over unbounded integers.

Counting results are polynomials with coefficient of x^i equal to the number
of (power dominating / zero forcing / dominating) sets of size i, so the
coefficients must never be truncated to machine width. All exact claims go
through integer evaluation; complex evaluation is double precision and only
used by the numeric root machinery.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import NotDivisible


class IntPolynomial:
    """Immutable dense polynomial; coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # construction helpers

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    # basic queries

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    @property
    def low_index(self) -> int:
        """Smallest power with a nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPolynomial(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"

    # ring operations

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPolynomial.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # evaluation

    def eval_int(self, t: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        """Double-precision Horner evaluation; error grows with degree and |z|."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    # shape analysis

    def is_unimodal(self) -> tuple[bool, int | None]:
        """Whether the nonzero coefficient range rises weakly then falls weakly.

        Returns (verdict, peak index), where the peak is the lowest power
        attaining the maximum coefficient (None for the zero polynomial).
        """
        lo = self.low_index
        if lo < 0:
            return True, None
        vals = self.coeffs[lo:]
        peak = lo + max(range(len(vals)), key=lambda i: (vals[i], -i))
        i = 0
        while i + 1 < len(vals) and vals[i + 1] >= vals[i]:
            i += 1
        while i + 1 < len(vals) and vals[i + 1] <= vals[i]:
            i += 1
        return i == len(vals) - 1, peak

    # serialization (coefficients as decimal strings, index = power)

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "IntPolynomial":
        return cls(int(s) for s in items)


def binomial_minus_one(n: int) -> IntPolynomial:
    """(x+1)^n - 1, the polynomial whose x^i coefficient is C(n, i) for i >= 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return IntPolynomial([0] + [comb(n, i) for i in range(1, n + 1)])


def div_exact(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact quotient p / q over the integers.

    Raises NotDivisible unless q divides p with integer coefficients.
    """
    if q.is_zero():
        raise NotDivisible("division by the zero polynomial")
    if p.is_zero():
        return IntPolynomial()
    if p.degree < q.degree:
        raise NotDivisible("degree of dividend is smaller than divisor")
    rem = [Fraction(c) for c in p.coeffs]
    div = [Fraction(c) for c in q.coeffs]
    dq = len(div) - 1
    lead = div[-1]
    quot = [Fraction(0)] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i] / lead
        quot[i - dq] = c
        if c:
            for j in range(dq + 1):
                rem[i - dq + j] -= c * div[j]
    if any(rem):
        raise NotDivisible("nonzero remainder")
    if any(c.denominator != 1 for c in quot):
        raise NotDivisible("quotient is not integral")
    return IntPolynomial(int(c) for c in quot)
