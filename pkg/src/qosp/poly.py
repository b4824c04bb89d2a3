"""Dense univariate polynomials with exact coefficients.

Coefficients may be ints, Fractions, Gaussian rationals or field scalars;
anything supporting ``+ - *`` and truthiness for zero tests works.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence


def _trimmed(coeffs: Iterable[Any]) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class Poly1:
    """Polynomial stored lowest degree first; the zero polynomial is ``()``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        self.coeffs = _trimmed(coeffs)

    @classmethod
    def x(cls, one: Any = 1) -> "Poly1":
        return cls((one - one, one))

    @classmethod
    def constant(cls, c: Any) -> "Poly1":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly1):
            other = Poly1((other,))
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly1({list(self.coeffs)!r})"

    def _coerce(self, other) -> "Poly1":
        return other if isinstance(other, Poly1) else Poly1((other,))

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly1(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly1(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly1()
        out = [a[0] - a[0]] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly1(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly1((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Any) -> Any:
        """Horner evaluation at ``x`` (any ring element, including polynomials)."""
        if not self.coeffs:
            return x * 0
        acc = x * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly1") -> "Poly1":
        acc = Poly1()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly1((c,))
        return acc

    def divmod(self, divisor: "Poly1") -> tuple["Poly1", "Poly1"]:
        """Long division; the leading coefficient of ``divisor`` must be invertible."""
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        if len(rem) < len(d):
            return Poly1(), Poly1(rem)
        quo = [None] * (len(rem) - len(d) + 1)
        for shift in range(len(rem) - len(d), -1, -1):
            top = rem[shift + len(d) - 1]
            if isinstance(top, int) and isinstance(lead, int):
                c = Fraction(top, lead)
                if c.denominator == 1:
                    c = c.numerator
            else:
                c = top / lead
            quo[shift] = c
            if c:
                for i, dc in enumerate(d):
                    rem[shift + i] = rem[shift + i] - c * dc
        zero = self.coeffs[0] - self.coeffs[0]
        return Poly1(q if q is not None else zero for q in quo), Poly1(rem[: len(d) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for mixed (zero polynomial is even)."""
        degs = {i % 2 for i, c in enumerate(self.coeffs) if c}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def map(self, fn) -> "Poly1":
        return Poly1(fn(c) for c in self.coeffs)


def cyclotomic_polynomial(n: int) -> Poly1:
    """Phi_n, by dividing x^n - 1 by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    return Poly1(_cyclotomic_coeffs(n))


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {}


def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_monic_div(num, _cyclotomic_coeffs(d))
    _CYCLO_CACHE[n] = tuple(num)
    return _CYCLO_CACHE[n]


def _exact_monic_div(a: Sequence[int], b: Sequence[int]) -> list[int]:
    rem = list(a)
    db = len(b) - 1
    quo = [0] * (len(a) - db)
    for shift in range(len(a) - 1 - db, -1, -1):
        c = rem[shift + db]
        quo[shift] = c
        if c:
            for i, bc in enumerate(b):
                rem[shift + i] -= c * bc
    if any(rem[:db]):
        raise ArithmeticError("inexact division")
    return quo
