"""Exact coefficient fields.

Two modes share one interface:

* generic: rational functions in ``s`` with ``q = s**2`` (so ``s`` is the
  fixed square root of ``q``);
* root(l): the cyclotomic field Q(z), z a primitive N-th root of unity with
  N = 4l, where ``q = z**4`` and the square root of q is ``z**2``.

Everything is built from Python ints; no floating point is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from numbers import Rational

from .poly import Poly1, _cyclotomic_coeffs


class FieldMismatchError(ValueError):
    """Operands live in different scalar fields."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (tuples, lowest degree first, no trailing zeros)


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pscale(a, c):
    return [x * c for x in a] if c else []


def _pmul(a, b):
    if not a or not b:
        return []
    if len(b) == 1:
        return _pscale(a, b[0])
    if len(a) == 1:
        return _pscale(b, a[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _content(a) -> int:
    return math.gcd(*a) if a else 0


def _primitive(a):
    c = _content(a)
    if c > 1:
        a = [x // c for x in a]
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _prem(a, b):
    """Primitive part of the pseudo-remainder of a by b."""
    r = list(a)
    nb = len(b)
    lb = b[-1]
    while len(r) >= nb:
        lr = r[-1]
        shift = len(r) - nb
        g = math.gcd(lr, lb)
        m1, m2 = lb // g, lr // g
        r = [x * m1 for x in r]
        for i, bc in enumerate(b):
            r[i + shift] -= m2 * bc
        r.pop()
        _trim(r)
        if r:
            c = _content(r)
            if c > 1:
                r = [x // c for x in r]
    return r


def _pgcd(a, b):
    """Gcd over Q[x] of two nonzero integer polynomials, primitive, lc > 0."""
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return [1]
    a = _primitive(a)
    b = _primitive(b)
    if a == b:
        return a
    while b:
        if len(b) == 1:
            return [1]
        a, b = b, _prem(a, b)
    return _primitive(a)


def _pdiv_exact(a, g):
    """a / g over Z[x], g primitive and known to divide a."""
    if len(g) == 1:
        return [x // g[0] for x in a]
    rem = list(a)
    ng = len(g) - 1
    lg = g[-1]
    quo = [0] * (len(a) - ng)
    for shift in range(len(a) - 1 - ng, -1, -1):
        c, r = divmod(rem[shift + ng], lg)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quo[shift] = c
        if c:
            for i, gc in enumerate(g):
                rem[shift + i] -= c * gc
    return quo


def _strip_low(p):
    """Split p = x**v * r with r(0) != 0."""
    v = 0
    while v < len(p) and p[v] == 0:
        v += 1
    return v, p[v:]


def _poly_text(coeffs, var: str) -> str:
    """Render rational coefficients (lowest first) highest degree first."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class ScalarField:
    """A coefficient field: ``mode`` is "generic" or "root"."""

    mode: str
    l: int | None = None

    def __post_init__(self):
        if self.mode == "root":
            if self.l is None or self.l < 3:
                raise ValueError("root mode needs l >= 3")
        elif self.mode == "generic":
            if self.l is not None:
                raise ValueError("generic mode takes no l")
        else:
            raise ValueError(f"unknown field mode {self.mode!r}")

    @property
    def N(self) -> int | None:
        return 4 * self.l if self.mode == "root" else None

    @property
    def is_root(self) -> bool:
        return self.mode == "root"

    def __repr__(self):
        return "ScalarField(generic)" if self.mode == "generic" else f"ScalarField(root, l={self.l})"

    def to_json(self) -> dict:
        if self.mode == "generic":
            return {"mode": "generic"}
        return {"mode": "root", "l": self.l, "N": self.N}

    # -- construction -----------------------------------------------------

    def __call__(self, x) -> "Scalar":
        if isinstance(x, (GenericScalar, CycScalar)):
            if x.field is not self and x.field != self:
                raise FieldMismatchError(f"{x.field!r} vs {self!r}")
            return x
        if isinstance(x, bool) or not isinstance(x, Rational):
            raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")
        x = Fraction(x)
        if self.mode == "generic":
            return GenericScalar._make(self, 0, [x.numerator] if x else [], [x.denominator])
        return CycScalar._make(self, [x.numerator] + [0] * (self._phi - 1), x.denominator)

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    @cached_property
    def q_half(self):
        if self.mode == "generic":
            return GenericScalar._make(self, 1, [1], [1])
        return self.root_power(2)

    @cached_property
    def q(self):
        return self.q_half * self.q_half

    @cached_property
    def q_inv(self):
        return self.q.inverse()

    @cached_property
    def q_prime(self):
        return -self.q

    @cached_property
    def q_minus_qinv(self):
        return self.q - self.q_inv

    @cached_property
    def eta(self):
        sh = self.q_half
        return (sh + sh.inverse()) * self.q_minus_qinv

    def q_power(self, n: int):
        """q**n, memoized."""
        cache = self._qpow_cache
        v = cache.get(n)
        if v is None:
            v = cache[n] = self.q_half ** (2 * n)
        return v

    def q_half_power(self, n: int):
        """(q^(1/2))**n."""
        if n % 2 == 0:
            return self.q_power(n // 2)
        return self.q_power((n - 1) // 2) * self.q_half

    @cached_property
    def _qpow_cache(self) -> dict:
        return {}

    def root_power(self, j: int) -> "CycScalar":
        """z**j for the distinguished generator z of Q(z_N)."""
        if self.mode != "root":
            raise ValueError("root_power needs a root-of-unity field")
        vec = self._pow_table[j % self.N]
        return CycScalar._make(self, list(vec), 1)

    @property
    def generator(self):
        """s in generic mode, z in root mode."""
        return self.q_half if self.mode == "generic" else self.root_power(1)

    # -- cyclotomic internals ---------------------------------------------

    @cached_property
    def cyclotomic(self) -> tuple[int, ...]:
        return _cyclotomic_coeffs(self.N)

    @cached_property
    def _phi(self) -> int:
        return len(self.cyclotomic) - 1

    @cached_property
    def _pow_table(self) -> tuple[tuple[int, ...], ...]:
        # z**k reduced mod Phi_N for 0 <= k < N
        phi = self._phi
        cyc = self.cyclotomic
        rows = []
        cur = [1] + [0] * (phi - 1)
        for _ in range(self.N):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * cyc[i]
        return tuple(rows)

    @cached_property
    def _galois_exponents(self) -> tuple[int, ...]:
        return tuple(j for j in range(2, self.N) if math.gcd(j, self.N) == 1)


@lru_cache(maxsize=None)
def generic_field() -> ScalarField:
    return ScalarField("generic")


@lru_cache(maxsize=None)
def root_field(l: int) -> ScalarField:
    return ScalarField("root", l)


def _same_field(a, b):
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")


class _ScalarBase:
    __slots__ = ()

    def _coerce(self, other):
        if isinstance(other, _ScalarBase):
            _same_field(self, other)
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def is_zero(self) -> bool:
        return not self

    def __repr__(self):
        return f"<{self.field.mode} {self}>"


class GenericScalar(_ScalarBase):
    """s**shift * num(s) / den(s) with num(0), den(0) != 0, coprime, lc(den) > 0."""

    __slots__ = ("field", "shift", "num", "den")

    @classmethod
    def _make(cls, field, shift, num, den):
        # normalize from arbitrary integer polynomials (den nonzero)
        if not den:
            raise ZeroDivisionError("zero denominator")
        num = _trim(list(num))
        if not num:
            obj = object.__new__(cls)
            obj.field, obj.shift, obj.num, obj.den = field, 0, (), (1,)
            return obj
        v, num = _strip_low(num)
        w, den = _strip_low(list(den))
        shift += v - w
        if len(den) > 1 and len(num) > 1:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdiv_exact(num, g)
                den = _pdiv_exact(den, g)
        c = math.gcd(_content(num), _content(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = [x // c for x in num]
            den = [x // c for x in den]
        obj = object.__new__(cls)
        obj.field, obj.shift, obj.num, obj.den = field, shift, tuple(num), tuple(den)
        return obj

    def _key(self):
        return (self.shift, self.num, self.den)

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        v = min(self.shift, other.shift)
        a = [0] * (self.shift - v) + list(self.num)
        b = [0] * (other.shift - v) + list(other.num)
        if self.den == other.den:
            return GenericScalar._make(self.field, v, _padd(a, b), self.den)
        num = _padd(_pmul(a, other.den), _pmul(b, self.den))
        return GenericScalar._make(self.field, v, num, _pmul(self.den, other.den))

    def __neg__(self):
        obj = object.__new__(GenericScalar)
        obj.field, obj.shift, obj.num, obj.den = self.field, self.shift, tuple(-x for x in self.num), self.den
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.field.zero
        shift = self.shift + other.shift
        if len(self.num) == 1 and len(self.den) == 1 and self.num[0] == 1 and self.den[0] == 1:
            return GenericScalar._raw(self.field, shift, other.num, other.den)
        if len(other.num) == 1 and len(other.den) == 1 and other.num[0] == 1 and other.den[0] == 1:
            return GenericScalar._raw(self.field, shift, self.num, self.den)
        # cross-cancel keeps the operands small
        n1, d2 = self._cancel(self.num, other.den)
        n2, d1 = self._cancel(other.num, self.den)
        return GenericScalar._make(self.field, shift, _pmul(n1, n2), _pmul(d1, d2))

    @staticmethod
    def _cancel(n, d):
        if len(n) > 1 and len(d) > 1:
            g = _pgcd(list(n), list(d))
            if len(g) > 1:
                return _pdiv_exact(list(n), g), _pdiv_exact(list(d), g)
        return list(n), list(d)

    @classmethod
    def _raw(cls, field, shift, num, den):
        obj = object.__new__(cls)
        obj.field, obj.shift, obj.num, obj.den = field, shift, tuple(num), tuple(den)
        return obj

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return GenericScalar._make(self.field, -self.shift, list(self.den), list(self.num))

    def numerator_denominator(self) -> tuple[list[Fraction], list[Fraction]]:
        """Canonical fraction of polynomials in s with monic denominator."""
        num = [0] * max(self.shift, 0) + list(self.num)
        den = [0] * max(-self.shift, 0) + list(self.den)
        lc = den[-1]
        return [Fraction(x, lc) for x in num], [Fraction(x, lc) for x in den]

    def __str__(self):
        num, den = self.numerator_denominator()
        if len(den) == 1:
            return _poly_text(num, "s")
        return f"({_poly_text(num, 's')})/({_poly_text(den, 's')})"

    def as_fraction(self) -> Fraction | None:
        """The rational value if this scalar is constant."""
        if not self.num:
            return Fraction(0)
        if self.shift == 0 and len(self.num) == 1 and len(self.den) == 1:
            return Fraction(self.num[0], self.den[0])
        return None


class CycScalar(_ScalarBase):
    """sum_i num[i] z**i / den, reduced mod Phi_N; gcd(num, den) = 1, den > 0."""

    __slots__ = ("field", "num", "den")

    @classmethod
    def _make(cls, field, num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-x for x in num]
            den = -den
        if den != 1:
            g = math.gcd(den, *num)
            if g != 1:
                num = [x // g for x in num]
                den //= g
        obj = object.__new__(cls)
        obj.field, obj.num, obj.den = field, tuple(num), den
        return obj

    def _key(self):
        return (self.num, self.den)

    def __bool__(self):
        return any(self.num)

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CycScalar._make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return CycScalar._make(self.field, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    def __neg__(self):
        obj = object.__new__(CycScalar)
        obj.field, obj.num, obj.den = self.field, tuple(-x for x in self.num), self.den
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar._make(self.field, self._mulvec(self.num, other.num), self.den * other.den)

    def _mulvec(self, a, b):
        field = self.field
        phi = field._phi
        table = field._pow_table
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = table[k]
                for i in range(phi):
                    out[i] += c * row[i]
        return out

    def conjugate(self, j: int) -> "CycScalar":
        """Image under the Galois automorphism z -> z**j (gcd(j, N) = 1)."""
        field = self.field
        table = field._pow_table
        N = field.N
        out = [0] * field._phi
        for i, x in enumerate(self.num):
            if x:
                row = table[(i * j) % N]
                for t in range(len(out)):
                    out[t] += x * row[t]
        return CycScalar._make(field, out, self.den)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        # a^{-1} = (product of the other conjugates) / norm(a)
        field = self.field
        prod_num = [1] + [0] * (field._phi - 1)
        prod_den = 1
        for j in field._galois_exponents:
            c = self.conjugate(j)
            prod_num = self._mulvec(prod_num, c.num)
            prod_den *= c.den
            g = math.gcd(prod_den, *prod_num)
            if g > 1:
                prod_num = [x // g for x in prod_num]
                prod_den //= g
        norm_vec = self._mulvec(self.num, prod_num)
        assert not any(norm_vec[1:]), "norm must be rational"
        norm = Fraction(norm_vec[0], self.den * prod_den)
        return CycScalar._make(field, [x * norm.denominator for x in prod_num], prod_den * norm.numerator)

    def __str__(self):
        return _poly_text(self.coeffs, "z")

    def as_fraction(self) -> Fraction | None:
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)


Scalar = GenericScalar | CycScalar


def scalar_from_poly(field: ScalarField, coeffs) -> Scalar:
    """Build sum_i coeffs[i] * g**i where g is s (generic) or z (root)."""
    coeffs = [Fraction(c) for c in coeffs]
    if not coeffs:
        return field.zero
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    if field.mode == "generic":
        return GenericScalar._make(field, 0, ints, [den])
    acc = field.zero
    g = field.root_power(1)
    for c in reversed(coeffs):
        acc = acc * g + c
    return acc


def multiplicative_order(x: Scalar, bound: int) -> int | None:
    """Smallest m in 1..bound with x**m == 1, or None."""
    one = x.field.one
    acc = x
    for m in range(1, bound + 1):
        if acc == one:
            return m
        acc = acc * x
    return None


def cyclotomic_polynomial_for(field: ScalarField) -> Poly1:
    return Poly1(field.cyclotomic)
