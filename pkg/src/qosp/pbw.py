"""U_q(osp(1|2)) in the PBW basis f^a e^b k^c.

Elements are kept in normal form at all times, so equality of elements is
equality of their term maps. Products are normal-ordered with

    k^c f^a = q^{-ac} f^a k^c,        k^c e^b = q^{bc} e^b k^c,
    e f^m = (-1)^m f^m e + (-1)^{m-1} f^{m-1} w_m,
    w_m = (alpha_m k - beta_m k^{-1}) / (q - q^{-1}),

alpha_m = sum_{j<m} q'^{-j}, beta_m = sum_{j<m} q'^j, q' = -q. The normal
forms of e^b f^a are memoized per field.
"""

from __future__ import annotations

from functools import lru_cache
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping

from .scalars import FieldMismatchError, ScalarField, _ScalarBase

Monomial = tuple[int, int, int]  # (a, b, c) for f^a e^b k^c

ONE: Monomial = (0, 0, 0)


class AlgebraElement:
    """A finite sum of PBW monomials with nonzero scalar coefficients."""

    __slots__ = ("field", "_terms")

    def __init__(self, field: ScalarField, terms: Mapping[Monomial, object] | None = None):
        self.field = field
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = field(c)
                if c:
                    if mono[0] < 0 or mono[1] < 0:
                        raise ValueError(f"negative power of e or f in {mono}")
                    clean[tuple(mono)] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, field, terms: dict) -> "AlgebraElement":
        # terms already clean
        obj = object.__new__(cls)
        obj.field = field
        obj._terms = terms
        return obj

    @classmethod
    def scalar(cls, field, c) -> "AlgebraElement":
        return cls(field, {ONE: c})

    @classmethod
    def monomial(cls, field, a: int, b: int, c: int, coeff=1) -> "AlgebraElement":
        return cls(field, {(a, b, c): coeff})

    @property
    def terms(self) -> Mapping[Monomial, object]:
        return MappingProxyType(self._terms)

    def coefficient(self, mono: Monomial):
        return self._terms.get(tuple(mono), self.field.zero)

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_scalar(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE in self._terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self._terms.get(ONE, self.field.zero)

    # -- linear structure ---------------------------------------------------

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, _ScalarBase) or (isinstance(other, Rational) and not isinstance(other, bool)):
            return AlgebraElement.scalar(self.field, self.field(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            if mono in out:
                v = out[mono] + c
                if v:
                    out[mono] = v
                else:
                    del out[mono]
            else:
                out[mono] = c
        return AlgebraElement._wrap(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._wrap(self.field, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "AlgebraElement":
        c = self.field(c)
        if not c:
            return AlgebraElement(self.field)
        return AlgebraElement._wrap(self.field, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, _ScalarBase) or (isinstance(other, Rational) and not isinstance(other, bool)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, _ScalarBase) or (isinstance(other, Rational) and not isinstance(other, bool)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return power(self, n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    __hash__ = None

    # -- output -------------------------------------------------------------

    def __str__(self):
        return element_text(self)

    def __repr__(self):
        return f"AlgebraElement({self})"

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "terms": [
                {"a": a, "b": b, "c": c, "coeff": str(v)} for (a, b, c), v in self.sorted_terms()
            ],
        }


def element_text(x: AlgebraElement) -> str:
    """Canonical text form, re-parseable by the expression parser."""
    if not x:
        return "0"
    parts = []
    for (a, b, c), v in x.sorted_terms():
        factors = [f"({v})"]
        if a:
            factors.append("f" if a == 1 else f"f^{a}")
        if b:
            factors.append("e" if b == 1 else f"e^{b}")
        if c:
            factors.append("k" if c == 1 else f"k^{c}")
        parts.append("*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# multiplication


def _w_coeffs(field: ScalarField, m: int):
    """(alpha_m, beta_m) / (q - q^{-1}), memoized per field."""
    memo = _memo(field)["w"]
    r = memo.get(m)
    if r is None:
        qp = field.q_prime
        qpi = qp.inverse()
        alpha = beta = field.zero
        t1 = t2 = field.one
        for _ in range(m):
            alpha = alpha + t1
            beta = beta + t2
            t1 = t1 * qpi
            t2 = t2 * qp
        inv = field.q_minus_qinv.inverse()
        r = memo.setdefault(m, (alpha * inv, beta * inv))
    return r


@lru_cache(maxsize=None)
def _memo(field: ScalarField) -> dict:
    return {"w": {}, "nf": {}}


def _nf_ef(field: ScalarField, b: int, a: int) -> dict:
    """Normal form of e^b f^a as a term dict."""
    memo = _memo(field)["nf"]
    key = (b, a)
    r = memo.get(key)
    if r is not None:
        return r
    if b == 0 or a == 0:
        r = {(a, b, 0): field.one}
        return memo.setdefault(key, r)
    # fill the table bottom-up in b to keep recursion shallow
    for bb in range(1, b):
        if (bb, a) not in memo:
            _nf_ef(field, bb, a)
    out: dict = {}
    sign = 1 if a % 2 == 0 else -1
    # e^{b-1} f^a e, sign (-1)^a
    for (i, j, c), z in _nf_ef(field, b - 1, a).items():
        v = z * field.q_power(c) if c else z
        _acc(out, (i, j + 1, c), v if sign > 0 else -v)
    # e^{b-1} f^{a-1} (gamma k - delta k^{-1}), sign (-1)^{a-1}
    gamma, delta = _w_coeffs(field, a)
    for (i, j, c), z in _nf_ef(field, b - 1, a - 1).items():
        g = z * gamma
        d = z * delta
        if sign > 0:
            g, d = -g, -d
        _acc(out, (i, j, c + 1), g)
        _acc(out, (i, j, c - 1), -d)
    out = {m: v for m, v in out.items() if v}
    return memo.setdefault(key, out)


def _acc(out: dict, mono, v):
    if mono in out:
        out[mono] = out[mono] + v
    else:
        out[mono] = v


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.field is not y.field and x.field != y.field:
        raise FieldMismatchError(f"{x.field!r} vs {y.field!r}")
    field = x.field
    one = field.one
    out: dict = {}
    for (a1, b1, c1), u in x._terms.items():
        for (a2, b2, c2), v in y._terms.items():
            coeff = u * v
            n = c1 * (b2 - a2)
            if n:
                coeff = coeff * field.q_power(n)
            cc = c1 + c2
            for (i, j, c), z in _nf_ef(field, b1, a2).items():
                w = coeff if z is one else coeff * z
                if c and b2:
                    w = w * field.q_power(c * b2)
                _acc(out, (a1 + i, j + b2, c + cc), w)
    return AlgebraElement._wrap(field, {m: c for m, c in out.items() if c})


def power(x: AlgebraElement, n: int) -> AlgebraElement:
    if n < 0:
        if len(x) == 1:
            ((a, b, c), v), = x._terms.items()
            if a == 0 and b == 0:
                return AlgebraElement._wrap(x.field, {(0, 0, c * n): v.inverse() ** -n})
        raise ValueError("negative powers only exist for scalar multiples of k^c")
    result = identity(x.field)
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


# ---------------------------------------------------------------------------
# distinguished elements


def identity(field: ScalarField) -> AlgebraElement:
    return AlgebraElement._wrap(field, {ONE: field.one})


def zero(field: ScalarField) -> AlgebraElement:
    return AlgebraElement._wrap(field, {})


_GENERATORS = {"e": (0, 1, 0), "f": (1, 0, 0), "k": (0, 0, 1), "k_inv": (0, 0, -1)}


def generator(name: str, field: ScalarField) -> AlgebraElement:
    try:
        mono = _GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}") from None
    return AlgebraElement._wrap(field, {mono: field.one})


def scasimir(field: ScalarField) -> AlgebraElement:
    """S = q^{1/2} k - q^{-1/2} k^{-1} - eta f e."""
    sh = field.q_half
    return AlgebraElement(field, {(0, 0, 1): sh, (0, 0, -1): -sh.inverse(), (1, 1, 0): -field.eta})


def casimir(field: ScalarField) -> AlgebraElement:
    q = field.q
    qi = field.q_inv
    d2 = field.q_minus_qinv ** 2
    return AlgebraElement(
        field,
        {
            (0, 0, 2): q,
            (0, 0, -2): qi,
            (1, 1, 1): d2 * q,
            (1, 1, -1): d2 * qi,
            (2, 2, 0): -d2 * (q + 2 + qi),
        },
    )


# ---------------------------------------------------------------------------
# grading, brackets, centrality


def grade(x: AlgebraElement) -> int | str:
    """0 (even), 1 (odd) or "mixed"; the zero element counts as even."""
    parities = {(a + b) % 2 for a, b, _ in x._terms}
    if len(parities) > 1:
        return "mixed"
    return parities.pop() if parities else 0


def supercommutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    gx, gy = grade(x), grade(y)
    if gx == "mixed" or gy == "mixed":
        raise ValueError("supercommutator needs homogeneous arguments")
    if gx and gy:
        return x * y + y * x
    return x * y - y * x


def is_central(x: AlgebraElement) -> bool:
    f = x.field
    return all(x * g == g * x for g in (generator("e", f), generator("f", f), generator("k", f)))


def is_scentral(x: AlgebraElement) -> bool:
    f = x.field
    e, ff, k = generator("e", f), generator("f", f), generator("k", f)
    return x * e == -(e * x) and x * ff == -(ff * x) and x * k == k * x


def cartan_part(x: AlgebraElement) -> AlgebraElement:
    """Drop every monomial with a + b > 0 (the e = f = 0 quotient)."""
    return AlgebraElement._wrap(x.field, {m: c for m, c in x._terms.items() if m[0] == 0 and m[1] == 0})


# ---------------------------------------------------------------------------
# automorphisms

SIGNED_PERMUTATION = "signed_permutation"


def _generator_images(field: ScalarField, spec) -> dict[str, AlgebraElement]:
    e, f, k, ki = (generator(n, field) for n in ("e", "f", "k", "k_inv"))
    if spec == SIGNED_PERMUTATION:
        return {"e": -f, "f": e, "k": ki, "k_inv": k}
    kind, a = spec
    if kind != "scale":
        raise ValueError(f"unknown automorphism {spec!r}")
    a = field(a)
    if not a:
        raise ZeroDivisionError("scale automorphism needs a != 0")
    return {"e": e.scale(a), "f": f.scale(a.inverse()), "k": k, "k_inv": ki}


def automorphism_is_morphism(field: ScalarField, spec) -> bool:
    """The generator images satisfy the defining relations."""
    im = _generator_images(field, spec)
    e, f, k, ki = im["e"], im["f"], im["k"], im["k_inv"]
    one = identity(field)
    return (
        k * e * ki == e.scale(field.q)
        and k * f * ki == f.scale(field.q_inv)
        and e * f + f * e == (k - ki).scale(field.q_minus_qinv.inverse())
        and k * ki == one
        and ki * k == one
    )


def apply_automorphism(x: AlgebraElement, spec) -> AlgebraElement:
    """spec is "signed_permutation" or ("scale", a)."""
    field = x.field
    im = _generator_images(field, spec)
    if spec != SIGNED_PERMUTATION:
        a = field(spec[1])
        return AlgebraElement._wrap(field, {m: c * a ** (m[1] - m[0]) for m, c in x._terms.items()})
    out = zero(field)
    for (a, b, c), v in x._terms.items():
        kpart = im["k"] ** c if c >= 0 else im["k_inv"] ** (-c)
        out = out + ((im["f"] ** a) * (im["e"] ** b) * kpart).scale(v)
    return out


def linear_combination(field: ScalarField, items: Iterable[tuple[object, AlgebraElement]]) -> AlgebraElement:
    out = zero(field)
    for c, x in items:
        out = out + x.scale(c)
    return out
