"""The polynomial families P_m, Q_m, R_m and their identities.

    P_0 = 2, P_1 = S, P_m = S P_{m-1} + P_{m-2}
    Q_0 = 2, Q_1 = C, Q_m = C Q_{m-1} - Q_{m-2}
    R_0 = 1, R_1 = C + 1, R_m = C R_{m-1} - R_{m-2}

P_m(u - 1/u) = u^m + (-1/u)^m; the Q and R families express the even and
odd P's through C = S^2 + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .pbw import AlgebraElement, identity
from .poly import Poly1


@lru_cache(maxsize=None)
def _family(kind: str, m: int) -> Poly1:
    x = Poly1((0, 1))
    if kind == "p":
        seed, sign = (Poly1((2,)), x), 1
    elif kind == "q":
        seed, sign = (Poly1((2,)), x), -1
    elif kind == "r":
        seed, sign = (Poly1((1,)), Poly1((1, 1))), -1
    else:
        raise ValueError(f"unknown family {kind!r}")
    if m < 0:
        raise ValueError("m must be >= 0")
    if m < 2:
        return seed[m]
    prev2, prev1 = _family(kind, m - 2), _family(kind, m - 1)
    return x * prev1 + prev2 if sign > 0 else x * prev1 - prev2


def cheb_p(m: int) -> Poly1:
    return _family("p", m)


def cheb_q(m: int) -> Poly1:
    return _family("q", m)


def cheb_r(m: int) -> Poly1:
    return _family("r", m)


FAMILIES = {"p": cheb_p, "q": cheb_q, "r": cheb_r}


class GaussianRational:
    """a + b i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x):
        return x if isinstance(x, GaussianRational) else GaussianRational(x)

    def __add__(self, other):
        other = self._lift(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = GaussianRational(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._lift(other)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"({self.re}+{self.im}i)"


I = GaussianRational(0, 1)


@dataclass(frozen=True)
class IdentityResult:
    identity: str
    m: int
    passed: bool


def _gauss(p: Poly1) -> Poly1:
    return p.map(GaussianRational)


def _scaled_arg(p: Poly1, c) -> Poly1:
    """p(c x)."""
    return Poly1(coef * c**i for i, coef in enumerate(p.coeffs))


def verify_cheb_identities(m_max: int) -> list[IdentityResult]:
    """Check the four identity families for 0 <= m <= m_max."""
    S = Poly1((0, 1))
    C_of_S = Poly1((2, 0, 1))  # S^2 + 2
    out = []
    for m in range(m_max + 1):
        # P_{2m}(S) = Q_m(S^2 + 2)
        out.append(IdentityResult("p_even_is_q", m, cheb_p(2 * m) == cheb_q(m).compose(C_of_S)))
        # P_m(iS) = i^m Q_m(S) and Q_m(iS) = i^m P_m(S)
        im = I**m
        pg, qg = _gauss(cheb_p(m)), _gauss(cheb_q(m))
        ok_pq = _scaled_arg(pg, I) == qg.map(lambda c: c * im)
        ok_qp = _scaled_arg(qg, I) == pg.map(lambda c: c * im)
        out.append(IdentityResult("p_of_iS", m, ok_pq))
        out.append(IdentityResult("q_of_iS", m, ok_qp))
        # Q_m(C) = P_m(S)^2 + 2 (-1)^{m+1}
        sign = 2 if m % 2 == 1 else -2
        out.append(IdentityResult("q_is_p_squared", m, cheb_q(m).compose(C_of_S) == cheb_p(m) * cheb_p(m) + sign))
        # P_{2m+1}(S) = S R_m(C)
        out.append(IdentityResult("p_odd_is_s_r", m, cheb_p(2 * m + 1) == S * cheb_r(m).compose(C_of_S)))
    return out


def eval_poly_at_element(p: Poly1, x: AlgebraElement) -> AlgebraElement:
    """Horner evaluation of p at an algebra element."""
    field = x.field
    acc = identity(field).scale(0)
    for c in reversed(p.coeffs):
        acc = acc * x + identity(field).scale(field(c))
    return acc
