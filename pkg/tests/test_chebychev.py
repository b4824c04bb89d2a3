import pytest
import sympy

from qosp import pbw
from qosp.chebychev import cheb_p, cheb_q, cheb_r, eval_poly_at_element, verify_cheb_identities
from qosp.poly import Poly1
from qosp.scalars import generic_field, root_field

t, X, u = sympy.symbols("t X u")

GENERATING = {
    "p": ((2 - t * X) / (1 - t * X - t**2), cheb_p),
    "q": ((2 - t * X) / (1 - t * X + t**2), cheb_q),
    "r": ((1 + t) / (1 - t * X + t**2), cheb_r),
}


def as_sympy(p: Poly1):
    return sum(int(c) * X**i for i, c in enumerate(p.coeffs))


@pytest.mark.parametrize("family", sorted(GENERATING))
def test_recursion_matches_generating_function(family):
    gf, fn = GENERATING[family]
    series = sympy.series(gf, t, 0, 12).removeO()
    for m in range(12):
        assert sympy.expand(series.coeff(t, m) - as_sympy(fn(m))) == 0, m


@pytest.mark.parametrize("m", range(16))
def test_p_against_u_laurent(m):
    # P_m(u - 1/u) = u^m + (-1/u)^m
    lhs = as_sympy(cheb_p(m)).subs(X, u - 1 / u)
    assert sympy.simplify(sympy.expand(lhs - (u**m + (-1 / u) ** m))) == 0


def test_examples():
    assert cheb_p(2) == Poly1((2, 0, 1))
    assert cheb_p(3) == Poly1((0, 3, 0, 1))
    assert cheb_r(1) == Poly1((1, 1))
    assert cheb_p(4) == Poly1((2, 0, 4, 0, 1))


@pytest.mark.parametrize("m", range(21))
def test_parity_and_degree(m):
    assert cheb_p(m).parity() == m % 2
    assert cheb_p(m).degree == cheb_q(m).degree == cheb_r(m).degree == m


def test_identities_up_to_20():
    results = verify_cheb_identities(20)
    assert len(results) == 5 * 21
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_eval_at_element():
    F = generic_field()
    S = pbw.scasimir(F)
    assert eval_poly_at_element(cheb_p(2), S) == pbw.casimir(F)
    assert eval_poly_at_element(cheb_p(1), S) == S
    assert eval_poly_at_element(Poly1((2,)), pbw.generator("e", F)) == 2


def test_eval_at_element_root():
    F = root_field(4)
    S = pbw.scasimir(F)
    assert eval_poly_at_element(cheb_q(3), pbw.casimir(F)) == eval_poly_at_element(cheb_p(6), S)
