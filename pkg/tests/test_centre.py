import pytest

from qosp import centre, pbw
from qosp.chebychev import cheb_p, eval_poly_at_element
from qosp.pbw import AlgebraElement, generator
from qosp.rootdata import compute_root_data, epsilon
from qosp.scalars import generic_field, root_field


def specialise(x: AlgebraElement, field):
    """Map a generic-q element to a root field by s -> z^2."""
    s = field.q_half
    out = {}
    for mono, v in x.terms.items():
        num, den = v.numerator_denominator()
        n = sum((field(c) * s**i for i, c in enumerate(num)), field.zero)
        d = sum((field(c) * s**i for i, c in enumerate(den)), field.zero)
        out[mono] = n / d
    return AlgebraElement(field, out)


def test_comemf_generic_up_to_10():
    checks = centre.comemf_checks(10, generic_field())
    assert len(checks) == 20 and all(c.ok for c in checks)


def test_scasm_generic():
    F = generic_field()
    for m in range(1, 7):
        assert centre.verify_scasimir_product(m, F)
    lhs, rhs = centre.scasm_sides(2, F)
    assert rhs == AlgebraElement.monomial(F, 2, 2, 0, -(F.eta**2))
    lhs, rhs = centre.scasm_sides(1, F)
    assert rhs == AlgebraElement.monomial(F, 1, 1, 0, -F.eta)


def test_scasm_root_matches_specialised_generic():
    F = root_field(3)
    g_lhs, g_rhs = centre.scasm_sides(6, generic_field())
    r_lhs, r_rhs = centre.scasm_sides(6, F)
    assert specialise(g_lhs, F) == r_lhs
    assert specialise(g_rhs, F) == r_rhs
    assert r_lhs == r_rhs


@pytest.mark.parametrize("l", [3, 4, 5, 6])
def test_scasm_root_up_to_L(l):
    root = compute_root_data(l)
    assert all(c.ok for c in centre.scasm_checks(root.L, root.field))


@pytest.mark.parametrize("l", [3, 4])
def test_EF_central(l):
    root = compute_root_data(l)
    E, F = centre.build_EF(root.field, root)
    assert E == AlgebraElement.monomial(root.field, 0, root.L, 0)
    assert F == AlgebraElement.monomial(root.field, root.L, 0, 0)
    assert pbw.is_central(E) and pbw.is_central(F)
    e = generator("e", root.field)
    assert F * e - e * F == 0
    assert centre.verify_EF_central(root)


def test_EF_needs_root_mode():
    with pytest.raises(ValueError):
        centre.build_EF(generic_field(), compute_root_data(3))


@pytest.mark.parametrize("l", [6, 10])
def test_half_powers(l):
    root = compute_root_data(l)
    F = root.field
    e, f, k, _ = (generator(n, F) for n in ("e", "f", "k", "k_inv"))
    S = pbw.scasimir(F)
    el = e ** root.l_prime
    assert el * f + f * el == 0
    assert el * k + k * el == 0
    assert el * S + S * el == 0
    assert centre.verify_half_powers(root)


def test_half_powers_precondition():
    with pytest.raises(centre.PreconditionError):
        centre.verify_half_powers(compute_root_data(4))


@pytest.mark.parametrize("l", [3, 4, 5, 6, 7, 8, 9, 10, 11, 12])
def test_srel(l):
    assert centre.verify_srel(compute_root_data(l))


@pytest.mark.parametrize("l", [3, 4, 5, 8, 9, 12])
def test_even_relation(l):
    assert centre.verify_centre_relation_even(compute_root_data(l))


@pytest.mark.parametrize("l", [6, 10])
def test_twice_odd_relations(l):
    report = centre.verify_centre_relations_twice_odd(compute_root_data(l))
    assert report == {"rel2": True, "rel3": True, "rel4": True}


def test_preconditions_reject_wrong_parity():
    with pytest.raises(centre.PreconditionError):
        centre.verify_centre_relation_even(compute_root_data(6))
    with pytest.raises(centre.PreconditionError):
        centre.verify_centre_relations_twice_odd(compute_root_data(4))


def test_catalogs():
    cat4 = centre.centre_catalog(compute_root_data(4))
    assert "k^(l/2) S" in cat4.elements and all(cat4.central.values())
    cat3 = centre.centre_catalog(compute_root_data(3))
    assert set(cat3.elements) == {"k^l", "k^-l", "C", "E", "F"} and all(cat3.central.values())
    assert "k^(l/2) S" not in centre.centre_catalog(compute_root_data(5)).elements


@pytest.mark.parametrize("l", [3, 4, 6])
def test_srel_cartan_restriction(l):
    # drop every monomial with e or f: P_l'(q^{1/2}k - q^{-1/2}k^-1) = q^{l'/2}k^{l'} + (-1)^{l'} q^{-l'/2}k^{-l'}
    root = compute_root_data(l)
    F = root.field
    lp = root.l_prime
    k, ki = generator("k", F), generator("k_inv", F)
    cartan_S = k.scale(F.q_half) - ki.scale(F.q_half.inverse())
    lhs = eval_poly_at_element(cheb_p(lp), cartan_S)
    rhs = AlgebraElement.monomial(F, 0, 0, lp, F.q_half**lp) + AlgebraElement.monomial(
        F, 0, 0, -lp, (-1) ** lp * F.q_half ** (-lp)
    )
    assert lhs == rhs
    srel_lhs, srel_rhs = centre.srel_sides(root)
    assert pbw.cartan_part(srel_rhs) == rhs
    assert srel_rhs - rhs == AlgebraElement.monomial(F, lp, lp, 0, epsilon(lp) * (-F.eta) ** lp)


def test_check_report_shows_both_sides_on_failure():
    F = generic_field()
    e = generator("e", F)
    rep = centre.Check("bogus", e, -e).report()
    assert rep["pass"] is False and rep["lhs"] and rep["rhs"]
