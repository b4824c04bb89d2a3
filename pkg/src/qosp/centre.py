"""Central elements and relations in the centre, checked by two-sided normal forms.

Each ``*_checks`` function returns a list of :class:`Check` records; a
relation holds when both sides have the same PBW normal form. The
``verify_*`` wrappers reduce those lists to a boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import pbw
from .chebychev import cheb_p, cheb_q, cheb_r, eval_poly_at_element
from .pbw import ONE, AlgebraElement, casimir, generator, identity, scasimir
from .rootdata import RootData, epsilon
from .scalars import ScalarField


class PreconditionError(ValueError):
    """The relation does not apply to this l."""


@dataclass(frozen=True)
class Check:
    relation: str
    lhs: AlgebraElement
    rhs: AlgebraElement
    l: int | None = None

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def report(self) -> dict:
        out = {"relation": self.relation, "l": self.l, "pass": self.ok}
        if not self.ok:
            out["lhs"] = self.lhs.to_json()["terms"]
            out["rhs"] = self.rhs.to_json()["terms"]
        return out


def _gens(field: ScalarField):
    return tuple(generator(n, field) for n in ("e", "f", "k", "k_inv"))


def _l(field: ScalarField):
    return field.l if field.is_root else None


def _root_field(root: RootData, field: ScalarField | None) -> ScalarField:
    field = field or root.field
    if not field.is_root or field.l != root.l:
        raise ValueError(f"root data for l={root.l} does not match {field!r}")
    return field


def central_checks(name: str, x: AlgebraElement) -> list[Check]:
    """x commutes with e, f, k."""
    e, f, k, _ = _gens(x.field)
    l = _l(x.field)
    return [Check(f"{name} {g}-commutes", x * gen, gen * x, l) for g, gen in (("e", e), ("f", f), ("k", k))]


def anticommute_check(name: str, x: AlgebraElement, y: AlgebraElement) -> Check:
    return Check(name, x * y, -(y * x), _l(x.field))


def scasimir_checks(field: ScalarField) -> list[Check]:
    """S anticommutes with e and f, commutes with k, and S^2 + 2 = C."""
    e, f, k, _ = _gens(field)
    S = scasimir(field)
    l = _l(field)
    return [
        anticommute_check("S e-anticommutes", S, e),
        anticommute_check("S f-anticommutes", S, f),
        Check("S k-commutes", S * k, k * S, l),
        Check("S^2 + 2 = C", S * S + 2, casimir(field), l),
        *central_checks("C", casimir(field)),
    ]


# ---------------------------------------------------------------------------
# commutation of e with f^m


def comemf_sides(m: int, field: ScalarField) -> tuple[AlgebraElement, AlgebraElement]:
    """(q - q^-1)(f^m e + (-1)^{m-1} e f^m)  and  f^{m-1}(A k - B k^-1)."""
    if m < 1:
        raise ValueError("m >= 1")
    e, f, k, ki = _gens(field)
    qp = field.q_prime
    sign = 1 if m % 2 == 1 else -1
    lhs = ((f**m) * e + (e * (f**m)).scale(sign)).scale(field.q_minus_qinv)
    A = (qp ** (-m) - 1) / (qp ** (-1) - 1)
    B = (qp**m - 1) / (qp - 1)
    rhs = (f ** (m - 1)) * (k.scale(A) - ki.scale(B))
    return lhs, rhs


def comemf_mirror_sides(m: int, field: ScalarField) -> tuple[AlgebraElement, AlgebraElement]:
    """Image under (e, f, k) -> (-f, e, k^-1), written out:
    (q - q^-1)(e^m f + (-1)^{m-1} f e^m)  and  -e^{m-1}(A k^-1 - B k)."""
    if m < 1:
        raise ValueError("m >= 1")
    e, f, k, ki = _gens(field)
    qp = field.q_prime
    sign = 1 if m % 2 == 1 else -1
    lhs = ((e**m) * f + (f * (e**m)).scale(sign)).scale(field.q_minus_qinv)
    A = (qp ** (-m) - 1) / (qp ** (-1) - 1)
    B = (qp**m - 1) / (qp - 1)
    rhs = -((e ** (m - 1)) * (ki.scale(A) - k.scale(B)))
    return lhs, rhs


def comemf_checks(m_max: int, field: ScalarField) -> list[Check]:
    """The e-f^m relation and its e<->f mirror for m = 1..m_max."""
    out = []
    for m in range(1, m_max + 1):
        out.append(Check(f"comemf m={m}", *comemf_sides(m, field), _l(field)))
        out.append(Check(f"comemf mirror m={m}", *comemf_mirror_sides(m, field), _l(field)))
    return out


# ---------------------------------------------------------------------------
# Scasimir product formula


def scasm_sides(m: int, field: ScalarField) -> tuple[AlgebraElement, AlgebraElement]:
    """prod_{n<m} (S - q'^n q^{1/2} k + q'^{-n} q^{-1/2} k^-1)  and  eps(m)(-eta)^m f^m e^m."""
    if m < 1:
        raise ValueError("m >= 1")
    _, _, k, ki = _gens(field)
    S = scasimir(field)
    qp, sh = field.q_prime, field.q_half
    lhs = identity(field)
    for n in range(m):
        lhs = lhs * (S - k.scale(qp**n * sh) + ki.scale(qp ** (-n) / sh))
    rhs = AlgebraElement.monomial(field, m, m, 0, (-field.eta) ** m * epsilon(m))
    return lhs, rhs


def scasm_checks(m_max: int, field: ScalarField) -> list[Check]:
    return [Check(f"scasm m={m}", *scasm_sides(m, field), _l(field)) for m in range(1, m_max + 1)]


def verify_scasimir_product(m: int, field: ScalarField) -> bool:
    lhs, rhs = scasm_sides(m, field)
    return lhs == rhs


# ---------------------------------------------------------------------------
# E = e^L, F = f^L


def build_EF(field: ScalarField, root: RootData) -> tuple[AlgebraElement, AlgebraElement]:
    if not field.is_root:
        raise ValueError("E and F are central only at a root of unity")
    field = _root_field(root, field)
    return AlgebraElement.monomial(field, 0, root.L, 0), AlgebraElement.monomial(field, root.L, 0, 0)


def ef_checks(root: RootData, field: ScalarField | None = None) -> list[Check]:
    field = _root_field(root, field)
    E, F = build_EF(field, root)
    e, f, _, _ = _gens(field)
    out = central_checks("E", E) + central_checks("F", F)
    out.append(Check("f^L e - e f^L = 0", F * e - e * F, pbw.zero(field), root.l))
    return out


def verify_EF_central(root: RootData, field: ScalarField | None = None) -> bool:
    return all(c.ok for c in ef_checks(root, field))


# ---------------------------------------------------------------------------
# l twice odd: anticommuting half powers


def half_power_checks(root: RootData, field: ScalarField | None = None) -> list[Check]:
    if not root.twice_odd:
        raise PreconditionError(f"l={root.l} is not twice an odd integer")
    field = _root_field(root, field)
    e, f, k, ki = _gens(field)
    S = scasimir(field)
    lp = root.l_prime
    eh, fh = e**lp, f**lp
    out = []
    for label, x in (("e", eh), ("f", fh)):
        for oname, other in (("k", k), ("k^-1", ki), ("S", S)):
            out.append(anticommute_check(f"{label}^l' anticommutes with {oname}", x, other))
    out.append(anticommute_check("e^l' anticommutes with f", eh, f))
    out.append(anticommute_check("f^l' anticommutes with e", fh, e))
    out.append(anticommute_check("e^l' anticommutes with f^l'", eh, fh))
    half = root.L // 2
    for sgn in (1, -1):
        x = AlgebraElement.monomial(field, 0, half, 0) * AlgebraElement.monomial(field, half, 0, sgn * half)
        tag = "" if sgn > 0 else "-"
        out += central_checks(f"e^(L/2) f^(L/2) k^({tag}L/2)", x)
    return out


def verify_half_powers(root: RootData, field: ScalarField | None = None) -> bool:
    return all(c.ok for c in half_power_checks(root, field))


# ---------------------------------------------------------------------------
# relations in the centre


def srel_sides(root: RootData, field: ScalarField | None = None):
    """P_{l'}(S)  and  q^{l'/2} k^{l'} + (-1)^{l'} q^{-l'/2} k^{-l'} + eps(l')(-eta)^{l'} f^{l'} e^{l'}."""
    field = _root_field(root, field)
    lp = root.l_prime
    lhs = eval_poly_at_element(cheb_p(lp), scasimir(field))
    rhs = AlgebraElement(
        field,
        {
            (0, 0, lp): field.q_half_power(lp),
            (0, 0, -lp): field.q_half_power(-lp) * (-1) ** lp,
        },
    ) + AlgebraElement.monomial(field, lp, lp, 0, (-field.eta) ** lp * epsilon(lp))
    return lhs, rhs


def srel_checks(root: RootData, field: ScalarField | None = None) -> list[Check]:
    return [Check("srel", *srel_sides(root, field), root.l)]


def verify_srel(root: RootData, field: ScalarField | None = None) -> bool:
    return all(c.ok for c in srel_checks(root, field))


def even_relation_sides(root: RootData, field: ScalarField | None = None):
    """(-1)^{L/2} Q_{L/2}(C)  and  -k^L - k^-L + eta^L f^L e^L."""
    if root.twice_odd:
        raise PreconditionError(f"l={root.l} is twice odd; use the twice-odd relations")
    field = _root_field(root, field)
    L = root.L
    lhs = eval_poly_at_element(cheb_q(L // 2), casimir(field)).scale((-1) ** (L // 2))
    rhs = AlgebraElement(field, {(0, 0, L): -1, (0, 0, -L): -1, (L, L, 0): field.eta**L})
    return lhs, rhs


def even_relation_checks(root: RootData, field: ScalarField | None = None) -> list[Check]:
    return [Check("even relation", *even_relation_sides(root, field), root.l)]


def verify_centre_relation_even(root: RootData, field: ScalarField | None = None) -> bool:
    return all(c.ok for c in even_relation_checks(root, field))


def twice_odd_relation_sides(root: RootData, field: ScalarField | None = None) -> dict:
    if not root.twice_odd:
        raise PreconditionError(f"l={root.l} is not twice an odd integer")
    field = _root_field(root, field)
    L = root.L
    h = L // 2
    S, C = scasimir(field), casimir(field)
    RC = eval_poly_at_element(cheb_r((L - 2) // 4), C)
    QC = eval_poly_at_element(cheb_q(h), C)
    qL4 = field.q_half_power(h)  # q^{L/4}
    eta = field.eta
    sign = (-1) ** ((L + 2) // 4)
    khalf = AlgebraElement.monomial(field, 0, 0, h)
    khalf_sum = AlgebraElement(field, {(0, 0, h): 1, (0, 0, -h): 1})
    fe_half = AlgebraElement.monomial(field, h, h, 0)
    feL = AlgebraElement.monomial(field, L, L, 0)
    kL = AlgebraElement(field, {(0, 0, L): 1, (0, 0, -L): 1})

    rel2 = (
        S * khalf * RC,
        AlgebraElement(field, {(0, 0, L): qL4, ONE: -qL4.inverse()}) + (fe_half * khalf).scale(sign * eta**h),
    )
    rel3 = (
        QC,
        -kL + (fe_half * khalf_sum).scale(2 * sign * qL4 * eta**h) - feL.scale(eta**L),
    )
    rel4 = (
        QC,
        kL + 4 + (S * khalf_sum * RC).scale(2 * qL4) - feL.scale(eta**L),
    )
    return {"rel2": rel2, "rel3": rel3, "rel4": rel4}



def twice_odd_relation_checks(root: RootData, field: ScalarField | None = None) -> list[Check]:
    return [Check(name, lhs, rhs, root.l) for name, (lhs, rhs) in twice_odd_relation_sides(root, field).items()]


def verify_centre_relations_twice_odd(root: RootData, field: ScalarField | None = None) -> dict[str, bool]:
    return {c.relation: c.ok for c in twice_odd_relation_checks(root, field)}


# ---------------------------------------------------------------------------
# catalog


@dataclass
class CentreCatalog:
    root: RootData
    elements: dict[str, AlgebraElement]
    flags: dict[str, bool] = dc_field(default_factory=dict)
    central: dict[str, bool] = dc_field(default_factory=dict)


def centre_catalog(root: RootData, field: ScalarField | None = None) -> CentreCatalog:
    field = _root_field(root, field)
    l, L = root.l, root.L
    E, F = build_EF(field, root)
    elements = {
        "k^l": AlgebraElement.monomial(field, 0, 0, l),
        "k^-l": AlgebraElement.monomial(field, 0, 0, -l),
        "C": casimir(field),
        "E": E,
        "F": F,
    }
    if l % 2 == 0:
        elements["k^(l/2) S"] = AlgebraElement.monomial(field, 0, 0, l // 2) * scasimir(field)
    if root.twice_odd:
        elements["e^(L/2) f^(L/2) k^(L/2)"] = AlgebraElement.monomial(field, 0, L // 2, 0) * AlgebraElement.monomial(
            field, L // 2, 0, L // 2
        )
    flags = {
        "l_even": l % 2 == 0,
        "twice_odd": root.twice_odd,
        "even_relation": not root.twice_odd,
        "twice_odd_relations": root.twice_odd,
    }
    central = {name: pbw.is_central(x) for name, x in elements.items()}
    return CentreCatalog(root=root, elements=elements, flags=flags, central=central)


def catalog_checks(root: RootData, field: ScalarField | None = None) -> list[Check]:
    cat = centre_catalog(root, field)
    out = []
    for name, x in cat.elements.items():
        out += central_checks(name, x)
    return out


def centre_checks(root: RootData, field: ScalarField | None = None) -> list[Check]:
    """Everything the centre description asserts for this l."""
    out = ef_checks(root, field) + catalog_checks(root, field) + srel_checks(root, field)
    if root.twice_odd:
        out += half_power_checks(root, field) + twice_odd_relation_checks(root, field)
    else:
        out += even_relation_checks(root, field)
    return out
