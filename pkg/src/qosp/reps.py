"""Finite-dimensional representations at q a primitive l-th root of unity.

Basis convention: |m>, m = 0..d-1, is column m; the shift P sends column m
to row m+1 (mod d in the periodic case). Parameters live in Q(z_4l).

Families:
  mplus(lam, phi, sigma)   dim L   k = lam Q, f = phi P,
                                   e = (eta phi)^-1 P^-1 D
  mminus(lam, eps, sigma)  dim L   k = lam Q, e = eps P^-1,
                                   f = (eta eps)^-1 D P
  mplus-small/mminus-small dim l   same with sigma = 0 (l odd)
  nilpotent(d, lam)        dim d   k = lam Q, f = P, e = eta^-1 P' D
with D = q^{1/2} lam Q - q^{-1/2} lam^-1 Q^-1 - sigma U.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Any

from . import pbw
from .linalg import NOT_SCALAR, EchelonSpan, ExactMatrix, nullspace
from .pbw import AlgebraElement
from .rootdata import RootData, compute_root_data
from .scalars import ScalarField, root_field

FAMILIES = ("mplus", "mminus", "mplus-small", "mminus-small", "nilpotent")


class QuantisationError(ValueError):
    """lambda violates (q'^d - 1)(lambda^2 - q'^{d-1}) = 0."""


@dataclass(frozen=True)
class RepSpec:
    family: str
    l: int
    lam: Any
    phi: Any = None
    eps: Any = None
    sigma: Any = None
    d: int | None = None
    note: str | None = None

    def to_json(self) -> dict:
        out = {"family": self.family, "l": self.l}
        for name, v in (("lambda", self.lam), ("phi", self.phi), ("eps", self.eps), ("sigma", self.sigma)):
            if v is not None:
                out[name] = str(v)
        if self.d is not None:
            out["d"] = self.d
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class Representation:
    spec: RepSpec
    field: ScalarField
    e: ExactMatrix
    f: ExactMatrix
    k: ExactMatrix
    kinv: ExactMatrix

    @property
    def dim(self) -> int:
        return self.k.dim

    @property
    def root(self) -> RootData:
        return compute_root_data(self.field.l)

    def generators(self) -> dict[str, ExactMatrix]:
        return {"e": self.e, "f": self.f, "k": self.k, "kinv": self.kinv}

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "field": self.field.to_json(),
            "dim": self.dim,
            "matrices": {name: m.to_json() for name, m in self.generators().items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Representation":
        from .exprparse import parse_scalar

        fj = data["field"]
        if fj.get("mode") != "root":
            raise ValueError("representations live over a root-of-unity field")
        field = root_field(int(fj["l"]))
        sj = data["spec"]

        def sc(name):
            return parse_scalar(sj[name], field) if name in sj else None

        spec = RepSpec(
            family=sj["family"],
            l=int(sj["l"]),
            lam=sc("lambda"),
            phi=sc("phi"),
            eps=sc("eps"),
            sigma=sc("sigma"),
            d=sj.get("d"),
            note=sj.get("note"),
        )
        mats = {
            name: ExactMatrix(field, [[parse_scalar(x, field) for x in row] for row in data["matrices"][name]])
            for name in ("e", "f", "k", "kinv")
        }
        return cls(spec=spec, field=field, **mats)


# ---------------------------------------------------------------------------
# building blocks


def build_qup(field: ScalarField, dim: int, periodic: bool):
    """(Q, U, P, P') on a dim-dimensional space."""
    if dim < 1:
        raise ValueError("dim >= 1")
    Q = ExactMatrix.diag(field, [field.q_power(-m) for m in range(dim)])
    U = ExactMatrix.diag(field, [(-1) ** m for m in range(dim)])
    if periodic:
        P = ExactMatrix.from_entries(field, dim, {((m + 1) % dim, m): 1 for m in range(dim)})
        Pp = ExactMatrix.from_entries(field, dim, {(m, (m + 1) % dim): 1 for m in range(dim)})
    else:
        P = ExactMatrix.from_entries(field, dim, {(m + 1, m): 1 for m in range(dim - 1)})
        Pp = ExactMatrix.from_entries(field, dim, {(m - 1, m): 1 for m in range(1, dim)})
    return Q, U, P, Pp


def _d_matrix(field, lam, sigma, Q, U):
    """q^{1/2} lam Q - q^{-1/2} lam^-1 Q^-1 - sigma U (all diagonal)."""
    sh = field.q_half
    a = sh * lam
    b = sh.inverse() * lam.inverse()
    vals = [a * Q[m, m] - b * Q[m, m].inverse() - sigma * U[m, m] for m in range(Q.dim)]
    return ExactMatrix.diag(field, vals)


def _k_pair(field, lam, Q):
    k = Q.scale(lam)
    kinv = ExactMatrix.diag(field, [k[m, m].inverse() for m in range(k.dim)])
    return k, kinv


def _nonzero(field, name, v):
    v = field(v)
    if not v:
        raise ValueError(f"{name} must be nonzero")
    return v


def _periodic(l: int, lam, x, sigma, plus: bool, dim: int, family: str) -> Representation:
    field = root_field(l)
    lam = _nonzero(field, "lambda", lam)
    x = _nonzero(field, "phi" if plus else "eps", x)
    sigma = field(sigma)
    Q, U, P, Pinv = build_qup(field, dim, periodic=True)
    D = _d_matrix(field, lam, sigma, Q, U)
    k, kinv = _k_pair(field, lam, Q)
    c = (field.eta * x).inverse()
    if plus:
        f = P.scale(x)
        e = (Pinv * D).scale(c)
        spec = RepSpec(family, l, lam, phi=x, sigma=sigma)
    else:
        e = Pinv.scale(x)
        f = (D * P).scale(c)
        spec = RepSpec(family, l, lam, eps=x, sigma=sigma)
    return Representation(spec, field, e, f, k, kinv)


def build_m_plus(l: int, lam, phi, sigma) -> Representation:
    root = compute_root_data(l)
    return _periodic(l, lam, phi, sigma, True, root.L, "mplus")


def build_m_minus(l: int, lam, eps, sigma) -> Representation:
    root = compute_root_data(l)
    return _periodic(l, lam, eps, sigma, False, root.L, "mminus")


def build_m_small(l: int, lam, phi_or_eps, plus_or_minus: str) -> Representation:
    if l % 2 == 0:
        raise ValueError("the l-dimensional periodic modules need l odd")
    if plus_or_minus not in ("plus", "minus"):
        raise ValueError("plus_or_minus is 'plus' or 'minus'")
    plus = plus_or_minus == "plus"
    return _periodic(l, lam, phi_or_eps, 0, plus, l, "mplus-small" if plus else "mminus-small")


def quantisation_holds(field: ScalarField, d: int, lam) -> bool:
    qp = field.q_prime
    return (qp**d - 1) * (lam * lam - qp ** (d - 1)) == 0


def nilpotent_sigma(field: ScalarField, lam):
    sh = field.q_half
    return sh * lam - sh.inverse() * lam.inverse()


def build_nilpotent(l: int, d: int, lam) -> Representation:
    if d < 1:
        raise ValueError("d >= 1")
    field = root_field(l)
    lam = _nonzero(field, "lambda", lam)
    if not quantisation_holds(field, d, lam):
        raise QuantisationError(f"lambda={lam} violates the quantisation condition for d={d}")
    sigma = nilpotent_sigma(field, lam)
    Q, U, P, Pp = build_qup(field, d, periodic=False)
    D = _d_matrix(field, lam, sigma, Q, U)
    k, kinv = _k_pair(field, lam, Q)
    e = (Pp * D).scale(field.eta.inverse())
    return Representation(RepSpec("nilpotent", l, lam, sigma=sigma, d=d), field, e, P, k, kinv)


def build(family: str, l: int, lam=None, phi=None, eps=None, sigma=None, d=None) -> Representation:
    """Dispatch on the family name used by the CLI."""
    field = root_field(l)
    lam = field.one if lam is None else lam
    if family == "mplus":
        return build_m_plus(l, lam, field.one if phi is None else phi, field.zero if sigma is None else sigma)
    if family == "mminus":
        return build_m_minus(l, lam, field.one if eps is None else eps, field.zero if sigma is None else sigma)
    if family == "mplus-small":
        return build_m_small(l, lam, field.one if phi is None else phi, "plus")
    if family == "mminus-small":
        return build_m_small(l, lam, field.one if eps is None else eps, "minus")
    if family == "nilpotent":
        if d is None:
            raise ValueError("nilpotent modules need d")
        return build_nilpotent(l, d, lam)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# checks


def relation_report(rep: Representation) -> dict[str, bool]:
    e, f, k, ki = rep.e, rep.f, rep.k, rep.kinv
    field = rep.field
    one = ExactMatrix.identity(field, rep.dim)
    return {
        "k e k^-1 = q e": k * e * ki == e.scale(field.q),
        "k f k^-1 = q^-1 f": k * f * ki == f.scale(field.q_inv),
        "e f + f e = (k - k^-1)/(q - q^-1)": e * f + f * e == (k - ki).scale(field.q_minus_qinv.inverse()),
        "k k^-1 = 1": k * ki == one,
        "k^-1 k = 1": ki * k == one,
    }


def verify_relations(rep: Representation) -> bool:
    return all(relation_report(rep).values())


class _PowerCache:
    def __init__(self, rep: Representation):
        self.rep = rep
        self.cache: dict = {}

    def get(self, name: str, n: int) -> ExactMatrix:
        key = (name, n)
        m = self.cache.get(key)
        if m is None:
            if n == 0:
                m = ExactMatrix.identity(self.rep.field, self.rep.dim)
            else:
                m = self.get(name, n - 1) * getattr(self.rep, name)
            self.cache[key] = m
        return m


def evaluate(x: AlgebraElement, rep: Representation, _cache: _PowerCache | None = None) -> ExactMatrix:
    """Matrix of x: sum of coeff * f^a e^b k^c."""
    if x.field != rep.field:
        raise ValueError(f"element over {x.field!r}, representation over {rep.field!r}")
    cache = _cache or _PowerCache(rep)
    out = ExactMatrix.zeros(rep.field, rep.dim)
    for (a, b, c), v in x.sorted_terms():
        kpart = cache.get("k", c) if c >= 0 else cache.get("kinv", -c)
        out = out + (cache.get("f", a) * cache.get("e", b) * kpart).scale(v)
    return out


def scalar_of(mat: ExactMatrix):
    """c if mat == c * identity, else NOT_SCALAR."""
    return mat.scalar_value()


def central_character(rep: Representation) -> dict[str, Any]:
    root = rep.root
    field = rep.field
    cache = _PowerCache(rep)
    elements = {
        "k^l": AlgebraElement.monomial(field, 0, 0, root.l),
        "k^L": AlgebraElement.monomial(field, 0, 0, root.L),
        "C": pbw.casimir(field),
        "E": AlgebraElement.monomial(field, 0, root.L, 0),
        "F": AlgebraElement.monomial(field, root.L, 0, 0),
    }
    if root.l % 2 == 0:
        elements["k^(l/2) S"] = AlgebraElement.monomial(field, 0, 0, root.l // 2) * pbw.scasimir(field)
    return {name: scalar_of(evaluate(x, rep, cache)) for name, x in elements.items()}


def character_json(ch: dict) -> dict:
    return {name: (None if v is NOT_SCALAR else str(v)) for name, v in ch.items()}


def irreducibility_criterion_nilpotent(l: int, d: int, lam) -> bool:
    """prod_{n=1}^{d-1} (q'^n - 1)(q^{1/2-d} lam + q^{d-1/2} lam^-1 q'^-n) != 0."""
    field = root_field(l)
    lam = _nonzero(field, "lambda", lam)
    if not quantisation_holds(field, d, lam):
        raise QuantisationError(f"lambda={lam} violates the quantisation condition for d={d}")
    qp = field.q_prime
    a = field.q_half_power(1 - 2 * d) * lam
    b = field.q_half_power(2 * d - 1) * lam.inverse()
    prod = field.one
    for n in range(1, d):
        prod = prod * (qp**n - 1) * (a + b * qp ** (-n))
    return bool(prod)


def algebra_span_dimension(mats: list[ExactMatrix], dim: int) -> int:
    """Dimension of the unital algebra generated by mats (closure under left products)."""
    field = mats[0].field
    span = EchelonSpan()
    one = ExactMatrix.identity(field, dim)
    span.add(one.entries())
    queue = [one]
    target = dim * dim
    while queue and span.dim < target:
        m = queue.pop()
        for g in mats:
            prod = g * m
            if span.add(prod.entries()):
                queue.append(prod)
                if span.dim == target:
                    break
    return span.dim


def is_irreducible_burnside(rep: Representation) -> bool:
    if rep.dim == 1:
        return True
    return algebra_span_dimension([rep.k, rep.kinv, rep.e, rep.f], rep.dim) == rep.dim**2


# ---------------------------------------------------------------------------
# equivalences


def intertwines(T: ExactMatrix, repA: Representation, repB: Representation) -> bool:
    """T rho_A(g) = rho_B(g) T for every generator."""
    return all(T * repA.generators()[g] == repB.generators()[g] * T for g in ("e", "f", "k", "kinv"))


def intertwiner_space(repA: Representation, repB: Representation) -> list[ExactMatrix]:
    """Basis of {T : T rho_A(g) = rho_B(g) T, g = e, f, k}."""
    d = repA.dim
    field = repA.field
    eqs = []
    for g in ("e", "f", "k"):
        A = repA.generators()[g]
        B = repB.generators()[g]
        a_cols = [[(m, A[m, j]) for m in range(d) if A[m, j]] for j in range(d)]
        b_rows = [[(m, B[i, m]) for m in range(d) if B[i, m]] for i in range(d)]
        for i in range(d):
            for j in range(d):
                eq: dict = {}
                for m, v in a_cols[j]:
                    idx = i * d + m
                    eq[idx] = eq.get(idx, field.zero) + v
                for m, v in b_rows[i]:
                    idx = m * d + j
                    eq[idx] = eq.get(idx, field.zero) - v
                eq = {kk: vv for kk, vv in eq.items() if vv}
                if eq:
                    eqs.append(eq)
    basis = nullspace(eqs, d * d, field)
    return [ExactMatrix._raw(field, [vec[i * d:(i + 1) * d] for i in range(d)]) for vec in basis]


def intertwiner(repA: Representation, repB: Representation, seed: int = 0) -> ExactMatrix | None:
    """An invertible T with T rho_A = rho_B T, or None."""
    if repA.dim != repB.dim or repA.field != repB.field:
        return None
    if repA.spec.family == "mplus" and repB.spec.family == "mminus":
        T = explicit_plus_to_minus(repA, repB.spec.eps)
        if T is not None and intertwines(T, repA, repB):
            return T
    basis = intertwiner_space(repA, repB)
    if not basis:
        return None
    candidates = list(basis)
    if len(basis) > 1:
        rng = random.Random(seed)
        total = basis[0]
        for b in basis[1:]:
            total = total + b
        candidates.append(total)
        for _ in range(8):
            acc = ExactMatrix.zeros(repA.field, repA.dim)
            for b in basis:
                acc = acc + b.scale(rng.randint(-50, 50))
            candidates.append(acc)
    for T in candidates:
        if T.is_invertible():
            return T
    return None


def eps_bar_power(rep: Representation):
    """The scalar by which e^L acts (eps-bar^L); NOT_SCALAR if it is not scalar."""
    return scalar_of(rep.e ** rep.root.L)


def explicit_plus_to_minus(rep_plus: Representation, eps) -> ExactMatrix | None:
    """Basis change M_+(lam, phi, sigma) -> M_-(lam, eps, sigma).

    New basis b_m = eps^m e^{-m} |0>; requires e invertible and eps^L equal to
    the value of e^L. Returns T with T rho_+ = rho_- T, or None.
    """
    field = rep_plus.field
    eps = field(eps)
    L = rep_plus.root.L
    if rep_plus.dim != L or eps_bar_power(rep_plus) != eps**L:
        return None
    if not rep_plus.e.is_invertible():
        return None
    einv = rep_plus.e.inverse()
    cols = []
    v = [field.one] + [field.zero] * (L - 1)
    for m in range(L):
        cols.append(v)
        v = [x * eps for x in einv.apply(v)]
    B = ExactMatrix._raw(field, [[cols[j][i] for j in range(L)] for i in range(L)])
    return B.inverse()


def equivalence_moves(rep: Representation) -> list[tuple[str, Representation, ExactMatrix]]:
    """The three conjugations of M_+(lam, phi, sigma):
    Q -> M_+(lam, q^-1 phi, sigma), P -> M_+(q lam, phi, -sigma), U -> M_+(lam, -phi, sigma)."""
    if rep.spec.family not in ("mplus", "mplus-small"):
        raise ValueError("equivalence moves are listed for f-periodic modules")
    s = rep.spec
    field = rep.field
    Q, U, P, _ = build_qup(field, rep.dim, periodic=True)

    def mk(lam, phi, sigma):
        if s.family == "mplus":
            return build_m_plus(s.l, lam, phi, sigma)
        return build_m_small(s.l, lam, phi, "plus")

    moves = [
        ("Q", mk(s.lam, s.phi * field.q_inv, s.sigma), Q),
        ("P", mk(s.lam * field.q, s.phi, -s.sigma), P),
    ]
    if s.family == "mplus":
        moves.append(("U", mk(s.lam, -s.phi, s.sigma), U))
    return moves


# ---------------------------------------------------------------------------
# the l odd, sigma = 0 splitting


def _restrict(rep: Representation, basis: list[list], spec: RepSpec) -> Representation:
    """Action on span(basis); basis vectors are the nullspace vectors (identity on free coordinates)."""
    field = rep.field
    n = len(basis)
    # coordinates are read off at each basis vector's leading free coordinate
    lead = [next(i for i, x in enumerate(v) if x == field.one and all(not w[i] for w in basis if w is not v)) for v in basis]
    mats = {}
    for name, G in rep.generators().items():
        cols = []
        for v in basis:
            gv = G.apply(v)
            coords = [gv[i] for i in lead]
            recon = [sum((c * w[t] for c, w in zip(coords, basis)), field.zero) for t in range(rep.dim)]
            if recon != gv:
                raise ArithmeticError("subspace is not invariant")
            cols.append(coords)
        mats[name] = ExactMatrix._raw(field, [[cols[j][i] for j in range(n)] for i in range(n)])
    return Representation(spec, field, mats["e"], mats["f"], mats["k"], mats["kinv"])


def split_sigma_zero(rep: Representation) -> tuple[Representation, Representation]:
    """Split an ungraded-reducible periodic module (l odd, sigma = 0) into the
    two eigenspaces of f^l (M_+) or e^l (M_-)."""
    s = rep.spec
    l = s.l
    if l % 2 == 0 or s.family not in ("mplus", "mminus") or s.sigma != 0:
        raise ValueError("splitting needs l odd, sigma = 0 and a dimension-L periodic module")
    field = rep.field
    plus = s.family == "mplus"
    G = (rep.f if plus else rep.e) ** l
    base = (s.phi if plus else s.eps) ** l
    pieces = []
    for sign in (1, -1):
        val = base * sign
        M = G - ExactMatrix.identity(field, rep.dim).scale(val)
        eqs = [{j: v for j, v in enumerate(row) if v} for row in M.rows]
        basis = nullspace(eqs, rep.dim, field)
        note = f"{'f' if plus else 'e'}^l eigenspace, eigenvalue {val}"
        pieces.append(_restrict(rep, basis, replace(s, note=note, d=len(basis))))
    return pieces[0], pieces[1]


def matching_small_module(piece: Representation, parent: RepSpec) -> tuple[Representation, ExactMatrix] | None:
    """A small-family module intertwining with a split piece, with the intertwiner."""
    field = piece.field
    plus = parent.family == "mplus"
    x = parent.phi if plus else parent.eps
    for cand in (x, -x):
        small = build_m_small(parent.l, parent.lam, cand, "plus" if plus else "minus")
        T = intertwiner(piece, small)
        if T is not None:
            return small, T
    return None


# ---------------------------------------------------------------------------
# classification


def nilpotent_lambdas(l: int, d: int) -> tuple[list, bool]:
    """Solutions of the quantisation condition: (explicit list, free?)."""
    field = root_field(l)
    qp = field.q_prime
    if qp**d == field.one:
        return free_lambda_witnesses(l), True
    # q' = z^(2l+4), so z^((l+2)(d-1)) squares to q'^(d-1)
    r = field.root_power((l + 2) * (d - 1))
    assert r * r == qp ** (d - 1)
    return [r, -r], False


def free_lambda_witnesses(l: int) -> list:
    """lambda values for d = l': two with q' lambda^2 trivial or generic, two with
    q' lambda^2 a nontrivial power of q'."""
    field = root_field(l)
    z = field.root_power(1)
    return [
        field.root_power(-(l + 2)),  # q' lam^2 = 1
        field(2),
        field.root_power(-2 * (l + 2)),  # q' lam^2 = q'^-1
        field.one,  # q' lam^2 = q'
        z,
    ]


def classify(l: int) -> dict:
    root = compute_root_data(l)
    field = root.field
    nil = []
    for d in range(1, root.l_prime + 1):
        lams, free = nilpotent_lambdas(l, d)
        for lam in lams:
            rep = build_nilpotent(l, d, lam)
            crit = irreducibility_criterion_nilpotent(l, d, lam)
            burn = is_irreducible_burnside(rep)
            nil.append(
                {
                    "d": d,
                    "lambda": str(lam),
                    "lambda_free": free,
                    "sigma": str(rep.spec.sigma),
                    "relations": verify_relations(rep),
                    "criterion_irreducible": crit,
                    "burnside_irreducible": burn,
                    "agree": crit == burn,
                }
            )
    periodic = []
    witnesses = [("mplus", dict(phi=field.one, sigma=field.one)), ("mminus", dict(eps=field.one, sigma=field.one))]
    if l % 2 == 1:
        witnesses += [("mplus-small", dict(phi=field.one)), ("mminus-small", dict(eps=field.one))]
    for fam, kw in witnesses:
        rep = build(fam, l, lam=field.one, **kw)
        periodic.append(
            {
                "family": fam,
                "dim": rep.dim,
                "witness": rep.spec.to_json(),
                "relations": verify_relations(rep),
                "burnside_irreducible": is_irreducible_burnside(rep),
            }
        )
    return {
        "l": l,
        "root": root.to_json(),
        "periodic_families": {
            "mplus": {
                "dim": root.L,
                "parameters": "lambda != 0, phi != 0, sigma",
                "small_variant": "dim l with sigma = 0 when l is odd" if l % 2 else None,
                "equivalences": [
                    "M+(lambda, phi, sigma) ~ M+(lambda, q^-1 phi, sigma) via Q",
                    "M+(lambda, phi, sigma) ~ M+(q lambda, phi, -sigma) via P",
                    "M+(lambda, phi, sigma) ~ M+(lambda, -phi, sigma) via U",
                ],
            },
            "mminus": {
                "dim": root.L,
                "parameters": "lambda != 0, eps != 0, sigma",
                "small_variant": "dim l with sigma = 0 when l is odd" if l % 2 else None,
                "equivalences": ["M+(lambda, phi, sigma) ~ M-(lambda, eps, sigma) when eps^L = value of e^L"],
            },
        },
        "periodic_witnesses": periodic,
        "nilpotent": nil,
    }


def classification_ok(catalog: dict) -> bool:
    return all(x["relations"] and x["agree"] for x in catalog["nilpotent"]) and all(
        x["relations"] for x in catalog["periodic_witnesses"]
    )
