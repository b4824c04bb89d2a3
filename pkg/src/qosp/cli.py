"""Command-line entry point: ``qosp <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
All output is JSON with sorted keys, so identical invocations print
identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import __version__, centre, chebychev, reps
from .exprparse import ParseError, parse_element, parse_scalar
from .linalg import NOT_SCALAR
from .pbw import scasimir
from .rootdata import compute_root_data
from .scalars import ScalarField, generic_field, root_field

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    mode: str = "generic"
    l: int | None = None
    output: str = "json"
    seed: int = 0
    options: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.mode == "root" and (self.l is None or self.l < 3):
            raise UsageError("--l must be at least 3")

    @property
    def field(self) -> ScalarField:
        return root_field(self.l) if self.mode == "root" else generic_field()


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common(parser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--output", choices=("json", "pretty"), default=default if suppress else "json")
    parser.add_argument("--seed", type=int, default=default if suppress else 0)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qosp", description="Exact computations in U_q(osp(1|2)).")
    p.add_argument("--version", action="version", version=f"qosp {__version__}")
    _common(p, suppress=False)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, **kw):
        sp = sub.add_parser(name, **kw)
        _common(sp, suppress=True)
        return sp

    sp = add("rootdata", help="l', L, N for q a primitive l-th root of unity")
    sp.add_argument("--l", type=int, required=True)

    sp = add("nf", help="PBW normal form of an expression")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--l", type=int)
    mode.add_argument("--generic", action="store_true")
    sp.add_argument("expr")

    sp = add("cheb", help="coefficients of P_m, Q_m or R_m")
    sp.add_argument("--family", choices=("p", "q", "r"), required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = add("verify", help="check relations")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--l", type=int)
    mode.add_argument("--generic", action="store_true")
    sp.add_argument("--what", choices=("scasm", "srel", "centre", "all"), default="all")
    sp.add_argument("--max-m", type=int, default=None)

    sp = add("rep", help="build or check a representation")
    rsub = sp.add_subparsers(dest="rep_command", parser_class=_Parser)
    rsub.required = True
    b = rsub.add_parser("build")
    _common(b, suppress=True)
    b.add_argument("--l", type=int, required=True)
    b.add_argument("--family", choices=reps.FAMILIES, required=True)
    for name in ("lambda", "phi", "eps", "sigma"):
        b.add_argument(f"--{name}", default=None)
    b.add_argument("--d", type=int, default=None)
    b.add_argument("--out", default=None, help="write the JSON here instead of stdout")
    c = rsub.add_parser("check")
    _common(c, suppress=True)
    c.add_argument("file")

    sp = add("classify", help="catalog of irreducible modules")
    sp.add_argument("--l", type=int, required=True)

    sp = add("eval", help="matrix of an expression in a stored representation")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--rep", required=True)
    sp.add_argument("expr")
    return p


def parse_config(argv) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    if command == "rep":
        command = f"rep {ns.pop('rep_command')}"
    l = ns.pop("l", None)
    generic = ns.pop("generic", False)
    output = ns.pop("output")
    seed = ns.pop("seed")
    mode = "root" if l is not None and not generic else "generic"
    return RunConfig(command=command, mode=mode, l=l, output=output, seed=seed, options=ns)


# -- commands ------------------------------------------------------------------


def _rootdata(cfg: RunConfig):
    return compute_root_data(cfg.l).to_json(), True


def _nf(cfg: RunConfig):
    return parse_element(cfg.options["expr"], cfg.field).to_json(), True


def _cheb(cfg: RunConfig):
    m = cfg.options["m"]
    if m < 0:
        raise UsageError("--m must be non-negative")
    return [int(c) for c in chebychev.FAMILIES[cfg.options["family"]](m).coeffs], True


def _verify_checks(cfg: RunConfig) -> list[centre.Check]:
    what = cfg.options["what"]
    field = cfg.field
    max_m = cfg.options["max_m"]
    if cfg.mode == "generic":
        if what in ("srel", "centre"):
            raise UsageError(f"--what {what} needs --l")
        checks = centre.scasm_checks(max_m or 6, field)
        if what == "all":
            checks = centre.scasimir_checks(field) + centre.comemf_checks(max_m or 10, field) + checks
        return checks
    root = compute_root_data(cfg.l)
    m_max = max_m or root.L
    if what == "scasm":
        return centre.scasm_checks(m_max, field)
    if what == "srel":
        return centre.srel_checks(root, field)
    if what == "centre":
        return centre.centre_checks(root, field)
    return (
        centre.scasimir_checks(field)
        + centre.comemf_checks(m_max, field)
        + centre.scasm_checks(m_max, field)
        + centre.centre_checks(root, field)
    )


def _verify(cfg: RunConfig):
    results = [c.report() for c in _verify_checks(cfg)]
    ok = all(r["pass"] for r in results)
    return {"field": cfg.field.to_json(), "pass": ok, "results": results}, ok


def _rep_build(cfg: RunConfig):
    opts = cfg.options
    field = cfg.field
    scalars = {k: (parse_scalar(opts[k], field) if opts[k] is not None else None) for k in ("lambda", "phi", "eps", "sigma")}
    rep = reps.build(opts["family"], cfg.l, lam=scalars["lambda"], phi=scalars["phi"], eps=scalars["eps"], sigma=scalars["sigma"], d=opts["d"])
    data = rep.to_json()
    if opts["out"]:
        Path(opts["out"]).write_text(_dump(data, cfg.output) + "\n")
        return {"written": opts["out"], "dim": rep.dim}, True
    return data, True


def _load_rep(path: str) -> reps.Representation:
    try:
        data = json.loads(Path(path).read_text())
        return reps.Representation.from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read representation from {path}: {exc}") from exc


def rep_report(rep: reps.Representation) -> dict:
    rel = reps.relation_report(rep)
    out = {
        "spec": rep.spec.to_json(),
        "dim": rep.dim,
        "relations": rel,
        "relations_pass": all(rel.values()),
        "burnside_irreducible": reps.is_irreducible_burnside(rep),
        "central_character": reps.character_json(reps.central_character(rep)),
    }
    s = rep.spec
    if s.family == "nilpotent":
        out["criterion_irreducible"] = reps.irreducibility_criterion_nilpotent(s.l, s.d, s.lam)
    else:
        _, U, _, _ = reps.build_qup(rep.field, rep.dim, periodic=True)
        out["scasimir_is_sigma_U"] = reps.evaluate(scasimir(rep.field), rep) == U.scale(s.sigma)
    if s.family == "mplus":
        ebar = reps.eps_bar_power(rep)
        out["e^L_value"] = None if ebar is NOT_SCALAR else str(ebar)
    return out


def _rep_check(cfg: RunConfig):
    report = rep_report(_load_rep(cfg.options["file"]))
    ok = report["relations_pass"] and report.get("scasimir_is_sigma_U", True)
    return report, ok


def _classify(cfg: RunConfig):
    catalog = reps.classify(cfg.l)
    return catalog, reps.classification_ok(catalog)


def _eval(cfg: RunConfig):
    rep = _load_rep(cfg.options["rep"])
    if rep.field != cfg.field:
        raise UsageError(f"representation is over l={rep.field.l}, not l={cfg.l}")
    mat = reps.evaluate(parse_element(cfg.options["expr"], cfg.field), rep)
    sv = reps.scalar_of(mat)
    return {"dim": rep.dim, "matrix": mat.to_json(), "scalar": None if sv is NOT_SCALAR else str(sv)}, True


COMMANDS = {
    "rootdata": _rootdata,
    "nf": _nf,
    "cheb": _cheb,
    "verify": _verify,
    "rep build": _rep_build,
    "rep check": _rep_check,
    "classify": _classify,
    "eval": _eval,
}


def _dump(data, output: str) -> str:
    if output == "pretty":
        return json.dumps(data, sort_keys=True, indent=2)
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
        data, ok = COMMANDS[cfg.command](cfg)
    except SystemExit as exc:  # --help / --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    except (UsageError, ParseError, reps.QuantisationError, centre.PreconditionError, ValueError, ZeroDivisionError) as exc:
        print(f"qosp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_dump(data, cfg.output))
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())
