"""Run every relation check over a range of l and print a summary table."""

import argparse
import time
from dataclasses import dataclass, field

from qosp import centre
from qosp.rootdata import compute_root_data
from qosp.scalars import generic_field


@dataclass
class Config:
    ls: list = field(default_factory=lambda: [3, 4, 5, 6, 7, 8, 9, 10, 12])
    generic_comemf: int = 10
    generic_scasm: int = 6


def main(cfg: Config) -> int:
    failures = 0
    g = generic_field()
    start = time.perf_counter()
    generic = centre.scasimir_checks(g) + centre.comemf_checks(cfg.generic_comemf, g) + centre.scasm_checks(cfg.generic_scasm, g)
    bad = [c.relation for c in generic if not c.ok]
    failures += len(bad)
    print(f"generic   {len(generic):4d} checks  {'ok' if not bad else 'FAILED ' + ', '.join(bad)}  {time.perf_counter() - start:.2f}s")
    for l in cfg.ls:
        start = time.perf_counter()
        root = compute_root_data(l)
        checks = centre.scasm_checks(root.L, root.field) + centre.centre_checks(root)
        bad = [c.relation for c in checks if not c.ok]
        failures += len(bad)
        print(f"l={l:<3d} l'={root.l_prime:<3d} L={root.L:<3d} {len(checks):4d} checks  {'ok' if not bad else 'FAILED ' + ', '.join(bad)}  {time.perf_counter() - start:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--l", type=int, nargs="*", default=None)
    args = p.parse_args()
    raise SystemExit(main(Config(ls=args.l) if args.l else Config()))
