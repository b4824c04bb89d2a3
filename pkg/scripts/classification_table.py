"""Print the nilpotent-module table (d, lambda, both irreducibility verdicts) for several l."""

import argparse
from dataclasses import dataclass, field

from qosp import reps


@dataclass
class Config:
    ls: list = field(default_factory=lambda: [3, 4, 5, 6])


def main(cfg: Config) -> int:
    disagreements = 0
    for l in cfg.ls:
        cat = reps.classify(l)
        root = cat["root"]
        print(f"l={l}  l'={root['lprime']}  L={root['L']}")
        for row in cat["nilpotent"]:
            mark = "" if row["agree"] else "  <-- disagreement"
            free = " (free)" if row["lambda_free"] else ""
            print(f"  d={row['d']:<3d} lambda={row['lambda']:<28s}{free:8s} criterion={row['criterion_irreducible']!s:5s} burnside={row['burnside_irreducible']!s:5s}{mark}")
            disagreements += not row["agree"]
        for w in cat["periodic_witnesses"]:
            print(f"  {w['family']:<13s} dim={w['dim']:<3d} relations={w['relations']} irreducible={w['burnside_irreducible']}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--l", type=int, nargs="*", default=None)
    args = p.parse_args()
    raise SystemExit(main(Config(ls=args.l) if args.l else Config()))
