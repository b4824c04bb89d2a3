"""Search for exact parameters where M+(lambda, 1, sigma) has an e^L value with an
L-th root eps inside Q(z_4l), then confirm the explicit change of basis to M-.

There is no closed formula for that value, so the search is a brute-force scan
of small lambda, sigma and candidate roots eps = y / eta.
"""

import argparse
import itertools
from dataclasses import dataclass, field

from qosp import reps
from qosp.linalg import NOT_SCALAR
from qosp.scalars import root_field


@dataclass
class Config:
    ls: list = field(default_factory=lambda: [3, 4, 5, 6])
    sigmas: tuple = (0, 1, -1, 2)
    max_witnesses: int = 3


def candidate_roots(F):
    N = F.N
    z = [F.root_power(j) for j in range(N)]
    seen = set()
    for i, j in itertools.combinations_with_replacement(range(N), 2):
        for y in (z[i], z[i] + z[j], z[i] - z[j]):
            if y and y not in seen:
                seen.add(y)
                yield y


def search(l: int, cfg: Config):
    F = root_field(l)
    roots = list(candidate_roots(F))
    lams = [F.one, -F.one] + [F.root_power(j) for j in range(1, F.N, 3)]
    found = []
    for lam in lams:
        for sigma in cfg.sigmas:
            plus = reps.build_m_plus(l, lam, 1, sigma)
            value = reps.eps_bar_power(plus)
            if value is NOT_SCALAR or not value:
                continue
            L = plus.root.L
            target = value * F.eta**L
            for y in roots:
                if y**L == target:
                    eps = y / F.eta
                    T = reps.explicit_plus_to_minus(plus, eps)
                    ok = T is not None and reps.intertwines(T, plus, reps.build_m_minus(l, lam, eps, sigma))
                    found.append((lam, sigma, eps, ok))
                    break
            if len(found) >= cfg.max_witnesses:
                return found
    return found


def main(cfg: Config) -> int:
    bad = 0
    for l in cfg.ls:
        hits = search(l, cfg)
        print(f"l={l}: {len(hits)} witness(es)")
        for lam, sigma, eps, ok in hits:
            print(f"  lambda={lam}  sigma={sigma}  eps={eps}  change of basis {'verified' if ok else 'FAILED'}")
            bad += not ok
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--l", type=int, nargs="*", default=None)
    args = p.parse_args()
    raise SystemExit(main(Config(ls=args.l) if args.l else Config()))
