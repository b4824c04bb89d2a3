"""Integer data attached to q a primitive l-th root of unity."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .scalars import multiplicative_order, root_field


@dataclass(frozen=True)
class RootData:
    l: int
    l_prime: int
    L: int
    N: int
    twice_odd: bool

    def to_json(self) -> dict:
        return {"l": self.l, "lprime": self.l_prime, "L": self.L, "N": self.N, "twice_odd": self.twice_odd}

    @property
    def field(self):
        return root_field(self.l)


def is_twice_odd(l: int) -> bool:
    return l % 2 == 0 and (l // 2) % 2 == 1


def closed_form(l: int) -> tuple[int, int]:
    """(l', L) from the parity rules, without touching the field."""
    L = l if l % 2 == 0 else 2 * l
    l_prime = l // 2 if is_twice_odd(l) else L
    return l_prime, L


@lru_cache(maxsize=None)
def compute_root_data(l: int) -> RootData:
    if not isinstance(l, int) or l < 3:
        raise ValueError(f"l must be an integer >= 3, got {l!r}")
    l_prime, L = closed_form(l)
    field = root_field(l)
    order = multiplicative_order(field.q_prime, 4 * l)
    if order != l_prime:
        raise AssertionError(f"order of -q is {order}, closed form gives {l_prime}")
    if field.q ** L != field.one:
        raise AssertionError("q^L != 1")
    return RootData(l=l, l_prime=l_prime, L=L, N=4 * l, twice_odd=is_twice_odd(l))


def epsilon(m: int) -> int:
    """+1 if m = 0, 1 mod 4, else -1."""
    if m < 0:
        raise ValueError("epsilon is defined for m >= 0")
    return 1 if m % 4 in (0, 1) else -1
