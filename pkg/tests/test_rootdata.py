import pytest

from qosp.rootdata import closed_form, compute_root_data, epsilon
from qosp.scalars import multiplicative_order, root_field


@pytest.mark.parametrize("l,lprime,L", [(3, 6, 6), (4, 4, 4), (6, 3, 6), (10, 5, 10), (9, 18, 18)])
def test_examples(l, lprime, L):
    r = compute_root_data(l)
    assert (r.l_prime, r.L, r.N) == (lprime, L, 4 * l)


def brute_force_order(x, bound):
    y = x
    for n in range(1, bound + 1):
        if y == 1:
            return n
        y = y * x
    return None


@pytest.mark.parametrize("l", range(3, 25))
def test_closed_form_matches_brute_force(l):
    F = root_field(l)
    assert closed_form(l)[0] == brute_force_order(-F.q, 4 * l)
    assert multiplicative_order(-F.q, 4 * l) == closed_form(l)[0]
    assert F.q ** compute_root_data(l).L == 1


def test_l_to_lprime_injective():
    values = [compute_root_data(l).l_prime for l in range(3, 25)]
    assert len(set(values)) == len(values)


def test_small_l_rejected():
    with pytest.raises(ValueError):
        compute_root_data(2)


@pytest.mark.parametrize("m,expected", [(0, 1), (1, 1), (2, -1), (3, -1), (4, 1), (5, 1)])
def test_epsilon(m, expected):
    assert epsilon(m) == expected


@pytest.mark.parametrize("m", range(17))
def test_epsilon_recursion_sign(m):
    assert (-1) ** m * epsilon(m) * epsilon(m + 1) == 1


def test_json_keys():
    assert compute_root_data(6).to_json() == {"l": 6, "lprime": 3, "L": 6, "N": 24, "twice_odd": True}
