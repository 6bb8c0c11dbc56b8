"""Sanity checks on the test-side oracles themselves."""

from fractions import Fraction
from math import factorial, prod

import pytest

import diagram_oracles as diagram
import gf2_decomposition as gf2


def specht_dim(lam):
    n = sum(lam)
    hooks = [diagram.hook(lam, i, j) for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] + 1)]
    return factorial(n) // prod(hooks)


def test_simple_dimensions_in_characteristic_two():
    dims = {mu: gf2.brauer_character(mu)[(1,) * sum(mu)] for mu in [(4,), (3, 1), (5,), (4, 1), (3, 2)]}
    assert dims == {(4,): 1, (3, 1): 2, (5,): 1, (4, 1): 4, (3, 2): 4}


@pytest.mark.parametrize("n", range(1, 6))
def test_decomposition_numbers_account_for_dimensions(n):
    d = gf2.decomposition_matrix(n)
    simple_dims = {mu: gf2.brauer_character(mu)[(1,) * n] for mu in gf2.partitions(n) if gf2.two_regular(mu)}
    for lam in gf2.partitions(n):
        total = sum(d[lam, mu] * simple_dims[mu] for mu in simple_dims)
        assert total == Fraction(specht_dim(lam))


def test_character_values():
    assert gf2.mn_character((2, 1), (3,)) == -1
    assert gf2.mn_character((3, 2), (5,)) == 0
    assert gf2.mn_character((1, 1, 1), (1, 1, 1)) == 1


def test_only_small_groups():
    with pytest.raises(ValueError):
        gf2.odd_classes(6)


def test_rim_oracle_example():
    assert diagram.mullineux_columns((9, 6, 5), 5) == [(10, 3), (5, 2), (5, 2)]


def test_crystal_oracle_on_cores_is_transpose():
    for p in (3, 5):
        for n in range(10):
            for lam in diagram.all_partitions(n):
                if diagram.is_regular(lam, p) and diagram.core(lam, p)[1] == 0:
                    conj = tuple(sum(1 for x in lam if x >= j) for j in range(1, (lam or (0,))[0] + 1))
                    assert diagram.crystal_mullineux(lam, p) == conj


def test_hook_oracle_counts():
    assert diagram.rim_hooks((5, 4, 2, 2), 7) == [(3, 1, 1, 1)]
    assert diagram.core((2,), 2) == ((), 1)
