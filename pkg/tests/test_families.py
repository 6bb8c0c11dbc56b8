import random

import pytest
from hypothesis import given

from strategies import partitions
from splittable.abacus import Abacus
from splittable.errors import BadParams, NotApplicable, NotBig
from splittable.families import (
    StaircaseParams,
    acs_preimage,
    apply_h_epsilon,
    classify_minimal,
    classify_staircase,
    family_staircase_params,
    h_epsilon,
    is_big,
    is_big_by_hook,
    is_big_on_abacus,
    is_completely_splittable,
    is_epsilon_big,
    lambda_family,
    lambda_family_abacus,
    lambda_hx,
    mu_family,
    mu_family_params,
    mu_index,
    normal_residues,
    nu_family,
    nu_first_index,
    nu_second_index,
    staircase,
    staircase_abacus,
    staircase_edge,
    tilde,
    tilde_closed_form,
)
from splittable.hooks import p_core, phi_partition
from splittable.abacus import node_classification
from splittable.partitions import EMPTY, Partition, chi, is_p_regular, partitions_up_to, removable_nodes


def P(*parts):
    return Partition(parts)


def positions(start, residues, count, p):
    """First ``count`` integers n >= start with n mod p in ``residues``."""
    out, n = [], start
    while len(out) < count:
        if n % p in residues:
            out.append(n)
        n += 1
    return out


def test_h_epsilon_examples():
    assert h_epsilon(P(9, 6, 5), (0, 1, -1), 5) == P(10, 10)
    assert h_epsilon(P(6, 5, 2, 1), (0, -1, 1, 0), 7) == P(7, 7)
    with pytest.raises(NotApplicable):
        apply_h_epsilon(Abacus(1, (7,)), (0, 1), 7)


def test_big_examples():
    assert is_big(P(5, 4, 2, 2), 7)
    for p in (3, 5, 7):
        assert not is_big(Partition([1] * (p - 1)), p)


def test_tilde_examples():
    assert tilde(P(5, 4, 2, 2), 7) == P(6, 4, 2, 1)
    assert tilde(P(5, 5, 3), 5) == P(6, 5, 2)
    assert tilde(P(7, 6, 6), 5) == P(9, 6, 4)
    with pytest.raises(NotBig):
        tilde(P(3, 1), 5)


def test_completely_splittable_examples():
    assert is_completely_splittable(P(5, 4, 2, 2), 7)
    assert not is_completely_splittable(P(11, 9, 7, 6, 6, 3), 7)
    assert is_completely_splittable(EMPTY, 7)


def test_preimage_examples():
    assert acs_preimage(P(6, 4, 2, 1), 7) == P(5, 4, 2, 2)
    assert acs_preimage(P(9, 6, 4), 5) == P(7, 6, 6)
    assert acs_preimage(P(3, 1), 5) is None


def test_no_big_partition_of_four_has_tilde_31():
    assert all(not is_big(lam, 5) or tilde(lam, 5) != P(3, 1) for lam in partitions_up_to(4))


def test_lambda_family_examples():
    assert lambda_family(3, 3, 4, 5) == P(8, 6, 6)
    assert lambda_family(3, 2, 0, 5) == EMPTY
    with pytest.raises(BadParams):
        lambda_family(5, 2, 1, 5)


def test_lambda_family_top_node_is_only_normal_node():
    p = 5
    for h in range(1, p):
        for i in range(1, h + 1):
            for x in range(1, 9):
                lam = lambda_family(h, i, x, p)
                sets = node_classification(lam, p)
                normal = [node for nodes in sets.normal.values() for node in nodes]
                top = removable_nodes(lam)[0]
                assert normal == [top]
                assert top.residue(p) == -h % p
                assert p_core(lam, p) == (EMPTY, x)


def test_lambda_family_explicit_beads():
    p = 5
    for h in range(1, p):
        for i in range(1, h + 1):
            for x in range(0, 12):
                q, r = divmod(x, i)
                expected = (set(range((q + 1) * p, (q + 1) * p + r)) | set(range(q * p + r, q * p + i))
                            | set(range(i, h)))
                assert Abacus(0, expected) == lambda_family_abacus(h, i, x, p)


def test_mu_and_nu_examples():
    assert mu_family(3, 3, 4, 5) == P(10, 10)
    p = 5
    for x in (1, 3, 5, 7):
        small, big = nu_family(2, x, p), nu_family(2, x + 2 * (p - 1), p)
        padded = list(small) + [0] * (2 * p - 2 - len(small))
        assert big == Partition(sorted((a + p if k < 2 * p - 2 else a for k, a in enumerate(padded)),
                                       reverse=True))


def test_index_closed_forms_against_enumeration():
    for p in (5, 7):
        for H in range(2, p):
            for x in range(1, 150 // p + 1):
                if x % H == 0:
                    continue
                R = x % H
                first = positions(H, {c for c in range(p) if c != H - R}, 40, p)
                second = positions(p + H - R, {H - R} | set(range(H, p)), 40, p)
                assert [nu_first_index(H, x, y, p) for y in range(40)] == first
                assert [nu_second_index(H, x, y, p) for y in range(40)] == second
        for h in range(1, p):
            for i in range(1, h + 1):
                for x in range(i, 150 // p + 1):
                    _, S = mu_family_params(h, i, x, p)
                    assert [mu_index(h, i, x, y, p) for y in range(40)] == positions(p, set(S), 40, p)


def test_empty_staircase():
    assert staircase(StaircaseParams(), 5) == EMPTY


def test_family_is_a_staircase():
    p = 5
    for h in range(1, p):
        for i in range(1, h + 1):
            for x in range(i, 12):
                q, r = divmod(x, i)
                expected = (StaircaseParams((i, h), (q, 0)) if r == 0
                            else StaircaseParams((r, i, h), (q + 1, q, 0)))
                assert family_staircase_params(h, i, x, p) == expected
                if i < h:
                    assert staircase(expected, p) == lambda_family(h, i, x, p)


def test_bad_staircase_params():
    with pytest.raises(BadParams):
        staircase(StaircaseParams((3, 2), (1, 0)), 5)
    with pytest.raises(BadParams):
        staircase(StaircaseParams((2,), (0, 1)), 5)


def random_staircase(rng, p):
    k = rng.randint(1, p)
    rs = tuple(sorted(rng.sample(range(1, p), k - 1)))
    rows = tuple(sorted(rng.sample(range(0, 8), k - 1), reverse=True))
    return StaircaseParams(rs, rows)


def test_staircase_edge_formula_matches_edge_map():
    rng = random.Random(7)
    for p in (5, 7):
        for _ in range(300):
            params = random_staircase(rng, p)
            lam = staircase(params, p)
            assert staircase_edge(params, p) == phi_partition(lam, p)[1]


def test_staircase_classification_round_trip():
    rng = random.Random(11)
    for p in (5, 7):
        for _ in range(300):
            params = random_staircase(rng, p)
            lam = staircase(params, p)
            found = classify_staircase(lam, p)
            if found is not None:
                assert staircase(found, p) == lam
                assert staircase_abacus(found, p).partition() == lam


def test_minimal_classification():
    assert classify_minimal(P(8, 6, 6), 5) == (3, 3, 4)
    assert classify_minimal(P(3, 1), 5) is None


@given(partitions(max_size=25))
def test_big_characterisations_agree(lam):
    for p in (3, 5, 7):
        big = is_big(lam, p)
        assert big == is_big_by_hook(lam, p)
        assert big == (is_completely_splittable(lam, p)
                       and is_big_on_abacus(Abacus.from_partition(lam, 0), p))


def test_tilde_closed_form_agrees():
    for p in (3, 5, 7):
        for lam in partitions_up_to(30):
            if is_big(lam, p):
                assert tilde(lam, p) == tilde_closed_form(lam, p)
                assert acs_preimage(tilde(lam, p), p) == lam


def test_core_of_completely_splittable():
    for p in (3, 5, 7):
        for lam in partitions_up_to(25):
            if is_completely_splittable(lam, p):
                assert chi(p_core(lam, p)[0]) < p


def test_minimal_partitions_from_core_residues():
    p = 5
    families = {lambda_hx(H, x, p) for H in range(2, p) for x in range(1, 30) if x % H}
    for lam in partitions_up_to(30):
        if not lam or chi(lam) != p or not is_p_regular(lam, p):
            continue
        bottom = (lam[-1] - len(lam)) % p
        if normal_residues(p_core(lam, p)[0], p) <= {bottom}:
            assert lam in families


def test_moving_a_bead_up_keeps_epsilon_big():
    rng = random.Random(3)
    for p in (5, 7):
        pool = [lam for lam in partitions_up_to(25) if lam and is_completely_splittable(lam, p)]
        checked = 0
        while checked < 500:
            lam = rng.choice(pool)
            eps = tuple(rng.choice((-1, 0, 0, 1)) for _ in lam)
            if not is_epsilon_big(lam, eps, p):
                continue
            ab = Abacus.from_partition(lam, 0)
            image = apply_h_epsilon(ab, eps, p)
            for i in range(1, len(lam) + 1):
                c = ab.bead_from_top(i) + 1
                if any(b % p == c % p for b in ab.beads):
                    continue
                moved = ab.add_bead(c)
                assert is_epsilon_big(moved.partition(), eps, p)
                assert apply_h_epsilon(moved, eps, p) == image.add_bead(c + p * eps[i - 1])
                checked += 1
