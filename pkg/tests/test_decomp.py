from importlib import resources

import pytest

import gf2_decomposition
from splittable.branching import IND, RES, SPECHT, GrothendieckSum, simple_branch, UNDETERMINED, ZERO
from splittable.decomp import (
    DecompMatrix,
    bundled_matrices,
    bundled_matrix,
    induced_simple_multiplicities,
    instances_for,
    needed_sizes,
    parse_decomp,
    specht_branch,
    verify_branching,
)
from splittable.errors import (
    DecompSyntaxError,
    DiagonalNotOne,
    MissingMatrix,
    SizeMismatch,
    UnitriangularityViolation,
)
from splittable.partitions import Partition, dominates, is_p_regular, partitions_of

SMALL = """# the symmetric group on three letters
p 2
n 3
S 3 | D 3:1
S 2,1 | D 2,1:1
S 1,1,1 | D 3:1
"""


def P(*parts):
    return Partition(parts)


def test_parse_small_file():
    m = parse_decomp(SMALL)
    assert (m.p, m.n) == (2, 3)
    assert m[P(1, 1, 1), P(3)] == 1
    assert m[P(2, 1), P(3)] == 0
    assert m.columns == [P(3), P(2, 1)]
    assert len(m.provenance) == 64


@pytest.mark.parametrize("n", range(6))
def test_bundled_fixtures_match_fresh_computation(n):
    text = resources.files("splittable").joinpath(f"data/p2_n{n}.txt").read_text()
    assert text == gf2_decomposition.decomp_file_text(n)
    assert bundled_matrix(2, n).entries == parse_decomp(gf2_decomposition.decomp_file_text(n)).entries


def test_known_small_rows():
    m = bundled_matrix(2, 5)
    assert m.row(P(3, 1, 1)) == {P(5): 2, P(3, 2): 1}
    assert m.row(P(3, 2)) == {P(5): 1, P(3, 2): 1}
    assert bundled_matrix(2, 4).row(P(2, 2)) == {P(3, 1): 1}


def test_missing_bundled_matrix():
    with pytest.raises(MissingMatrix):
        bundled_matrix(3, 4)


def test_diagonal_must_be_one():
    bad = SMALL.replace("S 2,1 | D 2,1:1", "S 2,1 | D 3:1")
    with pytest.raises(DiagonalNotOne):
        parse_decomp(bad)


def test_unitriangularity_enforced():
    bad = SMALL.replace("S 3 | D 3:1", "S 3 | D 3:1; D 2,1:1")
    with pytest.raises(UnitriangularityViolation) as err:
        parse_decomp(bad)
    assert err.value.line == 4


def test_syntax_errors_carry_line_numbers():
    with pytest.raises(DecompSyntaxError) as err:
        parse_decomp(SMALL.replace("S 2,1 | D 2,1:1", "S 2,1 D 2,1:1"))
    assert err.value.line == 5
    with pytest.raises(DecompSyntaxError):
        parse_decomp(SMALL.replace("S 1,1,1 | D 3:1\n", ""))
    with pytest.raises(DecompSyntaxError):
        parse_decomp("p two\nn 3\n")


@pytest.mark.parametrize("n", range(6))
def test_bundled_matrices_are_unitriangular(n):
    m = bundled_matrix(2, n)
    for lam in partitions_of(n):
        for mu, d in m.row(lam).items():
            assert dominates(mu, lam) and d > 0
    for mu in m.columns:
        assert m[mu, mu] == 1


@pytest.mark.parametrize("n", range(6))
def test_inverse_round_trip(n):
    m = bundled_matrix(2, n)
    for mu in m.columns:
        back = {}
        for nu, c in m.simple_in_specht(mu).items():
            for kappa, d in m.row(nu).items():
                back[kappa] = back.get(kappa, 0) + c * d
        assert {k: v for k, v in back.items() if v} == {mu: 1}


def test_specht_branch_examples():
    assert specht_branch(P(2), 0, IND, 2) == GrothendieckSum.of([(P(3), 1)], basis=SPECHT)
    assert specht_branch(P(2), 1, IND, 2) == GrothendieckSum.of([(P(2, 1), 1)], basis=SPECHT)


def test_specht_branch_residues_cover_all_nodes():
    for p in (2, 3, 5):
        for n in range(8):
            for lam in partitions_of(n):
                for direction, change in ((IND, 1), (RES, -1)):
                    total = GrothendieckSum(SPECHT)
                    for alpha in range(p):
                        for mu, k in specht_branch(lam, alpha, direction, p).terms.items():
                            total.add(mu, k)
                    expected = sum(1 for mu in partitions_of(n + change)
                                   if _differs_by_one(lam, mu))
                    assert total.total() == expected


def _differs_by_one(lam, mu):
    a, b = list(lam), list(mu)
    size = max(len(a), len(b))
    a += [0] * (size - len(a))
    b += [0] * (size - len(b))
    return sum(abs(x - y) for x, y in zip(a, b)) == 1


def test_induced_simple_example():
    result = induced_simple_multiplicities(P(2), 1, IND, bundled_matrix(2, 2), bundled_matrix(2, 3))
    assert result == GrothendieckSum.of([(P(2, 1), 1)])
    with pytest.raises(SizeMismatch):
        induced_simple_multiplicities(P(2), 1, IND, bundled_matrix(2, 2), bundled_matrix(2, 4))


def test_residue_parts_add_up_to_full_induction():
    mats = bundled_matrices()
    for n in range(5):
        for lam in partitions_of(n):
            if not is_p_regular(lam, 2):
                continue
            split = GrothendieckSum()
            for alpha in (0, 1):
                for mu, k in induced_simple_multiplicities(lam, alpha, IND, mats[2, n], mats[2, n + 1]).terms.items():
                    split.add(mu, k)
            full = {}
            for nu, c in mats[2, n].simple_in_specht(lam).items():
                for kappa in partitions_of(n + 1):
                    if _differs_by_one(nu, kappa):
                        for mu, d in mats[2, n + 1].row(kappa).items():
                            full[mu] = full.get(mu, 0) + c * d
            assert split.terms == {k: v for k, v in full.items() if v}


def test_unique_nodes_give_single_simple():
    mats = bundled_matrices()
    checked = 0
    for n in range(1, 6):
        for lam in partitions_of(n):
            if not is_p_regular(lam, 2):
                continue
            for alpha in (0, 1):
                for direction, m in ((IND, n + 1), (RES, n - 1)):
                    if (2, m) not in mats:
                        continue
                    label = simple_branch(lam, alpha, direction, 2)
                    if label is UNDETERMINED:
                        continue
                    got = induced_simple_multiplicities(lam, alpha, direction, mats[2, n], mats[2, m])
                    expected = GrothendieckSum() if label is ZERO else GrothendieckSum.of([(label, 1)])
                    assert got == expected
                    checked += 1
    assert checked >= 20


@pytest.mark.parametrize("statement", ["simple-ind", "simple-res", "ind-cs", "res-bottom"])
def test_statements_hold_on_bundled_fixtures(statement):
    mats = bundled_matrices()
    total = 0
    for n in range(6):
        if not needed_sizes(statement, n) <= {k for _, k in mats}:
            continue
        report = verify_branching(statement, instances_for(statement, 2, n), mats, 2)
        assert report.passed, report.summary()
        total += len(report.results)
    assert total > 0


def test_ind_cs_instances_at_two():
    mats = bundled_matrices()
    found = [lam for n in range(5) for lam, _ in instances_for("ind-cs", 2, n)]
    assert P(1) in found
    report = verify_branching("ind-cs", [(P(1), 1)], mats, 2)
    assert report.passed and report.results[0].observed == GrothendieckSum.of([(P(2), 2)])


def test_corrupted_matrix_is_caught():
    mats = dict(bundled_matrices())
    good = mats[2, 3]
    entries = dict(good.entries)
    entries[P(2, 1), P(3)] = 1
    mats[2, 3] = DecompMatrix(2, 3, entries, "corrupted")
    report = verify_branching("simple-ind", instances_for("simple-ind", 2, 2), mats, 2)
    assert not report.passed
    assert report.failures and "FAIL" in report.summary()
    assert "predicted" in report.failures[0].line()


def test_missing_matrix_is_reported():
    with pytest.raises(MissingMatrix):
        verify_branching("conjecture-3", [(P(7, 6, 6), 2)], bundled_matrices(), 5)
