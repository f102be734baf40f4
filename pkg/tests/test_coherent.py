import dataclasses

import numpy as np
import pytest

from permsym.catalog import build_instance
from permsym.coherent import (
    adjacency_matrices,
    adjacency_product_check,
    intersection_tensor,
    two_orbits,
    verify_cc_axioms,
)
from permsym.errors import InputError
from permsym.perm import PermutationGroup, classify_action, parse_permutation

CATALOG_SAMPLE = [
    "sym:5",
    "alt:5",
    "altpairs:7",
    "signtwist:3",
    "frobenius:7,3",
    "example3_2",
    "psl2line:8",
    "psl2cosets:8",
]


def regular_c3():
    return PermutationGroup(3, [parse_permutation("(1 2 3)", 3)])


def test_two_transitive_has_two_orbitals():
    cc = two_orbits(build_instance("sym:3").group)
    assert cc.m == 2
    assert cc.valency.tolist() == [1, 2]


def test_regular_c3_has_three_singleton_orbitals():
    cc = two_orbits(regular_c3())
    assert cc.m == 3
    assert cc.valency.tolist() == [1, 1, 1]


def test_alt7_pairs_orbitals():
    cc = two_orbits(build_instance("altpairs:7").group)
    assert cc.m == 3
    assert sorted(cc.valency.tolist()) == [1, 10, 10]


def test_reflexive_structure_transitive():
    for spec in CATALOG_SAMPLE:
        cc = two_orbits(build_instance(spec).group)
        assert int(cc.reflexive.sum()) == 1
        assert cc.reflexive[0]
        assert int(cc.valency.sum()) == cc.n
        # star is an involution fixing reflexive orbitals
        assert np.array_equal(cc.star[cc.star], np.arange(cc.m))
        assert cc.star[0] == 0


def test_degree_cap():
    with pytest.raises(InputError):
        two_orbits(build_instance("sym:5").group, cap=3)


def test_valencies_match_subdegrees():
    for spec in CATALOG_SAMPLE:
        G = build_instance(spec).group
        cc = two_orbits(G)
        cls = classify_action(G)
        assert sorted(cc.valency.tolist()) == sorted(cls.subdegrees), spec


def test_tensor_diagonal_counts_sym_n():
    # for the natural S_n action: C[diag, s, s*] equals the valency n-1
    for n in (3, 4, 5):
        cc = two_orbits(build_instance(f"sym:{n}").group)
        C = intersection_tensor(cc)
        assert C[0, 1, cc.star[1]] == n - 1


def test_tensor_regular_c3_is_group_table():
    cc = two_orbits(regular_c3())
    C = intersection_tensor(cc)
    # orbitals of a regular abelian group multiply like the group itself:
    # C[t, r, s] = 1 iff orbital r followed by s lands on t, else 0
    assert C.sum() == cc.m * cc.m
    for r in range(3):
        for s in range(3):
            assert C[:, r, s].sum() == 1


def test_tensor_row_sums_are_valencies():
    # summing over the middle-point split: sum_s C[t, r, s] = valency(r)
    for spec in CATALOG_SAMPLE:
        cc = two_orbits(build_instance(spec).group)
        C = intersection_tensor(cc)
        for t in range(cc.m):
            for r in range(cc.m):
                assert C[t, r, :].sum() == cc.valency[r]


def test_axioms_pass_on_catalog():
    for spec in CATALOG_SAMPLE:
        cc = two_orbits(build_instance(spec).group)
        C = intersection_tensor(cc)
        report = verify_cc_axioms(cc, C)
        assert report.passed, (spec, report.failures)


def test_axioms_fail_on_corrupted_table():
    cc = two_orbits(build_instance("altpairs:7").group)
    C = intersection_tensor(cc)
    table = cc.orbital_of.copy()
    table[0, 1] = (table[0, 1] + 1) % cc.m  # reassign one pair
    corrupted = dataclasses.replace(cc, orbital_of=table)
    report = verify_cc_axioms(corrupted, intersection_tensor(corrupted))
    assert not report.passed
    assert report.failures


def test_adjacency_matrices_identities():
    for spec in ("sym:3", "example3_2", "psl2cosets:8"):
        cc = two_orbits(build_instance(spec).group)
        mats = adjacency_matrices(cc)
        total = sum(mats)
        assert np.array_equal(total, np.ones((cc.n, cc.n), dtype=np.int64))
        refl = sum(m for m, is_refl in zip(mats, cc.reflexive) if is_refl)
        assert np.array_equal(refl, np.eye(cc.n, dtype=np.int64))
        for s in range(cc.m):
            assert np.array_equal(mats[s].T, mats[cc.star[s]])


def test_sym3_offdiagonal_is_ones_minus_identity():
    cc = two_orbits(build_instance("sym:3").group)
    mats = adjacency_matrices(cc)
    assert np.array_equal(mats[1], np.ones((3, 3), dtype=np.int64) - np.eye(3, dtype=np.int64))


def test_adjacency_product_identity():
    for spec in CATALOG_SAMPLE:
        cc = two_orbits(build_instance(spec).group)
        C = intersection_tensor(cc)
        checked, passed, detail = adjacency_product_check(cc, C)
        assert checked and passed, (spec, detail)


def test_triangle_identity_explicit():
    cc = two_orbits(build_instance("example3_2").group)
    C = intersection_tensor(cc)
    size = cc.valency * cc.n  # transitive: |s| = valency * n
    for r in range(cc.m):
        for s in range(cc.m):
            for t in range(cc.m):
                a = size[t] * C[cc.star[t], r, s]
                b = size[r] * C[cc.star[r], s, t]
                c = size[s] * C[cc.star[s], t, r]
                assert a == b == c


def test_trace_identity_links_form_to_trace():
    # n * C[refl, r, s] = trace(A_r A_s) for transitive groups
    for spec in ("sym:4", "frobenius:7,3", "example3_2"):
        cc = two_orbits(build_instance(spec).group)
        C = intersection_tensor(cc)
        mats = adjacency_matrices(cc)
        for r in range(cc.m):
            for s in range(cc.m):
                assert cc.n * C[0, r, s] == np.trace(mats[r] @ mats[s])


def test_intransitive_configuration():
    H = PermutationGroup(3, [parse_permutation("(1 2)", 3)])
    cc = two_orbits(H)
    assert cc.m == 5
    assert int(cc.reflexive.sum()) == 2
    C = intersection_tensor(cc)
    assert verify_cc_axioms(cc, C).passed
    # valencies of the orbitals supported on orbit(0) match the stabilizer orbits
    orbit0 = int(cc.point_orbit_of[0])
    supported = sorted(int(cc.valency[s]) for s in range(cc.m)
                       if cc.support_orbit[s] == orbit0)
    stab = H.point_stabilizer(0)
    assert supported == sorted(len(o) for o in stab.orbits())
