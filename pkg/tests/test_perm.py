import random

import pytest

from permsym.catalog import build_alt, build_alt_on_pairs, build_instance, build_sym
from permsym.errors import InputError
from permsym.perm import (
    Permutation,
    PermutationGroup,
    action_on_cosets,
    action_on_ksubsets,
    classify_action,
    group_theoretic_checks,
    minimal_block,
    orbits,
    parse_generator_text,
    parse_permutation,
)


def bfs_elements(gens, degree):
    """Independent closure oracle: breadth-first product enumeration."""
    elems = {Permutation.identity(degree).images}
    frontier = [Permutation.identity(degree)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.images not in elems:
                    elems.add(y.images)
                    nxt.append(y)
        frontier = nxt
    return elems


# ---------------------------------------------------------------------------
# parsing and rendering
# ---------------------------------------------------------------------------

def test_parse_three_cycle():
    p = parse_permutation("(1 2 3)", 3)
    assert p.images == (1, 2, 0)


def test_parse_identity():
    p = parse_permutation("()", 5)
    assert p.is_identity() and p.degree == 5


def test_parse_repeated_point():
    with pytest.raises(InputError, match="repeated point 2"):
        parse_permutation("(1 2)(2 3)", 3)


def test_parse_out_of_range_and_malformed():
    with pytest.raises(InputError, match="out of range"):
        parse_permutation("(1 4)", 3)
    with pytest.raises(InputError, match="position"):
        parse_permutation("(1 2", 3)
    with pytest.raises(InputError, match="position"):
        parse_permutation("1 2)", 3)


@pytest.mark.parametrize("seed", range(10))
def test_parse_render_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randrange(1, 12)
    imgs = list(range(n))
    rng.shuffle(imgs)
    p = Permutation(imgs)
    assert parse_permutation(p.cycle_string(), n) == p


def test_generator_file_format():
    text = """degree 9
# translation generators of the 3x3 grid
(1 2 3)(4 5 6)(7 8 9)

(1 4 7)(2 5 8)(3 6 9)
"""
    degree, gens = parse_generator_text(text)
    assert degree == 9 and len(gens) == 2
    assert PermutationGroup(9, gens).order() == 9


def test_generator_file_errors():
    with pytest.raises(InputError, match="degree"):
        parse_generator_text("(1 2)\n")
    with pytest.raises(InputError, match="line 2"):
        parse_generator_text("degree 3\n(1 5)\n")


# ---------------------------------------------------------------------------
# group order / membership
# ---------------------------------------------------------------------------

def test_order_s4():
    G = PermutationGroup(4, [parse_permutation("(1 2)", 4), parse_permutation("(1 2 3 4)", 4)])
    assert G.order() == 24


def test_order_a7():
    assert build_alt(7).group.order() == 2520


def test_order_shear_group_against_bfs_oracle():
    G = build_instance("example3_2").group
    assert G.order() == len(bfs_elements(G.generators, 9)) == 27


def test_membership():
    A3 = build_alt(3).group
    assert parse_permutation("(1 2)", 3) not in A3
    assert Permutation.identity(3) in A3
    C5 = PermutationGroup(5, [parse_permutation("(1 2 3 4 5)", 5)])
    # oracle: enumerate the five elements
    assert parse_permutation("(1 2 3)", 5).images not in bfs_elements(C5.generators, 5)
    assert not C5.contains(parse_permutation("(1 2 3)", 5))
    with pytest.raises(InputError):
        C5.contains(Permutation.identity(4))


@pytest.mark.parametrize("seed", range(12))
def test_chain_order_matches_bfs_oracle(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 8)
    gens = []
    for _ in range(rng.randrange(1, 4)):
        imgs = list(range(n))
        rng.shuffle(imgs)
        gens.append(Permutation(imgs))
    G = PermutationGroup(n, gens)
    oracle = bfs_elements(gens, n)
    assert G.order() == len(oracle)
    listed = G.elements()
    assert len(listed) == len(oracle)
    assert {e.images for e in listed} == oracle


# ---------------------------------------------------------------------------
# orbits and stabilizers
# ---------------------------------------------------------------------------

def test_orbits_examples():
    g = parse_permutation("(1 2 3)", 3)
    assert orbits([g], 3) == [[0, 1, 2]]
    h = parse_permutation("(1 2)", 3)
    assert orbits([h], 3) == [[0, 1], [2]]


def test_orbits_of_shear_stabilizer():
    G = build_instance("example3_2").group
    shear = G.generators[2]
    sizes = sorted(len(o) for o in orbits([shear], 9))
    assert sizes == [1, 1, 1, 3, 3]


def test_point_stabilizer_orders():
    S3 = build_sym(3).group
    assert S3.point_stabilizer(0).order() == 2
    pairs = build_alt_on_pairs(7).group
    for alpha in (0, 7, 20):
        assert pairs.point_stabilizer(alpha).order() == 120  # 2520 / 21
    C3 = PermutationGroup(3, [parse_permutation("(1 2 3)", 3)])
    assert C3.point_stabilizer(0).is_trivial()


def test_orbit_stabilizer_invariant_small_catalog():
    for spec in ("sym:5", "alt:5", "signtwist:3", "frobenius:7,3", "example3_2",
                 "psl2line:8", "psl2cosets:8"):
        G = build_instance(spec).group
        order = G.order()
        for alpha in range(G.degree):
            assert len(G.orbit(alpha)) * G.point_stabilizer(alpha).order() == order


def test_orbit_stabilizer_invariant_degree_496_spot():
    G = build_instance("psl2cosets:32").group
    order = G.order()
    for alpha in (0, 123, 495):
        assert len(G.orbit(alpha)) * G.point_stabilizer(alpha).order() == order


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def test_classify_alt7_on_pairs():
    cls = classify_action(build_alt_on_pairs(7).group)
    assert cls.transitive and cls.rank == 3
    assert sorted(cls.subdegrees) == [1, 10, 10]
    assert cls.three_halves_transitive and cls.primitive


def test_classify_sign_twist_3():
    inst = build_instance("signtwist:3")
    cls = classify_action(inst.group)
    assert sorted(cls.subdegrees) == [1, 3, 6]
    assert not cls.three_halves_transitive
    assert cls.primitive and inst.faithful


def test_classify_shear_group():
    G = build_instance("example3_2").group
    cls = classify_action(G)
    assert sorted(cls.subdegrees) == [1, 1, 1, 3, 3]
    assert not cls.three_halves_transitive
    # oracle: exhaustive block search over all 3-subsets containing point 0
    from itertools import combinations

    elements = [g for g in G.elements()]
    blocks = []
    for rest in combinations(range(1, 9), 2):
        block = frozenset((0,) + rest)
        if all(frozenset(g.images[x] for x in block) in (block, frozenset())
               or not (frozenset(g.images[x] for x in block) & block)
               for g in elements):
            blocks.append(block)
    assert blocks, "shear group has a nontrivial block system"
    assert not cls.primitive


def test_classify_regular_and_intransitive():
    C3 = PermutationGroup(3, [parse_permutation("(1 2 3)", 3)])
    cls = classify_action(C3)
    assert cls.transitive and cls.half_transitive and not cls.three_halves_transitive
    assert cls.rank == 3
    H = PermutationGroup(3, [parse_permutation("(1 2)", 3)])
    cls = classify_action(H)
    assert not cls.transitive and cls.subdegrees is None
    assert cls.orbit_sizes == (1, 2) and not cls.half_transitive
    assert cls.rank == 5  # orbital count of the intransitive action


def test_three_halves_flags_across_catalog():
    expected = {
        "altpairs:7": True,
        "psl2cosets:8": True,
        "frobenius:7,3": True,
        "frobenius:5,2": True,
        "sym:5": True,       # 2-transitive
        "psl2line:8": True,  # 2-transitive
        "example3_2": False,
        "signtwist:3": False,
        "signtwist:4": False,
        "signtwist:5": True,  # 2n = n(n-1)/2 exactly at n = 5
    }
    for spec, want in expected.items():
        assert classify_action(build_instance(spec).group).three_halves_transitive == want, spec


def test_minimal_block_prime_regular():
    C5 = PermutationGroup(5, [parse_permutation("(1 2 3 4 5)", 5)])
    assert len(minimal_block(C5, 0, 3)) == 5
    assert classify_action(C5).primitive


# ---------------------------------------------------------------------------
# derived actions
# ---------------------------------------------------------------------------

def test_ksubsets_degrees():
    assert build_alt_on_pairs(7).group.degree == 21
    S4 = build_sym(4).group
    assert action_on_ksubsets(S4, 2).degree == 6
    S3 = build_sym(3).group
    assert action_on_ksubsets(S3, 3).degree == 1
    with pytest.raises(InputError):
        action_on_ksubsets(S4, 2, cap=3)


def test_coset_action_self_is_trivial():
    G = build_sym(3).group
    Q = action_on_cosets(G, G)
    assert Q.degree == 1 and Q.order() == 1


def test_coset_action_not_subgroup():
    G = build_alt(4).group
    H = PermutationGroup(4, [parse_permutation("(1 2)", 4)])
    with pytest.raises(InputError, match="subgroup"):
        action_on_cosets(G, H)


def test_coset_action_on_point_stabilizer_is_isomorphic():
    for spec in ("sym:4", "frobenius:7,3", "signtwist:3"):
        G = build_instance(spec).group
        H = G.point_stabilizer(0)
        Q = action_on_cosets(G, H)
        assert Q.degree == G.degree
        assert sorted(classify_action(Q).subdegrees) == sorted(classify_action(G).subdegrees)


# ---------------------------------------------------------------------------
# normalizer / conjugate intersection checks
# ---------------------------------------------------------------------------

def test_group_checks_psl28():
    G = build_instance("psl2cosets:8").group
    checks = group_theoretic_checks(G, 0, 3)
    assert checks.normalizer_in_stabilizer
    assert checks.max_conjugate_intersection == 2


def test_group_checks_frobenius_trivial_intersection():
    G = build_instance("frobenius:7,3").group
    checks = group_theoretic_checks(G, 0, 3)
    assert checks.max_conjugate_intersection == 1


def test_group_checks_alt7_pairs_normalizer():
    G = build_instance("altpairs:7").group
    checks = group_theoretic_checks(G, 0, 5)
    assert checks.normalizer_in_stabilizer


def test_group_checks_sylow_trivial_error():
    G = build_instance("frobenius:7,3").group
    with pytest.raises(InputError, match="Sylow"):
        group_theoretic_checks(G, 0, 5)  # 5 does not divide |H| = 3
