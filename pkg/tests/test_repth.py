import pytest

from lca.embed import (
    extended_deletion,
    levi_embedding,
    named_chain,
    so_sum_embedding,
)
from lca.repth import (
    Character,
    adjoint_character,
    dominant_character,
    factor_dimensions,
    has_trivial_factor,
    restrict,
    semisimplify,
    weyl_dimension,
)
from lca.rootsys import root_system

from helpers import kostant_multiplicity

E8_ADJOINT = (0, 0, 0, 0, 0, 0, 0, 1)


def test_weyl_dimension_examples():
    assert weyl_dimension(root_system("E8"), (0,) * 8) == 1
    assert weyl_dimension(root_system("E8"), E8_ADJOINT) == 248
    assert weyl_dimension(root_system("E6"), (0, 1, 0, 0, 0, 0)) == 78
    d8 = root_system("D8")
    assert weyl_dimension(d8, (0, 1, 0, 0, 0, 0, 0, 0)) == 120
    assert weyl_dimension(d8, (0, 0, 0, 0, 0, 0, 1, 0)) == 128
    assert 120 + 128 == 248


def test_weyl_dimension_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dimension(root_system("A2"), (1, -1))


def test_dominant_character_highest_weight_multiplicity():
    for name, lam in [("A2", (1, 1)), ("B2", (0, 1)), ("G2", (1, 0))]:
        char = dominant_character(root_system(name), lam)
        assert char.as_dict()[lam] == 1


def test_dominant_character_against_kostant_oracle():
    cases = [
        ("A2", (1, 1)),  # adjoint: zero weight twice
        ("A2", (2, 1)),
        ("B2", (0, 1)),  # spin: four weights, each once
        ("B2", (1, 1)),
        ("G2", (0, 1)),
        ("A1", (6,)),
    ]
    for name, lam in cases:
        rs = root_system(name)
        char = dominant_character(rs, lam)
        assert char.dimension == weyl_dimension(rs, lam)
        for mu, mult in char.entries:
            assert mult == kostant_multiplicity(rs, lam, mu), (name, lam, mu)


def test_a2_adjoint_zero_weight():
    char = dominant_character(root_system("A2"), (1, 1))
    assert char.as_dict()[(0, 0)] == 2


def test_b2_spin_character():
    char = dominant_character(root_system("B2"), (0, 1))
    assert char.dimension == 4
    assert set(char.as_dict().values()) == {1}


def test_character_weyl_stability_and_json():
    char = dominant_character(root_system("G2"), (1, 0))
    assert char.is_weyl_stable()
    payload = char.to_json()
    assert payload["ambient"] == "G2"
    assert payload["dimension"] == 7
    assert sorted(payload["entries"]) == payload["entries"]


def test_restrict_zero_character():
    emb = named_chain("E8", "d8")
    zero = Character.from_dict(root_system("E8"), {(0,) * 8: 1})
    restricted = restrict(zero, emb)
    assert restricted.entries == (((0,) * 8, 1),)


def test_restrict_b5_spin_to_d5():
    b5 = root_system("B5")
    emb = extended_deletion(b5, {5})
    assert emb.source.label() == "D5"
    spin = dominant_character(b5, (0, 0, 0, 0, 1))
    factors = semisimplify(restrict(spin, emb))
    dims = sorted(weyl_dimension(emb.source, mu) for mu, _ in factors)
    assert dims == [16, 16]
    highest = sorted(mu for mu, _ in factors)
    assert highest == [(0, 0, 0, 0, 1), (0, 0, 0, 1, 0)]


def test_restrict_wrong_ambient_rejected():
    emb = named_chain("E8", "d8")
    char = dominant_character(root_system("E7"), (1,) + (0,) * 6)
    with pytest.raises(ValueError):
        restrict(char, emb)


def test_semisimplify_golden_e8_d8():
    adj = adjoint_character(root_system("E8"))
    emb = named_chain("E8", "d8")
    factors = semisimplify(restrict(adj, emb))
    assert sorted(factors) == [
        ((0, 0, 0, 0, 0, 0, 1, 0), 1),  # half-spin, 128
        ((0, 1, 0, 0, 0, 0, 0, 0), 1),  # exterior square, 120
    ]
    dims = {mu: d for mu, _, d in factor_dimensions(emb.source, factors)}
    assert dims[(0, 1, 0, 0, 0, 0, 0, 0)] == 120
    assert dims[(0, 0, 0, 0, 0, 0, 1, 0)] == 128


def test_semisimplify_golden_e8_a1a7():
    adj = adjoint_character(root_system("E8"))
    emb = named_chain("E8", "a1a7")
    assert emb.source.label() == "A1*A7"
    factors = factor_dimensions(emb.source, semisimplify(restrict(adj, emb)))
    table = sorted((mu, d) for mu, _, d in factors)
    assert table == [
        ((0, 0, 0, 0, 1, 0, 0, 0), 70),  # 0 (x) l4
        ((0, 1, 0, 0, 0, 0, 0, 1), 63),  # 0 (x) l1+l7
        ((1, 0, 0, 0, 0, 0, 1, 0), 56),  # 1 (x) l6
        ((1, 0, 1, 0, 0, 0, 0, 0), 56),  # 1 (x) l2
        ((2, 0, 0, 0, 0, 0, 0, 0), 3),  # 2 (x) 0
    ]
    assert sum(d for _, d in table) == 248


def test_semisimplify_irreducible_is_fixed_point():
    rs = root_system("F4")
    char = dominant_character(rs, (0, 0, 0, 1))
    assert semisimplify(char) == (((0, 0, 0, 1), 1),)


def test_semisimplify_rejects_non_character():
    rs = root_system("A2")
    fake = Character.from_dict(rs, {(1, 0): 1})  # bare weight, not Weyl-stable
    with pytest.raises(ValueError):
        semisimplify(fake)


def test_b2_cubed_chain_has_no_trivial_factor():
    adj = adjoint_character(root_system("E8"))
    emb = named_chain("E8", "b2^3")
    assert emb.source.label() == "B2*B2*B2"
    restricted = restrict(adj, emb)
    assert restricted.dimension == 248
    assert not has_trivial_factor(restricted)
    factors = factor_dimensions(emb.source, semisimplify(restricted))
    spin_cube = [(mu, m, d) for mu, m, d in factors if d == 64]
    assert spin_cube == [((0, 1, 0, 1, 0, 1), 2, 64)]


def test_levi_restriction_has_trivial_factor():
    rs = root_system("A2")
    emb = levi_embedding(rs, {1})
    restricted = restrict(adjoint_character(rs), emb)
    assert has_trivial_factor(restricted)


def test_maximal_rank_embedding_invertible():
    from fractions import Fraction

    from lca.linalg import invert, mat

    emb = named_chain("E8", "d8")
    inverse = invert(mat(emb.matrix))
    assert all(isinstance(x, Fraction) for row in inverse for x in row)


def test_adjoint_restriction_dimension_invariance_maximal_rank():
    for group, chain in [("E8", "a2e6"), ("E7", "a2a5"), ("F4", "a2a2"), ("G2", "a1a1")]:
        adj = adjoint_character(root_system(group))
        restricted = restrict(adj, named_chain(group, chain))
        assert restricted.dimension == adj.dimension


def test_so_sum_embedding_rejects_bad_blocks():
    with pytest.raises(ValueError):
        so_sum_embedding(root_system("D8"), [5, 5])
    with pytest.raises(ValueError):
        so_sum_embedding(root_system("D8"), [2, 14])
    with pytest.raises(ValueError):
        so_sum_embedding(root_system("A7"), [3, 5])


def test_maximal_rank_restriction_contains_subsystem_adjoint():
    # adjoint of G restricted to a maximal-rank subsystem = subsystem adjoint
    # plus coset pieces; each factor's highest root must appear exactly once
    for group, chain in [("E8", "d8"), ("E8", "a4^2"), ("E7", "a1d6"), ("F4", "a1c3")]:
        emb = named_chain(group, chain)
        adj = adjoint_character(root_system(group))
        factors = dict(semisimplify(restrict(adj, emb)))
        offset = 0
        for factor in emb.source.factors:
            top = factor.root_to_weight(factor.highest_root)
            padded = [0] * emb.source.rank
            padded[offset : offset + factor.rank] = top
            assert factors.get(tuple(padded)) == 1, (group, chain, factor.label())
            offset += factor.rank


def test_restricted_characters_are_weyl_stable():
    for group, chain in [("E8", "b2^3"), ("F4", "b1^3"), ("E7", "b1a3"), ("G2", "b1")]:
        emb = named_chain(group, chain)
        restricted = restrict(adjoint_character(root_system(group)), emb)
        assert restricted.is_weyl_stable(), (group, chain)


def test_spin_module_stepwise_restrictions():
    from lca.embed import so_sum_embedding

    d8 = root_system("D8")
    emb = so_sum_embedding(d8, [5, 11])
    assert emb.source.label() == "B2*B5"
    spin = dominant_character(d8, (0, 0, 0, 0, 0, 0, 1, 0))
    factors = semisimplify(restrict(spin, emb))
    # the 128-dimensional half-spin module restricts to (spin B2) x (spin B5)
    assert factors == (((0, 1, 0, 0, 0, 0, 1), 1),)

    d5 = root_system("D5")
    emb = so_sum_embedding(d5, [5, 5])
    for half_spin in [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]:
        factors = semisimplify(restrict(dominant_character(d5, half_spin), emb))
        assert factors == (((0, 1, 0, 1), 1),)


def test_branching_golden_files(capsys):
    import os

    from lca.cli import run as cli_run

    golden_dir = os.path.join(os.path.dirname(__file__), "golden")
    for chain, filename in [
        ("d8", "branch_e8_d8.json"),
        ("a1a7", "branch_e8_a1a7.json"),
        ("b2^3", "branch_e8_b23.json"),
    ]:
        assert cli_run(["branch", "E8", chain, "--json"]) == 0
        produced = capsys.readouterr().out
        frozen = open(os.path.join(golden_dir, filename)).read()
        assert produced == frozen, f"golden drift for chain {chain}"
