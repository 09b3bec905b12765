import pytest

from lca.rootsys import (
    ProductRootSystem,
    SemisimpleTypeLabel,
    SimpleType,
    build_root_system,
    classify_subdiagram,
    fold,
    highest_root_marks,
    root_system,
    weyl_orbit,
)

from helpers import reflection_closure_count

CLOSED_FORM_COUNTS = {
    "A1": 2,
    "A4": 20,
    "B2": 8,
    "B5": 50,
    "C3": 18,
    "D4": 24,
    "D8": 112,
    "E6": 72,
    "E7": 126,
    "E8": 240,
    "F4": 48,
    "G2": 12,
}


@pytest.mark.parametrize("name,count", sorted(CLOSED_FORM_COUNTS.items()))
def test_root_counts(name, count):
    rs = root_system(name)
    assert len(rs.all_roots) == count
    assert reflection_closure_count(rs) == count
    assert len(rs.all_roots) + rs.rank == rs.type.adjoint_dimension


@pytest.mark.parametrize("name", sorted(CLOSED_FORM_COUNTS))
def test_roots_closed_under_negation_and_reflection(name):
    rs = root_system(name)
    for alpha in rs.all_roots:
        assert tuple(-x for x in alpha) in rs.all_roots
        fund = rs.root_to_weight(alpha)
        for i in range(rs.rank):
            assert rs.reflect(fund, i) in {rs.root_to_weight(b) for b in rs.all_roots}


def test_inadmissible_types_rejected():
    for bad in [("E", 9), ("F", 5), ("G", 3), ("D", 2), ("A", 0)]:
        with pytest.raises(ValueError):
            SimpleType(*bad)
    with pytest.raises(ValueError):
        SimpleType.parse("H4")


def test_highest_root_marks():
    assert highest_root_marks(root_system("A1")) == (1,)
    assert max(highest_root_marks(root_system("E8"))) == 6
    for name in ("E7", "E6", "F4", "G2"):
        assert max(highest_root_marks(root_system(name))) <= 4
    for n in range(1, 9):
        assert set(highest_root_marks(root_system(f"A{n}"))) == {1}


def test_highest_root_dominant_and_unique():
    for name in ("E8", "F4", "G2", "D5", "B3", "C4"):
        rs = root_system(name)
        fund = rs.root_to_weight(rs.highest_root)
        assert rs.is_dominant(fund)
        assert all(m >= 1 for m in rs.marks)
        by_height = sorted(rs.positive_roots, key=sum)
        assert by_height[-1] == rs.highest_root
        assert sum(by_height[-2]) < sum(rs.highest_root)


def test_weyl_orbit_examples():
    e8 = root_system("E8")
    zero = (0,) * 8
    assert weyl_orbit(e8, zero) == frozenset({zero})
    orbit = weyl_orbit(e8, e8.root_to_weight(e8.highest_root))
    assert len(orbit) == 240
    assert orbit == frozenset(e8.root_to_weight(a) for a in e8.all_roots)
    a2 = root_system("A2")
    assert len(weyl_orbit(a2, (1, 0))) == 3


@pytest.mark.parametrize(
    "name,order,expected",
    [
        ("A5", 2, "C3"),
        ("A4", 2, "B2"),
        ("A2", 2, "B1"),
        ("D4", 3, "G2"),
        ("D6", 2, "B5"),
        ("E6", 2, "F4"),
    ],
)
def test_fold(name, order, expected):
    assert str(fold(root_system(name), order)) == expected


def test_fold_rejects_missing_automorphism():
    for name, order in [("B3", 2), ("A1", 2), ("E7", 2), ("D5", 3), ("G2", 2)]:
        with pytest.raises(ValueError):
            fold(root_system(name), order)


def test_fold_matches_folding_table():
    from lca.tabver import load_tables

    # the first row listed per (family, order) is the generic one
    generic = {}
    for family, order, result, _constraint in load_tables().foldings:
        generic.setdefault((family, order), result)
    for n in range(2, 9):
        assert str(fold(root_system(f"A{n}"), 2)) == generic[
            ("A{2n}" if n % 2 == 0 else "A{2n-1}", 2)
        ].replace("{n}", str((n + 1) // 2))
    for n in range(3, 9):
        assert str(fold(root_system(f"D{n}"), 2)) == generic[("D{n}", 2)].replace(
            "{n-1}", str(n - 1)
        )
    assert str(fold(root_system("D4"), 3)) == generic[("D4", 3)]
    assert str(fold(root_system("E6"), 2)) == generic[("E6", 2)]


def test_semisimple_label_arithmetic():
    label = SemisimpleTypeLabel.parse("~A1^2*B1^2*B2")
    assert label.dimension == 3 + 3 + 3 + 3 + 10
    assert label.rank == 6
    assert str(label.plain()) == "A1^2*B1^2*B2"
    assert label.same_type(SemisimpleTypeLabel.parse("B1*A1*B1*~A1*B2"))
    assert SemisimpleTypeLabel.parse("B1").dimension == SemisimpleTypeLabel.parse("A1").dimension
    assert SemisimpleTypeLabel.parse("A1*E7").dimension == 136
    assert str(SemisimpleTypeLabel.parse("A1*A1*A1")) == "A1^3"


def test_classify_subdiagram_on_extended_deletions():
    expected = {
        ("E8", 1): "D8",
        ("E8", 5): "A4^2",
        ("E7", 4): "A1*A3^2",
        ("F4", 1): "A1*C3",
        ("F4", 3): "A1*A3",
        ("G2", 1): "A2",
    }
    for (name, node), label in expected.items():
        rs = root_system(name)
        nodes = [nk for nk in rs.extended_nodes() if nk[0] != node]
        comps = classify_subdiagram(rs, nodes)
        assert str(SemisimpleTypeLabel.of(*[t for t, _ in comps])) == label


def test_product_root_system():
    prod = ProductRootSystem([root_system("B2"), root_system("B2")])
    assert prod.rank == 4
    assert len(prod.positive_roots_fund) == 8
    orbit = prod.weyl_orbit((1, 0, 1, 0))
    assert len(orbit) == 16
    assert prod.label() == "B2*B2"


def test_root_system_shared_instance():
    assert root_system("E8") is root_system("E8")


def test_adjoint_dimension_consistent_with_weyl_formula():
    from lca.repth import weyl_dimension

    for name in ("E8", "E6", "F4", "G2", "B4", "D5", "A3", "C3"):
        rs = root_system(name)
        adjoint_weight = rs.root_to_weight(rs.highest_root)
        assert len(rs.all_roots) + rs.rank == weyl_dimension(rs, adjoint_weight)
