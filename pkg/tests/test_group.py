import pytest

from quandles import (
    FiniteGroup,
    InvalidTable,
    check_axioms,
    check_group,
    conj_quandle,
    conjugacy_classes,
    connected_components,
    cyclic_group,
    symmetric_group,
    trivial_quandle,
)


class TestSymmetricGroup:
    def test_orders(self):
        assert symmetric_group(1).size == 1
        assert symmetric_group(3).size == 6
        assert symmetric_group(4).size == 24

    def test_range(self):
        with pytest.raises(ValueError):
            symmetric_group(0)
        with pytest.raises(ValueError):
            symmetric_group(7)

    def test_identity_is_index_zero(self):
        g = symmetric_group(4)
        assert g.identity == 0
        assert g.labels[0] == "e"

    def test_group_laws(self):
        for n in (1, 2, 3, 4):
            assert check_group(symmetric_group(n)) is None

    def test_cycle_labels(self):
        g = symmetric_group(4)
        assert "(1 2)" in g.labels
        assert "(1 2 3 4)" in g.labels
        assert "(1 2)(3 4)" in g.labels

    def test_composition_order_applies_left_first(self):
        g = symmetric_group(3)
        a = g.labels.index("(1 2)")
        b = g.labels.index("(1 3)")
        # (1 2) then (1 3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        assert g.labels[g.mul(a, b)] == "(1 2 3)"


class TestCyclicGroup:
    def test_structure(self):
        g = cyclic_group(4)
        assert g.identity == 0
        assert g.mul(3, 2) == 1
        assert g.inv[1] == 3
        assert check_group(g) is None


class TestConjQuandle:
    def test_abelian_gives_trivial(self):
        g = cyclic_group(5)
        q = conj_quandle(g)
        assert q.table == trivial_quandle(5).table

    def test_s3_components_are_class_sizes(self, conj_s3):
        assert connected_components(conj_s3).sizes() == (1, 2, 3)

    def test_s4_component_sizes(self, conj_s4):
        assert connected_components(conj_s4).sizes() == (1, 3, 6, 6, 8)

    def test_axioms(self):
        for n in (1, 2, 3, 4):
            assert check_axioms(conj_quandle(symmetric_group(n))) is None
        for n in (1, 2, 6):
            assert check_axioms(conj_quandle(cyclic_group(n))) is None


class TestConjugacyClasses:
    def test_cyclic_all_singletons(self):
        assert conjugacy_classes(cyclic_group(4)).sizes() == (1, 1, 1, 1)

    def test_s3_classes(self):
        g = symmetric_group(3)
        classes = conjugacy_classes(g)
        by_labels = {frozenset(g.labels[i] for i in block) for block in classes.blocks}
        assert by_labels == {
            frozenset({"e"}),
            frozenset({"(1 2)", "(1 3)", "(2 3)"}),
            frozenset({"(1 2 3)", "(1 3 2)"}),
        }

    def test_s4_has_five_classes(self):
        assert len(conjugacy_classes(symmetric_group(4))) == 5

    def test_classes_equal_components_of_conjugation_quandle(self):
        for n in (1, 2, 3, 4, 5):
            g = symmetric_group(n)
            assert conjugacy_classes(g) == connected_components(conj_quandle(g))


class TestJson:
    def test_round_trip(self):
        g = symmetric_group(3)
        back = FiniteGroup.from_json(g.to_json())
        assert back.mult == g.mult
        assert back.identity == g.identity
        assert back.labels == g.labels

    def test_loader_refuses_nonassociative(self):
        # unital magma with inverses that is not associative
        mult = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(InvalidTable):
            FiniteGroup.from_json({"mult": mult, "identity": 0})

    def test_structural_errors(self):
        with pytest.raises(ValueError):
            FiniteGroup.from_json({"mult": [[0, 1]]})
        with pytest.raises(ValueError):
            FiniteGroup([[0, 1], [1, 1]])  # element 1 has no inverse
