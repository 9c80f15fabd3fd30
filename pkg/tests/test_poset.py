"""Tests related to finite posets and their covering polynomials."""

import random

from hypothesis import given, settings, strategies as st
import pytest
from covering_polynomials.polynomial import Polynomial
from covering_polynomials.poset import (
    ISOMORPHISM_LIMIT,
    BudgetExceededError,
    CycleDetectedError,
    NotGradedError,
    NotUniqueError,
    Poset,
    UpperIdeal,
    antichain,
    antichain_polynomial,
    chain,
    deviation_polynomial,
    direct_product,
    disjoint_sum,
    from_relations,
    from_text,
    is_distributive_lattice,
    is_graded,
    is_isomorphic,
    is_lattice,
    is_order_isomorphism,
    lower_covering_polynomial,
    opposite,
    random_poset,
    rank_function,
    read_poset,
    remove_bottom,
    remove_top,
    to_text,
    triple_counts,
    truncation,
    upper_covering_polynomial,
    upper_ideal_lattice,
    upper_ideals,
    write_poset,
)


@st.composite
def posets(draw, max_size: int = 8) -> Poset:
    """Random posets given by relations `i < j` between indices `i < j`."""
    size = draw(st.integers(min_value=1, max_value=max_size))
    pairs = [
        (i, j)
        for i in range(size)
        for j in range(i + 1, size)
        if draw(st.booleans())
    ]
    return from_relations(labels=list(range(size)), pairs=pairs)


def diamond() -> Poset:
    return from_relations(
        labels=["bottom", "left", "right", "top"],
        pairs=[
            ("bottom", "left"),
            ("bottom", "right"),
            ("left", "top"),
            ("right", "top"),
        ],
    )


def pentagon() -> Poset:
    return from_relations(
        labels=["0", "a", "b", "c", "1"],
        pairs=[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )


class TestConstruction:
    def test_transitive_relations_are_reduced(self) -> None:
        poset = from_relations(
            labels=["a", "b", "c"], pairs=[("a", "b"), ("b", "c"), ("a", "c")]
        )
        assert poset.hasse_edges() == [(0, 1), (1, 2)]

    def test_empty_relation_gives_antichain(self) -> None:
        poset = from_relations(labels=[0, 1, 2], pairs=[])
        assert poset.edge_count == 0
        assert poset.size == 3

    def test_self_pairs_are_ignored(self) -> None:
        poset = from_relations(labels=["a", "b"], pairs=[("a", "a"), ("a", "b")])
        assert poset.edge_count == 1

    def test_cycle_is_rejected(self) -> None:
        with pytest.raises(CycleDetectedError):
            from_relations(labels=["a", "b"], pairs=[("a", "b"), ("b", "a")])

    def test_leq(self) -> None:
        poset = chain(3)
        assert poset.leq(0, 2)
        assert not poset.leq(2, 0)
        assert poset.leq(1, 1)

    def test_repr(self) -> None:
        assert repr(chain(3)) == "Poset(size=3, edges=2)"


class TestCoveringPolynomials:
    def test_antichain(self) -> None:
        assert upper_covering_polynomial(antichain(4)) == Polynomial((4,))

    def test_chain(self) -> None:
        assert lower_covering_polynomial(chain(3)) == Polynomial((1, 2))
        assert upper_covering_polynomial(chain(3)) == Polynomial((1, 2))

    def test_diamond_has_no_deviation(self) -> None:
        assert deviation_polynomial(diamond()) == Polynomial()

    def test_constant_terms_count_extremal_elements(self) -> None:
        poset = from_relations(labels=[0, 1, 2], pairs=[(0, 1), (0, 2)])
        assert upper_covering_polynomial(poset).coefficient(0) == 1
        assert lower_covering_polynomial(poset).coefficient(0) == 2

    @given(poset=posets())
    def test_values_and_derivatives_at_one(self, poset) -> None:
        upper = upper_covering_polynomial(poset)
        lower = lower_covering_polynomial(poset)
        assert upper.evaluate(1) == lower.evaluate(1) == poset.size
        assert upper.derivative_at_one() == lower.derivative_at_one()
        assert upper.derivative_at_one() == poset.edge_count

    @given(poset=posets())
    def test_deviation_reconstructs_difference(self, poset) -> None:
        upper = upper_covering_polynomial(poset)
        lower = lower_covering_polynomial(poset)
        deviation = deviation_polynomial(poset)
        square = Polynomial((1, -2, 1))
        assert upper - lower == square * deviation

    @given(poset=posets())
    def test_triple_counts(self, poset) -> None:
        wedge, vee = triple_counts(poset)
        assert wedge - vee == 2 * deviation_polynomial(poset).evaluate(1)

    def test_triple_counts_of_chain(self) -> None:
        assert triple_counts(chain(4)) == (0, 0)


class TestConstructions:
    @given(a=posets(max_size=5), b=posets(max_size=5))
    def test_disjoint_sum(self, a, b) -> None:
        total = disjoint_sum(a, b)
        assert upper_covering_polynomial(total) == upper_covering_polynomial(
            a
        ) + upper_covering_polynomial(b)
        assert deviation_polynomial(total) == deviation_polynomial(
            a
        ) + deviation_polynomial(b)

    @given(a=posets(max_size=4), b=posets(max_size=4))
    def test_direct_product(self, a, b) -> None:
        product = direct_product(a, b)
        upper_a, upper_b = upper_covering_polynomial(a), upper_covering_polynomial(b)
        lower_a, lower_b = lower_covering_polynomial(a), lower_covering_polynomial(b)
        deviation_a, deviation_b = deviation_polynomial(a), deviation_polynomial(b)
        assert upper_covering_polynomial(product) == upper_a * upper_b
        assert lower_covering_polynomial(product) == lower_a * lower_b
        assert deviation_polynomial(product) == upper_a * deviation_b + lower_b * (
            deviation_a
        )
        assert deviation_polynomial(product) == lower_a * deviation_b + upper_b * (
            deviation_a
        )

    @given(poset=posets(max_size=5))
    def test_opposite(self, poset) -> None:
        flipped = opposite(poset)
        assert upper_covering_polynomial(flipped) == lower_covering_polynomial(poset)
        assert deviation_polynomial(flipped) == -deviation_polynomial(poset)
        assert deviation_polynomial(direct_product(poset, flipped)) == Polynomial()

    def test_product_labels(self) -> None:
        product = direct_product(chain(2), antichain(2))
        assert product.labels == ((0, 0), (0, 1), (1, 0), (1, 1))
        assert product.edge_count == 2


class TestAntichains:
    def test_empty_poset(self) -> None:
        assert antichain_polynomial(antichain(0)) == Polynomial((1,))

    def test_antichain(self) -> None:
        assert antichain_polynomial(antichain(3)) == Polynomial((1, 3, 3, 1))

    def test_chain(self) -> None:
        assert antichain_polynomial(chain(4)) == Polynomial((1, 4))

    def test_count_with_limit(self) -> None:
        assert antichain(10).count_antichains(limit=5) == 6
        assert antichain(3).count_antichains() == 8


class TestUpperIdeals:
    def test_ideals_of_antichain(self) -> None:
        assert upper_ideals(antichain(2)) == [0b00, 0b01, 0b10, 0b11]

    def test_budget(self) -> None:
        with pytest.raises(BudgetExceededError):
            upper_ideals(antichain(5), budget=10)

    def test_boolean_lattice(self) -> None:
        lattice = upper_ideal_lattice(antichain(2))
        assert lattice.size == 4
        assert upper_covering_polynomial(lattice) == Polynomial((1, 2, 1))
        assert is_distributive_lattice(lattice)

    def test_labels_are_ideals(self) -> None:
        lattice = upper_ideal_lattice(chain(2))
        assert lattice.labels == (
            UpperIdeal(members=0b00),
            UpperIdeal(members=0b10),
            UpperIdeal(members=0b11),
        )
        assert str(lattice.labels[-1]) == "{0,1}"

    @settings(max_examples=30)
    @given(poset=posets(max_size=7))
    def test_lattice_of_ideals(self, poset) -> None:
        lattice = upper_ideal_lattice(poset)
        assert deviation_polynomial(lattice) == Polynomial()
        assert upper_covering_polynomial(lattice) == antichain_polynomial(poset)
        assert is_distributive_lattice(lattice)

    def test_truncation(self) -> None:
        lattice = upper_ideal_lattice(antichain(3))
        truncated = truncation(lattice, max_size=1)
        assert truncated.size == 4
        assert upper_covering_polynomial(truncated) == Polynomial((1, 3))


class TestRemovals:
    def test_remove_top_of_chain(self) -> None:
        assert remove_top(chain(2)).size == 1

    def test_remove_bottom_of_boolean_lattice(self) -> None:
        lattice = upper_ideal_lattice(antichain(3))
        assert deviation_polynomial(remove_bottom(lattice)) == Polynomial((2, 1))

    def test_remove_top_of_boolean_lattice(self) -> None:
        lattice = upper_ideal_lattice(antichain(3))
        assert deviation_polynomial(remove_top(lattice)) == Polynomial((-2, -1))

    def test_no_unique_top(self) -> None:
        with pytest.raises(NotUniqueError):
            remove_top(antichain(2))

    def test_no_unique_bottom(self) -> None:
        with pytest.raises(NotUniqueError):
            remove_bottom(antichain(2))


class TestLattices:
    def test_diamond(self) -> None:
        assert is_lattice(diamond())
        assert is_distributive_lattice(diamond())

    def test_pentagon_is_not_distributive(self) -> None:
        assert is_lattice(pentagon())
        assert not is_distributive_lattice(pentagon())

    def test_antichain_is_not_lattice(self) -> None:
        assert not is_lattice(antichain(2))

    def test_missing_meet(self) -> None:
        poset = from_relations(
            labels=["a", "b", "c", "d", "top"],
            pairs=[
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "top"),
                ("d", "top"),
            ],
        )
        assert not is_lattice(poset)


class TestGrading:
    def test_chain_is_graded(self) -> None:
        assert rank_function(chain(3)) == (0, 1, 2)

    def test_pentagon_is_not_graded(self) -> None:
        assert not is_graded(pentagon())
        with pytest.raises(NotGradedError):
            rank_function(pentagon())


class TestIsomorphisms:
    def test_order_isomorphism(self) -> None:
        a = from_relations(labels=["x", "y"], pairs=[("x", "y")])
        b = from_relations(labels=["u", "v"], pairs=[("u", "v")])
        assert is_order_isomorphism(a, b, mapping=dict(x="u", y="v"))
        assert not is_order_isomorphism(a, b, mapping=dict(x="v", y="u"))

    def test_diamond_is_self_dual(self) -> None:
        assert is_isomorphic(diamond(), opposite(diamond()))

    def test_chain_and_antichain(self) -> None:
        assert not is_isomorphic(chain(3), antichain(3))

    def test_self_dual_grid(self) -> None:
        grid = direct_product(chain(2), chain(4))
        assert grid.size == 8
        assert is_isomorphic(grid, opposite(grid))
        assert upper_covering_polynomial(grid) == lower_covering_polynomial(grid)

    def test_size_limit(self) -> None:
        with pytest.raises(ValueError):
            is_isomorphic(chain(ISOMORPHISM_LIMIT + 1), chain(ISOMORPHISM_LIMIT + 1))

    @settings(max_examples=30)
    @given(poset=posets(max_size=6))
    def test_self_dual_posets_have_equal_polynomials(self, poset) -> None:
        if is_isomorphic(poset, opposite(poset)):
            assert upper_covering_polynomial(poset) == lower_covering_polynomial(
                poset
            )


class TestExchangeFormat:
    def test_text_round_trip(self) -> None:
        poset = from_text(to_text(diamond()))
        assert poset.labels == ("bottom", "left", "right", "top")
        assert poset.hasse_edges() == diamond().hasse_edges()

    def test_relations_are_reduced(self) -> None:
        poset = from_text("poset 3\n0 1\n1 2\n0 2\n")
        assert poset.edge_count == 2

    def test_missing_header(self) -> None:
        with pytest.raises(ValueError):
            from_text("0 1\n")

    def test_edge_out_of_range(self) -> None:
        with pytest.raises(ValueError, match="Line 2"):
            from_text("poset 2\n0 2\n")

    def test_labels(self) -> None:
        poset = from_text("poset 2\n# label 1 top element\n0 1\n")
        assert poset.labels == ("0", "top element")

    def test_label_out_of_range(self) -> None:
        with pytest.raises(ValueError, match="Line 3"):
            from_text("poset 2\n0 1\n# label 2 missing\n")

    def test_repeated_label(self) -> None:
        with pytest.raises(ValueError, match="more than once"):
            from_text("poset 2\n# label 0 first\n# label 0 second\n")

    def test_file_round_trip(self, tmp_path) -> None:
        path = tmp_path / "pentagon.poset"
        write_poset(pentagon(), path)
        poset = read_poset(path)
        assert deviation_polynomial(poset) == deviation_polynomial(pentagon())


def test_random_poset_is_seeded(cfg) -> None:
    first, second = (
        random_poset(size=8, edge_probability=0.3, rng=random.Random(cfg.random_seed))
        for _ in range(2)
    )
    assert first.hasse_edges() == second.hasse_edges()
