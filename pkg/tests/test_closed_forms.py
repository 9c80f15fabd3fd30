"""Tests related to the closed forms of the covering polynomials."""

import pytest
from covering_polynomials.closed_forms import (
    Which,
    ab_degree_gap,
    ab_deviation_at_one_by_long_simples,
    bc_edge_count,
    delta_ab_at_one,
    dn_ab_upper_alternative,
    e_chain_upper,
    narayana_polynomial,
    q_minus_one_report,
    recurrence_check,
    table1,
    table2,
    table3,
    with_zero_deviation,
    without_simples_deviation,
)
from covering_polynomials.ideals import ad_polynomial
from covering_polynomials.polynomial import Polynomial
from covering_polynomials.poset import (
    lower_covering_polynomial,
    upper_covering_polynomial,
)
from covering_polynomials.root_system import RootSystemType, build


@pytest.mark.parametrize(
    "family, rank, which, expected",
    [
        ("D", 5, "upper", (5, 2, 11, 2)),
        ("BC", 2, "lower", (1, 4, 1)),
        ("A", 3, "upper", (3, 0, 3)),
        ("E", 8, "deviation", (7,)),
        ("G", 2, Which.LOWER, (1, 5)),
    ],
)
def test_table1_values(family, rank, which, expected) -> None:
    assert table1(family, rank, which) == Polynomial(expected)


@pytest.mark.parametrize(
    "text", ["A1", "A5", "B4", "C4", "D4", "D6", "E6", "E7", "F4", "G2", "BC1", "BC4"]
)
def test_table1_matches_root_poset(text) -> None:
    root_system = build(text)
    poset = root_system.root_poset
    family, rank = root_system.type.family, root_system.rank
    assert upper_covering_polynomial(poset) == table1(family, rank, Which.UPPER)
    assert lower_covering_polynomial(poset) == table1(family, rank, Which.LOWER)
    assert table1(family, rank, Which.DEVIATION) == Polynomial((rank - 1,))


def test_narayana_polynomial() -> None:
    assert narayana_polynomial(3) == Polynomial((1, 6, 6, 1))


class TestTable2:
    def test_type_a(self) -> None:
        assert table2("A", 4) == narayana_polynomial(3)

    def test_type_b(self) -> None:
        assert table2("B", 3) == Polynomial((1, 6, 3))

    def test_exceptional(self) -> None:
        assert table2("F", 4) == Polynomial((1, 20, 35, 10))

    def test_bc(self) -> None:
        with pytest.raises(ValueError):
            table2("BC", 3)


@pytest.mark.parametrize(
    "family, rank, which, expected",
    [
        ("A", 3, "upper", (1, 6, 1)),
        ("D", 4, "lower", (4, 5, 6, 1)),
        ("C", 5, "deviation", ()),
        ("E", 7, "deviation", (-6, -13)),
    ],
)
def test_table3_values(family, rank, which, expected) -> None:
    assert table3(family, rank, which) == Polynomial(expected)


def test_table3_rejects_bc() -> None:
    with pytest.raises(ValueError):
        table3("BC", 3, "upper")


@pytest.mark.parametrize("rank", range(4, 9))
def test_dn_upper_alternative(rank) -> None:
    assert dn_ab_upper_alternative(rank) == table3("D", rank, Which.UPPER)


class TestExceptionalSeries:
    def test_e3(self) -> None:
        assert e_chain_upper(3) == Polynomial((1, 3)) * Polynomial((1, 1))

    def test_rank_nine_needs_flag(self) -> None:
        with pytest.raises(ValueError):
            e_chain_upper(9)

    def test_rank_nine(self) -> None:
        expected = 2 * e_chain_upper(8) + Polynomial((-1, 1)) * e_chain_upper(7)
        assert e_chain_upper(9, speculative=True) == expected

    def test_rank_two(self) -> None:
        with pytest.raises(ValueError):
            e_chain_upper(2)


@pytest.mark.parametrize("family", ["A", "B", "C", "D", "E"])
def test_recurrence(family) -> None:
    assert recurrence_check(family, n_max=10)


def test_recurrence_of_unknown_family() -> None:
    with pytest.raises(ValueError):
        recurrence_check("F", n_max=4)


@pytest.mark.parametrize(
    "text, expected",
    [("A4", 4), ("B3", 1), ("C5", 0), ("D5", 6), ("E8", 26), ("F4", 1), ("G2", 0)],
)
def test_delta_ab_at_one(text, expected) -> None:
    root_type = RootSystemType.from_string(text)
    assert delta_ab_at_one(root_type) == expected
    deviation = table3(root_type.family, root_type.rank, Which.DEVIATION)
    assert -deviation.evaluate(1) == expected


@pytest.mark.parametrize(
    "text, expected", [("A4", 4), ("B3", 1), ("C3", 0), ("F4", 1), ("G2", 0)]
)
def test_deviation_by_long_simple_roots(text, expected) -> None:
    assert ab_deviation_at_one_by_long_simples(build(text)) == expected


def test_deviation_by_long_simple_roots_with_branching() -> None:
    with pytest.raises(ValueError):
        ab_deviation_at_one_by_long_simples(build("D4"))


@pytest.mark.parametrize("text, expected", [("A4", 1), ("A3", 0), ("D5", 0)])
def test_degree_gap(text, expected) -> None:
    assert ab_degree_gap(RootSystemType.from_string(text)) == expected


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_bc_edge_count(rank) -> None:
    polynomial = ad_polynomial(build(RootSystemType("BC", rank)))
    assert bc_edge_count(rank) == polynomial.derivative_at_one()


class TestQMinusOne:
    def test_a1(self) -> None:
        report = q_minus_one_report(build("A1"))
        assert report.values == {
            "positive-roots": (1, 1),
            "ad": (0, 0),
            "ad0": (1, 1),
            "ab": (0, 0),
        }

    def test_bc_has_no_abelian_ideals(self) -> None:
        assert q_minus_one_report(build("BC2")).values["ab"] is None


class TestDerivedRootPosets:
    @pytest.mark.parametrize(
        "rank, expected", [(1, ()), (2, ()), (3, (0, -1)), (5, (0, -3, -2, -1))]
    )
    def test_with_zero(self, rank, expected) -> None:
        assert with_zero_deviation(rank) == Polynomial(expected)

    def test_with_zero_of_rank_zero(self) -> None:
        with pytest.raises(ValueError):
            with_zero_deviation(0)

    @pytest.mark.parametrize(
        "text, expected",
        [("A5", (3,)), ("D5", (3, 1)), ("E7", (5, 1)), ("BC3", (2,)), ("BC1", ())],
    )
    def test_without_simples(self, text, expected) -> None:
        assert without_simples_deviation(build(text)) == Polynomial(expected)

    def test_without_simples_of_rank_one(self) -> None:
        with pytest.raises(ValueError):
            without_simples_deviation(build("A1"))
