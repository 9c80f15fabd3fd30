"""Closed forms of the covering polynomials, used as oracles for the enumerations.

The classical series are given by binomial sums in the rank; the exceptional types are
stored as coefficient tuples in ascending powers of `q`.
"""

from dataclasses import dataclass
from enum import Enum
import logging

from .abelian import ab_covering_polynomials, enumerate_minuscule
from .ideals import ad0_dn_conjecture, ad0_polynomial, ad_polynomial, bc_ad_closed_form
from .polynomial import ONE, Q, Polynomial
from .poset import lower_covering_polynomial, upper_covering_polynomial
from .root_system import (
    RootSystem,
    RootSystemType,
    has_branching_node,
    long_simple_roots,
)
from .utils import binomial


logger = logging.getLogger(__name__)


class Which(str, Enum):
    """Which of the polynomials attached to a poset is meant."""

    UPPER = "upper"
    LOWER = "lower"
    DEVIATION = "deviation"


# Covering polynomials of the positive roots, as (upper, lower)
TABLE1_EXCEPTIONAL: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = {
    "E6": ((6, 5, 20, 5), (1, 15, 15, 5)),
    "E7": ((7, 10, 36, 10), (1, 22, 30, 10)),
    "E8": ((8, 21, 70, 21), (1, 35, 63, 21)),
    "F4": ((4, 7, 12, 1), (1, 13, 9, 1)),
    "G2": ((2, 3, 1), (1, 5)),
}

# Covering polynomials of the strictly positive ideals
TABLE2_EXCEPTIONAL: dict[str, tuple[int, ...]] = {
    "E6": (1, 30, 135, 175, 70, 7),
    "E7": (1, 56, 420, 952, 770, 216, 16),
    "E8": (1, 112, 1323, 4774, 6622, 3696, 770, 44),
    "F4": (1, 20, 35, 10),
    "G2": (1, 4),
}

# Polynomials of the abelian ideals, as (upper, lower, deviation)
TABLE3_EXCEPTIONAL: dict[str, tuple[tuple[int, ...], ...]] = {
    "E6": ((1, 25, 27, 11), (6, 21, 20, 17), (-5, -6)),
    "E7": ((1, 34, 60, 30, 3), (7, 35, 40, 43, 3), (-6, -13)),
    "E8": ((1, 44, 118, 76, 17), (8, 49, 87, 95, 17), (-7, -19)),
    "F4": ((1, 10, 5), (2, 8, 6), (-1,)),
    "G2": ((1, 3), (1, 3), ()),
}

# Values of -Delta(1) for the abelian ideals of the exceptional types
DELTA_AB_AT_ONE_EXCEPTIONAL: dict[str, int] = dict(E6=11, E7=19, E8=26, F4=1, G2=0)

# First rank at which the recurrence relates three valid ranks of a classical series
RECURRENCE_START: dict[str, int] = dict(A=3, B=4, C=4, D=6)


def _binomial_sum(terms, degree: int) -> Polynomial:
    """The polynomial `sum_{k=0}^{degree} terms(k) q^k`."""
    return Polynomial(tuple(terms(k) for k in range(degree + 1)))


def table1(family: str, rank: int, which: Which | str) -> Polynomial:
    """The closed form of a covering polynomial of the positive roots.

    Args:
        family:
            The family of the root system, BC included.
        rank:
            The rank.
        which:
            Upper, lower, or the deviation polynomial, which is always `n - 1`.

    Returns:
        The polynomial.

    Raises:
        InvalidRankError:
            If the type does not exist.
    """
    root_type, which, n = RootSystemType(family, rank), Which(which), rank
    if which == Which.DEVIATION:
        return (
            table1(family, rank, Which.UPPER) - table1(family, rank, Which.LOWER)
        ).divide_by_q_minus_one_squared()

    upper: tuple[int, ...]
    lower: tuple[int, ...]
    match root_type.family:
        case "A":
            upper = (n, 0, binomial(n, 2))
            lower = (1, 2 * n - 2, binomial(n - 1, 2))
        case "B" | "C":
            upper = (n, n - 1, (n - 1) ** 2)
            lower = (1, 3 * n - 3, (n - 1) * (n - 2))
        case "BC":
            upper = (n, n, n * (n - 1))
            lower = (1, 3 * n - 2, (n - 1) ** 2)
        case "D":
            upper = (n, n - 3, binomial(n, 2) + binomial(n - 3, 2), n - 3)
            lower = (1, 3 * n - 5, binomial(n - 1, 2) + binomial(n - 3, 2), n - 3)
        case _:
            upper, lower = TABLE1_EXCEPTIONAL[str(root_type)]
    return Polynomial(upper if which == Which.UPPER else lower)


def with_zero_deviation(rank: int) -> Polynomial:
    """The deviation `-(q^(n-2) + 2 q^(n-3) + ... + (n - 2) q)` of the roots with `0`.

    It does not depend on the type, since the new minimum only touches the simple
    roots.

    >>> str(with_zero_deviation(4))
    '-2q - q^2'
    """
    if rank < 1:
        raise ValueError(f"The rank must be positive, got {rank}")
    return Polynomial((0,) + tuple(k + 1 - rank for k in range(1, rank - 1)))


def without_simples_deviation(root_system: RootSystem) -> Polynomial:
    """The deviation of the non-simple positive roots.

    This is `n - 2`, or `q + n - 2` when the Dynkin diagram has a branching node. For
    `BC_n` it is `n - 1`, as the poset is that of `B_{n+1}` without its simple roots.

    Raises:
        ValueError:
            If the rank is 1 and the root system is reduced.
    """
    n = root_system.rank
    if not root_system.type.is_reduced:
        return Polynomial.constant(n - 1)
    if n < 2:
        raise ValueError("Removing the simple roots of a rank 1 system leaves nothing")
    if has_branching_node(root_system):
        return Polynomial((n - 2, 1))
    return Polynomial.constant(n - 2)


def narayana_polynomial(m: int) -> Polynomial:
    """The Narayana polynomial `sum_k C(m + 1, k) C(m + 1, k + 1) / (m + 1) q^k`.

    It is the covering polynomial of the lattice of upper ideals of the positive roots
    of `A_m`.

    >>> str(narayana_polynomial(2))
    '1 + 3q + q^2'
    """
    if m < 0:
        raise ValueError(f"The index must be non-negative, got {m}")
    return _binomial_sum(
        lambda k: binomial(m + 1, k) * binomial(m + 1, k + 1) // (m + 1), degree=m
    )


def table2(family: str, rank: int) -> Polynomial:
    """The covering polynomial of the strictly positive ideals.

    For `D_n` this is the conjectural formula, which has been checked for small ranks.

    Raises:
        ValueError:
            For `BC_n`, whose strictly positive ideals are not considered.
    """
    root_type = RootSystemType(family, rank)
    match root_type.family:
        case "A":
            return narayana_polynomial(rank - 1)
        case "B" | "C":
            return bc_ad_closed_form(rank - 1)
        case "D":
            return ad0_dn_conjecture(rank)
        case "BC":
            raise ValueError("Strictly positive ideals are not tabulated for BC")
        case _:
            return Polynomial(TABLE2_EXCEPTIONAL[str(root_type)])


def table3(family: str, rank: int, which: Which | str) -> Polynomial:
    """The closed form of a polynomial of the abelian ideals.

    Args:
        family:
            The family of a reduced root system.
        rank:
            The rank.
        which:
            Upper, lower or deviation. The deviation carries its sign.

    Returns:
        The polynomial.

    Raises:
        ValueError:
            For `BC_n`, whose abelian ideals are those of `C_n`.
    """
    root_type, which, n = RootSystemType(family, rank), Which(which), rank
    if not root_type.is_reduced:
        raise ValueError(f"Abelian ideals of {root_type} are those of C{rank}")

    degree = n + 2
    c = binomial
    match root_type.family, which:
        case "A" | "B" | "C", Which.UPPER:
            return _binomial_sum(lambda k: c(n + 1, 2 * k), degree)
        case "A", Which.LOWER:
            return _binomial_sum(lambda k: c(n, 2 * k + 1) + c(n, 2 * k - 2), degree)
        case "A", Which.DEVIATION:
            return -_binomial_sum(lambda k: c(n - 1, 2 * k + 1), degree)
        case "B", Which.LOWER:
            return _binomial_sum(
                lambda k: c(n - 1, 2 * k + 1) + c(n, 2 * k - 1) + c(n - 1, 2 * k - 2),
                degree,
            )
        case "B", Which.DEVIATION:
            return -_binomial_sum(lambda k: c(n - 2, 2 * k + 1), degree)
        case "C", Which.LOWER:
            return _binomial_sum(lambda k: c(n + 1, 2 * k), degree)
        case "C", Which.DEVIATION:
            return Polynomial()
        case "D", Which.UPPER:
            return _binomial_sum(
                lambda k: c(n + 2, 2 * k) - 4 * c(n - 1, 2 * k - 2), degree
            )
        case "D", Which.LOWER:
            return _binomial_sum(lambda k: c(n, 2 * k + 1) + c(n, 2 * k - 2), degree)
        case "D", Which.DEVIATION:
            return -_binomial_sum(
                lambda k: c(n - 2, 2 * k + 1) + c(n - 3, 2 * k), degree
            )
    upper, lower, deviation = TABLE3_EXCEPTIONAL[str(root_type)]
    return Polynomial(dict(upper=upper, lower=lower, deviation=deviation)[which.value])


def dn_ab_upper_alternative(rank: int) -> Polynomial:
    """The second printed form of the upper polynomial of the abelian ideals of `D_n`.

    The coefficient of `q^k` is `C(n, 2k) + C(n - 1, 2k - 1) + C(n - 2, 2k - 1) +
    C(n - 2, 2k - 4)`, which agrees with `table3("D", n, "upper")`.
    """
    n, c = rank, binomial
    return _binomial_sum(
        lambda k: c(n, 2 * k)
        + c(n - 1, 2 * k - 1)
        + c(n - 2, 2 * k - 1)
        + c(n - 2, 2 * k - 4),
        degree=n + 2,
    )


def e_chain_upper(rank: int, speculative: bool = False) -> Polynomial:
    """The upper polynomial of the abelian ideals along the exceptional series.

    The series starts with `E3 = A2 x A1`, `E4 = A4` and `E5 = D5`. The value at rank 9
    is the extrapolation by the recurrence and has no known meaning.

    Args:
        rank:
            The rank, between 3 and 9.
        speculative:
            Whether to allow the extrapolation to rank 9.

    Returns:
        The polynomial.
    """
    match rank:
        case 3:
            return table3("A", 2, Which.UPPER) * table3("A", 1, Which.UPPER)
        case 4:
            return table3("A", 4, Which.UPPER)
        case 5:
            return table3("D", 5, Which.UPPER)
        case 6 | 7 | 8:
            return table3("E", rank, Which.UPPER)
        case 9 if speculative:
            return 2 * e_chain_upper(8) + (Q - ONE) * e_chain_upper(7)
    raise ValueError(
        f"The exceptional series is defined for ranks 3 to 8, got {rank}; rank 9 needs "
        "the speculative flag"
    )


def recurrence_check(family: str, n_max: int) -> bool:
    """Whether `K_n = 2 K_{n-1} + (q - 1) K_{n-2}` holds along a series.

    For the classical families both covering polynomials of the abelian ideals are
    checked. For the family `E` only the upper one is, along `E3, ..., E8`.

    Args:
        family:
            One of `A, B, C, D, E`.
        n_max:
            The largest rank `n` to check.

    Returns:
        Whether the recurrence holds at every rank up to `n_max`.
    """
    shift = Q - ONE
    if family == "E":
        return all(
            e_chain_upper(n) == 2 * e_chain_upper(n - 1) + shift * e_chain_upper(n - 2)
            for n in range(5, min(n_max, 8) + 1)
        )
    if family not in RECURRENCE_START:
        raise ValueError(f"No recurrence is known for the family {family}")
    for n in range(RECURRENCE_START[family], n_max + 1):
        for which in (Which.UPPER, Which.LOWER):
            previous = table3(family, n - 1, which)
            expected = 2 * previous + shift * table3(family, n - 2, which)
            if table3(family, n, which) != expected:
                logger.warning(f"The recurrence fails for {family}{n} ({which.value}).")
                return False
    return True


def delta_ab_at_one(root_type: RootSystemType) -> int:
    """The value `-Delta(1)` for the abelian ideals, by the known series formulas."""
    if not root_type.is_reduced:
        raise ValueError(
            f"Abelian ideals of {root_type} are those of C{root_type.rank}"
        )
    n = root_type.rank
    match root_type.family:
        case "A":
            return 2 ** (n - 2) if n >= 2 else 0
        case "B":
            return 2 ** (n - 3) if n >= 3 else 0
        case "C":
            return 0
        case "D":
            return 2 ** (n - 3) + 2 ** (n - 4) if n >= 4 else 2 ** (n - 2)
    return DELTA_AB_AT_ONE_EXCEPTIONAL[str(root_type)]


def ab_deviation_at_one_by_long_simples(root_system: RootSystem) -> int:
    """The value `-Delta(1)` predicted by the number of long simple roots.

    For Dynkin diagrams without branching nodes this is `2^(l - 2)`, or 0 when there
    is a single long simple root.

    Raises:
        ValueError:
            If the Dynkin diagram has a branching node.
    """
    if has_branching_node(root_system):
        raise ValueError(f"{root_system.type} has a branching node")
    long_count = len(long_simple_roots(root_system))
    return 0 if long_count == 1 else 2 ** (long_count - 2)


def ab_degree_gap(root_type: RootSystemType) -> int:
    """The difference `deg K^low - deg K^up` for the abelian ideals.

    It is 1 exactly for `A_{2m}`, whose Coxeter number is odd, and 0 otherwise.
    """
    return int(root_type.family == "A" and root_type.rank % 2 == 0)


def bc_edge_count(rank: int) -> int:
    """The number of edges `(n + 1) C(2n, n + 1)` of the ideal lattice of `BC_n`."""
    return (rank + 1) * binomial(2 * rank, rank + 1)


@dataclass(frozen=True)
class QMinusOneReport:
    """The values of the covering polynomials at `q = -1`.

    Attributes:
        type:
            The root system type.
        values:
            For each of the posets `positive-roots`, `ad`, `ad0` and `ab`, the pair
            `(K^up(-1), K^low(-1))`, or None where the poset is not defined.
    """

    type: RootSystemType
    values: dict[str, tuple[int, int] | None]


def q_minus_one_report(root_system: RootSystem) -> QMinusOneReport:
    """Evaluate the covering polynomials of the four posets at `q = -1`."""
    poset = root_system.root_poset
    values: dict[str, tuple[int, int] | None] = {
        "positive-roots": (
            upper_covering_polynomial(poset).evaluate(-1),
            lower_covering_polynomial(poset).evaluate(-1),
        )
    }
    ad_value = ad_polynomial(root_system).evaluate(-1)
    values["ad"] = (ad_value, ad_value)
    if root_system.rank >= 2:
        ad0_value = ad0_polynomial(root_system).evaluate(-1)
    else:
        ad0_value = 1
    values["ad0"] = (ad0_value, ad0_value)
    if root_system.type.is_reduced:
        upper, lower, _ = ab_covering_polynomials(enumerate_minuscule(root_system))
        values["ab"] = (upper.evaluate(-1), lower.evaluate(-1))
    else:
        values["ab"] = None
    return QMinusOneReport(type=root_system.type, values=values)
