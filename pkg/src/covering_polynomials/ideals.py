"""The lattices of ad-nilpotent and strictly positive ideals.

Both lattices are of the form `J*(L)`, so their covering polynomials are the antichain
polynomials of `L`, and they are computed without building the lattices.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import logging

from .polynomial import Polynomial
from .poset import Poset, antichain_polynomial, rank_function
from .root_system import RootSystem, RootSystemType, build, without_simples
from .utils import binomial


logger = logging.getLogger(__name__)


class NonIntegralError(ArithmeticError):
    """Raised when a formula that should produce an integer does not."""


class IdealFamily(str, Enum):
    """The two lattices of ideals in the positive roots."""

    AD = "ad"
    AD0 = "ad0"


@dataclass(frozen=True)
class IdealFamilyReport:
    """Size and edge data of a lattice of ideals.

    Attributes:
        type:
            The root system type.
        family:
            Whether this is the lattice of all upper ideals or of the strictly
            positive ones.
        polynomial:
            The covering polynomial, which is both the upper and the lower one.
        total:
            The number of ideals, i.e. the value of the polynomial at 1.
        edges:
            The number of Hasse edges, i.e. the derivative of the polynomial at 1.
        ratio:
            The exact ratio `edges / total`.
    """

    type: RootSystemType
    family: IdealFamily
    polynomial: Polynomial
    total: int
    edges: int
    ratio: Fraction


def ad_polynomial(root_system: RootSystem) -> Polynomial:
    """The covering polynomial of the lattice of upper ideals of the positive roots."""
    return antichain_polynomial(root_system.root_poset)


def ad0_polynomial(root_system: RootSystem) -> Polynomial:
    """The covering polynomial of the lattice of upper ideals avoiding the simple roots.

    Raises:
        ValueError:
            If the rank is 1.
    """
    return antichain_polynomial(without_simples(root_system))


def ideal_family_report(
    root_system: RootSystem, family: IdealFamily
) -> IdealFamilyReport:
    """Compute the covering polynomial, size and edge count of a lattice of ideals.

    Args:
        root_system:
            The root system.
        family:
            Which lattice to compute.

    Returns:
        The report.
    """
    if family == IdealFamily.AD:
        polynomial = ad_polynomial(root_system)
    else:
        polynomial = ad0_polynomial(root_system)
    total, edges = polynomial.evaluate(1), polynomial.derivative_at_one()
    logger.info(
        f"{family.value.upper()}({root_system.type}) has {total:,} ideals and "
        f"{edges:,} edges."
    )
    return IdealFamilyReport(
        type=root_system.type,
        family=family,
        polynomial=polynomial,
        total=total,
        edges=edges,
        ratio=Fraction(edges, total),
    )


def bc_ad_closed_form(rank: int) -> Polynomial:
    """The covering polynomial `sum_k C(n, k) C(n + 1, k) q^k` of the ideals of `BC_n`.

    >>> str(bc_ad_closed_form(2))
    '1 + 6q + 3q^2'
    """
    if rank < 1:
        raise ValueError(f"The rank must be positive, got {rank}")
    return Polynomial(
        tuple(binomial(rank, k) * binomial(rank + 1, k) for k in range(rank + 1))
    )


def ad0_dn_conjecture_coefficient(rank: int, k: int) -> int:
    """The conjectural coefficient of `q^k` in the strictly positive ideals of `D_n`.

    The value is `C(n - 1, k)^2 + (k - 2) / (n - 1) * C(n - 1, k) * C(n - 1, k - 1)`.

    Args:
        rank:
            The rank `n`, at least 4.
        k:
            The power of `q`, non-negative.

    Returns:
        The coefficient.

    Raises:
        NonIntegralError:
            If the rational value is not an integer.
    """
    if rank < 4 or k < 0:
        raise ValueError(f"Need n >= 4 and k >= 0, got n = {rank} and k = {k}")
    m = rank - 1
    correction = Fraction(k - 2, m) * binomial(m, k) * binomial(m, k - 1)
    value = binomial(m, k) ** 2 + correction
    if value.denominator != 1:
        raise NonIntegralError(f"The D{rank} coefficient of q^{k} is {value}")
    return int(value)


def ad0_dn_conjecture(rank: int) -> Polynomial:
    """The conjectural covering polynomial of the strictly positive ideals of `D_n`."""
    return Polynomial(
        tuple(ad0_dn_conjecture_coefficient(rank=rank, k=k) for k in range(rank + 1))
    )


def expected_ratio(root_type: RootSystemType, family: IdealFamily) -> Fraction:
    """The ratio of edges to ideals, `n / 2` or `(n / 2) (h - 2) / (h - 1)`.

    Raises:
        ValueError:
            If the root system is not reduced.
    """
    if not root_type.is_reduced:
        raise ValueError(
            "The ratio identities need the Coxeter number of a reduced type"
        )
    h = build(root_type).coxeter_number
    assert h is not None
    ratio = Fraction(root_type.rank, 2)
    if family == IdealFamily.AD0:
        ratio *= Fraction(h - 2, h - 1)
    return ratio


def ratio_check(report: IdealFamilyReport, which: IdealFamily | None = None) -> bool:
    """Whether the edge-to-ideal ratio of a lattice of ideals is the expected one.

    Args:
        report:
            The report to check.
        which:
            The identity to check against. Defaults to the family of the report.

    Returns:
        Whether the exact ratio matches.
    """
    family = report.family if which is None else which
    return report.ratio == expected_ratio(root_type=report.type, family=family)


def good_poset_check(lattice_base: Poset) -> bool:
    """Whether `#E(J*(L)) / #J*(L) = #L / (r + 1)`, with `r` the maximal chain size.

    Raises:
        NotGradedError:
            If `L` is not graded.
    """
    ranks = rank_function(lattice_base)
    chain_size = max(ranks) + 1 if ranks else 0
    polynomial = antichain_polynomial(lattice_base)
    total, edges = polynomial.evaluate(1), polynomial.derivative_at_one()
    return edges * (chain_size + 1) == total * lattice_base.size
