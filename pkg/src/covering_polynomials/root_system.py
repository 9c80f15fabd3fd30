"""Irreducible root systems, their positive roots and the standard root order.

Simple roots are numbered as in the Bourbaki plates:

- `B_n`: `alpha_n` is short.
- `C_n`: `alpha_n` is long.
- `D_n`: the nodes `n - 1` and `n` are both attached to `n - 2`.
- `E_n`: the chain `1 - 3 - 4 - ... - n`, with node 2 attached to node 4.
- `F_4`: `alpha_1, alpha_2` are long.
- `G_2`: `alpha_1` is short.

The Cartan matrix follows the convention `A[i][j] = (alpha_i, alpha_j^vee)`, so that
the pairing of a root `gamma = sum_i c_i alpha_i` with `alpha_j^vee` is the dot product
of the coordinates of `gamma` with column `j`.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
import logging
import re
from typing import Iterator

from .poset import Poset


logger = logging.getLogger(__name__)


FAMILIES = ("A", "B", "C", "D", "E", "F", "G", "BC")


class InvalidRankError(ValueError):
    """Raised when a root system type has an invalid rank."""


@dataclass(frozen=True)
class RootSystemType:
    """The type of an irreducible root system, such as `E8` or `BC3`.

    Attributes:
        family:
            The Cartan-Killing family, one of `A, B, C, D, E, F, G, BC`.
        rank:
            The rank. `D2` is rejected while `D3` is accepted as an alias of `A3`.
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"Unknown root system family {self.family!r}")
        minimal_rank = dict(A=1, B=2, C=2, D=3, E=6, F=4, G=2, BC=1)[self.family]
        maximal_rank = dict(E=8, F=4, G=2).get(self.family)
        if self.rank < minimal_rank or (
            maximal_rank is not None and self.rank > maximal_rank
        ):
            raise InvalidRankError(f"There is no root system of type {self}")

    @classmethod
    def from_string(cls, text: str) -> "RootSystemType":
        """Parse a type string such as `A5`, `bc3` or `E8`.

        Raises:
            ValueError:
                If the string is not of the form family followed by rank.
        """
        match = re.fullmatch(r"\s*(BC|[A-G])\s*(\d+)\s*", text.upper())
        if match is None:
            raise ValueError(f"Cannot parse root system type {text!r}")
        return cls(family=match.group(1), rank=int(match.group(2)))

    @property
    def is_reduced(self) -> bool:
        return self.family != "BC"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def iter_types(max_rank: int, reduced: bool = False) -> Iterator[RootSystemType]:
    """Iterate over the types of rank at most `max_rank`.

    The classical series come first, then the exceptional types. `D_n` starts at rank 4,
    as `D3` is `A3`.

    Args:
        max_rank:
            The largest rank.
        reduced:
            Whether to leave out `BC_n`.

    Yields:
        The types.
    """
    for family, first in (("A", 1), ("B", 2), ("C", 2), ("D", 4), ("BC", 1)):
        if family == "BC" and reduced:
            continue
        for rank in range(first, max_rank + 1):
            yield RootSystemType(family=family, rank=rank)
    for family, rank in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if rank <= max_rank:
            yield RootSystemType(family=family, rank=rank)


@dataclass(frozen=True)
class Root:
    """A root, by its coordinates in the basis of simple roots."""

    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "Root":
        return Root(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


def simple_root(rank: int, j: int) -> Root:
    """The simple root `alpha_j`, for `1 <= j <= rank`."""
    return Root(tuple(int(i == j - 1) for i in range(rank)))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A root system with its positive roots and Cartan data.

    Attributes:
        type:
            The type of the root system.
        positive_roots:
            The positive roots, sorted by height. The first `n` are the simple roots
            `alpha_1, ..., alpha_n` in order.
        gram:
            The inner products `(alpha_i, alpha_j)`, with long roots of squared
            length 2.
        cartan:
            The Cartan matrix, `A[i][j] = (alpha_i, alpha_j^vee)`, indexed from 0.
        extended_cartan:
            The extended Cartan matrix, indexed `0..n`, where node 0 is the affine
            simple root `alpha_0 = delta - theta`.
        theta:
            The highest root. Its coordinates are the marks `c_1, ..., c_n`.
        coxeter_number:
            The Coxeter number `h`, or None for `BC_n`.
        theta_covector:
            The pairings `(alpha_i, theta^vee)` for `i = 1, ..., n`.
    """

    type: RootSystemType
    positive_roots: tuple[Root, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    extended_cartan: tuple[tuple[int, ...], ...]
    theta: Root
    coxeter_number: int | None
    theta_covector: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def index(self) -> dict[Root, int]:
        return {root: i for i, root in enumerate(self.positive_roots)}

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return self.positive_roots[: self.rank]

    @property
    def simple_bits(self) -> int:
        """The bitset of the simple roots among the positive roots."""
        return (1 << self.rank) - 1

    def norm(self, root: Root) -> Fraction:
        """The squared length `(root, root)`."""
        return _inner_product(self.gram, root.coords, root.coords)

    @cached_property
    def long_flags(self) -> tuple[bool, ...]:
        """Whether each positive root has the squared length of the highest root."""
        theta_norm = self.norm(self.theta)
        return tuple(self.norm(root) == theta_norm for root in self.positive_roots)

    @cached_property
    def sum_partners(self) -> tuple[int, ...]:
        """Per positive root, the bitset of positive roots it sums to a root with."""
        partners = [0] * len(self.positive_roots)
        for i, root in enumerate(self.positive_roots):
            for j in range(i + 1, len(self.positive_roots)):
                if root + self.positive_roots[j] in self.index:
                    partners[i] |= 1 << j
                    partners[j] |= 1 << i
        return tuple(partners)

    @cached_property
    def root_poset(self) -> Poset:
        """The positive roots under the root order."""
        upper_covers = list()
        for root in self.positive_roots:
            covers = 0
            for j in range(1, self.rank + 1):
                index = self.index.get(root + simple_root(self.rank, j))
                if index is not None:
                    covers |= 1 << index
            upper_covers.append(covers)
        return Poset.from_upper_covers(
            labels=self.positive_roots, upper_covers=upper_covers
        )

    def __repr__(self) -> str:
        return f"RootSystem({self.type}, positive_roots={len(self.positive_roots)})"


def gram_matrix(root_type: RootSystemType) -> tuple[tuple[Fraction, ...], ...]:
    """The inner products of the simple roots, with long roots of squared length 2.

    For `BC_n` this is the matrix of `B_n`, as `BC_n` shares its simple roots.
    """
    n, family = root_type.rank, root_type.family
    gram = [[Fraction(0)] * n for _ in range(n)]

    def bond(i: int, j: int, value: Fraction) -> None:
        gram[i - 1][j - 1] = gram[j - 1][i - 1] = value

    match family:
        case "A" | "D" | "E":
            for i in range(n):
                gram[i][i] = Fraction(2)
            if family == "A":
                for i in range(1, n):
                    bond(i, i + 1, Fraction(-1))
            elif family == "D":
                for i in range(1, n - 1):
                    bond(i, i + 1, Fraction(-1))
                bond(n - 2, n, Fraction(-1))
            else:
                bond(1, 3, Fraction(-1))
                bond(2, 4, Fraction(-1))
                for i in range(3, n):
                    bond(i, i + 1, Fraction(-1))
        case "B" | "BC":
            for i in range(n - 1):
                gram[i][i] = Fraction(2)
            gram[n - 1][n - 1] = Fraction(1)
            for i in range(1, n):
                bond(i, i + 1, Fraction(-1))
        case "C":
            for i in range(n - 1):
                gram[i][i] = Fraction(1)
            gram[n - 1][n - 1] = Fraction(2)
            for i in range(1, n - 1):
                bond(i, i + 1, Fraction(-1, 2))
            bond(n - 1, n, Fraction(-1))
        case "F":
            gram[0][0] = gram[1][1] = Fraction(2)
            gram[2][2] = gram[3][3] = Fraction(1)
            bond(1, 2, Fraction(-1))
            bond(2, 3, Fraction(-1))
            bond(3, 4, Fraction(-1, 2))
        case "G":
            gram[0][0] = Fraction(2, 3)
            gram[1][1] = Fraction(2)
            bond(1, 2, Fraction(-1))
    return tuple(tuple(row) for row in gram)


def cartan_matrix(
    gram: tuple[tuple[Fraction, ...], ...]
) -> tuple[tuple[int, ...], ...]:
    """The Cartan matrix `A[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`."""
    n = len(gram)
    cartan = [[2 * gram[i][j] / gram[j][j] for j in range(n)] for i in range(n)]
    assert all(entry.denominator == 1 for row in cartan for entry in row)
    return tuple(tuple(int(entry) for entry in row) for row in cartan)


def _inner_product(
    gram: tuple[tuple[Fraction, ...], ...], x: tuple[int, ...], y: tuple[int, ...]
) -> Fraction:
    n = len(gram)
    return sum(
        (x[i] * y[k] * gram[i][k] for i in range(n) for k in range(n)),
        start=Fraction(0),
    )


def _pairing_with_cartan(
    coords: tuple[int, ...], cartan: tuple[tuple[int, ...], ...], j: int
) -> int:
    return sum(c * cartan[i][j] for i, c in enumerate(coords))


def _generate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[Root]:
    """Close the simple roots under root strings, level by level in height.

    For a root `gamma` the `alpha_j`-string through it is `gamma - p alpha_j, ...,
    gamma + q alpha_j` with `p - q = (gamma, alpha_j^vee)`, and `p` is read off from the
    roots of smaller height already found.
    """
    n = len(cartan)
    simples = [simple_root(n, j) for j in range(1, n + 1)]
    found = {root.coords for root in simples}
    level = simples
    while level:
        next_level: dict[tuple[int, ...], Root] = dict()
        for root in level:
            for j, alpha in enumerate(simples):
                if root == alpha:
                    continue
                p = 0
                shifted = root - alpha
                while shifted.coords in found:
                    p += 1
                    shifted = shifted - alpha
                q = p - _pairing_with_cartan(root.coords, cartan, j)
                if q > 0:
                    raised = root + alpha
                    if raised.coords not in found:
                        next_level[raised.coords] = raised
        found.update(next_level)
        level = list(next_level.values())
    return [Root(coords) for coords in found]


def _bc_positive_roots(rank: int) -> list[Root]:
    """The positive roots of `BC_n`, from the union of the `B_n` and `C_n` lists."""
    vectors: list[tuple[int, ...]] = list()
    for i in range(rank):
        for j in range(i + 1, rank):
            for sign in (-1, 1):
                vector = [0] * rank
                vector[i], vector[j] = 1, sign
                vectors.append(tuple(vector))
        for multiple in (1, 2):
            vector = [0] * rank
            vector[i] = multiple
            vectors.append(tuple(vector))
    return [_b_coords_from_epsilon(vector) for vector in vectors]


def _b_coords_from_epsilon(vector: tuple[int, ...]) -> Root:
    """Simple-root coordinates over `alpha_k = e_k - e_{k+1}`, `alpha_n = e_n`."""
    coords, total = [], 0
    for v in vector:
        total += v
        coords.append(total)
    return Root(tuple(coords))


@cache
def _build(root_type: RootSystemType) -> RootSystem:
    n = root_type.rank
    gram = gram_matrix(root_type)
    cartan = cartan_matrix(gram)

    if root_type.is_reduced:
        roots = _generate_positive_roots(cartan)
    else:
        roots = _bc_positive_roots(n)
    roots.sort(key=lambda root: (root.height, tuple(-c for c in root.coords)))

    theta = roots[-1]
    if sum(root.height == theta.height for root in roots) != 1:
        raise RuntimeError(f"{root_type} does not have a unique highest root")

    coxeter_number = None
    if root_type.is_reduced:
        coxeter_number = theta.height + 1
        if 2 * len(roots) != n * coxeter_number:
            raise RuntimeError(
                f"{root_type} has {len(roots)} positive roots, which is "
                f"inconsistent with the Coxeter number {coxeter_number}"
            )

    # (alpha_i, theta^vee) = 2 (alpha_i, theta) / (theta, theta)
    theta_norm = _inner_product(gram, theta.coords, theta.coords)
    covector = [
        2 * sum((gram[i][k] * theta.coords[k] for k in range(n)), start=Fraction(0))
        / theta_norm
        for i in range(n)
    ]
    assert all(value.denominator == 1 for value in covector)
    theta_covector = tuple(int(value) for value in covector)

    extended = [[0] * (n + 1) for _ in range(n + 1)]
    extended[0][0] = 2
    for j in range(1, n + 1):
        extended[0][j] = -_pairing_with_cartan(theta.coords, cartan, j - 1)
        extended[j][0] = -theta_covector[j - 1]
        for i in range(1, n + 1):
            extended[i][j] = cartan[i - 1][j - 1]

    marks = (1,) + theta.coords
    for j in range(n + 1):
        if sum(marks[i] * extended[i][j] for i in range(n + 1)) != 0:
            raise RuntimeError(
                f"The marks of {root_type} are not in the kernel of its extended "
                "Cartan matrix"
            )

    root_system = RootSystem(
        type=root_type,
        positive_roots=tuple(roots),
        gram=gram,
        cartan=cartan,
        extended_cartan=tuple(tuple(row) for row in extended),
        theta=theta,
        coxeter_number=coxeter_number,
        theta_covector=theta_covector,
    )
    logger.debug(f"Built {root_system!r}.")
    return root_system


def build(root_type: RootSystemType | str) -> RootSystem:
    """Build a root system.

    Args:
        root_type:
            The type, or a type string such as `E8`.

    Returns:
        The root system. Root systems are cached, so repeated builds are free.

    Raises:
        InvalidRankError:
            If the rank is invalid for the family.
    """
    if isinstance(root_type, str):
        root_type = RootSystemType.from_string(root_type)
    return _build(root_type)


def root_poset(root_system: RootSystem) -> Poset:
    """The positive roots, where `gamma` covers `mu` iff `gamma - mu` is simple."""
    return root_system.root_poset


def pairing(root_system: RootSystem, root: Root, j: int) -> int:
    """The pairing `(root, alpha_j^vee)`, for a simple root index `1 <= j <= n`."""
    if not 1 <= j <= root_system.rank:
        raise ValueError(f"Simple root index {j} is out of range 1..{root_system.rank}")
    return _pairing_with_cartan(root.coords, root_system.cartan, j - 1)


def is_long(root_system: RootSystem, root: Root) -> bool:
    """Whether a root has the squared length of the highest root.

    In `BC_n` only the roots `2 e_i` are long in this sense.
    """
    return root_system.norm(root) == root_system.norm(root_system.theta)


def is_simply_laced(root_system: RootSystem) -> bool:
    return all(root_system.long_flags)


def long_simple_roots(root_system: RootSystem) -> list[int]:
    """The indices `j` (from 1) of the long simple roots."""
    return [
        j
        for j, flag in enumerate(root_system.long_flags[: root_system.rank], start=1)
        if flag
    ]


def has_branching_node(root_system: RootSystem) -> bool:
    """Whether some node of the Dynkin diagram has at least three neighbours."""
    return any(
        sum(1 for j, entry in enumerate(row) if j != i and entry != 0) >= 3
        for i, row in enumerate(root_system.cartan)
    )


def commutative_roots(root_system: RootSystem) -> frozenset[Root]:
    """The roots whose principal upper ideal is abelian.

    An ideal is abelian if no two of its members sum to a root. The commutative roots
    form an upper ideal of the root order.

    Raises:
        ValueError:
            If the root system is not reduced.
    """
    if not root_system.type.is_reduced:
        raise ValueError("Commutative roots are only defined for reduced root systems")
    poset = root_system.root_poset
    partners = root_system.sum_partners
    commutative = [
        root
        for i, root in enumerate(root_system.positive_roots)
        if is_abelian(members=poset.up_sets[i], sum_partners=partners)
    ]
    return frozenset(commutative)


def is_abelian(members: int, sum_partners: tuple[int, ...]) -> bool:
    """Whether no two roots in a bitset of positive roots sum to a root."""
    remaining = members
    while remaining:
        lowest = remaining & -remaining
        if sum_partners[lowest.bit_length() - 1] & members:
            return False
        remaining ^= lowest
    return True


def without_simples(root_system: RootSystem) -> Poset:
    """The subposet of non-simple positive roots.

    Raises:
        ValueError:
            If the rank is 1, where every positive root is simple.
    """
    if root_system.rank < 2:
        raise ValueError("Removing the simple roots of a rank 1 system leaves nothing")
    poset = root_system.root_poset
    return poset.restrict_to_convex(poset.full & ~root_system.simple_bits)


def with_zero(root_system: RootSystem) -> Poset:
    """The positive roots together with a new minimum `0` below the simple roots."""
    poset = root_system.root_poset
    zero = Root((0,) * root_system.rank)
    upper_covers = [root_system.simple_bits << 1] + [
        covers << 1 for covers in poset.upper_covers
    ]
    return Poset.from_upper_covers(
        labels=(zero,) + root_system.positive_roots, upper_covers=upper_covers
    )


def epsilon_coordinates(root_system: RootSystem, root: Root) -> tuple[int, ...]:
    """The coordinates of a root in the orthonormal basis `e_1, ..., e_n`.

    Only defined for the families B, C and BC, with `alpha_k = e_k - e_{k+1}` for
    `k < n` and `alpha_n = e_n` (B, BC) or `alpha_n = 2 e_n` (C).
    """
    family, n = root_system.type.family, root_system.rank
    if family not in ("B", "C", "BC"):
        raise ValueError(
            f"Epsilon coordinates are not implemented for {root_system.type}"
        )
    c = root.coords
    vector = [c[0]] + [c[i] - c[i - 1] for i in range(1, n)]
    if family == "C":
        vector[n - 1] = 2 * c[n - 1] - (c[n - 2] if n > 1 else 0)
    return tuple(vector)


def root_from_epsilon(root_system: RootSystem, vector: tuple[int, ...]) -> Root:
    """The inverse of `epsilon_coordinates`."""
    family, n = root_system.type.family, root_system.rank
    if family not in ("B", "C", "BC"):
        raise ValueError(
            f"Epsilon coordinates are not implemented for {root_system.type}"
        )
    root = _b_coords_from_epsilon(vector)
    if family == "C":
        if root.coords[n - 1] % 2:
            raise ValueError(
                f"{vector} is not in the root lattice of {root_system.type}"
            )
        root = Root(root.coords[: n - 1] + (root.coords[n - 1] // 2,))
    return root


def _epsilon(size: int, *terms: tuple[int, int]) -> tuple[int, ...]:
    """The vector `sum coefficient * e_i` for pairs `(i, coefficient)`, `i` from 1."""
    vector = [0] * size
    for i, coefficient in terms:
        vector[i - 1] += coefficient
    return tuple(vector)


@dataclass(frozen=True)
class BCCorrespondence:
    """The explicit order isomorphisms attached to `BC_n`.

    Attributes:
        to_b:
            Sends each positive root of `BC_n` to a non-simple root of `B_{n+1}`.
        to_c:
            Sends each positive root of `BC_n` to a non-simple root of `C_{n+1}`.
        b_to_c:
            The extension to an isomorphism from `B_{n+1}` to `C_{n+1}`.
    """

    to_b: dict[Root, Root]
    to_c: dict[Root, Root]
    b_to_c: dict[Root, Root]


def bc_correspondence(rank: int) -> BCCorrespondence:
    """The root correspondences between `BC_n`, `B_{n+1}` and `C_{n+1}`.

    In the orthonormal bases, with `1 <= i < j <= n`:

    - `e_i - e_j` corresponds to `e_i - e_{j+1}` in both `B_{n+1}` and `C_{n+1}`.
    - `e_i + e_j` corresponds to `e_i + e_{j+1}` in `B_{n+1}` and to `e_i + e_j` in
      `C_{n+1}`.
    - `e_i` corresponds to `e_i` in `B_{n+1}` and `e_i + e_{n+1}` in `C_{n+1}`.
    - `2 e_i` corresponds to `e_i + e_{i+1}` in `B_{n+1}` and `2 e_i` in `C_{n+1}`.

    The simple roots of `B_{n+1}` are sent to the simple roots of `C_{n+1}`.

    Args:
        rank:
            The rank `n` of `BC_n`.

    Returns:
        The three correspondences.
    """
    bc = build(RootSystemType("BC", rank))
    b = build(RootSystemType("B", rank + 1))
    c = build(RootSystemType("C", rank + 1))
    n, m = rank, rank + 1

    to_b: dict[Root, Root] = dict()
    to_c: dict[Root, Root] = dict()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            source = root_from_epsilon(bc, _epsilon(n, (i, 1), (j, -1)))
            to_b[source] = root_from_epsilon(b, _epsilon(m, (i, 1), (j + 1, -1)))
            to_c[source] = root_from_epsilon(c, _epsilon(m, (i, 1), (j + 1, -1)))
            source = root_from_epsilon(bc, _epsilon(n, (i, 1), (j, 1)))
            to_b[source] = root_from_epsilon(b, _epsilon(m, (i, 1), (j + 1, 1)))
            to_c[source] = root_from_epsilon(c, _epsilon(m, (i, 1), (j, 1)))
        source = root_from_epsilon(bc, _epsilon(n, (i, 1)))
        to_b[source] = root_from_epsilon(b, _epsilon(m, (i, 1)))
        to_c[source] = root_from_epsilon(c, _epsilon(m, (i, 1), (m, 1)))
        source = root_from_epsilon(bc, _epsilon(n, (i, 2)))
        to_b[source] = root_from_epsilon(b, _epsilon(m, (i, 1), (i + 1, 1)))
        to_c[source] = root_from_epsilon(c, _epsilon(m, (i, 2)))

    b_to_c = {to_b[source]: to_c[source] for source in to_b}
    b_to_c.update(zip(b.simple_roots, c.simple_roots))
    return BCCorrespondence(to_b=to_b, to_c=to_c, b_to_c=b_to_c)
