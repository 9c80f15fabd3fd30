"""Finite posets, their Hasse diagrams and covering polynomials.

Elements of a poset are the dense indices `0, ..., N - 1`, with a separate table of
labels. Sets of elements are Python integers used as bitsets, so that closures and
reductions are word-parallel.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from pathlib import Path
import logging
import random
from typing import Hashable, Iterable, Iterator, Sequence

from .polynomial import Polynomial
from .utils import bitset_of, iter_bits


logger = logging.getLogger(__name__)

# Largest size handled by the brute-force isomorphism test
ISOMORPHISM_LIMIT = 8


class CycleDetectedError(ValueError):
    """Raised when the relations defining a poset contain a directed cycle."""


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration exceeds its configured budget."""


class NotUniqueError(ValueError):
    """Raised when a poset does not have a unique top or bottom element."""


class NotGradedError(ValueError):
    """Raised when a poset is required to be graded but is not."""


@dataclass(frozen=True)
class UpperIdeal:
    """An upward closed set of elements of a carrier poset.

    Attributes:
        members:
            The bitset of member elements.
    """

    members: int

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, element: int) -> bool:
        return bool(self.members >> element & 1)

    def elements(self) -> list[int]:
        return list(iter_bits(self.members))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements())) + "}"


@dataclass(frozen=True)
class CoveringStats:
    """The covering statistics of every element of a poset.

    Attributes:
        kappa:
            The number of elements covered by each element.
        iota:
            The number of elements covering each element.
    """

    kappa: tuple[int, ...]
    iota: tuple[int, ...]

    @property
    def edges(self) -> int:
        return sum(self.kappa)


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite poset given by its Hasse diagram.

    Attributes:
        labels:
            One hashable label per element.
        upper_covers:
            For each element, the bitset of the elements covering it.
        lower_covers:
            For each element, the bitset of the elements it covers.
    """

    labels: tuple[Hashable, ...]
    upper_covers: tuple[int, ...]
    lower_covers: tuple[int, ...]

    @classmethod
    def from_relations(
        cls,
        labels: Sequence[Hashable],
        pairs: Iterable[tuple[Hashable, Hashable]],
    ) -> "Poset":
        """Build a poset as the reflexive-transitive closure of some relations.

        Any acyclic set of relations is accepted; it is reduced to its Hasse diagram.

        Args:
            labels:
                The element labels, which must be distinct.
            pairs:
                Pairs `(x, y)` of labels meaning `x <= y`. Pairs `(x, x)` are ignored.

        Returns:
            The poset.

        Raises:
            CycleDetectedError:
                If the relations contain a directed cycle.
        """
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("The labels of a poset must be distinct.")

        successors = [0] * len(labels)
        for x, y in pairs:
            i, j = index[x], index[y]
            if i != j:
                successors[i] |= 1 << j

        order = _topological_order(successors)
        if order is None:
            raise CycleDetectedError("The given relations contain a directed cycle.")

        # Up-sets in reverse topological order, then the transitive reduction
        up_sets = [0] * len(labels)
        for i in reversed(order):
            up = 1 << i
            for j in iter_bits(successors[i]):
                up |= up_sets[j]
            up_sets[i] = up

        upper_covers = list()
        for i, succ in enumerate(successors):
            reachable_in_two = 0
            for j in iter_bits(succ):
                reachable_in_two |= up_sets[j] & ~(1 << j)
            upper_covers.append(succ & ~reachable_in_two)

        poset = cls.from_upper_covers(labels=labels, upper_covers=upper_covers)
        poset.__dict__["up_sets"] = tuple(up_sets)
        poset.__dict__["topological_order"] = tuple(order)
        return poset

    @classmethod
    def from_upper_covers(
        cls, labels: Sequence[Hashable], upper_covers: Sequence[int]
    ) -> "Poset":
        """Build a poset from a known Hasse diagram.

        The covers are trusted to form the transitive reduction of an acyclic relation.

        Args:
            labels:
                The element labels.
            upper_covers:
                For each element, the bitset of the elements covering it.

        Returns:
            The poset.
        """
        lower_covers = [0] * len(labels)
        for i, covers in enumerate(upper_covers):
            for j in iter_bits(covers):
                lower_covers[j] |= 1 << i
        return cls(
            labels=tuple(labels),
            upper_covers=tuple(upper_covers),
            lower_covers=tuple(lower_covers),
        )

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        """The bitset of all elements."""
        return (1 << self.size) - 1

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        """A linear extension of the poset, minimal elements first."""
        order = _topological_order(list(self.upper_covers))
        assert order is not None
        return tuple(order)

    @cached_property
    def up_sets(self) -> tuple[int, ...]:
        """For each element `x`, the bitset of the elements `y >= x`."""
        up_sets = [0] * self.size
        for i in reversed(self.topological_order):
            up = 1 << i
            for j in iter_bits(self.upper_covers[i]):
                up |= up_sets[j]
            up_sets[i] = up
        return tuple(up_sets)

    @cached_property
    def down_sets(self) -> tuple[int, ...]:
        """For each element `x`, the bitset of the elements `y <= x`."""
        down_sets = [0] * self.size
        for i, up in enumerate(self.up_sets):
            for j in iter_bits(up):
                down_sets[j] |= 1 << i
        return tuple(down_sets)

    def leq(self, x: int, y: int) -> bool:
        """Whether `x <= y`, for element indices `x` and `y`."""
        return bool(self.up_sets[x] >> y & 1)

    @cached_property
    def covering_stats(self) -> CoveringStats:
        return CoveringStats(
            kappa=tuple(covers.bit_count() for covers in self.lower_covers),
            iota=tuple(covers.bit_count() for covers in self.upper_covers),
        )

    @property
    def edge_count(self) -> int:
        return self.covering_stats.edges

    def hasse_edges(self) -> list[tuple[int, int]]:
        """The Hasse diagram as pairs `(x, y)` with `y` covering `x`."""
        return [
            (x, y)
            for x, covers in enumerate(self.upper_covers)
            for y in iter_bits(covers)
        ]

    @property
    def minimal_elements(self) -> int:
        return bitset_of(i for i, covers in enumerate(self.lower_covers) if not covers)

    @property
    def maximal_elements(self) -> int:
        return bitset_of(i for i, covers in enumerate(self.upper_covers) if not covers)

    def restrict_to_convex(self, elements: int) -> "Poset":
        """The induced subposet on a convex set of elements.

        For a convex set, e.g. an upper or lower ideal, the Hasse diagram of the induced
        subposet is the restriction of the Hasse diagram.

        Args:
            elements:
                The bitset of elements to keep, assumed convex.

        Returns:
            The induced subposet, with the kept elements in increasing index order.
        """
        kept = list(iter_bits(elements))
        new_index = {old: new for new, old in enumerate(kept)}
        upper_covers = [
            bitset_of(new_index[j] for j in iter_bits(self.upper_covers[i] & elements))
            for i in kept
        ]
        return Poset.from_upper_covers(
            labels=[self.labels[i] for i in kept], upper_covers=upper_covers
        )

    def induced(self, elements: int) -> "Poset":
        """The induced subposet on an arbitrary set of elements.

        Args:
            elements:
                The bitset of elements to keep.

        Returns:
            The induced subposet, with the kept elements in increasing index order.
        """
        kept = list(iter_bits(elements))
        pairs = [
            (self.labels[i], self.labels[j])
            for i in kept
            for j in iter_bits(self.up_sets[i] & elements & ~(1 << i))
        ]
        return Poset.from_relations(labels=[self.labels[i] for i in kept], pairs=pairs)

    def iter_antichains(self, limit: int | None = None) -> Iterator[int]:
        """Enumerate the antichains of the poset, the empty one included.

        The search is depth-first over a fixed linear extension, pruning every element
        comparable to one already chosen.

        Args:
            limit:
                Stop after this many antichains. None means no limit.

        Yields:
            The antichains, as bitsets of element indices.
        """
        order = self.topological_order
        position = {element: pos for pos, element in enumerate(order)}
        comparable = [0] * self.size
        for pos, element in enumerate(order):
            related = self.up_sets[element] | self.down_sets[element]
            comparable[pos] = bitset_of(position[j] for j in iter_bits(related))

        produced = 0
        stack: list[tuple[tuple[int, ...], int]] = [((), (1 << self.size) - 1)]
        while stack:
            chosen, candidates = stack.pop()
            yield bitset_of(order[pos] for pos in chosen)
            produced += 1
            if limit is not None and produced >= limit:
                return
            while candidates:
                lowest = candidates & -candidates
                pos = lowest.bit_length() - 1
                candidates ^= lowest
                stack.append((chosen + (pos,), candidates & ~comparable[pos]))

    def antichain_counts(self) -> list[int]:
        """The number of antichains of each size, indexed by size."""
        order = self.topological_order
        position = {element: pos for pos, element in enumerate(order)}
        comparable = [0] * self.size
        for pos, element in enumerate(order):
            related = self.up_sets[element] | self.down_sets[element]
            comparable[pos] = bitset_of(position[j] for j in iter_bits(related))

        counts = [0] * (self.size + 1)
        stack: list[tuple[int, int]] = [(0, (1 << self.size) - 1)]
        while stack:
            size, candidates = stack.pop()
            counts[size] += 1
            while candidates:
                lowest = candidates & -candidates
                pos = lowest.bit_length() - 1
                candidates ^= lowest
                stack.append((size + 1, candidates & ~comparable[pos]))
        return counts

    def count_antichains(self, limit: int | None = None) -> int:
        """The number of antichains, stopping early once `limit` is exceeded."""
        if limit is None:
            return sum(self.antichain_counts())
        return sum(1 for _ in self.iter_antichains(limit=limit + 1))

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, edges={self.edge_count})"


def _topological_order(successors: list[int]) -> list[int] | None:
    """Kahn's algorithm on a successor bitset list; None if there is a cycle."""
    in_degree = [0] * len(successors)
    for succ in successors:
        for j in iter_bits(succ):
            in_degree[j] += 1
    frontier = [i for i, degree in enumerate(in_degree) if degree == 0]
    frontier.reverse()
    order: list[int] = list()
    while frontier:
        i = frontier.pop()
        order.append(i)
        for j in iter_bits(successors[i]):
            in_degree[j] -= 1
            if in_degree[j] == 0:
                frontier.append(j)
    if len(order) != len(successors):
        return None
    return order


def from_relations(
    labels: Sequence[Hashable], pairs: Iterable[tuple[Hashable, Hashable]]
) -> Poset:
    return Poset.from_relations(labels=labels, pairs=pairs)


def chain(size: int) -> Poset:
    """The chain `0 < 1 < ... < size - 1`."""
    return Poset.from_relations(
        labels=list(range(size)), pairs=[(i, i + 1) for i in range(size - 1)]
    )


def antichain(size: int) -> Poset:
    """The poset on `size` pairwise incomparable elements."""
    return Poset.from_relations(labels=list(range(size)), pairs=[])


def random_poset(size: int, edge_probability: float, rng: random.Random) -> Poset:
    """A random poset, generated by relations `i < j` between random pairs `i < j`.

    Args:
        size:
            The number of elements.
        edge_probability:
            The probability of each relation being drawn.
        rng:
            The random number generator.

    Returns:
        The random poset.
    """
    pairs = [
        (i, j)
        for i in range(size)
        for j in range(i + 1, size)
        if rng.random() < edge_probability
    ]
    return Poset.from_relations(labels=list(range(size)), pairs=pairs)


def upper_covering_polynomial(poset: Poset) -> Polynomial:
    """The upper covering polynomial `sum_x q^{kappa(x)}`."""
    return Polynomial.from_exponents(poset.covering_stats.kappa)


def lower_covering_polynomial(poset: Poset) -> Polynomial:
    """The lower covering polynomial `sum_x q^{iota(x)}`."""
    return Polynomial.from_exponents(poset.covering_stats.iota)


def deviation_polynomial(poset: Poset) -> Polynomial:
    """The deviation polynomial `(K^up - K^low) / (q - 1)^2`.

    Raises:
        NotDivisibleError:
            Never for a well-formed poset, as both covering polynomials agree at `q = 1`
            together with their first derivatives.
    """
    difference = upper_covering_polynomial(poset) - lower_covering_polynomial(poset)
    return difference.divide_by_q_minus_one_squared()


def antichain_polynomial(poset: Poset) -> Polynomial:
    """The polynomial whose `q^k` coefficient counts the `k`-element antichains."""
    return Polynomial(tuple(poset.antichain_counts()))


def disjoint_sum(a: Poset, b: Poset) -> Poset:
    """The disjoint union of two posets, with labels `(0, x)` and `(1, y)`."""
    shift = a.size
    return Poset.from_upper_covers(
        labels=[(0, label) for label in a.labels] + [(1, label) for label in b.labels],
        upper_covers=list(a.upper_covers)
        + [covers << shift for covers in b.upper_covers],
    )


def direct_product(a: Poset, b: Poset) -> Poset:
    """The product of two posets under the componentwise order.

    The element `(x, y)` has index `x * b.size + y` and label `(label_x, label_y)`.
    """
    labels = [(x, y) for x in a.labels for y in b.labels]
    upper_covers: list[int] = list()
    for i in range(a.size):
        for j in range(b.size):
            covers = bitset_of(k * b.size + j for k in iter_bits(a.upper_covers[i]))
            covers |= bitset_of(i * b.size + k for k in iter_bits(b.upper_covers[j]))
            upper_covers.append(covers)
    return Poset.from_upper_covers(labels=labels, upper_covers=upper_covers)


def opposite(a: Poset) -> Poset:
    """The opposite poset, with the order reversed."""
    return Poset(
        labels=a.labels, upper_covers=a.lower_covers, lower_covers=a.upper_covers
    )


def upper_ideals(poset: Poset, budget: int | None = None) -> list[int]:
    """All upper ideals of a poset, ordered by size and then by bitset.

    Args:
        poset:
            The poset.
        budget:
            The maximal number of ideals to enumerate. None means no limit.

    Returns:
        The upper ideals, as bitsets.

    Raises:
        BudgetExceededError:
            If there are more than `budget` upper ideals.
    """
    limit = None if budget is None else budget + 1
    ideals: list[int] = list()
    for generators in poset.iter_antichains(limit=limit):
        ideal = 0
        for i in iter_bits(generators):
            ideal |= poset.up_sets[i]
        ideals.append(ideal)
    if budget is not None and len(ideals) > budget:
        raise BudgetExceededError(
            f"The poset has more than {budget:,} upper ideals; raise the budget to "
            "enumerate them all."
        )
    ideals.sort(key=lambda ideal: (ideal.bit_count(), ideal))
    return ideals


def upper_ideal_lattice(lattice_base: Poset, budget: int | None = None) -> Poset:
    """The distributive lattice `J*(L)` of upper ideals of `L`, ordered by inclusion.

    The Hasse diagram is built directly: the covers of an ideal `I` are the ideals
    `I + {x}` for `x` maximal in the complement of `I`. No closure is computed.

    Args:
        lattice_base:
            The poset `L`.
        budget:
            The maximal number of ideals. None means no limit.

    Returns:
        The lattice, labelled by `UpperIdeal` instances.

    Raises:
        BudgetExceededError:
            If `L` has more than `budget` upper ideals.
    """
    ideals = upper_ideals(poset=lattice_base, budget=budget)
    index = {ideal: i for i, ideal in enumerate(ideals)}
    strict_up = [
        up & ~(1 << i) for i, up in enumerate(lattice_base.up_sets)
    ]
    upper_covers: list[int] = list()
    for ideal in ideals:
        complement = lattice_base.full & ~ideal
        covers = 0
        for x in iter_bits(complement):
            if strict_up[x] & complement == 0:
                covers |= 1 << index[ideal | 1 << x]
        upper_covers.append(covers)
    logger.debug(f"Built J*(L) with {len(ideals):,} ideals from {lattice_base!r}.")
    return Poset.from_upper_covers(
        labels=[UpperIdeal(members=ideal) for ideal in ideals],
        upper_covers=upper_covers,
    )


def truncation(lattice: Poset, max_size: int) -> Poset:
    """The subposet `P(<= m)` of a lattice `J*(L)` of ideals with at most `m` elements.

    Args:
        lattice:
            A lattice built by `upper_ideal_lattice`.
        max_size:
            The maximal ideal cardinality `m`.

    Returns:
        The truncated subposet, which is downward closed and hence convex.
    """
    kept = bitset_of(
        i for i, label in enumerate(lattice.labels) if len(label) <= max_size
    )
    return lattice.restrict_to_convex(kept)


def remove_top(poset: Poset) -> Poset:
    """Remove the unique maximal element.

    Raises:
        NotUniqueError:
            If the poset does not have a unique maximal element.
    """
    top = poset.maximal_elements
    if top.bit_count() != 1:
        raise NotUniqueError(f"{poset!r} has {top.bit_count()} maximal elements.")
    return poset.restrict_to_convex(poset.full & ~top)


def remove_bottom(poset: Poset) -> Poset:
    """Remove the unique minimal element.

    Raises:
        NotUniqueError:
            If the poset does not have a unique minimal element.
    """
    bottom = poset.minimal_elements
    if bottom.bit_count() != 1:
        raise NotUniqueError(f"{poset!r} has {bottom.bit_count()} minimal elements.")
    return poset.restrict_to_convex(poset.full & ~bottom)


def triple_counts(poset: Poset) -> tuple[int, int]:
    """Count the wedge and vee triples of the Hasse diagram.

    A wedge triple is `(x, y1, y2)` with `y1 != y2` both covered by `x`; a vee triple is
    `(x1, x2, y)` with `x1 != x2` both covering `y`. Their difference is `2 * Delta(1)`.

    Returns:
        The pair `(wedge, vee)`.
    """
    stats = poset.covering_stats
    wedge = sum(k * (k - 1) for k in stats.kappa)
    vee = sum(i * (i - 1) for i in stats.iota)
    return wedge, vee


def is_graded(poset: Poset) -> bool:
    """Whether all maximal chains of the poset have the same length."""
    try:
        rank_function(poset)
    except NotGradedError:
        return False
    return True


def rank_function(poset: Poset) -> tuple[int, ...]:
    """The rank of every element of a graded poset, minimal elements having rank 0.

    Raises:
        NotGradedError:
            If the poset is not graded.
    """
    ranks = [0] * poset.size
    for i in poset.topological_order:
        for j in iter_bits(poset.lower_covers[i]):
            ranks[i] = max(ranks[i], ranks[j] + 1)
    for x, y in poset.hasse_edges():
        if ranks[y] != ranks[x] + 1:
            raise NotGradedError(f"{poset!r} has chains of different lengths.")
    top_ranks = {ranks[i] for i in iter_bits(poset.maximal_elements)}
    if len(top_ranks) > 1:
        raise NotGradedError(f"{poset!r} has maximal elements of ranks {top_ranks}.")
    return tuple(ranks)


def is_lattice(poset: Poset) -> bool:
    """Whether every pair of elements has a meet and a join."""
    if poset.size == 0 or poset.maximal_elements.bit_count() != 1:
        return False

    # A finite meet semilattice with a top element is a lattice. Down-sets are
    # re-indexed by a linear extension, so that the largest bit of a nonempty set is
    # one of its maximal elements.
    order = poset.topological_order
    position = {element: pos for pos, element in enumerate(order)}
    down_sets = [
        bitset_of(position[j] for j in iter_bits(poset.down_sets[element]))
        for element in order
    ]
    for a in range(poset.size):
        for b in range(a + 1, poset.size):
            common = down_sets[a] & down_sets[b]
            if common == 0:
                return False
            candidate = common.bit_length() - 1
            if common & ~down_sets[candidate]:
                return False
    return True


def is_distributive_lattice(poset: Poset) -> bool:
    """Whether the poset is a distributive lattice.

    A finite lattice is distributive if and only if it has exactly as many elements as
    there are order ideals in its subposet of join-irreducible elements.
    """
    if not is_lattice(poset):
        return False
    join_irreducibles = bitset_of(
        i for i, covers in enumerate(poset.lower_covers) if covers.bit_count() == 1
    )
    irreducible_poset = poset.induced(join_irreducibles)
    return irreducible_poset.count_antichains(limit=poset.size) == poset.size


def is_order_isomorphism(a: Poset, b: Poset, mapping: dict[Hashable, Hashable]) -> bool:
    """Whether a map of labels is an isomorphism of posets.

    Args:
        a:
            The source poset.
        b:
            The target poset.
        mapping:
            A map from the labels of `a` to the labels of `b`.

    Returns:
        Whether the map is a bijection carrying one Hasse diagram onto the other.
    """
    if a.size != b.size or set(mapping) != set(a.labels):
        return False
    images = [b.index.get(mapping[label]) for label in a.labels]
    if None in images or len(set(images)) != a.size:
        return False
    mapped_edges = {(images[x], images[y]) for x, y in a.hasse_edges()}
    return mapped_edges == set(b.hasse_edges())


def is_isomorphic(a: Poset, b: Poset) -> bool:
    """Whether two small posets are isomorphic, by brute-force permutation search.

    Only meant for posets with at most `ISOMORPHISM_LIMIT` elements.

    Raises:
        ValueError:
            If the posets have more than `ISOMORPHISM_LIMIT` elements.
    """
    if a.size != b.size or a.edge_count != b.edge_count:
        return False
    if a.size > ISOMORPHISM_LIMIT:
        raise ValueError(
            f"Isomorphism testing is limited to {ISOMORPHISM_LIMIT} elements."
        )
    stats_a, stats_b = a.covering_stats, b.covering_stats
    signature_a = sorted(zip(stats_a.kappa, stats_a.iota))
    if signature_a != sorted(zip(stats_b.kappa, stats_b.iota)):
        return False
    edges_b = set(b.hasse_edges())
    for permutation in permutations(range(b.size)):
        if all(
            (stats_a.kappa[x], stats_a.iota[x])
            == (stats_b.kappa[permutation[x]], stats_b.iota[permutation[x]])
            for x in range(a.size)
        ) and {(permutation[x], permutation[y]) for x, y in a.hasse_edges()} == edges_b:
            return True
    return False


def to_text(poset: Poset) -> str:
    """Serialise a poset to the exchange format.

    The first line is `poset N`, followed by one `# label i <string>` line per element
    and one `x y` line per Hasse edge, meaning that `x` is covered by `y`.
    """
    lines = [f"poset {poset.size}"]
    lines.extend(f"# label {i} {label}" for i, label in enumerate(poset.labels))
    lines.extend(f"{x} {y}" for x, y in poset.hasse_edges())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Poset:
    """Parse a poset from the exchange format.

    Edges may be any acyclic relation; the result is reduced to its Hasse diagram.

    Raises:
        ValueError:
            If the text is malformed.
        CycleDetectedError:
            If the edges contain a directed cycle.
    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not lines or not lines[0][1].startswith("poset "):
        raise ValueError("The poset file must start with a `poset N` line.")
    size = int(lines[0][1].split()[1])
    labels: list[Hashable] = [str(i) for i in range(size)]
    labelled: set[int] = set()
    pairs: list[tuple[int, int]] = list()
    for number, line in lines[1:]:
        if line.startswith("#"):
            parts = line.split(maxsplit=3)
            if len(parts) >= 3 and parts[1] == "label":
                index = int(parts[2])
                if not 0 <= index < size:
                    raise ValueError(
                        f"Line {number}: the label refers to element {index}, outside "
                        f"0..{size - 1}."
                    )
                if index in labelled:
                    raise ValueError(
                        f"Line {number}: element {index} is labelled more than once."
                    )
                labelled.add(index)
                labels[index] = parts[3] if len(parts) == 4 else ""
            continue
        x, y = map(int, line.split())
        if not (0 <= x < size and 0 <= y < size):
            raise ValueError(
                f"Line {number}: edge {x} {y} refers to an element outside "
                f"0..{size - 1}."
            )
        pairs.append((x, y))
    poset = Poset.from_relations(labels=list(range(size)), pairs=pairs)
    return Poset(
        labels=tuple(labels),
        upper_covers=poset.upper_covers,
        lower_covers=poset.lower_covers,
    )


def read_poset(path: Path | str) -> Poset:
    """Read a poset from a file in the exchange format."""
    with Path(path).open(encoding="utf-8") as f:
        return from_text(f.read())


def write_poset(poset: Poset, path: Path | str) -> None:
    """Write a poset to a file in the exchange format."""
    with Path(path).open("w", encoding="utf-8") as f:
        f.write(to_text(poset))
