"""Abelian ideals of the positive roots and the minuscule elements attached to them.

Every abelian ideal `I` corresponds to a minuscule element `w` of the affine Weyl group.
Writing `w^{-1}(alpha_i) = -mu_i + k_i delta` for the affine simple roots `alpha_0, ...,
alpha_n`, the integers `k_i` form the shift vector of `I`. Minuscule elements are grown
one reflection at a time: `s_j w` is again minuscule exactly when `k_j = 1`, and the
ideal then gains the root `mu_j`.
"""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from enum import Enum
import logging

from .polynomial import Polynomial
from .poset import (
    Poset,
    UpperIdeal,
    lower_covering_polynomial,
    upper_covering_polynomial,
)
from .root_system import Root, RootSystem, is_abelian, is_long, pairing
from .utils import bitset_of, iter_bits


logger = logging.getLogger(__name__)


class NotExtendableError(ValueError):
    """Raised when a reflection does not extend a minuscule element."""


class EmptyIdealError(ValueError):
    """Raised when an operation needs a nonempty abelian ideal."""


class InternalMismatchError(RuntimeError):
    """Raised when two independent computations of the same quantity disagree."""


class ClassificationGapError(RuntimeError):
    """Raised when an ideal with a unique extension fits none of the known cases."""


@dataclass(frozen=True)
class MinusculeState:
    """A minuscule element of the affine Weyl group, with its abelian ideal.

    Attributes:
        word:
            The generators `j_1, ..., j_m` in order of application, so that the element
            is `s_{j_m} ... s_{j_1}`.
        shift:
            The shift vector `(k_0, ..., k_n)`.
        mu:
            The finite parts `mu_0, ..., mu_n` of the inverse images of the affine
            simple roots.
        ideal:
            The abelian ideal, as a bitset over the positive roots.
    """

    word: tuple[int, ...]
    shift: tuple[int, ...]
    mu: tuple[Root, ...]
    ideal: UpperIdeal


@dataclass(frozen=True)
class ZVector:
    """The point `z` with `(z, alpha_i) = k_i` for `i = 1, ..., n`."""

    pairing_values: tuple[int, ...]


@dataclass
class AbReport:
    """All abelian ideals of a root system, with their minuscule data.

    Attributes:
        root_system:
            The root system.
        ideals:
            The abelian ideals, ordered by size and then by bitset.
        poset:
            The abelian ideals under inclusion, labelled by the ideals.
        states:
            The minuscule state of each ideal.
        tau:
            The long positive root `w(2 delta - theta)` of each nonempty ideal.
    """

    root_system: RootSystem
    ideals: list[UpperIdeal]
    poset: Poset
    states: dict[UpperIdeal, MinusculeState] = field(default_factory=dict)
    tau: dict[UpperIdeal, Root] = field(default_factory=dict)


class ExtensionCase(str, Enum):
    """The ways in which an abelian ideal can have a unique abelian extension."""

    EMPTY = "a"
    MAXIMAL_IN_FIBER = "b"
    SIMPLE_FIBER = "c"


@dataclass(frozen=True)
class UniqueExtension:
    ideal: UpperIdeal
    case: ExtensionCase


@dataclass(frozen=True)
class Fiber:
    """The abelian ideals sharing a value `mu` of the tau map.

    Attributes:
        root:
            The long positive root `mu`.
        members:
            The ideals in the fiber.
        minimum:
            The unique minimal ideal of the fiber.
        maximum:
            The unique maximal ideal of the fiber.
    """

    root: Root
    members: tuple[UpperIdeal, ...]
    minimum: UpperIdeal
    maximum: UpperIdeal


def _require_reduced(root_system: RootSystem) -> None:
    if not root_system.type.is_reduced:
        raise ValueError(
            f"Abelian ideals of {root_system.type} are those of "
            f"C{root_system.rank}; use that type instead"
        )


def enumerate_direct(root_system: RootSystem) -> list[UpperIdeal]:
    """Enumerate the abelian ideals by growing upper ideals one maximal root at a time.

    Args:
        root_system:
            A reduced root system.

    Returns:
        The abelian ideals, ordered by size and then by bitset.
    """
    _require_reduced(root_system)
    poset = root_system.root_poset
    partners = root_system.sum_partners
    strict_up = [up & ~(1 << i) for i, up in enumerate(poset.up_sets)]

    seen = {0}
    queue = deque([0])
    while queue:
        ideal = queue.popleft()
        complement = poset.full & ~ideal
        for x in iter_bits(complement):
            if strict_up[x] & complement or partners[x] & (ideal | 1 << x):
                continue
            extended = ideal | 1 << x
            if extended not in seen:
                seen.add(extended)
                queue.append(extended)

    ideals = sorted(seen, key=lambda ideal: (ideal.bit_count(), ideal))
    logger.debug(
        f"Found {len(ideals):,} abelian ideals of {root_system.type} directly."
    )
    return [UpperIdeal(members=ideal) for ideal in ideals]


def initial_state(root_system: RootSystem) -> MinusculeState:
    """The state of the identity element, whose ideal is empty."""
    _require_reduced(root_system)
    n = root_system.rank
    mu = (root_system.theta,) + tuple(-alpha for alpha in root_system.simple_roots)
    return MinusculeState(
        word=(), shift=(1,) + (0,) * n, mu=mu, ideal=UpperIdeal(members=0)
    )


def apply_reflection(
    root_system: RootSystem, state: MinusculeState, j: int
) -> MinusculeState:
    """Multiply a minuscule element on the left by the affine simple reflection `s_j`.

    Column `j` of the extended Cartan matrix drives the update: `k_i <- k_i - A[i][j]`
    and `mu_i <- mu_i - A[i][j] mu_j`, and the ideal gains the old `mu_j`.

    Args:
        root_system:
            The root system.
        state:
            The current state.
        j:
            The affine node, in `0..n`.

    Returns:
        The new state.

    Raises:
        NotExtendableError:
            If `k_j != 1`, in which case `s_j w` is not minuscule.
    """
    if state.shift[j] != 1:
        raise NotExtendableError(
            f"Cannot apply s_{j} to a state with shift vector {state.shift}"
        )
    column = [row[j] for row in root_system.extended_cartan]
    added = state.mu[j]
    index = root_system.index.get(added)
    if index is None:
        raise RuntimeError(f"The root {added} added by s_{j} is not a positive root")
    shift = tuple(k - a * state.shift[j] for k, a in zip(state.shift, column))
    mu = tuple(m - added * a for m, a in zip(state.mu, column))
    return MinusculeState(
        word=state.word + (j,),
        shift=shift,
        mu=mu,
        ideal=UpperIdeal(members=state.ideal.members | 1 << index),
    )


def stats_from_shift(state: MinusculeState) -> tuple[int, int]:
    """The number of generators and of abelian extensions, read off the shift vector.

    Returns:
        The pair `(kappa, iota)`: the number of entries equal to -1 and to 1.
    """
    return state.shift.count(-1), state.shift.count(1)


def shift_constraints_hold(root_system: RootSystem, state: MinusculeState) -> bool:
    """Whether a shift vector has the shape every abelian ideal produces.

    All entries lie in `-1..2`, `k_0 <= 1`, at most one entry equals 2 and its simple
    root is long, and `sum_i c_i k_i = 1` with `c_0 = 1`.
    """
    shift = state.shift
    if any(not -1 <= k <= 2 for k in shift) or shift[0] > 1:
        return False
    twos = [i for i, k in enumerate(shift) if k == 2]
    if len(twos) > 1:
        return False
    if twos and not root_system.long_flags[twos[0] - 1]:
        return False
    marks = (1,) + root_system.theta.coords
    return sum(c * k for c, k in zip(marks, shift)) == 1


def z_vector(state: MinusculeState) -> ZVector:
    return ZVector(pairing_values=state.shift[1:])


def kostant_check(root_system: RootSystem, state: MinusculeState) -> bool:
    """Whether a shift vector satisfies the bounds characterising abelian ideals.

    Checks `-1 <= sum_i c_i(gamma) k_i <= 2` for every positive root `gamma`, together
    with `k_0 = 1 - sum_i c_i(theta) k_i`.
    """
    k = state.shift[1:]
    for root in root_system.positive_roots:
        value = sum(c * k_i for c, k_i in zip(root.coords, k))
        if not -1 <= value <= 2:
            return False
    theta_value = sum(c * k_i for c, k_i in zip(root_system.theta.coords, k))
    return state.shift[0] == 1 - theta_value


def tau(root_system: RootSystem, state: MinusculeState) -> Root:
    """The long positive root `w(2 delta - theta)` attached to a nonempty abelian ideal.

    The affine vector `-theta + 2 delta` is pushed through the reflections of the word
    in order of application.

    Raises:
        EmptyIdealError:
            If the ideal is empty.
    """
    if not state.word:
        raise EmptyIdealError("The tau map is only defined on nonempty abelian ideals")
    vector, delta = -root_system.theta, 2
    for j in state.word:
        if j == 0:
            value = sum(
                c * t for c, t in zip(vector.coords, root_system.theta_covector)
            )
            vector = vector - root_system.theta * value
            delta += value
        else:
            value = pairing(root_system, vector, j)
            vector = vector - root_system.simple_roots[j - 1] * value
    if (
        delta != 0
        or vector not in root_system.index
        or not is_long(root_system, vector)
    ):
        raise RuntimeError(
            f"The word {state.word} sends 2 delta - theta to {vector} + {delta} delta, "
            "which is not a long positive root"
        )
    return vector


def ab_poset(root_system: RootSystem, ideals: list[UpperIdeal]) -> Poset:
    """The abelian ideals under inclusion.

    Subsets of abelian ideals are abelian, so every cover adds a single root, which is
    maximal among the roots outside the smaller ideal.
    """
    poset = root_system.root_poset
    strict_up = [up & ~(1 << i) for i, up in enumerate(poset.up_sets)]
    index = {ideal.members: i for i, ideal in enumerate(ideals)}
    upper_covers: list[int] = list()
    for ideal in ideals:
        complement = poset.full & ~ideal.members
        upper_covers.append(
            bitset_of(
                index[ideal.members | 1 << x]
                for x in iter_bits(complement)
                if strict_up[x] & complement == 0 and ideal.members | 1 << x in index
            )
        )
    return Poset.from_upper_covers(labels=ideals, upper_covers=upper_covers)


def enumerate_minuscule(root_system: RootSystem) -> AbReport:
    """Enumerate the abelian ideals through their minuscule elements.

    The search is breadth-first from the identity, trying the affine nodes in increasing
    order and keeping the first word found for each ideal.

    Args:
        root_system:
            A reduced root system.

    Returns:
        The report, with the inclusion poset, the states and the tau map.
    """
    start = initial_state(root_system)
    states = {start.ideal: start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for j, k in enumerate(state.shift):
            if k != 1:
                continue
            extended = apply_reflection(root_system=root_system, state=state, j=j)
            if extended.ideal not in states:
                states[extended.ideal] = extended
                queue.append(extended)

    ideals = sorted(states, key=lambda ideal: (len(ideal), ideal.members))
    tau_map = {
        ideal: tau(root_system=root_system, state=states[ideal])
        for ideal in ideals
        if ideal.members
    }
    logger.info(
        f"Found {len(ideals):,} abelian ideals of {root_system.type} through minuscule "
        "elements."
    )
    return AbReport(
        root_system=root_system,
        ideals=ideals,
        poset=ab_poset(root_system=root_system, ideals=ideals),
        states={ideal: states[ideal] for ideal in ideals},
        tau=tau_map,
    )


def escaping_extensions(report: AbReport, ideal: UpperIdeal) -> int:
    """The number of covers of a nonempty abelian ideal lying in a different fiber.

    Raises:
        EmptyIdealError:
            If the ideal is empty.
    """
    if not ideal.members:
        raise EmptyIdealError("The empty ideal does not lie in any fiber")
    poset = report.poset
    root = report.tau[ideal]
    covers = poset.upper_covers[poset.index[ideal]]
    return sum(1 for i in iter_bits(covers) if report.tau[poset.labels[i]] != root)


def positive_simple_pairings(root_system: RootSystem, root: Root) -> int:
    """The number of simple roots `alpha_j` with `(root, alpha_j^vee) > 0`."""
    return sum(
        1 for j in range(1, root_system.rank + 1) if pairing(root_system, root, j) > 0
    )


def ab_covering_polynomials(
    report: AbReport,
) -> tuple[Polynomial, Polynomial, Polynomial]:
    """The upper, lower and deviation polynomials of the abelian ideals.

    Both covering polynomials are computed from the inclusion poset and again from the
    shift vectors, which must agree.

    Raises:
        InternalMismatchError:
            If the two computations disagree.
    """
    upper = upper_covering_polynomial(report.poset)
    lower = lower_covering_polynomial(report.poset)
    shift_stats = [stats_from_shift(report.states[ideal]) for ideal in report.ideals]
    shift_upper = Polynomial.from_exponents(kappa for kappa, _ in shift_stats)
    shift_lower = Polynomial.from_exponents(iota for _, iota in shift_stats)
    if (upper, lower) != (shift_upper, shift_lower):
        raise InternalMismatchError(
            f"Ab({report.root_system.type}): the poset gives ({upper}, {lower}) but "
            f"the shift vectors give ({shift_upper}, {shift_lower})"
        )
    return upper, lower, (upper - lower).divide_by_q_minus_one_squared()


def fibers(report: AbReport) -> dict[Root, Fiber]:
    """Partition the nonempty abelian ideals by their value under the tau map.

    Raises:
        RuntimeError:
            If some fiber lacks a unique minimal or a unique maximal element.
    """
    poset = report.poset
    grouped: dict[Root, list[UpperIdeal]] = defaultdict(list)
    for ideal, root in report.tau.items():
        grouped[root].append(ideal)

    result: dict[Root, Fiber] = dict()
    for root, members in grouped.items():
        bits = bitset_of(poset.index[ideal] for ideal in members)
        minimal = [
            ideal
            for ideal in members
            if poset.down_sets[poset.index[ideal]] & bits == 1 << poset.index[ideal]
        ]
        maximal = [
            ideal
            for ideal in members
            if poset.up_sets[poset.index[ideal]] & bits == 1 << poset.index[ideal]
        ]
        if len(minimal) != 1 or len(maximal) != 1:
            raise RuntimeError(
                f"The fiber over {root} has {len(minimal)} minimal and {len(maximal)} "
                "maximal elements"
            )
        result[root] = Fiber(
            root=root, members=tuple(members), minimum=minimal[0], maximum=maximal[0]
        )
    return result


def unique_extension_ideals(report: AbReport) -> list[UniqueExtension]:
    """The abelian ideals with exactly one abelian extension, classified.

    Such an ideal is either empty, or the maximum of a fiber over a non-simple root
    pairing positively with a single simple root, or an ideal with a single extension
    inside a fiber over a long simple root.

    Raises:
        ClassificationGapError:
            If an ideal with a unique extension fits none of the cases.
    """
    root_system, poset = report.root_system, report.poset
    fiber_map = fibers(report)
    simple_roots = set(root_system.simple_roots)

    result: list[UniqueExtension] = list()
    for i, ideal in enumerate(poset.labels):
        if poset.covering_stats.iota[i] != 1:
            continue
        if not ideal.members:
            result.append(UniqueExtension(ideal=ideal, case=ExtensionCase.EMPTY))
            continue
        root = report.tau[ideal]
        if root not in simple_roots:
            if (
                fiber_map[root].maximum == ideal
                and positive_simple_pairings(root_system, root) == 1
            ):
                result.append(
                    UniqueExtension(ideal=ideal, case=ExtensionCase.MAXIMAL_IN_FIBER)
                )
                continue
        elif escaping_extensions(report=report, ideal=ideal) == 0:
            result.append(UniqueExtension(ideal=ideal, case=ExtensionCase.SIMPLE_FIBER))
            continue
        raise ClassificationGapError(
            f"The abelian ideal {ideal} of {root_system.type} has a unique extension "
            "but fits none of the known cases"
        )
    return result


def is_abelian_ideal(root_system: RootSystem, ideal: UpperIdeal) -> bool:
    return is_abelian(members=ideal.members, sum_partners=root_system.sum_partners)
