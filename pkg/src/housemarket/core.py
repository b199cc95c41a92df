"""Domain types for house markets: axes, preference orders, instances, allocations.

Identifiers are 0-based integers internally. Agent ``i`` and resource ``r`` are
plain ints in ``range(n)``; the text format and the CLI shift them to 1-based
labels. Every type here is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence, Union


class InvalidInstance(ValueError):
    """Base class for malformed instance data."""


class DuplicateResourceInRanking(InvalidInstance):
    def __init__(self, agent, resource):
        self.agent = agent
        self.resource = resource
        super().__init__(f"agent {agent}: resource {resource} repeated or out of range in ranking")


class NotABijection(InvalidInstance):
    def __init__(self, what, detail=""):
        self.what = what
        super().__init__(f"{what} is not a bijection" + (f": {detail}" if detail else ""))


class NotSinglePeaked(InvalidInstance):
    def __init__(self, agent, pair):
        self.agent = agent
        self.pair = pair
        super().__init__(
            f"agent {agent} is not single-peaked: {pair[0]} must be preferred to {pair[1]}"
        )


class CycleResourceMismatch(ValueError):
    pass


def _check_permutation(seq, n):
    """Return the first repeated or out-of-range entry, or None."""
    seen = [False] * n
    for r in seq:
        if not (0 <= r < n) or seen[r]:
            return r
        seen[r] = True
    return None


@dataclass(frozen=True)
class Axis:
    order: tuple[int, ...]
    position: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        order = tuple(self.order)
        bad = _check_permutation(order, len(order))
        if bad is not None or len(order) == 0:
            raise NotABijection("axis", f"entry {bad}")
        pos = [0] * len(order)
        for k, r in enumerate(order):
            pos[r] = k
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "position", tuple(pos))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.order)

    @cached_property
    def is_identity(self):
        return all(k == r for k, r in enumerate(self.order))

    def reversed(self):
        return Axis(self.order[::-1])


class _Order:
    """Shared behaviour of strict, complete preference orders over ``range(n)``."""

    ranking: tuple[int, ...]
    rank: tuple[int, ...]

    def __len__(self):
        return len(self.rank)

    @property
    def top(self):
        return self.ranking[0]

    @property
    def snd(self):
        # second-best resource; None for a single-resource market
        return self.ranking[1] if len(self) > 1 else None

    def prefers(self, a, b):
        """True iff resource ``a`` is strictly preferred to resource ``b``."""
        return self.rank[a] < self.rank[b]

    def __eq__(self, other):
        if not isinstance(other, _Order):
            return NotImplemented
        return len(self) == len(other) and self.ranking == other.ranking

    def __hash__(self):
        return hash(self.ranking)


class PreferenceOrder(_Order):
    """An explicit ranking, best first, with a precomputed rank table."""

    __slots__ = ("ranking", "rank")

    def __init__(self, ranking: Iterable[int], agent=None):
        ranking = tuple(ranking)
        n = len(ranking)
        bad = _check_permutation(ranking, n)
        if bad is not None or n == 0:
            raise DuplicateResourceInRanking(agent, bad)
        rank = [0] * n
        for i, r in enumerate(ranking):
            rank[r] = i
        object.__setattr__(self, "ranking", ranking)
        object.__setattr__(self, "rank", tuple(rank))

    def __setattr__(self, name, value):
        raise AttributeError("PreferenceOrder is immutable")

    def __repr__(self):
        return f"PreferenceOrder({list(self.ranking)})"


class FlankOrder(_Order):
    """Implicit single-peaked order on the identity axis ``0 < 1 < ... < n-1``.

    From the peak, one whole flank is ranked first (moving away from the
    peak), then the other. Rank lookups are O(1) without materializing a
    table, which is what makes n in the tens of thousands practical.
    """

    def __init__(self, size: int, peak: int, right_first: bool = True):
        if not 0 <= peak < size:
            raise DuplicateResourceInRanking(None, peak)
        self.size = size
        self.peak = peak
        self.right_first = right_first

    def __len__(self):
        return self.size

    @property
    def top(self):
        return self.peak

    @property
    def snd(self):
        if self.size == 1:
            return None
        p = self.peak
        if self.right_first:
            return p + 1 if p + 1 < self.size else p - 1
        return p - 1 if p > 0 else p + 1

    def rank_of(self, r):
        p, n = self.peak, self.size
        if self.right_first:
            return r - p if r >= p else (n - p) + (p - 1 - r)
        return p - r if r <= p else (p + 1) + (r - p - 1)

    def prefers(self, a, b):
        return self.rank_of(a) < self.rank_of(b)

    @cached_property
    def ranking(self):
        p, n = self.peak, self.size
        right = range(p + 1, n)
        left = range(p - 1, -1, -1)
        first, second = (right, left) if self.right_first else (left, right)
        return (p, *first, *second)

    @cached_property
    def rank(self):
        return tuple(self.rank_of(r) for r in range(self.size))

    def __eq__(self, other):
        if isinstance(other, FlankOrder):
            if self.size != other.size or self.peak != other.peak:
                return False
            # at an axis end both flank orders coincide
            return (self.right_first == other.right_first
                    or self.peak in (0, self.size - 1))
        return super().__eq__(other)

    def __hash__(self):
        return super().__hash__()

    def __repr__(self):
        return f"FlankOrder(size={self.size}, peak={self.peak}, right_first={self.right_first})"


Order = Union[PreferenceOrder, FlankOrder]


@dataclass(frozen=True)
class Allocation:
    assignment: tuple[int, ...]

    def __post_init__(self):
        assignment = tuple(self.assignment)
        bad = _check_permutation(assignment, len(assignment))
        if bad is not None:
            raise NotABijection("allocation", f"resource {bad}")
        object.__setattr__(self, "assignment", assignment)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.assignment)

    def __getitem__(self, agent):
        return self.assignment[agent]

    def __iter__(self):
        return iter(self.assignment)

    def holder(self):
        """Inverse map: resource -> agent."""
        inv = [0] * len(self.assignment)
        for a, r in enumerate(self.assignment):
            inv[r] = a
        return tuple(inv)


@dataclass(frozen=True)
class ImprovingCycle:
    """A cyclic exchange: ``members[k]`` receives ``gets[k]``."""

    members: tuple[int, ...]
    gets: tuple[int, ...]

    def __len__(self):
        return len(self.members)

    def pairs(self):
        return list(zip(self.members, self.gets))


@dataclass(frozen=True)
class Instance:
    axis: Axis
    profile: tuple[Order, ...]
    endowment: Allocation

    @property
    def n(self):
        return len(self.profile)

    @cached_property
    def peaks(self):
        """Axis position of each agent's top resource."""
        pos = self.axis.position
        return tuple(pos[o.top] for o in self.profile)

    @cached_property
    def is_normalized(self):
        return self.axis.is_identity and all(
            a == r for a, r in enumerate(self.endowment.assignment)
        )

    def with_endowment(self, assignment):
        return Instance(self.axis, self.profile, Allocation(tuple(assignment)))

    def with_order(self, agent, order):
        profile = list(self.profile)
        profile[agent] = order
        return Instance(self.axis, tuple(profile), self.endowment)


RawInstance = Mapping[str, Sequence]


def validate(raw: Union[Instance, RawInstance], *, single_peaked: bool = True) -> Instance:
    """Build an :class:`Instance` from raw data, checking every invariant.

    ``raw`` is either an existing Instance (re-checked) or a mapping with keys
    ``axis``, ``prefs`` and ``endowment`` holding 0-based integer sequences
    (entries of ``prefs`` may also be order objects). Pass
    ``single_peaked=False`` to admit arbitrary strict orders, e.g. for TTC or
    the envy-cycle checker.
    """
    from .domains import is_single_peaked

    if isinstance(raw, Instance):
        axis, prefs, endowment = raw.axis, raw.profile, raw.endowment.assignment
    else:
        axis, prefs, endowment = raw["axis"], raw["prefs"], raw["endowment"]
    if not isinstance(axis, Axis):
        axis = Axis(tuple(axis))
    n = len(axis)
    if len(prefs) != n:
        raise InvalidInstance(f"expected {n} preference orders, got {len(prefs)}")

    profile = []
    for agent, p in enumerate(prefs):
        if isinstance(p, FlankOrder):
            if p.size != n:
                raise InvalidInstance(f"agent {agent}: order over {p.size} resources, expected {n}")
            order = p
        else:
            ranking = p.ranking if isinstance(p, PreferenceOrder) else tuple(p)
            if len(ranking) != n:
                raise InvalidInstance(
                    f"agent {agent}: ranking has {len(ranking)} entries, expected {n}"
                )
            order = p if isinstance(p, PreferenceOrder) else PreferenceOrder(ranking, agent)
        if single_peaked:
            ok, pair = is_single_peaked(order, axis)
            if not ok:
                raise NotSinglePeaked(agent, pair)
        profile.append(order)

    endowment = tuple(endowment)
    if len(endowment) != n or _check_permutation(endowment, n) is not None:
        raise NotABijection("endowment")
    return Instance(axis, tuple(profile), Allocation(endowment))


class Normalized(NamedTuple):
    """A normalized instance plus the maps back to the original labels.

    ``agents[k]`` is the original agent now indexed ``k`` (it holds resource
    ``k``); ``resources[k]`` is the original resource at axis position ``k``.
    """

    instance: Instance
    agents: tuple[int, ...]
    resources: tuple[int, ...]

    def agent(self, k):
        return self.agents[k]

    def resource(self, k):
        return self.resources[k]

    def allocation_back(self, assignment):
        """Translate a normalized assignment into original labels."""
        out = [0] * len(assignment)
        for k, r in enumerate(assignment):
            out[self.agents[k]] = self.resources[r]
        return Allocation(tuple(out))

    def cycle_back(self, cycle):
        return ImprovingCycle(
            tuple(self.agents[a] for a in cycle.members),
            tuple(self.resources[r] for r in cycle.gets),
        )


def normalize(instance: Instance) -> Normalized:
    """Relabel resources to axis positions and agents to the position they hold.

    Agents are bucketed by the axis position of their endowed resource. Each
    bucket holds exactly one agent, so this is a counting sort in O(n).
    Orders are only rewritten when the axis is not already the identity.
    """
    n = instance.n
    pos = instance.axis.position
    agents = [0] * n
    for a, r in enumerate(instance.endowment.assignment):
        agents[pos[r]] = a
    agents = tuple(agents)
    resources = instance.axis.order
    if instance.is_normalized:
        return Normalized(instance, agents, resources)

    if instance.axis.is_identity:
        profile = tuple(instance.profile[a] for a in agents)
    else:
        profile = tuple(
            PreferenceOrder((pos[r] for r in instance.profile[a].ranking), a)
            for a in agents
        )
    norm = Instance(Axis.identity(n), profile, Allocation.identity(n))
    return Normalized(norm, agents, resources)


def apply_cycle(allocation: Allocation, cycle: ImprovingCycle) -> Allocation:
    """Reassign resources along ``cycle``; agents outside it keep theirs."""
    if len(cycle.members) != len(cycle.gets):
        raise CycleResourceMismatch("members and gets differ in length")
    if len(set(cycle.members)) != len(cycle.members):
        raise CycleResourceMismatch("repeated cycle member")
    held = sorted(allocation[a] for a in cycle.members)
    if sorted(cycle.gets) != held:
        raise CycleResourceMismatch(
            "cycle must redistribute exactly the resources its members hold"
        )
    out = list(allocation.assignment)
    for a, r in zip(cycle.members, cycle.gets):
        out[a] = r
    return Allocation(tuple(out))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a Pareto-optimality check.

    A negative verdict carries an improving ``cycle``; the brute-force oracle
    additionally reports the ``dominance`` witness it found.
    """

    is_po: bool
    cycle: Optional[ImprovingCycle] = None
    dominance: Optional[object] = None

    @property
    def token(self):
        return "PO" if self.is_po else "NOT-PO"

    def __bool__(self):
        return self.is_po
