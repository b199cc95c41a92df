"""Brute-force ground truth at small n: dominance, Pareto-optimality,
individual rationality and strategy-proofness.

Nothing here depends on the mechanisms. Allocations are enumerated in
lexicographic order (``itertools.permutations(range(n))``), so "the first
dominating allocation" is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Optional

import numpy as np

from .core import Allocation, Axis, ImprovingCycle, Instance, Verdict
from .domains import all_sp_orders

DEFAULT_CAP = 8


class InstanceTooLarge(ValueError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"n={n} exceeds the brute-force cap of {cap}")


@dataclass(frozen=True)
class DominanceWitness:
    dominating: Allocation
    strict_improvers: frozenset


def dominates(pi_prime, pi, profile) -> bool:
    """True iff every agent weakly prefers ``pi_prime`` and someone strictly does."""
    strict = False
    for a, order in enumerate(profile):
        new, old = pi_prime[a], pi[a]
        if new == old:
            continue
        if order.prefers(old, new):
            return False
        strict = True
    return strict


@lru_cache(maxsize=None)
def _all_allocations(n):
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


def rank_matrix(instance: Instance):
    return np.array([o.rank for o in instance.profile], dtype=np.int64)


def _cycle_through(agent, pi, pi_prime):
    """The trading cycle of ``pi -> pi_prime`` containing ``agent``."""
    holder = pi.holder()
    members, gets = [], []
    a = agent
    while True:
        members.append(a)
        gets.append(pi_prime[a])
        a = holder[pi_prime[a]]
        if a == agent:
            break
    return ImprovingCycle(tuple(members), tuple(gets))


def brute_force_po(instance: Instance, cap: int = DEFAULT_CAP) -> Verdict:
    """Enumerate all n! allocations against the endowment.

    On NOT-PO the verdict carries the first dominating allocation (as a
    :class:`DominanceWitness`) and, as its cycle, the exchange cycle of the
    lowest-indexed strict improver. Every agent who moves in a dominating
    allocation strictly improves, so that cycle is improving.
    """
    n = instance.n
    if n > cap:
        raise InstanceTooLarge(n, cap)
    allocs = _all_allocations(n)
    rank = rank_matrix(instance)
    agents = np.arange(n)
    own = rank[agents, np.asarray(instance.endowment.assignment)]
    got = rank[agents[None, :], allocs]
    dom = (got <= own).all(axis=1) & (got < own).any(axis=1)
    if not dom.any():
        return Verdict(True)
    row = int(np.argmax(dom))
    winner = Allocation(tuple(int(r) for r in allocs[row]))
    improvers = frozenset(int(a) for a in np.flatnonzero(got[row] < own))
    cycle = _cycle_through(min(improvers), instance.endowment, winner)
    return Verdict(False, cycle, DominanceWitness(winner, improvers))


def is_pareto_optimal(pi: Allocation, instance: Instance, cap: int = DEFAULT_CAP) -> bool:
    """Brute-force PO test of an arbitrary allocation of ``instance``."""
    return brute_force_po(instance.with_endowment(pi.assignment), cap).is_po


def is_individually_rational(pi: Allocation, instance: Instance):
    """Return ``(ok, violator)``; violator is the first agent worse off than endowed."""
    endow = instance.endowment
    for a, order in enumerate(instance.profile):
        if order.prefers(endow[a], pi[a]):
            return False, a
    return True, None


@dataclass(frozen=True)
class Manipulation:
    instance: Instance
    agent: int
    misreport: object
    truthful_gets: int
    misreport_gets: int


def exhaustive_sp_check(n: int, mechanism: Callable[[Instance], Allocation], cap: int = 4):
    """Search every single-peaked instance of size n for a profitable misreport.

    Covers all profiles over the identity axis, all endowments, every agent,
    and every other single-peaked order she could report. Outcomes are
    memoized per (profile, endowment); a misreport yields another instance
    of the same enumeration. Returns ``(True, None)`` or
    ``(False, Manipulation)``.
    """
    if n > cap:
        raise InstanceTooLarge(n, cap)
    orders = all_sp_orders(n)
    axis = Axis.identity(n)
    memo = {}

    def outcome(prof, endow):
        key = (prof, endow)
        if key not in memo:
            inst = Instance(axis, tuple(orders[k] for k in prof), Allocation(endow))
            memo[key] = mechanism(inst).assignment
        return memo[key]

    endowments = list(permutations(range(n)))
    for prof in product(range(len(orders)), repeat=n):
        for endow in endowments:
            truthful = outcome(prof, endow)
            for agent in range(n):
                true_order = orders[prof[agent]]
                for lie in range(len(orders)):
                    if lie == prof[agent]:
                        continue
                    alt = outcome(prof[:agent] + (lie,) + prof[agent + 1:], endow)
                    if true_order.prefers(alt[agent], truthful[agent]):
                        inst = Instance(axis, tuple(orders[k] for k in prof), Allocation(endow))
                        return False, Manipulation(
                            inst, agent, orders[lie], truthful[agent], alt[agent]
                        )
    return True, None


def first_counterexample_po(instance: Instance, pi: Allocation) -> Optional[Allocation]:
    """First allocation (lexicographic) dominating ``pi``, or None."""
    for perm in permutations(range(instance.n)):
        if dominates(perm, pi, instance.profile):
            return Allocation(perm)
    return None
