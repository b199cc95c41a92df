"""Single-peakedness recognition and seeded instance generators.

Randomness comes from numpy's PCG64 bit generator seeded with
``SeedSequence(seed)``; only its raw 64-bit output stream is consumed.
Coins and bounded integers are derived from raw words by the rules in
:class:`Stream`, so a ``(n, seed)`` pair yields the same instance on any
platform and numpy version that keeps PCG64's raw stream stable.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .core import (
    Allocation,
    Axis,
    FlankOrder,
    Instance,
    NotSinglePeaked,
    PreferenceOrder,
)

U64 = 1 << 64


class ProfilesIdentical(ValueError):
    pass


def is_single_peaked(order, axis: Axis):
    """Check ``order`` against ``axis``; return ``(ok, violating_pair)``.

    Walks the ranking outward from the peak: each next resource must extend
    the contiguous block of already-ranked positions by one on the left or
    on the right. On failure the pair ``(r1, r2)`` names a resource ``r1``
    lying between the peak and ``r2`` that is ranked below ``r2``.
    """
    if isinstance(order, FlankOrder) and axis.is_identity and len(axis) == order.size:
        return True, None
    pos = axis.position
    ranking = order.ranking
    lo = hi = pos[ranking[0]]
    for r in ranking[1:]:
        q = pos[r]
        if q == lo - 1:
            lo = q
        elif q == hi + 1:
            hi = q
        else:
            between = axis.order[lo - 1] if q < lo else axis.order[hi + 1]
            return False, (between, r)
    return True, None


class Stream:
    """Deterministic draws from a PCG64 raw stream.

    * ``coin()``: bits of successive raw words, least significant first.
    * ``below(m)``: rejection sampling; a raw word ``x`` is accepted when
      ``x < 2**64 - (2**64 % m)`` and mapped to ``x % m``.
    """

    def __init__(self, seed: int):
        if not 0 <= int(seed) < U64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self._bg = np.random.PCG64(np.random.SeedSequence(int(seed)))
        self._word = 0
        self._bits_left = 0

    def raw(self):
        return int(self._bg.random_raw())

    def coin(self):
        if self._bits_left == 0:
            self._word = self.raw()
            self._bits_left = 64
        bit = self._word & 1
        self._word >>= 1
        self._bits_left -= 1
        return bit

    def below(self, m):
        if m <= 1:
            return 0
        limit = U64 - (U64 % m)
        while True:
            x = self.raw()
            if x < limit:
                return x % m

    def permutation(self, n):
        """Uniform permutation of ``range(n)`` by Fisher-Yates, high index first."""
        items = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def sp_order_from_bits(n, bits):
    """Single-peaked order on the identity axis from ``n - 1`` coin values.

    Built worst-first: bit 1 places the leftmost unplaced resource, bit 0 the
    rightmost. The last unplaced resource is the peak. Distinct bit strings
    give distinct orders, so this is a bijection onto all 2**(n-1) orders.
    """
    lo, hi = 0, n - 1
    worst_first = []
    for b in bits:
        if b:
            worst_first.append(lo)
            lo += 1
        else:
            worst_first.append(hi)
            hi -= 1
    assert lo == hi, "need exactly n - 1 bits"
    worst_first.append(lo)
    return PreferenceOrder(reversed(worst_first))


def random_sp_order(n, stream: Stream):
    return sp_order_from_bits(n, [stream.coin() for _ in range(n - 1)])


def all_sp_orders(n):
    """All 2**(n-1) single-peaked orders on the identity axis, in bit-count order."""
    return [sp_order_from_bits(n, bits) for bits in product((0, 1), repeat=n - 1)]


def gen_random_sp(n: int, seed: int) -> Instance:
    """Identity axis, uniform single-peaked orders, uniform random endowment.

    Draw order: agent 0's order, ..., agent n-1's order, then the endowment.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    stream = Stream(seed)
    profile = tuple(random_sp_order(n, stream) for _ in range(n))
    endowment = Allocation(tuple(stream.permutation(n)))
    return Instance(Axis.identity(n), profile, endowment)


def gen_consensual(n: int, shared_order) -> Instance:
    """Every agent shares ``shared_order``; agent i holds resource i."""
    if not isinstance(shared_order, (PreferenceOrder, FlankOrder)):
        shared_order = PreferenceOrder(shared_order)
    if len(shared_order) != n:
        raise ValueError(f"shared order covers {len(shared_order)} resources, expected {n}")
    axis = Axis.identity(n)
    ok, pair = is_single_peaked(shared_order, axis)
    if not ok:
        raise NotSinglePeaked(None, pair)
    return Instance(axis, (shared_order,) * n, Allocation.identity(n))


def gen_random_consensual(n: int, seed: int) -> Instance:
    return gen_consensual(n, random_sp_order(n, Stream(seed)))


def _shared_order(instance):
    first = instance.profile[0]
    if any(o != first for o in instance.profile[1:]):
        raise ValueError("instance is not consensual")
    return first


def gen_fooling_mixed(consensual_i: Instance, consensual_j: Instance) -> Instance:
    """Mix two consensual instances so their common endowment stops being PO.

    Takes the first adjacent pair ``(r_p, r_q)`` of the first shared order
    that the second shared order inverts. The holder of ``r_p`` switches to
    the second order; everyone else keeps the first. The holders of ``r_p``
    and ``r_q`` then both want to swap.
    """
    if consensual_i.n != consensual_j.n:
        raise ValueError("instances differ in size")
    if consensual_i.endowment != consensual_j.endowment:
        raise ValueError("instances differ in endowment")
    order_i = _shared_order(consensual_i)
    order_j = _shared_order(consensual_j)
    if order_i == order_j:
        raise ProfilesIdentical("the two consensual profiles are identical")
    ranking = order_i.ranking
    for r_p, r_q in zip(ranking, ranking[1:]):
        if order_j.prefers(r_q, r_p):
            break
    p = consensual_i.endowment.holder()[r_p]
    return consensual_i.with_order(p, order_j)


def gen_random_fooling(n: int, seed: int) -> Instance:
    """Draw two distinct shared orders from one stream and mix them."""
    if n < 2:
        raise ValueError("a fooling pair needs n >= 2")
    stream = Stream(seed)
    first = random_sp_order(n, stream)
    second = random_sp_order(n, stream)
    while second == first:
        second = random_sp_order(n, stream)
    return gen_fooling_mixed(gen_consensual(n, first), gen_consensual(n, second))


def gen_crawler_worstcase(n: int) -> Instance:
    """Agent i holds r_i and peaks at r_{i+1}; the last agent peaks at her own.

    Orders rank the whole right flank (moving away from the peak) before the
    left flank. The endowment is PO, yet every Crawler screening pass
    traverses all remaining agents.
    """
    if n < 2:
        raise ValueError("worst-case family needs n >= 2")
    profile = tuple(FlankOrder(n, min(i + 1, n - 1)) for i in range(n))
    return Instance(Axis.identity(n), profile, Allocation.identity(n))


def gen_own_peaks(n: int, seed: int) -> Instance:
    """Every agent initially holds her peak, with a random single-peaked tail."""
    stream = Stream(seed)
    profile = []
    for peak in range(n):
        lo, hi = 0, n - 1
        worst_first = []
        while lo < peak or hi > peak:
            take_left = lo < peak and (hi == peak or stream.coin())
            if take_left:
                worst_first.append(lo)
                lo += 1
            else:
                worst_first.append(hi)
                hi -= 1
        worst_first.append(peak)
        profile.append(PreferenceOrder(reversed(worst_first)))
    return Instance(Axis.identity(n), tuple(profile), Allocation.identity(n))


def relabel(instance: Instance, agents, resources) -> Instance:
    """Rename agent ``a`` to ``agents[a]`` and resource ``r`` to ``resources[r]``.

    The axis, orders and endowment are all rewritten, so the market is the
    same up to names.
    """
    n = instance.n
    axis = Axis(tuple(resources[r] for r in instance.axis.order))
    profile = [None] * n
    endow = [0] * n
    for a in range(n):
        profile[agents[a]] = PreferenceOrder(resources[r] for r in instance.profile[a].ranking)
        endow[agents[a]] = resources[instance.endowment[a]]
    return Instance(axis, tuple(profile), Allocation(tuple(endow)))


def mirror(instance: Instance) -> Instance:
    """Flip the market left-to-right: resource r becomes n-1-r, axis kept."""
    n = instance.n
    flip = [n - 1 - r for r in range(n)]
    inv_axis = Axis(tuple(flip[r] for r in reversed(instance.axis.order)))
    profile = tuple(PreferenceOrder(flip[r] for r in o.ranking) for o in instance.profile)
    endow = Allocation(tuple(flip[r] for r in instance.endowment))
    return Instance(inv_axis, profile, endow)
