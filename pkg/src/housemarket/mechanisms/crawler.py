"""The Crawler: an individually rational, Pareto-optimal allocation procedure
for single-peaked house markets.

Agents sit in a row ordered by the axis position of the resource they hold.
Each round screens them from the left. The first agent whose best remaining
resource is not strictly to her right takes it and leaves. Everyone between
that resource and her slides one slot leftward. Then screening restarts.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from ..core import Allocation, FlankOrder, Instance, normalize
from ..transcript import (
    CRAWLER_SCREEN,
    DESIGNATE,
    PASS,
    QueryEvent,
    Transcript,
    designation_bits,
)


@dataclass(frozen=True)
class CrawlerTrace:
    """``picks[k] = (agent, resource, round)``; one pick per screening round."""

    picks: tuple[tuple[int, int, int], ...]
    final: Allocation


def _top_index(order, peak, res):
    """Index in ``res`` (sorted positions) of the agent's best remaining resource."""
    k = bisect_left(res, peak)
    if k < len(res) and res[k] == peak:
        return k
    if k == len(res):
        return k - 1
    if k > 0 and order.prefers(res[k - 1], res[k]):
        return k - 1
    return k


def _crawl(inst: Instance, record: bool):
    n = inst.n
    profile = inst.profile
    peaks = inst.peaks
    dbits = designation_bits(n)
    agents = list(range(n))
    res = list(range(n))
    assignment = [0] * n
    picks = []
    events = []
    for rnd in range(n):
        m = len(agents)
        t = m - 1
        # the last remaining agent always stops the screening
        for s in range(m - 1):
            a = agents[s]
            if profile[a].prefers(res[s], res[s + 1]):
                t = s
                break
            if record:
                events.append(QueryEvent(a, CRAWLER_SCREEN, PASS, 1))
        a = agents[t]
        k = _top_index(profile[a], peaks[a], res)
        r = res[k]
        if record:
            events.append(QueryEvent(a, CRAWLER_SCREEN, DESIGNATE, dbits, r))
        assignment[a] = r
        picks.append((a, r, rnd))
        del agents[t]
        del res[k]
    return assignment, picks, events


def _kernel_inputs(inst: Instance):
    from ._kernel import FLANK, RANK

    n = inst.n
    peak = np.asarray(inst.peaks, dtype=np.int64)
    if all(isinstance(o, FlankOrder) for o in inst.profile):
        right_first = np.array([o.right_first for o in inst.profile], dtype=np.bool_)
        return FLANK, peak, np.zeros((1, 1), np.int64), right_first
    rank = np.array([o.rank for o in inst.profile], dtype=np.int64).reshape(n, n)
    return RANK, peak, rank, np.zeros(1, np.bool_)


def _crawl_compiled(inst: Instance):
    from ._kernel import crawl

    mode, peak, rank, right_first = _kernel_inputs(inst)
    assignment, pick_agent, pick_res, n_passes = crawl(inst.n, mode, peak, rank, right_first)
    picks = [(a, r, k) for k, (a, r) in enumerate(zip(pick_agent.tolist(), pick_res.tolist()))]
    n = inst.n
    transcript = Transcript.totals_only(
        int(n_passes) + n * designation_bits(n), int(n_passes) + n
    )
    return assignment.tolist(), picks, transcript


def crawler(instance: Instance, *, events: bool = True):
    """Run the Crawler; return ``(allocation, trace, transcript)`` in the instance's labels.

    With ``events=False`` the screening runs in a compiled kernel and the
    transcript carries exact totals but no event list. Use it when n is too
    large to keep roughly n**2/2 events in memory.
    """
    norm = normalize(instance)
    if events:
        assignment, picks, evs = _crawl(norm.instance, record=True)
        transcript = Transcript.from_events(evs)
    else:
        assignment, picks, transcript = _crawl_compiled(norm.instance)
    if norm.instance is instance:
        allocation = Allocation(tuple(assignment))
        return allocation, CrawlerTrace(tuple(picks), allocation), transcript
    transcript = transcript.relabel(norm.agents, norm.resources)
    allocation = norm.allocation_back(assignment)
    trace = CrawlerTrace(
        tuple((norm.agents[a], norm.resources[r], k) for a, r, k in picks),
        allocation,
    )
    return allocation, trace, transcript


def crawler_allocation(instance: Instance) -> Allocation:
    """Just the allocation, skipping transcript bookkeeping."""
    norm = normalize(instance)
    assignment, _, _ = _crawl(norm.instance, record=False)
    return norm.allocation_back(assignment)
