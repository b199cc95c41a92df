"""The Diver: a single left-to-right screening that decides whether the
endowment of a single-peaked market is Pareto-optimal.

Each screened agent gives one of three answers:

1. pick her current resource. This starts a backtrack-call: earlier divers
   are asked, most recent first, whether they still dive past the picked
   resource. Each one who declines keeps her own resource.
2. pass. She is content to dive rightward and joins the diver list.
3. claim a resource to her left. The endowment is not PO, and the divers
   from that resource up to her form an improving cycle with her.

Answers are simulated from the agents' orders. For an agent whose peak is
left of her slot, the only resources that can beat her own are the two
available ones that bracket her peak. Those are found by bisection in the
diver list, so the machine-side cost is O(n log n) in the worst case while
the number of protocol steps stays O(n).
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from ..core import ImprovingCycle, Instance, Verdict, normalize
from ..transcript import (
    BACKTRACK,
    DESIGNATE,
    DIVER_MAIN,
    NO,
    PASS,
    PICK_CURRENT,
    YES,
    QueryEvent,
    Transcript,
)


@dataclass(frozen=True)
class DiverState:
    """Snapshot after a screening step, in normalized labels.

    ``divers`` are the agents who passed and have not yet left, in ascending
    position; ``position`` is the slot just screened.
    """

    divers: tuple[int, ...]
    position: int
    matched: frozenset

    def invariant_holds(self, instance: Instance) -> bool:
        """Every diver strictly prefers the nearest available resource on her right."""
        n = instance.n
        for d in self.divers:
            nxt = next((r for r in range(d + 1, n) if r not in self.matched), None)
            if nxt is None or not instance.profile[d].prefers(nxt, d):
                return False
        return True


def _dive(inst: Instance, observer=None):
    n = inst.n
    profile = inst.profile
    peaks = inst.peaks
    divers = []
    matched = set() if observer else None
    events = []
    for i in range(n):
        p = peaks[i]
        coveted = None
        if p > i:
            answer = PASS
        elif p == i:
            answer = PICK_CURRENT
        else:
            # best available: a diver's resource around the peak, or r_i itself
            k = bisect_right(divers, p)
            left = divers[k - 1] if k else None
            right = divers[k] if k < len(divers) else i
            if left == p or (left is not None and profile[i].prefers(left, right)):
                best = left
            else:
                best = right
            if best == i:
                answer = PICK_CURRENT
            else:
                answer, coveted = DESIGNATE, best
        events.append(QueryEvent(i, DIVER_MAIN, answer, 2, coveted))

        if answer == PASS:
            divers.append(i)
        elif answer == PICK_CURRENT:
            if observer:
                matched.add(i)
            nxt = i + 1 if i + 1 < n else None
            while divers:
                j = divers[-1]
                dives = nxt is not None and profile[j].prefers(nxt, j)
                events.append(QueryEvent(j, BACKTRACK, YES if dives else NO, 1))
                if dives:
                    break
                divers.pop()
                if observer:
                    matched.add(j)
        else:
            members = divers[bisect_left(divers, coveted):] + [i]
            gets = members[1:] + [coveted]
            return Verdict(False, ImprovingCycle(tuple(members), tuple(gets))), events
        if observer:
            observer(DiverState(tuple(divers), i, frozenset(matched)))
    return Verdict(True), events


def diver(instance: Instance, *, observer=None):
    """Check whether the endowment is Pareto-optimal; return ``(verdict, transcript)``.

    Agents, resources and the witness cycle are reported in the instance's
    own labels. ``observer``, if given, is called with a :class:`DiverState`
    (normalized labels) after every completed screening step.
    """
    norm = normalize(instance)
    verdict, events = _dive(norm.instance, observer)
    if norm.instance is instance:
        return verdict, Transcript.from_events(events)
    if verdict.cycle is not None:
        verdict = Verdict(False, norm.cycle_back(verdict.cycle))
    transcript = Transcript.from_events(events).relabel(norm.agents, norm.resources)
    return verdict, transcript
