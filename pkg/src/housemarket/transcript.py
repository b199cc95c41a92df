"""Bit-exact communication accounting for the Crawler and the Diver.

Costs per answer:

=================  ============================  ====================
query kind         answer                        bits
=================  ============================  ====================
``crawler-screen``  ``pass``                      1
``crawler-screen``  ``designate(r)``              ``ceil(log2 n)``
``diver-main``      pass / pick-current / left    2
``backtrack``       ``yes`` / ``no``              1
=================  ============================  ====================
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

CRAWLER_SCREEN = "crawler-screen"
DIVER_MAIN = "diver-main"
BACKTRACK = "backtrack"

PASS = "pass"
PICK_CURRENT = "pick-current"
DESIGNATE = "designate"
YES = "yes"
NO = "no"


class BoundViolated(AssertionError):
    def __init__(self, total, bound):
        self.total = total
        self.bound = bound
        super().__init__(f"transcript uses {total} bits, bound is {bound}")


def designation_bits(n):
    """Whole bits needed to name one of ``n`` resources: ``ceil(log2 n)``."""
    return (n - 1).bit_length()


class QueryEvent(NamedTuple):
    agent: int
    kind: str
    answer: str
    bits: int
    resource: Optional[int] = None  # set for designate answers

    def answer_token(self, resource_label=lambda r: r + 1):
        if self.answer == DESIGNATE:
            return f"{DESIGNATE}({resource_label(self.resource)})"
        return self.answer


@dataclass(frozen=True)
class Transcript:
    """Ordered query/answer events and their total cost.

    ``events`` is None for a totals-only transcript (large runs where keeping
    every event is not affordable); ``total_bits`` and ``n_events`` are exact
    either way.
    """

    events: Optional[tuple[QueryEvent, ...]]
    total_bits: int
    n_events: int

    @classmethod
    def from_events(cls, events):
        events = tuple(events)
        return cls(events, sum(e.bits for e in events), len(events))

    @classmethod
    def totals_only(cls, total_bits, n_events):
        return cls(None, int(total_bits), int(n_events))

    def relabel(self, agent_of, resource_of):
        """Rename agents and designated resources via the given sequences."""
        if self.events is None:
            return self
        return Transcript(
            tuple(
                e._replace(
                    agent=agent_of[e.agent],
                    resource=None if e.resource is None else resource_of[e.resource],
                )
                for e in self.events
            ),
            self.total_bits,
            self.n_events,
        )

    def serialize(self, agent_label=lambda a: a + 1, resource_label=lambda r: r + 1):
        """One ``Q``/``A`` line pair per event, then ``TOTAL``; newline-terminated."""
        lines = []
        for e in self.events or ():
            lines.append(f"Q {agent_label(e.agent)} {e.kind}")
            lines.append(f"A {agent_label(e.agent)} {e.answer_token(resource_label)} {e.bits}")
        lines.append(f"TOTAL {self.total_bits}")
        return "\n".join(lines) + "\n"


def crawler_bound(n: int) -> int:
    return n * (n + 1) // 2 + n * designation_bits(n)


def diver_bound(n: int) -> int:
    return 4 * n


BOUNDS = {"crawler": crawler_bound, "diver": diver_bound}


def check_transcript(t: Transcript, protocol: str, n: int) -> bool:
    """Return True when ``t`` is within the protocol's bound, else raise."""
    if t.events is not None and sum(e.bits for e in t.events) != t.total_bits:
        raise ValueError("transcript total does not match its events")
    bound = BOUNDS[protocol](n)
    if t.total_bits > bound:
        raise BoundViolated(t.total_bits, bound)
    return True
