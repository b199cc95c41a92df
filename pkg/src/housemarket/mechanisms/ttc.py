"""Top Trading Cycles on strict preferences (any domain)."""

from __future__ import annotations

from ..core import Allocation, Instance


def ttc(instance: Instance) -> Allocation:
    n = instance.n
    profile = instance.profile
    holder = list(instance.endowment.holder())
    endow = instance.endowment.assignment
    alive = [True] * n
    taken = [False] * n
    ptr = [0] * n  # index into each ranking; only moves forward
    result = [None] * n
    stamp = [-1] * n
    left = n
    rnd = 0
    while left:
        succ = {}
        for a in range(n):
            if not alive[a]:
                continue
            ranking = profile[a].ranking
            while taken[ranking[ptr[a]]]:
                ptr[a] += 1
            succ[a] = holder[ranking[ptr[a]]]
        # walk successor pointers; a walk that re-enters its own stamp closed a cycle
        for start in succ:
            if stamp[start] >= 0:
                continue
            tag = rnd * n + start
            a = start
            while stamp[a] < 0:
                stamp[a] = tag
                a = succ[a]
            if stamp[a] != tag:
                continue
            cycle = [a]
            b = succ[a]
            while b != a:
                cycle.append(b)
                b = succ[b]
            for b in cycle:
                result[b] = endow[succ[b]]
            for b in cycle:
                alive[b] = False
                taken[endow[b]] = True
            left -= len(cycle)
        for a in succ:
            if alive[a]:
                stamp[a] = -1
        rnd += 1
    return Allocation(tuple(result))
