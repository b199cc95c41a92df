"""General-domain Pareto-optimality check via cycles in the strict-envy digraph.

Edge ``i -> j`` when agent i strictly prefers j's endowed resource to her
own. A directed cycle is an exchange that strictly improves everyone on it,
and an acyclic graph admits no such exchange. Checking costs O(n^2).
"""

from __future__ import annotations

from ..core import ImprovingCycle, Instance, Verdict

WHITE, GREY, BLACK = 0, 1, 2


def envy_graph(instance: Instance):
    endow = instance.endowment.assignment
    n = instance.n
    out = []
    for i in range(n):
        order = instance.profile[i]
        mine = endow[i]
        out.append([j for j in range(n) if order.prefers(endow[j], mine)])
    return out


def find_cycle(adj):
    """First directed cycle found by DFS from vertices in index order, or None."""
    color = [WHITE] * len(adj)
    for root in range(len(adj)):
        if color[root] != WHITE:
            continue
        path = [root]
        iters = [iter(adj[root])]
        color[root] = GREY
        while iters:
            for v in iters[-1]:
                if color[v] == GREY:
                    return path[path.index(v):]
                if color[v] == WHITE:
                    color[v] = GREY
                    path.append(v)
                    iters.append(iter(adj[v]))
                    break
            else:
                color[path.pop()] = BLACK
                iters.pop()
    return None


def cycle_check_po(instance: Instance) -> Verdict:
    cycle = find_cycle(envy_graph(instance))
    if cycle is None:
        return Verdict(True)
    endow = instance.endowment.assignment
    gets = tuple(endow[cycle[(k + 1) % len(cycle)]] for k in range(len(cycle)))
    return Verdict(False, ImprovingCycle(tuple(cycle), gets))
