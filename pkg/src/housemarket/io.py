"""Plain-text instance files.

::

    # comment
    n 5
    axis 1 2 3 4 5
    pref 1: 1 2 3 4 5
    ...
    endow 5 1 3 4 2

Labels are 1-based. ``axis`` lists resources left to right, ``pref i:`` is
agent i's ranking best first, ``endow`` gives the resource held by agents
1..n in order. Every agent needs exactly one ``pref`` line.
"""

from __future__ import annotations

from .core import Instance, validate


class InstanceSyntaxError(ValueError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InstanceSyntaxError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str, *, single_peaked: bool = True) -> Instance:
    n = None
    axis = endow = None
    prefs = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        if head == "n":
            if n is not None:
                raise InstanceSyntaxError(lineno, "duplicate 'n' line")
            values = _ints(rest.split(), lineno)
            n = values[0] if len(values) == 1 else None
            if n is None or n < 1:
                raise InstanceSyntaxError(lineno, "n must be a positive integer")
        elif n is None:
            raise InstanceSyntaxError(lineno, "'n' must come first")
        elif head == "axis":
            if axis is not None:
                raise InstanceSyntaxError(lineno, "duplicate 'axis' line")
            axis = _ints(rest.split(), lineno)
        elif head == "endow":
            if endow is not None:
                raise InstanceSyntaxError(lineno, "duplicate 'endow' line")
            endow = _ints(rest.split(), lineno)
        elif head == "pref":
            label, colon, ranking = rest.partition(":")
            if not colon:
                raise InstanceSyntaxError(lineno, "expected 'pref <agent>: <resources>'")
            (agent,) = _ints([label.strip()], lineno)
            if not 1 <= agent <= n:
                raise InstanceSyntaxError(lineno, f"agent {agent} outside 1..{n}")
            if agent in prefs:
                raise InstanceSyntaxError(lineno, f"duplicate preference for agent {agent}")
            prefs[agent] = _ints(ranking.split(), lineno)
        else:
            raise InstanceSyntaxError(lineno, f"unknown directive {head!r}")
    last = len(text.splitlines())
    if n is None:
        raise InstanceSyntaxError(last, "missing 'n' line")
    if axis is None:
        raise InstanceSyntaxError(last, "missing 'axis' line")
    if endow is None:
        raise InstanceSyntaxError(last, "missing 'endow' line")
    missing = [a for a in range(1, n + 1) if a not in prefs]
    if missing:
        raise InstanceSyntaxError(last, f"missing preference for agent {missing[0]}")
    for what, seq in (("axis", axis), ("endow", endow)):
        if len(seq) != n:
            raise InstanceSyntaxError(last, f"'{what}' has {len(seq)} entries, expected {n}")

    def shift(seq):
        return [r - 1 if 1 <= r <= n else -1 for r in seq]

    raw = {
        "axis": shift(axis),
        "prefs": [shift(prefs[a]) for a in range(1, n + 1)],
        "endowment": shift(endow),
    }
    return validate(raw, single_peaked=single_peaked)


def serialize_instance(instance: Instance) -> str:
    def labels(seq):
        return " ".join(str(r + 1) for r in seq)

    lines = [f"n {instance.n}", f"axis {labels(instance.axis.order)}"]
    for a, order in enumerate(instance.profile):
        lines.append(f"pref {a + 1}: {labels(order.ranking)}")
    lines.append(f"endow {labels(instance.endowment.assignment)}")
    return "\n".join(lines) + "\n"
