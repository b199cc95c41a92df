from hypothesis import strategies as st

from housemarket.domains import gen_random_sp, relabel


@st.composite
def sp_instances(draw, min_n=1, max_n=7, relabeled=True):
    """A seeded random SP instance, optionally with shuffled agent/resource names."""
    n = draw(st.integers(min_n, max_n))
    inst = gen_random_sp(n, draw(st.integers(0, 2**64 - 1)))
    if relabeled:
        agents = draw(st.permutations(range(n)))
        resources = draw(st.permutations(range(n)))
        inst = relabel(inst, agents, resources)
    return inst
