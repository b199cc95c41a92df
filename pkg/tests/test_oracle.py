from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from housemarket.core import Allocation, Instance, apply_cycle
from housemarket.mechanisms import crawler_allocation
from housemarket.oracle import (
    InstanceTooLarge,
    brute_force_po,
    dominates,
    exhaustive_sp_check,
    first_counterexample_po,
    is_individually_rational,
)
from housemarket.domains import gen_random_sp

from strategies import sp_instances


def alloc(*labels):
    """1-based labels as in the worked example."""
    return Allocation(tuple(r - 1 for r in labels))


class TestDominates:
    def test_squared_allocation(self, worked):
        assert dominates(alloc(1, 5, 3, 4, 2), worked.endowment, worked.profile)

    def test_irreflexive(self, worked):
        assert not dominates(worked.endowment, worked.endowment, worked.profile)

    def test_identity_allocation(self, worked):
        assert dominates(alloc(1, 2, 3, 4, 5), worked.endowment, worked.profile)

    def test_not_ir_is_not_dominating(self, worked):
        assert not dominates(alloc(1, 5, 3, 2, 4), worked.endowment, worked.profile)

    @settings(max_examples=60)
    @given(sp_instances(max_n=4))
    def test_irreflexive_and_transitive(self, inst):
        allocs = [Allocation(p) for p in permutations(range(inst.n))]
        for a in allocs:
            assert not dominates(a, a, inst.profile)
        dom = {(i, j) for i, a in enumerate(allocs) for j, b in enumerate(allocs)
               if dominates(a, b, inst.profile)}
        for i, j in dom:
            for k in range(len(allocs)):
                if (j, k) in dom:
                    assert (i, k) in dom


class TestBruteForce:
    def test_worked_not_po(self, worked):
        v = brute_force_po(worked)
        assert not v.is_po
        # lexicographically first dominating allocation
        assert v.dominance.dominating == alloc(1, 2, 3, 4, 5)
        assert v.dominance.strict_improvers == frozenset({0, 1, 4})

    def test_worked_po_allocation(self, worked_po):
        assert brute_force_po(worked_po).is_po

    def test_single_agent(self):
        assert brute_force_po(gen_random_sp(1, 0)).is_po

    def test_cap(self):
        with pytest.raises(InstanceTooLarge):
            brute_force_po(gen_random_sp(9, 0))
        assert brute_force_po(gen_random_sp(3, 0), cap=3) is not None

    @settings(max_examples=300)
    @given(sp_instances(max_n=6))
    def test_matches_scalar_enumeration(self, inst):
        v = brute_force_po(inst)
        first = first_counterexample_po(inst, inst.endowment)
        assert v.is_po == (first is None)
        if not v.is_po:
            assert v.dominance.dominating == first
            improved = apply_cycle(inst.endowment, v.cycle)
            assert dominates(improved, inst.endowment, inst.profile)
            for a, r in v.cycle.pairs():
                assert inst.profile[a].prefers(r, inst.endowment[a])


class TestIndividualRationality:
    def test_worked_violator(self, worked):
        assert is_individually_rational(alloc(1, 5, 3, 2, 4), worked) == (False, 3)

    def test_endowment(self, worked):
        assert is_individually_rational(worked.endowment, worked) == (True, None)

    def test_crawler_n20(self):
        for seed in range(1000):
            inst = gen_random_sp(20, seed)
            assert is_individually_rational(crawler_allocation(inst), inst)[0]


def worst_choice_dictatorship(instance: Instance) -> Allocation:
    """Agents in index order take their stated *least* favourite free resource."""
    taken = set()
    out = []
    for order in instance.profile:
        r = next(r for r in reversed(order.ranking) if r not in taken)
        taken.add(r)
        out.append(r)
    return Allocation(tuple(out))


class TestStrategyProofnessSearch:
    def test_detects_manipulable_mechanism(self):
        ok, cex = exhaustive_sp_check(2, worst_choice_dictatorship)
        assert not ok
        true_order = cex.instance.profile[cex.agent]
        assert true_order.prefers(cex.misreport_gets, cex.truthful_gets)
        lied = cex.instance.with_order(cex.agent, cex.misreport)
        assert worst_choice_dictatorship(lied)[cex.agent] == cex.misreport_gets

    def test_crawler_n3(self):
        assert exhaustive_sp_check(3, crawler_allocation) == (True, None)

    def test_cap(self):
        with pytest.raises(InstanceTooLarge):
            exhaustive_sp_check(5, crawler_allocation)
