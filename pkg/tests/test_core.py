import pytest
from hypothesis import given, settings, strategies as st

from housemarket.core import (
    Allocation,
    Axis,
    CycleResourceMismatch,
    DuplicateResourceInRanking,
    FlankOrder,
    ImprovingCycle,
    NotABijection,
    NotSinglePeaked,
    PreferenceOrder,
    apply_cycle,
    normalize,
    validate,
)
from housemarket.domains import is_single_peaked

from strategies import sp_instances


def raw(axis, prefs, endowment):
    return {"axis": axis, "prefs": prefs, "endowment": endowment}


class TestValidate:
    def test_worked_is_valid(self, worked):
        assert worked.n == 5
        assert worked.endowment.assignment == (4, 0, 2, 3, 1)
        assert worked.profile[4].ranking == (3, 4, 2, 1, 0)

    def test_single_agent(self):
        inst = validate(raw([0], [[0]], [0]))
        assert inst.n == 1 and inst.is_normalized

    def test_not_single_peaked(self):
        # r1 > r3 > r2 > r4 > r5: r2 sits between the peak r1 and r3
        with pytest.raises(NotSinglePeaked) as info:
            validate(raw(list(range(5)), [[0, 2, 1, 3, 4]] + [list(range(5))] * 4, list(range(5))))
        assert info.value.agent == 0
        assert info.value.pair == (1, 2)

    def test_sp_check_can_be_skipped(self):
        inst = validate(raw([0, 1, 2], [[0, 2, 1]] * 3, [0, 1, 2]), single_peaked=False)
        assert inst.profile[0].ranking == (0, 2, 1)

    def test_duplicate_in_ranking(self):
        with pytest.raises(DuplicateResourceInRanking):
            validate(raw([0, 1, 2], [[0, 1, 1], [0, 1, 2], [0, 1, 2]], [0, 1, 2]))

    def test_endowment_not_bijection(self):
        with pytest.raises(NotABijection):
            validate(raw([0, 1], [[0, 1], [0, 1]], [1, 1]))

    def test_axis_not_bijection(self):
        with pytest.raises(NotABijection):
            validate(raw([0, 0], [[0, 1], [0, 1]], [0, 1]))

    @given(sp_instances())
    def test_revalidation_accepts_generated(self, inst):
        assert validate(inst) == inst


class TestOrders:
    def test_rank_table(self):
        o = PreferenceOrder([2, 0, 1])
        assert o.rank == (1, 2, 0)
        assert o.top == 2 and o.snd == 0
        assert o.prefers(0, 1) and not o.prefers(1, 2)

    def test_single_resource_has_no_second(self):
        assert PreferenceOrder([0]).snd is None

    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    @pytest.mark.parametrize("right_first", [True, False])
    def test_flank_order_matches_materialized_ranking(self, n, right_first):
        for peak in range(n):
            f = FlankOrder(n, peak, right_first)
            explicit = PreferenceOrder(f.ranking)
            assert tuple(f.rank_of(r) for r in range(n)) == explicit.rank
            assert f.snd == explicit.snd
            assert f == explicit
            assert is_single_peaked(explicit, Axis.identity(n))[0]

    def test_flank_ranking_shape(self):
        assert FlankOrder(5, 2).ranking == (2, 3, 4, 1, 0)
        assert FlankOrder(5, 2, right_first=False).ranking == (2, 1, 0, 3, 4)


class TestNormalize:
    def test_worked_layout(self, worked):
        norm = normalize(worked)
        # agents along the axis: a2, a5, a3, a4, a1
        assert norm.agents == (1, 4, 2, 3, 0)
        assert norm.resources == (0, 1, 2, 3, 4)
        assert norm.instance.is_normalized
        assert norm.instance.profile[0] == worked.profile[1]

    def test_fixed_point(self, worked_po):
        norm = normalize(worked_po)
        twice = normalize(norm.instance)
        assert twice.instance is norm.instance
        assert twice.agents == tuple(range(5))
        assert twice.resources == tuple(range(5))

    @given(sp_instances())
    def test_idempotent(self, inst):
        once = normalize(inst).instance
        assert normalize(once).instance == once

    @given(sp_instances())
    def test_preserves_preferences(self, inst):
        norm = normalize(inst)
        pos = inst.axis.position
        for k, a in enumerate(norm.agents):
            old, new = inst.profile[a], norm.instance.profile[k]
            assert inst.endowment[a] == norm.resources[k]
            for r in range(inst.n):
                for s in range(inst.n):
                    assert old.prefers(r, s) == new.prefers(pos[r], pos[s])
            assert is_single_peaked(new, norm.instance.axis)[0]

    @given(sp_instances())
    def test_allocation_round_trip(self, inst):
        norm = normalize(inst)
        identity = list(range(inst.n))
        assert norm.allocation_back(identity) == inst.endowment


class TestApplyCycle:
    def test_worked_cycle(self, worked):
        # a2 <- r2 (held by a5), a5 <- r5 (held by a1), a1 <- r1 (held by a2)
        cycle = ImprovingCycle((1, 4, 0), (1, 4, 0))
        assert apply_cycle(worked.endowment, cycle).assignment == (0, 1, 2, 3, 4)

    def test_empty_cycle(self, worked):
        assert apply_cycle(worked.endowment, ImprovingCycle((), ())) == worked.endowment

    def test_mismatch(self, worked):
        with pytest.raises(CycleResourceMismatch):
            apply_cycle(worked.endowment, ImprovingCycle((0, 1), (2, 4)))
        with pytest.raises(CycleResourceMismatch):
            apply_cycle(worked.endowment, ImprovingCycle((0, 0), (4, 4)))

    @given(st.data(), st.integers(1, 9))
    def test_result_is_bijection_and_touches_only_members(self, data, n):
        alloc = Allocation(tuple(data.draw(st.permutations(range(n)))))
        members = data.draw(st.lists(st.integers(0, n - 1), unique=True))
        held = [alloc[a] for a in members]
        gets = data.draw(st.permutations(held)) if held else []
        out = apply_cycle(alloc, ImprovingCycle(tuple(members), tuple(gets)))
        assert sorted(out) == list(range(n))
        for a in range(n):
            if a not in members:
                assert out[a] == alloc[a]
            else:
                assert out[a] == gets[members.index(a)]
