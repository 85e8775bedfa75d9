"""Closure engine: fixpoints, membership, easiness, bridge checks."""

import math

import pytest

from partlin.closure import (
    BoundError,
    GeneratorError,
    closure,
    easiness_report,
    member,
    verify_bridge,
)
from partlin.lincomb import LinComb, lc_rotate, lc_tensor
from partlin.partitions import Partition, enumerate_partitions
from partlin.transforms import (
    P_transform,
    T_transform,
    block,
    is_p_invariant,
    pi,
)


UP = Partition.singleton_lower()


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


class TestOrdinary:
    def test_empty_closure_is_noncrossing_pairings(self):
        res = closure([], 5, 4, "ordinary")
        for (k, l) in res.grades():
            count = sum(
                1
                for p in enumerate_partitions(k, l)
                if p.is_pairing() and p.is_noncrossing()
            )
            assert res.spans[(k, l)].dimension() == count
        assert res.spans[(0, 4)].dimension() == 2

    def test_every_noncrossing_pairing_is_inside(self):
        res = closure([], 4, 4, "ordinary")
        for p in enumerate_partitions(2, 2):
            if p.is_pairing() and p.is_noncrossing():
                assert member(res, LinComb.of(p)) == "yes"

    def test_three_block_closure_is_noncrossing(self):
        res = closure([LinComb.of(block(3))], 5, 5, "ordinary")
        for (k, l) in res.grades():
            count = sum(
                1
                for p in enumerate_partitions(k, l)
                if p.is_noncrossing()
            )
            assert res.spans[(k, l)].dimension() == count == catalan(k + l)

    def test_double_singleton_closure_dims(self):
        res = closure([LinComb.of(UP.tensor(UP))], 5, 4, "ordinary")
        assert res.spans[(0, 2)].dimension() == 2

    def test_membership_negative_is_bound_relative(self):
        res = closure([], 4, 2, "ordinary")
        assert member(res, LinComb.of(UP.tensor(UP))) == "not_at_this_bound"
        with pytest.raises(BoundError):
            member(res, LinComb.of(block(3)))

    def test_monotone_in_generators(self):
        small = closure([], 4, 4, "ordinary")
        big = closure([LinComb.of(block(3))], 4, 4, "ordinary")
        for g in small.grades():
            for row in small.spans[g].row_list():
                assert big.spans[g].contains(row)

    def test_deterministic(self):
        a = closure([LinComb.of(block(3))], 4, 4, "ordinary")
        b = closure([LinComb.of(block(3))], 4, 4, "ordinary")
        for g in a.grades():
            assert a.spans[g].rows == b.spans[g].rows

    def test_double_singleton_generators_coincide(self):
        # a pair with two singletons nested inside is a cyclic rotation of
        # the plain double singleton, so both generate the same category
        N = 5
        upup = closure([LinComb.of(UP.tensor(UP))], N, 4, "ordinary")
        nested = closure(
            [LinComb.of(Partition.from_blocks(0, 4, [[1, 4], [2], [3]]))],
            N,
            4,
            "ordinary",
        )
        for g in upup.grades():
            assert upup.spans[g].rows == nested.spans[g].rows
        # strictly below the single-singleton category
        up = closure([LinComb.of(UP)], N, 4, "ordinary")
        for g in upup.grades():
            for row in upup.spans[g].row_list():
                assert up.spans[g].contains(row)
        assert upup.spans[(0, 1)].dimension() == 0
        assert up.spans[(0, 1)].dimension() == 1
        assert upup.spans[(0, 4)].dimension() == 7
        assert up.spans[(0, 4)].dimension() == 9

    def test_crossing_pair_generator_spans_pairings(self):
        # the crossing pair partition only ever produces pairings, so its
        # category is incomparable with the singleton-bearing ones
        N = 5
        crossing = Partition.from_blocks(0, 4, [[1, 3], [2, 4]])
        res = closure([LinComb.of(crossing)], N, 4, "ordinary")
        for (k, l) in res.grades():
            count = sum(
                1 for p in enumerate_partitions(k, l) if p.is_pairing()
            )
            assert res.spans[(k, l)].dimension() == count
        upup = LinComb.of(UP.tensor(UP))
        assert not res.spans[(0, 2)].contains(upup)
        up = closure([LinComb.of(UP)], N, 4, "ordinary")
        assert not up.spans[(0, 4)].contains(LinComb.of(crossing))

    def test_projected_block_chain_is_strict(self):
        # adding projected blocks to the double singleton grows the span
        # strictly: the four-block version adds a row at (0,4), the
        # three-block version further adds the odd grades
        N = 5
        upup = LinComb.of(UP.tensor(UP))
        chain = [
            closure([upup], N, 4, "ordinary"),
            closure([P_transform(LinComb.of(block(4)), N), upup],
                    N, 4, "ordinary"),
            closure([P_transform(LinComb.of(block(3)), N), upup],
                    N, 4, "ordinary"),
        ]
        for lo, hi in ((0, 1), (1, 2)):
            for g in chain[lo].grades():
                for row in chain[lo].spans[g].row_list():
                    assert chain[hi].spans[g].contains(row)
        assert chain[0].spans[(0, 4)].dimension() == 7
        assert chain[1].spans[(0, 4)].dimension() == 8
        assert chain[1].spans[(0, 3)].dimension() == 0
        assert chain[2].spans[(0, 3)].dimension() == 1


class TestReduced:
    def test_rejects_plain_generators(self):
        with pytest.raises(GeneratorError):
            closure([LinComb.of(block(3))], 4, 4, "reduced")

    def test_rows_are_invariant(self):
        N = 4
        res = closure(
            [P_transform(LinComb.of(block(3)), N)], N, 4, "reduced"
        )
        for row in res.all_rows():
            assert is_p_invariant(row, N)

    def test_contains_base_elements(self):
        N = 4
        res = closure([], N, 3, "reduced")
        assert member(res, pi(N)) == "yes"
        assert member(res, lc_rotate(pi(N), "left")) == "yes"
        assert member(res, lc_rotate(pi(N), "right")) == "yes"

    def test_completion_matches_sandwichwise(self):
        # adding the double singleton, closing, then sandwiching each row
        # reproduces the reduced closure grade by grade
        N = 4
        gen = P_transform(LinComb.of(block(3)), N)
        red = closure([gen], N, 4, "reduced")
        upup = LinComb.of(UP.tensor(UP))
        full = closure([gen, upup], N, 4, "ordinary")
        for g in red.grades():
            projected_rows = [
                P_transform(row, N) for row in full.spans[g].row_list()
            ]
            projected_rows = [r for r in projected_rows if not r.is_zero()]
            assert len(projected_rows) >= red.spans[g].dimension()
            for row in projected_rows:
                assert red.spans[g].contains(row)
            for row in red.spans[g].row_list():
                assert full.spans[g].contains(row)


class TestEasiness:
    def test_block_category_easy(self):
        res = closure([LinComb.of(block(4))], 5, 4, "ordinary")
        report = easiness_report(res)
        assert all(e["easy"] for e in report.values())

    def test_twisted_category_not_easy(self):
        N = 5
        res = closure(
            [T_transform(LinComb.of(block(4)), N)], N, 4, "ordinary"
        )
        entry = easiness_report(res)[(0, 4)]
        assert not entry["easy"]
        assert entry["witness"] is not None
        # the witness really lies outside the partition span
        assert entry["partition_span"] < entry["dimension"]

    def test_mixed_generators_not_easy(self):
        N = 5
        gens = [
            P_transform(LinComb.of(block(3)), N),
            LinComb.of(UP.tensor(UP)),
        ]
        res = closure(gens, N, 4, "ordinary")
        report = easiness_report(res)
        assert not all(e["easy"] for e in report.values())
        assert not report[(0, 3)]["easy"]


class TestBridge:
    def test_three_block(self):
        for sign in (1, -1):
            report = verify_bridge([LinComb.of(block(3))], 4, sign, 4)
            assert all(e["equal"] for e in report.values())

    def test_pairings_only(self):
        report = verify_bridge([], 4, 1, 4)
        assert all(e["equal"] for e in report.values())

    def test_crossing(self):
        cross = LinComb.of(Partition.from_blocks(2, 2, [[1, 4], [2, 3]]))
        report = verify_bridge([cross], 4, 1, 4)
        assert all(e["equal"] for e in report.values())
