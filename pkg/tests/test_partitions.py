"""Two-row partition diagrams and their raw operations."""

import math

import pytest
from hypothesis import given, strategies as st

from partlin.partitions import (
    CompositionError,
    MalformedPartition,
    Partition,
    RotationError,
    bell,
    compose,
    enumerate_partitions,
    parse_partition,
)


def rand_partition(draw_labels, k, l):
    return Partition(k, l, draw_labels)


@st.composite
def partitions(draw, max_points=5):
    k = draw(st.integers(0, max_points))
    l = draw(st.integers(0, max_points - k))
    labels = draw(
        st.lists(
            st.integers(0, max(0, k + l - 1)),
            min_size=k + l,
            max_size=k + l,
        )
    )
    return Partition(k, l, labels)


class TestCanonical:
    def test_label_normalization(self):
        assert Partition(0, 3, (5, 2, 5)).labels == (0, 1, 0)

    def test_from_blocks_round_trip(self):
        p = Partition.from_blocks(2, 2, [[1, 4], [2, 3]])
        assert p.blocks() == [(1, 4), (2, 3)]
        assert parse_partition(str(p)) == p

    def test_from_blocks_errors(self):
        with pytest.raises(MalformedPartition):
            Partition.from_blocks(1, 1, [[1]])
        with pytest.raises(MalformedPartition):
            Partition.from_blocks(1, 1, [[1, 2], [2]])
        with pytest.raises(MalformedPartition):
            Partition.from_blocks(1, 1, [[1, 2, 3]])

    def test_parse_literal(self):
        p = parse_partition("P(1,2){1,3}{2}")
        assert p.upper == 1 and p.lower == 2
        assert p.blocks() == [(1, 3), (2,)]

    @given(partitions())
    def test_str_parse_round_trip(self, p):
        assert parse_partition(str(p)) == p


class TestStructure:
    def test_predicates(self):
        b3 = Partition(0, 3, (0, 0, 0))
        assert not b3.has_singleton() and not b3.is_pairing()
        ident = Partition.identity()
        assert ident.is_pairing()
        up = Partition.singleton_lower()
        assert up.has_singleton()

    def test_block_count(self):
        assert Partition(2, 2, (0, 1, 1, 0)).block_count() == 2
        assert Partition.empty().block_count() == 0

    def test_enumeration_counts_are_bell(self):
        for n in range(7):
            assert bell(n) == len(enumerate_partitions(0, n))
        assert [bell(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]

    def test_noncrossing_counts_are_catalan(self):
        for k in range(4):
            for l in range(5 - k):
                n = k + l
                catalan = math.comb(2 * n, n) // (n + 1)
                count = sum(
                    1
                    for p in enumerate_partitions(k, l)
                    if p.is_noncrossing()
                )
                assert count == catalan

    def test_crossing_example(self):
        cross = Partition.from_blocks(2, 2, [[1, 4], [2, 3]])
        assert not cross.is_noncrossing()
        # same blocks all on one row do cross
        flat = Partition.from_blocks(0, 4, [[1, 3], [2, 4]])
        assert not flat.is_noncrossing()
        nested = Partition.from_blocks(0, 4, [[1, 4], [2, 3]])
        assert nested.is_noncrossing()


class TestOperations:
    def test_tensor(self):
        up = Partition.singleton_lower()
        two = up.tensor(up)
        assert two.labels == (0, 1)
        cup = Partition.pair_lower()
        assert cup.tensor(cup).blocks() == [(1, 2), (3, 4)]

    def test_involute(self):
        p = Partition.from_blocks(1, 2, [[1, 2], [3]])
        q = p.involute()
        assert (q.upper, q.lower) == (2, 1)
        assert q.involute() == p

    def test_compose_identity(self):
        ident = Partition.identity()
        p = Partition.from_blocks(1, 1, [[1], [2]])
        assert compose(p, ident) == (p, 0)
        assert compose(ident, p) == (p, 0)

    def test_compose_loop(self):
        cup = Partition.pair_lower()
        cap = Partition.pair_upper()
        result, loops = compose(cap, cup)
        assert result == Partition.empty()
        assert loops == 1

    def test_compose_no_loop_through_boundary(self):
        # middle component connected to the boundary is not a loop
        cup = Partition.pair_lower()
        hook = Partition.from_blocks(2, 1, [[1, 3], [2]])
        result, loops = compose(hook, cup)
        assert loops == 0
        assert result == Partition.singleton_lower()

    def test_compose_circle_is_loop(self):
        # gluing a cup onto a cap with a spectator strand closes a circle
        left = Partition.pair_lower().tensor(Partition.identity())
        right = Partition.pair_upper().tensor(Partition.identity())
        result, loops = compose(right, left)
        assert result == Partition.identity() and loops == 1

    def test_compose_shape_error(self):
        with pytest.raises(CompositionError):
            compose(Partition.pair_upper(), Partition.singleton_lower())

    def test_snake_identities(self):
        # (cap ox id).(id ox cup) = id on one strand
        ident = Partition.identity()
        cup = Partition.pair_lower()
        cap = Partition.pair_upper()
        left = ident.tensor(cup)  # (1, 3)
        right = cap.tensor(ident)  # (3, 1)
        result, loops = compose(right, left)
        assert result == ident and loops == 0

    def test_rotations(self):
        p = Partition.from_blocks(1, 2, [[1, 2], [3]])
        assert p.rotate_left_inv().rotate_left() == p
        assert p.rotate_right().rotate_right_inv() == p
        q = p.rotate_left()
        assert (q.upper, q.lower) == (0, 3)

    def test_rotation_moves_points(self):
        # left rotation carries the first upper point to the lower front
        p = Partition.from_blocks(2, 0, [[1, 2]])
        q = p.rotate_left()
        assert q == Partition.from_blocks(1, 1, [[1, 2]])

    def test_rotation_errors(self):
        with pytest.raises(RotationError):
            Partition.pair_lower().rotate_left()
        with pytest.raises(RotationError):
            Partition.pair_upper().rotate_right()
        with pytest.raises(RotationError):
            Partition.identity().rotate_cycle()

    def test_cycle(self):
        p = Partition.from_blocks(0, 3, [[1, 2], [3]])
        assert p.rotate_cycle() == Partition.from_blocks(0, 3, [[1], [2, 3]])

    @given(partitions())
    def test_involution_is_involutive(self, p):
        assert p.involute().involute() == p

    @given(partitions())
    def test_rotation_inverses(self, p):
        if p.upper:
            assert p.rotate_left().rotate_left_inv() == p
            assert p.rotate_right_inv().rotate_right() == p
        if p.lower:
            assert p.rotate_right().rotate_right_inv() == p
            assert p.rotate_left_inv().rotate_left() == p

    @given(partitions(max_points=4), partitions(max_points=4))
    def test_tensor_involution_compat(self, p, q):
        assert p.tensor(q).involute() == p.involute().tensor(q.involute())

    @given(st.data())
    def test_compose_associative(self, data):
        ps = enumerate_partitions(1, 1)
        a = data.draw(st.sampled_from(ps))
        b = data.draw(st.sampled_from(ps))
        c = data.draw(st.sampled_from(ps))
        r1, l1 = compose(b, a)
        r2, l2 = compose(c, r1)
        s1, m1 = compose(c, b)
        s2, m2 = compose(s1, a)
        assert r2 == s2 and l1 + l2 == m1 + m2
