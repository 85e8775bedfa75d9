"""Set-partition diagrams on two rows and the raw category operations.

A diagram has k upper and l lower points.  Points are numbered 1..k
across the upper row (left to right) and k+1..k+l across the lower row.
Internally a diagram is a canonical label sequence: position i carries
the index of its block, blocks numbered by first occurrence.
"""

from __future__ import annotations

import functools
import itertools
import os


class MalformedPartition(ValueError):
    pass


class CompositionError(ValueError):
    pass


class RotationError(ValueError):
    pass


class SizeError(ValueError):
    pass


def enumeration_cap() -> int:
    return int(os.environ.get("PARTLIN_ENUM_CAP", "10"))


def _canonical(labels) -> tuple:
    seen = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


class Partition:
    """An immutable two-row set partition in canonical label form."""

    __slots__ = ("upper", "lower", "labels", "_hash")

    def __init__(self, upper: int, lower: int, labels):
        labels = _canonical(labels)
        if len(labels) != upper + lower:
            raise MalformedPartition(
                f"{upper}+{lower} points but {len(labels)} labels"
            )
        self.upper = upper
        self.lower = lower
        self.labels = labels
        self._hash = hash((upper, lower, labels))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_blocks(upper: int, lower: int, blocks) -> "Partition":
        n = upper + lower
        labels = [None] * n
        for idx, block in enumerate(blocks):
            for pt in block:
                if not 1 <= pt <= n:
                    raise MalformedPartition(f"point {pt} out of range 1..{n}")
                if labels[pt - 1] is not None:
                    raise MalformedPartition(f"point {pt} in two blocks")
                labels[pt - 1] = idx
        if any(lab is None for lab in labels):
            raise MalformedPartition("blocks do not cover all points")
        return Partition(upper, lower, labels)

    @staticmethod
    def identity(n: int = 1) -> "Partition":
        return Partition(n, n, list(range(n)) * 2)

    @staticmethod
    def empty() -> "Partition":
        return Partition(0, 0, ())

    @staticmethod
    def singleton_lower() -> "Partition":
        return Partition(0, 1, (0,))

    @staticmethod
    def singleton_upper() -> "Partition":
        return Partition(1, 0, (0,))

    @staticmethod
    def pair_lower() -> "Partition":
        return Partition(0, 2, (0, 0))

    @staticmethod
    def pair_upper() -> "Partition":
        return Partition(2, 0, (0, 0))

    # -- structure ---------------------------------------------------------

    @property
    def length(self) -> int:
        return self.upper + self.lower

    def blocks(self):
        """Blocks as tuples of 1-based points, ordered by first occurrence."""
        out = []
        for pt, lab in enumerate(self.labels, start=1):
            if lab == len(out):
                out.append([pt])
            else:
                out[lab].append(pt)
        return [tuple(b) for b in out]

    def block_count(self) -> int:
        return max(self.labels, default=-1) + 1

    def has_singleton(self) -> bool:
        counts = {}
        for lab in self.labels:
            counts[lab] = counts.get(lab, 0) + 1
        return any(c == 1 for c in counts.values())

    def is_pairing(self) -> bool:
        counts = {}
        for lab in self.labels:
            counts[lab] = counts.get(lab, 0) + 1
        return all(c == 2 for c in counts.values())

    def cyclic_labels(self) -> tuple:
        """Labels along the cyclic boundary: upper left-to-right, then
        lower right-to-left."""
        return self.labels[: self.upper] + self.labels[self.upper:][::-1]

    def is_noncrossing(self) -> bool:
        seq = self.cyclic_labels()
        positions = {}
        for i, lab in enumerate(seq):
            positions.setdefault(lab, []).append(i)
        labs = sorted(positions)
        for x, y in itertools.combinations(labs, 2):
            merged = sorted(
                [(p, 0) for p in positions[x]] + [(p, 1) for p in positions[y]]
            )
            switches = sum(
                1 for a, b in zip(merged, merged[1:]) if a[1] != b[1]
            )
            if switches >= 3:
                return False
        return True

    # -- category operations ----------------------------------------------

    def tensor(self, other: "Partition") -> "Partition":
        shift = self.block_count()
        labels = (
            self.labels[: self.upper]
            + tuple(lab + shift for lab in other.labels[: other.upper])
            + self.labels[self.upper:]
            + tuple(lab + shift for lab in other.labels[other.upper:])
        )
        return Partition(self.upper + other.upper,
                         self.lower + other.lower, labels)

    def involute(self) -> "Partition":
        labels = self.labels[self.upper:] + self.labels[: self.upper]
        return Partition(self.lower, self.upper, labels)

    def rotate_left(self) -> "Partition":
        if self.upper == 0:
            raise RotationError("no upper point to rotate")
        labs = self.labels
        labels = labs[1: self.upper] + (labs[0],) + labs[self.upper:]
        return Partition(self.upper - 1, self.lower + 1, labels)

    def rotate_left_inv(self) -> "Partition":
        if self.lower == 0:
            raise RotationError("no lower point to rotate")
        labs = self.labels
        labels = (labs[self.upper],) + labs[: self.upper] + labs[self.upper + 1:]
        return Partition(self.upper + 1, self.lower - 1, labels)

    def rotate_right(self) -> "Partition":
        if self.lower == 0:
            raise RotationError("no lower point to rotate")
        labs = self.labels
        labels = labs[: self.upper] + (labs[-1],) + labs[self.upper:-1]
        return Partition(self.upper + 1, self.lower - 1, labels)

    def rotate_right_inv(self) -> "Partition":
        if self.upper == 0:
            raise RotationError("no upper point to rotate")
        labs = self.labels
        labels = labs[: self.upper - 1] + labs[self.upper:] + (labs[self.upper - 1],)
        return Partition(self.upper - 1, self.lower + 1, labels)

    def rotate_cycle(self) -> "Partition":
        """On (0, n): move the last point to the front."""
        if self.upper != 0:
            raise RotationError("cyclic rotation needs all points lower")
        labs = self.labels
        if not labs:
            return self
        return Partition(0, self.lower, (labs[-1],) + labs[:-1])

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.upper == other.upper
            and self.lower == other.lower
            and self.labels == other.labels
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return str(self)

    def __str__(self):
        blocks = sorted(self.blocks(), key=min)
        body = "".join(
            "{" + ",".join(str(p) for p in b) + "}" for b in blocks
        )
        return f"P({self.upper},{self.lower}){body}"


def parse_partition(text: str) -> Partition:
    """Parse the literal grammar ``P(k,l){a,b,...}{c,...}``."""
    s = text.strip()
    if not s.startswith("P(") or ")" not in s:
        raise MalformedPartition(f"bad partition literal: {text!r}")
    head, _, rest = s[2:].partition(")")
    try:
        k_str, l_str = head.split(",")
        k, l = int(k_str), int(l_str)
    except ValueError:
        raise MalformedPartition(f"bad arity in literal: {text!r}") from None
    blocks = []
    rest = rest.strip()
    while rest:
        if not rest.startswith("{") or "}" not in rest:
            raise MalformedPartition(f"bad block in literal: {text!r}")
        body, _, rest = rest[1:].partition("}")
        body = body.strip()
        blocks.append([int(p) for p in body.split(",")] if body else [])
        rest = rest.strip()
    return Partition.from_blocks(k, l, blocks)


@functools.lru_cache(maxsize=1 << 20)
def compose(q: Partition, p: Partition):
    """Composition q.p (p applied first), with closed-loop count.

    Requires lower(p) == upper(q).  Returns (result, loops) where loops
    counts connected components living entirely in the glued middle row.
    """
    if p.lower != q.upper:
        raise CompositionError(
            f"cannot compose: p has {p.lower} lower points, "
            f"q has {q.upper} upper points"
        )
    np, nq = p.length, q.length
    parent = list(range(np + nq))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    firsts_p = {}
    for i, lab in enumerate(p.labels):
        if lab in firsts_p:
            union(i, firsts_p[lab])
        else:
            firsts_p[lab] = i
    firsts_q = {}
    for i, lab in enumerate(q.labels):
        if lab in firsts_q:
            union(np + i, firsts_q[lab])
        else:
            firsts_q[lab] = np + i
    for j in range(p.lower):
        union(p.upper + j, np + j)

    boundary = list(range(p.upper)) + [np + q.upper + j for j in range(q.lower)]
    roots = [find(x) for x in boundary]
    labels = _canonical(roots)
    result = Partition(p.upper, q.lower, labels)
    all_roots = {find(x) for x in range(np + nq)}
    loops = len(all_roots) - len(set(roots))
    return result, loops


@functools.lru_cache(maxsize=None)
def _rgs_sequences(n: int):
    """All restricted growth strings of length n, lexicographic."""
    if n == 0:
        return ((),)
    out = []

    def rec(prefix, mx):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(mx + 2):
            prefix.append(v)
            rec(prefix, max(mx, v))
            prefix.pop()

    rec([0], 0)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def enumerate_partitions(upper: int, lower: int):
    """All partitions of the grade (upper, lower), canonical RGS order."""
    n = upper + lower
    if n > enumeration_cap():
        raise SizeError(
            f"{n} points exceeds enumeration cap {enumeration_cap()}"
        )
    return tuple(Partition(upper, lower, rgs) for rgs in _rgs_sequences(n))


@functools.lru_cache(maxsize=None)
def partition_index(upper: int, lower: int):
    """Deterministic index of each partition in its grade."""
    return {p: i for i, p in enumerate(enumerate_partitions(upper, lower))}


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]
