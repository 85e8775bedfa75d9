"""Graded closure of generator sets under the category operations.

A closure is computed grade by grade up to a length bound L: seed the
base elements and generators, then repeatedly apply tensor, composition,
involution and rotation to basis rows until no grade's dimension grows.
Negative membership verdicts are always bound-relative.
"""

from __future__ import annotations

from .field import ONE
from .lincomb import (
    GradeError,
    LinComb,
    SpanBasis,
    lc_compose,
    lc_involute,
    lc_rotate,
    lc_tensor,
)
from .partitions import Partition, enumerate_partitions
from .transforms import P_transform, V_transform, is_p_invariant, pi


class BoundError(ValueError):
    pass


class GeneratorError(ValueError):
    pass


class ClosureResult:
    """Per-grade echelon spans of a closure, up to length bound L."""

    def __init__(self, N: int, bound: int, mode: str):
        self.N = N
        self.bound = bound
        self.mode = mode
        self.spans = {
            (k, l): SpanBasis(k, l)
            for n in range(bound + 1)
            for k in range(n + 1)
            for l in [n - k]
        }
        self.log = []

    def grades(self):
        return sorted(self.spans)

    def span(self, k: int, l: int) -> SpanBasis:
        if (k, l) not in self.spans:
            raise BoundError(f"grade ({k},{l}) exceeds bound {self.bound}")
        return self.spans[(k, l)]

    def dimensions(self):
        return {g: self.spans[g].dimension() for g in self.grades()}

    def total_dimension(self) -> int:
        return sum(b.dimension() for b in self.spans.values())

    def all_rows(self):
        for g in self.grades():
            for row in self.spans[g].row_list():
                yield row


def _base_elements(N: int, mode: str):
    empty = LinComb.of(Partition.empty())
    if mode == "ordinary":
        return [
            empty,
            LinComb.of(Partition.identity()),
            LinComb.of(Partition.pair_lower()),
            LinComb.of(Partition.pair_upper()),
        ]
    p = pi(N)
    return [empty, p, lc_rotate(p, "left"), lc_rotate(p, "right")]


def _rotations(x: LinComb):
    out = []
    if x.upper > 0:
        out.append(lc_rotate(x, "left"))
        out.append(lc_rotate(x, "right-inv"))
    if x.lower > 0:
        out.append(lc_rotate(x, "right"))
        out.append(lc_rotate(x, "left-inv"))
    return out


def closure(generators, N: int, bound: int = 6,
            mode: str = "ordinary") -> ClosureResult:
    """Smallest graded span family containing the bases and generators
    that is stable under the category operations, truncated at length
    bound.  Reduced mode requires sandwich-invariant generators and
    keeps every row sandwich-invariant."""
    if mode not in ("ordinary", "reduced"):
        raise ValueError(f"unknown closure mode {mode!r}")
    result = ClosureResult(N, bound, mode)
    reduced = mode == "reduced"
    if reduced:
        for g in generators:
            if not is_p_invariant(g, N):
                raise GeneratorError(
                    f"reduced-mode generator at grade {g.grade()} is not "
                    "sandwich-invariant"
                )

    def admit(x: LinComb):
        if x.is_zero():
            return []
        if x.upper + x.lower > bound:
            return []
        return [x]

    seeds = []
    for x in _base_elements(N, mode) + list(generators):
        seeds.extend(admit(x))
        for r in _rotations(x):
            if reduced:
                r = P_transform(r, N)
            seeds.extend(admit(r))
    fresh = []
    for x in seeds:
        if result.span(*x.grade()).insert(x):
            fresh.append(x)
    result.log.append(("seed", len(fresh)))

    rounds = 0
    while fresh:
        rounds += 1
        everything = list(result.all_rows())
        candidates = []
        for x in fresh:
            candidates.append(lc_involute(x))
            for r in _rotations(x):
                candidates.append(P_transform(r, N) if reduced else r)
            for y in everything:
                if x.upper + x.lower + y.upper + y.lower <= bound:
                    candidates.append(lc_tensor(x, y))
                    candidates.append(lc_tensor(y, x))
                if x.lower == y.upper and x.upper + y.lower <= bound:
                    candidates.append(lc_compose(y, x, N))
                if y.lower == x.upper and y.upper + x.lower <= bound:
                    candidates.append(lc_compose(x, y, N))
        fresh = []
        candidates = [c for c in candidates if not c.is_zero()]
        candidates.sort(key=lambda c: (c.grade(), repr(c)))
        for c in candidates:
            if result.span(*c.grade()).insert(c):
                fresh.append(c)
        result.log.append((f"round {rounds}", len(fresh)))
    return result


def member(result: ClosureResult, x: LinComb) -> str:
    """'yes' or the bound-relative negative 'not_at_this_bound'."""
    if x.upper + x.lower > result.bound:
        raise BoundError(
            f"grade {x.grade()} exceeds closure bound {result.bound}"
        )
    if result.span(*x.grade()).contains(x):
        return "yes"
    return "not_at_this_bound"


def easiness_report(result: ClosureResult):
    """Per grade: is the span generated by single partitions it contains?

    Returns {grade: {"easy": bool, "dimension": d, "partition_span": d',
    "witness": row-or-None}}; the overall verdict is easy-at-bound iff
    every grade is easy.
    """
    report = {}
    for (k, l) in result.grades():
        span = result.spans[(k, l)]
        inside = SpanBasis(k, l)
        for p in enumerate_partitions(k, l):
            v = LinComb.of(p)
            if span.contains(v):
                inside.insert(v)
        easy = inside.dimension() == span.dimension()
        witness = None
        if not easy:
            for row in span.row_list():
                if not inside.contains(row):
                    witness = row
                    break
        report[(k, l)] = {
            "easy": easy,
            "dimension": span.dimension(),
            "partition_span": inside.dimension(),
            "witness": witness,
        }
    return report


def is_easy_at_bound(result: ClosureResult) -> bool:
    return all(entry["easy"] for entry in easiness_report(result).values())


def verify_bridge(generators, N: int, sign: int = 1, bound: int = 4):
    """Compare the singled image of a sandwich closure with the closure
    of singled generators one dimension down.

    Left side: reduced closure of the sandwich images of the generators
    at dimension N, each basis row passed through the singling map.
    Right side: ordinary closure of the singled generators at N-1.
    Returns {grade: {"left": d, "right": d', "equal": bool}}.
    """
    sandwiched = [P_transform(g, N) for g in generators]
    left_closure = closure(sandwiched, N, bound, mode="reduced")
    left_spans = {}
    for (k, l) in left_closure.grades():
        basis = SpanBasis(k, l)
        for row in left_closure.spans[(k, l)].row_list():
            image = V_transform(row, N, sign)
            if not image.is_zero():
                basis.insert(image)
        left_spans[(k, l)] = basis

    singled = [
        V_transform(g, N, sign)
        for g in generators
    ]
    singled = [g for g in singled if not g.is_zero()]
    right_closure = closure(singled, N - 1, bound, mode="ordinary")

    report = {}
    for g in left_closure.grades():
        left = left_spans[g]
        right = right_closure.spans[g]
        equal = left.dimension() == right.dimension() and all(
            right.contains(row) for row in left.row_list()
        )
        report[g] = {
            "left": left.dimension(),
            "right": right.dimension(),
            "equal": equal,
        }
    return report
