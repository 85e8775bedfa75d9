"""Built-in verification suites surfaced by the `verify` subcommand.

Each suite returns {"suite": name, "passed": bool, "checks": [...]} with
one entry per check.  The same batteries back the acceptance tests.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .field import FieldElem, ONE, inv_sqrt_elem
from .lincomb import (
    LinComb,
    SpanBasis,
    lc_compose,
    lc_involute,
    lc_tensor,
)
from .matrices import (
    ExactMatrix,
    T_matrix,
    V_matrix,
    check_TVK,
    mat_adjoint,
    mat_kron,
    mat_mul,
    mat_rank,
)
from .partitions import Partition, enumerate_partitions
from .closure import closure, easiness_report, member, verify_bridge
from .transforms import (
    P_transform,
    T_transform,
    V_transform,
    block,
    block_cut,
    block_cut_sum,
    pi,
    singletons,
    tau,
)


def _check(checks, name, ok):
    checks.append({"name": name, "ok": bool(ok)})
    return ok


def _root(N, sign):
    r = inv_sqrt_elem(N)
    return r if sign == 1 else -r


def expected_V_block2():
    return LinComb.of(block(2))


def expected_V_block3(N, sign):
    """Closed form: b3 + c*(single cuts) + full-cut coefficient."""
    s = _root(N, sign)
    c = FieldElem(Fraction(-1, N - 1)) * (ONE + s)
    full = FieldElem(Fraction(1, (N - 1) ** 2)) * (
        FieldElem(2) + FieldElem(N + 1) * s
    )
    return (
        LinComb.of(block(3))
        + block_cut_sum(3, 1).scale(c)
        + LinComb.of(singletons(3), full)
    )


def expected_V_block4(N, sign):
    """Closed form with the double-cut and full-cut coefficients."""
    s = _root(N, sign)
    c = FieldElem(Fraction(-1, N - 1)) * (ONE + s)
    double = FieldElem(Fraction(1, (N - 1) ** 2)) * (
        FieldElem(Fraction(N + 1, N)) + FieldElem(2) * s
    )
    full = FieldElem(Fraction(1, (N - 1) ** 3)) * (
        FieldElem(Fraction(N * N - 6 * N - 3, N)) - FieldElem(8) * s
    )
    return (
        LinComb.of(block(4))
        + block_cut_sum(4, 1).scale(c)
        + block_cut_sum(4, 2).scale(double)
        + LinComb.of(singletons(4), full)
    )


def expected_P_block3(N):
    return (
        LinComb.of(block(3))
        - Fraction(1, N) * block_cut_sum(3, 1)
        + LinComb.of(singletons(3), Fraction(2, N * N))
    )


def expected_P_block4(N):
    return (
        LinComb.of(block(4))
        - Fraction(1, N) * block_cut_sum(4, 1)
        + Fraction(1, N * N) * block_cut_sum(4, 2)
        + LinComb.of(singletons(4), Fraction(-3, N ** 3))
    )


def expected_T_block4(N):
    return (
        LinComb.of(block(4))
        - Fraction(2, N) * block_cut_sum(4, 1)
        + Fraction(4, N * N) * block_cut_sum(4, 2)
        + LinComb.of(singletons(4), Fraction(-16, N ** 3))
    )


CROSS = Partition.from_blocks(2, 2, [[1, 4], [2, 3]])
HALF_LIB = Partition.from_blocks(3, 3, [[1, 6], [2, 5], [3, 4]])


def expected_P_cross(N):
    cut_a = Partition.from_blocks(2, 2, [[1], [2, 3], [4]])
    cut_b = Partition.from_blocks(2, 2, [[1, 4], [2], [3]])
    allsing = Partition.from_blocks(2, 2, [[1], [2], [3], [4]])
    return (
        LinComb.of(CROSS)
        + LinComb.of(cut_a, Fraction(-1, N))
        + LinComb.of(cut_b, Fraction(-1, N))
        + LinComb.of(allsing, Fraction(1, N * N))
    )


def expected_P_half_lib(N):
    blocks136 = [
        [[1], [2, 5], [3, 4], [6]],
        [[1, 6], [2], [3, 4], [5]],
        [[1, 6], [2, 5], [3], [4]],
    ]
    blocks2 = [
        [[1], [2], [3, 4], [5], [6]],
        [[1], [2, 5], [3], [4], [6]],
        [[1, 6], [2], [3], [4], [5]],
    ]
    out = LinComb.of(HALF_LIB)
    for bl in blocks136:
        out = out + LinComb.of(
            Partition.from_blocks(3, 3, bl), Fraction(-1, N)
        )
    for bl in blocks2:
        out = out + LinComb.of(
            Partition.from_blocks(3, 3, bl), Fraction(1, N * N)
        )
    allsing = Partition.from_blocks(3, 3, [[i] for i in range(1, 7)])
    return out + LinComb.of(allsing, Fraction(-1, N ** 3))


def suite_examples(dim=None):
    checks = []
    for N in (2, 3, 4, 5, 10):
        for sign in (1, -1):
            tag = f"N={N},{'+' if sign == 1 else '-'}"
            _check(
                checks, f"singled 2-block {tag}",
                V_transform(LinComb.of(block(2)), N, sign)
                == expected_V_block2(),
            )
            _check(
                checks, f"singled 3-block {tag}",
                V_transform(LinComb.of(block(3)), N, sign)
                == expected_V_block3(N, sign),
            )
            _check(
                checks, f"singled 4-block {tag}",
                V_transform(LinComb.of(block(4)), N, sign)
                == expected_V_block4(N, sign),
            )
    for N in (2, 3, 5, 7):
        _check(
            checks, f"sandwich 3-block N={N}",
            P_transform(LinComb.of(block(3)), N) == expected_P_block3(N),
        )
        _check(
            checks, f"sandwich 4-block N={N}",
            P_transform(LinComb.of(block(4)), N) == expected_P_block4(N),
        )
        _check(
            checks, f"twisted 4-block N={N}",
            T_transform(LinComb.of(block(4)), N) == expected_T_block4(N),
        )
        _check(
            checks, f"sandwich crossing N={N}",
            P_transform(LinComb.of(CROSS), N) == expected_P_cross(N),
        )
        _check(
            checks, f"sandwich half-liberation N={N}",
            P_transform(LinComb.of(HALF_LIB), N) == expected_P_half_lib(N),
        )
    return _report("examples", checks)


def suite_tvk(dim=None):
    checks = []
    dims = (dim,) if dim else (3, 4, 5)
    for N in dims:
        ok = True
        count = 0
        for n in range(0, 6):
            for k in range(n + 1):
                for p in enumerate_partitions(k, n - k):
                    for sign in (1, -1):
                        count += 1
                        if not check_TVK(p, N, sign):
                            ok = False
        _check(checks, f"conjugation identity N={N} ({count} checks)", ok)
    return _report("tvk", checks)


def random_lincomb(rng, k, l, nterms=3):
    basis = enumerate_partitions(k, l)
    terms = {}
    for _ in range(nterms):
        p = rng.choice(basis)
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        terms[p] = terms.get(p, Fraction(0)) + c
    return LinComb(k, l, terms)


def suite_functor(dim=None, pairs=500, seed=20240811):
    rng = random.Random(seed)
    checks = []
    dims = (dim,) if dim else (2, 3, 4)
    cup = LinComb.of(Partition.pair_lower())
    cap = LinComb.of(Partition.pair_upper())
    for N in dims:
        loop = lc_compose(cap, cup, N)
        _check(
            checks, f"loop factor N={N}",
            loop == LinComb.of(Partition.empty(), N),
        )
    per_dim = max(1, pairs // len(dims))
    for N in dims:
        ok_mul = ok_tensor = ok_star = True
        for _ in range(per_dim):
            k1, m = rng.randint(0, 2), rng.randint(0, 2)
            l2 = rng.randint(0, 2)
            x = random_lincomb(rng, k1, m)
            y = random_lincomb(rng, m, l2)
            lhs = T_matrix(lc_compose(y, x, N), N)
            rhs = mat_mul(T_matrix(y, N), T_matrix(x, N))
            if lhs != rhs:
                ok_mul = False
            xt = random_lincomb(rng, rng.randint(0, 1), rng.randint(0, 2))
            yt = random_lincomb(rng, rng.randint(0, 1), rng.randint(0, 2))
            if T_matrix(lc_tensor(xt, yt), N) != mat_kron(
                T_matrix(xt, N), T_matrix(yt, N)
            ):
                ok_tensor = False
            if T_matrix(lc_involute(x), N) != mat_adjoint(T_matrix(x, N)):
                ok_star = False
        _check(checks, f"composition functor N={N}", ok_mul)
        _check(checks, f"tensor functor N={N}", ok_tensor)
        _check(checks, f"involution functor N={N}", ok_star)
    return _report("functor", checks)


def flattened_rank(k, l, N):
    """Rank of the stacked flattened partition matrices at one grade."""
    basis = enumerate_partitions(k, l)
    rows = []
    for p in basis:
        m = T_matrix(LinComb.of(p), N)
        rows.append([v for row in m.data for v in row])
    return mat_rank(ExactMatrix(len(rows), N ** (k + l), rows))


def suite_rank(dim=None):
    checks = []
    expected_03 = {2: 4, 3: 5, 4: 5}
    dims = (dim,) if dim else (2, 3, 4)
    for N in dims:
        _check(
            checks, f"rank grade (0,3) N={N}",
            flattened_rank(0, 3, N) == expected_03[N],
        )
        count = sum(
            1 for p in enumerate_partitions(0, 4) if p.block_count() <= N
        )
        _check(
            checks, f"rank grade (0,4) N={N}",
            flattened_rank(0, 4, N) == count,
        )
    if dim in (None, 2):
        dep = (
            LinComb.of(singletons(3))
            - block_cut_sum(3, 1)
            + LinComb.of(block(3), 2)
        )
        _check(
            checks, "3-block dependence vanishes at N=2",
            T_matrix(dep, 2).is_zero(),
        )
    return _report("rank", checks)


def suite_closure_easy(dim=None):
    N = dim or 5
    checks = []
    b4 = LinComb.of(block(4))
    plain = closure([b4], N, 4, "ordinary")
    _check(
        checks, f"4-block closure easy at every grade N={N}",
        all(e["easy"] for e in easiness_report(plain).values()),
    )
    twisted = closure([T_transform(b4, N)], N, 4, "ordinary")
    entry = easiness_report(twisted)[(0, 4)]
    _check(
        checks,
        f"twisted 4-block closure non-easy at (0,4) with witness N={N}",
        (not entry["easy"]) and entry["witness"] is not None,
    )
    big = closure(
        [P_transform(b4, 5)], 5, 6, "reduced"
    )
    _check(
        checks, "reduced 4-block closure reaches the sandwiched 6-block",
        member(big, P_transform(LinComb.of(block(6)), 5)) == "yes",
    )
    return _report("closure-easy", checks)


def suite_bridge(dim=None):
    N = dim or 4
    checks = []
    for sign in (1, -1):
        report = verify_bridge([LinComb.of(block(3))], N, sign, 4)
        _check(
            checks,
            f"3-block bridge equal at every grade N={N} "
            f"sign={'+' if sign == 1 else '-'}",
            all(e["equal"] for e in report.values()),
        )
    return _report("bridge", checks)


def _report(name, checks):
    return {
        "suite": name,
        "passed": all(c["ok"] for c in checks),
        "checks": checks,
    }


_SUITES = {
    "examples": suite_examples,
    "tvk": suite_tvk,
    "functor": suite_functor,
    "closure-easy": suite_closure_easy,
    "bridge": suite_bridge,
    "rank": suite_rank,
}


def run_suite(name: str, dim=None):
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return _SUITES[name](dim=dim)
