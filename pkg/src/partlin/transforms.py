"""Named elements and the three linear operators on partition combinations.

Provides the projective element pi and the unitary element tau at (1,1),
single-block partitions with their cut sums, the blockwise singling map
V_transform that lowers the dimension parameter from N to N-1, and the
sandwich maps P_transform and T_transform.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .field import FieldElem, ZERO, ONE, inv_sqrt_elem
from .lincomb import LinComb, lc_compose, lc_tensor
from .partitions import Partition


class ParameterError(ValueError):
    pass


UP = Partition.singleton_lower()
DOWN = Partition.singleton_upper()
CUP = Partition.pair_lower()
CAP = Partition.pair_upper()
IDENT = Partition.identity()
DOWN_UP = DOWN.tensor(UP)


def pi(N: int) -> LinComb:
    """The projective (1,1) element: identity minus (1/N) down-tensor-up."""
    if N < 1:
        raise ParameterError("dimension must be at least 1")
    return LinComb(1, 1, {IDENT: ONE, DOWN_UP: FieldElem(Fraction(-1, N))})


def tau(N: int) -> LinComb:
    """The self-inverse (1,1) element: identity minus (2/N) down-tensor-up."""
    if N < 1:
        raise ParameterError("dimension must be at least 1")
    return LinComb(1, 1, {IDENT: ONE, DOWN_UP: FieldElem(Fraction(-2, N))})


def block(k: int) -> Partition:
    """The (0,k) partition with all points in one block."""
    if k < 0:
        raise ParameterError("block size must be nonnegative")
    return Partition(0, k, (0,) * k)


def block_cut(k: int, cut_points) -> Partition:
    """The block partition with the listed points split off as singletons."""
    cut = set(cut_points)
    if not cut <= set(range(1, k + 1)):
        raise ParameterError(f"cut points {sorted(cut)} not within 1..{k}")
    labels = []
    nxt = 1
    for pt in range(1, k + 1):
        if pt in cut:
            labels.append(nxt)
            nxt += 1
        else:
            labels.append(0)
    return Partition(0, k, labels)


def singletons(k: int) -> Partition:
    return Partition(0, k, tuple(range(k)))


def block_cut_sum(k: int, i: int, N: int = None) -> LinComb:
    """Sum of all i-point cuts of the k-block.

    The full cut (i = k) is by convention (N-1) times the all-singleton
    partition, which is why it needs the dimension parameter.
    """
    if not 0 <= i <= k:
        raise ParameterError(f"cut size {i} out of range 0..{k}")
    if i == k:
        if N is None:
            raise ParameterError("full cut sum needs the dimension")
        return LinComb.of(singletons(k), N - 1)
    out = LinComb.zero(0, k)
    for subset in itertools.combinations(range(1, k + 1), i):
        out = out + LinComb.of(block_cut(k, subset))
    return out


def tensor_power(x: LinComb, n: int) -> LinComb:
    out = LinComb.of(Partition.empty())
    for _ in range(n):
        out = lc_tensor(out, x)
    return out


def up_power(n: int) -> Partition:
    return Partition(0, n, tuple(range(n)))


# -- the singling transform ------------------------------------------------


def _cut_choices(size: int, c: FieldElem, full_extra: FieldElem):
    """Per-block menu: (set of cut positions within the block, coefficient).

    Proper cuts of j points carry c^j; the full cut carries
    c^size * (N-1) + (sign/sqrt(N))^size, both supplied via full_extra.
    """
    choices = []
    for j in range(size):
        for subset in itertools.combinations(range(size), j):
            choices.append((frozenset(subset), c ** j))
    choices.append((frozenset(range(size)), full_extra))
    return choices


def V_transform(x: LinComb, N: int, sign: int = 1) -> LinComb:
    """Blockwise singling map taking dimension-N elements to dimension N-1.

    On a single block of size s it produces the sum of all partial cuts
    of the block weighted by powers of c = -(1 + sign/sqrt(N))/(N-1),
    with the special full-cut weight c^s*(N-1) + (sign/sqrt(N))^s.
    Singleton-containing partitions map to zero; pairings are fixed.
    """
    if N < 2:
        raise ParameterError("dimension must be at least 2 for singling")
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    root = inv_sqrt_elem(N)
    if sign == -1:
        root = -root
    c = FieldElem(Fraction(-1, N - 1)) * (ONE + root)
    out_terms = {}
    for p, coeff in x.terms.items():
        blocks = p.blocks()
        menus = []
        for blk in blocks:
            s = len(blk)
            full_extra = (c ** s) * (N - 1) + root ** s
            menus.append(_cut_choices(s, c, full_extra))
        for pick in itertools.product(*menus):
            factor = coeff
            labels = [None] * p.length
            nxt = 0
            for blk, (cutset, w) in zip(blocks, pick):
                factor = factor * w
                keep_label = None
                for pos, pt in enumerate(blk):
                    if pos in cutset:
                        labels[pt - 1] = nxt
                        nxt += 1
                    else:
                        if keep_label is None:
                            keep_label = nxt
                            nxt += 1
                        labels[pt - 1] = keep_label
            if not factor:
                continue
            q = Partition(p.upper, p.lower, labels)
            out_terms[q] = out_terms.get(q, ZERO) + factor
    return LinComb(x.upper, x.lower, out_terms)


# -- sandwich maps ---------------------------------------------------------


def _sandwich(x: LinComb, elem: LinComb, N: int) -> LinComb:
    inner = lc_compose(x, tensor_power(elem, x.upper), N)
    return lc_compose(tensor_power(elem, x.lower), inner, N)


def P_transform(x: LinComb, N: int) -> LinComb:
    """Conjugation of x by tensor powers of pi; idempotent."""
    return _sandwich(x, pi(N), N)


def T_transform(x: LinComb, N: int) -> LinComb:
    """Conjugation of x by tensor powers of tau; an involution."""
    return _sandwich(x, tau(N), N)


def is_p_invariant(x: LinComb, N: int) -> bool:
    return P_transform(x, N) == x
