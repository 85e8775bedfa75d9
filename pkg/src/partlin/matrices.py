"""Dense exact matrices and the concrete matrix realization of diagrams.

T_matrix turns a linear combination at grade (k,l) into the N^l x N^k
matrix of block-constancy indicators.  U/V/P are the distinguished
orthogonal matrices tying dimension N to dimension N-1.  Everything is
exact; check_TVK additionally has an integer fast path used for the
exhaustive conjugation sweep.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

import numpy as np

from .field import FieldElem, ZERO, ONE, sqrt_elem, inv_sqrt_elem
from .lincomb import LinComb
from .partitions import Partition
from .transforms import V_transform, ParameterError


class MatrixShapeError(ValueError):
    pass


class MatrixSizeError(ValueError):
    pass


def matrix_cap() -> int:
    return int(os.environ.get("PARTLIN_MATRIX_CAP", str(4 ** 6)))


class ExactMatrix:
    """A dense matrix of FieldElem entries with exact algebra."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [[ZERO] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise MatrixShapeError("data does not match declared shape")
        self.data = data

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        m = ExactMatrix(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @staticmethod
    def filled(rows: int, cols: int, value: FieldElem) -> "ExactMatrix":
        return ExactMatrix(rows, cols, [[value] * cols for _ in range(rows)])

    def __getitem__(self, rc):
        return self.data[rc[0]][rc[1]]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.data[i][j] == other.data[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise MatrixShapeError("shape mismatch in addition")
        return ExactMatrix(
            self.rows,
            self.cols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other):
        return self + other.scale(FieldElem(-1))

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(
            self.rows, self.cols,
            [[v * c for v in row] for row in self.data],
        )

    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(v) for v in row) for row in self.data
        )
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise MatrixShapeError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    out = ExactMatrix(a.rows, b.cols)
    bt = list(zip(*b.data))
    for i, row in enumerate(a.data):
        for j, col in enumerate(bt):
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out.data[i][j] = acc
    return out


def mat_adjoint(a: ExactMatrix) -> ExactMatrix:
    # Conjugate-transpose; conjugation is trivial on the real field.
    return ExactMatrix(
        a.cols, a.rows,
        [[v.conjugate() for v in row] for row in zip(*a.data)],
    )


def mat_kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    out = ExactMatrix(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            v = a.data[i][j]
            if not v:
                continue
            for p in range(b.rows):
                for q in range(b.cols):
                    w = b.data[p][q]
                    if w:
                        out.data[i * b.rows + p][j * b.cols + q] = v * w
    return out


def mat_rank(a: ExactMatrix) -> int:
    rows = [list(r) for r in a.data]
    rank = 0
    col = 0
    while rank < len(rows) and col < a.cols:
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [v - c * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


# -- the diagram-to-matrix functor ----------------------------------------


def delta_eval(p: Partition, i, j, N: int) -> int:
    """1 iff the joint assignment (upper i, lower j) is block-constant."""
    if len(i) != p.upper or len(j) != p.lower:
        raise MatrixShapeError("index tuples do not match the grade")
    vals = list(i) + list(j)
    assigned = {}
    for lab, v in zip(p.labels, vals):
        if not 1 <= v <= N:
            raise ValueError(f"index {v} out of range 1..{N}")
        if lab in assigned:
            if assigned[lab] != v:
                return 0
        else:
            assigned[lab] = v
    return 1


def _flat(tup, N: int) -> int:
    """Row-major flattening; leftmost factor most significant."""
    out = 0
    for v in tup:
        out = out * N + v
    return out


def T_matrix(x: LinComb, N: int) -> ExactMatrix:
    """The N^l x N^k matrix of x; entry((j),(i)) sums coeff * delta."""
    k, l = x.upper, x.lower
    size = N ** (k + l)
    if size > matrix_cap():
        raise MatrixSizeError(
            f"N^(k+l) = {size} exceeds matrix cap {matrix_cap()}"
        )
    out = ExactMatrix(N ** l, N ** k)
    for p, coeff in x.terms.items():
        b = p.block_count()
        for assign in itertools.product(range(N), repeat=b):
            vals = [assign[lab] for lab in p.labels]
            col = _flat(vals[:k], N)
            row = _flat(vals[k:], N)
            out.data[row][col] = out.data[row][col] + coeff
    return out


def T_partition_array(p: Partition, N: int) -> np.ndarray:
    """The indicator tensor of a single partition, axes (lower..., upper...)."""
    shape = (N,) * (p.lower + p.upper)
    arr = np.zeros(shape, dtype=np.int64)
    b = p.block_count()
    k = p.upper
    for assign in itertools.product(range(N), repeat=b):
        vals = [assign[lab] for lab in p.labels]
        arr[tuple(vals[k:] + vals[:k])] = 1
    return arr


# -- the distinguished matrices -------------------------------------------


def U_matrix(N: int, sign: int = 1) -> ExactMatrix:
    """The orthogonal N x N matrix rotating the all-ones direction to e_N."""
    if N < 2:
        raise ParameterError("dimension must be at least 2")
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    border = inv_sqrt_elem(N)
    if sign == -1:
        border = -border
    c = FieldElem(Fraction(1, N - 1)) * (ONE + border)
    out = ExactMatrix(N, N)
    for i in range(N):
        for j in range(N):
            if i == N - 1 or j == N - 1:
                out.data[i][j] = border
            else:
                out.data[i][j] = (ONE if i == j else ZERO) - c
    return out


def V_matrix(N: int, sign: int = 1) -> ExactMatrix:
    """The first N-1 rows of U_matrix: an exact co-isometry."""
    u = U_matrix(N, sign)
    return ExactMatrix(N - 1, N, u.data[: N - 1])


def P_matrix(N: int) -> ExactMatrix:
    """Projection orthogonal to the all-ones vector: I - (1/N) ones."""
    out = ExactMatrix.filled(N, N, FieldElem(Fraction(-1, N)))
    for i in range(N):
        out.data[i][i] = out.data[i][i] + ONE
    return out


def xi_vector(N: int) -> ExactMatrix:
    return ExactMatrix.filled(N, 1, ONE)


def perm_matrix(sigma, N: int) -> ExactMatrix:
    """Permutation matrix sending e_j to e_{sigma(j)}; sigma is 1-based."""
    out = ExactMatrix(N, N)
    for j in range(1, N + 1):
        out.data[sigma[j - 1] - 1][j - 1] = ONE
    return out


# -- the conjugation theorem check ----------------------------------------


def _w_arrays(N: int, sign: int):
    """V_matrix scaled by (N-1)*sqrt(N) split into integer components.

    Returns (rational part, sqrt(N) part) as int64 arrays of shape
    (N-1, N); every entry of the scaled matrix lies in Z[sqrt(N)].
    """
    wr = np.zeros((N - 1, N), dtype=np.int64)
    ws = np.zeros((N - 1, N), dtype=np.int64)
    for i in range(N - 1):
        for j in range(N - 1):
            wr[i][j] = -sign
            ws[i][j] = (N - 1 if i == j else 0) - 1
        wr[i][N - 1] = sign * (N - 1)
    return wr, ws


def _contract_all(arr: np.ndarray, wr, ws, N: int):
    """Contract every axis of arr with the scaled V matrix.

    Values are tracked as pairs (r, s) meaning r + s*sqrt(N); each
    contraction is against W over its column index.
    """
    ar = arr
    as_ = np.zeros_like(arr)
    naxes = arr.ndim
    for _ in range(naxes):
        br = np.tensordot(ar, wr, axes=([0], [1])) + N * np.tensordot(
            as_, ws, axes=([0], [1])
        )
        bs = np.tensordot(ar, ws, axes=([0], [1])) + np.tensordot(
            as_, wr, axes=([0], [1])
        )
        ar, as_ = br, bs
    return ar, as_


def check_TVK(p: Partition, N: int, sign: int = 1, method: str = "fast") -> bool:
    """Does conjugating T_p by the co-isometry match the singling image?

    Compares the matrix of V_transform(p) at dimension N-1 with
    V^{tensor l} T_p V*^{tensor k}, exactly.  The fast method clears
    denominators by the factor ((N-1)sqrt(N))^{k+l} and works in
    integer pairs over Z[sqrt(N)]; the dense method multiplies the
    exact matrices directly.
    """
    k, l = p.upper, p.lower
    left = T_matrix(V_transform(LinComb.of(p), N, sign), N - 1)
    if method == "dense":
        v = V_matrix(N, sign)
        vl = ExactMatrix.identity(1)
        for _ in range(l):
            vl = mat_kron(vl, v)
        vk = ExactMatrix.identity(1)
        for _ in range(k):
            vk = mat_kron(vk, mat_adjoint(v))
        right = mat_mul(mat_mul(vl, T_matrix(LinComb.of(p), N)), vk)
        return left == right
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    arr = T_partition_array(p, N)
    wr, ws = _w_arrays(N, sign)
    rr, rs = _contract_all(arr, wr, ws, N)
    scale = (sqrt_elem(N) * (N - 1)) ** (k + l)
    M = N - 1
    for j_tup in itertools.product(range(M), repeat=l):
        for i_tup in itertools.product(range(M), repeat=k):
            row = _flat(j_tup, M)
            col = _flat(i_tup, M)
            lhs = left.data[row][col] * scale
            rhs = FieldElem(
                int(rr[j_tup + i_tup]), int(rs[j_tup + i_tup]), N
            )
            if lhs != rhs:
                return False
    return True
