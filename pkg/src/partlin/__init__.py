"""Exact symbolic engine for linear combinations of two-row partitions."""

from .field import FieldElem, sqrt_elem, inv_sqrt_elem, parse_field_elem
from .partitions import Partition, compose, enumerate_partitions, parse_partition
from .lincomb import (
    LinComb,
    SpanBasis,
    lc_add,
    lc_compose,
    lc_involute,
    lc_rotate,
    lc_scale,
    lc_tensor,
    parse_lincomb,
    span_contains,
    span_dim,
    span_insert,
)
from .transforms import (
    P_transform,
    T_transform,
    V_transform,
    block,
    block_cut,
    block_cut_sum,
    pi,
    tau,
)
from .matrices import (
    ExactMatrix,
    P_matrix,
    T_matrix,
    U_matrix,
    V_matrix,
    check_TVK,
    delta_eval,
    mat_adjoint,
    mat_kron,
    mat_mul,
    mat_rank,
)
from .closure import (
    ClosureResult,
    closure,
    easiness_report,
    member,
    verify_bridge,
)

__version__ = "0.1.0"
