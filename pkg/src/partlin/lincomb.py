"""Formal linear combinations of partitions and graded echelon spans.

Category operations extend bilinearly; composition picks up a factor of
N per closed middle loop.  Coefficients live in one quadratic field per
session, see field.py.
"""

from __future__ import annotations

from fractions import Fraction

from .field import FieldElem, ZERO, ONE, parse_field_elem
from .partitions import (
    Partition,
    compose,
    enumerate_partitions,
    partition_index,
    parse_partition,
)


class GradeError(ValueError):
    """Raised when combining linear combinations of mismatched shapes."""


def _as_coeff(x) -> FieldElem:
    if isinstance(x, FieldElem):
        return x
    return FieldElem(Fraction(x))


class LinComb:
    """A finite FieldElem-weighted sum of same-shaped partitions."""

    __slots__ = ("upper", "lower", "terms")

    def __init__(self, upper: int, lower: int, terms=None):
        self.upper = upper
        self.lower = lower
        clean = {}
        for p, c in (terms or {}).items():
            if p.upper != upper or p.lower != lower:
                raise GradeError(
                    f"term {p} does not live at grade ({upper},{lower})"
                )
            c = _as_coeff(c)
            if c:
                clean[p] = clean.get(p, ZERO) + c
                if not clean[p]:
                    del clean[p]
        self.terms = clean

    @staticmethod
    def of(p: Partition, coeff=1) -> "LinComb":
        return LinComb(p.upper, p.lower, {p: _as_coeff(coeff)})

    @staticmethod
    def zero(upper: int, lower: int) -> "LinComb":
        return LinComb(upper, lower, {})

    def coeff(self, p: Partition) -> FieldElem:
        return self.terms.get(p, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def grade(self):
        return (self.upper, self.lower)

    def _check_grade(self, other: "LinComb"):
        if self.grade() != other.grade():
            raise GradeError(
                f"grades {self.grade()} and {other.grade()} differ"
            )

    def __eq__(self, other):
        return (
            isinstance(other, LinComb)
            and self.grade() == other.grade()
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.upper, self.lower, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_grade(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, ZERO) + c
        return LinComb(self.upper, self.lower, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "LinComb":
        c = _as_coeff(c)
        return LinComb(
            self.upper, self.lower, {p: v * c for p, v in self.terms.items()}
        )

    __mul__ = scale
    __rmul__ = scale

    def sorted_terms(self):
        """Terms in the deterministic enumeration order of the grade."""
        order = partition_index(self.upper, self.lower)
        return sorted(self.terms.items(), key=lambda pc: order[pc[0]])

    def __repr__(self):
        if not self.terms:
            return f"0@({self.upper},{self.lower})"
        bits = []
        for p, c in self.sorted_terms():
            bits.append(f"({c}) * {p}")
        return " + ".join(bits)

    def to_json(self):
        return {
            "k": self.upper,
            "l": self.lower,
            "terms": [
                {
                    "blocks": [list(b) for b in sorted(p.blocks(), key=min)],
                    "coeff": str(c),
                }
                for p, c in self.sorted_terms()
            ],
        }


# -- bilinear category operations -----------------------------------------


def lc_add(x: LinComb, y: LinComb) -> LinComb:
    return x + y


def lc_scale(x: LinComb, c) -> LinComb:
    return x.scale(c)


def lc_tensor(x: LinComb, y: LinComb) -> LinComb:
    out = {}
    for p, a in x.terms.items():
        for q, b in y.terms.items():
            r = p.tensor(q)
            out[r] = out.get(r, ZERO) + a * b
    return LinComb(x.upper + y.upper, x.lower + y.lower, out)


def lc_compose(y: LinComb, x: LinComb, N: int) -> LinComb:
    """Bilinear composition y.x; each closed middle loop contributes N."""
    if x.lower != y.upper:
        raise GradeError(
            f"cannot compose grade {y.grade()} after grade {x.grade()}"
        )
    out = {}
    for p, a in x.terms.items():
        for q, b in y.terms.items():
            r, loops = compose(q, p)
            out[r] = out.get(r, ZERO) + a * b * (N ** loops)
    return LinComb(x.upper, y.lower, out)


def lc_involute(x: LinComb) -> LinComb:
    # Coefficient conjugation is the identity on this real field.
    return LinComb(
        x.lower, x.upper,
        {p.involute(): c.conjugate() for p, c in x.terms.items()},
    )


def lc_map(x: LinComb, f, grade=None) -> LinComb:
    """Apply a partition map termwise (used for rotations)."""
    out = {}
    upper = lower = None
    for p, c in x.terms.items():
        q = f(p)
        upper, lower = q.upper, q.lower
        out[q] = out.get(q, ZERO) + c
    if upper is None:
        if grade is None:
            raise GradeError("cannot infer grade when mapping a zero element")
        upper, lower = grade
    return LinComb(upper, lower, out)


def lc_rotate(x: LinComb, direction: str) -> LinComb:
    ops = {
        "left": (Partition.rotate_left, -1),
        "left-inv": (Partition.rotate_left_inv, 1),
        "right": (Partition.rotate_right, 1),
        "right-inv": (Partition.rotate_right_inv, -1),
        "cycle": (Partition.rotate_cycle, 0),
    }
    if direction not in ops:
        raise ValueError(f"unknown rotation {direction!r}")
    f, shift = ops[direction]
    return lc_map(x, f, grade=(x.upper + shift, x.lower - shift))


# -- graded echelon spans --------------------------------------------------


class SpanBasis:
    """A reduced row-echelon basis of a subspace at one grade.

    Pivot order follows the deterministic partition enumeration for the
    grade, so bases are reproducible regardless of insertion order of a
    set of vectors (sorted insertion is still recommended for streams).
    """

    def __init__(self, upper: int, lower: int):
        self.upper = upper
        self.lower = lower
        self.order = partition_index(upper, lower)
        self.rows = {}  # pivot index -> LinComb with pivot coeff 1

    def grade(self):
        return (self.upper, self.lower)

    def dimension(self) -> int:
        return len(self.rows)

    def _pivot(self, x: LinComb):
        best = None
        for p in x.terms:
            i = self.order[p]
            if best is None or i < best:
                best = i
        return best

    def reduce(self, x: LinComb) -> LinComb:
        """Residual of x with every pivot coordinate eliminated."""
        if x.grade() != self.grade():
            raise GradeError(
                f"grade {x.grade()} does not match basis {self.grade()}"
            )
        basis = enumerate_partitions(self.upper, self.lower)
        for piv in sorted(self.rows):
            c = x.coeff(basis[piv])
            if c:
                x = x - self.rows[piv].scale(c)
        return x

    def insert(self, x: LinComb) -> bool:
        """Insert x; returns True if the dimension grew."""
        residual = self.reduce(x)
        if residual.is_zero():
            return False
        piv = self._pivot(residual)
        basis = enumerate_partitions(self.upper, self.lower)
        row = residual.scale(residual.coeff(basis[piv]).inverse())
        # back-substitute into existing rows to keep reduced form
        for other_piv, other in list(self.rows.items()):
            c = other.coeff(basis[piv])
            if c:
                self.rows[other_piv] = other - row.scale(c)
        self.rows[piv] = row
        return True

    def contains(self, x: LinComb) -> bool:
        return self.reduce(x).is_zero()

    def row_list(self):
        return [self.rows[piv] for piv in sorted(self.rows)]


def span_insert(basis: SpanBasis, x: LinComb) -> SpanBasis:
    basis.insert(x)
    return basis


def span_contains(basis: SpanBasis, x: LinComb) -> bool:
    return basis.contains(x)


def span_dim(basis: SpanBasis) -> int:
    return basis.dimension()


def span_of(vectors, upper: int, lower: int) -> SpanBasis:
    basis = SpanBasis(upper, lower)
    for v in vectors:
        basis.insert(v)
    return basis


# -- literals --------------------------------------------------------------


def parse_lincomb(text: str, rad: int = 1) -> LinComb:
    """Parse ``coeff * P(k,l){...}{...} + ...`` (coeff optional)."""
    s = text.strip()
    if not s:
        raise ValueError("empty linear-combination literal")
    chunks = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "+-*/eE(":
            chunks.append(s[start:i])
            start = i
    chunks.append(s[start:])
    total = None
    for chunk in chunks:
        chunk = chunk.strip()
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:].strip()
        if "*" in chunk:
            coeff_text, _, part_text = chunk.rpartition("*")
            coeff = parse_field_elem(coeff_text, rad)
        else:
            coeff, part_text = ONE, chunk
        p = parse_partition(part_text)
        term = LinComb.of(p, coeff * sign)
        total = term if total is None else total + term
    return total
