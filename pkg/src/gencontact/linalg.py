"""Canonical exact linear algebra over Q and Q(i).

Subspaces are stored as reduced row-echelon bases with pivots scaled to 1,
so equal subspaces have identical presentations and certificates comparing
them are deterministic.  All entry points are pure; nothing here mutates
its arguments.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .scalars import GaussRational


class LinalgError(ValueError):
    """Raised on malformed input (dimension or field mismatches)."""


def _coerce_scalar(x, field: str):
    if field == "Q":
        if isinstance(x, GaussRational):
            if x.im != 0:
                raise LinalgError("complex entry in a rational subspace")
            return x.re
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise LinalgError(f"bad scalar for field Q: {x!r}")
    if field == "C":
        return GaussRational.of(x)
    raise LinalgError(f"unknown field tag: {field!r}")


def _zero(field: str):
    return Fraction(0) if field == "Q" else GaussRational(0)


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a dense matrix.

    Returns the nonzero rows (pivots scaled to 1, pivot columns cleared
    everywhere) together with the pivot column indices, in order.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                mi, mr = m[i], m[r]
                m[i] = [a - f * b for a, b in zip(mi, mr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


class Subspace:
    """A subspace of k^n in canonical reduced row-echelon presentation."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: str, ambient_dim: int, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis          # tuple of row tuples, RREF
        self.pivots = pivots        # tuple of pivot column indices

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace({self.field}, dim {self.dim} of {self.ambient_dim})"

    def reduce_mod(self, vector: Sequence) -> list:
        """Canonical residual of a vector modulo this subspace.

        Linear in the vector and zero exactly on the subspace.
        """
        v = [_coerce_scalar(x, self.field) for x in vector]
        if len(v) != self.ambient_dim:
            raise LinalgError("vector length does not match ambient dimension")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, vector: Sequence) -> bool:
        return all(x == 0 for x in self.reduce_mod(vector))

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.basis)

    def conjugate(self) -> "Subspace":
        if self.field != "C":
            return self
        gens = [[x.conjugate() for x in row] for row in self.basis]
        return canonicalize(gens, "C", self.ambient_dim)

    def complexify(self) -> "Subspace":
        if self.field == "C":
            return self
        return canonicalize([list(r) for r in self.basis], "C", self.ambient_dim)


def canonicalize(generators: Iterable[Sequence], field: str, ambient_dim: int) -> Subspace:
    """Canonical presentation of the span of the given coefficient vectors."""
    rows = []
    for g in generators:
        g = list(g)
        if len(g) != ambient_dim:
            raise LinalgError(
                f"generator length {len(g)} does not match ambient dimension {ambient_dim}")
        rows.append([_coerce_scalar(x, field) for x in g])
    reduced, pivots = rref(rows)
    return Subspace(field, ambient_dim,
                    tuple(tuple(r) for r in reduced), tuple(pivots))


def zero_subspace(field: str, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, (), ())


def full_subspace(field: str, ambient_dim: int) -> Subspace:
    one = Fraction(1) if field == "Q" else GaussRational(1)
    zero = _zero(field)
    rows = tuple(tuple(one if i == j else zero for j in range(ambient_dim))
                 for i in range(ambient_dim))
    return Subspace(field, ambient_dim, rows, tuple(range(ambient_dim)))


def meet_join(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    """Intersection and sum; dim(meet) + dim(join) = dim a + dim b."""
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise LinalgError("subspaces live in different ambient spaces")
    join = canonicalize(list(a.basis) + list(b.basis), a.field, a.ambient_dim)
    # x in meet  <=>  x = u.A = v.B; solve A^T u - B^T v = 0
    na, nb = a.dim, b.dim
    if na == 0 or nb == 0:
        return zero_subspace(a.field, a.ambient_dim), join
    rows = []
    for c in range(a.ambient_dim):
        rows.append([a.basis[i][c] for i in range(na)]
                    + [-b.basis[j][c] for j in range(nb)])
    ker = kernel(rows, a.field, na + nb)
    gens = []
    for sol in ker.basis:
        vec = [_zero(a.field)] * a.ambient_dim
        for i in range(na):
            if sol[i] != 0:
                vec = [x + sol[i] * y for x, y in zip(vec, a.basis[i])]
        gens.append(vec)
    meet = canonicalize(gens, a.field, a.ambient_dim)
    assert meet.dim + join.dim == a.dim + b.dim
    return meet, join


def kernel(matrix_rows: list[list], field: str, ncols: int) -> Subspace:
    """Right null space {x : M x = 0} as a canonical subspace of k^ncols."""
    rows = [[_coerce_scalar(x, field) for x in r] for r in matrix_rows]
    for r in rows:
        if len(r) != ncols:
            raise LinalgError("ragged matrix")
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    gens = []
    for f in free:
        v = [_zero(field)] * ncols
        v[f] = Fraction(1) if field == "Q" else GaussRational(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        gens.append(v)
    return canonicalize(gens, field, ncols)


def solve_affine(matrix_rows: list[list], rhs: Sequence) -> Optional[list]:
    """One exact solution of M x = b, or None when the system is infeasible.

    Free variables are set to zero, so the returned solution is deterministic.
    Feasibility agrees with the rank test rank(M) == rank(M|b).
    """
    if len(matrix_rows) != len(rhs):
        raise LinalgError("rhs length does not match row count")
    if not matrix_rows:
        return []
    ncols = len(matrix_rows[0])
    field = "C" if any(isinstance(x, GaussRational)
                       for r in matrix_rows for x in r) or any(
        isinstance(x, GaussRational) for x in rhs) else "Q"
    aug = []
    for r, b in zip(matrix_rows, rhs):
        if len(r) != ncols:
            raise LinalgError("ragged matrix")
        aug.append([_coerce_scalar(x, field) for x in r]
                   + [_coerce_scalar(b, field)])
    reduced, pivots = rref(aug)
    for row, p in zip(reduced, pivots):
        if p == ncols:
            return None
    x = [_zero(field)] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return x


class Quotient:
    """Coset representatives for ambient/sub with a linear reduction map."""

    __slots__ = ("ambient", "sub", "representatives", "_solve_rows")

    def __init__(self, ambient: Subspace, sub: Subspace):
        if ambient.field != sub.field or ambient.ambient_dim != sub.ambient_dim:
            raise LinalgError("quotient of spaces in different ambients")
        if not sub.is_subspace_of(ambient):
            raise LinalgError("quotient denominator is not contained in the ambient space")
        self.ambient = ambient
        self.sub = sub
        reps = []
        span = sub
        for row in ambient.basis:
            if not span.contains(row):
                reps.append(row)
                span = canonicalize(list(span.basis) + [list(row)],
                                    sub.field, sub.ambient_dim)
        self.representatives = tuple(reps)
        assert len(reps) == ambient.dim - sub.dim
        # columns: sub basis then representatives
        cols = list(sub.basis) + reps
        self._solve_rows = [[cols[j][c] for j in range(len(cols))]
                            for c in range(ambient.ambient_dim)]

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def reduce(self, vector: Sequence) -> list:
        """Coordinates of a vector over the representatives, modulo sub."""
        sol = solve_affine(self._solve_rows, list(vector))
        if sol is None:
            raise LinalgError("vector does not lie in the ambient space")
        return sol[self.sub.dim:]


def quotient(ambient: Subspace, sub: Subspace) -> Quotient:
    return Quotient(ambient, sub)
