"""Linear algebra over the configured rings.

Vectors are rows and scalars act on the left, so every elimination step is a
left row operation: scale a row on the left by a unit, or add a left multiple
of one row to another.  This is valid over any division ring.

Two kinds of linear systems appear:

* *left systems* ``sum_i c_i * rows[i] == target`` (coefficients on the left);
* *right systems* ``sum_c M[r][c] * x[c] == rhs[r]`` (unknowns on the right),
  which is how a covector is fitted to prescribed pairings.

Left row operations preserve the solution set of a right system, so both are
solved by the same reduction.  Over rings that are not division rings the
systems are linearized over the base field through coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DescriptorMismatch, NoSolution, NotDivisionRing
from .rings import Ring, RingValue

Matrix = list  # list of rows, each a list of RingValue


def _require_division(ring: Ring):
    if not ring.is_division_ring:
        raise NotDivisionRing(f"{ring} is not a division ring")


def _ring_of(M) -> Ring:
    for row in M:
        for x in row:
            return x.ring
    raise ValueError("cannot infer the ring of an empty matrix")


@dataclass(frozen=True)
class RowReduction:
    matrix: tuple   # reduced row echelon form, pivots equal to 1
    rank: int
    invertible: bool
    pivots: tuple   # pivot column of each nonzero row
    transform: tuple  # T with matrix == T * original


def row_reduce(M, ring: Ring | None = None, transform: bool = True) -> RowReduction:
    """Reduced row echelon form over a division ring.

    Pivot rule: columns are scanned left to right and the pivot of a column
    is the topmost not-yet-used row with a nonzero entry there.  Pivot rows
    are left-scaled to a leading 1 and every other row is cleared.
    With ``transform=False`` the transform is not tracked and is left empty.
    """
    ring = ring or _ring_of(M)
    _require_division(ring)
    # work on raw payloads; wrapping every intermediate costs more than the arithmetic
    for row in M:
        for x in row:
            if x.ring != ring:
                raise DescriptorMismatch(f"{x.ring} vs {ring}")
    add, mul, neg, inv, is_zero = ring._add, ring._mul, ring._neg, ring._inv, ring._is_zero
    rows = [[x.data for x in r] for r in M]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    zero, one = ring._zero, ring._one
    T = [[one if i == j else zero for j in range(nrows)] for i in range(nrows)] if transform else [[] for _ in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not is_zero(rows[i][c])), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        T[r], T[p] = T[p], T[r]
        s = inv(rows[r][c])
        rows[r] = [mul(s, x) for x in rows[r]]
        if transform:
            T[r] = [mul(s, x) for x in T[r]]
        for i in range(nrows):
            if i != r and not is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x if is_zero(y) else add(x, neg(mul(f, y))) for x, y in zip(rows[i], rows[r])]
                if transform:
                    T[i] = [x if is_zero(y) else add(x, neg(mul(f, y))) for x, y in zip(T[i], T[r])]
        pivots.append(c)
        r += 1
    rows = [[RingValue(ring, x) for x in row] for row in rows]
    T = [[RingValue(ring, x) for x in row] for row in T] if transform else []
    rank = len(pivots)
    return RowReduction(
        matrix=tuple(tuple(row) for row in rows),
        rank=rank,
        invertible=nrows == ncols and rank == nrows,
        pivots=tuple(pivots),
        transform=tuple(tuple(row) for row in T),
    )


def rank(M, ring: Ring | None = None) -> int:
    if not M:
        return 0
    return row_reduce(M, ring, transform=False).rank


def solve_left(rows, target, ring: Ring | None = None) -> list[RingValue]:
    """Coefficients ``c`` with ``sum_i c_i * rows[i] == target``."""
    ring = ring or target[0].ring
    if not ring.is_division_ring:
        return _solve_linearized(ring, rows, target, left=True)
    if not rows:
        if all(t.is_zero() for t in target):
            return []
        raise NoSolution("empty row set")
    red = row_reduce(rows, ring)
    d = [target[c] for c in red.pivots]
    residual = list(target)
    for k, dk in enumerate(d):
        residual = [x - dk * y for x, y in zip(residual, red.matrix[k])]
    if any(not x.is_zero() for x in residual):
        raise NoSolution("target is not in the row span")
    coeffs = []
    for i in range(len(rows)):
        s = ring.zero
        for k, dk in enumerate(d):
            s = s + dk * red.transform[k][i]
        coeffs.append(s)
    return coeffs


def solve_right(M, rhs, ring: Ring | None = None) -> list[RingValue]:
    """A solution ``x`` of ``sum_c M[r][c] * x[c] == rhs[r]``; free unknowns are 0."""
    ring = ring or rhs[0].ring
    if not ring.is_division_ring:
        return _solve_linearized(ring, M, rhs, left=False)
    ncols = len(M[0])
    aug = [list(row) + [b] for row, b in zip(M, rhs)]
    red = row_reduce(aug, ring)
    if ncols in red.pivots:
        raise NoSolution("inconsistent system")
    x = [ring.zero] * ncols
    for k, c in enumerate(red.pivots):
        x[c] = red.matrix[k][ncols]
    return x


def left_kernel(M, ring: Ring | None = None) -> list[list[RingValue]]:
    """Basis of the row vectors ``y`` with ``y * M == 0``."""
    ring = ring or _ring_of(M)
    red = row_reduce(M, ring)
    return [list(red.transform[k]) for k in range(red.rank, len(M))]


def right_kernel(M, ring: Ring | None = None) -> list[list[RingValue]]:
    """Basis of the column vectors ``x`` with ``M * x == 0``."""
    ring = ring or _ring_of(M)
    red = row_reduce(M, ring)
    ncols = len(M[0])
    basis = []
    for free in (c for c in range(ncols) if c not in red.pivots):
        x = [ring.zero] * ncols
        x[free] = ring.one
        for k, c in enumerate(red.pivots):
            x[c] = -red.matrix[k][free]
        basis.append(x)
    return basis


def concat_rows(*blocks):
    return [list(r) for b in blocks for r in b]


def span_equal(U, W, ring: Ring | None = None) -> bool:
    """Whether two finite row sets span the same left subspace."""
    if not U and not W:
        return True
    ring = ring or _ring_of(U or W)
    ru, rw = rank(U, ring), rank(W, ring)
    return ru == rw and rank(concat_rows(U, W), ring) == ru


# -- general rings -------------------------------------------------------

def _solve_linearized(ring: Ring, A, b, left: bool):
    """Solve a left or right system over a finite-dimensional algebra.

    Each unknown ``u`` is written ``u = sum_t u_t e_t`` over the base-field
    basis ``e_t``; the system becomes a base-field linear system.
    """
    base = ring.base
    basis = ring.basis()
    cols = []  # one base-field column per (unknown, basis element)
    if left:
        for row in A:
            for e in basis:
                cols.append([c for x in row for c in (e * x).coords()])
    else:
        nc = len(A[0])
        for c in range(nc):
            for e in basis:
                cols.append([co for r in range(len(A)) for co in (A[r][c] * e).coords()])
    target = [c for x in b for c in x.coords()]
    if not cols:
        if all(t.is_zero() for t in target):
            return []
        raise NoSolution("no unknowns")
    try:
        sol = solve_left(cols, target, base)
    except NoSolution:
        raise NoSolution("system has no solution over the base field") from None
    d = ring.dim
    return [ring.from_coords(sol[i * d:(i + 1) * d]) for i in range(len(sol) // d)]


def base_rows(v, ring: Ring) -> list[list[RingValue]]:
    """Base-field rows whose span is the left submodule generated by ``v``.

    For a matrix ring ``M_k(F)`` the vector is a ``k x k(n+1)`` block
    matrix and its rows span the module; for other rings the rows are
    ``e_t * v`` over the basis.
    """
    if ring.kind == "matrix_ring":
        k = ring.k
        return [[x for entry in v for x in _matrix_row(entry, i)] for i in range(k)]
    return [[c for x in v for c in (e * x).coords()] for e in ring.basis()]


def _matrix_row(entry: RingValue, i: int):
    base = entry.ring.base
    return [RingValue(base, x) for x in entry.data[i]]


def independent(vectors, ring: Ring | None = None) -> bool:
    """Whether the vectors generate a free direct summand of the expected rank.

    Division rings use ordinary rank.  Over dual numbers the reduction
    modulo epsilon must have full rank (Nakayama).  Over ``M_k(F)`` the
    stacked base rows must be independent.
    """
    vectors = [list(v) for v in vectors]
    if not vectors:
        return True
    ring = ring or vectors[0][0].ring
    if ring.is_division_ring:
        return rank(vectors, ring) == len(vectors)
    if ring.kind == "dual_over_rational":
        base = ring.base
        reduced = [[RingValue(base, x.data[0]) for x in v] for v in vectors]
        return rank(reduced, base) == len(vectors)
    if ring.kind == "matrix_ring":
        stacked = [r for v in vectors for r in base_rows(v, ring)]
        return rank(stacked, ring.base) == ring.k * len(vectors)
    raise NotDivisionRing(f"independence over {ring} is not supported")
