"""Independent base-field oracles built on sympy.

Nothing in the main code path imports this module.  Every ring in the
package is a finite-dimensional algebra over QQ or GF(p), so subspaces of
``R^(n+1)`` become ordinary vector subspaces over the base field, where
sympy's exact ``DomainMatrix`` can compute ranks and kernels.  The tests use
these routines to cross-check the hand-written noncommutative elimination.
"""

from __future__ import annotations

from sympy import GF, QQ as SQQ
from sympy.polys.matrices import DomainMatrix

from .rings import Ring, RingValue


def _domain(base: Ring):
    if base.kind == "rational":
        return SQQ
    return GF(base.p)


def _convert(x: RingValue, dom):
    if x.ring.kind == "rational":
        return dom(int(x.data.numerator), int(x.data.denominator))
    return dom(x.data)


def to_domain_matrix(rows, base: Ring, ncols: int | None = None) -> DomainMatrix:
    dom = _domain(base)
    rows = [list(r) for r in rows]
    if not rows:
        return DomainMatrix.zeros((0, ncols or 0), dom)
    return DomainMatrix([[_convert(x, dom) for x in r] for r in rows], (len(rows), len(rows[0])), dom)


def regular_rows(v, ring: Ring) -> list[list[RingValue]]:
    """Base-field spanning set of the left submodule ``R v`` (left-regular action)."""
    return [[c for x in v for c in (e * x).coords()] for e in ring.basis()]


def module_rank(vectors, ring: Ring) -> int:
    """Rank of a set of vectors through the left-regular representation.

    The base-field dimension of the generated submodule is divided by the
    dimension a free rank-one summand occupies.
    """
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    rows = [r for v in vectors for r in regular_rows(v, ring)]
    return to_domain_matrix(rows, ring.base).rank() // ring.dim


def submodule_dim(vectors, ring: Ring) -> int:
    """Base-field dimension of the left submodule generated by the vectors."""
    rows = [r for v in vectors for r in regular_rows(v, ring)]
    if not rows:
        return 0
    return to_domain_matrix(rows, ring.base).rank()


def matrix_invertible(M, ring: Ring) -> bool:
    """Whether a square matrix over ``ring`` has full left row rank (oracle)."""
    return module_rank(M, ring) == len(M) == len(M[0])


# -- hyperplanes as base-field subspaces ---------------------------------

def _pairing_map(L, ring: Ring, n1: int) -> DomainMatrix:
    """Matrix of the base-linear map ``X -> sum_c X_c L_c`` on row coordinates."""
    rows = []
    for c in range(n1):
        for e in ring.basis():
            rows.append(list((e * L[c]).coords()))
    return to_domain_matrix(rows, ring.base)


def _rank(M: DomainMatrix) -> int:
    return 0 if M.shape[0] == 0 else M.rank()


def _same_space(U: DomainMatrix, W: DomainMatrix) -> bool:
    ru, rw = _rank(U), _rank(W)
    if ru != rw:
        return False
    if U.shape[0] == 0 or W.shape[0] == 0:
        return ru == rw == 0
    return U.vstack(W).rank() == ru


def _intersect_with_kernel(U: DomainMatrix, P: DomainMatrix) -> DomainMatrix:
    """Rows spanning ``rowspace(U) ∩ ker(X -> X P)``."""
    if U.shape[0] == 0:
        return U
    UP = U * P
    ker = UP.transpose().nullspace()
    if ker.shape[0] == 0:
        return DomainMatrix.zeros((0, U.shape[1]), U.domain)
    return ker * U


def _kernel(P: DomainMatrix) -> DomainMatrix:
    """Rows spanning ``{X : X P = 0}``."""
    return P.transpose().nullspace()


def coherent_subspace(A1, A2, L1, L2, ring: Ring) -> bool:
    """Coherence as ``(A1 + A2) ∩ l1 == (A1 + A2) ∩ l2`` over the base field."""
    n1 = len(A1)
    U = to_domain_matrix(regular_rows(A1, ring) + regular_rows(A2, ring), ring.base)
    K1 = _intersect_with_kernel(U, _pairing_map(L1, ring, n1))
    K2 = _intersect_with_kernel(U, _pairing_map(L2, ring, n1))
    return _same_space(K1, K2)


def coherent_dual_subspace(A1, A2, L1, L2, ring: Ring) -> bool:
    """Coherence as ``A1 + (l1 ∩ l2) == A2 + (l1 ∩ l2)`` over the base field."""
    n1 = len(A1)
    P = _pairing_map(L1, ring, n1).hstack(_pairing_map(L2, ring, n1))
    W = _kernel(P)
    S1 = to_domain_matrix(regular_rows(A1, ring), ring.base).vstack(W) if W.shape[0] else to_domain_matrix(regular_rows(A1, ring), ring.base)
    S2 = to_domain_matrix(regular_rows(A2, ring), ring.base).vstack(W) if W.shape[0] else to_domain_matrix(regular_rows(A2, ring), ring.base)
    return _same_space(S1, S2)


def in_hyperplane(X, L, ring: Ring) -> bool:
    """Whether the submodule generated by ``X`` lies in the hyperplane ``L``."""
    rows = to_domain_matrix(regular_rows(X, ring), ring.base)
    return all(x == rows.domain.zero for row in (rows * _pairing_map(L, ring, len(X))).to_list() for x in row)


def menelaus_rank(edge_points, ring: Ring) -> bool:
    """Menelaus by rank: the edge points are dependent."""
    return module_rank(edge_points, ring) < len(edge_points)
