"""Determinantal Moore-Penrose, projector, Drazin and group inverses.

Every formula here has the same shape: an entry is a sum of row or column
determinants of principal submatrices of a Hermitian (or Hermitian-like)
matrix ``M`` with one row or column replaced, divided by a sum of principal
minors of ``M``.  :func:`cdet_form` and :func:`rdet_form` build a whole
matrix of such entries; the public functions only choose ``M``, the
replacement source and the minor order.

By linearity, ``cdet_form(A*A, A*C, r, 1) == minor_sum(A*A, r) * A^+ C`` and
``rdet_form(AA*, R A*, r, 1) == minor_sum(AA*, r) * R A^+``; the
composite formulas for the core-type inverses are chained from these.
"""

from .config import settings
from .errors import IndexTooLarge, InternalInconsistency, NotHermitian, ShapeError
from .exactq import ONE
from .ncdet import anchored_cdet_sum, anchored_rdet_sum, check_cap, det_rank, matrix_index, minor_sum
from .qmatrix import QMatrix, adjoint, identity, mat_mul, mat_pow, zeros

__all__ = [
    "FORMS",
    "cdet_form",
    "rdet_form",
    "mp_inverse",
    "projector_Q",
    "projector_P",
    "drazin",
    "group_inverse",
]

FORMS = ("column", "row", "hermitian_column", "hermitian_row", "auto")


def _divide(X, d):
    if d == 1:
        return X
    if not d:
        raise InternalInconsistency("zero denominator at the computed rank")
    inv = ONE.w / d
    return X.scale(inv)


def cdet_form(M, C, r, d=1):
    """``X[i, j] = anchored_cdet_sum(M, i, C[:, j], r) / d``."""
    if C.rows != M.rows:
        raise ShapeError("replacement columns must match the order of M")
    n = M.rows
    cols = [C.col(j) for j in range(C.cols)]
    X = QMatrix.from_function(
        n, C.cols, lambda i, j: anchored_cdet_sum(M, i + 1, cols[j], r))
    return _divide(X, d)


def rdet_form(M, R, r, d=1):
    """``X[i, j] = anchored_rdet_sum(M, j, R[i, :], r) / d``."""
    if R.cols != M.rows:
        raise ShapeError("replacement rows must match the order of M")
    n = M.rows
    X = QMatrix.from_function(
        R.rows, n, lambda i, j: anchored_rdet_sum(M, j + 1, R.row(i), r))
    return _divide(X, d)


def _denominator(M, r):
    d = minor_sum(M, r)
    if not d:
        raise InternalInconsistency(f"minor sum of order {r} vanished at the computed rank")
    return d


def _resolve_form(A, form):
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")
    hermitian = A.is_hermitian()
    if form == "auto":
        return "hermitian_column" if hermitian else "column"
    if form.startswith("hermitian") and not hermitian:
        raise NotHermitian(f"form {form!r} needs a Hermitian matrix")
    return form


def _mp(A, form, r):
    As = adjoint(A)
    if form == "column":
        G = mat_mul(As, A)
        return cdet_form(G, As, r, _denominator(G, r))
    if form == "row":
        G = mat_mul(A, As)
        return rdet_form(G, As, r, _denominator(G, r))
    A2 = mat_mul(A, A)
    if form == "hermitian_column":
        return cdet_form(A2, A, r, _denominator(A2, r))
    return rdet_form(A2, A, r, _denominator(A2, r))


def mp_inverse(A, form="auto"):
    """Moore-Penrose inverse by row/column determinants."""
    check_cap(max(A.rows, A.cols))
    form = _resolve_form(A, form)
    r = det_rank(A)
    if r == 0:
        return zeros(A.cols, A.rows)
    X = _mp(A, form, r)
    if settings.verify:
        other = "row" if form in ("column", "hermitian_column") else "column"
        if _mp(A, other, r) != X:
            raise InternalInconsistency("row and column forms of A^+ disagree")
    return X


def projector_Q(A):
    """``Q_A = A^+ A`` from column determinants of ``A*A``."""
    check_cap(max(A.rows, A.cols))
    r = det_rank(A)
    if r == 0:
        return zeros(A.cols, A.cols)
    G = mat_mul(adjoint(A), A)
    return cdet_form(G, G, r, _denominator(G, r))


def projector_P(A):
    """``P_A = A A^+`` from row determinants of ``AA*``."""
    check_cap(max(A.rows, A.cols))
    r = det_rank(A)
    if r == 0:
        return zeros(A.rows, A.rows)
    G = mat_mul(A, adjoint(A))
    return rdet_form(G, G, r, _denominator(G, r))


def _drazin_k(A, k, form):
    Ak = mat_pow(A, k)
    r = det_rank(Ak)
    n = A.rows
    if r == 0:
        return zeros(n, n)
    if form in ("hermitian_column", "hermitian_row"):
        N = mat_mul(Ak, A)
        d = _denominator(N, r)
        if form == "hermitian_column":
            return cdet_form(N, Ak, r, d)
        return rdet_form(N, Ak, r, d)
    M = mat_pow(A, 2 * k + 1)
    Ms = adjoint(M)
    if form == "column":
        G = mat_mul(Ms, M)
        # A^k (A^{2k+1})^+ A^k, with the pseudoinverse applied to A^k column by column
        return mat_mul(Ak, cdet_form(G, mat_mul(Ms, Ak), r, _denominator(G, r)))
    G = mat_mul(M, Ms)
    return mat_mul(rdet_form(G, mat_mul(Ak, Ms), r, _denominator(G, r)), Ak)


def _square(A, what):
    if not A.is_square():
        raise ShapeError(f"{what} needs a square matrix")
    check_cap(A.rows)


def drazin(A, form="auto", index=None):
    """Drazin inverse ``A^d`` with ``k = Ind A``."""
    _square(A, "drazin")
    form = _resolve_form(A, form)
    k = matrix_index(A) if index is None else index
    X = _drazin_k(A, k, form)
    if settings.verify:
        other = "row" if form in ("column", "hermitian_column") else "column"
        if _drazin_k(A, k, other) != X:
            raise InternalInconsistency("row and column forms of A^d disagree")
    return X


def group_inverse(A, form="auto"):
    """Group inverse ``A^#``; needs ``Ind A <= 1``."""
    _square(A, "group_inverse")
    k = matrix_index(A)
    if k > 1:
        raise IndexTooLarge(f"group inverse needs Ind A <= 1, got {k}")
    # k = 1 is valid for nonsingular A too
    return drazin(A, form, index=1)


def is_nonsingular(A):
    return A.is_square() and det_rank(A) == A.rows


def inverse(A):
    """Classical inverse of a nonsingular matrix, by the Drazin route with k = 0."""
    if not is_nonsingular(A):
        raise ShapeError("matrix is singular")
    return drazin(A, "column", index=0) if A.rows else identity(0)
