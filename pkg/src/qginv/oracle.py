"""Elimination-based reference implementations and axiom checkers.

Nothing here touches the row/column determinant code, so agreement between
this module and :mod:`qginv.geninv` / :mod:`qginv.coreinv` is real evidence.

Over a skew field the side of a coefficient matters: row operations multiply
rows by scalars on the left, column operations multiply columns on the right.
"""

from dataclasses import dataclass, field

from .errors import IndexTooLarge, RankZero, ShapeError
from .exactq import q_inv, q_mul
from .qmatrix import QMatrix, adjoint, hstack, identity, mat_mul, mat_pow, mat_sub, vstack, zeros

__all__ = [
    "RankFactorization",
    "VerificationReport",
    "SYSTEMS",
    "row_echelon",
    "elim_rank",
    "rank_factorize",
    "gauss_jordan_inverse",
    "mp_oracle",
    "elim_index",
    "drazin_oracle",
    "group_oracle",
    "core_nilpotent_oracle",
    "column_echelon",
    "verify",
]


def row_echelon(A):
    """Reduced row echelon form by left row operations.

    Returns ``(R, pivots)`` with ``R = E A`` for some invertible ``E``.
    """
    rows = [list(r) for r in A]
    m, n = A.shape
    pivots = []
    p = 0
    for c in range(n):
        if p == m:
            break
        piv = next((t for t in range(p, m) if rows[t][c]), None)
        if piv is None:
            continue
        rows[p], rows[piv] = rows[piv], rows[p]
        inv = q_inv(rows[p][c])
        rows[p] = [q_mul(inv, x) for x in rows[p]]
        for t in range(m):
            if t != p and rows[t][c]:
                f = rows[t][c]
                rows[t] = [x - q_mul(f, y) for x, y in zip(rows[t], rows[p])]
        pivots.append(c)
        p += 1
    return QMatrix(rows, m, n), pivots


def column_echelon(A):
    """Column mirror of :func:`row_echelon`: right column operations.

    Returns ``(C, pivots)`` with ``C = A E`` and ``pivots`` the pivot rows.
    """
    cols = [list(A.col(j)) for j in range(A.cols)]
    m, n = A.shape
    pivots = []
    p = 0
    for r in range(m):
        if p == n:
            break
        piv = next((t for t in range(p, n) if cols[t][r]), None)
        if piv is None:
            continue
        cols[p], cols[piv] = cols[piv], cols[p]
        inv = q_inv(cols[p][r])
        cols[p] = [q_mul(x, inv) for x in cols[p]]
        for t in range(n):
            if t != p and cols[t][r]:
                f = cols[t][r]
                cols[t] = [x - q_mul(y, f) for x, y in zip(cols[t], cols[p])]
        pivots.append(r)
        p += 1
    C = QMatrix.from_function(m, n, lambda i, j: cols[j][i])
    return C, pivots


def elim_rank(A, side="column"):
    """Rank by Gaussian elimination: right column rank or left row rank."""
    if side == "column":
        return len(column_echelon(A)[1])
    if side == "row":
        return len(row_echelon(A)[1])
    raise ValueError(f"side must be 'row' or 'column', not {side!r}")


@dataclass(frozen=True)
class RankFactorization:
    F: QMatrix
    G: QMatrix

    @property
    def rank(self):
        return self.F.cols


def rank_factorize(A):
    """``A = F G`` with ``F`` the pivot columns of ``A`` and ``G`` the nonzero rows of its RREF."""
    R, pivots = row_echelon(A)
    r = len(pivots)
    if r == 0:
        raise RankZero("the zero matrix has no full-rank factorization")
    F = QMatrix.from_function(A.rows, r, lambda i, t: A[i, pivots[t]])
    G = QMatrix.from_function(r, A.cols, lambda t, j: R[t, j])
    return RankFactorization(F, G)


def gauss_jordan_inverse(A):
    if not A.is_square():
        raise ShapeError("only square matrices can be inverted")
    n = A.rows
    R, pivots = row_echelon(hstack(A, identity(n)))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return QMatrix.from_function(n, n, lambda i, j: R[i, n + j])


def mp_oracle(A):
    """``A^+ = G*(F* A G*)^{-1} F*`` from a full-rank factorization."""
    try:
        fac = rank_factorize(A)
    except RankZero:
        return zeros(A.cols, A.rows)
    Fs, Gs = adjoint(fac.F), adjoint(fac.G)
    core = gauss_jordan_inverse(mat_mul(mat_mul(Fs, A), Gs))
    return mat_mul(mat_mul(Gs, core), Fs)


def elim_index(A):
    """Smallest ``k >= 0`` with ``rank A^(k+1) = rank A^k``, ranks by elimination."""
    if not A.is_square():
        raise ShapeError("index needs a square matrix")
    prev = A.rows
    P = A
    k = 0
    while True:
        cur = elim_rank(P)
        if cur == prev:
            return k
        prev = cur
        P = mat_mul(P, A)
        k += 1


def drazin_oracle(A):
    """``A^d = A^k (A^{2k+1})^+ A^k`` with ``k = Ind A``."""
    k = elim_index(A)
    Ak = mat_pow(A, k)
    return mat_mul(mat_mul(Ak, mp_oracle(mat_pow(A, 2 * k + 1))), Ak)


def group_oracle(A):
    if elim_index(A) > 1:
        raise IndexTooLarge("group inverse needs Ind A <= 1")
    return mat_mul(mat_mul(A, mp_oracle(mat_pow(A, 3))), A)


# -- defining systems ----------------------------------------------------

SYSTEMS = ("penrose", "drazin", "core_right", "core_left", "core_ep_right",
           "core_ep_left", "dmp", "mpd", "cmp")


@dataclass
class VerificationReport:
    system: str
    results: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.results.values())

    def __bool__(self):
        return self.ok

    def to_obj(self):
        from .qmatrix import matrix_to_obj
        return {
            "system": self.system,
            "ok": self.ok,
            "results": dict(self.results),
            "residuals": {k: matrix_to_obj(v) for k, v in self.residuals.items()},
        }


class _Checker:
    def __init__(self, system):
        self.report = VerificationReport(system)

    def eq(self, name, lhs, rhs):
        ok = lhs == rhs
        self.report.results[name] = ok
        if not ok:
            self.report.residuals[name] = mat_sub(lhs, rhs)

    def holds(self, name, ok):
        self.report.results[name] = bool(ok)


def _col_space_equal(A, X):
    ra = elim_rank(A)
    return elim_rank(X) == ra and elim_rank(hstack(A, X)) == ra


def _row_space_equal(A, X):
    ra = elim_rank(A, "row")
    return elim_rank(X, "row") == ra and elim_rank(vstack(A, X), "row") == ra


def verify(system, A, X, aux=None):
    """Check ``X`` against the defining equations of ``system`` exactly.

    ``aux`` may carry precomputed ``k`` (index), ``A1`` (core part), ``Ad``
    and ``Ap`` (Drazin / Moore-Penrose inverses); anything missing is computed
    here by elimination.
    """
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}; expected one of {SYSTEMS}")
    if X.shape != (A.cols, A.rows):
        raise ShapeError(f"candidate must be {A.cols}x{A.rows}, got {X.rows}x{X.cols}")
    aux = dict(aux or {})
    if system != "penrose" and not A.is_square():
        raise ShapeError(f"system {system!r} needs a square matrix")

    def get(key, make):
        if key not in aux:
            aux[key] = make()
        return aux[key]

    k = lambda: get("k", lambda: elim_index(A))  # noqa: E731
    Ap = lambda: get("Ap", lambda: mp_oracle(A))  # noqa: E731
    Ad = lambda: get("Ad", lambda: drazin_oracle(A))  # noqa: E731

    c = _Checker(system)
    AX = mat_mul(A, X)
    XA = mat_mul(X, A)
    XAX = mat_mul(XA, X)

    if system == "penrose":
        c.eq("AXA=A", mat_mul(AX, A), A)
        c.eq("XAX=X", XAX, X)
        c.eq("(AX)*=AX", adjoint(AX), AX)
        c.eq("(XA)*=XA", adjoint(XA), XA)
    elif system == "drazin":
        kk = k()
        Ak = mat_pow(A, kk)
        Ak1 = mat_mul(Ak, A)
        c.eq("XAX=X", XAX, X)
        c.eq("AX=XA", AX, XA)
        c.eq("XA^(k+1)=A^k", mat_mul(X, Ak1), Ak)
        c.eq("A^(k+1)X=A^k", mat_mul(Ak1, X), Ak)
    elif system == "core_right":
        c.eq("AX=P_A", AX, mat_mul(A, Ap()))
        c.holds("R_r(X)=R_r(A)", _col_space_equal(A, X))
    elif system == "core_left":
        c.eq("XA=Q_A", XA, mat_mul(Ap(), A))
        c.holds("R_l(X)=R_l(A)", _row_space_equal(A, X))
    elif system == "core_ep_right":
        kk = k()
        Ak = mat_pow(A, kk)
        c.eq("XAX=X", XAX, X)
        c.eq("(AX)*=AX", adjoint(AX), AX)
        c.eq("XA^(k+1)=A^k", mat_mul(X, mat_mul(Ak, A)), Ak)
        c.holds("R_r(X)=R_r(A^k)", _col_space_equal(Ak, X))
    elif system == "core_ep_left":
        kk = k()
        Ak = mat_pow(A, kk)
        c.eq("XAX=X", XAX, X)
        c.eq("(XA)*=XA", adjoint(XA), XA)
        c.eq("A^(k+1)X=A^k", mat_mul(mat_mul(Ak, A), X), Ak)
        c.holds("R_l(X)=R_l(A^k)", _row_space_equal(Ak, X))
    elif system == "dmp":
        Ak = mat_pow(A, k())
        c.eq("XAX=X", XAX, X)
        c.eq("XA=A^dA", XA, mat_mul(Ad(), A))
        c.eq("A^kX=A^kA+", mat_mul(Ak, X), mat_mul(Ak, Ap()))
    elif system == "mpd":
        Ak = mat_pow(A, k())
        c.eq("XAX=X", XAX, X)
        c.eq("AX=AA^d", AX, mat_mul(A, Ad()))
        c.eq("XA^k=A+A^k", mat_mul(X, Ak), mat_mul(Ap(), Ak))
    elif system == "cmp":
        A1 = get("A1", lambda: mat_mul(mat_mul(A, Ad()), A))
        c.eq("XAX=X", XAX, X)
        c.eq("AXA=A1", mat_mul(AX, A), A1)
        c.eq("AX=A1A+", AX, mat_mul(A1, Ap()))
        c.eq("XA=A+A1", XA, mat_mul(Ap(), A1))
    return c.report


def core_nilpotent_oracle(A):
    A1 = mat_mul(mat_mul(A, drazin_oracle(A)), A)
    return A1, mat_sub(A, A1)

