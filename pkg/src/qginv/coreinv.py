"""Core, core-EP, DMP, MPD and CMP inverses.

Each inverse has a determinantal route, built from :func:`cdet_form` /
:func:`rdet_form`, and a composition route built from Moore-Penrose and
Drazin inverses.  The composition route can take its ingredients from the
determinantal code (``via="determinantal"``) or from the elimination oracle
(``via="oracle"``).  With verification mode on, the determinantal result is
compared with the composition and a mismatch raises MethodDisagreement.

Throughout, ``k`` (or ``m``) is ``Ind A``, ``s = rank A`` and
``s1 = rank A^k``.
"""

from dataclasses import dataclass

from . import oracle
from .config import settings
from .errors import IndexTooLarge, MethodDisagreement, NotHermitian, ShapeError
from .geninv import cdet_form, drazin, mp_inverse, projector_P, projector_Q, rdet_form
from .ncdet import check_cap, det_rank, matrix_index, minor_sum
from .qmatrix import adjoint, mat_mul, mat_pow, mat_sub, zeros

__all__ = [
    "CmpVariant",
    "right_core",
    "left_core",
    "core_ep",
    "dmp",
    "mpd",
    "cmp",
    "core_nilpotent_split",
    "composition",
]

CMP_READINGS = ("derived", "square_hat", "square_both")


def _mul(*mats):
    out = mats[0]
    for M in mats[1:]:
        out = mat_mul(out, M)
    return out


def _square(A, what):
    if not A.is_square():
        raise ShapeError(f"{what} needs a square matrix")
    check_cap(A.rows)


def _ingredients(via):
    if via == "determinantal":
        return mp_inverse, drazin
    if via == "oracle":
        return oracle.mp_oracle, oracle.drazin_oracle
    raise ValueError(f"via must be 'determinantal' or 'oracle', not {via!r}")


def composition(kind, A, via="determinantal"):
    """The composition formula for ``kind`` built from MP and Drazin inverses."""
    mp, dr = _ingredients(via)
    if kind == "core-r":
        return _mul(dr(A), A, mp(A))
    if kind == "core-l":
        return _mul(mp(A), A, dr(A))
    if kind in ("corep-r", "corep-l"):
        k = matrix_index(A) if via == "determinantal" else oracle.elim_index(A)
        Ak = mat_pow(A, k)
        P = mp(mat_mul(Ak, A))
        return mat_mul(Ak, P) if kind == "corep-r" else mat_mul(P, Ak)
    if kind == "dmp":
        return _mul(dr(A), A, mp(A))
    if kind == "mpd":
        return _mul(mp(A), A, dr(A))
    if kind == "cmp":
        Ap = mp(A)
        return _mul(Ap, A, dr(A), A, Ap)
    raise ValueError(f"no composition for {kind!r}")


def _check(kind, A, X):
    if settings.verify and composition(kind, A) != X:
        raise MethodDisagreement(f"{kind}: determinantal and composition results differ")
    return X


def _core_gate(A):
    k = matrix_index(A)
    if k > 1:
        raise IndexTooLarge(f"core inverses need Ind A <= 1, got {k}; use core_ep")
    return k


def _gram_r(M):
    return mat_mul(M, adjoint(M))


def _gram_c(M):
    return mat_mul(adjoint(M), M)


# -- core inverses ---------------------------------------------------------

def right_core(A, method="chain"):
    """Right core inverse ``X`` with ``AX = P_A`` and the column space of A.

    ``method``: ``"chain"`` (chained rdet formula with A^3), ``"via_corep"``
    (``A (A^2)^+``) or ``"composition"`` (``A^# A A^+``).
    """
    _square(A, "right_core")
    _core_gate(A)
    n = A.rows
    if method == "composition":
        return composition("core-r", A)
    s = det_rank(A)
    if s == 0:
        return zeros(n, n)
    As = adjoint(A)
    if method == "chain":
        M = mat_pow(A, 3)
        G3 = _gram_r(M)
        U = rdet_form(G3, mat_mul(A, adjoint(M)), s)
        Ut = _mul(U, mat_mul(A, A), As)
        G = _gram_r(A)
        X = rdet_form(G, Ut, s, minor_sum(G3, s) * minor_sum(G, s))
    elif method == "via_corep":
        A2 = mat_mul(A, A)
        G = _gram_r(A2)
        X = rdet_form(G, mat_mul(A, adjoint(A2)), s, minor_sum(G, s))
    else:
        raise ValueError(f"unknown method {method!r}")
    return _check("core-r", A, X)


def left_core(A, method="chain"):
    """Left core inverse ``X`` with ``XA = Q_A`` and the row space of A.

    ``method``: ``"chain"`` (chained cdet formula with A^3), ``"via_corep"`` (``(A^2)^+ A``) or
    ``"composition"`` (``A^+ A A^#``).
    """
    _square(A, "left_core")
    _core_gate(A)
    n = A.rows
    if method == "composition":
        return composition("core-l", A)
    s = det_rank(A)
    if s == 0:
        return zeros(n, n)
    As = adjoint(A)
    if method == "chain":
        M = mat_pow(A, 3)
        G3 = _gram_c(M)
        V = cdet_form(G3, mat_mul(adjoint(M), A), s)
        Vt = _mul(As, mat_mul(A, A), V)
        G = _gram_c(A)
        X = cdet_form(G, Vt, s, minor_sum(G, s) * minor_sum(G3, s))
    elif method == "via_corep":
        A2 = mat_mul(A, A)
        G = _gram_c(A2)
        X = cdet_form(G, mat_mul(adjoint(A2), A), s, minor_sum(G, s))
    else:
        raise ValueError(f"unknown method {method!r}")
    return _check("core-l", A, X)


# -- core-EP ---------------------------------------------------------------

def core_ep(A, side="right", method="determinantal"):
    """Right ``A^k (A^{k+1})^+`` or left ``(A^{k+1})^+ A^k`` core-EP inverse."""
    _square(A, "core_ep")
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    kind = "corep-r" if side == "right" else "corep-l"
    if method == "composition":
        return composition(kind, A)
    if method != "determinantal":
        raise ValueError(f"unknown method {method!r}")
    k = matrix_index(A)
    Ak = mat_pow(A, k)
    N = mat_mul(Ak, A)
    # minor order is the rank of A^{k+1}, which is rank A only when k <= 1
    s = det_rank(N)
    if s == 0:
        return zeros(A.rows, A.rows)
    Ns = adjoint(N)
    if side == "right":
        G = _gram_r(N)
        X = rdet_form(G, mat_mul(Ak, Ns), s, minor_sum(G, s))
    else:
        G = _gram_c(N)
        X = cdet_form(G, mat_mul(Ns, Ak), s, minor_sum(G, s))
    return _check(kind, A, X)


# -- DMP / MPD ---------------------------------------------------------------

DMP_FORMS = ("general", "hermitian_rdet", "hermitian_cdet", "auto")


def _hermitian_choice(A, form):
    if form not in DMP_FORMS:
        raise ValueError(f"form must be one of {DMP_FORMS}, not {form!r}")
    if form == "auto":
        return "hermitian_rdet" if A.is_hermitian() else "general"
    if form != "general" and not A.is_hermitian():
        raise NotHermitian(f"form {form!r} needs a Hermitian matrix")
    return form


def _index_data(A):
    k = matrix_index(A)
    Ak = mat_pow(A, k)
    return k, Ak, det_rank(A), det_rank(Ak)


def dmp(A, form="auto", fixed_powers=False):
    """DMP inverse ``A^d A A^+``.

    ``fixed_powers=True`` swaps in ``A`` and ``A^2`` where the general formula
    needs ``A^k`` and ``A^{k+1}``; the two agree only when ``Ind A = 1``.
    It is kept so tests can show the difference.
    """
    _square(A, "dmp")
    form = _hermitian_choice(A, form)
    n = A.rows
    k, Ak, s, s1 = _index_data(A)
    if s1 == 0 or s == 0:
        return zeros(n, n)
    if form == "general":
        M = mat_pow(A, 2 * k + 1)
        GM = _gram_r(M)
        lead, tail = (A, mat_mul(A, A)) if fixed_powers else (Ak, mat_mul(Ak, A))
        U = rdet_form(GM, mat_mul(lead, adjoint(M)), s1)
        Ut = _mul(U, tail, adjoint(A))
        G = _gram_r(A)
        X = rdet_form(G, Ut, s, minor_sum(GM, s1) * minor_sum(G, s))
    else:
        A2 = mat_mul(A, A)
        N = mat_mul(Ak, A)
        Nk2 = mat_mul(N, A)
        d = minor_sum(N, s1) * minor_sum(A2, s)
        if form == "hermitian_rdet":
            v = cdet_form(N, Nk2, s1)
            X = rdet_form(A2, v, s, d)
        else:
            u = rdet_form(A2, Nk2, s)
            X = cdet_form(N, u, s1, d)
    if fixed_powers:
        return X
    return _check("dmp", A, X)


def mpd(A, form="auto", fixed_powers=False):
    """MPD inverse ``A^+ A A^d``; ``fixed_powers`` mirrors :func:`dmp`."""
    _square(A, "mpd")
    form = _hermitian_choice(A, form)
    n = A.rows
    k, Ak, s, s1 = _index_data(A)
    if s1 == 0 or s == 0:
        return zeros(n, n)
    if form == "general":
        M = mat_pow(A, 2 * k + 1)
        GM = _gram_c(M)
        lead, tail = (A, mat_mul(A, A)) if fixed_powers else (Ak, mat_mul(Ak, A))
        V = cdet_form(GM, mat_mul(adjoint(M), lead), s1)
        Vt = _mul(adjoint(A), tail, V)
        G = _gram_c(A)
        X = cdet_form(G, Vt, s, minor_sum(G, s) * minor_sum(GM, s1))
    else:
        A2 = mat_mul(A, A)
        N = mat_mul(Ak, A)
        Nk2 = mat_mul(N, A)
        d = minor_sum(A2, s) * minor_sum(N, s1)
        if form == "hermitian_cdet":
            V = rdet_form(N, Nk2, s1)
            X = cdet_form(A2, V, s, d)
        else:
            u = cdet_form(A2, Nk2, s)
            X = rdet_form(N, u, s1, d)
    if fixed_powers:
        return X
    return _check("mpd", A, X)


# -- CMP -----------------------------------------------------------------

@dataclass(frozen=True)
class CmpVariant:
    """Which CMP representation to evaluate.

    ``l`` selects the auxiliary matrix (1: U from row determinants,
    2: G from column determinants), ``form`` the outer determinant type and
    ``specialization`` the general or Hermitian formulas.
    """

    l: int = 1
    form: str = "cdet"
    specialization: str = "general"

    def __post_init__(self):
        if self.l not in (1, 2):
            raise ValueError("l must be 1 or 2")
        if self.form not in ("cdet", "rdet"):
            raise ValueError("form must be 'cdet' or 'rdet'")
        if self.specialization not in ("general", "hermitian"):
            raise ValueError("specialization must be 'general' or 'hermitian'")


CMP_VARIANTS = tuple(CmpVariant(l, f, sp) for sp in ("general", "hermitian")
                     for l in (1, 2) for f in ("cdet", "rdet"))


def cmp(A, variant=CmpVariant(), reading="derived"):
    """CMP inverse ``Q_A A^d P_A``.

    ``reading`` only affects ``l = 2`` of the general formula. ``"derived"``
    uses ``A2 = (A^{2m+1})* A^{m+1} A*`` and ``G^ = A* A^{m+1} G``;
    ``"square_hat"`` keeps that A2 but uses ``G^ = A* A^2 G``; ``"square_both"``
    uses ``A2 = (A^{2m+1})* A^2 A*`` with ``G^ = A* A^2 G``.  Only
    ``"derived"`` is correct when ``Ind A != 1``.
    """
    _square(A, "cmp")
    if isinstance(variant, dict):
        variant = CmpVariant(**variant)
    if reading not in CMP_READINGS:
        raise ValueError(f"reading must be one of {CMP_READINGS}")
    if variant.specialization == "hermitian" and not A.is_hermitian():
        raise NotHermitian("the Hermitian CMP formulas need a Hermitian matrix")
    n = A.rows
    m, Am, s, s1 = _index_data(A)
    if s == 0 or s1 == 0:
        return zeros(n, n)
    Am1 = mat_mul(Am, A)
    As = adjoint(A)

    if variant.specialization == "general":
        M = mat_pow(A, 2 * m + 1)
        Ms = adjoint(M)
        GM = _gram_c(M)
        dM = minor_sum(GM, s1)
        if variant.l == 1:
            U = rdet_form(_gram_r(M), _mul(As, Am1, Ms), s1)
            hat = _mul(U, Am1, As)
        else:
            mid = mat_mul(A, A) if reading == "square_both" else Am1
            Gm = cdet_form(GM, _mul(Ms, mid, As), s1)
            left = Am1 if reading == "derived" else mat_mul(A, A)
            hat = _mul(As, left, Gm)
        Gc, Gr = _gram_c(A), _gram_r(A)
        d = minor_sum(Gc, s)
        denom = d * d * dM
        if variant.form == "cdet":
            v = rdet_form(Gr, hat, s)
            X = cdet_form(Gc, v, s, denom)
        else:
            w = cdet_form(Gc, hat, s)
            X = rdet_form(Gr, w, s, denom)
    else:
        A2 = mat_mul(A, A)
        Am2 = mat_mul(Am1, A)
        if variant.l == 1:
            hat = mat_mul(rdet_form(Am1, Am2, s1), A2)
        else:
            hat = mat_mul(A2, cdet_form(Am1, Am2, s1))
        d2 = minor_sum(A2, s)
        denom = d2 * d2 * minor_sum(Am1, s1)
        if variant.form == "cdet":
            v = rdet_form(A2, hat, s)
            X = cdet_form(A2, v, s, denom)
        else:
            w = cdet_form(A2, hat, s)
            X = rdet_form(A2, w, s, denom)
    if reading != "derived":
        return X
    return _check("cmp", A, X)


def cmp_composition(A):
    """``Q_A A^d P_A`` with determinantal projectors."""
    return _mul(projector_Q(A), drazin(A), projector_P(A))


def core_nilpotent_split(A):
    """``A = A1 + A2`` with ``A1 = A A^d A`` group invertible and ``A2`` nilpotent."""
    _square(A, "core_nilpotent_split")
    A1 = _mul(A, drazin(A), A)
    A2 = mat_sub(A, A1)
    n = A.rows
    if settings.verify:
        Z = zeros(n, n)
        if mat_mul(A1, A2) != Z or mat_mul(A2, A1) != Z:
            raise MethodDisagreement("core and nilpotent parts do not annihilate each other")
        if mat_pow(A2, n) != Z or matrix_index(A1) > 1:
            raise MethodDisagreement("core-nilpotent split failed its structural checks")
    return A1, A2
