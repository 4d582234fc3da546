"""Row and column determinants of quaternion matrices.

``rdet_i`` sums, over every permutation, a signed product whose factors are
read along the cycles of the permutation: first the cycle through ``i``
(starting at ``i``), then the remaining cycles, each started at its least
element, in increasing order of those least elements.  ``cdet_j`` uses the
same chains but places the cycle through ``j`` last and the others in
decreasing order, so the rightmost factor always lies in column ``j``.

The sign of a permutation with ``r`` cycles (fixed points included) is
``(-1)**(n - r)``.

Term lists are built once per ``(n, anchor, kind)`` and cached.
"""

from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from .config import settings
from .errors import InternalInconsistency, NotHermitian, ShapeError, SizeCapExceeded
from .exactq import ONE, ZERO, Quaternion, q_mul
from .qmatrix import IndexSet, QMatrix, adjoint, mat_mul, mat_pow

__all__ = [
    "CyclePermutation",
    "MinorFamily",
    "rdet",
    "cdet",
    "hdet",
    "minor_sum",
    "anchored_cdet_sum",
    "anchored_rdet_sum",
    "det_rank",
    "matrix_index",
    "check_cap",
]


class CyclePermutation:
    """A permutation of ``{1..n}`` kept as its image tuple.

    ``images[t - 1]`` is the image of ``t``.
    """

    __slots__ = ("n", "images")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        self.n = n
        self.images = images

    def __call__(self, t):
        return self.images[t - 1]

    def cycle_through(self, start):
        cyc = [start]
        t = self(start)
        while t != start:
            cyc.append(t)
            t = self(t)
        return cyc

    def _cycles_by_min(self):
        seen = set()
        out = []
        for t in range(1, self.n + 1):
            if t not in seen:
                c = self.cycle_through(t)
                seen.update(c)
                out.append(c)
        return out

    @property
    def cycles(self):
        """Cycles started at their least element, in increasing order."""
        return self._cycles_by_min()

    @property
    def sign(self):
        return -1 if (self.n - len(self._cycles_by_min())) % 2 else 1

    def left_ordered(self, i):
        """Cycle form used by ``rdet_i``."""
        first = self.cycle_through(i)
        return [first] + [c for c in self._cycles_by_min() if i not in c]

    def right_ordered(self, j):
        """Cycle form used by ``cdet_j``, written left to right."""
        last = self.cycle_through(j)
        rest = [c for c in self._cycles_by_min() if j not in c]
        return rest[::-1] + [last]

    def factors(self, cycles):
        """The ``(row, col)`` pairs read along ``cycles``, 1-based."""
        return [(t, self(t)) for c in cycles for t in c]

    def __repr__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


class MinorFamily:
    """All r-subsets of ``{1..n}``, or only those containing ``anchor``."""

    def __init__(self, n, r, anchor=None):
        if not 0 <= r <= n:
            raise ShapeError(f"minor order {r} outside 0..{n}")
        if anchor is not None and not 1 <= anchor <= n:
            raise ShapeError(f"anchor {anchor} outside 1..{n}")
        self.n = n
        self.r = r
        self.anchor = anchor

    def __iter__(self):
        return IndexSet.all_of_size(self.n, self.r, self.anchor)

    def __len__(self):
        if self.anchor is None:
            return comb(self.n, self.r)
        return comb(self.n - 1, self.r - 1) if self.r else 0


def check_cap(n):
    if n > settings.cap:
        raise SizeCapExceeded(f"order {n} exceeds the determinant cap {settings.cap}")


@lru_cache(maxsize=None)
def _terms(n, anchor, kind):
    """Signed factor lists for rdet/cdet of order n; indices 0-based."""
    out = []
    for p in permutations(range(1, n + 1)):
        sigma = CyclePermutation(p)
        if kind == "row":
            cycles = sigma.left_ordered(anchor)
        else:
            cycles = sigma.right_ordered(anchor)
        pairs = tuple((a - 1, b - 1) for a, b in sigma.factors(cycles))
        out.append((sigma.sign, pairs))
    return tuple(out)


def _expand(data, terms):
    w = x = y = z = 0
    for sign, pairs in terms:
        a, b = pairs[0]
        q = data[a][b]
        if not q:
            continue
        pw, px, py, pz = q.w, q.x, q.y, q.z
        dead = False
        for a, b in pairs[1:]:
            q = data[a][b]
            if not q:
                dead = True
                break
            qw, qx, qy, qz = q.w, q.x, q.y, q.z
            pw, px, py, pz = (pw * qw - px * qx - py * qy - pz * qz,
                              pw * qx + px * qw + py * qz - pz * qy,
                              pw * qy - px * qz + py * qw + pz * qx,
                              pw * qz + px * qy - py * qx + pz * qw)
        if dead:
            continue
        if sign > 0:
            w += pw; x += px; y += py; z += pz
        else:
            w -= pw; x -= px; y -= py; z -= pz
    return Quaternion(w, x, y, z)


def _square(A, what):
    if not A.is_square():
        raise ShapeError(f"{what} needs a square matrix, got {A.rows}x{A.cols}")
    check_cap(A.rows)


def rdet(A, i):
    """The ``i``-th row determinant (1-based ``i``)."""
    _square(A, "rdet")
    n = A.rows
    if n == 0:
        return ONE
    if not 1 <= i <= n:
        raise ShapeError(f"row {i} outside 1..{n}")
    return _expand(A._data, _terms(n, i, "row"))


def cdet(A, j):
    """The ``j``-th column determinant (1-based ``j``)."""
    _square(A, "cdet")
    n = A.rows
    if n == 0:
        return ONE
    if not 1 <= j <= n:
        raise ShapeError(f"column {j} outside 1..{n}")
    return _expand(A._data, _terms(n, j, "col"))


def hdet(A):
    """Determinant of a Hermitian matrix, as an exact rational.

    With verification mode on, all row and column determinants are computed
    and must coincide and be real.
    """
    _square(A, "hdet")
    if A != adjoint(A):
        raise NotHermitian("hdet needs a Hermitian matrix")
    n = A.rows
    if n == 0:
        return ONE.w
    d = rdet(A, 1)
    if settings.verify:
        values = [rdet(A, t) for t in range(1, n + 1)] + [cdet(A, t) for t in range(1, n + 1)]
        if any(v != d for v in values) or not d.is_real():
            raise InternalInconsistency(f"Hermitian determinants disagree: {values}")
    elif not d.is_real():
        raise InternalInconsistency(f"Hermitian row determinant is not real: {d}")
    return d.w


def minor_sum(M, r):
    """Sum of all principal minors of order ``r`` of a Hermitian ``M``."""
    if not M.is_square():
        raise ShapeError("minor_sum needs a square matrix")
    if M != adjoint(M):
        raise NotHermitian("minor_sum needs a Hermitian matrix")
    n = M.rows
    if r == 0:
        return ONE.w
    check_cap(r)
    total = ZERO.w
    for beta in MinorFamily(n, r):
        total += _principal_value(M, beta.members)
    return total


def _principal_value(M, members):
    # Hermitian principal minor; rdet_1 is real there
    sub = [[M._data[a - 1][b - 1] for b in members] for a in members]
    if len(members) == 0:
        return ONE.w
    d = _expand(sub, _terms(len(members), 1, "row"))
    if settings.verify and not d.is_real():
        raise InternalInconsistency("principal minor of a Hermitian matrix is not real")
    return d.w


def _anchored(M, anchor, b, r, kind):
    if not M.is_square():
        raise ShapeError("anchored sums need a square matrix")
    n = M.rows
    if isinstance(b, QMatrix):
        b = [x for row in b for x in row]
    b = [Quaternion.coerce(x) for x in b]
    if len(b) != n:
        raise ShapeError(f"vector length {len(b)} does not match order {n}")
    if not 1 <= anchor <= n:
        raise ShapeError(f"anchor {anchor} outside 1..{n}")
    if not 1 <= r <= n:
        raise ShapeError(f"minor order {r} outside 1..{n}")
    check_cap(r)
    data = M._data
    total = ZERO
    for beta in MinorFamily(n, r, anchor):
        idx = beta.members
        pos = beta.position(anchor)
        if kind == "col":
            sub = [[b[a - 1] if c == anchor else data[a - 1][c - 1] for c in idx] for a in idx]
        else:
            sub = [[b[c - 1] if a == anchor else data[a - 1][c - 1] for c in idx] for a in idx]
        total = total + _expand(sub, _terms(r, pos, kind))
    return total


def anchored_cdet_sum(M, i, b, r):
    """Sum over r-sets containing ``i`` of ``cdet_i`` of the principal
    submatrix of ``M`` whose column ``i`` is replaced by ``b``."""
    return _anchored(M, i, b, r, "col")


def anchored_rdet_sum(M, j, b, r):
    """Row mirror of :func:`anchored_cdet_sum`: row ``j`` replaced by ``b``."""
    return _anchored(M, j, b, r, "row")


def det_rank(A):
    """Largest order of a nonzero principal minor of the Gram matrix of ``A``.

    The smaller of ``A*A`` and ``AA*`` is used; both have the same rank.
    """
    m, n = A.shape
    if m == 0 or n == 0:
        return 0
    G = mat_mul(adjoint(A), A) if n <= m else mat_mul(A, adjoint(A))
    size = G.rows
    check_cap(size)
    for r in range(size, 0, -1):
        for c in combinations(range(1, size + 1), r):
            if _principal_value(G, c):
                return r
    return 0


def matrix_index(A, rank=None):
    """Smallest ``k >= 0`` with ``rank(A^(k+1)) == rank(A^k)``.

    ``rank`` defaults to :func:`det_rank`; the oracle passes its own.
    """
    if not A.is_square():
        raise ShapeError("index needs a square matrix")
    rank = rank or det_rank
    n = A.rows
    prev = n
    P = A
    for k in range(n + 1):
        cur = rank(P)
        if cur == prev:
            return k
        prev = cur
        P = mat_mul(P, A)
    raise InternalInconsistency("rank sequence of powers failed to stabilise")


def power_rank(A, k):
    return det_rank(mat_pow(A, k))
