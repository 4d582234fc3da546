"""Dense quaternion matrices.

Entries are stored row-major in nested tuples. ``A[i, j]`` is 0-based, as
usual in Python; the functions that mirror the determinantal notation
(:func:`replace`, :func:`principal_submatrix`, :class:`IndexSet`) take
1-based indices.
"""

import json
from itertools import combinations

from .errors import ParseError, ShapeError
from .exactq import ONE, ZERO, Quaternion, q_conj, q_mul

__all__ = [
    "QMatrix",
    "IndexSet",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "adjoint",
    "mat_pow",
    "replace",
    "principal_submatrix",
    "hstack",
    "vstack",
    "identity",
    "zeros",
    "parse_matrix",
    "emit_matrix",
]


class QMatrix:
    """An immutable ``rows x cols`` matrix of :class:`Quaternion` entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, rows=None, cols=None):
        data = [list(r) for r in data]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows:
            raise ShapeError(f"expected {rows} rows, got {len(data)}")
        out = []
        for r in data:
            if len(r) != cols:
                raise ShapeError(f"ragged row: expected {cols} entries, got {len(r)}")
            out.append(tuple(Quaternion.coerce(x) for x in r))
        self.rows = rows
        self.cols = cols
        self._data = tuple(out)

    @classmethod
    def _wrap(cls, rows, cols, data):
        # data: tuple of tuples of Quaternion, trusted
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def from_function(cls, rows, cols, f):
        """Build from ``f(i, j)`` with 0-based indices."""
        return cls._wrap(rows, cols, tuple(
            tuple(Quaternion.coerce(f(i, j)) for j in range(cols)) for i in range(rows)))

    # -- access ---------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i):
        """Row ``i`` (0-based) as a tuple."""
        return self._data[i]

    def col(self, j):
        """Column ``j`` (0-based) as a tuple."""
        return tuple(r[j] for r in self._data)

    def to_lists(self):
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    # -- algebra ----------------------------------------------------------

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return QMatrix._wrap(self.rows, self.cols,
                             tuple(tuple(-x for x in r) for r in self._data))

    def scale(self, s):
        """Multiply every entry by a real scalar ``s``."""
        return QMatrix._wrap(self.rows, self.cols,
                             tuple(tuple(x * s for x in r) for r in self._data))

    def left_scale(self, q):
        return QMatrix._wrap(self.rows, self.cols,
                             tuple(tuple(q_mul(q, x) for x in r) for r in self._data))

    def right_scale(self, q):
        return QMatrix._wrap(self.rows, self.cols,
                             tuple(tuple(q_mul(x, q) for x in r) for r in self._data))

    @property
    def H(self):
        return adjoint(self)

    def is_hermitian(self):
        return self.rows == self.cols and self == adjoint(self)

    def is_zero(self):
        return not any(x for r in self._data for x in r)

    def is_complex(self):
        return all(x.is_complex() for r in self._data for x in r)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"QMatrix({[[str(x) for x in r] for r in self._data]!r})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._data]
        if not cells or not cells[0]:
            return f"[{self.rows}x{self.cols} empty]"
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


class IndexSet:
    """A strictly increasing subset of ``{1..n}``."""

    __slots__ = ("n", "members")

    def __init__(self, n, members):
        members = tuple(members)
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ShapeError(f"index set must be strictly increasing: {members}")
        if members and (members[0] < 1 or members[-1] > n):
            raise ShapeError(f"index set {members} out of range 1..{n}")
        self.n = n
        self.members = members

    @classmethod
    def full(cls, n):
        return cls(n, range(1, n + 1))

    @classmethod
    def all_of_size(cls, n, r, anchor=None):
        """Every r-subset of {1..n}, optionally only those containing ``anchor``."""
        for c in combinations(range(1, n + 1), r):
            if anchor is None or anchor in c:
                yield cls(n, c)

    def position(self, index):
        """1-based position of ``index`` inside the set."""
        return self.members.index(index) + 1

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, index):
        return index in self.members

    def __eq__(self, other):
        return isinstance(other, IndexSet) and (self.n, self.members) == (other.n, other.members)

    def __hash__(self):
        return hash((self.n, self.members))

    def __repr__(self):
        return f"IndexSet({self.n}, {list(self.members)})"


def identity(n):
    return QMatrix._wrap(n, n, tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))


def zeros(rows, cols):
    return QMatrix._wrap(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))


def mat_mul(A, B):
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    bcols = tuple(zip(*B._data)) if B.rows else ((),) * B.cols
    out = []
    for arow in A._data:
        nz = [(t, a) for t, a in enumerate(arow) if a]
        row = []
        for bc in bcols:
            acc = ZERO
            for t, a in nz:
                b = bc[t]
                if b:
                    acc = acc + q_mul(a, b)
            row.append(acc)
        out.append(tuple(row))
    return QMatrix._wrap(A.rows, B.cols, tuple(out))


def _check_same(A, B, op):
    if A.shape != B.shape:
        raise ShapeError(f"cannot {op} {A.rows}x{A.cols} and {B.rows}x{B.cols}")


def mat_add(A, B):
    _check_same(A, B, "add")
    return QMatrix._wrap(A.rows, A.cols, tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A._data, B._data)))


def mat_sub(A, B):
    _check_same(A, B, "subtract")
    return QMatrix._wrap(A.rows, A.cols, tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(A._data, B._data)))


def adjoint(A):
    """Conjugate transpose ``A*``."""
    return QMatrix._wrap(A.cols, A.rows, tuple(
        tuple(q_conj(A._data[i][j]) for i in range(A.rows)) for j in range(A.cols)))


def mat_pow(A, k):
    if not A.is_square():
        raise ShapeError("matrix power needs a square matrix")
    if k < 0:
        raise ValueError("negative matrix power")
    result = identity(A.rows)
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def replace(A, axis, index, v):
    """Replace row or column ``index`` (1-based) of ``A`` by the entries of ``v``.

    ``axis`` is ``"row"`` or ``"column"``. ``v`` may be any sequence of
    quaternions, or a one-row / one-column QMatrix.
    """
    if isinstance(v, QMatrix):
        v = [x for r in v for x in r]
    v = [Quaternion.coerce(x) for x in v]
    if axis == "column":
        if not 1 <= index <= A.cols or len(v) != A.rows:
            raise ShapeError(f"bad column replacement {index} with length {len(v)}")
        j = index - 1
        return QMatrix._wrap(A.rows, A.cols, tuple(
            r[:j] + (v[i],) + r[j + 1:] for i, r in enumerate(A._data)))
    if axis == "row":
        if not 1 <= index <= A.rows or len(v) != A.cols:
            raise ShapeError(f"bad row replacement {index} with length {len(v)}")
        data = list(A._data)
        data[index - 1] = tuple(v)
        return QMatrix._wrap(A.rows, A.cols, tuple(data))
    raise ValueError(f"axis must be 'row' or 'column', not {axis!r}")


def principal_submatrix(A, rowsel, colsel=None):
    """The submatrix on rows ``rowsel`` and columns ``colsel`` (1-based sets)."""
    if colsel is None:
        colsel = rowsel
    rs = tuple(rowsel)
    cs = tuple(colsel)
    if any(not 1 <= i <= A.rows for i in rs) or any(not 1 <= j <= A.cols for j in cs):
        raise ShapeError(f"selection out of bounds for {A.rows}x{A.cols}")
    return QMatrix._wrap(len(rs), len(cs), tuple(
        tuple(A._data[i - 1][j - 1] for j in cs) for i in rs))


def hstack(*mats):
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ShapeError("hstack needs equal row counts")
    return QMatrix._wrap(rows, sum(m.cols for m in mats), tuple(
        sum((m._data[i] for m in mats), ()) for i in range(rows)))


def vstack(*mats):
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ShapeError("vstack needs equal column counts")
    return QMatrix._wrap(sum(m.rows for m in mats), cols,
                         sum((m._data for m in mats), ()))


# -- JSON ----------------------------------------------------------------

def matrix_to_obj(A):
    return {"rows": A.rows, "cols": A.cols,
            "data": [[x.to_strings() for x in r] for r in A._data]}


def emit_matrix(A):
    return json.dumps(matrix_to_obj(A))


def matrix_from_obj(obj):
    if not isinstance(obj, dict):
        raise ParseError("matrix must be a JSON object")
    for key in ("rows", "cols", "data"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise ParseError("rows and cols must be nonnegative integers")
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"expected {rows} rows of data", position="data")
    out = []
    for i, r in enumerate(data):
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"expected {cols} entries", position=f"data[{i}]")
        row = []
        for j, q in enumerate(r):
            try:
                row.append(Quaternion.from_strings(q))
            except ParseError as e:
                raise ParseError(str(e), position=f"data[{i}][{j}]") from None
        out.append(tuple(row))
    return QMatrix._wrap(rows, cols, tuple(out))


def parse_matrix(text):
    """Parse the matrix JSON format from ``str`` or UTF-8 ``bytes``."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError("input is not UTF-8", position=f"byte {e.start}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg}", position=f"line {e.lineno}, column {e.colno}") from None
    return matrix_from_obj(obj)
