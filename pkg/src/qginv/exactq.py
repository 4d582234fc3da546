"""Exact quaternions over arbitrary-precision rationals.

Rationals are ``gmpy2.mpq`` values: always in lowest terms with a positive
denominator, and an order of magnitude faster than ``fractions.Fraction``
for the factorial-size sums the determinant code performs.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

from .errors import DivisionByZero, ParseError

Rational = type(mpq(0))

__all__ = [
    "Rational",
    "Quaternion",
    "rational",
    "q_mul",
    "q_conj",
    "q_inv",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
]


def rational(value):
    """Coerce ``value`` (int, Fraction, mpq or a ``"p/q"`` string) to an exact rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, (Fraction, _RationalABC)):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return _parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def _parse_rational(text):
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"bad rational {text!r}") from None
    if q == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return mpq(p, q)


def format_rational(r):
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


class Quaternion:
    """``w + x i + y j + z k`` with exact rational components. Immutable."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, "w", rational(w))
        object.__setattr__(self, "x", rational(x))
        object.__setattr__(self, "y", rational(y))
        object.__setattr__(self, "z", rational(z))

    @classmethod
    def _raw(cls, w, x, y, z):
        # components already mpq; skips coercion on the hot path
        q = object.__new__(cls)
        object.__setattr__(q, "w", w)
        object.__setattr__(q, "x", x)
        object.__setattr__(q, "y", y)
        object.__setattr__(q, "z", z)
        return q

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def __delattr__(self, name):
        raise AttributeError("Quaternion is immutable")

    def __reduce__(self):
        return (Quaternion, (Fraction(int(self.w.numerator), int(self.w.denominator)),
                             Fraction(int(self.x.numerator), int(self.x.denominator)),
                             Fraction(int(self.y.numerator), int(self.y.denominator)),
                             Fraction(int(self.z.numerator), int(self.z.denominator))))

    # -- coercion --------------------------------------------------------

    @staticmethod
    def coerce(value):
        if isinstance(value, Quaternion):
            return value
        return Quaternion(value)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    # -- predicates ------------------------------------------------------

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def is_real(self):
        return not (self.x or self.y or self.z)

    def is_complex(self):
        """True when the j and k parts vanish (the copy of C inside H)."""
        return not (self.y or self.z)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            try:
                other = Quaternion(other)
            except TypeError:
                return NotImplemented
        return Quaternion._raw(self.w + other.w, self.x + other.x,
                               self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion._raw(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            try:
                other = Quaternion(other)
            except TypeError:
                return NotImplemented
        return Quaternion._raw(self.w - other.w, self.x - other.x,
                               self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return q_mul(self, other)
        try:
            s = rational(other)
        except TypeError:
            return NotImplemented
        return Quaternion._raw(self.w * s, self.x * s, self.y * s, self.z * s)

    def __rmul__(self, other):
        # real scalars are central, so the side does not matter
        try:
            s = rational(other)
        except TypeError:
            return NotImplemented
        return Quaternion._raw(s * self.w, s * self.x, s * self.y, s * self.z)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * q_inv(other)
        s = rational(other)
        if not s:
            raise DivisionByZero("division of a quaternion by zero")
        return Quaternion._raw(self.w / s, self.x / s, self.y / s, self.z / s)

    def conj(self):
        return q_conj(self)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inv(self):
        return q_inv(self)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.w == other.w and self.x == other.x
                    and self.y == other.y and self.z == other.z)
        try:
            other = rational(other)
        except TypeError:
            return NotImplemented
        return self.w == other and not (self.x or self.y or self.z)

    def __hash__(self):
        if self.is_real():
            return hash(self.w)
        return hash((self.w, self.x, self.y, self.z))

    # -- text -----------------------------------------------------------

    def to_strings(self):
        """The four-string encoding ``["w", "x", "y", "z"]``."""
        return [format_rational(c) for c in self.components()]

    @classmethod
    def from_strings(cls, parts):
        if not isinstance(parts, (list, tuple)) or len(parts) != 4:
            raise ParseError(f"a quaternion is a list of four rational strings, got {parts!r}")
        for p in parts:
            if not isinstance(p, (str, int)) or isinstance(p, bool):
                raise ParseError(f"quaternion component must be a string, got {p!r}")
        return cls(*(rational(str(p)) for p in parts))

    def __repr__(self):
        return f"Quaternion({', '.join(repr(format_rational(c)) for c in self.components())})"

    def __str__(self):
        terms = []
        for c, unit in zip(self.components(), ("", "i", "j", "k")):
            if not c:
                continue
            mag = format_rational(abs(c))
            if unit and mag == "1":
                mag = ""
            terms.append(("-" if c < 0 else "+", mag + unit))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def q_mul(p, q):
    """Hamilton product ``p q``. Order matters."""
    a1, b1, c1, d1 = p.w, p.x, p.y, p.z
    a2, b2, c2, d2 = q.w, q.x, q.y, q.z
    return Quaternion._raw(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def q_conj(q):
    return Quaternion._raw(q.w, -q.x, -q.y, -q.z)


def q_inv(q):
    n = q.norm2()
    if not n:
        raise DivisionByZero("zero quaternion has no inverse")
    return Quaternion._raw(q.w / n, -q.x / n, -q.y / n, -q.z / n)


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
