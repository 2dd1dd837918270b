"""Exact scalar arithmetic over Q and over prime fields GF(p).

Rational scalars are plain ``fractions.Fraction`` objects; GF(p) scalars are
``GFScalar`` instances supporting the usual operators.  A ``Field`` descriptor
travels with every container (matrix, operad, algebra) so the scalar domain is
a runtime choice driven by input files, not a compile-time one.  No operation
ever rounds.
"""

from fractions import Fraction

from .errors import FormatError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class GFScalar:
    """An element of GF(p), stored as the canonical representative in [0, p)."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, GFScalar):
            if other.p != self.p:
                raise ValueError("mixed GF(p) characteristics: %d vs %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return GFScalar(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GFScalar(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GFScalar(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GFScalar(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GFScalar(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFScalar(self.p, self.v * pow(o.v, self.p - 2, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GFScalar(self.p, -self.v)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, GFScalar):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return "GF(%d):%d" % (self.p, self.v)


class Field:
    """Field descriptor: characteristic 0 (= Q) or an odd/even prime p (= GF(p))."""

    def __init__(self, char=0):
        if char != 0 and not _is_prime(char):
            raise ValueError("field characteristic must be 0 or prime, got %r" % (char,))
        self.char = char

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "Q" if self.char == 0 else "Fp:%d" % self.char

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else GFScalar(self.char, 0)

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else GFScalar(self.char, 1)

    def scalar(self, x):
        """Coerce an int, Fraction, GFScalar, or token string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.char == 0:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise ValueError("cannot coerce %r into Q" % (x,))
        if isinstance(x, GFScalar):
            if x.p != self.char:
                raise ValueError("wrong characteristic: %d vs %d" % (x.p, self.char))
            return x
        if isinstance(x, int):
            return GFScalar(self.char, x)
        raise ValueError("cannot coerce %r into GF(%d)" % (x, self.char))

    def parse(self, token):
        """Parse a scalar token: "n" or "n/d" over Q, an integer over GF(p)."""
        token = token.strip()
        try:
            if self.char == 0:
                return Fraction(token)
            return GFScalar(self.char, int(token))
        except (ValueError, ZeroDivisionError):
            raise FormatError("bad scalar token %r for field %r" % (token, self))

    def fmt(self, s):
        """Serialize a scalar: rationals as "p/q" (or "n"), GF(p) as the representative."""
        if self.char == 0:
            return str(s)
        return str(s.v)


QQ = Field(0)


def GF(p):
    return Field(p)


def field_from_name(name):
    """Decode a field header token: "Q" or "Fp:<p>"."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        try:
            return Field(int(name[3:]))
        except ValueError:
            pass
    raise FormatError("unknown field name %r (expected Q or Fp:<p>)" % (name,))
