"""Exact arithmetic in the rational function field Q(q).

Every Hecke-algebra computation in this package happens over the field
k = Q(q) with q a formal parameter ("generic q").  Floating point is never
used.  A polynomial is stored as a tuple of ``Fraction`` coefficients,
lowest degree first, with no trailing zeros; the zero polynomial is the
empty tuple.  A :class:`Scalar` is a reduced fraction num/den of two such
polynomials, normalised so that

* the denominator is monic and nonzero,
* gcd(num, den) = 1,
* zero is represented as 0/1.

Two scalars are equal iff their representations are equal, so ``==`` and
hashing are structural.

>>> str(Q * Q - ONE)
'q^2-1'
>>> str((Q * Q - ONE) / (Q - ONE))
'q+1'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

__all__ = [
    "Poly",
    "Scalar",
    "ZERO",
    "ONE",
    "Q",
    "scal",
    "poly_gcd",
    "poly_divmod",
]

Poly = tuple  # tuple[Fraction, ...], lowest degree first, no trailing zeros

_F0 = Fraction(0)
_F1 = Fraction(1)

_P_ZERO: Poly = ()
_P_ONE: Poly = (_F1,)


def _trim(coeffs: list) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_from_fraction(c) -> Poly:
    c = Fraction(c)
    return (c,) if c else ()


def poly_add(a: Poly, b: Poly) -> Poly:
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return _P_ZERO
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def poly_scale(a: Poly, c: Fraction) -> Poly:
    if not c:
        return _P_ZERO
    return tuple(x * c for x in a)


def poly_divmod(a: Poly, b: Poly) -> tuple:
    """Quotient and remainder of polynomial division; ``b`` must be nonzero."""
    if not b:
        raise ValueError("zero divisor")
    if len(a) < len(b):
        return _P_ZERO, a
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [_F0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db] / lead
        if c:
            quot[k] = c
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
    return _trim(quot), _trim(rem)


def poly_div_exact(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def poly_monic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    inv = 1 / a[-1]
    return tuple(c * inv for c in a)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm (remainders kept monic)."""
    while b:
        a, b = b, poly_monic(poly_divmod(a, b)[1])
    return poly_monic(a)


def poly_eval(a: Poly, point: Fraction) -> Fraction:
    acc = _F0
    for c in reversed(a):
        acc = acc * point + c
    return acc


def _fmt_coeff(c: Fraction) -> str:
    return str(c)


def poly_wire(a: Poly) -> str:
    """Unambiguous machine form: '+'-joined 'c*q^k' terms, highest degree first."""
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        if a[k]:
            terms.append(f"{a[k]}*q^{k}")
    return "+".join(terms)


def poly_parse_wire(s: str) -> Poly:
    s = s.strip()
    if s == "0":
        return _P_ZERO
    coeffs: dict = {}
    for term in s.split("+"):
        c, _, k = term.partition("*q^")
        if not k:
            raise ValueError(f"bad polynomial term {term!r}")
        coeffs[int(k)] = coeffs.get(int(k), _F0) + Fraction(c)
    if not coeffs:
        return _P_ZERO
    out = [_F0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return _trim(out)


def poly_human(a: Poly) -> str:
    """Readable form such as 'q^2-q+3' or '1/2*q'."""
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_coeff(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{_fmt_coeff(mag)}*{var}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts)


class Scalar:
    """An element of Q(q), always kept in reduced normal form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=1):
        if isinstance(num, Scalar) or isinstance(den, Scalar):
            raise TypeError("use arithmetic operators to combine scalars")
        n = _trim(list(num)) if isinstance(num, tuple) else poly_from_fraction(num)
        d = _trim(list(den)) if isinstance(den, tuple) else poly_from_fraction(den)
        n, d = _reduce(n, d)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _new(cls, num: Poly, den: Poly) -> "Scalar":
        """Internal constructor for already-normalised data."""
        self = object.__new__(cls)
        self.num = num
        self.den = den
        self._hash = None
        return self

    # -- predicates ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == _P_ONE and self.den == _P_ONE

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == _P_ONE

    def as_fraction(self) -> Fraction:
        """The value of a constant scalar, as a Fraction."""
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.num[0] if self.num else _F0

    def as_integer(self):
        """The value of an integer-constant scalar, or None."""
        if not self.is_constant():
            return None
        c = self.as_fraction()
        return int(c) if c.denominator == 1 else None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == _P_ONE and other.den == _P_ONE:
            return Scalar._new(poly_add(self.num, other.num), _P_ONE)
        if self.den == other.den:
            return _make(poly_add(self.num, other.num), self.den)
        num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return _make(num, poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._new(poly_neg(self.num), self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == _P_ONE and other.den == _P_ONE:
            return Scalar._new(poly_mul(self.num, other.num), _P_ONE)
        # cross-cancel before multiplying to keep degrees small
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return Scalar._new(poly_mul(n1, n2), poly_mul(d1, d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ValueError("zero divisor")
        inv_num, inv_den = other.den, other.num
        lead = inv_den[-1]
        if lead != 1:
            inv = 1 / lead
            inv_num = poly_scale(inv_num, inv)
            inv_den = poly_scale(inv_den, inv)
        return self * Scalar._new(inv_num, inv_den)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- comparisons / hashing ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation and formatting ------------------------------------

    def specialize(self, point) -> Fraction:
        """Evaluate at a rational point; raises on a pole of the reduced form."""
        point = Fraction(point)
        d = poly_eval(self.den, point)
        if d == 0:
            raise ValueError(f"pole at q = {point}")
        return poly_eval(self.num, point) / d

    def degree_pair(self) -> tuple:
        return (len(self.num) - 1, len(self.den) - 1)

    def __str__(self):
        if self.den == _P_ONE:
            return poly_human(self.num)
        return f"({poly_human(self.num)})/({poly_human(self.den)})"

    def __repr__(self):
        return f"Scalar({self})"

    def to_wire(self) -> str:
        if self.den == _P_ONE:
            return poly_wire(self.num)
        return f"{poly_wire(self.num)} / {poly_wire(self.den)}"

    @classmethod
    def from_wire(cls, s: str) -> "Scalar":
        num, sep, den = s.partition(" / ")
        n = poly_parse_wire(num)
        d = poly_parse_wire(den) if sep else _P_ONE
        return _make(n, d)


def _cancel(a: Poly, b: Poly) -> tuple:
    g = poly_gcd(a, b)
    if len(g) > 1:
        return poly_div_exact(a, g), poly_div_exact(b, g)
    return a, b


def _reduce(num: Poly, den: Poly) -> tuple:
    if not den:
        raise ValueError("zero divisor")
    if not num:
        return _P_ZERO, _P_ONE
    if den != _P_ONE:
        num, den = _cancel(num, den)
        lead = den[-1]
        if lead != 1:
            inv = 1 / lead
            num = poly_scale(num, inv)
            den = poly_scale(den, inv)
    return num, den


def _make(num: Poly, den: Poly) -> Scalar:
    num, den = _reduce(num, den)
    return Scalar._new(num, den)


ZERO = Scalar._new(_P_ZERO, _P_ONE)
ONE = Scalar._new(_P_ONE, _P_ONE)
Q = Scalar._new((_F0, _F1), _P_ONE)

_SMALL = {0: ZERO, 1: ONE, -1: Scalar._new((Fraction(-1),), _P_ONE)}


def scal(x) -> Scalar:
    """Coerce an int or Fraction (or Scalar) to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int) and x in _SMALL:
        return _SMALL[x]
    if isinstance(x, (int, Fraction)):
        return Scalar._new(poly_from_fraction(x), _P_ONE)
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


def _coerce(x) -> Union[Scalar, type(NotImplemented)]:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return scal(x)
    return NotImplemented


def q_power(k: int) -> Scalar:
    """q**k, allowing negative k."""
    return Q**k
