"""Exact scalar fields: arbitrary-precision rationals and prime fields Z/p.

Scalars are plain values supporting +, -, *, /, unary -, ==, and truthiness
(zero is falsy).  Rational scalars are mpq/Fraction; prime-field scalars are
PrimeFieldElement.  A field object is attached to every matrix and algebra and
mismatches raise FieldMismatchError.
"""

from __future__ import annotations

from ._kernels import mpq, rational


class FieldMismatchError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    # deterministic Miller-Rabin, valid far beyond any modulus we will see
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatchError("mixed moduli %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError("division by zero in Z/%d" % self.p)
        return PrimeFieldElement(self.value * pow(other.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, n):
        return PrimeFieldElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%d (mod %d)" % (self.value, self.p)


class RationalField:
    """The field Q with mpq/Fraction scalars."""

    name = "rational"

    def zero(self):
        return rational(0)

    def one(self):
        return rational(1)

    def from_int(self, n: int):
        return rational(n)

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return rational(int(num), int(den))
        return rational(int(text))

    def format(self, x) -> str:
        return str(x)

    def contains(self, x) -> bool:
        return isinstance(x, type(mpq(0))) or type(x).__name__ in ("mpq", "Fraction")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field Z/p for p prime."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.name = "prime %d" % p

    def zero(self):
        return PrimeFieldElement(0, self.p)

    def one(self):
        return PrimeFieldElement(1, self.p)

    def from_int(self, n: int):
        return PrimeFieldElement(n, self.p)

    def parse(self, text: str):
        return PrimeFieldElement(int(text.strip()), self.p)

    def format(self, x) -> str:
        return str(x.value)

    def contains(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.p == self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def field_from_string(text: str):
    text = text.strip()
    if text == "rational":
        return QQ
    if text.startswith("prime"):
        return PrimeField(int(text.split()[1]))
    raise ValueError("unknown field declaration %r" % text)


def check_same_field(f1, f2):
    if f1 != f2:
        raise FieldMismatchError("field mismatch: %r vs %r" % (f1, f2))
