"""Coefficient fields: the rationals and prime fields.

Scalars are plain Python values: :class:`fractions.Fraction` over the
rationals and ``int`` residues in ``[0, p)`` over a prime field.  The field
object carries the arithmetic so that polynomial code never needs to know
which one it is working over.
"""

from fractions import Fraction


class FieldError(ValueError):
    pass


class Field:
    characteristic = 0

    def __call__(self, value):
        raise NotImplementedError


class Rationals(Field):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, tuple):
            return Fraction(*value)
        raise FieldError(f"cannot coerce {value!r} into Q")

    def from_ratio(self, num, den):
        if den == 0:
            raise FieldError("zero denominator")
        return Fraction(num, den)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def div(self, x, y):
        if not y:
            raise ZeroDivisionError("division by zero")
        return x / y

    def to_text(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def tag(self):
        return "Q"


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField(Field):
    zero = 0
    one = 1

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"{p!r} is not a prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, Fraction):
            return self.from_ratio(value.numerator, value.denominator)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, tuple):
            return self.from_ratio(*value)
        raise FieldError(f"cannot coerce {value!r} into F_{self.p}")

    def from_ratio(self, num, den):
        if den % self.p == 0:
            raise FieldError(f"denominator {den} vanishes in F_{self.p}")
        return num * pow(den, -1, self.p) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return x * y % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def div(self, x, y):
        return x * self.inv(y) % self.p

    def to_text(self, x):
        # print the symmetric representative so that -1 reads as -1
        return str(x - self.p if x > self.p // 2 else x)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def tag(self):
        return f"Fp={self.p}"


QQ = Rationals()

def GF(p):
    return PrimeField(p)


def parse_field(text):
    """Parse a field tag: ``Q`` or ``Fp=<prime>``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp="):
        try:
            p = int(text[3:])
        except ValueError:
            raise FieldError(f"bad prime in field tag {text!r}") from None
        return GF(p)
    if text.startswith("F") and text[1:].isdigit():
        return GF(int(text[1:]))
    raise FieldError(f"unknown field tag {text!r}")
