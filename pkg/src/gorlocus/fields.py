"""
The fields module.

Coefficient fields for exact computation. Elements of :class:`RationalField` are
:class:`fractions.Fraction` values; elements of :class:`PrimeField` are
:class:`ModInt` values. Both support the ordinary arithmetic operators so the
rest of the package can stay field agnostic.
"""

from fractions import Fraction
import re

from .helpers import is_prime


DEFAULT_PRIME = 32003

# Characteristic must avoid 2 and 3 and exceed every level in the catalog.
MIN_PRIME = 7

FIELD_RE = re.compile(r"^\s*(?:(?P<q>Q|QQ)|Fp:(?P<p>\d+)|Fp)\s*$", re.IGNORECASE)


class FieldError(ValueError):
    """Exception raised when a field descriptor is invalid."""

    pass


class ModInt(object):
    """
    Residue class modulo a prime.

    Args:
        value (int): Representative of the class.
        p (int): The prime modulus.
    """

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise FieldError(
                    "Cannot combine residues modulo {0} and {1}".format(self.p, other.p)
                )
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return (
                other.numerator * pow(other.denominator, self.p - 2, self.p)
            ) % self.p
        return NotImplemented

    def __add__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return value
        return ModInt(self.value + value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return value
        return ModInt(self.value - value, self.p)

    def __rsub__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return value
        return ModInt(value - self.value, self.p)

    def __mul__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return value
        return ModInt(self.value * value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return value
        if value == 0:
            raise ZeroDivisionError("Division by zero modulo {0}".format(self.p))
        return ModInt(self.value * pow(value, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return value
        return ModInt(value, self.p) / self

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if exponent < 0:
            inverse = ModInt(pow(self.value, -exponent, self.p), self.p)
            return ModInt(1, self.p) / inverse
        return ModInt(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        value = self._coerce(other)
        if value is NotImplemented:
            return False
        return self.value == value

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return "ModInt({0}, {1})".format(self.value, self.p)

    def __str__(self):
        return str(self.value)


class RationalField(object):
    """The field of rational numbers."""

    characteristic = 0
    name = "Q"

    def __call__(self, value):
        """Coerce `value` (int, Fraction or numeric string) into the field."""
        if isinstance(value, Fraction):
            return value
        if isinstance(value, ModInt):
            raise FieldError("Cannot lift a residue {0!r} to Q".format(value))
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def elements(self):
        raise FieldError("Q is infinite")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"

    def __str__(self):
        return self.name


class PrimeField(object):
    """
    The prime field F_p.

    Args:
        p (int, optional): A prime larger than 7. Defaults to ``32003``.

    Raises:
        FieldError: When `p` is not a prime larger than 7.
    """

    def __init__(self, p=DEFAULT_PRIME):
        if not isinstance(p, int) or p <= MIN_PRIME or not is_prime(p):
            raise FieldError(
                "Prime field characteristic must be a prime larger than {0}, "
                "not {1}".format(MIN_PRIME, p)
            )
        self.characteristic = p

    @property
    def name(self):
        return "Fp:{0}".format(self.characteristic)

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, ModInt):
            if value.p != p:
                raise FieldError(
                    "Residue modulo {0} does not belong to {1}".format(value.p, self)
                )
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldError(
                    "Denominator of {0} vanishes modulo {1}".format(value, p)
                )
            return ModInt(value.numerator, p) / value.denominator
        return ModInt(value, p)

    @property
    def zero(self):
        return ModInt(0, self.characteristic)

    @property
    def one(self):
        return ModInt(1, self.characteristic)

    def elements(self):
        """Iterate over every element of the field."""
        for value in range(self.characteristic):
            yield ModInt(value, self.characteristic)

    def __eq__(self, other):
        return (
            isinstance(other, PrimeField)
            and other.characteristic == self.characteristic
        )

    def __hash__(self):
        return hash(("Fp", self.characteristic))

    def __repr__(self):
        return "PrimeField({0})".format(self.characteristic)

    def __str__(self):
        return self.name


QQ = RationalField()


def parse_field(text):
    """
    Return the field named by `text`.

    Accepted forms are ``Q`` (or ``QQ``), ``Fp`` (uses the default prime) and
    ``Fp:<p>``.

    Args:
        text (str|RationalField|PrimeField): Field descriptor.

    Returns:
        RationalField|PrimeField

    Raises:
        FieldError: When `text` is not a valid descriptor.
    """
    if isinstance(text, (RationalField, PrimeField)):
        return text

    match = FIELD_RE.match(text or "")
    if not match:
        raise FieldError(
            'Field must be "Q" or "Fp:<prime>", not "{0}"'.format(text)
        )

    if match.group("q"):
        return QQ

    return PrimeField(int(match.group("p") or DEFAULT_PRIME))
