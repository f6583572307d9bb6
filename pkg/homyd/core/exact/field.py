"""
Exact scalar fields: the rationals and the prime fields GF(p).

Rationals are plain ``fractions.Fraction`` values. Prime-field elements are
``Residue`` values that always hold a reduced representative.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import isprime

from ..exceptions import FieldError

SCALAR_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


class Residue:
    """An element of GF(p), stored as its reduced representative."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise FieldError(
                    f"cannot mix GF({self.modulus}) and GF({other.modulus}) elements"
                )
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.modulus})")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * Residue(v, self.modulus).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v, self.modulus) * self.inverse()

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Residue]


class Field:
    """Common surface of the two supported scalar fields."""

    name: str = ""
    characteristic: int = 0

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, value) -> Scalar:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        """Read a scalar literal such as ``3``, ``-2/5``."""
        token = text.strip()
        if not SCALAR_PATTERN.match(token):
            raise FieldError(f"not a scalar literal: {text!r}")
        try:
            return self(Fraction(token))
        except ZeroDivisionError:
            raise FieldError(f"zero denominator in {text!r}") from None

    def format(self, value: Scalar) -> str:
        return str(self(value))

    def contains(self, value) -> bool:
        raise NotImplementedError

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class RationalField(Field):
    """The field of rational numbers, backed by ``Fraction``."""

    @property
    def name(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, Residue):
            raise FieldError(f"{value} lives in GF({value.modulus}), not Q")
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot read {value!r} as a rational")

    def contains(self, value) -> bool:
        return isinstance(value, Fraction)

    def format(self, value) -> str:
        return str(self(value))


@dataclass(frozen=True)
class PrimeField(Field):
    """GF(p) for a prime modulus p."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or not isprime(self.modulus):
            raise FieldError(f"modulus {self.modulus!r} is not prime")

    @property
    def name(self) -> str:
        return f"GF({self.modulus})"

    @property
    def characteristic(self) -> int:
        return self.modulus

    def __call__(self, value) -> Residue:
        if isinstance(value, Residue):
            if value.modulus != self.modulus:
                raise FieldError(f"{value} lives in GF({value.modulus}), not {self.name}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Residue(value, self.modulus)
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise FieldError(
                    f"{value.denominator} is not invertible in {self.name}"
                )
            return Residue(value.numerator, self.modulus) / value.denominator
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot read {value!r} as an element of {self.name}")

    def contains(self, value) -> bool:
        return isinstance(value, Residue) and value.modulus == self.modulus


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(text: str) -> Field:
    """Resolve ``Q`` / ``QQ`` / ``GF(7)`` / ``GF 7`` / ``7`` to a field."""
    token = text.strip().upper().replace(" ", "")
    if token in ("Q", "QQ"):
        return QQ
    match = re.fullmatch(r"(?:GF\(?)?(\d+)\)?", token)
    if not match:
        raise FieldError(f"unknown field {text!r}")
    return GF(int(match.group(1)))


def parse_scalar(text: str, field: Field) -> Scalar:
    return field.parse(text)


def format_scalar(value: Scalar, field: Field) -> str:
    return field.format(value)
