"""Exact scalars: rationals (``Fraction``), residues modulo a prime, and the field context."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Union

from leibniz.errors import DivisionByZero, InputError, MixedFieldContext

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def is_prime(p: int) -> bool:
    """Trial division; moduli used here are small."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Prime-field residues
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Residue:
    """An element of F_p held as its representative in [0, p)."""

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: object) -> int | None:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise MixedFieldContext(f"cannot mix F_{self.p} with F_{other.p}")
            return other.value
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise MixedFieldContext(f"cannot mix F_{self.p} with a rational scalar")
        return None

    def inverse(self) -> Residue:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __add__(self, other: object) -> Residue:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other: object) -> Residue:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.p)

    def __rsub__(self, other: object) -> Residue:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.p)

    def __mul__(self, other: object) -> Residue:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Residue:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * Residue(v, self.p).inverse()

    def __rtruediv__(self, other: object) -> Residue:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v, self.p) * self.inverse()

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.p)

    def __pos__(self) -> Residue:
        return self

    def __eq__(self, other: object) -> bool:
        # ints never compare equal, which keeps __hash__ consistent
        if not isinstance(other, Residue):
            return NotImplemented
        return self.value == self._coerce(other)

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"Residue({self.value}, {self.p})"

    def __str__(self) -> str:
        return str(self.value)


Scalar = Union[Fraction, Residue]


# ---------------------------------------------------------------------------
# Field context
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    """The field every scalar of one problem lives in: Q when ``p`` is None, else F_p."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not is_prime(self.p):
            raise InputError(f"modulus {self.p} is not prime")

    @classmethod
    def rational(cls) -> FieldContext:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> FieldContext:
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def kind(self) -> Literal["rational", "prime"]:
        return "rational" if self.p is None else "prime"

    @property
    def label(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"

    @property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @property
    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, k: int) -> Scalar:
        if self.p is None:
            return Fraction(k)
        return Residue(k, self.p)

    def scalar(self, value: int | Fraction | Residue) -> Scalar:
        """Bring ``value`` into this field; integers are always accepted."""
        if isinstance(value, Residue):
            if self.p != value.p:
                raise MixedFieldContext(f"F_{value.p} scalar used in {self.label}")
            return value
        if isinstance(value, Fraction):
            if self.p is not None:
                raise MixedFieldContext(f"rational scalar used in {self.label}")
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return self.from_int(value)
        raise InputError(f"not an exact scalar: {value!r}")

    def owns(self, value: object) -> bool:
        if self.p is None:
            return isinstance(value, Fraction)
        return isinstance(value, Residue) and value.p == self.p

    def parse(self, text: str) -> Scalar:
        """Parse ``"k"`` or ``"a/b"``; in F_p a fraction means a times the inverse of b."""
        match = _SCALAR_RE.match(str(text))
        if match is None:
            raise InputError(f"not an exact scalar: {text!r}")
        num = int(match.group(1))
        den = int(match.group(2)) if match.group(2) is not None else 1
        if self.p is None:
            if den == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return Fraction(num, den)
        return Residue(num, self.p) / Residue(den, self.p)

    def format(self, value: Scalar) -> str:
        return str(self.scalar(value))

    def elements(self) -> Iterator[Residue]:
        if self.p is None:
            raise InputError("the rational field cannot be enumerated")
        for k in range(self.p):
            yield Residue(k, self.p)


RATIONALS = FieldContext.rational()


def scalar_arithmetic(
    a: Scalar,
    b: Scalar | None,
    op: Literal["add", "sub", "mul", "div", "neg", "inv", "eq"],
) -> Scalar | bool:
    """Dispatch one field operation by name, normalising division errors."""
    try:
        if op == "add":
            return a + b
        if op == "sub":
            return a - b
        if op == "mul":
            return a * b
        if op == "div":
            return a / b
        if op == "neg":
            return -a
        if op == "inv":
            if isinstance(a, Residue):
                return a.inverse()
            return 1 / a
        if op == "eq":
            return a == b
    except DivisionByZero:
        raise
    except ZeroDivisionError as exc:
        raise DivisionByZero(str(exc)) from exc
    raise InputError(f"unknown scalar operation {op!r}")
