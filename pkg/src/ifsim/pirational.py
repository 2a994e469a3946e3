"""Exact angles and durations as rational multiples of pi.

Compiled schedules carry gate angles and evolution durations that are
rational multiples of pi, optionally divided by a coupling constant.
Keeping the rational part as an exact Fraction makes cost accounting an
identity instead of a float approximation, and lets schedule documents
round-trip bit-for-bit.  Floats convert exactly (every float is rational),
so dividing by a coupling stored as a float stays exact.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

_PI_PATTERN = re.compile(r"^([+-]?\d*)pi(?:/(\d+))?$")


@dataclass(frozen=True)
class PiRational:
    """The real scalar ``multiple * pi`` with ``multiple`` kept exact."""

    multiple: Fraction

    @classmethod
    def ratio(cls, numerator, denominator=1) -> "PiRational":
        return cls(Fraction(numerator, denominator))

    # Scalar multiplication/division stays in the type; pi*pi has no home here.
    def __mul__(self, other):
        if isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.multiple * Fraction(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiRational):
            return self.multiple / other.multiple
        return PiRational(self.multiple / Fraction(other))

    def __add__(self, other):
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.multiple + other.multiple)

    def __sub__(self, other):
        if not isinstance(other, PiRational):
            return NotImplemented
        return PiRational(self.multiple - other.multiple)

    def __neg__(self):
        return PiRational(-self.multiple)

    def __abs__(self):
        return PiRational(abs(self.multiple))

    def __bool__(self):
        return self.multiple != 0

    def __float__(self):
        return float(self.multiple) * math.pi

    def __str__(self):
        n, d = self.multiple.numerator, self.multiple.denominator
        head = {1: "", -1: "-"}.get(n, str(n))
        return f"{head}pi" if d == 1 else f"{head}pi/{d}"

    @classmethod
    def parse(cls, text: str) -> "PiRational":
        m = _PI_PATTERN.match(text.strip())
        if m is None:
            raise ValueError(f"not a rational multiple of pi: {text!r}")
        num_part, den_part = m.groups()
        num = {"": 1, "+": 1, "-": -1}.get(num_part)
        if num is None:
            num = int(num_part)
        return cls(Fraction(num, int(den_part) if den_part else 1))


PI = PiRational(Fraction(1))


def parse_scalar(value) -> "PiRational | float":
    """Read a number from a document field.

    Accepts plain numbers, decimal strings ("0.5"), hex-float strings
    ("0x1.8p-1") and pi strings ("pi/16", "-3pi/8").
    """
    if isinstance(value, bool):
        raise ValueError(f"not a number: {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        text = value.strip()
        if "pi" in text:
            return PiRational.parse(text)
        if text.lower().lstrip("+-").startswith("0x"):
            return float.fromhex(text)
        try:
            return float(text)
        except ValueError:
            raise ValueError(f"not a number: {value!r}") from None
    raise ValueError(f"not a number: {value!r}")


def scalar_to_doc(value: "PiRational | float") -> str:
    """Render a scalar so that parse_scalar recovers it bit-for-bit."""
    if isinstance(value, PiRational):
        return str(value)
    return float(value).hex()


def as_float(value: "PiRational | float") -> float:
    return float(value)
