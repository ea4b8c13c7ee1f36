"""Nonnegative reals carried in log-domain, for magnitudes far beyond
double range (interval endpoints near exp(5.7e7) appear in the largest
classification runs)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import mpmath

# 40 significant digits: double-double-class precision, so a log magnitude
# near 1e8 still leaves > 30 accurate digits for downstream ratios.
_DPS = 40

Number = Union[int, float, "LogReal"]


def _mp(x) -> mpmath.mpf:
    with mpmath.workdps(_DPS):
        return mpmath.mpf(x)


@dataclass(frozen=True)
class LogReal:
    """A nonnegative real as (sign, natural log of magnitude).

    sign is 0 for exact zero and 1 otherwise; log_magnitude is an
    mpmath float and is meaningless when sign is 0.  Multiply, divide,
    power, and add are supported without overflow for magnitudes up to
    about exp(1e8).
    """

    sign: int
    log_magnitude: mpmath.mpf

    @staticmethod
    def zero() -> "LogReal":
        return LogReal(0, _mp(0))

    @staticmethod
    def from_log(log_magnitude) -> "LogReal":
        return LogReal(1, _mp(log_magnitude))

    @staticmethod
    def from_number(x: Number) -> "LogReal":
        if isinstance(x, LogReal):
            return x
        if x < 0:
            raise ValueError(f"LogReal holds nonnegative values, got {x}")
        if x == 0:
            return LogReal.zero()
        with mpmath.workdps(_DPS):
            return LogReal(1, mpmath.log(mpmath.mpf(x)))

    def __mul__(self, other: Number) -> "LogReal":
        other = LogReal.from_number(other)
        if self.sign == 0 or other.sign == 0:
            return LogReal.zero()
        with mpmath.workdps(_DPS):
            return LogReal(1, self.log_magnitude + other.log_magnitude)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "LogReal":
        other = LogReal.from_number(other)
        if other.sign == 0:
            raise ZeroDivisionError("LogReal division by zero")
        if self.sign == 0:
            return LogReal.zero()
        with mpmath.workdps(_DPS):
            return LogReal(1, self.log_magnitude - other.log_magnitude)

    def __pow__(self, exponent: float) -> "LogReal":
        if self.sign == 0:
            if exponent <= 0:
                raise ZeroDivisionError("0 ** nonpositive exponent")
            return LogReal.zero()
        with mpmath.workdps(_DPS):
            return LogReal(1, self.log_magnitude * _mp(exponent))

    def __add__(self, other: Number) -> "LogReal":
        other = LogReal.from_number(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        hi, lo = self.log_magnitude, other.log_magnitude
        if lo > hi:
            hi, lo = lo, hi
        with mpmath.workdps(_DPS):
            return LogReal(1, hi + mpmath.log1p(mpmath.exp(lo - hi)))

    __radd__ = __add__

    def _key(self):
        return (self.sign, self.log_magnitude if self.sign else _mp(0))

    def __lt__(self, other: Number) -> bool:
        other = LogReal.from_number(other)
        if self.sign != other.sign:
            return self.sign < other.sign
        return self.sign == 1 and self.log_magnitude < other.log_magnitude

    def __le__(self, other: Number) -> bool:
        other = LogReal.from_number(other)
        return self == other or self < other

    def __eq__(self, other) -> bool:
        if not isinstance(other, (int, float, LogReal)):
            return NotImplemented
        other = LogReal.from_number(other)
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def to_float(self) -> float:
        """Nearest double; math.inf when out of range."""
        if self.sign == 0:
            return 0.0
        if self.log_magnitude > 709.0:
            return math.inf
        return float(mpmath.exp(self.log_magnitude))

    __float__ = to_float

    def sci(self, sig: int = 6) -> str:
        """Scientific-notation string, exact even for huge magnitudes."""
        if self.sign == 0:
            return "0"
        with mpmath.workdps(_DPS):
            log10 = self.log_magnitude / mpmath.log(10)
            exp10 = int(mpmath.floor(log10))
            mantissa = float(mpmath.power(10, log10 - exp10))
        if round(mantissa, sig - 1) >= 10.0:
            mantissa /= 10.0
            exp10 += 1
        return f"{mantissa:.{sig - 1}f}e+{exp10}" if exp10 >= 0 else f"{mantissa:.{sig - 1}f}e{exp10}"

    def __repr__(self) -> str:
        if self.sign == 0:
            return "LogReal(0)"
        return f"LogReal({self.sci()})"
