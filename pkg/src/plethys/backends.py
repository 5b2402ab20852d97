"""Coefficient backends.

Three arithmetic domains are supported:

``RATIONAL``
    exact :class:`fractions.Fraction` values (real rationals only).
``COMPLEX64``
    machine complex numbers (Python ``complex``; two IEEE doubles).
``bigcomplex(bits)``
    :class:`mpmath.mpc` values at a fixed binary precision of at least 64 bits.

Scalars are plain Python / mpmath objects; the backend tag lives on the
containers (:class:`~plethys.series.TruncatedSeries` and friends), and every
binary operation checks that the tags agree. There is no implicit promotion.
"""

from __future__ import annotations

import contextlib
import numbers
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import libmp

from .errors import BackendError

_KINDS = ("rational", "complex64", "bigcomplex")


@dataclass(frozen=True)
class Backend:
    kind: str
    bits: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise BackendError(f"unknown backend kind {self.kind!r}")
        if self.kind == "bigcomplex":
            if not isinstance(self.bits, int) or self.bits < 64:
                raise BackendError("bigcomplex precision_bits must be an integer >= 64")
        elif self.bits is not None:
            raise BackendError(f"{self.kind} backend takes no precision")

    def __str__(self):
        if self.kind == "bigcomplex":
            return f"bigcomplex({self.bits})"
        return self.kind

    @property
    def is_exact(self) -> bool:
        return self.kind == "rational"

    @property
    def is_float(self) -> bool:
        return not self.is_exact

    def context(self):
        """Context manager fixing the mpmath working precision (no-op otherwise)."""
        if self.kind == "bigcomplex":
            return mpmath.workprec(self.bits)
        return contextlib.nullcontext()

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, value):
        """Represent a Python/mpmath number in this backend.

        Used at construction boundaries only. Complex input is refused by
        RATIONAL; non-numeric strings are refused everywhere.
        """
        if self.kind == "rational":
            return _to_fraction(value)
        if self.kind == "complex64":
            return _to_complex(value)
        return _to_mpc(value, self.bits)

    def check(self, value) -> bool:
        """True if ``value`` already has this backend's native type."""
        if self.kind == "rational":
            return type(value) is Fraction
        if self.kind == "complex64":
            return type(value) is complex
        return isinstance(value, mpmath.mpc)


RATIONAL = Backend("rational")
COMPLEX64 = Backend("complex64")


def bigcomplex(bits: int = 256) -> Backend:
    return Backend("bigcomplex", bits)


def parse_backend(name: str, bits: int = 256) -> Backend:
    name = name.lower()
    if name == "rational":
        return RATIONAL
    if name in ("complex64", "complex"):
        return COMPLEX64
    if name == "bigcomplex":
        return bigcomplex(bits)
    raise BackendError(f"unknown backend {name!r}")


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise BackendError("bool is not a rational value")
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise BackendError(f"cannot parse {value!r} as a rational") from exc
    if isinstance(value, numbers.Complex) or isinstance(value, (mpmath.mpc, mpmath.mpf)):
        raise BackendError(f"{value!r} is not exactly representable in the rational backend")
    raise BackendError(f"unsupported rational value {value!r}")


def _to_complex(value) -> complex:
    if isinstance(value, Fraction):
        # float(Fraction) is correctly rounded
        return complex(float(value), 0.0)
    if isinstance(value, str):
        try:
            return complex(value.strip().replace(" ", ""))
        except ValueError:
            return complex(float(_to_fraction(value)), 0.0)
    if isinstance(value, (numbers.Number, mpmath.mpf, mpmath.mpc)):
        return complex(value)
    raise BackendError(f"unsupported complex value {value!r}")


def rational_to_mpf(q: Fraction, bits: int):
    """Round ``q`` to the nearest ``bits``-bit binary float."""
    return mpmath.mp.make_mpf(libmp.from_rational(q.numerator, q.denominator, bits, libmp.round_nearest))


def _to_mpc(value, bits: int):
    with mpmath.workprec(bits):
        if isinstance(value, Fraction):
            return mpmath.mpc(rational_to_mpf(value, bits))
        if isinstance(value, numbers.Rational) and not isinstance(value, bool):
            return mpmath.mpc(rational_to_mpf(Fraction(value), bits))
        if isinstance(value, str):
            text = value.strip().replace(" ", "")
            try:
                return mpmath.mpc(rational_to_mpf(Fraction(text), bits))
            except (ValueError, ZeroDivisionError):
                pass
            try:
                c = complex(text)
            except ValueError as exc:
                raise BackendError(f"cannot parse {value!r} as a complex number") from exc
            return mpmath.mpc(c)
        if isinstance(value, (numbers.Number, mpmath.mpf, mpmath.mpc)):
            # unary plus rounds to the working precision
            return +mpmath.mpc(value)
    raise BackendError(f"unsupported complex value {value!r}")

