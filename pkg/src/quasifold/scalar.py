"""Exact arithmetic in Q and in real quadratic fields Q(sqrt(k)).

A :class:`Scalar` is ``a + b*sqrt(k)`` with rational ``a`` and ``b``.  Signs
and comparisons are decided by rational comparisons only, so polytopes with
irrational coordinates can be processed without any floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from .errors import FieldMismatch, ParseError

__all__ = ["FieldSpec", "Scalar", "QQ", "parse_scalar", "render_scalar", "sign"]


def _is_squarefree(k: int) -> bool:
    if k < 0:
        return False
    d = 2
    while d * d <= k:
        if k % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ambient field Q(sqrt(radicand)).

    Radicands 0 and 1 both mean Q and are normalised to 0.
    """

    radicand: int = 0

    def __post_init__(self):
        k = self.radicand
        if isinstance(k, bool) or not isinstance(k, int):
            raise ParseError(f"radicand must be an integer, got {k!r}")
        if not _is_squarefree(k):
            raise ParseError(f"radicand {k} is not a non-negative square-free integer")
        if k == 1:
            object.__setattr__(self, "radicand", 0)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 0

    def __call__(self, a=0, b=0) -> "Scalar":
        return Scalar(a, b, self)

    def __str__(self):
        return "QQ" if self.is_rational else f"QQ(sqrt({self.radicand}))"


QQ = FieldSpec(0)
_ZERO = Fraction(0)

Number = Union["Scalar", int, Fraction]


@total_ordering
class Scalar:
    """Immutable element ``a + b*sqrt(k)`` of a real quadratic field."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a=0, b=0, field: FieldSpec = QQ):
        a = Fraction(a)
        b = Fraction(b)
        if field.is_rational and b:
            raise ValueError("a rational field has no sqrt part")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, field: FieldSpec) -> "Scalar":
        # trusted constructor, skips validation
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "field", field)
        return obj

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} with {other.field}")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return Scalar._make(Fraction(other), _ZERO, self.field)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        b = self.b + o.b if (self.b or o.b) else _ZERO
        return Scalar._make(self.a + o.a, b, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.a, -self.b if self.b else _ZERO, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        b = self.b - o.b if (self.b or o.b) else _ZERO
        return Scalar._make(self.a - o.a, b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.b and not o.b:
            return Scalar._make(self.a * o.a, _ZERO, self.field)
        k = self.field.radicand
        return Scalar._make(
            self.a * o.a + k * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.field,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.a, -self.b, self.field)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - k b^2``; zero only for the zero element."""
        return self.a * self.a - self.field.radicand * self.b * self.b

    def inverse(self) -> "Scalar":
        if not self.b:
            if not self.a:
                raise ZeroDivisionError("division by zero Scalar")
            return Scalar._make(1 / self.a, _ZERO, self.field)
        n = self.norm()
        return Scalar._make(self.a / n, -self.b / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.b:
            if not o.a:
                raise ZeroDivisionError("division by zero Scalar")
            b = self.b / o.a if self.b else _ZERO
            return Scalar._make(self.a / o.a, b, self.field)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    # -- order -----------------------------------------------------------
    def sign(self) -> int:
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        sb = 1 if b > 0 else -1
        if not a:
            return sb
        sa = 1 if a > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: the larger magnitude wins, a^2 vs k b^2
        if a * a > self.field.radicand * b * b:
            return sa
        return sb

    def __eq__(self, other):
        if isinstance(other, Scalar) and other.field != self.field:
            return self.a == other.a and not self.b and not other.b
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.a == o.a and self.b == o.b

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() < 0

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.field.radicand))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return not self.b

    def __float__(self):
        return float(self.a) + float(self.b) * self.field.radicand ** 0.5

    def __repr__(self):
        if self.field.is_rational:
            return f"Scalar({self.a})"
        return f"Scalar({self.a}, {self.b}, sqrt {self.field.radicand})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        k = self.field.radicand
        if not self.a:
            return f"{self.b}*sqrt({k})"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({k})"


def sign(x: Number) -> int:
    """Exact sign of ``x`` in {-1, 0, 1}."""
    if isinstance(x, Scalar):
        return x.sign()
    return (x > 0) - (x < 0)


def _parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ParseError(f"not a rational number: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a 'p/q' string, got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc
    return value


def parse_scalar(obj, field: FieldSpec = QQ) -> Scalar:
    """Read a Scalar from its JSON text form.

    Accepted forms are ``"p/q"`` (or an int) and ``{"a": "p/q", "b": "r/s"}``
    meaning ``a + b*sqrt(k)`` with ``k`` taken from ``field``.
    """
    if isinstance(obj, dict):
        unknown = set(obj) - {"a", "b"}
        if unknown:
            raise ParseError(f"unexpected keys in scalar: {sorted(unknown)}")
        a = _parse_rational(obj.get("a", "0"))
        b = _parse_rational(obj.get("b", "0"))
        if b and field.is_rational:
            raise ParseError("scalar has a sqrt part but the field is QQ")
        return Scalar._make(a, b, field)
    return Scalar._make(_parse_rational(obj), Fraction(0), field)


def render_scalar(x: Scalar):
    """Canonical text form; ``parse_scalar(render_scalar(x), x.field) == x``."""
    if not x.b:
        return str(x.a)
    return {"a": str(x.a), "b": str(x.b)}
