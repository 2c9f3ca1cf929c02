"""Dual numbers ``re + ε du`` with ε² = 0.

All arithmetic is double precision. Every constructed value is checked for
finiteness so NaN or infinity never propagates silently.
"""

from __future__ import annotations

import math
from typing import Callable, Union

from .errors import DivisorNotInvertible, DomainError, NonFiniteError

Real = Union[int, float]

DEFAULT_TOL = 1e-12


class DualScalar:
    """Element of the dual-number ring.

    Equality is tolerance based (``DEFAULT_TOL`` scaled by magnitude), with
    the real and dual parts compared independently. Use :func:`isclose`
    for an explicit tolerance.
    """

    __slots__ = ("re", "du")

    def __init__(self, re: Real, du: Real = 0.0):
        re = float(re)
        du = float(du)
        if not (math.isfinite(re) and math.isfinite(du)):
            raise NonFiniteError(f"non-finite dual number ({re!r}, {du!r})")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "du", du)

    def __setattr__(self, name, value):
        raise AttributeError("DualScalar is immutable")

    def __reduce__(self):
        return (DualScalar, (self.re, self.du))

    def __repr__(self) -> str:
        return f"DualScalar({self.re!r}, {self.du!r})"

    def __str__(self) -> str:
        sign = "-" if self.du < 0 else "+"
        return f"{self.re:g}{sign}ε{abs(self.du):g}"

    def __iter__(self):
        yield self.re
        yield self.du

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return isclose(self, other)

    __hash__ = None  # tolerance-based equality cannot be hashed consistently

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return d_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return DualScalar(self.re - other.re, self.du - other.du)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return DualScalar(other.re - self.re, other.du - self.du)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return d_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return d_div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return d_div(other, self)

    def __neg__(self) -> DualScalar:
        return DualScalar(-self.re, -self.du)

    def __pos__(self) -> DualScalar:
        return self

    def __pow__(self, n: int) -> DualScalar:
        if not isinstance(n, int) or n < 0:
            raise TypeError("only non-negative integer powers are supported")
        result = ONE
        for _ in range(n):
            result = d_mul(result, self)
        return result

    def __abs__(self) -> float:
        return max(abs(self.re), abs(self.du))

    @property
    def is_pure_dual(self) -> bool:
        return self.re == 0.0


def _coerce(x):
    if isinstance(x, DualScalar):
        return x
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return DualScalar(x, 0.0)
    return NotImplemented


def dual(x) -> DualScalar:
    """Promote a real, a ``(re, du)`` pair or a DualScalar to DualScalar."""
    if isinstance(x, DualScalar):
        return x
    if isinstance(x, (tuple, list)):
        return DualScalar(*x)
    return DualScalar(x, 0.0)


ZERO = DualScalar(0.0, 0.0)
ONE = DualScalar(1.0, 0.0)
EPS = DualScalar(0.0, 1.0)


def d_add(a: DualScalar, b: DualScalar) -> DualScalar:
    return DualScalar(a.re + b.re, a.du + b.du)


def d_mul(a: DualScalar, b: DualScalar) -> DualScalar:
    return DualScalar(a.re * b.re, a.re * b.du + a.du * b.re)


def d_div(a: DualScalar, b: DualScalar) -> DualScalar:
    """Divide ``a`` by ``b``; the divisor must have a nonzero real part."""
    if b.re == 0.0:
        raise DivisorNotInvertible(f"{b!r} has zero real part")
    q = a.re / b.re
    return DualScalar(q, a.du / b.re - a.re * b.du / (b.re * b.re))


def isclose(a: DualScalar, b: DualScalar, tol: float = DEFAULT_TOL) -> bool:
    """Compare both parts independently, tolerance scaled by magnitude."""
    scale_re = max(1.0, abs(a.re), abs(b.re))
    scale_du = max(1.0, abs(a.du), abs(b.du))
    return abs(a.re - b.re) <= tol * scale_re and abs(a.du - b.du) <= tol * scale_du


def d_lift(f: Callable[[float], float], f_prime: Callable[[float], float], x) -> DualScalar:
    """Extend a smooth real function: ``f(x + εx*) = f(x) + εx* f'(x)``.

    Math-library domain failures surface as :class:`DomainError`.
    """
    x = dual(x)
    try:
        value = f(x.re)
        slope = f_prime(x.re) if x.du != 0.0 else 0.0
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise DomainError(f"{getattr(f, '__name__', 'f')} undefined at {x.re!r}") from exc
    return DualScalar(value, x.du * slope)


def sinh(x) -> DualScalar:
    return d_lift(math.sinh, math.cosh, x)


def cosh(x) -> DualScalar:
    return d_lift(math.cosh, math.sinh, x)


def tanh(x) -> DualScalar:
    return d_lift(math.tanh, lambda t: 1.0 / math.cosh(t) ** 2, x)


def sech(x) -> DualScalar:
    # derivative written as -sech*tanh so the lift stays in closed form
    return d_lift(lambda t: 1.0 / math.cosh(t),
                  lambda t: -math.tanh(t) / math.cosh(t), x)


def sqrt(x) -> DualScalar:
    x = dual(x)
    if x.re < 0.0 or (x.re == 0.0 and x.du != 0.0):
        raise DomainError(f"sqrt undefined (or not differentiable) at {x.re!r}")
    return d_lift(math.sqrt, lambda t: 0.5 / math.sqrt(t), x)


def inv_sqrt(x) -> DualScalar:
    """``x^(-1/2)``; requires a strictly positive real part."""
    x = dual(x)
    if x.re <= 0.0:
        raise DomainError(f"x^(-1/2) undefined at {x.re!r}")
    return d_lift(lambda t: t ** -0.5, lambda t: -0.5 * t ** -1.5, x)


def atanh(x) -> DualScalar:
    x = dual(x)
    if abs(x.re) >= 1.0:
        raise DomainError(f"atanh undefined at {x.re!r}")
    return d_lift(math.atanh, lambda t: 1.0 / (1.0 - t * t), x)
