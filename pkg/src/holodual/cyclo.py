"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element of Q(zeta_m) is a rational polynomial in ``zeta_m`` reduced
modulo the cyclotomic polynomial ``Phi_m``; it carries ``phi(m)``
coefficients.  Binary operations promote both operands to the lcm of their
conductors.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .finab import QmodZ

__all__ = [
    "MAX_CONDUCTOR",
    "Cyclotomic",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta",
    "root_of_unity",
    "character_sum",
    "parse_cyclotomic",
]

MAX_CONDUCTOR = 1 << 16

Poly = list  # low degree first


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    """Division by a polynomial ``b`` with nonzero leading coefficient."""
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    q = [0] * max(0, len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1]
        if c:
            c = c / lead if lead != 1 else c
            q[shift] = c
            for i, y in enumerate(b):
                a[shift + i] -= c * y
    return _trim(q), _trim(a[: len(b) - 1])


@lru_cache(maxsize=None)
def _phi_tuple(m: int) -> tuple[int, ...]:
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod(num, _phi_tuple(d))
            assert not r
            num = q
    return tuple(int(c) for c in num)


def cyclotomic_polynomial(m: int) -> list[int]:
    """Coefficients of ``Phi_m``, constant term first.

    >>> cyclotomic_polynomial(6)
    [1, -1, 1]
    """
    if m < 1:
        raise ValueError("conductor must be positive")
    return list(_phi_tuple(m))


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    return len(_phi_tuple(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of ``zeta_m ** k`` for ``0 <= k < m``."""
    n = euler_phi(m)
    phi = _phi_tuple(m)
    rows = []
    # Phi_m is monic with integer coefficients, so the table stays integral
    phi = tuple(int(c) for c in phi)
    cur = [0] * n
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _integral(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integer numerators over a common denominator."""
    d = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (d // c.denominator) for c in coeffs], d


def _reduce(poly: Sequence, m: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in ``zeta_m`` modulo ``Phi_m``."""
    return tuple(Fraction(c) for c in _reduce_int(poly, m))


def _reduce_int(poly: Sequence, m: int) -> list:
    n = euler_phi(m)
    # fold exponents mod m first (zeta^m = 1), then use the power table
    folded = [0] * m
    for k, c in enumerate(poly):
        if c:
            folded[k % m] += c
    out = [0] * n
    table = _power_table(m)
    for k, c in enumerate(folded):
        if c:
            if k < n:
                out[k] += c
            else:
                for i, t in enumerate(table[k]):
                    if t:
                        out[i] += c * t
    return out


def _check_conductor(m: int) -> int:
    m = int(m)
    if m < 1:
        raise ValueError("conductor must be positive")
    if m > MAX_CONDUCTOR:
        raise OverflowError(f"conductor {m} exceeds the cap {MAX_CONDUCTOR}")
    return m


class Cyclotomic:
    """Immutable element of Q(zeta_m)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable = ()):
        m = _check_conductor(conductor)
        coeffs = [Fraction(c) for c in coeffs]
        n = euler_phi(m)
        if len(coeffs) > n:
            coeffs = list(_reduce(coeffs, m))
        coeffs += [Fraction(0)] * (n - len(coeffs))
        object.__setattr__(self, "conductor", m)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def rational(cls, q) -> Cyclotomic:
        return cls(1, [Fraction(q)])

    @classmethod
    def from_poly(cls, m: int, poly: Sequence) -> Cyclotomic:
        m = _check_conductor(m)
        return cls(m, _reduce(poly, m))

    # -- conductor handling

    def embed(self, L: int) -> Cyclotomic:
        """Same element viewed in Q(zeta_L); ``L`` must be a multiple of the conductor."""
        m = self.conductor
        if L % m:
            raise ValueError(f"Q(zeta_{m}) does not embed in Q(zeta_{L})")
        if L == m:
            return self
        step = L // m
        poly = [0] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return Cyclotomic.from_poly(L, poly)

    def descend(self, m: int) -> Cyclotomic | None:
        """Representation in Q(zeta_m) if the element lies there, else None."""
        from ._linalg import solve

        L = self.conductor
        if m == L:
            return self
        M = math.lcm(m, L)
        target = self.embed(M).coeffs
        basis = [Cyclotomic(m, [int(i == k) for i in range(euler_phi(m))]).embed(M).coeffs for k in range(euler_phi(m))]
        rows = [list(r) for r in zip(*basis)]
        x = solve(rows, list(target))
        return None if x is None else Cyclotomic(m, x)

    def minimal(self) -> Cyclotomic:
        """Same element in the smallest conductor dividing the current one."""
        L = self.conductor
        for m in sorted(d for d in range(1, L + 1) if L % d == 0):
            y = self.descend(m)
            if y is not None:
                return y
        return self

    @staticmethod
    def _common(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        L = math.lcm(a.conductor, b.conductor)
        _check_conductor(L)
        return a.embed(L), b.embed(L)

    @staticmethod
    def _coerce(x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    # -- field operations

    def __add__(self, other) -> Cyclotomic:
        try:
            a, b = self._common(self, self._coerce(other))
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other) -> Cyclotomic:
        try:
            return self + (-self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other) -> Cyclotomic:
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [x * other for x in self.coeffs])
        try:
            a, b = self._common(self, self._coerce(other))
        except TypeError:
            return NotImplemented
        (x, dx), (y, dy) = _integral(a.coeffs), _integral(b.coeffs)
        m, d = a.conductor, dx * dy
        return Cyclotomic(m, [Fraction(c, d) for c in _reduce_int(_poly_mul(x, y), m)])

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        """Multiplicative inverse by extended Euclid against ``Phi_m``."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        m = self.conductor
        a = _trim(list(self.coeffs))
        if len(a) == 1:
            return Cyclotomic(m, [1 / a[0]])
        # invariants: s0 * a == r0, s1 * a == r1 (mod Phi_m)
        r0, r1 = [Fraction(c) for c in _phi_tuple(m)], a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            qs = _poly_mul(q, s1)
            s_next = [(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(max(len(s0), len(qs)))]
            r0, r1 = r1, r
            s0, s1 = s1, _trim(s_next)
        if not r1:
            raise ArithmeticError("Phi_m shares a factor with the element")  # impossible: Phi_m is irreducible
        return Cyclotomic.from_poly(m, [c / r1[0] for c in s1])

    def __truediv__(self, other) -> Cyclotomic:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> Cyclotomic:
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> Cyclotomic:
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic.rational(1).embed(self.conductor)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> Cyclotomic:
        """Image under ``zeta_m -> zeta_m^-1``."""
        m = self.conductor
        poly = [0] * m
        for k, c in enumerate(self.coeffs):
            poly[(-k) % m] += c
        return Cyclotomic.from_poly(m, poly)

    # -- predicates and comparison

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.descend(1) is not None

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._common(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None

    def to_complex(self) -> complex:
        """Floating point approximation, for display only."""
        w = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(complex(c) * w**k for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"z{self.conductor}" if k == 1 else f"z{self.conductor}^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}


def root_of_unity(m: int, k: int = 1) -> Cyclotomic:
    """``zeta_m ** k``."""
    m = _check_conductor(m)
    return Cyclotomic(m, _power_table(m)[k % m])


def zeta(q) -> Cyclotomic:
    """``exp(2 pi i q)`` for ``q`` in Q/Z, in conductor ``denominator(q)``."""
    q = q if isinstance(q, QmodZ) else QmodZ(Fraction(q))
    return root_of_unity(q.denominator, q.numerator)


def character_sum(m: int, terms: Iterable[tuple[Cyclotomic, int]]) -> Cyclotomic:
    """``sum value * zeta_m**k`` over ``(value, k)`` pairs.

    Multiplying by a root of unity only rotates exponents, so the sum is
    accumulated in Z[x]/(x^M - 1) over a common denominator and reduced
    modulo ``Phi_M`` once.  ``M`` is the lcm of ``m`` and every conductor.
    """
    terms = [(Cyclotomic._coerce(v), k) for v, k in terms]
    M, den = m, 1
    for v, _ in terms:
        M = math.lcm(M, v.conductor)
        for c in v.coeffs:
            den = math.lcm(den, c.denominator)
    _check_conductor(M)
    acc = [0] * M
    step = M // m
    for v, k in terms:
        shift = (k * step) % M
        vstep = M // v.conductor
        for i, c in enumerate(v.coeffs):
            if c:
                acc[(i * vstep + shift) % M] += c.numerator * (den // c.denominator)
    return Cyclotomic.from_poly(M, [Fraction(a, den) for a in acc])


def parse_cyclotomic(obj) -> Cyclotomic:
    """Cyclotomic from ``{"conductor": m, "coeffs": ["p/q", ...]}`` or a rational literal."""
    if isinstance(obj, dict):
        if set(obj) != {"conductor", "coeffs"}:
            raise ValueError("cyclotomic literal needs exactly 'conductor' and 'coeffs'")
        m = obj["conductor"]
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValueError("conductor must be an integer")
        coeffs = [Fraction(c) if isinstance(c, (str, int)) and not isinstance(c, bool) else _bad(c) for c in obj["coeffs"]]
        if len(coeffs) != euler_phi(_check_conductor(m)):
            raise ValueError(f"conductor {m} needs {euler_phi(m)} coefficients, got {len(coeffs)}")
        return Cyclotomic(m, coeffs)
    if isinstance(obj, (str, int)) and not isinstance(obj, bool):
        return Cyclotomic.rational(Fraction(obj))
    return _bad(obj)


def _bad(obj):
    raise ValueError(f"not an exact rational or cyclotomic literal: {obj!r}")
