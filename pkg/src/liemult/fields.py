"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are ``fractions.Fraction`` values (always in lowest terms
with positive denominator).  Prime-field scalars are :class:`Fp` residues,
stored canonically in ``[0, p)``.  Both support ``+ - * /``, unary ``-``,
and truthiness as the zero test, so all linear algebra in this package is
written once, field-agnostically.

Scalars from different fields never mix; mixing raises ``TypeError``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")

# Primes are capped so products of two residues fit comfortably in int64,
# which the fast elimination path in linalg relies on.
_MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Fp:
    """A residue mod p.  Arithmetic stays within one modulus."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _match(self, other) -> "Fp":
        if not isinstance(other, Fp):
            raise TypeError(f"cannot mix Fp with {type(other).__name__}")
        if other.p != self.p:
            raise TypeError(f"modulus mismatch: GF({self.p}) vs GF({other.p})")
        return other

    def __add__(self, other):
        other = self._match(other)
        return Fp(self.val + other.val, self.p)

    def __sub__(self, other):
        other = self._match(other)
        return Fp(self.val - other.val, self.p)

    def __mul__(self, other):
        other = self._match(other)
        return Fp(self.val * other.val, self.p)

    def __truediv__(self, other):
        other = self._match(other)
        if other.val == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return Fp(self.val * pow(other.val, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        return isinstance(other, Fp) and other.p == self.p and other.val == self.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __repr__(self):
        return f"Fp({self.val}, {self.p})"

    def __str__(self):
        return str(self.val)


Scalar = Union[Fraction, Fp]


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (``p is None``) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"not a prime: {self.p!r}")
            if self.p >= _MAX_PRIME:
                raise ValueError(f"prime too large (must be < 2^31): {self.p}")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def char(self) -> int:
        return self.p or 0

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else Fp(0, self.p)

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else Fp(1, self.p)

    def of(self, x) -> Scalar:
        """Coerce an int, Fraction, or same-field scalar into this field."""
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
        else:
            if isinstance(x, Fp):
                if x.p != self.p:
                    raise TypeError(f"residue mod {x.p} used in GF({self.p})")
                return x
            if isinstance(x, int):
                return Fp(x, self.p)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def owns(self, x) -> bool:
        if self.p is None:
            return isinstance(x, Fraction)
        return isinstance(x, Fp) and x.p == self.p

    def parse(self, text: str) -> Scalar:
        """Parse an exact scalar literal: "-3/4" or "12" (no floats)."""
        text = text.strip()
        if self.p is None:
            if not _RAT_RE.match(text):
                raise ValueError(f"not an exact rational literal: {text!r}")
            value = Fraction(text)
            return value
        if not _INT_RE.match(text):
            raise ValueError(f"not an integer literal: {text!r}")
        return Fp(int(text), self.p)

    def format(self, x: Scalar) -> str:
        if not self.owns(x):
            raise TypeError(f"{x!r} is not a {self} scalar")
        return str(x)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


_RATIONALS = FieldSpec()


def rationals() -> FieldSpec:
    return _RATIONALS


def gf(p: int) -> FieldSpec:
    return FieldSpec(p)
