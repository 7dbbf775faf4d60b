"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Rational scalars are `fractions.Fraction` values (always kept reduced);
GF(p) scalars are plain ints in [0, p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Operands live over different coefficient fields."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldTag:
    """Coefficient field: the rationals when ``p is None``, otherwise GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def coerce(self, value):
        if self.p is None:
            return Fraction(value)
        return int(value) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero field element")
        return 1 / Fraction(a) if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        """All field elements; only available for finite fields."""
        if self.p is None:
            raise ValueError("cannot enumerate the rationals")
        return range(self.p)

    def __repr__(self):
        return self.name


QQ = FieldTag()


def GF(p: int) -> FieldTag:
    return FieldTag(p)


def same_field(*tags: FieldTag) -> FieldTag:
    first = tags[0]
    for t in tags[1:]:
        if t != first:
            raise FieldMismatchError(f"mixed fields: {first} vs {t}")
    return first
