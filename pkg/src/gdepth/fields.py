"""Exact coefficient fields: the rationals and prime fields F_p.

Every number in the engine lives in one of these two fields; no floating
point is used anywhere.  Prime-field elements are plain ints in [0, p),
rational elements are `fractions.Fraction`, so field objects mostly
describe how to combine them.

The default prime 32003 is large enough that random generic choices
succeed with probability >= 1 - O(deg/p); every random choice is verified
exactly afterwards, so the modulus only affects search success, never
correctness.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface for exact fields."""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_nonzero(self, rng):
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError


class PrimeField(Field):
    """F_p with elements represented as ints in [0, p)."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return pow(a, self.p - 2, self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def describe(self) -> dict:
        return {"kind": "prime-field", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField(Field):
    """The rationals, with `fractions.Fraction` elements."""

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def random_nonzero(self, rng):
        # Small nonzero integers; genericity over Q is cheap.
        return Fraction(rng.choice([n for n in range(-20, 21) if n != 0]))

    def describe(self) -> dict:
        return {"kind": "rationals"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


def field_from_spec(spec: dict) -> Field:
    """Build a field from its JSON description ({"kind": ..., "p": ...})."""
    kind = spec.get("kind")
    if kind in ("rationals", "Q", "QQ"):
        return QQ
    if kind in ("prime-field", "Fp", "fp"):
        return PrimeField(int(spec.get("p", DEFAULT_PRIME)))
    raise ValueError(f"unknown field kind {kind!r}")
