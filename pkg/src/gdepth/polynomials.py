"""Sparse multivariate polynomials and monomial orders.

Monomials are exponent tuples; polynomials map monomials to nonzero
field elements.  Two orders are provided: degrevlex and a block
elimination order (first block beats the rest degree-first), which is
what the ideal intersection construction needs.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Tuple

from .fields import Field

Monomial = Tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(x >= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(m: Monomial) -> int:
    return sum(m)


class MonomialOrder:
    """Total multiplicative well-order given by a sort key (ascending)."""

    def key(self, m: Monomial):
        raise NotImplementedError

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


class DegRevLex(MonomialOrder):
    def key(self, m: Monomial):
        return (sum(m), tuple(-e for e in reversed(m)))

    def __repr__(self):
        return "degrevlex"


class BlockElimination(MonomialOrder):
    """Eliminates the first `block` variables: compares their degree first,
    degrevlex within each block."""

    def __init__(self, block: int):
        self.block = block

    def key(self, m: Monomial):
        b = self.block
        head, tail = m[:b], m[b:]
        return (sum(head), tuple(-e for e in reversed(head)),
                sum(tail), tuple(-e for e in reversed(tail)))

    def __repr__(self):
        return f"block-elimination({self.block})"


DEGREVLEX = DegRevLex()


class SparsePolynomial:
    """Polynomial over an exact field; zero coefficients are never stored."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int,
                 terms: Optional[Dict[Monomial, object]] = None):
        self.field = field
        self.nvars = nvars
        zero = field.zero()
        self.terms: Dict[Monomial, object] = {
            m: c for m, c in (terms or {}).items() if c != zero
        }

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "SparsePolynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, c) -> "SparsePolynomial":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field: Field, nvars: int, m: Monomial,
                 c=None) -> "SparsePolynomial":
        return cls(field, nvars, {tuple(m): field.one() if c is None else c})

    @classmethod
    def variable(cls, field: Field, nvars: int, i: int) -> "SparsePolynomial":
        m = [0] * nvars
        m[i] = 1
        return cls.monomial(field, nvars, tuple(m))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> List["SparsePolynomial"]:
        buckets: Dict[int, Dict[Monomial, object]] = {}
        for m, c in self.terms.items():
            buckets.setdefault(sum(m), {})[m] = c
        return [SparsePolynomial(self.field, self.nvars, buckets[d])
                for d in sorted(buckets)]

    def lead_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return max(self.terms, key=order.key)

    def lead_coefficient(self, order: MonomialOrder = DEGREVLEX):
        return self.terms[self.lead_monomial(order)]

    # -- arithmetic ---------------------------------------------------

    def _binop(self, other: "SparsePolynomial", fn) -> "SparsePolynomial":
        fld = self.field
        zero = fld.zero()
        terms = dict(self.terms)
        for m, c in other.terms.items():
            nc = fn(terms.get(m, zero), c)
            if nc == zero:
                terms.pop(m, None)
            else:
                terms[m] = nc
        return SparsePolynomial(fld, self.nvars, terms)

    def __add__(self, other):
        return self._binop(other, self.field.add)

    def __sub__(self, other):
        return self._binop(other, self.field.sub)

    def __neg__(self):
        fld = self.field
        return SparsePolynomial(fld, self.nvars,
                                {m: fld.neg(c) for m, c in self.terms.items()})

    def scale(self, c) -> "SparsePolynomial":
        fld = self.field
        if c == fld.zero():
            return SparsePolynomial.zero(fld, self.nvars)
        return SparsePolynomial(fld, self.nvars,
                                {m: fld.mul(c, x) for m, x in self.terms.items()})

    def term_mul(self, m: Monomial, c) -> "SparsePolynomial":
        fld = self.field
        return SparsePolynomial(fld, self.nvars,
                                {mono_mul(mm, m): fld.mul(c, x)
                                 for mm, x in self.terms.items()})

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        fld = self.field
        zero = fld.zero()
        terms: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                nc = fld.add(terms.get(m, zero), fld.mul(c1, c2))
                if nc == zero:
                    terms.pop(m, None)
                else:
                    terms[m] = nc
        return SparsePolynomial(fld, self.nvars, terms)

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "SparsePolynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.lead_coefficient(order)))

    # -- misc ---------------------------------------------------------

    def coefficient_vector(self, monomials: Iterable[Monomial]) -> List:
        zero = self.field.zero()
        return [self.terms.get(m, zero) for m in monomials]

    def __eq__(self, other):
        return (isinstance(other, SparsePolynomial)
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def render(self, names: List[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=DEGREVLEX.key, reverse=True):
            c = self.terms[m]
            factors = []
            for e, name in zip(m, names):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            cs = str(c)
            if factors and cs == "1":
                parts.append("*".join(factors))
            elif factors:
                parts.append(f"{cs}*" + "*".join(factors))
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"SparsePolynomial({self.terms!r})"


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent tuples of the given total degree."""
    if nvars == 1:
        return [(degree,)]
    out: List[Monomial] = []

    def rec(prefix, remaining, left):
        if left == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, left - 1)

    rec([], degree, nvars)
    return out
