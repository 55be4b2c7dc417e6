"""Graded polynomial ring backend: k[x_1..x_d] at the irrelevant maximal
ideal, with homogeneous m-primary ideals.

For homogeneous ideals the graded quotient dimension equals the local
length, so every colength reported here is provably the local one.
Inhomogeneous input is refused: honest local lengths for it would need
local standard bases, which are out of scope.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotHomogeneousError, NotPrimaryError, NotEquigeneratedError
from .fields import Field
from .groebner import buchberger, graded_piece_dimension, normal_form
from .linalg import SparseEchelon
from .polynomials import (DEGREVLEX, BlockElimination, Monomial,
                          SparsePolynomial, mono_div, mono_divides, mono_lcm,
                          monomials_of_degree)


def minimal_generators(cands: Sequence[SparsePolynomial], nvars: int,
                       field: Field) -> List[SparsePolynomial]:
    """Minimal homogeneous generating set extracted from candidates.

    Works degree by degree: a candidate is kept iff it is independent of
    lower-degree generators times monomials and of same-degree candidates
    already kept (graded Nakayama).
    """
    cands = [c for c in cands if not c.is_zero()]
    if not cands:
        return []
    if all(len(c.terms) == 1 for c in cands):
        monos = sorted({c.lead_monomial() for c in cands},
                       key=lambda m: (sum(m), m))
        kept_m: List[Monomial] = []
        for m in monos:
            if not any(mono_divides(k, m) for k in kept_m):
                kept_m.append(m)
        return [SparsePolynomial.monomial(field, nvars, m) for m in kept_m]
    by_degree: Dict[int, List[SparsePolynomial]] = {}
    for c in cands:
        by_degree.setdefault(c.degree(), []).append(c)
    kept: List[SparsePolynomial] = []
    for deg in sorted(by_degree):
        ech = SparseEchelon(field)
        for g in kept:
            shift = deg - g.degree()
            for m in monomials_of_degree(nvars, shift):
                ech.insert(g.term_mul(m, field.one()).terms)
        for c in by_degree[deg]:
            if ech.insert(c.terms):
                kept.append(c.monic())
    return kept


def exact_divide(h: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    """Return h/g; raises if g does not divide h exactly."""
    fld = h.field
    q = SparsePolynomial.zero(fld, h.nvars)
    lg = g.lead_monomial()
    lc = g.lead_coefficient()
    work = h
    while not work.is_zero():
        m = work.lead_monomial()
        d = mono_div(m, lg)
        if d is None:
            raise ArithmeticError("division is not exact")
        c = fld.div(work.terms[m], lc)
        q = q + SparsePolynomial.monomial(fld, h.nvars, d, c)
        work = work - g.term_mul(d, c)
    return q


class GradedRing:
    """k[x_1..x_d] over an exact field, graded by total degree."""

    def __init__(self, names: Sequence[str], field: Field):
        if not names:
            raise ValueError("need at least one variable")
        self.names = list(names)
        self.field = field
        self.nvars = len(names)
        self.dimension = len(names)
        self._maximal: Optional["GradedIdeal"] = None

    def variable(self, i: int) -> SparsePolynomial:
        return SparsePolynomial.variable(self.field, self.nvars, i)

    def one(self) -> SparsePolynomial:
        return SparsePolynomial.constant(self.field, self.nvars, self.field.one())

    def ideal(self, gens: Sequence[SparsePolynomial]) -> "GradedIdeal":
        return GradedIdeal(self, gens)

    def unit_ideal(self) -> "GradedIdeal":
        return GradedIdeal(self, [self.one()])

    def maximal_ideal(self) -> "GradedIdeal":
        if self._maximal is None:
            self._maximal = self.ideal([self.variable(i)
                                        for i in range(self.nvars)])
        return self._maximal

    def reduction_candidates(self, ideal: "GradedIdeal", count: int,
                             rng) -> Tuple[List[SparsePolynomial], List[List]]:
        """Random field combinations of the minimal generators.

        Only equigenerated ideals are searched: generic combinations of
        one-degree generators stay homogeneous, so every downstream ideal
        does too.
        """
        if not ideal.is_equigenerated():
            raise NotEquigeneratedError(
                "reduction search requires an equigenerated ideal")
        mins = ideal.min_gens()
        elements: List[SparsePolynomial] = []
        matrix: List[List] = []
        for _ in range(count):
            coeffs = [self.field.random_nonzero(rng) for _ in mins]
            elt = SparsePolynomial.zero(self.field, self.nvars)
            for c, g in zip(coeffs, mins):
                elt = elt + g.scale(c)
            elements.append(elt)
            matrix.append(coeffs)
        return elements, matrix

    def render(self, f: SparsePolynomial) -> str:
        return f.render(self.names)

    def describe(self) -> dict:
        return {"kind": "graded_polynomial", "vars": self.names,
                "field": self.field.describe()}

    def __repr__(self):
        return f"GradedRing({self.names}, {self.field!r})"


class GradedIdeal:
    """Homogeneous ideal with cached degrevlex Groebner basis."""

    def __init__(self, ring: GradedRing, gens: Sequence[SparsePolynomial]):
        self.ring = ring
        for g in gens:
            if not g.is_homogeneous():
                raise NotHomogeneousError(
                    f"inhomogeneous generator {g.render(ring.names)}; "
                    "the graded backend only accepts homogeneous ideals")
        self.gens = [g.monic() for g in gens if not g.is_zero()]
        self._gb: Optional[List[SparsePolynomial]] = None
        self._min: Optional[List[SparsePolynomial]] = None
        self._colength: Optional[int] = None
        self._powers: Dict[int, "GradedIdeal"] = {}

    # -- groebner machinery -------------------------------------------

    def groebner(self) -> List[SparsePolynomial]:
        if self._gb is None:
            self._gb = buchberger(self.gens, DEGREVLEX)
        return self._gb

    def min_gens(self) -> List[SparsePolynomial]:
        if self._min is None:
            self._min = minimal_generators(self.gens, self.ring.nvars,
                                           self.ring.field)
        return self._min

    def mu(self) -> int:
        return len(self.min_gens())

    def generator_degrees(self) -> List[int]:
        return sorted(g.degree() for g in self.min_gens())

    def is_equigenerated(self) -> bool:
        return len(set(self.generator_degrees())) == 1

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    # -- predicates ---------------------------------------------------

    def is_m_primary(self) -> bool:
        if self.is_zero():
            return False
        leads = [g.lead_monomial() for g in self.groebner()]
        for i in range(self.ring.nvars):
            if not any(all(e == 0 for k, e in enumerate(m) if k != i)
                       for m in leads):
                return False
        return True

    def contains(self, f: SparsePolynomial) -> bool:
        return normal_form(f, self.groebner()).is_zero()

    def contains_ideal(self, other: "GradedIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "GradedIdeal") -> bool:
        return self.groebner() == other.groebner()

    # -- lengths ------------------------------------------------------

    def graded_piece(self, j: int) -> int:
        """dim_k (R/I)_j."""
        return graded_piece_dimension(self.groebner(), j, self.ring.nvars)

    def colength(self) -> int:
        if self._colength is None:
            if not self.is_m_primary():
                raise NotPrimaryError(
                    "colength is finite only for m-primary ideals")
            total = 0
            j = 0
            while True:
                dim = self.graded_piece(j)
                if dim == 0:
                    break
                total += dim
                j += 1
            self._colength = total
        return self._colength

    # -- ideal arithmetic ---------------------------------------------

    def _make(self, cands: Sequence[SparsePolynomial]) -> "GradedIdeal":
        gens = minimal_generators(cands, self.ring.nvars, self.ring.field)
        return GradedIdeal(self.ring, gens)

    def product(self, other: "GradedIdeal") -> "GradedIdeal":
        return self._make([f * g for f in self.min_gens()
                           for g in other.min_gens()])

    def sum_with(self, other: "GradedIdeal") -> "GradedIdeal":
        return self._make(list(self.gens) + list(other.gens))

    def power(self, n: int) -> "GradedIdeal":
        if n < 0:
            raise ValueError("negative power")
        if n == 0:
            return self.ring.unit_ideal()
        if n == 1:
            return self
        if n not in self._powers:
            self._powers[n] = self.power(n - 1).product(self)
        return self._powers[n]

    def intersect(self, other: "GradedIdeal") -> "GradedIdeal":
        if self.is_zero() or other.is_zero():
            return GradedIdeal(self.ring, [])
        if self.is_monomial() and other.is_monomial():
            cands = [SparsePolynomial.monomial(self.ring.field,
                                               self.ring.nvars,
                                               mono_lcm(a.lead_monomial(),
                                                        b.lead_monomial()))
                     for a in self.min_gens() for b in other.min_gens()]
            return self._make(cands)
        # one-auxiliary-variable elimination: t*I + (1-t)*J, eliminate t
        fld = self.ring.field
        n = self.ring.nvars + 1

        def lift(f: SparsePolynomial, tdeg: int) -> SparsePolynomial:
            return SparsePolynomial(fld, n, {(tdeg,) + m: c
                                             for m, c in f.terms.items()})

        ext: List[SparsePolynomial] = []
        for f in self.min_gens():
            ext.append(lift(f, 1))
        for g in other.min_gens():
            ext.append(lift(g, 0) - lift(g, 1))
        gb = buchberger(ext, BlockElimination(1))
        picked = [p for p in gb if all(m[0] == 0 for m in p.terms)]
        cands: List[SparsePolynomial] = []
        for p in picked:
            proj = SparsePolynomial(fld, self.ring.nvars,
                                    {m[1:]: c for m, c in p.terms.items()})
            cands.extend(proj.homogeneous_components())
        return self._make(cands)

    def colon(self, other: "GradedIdeal") -> "GradedIdeal":
        """(self : other), computed generator by generator."""
        result: Optional[GradedIdeal] = None
        for g in other.min_gens():
            principal = GradedIdeal(self.ring, [g])
            meet = self.intersect(principal)
            quot = self._make([exact_divide(h, g) for h in meet.gens])
            result = quot if result is None else result.intersect(quot)
        if result is None:
            raise ValueError("colon by the zero ideal")
        return result

    def describe(self) -> dict:
        return {"gens": [g.render(self.ring.names) for g in self.gens]}

    def __repr__(self):
        return f"GradedIdeal({[g.render(self.ring.names) for g in self.gens]})"
