"""Numerical semigroup ring backend: k[[t^a1, ..., t^ak]], dimension one.

An ideal is stored in a canonical finite form: a certified tail bound
``tail`` with t^u in the ideal for every u >= tail, together with the
reduced basis ``rows`` of the ideal modulo that tail (sparse vectors
keyed by t-degree, pivot = valuation).  The closure routine below
computes this form from any finite generating set and certifies the tail
exactly, so colengths, memberships and ideal arithmetic are all finite
exact linear algebra.

Why the certificate is sound: leads of the accumulated basis are
valuations of ideal elements, and the valuation set is closed under
adding semigroup generators.  Once a1 = min generator consecutive
integers >= conductor all occur as leads, every larger integer is a
valuation too; the ring is complete, so an element of each valuation can
be subtracted off t-adically, giving t^u in the ideal for every u past
the window.
"""

from __future__ import annotations

import heapq
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotPrimaryError, UnsupportedRingError
from .fields import Field
from .linalg import SparseEchelon, intersect_spans, nullspace

Coeffs = Dict[int, object]


class NumericalSemigroup:
    """Additive submonoid of N generated by coprime positive integers."""

    def __init__(self, gens: Sequence[int]):
        gens = sorted(set(int(g) for g in gens))
        if not gens or gens[0] <= 0:
            raise ValueError("generators must be positive integers")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise UnsupportedRingError(
                f"semigroup generators {gens} have gcd {g}; "
                "a numerical semigroup needs gcd 1")
        self.gens = gens
        self.multiplicity = gens[0]
        # membership table; F < a_min * a_max always suffices
        bound = max(self.gens[0] * self.gens[-1] + 1, self.gens[-1] + 1)
        table = [False] * bound
        table[0] = True
        for n in range(1, bound):
            table[n] = any(n >= a and table[n - a] for a in gens)
        self._table = table
        self.frobenius = -1
        for n in range(bound - 1, -1, -1):
            if not table[n]:
                self.frobenius = n
                break
        self.conductor = self.frobenius + 1

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= len(self._table):
            return True
        return self._table[n]

    def gaps(self) -> List[int]:
        return [n for n in range(self.conductor) if not self._table[n]]

    def genus(self) -> int:
        return len(self.gaps())

    def members_below(self, bound: int) -> List[int]:
        return [n for n in range(max(bound, 0)) if self.contains(n)]

    def count_members_below(self, bound: int) -> int:
        return len(self.members_below(bound))

    def __repr__(self):
        return f"NumericalSemigroup({self.gens})"


class SemigroupElement:
    """Finite k-combination of monomials t^s, s in the semigroup."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: "SemigroupRing", coeffs: Coeffs):
        zero = ring.field.zero()
        clean = {int(d): c for d, c in coeffs.items() if c != zero}
        for d in clean:
            if not ring.semigroup.contains(d):
                raise ValueError(
                    f"t^{d} is not in the ring: {d} is a gap of the "
                    f"semigroup {ring.semigroup.gens}")
        self.ring = ring
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """t-adic order; -1 for zero."""
        return min(self.coeffs) if self.coeffs else -1

    def __add__(self, other: "SemigroupElement") -> "SemigroupElement":
        fld = self.ring.field
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = fld.add(out.get(d, fld.zero()), c)
        return SemigroupElement(self.ring, out)

    def __sub__(self, other: "SemigroupElement") -> "SemigroupElement":
        fld = self.ring.field
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = fld.sub(out.get(d, fld.zero()), c)
        return SemigroupElement(self.ring, out)

    def scale(self, c) -> "SemigroupElement":
        fld = self.ring.field
        return SemigroupElement(self.ring,
                                {d: fld.mul(c, x)
                                 for d, x in self.coeffs.items()})

    def __mul__(self, other: "SemigroupElement") -> "SemigroupElement":
        fld = self.ring.field
        zero = fld.zero()
        out: Coeffs = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                nc = fld.add(out.get(d, zero), fld.mul(c1, c2))
                if nc == zero:
                    out.pop(d, None)
                else:
                    out[d] = nc
        return SemigroupElement(self.ring, out)

    def __eq__(self, other):
        return (isinstance(other, SemigroupElement)
                and self.ring is other.ring and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs):
            c = self.coeffs[d]
            mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
            cs = str(c)
            if d == 0:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SemigroupElement({self.render()})"


class SemigroupRing:
    """Complete local domain k[[t^a1, ..., t^ak]]; dimension one."""

    def __init__(self, semigroup_gens: Sequence[int], field: Field):
        self.semigroup = NumericalSemigroup(semigroup_gens)
        self.field = field
        self.dimension = 1
        self._maximal: Optional["SemigroupIdeal"] = None

    def element(self, coeffs: Coeffs) -> SemigroupElement:
        return SemigroupElement(self, coeffs)

    def monomial(self, degree: int, c=None) -> SemigroupElement:
        return SemigroupElement(
            self, {degree: self.field.one() if c is None else c})

    def one(self) -> SemigroupElement:
        return self.monomial(0)

    def ideal(self, gens: Sequence[SemigroupElement]) -> "SemigroupIdeal":
        return SemigroupIdeal(self, gens)

    def unit_ideal(self) -> "SemigroupIdeal":
        return self.ideal([self.one()])

    def maximal_ideal(self) -> "SemigroupIdeal":
        if self._maximal is None:
            self._maximal = self.ideal([self.monomial(a)
                                        for a in self.semigroup.gens])
        return self._maximal

    def reduction_candidates(self, ideal: "SemigroupIdeal", count: int,
                             rng) -> Tuple[List[SemigroupElement], List[List]]:
        """Random field combinations of the minimal generators.

        In dimension one a sufficiently general element of I generates a
        minimal reduction, so candidates need no degree restriction.
        """
        mins = ideal.min_gens()
        elements: List[SemigroupElement] = []
        matrix: List[List] = []
        for _ in range(count):
            coeffs = [self.field.random_nonzero(rng) for _ in mins]
            elt = SemigroupElement(self, {})
            for c, g in zip(coeffs, mins):
                elt = elt + g.scale(c)
            elements.append(elt)
            matrix.append(coeffs)
        return elements, matrix

    def render(self, e: SemigroupElement) -> str:
        return e.render()

    def describe(self) -> dict:
        return {"kind": "numerical_semigroup",
                "semigroup": self.semigroup.gens,
                "field": self.field.describe()}

    def __repr__(self):
        return f"SemigroupRing({self.semigroup.gens}, {self.field!r})"


class SemigroupIdeal:
    """Ideal in canonical (tail, rows) form; see the module docstring."""

    def __init__(self, ring: SemigroupRing, gens: Sequence[SemigroupElement]):
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        self._tail: Optional[int] = None
        self._rows: Optional[List[Coeffs]] = None
        self._ech: Optional[SparseEchelon] = None
        self._min: Optional[List[SemigroupElement]] = None
        self._colength: Optional[int] = None
        self._powers: Dict[int, "SemigroupIdeal"] = {}

    # -- canonical form -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def _closure(self) -> None:
        """Compute the canonical (tail, rows) representation."""
        if self._rows is not None:
            return
        if self.is_zero():
            raise NotPrimaryError("the zero ideal has no finite form")
        S = self.ring.semigroup
        fld = self.ring.field
        a1 = S.multiplicity
        ech = SparseEchelon(fld)
        counter = 0
        heap: List[Tuple[int, int, Coeffs]] = []
        for g in self.gens:
            heapq.heappush(heap, (g.valuation(), counter, dict(g.coeffs)))
            counter += 1
        tail = None
        while heap:
            lead = heap[0][0]
            # certify: window [M, M+a1) of leads past the conductor, with
            # everything of smaller valuation already processed
            m = S.conductor
            while m <= lead:
                if all((m + i) in ech.pivots for i in range(a1)):
                    tail = m
                    break
                m += 1
            if tail is not None:
                break
            _, _, vec = heapq.heappop(heap)
            if ech.insert(vec):
                for a in S.gens:
                    shifted = {d + a: c for d, c in vec.items()}
                    heapq.heappush(heap,
                                   (min(shifted), counter, shifted))
                    counter += 1
        if tail is None:
            raise RuntimeError("closure did not certify a tail "
                               "(nonzero ideal expected)")
        self._set_canonical(tail, list(ech.pivots.values()))

    def _set_canonical(self, tail: int, raw_rows: List[Coeffs]) -> None:
        """Truncate past the tail, interreduce, then minimize the tail."""
        fld = self.ring.field
        S = self.ring.semigroup
        while True:
            ech = SparseEchelon(fld)
            for row in raw_rows:
                ech.insert({d: c for d, c in row.items() if d < tail})
            nxt = tail - 1
            if nxt < 0:
                break
            if not S.contains(nxt):
                tail = nxt
                continue
            if ech.contains({nxt: fld.one()}):
                tail = nxt
                raw_rows = list(ech.pivots.values())
                continue
            break
        self._tail = tail
        self._ech = ech
        self._rows = [ech.pivots[p] for p in sorted(ech.pivots)]

    def basis(self) -> Tuple[int, List[Coeffs]]:
        self._closure()
        return self._tail, self._rows

    def valuations(self) -> List[int]:
        """Valuations of the canonical basis rows (below the tail)."""
        tail, rows = self.basis()
        return [min(r) for r in rows]

    # -- membership and comparison ------------------------------------

    def contains(self, e: SemigroupElement) -> bool:
        if e.is_zero():
            return True
        tail, _ = self.basis()
        trunc = {d: c for d, c in e.coeffs.items() if d < tail}
        return self._ech.contains(trunc)

    def contains_ideal(self, other: "SemigroupIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "SemigroupIdeal") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.basis() == other.basis()

    def is_m_primary(self) -> bool:
        # every nonzero ideal here has finite colength
        return not self.is_zero()

    # -- lengths ------------------------------------------------------

    def colength(self) -> int:
        if self._colength is None:
            tail, rows = self.basis()
            members = self.ring.semigroup.count_members_below(tail)
            self._colength = members - len(rows)
        return self._colength

    # -- generators ---------------------------------------------------

    def _spanning_elements(self) -> List[SemigroupElement]:
        """Ideal generators: basis rows plus a monomial window past the
        tail long enough that every later t^u is a monomial times one of
        them."""
        tail, rows = self.basis()
        S = self.ring.semigroup
        out = [SemigroupElement(self.ring, r) for r in rows]
        span = S.conductor + S.multiplicity
        for u in range(tail, tail + span):
            if S.contains(u):
                out.append(self.ring.monomial(u))
        return out

    def min_gens(self) -> List[SemigroupElement]:
        if self._min is None:
            fld = self.ring.field
            mi = self.ring.maximal_ideal().product(self)
            tail_mi, rows_mi = mi.basis()
            ech = SparseEchelon(fld)
            for r in rows_mi:
                ech.insert(dict(r))
            cands = sorted(self._spanning_elements(),
                           key=lambda e: e.valuation())
            kept = []
            for e in cands:
                trunc = {d: c for d, c in e.coeffs.items() if d < tail_mi}
                if ech.insert(trunc):
                    kept.append(e)
            self._min = kept
        return self._min

    def mu(self) -> int:
        return len(self.min_gens())

    def generator_degrees(self) -> List[int]:
        return sorted(g.valuation() for g in self.min_gens())

    def is_equigenerated(self) -> bool:
        return len(set(self.generator_degrees())) == 1

    def is_monomial(self) -> bool:
        return all(len(g.coeffs) == 1 for g in self.gens)

    # -- ideal arithmetic ---------------------------------------------

    def product(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        return SemigroupIdeal(self.ring,
                              [f * g for f in self.gens for g in other.gens])

    def sum_with(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        return SemigroupIdeal(self.ring, list(self.gens) + list(other.gens))

    def power(self, n: int) -> "SemigroupIdeal":
        if n < 0:
            raise ValueError("negative power")
        if n == 0:
            return self.ring.unit_ideal()
        if n == 1:
            return self
        if n not in self._powers:
            self._powers[n] = self.power(n - 1).product(self)
        return self._powers[n]

    def _coords(self, bound: int) -> List[int]:
        return self.ring.semigroup.members_below(bound)

    def _subspace_rows(self, bound: int) -> List[Coeffs]:
        """Sparse basis of (self mod t^>=bound); bound >= own tail."""
        tail, rows = self.basis()
        out = [dict(r) for r in rows]
        S = self.ring.semigroup
        fld = self.ring.field
        for u in range(tail, bound):
            if S.contains(u):
                out.append({u: fld.one()})
        return out

    def intersect(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        if self.is_zero() or other.is_zero():
            return SemigroupIdeal(self.ring, [])
        fld = self.ring.field
        bound = max(self.basis()[0], other.basis()[0])
        coords = self._coords(bound)
        index = {d: i for i, d in enumerate(coords)}
        zero = fld.zero()

        def dense(row: Coeffs) -> List:
            v = [zero] * len(coords)
            for d, c in row.items():
                v[index[d]] = c
            return v

        u_rows = [dense(r) for r in self._subspace_rows(bound)]
        v_rows = [dense(r) for r in other._subspace_rows(bound)]
        meet = intersect_spans(u_rows, v_rows, fld)
        out = SemigroupIdeal(self.ring, [])
        raw = [{coords[i]: c for i, c in enumerate(r) if c != zero}
               for r in meet]
        out.gens = None  # filled below from the canonical form
        out._set_canonical(bound, raw)
        out.gens = out._spanning_elements()
        return out

    def colon(self, other: "SemigroupIdeal") -> "SemigroupIdeal":
        """(self : other) = {x : x * other is inside self}."""
        if other.is_zero():
            raise ValueError("colon by the zero ideal")
        fld = self.ring.field
        tail, _ = self.basis()
        coords = self._coords(tail)
        zero = fld.zero()
        tests = other.min_gens()
        # build the condition matrix column by column: column s holds the
        # residue of t^s * g modulo self, stacked over test generators g
        residues: List[List[Coeffs]] = []
        for s in coords:
            per_gen = []
            for g in tests:
                prod = {s + d: c for d, c in g.coeffs.items()}
                trunc = {d: c for d, c in prod.items() if d < tail}
                per_gen.append(self._ech.reduce(trunc))
            residues.append(per_gen)
        rows: List[List] = []
        for gi in range(len(tests)):
            support = sorted({d for col in residues for d in col[gi]})
            for d in support:
                rows.append([col[gi].get(d, zero) for col in residues])
        sols = nullspace(rows, len(coords), fld) if rows else [
            [fld.one() if i == j else zero for i in range(len(coords))]
            for j in range(len(coords))]
        gens = [SemigroupElement(self.ring,
                                 {coords[i]: c for i, c in enumerate(v)
                                  if c != zero})
                for v in sols]
        S = self.ring.semigroup
        span = S.conductor + S.multiplicity
        for u in range(tail, tail + span):
            if S.contains(u):
                gens.append(self.ring.monomial(u))
        return SemigroupIdeal(self.ring, gens)

    def describe(self) -> dict:
        return {"gens": [g.render() for g in self.gens]}

    def __repr__(self):
        return f"SemigroupIdeal({[g.render() for g in self.gens]})"
