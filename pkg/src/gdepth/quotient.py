"""Quotient rings as views on a backend ring.

R/C is never materialized: an ideal of the quotient is tracked by a base
ideal L with C folded in (L contains C), and every length of the
quotient is a base colength of such an L.  This is all the engine needs
to rerun its analyses after cutting superficial elements.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple


class QuotientRing:
    """View of base/(modulus); `dimension` is supplied by the caller,
    who knows how many parameters were cut."""

    def __init__(self, base, modulus, dimension: int):
        self.base = base
        self.modulus = modulus
        self.dimension = dimension
        self.field = base.field
        self._maximal: Optional["QuotientIdeal"] = None

    def ideal(self, gens: Sequence) -> "QuotientIdeal":
        return QuotientIdeal(self, list(gens),
                             self.base.ideal(gens).sum_with(self.modulus))

    def unit_ideal(self) -> "QuotientIdeal":
        return QuotientIdeal(self, [self.base.one()], self.base.unit_ideal())

    def one(self):
        return self.base.one()

    def maximal_ideal(self) -> "QuotientIdeal":
        if self._maximal is None:
            base_m = self.base.maximal_ideal()
            self._maximal = QuotientIdeal(self, list(base_m.gens), base_m)
        return self._maximal

    def quotient(self, extra, dimension: int) -> "QuotientRing":
        """Cut further: base/(modulus + extra)."""
        return QuotientRing(self.base, self.modulus.sum_with(extra), dimension)

    def reduction_candidates(self, ideal: "QuotientIdeal", count: int,
                             rng) -> Tuple[List, List[List]]:
        """Random combinations of the image generators.

        The images of a generating set still generate, and genericity is
        all the downstream searches need, so no minimality is required.
        """
        gens = ideal.image_gens
        elements, matrix = [], []
        for _ in range(count):
            coeffs = [self.field.random_nonzero(rng) for _ in gens]
            elt = gens[0].scale(coeffs[0])
            for c, g in zip(coeffs[1:], gens[1:]):
                elt = elt + g.scale(c)
            elements.append(elt)
            matrix.append(coeffs)
        return elements, matrix

    def render(self, e) -> str:
        return self.base.render(e)

    def describe(self) -> dict:
        return {"kind": "quotient", "base": self.base.describe(),
                "modulus": self.modulus.describe(),
                "dimension": self.dimension}

    def __repr__(self):
        return f"QuotientRing({self.base!r} mod {self.modulus!r})"


class QuotientIdeal:
    """Image ideal, represented by the base ideal `lift` (contains the
    modulus) plus the generator images used to build it."""

    def __init__(self, ring: QuotientRing, image_gens: List, lift):
        self.ring = ring
        self.image_gens = [g for g in image_gens if not g.is_zero()]
        self.lift = lift
        self.gens = self.image_gens
        self._powers: Dict[int, "QuotientIdeal"] = {}

    def _wrap(self, image_gens: List, lift) -> "QuotientIdeal":
        return QuotientIdeal(self.ring, image_gens, lift)

    def colength(self) -> int:
        return self.lift.colength()

    def is_m_primary(self) -> bool:
        return self.lift.is_m_primary()

    def is_zero(self) -> bool:
        return self.ring.modulus.contains_ideal(self.lift)

    def contains(self, e) -> bool:
        return self.lift.contains(e)

    def contains_ideal(self, other: "QuotientIdeal") -> bool:
        return self.lift.contains_ideal(other.lift)

    def equals(self, other: "QuotientIdeal") -> bool:
        return self.lift.equals(other.lift)

    def product(self, other: "QuotientIdeal") -> "QuotientIdeal":
        gens = [f * g for f in self.image_gens for g in other.image_gens]
        lift = self.lift.product(other.lift).sum_with(self.ring.modulus)
        return self._wrap(gens, lift)

    def sum_with(self, other: "QuotientIdeal") -> "QuotientIdeal":
        return self._wrap(self.image_gens + other.image_gens,
                          self.lift.sum_with(other.lift))

    def power(self, n: int) -> "QuotientIdeal":
        if n < 0:
            raise ValueError("negative power")
        if n == 0:
            return self.ring.unit_ideal()
        if n == 1:
            return self
        if n not in self._powers:
            self._powers[n] = self.power(n - 1).product(self)
        return self._powers[n]

    def intersect(self, other: "QuotientIdeal") -> "QuotientIdeal":
        lift = self.lift.intersect(other.lift)
        return QuotientIdeal(self.ring, list(lift.gens), lift)

    def colon(self, other: "QuotientIdeal") -> "QuotientIdeal":
        # modulus * other is inside the modulus, hence inside self.lift,
        # so the base colon already computes the quotient colon
        lift = self.lift.colon(other.lift)
        return QuotientIdeal(self.ring, list(lift.gens), lift)

    def mu(self) -> int:
        """Minimal generator count: length of self / (m * self)."""
        m = self.ring.base.maximal_ideal()
        top = self.lift.product(m).sum_with(self.ring.modulus)
        return top.colength() - self.lift.colength()

    def describe(self) -> dict:
        return {"gens": [self.ring.render(g) for g in self.image_gens]}

    def __repr__(self):
        return f"QuotientIdeal({[self.ring.render(g) for g in self.image_gens]})"
