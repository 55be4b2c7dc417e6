"""Reductions, reduction numbers, superficial elements and sequences.

Searches are randomized with a deterministic seed; every hit is verified
exactly, so randomness affects only whether the search succeeds, never
the truth of a certificate.  A failed search is reported as exhausted,
not as nonexistence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import (ContainmentViolatedError, InIdealSquareError,
                     NotInIdealError, NotPrimaryError, SearchExhaustedError)
from .hilbert import eventual_degree
from .quotient import QuotientRing

DEFAULT_ATTEMPTS = 8


@dataclass
class ReductionCertificate:
    """A verified reduction J of I with its reduction number."""

    ideal: object              # J, as a backend ideal handle
    generators: List[object]
    coefficient_matrix: List[List]
    r: int
    minimal: bool
    seed: Optional[int]

    def describe(self, ring) -> dict:
        return {
            "generators": [ring.render(g) for g in self.generators],
            "coefficient_matrix": [[str(c) for c in row]
                                   for row in self.coefficient_matrix],
            "r": self.r,
            "minimal": self.minimal,
            "seed": self.seed,
        }


@dataclass
class SuperficialCertificate:
    """Element with verified injective multiplication on graded pieces."""

    element: object
    n_lo: int
    n_hi: int

    def describe(self, ring) -> dict:
        return {"element": ring.render(self.element),
                "injective_range": [self.n_lo, self.n_hi]}


def is_reduction(J, I, r_max: int) -> Tuple[bool, Optional[int]]:
    """Least r <= r_max with J * I^r = I^(r+1), else (False, None)."""
    if not I.contains_ideal(J):
        raise ContainmentViolatedError(
            "candidate reduction is not contained in the ideal")
    for r in range(r_max + 1):
        left = J.product(I.power(r))
        right = I.power(r + 1)
        if not right.contains_ideal(left):
            raise ContainmentViolatedError(
                f"J*I^{r} escapes I^{r + 1}; J is not inside I")
        if left.colength() == right.colength():
            return True, r
    return False, None


def default_r_max(I, dimension: int) -> int:
    return I.colength() + dimension + 4


def minimal_reduction(ring, I, seed: int = 0,
                      attempts: int = DEFAULT_ATTEMPTS,
                      r_max: Optional[int] = None) -> ReductionCertificate:
    """d generic combinations of generators, verified exactly."""
    if not I.is_m_primary():
        raise NotPrimaryError("reductions are searched for m-primary ideals")
    d = ring.dimension
    if r_max is None:
        r_max = default_r_max(I, d)
    mins = I.min_gens() if hasattr(I, "min_gens") else I.gens
    if len(mins) == d:
        eye = [[ring.field.one() if i == j else ring.field.zero()
                for j in range(d)] for i in range(d)]
        return ReductionCertificate(ideal=I, generators=list(mins),
                                    coefficient_matrix=eye, r=0,
                                    minimal=True, seed=seed)
    rng = random.Random(seed)
    for attempt in range(attempts):
        elements, matrix = ring.reduction_candidates(I, d, rng)
        J = ring.ideal(elements)
        ok, r = is_reduction(J, I, r_max)
        if ok:
            return ReductionCertificate(ideal=J, generators=elements,
                                        coefficient_matrix=matrix, r=r,
                                        minimal=True, seed=seed)
    raise SearchExhaustedError(
        f"no reduction found in {attempts} attempts (seed {seed}); "
        "this reports search failure, not nonexistence")


def is_superficial(ring, I, a, n_lo: int = 0,
                   window: int = 3) -> SuperficialCertificate:
    """Verify injectivity of multiplication by a on graded pieces.

    Checks that I^n/I^(n+1) -> I^(n+1)/I^(n+2) given by a is injective
    for every n in [n_lo, n_lo + window], via the colength identity
    lambda(I^n/I^(n+1)) = lambda((a*I^n + I^(n+2)) / I^(n+2)).
    """
    if not I.contains(a):
        raise NotInIdealError("candidate element is not in the ideal")
    if I.power(2).contains(a):
        raise InIdealSquareError(
            "candidate element lies in the square of the ideal")
    principal = ring.ideal([a])
    n_hi = n_lo + window
    for n in range(n_lo, n_hi + 1):
        dom = I.power(n + 1).colength() - I.power(n).colength()
        image_ideal = principal.product(I.power(n)).sum_with(I.power(n + 2))
        img = I.power(n + 2).colength() - image_ideal.colength()
        if dom != img:
            raise SearchExhaustedError(
                f"multiplication by the candidate is not injective at n={n}")
    return SuperficialCertificate(element=a, n_lo=n_lo, n_hi=n_hi)


def find_superficial(ring, I, seed: int = 0,
                     attempts: int = DEFAULT_ATTEMPTS, n_lo: int = 0,
                     window: int = 3) -> SuperficialCertificate:
    rng = random.Random(seed)
    last = None
    for attempt in range(attempts):
        elements, _ = ring.reduction_candidates(I, 1, rng)
        try:
            return is_superficial(ring, I, elements[0], n_lo, window)
        except (SearchExhaustedError, InIdealSquareError) as exc:
            last = exc
    raise SearchExhaustedError(
        f"no superficial element found in {attempts} attempts: {last}")


def superficial_sequence(ring, I, length: int, seed: int = 0,
                         attempts: int = DEFAULT_ATTEMPTS, n_lo: int = 0,
                         window: int = 3):
    """Certified superficial elements, each in the quotient by the
    previous ones.  Returns (certificates, stages): stages[i] is the
    (ring, ideal) pair after cutting the first i elements, so
    stages[0] = (ring, I) and len(stages) = length + 1.
    """
    if length > ring.dimension:
        raise ValueError("sequence longer than the dimension")
    certs: List[SuperficialCertificate] = []
    stages = [(ring, I)]
    cur_ring, cur_I = ring, I
    for i in range(length):
        cert = find_superficial(cur_ring, cur_I, seed=seed + i,
                                attempts=attempts, n_lo=n_lo, window=window)
        certs.append(cert)
        a = cert.element
        dim = cur_ring.dimension - 1
        if isinstance(cur_ring, QuotientRing):
            if cur_ring.modulus.contains(a):
                raise SearchExhaustedError(
                    "superficial candidate vanishes in the quotient; "
                    "not a regular sequence element")
            new_ring = cur_ring.quotient(cur_ring.base.ideal([a]), dim)
            image_gens = list(cur_I.image_gens)
        else:
            new_ring = QuotientRing(cur_ring, cur_ring.ideal([a]), dim)
            image_gens = list(cur_I.gens)
        cur_ring = new_ring
        cur_I = new_ring.ideal(image_gens)
        stages.append((cur_ring, cur_I))
    return certs, stages


def analytic_spread(ring, I, n_lo: int = 1, n_hi: int = 9,
                    margin: int = 3) -> int:
    """1 + eventual degree of n -> lambda(I^n / m*I^n) (fiber lengths)."""
    m = ring.maximal_ideal()
    fiber = []
    for n in range(n_lo, n_hi + 1):
        p = I.power(n)
        fiber.append(m.product(p).colength() - p.colength())
    return eventual_degree(fiber, margin=margin) + 1
