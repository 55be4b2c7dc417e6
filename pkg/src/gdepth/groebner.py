"""Buchberger's algorithm, normal forms, and standard-monomial counting.

Normal-pair selection with Buchberger's two criteria; no F4/F5 — every
instance the engine meets is desk scale (<= 4 variables, degrees in the
tens).  The output basis is the unique reduced Groebner basis for the
given order, sorted by decreasing leading monomial.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .polynomials import (DEGREVLEX, Monomial, MonomialOrder, SparsePolynomial,
                          mono_div, mono_divides, mono_lcm, mono_mul,
                          monomials_of_degree)
from .errors import NotHomogeneousError


def normal_form(f: SparsePolynomial, basis: Sequence[SparsePolynomial],
                order: MonomialOrder = DEGREVLEX) -> SparsePolynomial:
    """Fully reduce f: no term of the result is divisible by a basis lead."""
    if not basis:
        return f
    fld = f.field
    leads = [(g.lead_monomial(order), g.lead_coefficient(order), g)
             for g in basis if not g.is_zero()]
    work = f
    remainder = SparsePolynomial.zero(fld, f.nvars)
    while not work.is_zero():
        m = work.lead_monomial(order)
        c = work.terms[m]
        for lm, lc, g in leads:
            q = mono_div(m, lm)
            if q is not None:
                work = work - g.term_mul(q, fld.div(c, lc))
                break
        else:
            remainder = remainder + SparsePolynomial.monomial(fld, f.nvars, m, c)
            work = work - SparsePolynomial.monomial(fld, f.nvars, m, c)
    return remainder


def s_polynomial(f: SparsePolynomial, g: SparsePolynomial,
                 order: MonomialOrder) -> SparsePolynomial:
    fld = f.field
    lf, lg = f.lead_monomial(order), g.lead_monomial(order)
    lcm = mono_lcm(lf, lg)
    qf = mono_div(lcm, lf)
    qg = mono_div(lcm, lg)
    return (f.term_mul(qf, fld.inv(f.lead_coefficient(order)))
            - g.term_mul(qg, fld.inv(g.lead_coefficient(order))))


def _interreduce(basis: List[SparsePolynomial],
                 order: MonomialOrder) -> List[SparsePolynomial]:
    # minimize: drop elements whose lead is divisible by another lead
    basis = [g for g in basis if not g.is_zero()]
    leads = [g.lead_monomial(order) for g in basis]
    keep = []
    for i, g in enumerate(basis):
        li = leads[i]
        if any(j != i and mono_divides(leads[j], li)
               and (leads[j] != li or j < i) for j in range(len(basis))):
            continue
        keep.append(g)
    # tail-reduce each survivor against the others
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        out.append(normal_form(g, others, order).monic(order))
    out = [g for g in out if not g.is_zero()]
    out.sort(key=lambda g: order.key(g.lead_monomial(order)), reverse=True)
    return out


def buchberger(generators: Sequence[SparsePolynomial],
               order: MonomialOrder = DEGREVLEX) -> List[SparsePolynomial]:
    """Reduced Groebner basis of the ideal spanned by the generators."""
    gens = [g.monic(order) for g in generators if not g.is_zero()]
    if not gens:
        return []
    if all(len(g.terms) == 1 for g in gens):
        # monomial ideal: minimizing the generating set already reduces it
        return _interreduce(gens, order)
    import heapq

    basis: List[SparsePolynomial] = []
    leads: List[Monomial] = []
    for g in gens:
        h = normal_form(g, basis, order)
        if not h.is_zero():
            basis.append(h.monic(order))
            leads.append(basis[-1].lead_monomial(order))

    heap: List[tuple] = []
    for j in range(len(basis)):
        for i in range(j):
            lcm = mono_lcm(leads[i], leads[j])
            heapq.heappush(heap, (order.key(lcm), i, j))
    done = set()
    while heap:
        # normal selection: smallest lcm in the order
        _, i, j = heapq.heappop(heap)
        done.add((i, j))
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li, lj)
        if mono_mul(li, lj) == lcm:
            continue  # coprime leads: S-polynomial reduces to zero
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(leads[k], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    chain = True
                    break
        if chain:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        basis.append(h.monic(order))
        leads.append(basis[-1].lead_monomial(order))
        new = len(basis) - 1
        for k in range(new):
            lcm = mono_lcm(leads[k], leads[new])
            heapq.heappush(heap, (order.key(lcm), k, new))
    return _interreduce(basis, order)


def leading_monomials(basis: Sequence[SparsePolynomial],
                      order: MonomialOrder = DEGREVLEX) -> List[Monomial]:
    return [g.lead_monomial(order) for g in basis if not g.is_zero()]


def graded_piece_dimension(basis: Sequence[SparsePolynomial], j: int,
                           nvars: Optional[int] = None) -> int:
    """Number of degree-j standard monomials of a homogeneous ideal.

    This is dim_k (R/I)_j when the basis is a degrevlex Groebner basis of
    a homogeneous ideal I.
    """
    for g in basis:
        if not g.is_homogeneous():
            raise NotHomogeneousError("graded piece count needs a homogeneous basis")
    if nvars is None:
        if not basis:
            raise ValueError("need nvars for an empty basis")
        nvars = basis[0].nvars
    leads = leading_monomials(basis)
    count = 0
    for m in monomials_of_degree(nvars, j):
        if not any(mono_divides(lm, m) for lm in leads):
            count += 1
    return count
