"""Depth verdicts for the associated graded ring and named criteria.

The central facts used, all verified exactly per instance:

 * sandwich:  sum_n len(I^n / J cap I^n)  <=  e1  <=
              sum_n len(I^n / J*I^(n-1)),  terms vanishing past r_J(I);
 * lower sum = e1   iff  G(I) is Cohen-Macaulay;
 * upper sum = e1   iff  depth G(I) >= d - 1;
 * the intersection condition (x_1..x_s) cap I^n = (x_1..x_s)*I^(n-1)
   (written VV_n here) certifies that the initial forms of the x_i form
   a G(I)-regular sequence, giving depth lower bounds below d - 1.

When neither equality holds the verdict reports a certified lower bound
from the longest VV-regular prefix of a superficial sequence; exact
depth below d - 1 is deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .errors import ContainmentViolatedError, SearchExhaustedError
from .hilbert import HilbertProfile, h_vector
from .reduction import ReductionCertificate


@dataclass
class CheckOutcome:
    name: str
    hypothesis: bool
    conclusion: Optional[bool]
    witnesses: Dict[str, object] = dc_field(default_factory=dict)

    def ok(self) -> bool:
        """True unless a stated hypothesis led to a failed conclusion."""
        return (not self.hypothesis) or bool(self.conclusion)

    def describe(self) -> dict:
        return {"name": self.name, "hypothesis": self.hypothesis,
                "conclusion": self.conclusion, "witnesses": self.witnesses}


@dataclass
class DepthVerdict:
    kind: str                  # cohen-macaulay | at-least-d-minus-1 | lower-bound
    dimension: int
    e1: int
    lower: int
    upper: int
    lower_terms: List[int]
    upper_terms: List[int]
    vv_depth: Optional[int] = None
    annotation: Optional[str] = None

    def depth_at_least(self) -> int:
        if self.kind == "cohen-macaulay":
            return self.dimension
        if self.kind == "at-least-d-minus-1":
            return self.dimension - 1
        return self.vv_depth or 0

    def describe(self) -> dict:
        out = {"kind": self.kind, "e1": self.e1,
               "lower_sum": self.lower, "upper_sum": self.upper,
               "lower_terms": self.lower_terms,
               "upper_terms": self.upper_terms,
               "depth_at_least": self.depth_at_least()}
        if self.vv_depth is not None:
            out["vv_depth"] = self.vv_depth
        if self.annotation:
            out["annotation"] = self.annotation
        return out


def hm_sums(I, cert: ReductionCertificate,
            vanish_margin: int = 2) -> Tuple[List[int], List[int]]:
    """Per-n terms (lower_n, upper_n) for n = 1..r, with the vanishing
    of both terms spot-checked for n = r+1..r+vanish_margin."""
    J = cert.ideal
    lower_terms: List[int] = []
    upper_terms: List[int] = []
    for n in range(1, cert.r + vanish_margin + 1):
        pn = I.power(n)
        cn = pn.colength()
        meet = J.intersect(pn)
        if not pn.contains_ideal(meet):
            raise ContainmentViolatedError("intersection escapes the power")
        low = meet.colength() - cn
        prod = J.product(I.power(n - 1))
        if not pn.contains_ideal(prod):
            raise ContainmentViolatedError(
                "J*I^(n-1) is not inside I^n; bad reduction certificate")
        up = prod.colength() - cn
        if low < 0 or up < 0 or low > up:
            raise ContainmentViolatedError(
                f"impossible term pair at n={n}: lower={low}, upper={up}")
        if n > cert.r and (low != 0 or up != 0):
            raise ContainmentViolatedError(
                f"terms fail to vanish past the reduction number at n={n}")
        if n <= cert.r:
            lower_terms.append(low)
            upper_terms.append(up)
    return lower_terms, upper_terms


def valabrega_valla_check(ring, I, elements: List, n_max: int) -> CheckOutcome:
    """Intersection condition (x_1..x_s) cap I^n = (x_1..x_s)*I^(n-1)
    for 1 <= n <= n_max; a finite-prefix certificate."""
    failures = []
    if not elements:
        return CheckOutcome("valabrega-valla", True, True,
                            {"elements": 0, "n_max": n_max})
    X = ring.ideal(elements)
    for a in elements:
        if not I.contains(a):
            raise ContainmentViolatedError("VV element is not in the ideal")
    for n in range(1, n_max + 1):
        meet = X.intersect(I.power(n))
        prod = X.product(I.power(n - 1))
        if not meet.contains_ideal(prod):
            raise ContainmentViolatedError(
                "X*I^(n-1) escapes X cap I^n (impossible for X inside I)")
        if not prod.contains_ideal(meet):
            failures.append(n)
    return CheckOutcome("valabrega-valla", True, not failures,
                        {"elements": len(elements), "n_max": n_max,
                         "failed_at": failures})


def depth_verdict(ring, I, cert: ReductionCertificate,
                  profile: HilbertProfile,
                  superficial_stages=None) -> DepthVerdict:
    d = ring.dimension
    e1 = profile.e1
    lower_terms, upper_terms = hm_sums(I, cert)
    lower, upper = sum(lower_terms), sum(upper_terms)
    if not (lower <= e1 <= upper):
        raise ContainmentViolatedError(
            f"sandwich violated: {lower} <= {e1} <= {upper} fails")
    annotation = None
    if lower == e1:
        kind = "cohen-macaulay"
    elif upper == e1:
        kind = "at-least-d-minus-1"
        if d == 1:
            annotation = ("dimension one: depth >= d-1 = 0 is vacuous; "
                          "G(I) is not Cohen-Macaulay here")
    else:
        kind = "lower-bound"
    vv_depth = None
    if kind == "lower-bound":
        # longest VV-regular initial subsequence of a superficial sequence
        vv_depth = 0
        if superficial_stages:
            certs, _ = superficial_stages
            n_max = cert.r + d + 2
            elements = []
            for c in certs:
                trial = elements + [c.element]
                if valabrega_valla_check(ring, I, trial, n_max).conclusion:
                    elements = trial
                else:
                    break
            vv_depth = len(elements)
    return DepthVerdict(kind=kind, dimension=d, e1=e1, lower=lower,
                        upper=upper, lower_terms=lower_terms,
                        upper_terms=upper_terms, vv_depth=vv_depth,
                        annotation=annotation)


def northcott_check(ring, I, cert: ReductionCertificate,
                    profile: HilbertProfile) -> CheckOutcome:
    e = profile.coefficients
    e0, e1 = e[0], profile.e1
    lam = I.colength()
    wit = {"e0": e0, "e1": e1, "colength": lam}
    ok = e1 >= 0 and e0 - e1 <= lam
    if e1 == 0:
        wit["parameter_case"] = True
        ok = ok and all(ei == 0 for ei in e[1:])
        ok = ok and I.mu() == ring.dimension and cert.r == 0
    return CheckOutcome("northcott", True, ok, wit)


def huneke_ooishi_check(ring, I, cert: ReductionCertificate,
                        profile: HilbertProfile) -> CheckOutcome:
    """Biconditional: e0 - e1 = len(R/I)  iff  r_J(I) <= 1; the equality
    branch additionally forces e_i = 0 for i >= 2 and H = P for n >= 1."""
    e = profile.coefficients
    e0, e1 = e[0], profile.e1
    lam = I.colength()
    equality = (e0 - e1 == lam)
    small_r = cert.r <= 1
    ok = (equality == small_r)
    wit = {"e0_minus_e1": e0 - e1, "colength": lam, "r": cert.r,
           "equality": equality}
    if ok and equality:
        ok = all(ei == 0 for ei in e[2:])
        ok = ok and all(profile.polynomial_value(n) == profile.table[n]
                        for n in range(1, len(profile.table)))
        wit["postulation"] = profile.postulation
    return CheckOutcome("huneke-ooishi", True, ok, wit)


def guerriere_check(ring, I, cert: ReductionCertificate,
                    verdict: DepthVerdict) -> CheckOutcome:
    """If sum over n >= 2 of len(J cap I^n / J*I^(n-1)) is exactly 1,
    the depth of G(I) is exactly d - 1."""
    terms = [u - l for l, u in zip(verdict.lower_terms, verdict.upper_terms)]
    total = sum(terms[1:]) if len(terms) > 1 else 0
    wit = {"sum": total, "terms_from_n2": terms[1:]}
    if total != 1:
        return CheckOutcome("guerriere", False, None, wit)
    ok = (verdict.upper == verdict.e1 and verdict.lower < verdict.e1)
    return CheckOutcome("guerriere", True, ok, wit)


def rees_cm_check(ring, I, cert: ReductionCertificate,
                  verdict: DepthVerdict) -> CheckOutcome:
    """Truncated lower-sum equality e1 = sum_{n=1}^{d-1} lower_n marks a
    Cohen-Macaulay Rees algebra; cross-checked against r <= d-1 and a
    Cohen-Macaulay G(I) verdict."""
    d = ring.dimension
    truncated = sum(verdict.lower_terms[:d - 1])
    wit = {"truncated_sum": truncated, "e1": verdict.e1, "r": cert.r}
    if truncated != verdict.e1:
        return CheckOutcome("rees-cm", False, None, wit)
    ok = cert.r <= d - 1 and verdict.kind == "cohen-macaulay"
    return CheckOutcome("rees-cm", True, ok, wit)


def abhyankar_classify(ring, m_profile: HilbertProfile,
                       cert: ReductionCertificate,
                       verdict: Optional[DepthVerdict]) -> CheckOutcome:
    """For the maximal ideal: e0 >= mu - d + 1; classify the boundary
    (minimal multiplicity, r <= 1) and the next case (almost minimal,
    series numerator 1 + (mu-d)z + z^s with depth >= d-1)."""
    m = ring.maximal_ideal()
    d = ring.dimension
    e0 = m_profile.multiplicity
    mu = m.mu()
    wit = {"e0": e0, "mu": mu, "d": d, "bound": mu - d + 1}
    ok = e0 >= mu - d + 1
    if e0 == mu - d + 1:
        wit["classification"] = "minimal-multiplicity"
        ok = ok and cert.r <= 1
        wit["r"] = cert.r
    elif e0 == mu - d + 2:
        wit["classification"] = "almost-minimal-multiplicity"
        hv = h_vector(m_profile)
        wit["h_vector"] = hv
        s = len(hv) - 1
        shape = (len(hv) >= 2 and hv[0] == 1 and hv[-1] == 1
                 and (s == 1 and hv[1] == mu - d + 1
                      or (hv[1] == mu - d
                          and all(h == 0 for h in hv[2:-1]))))
        wit["series_shape"] = shape
        ok = ok and shape
        if verdict is not None:
            ok = ok and verdict.depth_at_least() >= d - 1
    else:
        wit["classification"] = "general"
    return CheckOutcome("abhyankar", True, ok, wit)


def elias_check(ring, I, cert: ReductionCertificate,
                profile: HilbertProfile, verdict: DepthVerdict,
                t: int) -> CheckOutcome:
    """VV_n for n <= t with delta = len(I^(t+1)/J*I^t): small delta
    forces depth >= d - delta; large t (>= e0 - 1) forces G(I) CM."""
    d = ring.dimension
    J = cert.ideal
    vv = valabrega_valla_check(ring, I, list(cert.generators), t)
    top = I.power(t + 1)
    prod = J.product(I.power(t))
    delta = prod.colength() - top.colength()
    wit = {"t": t, "delta": delta, "vv_prefix": bool(vv.conclusion)}
    if not vv.conclusion:
        return CheckOutcome("elias", False, None, wit)
    hypothesis = delta <= min(1, d - 1) or t >= profile.multiplicity - 1
    if not hypothesis:
        return CheckOutcome("elias", False, None, wit)
    if t >= profile.multiplicity - 1 and delta == 0:
        ok = verdict.kind == "cohen-macaulay"
    elif delta == 0:
        ok = verdict.kind == "cohen-macaulay"
    else:
        ok = verdict.depth_at_least() >= d - delta
    return CheckOutcome("elias", True, ok, wit)


def sally_machine_check(ring, I, element, quotient_verdict,
                        n_max: int) -> CheckOutcome:
    """If depth G of the quotient by a superficial element is positive,
    the element's initial form is G(I)-regular, certified here through
    the intersection condition up to n_max."""
    if ring.dimension <= 1:
        return CheckOutcome("sally-machine", False, None,
                            {"reason": "dimension one: no quotient stage"})
    qd = quotient_verdict.depth_at_least()
    wit = {"quotient_depth_at_least": qd, "n_max": n_max}
    if qd < 1:
        return CheckOutcome("sally-machine", False, None, wit)
    vv = valabrega_valla_check(ring, I, [element], n_max)
    return CheckOutcome("sally-machine", True, bool(vv.conclusion), wit)
