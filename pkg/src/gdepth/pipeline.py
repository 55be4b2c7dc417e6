"""Full analysis pipeline: Hilbert profile, reduction, depth verdict,
named criteria, Sally identities, and (dimension >= 2) superficial
quotient analysis — assembled into one JSON-serializable report.

Reports are deterministic given the request and seed: no wall-clock data
is placed in the JSON (timing is shown on the human-readable side only),
so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional

from . import criteria, hilbert, reduction, sally
from .errors import GdepthError, SearchExhaustedError
from .parsing import AnalysisRequest, build_ideal, build_ring

SCHEMA = 1


def _diag(exc: Exception) -> dict:
    return {"error": type(exc).__name__, "message": str(exc)}


def analyze(request: AnalysisRequest) -> dict:
    """Run every stage; failures become structured diagnostics so the
    report can be partial but is always produced for request errors
    downstream of parsing."""
    report: Dict[str, object] = {"schema": SCHEMA,
                                 "request": request.to_json_dict()}
    ring = build_ring(request.ring_spec, request.field_override)
    d = ring.dimension
    report["ring"] = ring.describe()
    I = build_ideal(ring, request.ideal_gens)
    report["ideal"] = I.describe()
    report["colength"] = I.colength()

    profile = None
    try:
        profile = hilbert.compute_profile(I, d, max_table=request.max_power)
        report["hilbert"] = profile.describe()
    except GdepthError as exc:
        report["hilbert"] = _diag(exc)

    cert = None
    try:
        cert = reduction.minimal_reduction(ring, I, seed=request.seed,
                                           attempts=request.attempts)
        report["reduction"] = cert.describe(ring)
    except GdepthError as exc:
        report["reduction"] = _diag(exc)

    sup_stages = None
    if d >= 2 and cert is not None:
        try:
            sup_stages = reduction.superficial_sequence(
                ring, I, d - 1, seed=request.seed,
                attempts=request.attempts, n_lo=0, window=cert.r + 2)
            certs, _stages = sup_stages
            report["superficial"] = [c.describe(ring) for c in certs]
        except GdepthError as exc:
            report["superficial"] = _diag(exc)

    verdict = None
    if profile is not None and cert is not None:
        try:
            verdict = criteria.depth_verdict(ring, I, cert, profile,
                                             superficial_stages=sup_stages)
            report["verdict"] = verdict.describe()
        except GdepthError as exc:
            report["verdict"] = _diag(exc)

    checks: List[dict] = []
    if profile is not None and cert is not None:
        try:
            checks.append(criteria.northcott_check(ring, I, cert,
                                                   profile).describe())
            checks.append(criteria.huneke_ooishi_check(ring, I, cert,
                                                       profile).describe())
            if verdict is not None:
                checks.append(criteria.guerriere_check(
                    ring, I, cert, verdict).describe())
                checks.append(criteria.rees_cm_check(
                    ring, I, cert, verdict).describe())
                checks.append(criteria.elias_check(
                    ring, I, cert, profile, verdict, t=cert.r).describe())
            n_max = cert.r + d + 2
            checks.append(criteria.valabrega_valla_check(
                ring, I, list(cert.generators), n_max).describe())
            if I.equals(ring.maximal_ideal()):
                checks.append(criteria.abhyankar_classify(
                    ring, profile, cert, verdict).describe())
        except GdepthError as exc:
            checks.append(_diag(exc))
    report["checks"] = checks

    if profile is not None and cert is not None:
        try:
            # the shifted fit needs 2(d-1)+4 tail entries plus margin
            n_max = max(cert.r + 2, 2 * d + 3)
            sprof = sally.sally_table(I, cert, n_max, d)
            report["sally"] = sprof.describe()
            report["sally"]["vasconcelos"] = sally.vasconcelos_identity_check(
                I, cert, profile, sprof).describe()
            if verdict is not None:
                report["sally"]["vaz_pinto"] = sally.vaz_pinto_check(
                    I, cert, sprof, verdict).describe()
        except GdepthError as exc:
            report["sally"] = _diag(exc)

    if sup_stages is not None and profile is not None:
        try:
            certs, stages = sup_stages
            qring, qI = stages[-1]
            qprofile = hilbert.compute_profile(qI, qring.dimension,
                                               max_table=request.max_power)
            quotient: Dict[str, object] = {"dimension": qring.dimension,
                                           "hilbert": qprofile.describe()}
            # coefficient transfer: e_i agree for i <= d-2, and e_(d-1)
            # too since these backends are domains (zero annihilators)
            quotient["transfer_ok"] = (
                qprofile.coefficients[:qring.dimension]
                == profile.coefficients[:qring.dimension])
            try:
                qcert = reduction.minimal_reduction(
                    qring, qI, seed=request.seed, attempts=request.attempts)
                qverdict = criteria.depth_verdict(qring, qI, qcert, qprofile)
                quotient["verdict"] = qverdict.describe()
                if len(certs) == d - 1:
                    outcome = criteria.sally_machine_check(
                        ring, I, certs[-1].element, qverdict,
                        n_max=cert.r + d + 2)
                    quotient["sally_machine"] = outcome.describe()
            except GdepthError as exc:
                quotient["verdict"] = _diag(exc)
            report["quotient"] = quotient
        except GdepthError as exc:
            report["quotient"] = _diag(exc)

    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_human(report: dict) -> str:
    lines: List[str] = []
    ring = report.get("ring", {})
    lines.append(f"ring: {json.dumps(ring, sort_keys=True)}")
    lines.append(f"ideal gens: {report.get('ideal', {}).get('gens')}")
    lines.append(f"colength: {report.get('colength')}")
    hil = report.get("hilbert", {})
    if "coefficients" in hil:
        lines.append(f"e = {hil['coefficients']}   "
                     f"P(n) = {hil['polynomial']}")
        lines.append(f"H table: {hil['table']}")
        lines.append(f"postulation: {hil['postulation']}")
    else:
        lines.append(f"hilbert: {hil}")
    red = report.get("reduction", {})
    if "r" in red:
        lines.append(f"reduction: r = {red['r']}  J = {red['generators']}")
    else:
        lines.append(f"reduction: {red}")
    verdict = report.get("verdict", {})
    if "kind" in verdict:
        lines.append(f"verdict: {verdict['kind']}  "
                     f"(lower {verdict['lower_sum']} <= e1 {verdict['e1']} "
                     f"<= upper {verdict['upper_sum']})")
        if verdict.get("annotation"):
            lines.append(f"  note: {verdict['annotation']}")
    else:
        lines.append(f"verdict: {verdict}")
    for chk in report.get("checks", []):
        if "name" in chk:
            if chk["name"] == "valabrega-valla":
                # a measurement, not a theorem check: failing the
                # intersection condition is informative, not an error
                status = "holds" if chk["conclusion"] else "does not hold"
            else:
                status = ("pass" if (not chk["hypothesis"]
                                     or chk["conclusion"]) else "FAIL")
            applic = "" if chk["hypothesis"] else " (hypothesis false)"
            lines.append(f"check {chk['name']}: {status}{applic}")
        else:
            lines.append(f"check error: {chk}")
    sal = report.get("sally", {})
    if "coefficients" in sal:
        lines.append(f"sally: s = {sal['coefficients']}  "
                     f"zero = {sal['is_zero']}")
    quo = report.get("quotient")
    if isinstance(quo, dict) and "transfer_ok" in quo:
        lines.append(f"quotient transfer ok: {quo['transfer_ok']}")
    return "\n".join(lines) + "\n"
