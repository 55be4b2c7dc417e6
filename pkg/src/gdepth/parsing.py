"""Generator-string grammar and analysis-request parsing.

Grammar for generator strings (explicit operators only):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := INT | VAR ['^' INT]

The semigroup backend uses the single variable t; exponents must lie in
the semigroup.  The graded backend accepts the declared variable names.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .errors import NotPrimaryError, ParseError, UnsupportedRingError
from .fields import DEFAULT_PRIME, field_from_spec
from .graded import GradedRing
from .polynomials import SparsePolynomial
from .semigroup import SemigroupRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|"
                    r"(\+)|(-)|(.))")


def _tokenize(text: str, line: int) -> List[Tuple[str, object, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            out.append(("int", int(m.group(1)), col))
        elif m.group(2):
            out.append(("var", m.group(2), col))
        elif m.group(3):
            out.append(("pow", "^", col))
        elif m.group(4):
            out.append(("mul", "*", col))
        elif m.group(5):
            out.append(("plus", "+", col))
        elif m.group(6):
            out.append(("minus", "-", col))
        elif m.group(7) and m.group(7).strip():
            raise ParseError(f"unexpected character {m.group(7)!r}",
                             line=line, column=col)
        pos = m.end()
    return out


Term = Tuple[int, Dict[str, int]]  # (integer coefficient, var -> exponent)


def parse_terms(text: str, line: int = 1) -> List[Term]:
    tokens = _tokenize(text, line)
    if not tokens:
        raise ParseError("empty generator string", line=line, column=1)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else ("end", None,
                                                  len(text) + 1)

    def factor() -> Term:
        nonlocal i
        kind, val, col = peek()
        if kind == "int":
            i += 1
            return (val, {})
        if kind == "var":
            i += 1
            exp = 1
            if peek()[0] == "pow":
                i += 1
                k, v, c = peek()
                if k != "int":
                    raise ParseError("expected integer exponent after '^'",
                                     line=line, column=c)
                exp = v
                i += 1
            return (1, {val: exp})
        raise ParseError("expected a number or variable", line=line,
                         column=col)

    def term() -> Term:
        nonlocal i
        coeff, vars_ = factor()
        while peek()[0] == "mul":
            i += 1
            c2, v2 = factor()
            coeff *= c2
            for name, e in v2.items():
                vars_[name] = vars_.get(name, 0) + e
        return (coeff, vars_)

    terms: List[Term] = []
    sign = 1
    if peek()[0] == "minus":
        sign = -1
        i += 1
    while True:
        c, v = term()
        terms.append((sign * c, v))
        kind, _, col = peek()
        if kind == "end":
            break
        if kind == "plus":
            sign = 1
        elif kind == "minus":
            sign = -1
        else:
            raise ParseError("expected '+', '-', or end of input",
                             line=line, column=col)
        i += 1
    return terms


def element_from_string(ring, text: str, line: int = 1):
    """Parse a generator string into a backend element."""
    terms = parse_terms(text, line)
    fld = ring.field
    if isinstance(ring, SemigroupRing):
        coeffs: Dict[int, object] = {}
        for c, vars_ in terms:
            for name in vars_:
                if name != "t":
                    raise ParseError(
                        f"unknown variable {name!r}; this ring uses t",
                        line=line, column=1)
            deg = vars_.get("t", 0)
            if not ring.semigroup.contains(deg):
                raise ParseError(
                    f"t^{deg} is not in the ring (gap of the semigroup "
                    f"{ring.semigroup.gens})", line=line, column=1)
            prev = coeffs.get(deg, fld.zero())
            coeffs[deg] = fld.add(prev, fld.from_int(c))
        return ring.element(coeffs)
    if isinstance(ring, GradedRing):
        index = {name: k for k, name in enumerate(ring.names)}
        poly_terms: Dict[tuple, object] = {}
        for c, vars_ in terms:
            mono = [0] * ring.nvars
            for name, e in vars_.items():
                if name not in index:
                    raise ParseError(
                        f"unknown variable {name!r}; ring variables are "
                        f"{ring.names}", line=line, column=1)
                mono[index[name]] += e
            key = tuple(mono)
            prev = poly_terms.get(key, fld.zero())
            poly_terms[key] = fld.add(prev, fld.from_int(c))
        return SparsePolynomial(fld, ring.nvars, poly_terms)
    raise UnsupportedRingError(f"cannot parse elements for {ring!r}")


@dataclass
class AnalysisRequest:
    ring_spec: dict
    ideal_gens: List[str]
    seed: int = 0
    max_power: int = 80
    attempts: int = 8
    field_override: Optional[dict] = None

    def to_json_dict(self) -> dict:
        return {"schema": 1, "ring": self.ring_spec,
                "ideal": {"gens": list(self.ideal_gens)},
                "seed": self.seed, "max_power": self.max_power,
                "attempts": self.attempts}


def parse_request(text: str) -> AnalysisRequest:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno,
                         column=exc.colno)
    if not isinstance(data, dict):
        raise ParseError("request must be a JSON object", line=1, column=1)
    schema = data.get("schema", 1)
    if schema != 1:
        raise ParseError(f"unsupported schema {schema!r}", line=1, column=1)
    ring = data.get("ring")
    if not isinstance(ring, dict) or "kind" not in ring:
        raise ParseError("missing or malformed 'ring' section",
                         line=1, column=1)
    ideal = data.get("ideal")
    if (not isinstance(ideal, dict) or "gens" not in ideal
            or not isinstance(ideal["gens"], list) or not ideal["gens"]):
        raise ParseError("missing or malformed 'ideal.gens'",
                         line=1, column=1)
    return AnalysisRequest(
        ring_spec=ring,
        ideal_gens=[str(g) for g in ideal["gens"]],
        seed=int(data.get("seed", 0)),
        max_power=int(data.get("max_power", 80)),
        attempts=int(data.get("attempts", 8)),
    )


def build_ring(spec: dict, field_override: Optional[dict] = None):
    kind = spec.get("kind")
    fspec = field_override or spec.get("field") or {"kind": "prime-field",
                                                    "p": DEFAULT_PRIME}
    fld = field_from_spec(fspec)
    if kind == "numerical_semigroup":
        gens = spec.get("generators")
        if not isinstance(gens, list) or not gens:
            raise ParseError("numerical_semigroup needs 'generators'",
                             line=1, column=1)
        return SemigroupRing([int(g) for g in gens], fld)
    if kind == "graded_polynomial":
        names = spec.get("vars")
        if not isinstance(names, list) or not names:
            raise ParseError("graded_polynomial needs 'vars'",
                             line=1, column=1)
        return GradedRing([str(v) for v in names], fld)
    raise UnsupportedRingError(f"unknown ring kind {kind!r}")


def build_ideal(ring, gen_strings: List[str]):
    gens = [element_from_string(ring, g, line=i + 1)
            for i, g in enumerate(gen_strings)]
    ideal = ring.ideal(gens)
    if not ideal.is_m_primary():
        raise NotPrimaryError(
            "the ideal is not m-primary; analysis requires finite colength")
    return ideal
