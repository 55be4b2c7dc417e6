"""Deterministic randomized instance generators shared by the test suite
and the bundled corpus.

Everything is driven by a fixed seed so the corpus files, the in-process
property tests, and any rerun of the generator produce the same
instances.
"""

from math import gcd
from random import Random
from typing import Dict, List, Sequence, Tuple

DIM1_COUNT = 60
DIM2_COUNT = 24
FROBENIUS_CAP = 60


def _frobenius(gens: Sequence[int]) -> int:
    bound = max(gens) * min(gens) + 1
    table = [False] * bound
    table[0] = True
    for n in range(1, bound):
        table[n] = any(n >= a and table[n - a] for a in gens)
    gapset = [n for n in range(bound) if not table[n]]
    return max(gapset) if gapset else -1


def _members_between(gens: Sequence[int], lo: int, hi: int) -> List[int]:
    table = [False] * (hi + 1)
    table[0] = True
    for n in range(1, hi + 1):
        table[n] = any(n >= a and table[n - a] for a in gens)
    return [n for n in range(max(lo, 1), hi + 1) if table[n]]


def dim1_instances(count: int = DIM1_COUNT) -> List[Dict[str, object]]:
    """Numerical-semigroup rings with monomial ideals: 2-4 generators
    <= 15, Frobenius number capped so exhaustive oracles stay cheap."""
    rng = Random(20260824)
    out: List[Dict[str, object]] = []
    while len(out) < count:
        k = rng.choice([2, 3, 3, 4])
        gens = sorted(rng.sample(range(2, 16), k))
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1 or _frobenius(gens) > FROBENIUS_CAP:
            continue
        a1 = gens[0]
        pool = _members_between(gens, a1, a1 + 20)
        exps = sorted(rng.sample(pool, min(len(pool), rng.choice([1, 2, 2, 3]))))
        if min(exps) > 3 * a1:
            continue
        out.append({
            "schema": 1,
            "ring": {"kind": "numerical_semigroup", "generators": gens},
            "ideal": {"gens": [f"t^{e}" for e in exps]},
            "seed": len(out) + 1,
        })
    return out


def _random_form(rng: Random, degree: int) -> str:
    terms = []
    for i in range(degree + 1):
        c = rng.randrange(0, 9)
        if c == 0:
            continue
        mono = []
        if i:
            mono.append("x" if i == 1 else f"x^{i}")
        if degree - i:
            j = degree - i
            mono.append("y" if j == 1 else f"y^{j}")
        terms.append(f"{c}*" + "*".join(mono))
    if not terms:
        return _random_form(rng, degree)
    return " + ".join(terms)


def dim2_instances(count: int = DIM2_COUNT) -> List[Dict[str, object]]:
    """Equigenerated m-primary ideals in k[x,y] over a large prime field:
    pure powers x^d, y^d guarantee m-primariness, plus 1-2 random forms
    of the same degree."""
    rng = Random(20260825)
    out: List[Dict[str, object]] = []
    for i in range(count):
        delta = 2 if i % 3 else 3
        gens = [f"x^{delta}", f"y^{delta}"]
        for _ in range(rng.choice([1, 1, 2])):
            gens.append(_random_form(rng, delta))
        out.append({
            "schema": 1,
            "ring": {"kind": "graded_polynomial", "vars": ["x", "y"],
                     "field": {"kind": "prime-field", "p": 32003}},
            "ideal": {"gens": gens},
            "seed": i + 1,
        })
    return out


def all_instances() -> List[Tuple[str, Dict[str, object]]]:
    named = [(f"rnd-sg-{i:03d}", req)
             for i, req in enumerate(dim1_instances())]
    named += [(f"rnd-gr-{i:03d}", req)
              for i, req in enumerate(dim2_instances())]
    return named
