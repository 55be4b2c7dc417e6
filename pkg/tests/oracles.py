"""Independent brute-force oracles used to freeze expected values.

Nothing here imports the package under test: semigroup quantities come
from exhaustive order-set enumeration, graded monomial quantities from
lattice-point counting.  Values frozen in the test suite and the corpus
sidecars were generated from these functions.
"""

from itertools import product as iproduct
from math import gcd
from typing import Dict, List, Sequence, Set, Tuple


# ---------------------------------------------------------------- dim 1

def semigroup_members(gens: Sequence[int], bound: int) -> Set[int]:
    table = [False] * bound
    table[0] = True
    for n in range(1, bound):
        table[n] = any(n >= a and table[n - a] for a in gens)
    return {n for n in range(bound) if table[n]}


def semigroup_frobenius(gens: Sequence[int]) -> int:
    bound = max(gens) * min(gens) + 1
    members = semigroup_members(gens, bound)
    gapset = [n for n in range(bound) if n not in members]
    return max(gapset) if gapset else -1


def order_set(sg: Sequence[int], ideal_exps: Sequence[int],
              bound: int) -> Set[int]:
    members = semigroup_members(sg, bound)
    out: Set[int] = set()
    for g in ideal_exps:
        out.update(g + s for s in members if g + s < bound)
    return out


def power_exps(ideal_exps: Sequence[int], n: int) -> List[int]:
    if n == 0:
        return [0]
    cur = {0}
    for _ in range(n):
        cur = {a + g for a in cur for g in ideal_exps}
    return sorted(cur)


def sg_colength(sg: Sequence[int], ideal_exps: Sequence[int],
                bound: int) -> int:
    members = semigroup_members(sg, bound)
    oset = order_set(sg, ideal_exps, bound)
    assert all(n in oset for n in range(bound - min(sg), bound)), \
        "bound too small for a stable colength"
    return len(members - oset)


def sg_hilbert(sg: Sequence[int], ideal_exps: Sequence[int],
               n_max: int) -> List[int]:
    bound = (semigroup_frobenius(sg) + 1
             + max(ideal_exps) * (n_max + 1) + max(sg))
    return [sg_colength(sg, power_exps(ideal_exps, n), bound)
            for n in range(n_max + 1)]


def sg_e0_e1_postulation(table: List[int]) -> Tuple[int, int, int]:
    top = len(table) - 1
    e0 = table[top] - table[top - 1]
    e1 = e0 * top - table[top]
    assert table[top - 1] == e0 * (top - 1) - e1, "tail not linear yet"
    post = -1
    for n in range(top, -1, -1):
        if table[n] != e0 * n - e1:
            post = n
            break
    return e0, e1, post


def sg_reduction_number(sg: Sequence[int], ideal_exps: Sequence[int],
                        r_max: int = 30) -> int:
    """r for the monomial reduction (t^v), v = min generator order."""
    v = min(ideal_exps)
    bound = (semigroup_frobenius(sg) + 1
             + max(ideal_exps) * (r_max + 2) + max(sg))
    for r in range(r_max + 1):
        left = order_set(sg, [v + e for e in power_exps(ideal_exps, r)],
                         bound)
        right = order_set(sg, power_exps(ideal_exps, r + 1), bound)
        if left == right:
            return r
    raise AssertionError("no reduction number found")


def sg_hm_sums(sg: Sequence[int], ideal_exps: Sequence[int],
               r: int) -> Tuple[List[int], List[int]]:
    """Per-n (lower, upper) terms for J = (t^v), n = 1..r."""
    v = min(ideal_exps)
    bound = (semigroup_frobenius(sg) + 1
             + max(ideal_exps) * (r + 3) + max(sg) + v)
    members = semigroup_members(sg, bound)
    j_oset = order_set(sg, [v], bound)
    lower, upper = [], []
    for n in range(1, r + 1):
        pn = order_set(sg, power_exps(ideal_exps, n), bound)
        meet = j_oset & pn
        prod = order_set(sg, [v + e for e in power_exps(ideal_exps, n - 1)],
                         bound)
        lower.append(len(pn - meet))
        upper.append(len(pn - prod))
    return lower, upper


# ------------------------------------------------------------- graded

def monomial_power(gens: Sequence[Tuple[int, ...]],
                   n: int) -> List[Tuple[int, ...]]:
    if n == 0:
        return [tuple([0] * len(gens[0]))]
    cur = {tuple([0] * len(gens[0]))}
    for _ in range(n):
        cur = {tuple(a + b for a, b in zip(m, g))
               for m in cur for g in gens}
    return sorted(cur)


def monomial_colength(gens: Sequence[Tuple[int, ...]]) -> int:
    nvars = len(gens[0])
    # the staircase fits inside the box [0, D)^nvars for D = max total deg
    D = max(sum(g) for g in gens) + 1
    count = 0
    for m in iproduct(range(D), repeat=nvars):
        if not any(all(x >= y for x, y in zip(m, g)) for g in gens):
            count += 1
    return count


def monomial_hilbert(gens: Sequence[Tuple[int, ...]],
                     n_max: int) -> List[int]:
    return [monomial_colength(monomial_power(gens, n)) if n else 0
            for n in range(n_max + 1)]


def fit_dim2(table: List[int]) -> Tuple[int, int, int, int]:
    """(e0, e1, e2, postulation) from the quadratic tail of a dim-2
    Hilbert-Samuel table, using exact differences."""
    top = len(table) - 1
    d2 = (table[top] - 2 * table[top - 1] + table[top - 2])
    e0 = d2
    # P(n) = e0*C(n+1,2) - e1*n + e2
    e1 = e0 * (top + 1) * top // 2 - e0 * top * (top - 1) // 2 \
        - (table[top] - table[top - 1])
    e2 = table[top] - (e0 * (top + 1) * top // 2 - e1 * top)
    assert table[top - 2] == e0 * (top - 1) * (top - 2) // 2 \
        - e1 * (top - 2) + e2
    post = -1
    for n in range(top, -1, -1):
        if table[n] != e0 * (n + 1) * n // 2 - e1 * n + e2:
            post = n
            break
    return e0, e1, e2, post
