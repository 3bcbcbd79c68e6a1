"""Invariant sweeps over small symmetric groups.

Each suite returns a list of :class:`Check` records; the CLI prints them
and exits nonzero if any fails.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import expand as ex
from .evaluate import (
    DIFF,
    ID,
    SWAP,
    formula_P,
    formula_Q,
    leading_monomial_formula,
    phi,
    phi_inverse,
    phi_inverse_bruteforce,
    right_normed_eval,
    schubert_direct,
    schubert_word_direct,
    staircase_monomials,
)
from .poly import (
    Polynomial,
    divided_difference,
    divided_difference_word,
    exponent,
    in_staircase,
    leading_monomial,
    leading_term,
    order_key,
    swap_action,
    trim,
)
from .words import (
    from_one_line,
    inverse,
    inversions,
    is_left_reduced,
    is_reduced,
    multiply,
    normal_form,
    permutations,
    random_permutation,
    rewrite_to_canonical,
    to_one_line,
    word_to_image,
)

SUITES = ("rewrite", "nilcoxeter", "formulas", "bijection", "structure")
DEFAULT_MAX_RANK = 6


def max_rank_cap() -> int:
    raw = os.environ.get("SCHUBERT_MAX_RANK", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_RANK
    except ValueError:
        return DEFAULT_MAX_RANK


@dataclass
class Check:
    name: str
    passed: bool
    cases: int
    counterexample: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.cases} cases)"
        return f"FAIL {self.name} ({self.cases} cases): {self.counterexample}"


def _run(name: str, cases: Iterable, test: Callable[..., bool], show: Callable = repr) -> Check:
    count = 0
    for case in cases:
        count += 1
        if not test(case):
            return Check(name, False, count, show(case))
    return Check(name, True, count)


# --- independent oracle for divided differences ----------------------------------------


def divided_difference_oracle(i: int, f: Polynomial) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})`` by synthetic division in ``x_i``.

    Shares nothing with the termwise kernel beyond polynomial addition and
    multiplication; raises if the division leaves a remainder.
    """
    g = f - swap_action(i, f)
    # g = sum_a c_a * x_i^a with c_a free of x_i
    by_power: dict[int, Polynomial] = {}
    for m, c in g.items():
        a = exponent(m, i)
        rest = list(m) + [0] * max(0, i - len(m))
        rest[i - 1] = 0
        by_power[a] = by_power.get(a, Polynomial()) + Polynomial({trim(rest): c})
    if not by_power:
        return Polynomial()
    top = max(by_power)
    root = Polynomial.x(i + 1)
    quotient = Polynomial()
    carry = Polynomial()
    xi = Polynomial.x(i)
    for a in range(top, 0, -1):
        carry = by_power.get(a, Polynomial()) + root * carry
        quotient = quotient + carry * xi ** (a - 1)
    remainder = by_power.get(0, Polynomial()) + root * carry
    if remainder:
        raise ArithmeticError(f"x{i} - x{i + 1} does not divide {g}")
    return quotient


def random_polynomial(rng: random.Random, nvars: int = 8, max_degree: int = 10, max_terms: int = 6) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        e = [0] * nvars
        for _ in range(d):
            e[rng.randrange(nvars)] += 1
        terms[trim(e)] = rng.randint(-9, 9)
    return Polynomial(terms)


# --- suites ---------------------------------------------------------------------------------


def suite_rewrite(max_rank: int, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    out = []
    n_conf = min(max_rank, 7)
    words = []
    for _ in range(300):
        n = rng.randint(2, max(n_conf, 2))
        words.append((n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 30)))))

    def confluent(case):
        n, w = case
        base = rewrite_to_canonical(w, n)
        alt = rewrite_to_canonical(w, n, rng=random.Random(hash(w)))
        return base == alt == normal_form(w, n)

    out.append(_run("confluence (leftmost vs random vs one-line)", words, confluent))

    def reduced_iff_length(case):
        n, w = case
        same_length = len(w) == inversions(word_to_image(w, n))
        return is_reduced(w, n) == same_length

    out.append(_run("is_reduced iff length preserved", words, reduced_iff_length))

    def count_ok(n):
        canon = {to_one_line(u).image for u in permutations(n)}
        return len(canon) == math.factorial(n) == len(set(itertools.permutations(range(1, n + 1))) & canon)

    out.append(_run("|B_s^n| = n!", range(1, min(max_rank, 6) + 1), count_ok))

    def tfae(case):
        t, u = case
        return is_left_reduced(t, u) == is_reduced((t,) + u.word(), u.rank)

    cases = [(t, u) for n in range(2, min(max_rank, 5) + 1) for u in permutations(n) for t in range(1, n)]
    out.append(_run("left-reduced test agrees with rewriting", cases, tfae))

    def one_line(u):
        p = to_one_line(u)
        return from_one_line(p) == u and inversions(p.image) == u.length()

    cases = [u for n in range(1, min(max_rank, 6) + 1) for u in permutations(n)]
    out.append(_run("one-line round trip and length", cases, one_line))

    def stability(case):
        a, b = case
        n = a.rank
        return (
            multiply(a, b).embed(n + 1) == multiply(a.embed(n + 1), b.embed(n + 1))
            and inverse(a).embed(n + 1) == inverse(a.embed(n + 1))
            and a.embed(n + 1).length() == a.length()
        )

    pairs = []
    for _ in range(200):
        n = rng.randint(1, max(n_conf, 1))
        pairs.append((random_permutation(n, rng), random_permutation(n, rng)))
    out.append(_run("embedding commutes with product, inverse, length", pairs, stability))
    return out


def suite_nilcoxeter(count: int = 1000, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    polys = [(rng.randint(1, 7), random_polynomial(rng), random_polynomial(rng, max_degree=4)) for _ in range(count)]
    d = divided_difference
    checks = [
        ("d_i d_i = 0", lambda c: not d(c[0], d(c[0], c[1]))),
        (
            "braid d_i d_(i+1) d_i = d_(i+1) d_i d_(i+1)",
            lambda c: divided_difference_word((c[0], c[0] + 1, c[0]), c[1])
            == divided_difference_word((c[0] + 1, c[0], c[0] + 1), c[1]),
        ),
        (
            "d_i d_j = d_j d_i for |i-j| > 1",
            lambda c: d(c[0], d(c[0] + 2, c[1])) == d(c[0] + 2, d(c[0], c[1])),
        ),
        (
            "Leibniz rule",
            lambda c: d(c[0], c[1] * c[2]) == d(c[0], c[1]) * c[2] + swap_action(c[0], c[1]) * d(c[0], c[2]),
        ),
        ("termwise formula matches rational quotient", lambda c: d(c[0], c[1]) == divided_difference_oracle(c[0], c[1])),
        (
            "d_i kills s_i-invariants",
            lambda c: not d(c[0], c[1] + swap_action(c[0], c[1])),
        ),
    ]
    show = lambda c: f"i={c[0]} f={c[1]} g={c[2]}"  # noqa: E731
    return [_run(name, polys, test, show) for name, test in checks]


def suite_formulas(max_rank: int, seed: int = 0, random_count: int = 200) -> list[Check]:
    rng = random.Random(seed)
    exhaustive = [u for n in range(1, min(max_rank, 5) + 1) for u in permutations(n)]
    sample = list(exhaustive)
    if max_rank >= 6:
        for n in range(6, min(max_rank, 7) + 1):
            sample += [random_permutation(n, rng) for _ in range(random_count)]
    out = []
    out.append(
        _run(
            "direct = formula P = formula Q",
            sample,
            lambda u: schubert_word_direct(u) == formula_P(u) == formula_Q(u),
            str,
        )
    )

    def nonneg_monic(u):
        f = formula_Q(u)
        lead, c = leading_term(f)
        return all(v > 0 for _, v in f.items()) and c == 1 and lead == leading_monomial_formula(u)

    out.append(_run("nonnegative, monic at the closed-form lead", sample, nonneg_monic, str))

    def homogeneous(u):
        f = schubert_word_direct(u)
        n = u.rank
        return f.is_homogeneous() and f.degree() == n * (n - 1) // 2 - u.length()

    out.append(_run("homogeneous of degree n(n-1)/2 - l(u)", sample, homogeneous, str))

    def stable(u):
        w = ex.index_convert(u)
        return schubert_direct(w, u.rank) == schubert_direct(w, u.rank + 1)

    out.append(_run("stability S_n -> S_(n+1)", [u for u in exhaustive if u.rank <= 5], stable, str))

    def step(case):
        t, u = case
        if not is_left_reduced(t, u):
            return True
        v = normal_form((t,) + u.word(), u.rank)
        lead = leading_monomial(schubert_word_direct(u))
        return leading_monomial(schubert_word_direct(v)) == leading_monomial(divided_difference(t, Polynomial({lead: 1})))

    cases = [(t, u) for u in exhaustive for t in range(1, u.rank)]
    out.append(_run("lead of d_(s_t u) is lead of d_t(lead)", cases, step))

    def tfae(case):
        t, u = case
        lead = leading_monomial_formula(u)
        return is_left_reduced(t, u) == (exponent(lead, t) > exponent(lead, t + 1))

    out.append(_run("left-reduced iff exponent drops at t", cases, tfae))

    def shape(deltas):
        f = right_normed_eval(deltas)
        if not f:
            return True
        return len(f) == 1 and all(e <= 1 for m, c in f.items() for e in m) and next(iter(f.items()))[1] == 1

    chains = [tuple(c) for k in range(1, 5) for c in itertools.product((ID, DIFF, SWAP), repeat=k)]
    out.append(_run("right-normed chains give 0 or a 0/1 monomial", chains, shape))

    def divide_degree_1(case):
        n, w, ps = case
        v = list(w) + [0] * n
        for p in ps:
            v[p - 1] -= 1
        lhs = divided_difference_word(tuple(reversed(ps)), ex.schubert_of_lead(w, "direct"))
        return lhs == ex.schubert_of_lead(trim(v), "direct")

    cases = []
    for n in range(2, min(max_rank, 6) + 1):
        for w in staircase_monomials(n):
            # positions p in [1, n-1] with j_p = j_(p+1) + 1, taking j_n = 0
            good = [p for p in range(1, n) if exponent(w, p) == exponent(w, p + 1) + 1]
            for k in range(1, len(good) + 1):
                cases.extend((n, w, ps) for ps in itertools.combinations(good, k))
    out.append(_run("d_(p_m)...d_(p_1) S_W = S_(W/x_p1...x_pm)", cases, divide_degree_1))
    return out


def suite_bijection(max_rank: int) -> list[Check]:
    n = max(1, min(max_rank, 6))
    perms = list(permutations(n))
    leads = [phi(u) for u in perms]
    box = staircase_monomials(n)
    out = [
        Check(f"phi injective on S_{n}", len(set(leads)) == len(perms), len(perms)),
        Check(
            f"phi onto B_x ({len(box)} monomials)",
            set(leads) == set(box) and len(box) == math.factorial(n),
            len(box),
        ),
    ]
    out.append(_run(f"phi_inverse round trips in S_{n}", perms, lambda u: phi_inverse(phi(u), n) == u, str))
    out.append(
        _run(
            "constructive phi_inverse = linear scan",
            box,
            lambda w: phi_inverse(w, n) == phi_inverse_bruteforce(w, n),
        )
    )
    out.append(_run("phi(phi_inverse(W)) = W", box, lambda w: phi(phi_inverse(w, n)) == w and in_staircase(w, n)))
    return out


def suite_structure(max_rank: int, seed: int = 0, random_count: int = 100) -> list[Check]:
    rng = random.Random(seed)
    n = min(max_rank, 4)
    leads = sorted({m for r in range(1, n + 1) for m in staircase_monomials(r)}, key=order_key)
    pairs = [(u, v) for u in leads for v in leads]
    if max_rank >= 5:
        big = staircase_monomials(5)
        pairs += [(rng.choice(big), rng.choice(big)) for _ in range(random_count)]
    out = []
    out.append(_run("Algorithm 1 = Algorithm 2", pairs, lambda p: ex.multiply_alg1(*p) == ex.multiply_alg2(*p)))
    out.append(
        _run(
            "Algorithm 2 independent of pivot",
            pairs,
            lambda p: ex.multiply_alg2(*p) == ex.multiply_alg2(*p, pivot="largest"),
        )
    )
    out.append(_run("structure constants nonnegative", pairs, lambda p: ex.multiply_alg1(*p).is_nonnegative()))
    out.append(_run("commutativity", pairs, lambda p: ex.multiply_alg1(p[0], p[1]) == ex.multiply_alg1(p[1], p[0])))

    def reconstruct(p):
        return ex.multiply_alg1(*p).to_polynomial("direct") == ex.schubert_product(*p, method="direct")

    out.append(_run("reconstruction is exact", pairs, reconstruct))

    def degree(p):
        return all(sum(w) == sum(p[0]) + sum(p[1]) for w in ex.multiply_alg1(*p).terms)

    out.append(_run("degree filter", pairs, degree))

    def top_term(p):
        e = ex.multiply_alg1(*p)
        top = max(e.terms, key=order_key)
        prod = tuple(a + b for a, b in itertools.zip_longest(p[0], p[1], fillvalue=0))
        return top == trim(prod) and e.terms[top] == 1

    out.append(_run("top term is the product of indices", pairs, top_term))

    def monk_consistent(case):
        k, w = case
        image = ex.permutation_of_lead(w)
        return ex.multiply_alg1((0,) * (k - 1) + (1,), w) == ex.monk(k, image)

    cases = [(k, w) for k in range(1, n) for w in leads]
    out.append(_run("Algorithm 1 with a degree-one factor equals Monk", cases, monk_consistent))

    def monk_poly(case):
        k, w = case
        image = to_one_line(w).image
        lhs = ex.monk(k, image).to_polynomial("direct")
        rhs = Polynomial({(0,) * j + (1,): 1 for j in range(k)}) * schubert_direct(w)
        return lhs == rhs

    cases = [(k, w) for k in range(1, 4) for w in permutations(4)]
    out.append(_run("Monk output sums to (x1+...+xk) S_w", cases, monk_poly))
    return out


def run_suite(name: str, max_rank: int | None = None, count: int = 1000) -> list[Check]:
    cap = max_rank_cap()
    n = cap if max_rank is None else min(max_rank, cap)
    if name == "rewrite":
        return suite_rewrite(n)
    if name == "nilcoxeter":
        return suite_nilcoxeter(count)
    if name == "formulas":
        return suite_formulas(n)
    if name == "bijection":
        return suite_bijection(n)
    if name == "structure":
        return suite_structure(n)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")


__all__ = [
    "Check",
    "SUITES",
    "divided_difference_oracle",
    "max_rank_cap",
    "random_polynomial",
    "run_suite",
]
