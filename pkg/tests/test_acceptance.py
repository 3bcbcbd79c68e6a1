"""Acceptance criteria 1-9.

Each test prints one ``[PASS]``/``[FAIL]`` line with its runtime, straight
to the terminal.  Run standalone with ``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time

import pytest

from schubert.evaluate import (
    formula_P,
    formula_Q,
    leading_monomial_formula,
    phi_inverse,
    q_data,
    schubert_word_direct,
    staircase_monomials,
)
from schubert.expand import (
    expand_in_schubert_basis,
    lead_of_permutation,
    monk,
    multiply_alg1,
    multiply_alg2,
    schubert_of_lead,
    schubert_product,
)
from schubert.poly import (
    Polynomial,
    divided_difference,
    divided_difference_word,
    in_staircase,
    leading_term,
    order_key,
    parse_polynomial,
    swap_action,
)
from schubert.verify import random_polynomial
from schubert.words import CanonicalForm, permutations, random_permutation


def report(request, number, title, ok, elapsed, limit=None):
    status = "PASS" if ok else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"[{status}] criterion {number}: {title} -- {elapsed:.2f}s{budget}"
    capman = request.config.pluginmanager.getplugin("capturemanager")
    with capman.global_and_fixture_disabled():
        print("\n" + line)


def monomial_from(indices, width):
    e = [0] * width
    for k in indices:
        e[k - 1] += 1
    return tuple(e)


def sweep_s5_s7():
    rng = random.Random(2024)
    return list(permutations(5)) + [random_permutation(7, rng) for _ in range(200)]


def test_criterion_1_table_1(request):
    t0 = time.perf_counter()
    u = CanonicalForm((1, 1, 1, 3, 6))
    got = formula_P(u)
    prefix = (1, 1, 1, 1, 1)
    expected = Polynomial({
        tuple(p + q for p, q in zip(prefix, monomial_from((a, b), 5))): 1
        for a, b in itertools.combinations(range(1, 5), 2)
    })
    elapsed = time.perf_counter() - t0
    ok = got == expected and len(got) == 6 and elapsed < 1.0
    report(request, 1, "formula P reproduces X[1,5]*e2(x1..x4)", ok, elapsed, 1)
    assert ok


def test_criterion_2_table_2(request):
    t0 = time.perf_counter()
    u = CanonicalForm((1, 1, 2, 2))
    got = formula_Q(u)
    expected = Polynomial({monomial_from(c, 3): 1 for c in itertools.combinations_with_replacement(range(1, 4), 2)})
    qd = q_data(u)
    elapsed = time.perf_counter() - t0
    ok = got == expected and qd.q[4][0] == 2 and qd.m(4) == 1 and elapsed < 1.0
    report(request, 2, "formula Q reproduces h2(x1,x2,x3); q_{4,1}=2, m_4=1", ok, elapsed, 1)
    assert ok


def test_criterion_3_and_4_triple_agreement(request):
    t0 = time.perf_counter()
    sweep = sweep_s5_s7()
    agree = nonneg = monic = True
    for u in sweep:
        f = schubert_word_direct(u)
        agree &= formula_P(u) == f == formula_Q(u)
        nonneg &= all(c > 0 for _, c in f.items())
        monic &= f.coefficient(leading_monomial_formula(u)) == 1 and leading_term(f)[0] == leading_monomial_formula(u)
    elapsed = time.perf_counter() - t0
    ok3 = agree and len(sweep) == 320 and elapsed < 60
    report(request, 3, "direct = P = Q on all of S_5 and 200 random u in S_7", ok3, elapsed, 60)
    report(request, 4, "coefficients nonnegative, closed-form lead has coefficient 1", nonneg and monic, elapsed)
    assert ok3 and nonneg and monic


def test_criterion_5_bijection(request):
    t0 = time.perf_counter()
    n = 6
    leads = [leading_monomial_formula(u) for u in permutations(n)]
    box = staircase_monomials(n)
    distinct = set(leads)
    ok = (
        len(distinct) == 720
        and len(box) == 720
        and all(in_staircase(w, n) for w in distinct)
        and distinct == set(box)
        and all(phi_inverse(w, n) == u for w, u in zip(leads, permutations(n)))
    )
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 30
    report(request, 5, "720 distinct leads in S_6 fill B_x; phi_inverse round-trips", ok, elapsed, 30)
    assert ok


def test_criterion_6_monk_example(request):
    t0 = time.perf_counter()
    s2, s1s2, s3s2 = (1, 3, 2), (2, 3, 1), (1, 4, 2, 3)
    e = monk(2, s2)
    ok = e.terms == {lead_of_permutation(s1s2): 1, lead_of_permutation(s3s2): 1}
    ok = ok and e.to_polynomial("direct") == parse_polynomial("x1^2 + 2*x1*x2 + x2^2")
    elapsed = time.perf_counter() - t0
    report(request, 6, "S_{s2}*S_{s2} = S_{s1s2} + S_{s3s2}, sums to (x1+x2)^2", ok, elapsed)
    assert ok


def test_criterion_7_schubert_of_x_k(request):
    t0 = time.perf_counter()
    ok = True
    for k in range(1, 9):
        lead = (0,) * (k - 1) + (1,)
        target = Polynomial({(0,) * j + (1,): 1 for j in range(k)})
        ok &= schubert_of_lead(lead) == target
        ok &= expand_in_schubert_basis(target).terms == {lead: 1}
    elapsed = time.perf_counter() - t0
    report(request, 7, "S with lead x_k is x1+...+xk for k=1..8", ok, elapsed)
    assert ok


def test_criterion_8_algorithm_agreement(request):
    t0 = time.perf_counter()
    leads = sorted(staircase_monomials(4), key=order_key)
    ok = len(leads) == 24
    for u in leads:
        for v in leads:
            e = multiply_alg1(u, v)
            ok &= e == multiply_alg2(u, v)
            ok &= e.is_nonnegative()
            ok &= e.to_polynomial("direct") == schubert_product(u, v, "direct")
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 120
    report(request, 8, "Algorithm 1 = Algorithm 2 on 24x24 pairs from S_4", ok, elapsed, 120)
    assert ok


def test_criterion_9_nilcoxeter_leibniz(request):
    t0 = time.perf_counter()
    rng = random.Random(99)
    failures = 0
    for _ in range(1000):
        f, g = random_polynomial(rng), random_polynomial(rng, max_degree=5)
        i = rng.randint(1, 7)
        d = divided_difference
        failures += bool(d(i, d(i, f)))
        failures += divided_difference_word((i, i + 1, i), f) != divided_difference_word((i + 1, i, i + 1), f)
        j = rng.randint(i + 2, i + 6)
        failures += d(i, d(j, f)) != d(j, d(i, f))
        failures += d(i, f * g) != d(i, f) * g + swap_action(i, f) * d(i, g)
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 30
    report(request, 9, "nilCoxeter relations and Leibniz rule, 1000 instances each", ok, elapsed, 30)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
