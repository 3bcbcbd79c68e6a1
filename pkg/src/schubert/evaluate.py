"""Schubert polynomials: the divided-difference definition, the two
chain-sum formulas, the closed-form leading monomial and the bijection
between S_n and staircase monomials.

Throughout, ``u`` is a canonical form in S_n and the quantity computed is
``d_u S_{w0}``, the Schubert polynomial of the permutation ``w0 * u^{-1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .poly import (
    Monomial,
    Polynomial,
    divided_difference,
    divided_difference_word,
    format_monomial,
    in_staircase,
    interval,
    monomial_product,
    staircase,
    swap_action,
    trim,
    var,
)
from .words import (
    CanonicalForm,
    block,
    block_without,
    complement,
    inverse,
    longest_element,
    multiply,
    normal_form,
    permutations,
    word_is_reduced,
)

ID, DIFF, SWAP = "id", "d", "s"
METHODS = ("direct", "P", "Q")


class NotStaircaseError(ValueError):
    pass


# --- direct evaluation ---------------------------------------------------------


def top_schubert(n: int) -> Polynomial:
    return Polynomial.monomial(staircase(n))


@lru_cache(maxsize=None)
def _direct(u: CanonicalForm) -> Polynomial:
    return divided_difference_word(u.word(), top_schubert(u.rank))


def schubert_word_direct(u: CanonicalForm) -> Polynomial:
    """``d_u S_{w0^n}`` by applying the operators one at a time."""
    return _direct(u)


def schubert_direct(w: CanonicalForm, n: int | None = None) -> Polynomial:
    """The Schubert polynomial of the permutation ``w``, computed in S_n."""
    if n is None:
        n = max(w.trimmed().rank, 1)
    return _direct(complement(w, n))


def word_to_permutation(u: CanonicalForm) -> CanonicalForm:
    """Permutation ``w0 * u^{-1}`` indexed by the operator word ``u``."""
    return multiply(longest_element(u.rank), inverse(u))


def permutation_to_word(w: CanonicalForm, n: int | None = None) -> CanonicalForm:
    """Operator word ``[w^{-1} w0^n]``; inverse of :func:`word_to_permutation`."""
    if n is None:
        n = w.rank
    return complement(w, n)


# --- right-normed operator chains -------------------------------------------------


def apply_delta(tag: str, q: int, f: Polynomial) -> Polynomial:
    if tag == ID:
        return f
    if tag == DIFF:
        return divided_difference(q, f)
    if tag == SWAP:
        return swap_action(q, f)
    raise ValueError(f"unknown operator tag {tag!r}")


def right_normed_eval(deltas: Sequence[tuple[str, int]] | Sequence[str], start: int = 1) -> Polynomial:
    """``delta_t(x_t * delta_{t+1}(x_{t+1} * ( ... delta_m(x_m))))``.

    ``deltas`` lists the operators for indices ``start, start+1, ...``,
    either as bare tags or as ``(tag, index)`` pairs.
    """
    ops = []
    for offset, d in enumerate(deltas):
        q = start + offset
        if isinstance(d, tuple):
            tag, idx = d
            if idx != q:
                raise ValueError(f"operator for index {q} carries index {idx}")
        else:
            tag = d
        ops.append((tag, q))
    f = Polynomial.constant(1)
    for tag, q in reversed(ops):
        f = apply_delta(tag, q, f.times_monomial(var(q)))
        if not f:
            break
    return f


# --- sum over subsets J ----------------------------------------------------------


def p_level(u: CanonicalForm):
    """Yield ``(J, X_J, u(J))`` for every subset J with ``u(J)`` defined."""
    n = u.rank
    i = u.i
    admissible = [l for l in range(1, n - 1) if i[l - 1] <= l]
    for size in range(len(admissible) + 1):
        for J in itertools.combinations(admissible, size):
            js = set(J)
            deltas = []
            for q in range(1, n):
                if q in js:
                    deltas.append((SWAP, q))
                elif i[q - 1] <= q:
                    deltas.append((DIFF, q))
                else:
                    deltas.append((ID, q))
            x = right_normed_eval(deltas, 1)
            if not x:
                continue
            letters = []
            for q in range(1, n):
                r = q if q in js else q - 1
                letters.extend(block(r, i[q - 1]))
            if not word_is_reduced(letters, n - 1):
                continue
            yield J, x, normal_form(letters, n - 1)


@lru_cache(maxsize=None)
def formula_P(u: CanonicalForm) -> Polynomial:
    """``d_u S_{w0}`` as a sum over chains of subsets ``J_{n-1}, ..., J_1``."""
    if u.rank <= 1:
        return Polynomial.constant(1)
    total = Polynomial()
    for _, x, sub in p_level(u):
        total = total + x * formula_P(sub)
    return total


# --- q tables and the sum over T-vectors -------------------------------------------


@dataclass(frozen=True)
class QData:
    """``q[r] = (q_{r,1}, ..., q_{r,m_r})`` for every r in [1, n-1]."""

    q: dict[int, tuple[int, ...]]

    def m(self, r: int) -> int:
        return len(self.q[r])

    def Q(self, r: int) -> frozenset[int]:
        return frozenset(self.q[r])


def q_row(i: Sequence[int], r: int) -> tuple[int, ...]:
    """``q_{r,1} > q_{r,2} > ...`` for block vector ``i`` (1-based r)."""
    out = []
    prev = r
    l = 1
    ir = i[r - 1]
    while True:
        target = ir - l
        found = None
        for j in range(prev - 1, 0, -1):
            if i[j - 1] <= target <= j:
                found = j
                break
        if found is None:
            return tuple(out)
        out.append(found)
        prev = found
        l += 1


def q_data(u: CanonicalForm) -> QData:
    return QData({r: q_row(u.i, r) for r in range(1, u.rank)})


def t_ranges(u: CanonicalForm) -> list[range]:
    """Admissible ``t_j`` for the top block, j = 1..m."""
    n = u.rank
    top = u.i[n - 2]
    qs = q_row(u.i, n - 1)
    return [range(top - j, qj + 2) for j, qj in enumerate(qs, start=1)]


def q_level(u: CanonicalForm):
    """Yield ``(T, X_T, u(T))`` for every T-vector with ``u(T)`` defined.

    ``T`` is reported as ``(t_1, ..., t_m)``.
    """
    n = u.rank
    i = u.i
    top = i[n - 2]
    qs = q_row(i, n - 1)
    m = len(qs)
    prefix = interval(1, top - m - 1)
    for T in itertools.product(*t_ranges(u)):
        cut = dict(zip(qs, T))
        letters = []
        for p in range(1, n - 1):
            if p in cut:
                letters.extend(block_without(p, i[p - 1], cut[p]))
            else:
                letters.extend(block(p, i[p - 1]))
        if not word_is_reduced(letters, n - 1):
            continue
        x = prefix
        for qj, tj in zip(qs, T):
            if tj > qj:
                x = monomial_product(x, var(qj + 1))
        yield T, x, normal_form(letters, n - 1)


@lru_cache(maxsize=None)
def formula_Q(u: CanonicalForm) -> Polynomial:
    """``d_u S_{w0}`` as a sum over chains of T-vectors."""
    if u.rank <= 1:
        return Polynomial.constant(1)
    total = Polynomial()
    for _, x, sub in q_level(u):
        total = total + formula_Q(sub).times_monomial(x)
    return total


def schubert_word(u: CanonicalForm, method: str = "Q") -> Polynomial:
    """``d_u S_{w0^n}`` by the chosen evaluator."""
    if method == "direct":
        return schubert_word_direct(u)
    if method == "P":
        return formula_P(u)
    if method == "Q":
        return formula_Q(u)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


# --- leading monomials and the bijection -----------------------------------------------


def block_factor(u: CanonicalForm, j: int, qd: QData | None = None) -> Monomial:
    """``X_j^u = X[1, i_j - m_j - 1] * prod_k x_{1 + q_{j,k}}``."""
    qs = q_row(u.i, j) if qd is None else qd.q[j]
    x = interval(1, u.i[j - 1] - len(qs) - 1)
    for q in qs:
        x = monomial_product(x, var(q + 1))
    return x


def leading_monomial_formula(u: CanonicalForm) -> Monomial:
    out: Monomial = ()
    for j in range(1, u.rank):
        out = monomial_product(out, block_factor(u, j))
    return out


phi = leading_monomial_formula


def _check_staircase(w: Monomial, n: int) -> None:
    if not in_staircase(w, n):
        raise NotStaircaseError(f"{format_monomial(w)} is not a staircase monomial for S_{n}")


def divide_degree_bigger(w: Monomial, n: int) -> tuple[int, ...]:
    """Word ``v_m ... v_1`` with ``d_{v_m ... v_1}(x_1^{n-1} ... x_{n-1}) = w``.

    ``w`` must have weakly decreasing exponents.
    """
    _check_staircase(w, n)
    j = [w[p - 1] if p <= len(w) else 0 for p in range(1, n)]
    if any(a < b for a, b in zip(j, j[1:])):
        raise ValueError(f"exponents of {w} are not weakly decreasing")
    levels = []
    k = 1
    while True:
        P = [p for p in range(1, n) if n - p - j[p - 1] >= k]
        if not P:
            break
        levels.append(tuple(reversed(P)))
        k += 1
    return tuple(t for v in reversed(levels) for t in v)


def move_one_index(w: Monomial, t: int, n: int) -> tuple[tuple[int, ...], Monomial]:
    """One step of the reduction toward a decreasing staircase monomial.

    Returns ``(v, w')`` with ``v = s_{k-1,t+1}`` such that the leading
    monomial of ``d_v S_{w'}`` is ``w``.
    """
    _check_staircase(w, n)
    j = [w[p - 1] if p <= len(w) else 0 for p in range(1, n)]
    shifted = [j[p - 1] + p for p in range(1, n)]
    for a in range(1, t):
        if shifted[a - 1] < shifted[a]:
            raise ValueError(f"{w}: prefix condition fails at index {a}")
    rest = shifted[t:]
    if t >= 1 and rest and shifted[t - 1] < max(rest):
        raise ValueError(f"{w}: prefix condition fails at index {t}")
    best = max(rest)
    k = t + 1 + rest.index(best)
    new = list(j)
    new[t] = j[k - 1] + k - t - 1
    for l in range(t + 2, k + 1):
        new[l - 1] = j[l - 2]
    return block(k - 1, t + 1), trim(new)


def phi_inverse_word(w: Monomial, n: int) -> tuple[int, ...]:
    """A reduced word ``u`` with leading monomial of ``d_u S_{w0^n}`` equal to ``w``."""
    _check_staircase(w, n)
    parts = []
    cur = w
    for t in range(0, n - 2):
        v, cur = move_one_index(cur, t, n)
        parts.append(v)
    parts.append(divide_degree_bigger(cur, n))
    return tuple(x for p in parts for x in p)


def phi_inverse(w: Monomial, n: int) -> CanonicalForm:
    return normal_form(phi_inverse_word(w, n), n)


@lru_cache(maxsize=None)
def _lead_table(n: int) -> dict[Monomial, CanonicalForm]:
    return {leading_monomial_formula(u): u for u in permutations(n)}


def phi_inverse_bruteforce(w: Monomial, n: int) -> CanonicalForm:
    """Linear-scan inverse of :func:`phi`; a test oracle."""
    _check_staircase(w, n)
    return _lead_table(n)[trim(w)]


def staircase_monomials(n: int) -> list[Monomial]:
    """All of ``B_x`` for S_n."""
    return [trim(k) for k in itertools.product(*(range(n - i + 1) for i in range(1, n)))]


__all__ = [
    "METHODS",
    "NotStaircaseError",
    "QData",
    "apply_delta",
    "block_factor",
    "divide_degree_bigger",
    "formula_P",
    "formula_Q",
    "leading_monomial_formula",
    "move_one_index",
    "p_level",
    "permutation_to_word",
    "phi",
    "phi_inverse",
    "phi_inverse_bruteforce",
    "phi_inverse_word",
    "q_data",
    "q_level",
    "q_row",
    "right_normed_eval",
    "schubert_direct",
    "schubert_word",
    "schubert_word_direct",
    "staircase_monomials",
    "t_ranges",
    "top_schubert",
    "word_to_permutation",
]
