"""Products of Schubert polynomials in the Schubert basis.

Schubert polynomials are indexed here by their leading monomial (``lead``),
which does not depend on the ambient rank.  Conversions to canonical forms
and one-line permutations are provided for output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .evaluate import (
    phi,
    permutation_to_word,
    phi_inverse,
    schubert_word,
    word_to_permutation,
)
from .poly import (
    Monomial,
    Polynomial,
    exponent,
    leading_term,
    minimal_rank,
    monomial_quotient,
    order_key,
    trim,
    var,
)
from .words import (
    CanonicalForm,
    OneLinePermutation,
    WordError,
    complement,
    from_one_line,
    inversions,
    to_one_line,
)

DEFAULT_METHOD = "Q"


def _trim_image(image: Iterable[int]) -> tuple[int, ...]:
    img = list(image)
    while img and img[-1] == len(img):
        img.pop()
    return tuple(img) if img else (1,)


def lead_of_word(u: CanonicalForm) -> Monomial:
    return phi(u)


def lead_of_permutation(w: OneLinePermutation | Iterable[int]) -> Monomial:
    image = w.image if isinstance(w, OneLinePermutation) else tuple(w)
    cf = from_one_line(image)
    return phi(complement(cf, cf.rank))


def index_convert(index: CanonicalForm, n: int | None = None, to: str = "permutation") -> CanonicalForm:
    """Switch between the operator word ``u`` and the permutation ``w0^n u^{-1}``.

    Both directions are the same involution of S_n; ``n`` defaults to the
    rank carried by ``index`` and must not be smaller than it.
    """
    if n is None:
        n = index.rank
    if index.trimmed().rank > n:
        raise WordError(f"{index} does not embed in S_{n}")
    index = index.embed(n)
    if to == "permutation":
        return word_to_permutation(index)
    if to == "word":
        return permutation_to_word(index, n)
    raise ValueError(f"unknown target {to!r}; expected 'permutation' or 'word'")


@lru_cache(maxsize=None)
def word_of_lead(lead: Monomial, n: int | None = None) -> CanonicalForm:
    lead = trim(lead)
    return phi_inverse(lead, minimal_rank(lead) if n is None else n)


@lru_cache(maxsize=None)
def permutation_of_lead(lead: Monomial) -> tuple[int, ...]:
    """One-line image (trailing fixed points dropped) of the permutation
    whose Schubert polynomial has leading monomial ``lead``."""
    u = word_of_lead(lead)
    return _trim_image(to_one_line(word_to_permutation(u)).image)


@lru_cache(maxsize=None)
def schubert_of_lead(lead: Monomial, method: str = DEFAULT_METHOD) -> Polynomial:
    return schubert_word(word_of_lead(trim(lead)), method)


@dataclass
class SchubertExpansion:
    """``sum c * S_lead`` with every index living in S_rank."""

    terms: dict[Monomial, int] = field(default_factory=dict)
    rank: int = 1

    def __post_init__(self):
        self.terms = {trim(k): v for k, v in self.terms.items() if v}
        self.rank = max([self.rank] + [minimal_rank(k) for k in self.terms])

    @classmethod
    def single(cls, lead: Monomial, coeff: int = 1) -> SchubertExpansion:
        return cls({trim(lead): coeff})

    def __eq__(self, other):
        if not isinstance(other, SchubertExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, lead: Monomial) -> int:
        return self.terms.get(trim(lead), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in decreasing order of their index monomial."""
        return sorted(self.terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def word(self, lead: Monomial) -> CanonicalForm:
        return word_of_lead(trim(lead), self.rank)

    def permutation(self, lead: Monomial) -> OneLinePermutation:
        image = permutation_of_lead(trim(lead))
        return OneLinePermutation(image + tuple(range(len(image) + 1, self.rank + 1)))

    def to_polynomial(self, method: str = DEFAULT_METHOD) -> Polynomial:
        out = Polynomial()
        for lead, c in self.terms.items():
            out = out.add_scaled(schubert_of_lead(lead, method), c)
        return out

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())


def _combine(parts: Iterable[tuple[int, Mapping[Monomial, int]]]) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for scale, terms in parts:
        for k, c in terms.items():
            v = out.get(k, 0) + scale * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


# --- Monk's rule ----------------------------------------------------------------------


def monk_permutations(k: int, w: Iterable[int]) -> list[tuple[int, ...]]:
    """All ``w * t_{p,q}`` with ``p <= k < q`` and length one more than ``w``.

    Candidates ``q`` stop at ``max(rank, k) + 1``: beyond that the value
    ``q`` sits at position ``q`` between ``w(p)`` and ``w(q)``, so the length
    cannot grow by exactly one.
    """
    if k < 1:
        raise ValueError(f"Monk index must be >= 1, got {k}")
    img = list(w)
    m = len(img)
    top = max(m, k) + 1
    img += list(range(m + 1, top + 1))
    base = inversions(img)
    out = []
    for p in range(1, k + 1):
        for q in range(k + 1, top + 1):
            v = list(img)
            v[p - 1], v[q - 1] = v[q - 1], v[p - 1]
            if inversions(v) == base + 1:
                out.append(_trim_image(v))
    return out


def monk(k: int, w: OneLinePermutation | Iterable[int]) -> SchubertExpansion:
    """``S_{s_k} * S_w`` by Monk's rule."""
    image = w.image if isinstance(w, OneLinePermutation) else tuple(w)
    rank = max(len(image), k) + 1
    return SchubertExpansion({lead_of_permutation(v): 1 for v in monk_permutations(k, image)}, rank)


@lru_cache(maxsize=None)
def _monk_lead(k: int, lead: Monomial) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for v in monk_permutations(k, permutation_of_lead(lead)):
        key = lead_of_permutation(v)
        out[key] = out.get(key, 0) + 1
    return out


def monk_lead(k: int, lead: Monomial) -> SchubertExpansion:
    """``S_{x_k} * S_lead`` with both factors indexed by leading monomial."""
    return SchubertExpansion(dict(_monk_lead(k, trim(lead))))


# --- expansion by leading-term elimination -----------------------------------------------


def expand_in_schubert_basis(
    f: Polynomial, method: str = DEFAULT_METHOD, trace: list | None = None
) -> SchubertExpansion:
    """Write ``f`` as an integer combination of Schubert polynomials.

    Repeatedly subtracts ``c * S_W`` for the leading term ``c * W``.
    ``trace`` receives the leading monomial removed at each step.
    """
    rank = max([minimal_rank(m) for m, _ in f.items()] + [1])
    out: dict[Monomial, int] = {}
    last = None
    while f:
        lead, c = leading_term(f)
        key = order_key(lead)
        if last is not None and not key < last:
            raise AssertionError(f"leading monomial did not decrease at {lead}")
        last = key
        s = schubert_of_lead(lead, method)
        f = f.add_scaled(s, -c)
        out[lead] = c
        if trace is not None:
            trace.append(lead)
    return SchubertExpansion(out, rank)


def schubert_product(u: Monomial, v: Monomial, method: str = DEFAULT_METHOD) -> Polynomial:
    return schubert_of_lead(trim(u), method) * schubert_of_lead(trim(v), method)


def multiply_alg1(u: Monomial, v: Monomial, method: str = DEFAULT_METHOD) -> SchubertExpansion:
    """Structure constants by expanding the polynomial product."""
    return expand_in_schubert_basis(schubert_product(u, v, method), method)


# --- recursion on Monk's rule ------------------------------------------------------------

PIVOTS = ("smallest", "largest")


def _pivot(lead: Monomial, how: str) -> int:
    support = [k for k in range(1, len(lead) + 1) if exponent(lead, k)]
    if how == "smallest":
        return support[0]
    if how == "largest":
        return support[-1]
    raise ValueError(f"unknown pivot rule {how!r}; expected one of {PIVOTS}")


@lru_cache(maxsize=None)
def _alg2(u: Monomial, v: Monomial, pivot: str) -> dict[Monomial, int]:
    if sum(u) > sum(v):
        u, v = v, u
    t = sum(u)
    if t == 0:
        return {v: 1}
    if t == 1:
        return dict(_monk_lead(_pivot(u, "smallest"), v))
    if u == trim((t,)):
        # S_{x1^t} = S_{x1} * S_{x1^{t-1}}
        inner = _alg2(trim((t - 1,)), v, pivot)
        return _combine((c, _monk_lead(1, z)) for z, c in inner.items())
    k = _pivot(u, pivot)
    rest = monomial_quotient(u, var(k))
    # S_{x_k} S_rest = S_u + sum_{w < u} c_w S_w
    split = _monk_lead(k, rest)
    if split.get(u) != 1:
        raise AssertionError(f"Monk product for {u} is not monic at {u}")
    lower = {w: c for w, c in split.items() if w != u}
    for w in lower:
        if not order_key(w) < order_key(u):
            raise AssertionError(f"{w} is not below {u}")
    first = _combine((c, _monk_lead(k, w)) for w, c in _alg2(rest, v, pivot).items())
    return _combine([(1, first)] + [(-c, _alg2(w, v, pivot)) for w, c in lower.items()])


def multiply_alg2(u: Monomial, v: Monomial, pivot: str = "smallest") -> SchubertExpansion:
    """Structure constants by recursion on Monk's rule."""
    u, v = trim(u), trim(v)
    terms = _alg2(u, v, pivot)
    return SchubertExpansion(dict(terms))


def multiply(u: Monomial, v: Monomial, method: str = "1") -> SchubertExpansion:
    if method in ("1", 1, "alg1"):
        return multiply_alg1(u, v)
    if method in ("2", 2, "alg2"):
        return multiply_alg2(u, v)
    raise ValueError(f"unknown multiplication method {method!r}")


def clear_caches() -> None:
    for fn in (word_of_lead, permutation_of_lead, schubert_of_lead, _monk_lead, _alg2):
        fn.cache_clear()
