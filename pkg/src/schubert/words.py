"""Words in the adjacent transpositions of S_n and their normal forms.

A permutation is held as a :class:`CanonicalForm`, the vector
``(i_1, ..., i_{n-1})`` naming the normal form
``s_{1,i_1} s_{2,i_2} ... s_{n-1,i_{n-1}}`` where the block
``s_{j,i} = s_j s_{j-1} ... s_i`` is empty when ``i = j + 1``.

Composition in one-line notation is ``(a*b)(x) = a(b(x))``, so right
multiplication by ``s_t`` swaps positions ``t`` and ``t+1`` of the image.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class WordError(ValueError):
    """Malformed word, canonical form or permutation."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class GeneratorWord:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"rank must be positive, got {self.rank}")
        for pos, t in enumerate(self.letters):
            if not 1 <= t <= self.rank - 1:
                raise WordError(f"letter s{t} out of range for S_{self.rank}", pos)

    @classmethod
    def of(cls, letters: Iterable[int], rank: int | None = None) -> GeneratorWord:
        letters = tuple(letters)
        if rank is None:
            rank = max(letters, default=0) + 1
        return cls(letters, rank)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(f"s{t}" for t in self.letters)


@dataclass(frozen=True)
class CanonicalForm:
    """Normal form ``s_{1,i_1} ... s_{n-1,i_{n-1}}`` of an element of S_n."""

    i: tuple[int, ...]

    def __post_init__(self):
        for j, ij in enumerate(self.i, start=1):
            if not 1 <= ij <= j + 1:
                raise WordError(f"i_{j}={ij} outside [1, {j + 1}]")

    @property
    def rank(self) -> int:
        return len(self.i) + 1

    @classmethod
    def identity(cls, n: int) -> CanonicalForm:
        return cls(tuple(range(2, n + 1)))

    def length(self) -> int:
        return sum(j - ij + 1 for j, ij in enumerate(self.i, start=1) if ij <= j)

    def block(self, j: int) -> tuple[int, ...]:
        return block(j, self.i[j - 1])

    def word(self) -> tuple[int, ...]:
        return tuple(t for j in range(1, self.rank) for t in self.block(j))

    def embed(self, n: int) -> CanonicalForm:
        """The same permutation viewed in S_n, n >= rank."""
        if n < self.rank:
            if self.i[n - 1:] != tuple(range(n + 1, self.rank + 1)):
                raise WordError(f"{self} does not lie in S_{n}")
            return CanonicalForm(self.i[: n - 1])
        return CanonicalForm(self.i + tuple(range(self.rank + 1, n + 1)))

    def trimmed(self) -> CanonicalForm:
        """Embedding into the smallest S_m containing this element."""
        m = len(self.i)
        while m and self.i[m - 1] == m + 1:
            m -= 1
        return CanonicalForm(self.i[:m])

    def is_identity(self) -> bool:
        return all(ij == j + 1 for j, ij in enumerate(self.i, start=1))

    def __str__(self):
        return "i=(" + ",".join(map(str, self.i)) + ")"


def block(j: int, i: int) -> tuple[int, ...]:
    """Letters of ``s_{j,i} = s_j s_{j-1} ... s_i`` (empty when i > j)."""
    return tuple(range(j, i - 1, -1)) if i <= j else ()


def block_without(i: int, j: int, k: int) -> tuple[int, ...]:
    """The block ``s_{i,j}`` with the letter ``s_k`` deleted when present."""
    if i < j:
        return ()
    if j <= k <= i:
        return tuple(t for t in range(i, j - 1, -1) if t != k)
    return block(i, j)


# --- one-line notation ----------------------------------------------------


@dataclass(frozen=True)
class OneLinePermutation:
    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise WordError(f"{list(self.image)} is not a permutation of 1..{len(self.image)}")

    @property
    def rank(self) -> int:
        return len(self.image)

    def length(self) -> int:
        return inversions(self.image)

    def __str__(self):
        return "[" + " ".join(map(str, self.image)) + "]"


def inversions(image: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(image, 2) if a > b)


def word_to_image(letters: Iterable[int], n: int) -> list[int]:
    img = list(range(1, n + 1))
    for t in letters:
        img[t - 1], img[t] = img[t], img[t - 1]
    return img


def image_to_canonical(image: Sequence[int]) -> CanonicalForm:
    """Canonical vector of a one-line image.

    ``i_j`` is the position of ``j+1`` once every larger value is removed.
    """
    img = list(image)
    n = len(img)
    out = [0] * (n - 1)
    for j in range(n - 1, 0, -1):
        pos = img.index(j + 1)
        out[j - 1] = pos + 1
        del img[pos]
    return CanonicalForm(tuple(out))


def to_one_line(a: CanonicalForm) -> OneLinePermutation:
    return OneLinePermutation(tuple(word_to_image(a.word(), a.rank)))


def from_one_line(p: OneLinePermutation | Sequence[int]) -> CanonicalForm:
    if not isinstance(p, OneLinePermutation):
        p = OneLinePermutation(tuple(p))
    return image_to_canonical(p.image)


def normal_form(letters: Iterable[int], n: int | None = None) -> CanonicalForm:
    """Canonical form of a word, computed through its one-line image.

    Agrees with :func:`rewrite_to_canonical`; this path is O(len + n^2) and is
    what the evaluators use.
    """
    letters = tuple(letters)
    if n is None:
        n = max(letters, default=0) + 1
    return image_to_canonical(word_to_image(letters, n))


def word_is_reduced(letters: Sequence[int], n: int | None = None) -> bool:
    letters = tuple(letters)
    if n is None:
        n = max(letters, default=0) + 1
    return len(letters) == inversions(word_to_image(letters, n))


# --- Groebner-Shirshov rewriting -------------------------------------------


def _redexes(w: Sequence[int]) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """Yield ``(start, end, replacement)`` for every rule occurrence.

    Rules:  s_i s_i -> 1;  s_i s_j -> s_j s_i (i > j+1);
    s_i s_{i-1} ... s_j s_i -> s_{i-1} s_i s_{i-1} ... s_j (i > j).
    Occurrences are yielded in order of their end position.
    """
    for e in range(1, len(w)):
        a, b = w[e - 1], w[e]
        if a == b:
            yield e - 1, e + 1, ()
            continue
        if a > b + 1:
            yield e - 1, e + 1, (b, a)
            continue
        # descending run s_i ... s_j ending at e-1, followed by s_i at e
        i = b
        s = e - 1
        while s >= 0 and w[s] == w[e - 1] + (e - 1 - s):
            if w[s] == i and s < e - 1:
                j = w[e - 1]
                yield s, e + 1, (i - 1,) + block(i, j)
                break
            if w[s] > i:
                break
            s -= 1


def rewrite_to_canonical(
    w: GeneratorWord | Sequence[int],
    n: int | None = None,
    rng: random.Random | None = None,
    trace: list | None = None,
) -> CanonicalForm:
    """Rewrite a word to its normal form with the three GS relations.

    The leftmost-innermost redex (earliest end position) is contracted at
    every step; with ``rng`` a uniformly random redex is picked instead,
    which exercises confluence.  Each step is appended to ``trace``.
    """
    if isinstance(w, GeneratorWord):
        n = w.rank if n is None else n
        letters = list(w.letters)
    else:
        letters = list(w)
        if n is None:
            n = max(letters, default=0) + 1
    for pos, t in enumerate(letters):
        if not 1 <= t <= n - 1:
            raise WordError(f"letter s{t} out of range for S_{n}", pos)
    while True:
        if rng is None:
            redex = next(_redexes(letters), None)
        else:
            found = list(_redexes(letters))
            redex = rng.choice(found) if found else None
        if redex is None:
            break
        s, e, rep = redex
        letters[s:e] = rep
        if trace is not None:
            trace.append(tuple(letters))
    return _read_normal_word(letters, n)


def _read_normal_word(letters: Sequence[int], n: int) -> CanonicalForm:
    """Parse an irreducible word into its block vector."""
    out = list(range(2, n + 1))
    pos = 0
    prev_top = 0
    while pos < len(letters):
        top = letters[pos]
        if top <= prev_top:
            raise AssertionError(f"irreducible word not in normal form: {letters}")
        bottom = top
        pos += 1
        while pos < len(letters) and letters[pos] == bottom - 1:
            bottom -= 1
            pos += 1
        out[top - 1] = bottom
        prev_top = top
    return CanonicalForm(tuple(out))


def is_reduced(w: GeneratorWord | Sequence[int], n: int | None = None) -> bool:
    letters = w.letters if isinstance(w, GeneratorWord) else tuple(w)
    return len(letters) == rewrite_to_canonical(w, n).length()


# --- group operations --------------------------------------------------------


def _common_rank(a: CanonicalForm, b: CanonicalForm) -> int:
    return max(a.rank, b.rank)


def multiply(a: CanonicalForm, b: CanonicalForm) -> CanonicalForm:
    n = _common_rank(a, b)
    return normal_form(a.embed(n).word() + b.embed(n).word(), n)


def inverse(a: CanonicalForm) -> CanonicalForm:
    return normal_form(tuple(reversed(a.word())), a.rank)


def longest_element(n: int) -> CanonicalForm:
    if n < 1:
        raise WordError("rank must be positive")
    return CanonicalForm((1,) * (n - 1))


def complement(w: CanonicalForm, n: int) -> CanonicalForm:
    """``[w^{-1} w_0^n]`` for ``w`` embedded in S_n."""
    if w.trimmed().rank > n:
        raise WordError(f"{w} does not embed in S_{n}")
    w = w.embed(n)
    return normal_form(tuple(reversed(w.word())) + longest_element(n).word(), n)


def is_left_reduced(t: int, u: CanonicalForm) -> bool:
    """Whether ``s_t u`` is reduced: ``i_{t-1} < i_t`` with ``i_0 = 1``."""
    if not 1 <= t <= u.rank - 1:
        raise WordError(f"generator s{t} out of range for S_{u.rank}")
    prev = 1 if t == 1 else u.i[t - 2]
    return prev < u.i[t - 1]


def permutations(n: int) -> Iterator[CanonicalForm]:
    """All of S_n as canonical forms, in lexicographic order of the vector."""
    for vec in itertools.product(*(range(1, j + 2) for j in range(1, n))):
        yield CanonicalForm(vec)


def random_permutation(n: int, rng: random.Random) -> CanonicalForm:
    return CanonicalForm(tuple(rng.randint(1, j + 1) for j in range(1, n)))


# --- text forms --------------------------------------------------------------

_WORD_TOKEN = re.compile(r"s(\d+)$")
_CANON = re.compile(r"\s*i\s*=\s*\(\s*([\d\s,]*)\)\s*$")
_ONELINE = re.compile(r"\s*\[\s*([\d\s,]*)\]\s*$")


def parse_word(text: str, rank: int | None = None) -> GeneratorWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = _WORD_TOKEN.match(m.group())
        if not tok or int(tok.group(1)) < 1:
            raise WordError(f"bad generator token {m.group()!r}", m.start())
        letters.append(int(tok.group(1)))
    return GeneratorWord.of(letters, rank)


def parse_canonical(text: str) -> CanonicalForm:
    m = _CANON.match(text)
    if not m:
        raise WordError(f"expected 'i=(...)', got {text!r}", 0)
    body = m.group(1).replace(",", " ").split()
    return CanonicalForm(tuple(int(x) for x in body))


def parse_one_line(text: str) -> OneLinePermutation:
    m = _ONELINE.match(text)
    if not m:
        raise WordError(f"expected '[w1 w2 ...]', got {text!r}", 0)
    return OneLinePermutation(tuple(int(x) for x in m.group(1).replace(",", " ").split()))
