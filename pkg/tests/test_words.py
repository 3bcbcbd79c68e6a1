import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert.words import (
    CanonicalForm,
    GeneratorWord,
    OneLinePermutation,
    WordError,
    complement,
    from_one_line,
    inverse,
    inversions,
    is_left_reduced,
    is_reduced,
    longest_element,
    multiply,
    normal_form,
    parse_canonical,
    parse_one_line,
    parse_word,
    permutations,
    random_permutation,
    rewrite_to_canonical,
    to_one_line,
    word_to_image,
)


def compose(a, b):
    # (a*b)(x) = a(b(x)), images as tuples
    return tuple(a[b[x] - 1] for x in range(len(a)))


def image_of_word(letters, n):
    # independent of word_to_image: multiply generator images left to right
    out = tuple(range(1, n + 1))
    for t in letters:
        s = list(range(1, n + 1))
        s[t - 1], s[t] = s[t], s[t - 1]
        out = compose(out, tuple(s))
    return out


# --- rewriting ---------------------------------------------------------------


def test_rewrite_example_word():
    cf = rewrite_to_canonical(parse_word("s5 s4 s3 s5 s4"))
    assert cf == CanonicalForm((2, 3, 4, 3, 3))
    assert cf.word() == (4, 3, 5, 4, 3)


def test_rewrite_trivial_words():
    assert rewrite_to_canonical(GeneratorWord((), 5)) == CanonicalForm.identity(5)
    assert rewrite_to_canonical(GeneratorWord((1, 1), 2)).is_identity()


def test_braid_word():
    assert rewrite_to_canonical(GeneratorWord((2, 1, 2), 3)) == CanonicalForm((1, 1))


def test_rewrite_trace_is_monotone_in_length():
    trace = []
    rewrite_to_canonical(GeneratorWord((1, 2, 1, 2, 1, 3, 3), 4), trace=trace)
    assert trace
    lengths = [len(t) for t in trace]
    assert lengths == sorted(lengths, reverse=True)


def test_rewrite_rejects_out_of_range_letter():
    with pytest.raises(WordError):
        rewrite_to_canonical([1, 4], 4)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n - 1), max_size=30))),
       st.integers(0, 2**32))
def test_confluence(case, seed):
    n, w = case
    a = rewrite_to_canonical(w, n)
    b = rewrite_to_canonical(w, n, rng=random.Random(seed))
    assert a == b == normal_form(w, n)
    assert to_one_line(a).image == image_of_word(w, n)


def test_is_reduced():
    assert is_reduced(parse_word("s5 s4 s3 s5 s4"))
    assert not is_reduced(parse_word("s1 s1"))
    assert not is_reduced(parse_word("s1 s2 s1 s2"))


def test_is_reduced_brute_force_s3():
    # a word is reduced iff no shorter word has the same image
    shortest = {}
    for k in range(5):
        for w in itertools.product((1, 2), repeat=k):
            shortest.setdefault(image_of_word(w, 3), k)
    for k in range(5):
        for w in itertools.product((1, 2), repeat=k):
            assert is_reduced(w, 3) == (shortest[image_of_word(w, 3)] == k)


# --- group structure -------------------------------------------------------------


def test_canonical_count_is_factorial():
    for n in range(1, 7):
        images = {to_one_line(u).image for u in permutations(n)}
        assert len(images) == math.factorial(n)
        assert images == set(itertools.permutations(range(1, n + 1)))


def test_length_is_inversion_count():
    for n in range(1, 6):
        for u in permutations(n):
            assert u.length() == inversions(to_one_line(u).image)
            assert from_one_line(to_one_line(u)) == u


def test_multiply_examples():
    a = CanonicalForm((1, 1))
    assert multiply(a, CanonicalForm.identity(3)) == a
    s1 = CanonicalForm((1,))
    assert multiply(s1, s1).is_identity()
    # s1 s2 s1 * s1 = s1 s2; checked against one-line composition
    prod = multiply(a, CanonicalForm((1, 3)))
    assert prod == CanonicalForm((1, 2))
    assert to_one_line(prod).image == compose(to_one_line(a).image, to_one_line(CanonicalForm((1, 3))).image)


def test_multiply_matches_composition():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 6)
        a, b = random_permutation(n, rng), random_permutation(n, rng)
        assert to_one_line(multiply(a, b)).image == compose(to_one_line(a).image, to_one_line(b).image)


def test_inverse():
    rng = random.Random(2)
    for _ in range(100):
        a = random_permutation(5, rng)
        inv = inverse(a)
        assert multiply(a, inv).is_identity()
        assert inv.length() == a.length()
        img = to_one_line(a).image
        expected = tuple(sorted(range(1, 6), key=lambda x: img[x - 1]))
        assert to_one_line(inv).image == expected


def test_single_block_inverse_is_reversal():
    for j in range(1, 5):
        for i in range(1, j + 1):
            vec = list(range(2, 6))
            vec[j - 1] = i
            a = CanonicalForm(tuple(vec))
            assert inverse(a) == normal_form(tuple(reversed(a.word())), 5)


def test_longest_element():
    assert longest_element(2) == CanonicalForm((1,))
    assert longest_element(3).word() == (1, 2, 1)
    assert longest_element(5).length() == 10
    assert to_one_line(longest_element(4)).image == (4, 3, 2, 1)


def test_complement():
    n = 5
    assert complement(CanonicalForm.identity(n), n) == longest_element(n)
    assert complement(longest_element(n), n).is_identity()
    with pytest.raises(WordError):
        complement(longest_element(5), 4)


def test_complement_stability():
    # [w^-1 w0^(n+1)] = [w^-1 w0^n] s_{n,1}
    for w in permutations(3):
        for n in (3, 4, 5):
            lhs = complement(w, n + 1)
            rhs = normal_form(complement(w, n).embed(n + 1).word() + tuple(range(n, 0, -1)), n + 1)
            assert lhs == rhs


def test_is_left_reduced():
    assert all(is_left_reduced(t, CanonicalForm.identity(4)) for t in range(1, 4))
    assert not is_left_reduced(1, CanonicalForm((1,)))
    for n in range(2, 6):
        for u in permutations(n):
            for t in range(1, n):
                assert is_left_reduced(t, u) == is_reduced((t,) + u.word(), n)


def test_embedding_is_stable():
    rng = random.Random(3)
    for _ in range(100):
        a, b = random_permutation(4, rng), random_permutation(4, rng)
        assert multiply(a, b).embed(6) == multiply(a.embed(6), b.embed(6))
        assert inverse(a).embed(6) == inverse(a.embed(6))
        assert a.embed(6).length() == a.length()
        assert a.embed(6).trimmed() == a.trimmed()


def test_word_to_image_matches_independent_product():
    rng = random.Random(4)
    for _ in range(100):
        w = [rng.randint(1, 5) for _ in range(rng.randint(0, 12))]
        assert tuple(word_to_image(w, 6)) == image_of_word(w, 6)


# --- text forms ------------------------------------------------------------------


def test_text_round_trips():
    for u in permutations(4):
        assert parse_canonical(str(u)) == u
        p = to_one_line(u)
        assert parse_one_line(str(p)) == p
    w = parse_word("s3 s2 s5")
    assert str(w) == "s3 s2 s5"
    assert parse_word(str(w)) == w


def test_parse_errors_carry_position():
    with pytest.raises(WordError) as err:
        parse_word("s1 s2 t3")
    assert err.value.position == 6
    with pytest.raises(WordError):
        parse_canonical("i=(1,4)")
    with pytest.raises(WordError):
        OneLinePermutation((1, 1, 2))
    with pytest.raises(WordError):
        parse_word("s4", rank=3)
