"""Alphabet validation, the embedding order, splits, and minimal upper bounds."""

from itertools import product

import pytest

from higman.words import (
    Alphabet,
    Word,
    concat,
    embeds,
    involute,
    max_embeddable_prefix,
    max_embeddable_suffix,
    min_upper_bounds,
    minimal_words,
    sort_key,
)

from helpers import ab, ab_ordered, abc_primed
from oracles import embeds_exhaustive, words_upto


class TestAlphabet:
    def test_order_closure(self):
        A = Alphabet(["a", "b", "c"], order=[("a", "b"), ("b", "c")])
        assert A.leq("a", "c")
        assert A.leq("a", "a")
        assert not A.leq("c", "a")

    def test_antisymmetry_violation(self):
        with pytest.raises(ValueError, match="antisymmetric"):
            Alphabet(["a", "b"], order=[("a", "b"), ("b", "a")])

    def test_duplicate_letters(self):
        with pytest.raises(ValueError, match="duplicate"):
            Alphabet(["a", "a"])

    def test_unknown_order_letter(self):
        with pytest.raises(ValueError, match="unknown"):
            Alphabet(["a"], order=[("a", "z")])

    def test_involution_symmetrized(self):
        A = abc_primed()
        assert A.bar("a") == "a'"
        assert A.bar("a'") == "a"

    def test_involution_not_self_inverse(self):
        with pytest.raises(ValueError, match="self-inverse"):
            Alphabet(["a", "b", "c"], involution={"a": "b", "b": "c"})

    def test_involution_must_preserve_order(self):
        with pytest.raises(ValueError, match="preserve"):
            Alphabet(
                ["a", "b", "p", "q"],
                order=[("a", "b")],
                involution={"a": "p", "b": "q", "q": "b", "p": "a"},
            )

    def test_word_parsing_brackets(self):
        A = abc_primed()
        w = A.word("a[a']b")
        assert w.symbols == ("a", "a'", "b")
        with pytest.raises(ValueError, match="unterminated"):
            A.word("a[a'")

    def test_word_rejects_foreign_letter(self):
        with pytest.raises(ValueError, match="not in alphabet"):
            ab().word("az")


class TestConcat:
    def test_neutral(self):
        A = ab()
        assert concat(A.word("ab"), A.word("")) == A.word("ab")
        assert concat(A.word(""), A.word("ab")) == A.word("ab")

    def test_juxtaposition(self):
        A = ab()
        assert concat(A.word("a"), A.word("b")) == A.word("ab")
        assert concat(A.word("aa"), A.word("bb")) == A.word("aabb")

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError, match="different alphabets"):
            concat(ab().word("a"), ab_ordered().word("a"))


class TestInvolute:
    def test_empty(self):
        A = ab()
        assert involute(A.word("")) == A.word("")

    def test_identity_involution_reverses(self):
        A = ab()
        assert involute(A.word("ab")) == A.word("ba")

    def test_primed_letters(self):
        A = abc_primed()
        assert involute(A.word("ab")) == A.word("[b'][a']")

    def test_self_inverse_and_antimorphism(self):
        A = abc_primed()
        for u in words_upto(A, 2):
            assert involute(involute(u)) == u
        u, v = A.word("a[b']"), A.word("bc")
        assert involute(concat(u, v)) == concat(involute(v), involute(u))


class TestEmbeds:
    def test_empty_word_embeds_everywhere(self):
        A = ab()
        for w in words_upto(A, 3):
            assert embeds(A.word(""), w)

    def test_subsequence(self):
        A = ab()
        assert embeds(A.word("aa"), A.word("aba"))
        assert not embeds(A.word("ab"), A.word("ba"))

    def test_letterwise_order(self):
        A = ab_ordered()
        assert embeds(A.word("aa"), A.word("bb"))
        assert not embeds(A.word("bb"), A.word("aa"))

    @pytest.mark.parametrize("make", [ab, ab_ordered])
    def test_is_partial_order(self, make):
        A = make()
        ws = words_upto(A, 4)
        for u in ws:
            assert embeds(u, u)
        for u in ws:
            for v in ws:
                if embeds(u, v) and embeds(v, u):
                    assert u == v
        import random

        rng = random.Random(20260817)
        for _ in range(4000):
            u, v, w = rng.choice(ws), rng.choice(ws), rng.choice(ws)
            if embeds(u, v) and embeds(v, w):
                assert embeds(u, w)

    @pytest.mark.parametrize("make", [ab, ab_ordered])
    def test_greedy_agrees_with_exhaustive(self, make):
        A = make()
        ws = words_upto(A, 5)
        for u in ws:
            for v in ws:
                assert embeds(u, v) == embeds_exhaustive(u, v)

    def test_concatenation_compatible(self):
        A = ab_ordered()
        ws = words_upto(A, 3)
        import random

        rng = random.Random(7)
        for _ in range(2000):
            u, v = rng.choice(ws), rng.choice(ws)
            u2, v2 = rng.choice(ws), rng.choice(ws)
            if embeds(u, v) and embeds(u2, v2):
                assert embeds(concat(u, u2), concat(v, v2))

    def test_involution_compatible(self):
        A = abc_primed()
        ws = words_upto(A, 2)
        for u in ws:
            for v in ws:
                assert embeds(u, v) == embeds(involute(u), involute(v))


class TestSplits:
    def test_suffix_examples(self):
        A = ab()
        assert max_embeddable_suffix(A.word("aa"), A.word("b")) == (
            A.word("aa"),
            A.word(""),
        )
        assert max_embeddable_suffix(A.word("bb"), A.word("b")) == (
            A.word("b"),
            A.word("b"),
        )
        assert max_embeddable_suffix(A.word("ab"), A.word("abab")) == (
            A.word(""),
            A.word("ab"),
        )

    def test_prefix_examples(self):
        A = ab()
        assert max_embeddable_prefix(A.word("ab"), A.word("b")) == (
            A.word(""),
            A.word("ab"),
        )
        assert max_embeddable_prefix(A.word("ab"), A.word("a")) == (
            A.word("a"),
            A.word("b"),
        )
        assert max_embeddable_prefix(A.word(""), A.word("bbb")) == (
            A.word(""),
            A.word(""),
        )

    @pytest.mark.parametrize("make", [ab, ab_ordered])
    def test_split_is_maximal(self, make):
        """The returned suffix embeds and no longer suffix does; dually for prefixes."""
        A = make()
        ws = words_upto(A, 4)
        for u in ws:
            for w in ws:
                u1, u2 = max_embeddable_suffix(u, w)
                assert concat(u1, u2) == u
                assert embeds_exhaustive(u2, w)
                n = len(u.symbols)
                if len(u2.symbols) < n:
                    longer = Word(A, u.symbols[n - len(u2.symbols) - 1:])
                    assert not embeds_exhaustive(longer, w)
                p1, p2 = max_embeddable_prefix(u, w)
                assert concat(p1, p2) == u
                assert embeds_exhaustive(p1, w)
                if len(p1.symbols) < n:
                    longer = Word(A, u.symbols[:len(p1.symbols) + 1])
                    assert not embeds_exhaustive(longer, w)


class TestMinUpperBounds:
    def test_incomparable_letters(self):
        A = ab()
        assert min_upper_bounds(A.word("a"), A.word("b")) == {
            A.word("ab"),
            A.word("ba"),
        }

    def test_shuffle_of_squares(self):
        A = ab()
        got = min_upper_bounds(A.word("aa"), A.word("bb"))
        assert got == {
            A.word(t) for t in ["aabb", "abab", "abba", "baab", "baba", "bbaa"]
        }

    def test_equal_words(self):
        A = ab()
        assert min_upper_bounds(A.word("a"), A.word("a")) == {A.word("a")}

    def test_ordered_letters(self):
        A = ab_ordered()
        assert min_upper_bounds(A.word("a"), A.word("b")) == {A.word("b")}

    @pytest.mark.parametrize("make", [ab, ab_ordered])
    def test_complete_and_antichain(self, make):
        A = make()
        ws = words_upto(A, 3)
        universe = words_upto(A, 6)
        for u in ws:
            for v in ws:
                mubs = min_upper_bounds(u, v)
                assert minimal_words(mubs) == tuple(sorted(mubs, key=sort_key))
                for m in mubs:
                    assert embeds_exhaustive(u, m) and embeds_exhaustive(v, m)
                    assert len(m.symbols) <= len(u.symbols) + len(v.symbols)
                for w in universe:
                    if embeds_exhaustive(u, w) and embeds_exhaustive(v, w):
                        assert any(embeds_exhaustive(m, w) for m in mubs)


class TestMinimalWords:
    def test_order_independent_with_letter_order(self):
        """Equal-length words can compare under a letter order; minimalization
        must not depend on the letter-index tie-break."""
        A = Alphabet(["b", "a"], order=[("a", "b")])
        aa, abw = A.word("aa"), A.word("ab")
        assert minimal_words([abw, aa]) == (aa,)
        assert minimal_words([aa, abw]) == (aa,)

    def test_canonical_sorting(self):
        A = ab()
        ws = [A.word("ba"), A.word("b"), A.word("aa")]
        assert minimal_words(ws) == (A.word("b"), A.word("aa"))
