"""Final segments of A* as canonical antichain bases, with the algebra on them.

A final segment is an up-closed language under the subword order, represented
by its unique antichain of minimal words. The operations form the lattice
(union/intersection), the monoid (concatenation, neutral element A*), the two
residuals, and the involution. The empty segment is admitted as a value of the
algebra; envelope construction rejects it separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import (
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


@dataclass(frozen=True)
class FinalSegment:
    """Up-closed set of words, stored as its sorted minimal-word antichain.

    basis () is the empty segment; basis (empty word,) is all of A*.
    Build values through canonicalize() so equality is structural.
    """

    alphabet: Alphabet
    basis: tuple[Word, ...]


def canonicalize(alphabet: Alphabet, words) -> FinalSegment:
    """The final segment generated upward by the given words."""
    return FinalSegment(alphabet, minimal_words(words))


def segment(alphabet: Alphabet, *texts) -> FinalSegment:
    """Convenience constructor from word strings."""
    return canonicalize(alphabet, [alphabet.word(t) for t in texts])


def empty_segment(alphabet: Alphabet) -> FinalSegment:
    return FinalSegment(alphabet, ())


def full_segment(alphabet: Alphabet) -> FinalSegment:
    return FinalSegment(alphabet, (Word(alphabet, ()),))


def is_empty(F: FinalSegment) -> bool:
    return not F.basis


def is_full(F: FinalSegment) -> bool:
    return len(F.basis) == 1 and not F.basis[0].symbols


def contains(F: FinalSegment, w: Word) -> bool:
    return any(embeds(u, w) for u in F.basis)


def subset_of(F: FinalSegment, G: FinalSegment) -> bool:
    """F ⊆ G. Up-closure makes the basis check sufficient."""
    return all(contains(G, u) for u in F.basis)


def leq(F: FinalSegment, G: FinalSegment) -> bool:
    """G ⊆ F; this is F ≤ G in the reversed order where A* is least."""
    return subset_of(G, F)


def _check_same_alphabet(F: FinalSegment, G: FinalSegment) -> None:
    if F.alphabet != G.alphabet:
        raise ValueError("segments over different alphabets")


def union(F: FinalSegment, G: FinalSegment) -> FinalSegment:
    _check_same_alphabet(F, G)
    return canonicalize(F.alphabet, F.basis + G.basis)


def intersect(F: FinalSegment, G: FinalSegment) -> FinalSegment:
    """Meet: pairwise minimal common upper bounds of the two bases."""
    _check_same_alphabet(F, G)
    gens: list[Word] = []
    for u in F.basis:
        for v in G.basis:
            gens.extend(min_upper_bounds(u, v))
    return canonicalize(F.alphabet, gens)


def concat_seg(F: FinalSegment, G: FinalSegment) -> FinalSegment:
    """Monoid product: ↑u · ↑v = ↑(uv) on generators. ∅ absorbs."""
    _check_same_alphabet(F, G)
    return canonicalize(
        F.alphabet, [concat(u, v) for u in F.basis for v in G.basis]
    )


@lru_cache(maxsize=None)
def right_residual(F: FinalSegment, w: Word) -> FinalSegment:
    """{x : xw ∈ F}.

    For a generator u, xw ⊇ u iff x lies above the prefix u' left over after
    the longest suffix of u embeds in w; shorter suffixes only lengthen the
    leftover prefix, so the maximal split per generator suffices.
    """
    return canonicalize(
        F.alphabet, [max_embeddable_suffix(u, w)[0] for u in F.basis]
    )


@lru_cache(maxsize=None)
def left_residual(w: Word, F: FinalSegment) -> FinalSegment:
    """{v : wv ∈ F}; mirror image of right_residual."""
    return canonicalize(
        F.alphabet, [max_embeddable_prefix(u, w)[1] for u in F.basis]
    )


def involute_seg(F: FinalSegment) -> FinalSegment:
    return canonicalize(F.alphabet, [involute(u) for u in F.basis])


def seg_key(F: FinalSegment) -> tuple:
    """Canonical total order on segments, for deterministic listings."""
    return (len(F.basis), tuple(sort_key(u) for u in F.basis))


def format_segment(F: FinalSegment) -> str:
    if not F.basis:
        return "∅"
    if is_full(F):
        return "A*"
    if len(F.basis) == 1:
        return f"↑{F.basis[0]}"
    return "↑{" + ",".join(str(u) for u in F.basis) + "}"
