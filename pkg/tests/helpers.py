"""Shared alphabets, the regression family, and an independent transition rule."""

from itertools import combinations, product

from higman.words import Alphabet, Word, concat, embeds, sort_key
from higman.segments import FinalSegment, canonicalize, contains
from higman.automata import TransitionSystem


def ab() -> Alphabet:
    """Two letters, no order between them, identity involution."""
    return Alphabet(["a", "b"])


def ab_ordered() -> Alphabet:
    """Two letters with a <= b."""
    return Alphabet(["a", "b"], order=[("a", "b")])


def abc() -> Alphabet:
    return Alphabet(["a", "b", "c"])


def abc_primed() -> Alphabet:
    """Six letters, trivial order, involution swapping primed and unprimed."""
    return Alphabet(
        ["a", "b", "c", "a'", "b'", "c'"],
        involution={"a": "a'", "b": "b'", "c": "c'"},
    )


def nonempty_words(A: Alphabet, max_len: int) -> list[Word]:
    out = []
    for k in range(1, max_len + 1):
        out.extend(
            sorted((Word(A, syms) for syms in product(A.letters, repeat=k)), key=sort_key)
        )
    return out


def regression_bases(alphabet=None, max_gens=3, max_len=3) -> list[FinalSegment]:
    """All antichain bases with <= max_gens generators of length <= max_len,
    plus A* (the basis holding the empty word alone). Deterministic order.
    """
    A = alphabet or ab()
    pool = nonempty_words(A, max_len)
    out = [canonicalize(A, [A.word("")])]
    for size in range(1, max_gens + 1):
        for combo in combinations(pool, size):
            if all(
                not embeds(u, v) and not embeds(v, u)
                for u, v in combinations(combo, 2)
            ):
                # pool is canonically sorted, so combo is a canonical basis
                out.append(FinalSegment(A, combo))
    return out


def times_letter_in(P: FinalSegment, a: str, Q: FinalSegment) -> bool:
    """P concatenated with the up-set of letter a lies inside Q.

    Re-stated here independently of the package internals so tests can
    cross-check transition sets.
    """
    A = P.alphabet
    return all(contains(Q, concat(p, Word(A, (a,)))) for p in P.basis)


def tf_system(A: Alphabet, elements) -> TransitionSystem:
    """Transition system on the given segments per the two-inclusion rule."""
    trans = set()
    for P in elements:
        for Q in elements:
            for a in A.letters:
                if times_letter_in(P, a, Q) and times_letter_in(Q, A.bar(a), P):
                    trans.add((P, a, Q))
    return TransitionSystem(A, tuple(elements), frozenset(trans))
