"""Ordered alphabets with involution, words, and the subword embedding order.

Words are compared by the Higman ordering: u embeds in v when there is a
strictly increasing position map sending each letter of u to a position of v
carrying a letter at least as large. All values here are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class Alphabet:
    """Finite letter set with a partial order and an order-preserving involution.

    The order is supplied as a list of pairs (a, b) meaning a <= b and is
    closed reflexively and transitively at construction; a violation of
    antisymmetry is a construction error. The involution defaults to the
    identity on letters it does not mention and is symmetrized (bar(a) = b
    implies bar(b) = a) before being validated.
    """

    def __init__(self, letters, order=(), involution=None):
        self.letters: tuple[str, ...] = tuple(letters)
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letters in alphabet")
        for a in self.letters:
            if not isinstance(a, str) or not a or "[" in a or "]" in a:
                raise ValueError(f"invalid letter {a!r}")
        self.index: dict[str, int] = {a: i for i, a in enumerate(self.letters)}

        pairs = {(a, a) for a in self.letters}
        for a, b in order:
            if a not in self.index or b not in self.index:
                raise ValueError(f"order pair ({a!r}, {b!r}) uses unknown letters")
            pairs.add((a, b))
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in product(tuple(pairs), repeat=2):
                if b == c and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
        for a, b in pairs:
            if a != b and (b, a) in pairs:
                raise ValueError(f"letter order is not antisymmetric: {a!r} and {b!r}")
        self._leq: frozenset[tuple[str, str]] = frozenset(pairs)

        bar = dict(involution or {})
        for a, b in list(bar.items()):
            if a not in self.index or b not in self.index:
                raise ValueError(f"involution pair ({a!r}, {b!r}) uses unknown letters")
            if bar.setdefault(b, a) != a:
                raise ValueError(f"involution is not self-inverse at {b!r}")
        for a in self.letters:
            bar.setdefault(a, a)
        for a in self.letters:
            if bar[bar[a]] != a:
                raise ValueError(f"involution is not self-inverse at {a!r}")
        for a, b in pairs:
            if (bar[a], bar[b]) not in pairs:
                raise ValueError(
                    f"involution does not preserve the order on ({a!r}, {b!r})"
                )
        self._bar: dict[str, str] = bar

        # Minimal common upper bounds of letter pairs, precomputed.
        self._letter_mubs: dict[tuple[str, str], tuple[str, ...]] = {}
        for a, b in product(self.letters, repeat=2):
            ups = [c for c in self.letters if self.leq(a, c) and self.leq(b, c)]
            mins = tuple(
                c for c in ups
                if not any(d != c and self.leq(d, c) for d in ups)
            )
            self._letter_mubs[(a, b)] = mins

        self._hash = hash((self.letters, self._leq, tuple(sorted(bar.items()))))

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self._leq

    def bar(self, a: str) -> str:
        return self._bar[a]

    def letter_mubs(self, a: str, b: str) -> tuple[str, ...]:
        return self._letter_mubs[(a, b)]

    def word(self, text) -> "Word":
        """Parse a word from a string; multi-character letters use brackets.

        "ab" means the two letters a, b; "a[b1]c" means a, b1, c.
        An iterable of letter strings is accepted as well.
        """
        if not isinstance(text, str):
            return Word(self, tuple(text))
        symbols = []
        i = 0
        while i < len(text):
            if text[i] == "[":
                j = text.find("]", i)
                if j < 0:
                    raise ValueError(f"unterminated bracket in word {text!r}")
                symbols.append(text[i + 1:j])
                i = j + 1
            else:
                symbols.append(text[i])
                i += 1
        return Word(self, tuple(symbols))

    def __eq__(self, other):
        return (
            isinstance(other, Alphabet)
            and self.letters == other.letters
            and self._leq == other._leq
            and self._bar == other._bar
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Alphabet({'-'.join(self.letters)})"


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters from one alphabet."""

    alphabet: Alphabet
    symbols: tuple[str, ...] = ()

    def __post_init__(self):
        for a in self.symbols:
            if a not in self.alphabet.index:
                raise ValueError(f"letter {a!r} not in alphabet")

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return "".join(a if len(a) == 1 else f"[{a}]" for a in self.symbols)

    def __repr__(self):
        return f"Word({str(self)!r})"


def sort_key(w: Word) -> tuple:
    """Canonical total order on words: length, then letter indices."""
    return (len(w.symbols), tuple(w.alphabet.index[a] for a in w.symbols))


def _check_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError("words from different alphabets")


def concat(u: Word, v: Word) -> Word:
    _check_same_alphabet(u, v)
    return Word(u.alphabet, u.symbols + v.symbols)


def involute(w: Word) -> Word:
    """Reverse the word and apply the letter involution pointwise."""
    A = w.alphabet
    return Word(A, tuple(A.bar(a) for a in reversed(w.symbols)))


def embeds(u: Word, v: Word) -> bool:
    """Higman ordering: u embeds in v.

    Greedy left-to-right matching: each letter of u takes the leftmost unused
    position of v carrying a letter above it. The greedy choice is optimal
    because taking the leftmost match leaves maximal room to the right.
    """
    _check_same_alphabet(u, v)
    return _matched_prefix_len(u.alphabet, u.symbols, v.symbols) == len(u.symbols)


def _matched_prefix_len(A: Alphabet, u: tuple, v: tuple) -> int:
    i = 0
    for b in v:
        if i < len(u) and A.leq(u[i], b):
            i += 1
    return i


def _matched_suffix_len(A: Alphabet, u: tuple, v: tuple) -> int:
    i = len(u) - 1
    for b in reversed(v):
        if i >= 0 and A.leq(u[i], b):
            i -= 1
    return len(u) - 1 - i


def max_embeddable_prefix(u: Word, w: Word) -> tuple[Word, Word]:
    """Split u = u'u'' with u' the longest prefix of u embedding in w.

    Prefix-embeddability is downward closed in prefix length, so the greedy
    match count is exactly the longest embeddable prefix.
    """
    _check_same_alphabet(u, w)
    k = _matched_prefix_len(u.alphabet, u.symbols, w.symbols)
    return Word(u.alphabet, u.symbols[:k]), Word(u.alphabet, u.symbols[k:])


def max_embeddable_suffix(u: Word, w: Word) -> tuple[Word, Word]:
    """Split u = u'u'' with u'' the longest suffix of u embedding in w."""
    _check_same_alphabet(u, w)
    k = _matched_suffix_len(u.alphabet, u.symbols, w.symbols)
    n = len(u.symbols)
    return Word(u.alphabet, u.symbols[:n - k]), Word(u.alphabet, u.symbols[n - k:])


def minimal_words(words) -> tuple[Word, ...]:
    """The antichain of minimal elements of a set of words, canonically sorted.

    Membership is checked against the whole set: w survives iff no other word
    of the set embeds in it, which is order-independent (embeds is a partial
    order, so equal-but-distinct dominators cannot occur).
    """
    pool = sorted(set(words), key=sort_key)
    out = [
        w for w in pool
        if not any(v != w and embeds(v, w) for v in pool)
    ]
    return tuple(out)


def _minimal_tuples(A: Alphabet, tuples: set) -> set:
    def emb(s, t):
        i = 0
        for b in t:
            if i < len(s) and A.leq(s[i], b):
                i += 1
        return i == len(s)

    return {t for t in tuples if not any(s != t and emb(s, t) for s in tuples)}


@lru_cache(maxsize=None)
def _mub_tuples(u: Word, v: Word) -> frozenset:
    A = u.alphabet
    us, vs = u.symbols, v.symbols
    memo: dict[tuple[int, int], set] = {}

    def go(i: int, j: int) -> set:
        key = (i, j)
        if key in memo:
            return memo[key]
        if i == len(us):
            res = {vs[j:]}
        elif j == len(vs):
            res = {us[i:]}
        else:
            out = set()
            for t in go(i + 1, j):
                out.add((us[i],) + t)
            for t in go(i, j + 1):
                out.add((vs[j],) + t)
            for c in A.letter_mubs(us[i], vs[j]):
                for t in go(i + 1, j + 1):
                    out.add((c,) + t)
            res = _minimal_tuples(A, out)
        memo[key] = res
        return res

    return frozenset(go(0, 0))


def min_upper_bounds(u: Word, v: Word) -> set[Word]:
    """Minimal words above both u and v; the basis of the up-set intersection.

    Recursive merge on suffix pairs: at each step consume the head of u, the
    head of v, or a minimal common upper bound of the two heads (when the
    letter poset provides one), minimizing at every level. Every common upper
    bound of u and v lies above some returned word, and no returned word
    exceeds |u| + |v| letters. Letter heads without a common upper bound
    simply contribute no superposed branch.
    """
    _check_same_alphabet(u, v)
    if sort_key(v) < sort_key(u):
        u, v = v, u
    return {Word(u.alphabet, t) for t in _mub_tuples(u, v)}
