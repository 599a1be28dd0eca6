"""Independent brute-force oracles used to pin expected values in tests.

Everything here is deliberately written from the definitions, sharing no
algorithmic ideas with the package (exhaustive embedding search instead of
greedy matching, pointwise set evaluation instead of basis calculus,
subset enumeration instead of bitmask filters).
"""

from itertools import combinations, product

from higman.words import Word, sort_key


def embeds_exhaustive(u: Word, v: Word) -> bool:
    """Search all strictly increasing position maps."""
    A = u.alphabet
    n, m = len(u.symbols), len(v.symbols)
    if n > m:
        return False
    for positions in combinations(range(m), n):
        if all(A.leq(u.symbols[i], v.symbols[p]) for i, p in enumerate(positions)):
            return True
    return False


def words_upto(alphabet, n: int) -> list[Word]:
    """All words of length <= n, in canonical order."""
    out = []
    for k in range(n + 1):
        for syms in product(alphabet.letters, repeat=k):
            out.append(Word(alphabet, syms))
    return sorted(out, key=sort_key)


def member(generators, w: Word) -> bool:
    """w lies above some generator (exhaustive embedding)."""
    return any(embeds_exhaustive(u, w) for u in generators)


def concat_member(gens_f, gens_g, w: Word) -> bool:
    """w splits as a member of ↑gens_f times a member of ↑gens_g."""
    A = w.alphabet
    for i in range(len(w.symbols) + 1):
        if member(gens_f, Word(A, w.symbols[:i])) and member(
            gens_g, Word(A, w.symbols[i:])
        ):
            return True
    return False


def grid_points(dims):
    return sorted(product(*(range(n) for n in dims)))


def upset_count_oracle(dims) -> int:
    """Count up-closed subsets of the chain product by subset enumeration."""
    points = grid_points(dims)
    above = {
        p: [q for q in points if all(x <= y for x, y in zip(p, q))]
        for p in points
    }
    count = 0
    for r in range(len(points) + 1):
        for sub in combinations(points, r):
            s = set(sub)
            if all(q in s for p in s for q in above[p]):
                count += 1
    return count


def antichain_count_oracle(dims) -> int:
    """Count antichains of the chain product; equals the up-set count."""
    points = grid_points(dims)

    def below(p, q):
        return p != q and all(x <= y for x, y in zip(p, q))

    count = 0
    for r in range(len(points) + 1):
        for sub in combinations(points, r):
            if not any(below(p, q) or below(q, p) for p, q in combinations(sub, 2)):
                count += 1
    return count
