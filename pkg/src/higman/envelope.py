"""Injective envelope of the two-point space {x, y} with d(x, y) = F.

The envelope S_F is realized as the intersection closure of the right
residuals of F together with A*; its transition system over single letters
is an acceptor of F, and distances between elements are the languages of
paths. Sums of pointed spaces and concatenation decomposition live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .words import Alphabet, Word, concat, involute
from .segments import (
    FinalSegment,
    concat_seg,
    contains,
    full_segment,
    intersect,
    involute_seg,
    is_empty,
    is_full,
    left_residual,
    right_residual,
    seg_key,
    subset_of,
)
from .automata import (
    Automaton,
    TransitionSystem,
    _times_letter_in,
    accepted_basis,
    articulation_states,
    language_equals_segment,
)


@dataclass(frozen=True)
class EnvelopeLattice:
    """The envelope as a lattice of final segments plus its transition set.

    elements are closed under pairwise intersection and contain both base
    points x = A* and y = F; hasse holds the cover pairs (lower, upper)
    under inclusion; t_f holds the triples (P, a, Q) with P.up(a) inside Q
    and Q.up(bar a) inside P, which form a reflexive-involutive system.
    """

    alphabet: Alphabet
    elements: tuple
    x: FinalSegment
    y: FinalSegment
    hasse: frozenset
    t_f: frozenset

    def transition_system(self) -> TransitionSystem:
        return TransitionSystem(self.alphabet, self.elements, self.t_f)

    def automaton(self) -> Automaton:
        return Automaton(
            self.transition_system(), frozenset({self.x}), frozenset({self.y})
        )


def residual_closure(F: FinalSegment) -> set[FinalSegment]:
    """Least set containing F closed under right residuals by single letters.

    Iterating single letters reaches every right residual of F, and the
    residuals of a final segment form a finite set.
    """
    if is_empty(F):
        raise ValueError("the empty segment has no residual closure")
    A = F.alphabet
    seen = {F}
    queue = [F]
    while queue:
        G = queue.pop()
        for a in A.letters:
            H = right_residual(G, Word(A, (a,)))
            if H not in seen:
                seen.add(H)
                queue.append(H)
    return seen


@lru_cache(maxsize=None)
def build_envelope(F: FinalSegment) -> EnvelopeLattice:
    """Intersection closure of the residuals of F, with its transition set.

    The resulting automaton from x = A* to y = F accepts exactly F; this is
    re-checked on every construction.
    """
    if is_empty(F):
        raise ValueError("the empty segment has no envelope")
    A = F.alphabet
    elements = residual_closure(F)
    elements.add(full_segment(A))
    queue = list(elements)
    while queue:
        G = queue.pop()
        for H in list(elements):
            GH = intersect(G, H)
            if GH not in elements:
                elements.add(GH)
                queue.append(GH)
    ordered = tuple(sorted(elements, key=seg_key))
    covers = set()
    for P, Q in ((P, Q) for P in ordered for Q in ordered):
        if P != Q and subset_of(P, Q):
            if not any(
                R != P and R != Q and subset_of(P, R) and subset_of(R, Q)
                for R in ordered
            ):
                covers.add((P, Q))
    trans = frozenset(
        (P, a, Q)
        for P in ordered
        for Q in ordered
        for a in A.letters
        if _times_letter_in(P, a, Q) and _times_letter_in(Q, A.bar(a), P)
    )
    env = EnvelopeLattice(A, ordered, full_segment(A), F, frozenset(covers), trans)
    ok, witness = language_equals_segment(env.automaton(), F)
    if not ok:
        raise RuntimeError(f"envelope acceptor disagrees with F at {witness}")
    return env


def _segment_times_word_in(P: FinalSegment, w: Word, Q: FinalSegment) -> bool:
    # P.up(w) is generated by the products p w over basis words p
    return all(contains(Q, concat(p, w)) for p in P.basis)


@lru_cache(maxsize=None)
def dist(env: EnvelopeLattice, P: FinalSegment, Q: FinalSegment) -> FinalSegment:
    """Distance between two envelope elements: the language of paths P -> Q.

    Every basis word of the result is cross-checked against the defining
    membership rule (P.up(w) inside Q and Q.up(bar w) inside P).
    """
    members = set(env.elements)
    if P not in members or Q not in members:
        raise ValueError("dist arguments must be envelope elements")
    aut = Automaton(env.transition_system(), frozenset({P}), frozenset({Q}))
    d = accepted_basis(aut)
    for w in d.basis:
        if not _segment_times_word_in(P, w, Q) or not _segment_times_word_in(
            Q, involute(w), P
        ):
            raise RuntimeError(f"path language and membership rule disagree at {w}")
    return d


def algebra_distance(p: FinalSegment, q: FinalSegment) -> FinalSegment:
    """The words w with p.up(w) inside q and q.up(bar w) inside p.

    Purely algebraic: an intersection of left residuals, usable on arbitrary
    nonempty segments (not only envelope elements).
    """
    A = p.alphabet
    forward = reduce(
        intersect, (left_residual(u, q) for u in p.basis), full_segment(A)
    )
    backward = reduce(
        intersect, (left_residual(s, p) for s in q.basis), full_segment(A)
    )
    return intersect(forward, involute_seg(backward))


def metric_form_pair(env: EnvelopeLattice, P: FinalSegment):
    """The pair (d(x, P), d(y, P)) identifying P inside the envelope."""
    return dist(env, env.x, P), dist(env, env.y, P)


@dataclass
class PointedSpace:
    """A finite metric space over segments with two distinguished points."""

    alphabet: Alphabet
    points: tuple
    d: dict
    x: object
    y: object

    def distance(self, p, q) -> FinalSegment:
        return self.d[(p, q)]


def as_pointed(env: EnvelopeLattice) -> PointedSpace:
    table = {
        (P, Q): dist(env, P, Q) for P in env.elements for Q in env.elements
    }
    return PointedSpace(env.alphabet, env.elements, table, env.x, env.y)


def _pointed(space) -> PointedSpace:
    return space if isinstance(space, PointedSpace) else as_pointed(space)


def check_convexity(space) -> tuple[bool, list]:
    """Every split of every distance word admits a midpoint.

    For each pair (P, Q), each basis word w of d(P, Q) and each split
    w = u v there must be a point Z with u in d(P, Z) and v in d(Z, Q).
    Returns the offending (P, Q, u, v) quadruples when there are none such Z.
    """
    s = _pointed(space)
    witnesses = []
    for P in s.points:
        for Q in s.points:
            for w in s.d[(P, Q)].basis:
                for cut in range(len(w.symbols) + 1):
                    u = Word(s.alphabet, w.symbols[:cut])
                    v = Word(s.alphabet, w.symbols[cut:])
                    if not any(
                        contains(s.d[(P, Z)], u) and contains(s.d[(Z, Q)], v)
                        for Z in s.points
                    ):
                        witnesses.append((P, Q, u, v))
    return not witnesses, witnesses


def no_proper_isometric_subspace(space) -> bool:
    """No distance-preserving map of the space into a proper subset exists.

    Backtracking over all self-maps with distance-consistency pruning; a map
    that preserves distances is injective (distinct points are at distance
    other than A*), so the search is expected to fail, and quickly.
    """
    s = _pointed(space)
    pts = list(s.points)
    n = len(pts)
    assign: dict = {}

    def extend(i: int, image: frozenset) -> bool:
        if i == n:
            return len(image) < n
        p = pts[i]
        for q in pts:
            if s.d[(q, q)] != s.d[(p, p)]:
                continue
            if any(
                s.d[(q, assign[r])] != s.d[(p, r)]
                or s.d[(assign[r], q)] != s.d[(r, p)]
                for r in pts[:i]
            ):
                continue
            assign[p] = q
            if extend(i + 1, image | {q}):
                return True
            del assign[p]
        return False

    return not extend(0, frozenset())


def concat_pointed(E1: PointedSpace, E2: PointedSpace) -> PointedSpace:
    """Glue two pointed spaces by identifying y of the first with x of the
    second; cross distances are concatenations through the glue point.
    """
    if E1.alphabet != E2.alphabet:
        raise ValueError("pointed spaces over different alphabets")
    A = E1.alphabet
    left = [("l", p) for p in E1.points if p != E1.y]
    right = [("r", q) for q in E2.points if q != E2.x]
    glue = ("g",)
    points = tuple(left + [glue] + right)
    d = {}
    for lp in left + [glue]:
        p = E1.y if lp == glue else lp[1]
        for lq in left + [glue]:
            q = E1.y if lq == glue else lq[1]
            d[(lp, lq)] = E1.d[(p, q)]
    for rp in [glue] + right:
        p = E2.x if rp == glue else rp[1]
        for rq in [glue] + right:
            q = E2.x if rq == glue else rq[1]
            d[(rp, rq)] = E2.d[(p, q)]
    for lp in left:
        for rq in right:
            d[(lp, rq)] = concat_seg(E1.d[(lp[1], E1.y)], E2.d[(E2.x, rq[1])])
            d[(rq, lp)] = concat_seg(E2.d[(rq[1], E2.x)], E1.d[(E1.y, lp[1])])
    x = glue if E1.x == E1.y else ("l", E1.x)
    y = glue if E2.y == E2.x else ("r", E2.y)
    return PointedSpace(A, points, d, x, y)


def pointed_isometric(s1: PointedSpace, s2: PointedSpace) -> tuple[bool, dict | None]:
    """Distance-preserving bijection sending x to x and y to y, if any."""
    if len(s1.points) != len(s2.points):
        return False, None
    if (s1.x == s1.y) != (s2.x == s2.y):
        return False, None
    pts1 = list(s1.points)
    pts1.sort(key=lambda p: (p != s1.x, p != s1.y))
    forced = {s1.x: s2.x, s1.y: s2.y}
    mapping: dict = {}
    used = set()

    def extend(i: int) -> bool:
        if i == len(pts1):
            return True
        p = pts1[i]
        candidates = [forced[p]] if p in forced else s2.points
        for q in candidates:
            if q in used:
                continue
            if s1.d[(p, p)] != s2.d[(q, q)]:
                continue
            if any(
                s1.d[(p, r)] != s2.d[(q, mapping[r])]
                or s1.d[(r, p)] != s2.d[(mapping[r], q)]
                for r in mapping
            ):
                continue
            mapping[p] = q
            used.add(q)
            if extend(i + 1):
                return True
            del mapping[p]
            used.discard(q)
        return False

    if extend(0):
        return True, dict(mapping)
    return False, None


def verify_sum_theorem(F1: FinalSegment, F2: FinalSegment) -> bool:
    """The envelope of F1 F2 is the glued sum of the envelopes of F1 and F2."""
    if is_empty(F1) or is_empty(F2):
        raise ValueError("sum theorem needs nonempty factors")
    direct = as_pointed(build_envelope(concat_seg(F1, F2)))
    glued = concat_pointed(
        as_pointed(build_envelope(F1)), as_pointed(build_envelope(F2))
    )
    ok, _ = pointed_isometric(direct, glued)
    return ok


def decompose(F: FinalSegment) -> list[FinalSegment]:
    """Factor F as a concatenation of irreducible final segments.

    The factor boundaries are the states of the envelope system that
    disconnect x from y; consecutive-state distances are the factors. The
    product is re-checked against F and each factor against irreducibility.
    """
    if is_empty(F):
        raise ValueError("the empty segment has no decomposition")
    A = F.alphabet
    if is_full(F):
        return []
    env = build_envelope(F)
    ts = env.transition_system()
    chain = [env.x] + articulation_states(ts, env.x, env.y) + [env.y]
    factors = [dist(env, chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    product = reduce(concat_seg, factors, full_segment(A))
    if product != F:
        raise RuntimeError("decomposition factors do not multiply back to F")
    for G in factors:
        sub = build_envelope(G)
        if articulation_states(sub.transition_system(), sub.x, sub.y):
            raise RuntimeError("decomposition factor admits a further cut")
    return factors
