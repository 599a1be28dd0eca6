"""Transition systems and automata over an involutive ordered alphabet.

Systems can be saturated (every letter loops everywhere, transitions close
under involution-reversal and letter up-closure); saturated systems accept
up-closed languages, whose finite bases are extracted by shortest-word search.
The minimal deterministic automaton of a final segment is its left-residual
closure.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import lru_cache

from .words import Alphabet, Word, concat
from .segments import (
    FinalSegment,
    canonicalize,
    contains,
    full_segment,
    intersect,
    is_full,
    left_residual,
    right_residual,
)


@dataclass(frozen=True)
class TransitionSystem:
    """States with labeled transitions (state, letter, state)."""

    alphabet: Alphabet
    states: tuple
    transitions: frozenset

    def __post_init__(self):
        state_set = set(self.states)
        if len(state_set) != len(self.states):
            raise ValueError("duplicate states")
        for p, a, q in self.transitions:
            if p not in state_set or q not in state_set:
                raise ValueError(f"transition ({p!r}, {a!r}, {q!r}) uses unknown state")
            if a not in self.alphabet.index:
                raise ValueError(f"transition letter {a!r} not in alphabet")


@dataclass(frozen=True)
class Automaton:
    system: TransitionSystem
    initial: frozenset
    final: frozenset

    def __post_init__(self):
        state_set = set(self.system.states)
        if not self.initial <= state_set or not self.final <= state_set:
            raise ValueError("initial/final states must be system states")


@dataclass
class Dfa:
    """Total deterministic automaton; states are arbitrary hashable labels.

    minimal_dfa() instantiates it with FinalSegment states (the left
    residuals), accepting exactly at A*.
    """

    alphabet: Alphabet
    states: tuple
    start: object
    accepting: frozenset
    delta: dict = field(repr=False)


def saturate(ts: TransitionSystem) -> TransitionSystem:
    """Close under reflexivity, involution symmetry, and letter up-closure."""
    A = ts.alphabet
    trans = set(ts.transitions)
    for q in ts.states:
        for a in A.letters:
            trans.add((q, a, q))
    work = deque(trans)
    while work:
        p, a, q = work.popleft()
        for t in [(q, A.bar(a), p)] + [
            (p, b, q) for b in A.letters if b != a and A.leq(a, b)
        ]:
            if t not in trans:
                trans.add(t)
                work.append(t)
    return TransitionSystem(A, ts.states, frozenset(trans))


def is_reflexive_involutive(ts: TransitionSystem) -> bool:
    A = ts.alphabet
    T = ts.transitions
    for q in ts.states:
        for a in A.letters:
            if (q, a, q) not in T:
                return False
    for p, a, q in T:
        if (q, A.bar(a), p) not in T:
            return False
        for b in A.letters:
            if A.leq(a, b) and (p, b, q) not in T:
                return False
    return True


def _step(ts: TransitionSystem, states: frozenset, a: str) -> frozenset:
    return frozenset(q for p, x, q in ts.transitions if p in states and x == a)


def accepts(aut: Automaton, w: Word) -> bool:
    """Nondeterministic state-set simulation."""
    if w.alphabet != aut.system.alphabet:
        raise ValueError("word alphabet differs from automaton alphabet")
    current = aut.initial
    for a in w.symbols:
        current = _step(aut.system, current, a)
        if not current:
            return False
    return bool(current & aut.final)


@lru_cache(maxsize=None)
def minimal_dfa(F: FinalSegment) -> Dfa:
    """Left-residual closure of F; start F, accepting exactly A*.

    A residual accepts the empty word iff it equals A*, so acceptance is the
    is_full test. The empty segment yields the one-state rejecting automaton.
    """
    A = F.alphabet
    states = [F]
    seen = {F}
    delta = {}
    queue = deque([F])
    while queue:
        G = queue.popleft()
        for a in A.letters:
            H = left_residual(Word(A, (a,)), G)
            delta[(G, a)] = H
            if H not in seen:
                seen.add(H)
                states.append(H)
                queue.append(H)
    accepting = frozenset(G for G in states if is_full(G))
    return Dfa(A, tuple(states), F, accepting, delta)


def dfa_accepts(dfa: Dfa, w: Word) -> bool:
    q = dfa.start
    for a in w.symbols:
        q = dfa.delta[(q, a)]
    return q in dfa.accepting


def complement(dfa: Dfa) -> Dfa:
    return Dfa(
        dfa.alphabet,
        dfa.states,
        dfa.start,
        frozenset(dfa.states) - dfa.accepting,
        dfa.delta,
    )


def _shortest_word_in_product(aut: Automaton, dfa: Dfa) -> Word | None:
    """Length-lexicographically least word accepted by both machines."""
    A = aut.system.alphabet
    start = (aut.initial, dfa.start)

    def good(config):
        nfa_states, q = config
        return bool(nfa_states & aut.final) and q in dfa.accepting

    if good(start):
        return Word(A, ())
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        (nfa_states, q), syms = queue.popleft()
        for a in A.letters:
            nxt = (_step(aut.system, nfa_states, a), dfa.delta[(q, a)])
            if nxt in seen or not nxt[0]:
                continue
            if good(nxt):
                return Word(A, syms + (a,))
            seen.add(nxt)
            queue.append((nxt, syms + (a,)))
    return None


def accepted_basis(aut: Automaton) -> FinalSegment:
    """Canonical basis of the (up-closed) language of a saturated automaton.

    Repeatedly find the shortest accepted word outside the up-set generated so
    far, by product search against the complement of the current up-set. Each
    new word is incomparable to the ones found before, so the well-quasi-order
    on words makes the loop finite.
    """
    if not is_reflexive_involutive(aut.system):
        raise ValueError("accepted_basis needs a reflexive-involutive system")
    A = aut.system.alphabet
    basis: list[Word] = []
    while True:
        co = complement(minimal_dfa(canonicalize(A, basis)))
        w = _shortest_word_in_product(aut, co)
        if w is None:
            return canonicalize(A, basis)
        basis.append(w)


def language_equals_segment(
    aut: Automaton, F: FinalSegment
) -> tuple[bool, Word | None]:
    """Does the automaton accept exactly F? On failure returns a witness word.

    Needs a reflexive-involutive system (the accepted language is then
    up-closed, so basis acceptance covers all of F); the converse inclusion is
    an emptiness check of the product with the complement of F.
    """
    if not is_reflexive_involutive(aut.system):
        raise ValueError("language_equals_segment needs a reflexive-involutive system")
    for u in F.basis:
        if not accepts(aut, u):
            return False, u
    w = _shortest_word_in_product(aut, complement(minimal_dfa(F)))
    if w is not None:
        return False, w
    return True, None


def _times_letter_in(P: FinalSegment, a: str, Q: FinalSegment) -> bool:
    """P concatenated with the up-set of a single letter lies inside Q.

    The concatenation is generated by {p a : p in basis(P)}, so checking those
    products suffices.
    """
    A = P.alphabet
    la = Word(A, (a,))
    return all(contains(Q, concat(p, la)) for p in P.basis)


def min_dfa_morphism(F: FinalSegment, env=None) -> dict:
    """Map each left-residual state Y to the intersection of right residuals
    of F by the basis words of Y.

    Basis words suffice because right residuals grow with the word; the map
    sends the start state F to A*, the accepting state A* to F, and every
    transition (Y, a, a^-1 Y) to a transition (i(Y), a, i(a^-1 Y)) of the
    acceptor built on the envelope (both defining inclusions are checked
    here directly). With env given, images are also required to be envelope
    elements.
    """
    if not F.basis:
        raise ValueError("no morphism for the empty segment")
    A = F.alphabet
    dfa = minimal_dfa(F)
    image = {}
    for Y in dfa.states:
        G = full_segment(A)
        for b in Y.basis:
            G = intersect(G, right_residual(F, b))
        image[Y] = G
    if image[F] != full_segment(A):
        raise RuntimeError("morphism image of the start state is not A*")
    if image[full_segment(A)] != F:
        raise RuntimeError("morphism image of the accepting state is not F")
    for (Y, a), Y2 in dfa.delta.items():
        P, Q = image[Y], image[Y2]
        if not _times_letter_in(P, a, Q) or not _times_letter_in(Q, A.bar(a), P):
            raise RuntimeError(
                f"transition ({Y!r}, {a!r}) does not map to an envelope transition"
            )
    if env is not None:
        elements = set(env.elements)
        for Y, G in image.items():
            if G not in elements:
                raise RuntimeError(f"morphism image {G!r} is not an envelope element")
        edges = env.t_f
        for (Y, a), Y2 in dfa.delta.items():
            if (image[Y], a, image[Y2]) not in edges:
                raise RuntimeError("morphism transition missing from envelope system")
    return image


def _joint_colors(aut1: Automaton, aut2: Automaton) -> tuple[dict, dict]:
    """Stable refinement coloring computed jointly so colors are comparable."""
    nodes = [(1, q) for q in aut1.system.states] + [(2, q) for q in aut2.system.states]
    auts = {1: aut1, 2: aut2}
    out_adj = {n: [] for n in nodes}
    in_adj = {n: [] for n in nodes}
    for tag, aut in auts.items():
        for p, a, q in aut.system.transitions:
            out_adj[(tag, p)].append((a, (tag, q)))
            in_adj[(tag, q)].append((a, (tag, p)))
    color = {
        (tag, q): (q in auts[tag].initial, q in auts[tag].final)
        for tag, q in nodes
    }
    classes = len(set(color.values()))
    while True:
        sig = {}
        for n in nodes:
            outs = tuple(sorted(Counter((a, color[m]) for a, m in out_adj[n]).items()))
            ins = tuple(sorted(Counter((a, color[m]) for a, m in in_adj[n]).items()))
            sig[n] = (color[n], outs, ins)
        ranking = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {n: ranking[sig[n]] for n in nodes}
        if len(ranking) == classes:
            break
        classes = len(ranking)
    c1 = {q: color[(1, q)] for q in aut1.system.states}
    c2 = {q: color[(2, q)] for q in aut2.system.states}
    return c1, c2


def isomorphic(aut1: Automaton, aut2: Automaton) -> tuple[bool, dict | None]:
    """Decide automaton isomorphism; on success also return a witness bijection.

    The bijection must preserve transitions in both directions and map the
    initial and final sets onto each other. Color refinement prunes the
    backtracking to same-signature candidates.
    """
    ts1, ts2 = aut1.system, aut2.system
    if ts1.alphabet != ts2.alphabet:
        return False, None
    if len(ts1.states) != len(ts2.states):
        return False, None
    if len(ts1.transitions) != len(ts2.transitions):
        return False, None
    if len(aut1.initial) != len(aut2.initial) or len(aut1.final) != len(aut2.final):
        return False, None
    c1, c2 = _joint_colors(aut1, aut2)
    if sorted(Counter(c1.values()).items()) != sorted(Counter(c2.values()).items()):
        return False, None

    def letters_between(ts):
        table = defaultdict(set)
        for p, a, q in ts.transitions:
            table[(p, q)].add(a)
        return table

    lt1, lt2 = letters_between(ts1), letters_between(ts2)
    freq = Counter(c1.values())
    order = sorted(ts1.states, key=lambda q: (freq[c1[q]], ts1.states.index(q)))
    candidates = {q: [r for r in ts2.states if c2[r] == c1[q]] for q in order}
    mapping: dict = {}
    used = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        for q in candidates[p]:
            if q in used:
                continue
            ok = True
            for r, s in mapping.items():
                if lt1[(p, r)] != lt2[(q, s)] or lt1[(r, p)] != lt2[(s, q)]:
                    ok = False
                    break
            if ok and lt1[(p, p)] != lt2[(q, q)]:
                ok = False
            if not ok:
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


def articulation_states(ts: TransitionSystem, x, y) -> list:
    """States other than x, y whose removal disconnects x from y.

    Works on the underlying undirected graph with loops ignored; the result
    is ordered by distance from x (ties by state order).
    """
    if x == y:
        return []
    adj = defaultdict(set)
    for p, a, q in ts.transitions:
        if p != q:
            adj[p].add(q)
            adj[q].add(p)

    def reach(source, banned):
        seen = {source} | banned
        queue = deque([source])
        order = {source: 0}
        while queue:
            p = queue.popleft()
            for q in adj[p]:
                if q not in seen:
                    seen.add(q)
                    order[q] = order[p] + 1
                    queue.append(q)
        return order

    dist = reach(x, set())
    if y not in dist:
        raise ValueError("x and y are not connected")
    index = {q: i for i, q in enumerate(ts.states)}
    cuts = [
        z
        for z in ts.states
        if z not in (x, y) and z in dist and y not in reach(x, {z})
    ]
    cuts.sort(key=lambda z: (dist[z], index[z]))
    return cuts
