"""Deterministic automata over directed edges, and the path languages built from them.

A path ``[v0, ..., vn]`` is read as the word ``(v0, v0) (v0, v1) ... (v(n-1), vn)``:
the first letter marks the start vertex, so constant paths are one-letter
words and every path has a unique word.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Iterable, Iterator, Sequence

from .complex import Automorphism, SimplicialComplex, generated_group
from .errors import AlphabetMismatch
from .paths import Path, check_path, enumerate_geodesics

Letter = Hashable
Word = tuple


def _letter_key(x: Letter):
    return (type(x).__name__, x)


def path_word(path: Sequence[int]) -> Word:
    p = tuple(path)
    return ((p[0], p[0]),) + tuple(zip(p, p[1:]))


def word_path(word: Word) -> Path:
    if not word or word[0][0] != word[0][1]:
        raise ValueError("word does not begin with a start marker")
    return (word[0][0],) + tuple(b for _, b in word[1:])


def edge_alphabet(K: SimplicialComplex) -> frozenset:
    letters = {(v, v) for v in K.vertices}
    for u, v in K.edges:
        letters.add((u, v))
        letters.add((v, u))
    return frozenset(letters)


class Fsa:
    """A deterministic automaton with a partial transition function.

    Missing transitions go to an implicit rejecting sink.  Instances are
    immutable; equality is structural, so two minimized automata are equal
    exactly when their languages are.
    """

    __slots__ = ("alphabet", "n_states", "start", "accepting", "delta")

    def __init__(
        self,
        alphabet: Iterable[Letter],
        n_states: int,
        start: int,
        accepting: Iterable[int],
        transitions: dict[int, dict[Letter, int]] | Iterable[tuple[int, Letter, int]],
    ):
        self.alphabet = frozenset(alphabet)
        self.n_states = n_states
        self.start = start
        self.accepting = frozenset(accepting)
        delta: dict[int, dict[Letter, int]] = {s: {} for s in range(n_states)}
        items = (
            ((s, a, t) for s, row in transitions.items() for a, t in row.items())
            if isinstance(transitions, dict)
            else transitions
        )
        for s, a, t in items:
            if a not in self.alphabet:
                raise AlphabetMismatch(f"letter {a!r} is not in the alphabet")
            delta[s][a] = t
        self.delta = delta

    def __repr__(self) -> str:
        n_edges = sum(len(r) for r in self.delta.values())
        return f"Fsa(states={self.n_states}, transitions={n_edges}, accepting={len(self.accepting)})"

    def _key(self):
        rows = tuple(
            tuple(sorted(self.delta[s].items(), key=lambda kv: _letter_key(kv[0]))) for s in range(self.n_states)
        )
        return (self.alphabet, self.n_states, self.start, self.accepting, rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fsa):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def sorted_letters(self) -> list[Letter]:
        return sorted(self.alphabet, key=_letter_key)

    def step(self, state: int | None, letter: Letter) -> int | None:
        if state is None:
            return None
        return self.delta[state].get(letter)

    def run(self, word: Iterable[Letter]) -> int | None:
        s: int | None = self.start
        for a in word:
            s = self.step(s, a)
            if s is None:
                return None
        return s

    def accepts_word(self, word: Iterable[Letter]) -> bool:
        return self.run(word) in self.accepting

    def language(self, max_len: int) -> set[Word]:
        """Accepted words of length at most ``max_len``."""
        out: set[Word] = set()
        stack: list[tuple[int, Word]] = [(self.start, ())]
        while stack:
            s, w = stack.pop()
            if s in self.accepting:
                out.add(w)
            if len(w) < max_len:
                for a, t in self.delta[s].items():
                    stack.append((t, w + (a,)))
        return out

    def is_finite(self) -> bool:
        """True when no cycle is reachable from the start and co-reachable to acceptance."""
        live = _live_states(self)
        colour: dict[int, int] = {}

        def dfs(s: int) -> bool:
            colour[s] = 1
            for t in self.delta[s].values():
                if t not in live:
                    continue
                if colour.get(t) == 1 or (t not in colour and not dfs(t)):
                    return False
            colour[s] = 2
            return True

        return self.start not in live or dfs(self.start)

    def to_text(self) -> str:
        lines = [f"start {self.start}", "accept " + " ".join(map(str, sorted(self.accepting)))]
        for s in range(self.n_states):
            for a, t in sorted(self.delta[s].items(), key=lambda kv: _letter_key(kv[0])):
                lines.append(f"{s} {_fmt_letter(a)} {t}")
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph fsa {", "  rankdir=LR;"]
        for s in range(self.n_states):
            shape = "doublecircle" if s in self.accepting else "circle"
            lines.append(f"  q{s} [shape={shape}];")
        lines.append(f"  start [shape=point]; start -> q{self.start};")
        for s in range(self.n_states):
            for a, t in sorted(self.delta[s].items(), key=lambda kv: _letter_key(kv[0])):
                lines.append(f'  q{s} -> q{t} [label="{_fmt_letter(a)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _fmt_letter(a: Letter) -> str:
    if isinstance(a, tuple):
        return "-".join(map(str, a))
    return str(a)


def _live_states(M: Fsa) -> set[int]:
    """States from which some accepting state is reachable."""
    back: dict[int, set[int]] = {s: set() for s in range(M.n_states)}
    for s in range(M.n_states):
        for t in M.delta[s].values():
            back[t].add(s)
    live = set(M.accepting)
    queue = deque(live)
    while queue:
        t = queue.popleft()
        for s in back[t]:
            if s not in live:
                live.add(s)
                queue.append(s)
    return live


def accepts(M: Fsa, path: Sequence[int]) -> bool:
    return M.accepts_word(path_word(path))


def empty_fsa(alphabet: Iterable[Letter]) -> Fsa:
    return Fsa(alphabet, 1, 0, (), ())


def universal_fsa(alphabet: Iterable[Letter]) -> Fsa:
    letters = frozenset(alphabet)
    return Fsa(letters, 1, 0, (0,), [(0, a, 0) for a in letters])


def _check_alphabets(M1: Fsa, M2: Fsa) -> None:
    if M1.alphabet != M2.alphabet:
        raise AlphabetMismatch("automata have different alphabets")


_OPS = {
    "union": lambda a, b: a or b,
    "intersection": lambda a, b: a and b,
    "difference": lambda a, b: a and not b,
}


def combine(M1: Fsa, M2: Fsa, op: str) -> Fsa:
    """Product automaton for ``union``, ``intersection`` or ``difference``."""
    _check_alphabets(M1, M2)
    accept_if = _OPS[op]
    letters = M1.sorted_letters()
    start = (M1.start, M2.start)
    index = {start: 0}
    order = [start]
    trans = []
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        s1, s2 = pair
        for a in letters:
            t = (M1.step(s1, a), M2.step(s2, a))
            if t == (None, None):
                continue
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            trans.append((index[pair], a, index[t]))
    accepting = [i for i, (s1, s2) in enumerate(order) if accept_if(s1 in M1.accepting, s2 in M2.accepting)]
    return Fsa(M1.alphabet, len(order), 0, accepting, trans)


def union(M1: Fsa, M2: Fsa) -> Fsa:
    return combine(M1, M2, "union")


def intersection(M1: Fsa, M2: Fsa) -> Fsa:
    return combine(M1, M2, "intersection")


def difference(M1: Fsa, M2: Fsa) -> Fsa:
    return combine(M1, M2, "difference")


def complement(M: Fsa) -> Fsa:
    sink = M.n_states
    trans = [(s, a, M.delta[s].get(a, sink)) for s in range(M.n_states) for a in M.alphabet]
    trans += [(sink, a, sink) for a in M.alphabet]
    accepting = [s for s in range(M.n_states + 1) if s not in M.accepting]
    return Fsa(M.alphabet, M.n_states + 1, M.start, accepting, trans)


def minimize(M: Fsa) -> Fsa:
    """The canonical minimal automaton (partial, no dead states).

    States are numbered in breadth-first order from the start over the
    sorted alphabet, so equal languages give equal automata.
    """
    letters = M.sorted_letters()
    live = _live_states(M)
    # reachable live states; everything else collapses into the implicit sink
    reach = [M.start] if M.start in live else []
    seen = set(reach)
    head = 0
    while head < len(reach):
        s = reach[head]
        head += 1
        for a in letters:
            t = M.delta[s].get(a)
            if t is not None and t in live and t not in seen:
                seen.add(t)
                reach.append(t)
    if not reach:
        return empty_fsa(M.alphabet)

    def succ(s: int, a: Letter) -> int | None:
        t = M.delta[s].get(a)
        return t if t in seen else None

    block = {s: int(s in M.accepting) for s in reach}
    n_blocks = len(set(block.values()))
    while True:
        sig = {s: (block[s],) + tuple(block.get(succ(s, a), -1) if succ(s, a) is not None else -1 for a in letters) for s in reach}
        ids: dict[tuple, int] = {}
        new_block = {s: ids.setdefault(sig[s], len(ids)) for s in reach}
        if len(ids) == n_blocks:
            break
        block, n_blocks = new_block, len(ids)
    block = new_block
    # canonical numbering by BFS over blocks
    rep = {}
    for s in reach:
        rep.setdefault(block[s], s)
    number = {block[M.start]: 0}
    order = [block[M.start]]
    trans = []
    head = 0
    while head < len(order):
        b = order[head]
        head += 1
        s = rep[b]
        for a in letters:
            t = succ(s, a)
            if t is None:
                continue
            bt = block[t]
            if bt not in number:
                number[bt] = len(order)
                order.append(bt)
            trans.append((number[b], a, number[bt]))
    accepting = [number[block[s]] for s in reach if s in M.accepting]
    return Fsa(M.alphabet, len(order), 0, accepting, trans)


def equivalent(M1: Fsa, M2: Fsa) -> bool:
    _check_alphabets(M1, M2)
    return minimize(M1) == minimize(M2)


def trie_fsa(alphabet: Iterable[Letter], words: Iterable[Word]) -> Fsa:
    """Automaton accepting exactly the given finite set of words."""
    children: list[dict[Letter, int]] = [{}]
    accepting = set()
    for w in sorted(set(words), key=lambda w: [_letter_key(a) for a in w]):
        s = 0
        for a in w:
            if a not in children[s]:
                children[s][a] = len(children)
                children.append({})
            s = children[s][a]
        accepting.add(s)
    return Fsa(alphabet, len(children), 0, accepting, dict(enumerate(children)))


def pattern_fsa(alphabet: Iterable[Letter], patterns: Iterable[Word]) -> Fsa:
    """Aho-Corasick automaton accepting words that contain some pattern as a factor."""
    letters = sorted(frozenset(alphabet), key=_letter_key)
    pats = sorted({tuple(p) for p in patterns}, key=lambda w: [_letter_key(a) for a in w])
    if any(len(p) == 0 for p in pats):
        return universal_fsa(letters)
    children: list[dict[Letter, int]] = [{}]
    terminal = [False]
    for p in pats:
        s = 0
        for a in p:
            if a not in children[s]:
                children[s][a] = len(children)
                children.append({})
                terminal.append(False)
            s = children[s][a]
        terminal[s] = True
    fail = [0] * len(children)
    goto: list[dict[Letter, int]] = [dict() for _ in children]
    order = deque()
    for a in letters:
        t = children[0].get(a, 0)
        goto[0][a] = t
        if t:
            order.append(t)
    while order:
        s = order.popleft()
        terminal[s] = terminal[s] or terminal[fail[s]]
        for a in letters:
            t = children[s].get(a)
            if t is None:
                goto[s][a] = goto[fail[s]][a]
            else:
                fail[t] = goto[fail[s]][a]
                goto[s][a] = t
                order.append(t)
    match = len(children)
    trans = []
    for s in range(len(children)):
        for a in letters:
            t = goto[s][a]
            trans.append((s, a, match if terminal[t] else t))
    trans += [(match, a, match) for a in letters]
    return Fsa(letters, len(children) + 1, 0, [match], trans)


def path_validity_fsa(K: SimplicialComplex) -> Fsa:
    """Accepts exactly the words of valid paths in ``K``."""
    alphabet = edge_alphabet(K)
    state = {v: i + 1 for i, v in enumerate(K.vertices)}
    trans = [(0, (v, v), state[v]) for v in K.vertices]
    for u, v in K.edges:
        trans.append((state[u], (u, v), state[v]))
        trans.append((state[v], (v, u), state[u]))
    return Fsa(alphabet, len(state) + 1, 0, state.values(), trans)


def lifts(K: SimplicialComplex, beta: Sequence[int], autos: Sequence[Automorphism] = ()) -> set[Path]:
    """Images of ``beta`` under the group generated by ``autos``."""
    group = generated_group(K, autos) if autos else [Automorphism.identity(K)]
    return {g.apply(beta) for g in group}


def forbidden_subpath_fsa(K: SimplicialComplex, beta: Sequence[int], autos: Sequence[Automorphism] = ()) -> Fsa:
    """Accepts paths containing some image of ``beta`` as a run of consecutive edges."""
    b = check_path(K, beta)
    pats = [tuple(zip(p, p[1:])) for p in lifts(K, b, autos)]
    return pattern_fsa(edge_alphabet(K), pats)


def _basepoints(K: SimplicialComplex, basepoints: Iterable[int] | None) -> list[int]:
    return sorted(K.vertices if basepoints is None else set(basepoints))


def geodesic_words(K: SimplicialComplex, basepoints: Iterable[int] | None = None) -> set[Word]:
    pts = _basepoints(K, basepoints)
    return {path_word(g) for u in pts for w in pts for g in enumerate_geodesics(K, u, w)}


def geodesic_fsa(K: SimplicialComplex, basepoints: Iterable[int] | None = None) -> Fsa:
    """Minimal automaton for the geodesics between basepoints (a finite language)."""
    return minimize(trie_fsa(edge_alphabet(K), geodesic_words(K, basepoints)))


@dataclass(frozen=True)
class GsAutomaton:
    fsa: Fsa
    windows: tuple[Path, ...]          # forbidden subpaths (a leading repeat marks a start anchor)
    exact_rejects: tuple[Path, ...]    # non-GS geodesics no forbidden window can separate
    gs_words: frozenset = field(repr=False, default=frozenset())


def _factors(words: Iterable[Word]) -> set[Word]:
    out = set()
    for w in words:
        for i in range(len(w)):
            for j in range(i + 1, len(w) + 1):
                out.add(w[i:j])
    return out


def build_gs_fsa(
    K: SimplicialComplex, basepoints: Iterable[int] | None = None, autos: Sequence[Automorphism] = ()
) -> GsAutomaton:
    """The GS automaton: geodesics minus paths containing a forbidden window.

    Windows come from bad pairs: for each non-GS geodesic, the shortest run
    of its word around the leftmost bad pair that no GS-geodesic (or image
    of one) contains.  A geodesic whose every window also occurs in a
    GS-geodesic is rejected by exact match instead.
    """
    from .gs import find_bad_pairs

    pts = _basepoints(K, basepoints)
    alphabet = edge_alphabet(K)
    group = generated_group(K, autos) if autos else [Automorphism.identity(K)]
    geodesics = sorted(
        {g for u in pts for w in pts for g in enumerate_geodesics(K, u, w)}, key=lambda p: (len(p), p)
    )
    bad: dict[Path, int] = {}
    good: list[Path] = []
    for g in geodesics:
        pairs = find_bad_pairs(K, g)
        if pairs:
            bad[g] = pairs[0].index
        else:
            good.append(g)
    good_words = {path_word(g) for g in good}
    good_images = {path_word(h.apply(g)) for h in group for g in good}
    blocked = _factors(good_images)

    windows: list[Word] = []
    exact: list[Path] = []
    for g, i in bad.items():
        w = path_word(g)
        if any(_contains(w, x) for x in windows):
            continue
        choice = None
        for size in range(3, len(w) + 1):
            for s in range(max(0, i + 1 - size), min(i, len(w) - size) + 1):
                cand = w[s : s + size]
                images = {tuple((h(a), h(b)) for a, b in cand) for h in group}
                if not images & blocked:
                    choice = cand
                    break
            if choice is not None:
                break
        if choice is None:
            exact.append(g)
        else:
            windows.append(choice)
    window_images = {tuple((h(a), h(b)) for a, b in x) for h in group for x in windows}
    forbidden = pattern_fsa(alphabet, window_images)
    if exact:
        exact_images = {path_word(h.apply(g)) for h in group for g in exact}
        forbidden = union(forbidden, trie_fsa(alphabet, exact_images))
    fsa = minimize(difference(geodesic_fsa(K, pts), forbidden))
    return GsAutomaton(
        fsa,
        tuple(_window_path(x) for x in windows),
        tuple(exact),
        frozenset(good_words),
    )


def _contains(word: Word, pattern: Word) -> bool:
    n = len(pattern)
    return any(word[i : i + n] == pattern for i in range(len(word) - n + 1))


def _window_path(window: Word) -> Path:
    if window[0][0] == window[0][1]:
        return (window[0][0],) + word_path(window)
    return (window[0][0],) + tuple(b for _, b in window)


def gs_fsa(K: SimplicialComplex, basepoints: Iterable[int] | None = None, autos: Sequence[Automorphism] = ()) -> Fsa:
    return build_gs_fsa(K, basepoints, autos).fsa


def all_words(alphabet: Iterable[Letter], max_len: int) -> Iterator[Word]:
    letters = sorted(alphabet, key=_letter_key)
    for n in range(max_len + 1):
        yield from product(letters, repeat=n)


def random_fsa(rng, alphabet: Sequence[Letter], n_states: int, density: float = 0.8) -> Fsa:
    """A random partial DFA, for property tests."""
    trans = []
    for s in range(n_states):
        for a in alphabet:
            if rng.random() < density:
                trans.append((s, a, rng.randrange(n_states)))
    accepting = [s for s in range(n_states) if rng.random() < 0.4]
    return Fsa(alphabet, n_states, 0, accepting, trans)
