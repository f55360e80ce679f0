"""Acyclic orientations of the diagram and sink-flip sequences.

Orientation convention: building an orientation from a Coxeter word
directs every edge toward the endpoint that occurs EARLIER in the word,
so the first letter is a sink.  Playing a sink reverses all of its
edges (conjugating the Coxeter element by that generator), and a
sequence is admissible when every letter is a sink at its turn.  Under
this convention, on any edge the head (sink-side) endpoint always plays
first and the two endpoints alternate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .context import DynkinDiagram, GroupContext
from .errors import CoxeterInputError, PreconditionError


@dataclass(frozen=True)
class Orientation:
    """heads[k] is the head (arrow target) of diagram.edges[k]."""

    diagram: DynkinDiagram
    heads: tuple

    def __post_init__(self):
        for (u, v), h in zip(self.diagram.edges, self.heads):
            if h not in (u, v):
                raise CoxeterInputError(f"head {h} not an endpoint of edge ({u},{v})")
        if self._has_cycle():
            raise CoxeterInputError("orientation is cyclic")

    def _has_cycle(self) -> bool:
        # Kahn's algorithm on the arrows tail -> head.
        n = self.diagram.n
        out_deg = {v: 0 for v in range(1, n + 1)}
        preds: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for (u, v), h in zip(self.diagram.edges, self.heads):
            tail = u if h == v else v
            out_deg[tail] += 1
            preds[h].append(tail)
        ready = [v for v, d in out_deg.items() if d == 0]
        removed = 0
        while ready:
            v = ready.pop()
            removed += 1
            for t in preds[v]:
                out_deg[t] -= 1
                if out_deg[t] == 0:
                    ready.append(t)
        return removed < n

    def head_of(self, u: int, v: int) -> int:
        a, b = min(u, v), max(u, v)
        try:
            k = self.diagram.edges.index((a, b))
        except ValueError:
            raise CoxeterInputError(f"({u},{v}) is not an edge") from None
        return self.heads[k]


def orientation_of_coxeter_word(ctx: GroupContext, word) -> Orientation:
    """Orientation attached to a Coxeter word (a permutation of 1..n).

    Each edge points toward its earlier letter, making word[0] a sink.
    Two words give the same orientation exactly when they agree up to
    swapping non-adjacent letters.
    """
    letters = tuple(word)
    if sorted(letters) != list(range(1, ctx.n + 1)):
        raise CoxeterInputError(f"{letters!r} is not a permutation of 1..{ctx.n}")
    pos = {v: k for k, v in enumerate(letters)}
    heads = tuple(u if pos[u] < pos[v] else v for u, v in ctx.diagram.edges)
    return Orientation(ctx.diagram, heads)


def coxeter_word_of_orientation(ctx: GroupContext, o: Orientation):
    """A Coxeter word for an orientation: lowest-index sinks first.

    The output lists every vertex once so that each edge's head precedes
    its tail; it round-trips with orientation_of_coxeter_word up to
    commutation of non-adjacent letters.
    """
    current = o
    word = []
    remaining = set(range(1, ctx.n + 1))
    while remaining:
        available = [v for v in sorted(remaining) if v in sinks(ctx, current)]
        if not available:
            raise CoxeterInputError("orientation is cyclic")  # unreachable for valid input
        v = available[0]
        word.append(v)
        current = flip_sink(ctx, current, v)
        remaining.remove(v)
    return tuple(word)


def _sinks(o: Orientation) -> tuple:
    blocked = set()
    for (u, v), h in zip(o.diagram.edges, o.heads):
        blocked.add(u if h == v else v)
    return tuple(v for v in range(1, o.diagram.n + 1) if v not in blocked)


def _flip(o: Orientation, x: int) -> Orientation:
    if x not in _sinks(o):
        raise PreconditionError(f"vertex {x} is not a sink")
    heads = tuple(
        (u if h == v else v) if x in (u, v) else h
        for (u, v), h in zip(o.diagram.edges, o.heads)
    )
    return Orientation(o.diagram, heads)


def sinks(ctx: GroupContext, o: Orientation) -> tuple:
    """Vertices whose incident edges all point inward; isolated vertices count."""
    return _sinks(o)


def flip_sink(ctx: GroupContext, o: Orientation, x: int) -> Orientation:
    """Reverse every edge at the sink x (play x)."""
    return _flip(o, x)


def play(ctx: GroupContext, base: Orientation, seq) -> Orientation:
    """Orientation after playing the whole sequence; validates each step."""
    current = base
    for x in seq:
        current = flip_sink(ctx, current, x)
    return current


def is_admissible(ctx: GroupContext, base: Orientation, seq) -> bool:
    current = base
    for x in seq:
        if not isinstance(x, int) or not 1 <= x <= ctx.n:
            raise CoxeterInputError(f"vertex {x!r} out of range 1..{ctx.n}")
        if x not in sinks(ctx, current):
            return False
        current = flip_sink(ctx, current, x)
    return True


@dataclass(frozen=True)
class AdmissibleSeq:
    """A validated playable sequence from a base orientation."""

    base: Orientation
    seq: tuple

    def __post_init__(self):
        current = self.base
        for x in self.seq:
            if x not in _sinks(current):
                raise PreconditionError(f"sequence {self.seq!r} is not admissible at {x}")
            current = _flip(current, x)

    def phi(self) -> tuple:
        return phi(self.seq, self.base.diagram.n)


def enumerate_admissible(ctx: GroupContext, base: Orientation, n_max: int,
                         include_shorter: bool = False):
    """Stream admissible sequences as tuples, depth-first, lowest sink first.

    Yields sequences of length exactly n_max, or of every length up to
    and including n_max (the empty sequence first) when
    include_shorter is set.
    """
    if n_max < 0:
        raise CoxeterInputError("length bound must be >= 0")

    def walk(current: Orientation, prefix: tuple):
        if include_shorter or len(prefix) == n_max:
            yield prefix
        if len(prefix) == n_max:
            return
        for x in sinks(ctx, current):
            yield from walk(flip_sink(ctx, current, x), prefix + (x,))

    yield from walk(base, ())


def phi(seq, n: int) -> tuple:
    """Occurrence counts: entry i is the number of times vertex i+1 occurs."""
    counts = [0] * n
    for x in seq:
        counts[x - 1] += 1
    return tuple(counts)


def commutation_normal_form(ctx: GroupContext, seq) -> tuple:
    """Lexicographically least word reachable by swapping non-adjacent letters.

    Greedy: repeatedly emit the smallest vertex whose first occurrence
    can be commuted to the front.
    """
    adjacent = ctx.diagram.adjacent
    rest = list(seq)
    out = []
    while rest:
        best_idx = None
        blocked: set[int] = set()
        seen: set[int] = set()
        for idx, x in enumerate(rest):
            movable = x not in blocked and x not in seen
            if movable and (best_idx is None or x < rest[best_idx]):
                best_idx = idx
            seen.add(x)
            blocked.update(v for v in range(1, ctx.n + 1) if adjacent(x, v))
        out.append(rest.pop(best_idx))
    return tuple(out)


def commutation_equivalent(ctx: GroupContext, a, b) -> bool:
    """Whether two sequences differ only by reordering non-adjacent letters."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    return commutation_normal_form(ctx, a) == commutation_normal_form(ctx, b)


def commutation_class(ctx: GroupContext, seq) -> set:
    """All words reachable by adjacent swaps of non-adjacent letters."""
    start = tuple(seq)
    seen = {start}
    stack = [start]
    adjacent = ctx.diagram.adjacent
    while stack:
        word = stack.pop()
        for k in range(len(word) - 1):
            x, y = word[k], word[k + 1]
            if x != y and not adjacent(x, y):
                swapped = word[:k] + (y, x) + word[k + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    stack.append(swapped)
    return seen


def poset_leq(ctx: GroupContext, base: Orientation, u, v, debug: bool = False) -> bool:
    """Order test for admissible sequences: occurrence-count domination.

    With debug on, the result is cross-checked against the independent
    characterization by explicit prefix search over representatives.
    """
    u, v = tuple(u), tuple(v)
    for name, seq in (("u", u), ("v", v)):
        if not is_admissible(ctx, base, seq):
            raise PreconditionError(f"sequence {name}={seq!r} is not admissible from the base")
    answer = all(a <= b for a, b in zip(phi(u, ctx.n), phi(v, ctx.n)))
    if debug:
        oracle = poset_leq_by_prefix(ctx, base, u, v)
        if oracle != answer:
            raise AssertionError(
                f"order characterizations disagree on u={u!r}, v={v!r}: "
                f"phi-domination={answer}, prefix-search={oracle}"
            )
    return answer


def poset_leq_by_prefix(ctx: GroupContext, base: Orientation, u, v) -> bool:
    """Independent order test: u is equivalent to a prefix of some word
    commutation-equivalent to v."""
    u, v = tuple(u), tuple(v)
    if len(u) > len(v):
        return False
    return any(
        commutation_equivalent(ctx, rep[: len(u)], u)
        for rep in commutation_class(ctx, v)
    )


def alternation_violations(ctx: GroupContext, base: Orientation, seq) -> list:
    """Check per-edge alternation with the sink-side endpoint first.

    Returns one (edge, subsequence) entry for every edge whose endpoint
    occurrences fail to alternate starting from the base head.
    """
    seq = tuple(seq)
    bad = []
    for (u, v), h in zip(base.diagram.edges, base.heads):
        occ = [x for x in seq if x in (u, v)]
        tail = u if h == v else v
        expected = h
        ok = True
        for x in occ:
            if x != expected:
                ok = False
                break
            expected = tail if expected == h else h
        if not ok:
            bad.append(((u, v), tuple(occ)))
    return bad


def all_coxeter_words(ctx: GroupContext):
    """Every permutation word of 1..n, in lexicographic order."""
    return [tuple(p) for p in permutations(range(1, ctx.n + 1))]
