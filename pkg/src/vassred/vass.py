"""Vector addition systems with states: syntax and exact semantics.

A ``Vass`` is a finite automaton over an alphabet whose transitions carry an
integer effect vector; configurations pair a state with a nonnegative counter
vector. Everything here is an immutable value and every operation is a pure
function.

Prefix-successor sets are pruned to antichains (componentwise-maximal vectors
per state). This is sound for readability and coverability because a larger
counter vector can fire everything a smaller one can. Procedures that count
or exhibit runs enumerate without pruning.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InvariantViolation, NotEnabled, ResourceBound
from .verdicts import AmbiguousWitness, OkUpTo, Word

DEFAULT_BUDGET = 10**7

Vector = Tuple[int, ...]
Antichain = Tuple["Configuration", ...]


class Budget:
    """Node counter shared by a bounded search.

    Searches call :meth:`tick` once per explored node and raise
    :class:`ResourceBound` once ``limit`` is passed. ``max_antichain`` records
    the widest antichain seen, for reporting.
    """

    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit < 0:
            raise ValueError("budget must be nonnegative")
        self.limit = limit
        self.explored = 0
        self.max_antichain = 0

    def tick(self, n: int = 1) -> None:
        self.explored += n
        if self.explored > self.limit:
            raise ResourceBound(self.limit, self.explored)

    def saw_antichain(self, size: int) -> None:
        if size > self.max_antichain:
            self.max_antichain = size

    def __repr__(self):
        return f"Budget(limit={self.limit}, explored={self.explored})"


def as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_BUDGET if budget is None else int(budget))


def dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """``u >= v`` componentwise."""
    return all(a >= b for a, b in zip(u, v))


@dataclass(frozen=True, order=True)
class Configuration:
    state: str
    counters: Vector

    def __post_init__(self):
        counters = tuple(int(x) for x in self.counters)
        object.__setattr__(self, "counters", counters)
        if any(x < 0 for x in counters):
            raise InvariantViolation(f"negative counter in configuration {self}")

    def covers(self, other: "Configuration") -> bool:
        return self.state == other.state and dominates(self.counters, other.counters)

    def __str__(self):
        return f"{self.state}({', '.join(map(str, self.counters))})"


@dataclass(frozen=True)
class Transition:
    source: str
    letter: str
    effect: Vector
    target: str

    def __post_init__(self):
        object.__setattr__(self, "effect", tuple(int(x) for x in self.effect))

    def __str__(self):
        eff = ", ".join(f"{x:+d}" for x in self.effect)
        return f"{self.source} --{self.letter} ({eff})--> {self.target}"


@dataclass(frozen=True)
class Vass:
    """A ``dimension``-VASS.

    ``alphabet`` is ordered; that order is the enumeration order used by all
    word searches. ``transitions`` is an ordered tuple and may contain equal
    entries, which then count as distinct transitions.
    """

    dimension: int
    alphabet: Tuple[str, ...]
    states: Tuple[str, ...]
    transitions: Tuple[Transition, ...]
    initial: Configuration
    finals: Tuple[Configuration, ...] = ()

    def __post_init__(self):
        for name in ("alphabet", "states", "transitions", "finals"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.dimension < 1:
            raise InvariantViolation("dimension must be positive")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvariantViolation("duplicate letter in alphabet")
        if len(set(self.states)) != len(self.states):
            raise InvariantViolation("duplicate state")
        states = set(self.states)
        letters = set(self.alphabet)
        for t in self.transitions:
            if t.source not in states or t.target not in states:
                raise InvariantViolation(f"transition {t} uses an unknown state")
            if t.letter not in letters:
                raise InvariantViolation(f"transition {t} reads a letter outside the alphabet")
            if len(t.effect) != self.dimension:
                raise InvariantViolation(
                    f"transition {t} has effect of length {len(t.effect)}, expected {self.dimension}"
                )
        for c in (self.initial, *self.finals):
            if len(c.counters) != self.dimension:
                raise InvariantViolation(f"configuration {c} has wrong dimension")

    @cached_property
    def _outgoing(self) -> Dict[Tuple[str, str], Tuple[int, ...]]:
        table = defaultdict(list)
        for i, t in enumerate(self.transitions):
            table[t.source, t.letter].append(i)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def _finals_by_state(self) -> Dict[str, Tuple[Vector, ...]]:
        table = defaultdict(list)
        for f in self.finals:
            table[f.state].append(f.counters)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def letter_rank(self) -> Dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def outgoing(self, state: str, letter: str) -> Tuple[int, ...]:
        """Indices of the transitions leaving ``state`` over ``letter``."""
        return self._outgoing.get((state, letter), ())

    def is_accepting(self, c: Configuration) -> bool:
        return any(dominates(c.counters, f) for f in self._finals_by_state.get(c.state, ()))

    def replace(self, **changes) -> "Vass":
        fields = dict(
            dimension=self.dimension,
            alphabet=self.alphabet,
            states=self.states,
            transitions=self.transitions,
            initial=self.initial,
            finals=self.finals,
        )
        fields.update(changes)
        return Vass(**fields)


@dataclass(frozen=True)
class Run:
    """A firable sequence of transitions from ``start``."""

    start: Configuration
    steps: Tuple[Transition, ...] = ()
    configurations: Tuple[Configuration, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        configs = [self.start]
        for t in self.steps:
            configs.append(fire(configs[-1], t))
        object.__setattr__(self, "configurations", tuple(configs))

    @property
    def end(self) -> Configuration:
        return self.configurations[-1]

    @property
    def word(self) -> Word:
        return tuple(t.letter for t in self.steps)

    @property
    def effect(self) -> Vector:
        k = len(self.start.counters)
        total = [0] * k
        for t in self.steps:
            for j, x in enumerate(t.effect):
                total[j] += x
        return tuple(total)

    def __len__(self):
        return len(self.steps)


# --- firing -----------------------------------------------------------------


def _add(u: Vector, v: Vector) -> Optional[Vector]:
    out = tuple(a + b for a, b in zip(u, v))
    if any(x < 0 for x in out):
        return None
    return out


def enabled(v: Vass, c: Configuration, a: str) -> List[Transition]:
    """Transitions over ``a`` that can fire in ``c``, in declaration order."""
    return [
        v.transitions[i]
        for i in v.outgoing(c.state, a)
        if _add(c.counters, v.transitions[i].effect) is not None
    ]


def fire(c: Configuration, t: Transition) -> Configuration:
    if t.source != c.state:
        raise NotEnabled(f"{t} does not leave state {c.state}")
    if len(t.effect) != len(c.counters):
        raise NotEnabled(f"{t} has the wrong dimension for {c}")
    u = _add(c.counters, t.effect)
    if u is None:
        raise NotEnabled(f"{t} would make a counter negative in {c}")
    return Configuration(t.target, u)


# --- antichains -------------------------------------------------------------


def antichain(configs: Iterable[Configuration]) -> Antichain:
    """Keep only the componentwise-maximal configurations per state.

    The result is sorted, so equal antichains compare and hash equal.
    """
    per_state: Dict[str, List[Vector]] = defaultdict(list)
    for c in configs:
        vecs = per_state[c.state]
        if any(dominates(x, c.counters) for x in vecs):
            continue
        vecs[:] = [x for x in vecs if not dominates(c.counters, x)]
        vecs.append(c.counters)
    return tuple(sorted(Configuration(q, u) for q, vecs in per_state.items() for u in vecs))


def post(v: Vass, configs: Iterable[Configuration], a: str) -> Antichain:
    """Antichain of configurations reachable by one ``a``-transition."""
    out = []
    for c in configs:
        for i in v.outgoing(c.state, a):
            u = _add(c.counters, v.transitions[i].effect)
            if u is not None:
                out.append(Configuration(v.transitions[i].target, u))
    return antichain(out)


def reads(v: Vass, c: Configuration, w: Sequence[str]) -> bool:
    """Whether some run from ``c`` reads ``w``."""
    current: Antichain = (c,)
    for a in w:
        current = post(v, current, a)
        if not current:
            return False
    return True


def _bounded_language(v: Vass, maxlen: int, budget, accept) -> List[Word]:
    if maxlen < 0:
        raise ValueError("maxlen must be nonnegative")
    budget = as_budget(budget)
    out: List[Word] = []
    frontier: List[Tuple[Word, Antichain]] = [((), (v.initial,))]
    for depth in range(maxlen + 1):
        nxt = []
        for word, ac in frontier:
            budget.tick()
            budget.saw_antichain(len(ac))
            if accept(ac):
                out.append(word)
            if depth == maxlen:
                continue
            for a in v.alphabet:
                succ = post(v, ac, a)
                if succ:
                    nxt.append((word + (a,), succ))
        frontier = nxt
    return out


def bounded_trace_language(v: Vass, maxlen: int, budget=DEFAULT_BUDGET) -> List[Word]:
    """All words of length at most ``maxlen`` readable from the initial configuration.

    Words come out in length-lexicographic order with respect to the
    alphabet's declaration order.
    """
    return _bounded_language(v, maxlen, budget, lambda ac: True)


def bounded_cover_language(v: Vass, maxlen: int, budget=DEFAULT_BUDGET) -> List[Word]:
    """Words of length at most ``maxlen`` with a run ending above some final configuration."""
    return _bounded_language(v, maxlen, budget, lambda ac: any(v.is_accepting(c) for c in ac))


def all_states_accepting(v: Vass) -> Vass:
    """Same VASS whose final set is every state at the zero vector (trace semantics)."""
    zero = (0,) * v.dimension
    return v.replace(finals=tuple(Configuration(q, zero) for q in v.states))


def is_deterministic(v: Vass) -> bool:
    return all(len(ix) <= 1 for ix in v._outgoing.values())


# --- exhaustive run enumeration (no pruning) --------------------------------


def enumerate_runs(
    v: Vass, start: Configuration, maxlen: int, budget=DEFAULT_BUDGET
) -> Iterator[Tuple[Tuple[int, ...], Configuration]]:
    """Every run of length at most ``maxlen`` from ``start``.

    Yields ``(transition indices, end configuration)`` depth-first, children
    in alphabet order then declaration order. Used as the unpruned oracle.
    """
    budget = as_budget(budget)
    order = sorted(range(len(v.transitions)), key=lambda i: (v.letter_rank[v.transitions[i].letter], i))
    by_source: Dict[str, List[int]] = defaultdict(list)
    for i in order:
        by_source[v.transitions[i].source].append(i)

    stack = [((), start)]
    while stack:
        path, c = stack.pop()
        budget.tick()
        yield path, c
        if len(path) == maxlen:
            continue
        children = []
        for i in by_source.get(c.state, ()):
            u = _add(c.counters, v.transitions[i].effect)
            if u is not None:
                children.append((path + (i,), Configuration(v.transitions[i].target, u)))
        stack.extend(reversed(children))


def naive_language(
    v: Vass, maxlen: int, semantics: str = "trace", start: Optional[Configuration] = None,
    budget=DEFAULT_BUDGET,
) -> set:
    """Bounded language by brute-force run enumeration, as a set of words."""
    start = v.initial if start is None else start
    words = set()
    for path, end in enumerate_runs(v, start, maxlen, budget):
        if semantics == "trace" or v.is_accepting(end):
            words.add(tuple(v.transitions[i].letter for i in path))
    return words


def word_key(v: Vass, word: Word) -> Tuple[int, Tuple[int, ...]]:
    """Sort key for length-lexicographic order over ``v``'s alphabet."""
    return len(word), tuple(v.letter_rank[a] for a in word)


def is_unambiguous_bounded(v: Vass, maxlen: int, budget=DEFAULT_BUDGET):
    """Check that no accepted word of length at most ``maxlen`` has two accepting runs.

    Acceptance uses ``v.finals`` (coverability). Returns ``OkUpTo(maxlen)`` or
    an ``AmbiguousWitness`` for the length-lexicographically least word with
    two distinct accepting runs.
    """
    runs: Dict[Word, List[Tuple[int, ...]]] = defaultdict(list)
    for path, end in enumerate_runs(v, v.initial, maxlen, budget):
        if v.is_accepting(end):
            runs[tuple(v.transitions[i].letter for i in path)].append(path)
    for word in sorted(runs, key=lambda w: word_key(v, w)):
        paths = runs[word]
        if len(paths) > 1:
            first, second = paths[0], paths[1]
            return AmbiguousWitness(
                word,
                Run(v.initial, tuple(v.transitions[i] for i in first)),
                Run(v.initial, tuple(v.transitions[i] for i in second)),
                first,
                second,
            )
    return OkUpTo(maxlen)
