"""Two-counter (Minsky) machines.

Every non-final state either increments one counter and moves on, or has a
decrement/zero-test pair on the same counter. The machine is deterministic:
the decrement branch is taken iff the counter is positive.
"""

from __future__ import annotations

import random as _random
from collections import defaultdict, deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from .errors import InvalidMachine
from .verdicts import Word


class Op(str, Enum):
    INC_1 = "inc_1"
    INC_2 = "inc_2"
    DEC_1 = "dec_1"
    DEC_2 = "dec_2"
    Z_1 = "z_1"
    Z_2 = "z_2"

    @property
    def kind(self) -> str:
        return self.value.split("_")[0]

    @property
    def counter(self) -> int:
        """1 or 2."""
        return int(self.value[-1])

    @property
    def is_zero_test(self) -> bool:
        return self.kind == "z"

    def __str__(self):
        return self.value


OPS = tuple(Op)


@dataclass(frozen=True)
class CmTransition:
    source: str
    op: Op
    target: str

    def __post_init__(self):
        object.__setattr__(self, "op", Op(self.op))


@dataclass(frozen=True)
class CounterMachine:
    initial: str
    final: str
    transitions: Tuple[CmTransition, ...] = ()
    states: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        ts = tuple(t if isinstance(t, CmTransition) else CmTransition(*t) for t in self.transitions)
        object.__setattr__(self, "transitions", ts)
        if not self.states:
            seen = dict.fromkeys([self.initial, self.final])
            for t in ts:
                seen.setdefault(t.source)
                seen.setdefault(t.target)
            object.__setattr__(self, "states", tuple(seen))
        else:
            object.__setattr__(self, "states", tuple(self.states))

    def outgoing(self, q: str) -> List[CmTransition]:
        return [t for t in self.transitions if t.source == q]


@dataclass(frozen=True)
class CmConfig:
    state: str
    counters: Tuple[int, int] = (0, 0)

    def __post_init__(self):
        object.__setattr__(self, "counters", tuple(self.counters))
        if len(self.counters) != 2 or any(x < 0 for x in self.counters):
            raise ValueError(f"bad counter pair {self.counters}")

    def __str__(self):
        return f"{self.state}({self.counters[0]}, {self.counters[1]})"


@dataclass(frozen=True)
class Violation:
    state: str
    rule: str
    message: str

    def __str__(self):
        return f"{self.state}: {self.rule}: {self.message}"


@dataclass(frozen=True)
class Halted:
    steps: int
    ops: Tuple[Op, ...]


@dataclass(frozen=True)
class Running:
    after: int


CmRunResult = Union[Halted, Running]


def validate(m: CounterMachine) -> List[Violation]:
    out: List[Violation] = []
    known = set(m.states)
    for q in (m.initial, m.final):
        if q not in known:
            out.append(Violation(q, "unknown-state", "initial/final state not among the states"))
    for t in m.transitions:
        for q in (t.source, t.target):
            if q not in known:
                out.append(Violation(q, "unknown-state", f"transition {t.source} {t.op} {t.target}"))

    by_source: Dict[str, List[CmTransition]] = defaultdict(list)
    for t in m.transitions:
        by_source[t.source].append(t)

    for q in m.states:
        ts = by_source.get(q, [])
        if q == m.final:
            if ts:
                out.append(Violation(q, "final-outgoing", "the final state has outgoing transitions"))
            continue
        ops = sorted(t.op.kind for t in ts)
        if len(ts) == 1:
            if ts[0].op.kind != "inc":
                out.append(Violation(q, "lone-transition", f"single outgoing transition is {ts[0].op}, not an increment"))
        elif len(ts) == 2 and ops == ["dec", "z"]:
            if ts[0].op.counter != ts[1].op.counter:
                out.append(Violation(q, "mixed-counters", "decrement and zero test act on different counters"))
        elif not ts:
            out.append(Violation(q, "no-outgoing", "non-final state without outgoing transitions"))
        else:
            shape = ", ".join(str(t.op) for t in ts)
            out.append(Violation(q, "bad-shape", f"outgoing transitions [{shape}] are neither one increment nor a dec/z pair"))
    return out


def require_valid(m: CounterMachine) -> None:
    violations = validate(m)
    if violations:
        raise InvalidMachine(violations)


def step(m: CounterMachine, c: CmConfig) -> Optional[Tuple[Op, CmConfig]]:
    """The unique move from ``c`` as ``(op, successor)``; ``None`` once halted."""
    if c.state == m.final:
        return None
    ts = m.outgoing(c.state)
    if len(ts) == 1:
        t = ts[0]
        counters = list(c.counters)
        counters[t.op.counter - 1] += 1
        return t.op, CmConfig(t.target, tuple(counters))
    dec = next(t for t in ts if t.op.kind == "dec")
    zero = next(t for t in ts if t.op.kind == "z")
    i = dec.op.counter - 1
    if c.counters[i] > 0:
        counters = list(c.counters)
        counters[i] -= 1
        return dec.op, CmConfig(dec.target, tuple(counters))
    return zero.op, CmConfig(zero.target, c.counters)


def run_bounded(m: CounterMachine, fuel: int) -> CmRunResult:
    """Run from ``initial(0, 0)`` for at most ``fuel`` steps."""
    require_valid(m)
    if fuel < 0:
        raise ValueError("fuel must be nonnegative")
    # per state: (inc op, target) or (counter, dec op, dec target, zero op, zero target)
    table = {}
    for q in m.states:
        ts = m.outgoing(q)
        if len(ts) == 1:
            table[q] = (ts[0].op, ts[0].target)
        elif ts:
            dec = next(t for t in ts if t.op.kind == "dec")
            zero = next(t for t in ts if t.op.kind == "z")
            table[q] = (dec.op.counter - 1, dec.op, dec.target, zero.op, zero.target)
    state, counters = m.initial, [0, 0]
    ops: List[Op] = []
    for _ in range(fuel):
        if state == m.final:
            break
        move = table[state]
        if len(move) == 2:
            op, state = move
            counters[op.counter - 1] += 1
        else:
            i, dec_op, dec_target, zero_op, zero_target = move
            if counters[i] > 0:
                counters[i] -= 1
                op, state = dec_op, dec_target
            else:
                op, state = zero_op, zero_target
        ops.append(op)
    if state == m.final:
        return Halted(len(ops), tuple(ops))
    return Running(fuel)


def halting_word(m: CounterMachine, fuel: int) -> Optional[Word]:
    """The word A reads along the halting computation, with ``h`` appended.

    Zero tests are written twice because the VASS splits each one into two
    transitions. ``None`` if the machine does not halt within ``fuel`` steps.
    """
    result = run_bounded(m, fuel)
    if not isinstance(result, Halted):
        return None
    return word_from_ops(result.ops)


def word_from_ops(ops) -> Word:
    """Write each op, doubling zero tests, then append ``h``."""
    word: List[str] = []
    for op in map(Op, ops):
        word.append(op.value)
        if op.is_zero_test:
            word.append(op.value)
    word.append("h")
    return tuple(word)


def final_reachable(m: CounterMachine) -> bool:
    """Whether the final state is reachable in the control graph, ignoring counters."""
    seen = {m.initial}
    queue = deque([m.initial])
    while queue:
        q = queue.popleft()
        if q == m.final:
            return True
        for t in m.outgoing(q):
            if t.target not in seen:
                seen.add(t.target)
                queue.append(t.target)
    return False


def random_machine(rng: _random.Random, n_states: int, p_inc: float = 0.5) -> CounterMachine:
    """A random valid machine over states ``q0 .. q{n-1}``; ``q0`` initial, last final."""
    if n_states < 2:
        raise ValueError("need at least two states")
    names = [f"q{i}" for i in range(n_states)]
    ts: List[CmTransition] = []
    for q in names[:-1]:
        i = rng.choice((1, 2))
        if rng.random() < p_inc:
            ts.append(CmTransition(q, Op(f"inc_{i}"), rng.choice(names)))
        else:
            ts.append(CmTransition(q, Op(f"dec_{i}"), rng.choice(names)))
            ts.append(CmTransition(q, Op(f"z_{i}"), rng.choice(names)))
    return CounterMachine(names[0], names[-1], tuple(ts), tuple(names))
