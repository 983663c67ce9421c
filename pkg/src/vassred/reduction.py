"""Compile a two-counter machine into the VASSs N, A and B.

Naming scheme (state ids are otherwise opaque):

========================  ===========================
N                         ``q`` and ``q~p`` (split)
A                         ``q@A``, ``q~p@A``, ``h@A``
B, copy of N              ``q@B``, ``q~p@B``
B, copy of A              ``q@A@B``, ``q~p@A@B``, ``h@A@B``
B, gadget for (q, ., p)   ``q!i@B``
========================  ===========================

``q~p`` is the split state of the zero test from ``q`` to ``p``; ``i`` is the
tested counter. Since a machine state has at most one zero test, these names
are collision-free as long as machine state names avoid ``@ ~ !``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .errors import InvalidMachine, MalformedN
from .twocm import CounterMachine, Op, Violation, validate
from .vass import Configuration, Transition, Vass

ALPHABET_N = tuple(op.value for op in Op)
HALT_LETTER = "h"
ALPHABET_A = ALPHABET_N + (HALT_LETTER,)
RESERVED = "@~!"


def split_name(q: str, p: str) -> str:
    return f"{q}~{p}"


def a_name(q: str) -> str:
    return f"{q}@A"


def b_name(q: str) -> str:
    return f"{q}@B"


def ab_name(q: str) -> str:
    return f"{q}@A@B"


def gadget_name(q: str, counter: int) -> str:
    return f"{q}!{counter}@B"


HALT_A = a_name(HALT_LETTER)
HALT_B = ab_name(HALT_LETTER)


@dataclass(frozen=True)
class Tag:
    """Provenance of a state of A or B.

    ``kind`` is one of ``NCopy``, ``ACopy``, ``SplitState``, ``Gadget``,
    ``HaltState``; ``origin`` names the state of N it stems from (empty for
    halt states); ``vass`` is ``"A"`` or ``"B"``; ``copy`` tells which half
    of B a state lives in (``"N"`` or ``"A"``).
    """

    kind: str
    origin: str
    vass: str
    copy: str = ""


@dataclass(frozen=True)
class ZeroTestTriple:
    q: str
    q_t: str
    p: str
    letter: str

    @property
    def counter(self) -> int:
        return int(self.letter[-1])


@dataclass(frozen=True)
class ReductionOutput:
    n: Vass
    a: Vass
    b: Vass
    tags: Dict[str, Tag] = field(compare=False)
    triples: Tuple[ZeroTestTriple, ...] = ()
    machine: CounterMachine = None

    def gadget_entries(self) -> Tuple[Transition, ...]:
        """Transitions of B that enter a gadget state."""
        return tuple(t for t in self.b.transitions if self.tags[t.target].kind == "Gadget")


def _check(m: CounterMachine) -> None:
    violations = validate(m)
    for q in m.states:
        if any(ch in q for ch in RESERVED) or q == HALT_LETTER:
            violations.append(Violation(q, "reserved-name", f"state names may not contain {RESERVED!r} or be {HALT_LETTER!r}"))
    if violations:
        raise InvalidMachine(violations)


def _unit(counter: int, sign: int) -> Tuple[int, int]:
    return (sign, 0) if counter == 1 else (0, sign)


def _zero_vec(states, dim=2):
    return tuple(Configuration(q, (0,) * dim) for q in states)


def _rename(v: Vass, f) -> Tuple[List[str], List[Transition]]:
    states = [f(q) for q in v.states]
    ts = [Transition(f(t.source), t.letter, t.effect, f(t.target)) for t in v.transitions]
    return states, ts


def build_n(m: CounterMachine) -> Vass:
    _check(m)
    states = list(m.states)
    ts: List[Transition] = []
    for t in m.transitions:
        if t.op.is_zero_test:
            mid = split_name(t.source, t.target)
            states.append(mid)
            ts.append(Transition(t.source, t.op.value, (0, 0), mid))
            ts.append(Transition(mid, t.op.value, (0, 0), t.target))
        else:
            sign = 1 if t.op.kind == "inc" else -1
            ts.append(Transition(t.source, t.op.value, _unit(t.op.counter, sign), t.target))
    return Vass(2, ALPHABET_N, tuple(states), tuple(ts), Configuration(m.initial, (0, 0)), _zero_vec(states))


def _a_from_n(m: CounterMachine, n: Vass) -> Vass:
    states, ts = _rename(n, a_name)
    states.append(HALT_A)
    ts.append(Transition(a_name(m.final), HALT_LETTER, (0, 0), HALT_A))
    return Vass(2, ALPHABET_A, tuple(states), tuple(ts), Configuration(a_name(m.initial), (0, 0)), _zero_vec(states))


def build_a(m: CounterMachine) -> Vass:
    return _a_from_n(m, build_n(m))


def zero_test_triples(n: Vass) -> List[ZeroTestTriple]:
    """One ``(q, q_t, p)`` per zero test of the machine ``n`` was built from."""
    split = [q for q in n.states if "~" in q]
    out = []
    for q_t in split:
        incoming = [t for t in n.transitions if t.target == q_t]
        leaving = [t for t in n.transitions if t.source == q_t]
        if len(incoming) != 1 or len(leaving) != 1:
            raise MalformedN(f"split state {q_t} must have exactly one incoming and one outgoing transition")
        t_in, t_out = incoming[0], leaving[0]
        if t_in.letter != t_out.letter or t_in.letter not in ("z_1", "z_2"):
            raise MalformedN(f"split state {q_t} is not surrounded by two transitions over the same zero test")
        if any(x != 0 for x in t_in.effect + t_out.effect):
            raise MalformedN(f"zero-test transitions around {q_t} must have no effect")
        out.append(ZeroTestTriple(t_in.source, q_t, t_out.target, t_in.letter))
    return out


def build_b(m: CounterMachine) -> ReductionOutput:
    n = build_n(m)
    a = _a_from_n(m, n)
    tags: Dict[str, Tag] = {}
    machine_states = set(m.states)

    def n_kind(q):
        return "NCopy" if q in machine_states else "SplitState"

    for q in n.states:
        tags[a_name(q)] = Tag("ACopy" if q in machine_states else "SplitState", q, "A", "A")
    tags[HALT_A] = Tag("HaltState", "", "A", "A")

    a_states, a_ts = _rename(a, lambda s: s + "@B")
    for q in n.states:
        tags[ab_name(q)] = Tag("ACopy" if q in machine_states else "SplitState", q, "B", "A")
    tags[HALT_B] = Tag("HaltState", "", "B", "A")

    n_states, n_ts = _rename(n, b_name)
    for q in n.states:
        tags[b_name(q)] = Tag(n_kind(q), q, "B", "N")

    triples = zero_test_triples(n)
    g_states, g_ts = [], []
    for tr in triples:
        g = gadget_name(tr.q, tr.counter)
        g_states.append(g)
        tags[g] = Tag("Gadget", tr.q, "B", "")
        g_ts.append(Transition(b_name(tr.q), tr.letter, _unit(tr.counter, -1), g))
        g_ts.append(Transition(g, tr.letter, _unit(tr.counter, +1), ab_name(tr.p)))

    states = a_states + n_states + g_states
    b = Vass(
        2,
        ALPHABET_A,
        tuple(states),
        tuple(a_ts + n_ts + g_ts),
        Configuration(b_name(m.initial), (0, 0)),
        _zero_vec(states),
    )
    return ReductionOutput(n, a, b, tags, tuple(triples), m)
