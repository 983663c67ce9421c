"""Seeded random inputs for property checks and the acceptance suite."""

from __future__ import annotations

import random
from typing import List, Sequence, Tuple

from .twocm import CounterMachine, random_machine
from .vass import Configuration, Transition, Vass


def machine_corpus(seed: int, count: int, max_states: int = 8) -> List[CounterMachine]:
    rng = random.Random(seed)
    return [random_machine(rng, rng.randint(2, max_states)) for _ in range(count)]


def random_vass(
    rng: random.Random,
    alphabet: Sequence[str] = ("a", "b"),
    max_states: int = 6,
    max_transitions: int = 9,
    effect_range: Tuple[int, int] = (-2, 2),
    max_initial: int = 2,
) -> Vass:
    """A random 2-VASS with trace semantics."""
    n = rng.randint(1, max_states)
    states = tuple(f"s{i}" for i in range(n))
    lo, hi = effect_range
    ts = tuple(
        Transition(rng.choice(states), rng.choice(alphabet), (rng.randint(lo, hi), rng.randint(lo, hi)), rng.choice(states))
        for _ in range(rng.randint(0, max_transitions))
    )
    init = Configuration(states[0], (rng.randint(0, max_initial), rng.randint(0, max_initial)))
    finals = tuple(Configuration(q, (0, 0)) for q in states)
    return Vass(2, tuple(alphabet), states, ts, init, finals)


def mutate(rng: random.Random, v: Vass, effect_range: Tuple[int, int] = (-2, 2)) -> Vass:
    """Copy of ``v`` with one transition's effect or target changed, or one transition added."""
    ts = list(v.transitions)
    lo, hi = effect_range
    if ts and rng.random() < 0.7:
        i = rng.randrange(len(ts))
        t = ts[i]
        if rng.random() < 0.5:
            j = rng.randrange(v.dimension)
            eff = list(t.effect)
            eff[j] = rng.randint(lo, hi)
            ts[i] = Transition(t.source, t.letter, tuple(eff), t.target)
        else:
            ts[i] = Transition(t.source, t.letter, t.effect, rng.choice(v.states))
    else:
        ts.append(Transition(
            rng.choice(v.states), rng.choice(v.alphabet),
            tuple(rng.randint(lo, hi) for _ in range(v.dimension)), rng.choice(v.states),
        ))
    return v.replace(transitions=tuple(ts))


def vass_pairs(seed: int, count: int, **kwargs) -> List[Tuple[Vass, Vass]]:
    """Random pairs; every other pair is a VASS and a one-edit mutant of it."""
    rng = random.Random(seed)
    pairs = []
    for k in range(count):
        a = random_vass(rng, **kwargs)
        b = mutate(rng, a) if k % 2 else random_vass(rng, **kwargs)
        pairs.append((a, b))
    return pairs
