"""Resolvers: on-the-fly choice of transitions for a nondeterministic VASS.

A resolver is any callable ``(history, letter) -> Transition | None``. The
history carries the full run so far, so history-dependent resolvers are
expressible even though the resolver built for B only looks at the current
configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, FrozenSet, Optional, Sequence, Tuple, Union

from .errors import VassError
from .reduction import ReductionOutput
from .vass import DEFAULT_BUDGET, Antichain, Configuration, Run, Transition, Vass, as_budget, enabled, fire, post
from .verdicts import Counterexample, FailureAt, OkUpTo


@dataclass(frozen=True)
class History:
    """Configurations and transitions taken so far, plus the current configuration."""

    steps: Tuple[Tuple[Configuration, Transition], ...]
    current: Configuration

    @classmethod
    def start(cls, c: Configuration) -> "History":
        return cls((), c)

    def extend(self, t: Transition) -> "History":
        return History(self.steps + ((self.current, t),), fire(self.current, t))

    def as_run(self) -> Run:
        start = self.steps[0][0] if self.steps else self.current
        return Run(start, tuple(t for _, t in self.steps))


Resolver = Callable[[History, str], Optional[Transition]]


class InvalidChoice(VassError):
    """A resolver returned a transition that is not enabled or reads another letter."""


@dataclass(frozen=True)
class UniqueResolver:
    """Pick the first enabled transition; the only choice on a deterministic VASS."""

    vass: Vass

    def __call__(self, history: History, letter: str) -> Optional[Transition]:
        options = enabled(self.vass, history.current, letter)
        return options[0] if options else None


@dataclass(frozen=True)
class JancarResolver:
    """Resolver for B: prefer the decrementing gadget entry whenever it can fire.

    If the tested counter is zero the gadget is disabled and the ordinary
    zero-test transition is the only option. Elsewhere B is deterministic.
    """

    vass: Vass
    gadget_entries: FrozenSet[int]

    def __call__(self, history: History, letter: str) -> Optional[Transition]:
        c = history.current
        options = [
            i for i in self.vass.outgoing(c.state, letter)
            if all(x + e >= 0 for x, e in zip(c.counters, self.vass.transitions[i].effect))
        ]
        if not options:
            return None
        for i in options:
            if i in self.gadget_entries:
                return self.vass.transitions[i]
        return self.vass.transitions[options[0]]


def jancar_resolver(r: ReductionOutput) -> JancarResolver:
    entries = frozenset(
        i for i, t in enumerate(r.b.transitions) if r.tags[t.target].kind == "Gadget"
    )
    return JancarResolver(r.b, entries)


def _checked(resolver: Resolver, history: History, letter: str) -> Optional[Transition]:
    t = resolver(history, letter)
    if t is None:
        return None
    if t.letter != letter:
        raise InvalidChoice(f"resolver answered {t} for letter {letter}")
    fire(history.current, t)  # raises NotEnabled
    return t


def resolver_run(v: Vass, r: Resolver, w: Sequence[str]) -> Union[Run, FailureAt]:
    """Follow ``r`` along ``w`` from the initial configuration."""
    h = History.start(v.initial)
    for pos, a in enumerate(w, start=1):
        t = _checked(r, h, a)
        if t is None:
            return FailureAt(pos, h.as_run())
        h = h.extend(t)
    return h.as_run()


def check_history_det_bounded(v: Vass, r: Resolver, maxlen: int, budget=DEFAULT_BUDGET):
    """Check that following ``r`` accepts every word of ``L(v)`` up to ``maxlen``.

    Acceptance uses ``v.finals``. Words are visited in length-lexicographic
    order; the first one that is in the language but where the resolver
    fails or ends in a non-accepting configuration is returned as a
    ``Counterexample``.
    """
    if maxlen < 0:
        raise ValueError("maxlen must be nonnegative")
    budget = as_budget(budget)
    frontier: list = [((), (v.initial,), History.start(v.initial))]
    for depth in range(maxlen + 1):
        nxt: list = []
        for word, ac, hist in frontier:
            budget.tick()
            budget.saw_antichain(len(ac))
            if any(v.is_accepting(c) for c in ac):
                if hist is None or not v.is_accepting(hist.current):
                    return Counterexample(word)
            if depth == maxlen:
                continue
            for a in v.alphabet:
                succ = post(v, ac, a)
                if not succ:
                    continue
                h2 = None
                if hist is not None:
                    t = _checked(r, hist, a)
                    h2 = hist.extend(t) if t is not None else None
                nxt.append((word + (a,), succ, h2))
        frontier = nxt
    return OkUpTo(maxlen)
