"""Bounded comparison of trace and coverability languages.

Both inputs are explored in lockstep: a product node holds, for the current
prefix, the antichain of configurations each VASS can be in. Prefixes are
expanded breadth-first in length-lexicographic order, and a node whose
antichain pair was already seen is dropped, since identical pairs have
identical futures. The first disagreement found is therefore the shortest,
then alphabet-least, distinguishing word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import Inconclusive
from .reduction import build_b
from .resolver import check_history_det_bounded, jancar_resolver
from .twocm import CounterMachine, Halted, final_reachable, halting_word, require_valid, run_bounded
from .vass import DEFAULT_BUDGET, Antichain, Vass, as_budget, is_deterministic, post, reads
from .verdicts import ContainedUpTo, Distinguished, EqualUpTo, OkUpTo, Witness, Word, format_word

SEMANTICS = ("trace", "cover")


def shared_alphabet(a: Vass, b: Vass) -> Tuple[str, ...]:
    """``a``'s alphabet followed by any letters only ``b`` knows."""
    extra = tuple(x for x in b.alphabet if x not in a.letter_rank)
    return a.alphabet + extra


def _acceptor(v: Vass, semantics: str):
    if semantics == "trace":
        return bool
    if semantics == "cover":
        return lambda ac: any(v.is_accepting(c) for c in ac)
    raise ValueError(f"unknown semantics {semantics!r}")


def _product_search(a: Vass, b: Vass, maxlen: int, semantics: str, budget, stop) -> Optional[Tuple[Word, bool, bool]]:
    """Return the first ``(word, in_a, in_b)`` for which ``stop(in_a, in_b)`` holds."""
    if maxlen < 0:
        raise ValueError("maxlen must be nonnegative")
    budget = as_budget(budget)
    acc_a, acc_b = _acceptor(a, semantics), _acceptor(b, semantics)
    letters = shared_alphabet(a, b)
    start = ((a.initial,), (b.initial,))
    seen = {start}
    frontier: List[Tuple[Word, Antichain, Antichain]] = [((), *start)]
    for depth in range(maxlen + 1):
        nxt = []
        for word, ac_a, ac_b in frontier:
            budget.tick()
            budget.saw_antichain(max(len(ac_a), len(ac_b)))
            in_a, in_b = acc_a(ac_a), acc_b(ac_b)
            if stop(in_a, in_b):
                return word, in_a, in_b
            if depth == maxlen:
                continue
            for x in letters:
                pair = (post(a, ac_a, x), post(b, ac_b, x))
                if not (pair[0] or pair[1]) or pair in seen:
                    continue
                seen.add(pair)
                nxt.append((word + (x,), *pair))
        frontier = nxt
    return None


def trace_equal_bounded(a: Vass, b: Vass, maxlen: int, budget=DEFAULT_BUDGET):
    """``EqualUpTo(maxlen)`` or the least word readable in exactly one input."""
    return _equal(a, b, maxlen, "trace", budget)


def cover_equal_bounded(a: Vass, b: Vass, maxlen: int, budget=DEFAULT_BUDGET):
    """As :func:`trace_equal_bounded` but words must end covering a final configuration."""
    return _equal(a, b, maxlen, "cover", budget)


def _equal(a, b, maxlen, semantics, budget):
    found = _product_search(a, b, maxlen, semantics, budget, lambda x, y: x != y)
    if found is None:
        return EqualUpTo(maxlen)
    word, in_a, _ = found
    return Distinguished(word, in_a)


def equal_bounded(a: Vass, b: Vass, maxlen: int, semantics: str = "trace", budget=DEFAULT_BUDGET):
    return _equal(a, b, maxlen, semantics, budget)


def containment_bounded(a: Vass, b: Vass, maxlen: int, semantics: str = "trace", budget=DEFAULT_BUDGET):
    """``ContainedUpTo(maxlen)`` or the least word in ``L(a)`` but not in ``L(b)``."""
    found = _product_search(a, b, maxlen, semantics, budget, lambda x, y: x and not y)
    if found is None:
        return ContainedUpTo(maxlen)
    return Witness(found[0])


# --- end-to-end harness -----------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


@dataclass
class TheoremReport:
    machine: CounterMachine
    fuel: int
    maxlen: int
    run: object = None
    halting_word: Optional[Word] = None
    verdict: object = None
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def __str__(self):
        lines = [str(c) for c in self.checks]
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def theorem_harness(m: CounterMachine, fuel: int, maxlen: int, budget=DEFAULT_BUDGET) -> TheoremReport:
    """Run the whole reduction pipeline on ``m`` and check its promised properties.

    Checks that A is deterministic, that the resolver follows every word of B
    up to ``maxlen``, and then either that a halting machine yields a
    distinguishing word no longer than its halting word, or that a machine
    whose final state is unreachable in the control graph yields equal
    bounded languages. Raises :class:`Inconclusive` when neither case
    applies; the partial report is attached to the exception.
    """
    require_valid(m)
    budget = as_budget(budget)
    r = build_b(m)
    report = TheoremReport(m, fuel, maxlen)
    report.add("A is deterministic", is_deterministic(r.a))
    hd = check_history_det_bounded(r.b, jancar_resolver(r), maxlen, budget)
    report.add("B follows its resolver", isinstance(hd, OkUpTo), str(hd))

    report.run = run_bounded(m, fuel)
    if isinstance(report.run, Halted):
        w = halting_word(m, fuel)
        report.halting_word = w
        report.add("halting word readable in A", reads(r.a, r.a.initial, w), format_word(w))
        report.add("halting word unreadable in B", not reads(r.b, r.b.initial, w), format_word(w))
        bound = min(maxlen, len(w))
        verdict = trace_equal_bounded(r.a, r.b, bound, budget)
        report.verdict = verdict
        if len(w) <= maxlen:
            ok = isinstance(verdict, Distinguished) and verdict.in_first and len(verdict.word) <= len(w)
            report.add("languages distinguished within |w|", ok, str(verdict))
        else:
            report.add("languages distinguished within |w|", True, f"skipped: |w| = {len(w)} > maxlen {maxlen}")
    elif not final_reachable(m):
        verdict = trace_equal_bounded(r.a, r.b, maxlen, budget)
        report.verdict = verdict
        report.add("no difference up to maxlen", isinstance(verdict, EqualUpTo), str(verdict))
    else:
        raise Inconclusive(
            f"machine does not halt within {fuel} steps but its final state is reachable in the control graph",
            report,
        )
    return report
