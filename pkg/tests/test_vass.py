import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from vassred import (
    AmbiguousWitness, Configuration, NotEnabled, OkUpTo, Run, Transition, Vass,
    all_states_accepting, bounded_cover_language, bounded_trace_language, build_a, enabled,
    fire, is_deterministic, is_unambiguous_bounded, reads,
)
from vassred.corpus import random_vass
from vassred.errors import InvariantViolation, ResourceBound
from vassred.vass import Budget, antichain, enumerate_runs, naive_language

HALT_WORD = ("inc_1", "z_2", "z_2", "h")


def cfg(q, *u):
    return Configuration(q, u)


# --- construction -----------------------------------------------------------

def test_configuration_rejects_negative_counters():
    with pytest.raises(InvariantViolation):
        Configuration("q", (0, -1))


def test_vass_checks_effect_length():
    with pytest.raises(InvariantViolation):
        Vass(2, ("a",), ("q",), (Transition("q", "a", (1, 0, 0), "q"),), cfg("q", 0, 0))


def test_vass_checks_letters_and_states():
    with pytest.raises(InvariantViolation):
        Vass(1, ("a",), ("q",), (Transition("q", "b", (1,), "q"),), cfg("q", 0))
    with pytest.raises(InvariantViolation):
        Vass(1, ("a",), ("q",), (Transition("q", "a", (1,), "p"),), cfg("q", 0))


# --- enabled / fire ---------------------------------------------------------

def test_enabled_dec_blocked_on_zero_counter(fig1_red):
    assert enabled(fig1_red.a, cfg("q_1@A", 1, 0), "dec_2") == []


def test_enabled_zero_test_split(fig1_red):
    (t,) = enabled(fig1_red.a, cfg("q_1@A", 1, 0), "z_2")
    assert (t.source, t.target, t.effect) == ("q_1@A", "q_1~q_f@A", (0, 0))


def test_enabled_foreign_letter(fig1_red):
    assert enabled(fig1_red.a, cfg("q_1@A", 5, 5), "nope") == []


def test_fire_inc(fig1_red):
    (t,) = enabled(fig1_red.a, fig1_red.a.initial, "inc_1")
    assert fire(fig1_red.a.initial, t) == cfg("q_1@A", 1, 0)


def test_fire_zero_effect_loop_is_identity():
    t = Transition("q", "a", (0, 0), "q")
    assert fire(cfg("q", 3, 1), t) == cfg("q", 3, 1)


def test_fire_gadget_entry(fig1_red):
    (t,) = [t for t in fig1_red.b.transitions if t.target == "q_1!2@B"]
    assert fire(cfg("q_1@B", 2, 1), t) == cfg("q_1!2@B", 2, 0)


def test_fire_not_enabled():
    t = Transition("q", "a", (-1, 0), "q")
    with pytest.raises(NotEnabled):
        fire(cfg("q", 0, 4), t)
    with pytest.raises(NotEnabled):
        fire(cfg("p", 4, 4), t)


@given(
    st.tuples(st.integers(0, 5), st.integers(0, 5)),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
)
def test_fire_raises_exactly_when_sum_negative(u, e):
    t = Transition("q", "a", e, "q")
    naive = tuple(x + y for x, y in zip(u, e))
    if min(naive) < 0:
        with pytest.raises(NotEnabled):
            fire(cfg("q", *u), t)
    else:
        assert fire(cfg("q", *u), t).counters == naive


@given(
    st.tuples(st.integers(0, 5), st.integers(0, 5)),
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
)
def test_firability_is_monotone(u, extra, e):
    v = Vass(2, ("a",), ("q",), (Transition("q", "a", e, "q"),), cfg("q", 0, 0))
    bigger = tuple(x + y for x, y in zip(u, extra))
    if enabled(v, cfg("q", *u), "a"):
        assert enabled(v, cfg("q", *bigger), "a")


def test_run_tracks_effect(fig1_red):
    a = fig1_red.a
    steps = []
    c = a.initial
    for x in HALT_WORD:
        (t,) = enabled(a, c, x)
        steps.append(t)
        c = fire(c, t)
    run = Run(a.initial, steps)
    assert run.word == HALT_WORD
    assert run.effect == (1, 0)
    assert run.end == cfg("h@A", 1, 0)
    assert len(run) == 4


def test_run_rejects_unfirable_sequence():
    t = Transition("q", "a", (-1,), "q")
    with pytest.raises(NotEnabled):
        Run(cfg("q", 0), (t,))


# --- reads and languages ----------------------------------------------------

def test_reads_figure_one(fig1_red):
    assert reads(fig1_red.a, fig1_red.a.initial, HALT_WORD)
    assert not reads(fig1_red.b, fig1_red.b.initial, HALT_WORD)
    assert reads(fig1_red.b, fig1_red.b.initial, ())


def test_bounded_trace_language_depth_two(fig1_red):
    expected = [(), ("inc_1",), ("inc_1", "z_2")]
    assert bounded_trace_language(fig1_red.a, 2) == expected
    assert bounded_trace_language(fig1_red.b, 2) == expected


def test_bounded_trace_language_zero(fig1_red):
    assert bounded_trace_language(fig1_red.b, 0) == [()]


def test_bounded_cover_language_halt_state(fig1_red):
    a = fig1_red.a.replace(finals=(cfg("h@A", 0, 0),))
    assert bounded_cover_language(a, 4) == [HALT_WORD]


def test_bounded_cover_language_empty_finals(fig1_red):
    assert bounded_cover_language(fig1_red.a.replace(finals=()), 6) == []


def test_cover_with_all_states_accepting_is_trace(fig1_red):
    for v in (fig1_red.a, fig1_red.b):
        w = v.replace(finals=())
        assert bounded_cover_language(all_states_accepting(w), 7) == bounded_trace_language(v, 7)


def test_all_states_accepting(fig1_red):
    a = all_states_accepting(fig1_red.a.replace(finals=()))
    assert len(a.finals) == 5
    assert {f.state for f in a.finals} == set(a.states)
    assert all(f.counters == (0, 0) for f in a.finals)
    assert all_states_accepting(a) == a


def test_all_states_accepting_no_states():
    v = Vass(1, ("a",), (), (), cfg("q", 0))
    assert all_states_accepting(v).finals == ()


def test_language_is_prefix_closed_and_monotone(fig1_red):
    small = bounded_trace_language(fig1_red.b, 5)
    large = bounded_trace_language(fig1_red.b, 8)
    assert set(small) <= set(large)
    assert all(w[:-1] in set(large) for w in large if w)


def test_budget_is_enforced(loop_red):
    with pytest.raises(ResourceBound):
        bounded_trace_language(loop_red.b, 30, budget=10)
    budget = Budget(1000)
    bounded_trace_language(loop_red.b, 6, budget)
    assert 0 < budget.explored <= 1000


# --- determinism / unambiguity ----------------------------------------------

def test_is_deterministic(fig1_red):
    assert is_deterministic(fig1_red.a)
    assert not is_deterministic(fig1_red.b)
    assert is_deterministic(Vass(1, ("a",), ("q",), (), cfg("q", 0)))


def test_unambiguous_deterministic(fig1_red):
    assert is_unambiguous_bounded(fig1_red.a, 6) == OkUpTo(6)


def test_ambiguous_parallel_edges():
    t = Transition("p", "a", (0, 0), "q")
    v = all_states_accepting(Vass(2, ("a",), ("p", "q"), (t, t), cfg("p", 0, 0)))
    verdict = is_unambiguous_bounded(v, 1)
    assert isinstance(verdict, AmbiguousWitness)
    assert verdict.word == ("a",)
    assert verdict.first_indices != verdict.second_indices


def test_unambiguity_uses_acceptance():
    # two runs over "a", only one of which ends accepting
    ts = (Transition("p", "a", (0,), "q"), Transition("p", "a", (0,), "r"))
    v = Vass(1, ("a",), ("p", "q", "r"), ts, cfg("p", 0), (cfg("q", 0),))
    assert is_unambiguous_bounded(v, 3) == OkUpTo(3)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_deterministic_implies_unambiguous(seed):
    rng = random.Random(seed)
    v = random_vass(rng)
    if is_deterministic(v):
        assert isinstance(is_unambiguous_bounded(v, 4), OkUpTo)


# --- antichains vs brute force ----------------------------------------------

def test_antichain_keeps_maximal():
    ac = antichain([cfg("q", 1, 1), cfg("q", 2, 1), cfg("q", 0, 3), cfg("p", 0, 0)])
    assert ac == (cfg("p", 0, 0), cfg("q", 0, 3), cfg("q", 2, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_reads_agrees_with_brute_force(seed):
    rng = random.Random(seed)
    v = random_vass(rng)
    expected = oracles.language(v, 5)
    assert set(bounded_trace_language(v, 5)) == expected
    for w in oracles.all_words(v.alphabet, 3):
        assert reads(v, v.initial, w) == (w in expected)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_readability_is_monotone(seed):
    rng = random.Random(seed)
    v = random_vass(rng)
    bigger = Configuration(v.initial.state, tuple(x + rng.randint(0, 2) for x in v.initial.counters))
    for w in oracles.language(v, 4):
        assert reads(v, bigger, w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_cover_language_agrees_with_brute_force(seed):
    rng = random.Random(seed)
    v = random_vass(rng)
    v = v.replace(finals=tuple(Configuration(q, (rng.randint(0, 2), rng.randint(0, 2))) for q in v.states[:2]))
    assert set(bounded_cover_language(v, 5)) == oracles.language(v, 5, "cover")


def test_enumerate_runs_matches_oracle(fig1_red):
    b = fig1_red.b
    ours = naive_language(b, 6)
    assert ours == oracles.language(b, 6)
    assert sum(1 for _ in enumerate_runs(b, b.initial, 6)) == len(
        oracles.all_runs(b, b.initial.state, b.initial.counters, 6)
    )
