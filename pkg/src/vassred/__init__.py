"""Two-counter machines to VASS: the deterministic/history-deterministic reduction,
exact VASS semantics, bounded language comparison and simulation games."""

from .errors import (
    Inconclusive, InvalidMachine, InvariantViolation, MalformedN, NotEnabled, ParseError,
    PreconditionFailed, ResourceBound, ValidationErrors, VassError,
)
from .vass import (
    Budget, Configuration, Run, Transition, Vass, all_states_accepting, antichain,
    bounded_cover_language, bounded_trace_language, enabled, enumerate_runs, fire,
    is_deterministic, is_unambiguous_bounded, naive_language, post, reads,
)
from .twocm import (
    CmConfig, CmTransition, CounterMachine, Halted, Op, Running, final_reachable,
    halting_word, run_bounded, step, validate, word_from_ops,
)
from .reduction import ReductionOutput, Tag, ZeroTestTriple, build_a, build_b, build_n, zero_test_triples
from .resolver import (
    History, JancarResolver, UniqueResolver, check_history_det_bounded, jancar_resolver, resolver_run,
)
from .equivalence import (
    containment_bounded, cover_equal_bounded, equal_bounded, theorem_harness, trace_equal_bounded,
)
from .games import GamePosition, lemma_consistency, simulates_bounded, two_sided_bounded
from .verdicts import (
    AmbiguousWitness, ContainedUpTo, Counterexample, Distinguished, EqualUpTo, FailureAt,
    NoRefutationUpTo, OkUpTo, SpoilerWins, Witness, format_word,
)
from .io import export_dot, parse_cm, parse_vass, print_cm, print_vass

__version__ = "0.1.0"
