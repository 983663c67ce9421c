"""
Bounded equivalence and simulation games
========================================

Compare A and B by their bounded trace languages, then by a bounded
simulation game, and check the two views tell the same story.
"""

from pathlib import Path

from vassred import (
    build_b, containment_bounded, format_word, parse_cm, simulates_bounded, trace_equal_bounded,
    two_sided_bounded,
)

machines = Path(__file__).resolve().parent.parent / "machines"
halting = build_b(parse_cm((machines / "fig1.2cm").read_text()))
looping = build_b(parse_cm((machines / "loop.2cm").read_text()))

# Up to length 3 nothing separates them; length 4 already does.
print(trace_equal_bounded(halting.a, halting.b, 3))
verdict = trace_equal_bounded(halting.a, halting.b, 4)
print(verdict, "->", format_word(verdict.word))

# B never reads more than A.
print(containment_bounded(halting.b, halting.a, 10))

# A machine that never halts gives equal languages at every bound we try.
for n in (4, 8, 12):
    print(n, trace_equal_bounded(looping.a, looping.b, n))

# In the game, Spoiler plays one side and Duplicator has to echo each letter
# on the other.  B survives as Duplicator against A only until the halt letter.
print(simulates_bounded(halting.a, halting.b, 10))
print(simulates_bounded(halting.b, halting.a, 10))
print(two_sided_bounded(looping.a, looping.b, 8))
