"""
Following B without lookahead
=============================

B is not deterministic: on a zero-test letter it may take the ordinary
transition or enter the gadget.  A resolver picks one using only the history
read so far.  This script drives B with one and shows where a lazy choice
goes wrong.
"""

from pathlib import Path

from vassred import (
    UniqueResolver, build_b, check_history_det_bounded, format_word, jancar_resolver, parse_cm,
    resolver_run,
)

machines = Path(__file__).resolve().parent.parent / "machines"
red = build_b(parse_cm((machines / "cheat.2cm").read_text()))

# This machine pushes counter 2 up once and then tests it for zero.  The zero
# test fails for real, yet a run of N could still pretend it passed.
resolver = jancar_resolver(red)
word = ("inc_2", "z_2", "z_2")
run = resolver_run(red.b, resolver, word)
print("resolver run on", format_word(word))
for config in run.configurations:
    print("  ", config)

# The resolver is checked on every word of B's language up to length 10.
print(check_history_det_bounded(red.b, resolver, 10))

# Never taking the gadget looks fine until the cheat is exposed by ``h``.
print(check_history_det_bounded(red.b, UniqueResolver(red.b), 10))
