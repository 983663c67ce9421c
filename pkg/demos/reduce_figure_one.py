"""
From a two-counter machine to a pair of VASS
============================================

Build N, A and B for the three-transition machine in ``machines/fig1.2cm``
and look at what each one reads.
"""

from pathlib import Path

from vassred import build_b, export_dot, format_word, halting_word, parse_cm, print_vass, run_bounded

machine = parse_cm((Path(__file__).resolve().parent.parent / "machines" / "fig1.2cm").read_text())
print(machine)

# The machine halts after two steps: increment counter 1, then find counter 2 empty.
print(run_bounded(machine, 100))

# A is the split-zero-test VASS with a halt letter.  B glues a copy of A to a
# copy of N through one gadget per zero test.
red = build_b(machine)
for name, v in (("N", red.n), ("A", red.a), ("B", red.b)):
    print(f"{name}: {len(v.states)} states, {len(v.transitions)} transitions")

# The halting word is readable in A.  B cannot read it, because reaching
# the halt letter would need the gadget, and the gadget needs counter 2 > 0.
w = halting_word(machine, 100)
print("halting word:", format_word(w))

# Serialized form of B, one transition per line.
print(print_vass(red.b))

# Graphviz source; render with `dot -Tsvg`.
print(export_dot(red.b, red.tags, "B"))
