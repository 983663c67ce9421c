"""Text formats: counter machines (``.2cm``), VASS documents (``.vass``), DOT export.

The ``.2cm`` format is line oriented::

    2cm q_i q_f
    q_i inc_1 q_1
    q_1 dec_2 q_i
    q_1 z_2 q_f      # comment

The ``.vass`` format is a JSON document with the fields ``dimension``,
``alphabet``, ``states``, ``transitions``, ``initial``, ``finals`` in that
order, one transition or final configuration per line. ``print_vass`` output
parses back to an equal VASS and reprints byte for byte.
"""

from __future__ import annotations

import json
from typing import Dict, List, Mapping, Optional

from .errors import InvariantViolation, ParseError, ValidationErrors
from .twocm import CmTransition, CounterMachine, Op, validate
from .vass import Configuration, Transition, Vass

_OPS = {op.value: op for op in Op}


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_cm(text: str, check: bool = True) -> CounterMachine:
    header = None
    header_line = None
    transitions: List[CmTransition] = []
    lines_of: Dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "2cm":
                raise ParseError("expected header '2cm <initial> <final>'", lineno)
            header = parts[1], parts[2]
            header_line = lineno
            continue
        if len(parts) != 3:
            raise ParseError("expected '<source> <op> <target>'", lineno)
        source, op, target = parts
        if op not in _OPS:
            raise ParseError(f"unknown operation {op!r}", lineno)
        transitions.append(CmTransition(source, _OPS[op], target))
        lines_of.setdefault(source, lineno)
    if header is None:
        raise ParseError("empty machine description", 1)
    m = CounterMachine(header[0], header[1], tuple(transitions))
    if check:
        violations = validate(m)
        if violations:
            raise ValidationErrors([(lines_of.get(v.state, header_line), v) for v in violations])
    return m


def print_cm(m: CounterMachine) -> str:
    lines = [f"2cm {m.initial} {m.final}"]
    lines += [f"{t.source} {t.op.value} {t.target}" for t in m.transitions]
    return "\n".join(lines) + "\n"


def canonical_cm(text: str) -> str:
    return print_cm(parse_cm(text, check=False))


# --- VASS documents ---------------------------------------------------------


def _dump(x) -> str:
    return json.dumps(x, ensure_ascii=False)


def _config_doc(c: Configuration) -> dict:
    return {"state": c.state, "counters": list(c.counters)}


def print_vass(v: Vass) -> str:
    def block(items):
        if not items:
            return "[]"
        return "[\n" + ",\n".join("    " + _dump(x) for x in items) + "\n  ]"

    transitions = [
        {"source": t.source, "letter": t.letter, "effect": list(t.effect), "target": t.target}
        for t in v.transitions
    ]
    parts = [
        f'  "dimension": {v.dimension}',
        f'  "alphabet": {_dump(list(v.alphabet))}',
        f'  "states": {_dump(list(v.states))}',
        f'  "transitions": {block(transitions)}',
        f'  "initial": {_dump(_config_doc(v.initial))}',
        f'  "finals": {block([_config_doc(c) for c in v.finals])}',
    ]
    return "{\n" + ",\n".join(parts) + "\n}\n"


def _line_of(text: str, needle: str) -> Optional[int]:
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def _config(doc, where: str) -> Configuration:
    if not isinstance(doc, dict) or set(doc) != {"state", "counters"}:
        raise ParseError(f"{where}: expected an object with 'state' and 'counters'")
    return Configuration(doc["state"], tuple(doc["counters"]))


def parse_vass(text: str) -> Vass:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    expected = ["dimension", "alphabet", "states", "transitions", "initial", "finals"]
    if not isinstance(doc, dict) or sorted(doc) != sorted(expected):
        raise ParseError(f"document must have exactly the fields {', '.join(expected)}", 1)
    k = doc["dimension"]
    if not isinstance(k, int) or k < 1:
        raise ParseError("dimension must be a positive integer", _line_of(text, '"dimension"'))
    transitions = []
    for i, t in enumerate(doc["transitions"]):
        if not isinstance(t, dict) or set(t) != {"source", "letter", "effect", "target"}:
            raise ParseError(f"transition {i} must have source, letter, effect, target", _line_of(text, _dump(t)))
        if len(t["effect"]) != k:
            raise InvariantViolation(
                f"line {_line_of(text, _dump(t))}: transition {i} has a {len(t['effect'])}-entry effect in a "
                f"{k}-dimensional document"
            )
        transitions.append(Transition(t["source"], t["letter"], tuple(t["effect"]), t["target"]))
    try:
        return Vass(
            k,
            tuple(doc["alphabet"]),
            tuple(doc["states"]),
            tuple(transitions),
            _config(doc["initial"], "initial"),
            tuple(_config(c, "finals") for c in doc["finals"]),
        )
    except InvariantViolation:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None


# --- DOT --------------------------------------------------------------------

_NODE_STYLE = {
    "Gadget": 'shape=diamond, style=filled, fillcolor="#f4cccc"',
    "SplitState": "shape=box",
    "HaltState": "shape=doublecircle",
}


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(v: Vass, tags: Optional[Mapping[str, object]] = None, name: str = "vass") -> str:
    """Graphviz rendering: one node per state, edges labelled ``letter / effect``."""
    tags = tags or {}
    lines = [f"digraph {_q(name)} {{", "  rankdir=TB;", "  node [shape=circle];"]
    for q in v.states:
        attrs = []
        tag = tags.get(q)
        if tag is not None and getattr(tag, "kind", None) in _NODE_STYLE:
            attrs.append(_NODE_STYLE[tag.kind])
        if q == v.initial.state:
            attrs.append("penwidth=2")
        lines.append(f"  {_q(q)}" + (f" [{', '.join(attrs)}];" if attrs else ";"))
    for t in v.transitions:
        eff = ",".join(f"{x:+d}" for x in t.effect)
        lines.append(f"  {_q(t.source)} -> {_q(t.target)} [label={_q(f'{t.letter} / ({eff})')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
