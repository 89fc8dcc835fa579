"""Command-line front end.

Exit codes: 0 success, 2 parse/validation error, 3 undefined operation
(zero-probability conditioning or total conflict), 4 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures
from .belief import (
    MassFunction,
    bel,
    degree,
    degree_given,
    dempster_combine,
    mass_from_evidence,
    pointwise_combine,
    pointwise_condition,
)
from .document import ModelDocument, load_document
from .errors import (
    EvidentialError,
    ModelError,
    TotalConflictError,
    UndefinedConditioningError,
)
from .formula import EXTENDED, STRICT, parse
from .model import StateSet
from .semantics import interpret, truth_set

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNDEFINED = 3
EXIT_USAGE = 4

EXPLORATORY_BANNER = (
    "EXPLORATORY: pointwise conditioning averages over the evidence's possible "
    "interpretations; zero-probability interpretations are skipped and the "
    "surviving weights are not renormalized."
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _resolve_document(ref: str) -> ModelDocument:
    path = Path(ref)
    if path.exists():
        return load_document(path)
    if ref in fixtures.FIXTURE_NAMES:
        return getattr(fixtures, ref)()
    raise ModelError(f"model {ref!r} is neither a file nor a bundled fixture")


def _parse_event(document: ModelDocument, text: str, mode: str) -> StateSet:
    """An event argument: an inline state set like ``{H-acc,H-sh}``, or a
    formula whose truth set is taken."""
    stripped = text.strip()
    if stripped.startswith("{"):
        if not stripped.endswith("}"):
            raise ModelError(f"unterminated state set literal: {text!r}")
        body = stripped[1:-1].strip()
        names = [n.strip() for n in body.split(",")] if body else []
        return document.model.space.subset(names)
    return truth_set(document.model, parse(text, mode), mode)


class _Output:
    def __init__(self, machine: bool):
        self.machine = machine

    def value(self, key: str, value) -> None:
        print(f"{key}={value}" if self.machine else value)

    def entry(self, key: str, label: str, value) -> None:
        print(f"{key}[{label}]={value}" if self.machine else f"{label}: {value}")

    def note(self, text: str) -> None:
        if not self.machine:
            print(text)


def _emit_mass(out: _Output, mass: MassFunction) -> None:
    for event, weight in mass.items():
        out.entry("mass", str(event), weight)


def _cmd_check(args, document: ModelDocument, out: _Output) -> int:
    model = document.model
    if out.machine:
        print(f"states={len(model.space)}")
        print(f"atoms={len(model.atoms)}")
        print(f"measures={len(document.measures)}")
        for atom in model.atoms:
            print(f"coherent[{atom}]={'true' if model.is_coherent(atom) else 'false'}")
    else:
        print(
            f"ok: {len(model.space)} states, {len(model.atoms)} atoms, "
            f"{len(document.measures)} measures"
        )
        for atom in model.atoms:
            status = "coherent" if model.is_coherent(atom) else "incoherent"
            print(f"atom {atom}: {status}")
    return EXIT_OK


def _cmd_truth_set(args, document: ModelDocument, out: _Output) -> int:
    f = parse(args.formula, args.mode)
    out.value("truth_set", truth_set(document.model, f, args.mode))
    return EXIT_OK


def _cmd_interpret(args, document: ModelDocument, out: _Output) -> int:
    f = parse(args.formula, args.mode)
    out.value("interpretation", interpret(document.model, f, args.state, args.mode))
    return EXIT_OK


def _cmd_cohere(args, document: ModelDocument, out: _Output) -> int:
    closure = document.model.coherence_closure(args.atom)
    for state, value in closure.items():
        out.entry("closure", state, value)
    return EXIT_OK


def _cmd_condition(args, document: ModelDocument, out: _Output) -> int:
    measure = document.measure(args.measure)
    if args.on is not None:
        measure = measure.condition(_parse_event(document, args.on, args.mode))
    for state, weight in measure.items():
        out.entry("weight", state, weight)
    return EXIT_OK


def _cmd_bel(args, document: ModelDocument, out: _Output) -> int:
    evidence = parse(args.evidence, args.mode)
    event = _parse_event(document, args.event, args.mode)
    out.value("bel", bel(document.model, document.measure(args.measure), evidence, event, args.mode))
    return EXIT_OK


def _cmd_degree(args, document: ModelDocument, out: _Output) -> int:
    measure = document.measure(args.measure)
    of = parse(args.of, args.mode)
    if args.given is None:
        result = degree(document.model, measure, of, args.mode)
    else:
        result = degree_given(document.model, measure, of, parse(args.given, args.mode), args.mode)
    out.value("degree", result)
    return EXIT_OK


def _cmd_mass(args, document: ModelDocument, out: _Output) -> int:
    evidence = parse(args.evidence, args.mode)
    mass = mass_from_evidence(document.model, document.measure(args.measure), evidence, args.mode)
    _emit_mass(out, mass)
    return EXIT_OK


def _cmd_combine(args, document: ModelDocument, out: _Output) -> int:
    measure = document.measure(args.measure)
    e1 = parse(args.e1, args.mode)
    e2 = parse(args.e2, args.mode)
    if args.rule == "dempster":
        mass = dempster_combine(
            mass_from_evidence(document.model, measure, e1, args.mode),
            mass_from_evidence(document.model, measure, e2, args.mode),
        )
    else:
        mass = pointwise_combine(document.model, measure, e1, e2, args.mode)
    _emit_mass(out, mass)
    return EXIT_OK


def _cmd_pointwise_condition(args, document: ModelDocument, out: _Output) -> int:
    measure = document.measure(args.measure)
    of = parse(args.of, args.mode)
    evidence = parse(args.evidence, args.mode)
    result = pointwise_condition(document.model, measure, of, evidence, args.mode)
    if out.machine:
        print("exploratory=true")
        print(f"pointwise_condition={result}")
    else:
        print(EXPLORATORY_BANNER)
        print(result)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--mode", choices=[STRICT, EXTENDED], default=STRICT,
                        help="entailment placement mode (default: strict)")
    common.add_argument("--format", choices=["text", "machine"], default="text",
                        help="output format; machine is stable key=value lines")

    parser = _Parser(prog="evidential",
                     description="Variable-meaning semantics and evidentially supported belief.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def command(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("model", help="path to a model document, or a bundled fixture name")
        p.set_defaults(handler=handler)
        return p

    command("check", _cmd_check, "validate a model document and report per-atom coherence")

    p = command("truth-set", _cmd_truth_set, "print the states where a formula is true")
    p.add_argument("formula")

    p = command("interpret", _cmd_interpret, "print a formula's interpretation at a state")
    p.add_argument("formula")
    p.add_argument("state")

    p = command("cohere", _cmd_cohere, "print an atom's coherence closure, state by state")
    p.add_argument("atom")

    p = command("condition", _cmd_condition, "print a measure, optionally conditioned on an event")
    p.add_argument("--measure", required=True)
    p.add_argument("--on", help="formula or {state,...} set to condition on")

    p = command("bel", _cmd_bel, "evidentially supported belief in an event")
    p.add_argument("--measure", required=True)
    p.add_argument("--evidence", required=True)
    p.add_argument("--event", required=True, help="formula or {state,...} set")

    p = command("degree", _cmd_degree, "degree of belief in a formula, optionally conditional")
    p.add_argument("--measure", required=True)
    p.add_argument("--of", required=True)
    p.add_argument("--given")

    p = command("mass", _cmd_mass, "mass function induced by evidence")
    p.add_argument("--measure", required=True)
    p.add_argument("--evidence", required=True)

    p = command("combine", _cmd_combine, "combine two bodies of evidence into one mass function")
    p.add_argument("--measure", required=True)
    p.add_argument("--rule", choices=["dempster", "pointwise"], required=True)
    p.add_argument("--e1", required=True)
    p.add_argument("--e2", required=True)

    p = command("pointwise-condition", _cmd_pointwise_condition,
                "EXPLORATORY: pointwise conditional degree of belief")
    p.add_argument("--measure", required=True)
    p.add_argument("--of", required=True)
    p.add_argument("--evidence", required=True)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        document = _resolve_document(args.model)
        out = _Output(machine=args.format == "machine")
        return args.handler(args, document, out)
    except (UndefinedConditioningError, TotalConflictError) as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except EvidentialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
