import json
import logging
from argparse import ArgumentParser
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from .algebra import (SemigroupResult, element, enumerate_semigroup, orbit_witness, power_order)
from .compose import cascade, trim
from .defaults import (DEFAULT_CHECK_DEPTH, DEFAULT_HOM_BUDGET, DEFAULT_MAX_ELEMS, DEFAULT_MAX_LEN,
                       DEFAULT_MAX_STATES, DEFAULT_PROBE_DEPTH, DEFAULT_SIM_DEPTH)
from .dot import emit_dot
from .errors import BudgetExceeded, MealyError, NotInvertible, SearchSpaceTooLarge, TableTooShort, UsageError
from .invert import invert, parse_generator_word
from .laws import run_suite
from .machine import InitialMachine, Machine
from .machine_file import emit_machine, machine_record, parse_function_file, parse_machine_file
from .morphism import find_homomorphism, find_simulation
from .seqfn import explore_quotients, synthesize
from .words import format_word, parse_periodic_word, parse_word

# errors meaning "the property fails or could not be established", not bad input
REFUSALS = (NotInvertible, SearchSpaceTooLarge, BudgetExceeded, TableTooShort)


@dataclass
class Command:
    verb: str
    paths: List[str]
    options: Dict[str, Any] = field(default_factory=dict)


@dataclass
class Report:
    status: int
    text: str


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="mealy", description="Compute with Mealy machines and automaton semigroups")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    verbs = parser.add_subparsers(dest="verb", required=True)

    run = verbs.add_parser("run", help="Run a machine on a word")
    run.add_argument("paths", nargs=1, metavar="machine")
    run.add_argument("--input", required=True, help="Input word, e.g. 0110 or a.b.a")
    run.add_argument("--start", help="Start state (default: the file's start, else the first state)")
    run.add_argument("--format", choices=("text", "json"), default="text")

    compose = verbs.add_parser("compose", help="Cascade two machines, first feeding second")
    compose.add_argument("paths", nargs=2, metavar="machine")
    compose.add_argument("-o", "--output", help="Write the result to this file")
    compose.add_argument("--trim", action="store_true", help="Drop unreachable product states")
    compose.add_argument("--format", choices=("text", "json", "dot"), default="text")

    inverse = verbs.add_parser("invert", help="Build the inverse machine")
    inverse.add_argument("paths", nargs=1, metavar="machine")
    inverse.add_argument("-o", "--output", help="Write the result to this file")
    inverse.add_argument("--format", choices=("text", "json", "dot"), default="text")

    enum = verbs.add_parser("enum", help="Enumerate the generated semigroup or group")
    enum.add_argument("paths", nargs=1, metavar="machine")
    enum.add_argument("--max-elems", type=int, default=DEFAULT_MAX_ELEMS, help="(default: %(default)s)")
    enum.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, help="(default: %(default)s)")
    enum.add_argument("--signed", action="store_true", help="Include inverse generators")
    enum.add_argument("--table", action="store_true", help="Print the Cayley table")
    enum.add_argument("--dot", help="Write the Cayley graph to this file")
    enum.add_argument("--format", choices=("text", "json", "dot"), default="text")

    order = verbs.add_parser("order", help="Order of the element denoted by a generator word")
    order.add_argument("paths", nargs=1, metavar="machine")
    order.add_argument("word", help="Generator word, e.g. 'p q' or 'q0 q0^-1'")
    order.add_argument("--max-elems", type=int, default=DEFAULT_MAX_ELEMS, help="(default: %(default)s)")
    order.add_argument("--format", choices=("text", "json"), default="text")

    hom = verbs.add_parser("hom", help="Search for a machine homomorphism src -> dst")
    hom.add_argument("paths", nargs=2, metavar="machine")
    hom.add_argument("--budget", type=int, default=DEFAULT_HOM_BUDGET, help="(default: %(default)s)")
    hom.add_argument("--format", choices=("text", "json"), default="text")

    sim = verbs.add_parser("sim", help="Search for a simulation of target by another machine")
    sim.add_argument("paths", nargs=2, metavar="machine")
    sim.add_argument("--depth", type=int, default=DEFAULT_SIM_DEPTH, help="(default: %(default)s)")
    sim.add_argument("--budget", type=int, default=DEFAULT_HOM_BUDGET, help="(default: %(default)s)")
    sim.add_argument("--format", choices=("text", "json"), default="text")

    orbit = verbs.add_parser("orbit", help="Certify distinct elements by their action on u:v")
    orbit.add_argument("paths", nargs=1, metavar="machine")
    orbit.add_argument("--word", required=True, help="Ultimately periodic word u:v, e.g. :01")
    orbit.add_argument("--pattern", action="append", required=True, help="Generator word (repeatable)")
    orbit.add_argument("--k", type=int, help="Probe length is 2k+2 (default: number of patterns)")
    orbit.add_argument("--format", choices=("text", "json"), default="text")

    synth = verbs.add_parser("synth", help="Synthesize a machine from a function table")
    synth.add_argument("paths", nargs=1, metavar="table")
    synth.add_argument("--depth", type=int, default=DEFAULT_PROBE_DEPTH, help="(default: %(default)s)")
    synth.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES, help="(default: %(default)s)")
    synth.add_argument("-o", "--output", help="Write the result to this file")
    synth.add_argument("--format", choices=("text", "json", "dot"), default="text")

    check = verbs.add_parser("check", help="Run the invariant suite on a machine")
    check.add_argument("paths", nargs=1, metavar="machine")
    check.add_argument("--depth", type=int, default=DEFAULT_CHECK_DEPTH, help="(default: %(default)s)")
    check.add_argument("--format", choices=("text", "json"), default="text")

    dot = verbs.add_parser("dot", help="Render a machine as DOT")
    dot.add_argument("paths", nargs=1, metavar="machine")
    dot.add_argument("-o", "--output", help="Write the result to this file")

    return parser


def parse_command(argv: Optional[Sequence[str]] = None) -> Command:
    args = vars(build_parser().parse_args(argv))
    verb = args.pop("verb")
    paths = args.pop("paths")
    return Command(verb, paths, args)


def _initial(path: str, start: Optional[str] = None) -> InitialMachine:
    machine, file_start = parse_machine_file(path)
    return machine.at(start or file_start or machine.states[0])


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as e:
        raise UsageError(f"Failed to write {path}: {e}") from e


def _render_machine(m: Machine, start: Optional[str], options: Dict[str, Any], comments: Sequence[str] = ()) -> Report:
    style = options.get("format", "text")
    if style == "json":
        text = _dump(machine_record(m, start))
    elif style == "dot":
        text = emit_dot(m.at(start) if start is not None else m)
    else:
        text = emit_machine(m, start, comments)
    if options.get("output"):
        _write(options["output"], text)
        return Report(0, f"wrote {options['output']}")
    return Report(0, text.rstrip("\n"))


def _show(word, alphabet=None) -> str:
    return format_word(word, alphabet) or "λ"


def do_run(cmd: Command) -> Report:
    im = _initial(cmd.paths[0], cmd.options.get("start"))
    state, output = im.run(parse_word(cmd.options["input"], im.machine.input_alphabet))
    if cmd.options["format"] == "json":
        return Report(0, _dump({"state": state, "output": list(output)}))
    return Report(0, f"state {state} output {_show(output, im.machine.output_alphabet)}")


def do_compose(cmd: Command) -> Report:
    first, second = (_initial(path) for path in cmd.paths)
    result = cascade(first, second)
    if cmd.options["trim"]:
        result = trim(result)
    return _render_machine(result.machine, result.start, cmd.options)


def do_invert(cmd: Command) -> Report:
    machine, start = parse_machine_file(cmd.paths[0])
    return _render_machine(invert(machine), start, cmd.options)


def _element_record(result: SemigroupResult, i: int) -> dict:
    e = result.elements[i]
    record = machine_record(e.machine.machine, e.machine.start)
    return {"witness": list(e.witness), "states": record["states"], "transitions": record["transitions"]}


def _cayley_text(result: SemigroupResult) -> List[str]:
    labels = [e.label() for e in result.elements]
    width = max(len(label) for label in labels)
    lines = [" " * width + " | " + " ".join(label.ljust(width) for label in labels)]
    lines.append("-" * len(lines[0]))
    for i, row in enumerate(result.cayley):
        lines.append(labels[i].ljust(width) + " | " + " ".join(labels[j].ljust(width) for j in row))
    return [line.rstrip() for line in lines]


def do_enum(cmd: Command) -> Report:
    machine, _ = parse_machine_file(cmd.paths[0])
    options = cmd.options
    result = enumerate_semigroup(machine, options["max_elems"], options["max_len"], options["signed"])
    if options.get("dot"):
        _write(options["dot"], emit_dot(result))
    if options["format"] == "dot":
        return Report(0, emit_dot(result).rstrip("\n"))
    if options["format"] == "json":
        return Report(0, _dump({
            "machine": result.machine_name,
            "status": result.status.value,
            "signed": result.signed,
            "elements": [_element_record(result, i) for i in range(len(result.elements))],
            "cayley": result.cayley,
        }))
    lines = [f"status {result.status.value}", f"elements {len(result.elements)}"]
    lines += [f"  {i}: {e.label()} ({e.size} states)" for i, e in enumerate(result.elements)]
    if options["table"] and result.cayley is not None:
        lines += _cayley_text(result)
    return Report(0, "\n".join(lines))


def do_order(cmd: Command) -> Report:
    machine, _ = parse_machine_file(cmd.paths[0])
    e = element(machine, parse_generator_word(cmd.options["word"], machine.states))
    order = power_order(e, cmd.options["max_elems"])
    if cmd.options["format"] == "json":
        return Report(0 if order else 1, _dump({"witness": list(e.witness), "order": order}))
    if order is None:
        return Report(1, f"order > {cmd.options['max_elems']}")
    return Report(0, f"order {order}")


def _search_report(outcome, options: Dict[str, Any]) -> Report:
    if options["format"] == "json":
        triple = None
        if outcome.found:
            triple = {name: dict(mapping) for name, mapping in vars(outcome.triple).items()}
        return Report(0 if outcome.found else 1, _dump({"triple": triple, "refuted": outcome.refuted}))
    if not outcome.found:
        return Report(1, f"none ({outcome.refuted} candidates refuted)")
    return Report(0, str(outcome.triple))


def do_hom(cmd: Command) -> Report:
    src, _ = parse_machine_file(cmd.paths[0])
    dst, _ = parse_machine_file(cmd.paths[1])
    return _search_report(find_homomorphism(src, dst, cmd.options["budget"]), cmd.options)


def do_sim(cmd: Command) -> Report:
    target, _ = parse_machine_file(cmd.paths[0])
    by, _ = parse_machine_file(cmd.paths[1])
    return _search_report(find_simulation(target, by, cmd.options["depth"], cmd.options["budget"]), cmd.options)


def do_orbit(cmd: Command) -> Report:
    machine, _ = parse_machine_file(cmd.paths[0])
    x = parse_periodic_word(cmd.options["word"], machine.input_alphabet)
    patterns = [parse_generator_word(p, machine.states) for p in cmd.options["pattern"]]
    count = orbit_witness(machine, patterns, x, cmd.options.get("k"))
    if cmd.options["format"] == "json":
        return Report(0, _dump({"word": str(x), "distinct": count}))
    return Report(0, f"distinct {count}")


def do_synth(cmd: Command) -> Report:
    f = parse_function_file(cmd.paths[0])
    table = explore_quotients(f, cmd.options["depth"], cmd.options["max_states"])
    result = synthesize(table, f)
    return _render_machine(result.machine, result.start, cmd.options,
                           [f"quotients compared on probe words up to length {table.resolution}"])


def do_check(cmd: Command) -> Report:
    machine, _ = parse_machine_file(cmd.paths[0])
    results = run_suite(machine, cmd.options["depth"])
    failed = any(verdict is not None and not verdict for _, verdict in results)
    if cmd.options["format"] == "json":
        return Report(1 if failed else 0, _dump([
            {"law": name, "holds": None if verdict is None else verdict.holds,
             "detail": "" if verdict is None else verdict.detail}
            for name, verdict in results
        ]))
    lines = [f"{name}: {'skipped' if verdict is None else verdict}" for name, verdict in results]
    return Report(1 if failed else 0, "\n".join(lines))


def do_dot(cmd: Command) -> Report:
    machine, start = parse_machine_file(cmd.paths[0])
    return _render_machine(machine, start, {"format": "dot", "output": cmd.options.get("output")})


HANDLERS: Dict[str, Callable[[Command], Report]] = {
    "run": do_run,
    "compose": do_compose,
    "invert": do_invert,
    "enum": do_enum,
    "order": do_order,
    "hom": do_hom,
    "sim": do_sim,
    "orbit": do_orbit,
    "synth": do_synth,
    "check": do_check,
    "dot": do_dot,
}


def verb_dispatch(cmd: Command) -> Report:
    """Run one command; exit 0 on success, 1 when the property fails, 2 on bad input."""
    handler = HANDLERS.get(cmd.verb)
    if handler is None:
        return Report(2, f"unknown verb {cmd.verb}")
    try:
        return handler(cmd)
    except REFUSALS as e:
        logging.info(f"{cmd.verb} refused: {e}")
        return Report(1, str(e))
    except MealyError as e:
        logging.error(f"{cmd.verb} failed: {e}")
        return Report(2, f"error: {e}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    cmd = parse_command(argv)
    if cmd.options.pop("verbose", False):
        logging.getLogger().setLevel(logging.DEBUG)
    report = verb_dispatch(cmd)
    if report.text:
        print(report.text)
    return report.status
