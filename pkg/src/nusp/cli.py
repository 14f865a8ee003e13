"""Command-line entry point: ``nusp <command> ...`` or ``python -m nusp``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .compiler import CompileError, compile_machine
from .formats import FormatError, emit_network, emit_trace, parse_machine, parse_network
from .network import NetworkError, RunLimits, run, time_profile, validate, NotAccepted
from .oracles import InstanceParams, differential_sigma, equivalence_check

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _input_word(text: str, chars: bool) -> tuple:
    if chars:
        return tuple(text.replace(" ", ""))
    return tuple(text.split())


def _load_network(path: str):
    net = parse_network(_read(path))
    report = validate(net)
    if not report.ok:
        raise NetworkError("; ".join(report.violations))
    return net


def cmd_run(args, out, err) -> int:
    net = _load_network(args.network)
    w = _input_word(args.input, args.chars)
    stray = [a for a in w if a not in net.input_alphabet]
    if stray:
        raise NetworkError(f"input symbols not in the input alphabet: {' '.join(stray)}")
    limits = RunLimits(max_steps=args.max_steps)
    verdict, trace = run(net, w, limits, full=args.full)
    if args.trace:
        Path(args.trace).write_text(emit_trace(trace, full=args.full))
    print(verdict, file=out)
    if verdict.accepted:
        print(f"time={verdict.step}", file=out)
        return EXIT_OK
    return EXIT_REJECT


def cmd_compile(args, out, err) -> int:
    M = parse_machine(_read(args.tm))
    cn = compile_machine(M, persistence=args.persistence)
    header = (f"compiled from {Path(args.tm).name}: {len(M.transitions)} transitions, "
              f"{len(cn.network)} nodes\nnode roles:\n"
              + "\n".join(f"  {n}: {r}" for n, r in cn.node_legend.items()))
    text = emit_network(cn.network, legend=cn.symbol_legend, header=header)
    if args.output == "-":
        out.write(text)
    else:
        Path(args.output).write_text(text)
        print(f"wrote {len(cn.network)} nodes to {args.output}", file=out)
    return EXIT_OK


def cmd_check_sigma(args, out, err) -> int:
    result = differential_sigma(InstanceParams(seed=args.seed), args.cases)
    print(result, file=out)
    return EXIT_OK if result.passed else EXIT_REJECT


def cmd_check_equiv(args, out, err) -> int:
    M = parse_machine(_read(args.tm))
    M = type(M)(M.states, M.input_alphabet, M.tape_alphabet, M.blank, M.transitions, M.initial,
                M.accepting, name=Path(args.tm).stem)
    report = equivalence_check(M, compile_machine(M), args.max_len, budget_factor=args.budget_factor)
    print(report.render(), file=out)
    return EXIT_OK if report.passed else EXIT_REJECT


def cmd_profile(args, out, err) -> int:
    net = _load_network(args.network)
    words = [_input_word(line, args.chars) for line in _read(args.inputs).splitlines()
             if line.strip() and not line.lstrip().startswith("#")]
    try:
        profile = time_profile(net, words, RunLimits(max_steps=args.max_steps))
    except NotAccepted as exc:
        print(exc, file=err)
        return EXIT_REJECT
    print("n\ttime", file=out)
    for n, t in profile.items():
        print(f"{n}\t{t}", file=out)
    return EXIT_OK


def cmd_validate(args, out, err) -> int:
    net = parse_network(_read(args.network))
    report = validate(net)
    for msg in report.warnings:
        print(f"warning: {msg}", file=err)
    for msg in report.violations:
        print(f"error: {msg}", file=err)
    if report.ok:
        print(f"ok: {len(net)} nodes, {len(net.edges)} edges", file=out)
        return EXIT_OK
    return EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nusp", description="Networks of uniform splicing processors.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("run", help="run a network on one input word")
    r.add_argument("--network", required=True)
    r.add_argument("--input", required=True, help="whitespace-separated tokens (see --chars)")
    r.add_argument("--max-steps", type=int, default=RunLimits().max_steps)
    r.add_argument("--trace", help="write a JSON-lines trace here")
    r.add_argument("--full", action="store_true", help="include node contents in the trace")
    r.add_argument("--chars", action="store_true", help="split the input into one-character tokens")
    r.set_defaults(func=cmd_run)

    c = sub.add_parser("compile", help="compile a Turing machine file into a network file")
    c.add_argument("--tm", required=True)
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--persistence", choices=["literal", "preserve"], default="literal")
    c.set_defaults(func=cmd_compile)

    s = sub.add_parser("check-sigma", help="differential test of the splicing step")
    s.add_argument("--cases", type=int, default=1000)
    s.add_argument("--seed", type=int, default=7)
    s.set_defaults(func=cmd_check_sigma)

    e = sub.add_parser("check-equiv", help="compare a machine with its compiled network")
    e.add_argument("--tm", required=True)
    e.add_argument("--max-len", type=int, required=True)
    e.add_argument("--budget-factor", type=float, default=4)
    e.set_defaults(func=cmd_check_equiv)

    pr = sub.add_parser("profile", help="largest accepting step count per input length")
    pr.add_argument("--network", required=True)
    pr.add_argument("--inputs", required=True, help="file with one input word per line")
    pr.add_argument("--max-steps", type=int, default=RunLimits().max_steps)
    pr.add_argument("--chars", action="store_true")
    pr.set_defaults(func=cmd_profile)

    v = sub.add_parser("validate", help="check a network file")
    v.add_argument("--network", required=True)
    v.set_defaults(func=cmd_validate)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except FormatError as exc:
        for d in exc.diagnostics:
            print(f"error: {d}", file=err)
        return EXIT_INVALID
    except (NetworkError, CompileError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
