"""Command line calculator for the algebras S_1 and S_2.

    onesided nf "y1*x1"
    onesided index "y1^4"
    onesided factor "5*theta^2*(1 + x2*E(0,1))"
    onesided verify relations --seed 3

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (the error name is printed, e.g. ``NotUnit``).
"""

from __future__ import annotations

import argparse
import io
import json
import shlex
import sys
from contextlib import redirect_stderr, redirect_stdout
from importlib import resources
from typing import List, Optional

from .action import act, poly_text, use_window_cap
from .algebra import Element2, eta, in_scalar_plus, k_component
from .automorphisms import Automorphism
from .errors import AlgebraError, ParseError
from .index import index1, index_block, ind_component
from .parser import factors_in, parse, parse_element
from .quotient import to_block
from .scalars import fmt_scalar, parse_field, use_field
from .units import det_block, detbar, full_factor_unit, unit_inverse

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--field", default=d("rational"), help="rational or fp:<p>")
    p.add_argument("--window-cap", type=int, default=d(48), dest="window_cap",
                   help="largest target window tried by the index oracle")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized suites")
    p.add_argument("--format", choices=("text", "json"), default=d("text"), dest="format")


def build_parser() -> argparse.ArgumentParser:
    top = _ArgParser(prog="onesided", description="Calculator for algebras of one-sided inverses.")
    _common(top, suppress=False)
    sub = top.add_subparsers(dest="command", metavar="command", parser_class=_ArgParser)

    def cmd(name, help, *args):
        p = sub.add_parser(name, help=help)
        _common(p, suppress=True)
        for a in args:
            p.add_argument(a)
        return p

    cmd("nf", "normal form of an expression", "expr")
    cmd("act", "apply an element to a monomial of P_1 or P_2", "expr", "monomial")
    cmd("index", "Fredholm index (S_1 element, or scalar + p_i in S_2)", "expr")
    cmd("ind", "ind_i of an element of 1 + a_2", "i", "expr")
    cmd("det", "determinant of a unit of 1 + F_2", "expr")
    cmd("detbar", "det-bar of a unit of 1 + p_i", "i", "expr")
    cmd("invert", "inverse of a unit of S_2", "expr")
    cmd("factor", "factorization certificate of a unit of S_2", "expr")
    cmd("eta", "the involution x_i <-> y_i", "expr")
    auto = sub.add_parser("auto", help="automorphism words")
    auto_sub = auto.add_subparsers(dest="auto_command", metavar="action", parser_class=_ArgParser)
    for name, extra in (("apply", ("word_file", "expr")), ("invert", ("word_file",)),
                        ("check", ("word_file",))):
        p = auto_sub.add_parser(name)
        _common(p, suppress=True)
        for a in extra:
            p.add_argument(a)
    cmd("verify", "run a named verification suite (or 'all')", "suite")
    return top


# rendering

def _element_result(e: Element2) -> dict:
    return {"element": str(e)}


def _emit(args, text: str, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _ints(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError("%s must be an integer, got %r" % (what, text)) from None


def _factor_index(text: str) -> int:
    i = _ints(text, "factor")
    if i not in (1, 2):
        raise UsageError("factor must be 1 or 2")
    return i


def _monomial(text: str):
    e = parse_element(text)
    if len(e) != 1:
        raise UsageError("expected a single monomial, got %r" % text)
    ((a1, a2, b1, b2), c), = e.items()
    if b1 or b2 or c != 1:
        raise UsageError("expected a monomial in x1, x2 with coefficient 1")
    return (a1, a2)


def _read_word(path: str) -> Automorphism:
    try:
        with open(path) as fh:
            return Automorphism.parse(fh.read())
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None


def run_index(args):
    node = parse(args.expr)
    used = factors_in(node)
    e = node.evaluate()
    if len(used) == 1:
        (f,) = used
        cert = index1(e.restrict(f))
        kind = "S1"
    elif not used:
        raise UsageError("a nonzero scalar has index 0 on every space; give an operator")
    else:
        for i in (1, 2):
            if k_component(e) and in_scalar_plus(e, "p%d" % i):
                cert = index_block(to_block(i, e))
                kind = "K+p%d" % i
                break
        else:
            from .errors import NotInScalarPlusIdeal

            raise NotInScalarPlusIdeal("expression is neither in S_1 nor of the form c + p_i, c != 0")
    _emit(args, str(cert.value), {"index": cert.value, "kind": kind, "symbol": str(cert.symbol)})


def run(args) -> int:
    c = args.command
    if c is None:
        raise UsageError("missing command")
    if c == "nf":
        e = parse_element(args.expr)
        _emit(args, str(e), _element_result(e))
    elif c == "act":
        e = parse_element(args.expr)
        img = act(e, _monomial(args.monomial))
        _emit(args, poly_text(img), {"polynomial": poly_text(img)})
    elif c == "index":
        run_index(args)
    elif c == "ind":
        v = ind_component(_factor_index(args.i), parse_element(args.expr))
        _emit(args, str(v), {"ind": v})
    elif c == "det":
        d = det_block(parse_element(args.expr))
        _emit(args, fmt_scalar(d), {"det": fmt_scalar(d)})
    elif c == "detbar":
        d = detbar(parse_element(args.expr), _factor_index(args.i))
        _emit(args, fmt_scalar(d), {"detbar": fmt_scalar(d)})
    elif c == "invert":
        e = unit_inverse(parse_element(args.expr))
        _emit(args, str(e), _element_result(e))
    elif c == "factor":
        cert = full_factor_unit(parse_element(args.expr))
        _emit(args, cert.text(), cert.to_json())
    elif c == "eta":
        e = eta(parse_element(args.expr))
        _emit(args, str(e), _element_result(e))
    elif c == "auto":
        sub = args.auto_command
        if sub is None:
            raise UsageError("auto needs an action: apply, invert or check")
        w = _read_word(args.word_file)
        if sub == "apply":
            e = w.apply(parse_element(args.expr))
            _emit(args, str(e), _element_result(e))
        elif sub == "invert":
            inv = w.inverse()
            _emit(args, inv.text(), {"word": [l.text() for l in inv.letters]})
        else:
            ok = w.preserves_relations()
            _emit(args, "relations preserved" if ok else "relations BROKEN",
                  {"relations": ok})
            return EXIT_OK if ok else EXIT_VERIFY
    elif c == "verify":
        from .verify import SUITES, run_suite

        names = list(SUITES) if args.suite == "all" else [args.suite]
        if any(n not in SUITES for n in names):
            raise UsageError("unknown suite %r; choose from all, %s" % (args.suite, ", ".join(SUITES)))
        results = [run_suite(n, args.seed) for n in names]
        if args.format == "json":
            print(json.dumps([{"suite": r.name, "criterion": r.criterion, "passed": r.passed,
                               "checks": [{"label": k.label, "ok": k.ok, "detail": k.detail}
                                          for k in r.checks]} for r in results], sort_keys=True))
        else:
            print("\n".join(r.text() for r in results))
        return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        field = parse_field(args.field)
    except (UsageError, ValueError) as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    fmt = getattr(args, "format", "text")
    try:
        with use_field(field), use_window_cap(args.window_cap):
            return run(args)
    except (UsageError, ValueError) as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        if fmt == "json":
            print(json.dumps({"error": "ParseError", "message": exc.message,
                              "position": exc.position}, sort_keys=True))
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        if fmt == "json":
            payload = {"error": exc.name, "message": str(exc)}
            if getattr(exc, "index", None) is not None:
                payload["index"] = exc.index
            print(json.dumps(payload, sort_keys=True))
        print("error: %s: %s" % (exc.name, exc), file=sys.stderr)
        return EXIT_DOMAIN


# golden transcript

DATA = "data"


def _data_path(name: str):
    return resources.files(__package__).joinpath(DATA, name)


def run_captured(argv: List[str]):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def transcript(script_text: str, data_dir: str) -> str:
    """Run each script line and render command, stdout, stderr and exit code."""
    blocks = []
    for line in script_text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        argv = shlex.split(line.replace("{data}", data_dir))
        code, out, err = run_captured(argv)
        block = "$ onesided %s\n%s" % (line, out)
        if err:
            block += "".join("! %s\n" % l for l in err.splitlines())
        block += "[exit %d]\n" % code
        blocks.append(block)
    return "\n".join(blocks)


def golden_transcript() -> str:
    script = _data_path("golden_script.txt").read_text()
    with resources.as_file(_data_path("golden_script.txt")) as path:
        return transcript(script, str(path.parent))


def golden_check():
    expected = _data_path("golden_transcript.txt").read_text()
    actual = golden_transcript()
    if actual == expected:
        return True, ""
    a, b = actual.splitlines(), expected.splitlines()
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return False, "line %d: got %r, expected %r" % (n + 1, x, y)
    return False, "length differs: %d vs %d lines" % (len(a), len(b))


EXIT_CODE_CASES = [
    ("nf of a valid expression exits 0", ["nf", "y1*x1"], EXIT_OK),
    ("parse error exits 2", ["nf", "x1 +"], EXIT_USAGE),
    ("unknown command exits 2", ["frobnicate"], EXIT_USAGE),
    ("bad field exits 2", ["--field", "fp:4", "nf", "x1"], EXIT_USAGE),
    ("domain error (NotUnit) exits 3", ["factor", "x1"], EXIT_DOMAIN),
    ("domain error (NotFredholm) exits 3", ["index", "E(0,0)"], EXIT_DOMAIN),
    ("unknown suite exits 2", ["verify", "nonsense"], EXIT_USAGE),
]


def exit_code_checks():
    out = []
    for label, argv, want in EXIT_CODE_CASES:
        code, _, _ = run_captured(argv)
        out.append((label, code == want, "" if code == want else "exit %d" % code))
    return out
