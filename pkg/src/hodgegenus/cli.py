"""Command line entry point ``hodge``.

Exit codes: 0 success, 1 parse error, 2 validation error, 3 refused for
missing monodromy attestation, 4 failed assertion or verification check.
"""
from __future__ import annotations

import argparse
import json
import sys

from .dsl import AssertionFailed, DslError, Evaluator, QUERY_KINDS, parse, to_text
from .dsl.lexer import Diagnostic
from .errors import HodgeError, MonodromyError
from .verify import SUITES, run_suite

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_MONODROMY, EXIT_ASSERT = range(5)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _run_file(args, only: str | None) -> int:
    results, diags = [], []
    text = args.format == "text"

    def emit(res):
        results.append(res)
        if text and (only is None or res.kind == only):
            print(_render(res))

    code = EXIT_OK
    try:
        script = parse(_read(args.file))
        ev = Evaluator(assume_trivial_monodromy=args.assume_trivial_monodromy, seed=args.seed)
        ev.run(script, emit)
    except OSError as exc:
        diags.append(Diagnostic("error", 0, 0, "E-IO", str(exc)))
        code = EXIT_PARSE
    except DslError as exc:
        diags.extend(exc.diagnostics)
        code = EXIT_PARSE
    except AssertionFailed as exc:
        diags.append(Diagnostic("error", exc.stmt.line, exc.stmt.col, "E-ASSERT", str(exc)))
        code = EXIT_ASSERT
    except MonodromyError as exc:
        diags.append(Diagnostic("error", 0, 0, "E-MONODROMY",
                                f"{exc} (pass --assume-trivial-monodromy to attest)"))
        code = EXIT_MONODROMY
    except (HodgeError, ValueError, TypeError) as exc:
        diags.append(Diagnostic("error", 0, 0, "E-VALIDATION", str(exc)))
        code = EXIT_VALIDATION
    if text:
        for d in diags:
            print(d, file=sys.stderr)
    else:
        shown = [r for r in results if only is None or r.kind == only]
        print(json.dumps({"ok": code == EXIT_OK, "exit_code": code,
                          "results": [r.to_json() for r in shown],
                          "diagnostics": [d.to_json() for d in diags]}, indent=2))
    return code


def _render(res) -> str:
    if res.kind == "verify":
        return _render_report(res.value)
    if res.kind == "assert":
        return f"{'ok  ' if res.ok else 'FAIL'}  {res.text}"
    return f"{res.text}  =>  {to_text(res.value)}"


def _render_report(report: dict) -> str:
    lines = [f"suite {report['suite']} (seed {report['seed']}): {report['passed']} passed, {report['failed']} failed"]
    for c in report["checks"]:
        tag = "PASS" if c["ok"] else "FAIL"
        lines.append(f"  {tag}  {c['name']}" + ("" if c["ok"] else f": {c['detail']}"))
    return "\n".join(lines)


def _run_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed)
    if args.format == "text":
        print(_render_report(report))
    else:
        print(json.dumps(report, indent=2))
    return EXIT_OK if report["failed"] == 0 else EXIT_ASSERT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hodge", description="Exact chi_y genera, Riemann-Hurwitz and Atiyah-Meyer calculus.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized verification suites")

    ev = sub.add_parser("eval", help="evaluate every statement of a script")
    ev.add_argument("file", help="script path, or - for stdin")
    ev.add_argument("--assume-trivial-monodromy", action="store_true",
                    help="attest trivial monodromy for stratified and Riemann-Hurwitz queries")
    common(ev)
    for kind in QUERY_KINDS:
        if kind == "verify":
            continue
        sp = sub.add_parser(kind, help=f"evaluate a script, printing only its '{kind}' queries")
        sp.add_argument("file")
        sp.add_argument("--assume-trivial-monodromy", action="store_true")
        common(sp)
    vf = sub.add_parser("verify", help="run a built-in verification suite")
    vf.add_argument("suite", choices=sorted(SUITES))
    common(vf)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return _run_verify(args)
    return _run_file(args, None if args.command == "eval" else args.command)


if __name__ == "__main__":
    sys.exit(main())
