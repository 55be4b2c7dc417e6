"""Command-line interface.

    gdepth analyze <request.json> [--json out] [--seed N] [--max-power N]
                   [--attempts N] [--field q|fp:<p>]
    gdepth corpus [<dir>] [--jobs N]

Exit codes: 0 success, 1 mathematical expectation failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from .errors import GdepthError, ParseError
from .fields import DEFAULT_PRIME
from .parsing import parse_request
from .pipeline import analyze, render_human, report_json

BUNDLED_CORPUS = os.path.join(os.path.dirname(__file__), "corpus")


def _field_override(text: Optional[str]) -> Optional[dict]:
    if text is None:
        return None
    if text in ("q", "Q", "qq"):
        return {"kind": "rationals"}
    if text.startswith("fp:"):
        return {"kind": "prime-field", "p": int(text[3:])}
    if text == "fp":
        return {"kind": "prime-field", "p": DEFAULT_PRIME}
    raise ParseError(f"unknown field spec {text!r} (use q or fp:<prime>)",
                     line=1, column=1)


def _cmd_analyze(args) -> int:
    try:
        with open(args.request, "r", encoding="utf-8") as fh:
            request = parse_request(fh.read())
    except OSError as exc:
        print(f"error: cannot read request: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.seed is not None:
        request.seed = args.seed
    if args.max_power is not None:
        request.max_power = args.max_power
    if args.attempts is not None:
        request.attempts = args.attempts
    try:
        request.field_override = _field_override(args.field)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    start = time.monotonic()
    try:
        report = analyze(request)
    except GdepthError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - start
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(report_json(report))
    sys.stdout.write(render_human(report))
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0


def _expected_matches(expected, actual, path="") -> Optional[str]:
    """Recursive subset match; returns a mismatch description or None."""
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return f"{path}: expected object, got {type(actual).__name__}"
        for key, val in expected.items():
            if key not in actual:
                return f"{path}.{key}: missing"
            msg = _expected_matches(val, actual[key], f"{path}.{key}")
            if msg:
                return msg
        return None
    if isinstance(expected, list):
        if expected != actual:
            return f"{path}: expected {expected}, got {actual}"
        return None
    if expected != actual:
        return f"{path}: expected {expected!r}, got {actual!r}"
    return None


def run_instance(request_path: str):
    """(name, ok, message, report) for one corpus instance."""
    name = os.path.basename(request_path)
    try:
        with open(request_path, "r", encoding="utf-8") as fh:
            request = parse_request(fh.read())
        report = analyze(request)
    except GdepthError as exc:
        return name, False, f"{type(exc).__name__}: {exc}", None
    expected_path = request_path[:-len(".json")] + ".expected.json"
    if os.path.exists(expected_path):
        with open(expected_path, "r", encoding="utf-8") as fh:
            expected = json.load(fh)
        msg = _expected_matches(expected, report)
        if msg:
            return name, False, msg, report
    return name, True, "", report


def _cmd_corpus(args) -> int:
    directory = args.dir or BUNDLED_CORPUS
    if not os.path.isdir(directory):
        print(f"error: corpus directory {directory!r} not found",
              file=sys.stderr)
        return 2
    paths = sorted(
        os.path.join(directory, f) for f in os.listdir(directory)
        if f.endswith(".json") and not f.endswith(".expected.json"))
    results = []
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_instance, paths))
    else:
        for p in paths:
            results.append(run_instance(p))
    failures = 0
    for name, ok, msg, _report in results:
        status = "ok" if ok else "FAIL"
        line = f"{status:4} {name}"
        if msg:
            line += f"  ({msg})"
        print(line)
        if not ok:
            failures += 1
    print(f"{len(results)} instances, {failures} failures")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gdepth",
        description="Hilbert coefficients, reductions, and certified "
                    "depth verdicts for associated graded rings.")
    sub = parser.add_subparsers(dest="command")
    pa = sub.add_parser("analyze", help="analyze one request file")
    pa.add_argument("request")
    pa.add_argument("--json", dest="json_out", default=None,
                    help="write the JSON report to this path")
    pa.add_argument("--seed", type=int, default=None)
    pa.add_argument("--max-power", type=int, default=None)
    pa.add_argument("--attempts", type=int, default=None)
    pa.add_argument("--field", default=None,
                    help="override the request's field: q or fp:<prime>")
    pc = sub.add_parser("corpus", help="run a corpus directory")
    pc.add_argument("dir", nargs="?", default=None)
    pc.add_argument("--jobs", type=int, default=None)
    args = parser.parse_args(argv)
    if args.command == "analyze":
        return _cmd_analyze(args)
    if args.command == "corpus":
        return _cmd_corpus(args)
    parser.print_help()
    return 2


if __name__ == "__main__":
    sys.exit(main())
