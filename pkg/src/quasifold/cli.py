"""Command line front end.

    quasifold analyze FILE [--xi "1,2" | --seed N] [--format text|json] [--out PATH]
    quasifold audit FILE   [...same options...]
    quasifold corpus [DIR] [--format text|json] [--out PATH]

Exit status: 0 when every requested audit passes, 2 on an audit failure,
1 on an input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .errors import QuasifoldError
from .morse import parse_direction
from .pipeline import analyze, render_text
from .polytope import load_hrep

EXIT_OK, EXIT_INPUT, EXIT_AUDIT = 0, 1, 2


def corpus_dir() -> Path:
    return Path(str(resources.files("quasifold") / "corpus"))


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _analyze_file(path, xi_text, seed, full_audit):
    h = load_hrep(path)
    xi = parse_direction(xi_text, h.field) if xi_text is not None else None
    return analyze(h, xi=xi, seed=seed, full_audit=full_audit)


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _error(exc: Exception) -> int:
    code = getattr(exc, "code", type(exc).__name__)
    sys.stderr.write(f"error [{code}]: {exc}\n")
    return EXIT_INPUT


def run_single(args) -> int:
    try:
        result = _analyze_file(args.file, args.xi, args.seed, args.command == "audit")
    except (QuasifoldError, OSError) as exc:
        return _error(exc)
    report = result.report
    _emit(dump_json(report) if args.format == "json" else render_text(report), args.out)
    return EXIT_OK if result.passed else EXIT_AUDIT


def run_corpus(args) -> int:
    directory = Path(args.directory) if args.directory else corpus_dir()
    files = sorted(directory.glob("*.json"))
    if not files:
        sys.stderr.write(f"error [ParseError]: no polytope files in {directory}\n")
        return EXIT_INPUT
    rows = []
    status = EXIT_OK
    for path in files:
        try:
            result = _analyze_file(path, None, args.seed, True)
        except (QuasifoldError, OSError) as exc:
            rows.append({"file": path.name, "status": "error", "error": f"{getattr(exc, 'code', type(exc).__name__)}: {exc}"})
            if status == EXIT_OK:
                status = EXIT_INPUT
            continue
        r = result.report
        failed = [a["name"] for a in r["audits"] if not a["pass"]]
        rows.append({
            "file": path.name,
            "status": "pass" if not failed else "fail",
            "f": r["f"],
            "betti": r["betti"],
            "euler": r["euler"],
            "null_closed": r["construction"]["null_closed"],
            "failed_audits": failed,
        })
        if failed:
            status = EXIT_AUDIT
    if args.format == "json":
        text = dump_json({"directory": str(directory), "results": rows})
    else:
        lines = []
        for row in rows:
            if row["status"] == "error":
                lines.append(f"ERROR {row['file']}: {row['error']}")
            else:
                tag = "PASS " if row["status"] == "pass" else "FAIL "
                extra = f"  failed: {','.join(row['failed_audits'])}" if row["failed_audits"] else ""
                lines.append(
                    f"{tag}{row['file']:<22} f={row['f']} betti={row['betti']} "
                    f"euler={row['euler']} {row['null_closed']}{extra}"
                )
        n_ok = sum(row["status"] == "pass" for row in rows)
        lines.append(f"{n_ok}/{len(rows)} polytopes passed all audits")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasifold",
        description="Basic Betti and Hodge numbers of symplectic toric quasifolds from simple polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("analyze", "invariants and construction data"),
                            ("audit", "analyze plus all counting audits")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="polytope JSON file")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--xi", help='explicit direction, e.g. "1,2" or a JSON list of scalars')
        group.add_argument("--seed", type=int, default=1, help="start of the generic-direction search (default 1)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the report here instead of stdout")
    p = sub.add_parser("corpus", help="audit every *.json polytope in a directory")
    p.add_argument("directory", nargs="?", help="defaults to the bundled corpus")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "corpus":
        return run_corpus(args)
    return run_single(args)


if __name__ == "__main__":
    sys.exit(main())
