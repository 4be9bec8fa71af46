"""Command-line front end.

    arglab enumerate --semantics complete example2.af
    arglab justify example2.af
    arglab statements --scheme ignorance-aware --claims disease.claims disease.af

Every subcommand builds a JSON-ready payload first; the text form is rendered
from that payload, so both formats carry the same information.

Exit codes: 0 ok, 1 usage error, 2 input error, 3 oracle failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .enumeration import (
    SemanticsKind,
    brute_force_matrix,
    justification_map,
    labelling_matrix,
    enumerate_labellings,
)
from .errors import ArgumentationError, OracleBoundExceeded, OracleMismatch
from .framework import load_af
from .semantics import Labelling
from .statements import Scheme, StatementEvaluator, load_claims
from .taxonomy import classify_status, indecision_form

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_ORACLE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arglab", description="Labelling-based abstract argumentation solver.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("af_path", metavar="AF", help="framework file (arg/att facts)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument(
            "--oracle-check",
            action="store_true",
            help="re-derive the labellings by brute force and fail on any mismatch",
        )

    p = sub.add_parser("enumerate", help="list all labellings under a semantics")
    p.add_argument(
        "--semantics", choices=[k.value for k in SemanticsKind], default=SemanticsKind.COMPLETE.value
    )
    common(p)

    p = sub.add_parser("justify", help="justification status and acceptance class per argument")
    common(p)

    p = sub.add_parser("statements", help="statement labels from a claims file")
    p.add_argument("--scheme", choices=[s.cli_name for s in Scheme], default=Scheme.IGNORANCE_AWARE.cli_name)
    p.add_argument("--claims", required=True, help="claims file (conc/contrary/statement facts)")
    p.add_argument("--query", action="append", metavar="STATEMENT", help="label only these (repeatable)")
    common(p)
    return parser


def _oracle_check(af, kind):
    expected = brute_force_matrix(af, kind)
    got = labelling_matrix(af, kind)
    if got.shape != expected.shape or (got != expected).any():
        raise OracleMismatch(
            f"{kind} enumeration disagrees with brute force ({len(got)} vs {len(expected)} labellings)"
        )


def enumerate_payload(af, semantics):
    return {
        "command": "enumerate",
        "semantics": str(semantics),
        "labellings": [lab.to_json() for lab in enumerate_labellings(af, semantics)],
    }


def justify_payload(af):
    statuses = justification_map(af)
    return {
        "command": "justify",
        "arguments": [
            {
                "argument": a,
                "status": [lab.value for lab in sorted(statuses[a])],
                "class": classify_status(statuses[a]).value,
            }
            for a in af.arguments
        ],
    }


def statements_payload(af, cm, scheme, queries=None):
    scheme = Scheme.parse(scheme)
    ev = StatementEvaluator(af, cm)
    names = list(dict.fromkeys(queries)) if queries else sorted(cm.vocabulary)
    rows = []
    for s in names:
        label = ev.label(s, scheme)
        form = indecision_form(label)
        diag = ev.conflict(s)
        rows.append(
            {
                "statement": s,
                "label": label.value,
                "form": form.label if form else None,
                "rank": form.rank if form else None,
                "conflict": diag.to_json() if diag else None,
            }
        )
    return {"command": "statements", "scheme": scheme.cli_name, "statements": rows}


def render_text(payload) -> str:
    """Text rendering of a payload produced by one of the ``*_payload`` builders."""
    lines = []
    cmd = payload["command"]
    if cmd == "enumerate":
        lines = [Labelling.from_json(obj).format() for obj in payload["labellings"]]
    elif cmd == "justify":
        lines = [
            f"{row['argument']} {{{','.join(row['status'])}}} {row['class']}"
            for row in payload["arguments"]
        ]
    elif cmd == "statements":
        for row in payload["statements"]:
            line = f"{row['statement']} {row['label']}"
            if row["form"] is not None:
                line += f" {row['form']} {row['rank']}"
            if row["conflict"] is not None:
                c = row["conflict"]
                line += f" conflict({c['contrary']})"
            lines.append(line)
    else:
        raise ValueError(f"unknown payload command {cmd!r}")
    return "".join(line + "\n" for line in lines)


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _execute(args):
    af = load_af(args.af_path)
    if args.command == "enumerate":
        kind = SemanticsKind(args.semantics)
        if args.oracle_check:
            _oracle_check(af, kind)
        return enumerate_payload(af, kind)
    if args.oracle_check:
        _oracle_check(af, SemanticsKind.COMPLETE)
    if args.command == "justify":
        return justify_payload(af)
    cm = load_claims(args.claims)
    return statements_payload(af, cm, args.scheme, args.query)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    try:
        payload = _execute(args)
    except (OracleMismatch, OracleBoundExceeded) as exc:
        print(f"arglab: oracle check failed: {exc}", file=stderr)
        return EXIT_ORACLE
    except (ArgumentationError, OSError) as exc:
        print(f"arglab: {exc}", file=stderr)
        return EXIT_INPUT

    stdout.write(render_json(payload) if args.format == "json" else render_text(payload))
    return EXIT_OK


def main():
    sys.exit(run())
