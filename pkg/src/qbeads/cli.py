"""Command-line front end.

Subcommands: quandle-check, form-check, form-search, invariant, batch,
catalog-list.  Exit codes: 0 success/valid, 1 axiom violation or
expected-value mismatch (including engine disagreement), 2 input error.
Text output for every subcommand is a pure function of its JSON output
(minus timing fields), so the two formats always agree.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import catalog
from .coloring import ENGINES
from .errors import AxiomError, InputError, QBeadsError
from .forms import format_form, load_form, parse_form
from .diagram import load_diagram
from .invariant import InvariantPolynomial, compute_invariant
from .quandle import load_quandle, parse_quandle
from .search import DEFAULT_SPACE_BOUND, MODES, run_search


@dataclass
class RunConfig:
    subcommand: str
    paths: dict
    engine: str = "propagate"
    output_format: str = "text"
    jobs: int = 1
    limit: int = None
    time_budget: float = None


def _resolve_quandle(token):
    """A file path if one exists, otherwise a catalog id."""
    if os.path.isfile(token):
        return load_quandle(token)
    return catalog.load_quandle(token)


def _resolve_form(token, quandle=None):
    if os.path.isfile(token):
        if quandle is None:
            raise InputError(
                "a form given as a file path needs --quandle to validate against"
            )
        return load_form(token, quandle)
    form = catalog.load_form(token)
    if quandle is not None and form.quandle != quandle:
        raise InputError(
            f"catalog form {token!r} belongs to a different quandle"
        )
    return form


def _resolve_link(token):
    if os.path.isfile(token):
        return load_diagram(token).validate()
    return catalog.load(token).diagram


def _emit(args, record, render):
    if args.format == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        sys.stdout.write(render(record))


# -- subcommands ------------------------------------------------------


def render_check(record):
    if record["valid"]:
        return "valid\n"
    lines = [f"invalid: {len(record['violations'])} violation(s)"]
    lines += record["violations"]
    return "\n".join(lines) + "\n"


def cmd_quandle_check(args):
    path = args.file
    if not os.path.isfile(path):
        raise InputError(f"no such file: {path}")
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    # malformed files raise InputError (exit 2); only axiom failures
    # count as "invalid" (exit 1)
    try:
        parse_quandle(text)
        violations = []
    except AxiomError as e:
        violations = e.violations
    record = {"file": path, "valid": not violations, "violations": violations}
    _emit(args, record, render_check)
    return 0 if record["valid"] else 1


def cmd_form_check(args):
    quandle = _resolve_quandle(args.quandle)
    try:
        if os.path.isfile(args.form):
            with open(args.form, encoding="utf-8") as fh:
                parse_form(fh.read(), quandle)
        else:
            form = catalog.load_form(args.form)
            if form.quandle != quandle:
                raise InputError(
                    f"catalog form {args.form!r} belongs to quandle "
                    f"{catalog.form_quandle_id(args.form)!r}"
                )
        violations = []
    except AxiomError as e:
        violations = e.violations
    record = {
        "quandle": args.quandle,
        "form": args.form,
        "valid": not violations,
        "violations": violations,
    }
    _emit(args, record, render_check)
    return 0 if record["valid"] else 1


def render_search(record):
    lines = []
    for text in record["forms"]:
        lines.append(text.rstrip("\n"))
    lines.append(f"found {record['count']} form(s)")
    lines.append("complete" if record["complete"] else "incomplete")
    return "\n".join(lines) + "\n"


def cmd_form_search(args):
    quandle = _resolve_quandle(args.quandle)
    result = run_search(
        quandle,
        args.p,
        args.n,
        mode=args.mode,
        limit=args.limit,
        time_budget=args.budget,
        space_bound=args.space_bound,
        allow_large=args.allow_large,
    )
    record = {
        "quandle": args.quandle,
        "p": args.p,
        "n": args.n,
        "mode": args.mode,
        "count": len(result.forms),
        "complete": result.complete,
        "space_estimate": result.space_estimate,
        "nodes": result.nodes,
        "forms": [format_form(f) for f in result.forms],
    }
    _emit(args, record, render_search)
    return 0


def render_invariant(record):
    return InvariantPolynomial.from_term_list(record["terms"]).render() + "\n"


def cmd_invariant(args):
    diagram = _resolve_link(args.link)
    quandle = _resolve_quandle(args.quandle)
    form = _resolve_form(args.form, quandle)
    result = compute_invariant(
        diagram, quandle, form, engine=args.engine, jobs=args.jobs
    )
    record = result.record()
    record["link"] = args.link if not os.path.isfile(args.link) else diagram.name
    _emit(args, record, render_invariant)
    return 0


def render_batch(record):
    lines = []
    for poly_text, links in record["groups"]:
        lines.append(f"{poly_text}: {', '.join(links)}")
    if record["diffs"] is not None:
        if record["diffs"]:
            for d in record["diffs"]:
                lines.append(
                    f"diff {d['link']}: computed {d['computed']}, expected {d['expected']}"
                )
        else:
            lines.append("diff: none")
    return "\n".join(lines) + "\n"


def cmd_batch(args):
    quandle = _resolve_quandle(args.quandle)
    form = _resolve_form(args.form, quandle)
    names = catalog.list_links()
    if args.links:
        wanted = [s.strip() for s in args.links.split(",") if s.strip()]
        unknown = [w for w in wanted if w not in names]
        if unknown:
            raise InputError(f"unknown catalog links: {', '.join(unknown)}")
        names = [n for n in names if n in wanted]
    expected = (
        catalog.expected_table(args.form) if not os.path.isfile(args.form) else None
    )

    start = time.monotonic()
    results = []
    for name in names:
        entry = catalog.load(name)
        result = compute_invariant(
            entry.diagram, quandle, form, engine=args.engine, jobs=args.jobs
        )
        record = result.record()
        record["link"] = name
        results.append(record)

    groups = []
    group_index = {}
    for record in results:
        text = InvariantPolynomial.from_term_list(record["terms"]).render()
        if text not in group_index:
            group_index[text] = len(groups)
            groups.append([text, []])
        groups[group_index[text]][1].append(record["link"])

    diffs = None
    if expected is not None:
        diffs = []
        for record in results:
            want = expected.get(record["link"])
            if want is None:
                continue
            got = InvariantPolynomial.from_term_list(record["terms"])
            if got != want:
                diffs.append(
                    {
                        "link": record["link"],
                        "computed": got.render(),
                        "expected": want.render(),
                    }
                )

    record = {
        "quandle": args.quandle,
        "form": args.form,
        "engine": args.engine,
        "links": names,
        "results": results,
        "groups": groups,
        "diffs": diffs,
        "elapsed": time.monotonic() - start,
    }
    _emit(args, record, render_batch)
    return 1 if diffs else 0


def render_catalog_list(record):
    return (
        "links: " + " ".join(record["links"]) + "\n"
        "quandles: " + " ".join(record["quandles"]) + "\n"
        "forms: " + " ".join(record["forms"]) + "\n"
    )


def cmd_catalog_list(args):
    record = {
        "links": catalog.list_links(),
        "quandles": catalog.list_quandles(),
        "forms": catalog.list_forms(),
    }
    _emit(args, record, render_catalog_list)
    return 0


# -- argument parsing -------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qbeads",
        description="Quandle counting invariants and bead-coloring enhancements.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("quandle-check", help="validate a quandle file")
    p.add_argument("file")
    add_format(p)
    p.set_defaults(func=cmd_quandle_check)

    p = sub.add_parser("form-check", help="validate a form against a quandle")
    p.add_argument("quandle", help="catalog id or file path")
    p.add_argument("form", help="catalog id or file path")
    add_format(p)
    p.set_defaults(func=cmd_form_check)

    p = sub.add_parser("form-search", help="search all valid forms on a quandle")
    p.add_argument("quandle", help="catalog id or file path")
    p.add_argument("--p", type=int, required=True, help="field order (prime)")
    p.add_argument("--n", type=int, required=True, help="matrix dimension")
    p.add_argument("--mode", choices=MODES, default="all")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.add_argument("--space-bound", type=int, default=DEFAULT_SPACE_BOUND)
    p.add_argument("--allow-large", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_form_search)

    p = sub.add_parser("invariant", help="compute the invariant of one link")
    p.add_argument("--link", required=True, help="catalog name or diagram file")
    p.add_argument("--quandle", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--engine", choices=ENGINES, default="propagate")
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("batch", help="compute invariants across the catalog")
    p.add_argument("--quandle", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--links", default=None, help="comma-separated subset")
    p.add_argument("--engine", choices=ENGINES, default="propagate")
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("catalog-list", help="list shipped links, quandles, forms")
    add_format(p)
    p.set_defaults(func=cmd_catalog_list)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return 2
    if getattr(args, "budget", None) is not None and args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AxiomError as e:
        print(f"axiom failure: {e}", file=sys.stderr)
        for v in e.violations:
            print(f"  {v}", file=sys.stderr)
        return 1
    except QBeadsError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
