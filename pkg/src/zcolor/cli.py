"""``zcolor`` command line.

Reports go to stdout as JSON; progress and summaries go to stderr.

Exit codes: 0 success, 1 parse or usage error, 2 internal invariant
violation, 3 not colorable, 4 selftest failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloring import (
    ALL_MONOCHROME,
    NOT_FIVE_COLORS,
    NOT_SIMPLE,
    classify_five,
    coloring_space,
    determinant,
    find_nontrivial_coloring,
    is_simple,
    primitive_normalize,
)
from .diagram import diagram_components, parse_pd, pretzel
from .errors import DiagramError, NotColorable, ZColorError
from .fixtures import fixture_dir
from .palette import palette_graph
from .reduction import minimize, verify_trace

EXIT_OK, EXIT_PARSE, EXIT_INTERNAL, EXIT_NOT_COLORABLE, EXIT_SELFTEST = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    pass


class _Internal(Exception):
    pass


def _inputs(args) -> list[tuple[str, object]]:
    """``(name, diagram)`` for every requested input, in a fixed order."""
    out = []
    if args.pretzel:
        try:
            twists = [int(t) for t in args.pretzel.split(",") if t.strip()]
        except ValueError:
            raise InputError(f"bad --pretzel list {args.pretzel!r}") from None
        out.append((f"pretzel({','.join(map(str, twists))})", lambda: pretzel(twists)))
    if args.all:
        root = Path(args.all)
        if not root.is_dir():
            raise InputError(f"{root} is not a directory")
        paths = sorted(root.glob("*.pd"))
    else:
        paths = []
    paths += [_resolve(p) for p in args.paths]
    for p in paths:
        out.append((p.stem, lambda p=p: parse_pd(_read(p))))
    if not out:
        raise InputError("no input given (paths, --pretzel or --all)")
    return out


def _resolve(arg: str) -> Path:
    p = Path(arg)
    if p.exists():
        return p
    # fall back to the bundled fixture of the same name
    alt = fixture_dir() / (p.stem + ".pd")
    return alt if alt.exists() else p


def _read(p: Path) -> str:
    try:
        return p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {p}: {exc.strerror}") from None


def _coloring(d):
    g = find_nontrivial_coloring(d)
    return None if g is None else primitive_normalize(g)


def _analyze(name, d) -> dict:
    g = _coloring(d)
    rep = {
        "link_name": name,
        "crossings": len(d.crossings),
        "determinant": determinant(d),
        "rank": coloring_space(d).rank,
        "colorable": g is not None,
        "image": None,
        "simple_d": None,
        "five_class": None,
        "achieved": None,
        "lower_bound": None,
    }
    if g is None:
        return rep
    gap = is_simple(d, g)
    five = classify_five(g)
    rep.update(
        image=list(g.image),
        simple_d=gap if gap not in (NOT_SIMPLE, ALL_MONOCHROME) else None,
        five_class=None if five == NOT_FIVE_COLORS else list(five.canonical),
        achieved=len(g.image),
        lower_bound=4 if diagram_components(d) == 1 else 2,
    )
    return rep


def _reduce(name, d, trace_path) -> dict:
    rep = minimize(d)
    check = verify_trace(rep.trace)
    if not check:
        raise _Internal(f"trace fails at snapshot {check.failed_at}: {check.reason}")
    if trace_path:
        Path(trace_path).write_text(rep.trace.to_json() + "\n")
    out = {"link_name": name, "determinant": determinant(d), "colorable": True}
    out.update(rep.to_dict())
    return out


def _palette(name, d, dot_path) -> tuple[dict, str]:
    g = _coloring(d)
    if g is None:
        raise NotColorable(f"{name} has only trivial Z-colorings")
    pg = palette_graph(d, g)
    dot = pg.to_dot()
    if dot_path:
        Path(dot_path).write_text(dot)
    summary = {
        "link_name": name,
        "image": list(g.image),
        "edges": [list(e) for e in pg.edges],
        "components": [list(c) for c in pg.components()],
    }
    return summary, dot


def _trace_path(base, name, many):
    if not base or not many:
        return base
    p = Path(base)
    return str(p.with_name(f"{p.stem}.{name}{p.suffix}"))


def _run_one(cmd, name, load, args, many):
    """Returns ``(exit code, json-able result or None, extra stdout text)``."""
    try:
        d = load()
    except (DiagramError, InputError) as exc:
        print(f"{name}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE, {"link_name": name, "error": str(exc)}, None
    try:
        if cmd == "analyze":
            rep = _analyze(name, d)
            print(f"{name}: determinant {rep['determinant']}, image {rep['image']}", file=sys.stderr)
            return EXIT_OK, rep, None
        if cmd == "reduce":
            rep = _reduce(name, d, _trace_path(args.trace, name, many))
            print(f"{name}: {rep['initial_image']} -> {rep['final_image']} "
                  f"in {rep['moves_applied']} moves", file=sys.stderr)
            return EXIT_OK, rep, None
        summary, dot = _palette(name, d, _trace_path(args.dot, name, many))
        return EXIT_OK, summary, None if args.dot else dot
    except NotColorable as exc:
        print(f"{name}: not colorable: {exc}", file=sys.stderr)
        return EXIT_NOT_COLORABLE, {"link_name": name, "colorable": False, "error": str(exc)}, None
    except (_Internal, ZColorError) as exc:
        print(f"{name}: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL, {"link_name": name, "error": f"{type(exc).__name__}: {exc}"}, None


def _selftest() -> int:
    from .selftest import run_selftest

    results = run_selftest(log=lambda line: print(line, file=sys.stderr))
    failed = [name for name, ok, _ in results if not ok]
    print(json.dumps({"passed": len(results) - len(failed), "failed": failed}))
    return EXIT_SELFTEST if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zcolor", description="Z-colorings of link diagrams")
    p.add_argument("command", choices=["analyze", "reduce", "palette", "selftest"])
    p.add_argument("paths", nargs="*", help="PD files (or names of bundled fixtures)")
    p.add_argument("--pretzel", metavar="LIST", help="pretzel link, e.g. --pretzel=3,-3")
    p.add_argument("--trace", metavar="PATH", help="reduce: write the move trace as JSON")
    p.add_argument("--dot", metavar="PATH", help="palette: write the DOT graph here")
    p.add_argument("--all", metavar="DIR", help="process every *.pd file in DIR")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        return _selftest()
    try:
        items = _inputs(args)
    except InputError as exc:
        print(f"zcolor: {exc}", file=sys.stderr)
        return EXIT_PARSE
    many = len(items) > 1
    code = EXIT_OK
    results = []
    for name, load in items:
        c, res, text = _run_one(args.command, name, load, args, many)
        code = max(code, c)
        if text is not None:
            sys.stdout.write(text)
        elif res is not None:
            results.append(res)
    if results:
        payload = results if many else results[0]
        print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
