"""Command-line front end.

Exit codes: 0 success or true, 1 a verified negative answer (equal, orbit,
trivcheck), 2 bad input. Errors print one line ``error: <reason>`` on stderr.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout

from .algebra import build_quiver, chain_word, dimension, format_word
from .covers import Cut, build_cover, verify_cover
from .invariants import derived_equivalent, derived_invariants, orbit_equivalent
from .ribbon import BrauerError, BrauerGraph, genus
from .serialize import DocumentError, canonical_json, document_problems, loads, to_document
from .trivial_ext import build_trivial_extension, gentle_from_cut, gentle_paths, verify_phi


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="brauer", description="Brauer graph algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    one = ("validate", "invariants", "present")
    two = ("equal", "orbit")
    cut = ("cover", "gentle", "trivcheck")
    for name in one + two + cut:
        s = sub.add_parser(name)
        for i in range(2 if name in two else 1):
            s.add_argument(f"file{i}", metavar="FILE", help="Brauer graph document or - for stdin")
        s.add_argument("--json", action="store_true", help="canonical JSON output")
        if name in cut:
            s.add_argument("--cut", help="v:h,... (unlisted vertices use their minimal half-edge)")
        if name == "trivcheck":
            s.add_argument("--exhaustive", action="store_true", help="compare every basis pair")
    return p


def parse_cut(text: str | None, bg: BrauerGraph) -> Cut:
    g = bg.graph
    chosen = list(Cut.default(g).chosen)
    if not text:
        return Cut(tuple(chosen))
    seen = set()
    for item in text.split(","):
        try:
            v, h = (int(x) for x in item.split(":"))
        except ValueError:
            raise BrauerError(f"invalid cut: cannot parse {item!r}") from None
        if v in seen:
            raise BrauerError(f"invalid cut: vertex {v} given twice")
        if not 0 <= v < g.num_vertices:
            raise BrauerError(f"invalid cut: no vertex {v}")
        if not 0 <= h < g.half_edge_count or g.vertex_of[h] != v:
            raise BrauerError(f"invalid cut: half-edge {h} is not at vertex {v}")
        seen.add(v)
        chosen[v] = h
    return Cut(tuple(chosen))


def _read(path: str, stdin: bytes) -> bytes:
    if path == "-":
        return stdin
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise BrauerError(f"cannot read {path}: {exc.strerror}") from None


def _present(bg: BrauerGraph, as_json: bool) -> str:
    q = build_quiver(bg)
    if as_json:
        doc = {
            "quiver_vertices": list(q.quiver_vertices),
            "arrows": [{"id": a.half_edge, "source": a.source, "target": a.target} for a in q.arrows],
            "pi": list(q.pi),
            "zero_relations": [list(r) for r in q.zero_relations],
            "commutation_relations": [
                {
                    "edge": r.edge,
                    "left": list(chain_word(bg, r.left)),
                    "sign": r.sign,
                    "right": list(chain_word(bg, r.right)),
                }
                for r in q.commutation_relations
            ],
        }
        return canonical_json(doc)
    lines = [f"quiver vertices: {len(q.quiver_vertices)}", f"arrows: {len(q.arrows)}"]
    lines += [f"  a{a.half_edge}: {a.source} -> {a.target}" for a in q.arrows]
    lines.append(f"zero relations: {len(q.zero_relations)}")
    lines += [f"  a{a} a{b}" for a, b in q.zero_relations]
    lines.append(f"commutation relations: {len(q.commutation_relations)}")
    for r in q.commutation_relations:
        op = "-" if r.sign == 1 else "+"
        left, right = format_word(chain_word(bg, r.left)), format_word(chain_word(bg, r.right))
        lines.append(f"  edge {r.edge}: {left} {op} {right}")
    return "\n".join(lines) + "\n"


def _dispatch(args, stdin: bytes) -> tuple[int, str]:
    cmd = args.command
    if cmd == "validate":
        raw = _read(args.file0, stdin)
        try:
            doc = json.loads(raw)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise DocumentError(f"malformed json: {exc}") from None
        problems = document_problems(doc)
        if args.json:
            out = canonical_json({"valid": not problems, "violations": problems})
        else:
            out = "valid\n" if not problems else "".join(f"violation: {p}\n" for p in problems)
        if problems:
            raise _Reported(out, "invalid input: " + problems[0])
        return 0, out
    bg = loads(_read(args.file0, stdin))
    if cmd == "invariants":
        inv = derived_invariants(bg)
        if args.json:
            return 0, json.dumps(inv.as_dict(), separators=(",", ":")) + "\n"
        return 0, "".join(f"{k}: {v}\n" for k, v in inv.as_dict().items())
    if cmd in ("equal", "orbit"):
        other = loads(_read(args.file1, stdin))
        if cmd == "equal":
            key, value = "derived-equivalent", derived_equivalent(bg, other)
        else:
            key, value = "orbit-equivalent", orbit_equivalent(bg, other)
        text = canonical_json({key: value}) if args.json else f"{key}: {str(value).lower()}\n"
        return (0 if value else 1), text
    if cmd == "present":
        return 0, _present(bg, args.json)
    cut = parse_cut(args.cut, bg)
    if cmd == "cover":
        cd = build_cover(bg, cut)
        report = verify_cover(cd)
        doc = {
            "cover": to_document(cd.cover),
            "deck_generator": list(cd.deck_generator),
            "mbar": cd.mbar,
            "projection": list(cd.projection),
        }
        if args.json:
            return 0, canonical_json(doc)
        cg = cd.cover.graph
        lines = [
            f"mbar: {cd.mbar}",
            f"vertices: {cg.num_vertices}",
            f"edges: {cg.num_edges}",
            f"genus: {genus(cg)}",
            "checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in report.checks.items()),
            "document: " + canonical_json(doc["cover"]).strip(),
            "deck_generator: " + json.dumps(doc["deck_generator"], separators=(",", ":")),
        ]
        return 0, "\n".join(lines) + "\n"
    if cmd == "gentle":
        lam = gentle_from_cut(bg, cut)
        paths = gentle_paths(lam)
        if args.json:
            doc = {
                "quiver_vertices": list(lam.quiver_vertices),
                "arrows": [{"id": a.half_edge, "source": a.source, "target": a.target} for a in lam.arrows],
                "zero_relations": [list(r) for r in lam.zero_relations],
                "degrees": list(lam.degrees),
                "dimension": len(paths),
            }
            return 0, canonical_json(doc)
        lines = [f"cut: {','.join(f'{v}:{h}' for v, h in enumerate(cut.chosen))}"]
        lines += [f"arrows: {' '.join(f'a{a.half_edge}' for a in lam.arrows) or '(none)'}"]
        lines += [f"zero relations: {', '.join(f'a{a} a{b}' for a, b in lam.zero_relations) or '(none)'}"]
        lines += [f"dimension: {len(paths)}"]
        return 0, "\n".join(lines) + "\n"
    # trivcheck
    report = verify_phi(bg, cut, exhaustive=args.exhaustive)
    table_dim = build_trivial_extension(gentle_from_cut(bg, cut)).dimension
    if args.json:
        text = canonical_json(
            {
                "passed": report.passed,
                "dim_trivial_extension": table_dim,
                "dim_brauer": dimension(bg),
                "pairs_checked": report.pairs_checked,
                "failures": report.failures,
            }
        )
    else:
        verdict = "pass" if report.passed else "FAIL"
        text = f"trivcheck: {verdict} (dim {table_dim} = {dimension(bg)}, {report.pairs_checked} products, {report.method})\n"
        text += "".join(f"  {f}\n" for f in report.failures)
    return (0 if report.passed else 1), text


class _Reported(Exception):
    def __init__(self, stdout: str, reason: str):
        super().__init__(reason)
        self.stdout = stdout


def run_command(argv: list[str], stdin: bytes = b"") -> tuple[int, str, str]:
    try:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            try:
                args = _parser().parse_args(argv)
            except SystemExit as exc:  # --help
                return int(exc.code or 0), out.getvalue(), err.getvalue()
        code, out = _dispatch(args, stdin)
        return code, out, ""
    except _UsageError as exc:
        return 2, "", f"error: usage: {exc}\n"
    except _Reported as exc:
        return 2, exc.stdout, f"error: {_one_line(str(exc))}\n"
    except BrauerError as exc:
        return 2, "", f"error: {_one_line(str(exc))}\n"


def _one_line(text: str) -> str:
    return " ".join(text.split())


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    needs_stdin = "-" in argv
    data = sys.stdin.buffer.read() if needs_stdin else b""
    code, out, err = run_command(argv, data)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
