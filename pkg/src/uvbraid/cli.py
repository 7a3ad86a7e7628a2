"""Command-line interface: ``uvbraid <subcommand> [options] WORD...``.

Exit codes: 0 success (or equal, for ``eq``), 1 not equal, 2 parse error,
3 domain error.  Words are whitespace-separated ``s<i>``, ``s<i>^-1``,
``r<i>`` tokens; ``-`` reads the word from standard input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .braidword import BraidWord, format_word, parse_word
from .errors import DomainError, ParseError
from .fused import classify_two_component, link_group_presentation
from .purify import purify
from .quotients import fvb_normal_form, fwb_normal_form, gvb_normal_form
from .representations import format_free, psi_of_word
from .selftest import EQUALITY, run_selftest
from .uvb import nf_to_json, normal_form, to_word, vlk_matrix

MODELS = ("uvb", "wb", "fwb", "fvb", "gvb")
EXIT_PARSE, EXIT_DOMAIN = 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 as well; keep the text on stderr
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _read_word(text: str, stdin: TextIO) -> str:
    return stdin.read().strip() if text == "-" else text


def _words(args, stdin: TextIO) -> list[BraidWord]:
    texts = [_read_word(t, stdin) for t in args.words]
    return [parse_word(t, args.n) for t in texts]


def _emit(out: TextIO, fmt: str, text: str, data) -> None:
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _matrix_text(m: list[list[int]]) -> str:
    return "\n".join(" ".join(f"{x:3d}" for x in row) for row in m)


def render_ascii(w: BraidWord) -> str:
    """One line per letter; a crossing occupies the three columns of its two strands."""
    glyphs = {("s", 1): "\\+/", ("s", -1): "/-\\", ("r", 1): "(o)"}
    lines = [" ".join("|" * w.strands)]
    for let in w.letters:
        cells = ["|"] * w.strands
        row = " ".join(cells)
        at = 2 * (let.index - 1)
        row = row[:at] + glyphs[(let.gen, let.exp if let.gen == "s" else 1)] + row[at + 3:]
        lines.append(f"{row}   {let}")
    lines.append(lines[0])
    return "\n".join(lines)


def _cmd_nf(args, out, stdin) -> int:
    (w,) = _words(args, stdin)
    model = args.model
    if model == "uvb":
        x = normal_form(w)
        _emit(out, args.format, str(x), nf_to_json(x))
    elif model == "wb":
        f = psi_of_word(w)
        _emit(out, args.format, str(f), {"n": w.strands, "images": [format_free(i) for i in f.images]})
    else:
        nf = {"fwb": fwb_normal_form, "fvb": fvb_normal_form, "gvb": gvb_normal_form}[model](w)
        _emit(out, args.format, str(nf), nf.to_json())
    return 0


def _cmd_eq(args, out, stdin) -> int:
    u, v = _words(args, stdin)
    equal = EQUALITY[args.model](u, v)
    _emit(out, args.format, "equal" if equal else "not equal", {"model": args.model, "equal": equal})
    return 0 if equal else 1


def _cmd_vlk(args, out, stdin) -> int:
    if args.model != "uvb":
        raise DomainError("vlk is defined for the uvb model only")
    (w,) = _words(args, stdin)
    m = vlk_matrix(w)
    _emit(out, args.format, _matrix_text(m), {"n": w.strands, "vlk": m})
    return 0


def _cmd_purify(args, out, stdin) -> int:
    (w,) = _words(args, stdin)
    res = purify(w)
    word = format_word(to_word(res.pure)) or "1"
    lines = [f"pure: {word}", f"normal form: {res.pure}", f"components: {list(res.components)}"]
    lines += ["vlk:", _matrix_text(res.vlk)]
    if args.trace:
        lines += ["trace:"] + [f"  {s}" for s in res.trace]
    data = {
        "pure": word,
        "normal_form": nf_to_json(res.pure),
        "components": list(res.components),
        "vlk": res.vlk,
    }
    if args.trace:
        data["trace"] = [s.to_json() for s in res.trace]
    _emit(out, args.format, "\n".join(lines), data)
    return 0


def _cmd_group(args, out, stdin) -> int:
    (w,) = _words(args, stdin)
    g = link_group_presentation(w)
    data = {"generators": list(g.generators), "relators": g.relator_strings(), "nilpotent_class": 2}
    _emit(out, args.format, str(g), data)
    return 0


def _cmd_classify2(args, out, stdin) -> int:
    (w,) = _words(args, stdin)
    c = classify_two_component(w)
    text = f"gamma = {c.gamma}\nvlk = {c.vlk}\n{c.presentation}"
    _emit(out, args.format, text, {"gamma": c.gamma, "vlk": list(c.vlk), "presentation": c.presentation})
    return 0


def _cmd_render(args, out, stdin) -> int:
    (w,) = _words(args, stdin)
    out.write(render_ascii(w) + "\n")
    return 0


def _cmd_selftest(args, out, stdin) -> int:
    checks = run_selftest(args.max_n)
    if args.format == "json":
        _emit(out, "json", "", [c._asdict() for c in checks])
    else:
        for c in checks:
            out.write(f"{'PASS' if c.ok else 'FAIL'}  {c.name}  {c.detail}".rstrip() + "\n")
    return 0 if all(c.ok for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uvbraid", description="Unrestricted virtual braids and their quotients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, nwords: int, help: str, models: Sequence[str] = MODELS):
        p = sub.add_parser(name, help=help)
        p.add_argument("-n", type=int, required=True, help="strand count")
        p.add_argument("--model", choices=models, default="uvb")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("words", nargs=nwords, metavar="WORD")
        return p

    add("nf", 1, "normal form").set_defaults(func=_cmd_nf)
    add("eq", 2, "word problem: exit 0 if equal, 1 otherwise").set_defaults(func=_cmd_eq)
    add("vlk", 1, "virtual linking numbers of a pure braid").set_defaults(func=_cmd_vlk)
    p = add("purify", 1, "pure braid with one strand per closure component", ("uvb",))
    p.add_argument("--trace", action="store_true", help="list the closure-preserving moves")
    p.set_defaults(func=_cmd_purify)
    add("group", 1, "fused link group of the closure", ("uvb",)).set_defaults(func=_cmd_group)
    add("classify2", 1, "gamma invariant of a two-component closure", ("uvb",)).set_defaults(
        func=_cmd_classify2
    )
    add("render", 1, "ASCII picture of the word").set_defaults(func=_cmd_render)
    p = sub.add_parser("selftest", help="relation suites and pinned examples")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, stdin)
    except ParseError as exc:
        err.write(f"uvbraid: parse error: {exc}\n")
        return EXIT_PARSE
    except DomainError as exc:
        err.write(f"uvbraid: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:  # e.g. Tits length cap
        err.write(f"uvbraid: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
