"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (its name is printed), 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from .braids import BraidWord, ClasperForest, ClasperSpec, closure, surger
from .brunnian import common_sublinks, is_nk_brunnian
from .codec import parse_braid, parse_pd, serialize_braid, serialize_pd
from .errors import LinkError
from .goeritz import checkerboard, lambda_report
from .invariants import arf_link, jones, linking_matrix
from .milnor import mu_report
from .moves import simplify


class UsageError(Exception):
    pass


def _read(path: str, fmt: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "auto":
        fmt = "braid" if re.search(r"\bstrands=", text) else "pd"
    if fmt == "braid":
        return closure(parse_braid(text))
    return parse_pd(text)


def _index(text: str) -> list[int]:
    if "," in text:
        parts = text.split(",")
    else:
        parts = list(text)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"--index: cannot read {text!r}") from None


def _clasper(text: str) -> ClasperSpec:
    m = re.fullmatch(r"(\d+):([\d,]+):(\d+):([+-]?1)", text)
    if not m:
        raise UsageError(f"--clasper: expected k:S:pos:sign, got {text!r}")
    k, s, pos, sign = m.groups()
    idx = tuple(int(c) for c in (s.split(",") if "," in s else s))
    return ClasperSpec(int(k), idx, int(pos), int(sign))


def _matrix(m) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in m.tolist())


def cmd_invariants(args) -> str:
    d = _read(args.file, args.format)
    reduced = simplify(d).diagram
    return "\n".join([
        "linking matrix:", _matrix(linking_matrix(d)),
        f"writhe: {d.writhe}",
        f"jones: {jones(reduced).pretty()}",
    ])


def cmd_lambda(args) -> str:
    d = _read(args.file, args.format)
    return lambda_report(checkerboard(d, args.surface))


def cmd_arf(args) -> str:
    d = _read(args.file, args.format)
    return f"arf: {arf_link(d)}"


def cmd_milnor(args) -> str:
    d = _read(args.file, args.format)
    return mu_report(d, _index(args.index))


def cmd_brunnian(args) -> str:
    d = _read(args.file, args.format)
    return str(is_nk_brunnian(d, args.k))


def cmd_generate(args) -> str:
    specs = tuple(_clasper(c) for c in args.clasper or ())
    for s in specs:
        s.check(args.n)
    word = surger(BraidWord.identity(args.n), ClasperForest(args.n, specs))
    return serialize_braid(word) + serialize_pd(closure(word))


def cmd_compare(args) -> str:
    a = _read(args.file1, args.format)
    b = _read(args.file2, args.format)
    return str(common_sublinks(a, b, args.k))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brunnlink", description="Link invariants and Brunnian checks.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, *files):
        q = sub.add_parser(name)
        for f in files:
            q.add_argument(f)
        q.add_argument("--format", choices=("pd", "braid", "auto"), default="auto")
        q.set_defaults(fn=fn)
        return q

    add("invariants", cmd_invariants, "file")
    add("lambda", cmd_lambda, "file").add_argument("--surface", type=int, required=True)
    add("arf", cmd_arf, "file")
    add("milnor", cmd_milnor, "file").add_argument("--index", required=True)
    add("brunnian", cmd_brunnian, "file").add_argument("--k", type=int, required=True)
    g = add("generate", cmd_generate)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--clasper", action="append", metavar="k:S:pos:sign")
    add("compare", cmd_compare, "file1", "file2").add_argument("--k", type=int, required=True)
    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except LinkError as exc:
        print(f"{exc.code}: {exc}")
        return 1
    print(out.rstrip("\n"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
