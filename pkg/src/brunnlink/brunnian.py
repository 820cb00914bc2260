"""Sublink triviality certificates, (n,k)-Brunnian checks and sublink comparison."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .diagram import LinkDiagram, sublink
from .errors import BadK, LinkError, SizeMismatch
from .goeritz import checkerboard, lambda_value
from .invariants import jones, linking_matrix
from .moves import simplify

TRIVIAL, NONTRIVIAL, UNKNOWN = "TRIVIAL", "NONTRIVIAL", "UNKNOWN"


@dataclass(frozen=True)
class TrivialityCertificate:
    verdict: str
    moves: tuple[str, ...] = ()
    witness: tuple | None = None  # (invariant name, value, unlink value)
    residual_crossings: int = 0

    def __str__(self):
        if self.verdict == TRIVIAL:
            return f"TRIVIAL ({len(self.moves)} moves)"
        if self.verdict == NONTRIVIAL:
            name, got, want = self.witness
            return f"NONTRIVIAL ({name}: {got} vs unlink {want})"
        return f"UNKNOWN ({self.residual_crossings} crossings left)"


def _unlink_jones(n: int):
    return jones(LinkDiagram.unlink(n))


def certify_trivial(diagram: LinkDiagram, budget: int = 1000) -> TrivialityCertificate:
    n = diagram.n_components
    lk = linking_matrix(diagram)
    if any(v for row in lk.entries for v in row):
        return TrivialityCertificate(NONTRIVIAL, witness=("linking matrix", lk.tolist(),
                                                          [[0] * n for _ in range(n)]))
    result = simplify(diagram, budget)
    if not result.diagram.crossings:
        return TrivialityCertificate(TRIVIAL, tuple(result.moves))
    reduced = result.diagram
    try:
        j = jones(reduced)
    except LinkError:
        return TrivialityCertificate(UNKNOWN, residual_crossings=len(reduced.crossings))
    want = _unlink_jones(n)
    if j != want:
        return TrivialityCertificate(NONTRIVIAL, witness=("jones", j.pretty(), want.pretty()))
    return TrivialityCertificate(UNKNOWN, residual_crossings=len(reduced.crossings))


@dataclass(frozen=True)
class BrunnianVerdict:
    verdict: str  # YES, NO or UNKNOWN
    k: int
    witness: tuple[int, ...] | None = None
    undecided: tuple[tuple[int, ...], ...] = ()
    details: tuple = field(default=(), compare=False)

    def __str__(self):
        head = self.verdict
        if self.verdict == "NO":
            head += f" witness {_fmt_set(self.witness)}"
        elif self.verdict == "UNKNOWN":
            head += " undecided " + " ".join(_fmt_set(s) for s in self.undecided)
        lines = [head]
        for s, cert in self.details:
            lines.append(f"  {_fmt_set(s)}: {cert}")
        return "\n".join(lines)


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def _check_k(diagram: LinkDiagram, k: int) -> None:
    n = diagram.n_components
    if not 1 <= k < n:
        raise BadK(f"k must satisfy 1 <= k < n = {n}, got {k}")


def is_nk_brunnian(diagram: LinkDiagram, k: int, budget: int = 1000) -> BrunnianVerdict:
    _check_k(diagram, k)
    details = []
    undecided = []
    for s in itertools.combinations(range(1, diagram.n_components + 1), k):
        cert = certify_trivial(sublink(diagram, s), budget)
        details.append((s, cert))
        if cert.verdict == NONTRIVIAL:
            return BrunnianVerdict("NO", k, s, details=tuple(details))
        if cert.verdict == UNKNOWN:
            undecided.append(s)
    if undecided:
        return BrunnianVerdict("UNKNOWN", k, undecided=tuple(undecided), details=tuple(details))
    return BrunnianVerdict("YES", k, details=tuple(details))


@dataclass(frozen=True)
class SublinkComparison:
    verdict: str  # CONSISTENT or DISTINGUISHED
    k: int
    witness: tuple[int, ...] | None = None
    invariant: str | None = None
    values: tuple = ()

    def __str__(self):
        if self.verdict == "CONSISTENT":
            return f"CONSISTENT (all {self.k}-component sublinks agree)"
        a, b = self.values
        return f"DISTINGUISHED by {_fmt_set(self.witness)} via {self.invariant}: {a} vs {b}"


def _lambda_table(d: LinkDiagram):
    """Canonical lambda for every surface component where it is defined."""
    out = {}
    n = d.n_components
    for c in range(1, n + 1):
        try:
            data = checkerboard(d, c)
            for i, j in itertools.combinations([m for m in range(1, n + 1) if m != c], 2):
                out[(c, i, j)] = lambda_value(data, i, j).canonical
        except LinkError:
            out[(c,)] = None
    return out


def common_sublinks(first: LinkDiagram, second: LinkDiagram, k: int) -> SublinkComparison:
    if first.n_components != second.n_components:
        raise SizeMismatch(f"{first.n_components} vs {second.n_components} components")
    _check_k(first, k)
    for s in itertools.combinations(range(1, first.n_components + 1), k):
        a, b = sublink(first, s), sublink(second, s)
        la, lb = linking_matrix(a), linking_matrix(b)
        if la != lb:
            return SublinkComparison("DISTINGUISHED", k, s, "linking matrix", (la.tolist(), lb.tolist()))
        ra, rb = simplify(a).diagram, simplify(b).diagram
        ja, jb = jones(ra), jones(rb)
        if ja != jb:
            return SublinkComparison("DISTINGUISHED", k, s, "jones", (ja.pretty(), jb.pretty()))
        if k >= 2:
            ta, tb = _lambda_table(a), _lambda_table(b)
            for key in sorted(set(ta) & set(tb), key=str):
                if ta[key] is not None and tb[key] is not None and ta[key] != tb[key]:
                    return SublinkComparison("DISTINGUISHED", k, s, f"lambda{key}", (ta[key], tb[key]))
    return SublinkComparison("CONSISTENT", k)
