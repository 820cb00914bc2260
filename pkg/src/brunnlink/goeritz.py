"""Checkerboard surfaces, Goeritz matrices and the linking form lambda mod 1.

The surface is one color class of the checkerboard shading of the chosen
component's own diagram.  Each other component, followed between two
consecutive crossings with that component, stays inside a single region;
if its height changes there it passes through the region.  Passing
through a black region would meet the surface, so only shadings with no
such pass are accepted; passes through white regions give the linking
vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import LinkDiagram, _check_selector, _UnionFind
from .errors import BadSelector, DisconnectedShadow, OddLinking, SingularGoeritz, SurfaceIntersection
from .invariants import linking_number
from .laurent import IntegerMatrix, determinant, inverse


@dataclass(frozen=True)
class ResidueMod1:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    @property
    def canonical(self) -> Fraction:
        return min(self.value, 1 - self.value) if self.value else Fraction(0)

    @staticmethod
    def _fmt(f: Fraction) -> str:
        return f"{f.numerator}/{f.denominator}"

    def __str__(self):
        return f"{self._fmt(self.value)} (canonical {self._fmt(self.canonical)})"


@dataclass
class GoeritzData:
    surface_component: int
    shading: dict[int, str]
    white_basis: list[int]
    dropped: int | None
    matrix: IntegerMatrix
    vectors: dict[int, tuple[int, ...]]
    faces: tuple = field(default=(), repr=False)


def _surface_diagram(diagram: LinkDiagram, c: int):
    """Sub-diagram of component ``c`` keeping arc ids as union-find classes.

    Returns the sub-diagram, the full crossing index of each sub crossing
    and the class map for arcs of ``c``.
    """
    uf = _UnionFind()
    keep = []
    for ci, x in enumerate(diagram.crossings):
        u, o = diagram.strand_components(ci)
        if u == c and o == c:
            keep.append(ci)
        elif u == c:
            uf.union(x.a, x.c)
        elif o == c:
            uf.union(x.b, x.d)
    xs = tuple(diagram.crossings[ci].relabel(uf.find) for ci in keep)
    arcs = {e: uf.find(e) for e in diagram.components[c - 1]}
    sub = LinkDiagram(xs, (tuple(sorted(set(arcs.values()))),))
    return sub, keep, arcs


def _two_colorings(sub: LinkDiagram):
    face_of = {}
    for fi, face in enumerate(sub.faces):
        for corner in face:
            face_of[corner] = fi
    color = {0: 0}
    stack = [0]
    adj: dict[int, set] = {}
    for ci in range(len(sub.crossings)):
        for s in range(4):
            f, g = face_of[(ci, s)], face_of[(ci, (s + 1) % 4)]
            adj.setdefault(f, set()).add(g)
            adj.setdefault(g, set()).add(f)
    while stack:
        f = stack.pop()
        for g in adj.get(f, ()):
            if g not in color:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise DisconnectedShadow("regions do not admit a checkerboard shading")
    return face_of, color


def _side_faces(sub: LinkDiagram, face_of):
    """sub arc -> (face on its left, face on its right) w.r.t. its direction."""
    out = {}
    for ci, x in enumerate(sub.crossings):
        for s in range(4):
            if not x.incoming(s):
                out[x.arcs[s]] = (face_of[(ci, s)], face_of[(ci, (s - 1) % 4)])
    return out


def _passes(diagram: LinkDiagram, c: int, m: int, arcs_c, sides):
    """(face, height change) for each stretch of component ``m`` between
    consecutive crossings with component ``c``."""
    events = []  # (level, face entered afterwards, face arrived from)
    comp = diagram.components[m - 1]
    occ = diagram.occurrences
    for e in comp:
        # e arrives at the crossing where it is incoming
        (p, ps), (q, qs) = occ[e]
        ci, s = (p, ps) if diagram.crossings[p].incoming(ps) else (q, qs)
        x = diagram.crossings[ci]
        u, o = diagram.strand_components(ci)
        if {u, o} != {c, m} or u == o:
            continue
        c_over = o == c
        c_arc = arcs_c[x.b] if c_over else arcs_c[x.a]
        left, right = sides[c_arc]
        goes_left = x.sign * (1 if c_over else -1) > 0
        after, before = (left, right) if goes_left else (right, left)
        level = -1 if c_over else 1
        events.append((level, after, before))
    out = []
    for k, (lv, after, _) in enumerate(events):
        nlv, _, nbefore = events[(k + 1) % len(events)]
        if after != nbefore:
            raise DisconnectedShadow("component crosses the surface diagram inconsistently")
        out.append((after, (nlv - lv) // 2))
    return out


def checkerboard(diagram: LinkDiagram, surface_component: int) -> GoeritzData:
    c = surface_component
    _check_selector(diagram, [c])
    n = diagram.n_components
    for m in range(1, n + 1):
        if m != c:
            lk = linking_number(diagram, c, m)
            if lk % 2:
                raise OddLinking(f"lk(K{c}, K{m}) = {lk} is odd")
    sub, keep, arcs_c = _surface_diagram(diagram, c)
    others = [m for m in range(1, n + 1) if m != c]
    if not sub.crossings:
        # the component bounds a disk in its own diagram
        return GoeritzData(c, {}, [], None, IntegerMatrix.zeros(0), {m: () for m in others})
    if len(sub.shadow_pieces()) != 1:
        raise DisconnectedShadow("surface component's diagram is not connected")
    face_of, color = _two_colorings(sub)
    sides = _side_faces(sub, face_of)
    passes = {m: _passes(diagram, c, m, arcs_c, sides) for m in others}
    faces = sub.faces
    largest = max(range(len(faces)), key=lambda f: (len(faces[f]), -f))
    options = []
    for white in (color[largest], 1 - color[largest]):
        if any(color[f] != white and h for ps in passes.values() for f, h in ps):
            continue
        options.append(white)
    if not options:
        raise SurfaceIntersection(
            f"other components pass through both shadings of component {c}; re-draw them")
    white = options[0]
    whites = [f for f in range(len(faces)) if color[f] == white]
    dropped = largest if color[largest] == white else max(whites, key=lambda f: (len(faces[f]), -f))
    basis = [f for f in whites if f != dropped]
    idx = {f: k for k, f in enumerate(basis)}
    size = len(basis)
    g = [[0] * size for _ in range(size)]
    diag = [0] * size
    for ci in range(len(sub.crossings)):
        wc = [s for s in range(4) if color[face_of[(ci, s)]] == white]
        eta = 1 if set(wc) == {1, 3} else -1
        f1, f2 = face_of[(ci, wc[0])], face_of[(ci, wc[1])]
        if f1 == f2:
            continue
        for f, h in ((f1, f2), (f2, f1)):
            if f in idx:
                diag[idx[f]] += eta
                if h in idx:
                    g[idx[f]][idx[h]] -= eta
    for k in range(size):
        g[k][k] = diag[k]
    vectors = {}
    for m in others:
        v = [0] * size
        for f, h in passes[m]:
            if h and f in idx:
                v[idx[f]] += h
        vectors[m] = tuple(v)
    shading = {f: ("white" if color[f] == white else "black") for f in range(len(faces))}
    return GoeritzData(c, shading, basis, dropped, IntegerMatrix.of(g) if size else IntegerMatrix.zeros(0),
                       vectors, faces)


def lambda_value(data: GoeritzData, i: int, j: int) -> ResidueMod1:
    if i == data.surface_component or j == data.surface_component:
        raise BadSelector("lambda pairs must avoid the surface component")
    if i not in data.vectors or j not in data.vectors:
        raise BadSelector(f"components {i}, {j} not in the link")
    if not data.white_basis:
        return ResidueMod1(Fraction(0))
    rows = data.matrix.tolist()
    if determinant(rows) == 0:
        raise SingularGoeritz("Goeritz matrix is singular for this diagram")
    ginv = inverse(rows)
    vi, vj = data.vectors[i], data.vectors[j]
    total = sum(vi[a] * ginv[a][b] * vj[b] for a in range(len(vi)) for b in range(len(vj)))
    return ResidueMod1(total)


def lambda_report(data: GoeritzData) -> str:
    others = sorted(data.vectors)
    lines = []
    for a, i in enumerate(others):
        for j in others[a + 1:]:
            r = lambda_value(data, i, j)
            lines.append(f"lambda({i},{j}) = {ResidueMod1._fmt(r.value)} "
                         f"(canonical {ResidueMod1._fmt(r.canonical)})")
    return "\n".join(lines)


@dataclass(frozen=True)
class LambdaComparison:
    verdict: str  # DISTINGUISHED or INCONCLUSIVE
    witness: tuple[int, int] | None
    values: dict

    def __str__(self):
        lines = [self.verdict + (f" by ({self.witness[0]},{self.witness[1]})" if self.witness else "")]
        for (i, j), (u1, u2) in sorted(self.values.items()):
            lines.append(f"lambda({i},{j}): {ResidueMod1._fmt(u1)} vs {ResidueMod1._fmt(u2)}")
        return "\n".join(lines)


def lambda_compare(first: LinkDiagram, second: LinkDiagram, c: int) -> LambdaComparison:
    if first.n_components != second.n_components:
        raise BadSelector("links have different numbers of components")
    d1, d2 = checkerboard(first, c), checkerboard(second, c)
    others = sorted(d1.vectors)
    values = {}
    witness = None
    for a, i in enumerate(others):
        for j in others[a + 1:]:
            u1 = lambda_value(d1, i, j).canonical
            u2 = lambda_value(d2, i, j).canonical
            values[(i, j)] = (u1, u2)
            if u1 != u2 and witness is None:
                witness = (i, j)
    return LambdaComparison("DISTINGUISHED" if witness else "INCONCLUSIVE", witness, values)
