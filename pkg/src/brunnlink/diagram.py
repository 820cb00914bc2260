"""Oriented link diagrams stored as planar-diagram (PD) crossing lists.

Conventions
-----------
A crossing ``X(a, b, c, d)`` lists its four arcs counterclockwise, starting
from the incoming under-strand; ``a -> c`` is the under-strand.  The over
strand runs ``d -> b`` on a positive crossing and ``b -> d`` on a negative
one.  Inside a :class:`LinkDiagram` arcs are renumbered ``1..arc_count`` so
that they increase along each component, component after component.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    ArcMultiplicity,
    BadSelector,
    ComponentMismatch,
    InconsistentOrientation,
)

# slot reached by passing straight through a crossing
THROUGH = (2, 3, 0, 1)


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def arcs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def incoming(self, slot: int) -> bool:
        if slot == 0:
            return True
        if slot == 2:
            return False
        return (slot == 3) == (self.sign > 0)

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    def relabel(self, f) -> "Crossing":
        return Crossing(f(self.a), f(self.b), f(self.c), f(self.d), self.sign)

    def mirrored(self) -> "Crossing":
        if self.sign > 0:
            return Crossing(self.d, self.a, self.b, self.c, -1)
        return Crossing(self.b, self.c, self.d, self.a, 1)


def trace_successors(crossings: Sequence[Crossing]) -> dict[int, int]:
    """Map each arc to the next arc along its component.

    Raises ArcMultiplicity / InconsistentOrientation on malformed input.
    """
    seen: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(crossings):
        for s, e in enumerate(x.arcs):
            seen.setdefault(e, []).append((ci, s))
    succ = {}
    for e, occ in seen.items():
        if len(occ) != 2:
            raise ArcMultiplicity(f"arc {e} appears {len(occ)} times")
        kinds = [crossings[ci].incoming(s) for ci, s in occ]
        if kinds.count(True) != 1:
            raise InconsistentOrientation(f"arc {e} is not entered exactly once")
        ci, s = occ[kinds.index(True)]
        succ[e] = crossings[ci].arcs[THROUGH[s]]
    return succ


def cycles_of(succ: dict[int, int]) -> list[list[int]]:
    """Cycles of a successor map, each starting at its smallest arc."""
    done = set()
    out = []
    for start in sorted(succ):
        if start in done:
            continue
        cyc = [start]
        done.add(start)
        e = succ[start]
        while e != start:
            cyc.append(e)
            done.add(e)
            e = succ[e]
        out.append(cyc)
    return out


@dataclass(frozen=True)
class LinkDiagram:
    """Immutable oriented link diagram.

    ``components`` holds, for each component in order, its arcs in the
    direction of travel; a crossing-free circle is the empty tuple.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]

    @classmethod
    def from_parts(cls, crossings: Iterable[Crossing],
                   components: Sequence[Sequence[int]]) -> "LinkDiagram":
        """Canonicalize: renumber arcs along ``components`` and sort crossings."""
        crossings = list(crossings)
        new = {}
        nxt = 1
        for comp in components:
            for e in comp:
                if e in new:
                    raise ArcMultiplicity(f"arc {e} listed in two places")
                new[e] = nxt
                nxt += 1
        try:
            xs = [x.relabel(new.__getitem__) for x in crossings]
        except KeyError as exc:
            raise ComponentMismatch(f"arc {exc.args[0]} belongs to no component") from None
        xs.sort(key=lambda x: (min(x.arcs), x.arcs))
        comps = []
        for comp in components:
            comps.append(tuple(new[e] for e in comp))
        return cls(tuple(xs), tuple(comps))

    @classmethod
    def from_crossings(cls, crossings: Sequence[Crossing], free: int = 0,
                       order: Sequence[int] | None = None) -> "LinkDiagram":
        """Build from signed crossings with arbitrary arc ids.

        Components are ordered by smallest input arc id unless ``order``
        gives, for each cycle (listed by smallest arc), its target position.
        ``free`` crossing-free circles are appended.
        """
        succ = trace_successors(crossings)
        cyc = cycles_of(succ)
        if order is not None:
            if sorted(order) != list(range(len(cyc))):
                raise ComponentMismatch("component order does not match cycles")
            ranked = [None] * len(cyc)
            for c, pos in zip(cyc, order):
                ranked[pos] = c
            cyc = ranked
        comps = [tuple(c) for c in cyc] + [()] * free
        return cls.from_parts(crossings, comps)

    @classmethod
    def unlink(cls, n: int) -> "LinkDiagram":
        return cls((), ((),) * n)

    # ---- basic bookkeeping -------------------------------------------------

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def unknotted_free_components(self) -> int:
        return sum(1 for c in self.components if not c)

    @cached_property
    def component_of_arc(self) -> dict[int, int]:
        """arc id -> component index, 1-based."""
        return {e: k + 1 for k, comp in enumerate(self.components) for e in comp}

    @cached_property
    def successor(self) -> dict[int, int]:
        out = {}
        for comp in self.components:
            for i, e in enumerate(comp):
                out[e] = comp[(i + 1) % len(comp)]
        return out

    @cached_property
    def occurrences(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        occ: dict[int, list] = {}
        for ci, x in enumerate(self.crossings):
            for s, e in enumerate(x.arcs):
                occ.setdefault(e, []).append((ci, s))
        return {e: tuple(v) for e, v in occ.items()}

    def other_end(self, ci: int, slot: int) -> tuple[int, int]:
        e = self.crossings[ci].arcs[slot]
        p, q = self.occurrences[e]
        return q if p == (ci, slot) else p

    def strand_components(self, ci: int) -> tuple[int, int]:
        """(under component, over component) of crossing ``ci``."""
        x = self.crossings[ci]
        return self.component_of_arc[x.a], self.component_of_arc[x.b]

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def __str__(self) -> str:
        body = " ".join("X(%d,%d,%d,%d)" % x.arcs for x in self.crossings)
        return f"<LinkDiagram {self.n_components} comps: {body or 'no crossings'}>"

    # ---- planar structure --------------------------------------------------

    def corner_next(self, ci: int, slot: int) -> tuple[int, int]:
        """Next corner on the same face.

        Corner ``(ci, s)`` is the region between slots ``s`` and ``s+1``;
        the face is left through slot ``s+1`` and is on the right of the
        traveller.
        """
        return self.other_end(ci, (slot + 1) % 4)

    @cached_property
    def faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Faces as cycles of corners, ordered by their first corner."""
        seen = set()
        out = []
        for ci in range(len(self.crossings)):
            for s in range(4):
                if (ci, s) in seen:
                    continue
                face = []
                cur = (ci, s)
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cur = self.corner_next(*cur)
                out.append(tuple(face))
        return tuple(out)

    def shadow_pieces(self) -> list[set[int]]:
        """Crossing indices grouped by connected piece of the projection."""
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for p, q in self.occurrences.values():
            parent[find(p[0])] = find(q[0])
        groups: dict[int, set[int]] = {}
        for i in range(len(self.crossings)):
            groups.setdefault(find(i), set()).add(i)
        return sorted(groups.values(), key=min)


def validate(diagram: LinkDiagram) -> None:
    """Raise if ``diagram`` violates any structural invariant."""
    xs = diagram.crossings
    succ = trace_successors(xs)
    listed = [e for comp in diagram.components for e in comp]
    if sorted(listed) != sorted(succ):
        raise ComponentMismatch("component arcs do not match crossing arcs")
    if sorted(listed) != list(range(1, len(listed) + 1)):
        raise ArcMultiplicity("arc ids are not 1..arc_count")
    for comp in diagram.components:
        for i, e in enumerate(comp):
            if succ[e] != comp[(i + 1) % len(comp)]:
                raise ComponentMismatch(f"arc {e} does not continue its component")
    for x in xs:
        if x.sign not in (1, -1):
            raise InconsistentOrientation(f"bad crossing sign {x.sign}")


def _check_selector(diagram: LinkDiagram, selector: Iterable[int]) -> list[int]:
    sel = sorted(set(selector))
    if not sel or len(sel) != len(list(selector)):
        raise BadSelector(f"selector {selector!r} is empty or repeats an index")
    if sel[0] < 1 or sel[-1] > diagram.n_components:
        raise BadSelector(f"selector {sel} out of range 1..{diagram.n_components}")
    return sel


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def remove_crossings(diagram: LinkDiagram, drop: Iterable[int],
                     keep: Sequence[int] | None = None) -> LinkDiagram:
    """Delete crossings, letting kept strands pass straight through them.

    ``keep`` lists the (1-based) components that survive, in order; by
    default all of them.  Every dropped crossing must involve only
    components for which straight pass-through is meaningful; crossings
    that touch a discarded component must all be in ``drop``.
    """
    keep = list(range(1, diagram.n_components + 1)) if keep is None else list(keep)
    kept = set(keep)
    comp_of = diagram.component_of_arc
    drop = set(drop)
    uf = _UnionFind()
    for ci in drop:
        x = diagram.crossings[ci]
        for s in (0, 1):
            e, f = x.arcs[s], x.arcs[s + 2]
            if comp_of[e] in kept:
                uf.union(e, f)
    rest = []
    for ci, x in enumerate(diagram.crossings):
        if ci in drop:
            continue
        rest.append(x.relabel(uf.find))
    present = {e for x in rest for e in x.arcs}
    comps = []
    for k in keep:
        seq = []
        for e in diagram.components[k - 1]:
            r = uf.find(e)
            if r in present and (not seq or seq[-1] != r):
                seq.append(r)
        while len(seq) > 1 and seq[0] == seq[-1]:
            seq.pop()
        comps.append(tuple(seq))
    return LinkDiagram.from_parts(rest, comps)


def sublink(diagram: LinkDiagram, selector: Iterable[int]) -> LinkDiagram:
    """Keep only the components in ``selector`` (renumbered in order)."""
    sel = _check_selector(diagram, list(selector))
    kept = set(sel)
    comp_of = diagram.component_of_arc
    drop = [ci for ci, x in enumerate(diagram.crossings)
            if comp_of[x.a] not in kept or comp_of[x.b] not in kept]
    return remove_crossings(diagram, drop, sel)


def mirror(diagram: LinkDiagram) -> LinkDiagram:
    """Switch every crossing."""
    return LinkDiagram.from_parts([x.mirrored() for x in diagram.crossings],
                                  diagram.components)


_ANGLE = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}


def make_crossing(under_dir, over_dir, under_in, under_out, over_in, over_out) -> Crossing:
    """Crossing from axis-aligned travel directions of its two strands.

    Directions are unit vectors such as ``(0, 1)``; an incoming arc sits on
    the side opposite to the travel direction.
    """
    ux, uy = under_dir
    ox, oy = over_dir
    half = {
        _ANGLE[(-ux, -uy)]: under_in,
        _ANGLE[(ux, uy)]: under_out,
        _ANGLE[(-ox, -oy)]: over_in,
        _ANGLE[(ox, oy)]: over_out,
    }
    if len(half) != 4:
        raise ValueError("strands must be transverse")
    start = _ANGLE[(-ux, -uy)]
    arcs = [half[(start + k) % 4] for k in range(4)]
    sign = 1 if ox * uy - oy * ux > 0 else -1
    return Crossing(*arcs, sign)
