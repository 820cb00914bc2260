"""Milnor link-homotopy invariants from the Wirtinger presentation.

Generators are overarcs.  Every overarc is rewritten as a truncated
Magnus series in the component meridians ``1 + X_j`` by walking the
components and conjugating across each under-crossing; longitudes are
then read off and their coefficients give the invariants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from .diagram import LinkDiagram, _UnionFind
from .errors import NonConvergent, OutOfRange, RepeatedIndex


@dataclass
class WirtingerData:
    generators: list[int]  # overarc ids (smallest PD arc in each)
    component_of: dict[int, int]  # overarc -> component
    relations: list[tuple[int, int, int, int]]  # (incoming, outgoing, over, sign)
    meridians: dict[int, int]  # component -> overarc used as its meridian
    walks: dict[int, list[tuple[int, int, int]]] = field(default_factory=dict)
    # per component: (before, after, over-generator^sign) at each under-crossing
    self_writhe: dict[int, int] = field(default_factory=dict)

    def longitude_word(self, i: int) -> list[tuple[int, int]]:
        """Longitude as ``(generator, exponent)`` letters, framing-corrected."""
        word = [(y, s) for _, _, (y, s) in self.walks[i]]
        w = self.self_writhe[i]
        word += [(self.meridians[i], -1 if w > 0 else 1)] * abs(w)
        return word


def wirtinger(diagram: LinkDiagram) -> WirtingerData:
    uf = _UnionFind()
    for e in diagram.component_of_arc:
        uf.find(e)
    for x in diagram.crossings:
        uf.union(x.b, x.d)
    comp_of_arc = diagram.component_of_arc
    gens = sorted({uf.find(e) for e in comp_of_arc})
    component_of = {g: comp_of_arc[g] for g in gens}
    relations = []
    head = {}  # arc -> crossing where it is the incoming under arc
    for ci, x in enumerate(diagram.crossings):
        relations.append((uf.find(x.a), uf.find(x.c), uf.find(x.b), x.sign))
        head[x.a] = ci
    meridians = {}
    walks = {}
    writhe = {}
    for k, comp in enumerate(diagram.components, start=1):
        writhe[k] = sum(x.sign for ci, x in enumerate(diagram.crossings)
                        if diagram.strand_components(ci) == (k, k))
        if not comp:
            meridians[k] = None
            walks[k] = []
            continue
        # start right after an under-crossing so the walk begins on a fresh overarc
        start = 0
        for i, e in enumerate(comp):
            if comp[i - 1] in head:
                start = i
                break
        meridians[k] = uf.find(comp[start])
        steps = []
        for e in comp[start:] + comp[:start]:
            if e in head:
                x = diagram.crossings[head[e]]
                steps.append((uf.find(x.a), uf.find(x.c), (uf.find(x.b), x.sign)))
        walks[k] = steps
    return WirtingerData(gens, component_of, relations, meridians, walks, writhe)


# ---- truncated Magnus series -----------------------------------------------------

@dataclass(frozen=True)
class MagnusSeries:
    degree: int
    coeffs: tuple[tuple[tuple[int, ...], int], ...]
    homotopy: bool = True

    def as_dict(self):
        return dict(self.coeffs)

    def coefficient(self, mono) -> int:
        return self.as_dict().get(tuple(mono), 0)

    def __str__(self):
        parts = []
        for mono, c in sorted(self.coeffs, key=lambda t: (len(t[0]), t[0])):
            body = "".join(f"X{j}" for j in mono) or "1"
            parts.append(f"{c}*{body}" if body != "1" else str(c))
        return " + ".join(parts).replace("+ -", "- ")


class _Ring:
    def __init__(self, degree: int, homotopy: bool, live: frozenset | None):
        self.d = degree
        self.h = homotopy
        self.live = live

    def mul(self, p: dict, q: dict) -> dict:
        out: dict = {}
        d, h = self.d, self.h
        for m1, c1 in p.items():
            l1 = len(m1)
            for m2, c2 in q.items():
                if l1 + len(m2) > d:
                    continue
                m = m1 + m2
                if h and len(set(m)) != len(m):
                    continue
                out[m] = out.get(m, 0) + c1 * c2
        return {m: c for m, c in out.items() if c}

    def meridian(self, j: int, exponent: int) -> dict:
        if self.live is not None and j not in self.live:
            return {(): 1}
        out = {(): 1}
        if exponent > 0:
            out[(j,)] = 1
            return out
        # (1 + X)^-1 = 1 - X + X^2 - ...
        for k in range(1, (1 if self.h else self.d) + 1):
            out[(j,) * k] = (-1) ** k
        return out

    def inverse(self, p: dict) -> dict:
        n = {m: -c for m, c in p.items() if m}
        out = {(): 1}
        power = {(): 1}
        for _ in range(self.d):
            power = self.mul(power, n)
            if not power:
                break
            for m, c in power.items():
                out[m] = out.get(m, 0) + c
        return {m: c for m, c in out.items() if c}


def _solve(data: WirtingerData, ring: _Ring) -> dict[int, dict]:
    """Series for every overarc, iterated to a fixed point."""
    value = {g: ring.meridian(data.component_of[g], 1) for g in data.generators}
    for _ in range(ring.d + 2):
        changed = False
        for k, steps in data.walks.items():
            for before, after, (y, s) in steps:
                if after == data.meridians[k]:
                    continue
                yv = value[y] if s > 0 else ring.inverse(value[y])
                new = ring.mul(ring.mul(ring.inverse(yv), value[before]), yv)
                if new != value[after]:
                    value[after] = new
                    changed = True
        if not changed:
            return value
    raise NonConvergent("overarc series did not stabilize")


def magnus_longitude(data: WirtingerData, i: int, d: int, homotopy: bool = True,
                     live=None, _cache=None) -> MagnusSeries:
    if d < 1:
        raise OutOfRange("degree must be at least 1")
    if i not in data.walks:
        raise OutOfRange(f"component {i} out of range")
    ring = _Ring(d, homotopy, frozenset(live) if live is not None else None)
    key = (d, homotopy, ring.live)
    if _cache is not None and key in _cache:
        value = _cache[key]
    else:
        value = _solve(data, ring)
        if _cache is not None:
            _cache[key] = value
    acc = {(): 1}
    for g, s in data.longitude_word(i):
        gv = value[g] if s > 0 else ring.inverse(value[g])
        acc = ring.mul(acc, gv)
    return MagnusSeries(d, tuple(sorted(acc.items())), homotopy)


class MilnorCalculator:
    """Caches the overarc series of one diagram across many index sequences."""

    def __init__(self, diagram: LinkDiagram):
        self.diagram = diagram
        self.data = wirtinger(diagram)
        self._cache: dict = {}
        self._values: dict = {}

    def value(self, index: tuple[int, ...]) -> int:
        index = tuple(index)
        if index in self._values:
            return self._values[index]
        *head, last = index
        series = magnus_longitude(self.data, last, len(head), True, live=set(head), _cache=self._cache)
        v = series.coefficient(head)
        self._values[index] = v
        return v

    def mu_bar(self, index) -> tuple[int, int]:
        index = tuple(int(i) for i in index)
        n = self.diagram.n_components
        if len(index) < 2 or len(index) > n:
            raise OutOfRange(f"index length must be within 2..{n}")
        if any(not 1 <= i <= n for i in index):
            raise OutOfRange(f"index {index} outside 1..{n}")
        if len(set(index)) != len(index):
            raise RepeatedIndex(f"index {index} repeats a component")
        value = self.value(index)
        lower = []
        for r in range(2, len(index)):
            for sub in itertools.combinations(index, r):
                for k in range(r):
                    lower.append(self.value(sub[k:] + sub[:k]))
        delta = reduce(gcd, (abs(v) for v in lower), 0)
        if delta:
            value %= delta
        return value, delta


def mu_bar(diagram: LinkDiagram, index) -> tuple[int, int]:
    return MilnorCalculator(diagram).mu_bar(index)


def mu_report(diagram: LinkDiagram, index) -> str:
    v, delta = mu_bar(diagram, index)
    label = "".join(str(i) for i in index) if all(i < 10 for i in index) else ",".join(map(str, index))
    return f"mu({label}) = {v} (mod {delta})"
