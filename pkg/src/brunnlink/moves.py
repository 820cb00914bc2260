"""Reidemeister moves on PD diagrams and a greedy simplifier.

Every move returns a new canonical :class:`LinkDiagram`; component order
and the crossing-free components are preserved.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .diagram import THROUGH, Crossing, LinkDiagram, make_crossing, remove_crossings, trace_successors


def _rebuild(old: LinkDiagram, crossings: list[Crossing]) -> LinkDiagram:
    """Canonical diagram from new crossings whose arc ids still contain the
    first arc of every old non-free component."""
    succ = trace_successors(crossings) if crossings else {}
    comps = []
    for comp in old.components:
        if not comp:
            comps.append(())
            continue
        cyc = [comp[0]]
        e = succ[comp[0]]
        while e != comp[0]:
            cyc.append(e)
            e = succ[e]
        comps.append(tuple(cyc))
    return LinkDiagram.from_parts(crossings, comps)


# ---- detection ------------------------------------------------------------------

def find_r1(d: LinkDiagram) -> int | None:
    for ci, x in enumerate(d.crossings):
        arcs = x.arcs
        for s in range(4):
            if arcs[s] == arcs[(s + 1) % 4]:
                return ci
    return None


def _face_edges(d: LinkDiagram, face):
    """For a face's corners, the edge leaving each corner as
    ``(crossing, slot) -> (crossing, slot)``."""
    out = []
    for ci, s in face:
        t = (s + 1) % 4
        out.append(((ci, t), d.other_end(ci, t)))
    return out


def find_r2(d: LinkDiagram) -> tuple[int, int] | None:
    for face in d.faces:
        if len(face) != 2:
            continue
        (ci, s), (cj, t) = face
        if ci == cj:
            continue
        # the edge from ci slot s+1 lands in cj slot t: same parity means
        # one strand is over at both ends
        if (s + 1) % 2 == t % 2:
            return ci, cj
    return None


def _r3_candidates(d: LinkDiagram):
    for face in d.faces:
        if len(face) != 3 or len({ci for ci, _ in face}) != 3:
            continue
        edges = _face_edges(d, face)
        kinds = set()
        for (p, sp), (q, sq) in edges:
            kinds.add((sp % 2, sq % 2))
        if (1, 1) in kinds and (0, 0) in kinds:
            yield edges


# ---- moves --------------------------------------------------------------------

def r1_remove(d: LinkDiagram, ci: int) -> LinkDiagram:
    return remove_crossings(d, [ci])


def r2_remove(d: LinkDiagram, ci: int, cj: int) -> LinkDiagram:
    return remove_crossings(d, [ci, cj])


def r3(d: LinkDiagram, edges) -> LinkDiagram:
    """Pass the triangle's third strand across the crossing of the other two."""
    arcs = [list(x.arcs) for x in d.crossings]
    writes = []
    for (x, sx), (y, sy) in edges:
        e = arcs[x][sx]
        ox = arcs[x][THROUGH[sx]]
        oy = arcs[y][THROUGH[sy]]
        writes += [(x, sx, oy), (y, sy, ox), (x, THROUGH[sx], e), (y, THROUGH[sy], e)]
    for ci, s, v in writes:
        arcs[ci][s] = v
    xs = [Crossing(*a, x.sign) for a, x in zip(arcs, d.crossings)]
    return _rebuild(d, xs)


def r1_add(d: LinkDiagram, arc: int, variant: int) -> LinkDiagram:
    """Add a curl on ``arc``; ``variant`` in 0..3 picks sign and side."""
    top = max(d.component_of_arc, default=0)
    loop, out = top + 1, top + 2
    # the curl's outgoing piece takes over the old arc's far end
    xs = []
    for x in d.crossings:
        a = list(x.arcs)
        for s in range(4):
            if a[s] == arc and x.incoming(s):
                a[s] = out
        xs.append(Crossing(*a, x.sign))
    kink = [
        Crossing(arc, out, loop, loop, 1),
        Crossing(arc, loop, loop, out, -1),
        Crossing(loop, loop, out, arc, 1),
        Crossing(loop, arc, out, loop, -1),
    ][variant]
    if not d.crossings:
        raise ValueError("curl needs an arc")
    return _rebuild(d, xs + [kink])


def r2_add(d: LinkDiagram, face_index: int, i: int, j: int, over: bool) -> LinkDiagram | None:
    """Push edge ``i`` of a face across edge ``j`` of the same face.

    Returns ``None`` when the two edges are the same arc.
    """
    face = d.faces[face_index]
    edges = _face_edges(d, face)
    (p1, s1), _ = edges[i]
    (p2, s2), _ = edges[j]
    e1 = d.crossings[p1].arcs[s1]
    e2 = d.crossings[p2].arcs[s2]
    if e1 == e2:
        return None
    f1 = -1 if d.crossings[p1].incoming(s1) else 1
    f2 = -1 if d.crossings[p2].incoming(s2) else 1
    top = max(d.component_of_arc)
    n = iter(range(top + 1, top + 5))

    def split(e, f):
        a, b = next(n), next(n)
        seg = [e, a, b] if f > 0 else [b, a, e]
        return seg

    x0, x1, x2 = split(e1, f1)
    y0, y1, y2 = split(e2, f2)
    # boundary order of e1 is x0,x1,x2 and of e2 is y0,y1,y2; retarget the
    # far ends of the split arcs
    far = {}
    if f1 > 0:
        far[e1] = x2  # end where e1 arrives
    else:
        far[e1] = x0
    if f2 > 0:
        far[e2] = y2
    else:
        far[e2] = y0
    xs = []
    for x in d.crossings:
        a = list(x.arcs)
        for s in range(4):
            if a[s] in far and x.incoming(s):
                a[s] = far[a[s]]
        xs.append(Crossing(*a, x.sign))

    def strand(bdir, bin_, bout, f):
        if f > 0:
            return bdir, bin_, bout
        return (-bdir[0], -bdir[1]), bout, bin_

    def cross(s1_, s2_):
        if over:
            return make_crossing(s2_[0], s1_[0], s2_[1], s2_[2], s1_[1], s1_[2])
        return make_crossing(s1_[0], s2_[0], s1_[1], s1_[2], s2_[1], s2_[2])

    P = cross(strand((0, -1), x0, x1, f1), strand((-1, 0), y1, y2, f2))
    Q = cross(strand((0, 1), x1, x2, f1), strand((-1, 0), y0, y1, f2))
    return _rebuild(d, xs + [P, Q])


def is_planar(d: LinkDiagram) -> bool:
    if not d.crossings:
        return True
    return len(d.faces) == len(d.crossings) + 2 * len(d.shadow_pieces())


def random_moves(d: LinkDiagram, count: int, rng: random.Random) -> LinkDiagram:
    """Apply ``count`` random Reidemeister moves (mostly complicating)."""
    done = 0
    while done < count:
        kind = rng.random()
        if not d.crossings:
            return d
        if kind < 0.3:
            arc = rng.choice(sorted(d.component_of_arc))
            d = r1_add(d, arc, rng.randrange(4))
        elif kind < 0.75:
            fi = rng.randrange(len(d.faces))
            k = len(d.faces[fi])
            if k < 2:
                continue
            i, j = rng.sample(range(k), 2)
            new = r2_add(d, fi, i, j, rng.random() < 0.5)
            if new is None:
                continue
            d = new
        elif kind < 0.9:
            cands = list(_r3_candidates(d))
            if not cands:
                continue
            d = r3(d, rng.choice(cands))
        else:
            hit = find_r2(d)
            if hit is not None:
                d = r2_remove(d, *hit)
            else:
                ci = find_r1(d)
                if ci is None:
                    continue
                d = r1_remove(d, ci)
        done += 1
    return d


# ---- simplification -------------------------------------------------------------

@dataclass
class Simplified:
    diagram: LinkDiagram
    moves: list[str] = field(default_factory=list)


def _greedy(d: LinkDiagram, log: list[str]) -> LinkDiagram:
    while True:
        ci = find_r1(d)
        if ci is not None:
            log.append("R1- X(%d,%d,%d,%d)" % d.crossings[ci].arcs)
            d = r1_remove(d, ci)
            continue
        hit = find_r2(d)
        if hit is not None:
            log.append("R2- X(%d,%d,%d,%d) X(%d,%d,%d,%d)"
                       % (d.crossings[hit[0]].arcs + d.crossings[hit[1]].arcs))
            d = r2_remove(d, *hit)
            continue
        return d


def _reducible(d: LinkDiagram) -> bool:
    return find_r1(d) is not None or find_r2(d) is not None


def simplify(d: LinkDiagram, budget: int = 1000, depth: int = 3) -> Simplified:
    """Remove crossings by R-I and R-II; when stuck, search up to ``depth``
    R-III moves (at most ``budget`` in total) for a reducible diagram."""
    log: list[str] = []
    d = _greedy(d, log)
    spent = 0
    while d.crossings and spent < budget:
        frontier = [(d, [])]
        seen = {d.crossings}
        found = None
        for _ in range(depth):
            nxt = []
            for cur, path in frontier:
                for edges in _r3_candidates(cur):
                    if spent >= budget:
                        break
                    spent += 1
                    new = r3(cur, edges)
                    if new.crossings in seen:
                        continue
                    seen.add(new.crossings)
                    step = path + ["R3 at X(%d,%d,%d,%d)" % cur.crossings[edges[0][0][0]].arcs]
                    if _reducible(new):
                        found = (new, step)
                        break
                    nxt.append((new, step))
                if found or spent >= budget:
                    break
            if found or not nxt or spent >= budget:
                break
            frontier = nxt
        if not found:
            break
        log.extend(found[1])
        d = _greedy(found[0], log)
    return Simplified(d, log)
