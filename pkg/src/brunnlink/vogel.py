"""Turn a connected diagram into a braid whose closure is the same link.

Seifert circles that face each other with opposite orientations across a
face are merged toward a coherent nest by Reidemeister-II moves; once the
circles are nested the crossings are read off as braid letters.
"""

from __future__ import annotations

from .braids import BraidWord
from .diagram import LinkDiagram
from .errors import Disconnected
from .moves import _face_edges, r2_add


def seifert_circles(d: LinkDiagram) -> dict[int, int]:
    """arc -> circle id after the oriented smoothing of every crossing."""
    nxt = {}
    for x in d.crossings:
        a, b, c, dd = x.arcs
        if x.sign > 0:
            nxt[a], nxt[dd] = b, c
        else:
            nxt[a], nxt[b] = dd, c
    circle = {}
    k = 0
    for e in sorted(nxt):
        if e in circle:
            continue
        while e not in circle:
            circle[e] = k
            e = nxt[e]
        k += 1
    return circle


def _defect(d: LinkDiagram, circle):
    """A face with two edges of different circles running the same way around it."""
    for fi, face in enumerate(d.faces):
        edges = _face_edges(d, face)
        seen = {}
        for k, ((ci, s), _) in enumerate(edges):
            x = d.crossings[ci]
            fwd = not x.incoming(s)
            cid = circle[x.arcs[s]]
            for (k2, cid2, fwd2) in seen.values():
                if fwd2 == fwd and cid2 != cid:
                    return fi, k2, k
            seen.setdefault((cid, fwd), (k, cid, fwd))
    return None


def _read_braid(d: LinkDiagram, circle) -> BraidWord:
    n = len(set(circle.values()))
    pairs = {}
    inner_of = {}
    for ci, x in enumerate(d.crossings):
        ca, cd = circle[x.a], circle[x.d]
        cb = circle[x.b]
        if x.sign > 0:
            inner, outer = cd, ca
        else:
            inner, outer = ca, cb
        pairs[ci] = (inner, outer)
        inner_of.setdefault(inner, set()).add(outer)
    # nesting must be a path inner -> outer
    nxt = {}
    for i, outs in inner_of.items():
        if len(outs) != 1:
            raise Disconnected("Seifert circles are not nested")
        nxt[i] = next(iter(outs))
    starts = set(range(n)) - set(nxt.values())
    if len(starts) != 1:
        raise Disconnected("Seifert circles are not nested")
    col = {}
    cur = starts.pop()
    while True:
        col[cur] = len(col) + 1
        if cur not in nxt:
            break
        cur = nxt[cur]
    if len(col) != n:
        raise Disconnected("Seifert circles are not nested")
    # crossings visited by each circle, in travel order
    visits = {k: [] for k in range(n)}
    arc_end = {}
    for ci, x in enumerate(d.crossings):
        for s in range(4):
            if x.incoming(s):
                arc_end[x.arcs[s]] = ci
    for k in range(n):
        arcs = sorted(e for e, c in circle.items() if c == k)
        # walk the circle
        nxt_arc = {}
        for x in d.crossings:
            a, b, c, dd = x.arcs
            if x.sign > 0:
                nxt_arc[a], nxt_arc[dd] = b, c
            else:
                nxt_arc[a], nxt_arc[b] = dd, c
        e = arcs[0]
        seq = []
        while True:
            seq.append(arc_end[e])
            e = nxt_arc[e]
            if e == arcs[0]:
                break
        visits[k] = seq
    by_col = {col[k]: v for k, v in visits.items()}
    # align seams column by column
    lin = {1: by_col[1]}
    for c in range(2, n + 1):
        prev = lin[c - 1]
        seq = by_col[c]
        shared = [x for x in prev if pairs[x] in ((col_inv(col, c - 1), col_inv(col, c)),)]
        first = shared[0]
        k = seq.index(first)
        lin[c] = seq[k:] + seq[:k]
    # topological merge of the column chains
    preds: dict[int, set] = {ci: set() for ci in range(len(d.crossings))}
    for seq in lin.values():
        for u, v in zip(seq, seq[1:]):
            preds[v].add(u)
    order = []
    ready = sorted(ci for ci, p in preds.items() if not p)
    done = set()
    while ready:
        u = ready.pop(0)
        order.append(u)
        done.add(u)
        for v, p in preds.items():
            if v not in done and v not in ready and u in p and p <= done:
                ready.append(v)
        ready.sort()
    if len(order) != len(d.crossings):
        raise Disconnected("could not order crossings along the braid axis")
    letters = tuple(col[pairs[ci][0]] * d.crossings[ci].sign for ci in order)
    return BraidWord(n, letters)


def col_inv(col, c):
    for k, v in col.items():
        if v == c:
            return k
    raise KeyError(c)


def to_braid(d: LinkDiagram, max_moves: int = 10000) -> tuple[BraidWord, LinkDiagram]:
    """Braid word plus the braided diagram it was read from."""
    if not d.crossings:
        raise Disconnected("a crossing-free diagram has no braid axis here")
    if len(d.shadow_pieces()) != 1 or d.unknotted_free_components:
        raise Disconnected("diagram is split; handle its pieces separately")
    for _ in range(max_moves):
        circle = seifert_circles(d)
        hit = _defect(d, circle)
        if hit is None:
            return _read_braid(d, circle), d
        fi, i, j = hit
        d = r2_add(d, fi, i, j, True)
    raise Disconnected("braiding did not terminate")
