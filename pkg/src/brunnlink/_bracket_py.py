"""Pure-Python bracket state sum.

Crossings are absorbed one at a time; the state is the pairing of arcs
with exactly one end absorbed (the two ends of each open path), so the
work grows with the frontier width rather than with ``2**c``.
"""

from __future__ import annotations

from collections import defaultdict


def _order(quads):
    """Crossing order that keeps the frontier narrow (greedy by shared arcs)."""
    n = len(quads)
    if n == 0:
        return []
    where = defaultdict(list)
    for ci, q in enumerate(quads):
        for e in q:
            where[e].append(ci)
    done = [False] * n
    opened: dict[int, int] = defaultdict(int)
    order = []
    for _ in range(n):
        best, score = None, None
        for ci in range(n):
            if done[ci]:
                continue
            s = sum(1 for e in quads[ci] if opened[e] == 1)
            key = (s, -ci)
            if score is None or key > score:
                best, score = ci, key
        done[best] = True
        order.append(best)
        for e in quads[best]:
            opened[e] += 1
    return order


def state_counts(quads) -> dict[tuple[int, int], int]:
    """``{(#A - #B, loops): number of states}`` over all smoothings."""
    states = {frozenset(): {(0, 0): 1}}
    for ci in _order(quads):
        a, b, c, d = quads[ci]
        nxt: dict = {}
        for pairing, (pairs, shift) in (("A", (((a, b), (c, d)), 1)), ("B", (((a, d), (b, c)), -1))):
            for key, counts in states.items():
                mate = {}
                for x, y in key:
                    mate[x] = y
                    mate[y] = x
                seen = set(mate)
                loops = 0
                for x, y in pairs:
                    if x == y:
                        if x in seen:
                            # second end of an already open arc returning to itself
                            raise AssertionError("arc listed three times")
                        loops += 1
                        continue
                    x_old, y_old = x in seen, y in seen
                    if x_old and y_old and mate[x] == y:
                        del mate[x], mate[y]
                        seen.discard(x)
                        seen.discard(y)
                        loops += 1
                        continue
                    if x_old:
                        tx = mate.pop(x)
                        seen.discard(x)
                    else:
                        tx = x
                        seen.add(x)
                    if y_old:
                        ty = mate.pop(y)
                        seen.discard(y)
                    else:
                        ty = y
                        seen.add(y)
                    mate[tx] = ty
                    mate[ty] = tx
                # arcs absorbed twice are no longer open even if not rejoined
                newkey = frozenset((min(p, q), max(p, q)) for p, q in mate.items() if p < q)
                bucket = nxt.setdefault(newkey, {})
                for (e, lp), k in counts.items():
                    kk = (e + shift, lp + loops)
                    bucket[kk] = bucket.get(kk, 0) + k
        states = nxt
    out: dict[tuple[int, int], int] = {}
    for counts in states.values():
        for kk, k in counts.items():
            out[kk] = out.get(kk, 0) + k
    return out
