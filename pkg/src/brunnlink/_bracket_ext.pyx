# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bracket state sum over a frontier of open paths.

Same sweep as the Python kernel.  An arc is open once one of its ends has
been absorbed; every open path has two open arcs as ends, so a state is a
perfect matching on the open arcs.  Matchings live in slot arrays packed
into bytes; the per-crossing rewiring runs in C and each state's count
table is a single packed integer.
"""

from libc.string cimport memset

from ._bracket_py import _order

cdef enum:
    MAXS = 250  # slot ids fit in a byte, 255 marks an empty slot


cdef int _rewire(unsigned char* mate, int S, int* pos_slot, int* kink,
                 int p0, int p1, int p2, int p3, unsigned char* out, int* new_slot) nogil:
    """Join one smoothing into ``mate`` and write the new matching to ``out``.

    Nodes ``0..S-1`` are slots and ``S..S+3`` the crossing positions.  An
    open arc links its position to its slot; a kinked arc links two
    positions; the smoothing links ``p0-p1`` and ``p2-p3``.  Returns the
    number of closed loops.
    """
    cdef int adj[MAXS + 4][2]
    cdef int deg[MAXS + 4]
    cdef int visited[MAXS + 4]
    cdef int i, u, v, prev, cur, nxt, loops = 0, start, end
    memset(deg, 0, sizeof(int) * (S + 4))
    memset(visited, 0, sizeof(int) * (S + 4))
    for i in range(S):
        if mate[i] != 255 and i < mate[i]:
            u = i; v = mate[i]
            adj[u][deg[u]] = v; deg[u] += 1
            adj[v][deg[v]] = u; deg[v] += 1
    for i in range(4):
        if pos_slot[i] >= 0:
            u = S + i; v = pos_slot[i]
            adj[u][deg[u]] = v; deg[u] += 1
            adj[v][deg[v]] = u; deg[v] += 1
        elif kink[i] > i:
            u = S + i; v = S + kink[i]
            adj[u][deg[u]] = v; deg[u] += 1
            adj[v][deg[v]] = u; deg[v] += 1
    u = S + p0; v = S + p1
    adj[u][deg[u]] = v; deg[u] += 1
    adj[v][deg[v]] = u; deg[v] += 1
    u = S + p2; v = S + p3
    adj[u][deg[u]] = v; deg[u] += 1
    adj[v][deg[v]] = u; deg[v] += 1
    memset(out, 255, S)
    # endpoints: untouched slots with a mate, and positions of newly opened arcs
    for start in range(S + 4):
        if visited[start] or deg[start] != 1:
            continue
        prev = -1
        cur = start
        visited[cur] = 1
        while cur == start or deg[cur] == 2:
            nxt = adj[cur][1] if deg[cur] == 2 and adj[cur][0] == prev else adj[cur][0]
            prev = cur
            cur = nxt
            visited[cur] = 1
        end = cur
        u = start if start < S else new_slot[start - S]
        v = end if end < S else new_slot[end - S]
        out[u] = v
        out[v] = u
    for start in range(S + 4):
        if visited[start] or deg[start] == 0:
            continue
        loops += 1
        prev = -1
        cur = start
        while not visited[cur]:
            visited[cur] = 1
            nxt = adj[cur][1] if adj[cur][0] == prev else adj[cur][0]
            prev = cur
            cur = nxt
    return loops


def state_counts(quads):
    """``{(#A - #B, loops): number of states}`` over all smoothings."""
    cdef int c = len(quads)
    cdef int S = 0
    cdef int ps[4]
    cdef int kk[4]
    cdef int ns[4]
    cdef int i, loops_a, loops_b
    cdef unsigned char buf[MAXS]
    cdef unsigned char out_a[MAXS]
    cdef unsigned char out_b[MAXS]
    cdef bytes key
    cdef const unsigned char* kp
    if c == 0:
        return {(0, 0): 1}
    order = _order(quads)
    # plan slots: an arc takes a slot when first absorbed and frees it on the second
    slot_of = {}
    free_slots = []
    plan = []
    for ci in order:
        q = quads[ci]
        pos_slot = [-1] * 4
        kink = [-1] * 4
        new_arc = [None] * 4
        for i in range(4):
            e = q[i]
            if e in slot_of:
                pos_slot[i] = slot_of[e]
            else:
                for j in range(4):
                    if j != i and q[j] == e:
                        kink[i] = j
                if kink[i] < 0:
                    new_arc[i] = e
        closing = [slot_of.pop(q[i]) for i in range(4) if pos_slot[i] >= 0]
        free_slots.extend(closing)
        free_slots.sort(reverse=True)
        new_slot = [-1] * 4
        for i in range(4):
            if new_arc[i] is not None:
                s = free_slots.pop() if free_slots else S
                if s == S:
                    S += 1
                slot_of[new_arc[i]] = s
                new_slot[i] = s
        plan.append((ci, pos_slot, kink, new_slot))
    if S > MAXS:
        raise OverflowError("frontier too wide for the compiled kernel")

    # the (#A, loops) table of a state is one integer: entry (nA, lp) sits in
    # a field of W bits at code nA * L + lp, so a smoothing is a shift
    cdef int L = c + 2
    cdef int W = c + 1  # no count exceeds 2**c
    states = {bytes([255]) * S: 1}
    for ci, pos_slot, kink, new_slot in plan:
        for i in range(4):
            ps[i] = pos_slot[i]
            kk[i] = kink[i]
            ns[i] = new_slot[i]
        nxt = {}
        for key, packed in states.items():
            kp = key
            for i in range(S):
                buf[i] = kp[i]
            loops_a = _rewire(buf, S, ps, kk, 0, 1, 2, 3, out_a, ns)
            loops_b = _rewire(buf, S, ps, kk, 0, 3, 1, 2, out_b, ns)
            ka = out_a[:S]
            kb = out_b[:S]
            va = packed << (W * (L + loops_a))
            vb = packed << (W * loops_b)
            nxt[ka] = nxt.get(ka, 0) + va
            nxt[kb] = nxt.get(kb, 0) + vb
        states = nxt
    total = sum(states.values())
    mask = ((<object>1) << W) - 1
    result = {}
    code = 0
    while total:
        k = total & mask
        if k:
            result[(2 * (code // L) - c, code % L)] = k
        total >>= W
        code += 1
    return result
