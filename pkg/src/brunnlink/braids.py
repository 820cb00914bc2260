"""Braid words, pure-braid commutators and closures.

``sigma_i`` is the positive crossing in which strand position ``i`` passes
over position ``i+1``; the closure of ``sigma_1^2`` is the positive Hopf
link.  The pure-braid generator ``A(i, j)`` is the word
``s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import LinkDiagram, _UnionFind, make_crossing, trace_successors, cycles_of
from .errors import BadParams, IndexSetError, RangeError


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise RangeError("a braid needs at least one strand")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise RangeError(f"generator s{abs(g)} outside 1..{self.strands - 1}")

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise BadParams("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def insert(self, position: int, word: "BraidWord") -> "BraidWord":
        if not 0 <= position <= len(self.letters):
            raise IndexSetError(f"insertion offset {position} outside 0..{len(self.letters)}")
        return BraidWord(self.strands, self.letters[:position] + word.letters + self.letters[position:])

    def permutation(self) -> tuple[int, ...]:
        """``perm[p]`` is the top position reached by the strand starting at ``p`` (0-based)."""
        at = list(range(self.strands))  # at[pos] = starting strand there
        for g in self.letters:
            i = abs(g) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        perm = [0] * self.strands
        for pos, s in enumerate(at):
            perm[s] = pos
        return tuple(perm)

    @property
    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(self.strands))

    def __str__(self):
        toks = [f"s{abs(g)}" + ("^-1" if g < 0 else "") for g in self.letters]
        return f"strands={self.strands} " + " ".join(toks)


def pure_generator(i: int, j: int, n: int, exponent: int = 1) -> BraidWord:
    if not 1 <= i < j <= n:
        raise RangeError(f"A({i},{j}) needs 1 <= i < j <= {n}")
    up = list(range(j - 1, i, -1))
    word = tuple(up) + (i, i) + tuple(-g for g in reversed(up))
    w = BraidWord(n, word)
    return w if exponent > 0 else w.inverse()


# ---- claspers as commutators ------------------------------------------------

@dataclass(frozen=True)
class ClasperSpec:
    degree: int
    index: tuple[int, ...]
    position: int = 0
    sign: int = 1

    def check(self, n: int) -> None:
        idx = self.index
        if self.degree < 1 or len(idx) != self.degree + 1:
            raise IndexSetError(f"a C_{self.degree} tree needs {self.degree + 1} indices, got {idx}")
        if len(set(idx)) != len(idx):
            raise IndexSetError(f"indices {idx} are not distinct")
        if min(idx) < 1 or max(idx) > n:
            raise IndexSetError(f"indices {idx} outside 1..{n}")
        if self.sign not in (1, -1):
            raise BadParams("sign must be +1 or -1")


@dataclass(frozen=True)
class ClasperForest:
    strands: int
    specs: tuple[ClasperSpec, ...] = field(default_factory=tuple)


def _commute(x: list, y: list) -> list:
    inv = lambda w: [(i, j, -e) for (i, j, e) in reversed(w)]
    return x + y + inv(x) + inv(y)


def commutator_letters(spec: ClasperSpec, n: int) -> list[tuple[int, int, int]]:
    """Left-nested commutator as a list of pure-braid letters ``(i, j, +-1)``."""
    spec.check(n)
    idx = sorted(spec.index)
    hub, rest = idx[0], idx[1:]
    word = [(hub, rest[-1], 1)]
    for j in reversed(rest[:-1]):
        word = _commute([(hub, j, 1)], word)
    if spec.sign < 0:
        word = [(i, j, -e) for (i, j, e) in reversed(word)]
    return word


def expand_letters(letters, n: int) -> BraidWord:
    out = ()
    for i, j, e in letters:
        out += pure_generator(i, j, n, e).letters
    return BraidWord(n, out)


def commutator_word(spec: ClasperSpec, n: int) -> BraidWord:
    """Braid word realizing surgery along a C_k^d-tree with the given index."""
    return expand_letters(commutator_letters(spec, n), n)


def surger(host: BraidWord, forest: ClasperForest) -> BraidWord:
    if forest.strands != host.strands:
        raise BadParams("forest and host have different strand counts")
    word = host
    for spec in forest.specs:
        word = word.insert(spec.position, commutator_word(spec, host.strands))
    return word


# ---- closure -----------------------------------------------------------------

class StrandBuilder:
    """Assemble a diagram from upward strands, crossings and small rings.

    Strands run upward in columns ``1..n`` and close up on the left, so
    column 1 is innermost and the region right of column ``n`` is
    unbounded.  A ring is an extra component that crosses columns
    ``q..p`` leftwards, turns, and crosses ``p..q`` rightwards.
    """

    def __init__(self, n: int):
        self.n = n
        self._next = 1
        self.bottom = [self._arc() for _ in range(n)]
        self.cur = list(self.bottom)
        self.start = list(range(n))  # strand start column held by each column
        self.crossings = []
        self.rings: list[list[int]] = []

    def _arc(self) -> int:
        a = self._next
        self._next += 1
        return a

    def sigma(self, g: int) -> None:
        i = abs(g) - 1
        left_in, right_in = self.cur[i], self.cur[i + 1]
        left_out, right_out = self._arc(), self._arc()
        left_dir, right_dir = (1, 0), (0, 1)
        if g > 0:
            x = make_crossing(right_dir, left_dir, right_in, right_out, left_in, left_out)
        else:
            x = make_crossing(left_dir, right_dir, left_in, left_out, right_in, right_out)
        self.crossings.append(x)
        self.cur[i], self.cur[i + 1] = right_out, left_out
        self.start[i], self.start[i + 1] = self.start[i + 1], self.start[i]

    def ring(self, p: int, q: int, inward_over=False, outward_over=True) -> None:
        """Ring around columns ``p..q`` (1-based, inclusive)."""
        if not 1 <= p <= q <= self.n:
            raise RangeError(f"ring columns {p}..{q} outside 1..{self.n}")
        cols = list(range(q, p - 1, -1))
        plan = [(c, (-1, 0), inward_over) for c in cols] + \
               [(c, (1, 0), outward_over) for c in reversed(cols)]
        first = self._arc()
        ring_in = first
        arcs = [first]
        for k, (c, rdir, over) in enumerate(plan):
            ring_out = first if k == len(plan) - 1 else self._arc()
            if ring_out != first:
                arcs.append(ring_out)
            s_in, s_out = self.cur[c - 1], self._arc()
            up = (0, 1)
            if over:
                x = make_crossing(up, rdir, s_in, s_out, ring_in, ring_out)
            else:
                x = make_crossing(rdir, up, ring_in, ring_out, s_in, s_out)
            self.crossings.append(x)
            self.cur[c - 1] = s_out
            ring_in = ring_out
        self.rings.append(arcs)

    def diagram(self) -> LinkDiagram:
        uf = _UnionFind()
        for col in range(self.n):
            uf.union(self.bottom[col], self.cur[col])
        xs = [x.relabel(uf.find) for x in self.crossings]
        used = {e for x in xs for e in x.arcs}
        succ = trace_successors(xs) if xs else {}
        keyed = []
        ring_rep = {uf.find(r[0]): k for k, r in enumerate(self.rings)}
        bottom_rep = {uf.find(b): col for col, b in enumerate(self.bottom)}
        for cyc in cycles_of(succ):
            cols = [bottom_rep[e] for e in cyc if e in bottom_rep]
            if cols:
                keyed.append(((0, min(cols)), tuple(cyc)))
            else:
                ring = min(ring_rep[e] for e in cyc if e in ring_rep)
                keyed.append(((1, ring), tuple(cyc)))
        for col, b in enumerate(self.bottom):
            if uf.find(b) not in used:
                keyed.append(((0, col), ()))
        keyed.sort(key=lambda t: t[0])
        return LinkDiagram.from_parts(xs, [c for _, c in keyed])


def closure(braid: BraidWord) -> LinkDiagram:
    """Trace closure; components ordered by smallest strand index."""
    b = StrandBuilder(braid.strands)
    for g in braid.letters:
        b.sigma(g)
    return b.diagram()


# ---- lemma test pairs ----------------------------------------------------------

def lemma_pair(kind: str, params: dict) -> tuple[BraidWord, BraidWord]:
    """Pairs of braids whose closures a clasper lemma predicts to be related.

    ``leaf_slide``: params ``n``, ``first`` and ``second`` (index pairs
    ``{i, j}``, ``{i, k}``), optional ``signs``.  Returns ``(w1 w2,
    (w2 w1 w2^-1) w2)``.

    ``edge_cross``: params ``n``, ``spec`` (ClasperSpec), ``component``.
    Returns ``(w, g w g^-1)`` with ``g = A(hub, component)``; the two differ
    by the commutator ``[g, w]`` of one degree higher.

    ``index_decomp``: params ``n``, ``spec``, ``subset``.  Returns ``(w, w c
    c^-1)`` with ``c`` the commutator of degree ``|subset| - 1`` on the
    subset, i.e. the same surgery re-expressed with a cancelling pair of
    trees whose index is the subset.
    """
    n = params["n"]
    host = params.get("host", BraidWord.identity(n))
    if kind == "leaf_slide":
        s1, s2 = (tuple(sorted(p)) for p in (params["first"], params["second"]))
        common = set(s1) & set(s2)
        if len(s1) != 2 or len(s2) != 2 or len(common) != 1:
            raise BadParams("leaf_slide needs indices {i,j} and {i,k} with j != k")
        e1, e2 = params.get("signs", (1, 1))
        w1 = commutator_word(ClasperSpec(1, s1, 0, e1), n)
        w2 = commutator_word(ClasperSpec(1, s2, 0, e2), n)
        return host * w1 * w2, host * (w2 * w1 * w2.inverse()) * w2
    if kind == "edge_cross":
        spec = params["spec"]
        comp = params["component"]
        w = commutator_word(spec, n)
        hub = min(spec.index)
        if comp == hub:
            raise BadParams("edge_cross component must differ from the hub strand")
        i, j = sorted((hub, comp))
        g = pure_generator(i, j, n)
        return host * w, host * (g * w * g.inverse())
    if kind == "index_decomp":
        spec = params["spec"]
        subset = tuple(sorted(params["subset"]))
        spec.check(n)
        if len(subset) < 2 or not set(subset) <= set(spec.index):
            raise BadParams("subset must be a part of the index with at least two elements")
        w = commutator_word(spec, n)
        c = commutator_word(ClasperSpec(len(subset) - 1, subset), n)
        return host * w, host * w * c * c.inverse()
    raise BadParams(f"unknown lemma kind {kind!r}")
