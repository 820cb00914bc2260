"""Classical invariants: linking numbers, bracket, Jones, Seifert form, Arf."""

from __future__ import annotations

from . import _bracket
from .diagram import LinkDiagram, _check_selector
from .errors import BadSelector, Disconnected, NotAKnot, NotProper, TooLarge
from .laurent import IntegerMatrix, LaurentPoly

CROSSING_LIMIT = 24


def writhe(diagram: LinkDiagram) -> int:
    return diagram.writhe


def linking_number(diagram: LinkDiagram, i: int, j: int) -> int:
    if i == j:
        raise BadSelector("linking number needs two different components")
    _check_selector(diagram, [i, j])
    total = 0
    for ci, x in enumerate(diagram.crossings):
        under, over = diagram.strand_components(ci)
        if {under, over} == {i, j}:
            total += x.sign
    return total // 2


def linking_matrix(diagram: LinkDiagram) -> IntegerMatrix:
    n = diagram.n_components
    m = [[0] * n for _ in range(n)]
    for ci, x in enumerate(diagram.crossings):
        u, o = diagram.strand_components(ci)
        if u != o:
            m[u - 1][o - 1] += x.sign
            m[o - 1][u - 1] += x.sign
    return IntegerMatrix.of([[v // 2 for v in row] for row in m]) if n else IntegerMatrix.zeros(0)


_LOOP = LaurentPoly.from_dict({2: -1, -2: -1})  # -A^2 - A^-2


def _from_counts(counts: dict, extra_loops: int) -> LaurentPoly:
    """Sum ``A^e d^(loops - 1 + extra)`` over the state table."""
    total: dict[int, int] = {}
    powers: dict[int, LaurentPoly] = {}
    for (e, loops), k in counts.items():
        p = loops - 1 + extra_loops
        if p not in powers:
            powers[p] = _LOOP ** p
        for pe, pc in powers[p].terms:
            total[e + pe] = total.get(e + pe, 0) + k * pc
    return LaurentPoly.from_dict(total)


def kauffman_bracket(diagram: LinkDiagram, limit: int = CROSSING_LIMIT, kernel=None) -> LaurentPoly:
    """Bracket in ``A``: unknot is 1, each extra loop is ``-A^2 - A^-2``."""
    c = len(diagram.crossings)
    if c > limit:
        raise TooLarge(f"{c} crossings exceed the bracket limit of {limit}")
    free = diagram.unknotted_free_components
    if c == 0:
        return _LOOP ** (free - 1) if free else LaurentPoly.one()
    kernel = kernel or _bracket.state_counts
    counts = kernel([x.arcs for x in diagram.crossings])
    return _from_counts(counts, free)


def jones(diagram: LinkDiagram, limit: int = CROSSING_LIMIT, kernel=None) -> LaurentPoly:
    """Jones polynomial in ``t = A^-4``; exponents are stored in quarters."""
    b = kauffman_bracket(diagram, limit, kernel)
    w = diagram.writhe
    f = b.shift(-3 * w)
    if w % 2:
        f = -f
    # A^k = t^(-k/4)
    return LaurentPoly.from_dict({-e: c for e, c in f.terms}, var="t", denom=4)


# ---- Seifert form ---------------------------------------------------------------

def braid_seifert_matrix(braid) -> IntegerMatrix:
    """Seifert matrix of the closure's canonical surface.

    One disk per column and one band per letter; a generator runs between
    consecutive bands in the same column.  Every column must carry a band.
    """
    word = braid.letters
    n = braid.strands
    occ = {i: [k for k, g in enumerate(word) if abs(g) == i] for i in range(1, n)}
    if any(not o for o in occ.values()):
        raise Disconnected("closure is split: a column has no crossing")
    gens = [(i, a, b) for i in range(1, n) for a, b in zip(occ[i], occ[i][1:])]
    m = len(gens)
    v = [[0] * m for _ in range(m)]
    for p, (i, a, b) in enumerate(gens):
        ea, eb = (1 if word[a] > 0 else -1), (1 if word[b] > 0 else -1)
        if ea == eb:
            v[p][p] = -ea
        for q, (j, c, d) in enumerate(gens):
            if j == i and c == b:
                if eb > 0:
                    v[p][q] = 1
                else:
                    v[q][p] = -1
            elif j == i + 1:
                if a < c < b < d:
                    v[p][q] = -1
                elif c < a < d < b:
                    v[p][q] = 1
    # report in the mirror-transposed convention (positive Hopf -> [1])
    return IntegerMatrix.of([[-v[q][p] for q in range(m)] for p in range(m)]) if m \
        else IntegerMatrix.zeros(0)


def seifert_matrix(diagram: LinkDiagram) -> IntegerMatrix:
    if not diagram.crossings and diagram.n_components == 1:
        return IntegerMatrix.zeros(0)
    from .vogel import to_braid

    braid, _ = to_braid(diagram)
    return braid_seifert_matrix(braid)


def arf_of_form(v: IntegerMatrix) -> int:
    """Arf invariant of ``q(x) = x^T V x mod 2`` over its symplectic form mod 2.

    Radical vectors must have ``q = 0`` (true for knots and proper links).
    Vectors over GF(2) are bitmasks.
    """
    m = v.rows
    sym = [sum(((v[i, j] + v[j, i]) % 2) << j for j in range(m)) for i in range(m)]
    upper = [sum((v[i, j] + v[j, i]) % 2 << j for j in range(i + 1, m)) for i in range(m)]
    diag = sum((v[i, i] % 2) << i for i in range(m))

    def bits(x):
        while x:
            low = x & -x
            yield low.bit_length() - 1
            x ^= low

    def form(x, y):
        acc = 0
        for i in bits(x):
            acc ^= sym[i]
        return bin(acc & y).count("1") & 1

    def q(x):
        total = bin(x & diag).count("1")
        for i in bits(x):
            total += bin(x & upper[i]).count("1")
        return total & 1

    basis = [1 << i for i in range(m)]
    total = 0
    while basis:
        a = basis.pop(0)
        k = next((k for k, b in enumerate(basis) if form(a, b)), None)
        if k is None:
            if q(a):
                raise NotProper("quadratic form is nonzero on the radical")
            continue
        b = basis.pop(k)
        total ^= q(a) & q(b)
        # c -> c + <c,b> a + <c,a> b keeps it orthogonal to a and b
        basis = [c ^ (a if form(c, b) else 0) ^ (b if form(c, a) else 0) for c in basis]
    return total


def arf_knot(diagram: LinkDiagram) -> int:
    if diagram.n_components != 1:
        raise NotAKnot(f"diagram has {diagram.n_components} components")
    if not diagram.crossings:
        return 0
    return arf_of_form(seifert_matrix(diagram))


def proper_check(diagram: LinkDiagram) -> None:
    lk = linking_matrix(diagram)
    for i in range(diagram.n_components):
        total = sum(lk[i, j] for j in range(diagram.n_components))
        if total % 2:
            raise NotProper(f"component {i + 1} has odd total linking {total} with the rest")


def fusion_braids(braid, variant: int = 0):
    """Knots obtained by banding the closure's components together.

    A band between two strands in adjacent columns belonging to different
    components is a single extra crossing ``s_i^(+-1)`` inserted into the
    word; ``variant`` picks position, sign and column order of the bands.
    """
    from .braids import BraidWord

    word = list(braid.letters)
    n = braid.strands
    out = []
    k = 0
    while True:
        perm = BraidWord(n, tuple(word)).permutation()
        comp = _columns_to_components(perm)
        if len(set(comp)) == 1:
            return BraidWord(n, tuple(word))
        cols = [i for i in range(1, n) if comp[i - 1] != comp[i]]
        col = cols[(variant + k) % len(cols)] if variant % 2 == 0 else cols[-1 - ((variant + k) % len(cols))]
        sign = 1 if (variant // 2) % 2 == 0 else -1
        pos = 0 if (variant // 4) % 2 == 0 else len(word)
        word.insert(pos, sign * col)
        k += 1
        out.append(col)


def _columns_to_components(perm):
    """Component label (smallest column in its cycle) for each start column."""
    n = len(perm)
    lab = [None] * n
    for s in range(n):
        if lab[s] is None:
            x = s
            while lab[x] is None:
                lab[x] = s
                x = perm[x]
    return lab


def arf_link(diagram: LinkDiagram, variant: int = 0) -> int:
    """Arf invariant of a proper link, via a knot made by banding components."""
    proper_check(diagram)
    if diagram.n_components == 1:
        return arf_knot(diagram)
    from .vogel import to_braid

    if not diagram.crossings:
        return 0
    if len(diagram.shadow_pieces()) != 1 or diagram.unknotted_free_components:
        braid = _split_braid(diagram)
    else:
        braid, _ = to_braid(diagram)
    knot = fusion_braids(braid, variant)
    return arf_of_form(braid_seifert_matrix(knot)) if knot.letters else 0


def _split_braid(diagram: LinkDiagram):
    """Braid for a split diagram: pieces side by side, free circles as extra columns."""
    from .braids import BraidWord
    from .diagram import remove_crossings
    from .vogel import to_braid

    letters: list[int] = []
    offset = 0
    for piece in diagram.shadow_pieces():
        comps = sorted({c for ci in piece for c in diagram.strand_components(ci)})
        drop = [ci for ci in range(len(diagram.crossings)) if ci not in piece]
        sub = remove_crossings(diagram, drop, comps)
        b, _ = to_braid(sub)
        letters += [g + (offset if g > 0 else -offset) for g in b.letters]
        offset += b.strands
    offset += diagram.unknotted_free_components
    return BraidWord(offset, tuple(letters))
