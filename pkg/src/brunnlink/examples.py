"""Standard links and the two example families used in the tests and CLI."""

from __future__ import annotations

import itertools
import random

from .braids import (
    BraidWord, ClasperForest, ClasperSpec, StrandBuilder, closure, commutator_word, surger,
)
from .codec import parse_pd
from .diagram import LinkDiagram

# all three crossings positive
POSITIVE_TREFOIL_PD = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"
# knot-table diagram, all three crossings negative
TABLE_TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def positive_trefoil() -> LinkDiagram:
    return parse_pd(POSITIVE_TREFOIL_PD)


def table_trefoil() -> LinkDiagram:
    return parse_pd(TABLE_TREFOIL_PD)


def figure_eight() -> LinkDiagram:
    return parse_pd(FIGURE_EIGHT_PD)


def hopf(sign: int = 1) -> LinkDiagram:
    return closure(BraidWord(2, (sign, sign)))


def borromean() -> LinkDiagram:
    return closure(BraidWord(3, (1, -2) * 3))


def unlink(n: int) -> LinkDiagram:
    return LinkDiagram.unlink(n)


def unlink_with_bigons(n: int = 2, pairs: int = 2) -> LinkDiagram:
    """n-component unlink drawn with ``2 * pairs`` cancelling crossings."""
    return closure(BraidWord(n, (1, -1) * pairs))


# ---- pairs with the same proper sublinks but different Arf ----------------------

def arf_pair(n: int) -> tuple[LinkDiagram, LinkDiagram]:
    """(L_n, L'_n): the trivial link and a link with trivial proper sublinks but Arf 1."""
    if n == 2:
        return unlink(2), closure(BraidWord(2, (1, 1, 1, 1)))
    if n == 3:
        return unlink(3), borromean()
    raise ValueError("only n = 2 and n = 3 are provided")


# ---- a granny knot with two rings ------------------------------------------------

_GRANNY = (1, 1, 1, 2, 2, 2)


def _granny_with_rings(spots) -> LinkDiagram:
    """Granny knot on three columns plus rings around columns 2..3.

    ``spots`` lists, per ring, the number of letters placed before it.
    """
    b = StrandBuilder(3)
    for pos, g in enumerate(_GRANNY):
        for at in spots:
            if at == pos:
                b.ring(2, 3)
        b.sigma(g)
    return b.diagram()


def ring_pair() -> tuple[LinkDiagram, LinkDiagram]:
    """(L, L'): rings in different twist regions vs. both in the same one.

    Component 1 is the knot; components 2 and 3 are the rings.
    """
    return _granny_with_rings((1, 2)), _granny_with_rings((1, 1))


# ---- random clasper forests ----------------------------------------------------

def random_forest(n: int, k: int, claspers: int, rng: random.Random) -> ClasperForest:
    """Forest of ``claspers`` C_k^d specs on n strands.

    Index sets are drawn without replacement while any are left, then
    reused; leaf order and sign are random.  Each tree goes in at a
    boundary between earlier trees so its leaves meet the named components.
    """
    sets = list(itertools.combinations(range(1, n + 1), k + 1))
    chosen = rng.sample(sets, min(claspers, len(sets)))
    chosen += [rng.choice(sets) for _ in range(claspers - len(chosen))]
    specs = []
    cuts = [0]  # boundaries between inserted words, where the prefix is pure
    for idx in chosen:
        idx = tuple(rng.sample(idx, len(idx)))
        at = rng.choice(cuts)
        spec = ClasperSpec(k, idx, at, rng.choice((1, -1)))
        specs.append(spec)
        size = len(commutator_word(spec, n))
        cuts = sorted({c + size if c > at else c for c in cuts} | {at + size})
    return ClasperForest(n, tuple(specs))


def forest_link(forest: ClasperForest) -> LinkDiagram:
    return closure(surger(BraidWord.identity(forest.strands), forest))
