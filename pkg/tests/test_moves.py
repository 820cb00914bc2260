import random

from hypothesis import given, settings, strategies as st

from brunnlink.braids import BraidWord, closure
from brunnlink.diagram import validate
from brunnlink.examples import borromean, figure_eight, unlink_with_bigons
from brunnlink.invariants import kauffman_bracket, jones, linking_matrix
from brunnlink.moves import (
    _r3_candidates, find_r2, is_planar, r1_add, r2_add, r3, random_moves, simplify,
)


def test_simplify_unlink_with_bigons():
    d = unlink_with_bigons(2, 2)
    assert len(d.crossings) == 4
    res = simplify(d)
    assert not res.diagram.crossings
    assert res.diagram.n_components == 2
    assert len(res.moves) == 2 and all(m.startswith("R2-") for m in res.moves)


def test_simplify_keeps_knotted_diagram():
    assert len(simplify(figure_eight()).diagram.crossings) == 4


def test_curl_changes_bracket_by_a_unit():
    d = figure_eight()
    b = kauffman_bracket(d)
    for v in range(4):
        e = r1_add(d, 1, v)
        validate(e)
        assert is_planar(e)
        # a curl multiplies the bracket by -A^3 or -A^-3
        assert kauffman_bracket(e) in (-b.shift(3), -b.shift(-3))
        assert jones(e) == jones(d)


def test_r3_preserves_bracket():
    d = closure(BraidWord(3, (1, 2, 1, -2, 1)))
    cands = list(_r3_candidates(d))
    assert cands
    for edges in cands:
        e = r3(d, edges)
        assert is_planar(e)
        assert kauffman_bracket(e) == kauffman_bracket(d)


def test_r2_add_then_remove():
    d = borromean()
    for fi, face in enumerate(d.faces):
        if len(face) < 2:
            continue
        e = r2_add(d, fi, 0, 1, True)
        if e is None:
            continue
        assert is_planar(e)
        assert find_r2(e) is not None
        assert kauffman_bracket(e) == kauffman_bracket(d)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([(1, -2, 1, -2), (1, 1, 1), (1, -2) * 3, (1, 2, -1, 2)]))
def test_random_moves_keep_jones(seed, word):
    d = closure(BraidWord(3, word))
    e = random_moves(d, 6, random.Random(seed))
    validate(e)
    assert is_planar(e)
    if len(e.crossings) <= 16:
        assert jones(e) == jones(d)
    assert linking_matrix(e) == linking_matrix(d)
    assert jones(simplify(e).diagram, limit=60) == jones(d)
