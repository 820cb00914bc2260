import itertools

import pytest

from brunnlink.braids import (
    BraidWord, ClasperForest, ClasperSpec, closure, commutator_letters, commutator_word,
    lemma_pair, pure_generator, surger,
)
from brunnlink.errors import BadParams, IndexSetError
from brunnlink.invariants import linking_matrix, linking_number
from brunnlink.milnor import MilnorCalculator


def test_pure_generator_words():
    assert pure_generator(1, 2, 2).letters == (1, 1)
    assert pure_generator(1, 3, 3).letters == (2, 1, 1, -2)
    assert pure_generator(1, 3, 3, -1).letters == (2, -1, -1, -2)


def test_degree_one_commutator_is_generator():
    assert commutator_word(ClasperSpec(1, (1, 2)), 2).letters == (1, 1)


def test_degree_two_commutator_shape():
    letters = commutator_letters(ClasperSpec(2, (1, 2, 3)), 3)
    assert letters == [(1, 2, 1), (1, 3, 1), (1, 2, -1), (1, 3, -1)]
    assert len(commutator_word(ClasperSpec(2, (1, 2, 3)), 3)) == 12


def test_sign_inverts_word():
    w = commutator_word(ClasperSpec(2, (1, 2, 3)), 3)
    assert commutator_word(ClasperSpec(2, (1, 2, 3), sign=-1), 3) == w.inverse()


@pytest.mark.parametrize("k,idx,n", [(2, (1, 2, 4), 3), (2, (1, 2), 3), (2, (1, 1, 2), 3)])
def test_bad_index(k, idx, n):
    with pytest.raises(IndexSetError):
        commutator_word(ClasperSpec(k, idx), n)


def test_commutators_are_pure_exhaustive():
    for n in range(2, 7):
        for k in range(1, min(4, n - 1) + 1):
            for idx in itertools.combinations(range(1, n + 1), k + 1):
                for sign in (1, -1):
                    assert commutator_word(ClasperSpec(k, idx, 0, sign), n).is_pure


def test_surger():
    assert surger(BraidWord.identity(3), ClasperForest(3, ())) == BraidWord.identity(3)
    h = closure(surger(BraidWord.identity(2), ClasperForest(2, (ClasperSpec(1, (1, 2)),))))
    assert linking_number(h, 1, 2) == 1
    m = closure(surger(BraidWord.identity(3), ClasperForest(3, (ClasperSpec(2, (1, 2, 3)),))))
    assert linking_matrix(m).tolist() == [[0] * 3] * 3
    assert abs(MilnorCalculator(m).mu_bar((1, 2, 3))[0]) == 1


def test_insert_offset_range():
    with pytest.raises(IndexSetError):
        BraidWord(2, (1,)).insert(3, BraidWord(2, (1,)))


def test_closure_examples():
    assert closure(BraidWord.identity(3)).n_components == 3
    one = closure(BraidWord(2, (1,)))
    assert (one.n_components, len(one.crossings)) == (1, 1)
    assert closure(BraidWord(2, (1, 1, 1))).writhe == 3


def _mu2(d):
    calc = MilnorCalculator(d)
    n = d.n_components
    return {p: calc.mu_bar(p)[0] for p in itertools.permutations(range(1, n + 1), 2)}


@pytest.mark.parametrize("kind,params", [
    ("leaf_slide", {"n": 3, "first": (1, 2), "second": (1, 3)}),
    ("leaf_slide", {"n": 4, "first": (2, 4), "second": (2, 3), "signs": (1, -1)}),
    ("edge_cross", {"n": 3, "spec": ClasperSpec(1, (1, 2)), "component": 3}),
    ("edge_cross", {"n": 4, "spec": ClasperSpec(2, (1, 2, 3)), "component": 4}),
    ("index_decomp", {"n": 4, "spec": ClasperSpec(3, (1, 2, 3, 4)), "subset": (2, 3, 4)}),
])
def test_lemma_pairs_share_low_invariants(kind, params):
    a, b = lemma_pair(kind, params)
    da, db = closure(a), closure(b)
    assert linking_matrix(da) == linking_matrix(db)
    assert _mu2(da) == _mu2(db)


def test_leaf_slide_hypothesis():
    with pytest.raises(BadParams):
        lemma_pair("leaf_slide", {"n": 3, "first": (1, 2), "second": (1, 2)})
    with pytest.raises(BadParams):
        lemma_pair("unknown", {"n": 3})
