"""Link diagrams, their invariants, and Brunnian-link checks built from clasper surgery."""

from ._bracket import BACKEND
from .braids import BraidWord, ClasperForest, ClasperSpec, closure, commutator_word, surger
from .brunnian import certify_trivial, common_sublinks, is_nk_brunnian
from .codec import parse_braid, parse_pd, serialize_braid, serialize_pd
from .diagram import Crossing, LinkDiagram, mirror, sublink
from .errors import LinkError
from .goeritz import checkerboard, lambda_compare, lambda_value
from .invariants import (
    arf_knot, arf_link, jones, kauffman_bracket, linking_matrix, linking_number, seifert_matrix,
)
from .milnor import MilnorCalculator, mu_bar
from .moves import simplify

__all__ = [
    "BACKEND", "BraidWord", "ClasperForest", "ClasperSpec", "Crossing", "LinkDiagram", "LinkError",
    "MilnorCalculator", "arf_knot", "arf_link", "certify_trivial", "checkerboard", "closure",
    "common_sublinks", "commutator_word", "is_nk_brunnian", "jones", "kauffman_bracket",
    "lambda_compare", "lambda_value", "linking_matrix", "linking_number", "mirror", "mu_bar",
    "parse_braid", "parse_pd", "seifert_matrix", "serialize_braid", "serialize_pd", "simplify",
    "sublink", "surger",
]
