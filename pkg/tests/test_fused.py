from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from helpers import random_classical_pure
from uvbraid.braidword import BraidWord, parse_word
from uvbraid.errors import DomainError
from uvbraid.fused import (
    classify_two_component,
    closure_components,
    fk_equivalent,
    link_group_presentation,
    linking_matrix,
)
from uvbraid.nilpotent import NilpotentElement
from uvbraid.purify import purify
from uvbraid.uvb import classical_pure_word, lam, nf_multiply


def w2(text):
    return parse_word(text, 2)


def test_closure_components():
    part = closure_components(parse_word("s1 s1 r2", 3))
    assert part.count == 2 and part.components() == [(1,), (2, 3)]


def test_group_of_unlink():
    g = link_group_presentation(BraidWord(2, ()))
    assert all(r.is_identity() for r in g.relators)
    assert g.nilpotent_class2


def test_group_of_hopf_links():
    g = link_group_presentation(w2("s1 s1"))
    c12 = NilpotentElement.commutator_basis(2, 1, 2)
    assert g.relators == (c12.inverse(), c12)
    assert g.relator_strings() == ["[x1,x2]^-1", "[x2,x1]^-1"]
    h = link_group_presentation(w2("s1 r1 s1^-1 r1"))
    assert h.relators == (c12.inverse(), c12.inverse())


def test_group_from_normal_form():
    x = nf_multiply(lam(2, 1, 2, -1), lam(2, 2, 1, -1))
    assert link_group_presentation(x) == link_group_presentation(w2("s1 s1"))


def test_classify_examples():
    assert classify_two_component(BraidWord(2, ())).gamma == 0
    assert classify_two_component(w2("s1 s1")).gamma == 1
    c = classify_two_component(w2("s1 r1 s1^-1 r1"))
    assert c.gamma == 1 and c.vlk == (-1, 1)
    assert "t central" in c.presentation


def test_classify_needs_two_components():
    with pytest.raises(DomainError):
        classify_two_component(parse_word("s1 s2", 3))


def test_gamma_depends_on_vlk_only_and_is_symmetric():
    for p, q in itertools.product(range(-4, 5), repeat=2):
        x = nf_multiply(lam(2, 1, 2, p), lam(2, 2, 1, q))
        y = nf_multiply(lam(2, 2, 1, q), lam(2, 1, 2, p))
        swapped = nf_multiply(lam(2, 1, 2, q), lam(2, 2, 1, p))
        gx = classify_two_component(purify(x)).gamma
        assert gx == classify_two_component(purify(y)).gamma
        assert gx == classify_two_component(purify(swapped)).gamma


def test_presentation_depends_on_vlk_only():
    rng = random.Random(4)
    seen = {}
    for _ in range(200):
        w, _ = random_classical_pure(rng, 3, 4)
        key = tuple(map(tuple, purify(w).vlk))
        rel = link_group_presentation(w).relators
        assert seen.setdefault(key, rel) == rel


def test_linking_matrix_half_integers():
    m = linking_matrix(w2("s1 r1 s1^-1 r1"))
    assert m == [[0, 0], [0, 0]]
    assert linking_matrix(w2("s1 s1 s1 r1"))[0][1] == Fraction(-3, 2)
    assert linking_matrix(w2("s1 r1"))[0][1] == Fraction(-1, 2)


def test_fk_examples():
    a12, a13 = classical_pure_word(1, 2, 3), classical_pure_word(1, 3, 3)
    assert fk_equivalent(a12 * a13, a13 * a12)
    assert not fk_equivalent(w2("s1 s1"), w2("s1 s1 s1 s1"))
    assert fk_equivalent(w2("s1 s1"), w2("s1 s1"))
    assert linking_matrix(w2("s1 s1 s1 s1"))[0][1] == -2


def test_fk_rejects_virtual():
    with pytest.raises(DomainError):
        fk_equivalent(w2("r1"), w2(""))


def test_fk_unlabeled():
    a12, a23 = classical_pure_word(1, 2, 3), classical_pure_word(2, 3, 3)
    assert not fk_equivalent(a12, a23)
    assert fk_equivalent(a12, a23, labeled=False)
