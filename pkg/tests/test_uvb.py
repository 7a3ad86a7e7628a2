from __future__ import annotations

import json
import random

import pytest
from hypothesis import given

from helpers import random_pure
from strategies import word_pairs, words
from uvbraid.braidword import BraidWord, Permutation, parse_word
from uvbraid.errors import DomainError
from uvbraid.relations import relations_for
from uvbraid.uvb import (
    UvbNormalForm,
    classical_pure_word,
    conjugate_by_perm,
    embed_classical_pure,
    is_pure,
    lam,
    lambda_word,
    nf_from_json,
    nf_invert,
    nf_multiply,
    nf_to_json,
    normal_form,
    to_word,
    uvb_equal,
    vlk_matrix,
    vlk_of_nf,
)


def nf(text, n):
    return normal_form(parse_word(text, n))


def test_normal_form_examples():
    assert nf("s1 r1 s1^-1 r1", 2) == nf_multiply(lam(2, 1, 2, -1), lam(2, 2, 1))
    assert nf("s1 s1", 2) == nf_multiply(lam(2, 1, 2, -1), lam(2, 2, 1, -1))
    x, y = nf("r1 s2 s1", 3), nf("s2 s1 r2", 3)
    assert x == y
    assert x.perm == Permutation.from_cycles(3, [(1, 3)])
    assert x.pure == nf_multiply(lam(3, 1, 3, -1), lam(3, 2, 3, -1)).pure


def test_uvb_equal_examples():
    assert uvb_equal(parse_word("r2 s1 s2", 3), parse_word("s1 s2 r1", 3))
    assert uvb_equal(parse_word("s1 s2 s1", 3), parse_word("s2 s1 s2", 3))
    assert not uvb_equal(parse_word("s1", 2), parse_word("r1", 2))


def test_strand_mismatch():
    with pytest.raises(DomainError):
        uvb_equal(parse_word("s1", 2), parse_word("s1", 3))


def test_multiply_and_invert_examples():
    x = nf("s1 r2 s2^-1 s1", 3)
    ident = UvbNormalForm.identity(3)
    assert nf_multiply(x, ident) == x
    assert nf_multiply(x, nf_invert(x)) == ident
    assert nf_invert(nf("s1", 2)) == nf("s1^-1", 2)


def test_conjugate_by_perm_examples():
    swap = Permutation.transposition(3, 1, 2)
    assert conjugate_by_perm(lam(2, 1, 2), Permutation.transposition(2, 1, 2)) == lam(2, 2, 1)
    x = nf("s1 s2 r1", 3)
    assert conjugate_by_perm(x, Permutation.identity(3)) == x
    assert conjugate_by_perm(lam(3, 1, 3, -1), swap) == lam(3, 2, 3, -1)


def test_vlk_examples():
    assert vlk_matrix(parse_word("s1 r1 s1^-1 r1", 2)) == [[0, -1], [1, 0]]
    assert vlk_matrix(BraidWord(2, ())) == [[0, 0], [0, 0]]
    assert vlk_matrix(parse_word("s1 s1", 2)) == [[0, -1], [-1, 0]]
    with pytest.raises(DomainError):
        vlk_matrix(parse_word("s1", 2))


def test_embed_classical_pure_examples():
    assert embed_classical_pure(1, 2, 2) == nf_multiply(lam(2, 1, 2, -1), lam(2, 2, 1, -1))
    assert embed_classical_pure(1, 3, 3) == nf_multiply(lam(3, 1, 3, -1), lam(3, 3, 1, -1))
    assert embed_classical_pure(1, 2, 2) == nf("s1 s1", 2)


def test_embed_classical_pure_commute():
    n = 4
    gens = [embed_classical_pure(i, j, n) for i in range(1, n) for j in range(i + 1, n + 1)]
    for a in gens:
        for b in gens:
            assert nf_multiply(a, b) == nf_multiply(b, a)


def test_is_pure_examples():
    assert is_pure(BraidWord(2, ()))
    assert not is_pure(parse_word("r1", 2))
    assert is_pure(parse_word("s1 r1", 2))


@pytest.mark.parametrize("n", range(2, 7))
def test_relation_soundness(n):
    for rel in relations_for("uvb", n):
        assert normal_form(rel.lhs) == normal_form(rel.rhs), rel.name


@given(word_pairs())
def test_normal_form_is_homomorphism(pair):
    u, v = pair
    assert nf_multiply(normal_form(u), normal_form(v)) == normal_form(u * v)


@given(words())
def test_to_word_round_trip(w):
    x = normal_form(w)
    assert normal_form(to_word(x)) == x


@given(words())
def test_json_round_trip(w):
    x = normal_form(w)
    data = nf_to_json(x)
    assert nf_from_json(json.loads(json.dumps(data))) == x
    assert json.dumps(nf_to_json(nf_from_json(data)), sort_keys=True) == json.dumps(data, sort_keys=True)


def test_lambda_commutation_pattern():
    n = 4
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for a in pairs:
        for b in pairs:
            x, y = lam(n, *a), lam(n, *b)
            commute = nf_multiply(x, y) == nf_multiply(y, x)
            assert commute == (set(a) != set(b) or a == b)


def test_lambda_word_scans_to_letter():
    for i in range(1, 5):
        for j in range(1, 5):
            if i != j:
                for e in (1, -1, 2):
                    assert normal_form(lambda_word(4, i, j, e)) == lam(4, i, j, e)


def test_vlk_conjugation():
    rng = random.Random(11)
    for _ in range(100):
        w, g = random_pure(rng, 4, 20), random_pure(rng, 4, 12)
        assert vlk_matrix(g * w * g.inverse()) == vlk_matrix(w)
        s = Permutation(tuple(rng.sample(range(1, 5), 4)))
        x = conjugate_by_perm(normal_form(w), s)
        eps, eps2 = vlk_matrix(w), vlk_of_nf(x)
        assert all(eps2[s(i) - 1][s(j) - 1] == eps[i - 1][j - 1] for i in range(1, 5) for j in range(1, 5))


def test_classical_pure_word_is_pure():
    for i in range(1, 4):
        for j in range(i + 1, 5):
            w = classical_pure_word(i, j, 4)
            assert w.is_classical() and is_pure(w)
            assert normal_form(w) == embed_classical_pure(i, j, 4)
