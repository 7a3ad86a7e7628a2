"""Random word generators shared by the test modules."""

from __future__ import annotations

import random

from uvbraid.braidword import BraidWord, Letter, lambda_canonical, rho, sigma, underlying_permutation
from uvbraid.uvb import classical_pure_word


def random_letter(rng: random.Random, n: int) -> Letter:
    i = rng.randint(1, n - 1)
    return rng.choice((sigma(i), sigma(i, -1), rho(i)))


def random_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> BraidWord:
    return BraidWord(n, tuple(random_letter(rng, n) for _ in range(rng.randint(min_len, max_len))))


def random_virtual(rng: random.Random, n: int, max_len: int) -> BraidWord:
    return BraidWord(n, tuple(rho(rng.randint(1, n - 1)) for _ in range(rng.randint(0, max_len))))


def make_pure(w: BraidWord) -> BraidWord:
    """Append a virtual word cancelling the permutation of ``w``."""
    fix = BraidWord(w.strands, lambda_canonical(underlying_permutation(w).inverse()))
    out = w * fix
    assert underlying_permutation(out).is_identity()
    return out


def random_pure(rng: random.Random, n: int, max_len: int) -> BraidWord:
    """A pure word of length at most ``max_len``."""
    slack = max_len - len(lambda_canonical(underlying_permutation(BraidWord(n, ()))))
    while True:
        w = make_pure(random_word(rng, n, max(slack // 2, 1)))
        if len(w) <= max_len:
            return w


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    return u * v * u.inverse() * v.inverse()


def random_classical_pure(rng: random.Random, n: int, max_factors: int) -> tuple[BraidWord, list]:
    """A product of generators ``a_{i,j}^{+-1}`` of the classical pure braid group."""
    factors = []
    w = BraidWord(n, ())
    for _ in range(rng.randint(0, max_factors)):
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        e = rng.choice((1, -1))
        factors.append((i, j, e))
        w = w * classical_pure_word(i, j, n, e)
    return w, factors
