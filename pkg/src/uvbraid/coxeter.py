"""Coxeter systems with ``m`` in ``{2, 3, inf}`` and Tits' solution of their word problem.

A word is reduced exactly when no sequence of braid moves (``st -> ts`` for
``m = 2``, ``sts -> tst`` for ``m = 3``) produces two equal adjacent letters,
and any two reduced words for one element are related by braid moves.
Reduction is done letter by letter: appending ``s`` to a reduced word ``u``
either lengthens it or cancels against some word in ``u``'s braid-move orbit
that ends in ``s``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import ParseError

__all__ = [
    "CoxeterSystem",
    "coxeter_system_fh",
    "coxeter_system_gh",
    "tits_reduce",
    "coxeter_equal",
    "braid_orbit",
    "default_max_length",
]

INF = math.inf
MAX_LENGTH_ENV = "UVBRAID_TITS_MAX_LENGTH"


def default_max_length() -> int:
    return int(os.environ.get(MAX_LENGTH_ENV, "64"))


@dataclass(frozen=True)
class CoxeterSystem:
    """Generators are ``labels``; ``order(a, b)`` is ``m`` between generator indices."""

    labels: tuple[str, ...]
    orders: dict = field(hash=False, compare=False)
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {lab: k for k, lab in enumerate(self.labels)})

    def order(self, a: int, b: int) -> float:
        if a == b:
            raise ValueError("m(s, s) is not defined")
        return self.orders.get((min(a, b), max(a, b)), INF)

    def order_of(self, x: str, y: str) -> float:
        return self.order(self.index(x), self.index(y))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ParseError(f"unknown generator {label!r} in {self.name or 'system'}") from None

    def word(self, labels: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.index(x) for x in labels)

    def parse(self, text: str) -> tuple[int, ...]:
        return self.word(text.split())

    def format(self, word: Sequence[int]) -> str:
        return " ".join(self.labels[k] for k in word)


def _label(k: int, l: int) -> str:
    return f"y{k},{l}"


def coxeter_system_fh(n: int) -> CoxeterSystem:
    gens = [(k, l) for k, l in permutations(range(1, n + 1), 2)]
    gens.sort()
    orders = {}
    for a, b in combinations(range(len(gens)), 2):
        (i, j), (k, l) = gens[a], gens[b]
        if not {i, j} & {k, l}:
            orders[(a, b)] = 2
        elif (j == k and i != l) or (l == i and k != j):
            orders[(a, b)] = 3
    return CoxeterSystem(tuple(_label(*g) for g in gens), orders, f"FH_{n}")


def coxeter_system_gh(n: int) -> CoxeterSystem:
    gens = list(combinations(range(1, n + 1), 2))
    orders = {}
    for a, b in combinations(range(len(gens)), 2):
        shared = len(set(gens[a]) & set(gens[b]))
        orders[(a, b)] = 2 if shared == 0 else 3
    return CoxeterSystem(tuple(_label(*g) for g in gens), orders, f"GH_{n}")


def _moves(system: CoxeterSystem, w: tuple[int, ...]):
    for p in range(len(w) - 1):
        s, t = w[p], w[p + 1]
        if s == t:
            continue
        m = system.order(s, t)
        if m == 2:
            yield w[:p] + (t, s) + w[p + 2:]
        elif m == 3 and p + 2 < len(w) and w[p + 2] == s:
            yield w[:p] + (t, s, t) + w[p + 3:]


def braid_orbit(system: CoxeterSystem, w: Sequence[int]) -> set[tuple[int, ...]]:
    start = tuple(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in _moves(system, u):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def tits_reduce(
    system: CoxeterSystem, word: Sequence[int], max_length: int | None = None
) -> tuple[int, ...]:
    """Canonical reduced word: the lexicographically least reduced expression."""
    cap = default_max_length() if max_length is None else max_length
    if len(word) > cap:
        raise ValueError(f"word length {len(word)} exceeds the cap {cap}")
    n = len(system.labels)
    current: tuple[int, ...] = ()
    for s in word:
        if not 0 <= s < n:
            raise ParseError(f"generator index {s} out of range")
        ending = next((v for v in braid_orbit(system, current) if v and v[-1] == s), None)
        current = ending[:-1] if ending is not None else current + (s,)
    return min(braid_orbit(system, current))


def coxeter_equal(
    system: CoxeterSystem, u: Sequence[int], v: Sequence[int], max_length: int | None = None
) -> bool:
    # generators are involutions, so reversing a word inverts it
    return not tits_reduce(system, tuple(u) + tuple(reversed(v)), max_length)

