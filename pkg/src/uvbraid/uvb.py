"""Normal forms for unrestricted virtual braids.

An element is stored as ``P * iota(perm)`` where ``P`` lies in the pure
subgroup, a right-angled Artin group in which the only non-commuting
generators are ``lambda_{i,j}`` and ``lambda_{j,i}``.  ``P`` therefore splits
as a product of free groups of rank two, one per unordered pair ``{i, j}``,
and we keep one freely reduced word per pair.

Pair-word letters are small integers: ``+1``/``-1`` for ``lambda_{i,j}^{+-1}``
and ``+2``/``-2`` for ``lambda_{j,i}^{+-1}``, where ``i < j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .braidword import (
    BraidWord,
    Letter,
    Permutation,
    lambda_canonical,
    rho,
    sigma,
    underlying_permutation,
)
from .errors import DomainError

__all__ = [
    "Pair",
    "UvbNormalForm",
    "lam",
    "normal_form",
    "uvb_equal",
    "nf_multiply",
    "nf_invert",
    "conjugate_by_perm",
    "relabel_pure",
    "vlk_matrix",
    "vlk_of_nf",
    "embed_classical_pure",
    "classical_pure_word",
    "lambda_word",
    "is_pure",
    "to_word",
    "nf_to_json",
    "nf_from_json",
]

Pair = tuple[int, int]
PairWord = tuple[int, ...]


def _append(word: list[int], letter: int) -> None:
    if word and word[-1] == -letter:
        word.pop()
    else:
        word.append(letter)


def _letter_for(a: int, b: int, exp: int) -> tuple[Pair, int]:
    """Pair and pair-word letter encoding ``lambda_{a,b}^exp``."""
    if a < b:
        return (a, b), exp
    return (b, a), 2 * exp


def _decode(pair: Pair, letter: int) -> tuple[int, int, int]:
    """Inverse of :func:`_letter_for`: returns ``(a, b, exp)``."""
    i, j = pair
    exp = 1 if letter > 0 else -1
    if abs(letter) == 1:
        return i, j, exp
    return j, i, exp


@dataclass(frozen=True)
class UvbNormalForm:
    n: int
    pure: tuple[tuple[Pair, PairWord], ...]
    perm: Permutation
    _lookup: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        items = tuple(sorted((p, tuple(w)) for p, w in self.pure if w))
        object.__setattr__(self, "pure", items)
        object.__setattr__(self, "_lookup", dict(items))
        if self.perm.n != self.n:
            raise ValueError("permutation size does not match strand count")
        for (i, j), w in items:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad pair {(i, j)} for {self.n} strands")
            for a, b in zip(w, w[1:]):
                if a == -b:
                    raise ValueError(f"pair word {w} is not freely reduced")

    @classmethod
    def identity(cls, n: int) -> "UvbNormalForm":
        return cls(n, (), Permutation.identity(n))

    @classmethod
    def from_pairs(
        cls, n: int, pairs: Mapping[Pair, Iterable[int]], perm: Permutation | None = None
    ) -> "UvbNormalForm":
        """Build from pair words, freely reducing each one."""
        reduced = {}
        for p, w in pairs.items():
            acc: list[int] = []
            for x in w:
                _append(acc, x)
            reduced[p] = tuple(acc)
        return cls(n, tuple(reduced.items()), perm or Permutation.identity(n))

    def pair_word(self, i: int, j: int) -> PairWord:
        return self._lookup.get((min(i, j), max(i, j)), ())

    @property
    def is_pure(self) -> bool:
        return self.perm.is_identity()

    def length(self) -> int:
        return sum(len(w) for _, w in self.pure)

    def __mul__(self, other: "UvbNormalForm") -> "UvbNormalForm":
        return nf_multiply(self, other)

    def __str__(self) -> str:
        parts = []
        for pair, w in self.pure:
            for x in w:
                a, b, e = _decode(pair, x)
                parts.append(f"L{a},{b}" + ("^-1" if e < 0 else ""))
        pure = " ".join(parts) or "1"
        return f"{pure} | {self.perm}"


def lam(n: int, a: int, b: int, exp: int = 1) -> UvbNormalForm:
    """The normal form of ``lambda_{a,b}^exp`` on ``n`` strands."""
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"bad lambda indices ({a}, {b}) for n={n}")
    pair, x = _letter_for(a, b, 1)
    word = (x,) * abs(exp) if exp > 0 else (-x,) * abs(exp)
    return UvbNormalForm.from_pairs(n, {pair: word})


def normal_form(w: BraidWord) -> UvbNormalForm:
    """Scan a braid word into ``P * iota(perm)``.

    ``sigma_i = lambda_{i,i+1}^{-1} rho_i`` and ``sigma_i^{-1} = lambda_{i+1,i} rho_i``;
    a lambda letter written after the virtual prefix ``iota(perm)`` is pushed
    to the left by relabeling its indices through ``perm``.
    """
    n = w.strands
    images = list(range(1, n + 1))
    pairs: dict[Pair, list[int]] = {}
    for let in w.letters:
        i = let.index
        if let.gen == "s":
            a, b = images[i - 1], images[i]
            if let.exp > 0:
                pair, x = _letter_for(a, b, -1)
            else:
                pair, x = _letter_for(b, a, 1)
            _append(pairs.setdefault(pair, []), x)
        images[i - 1], images[i] = images[i], images[i - 1]
    return UvbNormalForm(
        n, tuple((p, tuple(v)) for p, v in pairs.items()), Permutation(tuple(images))
    )


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise DomainError(f"strand counts differ ({a} vs {b})")


def uvb_equal(u: BraidWord, v: BraidWord) -> bool:
    _check_same(u.strands, v.strands)
    return normal_form(u) == normal_form(v)


def _swap(x: int) -> int:
    return (3 - abs(x)) * (1 if x > 0 else -1)


def relabel_pure(
    pure: Iterable[tuple[Pair, PairWord]], s: Permutation
) -> dict[Pair, PairWord]:
    """Apply ``lambda_{a,b} -> lambda_{s(a),s(b)}`` to every letter."""
    out: dict[Pair, PairWord] = {}
    for (i, j), w in pure:
        si, sj = s(i), s(j)
        if si < sj:
            out[(si, sj)] = w
        else:
            # lambda_{i,j} becomes the "ji" generator of the image pair and vice versa
            out[(sj, si)] = tuple(_swap(x) for x in w)
    return out


def _concat(
    left: Mapping[Pair, PairWord], right: Mapping[Pair, PairWord]
) -> dict[Pair, PairWord]:
    out = {p: list(w) for p, w in left.items()}
    for p, w in right.items():
        acc = out.setdefault(p, [])
        for x in w:
            _append(acc, x)
    return {p: tuple(w) for p, w in out.items()}


def _invert_pure(pure: Iterable[tuple[Pair, PairWord]]) -> dict[Pair, PairWord]:
    return {p: tuple(-x for x in reversed(w)) for p, w in pure}


def nf_multiply(a: UvbNormalForm, b: UvbNormalForm) -> UvbNormalForm:
    """``(P, u) * (Q, v) = (P * u(Q), u * v)``."""
    _check_same(a.n, b.n)
    moved = relabel_pure(b.pure, a.perm)
    pure = _concat(dict(a.pure), moved)
    return UvbNormalForm(a.n, tuple(pure.items()), a.perm * b.perm)


def nf_invert(a: UvbNormalForm) -> UvbNormalForm:
    inv = a.perm.inverse()
    pure = relabel_pure(_invert_pure(a.pure).items(), inv)
    return UvbNormalForm(a.n, tuple(pure.items()), inv)


def conjugate_by_perm(x: UvbNormalForm, s: Permutation) -> UvbNormalForm:
    """``iota(s) x iota(s)^{-1}``: relabels the pure part by ``s``."""
    _check_same(x.n, s.n)
    pure = relabel_pure(x.pure, s)
    return UvbNormalForm(x.n, tuple(pure.items()), s * x.perm * s.inverse())


def vlk_of_nf(x: UvbNormalForm) -> list[list[int]]:
    """Exponent sums ``eps[a][b]`` of ``lambda_{a,b}``, 1-based via ``eps[a-1][b-1]``."""
    eps = [[0] * x.n for _ in range(x.n)]
    for pair, w in x.pure:
        for letter in w:
            a, b, e = _decode(pair, letter)
            eps[a - 1][b - 1] += e
    return eps


def vlk_matrix(w: BraidWord | UvbNormalForm) -> list[list[int]]:
    x = w if isinstance(w, UvbNormalForm) else normal_form(w)
    if not x.is_pure:
        raise DomainError(f"braid is not pure (permutation {x.perm})")
    return vlk_of_nf(x)


def classical_pure_word(i: int, j: int, n: int, exp: int = 1) -> BraidWord:
    """The classical pure braid generator ``a_{i,j}`` (or its inverse) as a braid word."""
    if not 1 <= i < j <= n:
        raise DomainError(f"need 1 <= i < j <= n, got ({i}, {j}, {n})")
    head = [sigma(k) for k in range(j - 1, i, -1)]
    tail = [sigma(k, -1) for k in range(i + 1, j)]
    word = BraidWord(n, tuple(head + [sigma(i), sigma(i)] + tail))
    return word if exp > 0 else word.inverse()


def embed_classical_pure(i: int, j: int, n: int) -> UvbNormalForm:
    return normal_form(classical_pure_word(i, j, n))


def lambda_word(n: int, a: int, b: int, exp: int = 1) -> BraidWord:
    """``lambda_{a,b}^{exp}`` spelled in classical and virtual letters."""
    i, j = min(a, b), max(a, b)
    conj = [rho(k) for k in range(j - 1, i, -1)]
    core = [rho(i), sigma(i, -1)] if a < b else [sigma(i, -1), rho(i)]
    word = BraidWord(n, tuple(conj + core + conj[::-1]))
    if exp < 0:
        word = word.inverse()
    return BraidWord(n, word.letters * abs(exp))


def is_pure(w: BraidWord) -> bool:
    return underlying_permutation(w).is_identity()


def to_word(x: UvbNormalForm) -> BraidWord:
    """A braid word whose normal form is ``x``: pair blocks in order, then the canonical virtual word."""
    letters: list[Letter] = []
    for pair, w in x.pure:
        for letter in w:
            a, b, e = _decode(pair, letter)
            letters.extend(lambda_word(x.n, a, b, e).letters)
    letters.extend(lambda_canonical(x.perm))
    return BraidWord(x.n, tuple(letters))


def nf_to_json(x: UvbNormalForm) -> dict:
    pairs = []
    for (i, j), w in x.pure:
        pairs.append(
            {
                "i": i,
                "j": j,
                "word": [["ij" if abs(c) == 1 else "ji", 1 if c > 0 else -1] for c in w],
            }
        )
    return {"n": x.n, "perm": list(x.perm.images), "pairs": pairs}


def nf_from_json(data: Mapping) -> UvbNormalForm:
    pairs = {}
    for entry in data["pairs"]:
        code = {"ij": 1, "ji": 2}
        pairs[(entry["i"], entry["j"])] = [code[g] * e for g, e in entry["word"]]
    n = data["n"]
    return UvbNormalForm.from_pairs(n, pairs, Permutation(tuple(data["perm"])))
