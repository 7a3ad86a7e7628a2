"""Braid words, permutations, and the text grammar that connects them.

Words are read left to right: the product ``u * v`` means "u, then v".
Permutations compose as functions, ``(u * v)(x) = u(v(x))``, and the
underlying permutation of a word maps a bottom position to the top strand
that arrives there.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ParseError

__all__ = [
    "Letter",
    "BraidWord",
    "Permutation",
    "sigma",
    "rho",
    "parse_word",
    "format_word",
    "underlying_permutation",
    "mu_permutation",
    "lambda_canonical",
]


class Letter(NamedTuple):
    """One generator: ``gen`` is ``"s"`` (classical) or ``"r"`` (virtual)."""

    gen: str
    index: int
    exp: int = 1

    @property
    def is_virtual(self) -> bool:
        return self.gen == "r"

    def inverse(self) -> "Letter":
        if self.gen == "r":
            return self
        return Letter("s", self.index, -self.exp)

    def __str__(self) -> str:
        if self.gen == "s" and self.exp == -1:
            return f"s{self.index}^-1"
        return f"{self.gen}{self.index}"


def sigma(i: int, exp: int = 1) -> Letter:
    return Letter("s", i, exp)


def rho(i: int) -> Letter:
    return Letter("r", i, 1)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for let in letters:
            if let.gen not in ("s", "r") or let.exp not in (1, -1):
                raise ValueError(f"bad letter {let!r}")
            if let.gen == "r" and let.exp != 1:
                raise ValueError("virtual letters carry exponent 1")
            if not 1 <= let.index < self.strands:
                raise ValueError(
                    f"letter {let} does not fit on {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(x.inverse() for x in reversed(self.letters)))

    def with_strands(self, n: int) -> "BraidWord":
        """The same letters on ``n`` strands (adds or drops trailing trivial strands)."""
        return BraidWord(n, self.letters)

    def is_classical(self) -> bool:
        return not any(x.is_virtual for x in self.letters)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n``; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == i for i, y in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles (fixed points included), each starting at its least element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def restrict(self, n: int) -> "Permutation":
        """Drop the fixed points ``n+1..``; they must actually be fixed."""
        if any(self(x) != x for x in range(n + 1, self.n + 1)):
            raise ValueError("permutation moves a dropped point")
        return Permutation(self.images[:n])

    def extend(self, n: int) -> "Permutation":
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def __str__(self) -> str:
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"


_TOKEN = re.compile(r"^([sr])(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated ``s<i>``, ``s<i>^-1``, ``s<i>^k`` and ``r<i>`` tokens."""
    if strands < 1:
        raise ParseError(f"strand count must be positive, got {strands}")
    letters: list[Letter] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"malformed token {tok!r}")
        gen, idx, power = m.group(1), int(m.group(2)), m.group(3)
        k = 1 if power is None else int(power)
        if not 1 <= idx < strands:
            raise ParseError(f"index out of range in {tok!r} for {strands} strands")
        if gen == "r":
            # rho_i is an involution, so only the parity of the exponent matters
            letters.extend([rho(idx)] * (k % 2))
        else:
            e = 1 if k > 0 else -1
            letters.extend([sigma(idx, e)] * abs(k))
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


def _product_of_transpositions(n: int, indices: Iterable[int]) -> Permutation:
    images = list(range(1, n + 1))
    # right multiplication by (i, i+1) swaps the images at positions i and i+1
    for i in indices:
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def underlying_permutation(w: BraidWord) -> Permutation:
    return _product_of_transpositions(w.strands, (x.index for x in w.letters))


def mu_permutation(w: BraidWord) -> Permutation:
    """Image under the map killing classical letters."""
    return _product_of_transpositions(w.strands, (x.index for x in w.letters if x.is_virtual))


def cycle_word(k: int, l: int) -> tuple[Letter, ...]:
    """``rho_{k-1} rho_{k-2} ... rho_l`` (empty when ``l >= k``)."""
    return tuple(rho(i) for i in range(k - 1, l - 1, -1))


def lambda_canonical(p: Permutation) -> tuple[Letter, ...]:
    """The canonical virtual word ``s_{2,j_2} ... s_{n,j_n}`` with underlying permutation ``p``."""
    n = p.n
    rest = p
    factors: list[tuple[Letter, ...]] = []
    for k in range(n, 1, -1):
        j = rest.inverse()(k)
        block = cycle_word(k, j)
        factors.append(block)
        block_perm = _product_of_transpositions(n, (x.index for x in block))
        rest = rest * block_perm.inverse()
    assert rest.is_identity()
    return tuple(x for block in reversed(factors) for x in block)
