"""The free 2-step nilpotent group ``N_n = F_n / gamma_3 F_n``.

Every element has a unique collected form

    x_1^{a_1} ... x_n^{a_n} * prod_{i<j} [x_i, x_j]^{b_ij}

with ``[x, y] = x^-1 y^-1 x y``.  Commutators are central, and moving
``x_j^p`` to the right past ``x_i^q`` (``i < j``) costs ``[x_i, x_j]^{-pq}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = ["NilpotentElement", "nil_multiply", "nil_from_word"]


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _pair_index(n: int, i: int, j: int) -> int:
    # position of (i, j), i < j, in lexicographic order
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


@dataclass(frozen=True)
class NilpotentElement:
    rank: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != self.rank or len(self.b) != self.rank * (self.rank - 1) // 2:
            raise ValueError("field sizes do not match the rank")

    @classmethod
    def identity(cls, rank: int) -> "NilpotentElement":
        return cls(rank, (0,) * rank, (0,) * (rank * (rank - 1) // 2))

    @classmethod
    def generator(cls, rank: int, k: int, exp: int = 1) -> "NilpotentElement":
        a = [0] * rank
        a[k - 1] = exp
        return cls(rank, tuple(a), (0,) * (rank * (rank - 1) // 2))

    @classmethod
    def commutator_basis(cls, rank: int, i: int, j: int, exp: int = 1) -> "NilpotentElement":
        """``[x_i, x_j]^exp`` for any distinct ``i, j``."""
        if i == j:
            return cls.identity(rank)
        if i > j:
            i, j, exp = j, i, -exp
        b = [0] * (rank * (rank - 1) // 2)
        b[_pair_index(rank, i, j)] = exp
        return cls(rank, (0,) * rank, tuple(b))

    @classmethod
    def from_vector(cls, rank: int, v: Sequence[int]) -> "NilpotentElement":
        """The collected word ``x_1^{v_1} ... x_n^{v_n}``."""
        return cls(rank, tuple(v), (0,) * (rank * (rank - 1) // 2))

    def b_of(self, i: int, j: int) -> int:
        """Exponent of ``[x_i, x_j]``, antisymmetric in ``(i, j)``."""
        if i == j:
            return 0
        if i < j:
            return self.b[_pair_index(self.rank, i, j)]
        return -self.b[_pair_index(self.rank, j, i)]

    def is_identity(self) -> bool:
        return not any(self.a) and not any(self.b)

    def is_central(self) -> bool:
        return not any(self.a)

    def __mul__(self, other: "NilpotentElement") -> "NilpotentElement":
        return nil_multiply(self, other)

    def inverse(self) -> "NilpotentElement":
        n = self.rank
        b = [-c for c in self.b]
        for idx, (i, j) in enumerate(_pairs(n)):
            b[idx] -= self.a[i - 1] * self.a[j - 1]
        return NilpotentElement(n, tuple(-x for x in self.a), tuple(b))

    def __pow__(self, k: int) -> "NilpotentElement":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = NilpotentElement.identity(self.rank)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def commutator(self, other: "NilpotentElement") -> "NilpotentElement":
        return self.inverse() * other.inverse() * self * other

    def conjugate(self, by: "NilpotentElement") -> "NilpotentElement":
        """``by^-1 * self * by``."""
        return by.inverse() * self * by

    def __str__(self) -> str:
        return format_nil(self)


def nil_multiply(g: NilpotentElement, h: NilpotentElement) -> NilpotentElement:
    if g.rank != h.rank:
        raise DomainError(f"rank mismatch ({g.rank} vs {h.rank})")
    n = g.rank
    a = tuple(x + y for x, y in zip(g.a, h.a))
    b = [x + y for x, y in zip(g.b, h.b)]
    for idx, (i, j) in enumerate(_pairs(n)):
        # x_i^{h_i} moves left past x_j^{g_j}
        b[idx] -= g.a[j - 1] * h.a[i - 1]
    return NilpotentElement(n, a, tuple(b))


def nil_from_word(rank: int, letters: Iterable[int]) -> NilpotentElement:
    """Evaluate a free word given as signed generator indices (``-k`` is ``x_k^-1``)."""
    out = NilpotentElement.identity(rank)
    for x in letters:
        out = out * NilpotentElement.generator(rank, abs(x), 1 if x > 0 else -1)
    return out


def format_nil(g: NilpotentElement, root: int | None = None) -> str:
    """Text form ``x1^2 x3 [x1,x2]^-1``.

    With ``root`` set and ``g`` central with every commutator involving
    ``x_root``, commutators are written as ``[x_root, x_k]``.
    """
    n = g.rank
    parts = []
    for k, e in enumerate(g.a, start=1):
        if e:
            parts.append(f"x{k}" + (f"^{e}" if e != 1 else ""))
    rooted = root is not None and g.is_central() and all(
        c == 0 or root in p for p, c in zip(_pairs(n), g.b)
    )
    if rooted:
        for k in range(1, n + 1):
            e = g.b_of(root, k)
            if e:
                parts.append(f"[x{root},x{k}]" + (f"^{e}" if e != 1 else ""))
    else:
        for (i, j), e in zip(_pairs(n), g.b):
            if e:
                parts.append(f"[x{i},x{j}]" + (f"^{e}" if e != 1 else ""))
    return " ".join(parts) or "1"
