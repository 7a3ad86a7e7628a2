"""Automorphism representations of braid words.

Two actions are provided:

* ``psi``: welded braids acting on the free group ``F_n``;
* ``phi``: unrestricted virtual braids acting on ``N_n``, the free 2-step
  nilpotent group.

Both are right actions on words: the image of ``u * v`` is "apply ``u``'s
substitution, then substitute ``v``'s images into the result".  This is what
makes them homomorphisms for left-to-right braid words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braidword import BraidWord, Letter, Permutation, lambda_canonical, rho
from .errors import DomainError
from .nilpotent import NilpotentElement

__all__ = [
    "FreeWord",
    "FreeAutomorphism",
    "PcNilAutomorphism",
    "CaractautDecomposition",
    "free_reduce",
    "psi_of_letter",
    "psi_of_word",
    "psi_equal",
    "phi_of_letter",
    "phi_of_word",
    "phi_of_lambda",
    "pc_compose",
    "apply_nil",
    "caractaut_membership",
    "recompose",
]

# ---------------------------------------------------------------------------
# free groups

FreeWord = tuple[int, ...]  # signed generator indices, freely reduced


def free_reduce(letters: Sequence[int]) -> FreeWord:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_inverse(w: Sequence[int]) -> FreeWord:
    return tuple(-x for x in reversed(w))


def format_free(w: Sequence[int]) -> str:
    return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in w) or "1"


@dataclass(frozen=True)
class FreeAutomorphism:
    """Images of ``x_1..x_n``; ``images[i-1]`` is the image of ``x_i``."""

    rank: int
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        return cls(rank, tuple((k,) for k in range(1, rank + 1)))

    def apply(self, w: Sequence[int]) -> FreeWord:
        out: list[int] = []
        for x in w:
            img = self.images[abs(x) - 1]
            out.extend(img if x > 0 else free_inverse(img))
        return free_reduce(out)

    def then(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """Substitute ``other``'s images into this automorphism's images."""
        if self.rank != other.rank:
            raise DomainError("rank mismatch")
        return FreeAutomorphism(self.rank, tuple(other.apply(img) for img in self.images))

    def is_identity(self) -> bool:
        return all(img == (k,) for k, img in enumerate(self.images, start=1))

    def conjugacy_shape(self) -> tuple[Permutation, tuple[FreeWord, ...]]:
        """Write each image as ``c_i x_{pi(i)} c_i^-1``; raises if the shape fails."""
        targets, conjugators = [], []
        for img in self.images:
            m, r = divmod(len(img), 2)
            if r != 1 or img[m] < 0 or free_inverse(img[:m]) != img[m + 1:]:
                raise DomainError(f"image {format_free(img)} is not a conjugate of a generator")
            targets.append(img[m])
            conjugators.append(img[:m])
        try:
            perm = Permutation(tuple(targets))
        except ValueError:
            raise DomainError("images do not permute the generators") from None
        return perm, tuple(conjugators)

    def __str__(self) -> str:
        return ", ".join(
            f"x{k} -> {format_free(img)}" for k, img in enumerate(self.images, start=1)
        )


def psi_of_letter(n: int, let: Letter) -> FreeAutomorphism:
    i = let.index
    images = [(k,) for k in range(1, n + 1)]
    if let.gen == "r":
        images[i - 1], images[i] = (i + 1,), (i,)
    elif let.exp > 0:
        images[i - 1], images[i] = (i, i + 1, -i), (i,)
    else:
        images[i - 1], images[i] = (i + 1,), (-(i + 1), i, i + 1)
    return FreeAutomorphism(n, tuple(images))


def psi_of_word(w: BraidWord) -> FreeAutomorphism:
    out = FreeAutomorphism.identity(w.strands)
    for let in w.letters:
        out = out.then(psi_of_letter(w.strands, let))
    return out


def psi_equal(u: BraidWord, v: BraidWord) -> bool:
    """Word problem in the welded braid group (psi is faithful there)."""
    if u.strands != v.strands:
        raise DomainError(f"strand counts differ ({u.strands} vs {v.strands})")
    return psi_of_word(u) == psi_of_word(v)


# ---------------------------------------------------------------------------
# permutation-conjugacy automorphisms of N_n


@dataclass(frozen=True)
class PcNilAutomorphism:
    """``x_i -> a_i^-1 x_{perm(i)} a_i`` with ``a_i`` of abelian image ``rows[i-1]``.

    Conjugation in ``N_n`` only sees the abelian image of the conjugator, and
    ``x_{perm(i)}`` commutes with itself, so rows are kept with
    ``rows[i-1][perm(i)-1] == 0``.
    """

    perm: Permutation
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.perm.n
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("conjugator array must be n x n")
        rows = tuple(
            tuple(0 if k == self.perm(i) else c for k, c in enumerate(r, start=1))
            for i, r in enumerate(rows, start=1)
        )
        object.__setattr__(self, "rows", rows)

    @property
    def rank(self) -> int:
        return self.perm.n

    @classmethod
    def identity(cls, n: int) -> "PcNilAutomorphism":
        return cls(Permutation.identity(n), tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_images(cls, images: Sequence[NilpotentElement]) -> "PcNilAutomorphism":
        """Recognise ``x_i -> a_i^-1 x_k a_i`` from raw generator images."""
        n = len(images)
        targets, rows = [], []
        for img in images:
            if img.rank != n:
                raise DomainError("image rank does not match the number of images")
            nonzero = [k for k, e in enumerate(img.a, start=1) if e]
            if len(nonzero) != 1 or img.a[nonzero[0] - 1] != 1:
                raise DomainError(f"image {img} is not a conjugate of a generator")
            k = nonzero[0]
            # a^-1 x_k a = x_k [x_k, a]; [x_k, a] = prod_m [x_k, x_m]^{v_m}
            row = [img.b_of(k, m) for m in range(1, n + 1)]
            rebuilt = NilpotentElement.generator(n, k).conjugate(
                NilpotentElement.from_vector(n, row)
            )
            if rebuilt != img:
                raise DomainError(f"image {img} is not a conjugate of a generator")
            targets.append(k)
            rows.append(tuple(row))
        try:
            perm = Permutation(tuple(targets))
        except ValueError:
            raise DomainError("images do not permute the generators") from None
        return cls(perm, tuple(rows))

    def image(self, i: int) -> NilpotentElement:
        n = self.rank
        conj = NilpotentElement.from_vector(n, self.rows[i - 1])
        return NilpotentElement.generator(n, self.perm(i)).conjugate(conj)

    def images(self) -> tuple[NilpotentElement, ...]:
        return tuple(self.image(i) for i in range(1, self.rank + 1))

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(any(r) for r in self.rows)

    def then(self, other: "PcNilAutomorphism") -> "PcNilAutomorphism":
        return pc_compose(self, other)

    def __str__(self) -> str:
        return ", ".join(f"x{i} -> {img}" for i, img in enumerate(self.images(), start=1))


def pc_compose(f: PcNilAutomorphism, g: PcNilAutomorphism) -> PcNilAutomorphism:
    """``f`` then ``g``: ``x -> g(f(x))``."""
    if f.rank != g.rank:
        raise DomainError(f"rank mismatch ({f.rank} vs {g.rank})")
    n = f.rank
    rows = []
    for i in range(1, n + 1):
        mid = f.perm(i)
        row = list(g.rows[mid - 1])
        # g maps the abelian image of f's conjugator by permuting coordinates
        for k, c in enumerate(f.rows[i - 1], start=1):
            row[g.perm(k) - 1] += c
        rows.append(tuple(row))
    return PcNilAutomorphism(g.perm * f.perm, tuple(rows))


def apply_nil(f: PcNilAutomorphism, x: NilpotentElement) -> NilpotentElement:
    if f.rank != x.rank:
        raise DomainError(f"rank mismatch ({f.rank} vs {x.rank})")
    n = f.rank
    imgs = f.images()
    out = NilpotentElement.identity(n)
    for k, e in enumerate(x.a, start=1):
        out = out * imgs[k - 1] ** e
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            e = x.b_of(i, j)
            if e:
                out = out * imgs[i - 1].commutator(imgs[j - 1]) ** e
    return out


def phi_of_letter(n: int, let: Letter) -> PcNilAutomorphism:
    i = let.index
    perm = Permutation.transposition(n, i, i + 1)
    rows = [[0] * n for _ in range(n)]
    if let.gen == "s":
        if let.exp > 0:
            rows[i - 1][i - 1] = -1  # x_i -> x_i x_{i+1} x_i^-1
        else:
            rows[i][i] = 1  # x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    return PcNilAutomorphism(perm, tuple(map(tuple, rows)))


def phi_of_word(w: BraidWord) -> PcNilAutomorphism:
    out = PcNilAutomorphism.identity(w.strands)
    for let in w.letters:
        out = pc_compose(out, phi_of_letter(w.strands, let))
    return out


def phi_of_lambda(n: int, i: int, j: int, exp: int = 1) -> PcNilAutomorphism:
    """``phi(lambda_{i,j})^exp``: ``x_i -> x_j^-exp x_i x_j^exp``."""
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = exp
    return PcNilAutomorphism(Permutation.identity(n), tuple(map(tuple, rows)))


@dataclass(frozen=True)
class CaractautDecomposition:
    """``f = prod phi(lambda_{i,j})^{e_ij}`` followed by ``phi`` of a virtual word.

    ``exponents`` maps ``(i, j)`` to ``e_ij`` (zeros omitted); ``virtual`` is the
    canonical virtual word realising the permutation part.
    """

    rank: int
    exponents: dict
    virtual: tuple[Letter, ...]

    def factors(self) -> list[tuple[int, int, int]]:
        return [(i, j, e) for (i, j), e in sorted(self.exponents.items())]

    def __str__(self) -> str:
        parts = [f"e{i},{j}" + (f"^{e}" if e != 1 else "") for i, j, e in self.factors()]
        parts += [str(x) for x in self.virtual]
        return " ".join(parts) or "1"


def caractaut_membership(
    f: PcNilAutomorphism | Sequence[NilpotentElement],
) -> CaractautDecomposition:
    """Factor an automorphism of permutation-conjugacy shape into generator images.

    The permutation part is split off first; the remaining automorphism is
    then cleared one row at a time by multiplying with inverse powers of
    ``phi(lambda_{i,j})``, which fixes ``x_1, ..., x_i`` after step ``i``.
    """
    if not isinstance(f, PcNilAutomorphism):
        f = PcNilAutomorphism.from_images(f)
    n = f.rank
    virtual = lambda_canonical(f.perm.inverse())
    q = phi_of_word(BraidWord(n, virtual))
    assert q.perm == f.perm
    # f = p ; q  with p pure, so row i of p is row i of f pulled back through q
    p_rows = tuple(tuple(f.rows[i][f.perm(k) - 1] for k in range(1, n + 1)) for i in range(n))
    current = PcNilAutomorphism(Permutation.identity(n), p_rows)
    exponents: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            e = current.rows[i - 1][j - 1]
            if e:
                exponents[(i, j)] = e
                current = pc_compose(current, phi_of_lambda(n, i, j, -e))
        if any(current.image(k) != NilpotentElement.generator(n, k) for k in range(1, i + 1)):
            raise AssertionError(f"row {i} not cleared")
    if not current.is_identity():
        raise AssertionError("peeling did not reach the identity")
    return CaractautDecomposition(n, exponents, virtual)


def recompose(d: CaractautDecomposition) -> PcNilAutomorphism:
    out = PcNilAutomorphism.identity(d.rank)
    for i, j, e in d.factors():
        out = pc_compose(out, phi_of_lambda(d.rank, i, j, e))
    return pc_compose(out, phi_of_word(BraidWord(d.rank, d.virtual)))
