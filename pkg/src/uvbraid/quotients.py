"""Word problems in the flat and Gauss quotients of the virtual braid group.

* FWB_n splits as ``Z^{n(n-1)/2}`` with the permutation group acting on
  pair indices, so an element is an exponent vector plus a permutation.
* FVB_n and GVB_n split as a Coxeter kernel (FH_n, GH_n) extended by the
  permutation of the virtual letters; kernels are compared with Tits' algorithm.
* FVP_3 is the free product of ``Z^2 = <a, c>`` and ``Z = <b>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .braidword import BraidWord, Permutation, mu_permutation
from .coxeter import CoxeterSystem, coxeter_equal, coxeter_system_fh, coxeter_system_gh, tits_reduce
from .errors import DomainError, ParseError
from .uvb import UvbNormalForm, lambda_word, normal_form

__all__ = [
    "FwbNormalForm",
    "fwb_normal_form",
    "fwb_from_uvb",
    "fwb_equal",
    "FlatNormalForm",
    "flat_kernel",
    "fvb_normal_form",
    "gvb_normal_form",
    "fvb_equal",
    "gvb_equal",
    "Zsq",
    "LambdaWord",
    "parse_lambda_word",
    "fvp3_normal_form",
    "lambda_to_braid",
]


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise DomainError(f"strand counts differ ({a} vs {b})")


# --- FWB_n -------------------------------------------------------------------


@dataclass(frozen=True)
class FwbNormalForm:
    n: int
    exponents: tuple[int, ...]  # indexed by pairs i<j in lexicographic order
    perm: Permutation

    @staticmethod
    def pairs(n: int) -> list[tuple[int, int]]:
        return list(combinations(range(1, n + 1), 2))

    def exponent(self, i: int, j: int) -> int:
        """Exponent of ``x_{i,j}``; ``x_{j,i}`` is its inverse."""
        if i == j:
            raise ValueError("x_{i,i} is not a generator")
        k = self.pairs(self.n).index((min(i, j), max(i, j)))
        return self.exponents[k] if i < j else -self.exponents[k]

    def __str__(self) -> str:
        parts = [
            f"x{i},{j}^{e}" if e != 1 else f"x{i},{j}"
            for (i, j), e in zip(self.pairs(self.n), self.exponents)
            if e
        ]
        return f"{' '.join(parts) or '1'} | {self.perm}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "perm": list(self.perm.images),
            "exponents": [
                {"i": i, "j": j, "e": e}
                for (i, j), e in zip(self.pairs(self.n), self.exponents)
                if e
            ],
        }


def fwb_normal_form(w: BraidWord) -> FwbNormalForm:
    """Direct scan: each classical letter contributes ``x_{w(i),w(i+1)}^-1``."""
    n = w.strands
    index = {p: k for k, p in enumerate(FwbNormalForm.pairs(n))}
    vec = [0] * len(index)
    images = list(range(1, n + 1))
    for let in w.letters:
        i = let.index
        if let.gen == "s":
            a, b = images[i - 1], images[i]
            # sigma^{+1} and sigma^{-1} agree in FWB since sigma^2 = 1
            vec[index[(min(a, b), max(a, b))]] += -1 if a < b else 1
        images[i - 1], images[i] = images[i], images[i - 1]
    return FwbNormalForm(n, tuple(vec), Permutation(tuple(images)))


def fwb_from_uvb(x: UvbNormalForm) -> FwbNormalForm:
    """Abelianize each pair block with ``lambda_{j,i} -> lambda_{i,j}^-1``."""
    index = {p: k for k, p in enumerate(FwbNormalForm.pairs(x.n))}
    vec = [0] * len(index)
    for pair, word in x.pure:
        vec[index[pair]] += sum((1 if c > 0 else -1) * (1 if abs(c) == 1 else -1) for c in word)
    return FwbNormalForm(x.n, tuple(vec), x.perm)


def fwb_equal(u: BraidWord, v: BraidWord) -> bool:
    _check_same(u.strands, v.strands)
    return fwb_normal_form(u) == fwb_normal_form(v)


# --- FVB_n and GVB_n ---------------------------------------------------------


@lru_cache(maxsize=None)
def _system(kind: str, n: int) -> CoxeterSystem:
    return coxeter_system_fh(n) if kind == "fvb" else coxeter_system_gh(n)


@dataclass(frozen=True)
class FlatNormalForm:
    """Canonical reduced kernel word followed by the permutation of the virtual letters."""

    model: str
    n: int
    kernel: tuple[str, ...]
    perm: Permutation

    def __str__(self) -> str:
        return f"{' '.join(self.kernel) or '1'} | {self.perm}"

    def to_json(self) -> dict:
        return {"model": self.model, "n": self.n, "kernel": list(self.kernel), "perm": list(self.perm.images)}


def flat_kernel(w: BraidWord, model: str = "fvb") -> tuple[CoxeterSystem, tuple[int, ...], Permutation]:
    """Split ``w`` as (kernel word over ``y``-generators, permutation).

    A classical letter at position ``i`` is pushed left through the virtual
    prefix and becomes ``y_{w(i),w(i+1)}``; for GVB the label is unordered.
    """
    if model not in ("fvb", "gvb"):
        raise ValueError(f"unknown flat model {model!r}")
    n = w.strands
    if n < 2:
        system = CoxeterSystem((), {}, f"{model}_1")
        return system, (), Permutation.identity(n)
    system = _system(model, n)
    images = list(range(1, n + 1))
    out = []
    for let in w.letters:
        i = let.index
        if let.gen == "s":
            a, b = images[i - 1], images[i]
            if model == "gvb":
                a, b = min(a, b), max(a, b)
            out.append(system.index(f"y{a},{b}"))
        else:
            images[i - 1], images[i] = images[i], images[i - 1]
    perm = Permutation(tuple(images))
    assert perm == mu_permutation(w)
    return system, tuple(out), perm


def _flat_nf(w: BraidWord, model: str, max_length: int | None) -> FlatNormalForm:
    system, kernel, perm = flat_kernel(w, model)
    reduced = tits_reduce(system, kernel, max_length) if kernel else ()
    return FlatNormalForm(model, w.strands, tuple(system.labels[k] for k in reduced), perm)


def fvb_normal_form(w: BraidWord, max_length: int | None = None) -> FlatNormalForm:
    return _flat_nf(w, "fvb", max_length)


def gvb_normal_form(w: BraidWord, max_length: int | None = None) -> FlatNormalForm:
    return _flat_nf(w, "gvb", max_length)


def _flat_equal(u: BraidWord, v: BraidWord, model: str, max_length: int | None) -> bool:
    _check_same(u.strands, v.strands)
    system, ku, pu = flat_kernel(u, model)
    _, kv, pv = flat_kernel(v, model)
    if pu != pv:
        return False
    return coxeter_equal(system, ku, kv, max_length)


def fvb_equal(u: BraidWord, v: BraidWord, max_length: int | None = None) -> bool:
    return _flat_equal(u, v, "fvb", max_length)


def gvb_equal(u: BraidWord, v: BraidWord, max_length: int | None = None) -> bool:
    return _flat_equal(u, v, "gvb", max_length)


# --- FVP_3 ---------------------------------------------------------------------

# a factor is ("ac", p, q) for a^p c^q, or ("b", r, 0) for b^r
Factor = tuple[str, int, int]


@dataclass(frozen=True)
class Zsq:
    """Alternating normal form in ``<a, c | [a, c]> * <b>``."""

    factors: tuple[Factor, ...] = ()

    def __post_init__(self) -> None:
        for k, (kind, p, q) in enumerate(self.factors):
            if kind not in ("ac", "b") or (p, q) == (0, 0) or (kind == "b" and q):
                raise ValueError(f"bad factor {(kind, p, q)}")
            if k and self.factors[k - 1][0] == kind:
                raise ValueError("adjacent factors of the same kind")

    @classmethod
    def from_factors(cls, factors: Iterable[Factor]) -> "Zsq":
        out: list[list] = []
        for kind, p, q in factors:
            if out and out[-1][0] == kind:
                out[-1][1] += p
                out[-1][2] += q
            else:
                out.append([kind, p, q])
            if out[-1][1:] == [0, 0]:
                out.pop()
        return cls(tuple((k, p, q) for k, p, q in out))

    def __mul__(self, other: "Zsq") -> "Zsq":
        return Zsq.from_factors(self.factors + other.factors)

    def inverse(self) -> "Zsq":
        return Zsq(tuple((k, -p, -q) for k, p, q in reversed(self.factors)))

    def is_identity(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for kind, p, q in self.factors:
            parts.append(f"(a^{p} c^{q})" if kind == "ac" else f"b^{p}")
        return " ".join(parts)


_A, _C, _B = Zsq((("ac", 1, 0),)), Zsq((("ac", 0, 1),)), Zsq((("b", 1, 0),))
_LAMBDA_IMAGE = {
    (2, 3): _B,
    (1, 3): _B.inverse() * _A,
    (1, 2): _C.inverse() * _B,
}

LambdaWord = tuple[tuple[int, int, int], ...]  # (i, j, exp) with i<j
_LAMBDA_TOKEN = re.compile(r"^l(\d+),(\d+)(?:\^(-?\d+))?$")


def parse_lambda_word(text: str) -> LambdaWord:
    """Tokens ``l<i>,<j>`` or ``l<i>,<j>^k`` with ``1 <= i < j <= 3``."""
    out = []
    for tok in text.split():
        m = _LAMBDA_TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad lambda token {tok!r}")
        i, j = int(m.group(1)), int(m.group(2))
        exp = int(m.group(3)) if m.group(3) else 1
        if (i, j) not in _LAMBDA_IMAGE:
            raise ParseError(f"lambda_{{{i},{j}}} is not a generator of FVP_3")
        if exp:
            out.append((i, j, exp))
    return tuple(out)


def fvp3_normal_form(w: Sequence[tuple[int, int, int]] | str) -> Zsq:
    word = parse_lambda_word(w) if isinstance(w, str) else w
    result = Zsq()
    for i, j, exp in word:
        g = _LAMBDA_IMAGE[(i, j)]
        if exp < 0:
            g, exp = g.inverse(), -exp
        for _ in range(exp):
            result = result * g
    return result


def lambda_to_braid(w: Sequence[tuple[int, int, int]], n: int = 3) -> BraidWord:
    """Expand ``lambda_{i,j}`` into ``s``/``r`` letters."""
    letters = []
    for i, j, exp in w:
        letters.extend(lambda_word(n, i, j, exp).letters)
    return BraidWord(n, tuple(letters))
