"""Invariants of fused links presented as braid closures."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .braidword import BraidWord, underlying_permutation
from .errors import DomainError
from .nilpotent import NilpotentElement, format_nil
from .purify import PurifyResult, component_labels, purify
from .representations import phi_of_word
from .uvb import UvbNormalForm, to_word

__all__ = [
    "ComponentPartition",
    "GroupPresentation",
    "TwoComponentClass",
    "closure_components",
    "link_group_presentation",
    "classify_two_component",
    "linking_matrix",
    "fk_equivalent",
    "gamma_presentation",
]


@dataclass(frozen=True)
class ComponentPartition:
    strands: int
    labels: tuple[int, ...]  # strand -> least strand of its component

    @property
    def count(self) -> int:
        return len(set(self.labels))

    def components(self) -> list[tuple[int, ...]]:
        groups: dict[int, list[int]] = {}
        for s, lab in enumerate(self.labels, start=1):
            groups.setdefault(lab, []).append(s)
        return [tuple(v) for _, v in sorted(groups.items())]


def closure_components(w: BraidWord) -> ComponentPartition:
    return ComponentPartition(w.strands, tuple(component_labels(underlying_permutation(w))))


@dataclass(frozen=True)
class GroupPresentation:
    """Generators ``x1..xn`` of a class-2 nilpotent presentation.

    ``relators[i-1]`` is ``phi(beta)(x_i) * x_i^-1``; the nilpotency relators
    ``[x_i, [x_k, x_l]] = 1`` are implied by ``nilpotent_class2``.
    """

    generators: tuple[str, ...]
    relators: tuple[NilpotentElement, ...]
    nilpotent_class2: bool = True
    tag: str | None = None

    def relator_strings(self) -> list[str]:
        return [format_nil(r, root=i) for i, r in enumerate(self.relators, start=1)]

    def __str__(self) -> str:
        rels = [s for s in self.relator_strings() if s != "1"]
        if self.nilpotent_class2:
            rels.append("[xi,[xk,xl]] (all i,k,l)")
        text = f"< {', '.join(self.generators)} | {'; '.join(rels)} >"
        return f"{self.tag} = {text}" if self.tag else text


def link_group_presentation(w: BraidWord | UvbNormalForm) -> GroupPresentation:
    """The fused link group of the closure, presented on the braid's strands."""
    if isinstance(w, UvbNormalForm):
        w = to_word(w)
    n = w.strands
    f = phi_of_word(w)
    relators = tuple(
        f.image(i) * NilpotentElement.generator(n, i, -1) for i in range(1, n + 1)
    )
    return GroupPresentation(tuple(f"x{i}" for i in range(1, n + 1)), relators)


def gamma_presentation(gamma: int) -> str:
    order = "t central" if gamma == 0 else f"t^{gamma} = 1, t central"
    return f"G_gamma({gamma}) = < x1, x2, t | [x1,x2] = t, {order} >"


class TwoComponentClass(NamedTuple):
    gamma: int
    vlk: tuple[int, int]
    presentation: str


def classify_two_component(w: BraidWord | PurifyResult) -> TwoComponentClass:
    """``gamma = gcd(vlk_12, vlk_21)`` for a two-component closure (``gcd(0, 0) = 0``)."""
    res = w if isinstance(w, PurifyResult) else purify(w)
    if res.strands != 2:
        raise DomainError(f"closure has {res.strands} components, expected 2")
    eps = res.vlk
    gamma = math.gcd(eps[0][1], eps[1][0])
    return TwoComponentClass(gamma, (eps[0][1], eps[1][0]), gamma_presentation(gamma))


def linking_matrix(w: BraidWord | PurifyResult) -> list[list[Fraction]]:
    """Classical linking numbers ``(vlk_ij + vlk_ji) / 2`` between closure components."""
    res = w if isinstance(w, PurifyResult) else purify(w)
    eps = res.vlk
    c = len(eps)
    return [[Fraction(eps[i][j] + eps[j][i], 2) for j in range(c)] for i in range(c)]


def fk_equivalent(u: BraidWord, v: BraidWord, *, labeled: bool = True) -> bool:
    """Fused equivalence of closures with classical crossings only.

    Such links are determined by pairwise linking numbers.  With
    ``labeled=False`` the components may be matched by any bijection.
    """
    for w in (u, v):
        if not w.is_classical():
            raise DomainError(f"word {w} has virtual letters")
    lu, lv = linking_matrix(u), linking_matrix(v)
    if len(lu) != len(lv):
        return False
    if labeled:
        return lu == lv
    c = len(lu)
    return any(
        all(lu[p[i]][p[j]] == lv[i][j] for i in range(c) for j in range(c))
        for p in itertools.permutations(range(c))
    )
