"""Reduce a braid closure to the closure of a pure braid, one strand at a time.

Each step is a closure-preserving move on the normal form ``P * iota(perm)``:

1. conjugate by a virtual word so that the largest moved strand sits at
   position ``m`` and ``perm(m) = m - 1``;
2. drop the ``{m-1, m}`` pair block: both strands lie on one closure
   component, and self-crossings of a component can be virtualised;
3. write ``P_m * iota(perm) = rho_{m-1} * tau(P_m) * iota(tau * perm)`` where
   ``P_m`` collects the blocks touching strand ``m`` and ``tau = (m-1 m)``;
4. rotate the closed word so the lone ``rho_{m-1}`` is last and remove it by
   virtual destabilisation.

Components are labelled by their least strand in the input word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .braidword import (
    BraidWord,
    Letter,
    Permutation,
    cycle_word,
    format_word,
    lambda_canonical,
    underlying_permutation,
)
from .errors import PurifyConsistencyError
from .uvb import UvbNormalForm, conjugate_by_perm, normal_form, relabel_pure, vlk_of_nf

__all__ = ["PurifyStep", "PurifyResult", "VlkTable", "purify", "aggregated_vlk", "component_labels"]


class PurifyStep(NamedTuple):
    move: str
    params: dict

    def __str__(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.move} {args}".rstrip()

    def to_json(self) -> dict:
        return {"move": self.move, **self.params}


@dataclass(frozen=True)
class PurifyResult:
    pure: UvbNormalForm
    components: tuple[int, ...]  # component label of each output strand
    trace: tuple[PurifyStep, ...] = field(default=())

    @property
    def strands(self) -> int:
        return self.pure.n

    @property
    def vlk(self) -> list[list[int]]:
        return vlk_of_nf(self.pure)


class VlkTable(NamedTuple):
    labels: tuple[int, ...]
    matrix: list[list[int]]


def component_labels(perm: Permutation) -> list[int]:
    """Least strand of the cycle through each strand."""
    labels = [0] * perm.n
    for cyc in perm.cycles():
        for x in cyc:
            labels[x - 1] = min(cyc)
    return labels


def _virtual_str(letters: tuple[Letter, ...], n: int) -> str:
    return format_word(BraidWord(n, letters)) or "1"


def _conjugate(x: UvbNormalForm, labels: list[int], s: Permutation, steps: list, word: str):
    x = conjugate_by_perm(x, s)
    new_labels = [0] * len(labels)
    for t, lab in enumerate(labels, start=1):
        new_labels[s(t) - 1] = lab
    steps.append(PurifyStep("conjugate", {"by": word, "relabel": str(s)}))
    return x, new_labels


def _eliminate_last_strand(
    x: UvbNormalForm, labels: list[int], steps: list
) -> tuple[UvbNormalForm, list[int]]:
    m = x.n
    if x.perm(m) != m - 1:
        raise PurifyConsistencyError(f"strand {m} is not followed by strand {m - 1}")
    if labels[m - 2] != labels[m - 1]:
        raise PurifyConsistencyError(
            f"strands {m - 1} and {m} lie on different components"
        )
    block = x.pair_word(m - 1, m)
    if block:
        steps.append(PurifyStep("delete_block", {"pair": f"{m - 1},{m}", "letters": len(block)}))
    tau = Permutation.transposition(m, m - 1, m)
    touching = [(p, w) for p, w in x.pure if m in p and p != (m - 1, m)]
    rest = [(p, w) for p, w in x.pure if m not in p]
    moved = relabel_pure(touching, tau)
    new_perm = tau * x.perm
    shifted = relabel_pure(rest, new_perm)
    pure: dict = {}
    for part in (moved, shifted):
        for p, w in part.items():
            pure[p] = pure.get(p, ()) + w
    if touching:
        steps.append(PurifyStep("relabel", {"strand": m, "to": m - 1}))
    reduced = UvbNormalForm.from_pairs(m - 1, pure, new_perm.restrict(m - 1))
    steps.append(PurifyStep("destabilize", {"strands": m - 1}))
    return reduced, labels[: m - 1]


def purify(w: BraidWord | UvbNormalForm) -> PurifyResult:
    """A pure braid on one strand per closure component, with the moves used."""
    x = w if isinstance(w, UvbNormalForm) else normal_form(w)
    labels = component_labels(x.perm)
    if x.is_pure:
        return PurifyResult(x, tuple(labels), ())
    if len(set(labels)) == 1:
        return PurifyResult(UvbNormalForm.identity(1), (1,), (PurifyStep("knot", {}),))

    steps: list[PurifyStep] = []
    while not x.perm.is_identity():
        m = x.n
        k = max(t for t in range(1, m + 1) if x.perm(t) != t)
        if k != m:
            shift = underlying_permutation(BraidWord(m, cycle_word(m, 1)))
            c = Permutation.identity(m)
            for _ in range(m - k):
                c = c * shift
            # W^-1 alpha W with W = s_{m,1}^{m-k} relabels by c^-1, sending k to m
            word = BraidWord(m, cycle_word(m, 1) * (m - k)).inverse()
            x, labels = _conjugate(x, labels, c.inverse(), steps, _virtual_str(word.letters, m))
        p = x.perm(m)
        if p != m - 1:
            s = underlying_permutation(BraidWord(m, cycle_word(m - 1, p)))
            x, labels = _conjugate(x, labels, s, steps, _virtual_str(cycle_word(m - 1, p), m))
        x, labels = _eliminate_last_strand(x, labels, steps)

    order = sorted(range(1, x.n + 1), key=lambda t: labels[t - 1])
    if order != list(range(1, x.n + 1)):
        s = Permutation(tuple(order)).inverse()
        x, labels = _conjugate(x, labels, s, steps, _virtual_str(lambda_canonical(s), x.n))
    return PurifyResult(x, tuple(labels), tuple(steps))


def aggregated_vlk(w: BraidWord) -> VlkTable:
    """Virtual linking numbers of the closure, read directly off the crossings.

    ``sigma_i`` counts ``-1`` with the strand at position ``i`` passing over the
    one at ``i + 1``; ``sigma_i^-1`` counts ``+1`` with the strand at ``i + 1``
    over.  Crossings of a component with itself are skipped.
    """
    labels = component_labels(underlying_permutation(w))
    comps = sorted(set(labels))
    where = {lab: idx for idx, lab in enumerate(comps)}
    mat = [[0] * len(comps) for _ in comps]
    images = list(range(1, w.strands + 1))
    for let in w.letters:
        i = let.index
        if let.gen == "s":
            left, right = images[i - 1], images[i]
            over, under, sign = (left, right, -1) if let.exp > 0 else (right, left, 1)
            co, cu = where[labels[over - 1]], where[labels[under - 1]]
            if co != cu:
                mat[co][cu] += sign
        images[i - 1], images[i] = images[i], images[i - 1]
    return VlkTable(tuple(comps), mat)
