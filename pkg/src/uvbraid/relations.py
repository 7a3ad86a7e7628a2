"""Defining relations of the virtual braid group and its quotients, as word pairs."""

from __future__ import annotations

from typing import NamedTuple

from .braidword import BraidWord, Letter, rho, sigma

__all__ = ["Relation", "vb_relations", "relations_for"]


class Relation(NamedTuple):
    name: str
    lhs: BraidWord
    rhs: BraidWord


def _rel(name: str, n: int, lhs: list[Letter], rhs: list[Letter]) -> Relation:
    return Relation(name, BraidWord(n, tuple(lhs)), BraidWord(n, tuple(rhs)))


def _far_pairs(n: int):
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                yield i, j


def vb_relations(n: int) -> list[Relation]:
    """(R1)-(R6) and (M), every index instance on ``n`` strands."""
    s, r = sigma, rho
    out = []
    for i in range(1, n - 1):
        out.append(_rel(f"R1[{i}]", n, [s(i), s(i + 1), s(i)], [s(i + 1), s(i), s(i + 1)]))
    for i, j in _far_pairs(n):
        out.append(_rel(f"R2[{i},{j}]", n, [s(i), s(j)], [s(j), s(i)]))
    for i in range(1, n - 1):
        out.append(_rel(f"R3[{i}]", n, [r(i), r(i + 1), r(i)], [r(i + 1), r(i), r(i + 1)]))
    for i, j in _far_pairs(n):
        out.append(_rel(f"R4[{i},{j}]", n, [r(i), r(j)], [r(j), r(i)]))
    for i in range(1, n):
        out.append(_rel(f"R5[{i}]", n, [r(i), r(i)], []))
    for i, j in _far_pairs(n):
        out.append(_rel(f"R6[{i},{j}]", n, [s(i), r(j)], [r(j), s(i)]))
    for i in range(1, n - 1):
        out.append(_rel(f"M[{i}]", n, [r(i), r(i + 1), s(i)], [s(i + 1), r(i), r(i + 1)]))
    return out


def f1_relations(n: int) -> list[Relation]:
    return [
        _rel(f"F1[{i}]", n, [rho(i), sigma(i + 1), sigma(i)], [sigma(i + 1), sigma(i), rho(i + 1)])
        for i in range(1, n - 1)
    ]


def f2_relations(n: int) -> list[Relation]:
    return [
        _rel(f"F2[{i}]", n, [rho(i + 1), sigma(i), sigma(i + 1)], [sigma(i), sigma(i + 1), rho(i)])
        for i in range(1, n - 1)
    ]


def quadratic_relations(n: int) -> list[Relation]:
    return [_rel(f"Q[{i}]", n, [sigma(i), sigma(i)], []) for i in range(1, n)]


def gauss_relations(n: int) -> list[Relation]:
    return [_rel(f"G[{i}]", n, [sigma(i), rho(i)], [rho(i), sigma(i)]) for i in range(1, n)]


def relations_for(model: str, n: int) -> list[Relation]:
    """All defining relations of ``model`` in ``{"vb", "wb", "uvb", "fvb", "fwb", "gvb"}``."""
    base = vb_relations(n)
    if model == "vb":
        return base
    if model == "wb":
        return base + f1_relations(n)
    if model == "uvb":
        return base + f1_relations(n) + f2_relations(n)
    if model == "fvb":
        return base + quadratic_relations(n)
    if model == "fwb":
        return base + quadratic_relations(n) + f1_relations(n)
    if model == "gvb":
        return base + quadratic_relations(n) + gauss_relations(n)
    raise ValueError(f"unknown model {model!r}")
