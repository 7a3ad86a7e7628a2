"""Relation suites and pinned examples, runnable without pytest."""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple

from .braidword import BraidWord, parse_word
from .coxeter import coxeter_system_fh, coxeter_system_gh, tits_reduce
from .fused import classify_two_component
from .quotients import fvb_equal, fvp3_normal_form, fwb_equal, gvb_equal, lambda_to_braid
from .relations import f2_relations, relations_for
from .representations import phi_of_word, psi_equal, psi_of_word
from .uvb import uvb_equal, vlk_matrix

__all__ = ["Check", "EQUALITY", "relation_suite", "pinned_examples", "run_selftest"]


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


EQUALITY: dict[str, Callable[[BraidWord, BraidWord], bool]] = {
    "uvb": uvb_equal,
    "wb": psi_equal,
    "fwb": fwb_equal,
    "fvb": fvb_equal,
    "gvb": gvb_equal,
}


def relation_suite(model: str, max_n: int = 6) -> Check:
    failed = []
    total = 0
    for n in range(2, max_n + 1):
        for rel in relations_for(model, n):
            total += 1
            if not EQUALITY[model](rel.lhs, rel.rhs):
                failed.append(f"{rel.name}@n={n}")
    return Check(f"relations[{model}] n<={max_n}", not failed, f"{total - len(failed)}/{total}")


def phi_suite(max_n: int = 6) -> Check:
    failed = []
    total = 0
    for n in range(2, max_n + 1):
        for rel in relations_for("uvb", n):
            total += 1
            if not phi_of_word(rel.lhs * rel.rhs.inverse()).is_identity():
                failed.append(f"{rel.name}@n={n}")
    return Check(f"phi kills UVB relators n<={max_n}", not failed, f"{total - len(failed)}/{total}")


def _w(text: str, n: int) -> BraidWord:
    return parse_word(text, n)


def pinned_examples() -> Iterator[Check]:
    yield Check("vlk(s1 r1 s1^-1 r1)", vlk_matrix(_w("s1 r1 s1^-1 r1", 2)) == [[0, -1], [1, 0]])
    yield Check("vlk(empty 2-braid)", vlk_matrix(_w("", 2)) == [[0, 0], [0, 0]])
    yield Check("F2 holds in UVB_3", uvb_equal(_w("r2 s1 s2", 3), _w("s1 s2 r1", 3)))
    yield Check("F2 fails in WB_3", not psi_equal(_w("r2 s1 s2", 3), _w("s1 s2 r1", 3)))
    f2 = f2_relations(3)[0]
    images = psi_of_word(f2.lhs * f2.rhs.inverse())
    yield Check("psi(F2 relator) is not the identity", not images.is_identity(), str(images))
    for text, gamma in (("", 0), ("s1 s1", 1), ("s1 r1 s1^-1 r1", 1)):
        got = classify_two_component(_w(text, 2)).gamma
        yield Check(f"gamma({text or 'empty'})", got == gamma, f"got {got}")
    fh3, gh3 = coxeter_system_fh(3), coxeter_system_gh(3)
    yield Check("FH_3 (y1,3 y3,2)^3 = 1", not tits_reduce(fh3, fh3.parse("y1,3 y3,2") * 3))
    yield Check("GH_3 (y1,2 y1,3)^3 = 1", not tits_reduce(gh3, gh3.parse("y1,2 y1,3") * 3))
    relator = ((1, 2, -1), (2, 3, 1), (1, 3, 1), (1, 2, 1), (2, 3, -1), (1, 3, -1))
    yield Check(
        "FVP_3 relator is trivial",
        fvp3_normal_form(relator).is_identity()
        and fvb_equal(lambda_to_braid(relator), BraidWord(3, ())),
    )


def run_selftest(max_n: int = 6) -> list[Check]:
    checks = [relation_suite(m, max_n) for m in EQUALITY]
    checks.append(phi_suite(max_n))
    checks.extend(pinned_examples())
    return checks
