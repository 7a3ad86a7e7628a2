"""Independent reference implementations used to check the library."""

from __future__ import annotations

from itertools import combinations

from uvbraid.coxeter import CoxeterSystem


def collect_gamma3(rank: int, letters) -> tuple[tuple[int, ...], dict]:
    """Collect a free-group word modulo gamma_3 by adjacent swaps.

    ``letters`` are nonzero ints (``-k`` is ``x_k^-1``).  Moving ``x_j^e`` past
    ``x_i^f`` with ``j > i`` leaves the central factor ``[x_i, x_j]^(-e f)``.
    Returns the abelian exponents and ``{(i, j): b_ij}`` for ``i < j``.
    """
    word = [(abs(x), 1 if x > 0 else -1) for x in letters]
    b = {p: 0 for p in combinations(range(1, rank + 1), 2)}
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            (j, e), (i, f) = word[k], word[k + 1]
            if j > i:
                word[k], word[k + 1] = word[k + 1], word[k]
                b[(i, j)] -= e * f
                changed = True
    a = [0] * rank
    for g, e in word:
        a[g - 1] += e
    return tuple(a), b


class ReflectionOracle:
    """Exact Tits reflection representation of a Coxeter system.

    With ``2B(e_s, e_t) = -2 cos(pi / m)`` equal to ``-1`` (m = 3), ``0`` (m = 2)
    or ``-2`` (m = inf) every entry is an integer.  The representation is
    faithful, so matrices identify group elements.  Matrices are flattened
    row-major tuples.
    """

    def __init__(self, system: CoxeterSystem):
        self.k = k = len(system.labels)
        self.two_b = [[2 if s == t else {2: 0, 3: -1}.get(system.order(s, t), -2) for t in range(k)]
                      for s in range(k)]
        self.identity = tuple(int(r == c) for r in range(k) for c in range(k))

    def times(self, mat: tuple[int, ...], s: int) -> tuple[int, ...]:
        """``mat`` right-multiplied by the reflection ``s``."""
        k, row = self.k, self.two_b[s]
        out = list(mat)
        for r in range(k):
            x = mat[r * k + s]
            if x:
                for c in range(k):
                    out[r * k + c] -= x * row[c]
        return tuple(out)

    def element(self, word) -> tuple[int, ...]:
        mat = self.identity
        for s in word:
            mat = self.times(mat, s)
        return mat

    def ball(self, radius: int) -> dict:
        """Breadth-first enumeration: element -> length, for lengths up to ``radius``."""
        seen = {self.identity: 0}
        frontier = [self.identity]
        for length in range(1, radius + 1):
            nxt = []
            for mat in frontier:
                for s in range(self.k):
                    m2 = self.times(mat, s)
                    if m2 not in seen:
                        seen[m2] = length
                        nxt.append(m2)
            frontier = nxt
        return seen
