"""Rectangular crystals ``B^{r,s}`` of type A, the combinatorial R-matrix and energy.

R is computed from the insertion tableau ``Y = (b2 <- row(b))``: the cells of
``Y`` outside its upper-left ``s^r`` rectangle are peeled off in vertical
strips of height ``r2`` by inverse bumping, the ejected letters build the new
left factor and what remains is the new right factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from energystats.combinat import (
    Cell,
    Composition,
    Tableau,
    as_tableau,
    format_tableau,
    insert_word,
    inverse_bump,
    parse_tableau,
    row_word,
    shape,
    tableau_weight,
)


class RMatrixError(RuntimeError):
    """Raised when the R-matrix result fails its own insertion check."""


@dataclass(frozen=True)
class CrystalElement:
    tableau: Tableau
    r: int
    s: int
    N: int

    def __post_init__(self):
        if shape(self.tableau) != (self.s,) * self.r:
            raise ValueError(
                f"tableau {self.tableau} is not an {self.r}x{self.s} rectangle"
            )
        as_tableau(self.tableau, self.N)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], N: int) -> CrystalElement:
        t = as_tableau(rows, N)
        return cls(t, len(t), len(t[0]), N)

    @classmethod
    def letter(cls, a: int, N: int) -> CrystalElement:
        return cls(((a,),), 1, 1, N)

    @property
    def kind(self) -> tuple[int, int]:
        return (self.r, self.s)

    def __str__(self) -> str:
        return f"{format_tableau(self.tableau)}@{self.r},{self.s},{self.N}"


TensorPath = tuple[CrystalElement, ...]


def parse_element(text: str) -> CrystalElement:
    """Parse ``"1,1,4/2,3,6@2,3,6"``; the ``@r,s,N`` suffix is optional only for N."""
    body, _, suffix = text.strip().partition("@")
    if suffix:
        fields = [int(x) for x in suffix.split(",")]
        if len(fields) != 3:
            raise ValueError(f"expected @r,s,N suffix, got {suffix!r}")
        r, s, N = fields
        el = CrystalElement(parse_tableau(body, N), r, s, N)
    else:
        t = parse_tableau(body)
        el = CrystalElement(t, len(t), len(t[0]), max(max(row) for row in t))
    return el


def word_to_path(word: Sequence[int], N: int) -> TensorPath:
    return tuple(CrystalElement.letter(a, N) for a in word)


def path_to_word(path: TensorPath) -> tuple[int, ...]:
    if any(b.kind != (1, 1) for b in path):
        raise ValueError("path has factors other than B^{1,1}")
    return tuple(b.tableau[0][0] for b in path)


def highest_element(r: int, s: int, N: int) -> CrystalElement:
    """The rectangle whose i-th row is filled with i."""
    if r > N:
        raise ValueError(f"r={r} exceeds alphabet bound N={N}")
    return CrystalElement(tuple((i,) * s for i in range(1, r + 1)), r, s, N)


def weight(x: CrystalElement | Sequence[CrystalElement]) -> Composition:
    if isinstance(x, CrystalElement):
        return tableau_weight(x.tableau, x.N)
    if not x:
        return ()
    N = x[0].N
    total = [0] * N
    for b in x:
        for i, c in enumerate(weight(b)):
            total[i] += c
    return tuple(total)


def _strip_sequence(lengths: list[int], r: int, s: int, height: int) -> list[Cell]:
    """Pick the uppermost removable vertical strip of ``height`` cells outside ``s^r``.

    Returns its cells bottom-to-top, the order in which they are inverse-bumped.
    """

    def frame(i: int) -> int:
        return s if i < r else 0

    candidates = [i for i in range(len(lengths)) if lengths[i] > frame(i)]
    for rows in combinations(candidates, height):
        new = list(lengths)
        for i in rows:
            new[i] -= 1
        if all(new[i] >= new[i + 1] for i in range(len(new) - 1)):
            return [(i + 1, lengths[i]) for i in reversed(rows)]
    raise RMatrixError(f"no vertical {height}-strip outside {s}^{r} in shape {lengths}")


@lru_cache(maxsize=1 << 16)
def _rmatrix(b: CrystalElement, b2: CrystalElement) -> tuple[CrystalElement, CrystalElement, int]:
    if b.N != b2.N:
        raise ValueError(f"alphabet mismatch: {b.N} vs {b2.N}")
    N = b.N
    Y = insert_word(b2.tableau, row_word(b.tableau))

    frame = [0] * max(b.r, b2.r)
    for i in range(b.r):
        frame[i] += b.s
    for i in range(b2.r):
        frame[i] += b2.s
    H = sum(max(0, ln - (frame[i] if i < len(frame) else 0)) for i, ln in enumerate(shape(Y)))

    cur = Y
    ejected = []
    for _ in range(b2.s):
        for cell in _strip_sequence(list(shape(cur)), b.r, b.s, b2.r):
            cur, u = inverse_bump(cur, cell)
            ejected.append(u)
    if shape(cur) != (b.s,) * b.r:
        raise RMatrixError(f"residual shape {shape(cur)} is not {b.s}^{b.r}")
    left_t = insert_word((), reversed(ejected))
    if shape(left_t) != (b2.s,) * b2.r:
        raise RMatrixError(f"ejected word builds shape {shape(left_t)}, not {b2.s}^{b2.r}")
    left = CrystalElement(left_t, b2.r, b2.s, N)
    right = CrystalElement(cur, b.r, b.s, N)
    if insert_word(right.tableau, row_word(left.tableau)) != Y:
        raise RMatrixError(f"insertion identity fails for {b} (x) {b2}")
    return left, right, H


def combinatorial_R(b: CrystalElement, b2: CrystalElement) -> tuple[CrystalElement, CrystalElement]:
    """``b (x) b2  ->  b2~ (x) b~`` with ``b2~`` of the shape of ``b2``."""
    left, right, _ = _rmatrix(b, b2)
    return left, right


def energy(b: CrystalElement, b2: CrystalElement) -> int:
    """Cells of ``(b2 <- row(b))`` outside the row-wise concatenation of both rectangles."""
    return _rmatrix(b, b2)[2]


def r_and_energy(b: CrystalElement, b2: CrystalElement) -> tuple[CrystalElement, CrystalElement, int]:
    return _rmatrix(b, b2)
