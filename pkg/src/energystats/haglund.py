"""The inv and maj statistics on paths, via tabloids and via row-pair formulas.

A path is laid into a tabloid of shape ``mu`` block by block, each block
written right-to-left into its row.  The tabloid description is the one the
Macdonald code uses; the row-pair ("path language") formulas are kept as an
independent cross-check.
"""

from __future__ import annotations

from typing import Sequence

from energystats.path_stats import maj_closed_form

Tabloid = tuple[tuple[int, ...], ...]


def path_to_tabloid(p: Sequence, mu: Sequence[int]) -> Tabloid:
    if sum(mu) != len(p):
        raise ValueError(f"path of length {len(p)} does not fill shape {tuple(mu)}")
    rows, start = [], 0
    for m in mu:
        rows.append(tuple(reversed(p[start:start + m])))
        start += m
    return tuple(rows)


def tabloid_to_path(t: Tabloid) -> tuple:
    return tuple(x for row in t for x in reversed(row))


def inv_cell(t: Tabloid, i: int, j: int) -> int:
    """Entries in the attacking region of cell ``(i, j)`` (0-based) exceeding it.

    The region is the cells left of it in its own row and the cells strictly
    right of it in the row below.
    """
    x = t[i][j]
    count = sum(1 for k in range(j) if t[i][k] > x)
    if i + 1 < len(t):
        count += sum(1 for k in range(j + 1, len(t[i + 1])) if t[i + 1][k] > x)
    return count


def inv_abs(t: Tabloid) -> int:
    return sum(inv_cell(t, i, j) for i in range(len(t)) for j in range(len(t[i])))


def descents(t: Tabloid) -> list[tuple[int, int]]:
    """Cells (0-based) strictly larger than the entry directly above them."""
    return [
        (i, j)
        for i in range(1, len(t))
        for j in range(len(t[i]))
        if j < len(t[i - 1]) and t[i - 1][j] < t[i][j]
    ]


def des(t: Tabloid) -> int:
    """Sum of arm lengths over descents."""
    return sum(len(t[i]) - j - 1 for i, j in descents(t))


def columns(t: Tabloid) -> list[tuple[int, ...]]:
    width = max((len(row) for row in t), default=0)
    return [tuple(row[j] for row in t if j < len(row)) for j in range(width)]


def tabloid_maj(t: Tabloid) -> int:
    return sum(maj_closed_form(col) for col in columns(t))


def inv_mu(p: Sequence[int], mu: Sequence[int]) -> int:
    t = path_to_tabloid(p, mu)
    return inv_abs(t) - des(t)


def maj_mu(p: Sequence[int], mu: Sequence[int]) -> int:
    return tabloid_maj(path_to_tabloid(p, mu))


def inv_maj(p: Sequence[int], mu: Sequence[int]) -> tuple[int, int]:
    t = path_to_tabloid(p, mu)
    return inv_abs(t) - des(t), tabloid_maj(t)


# -- path language ----------------------------------------------------------


def inv_path_language(a1: Sequence[int], a2: Sequence[int]) -> int:
    """Row-pair inversion count; ``a2`` is left-padded with 1s to the length of ``a1``."""
    m = len(a1)
    if len(a2) > m:
        raise ValueError("first row must be at least as long as the second")
    a = tuple(a1) + (1,) * (m - len(a2)) + tuple(a2)
    return sum(1 for k in range(m) for i in range(k + 1, k + m) if a[k] < a[i])


def des_path_language(a1: Sequence[int], a2: Sequence[int]) -> int:
    m1, m2 = len(a1), len(a2)
    if m2 > m1:
        raise ValueError("first row must be at least as long as the second")
    a = tuple(a1) + tuple(a2)
    # 1-based k runs over m1-m2+1 .. m1
    return sum(
        k - (m1 - m2) - 1
        for k in range(m1 - m2 + 1, m1 + 1)
        if a[k - 1] < a[k - 1 + m2]
    )


def _row_blocks(p: Sequence[int], mu: Sequence[int]) -> list[tuple[int, ...]]:
    if sum(mu) != len(p):
        raise ValueError(f"path of length {len(p)} does not fill shape {tuple(mu)}")
    out, start = [], 0
    for m in mu:
        out.append(tuple(p[start:start + m]))
        start += m
    return out + [()]


def inv_abs_path_language(p: Sequence[int], mu: Sequence[int]) -> int:
    """Row-pair sum including the last row against an empty row (weakly decreasing ``mu``)."""
    blocks = _row_blocks(p, mu)
    return sum(inv_path_language(blocks[i], blocks[i + 1]) for i in range(len(mu)))


def des_path_language_total(p: Sequence[int], mu: Sequence[int]) -> int:
    blocks = _row_blocks(p, mu)
    return sum(des_path_language(blocks[i], blocks[i + 1]) for i in range(len(mu)))


# -- highest weight ---------------------------------------------------------


def is_highest_weight(p: Sequence[int]) -> bool:
    """Every prefix holds at least as many ``i`` as ``i+1``, for all ``i``."""
    counts: dict[int, int] = {}
    for x in p:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def is_highest_weight_reversed(p: Sequence[int]) -> bool:
    """The same ballot condition read from the right end of the path."""
    return is_highest_weight(tuple(reversed(p)))
