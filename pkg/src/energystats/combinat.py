"""Partitions, compositions, words and semistandard tableaux.

Tableaux are stored row-major as tuples of tuples (top row first), so the
empty tableau is ``()``.  Cells are addressed 1-based as ``(row, column)``.
Every value here is an immutable tuple, which keeps them hashable for the
caches used further up the stack.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
Cell = tuple[int, int]


# -- partitions ----------------------------------------------------------


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def as_composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be nonnegative: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n,)`` first.

    Reverse-lex refines dominance, so anything dominating ``lam`` appears
    before it.
    """
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def n_statistic(mu: Sequence[int]) -> int:
    """``n(mu) = sum_i (i-1) mu_i``."""
    return sum(i * p for i, p in enumerate(mu))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def is_hook(lam: Sequence[int]) -> bool:
    return len(lam) <= 1 or all(p == 1 for p in lam[1:])


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam``."""
    lam_c = conjugate(lam)
    hooks = prod(
        (lam[i] - j - 1) + (lam_c[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    return factorial(sum(lam)) // hooks


def multinomial(parts: Sequence[int]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


# -- tableaux --------------------------------------------------------------


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def is_tableau(t: Sequence[Sequence[int]], N: int | None = None) -> bool:
    """Row-weak, column-strict, rows weakly shortening, entries in 1..N."""
    if any(len(row) == 0 for row in t):
        return False
    if not is_partition([len(row) for row in t]):
        return False
    for i, row in enumerate(t):
        if any(x < 1 or (N is not None and x > N) for x in row):
            return False
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i > 0 and any(t[i - 1][j] >= row[j] for j in range(len(row))):
            return False
    return True


def as_tableau(rows: Iterable[Iterable[int]], N: int | None = None) -> Tableau:
    t = tuple(tuple(int(x) for x in row) for row in rows)
    t = tuple(row for row in t if row)
    if not is_tableau(t, N):
        raise ValueError(f"not a semistandard tableau (N={N}): {t}")
    return t


def row_word(t: Tableau) -> Word:
    """Rows concatenated from the bottom row up to the top row."""
    return tuple(x for row in reversed(t) for x in row)


def tableau_weight(t: Tableau, N: int) -> Composition:
    counts = [0] * N
    for row in t:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def _check_letter(x: int, N: int | None) -> None:
    if x < 1 or (N is not None and x > N):
        raise ValueError(f"letter {x} outside alphabet 1..{N}")


def row_insert(t: Tableau, x: int, N: int | None = None) -> tuple[Tableau, Cell]:
    """Schensted row insertion ``(t <- x)``; returns the new tableau and new cell."""
    _check_letter(x, N)
    rows = [list(row) for row in t]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return tuple(tuple(r) for r in rows), (i + 1, 1)
        row = rows[i]
        # leftmost entry strictly greater than x
        j = next((k for k, y in enumerate(row) if y > x), None)
        if j is None:
            row.append(x)
            return tuple(tuple(r) for r in rows), (i + 1, len(row))
        row[j], x = x, row[j]
        i += 1


def insert_word(t: Tableau, w: Iterable[int], N: int | None = None) -> Tableau:
    for x in w:
        t, _ = row_insert(t, x, N)
    return t


def insert_word_with_cells(
    t: Tableau, w: Iterable[int], N: int | None = None
) -> tuple[Tableau, list[Cell]]:
    cells = []
    for x in w:
        t, c = row_insert(t, x, N)
        cells.append(c)
    return t, cells


def is_corner(t: Tableau, cell: Cell) -> bool:
    i, j = cell
    if not (1 <= i <= len(t)) or len(t[i - 1]) != j:
        return False
    return i == len(t) or len(t[i]) < j


def inverse_bump(t: Tableau, cell: Cell) -> tuple[Tableau, int]:
    """Undo a row insertion that created ``cell``; returns ``(t', u)`` with ``(t' <- u) == t``."""
    if not is_corner(t, cell):
        raise ValueError(f"not a corner: {cell}")
    rows = [list(row) for row in t]
    i, _ = cell
    x = rows[i - 1].pop()
    if not rows[i - 1]:
        rows.pop()
    for k in range(i - 2, -1, -1):
        row = rows[k]
        # rightmost entry strictly less than x
        j = max(m for m, y in enumerate(row) if y < x)
        row[j], x = x, row[j]
    return tuple(tuple(r) for r in rows), x


# -- enumeration -----------------------------------------------------------


def _horizontal_strips(inner: list[int], outer: Sequence[int], k: int) -> Iterator[list[int]]:
    """Shapes ``nu`` with ``inner <= nu <= outer`` and ``nu/inner`` a horizontal k-strip."""

    def rec(i: int, left: int, acc: list[int]) -> Iterator[list[int]]:
        if i == len(outer):
            if left == 0:
                yield acc
            return
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for add in range(min(left, cap - inner[i]), -1, -1):
            yield from rec(i + 1, left - add, acc + [inner[i] + add])

    yield from rec(0, k, [])


def enumerate_ssyt(
    lam: Sequence[int], content: Sequence[int], N: int | None = None
) -> list[Tableau]:
    """All SSYT of shape ``lam`` whose letter ``i`` appears ``content[i-1]`` times."""
    lam = tuple(lam)
    content = tuple(content)
    if N is not None and any(c for c in content[N:]):
        return []
    if sum(lam) != sum(content):
        return []
    out: list[Tableau] = []

    def rec(letter: int, cur: list[int], rows: list[list[int]]) -> None:
        if letter > len(content):
            out.append(tuple(tuple(r) for r in rows))
            return
        for nu in _horizontal_strips(cur, lam, content[letter - 1]):
            new_rows = [r + [letter] * (nu[i] - cur[i]) for i, r in enumerate(rows)]
            rec(letter + 1, nu, new_rows)

    rec(1, [0] * len(lam), [[] for _ in lam])
    return sorted(out)


@lru_cache(maxsize=None)
def _kostka(eta: Partition, alpha: Composition) -> int:
    return len(enumerate_ssyt(eta, alpha))


def kostka_number(eta: Sequence[int], alpha: Sequence[int]) -> int:
    eta, alpha = tuple(eta), tuple(alpha)
    if sum(eta) != sum(alpha):
        raise ValueError(f"size mismatch: |{eta}| != |{alpha}|")
    return _kostka(eta, alpha)


def distinct_permutations(counts: Sequence[int]) -> Iterator[Word]:
    """Words with ``counts[i-1]`` copies of letter ``i``, in lexicographic order."""
    counts = list(counts)
    n = sum(counts)
    word: list[int] = []

    def rec() -> Iterator[Word]:
        if len(word) == n:
            yield tuple(word)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word.append(i + 1)
                yield from rec()
                word.pop()
                counts[i] += 1

    yield from rec()


@lru_cache(maxsize=None)
def _paths(alpha: Composition) -> tuple[Word, ...]:
    return tuple(distinct_permutations(alpha))


def enumerate_paths(alpha: Sequence[int]) -> list[Word]:
    """All ``B^{1,1}`` paths of weight ``alpha``."""
    return list(_paths(as_composition(alpha)))


def all_words(length: int, N: int) -> Iterator[Word]:
    from itertools import product

    return product(range(1, N + 1), repeat=length)


# -- text formats ----------------------------------------------------------


def format_tableau(t: Tableau) -> str:
    return "/".join(",".join(str(x) for x in row) for row in t)


def parse_tableau(text: str, N: int | None = None) -> Tableau:
    text = text.strip()
    if not text:
        return ()
    return as_tableau(
        ([int(x) for x in row.split(",") if x.strip()] for row in text.split("/")), N
    )


def format_word(w: Sequence[int], N: int | None = None) -> str:
    bound = N if N is not None else max(w, default=0)
    if bound <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if "," in text:
        w = tuple(int(x) for x in text.split(","))
    else:
        w = tuple(int(c) for c in text)
    if any(x < 1 for x in w):
        raise ValueError(f"letters must be positive: {text!r}")
    return w


def parse_parts(text: str) -> tuple[int, ...]:
    """``"4,2"`` or ``"42"`` style part lists."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(c) for c in text)
