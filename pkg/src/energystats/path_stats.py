"""The statistics maj, tau^{r,s} and tau_mu^{r,1} on tensor-product paths.

``maj`` always goes through R-transport and the energy function.  The
ascent-sum closed forms for ``B^{1,1}`` paths are kept separately as
cross-checks and are never used by ``maj``/``tau`` themselves.
"""

from __future__ import annotations

import math
from typing import Sequence

from energystats.crystal import (
    CrystalElement,
    TensorPath,
    highest_element,
    r_and_energy,
    word_to_path,
)

#: Carrier row count meaning "no highest-element prefix": chi(r < a_1) == 0.
INFINITY = math.inf


def right_transport(path: TensorPath, i: int, j: int) -> CrystalElement:
    """``b_j^{(i)}``: factor ``j`` carried leftward past factors ``j-1, ..., i`` (1-based)."""
    if not 1 <= i < j <= len(path):
        raise IndexError(f"need 1 <= i < j <= {len(path)}, got i={i}, j={j}")
    x = path[j - 1]
    for k in range(j - 1, i - 1, -1):
        x = r_and_energy(path[k - 1], x)[0]
    return x


def maj(path: TensorPath) -> int:
    """``sum_{i<j} H(b_i (x) b_j^{(i+1)})``."""
    total = 0
    for j in range(1, len(path)):
        x = path[j]
        for i in range(j - 1, -1, -1):
            x, _, h = r_and_energy(path[i], x)
            total += h
    return total


def _alphabet(path: TensorPath, N: int | None, default: int = 1) -> int:
    if N is not None:
        return N
    return max((b.N for b in path), default=default)


def tau(r: int | float, s: int, path: TensorPath, N: int | None = None) -> int:
    """``maj(u_s^{(r)} (x) path)``; ``r = INFINITY`` drops the prefix."""
    if r == INFINITY:
        return maj(path)
    N = _alphabet(path, N, int(r))
    if path and any(b.N != N for b in path):
        raise ValueError("path factors must share the alphabet bound")
    return maj((highest_element(int(r), s, N),) + tuple(path))


def _blocks(seq: Sequence, mu: Sequence[int]) -> list:
    if sum(mu) != len(seq):
        raise ValueError(f"composition {tuple(mu)} does not cut a path of length {len(seq)}")
    out, start = [], 0
    for m in mu:
        out.append(seq[start:start + m])
        start += m
    return out


def tau_word(r: int | float, word: Sequence[int], N: int | None = None) -> int:
    """``tau^{r,1}`` of a ``B^{1,1}`` path given as a word of letters."""
    word = tuple(word)
    if N is None:
        N = max(word, default=1)
    if r != INFINITY:
        N = max(N, int(r))
    return tau(r, 1, word_to_path(word, N), N)


def tau_mu(r: int | float, mu: Sequence[int], word: Sequence[int], N: int | None = None) -> int:
    """``sum_i tau^{r,1}`` over the blocks of ``word`` cut by the composition ``mu``."""
    word = tuple(word)
    if N is None:
        N = max(word, default=1)
    return sum(tau_word(r, block, N) for block in _blocks(word, mu))


def maj_word(word: Sequence[int], N: int | None = None) -> int:
    word = tuple(word)
    return maj(word_to_path(word, N or max(word, default=1)))


# -- closed forms (cross-checks only) ---------------------------------------


def maj_closed_form(word: Sequence[int]) -> int:
    """``sum_{i=1}^{L-1} (L-i) chi(a_i < a_{i+1})``."""
    L = len(word)
    return sum(L - i for i in range(1, L) if word[i - 1] < word[i])


def tau_closed_form(r: int | float, word: Sequence[int]) -> int:
    """``L chi(r < a_1) + maj``."""
    if not word:
        return 0
    return len(word) * (r < word[0]) + maj_closed_form(word)


def tau_mu_closed_form(r: int | float, mu: Sequence[int], word: Sequence[int]) -> int:
    return sum(tau_closed_form(r, block) for block in _blocks(tuple(word), mu))
