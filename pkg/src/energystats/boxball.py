"""Box-ball dynamics: the crystal carrier and the ball-moving rule.

Letter 1 is an empty box, a letter ``i >= 2`` is a ball of label ``i``.
States live on a finite window of ``L`` boxes; balls that would land beyond
the window leave it and are not tracked.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from energystats.crystal import (
    CrystalElement,
    TensorPath,
    combinatorial_R,
    highest_element,
    path_to_word,
    word_to_path,
)
from energystats.path_stats import tau_word

Word = tuple[int, ...]


def carrier_sweep(a: int, l: int, path: TensorPath) -> tuple[TensorPath, CrystalElement]:
    """Thread ``u_l^{(a)}`` through ``path``; returns the new path and the final carrier."""
    if not path:
        return (), None
    carrier = highest_element(a, l, path[0].N)
    out = []
    for b in path:
        new_b, carrier = combinatorial_R(carrier, b)
        out.append(new_b)
    return tuple(out), carrier


def evolve_carrier(a: int, l: int, path: TensorPath) -> TensorPath:
    """``T_l^{(a)}``."""
    return carrier_sweep(a, l, path)[0]


def evolve_carrier_word(word: Sequence[int], l: int | None = None, N: int | None = None) -> Word:
    """``T_l^{(1)}`` on a word; ``l`` defaults to the path length, where it has stabilised."""
    word = tuple(word)
    if not word:
        return ()
    N = N or max(max(word), 1)
    l = l or len(word)
    return path_to_word(evolve_carrier(1, l, word_to_path(word, N)))


def evolve_ballmoving(word: Sequence[int]) -> Word:
    """One step of ``T_infinity^{(1)}``: larger labels first, leftmost first, each ball once."""
    L = len(word)
    boxes = list(word)
    moved = [False] * L
    for label in range(max(word, default=1), 1, -1):
        for pos in range(L):
            if boxes[pos] != label or moved[pos]:
                continue
            dest = next((k for k in range(pos + 1, L) if boxes[k] == 1), None)
            boxes[pos] = 1
            if dest is not None:
                boxes[dest] = label
                moved[dest] = True
    return tuple(boxes)


def ball_count(word: Sequence[int]) -> int:
    return sum(1 for x in word if x >= 2)


def trajectory(word: Sequence[int], steps: int, method: str = "ballmoving") -> Iterator[Word]:
    """Yield the state and its next ``steps`` iterates."""
    state = tuple(word)
    step = evolve_ballmoving if method == "ballmoving" else evolve_carrier_word
    yield state
    for _ in range(steps):
        state = step(state)
        yield state


def tau_by_dynamics(word: Sequence[int]) -> int:
    """Balls counted over ``b, T b, ..., T^{L-1} b``."""
    word = tuple(word)
    return sum(ball_count(s) for s in trajectory(word, len(word) - 1)) if word else 0


def tau_check(word: Sequence[int]) -> tuple[int, int]:
    """Ball-count total next to ``tau^{1,1}`` from the crystal side."""
    return tau_by_dynamics(word), tau_word(1, word)
