"""Box-ball dynamics two ways: a carrier sweep and the ball-moving rule.

The number of balls still away from their resting places, summed over the
first L time steps, reproduces tau^{1,1}.
"""

from energystats.boxball import ball_count, trajectory
from energystats.path_stats import tau_word

start = (4, 3, 1, 1, 2, 1, 1, 1, 1, 1)
L = len(start)

for carrier, moved in zip(trajectory(start, L - 1, "carrier"), trajectory(start, L - 1, "ballmoving")):
    assert carrier == moved
    print("".join(map(str, moved)), ball_count(moved))

total = sum(ball_count(state) for state in trajectory(start, L - 1))
print("balls summed over", L, "steps:", total)
print("tau^{1,1}:", tau_word(1, start))
