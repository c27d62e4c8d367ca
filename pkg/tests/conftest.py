import math

import numpy as np

from threeterm.errors import ConfigurationError
from threeterm.measurements import ConcyclicConfig

SQUARE_ALPHA = (math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi)
SQUARE_RADII = (0.25, 0.25, 0.25, 0.25)


def square_config() -> ConcyclicConfig:
    return ConcyclicConfig(SQUARE_ALPHA, SQUARE_RADII)


def random_config(rng: np.random.Generator, r_low=0.01, r_high=0.3,
                  radii=None) -> ConcyclicConfig:
    """Sorted-uniform half-angles and uniform radii, resampled until the
    configuration is valid (strict ordering and pairwise disjoint circles)."""
    while True:
        alpha = np.sort(rng.uniform(0.0, np.pi, size=4))
        r = radii if radii is not None else rng.uniform(r_low, r_high, size=4)
        try:
            return ConcyclicConfig(tuple(alpha), tuple(r))
        except ConfigurationError:
            continue
