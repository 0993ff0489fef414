"""Crystal energy statistics, box-ball dynamics and modified Macdonald polynomials."""

from energystats.combinat import (
    conjugate,
    enumerate_paths,
    enumerate_ssyt,
    insert_word,
    inverse_bump,
    kostka_number,
    partitions,
    row_insert,
    row_word,
)
from energystats.crystal import (
    CrystalElement,
    combinatorial_R,
    energy,
    highest_element,
    weight,
)
from energystats.path_stats import INFINITY, maj, right_transport, tau, tau_mu
from energystats.qtpoly import QTPolynomial

__version__ = "0.1.0"
