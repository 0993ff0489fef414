"""tau_mu^{r,1} on the paths of weight (4,1,1) cut into blocks (4,2).

Summing q^tau over the paths and dividing by q gives the same polynomial as
the Kostka-Macdonald side at t=1.
"""

from energystats.combinat import distinct_permutations
from energystats.path_stats import INFINITY, tau_mu
from energystats.qtpoly import QTPolynomial
from energystats.verify import verify_conj_main

alpha, mu = (4, 1, 1), (4, 2)
for r in (1, 2, 3, INFINITY):
    gen = QTPolynomial.from_q_exponents(tau_mu(r, mu, w, 3) for w in distinct_permutations(alpha))
    print(f"r={r}: sum q^tau = {gen}")

rep = verify_conj_main(alpha, mu, 2)
print(rep.line())
