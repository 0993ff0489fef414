"""Modified Macdonald polynomials from inv and maj, and their Schur expansion."""

from energystats.combinat import partitions
from energystats.haglund import inv_mu, maj_mu
from energystats.macdonald import kostka_macdonald, kostka_macdonald_hw, modified_macdonald

mu = (2, 1)
for lam, coeff in modified_macdonald(mu, 3).items():
    print(f"H~_{mu}: m_{lam} coefficient {coeff}")

word = (2, 1, 3)
print("inv, maj of", word, "=", inv_mu(word, mu), maj_mu(word, mu))

# for shapes with at most two columns the highest-weight sum gives K~ directly
mu = (2, 2, 1)
for lam in partitions(5):
    k = kostka_macdonald(lam, mu)
    assert k == kostka_macdonald_hw(lam, mu)
    print(f"K~_{lam},{mu} = {k}")
