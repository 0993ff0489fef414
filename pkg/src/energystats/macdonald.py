"""Modified Macdonald polynomials from inv/maj sums, and Kostka-Macdonald extraction.

The monomial coefficient of ``m_alpha`` in ``H~_mu`` is the inv/maj generating
function over paths of weight ``alpha``.  Schur coefficients ``K~_{lam,mu}``
follow by back-substitution against the Kostka matrix, which is unitriangular
in reverse-lexicographic order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from energystats.combinat import (
    Partition,
    as_composition,
    as_partition,
    enumerate_paths,
    is_hook,
    kostka_number,
    partitions,
)
from energystats.haglund import inv_maj, is_highest_weight
from energystats.qtpoly import QTPolynomial

MonomialExpansion = dict[Partition, QTPolynomial]


@lru_cache(maxsize=None)
def _hhl_coefficient(mu: Partition, alpha: tuple[int, ...]) -> QTPolynomial:
    return QTPolynomial.from_exponents(inv_maj(p, mu) for p in enumerate_paths(alpha))


def hhl_monomial_coefficient(mu: Sequence[int], alpha: Sequence[int]) -> QTPolynomial:
    """``sum_{p in P(alpha)} q^{inv_mu(p)} t^{maj_mu(p)}``."""
    mu, alpha = as_partition(mu), as_composition(alpha)
    if sum(mu) != sum(alpha):
        raise ValueError(f"size mismatch: |{mu}| != |{alpha}|")
    return _hhl_coefficient(mu, alpha)


def modified_macdonald(mu: Sequence[int], n: int | None = None) -> MonomialExpansion:
    """Monomial expansion of ``H~_mu`` restricted to ``m_alpha`` with at most ``n`` parts."""
    mu = as_partition(mu)
    size = sum(mu)
    n = size if n is None else n
    return {
        alpha: _hhl_coefficient(mu, alpha)
        for alpha in partitions(size)
        if len(alpha) <= n
    }


@lru_cache(maxsize=None)
def _schur_expansion(mu: Partition) -> dict[Partition, QTPolynomial]:
    parts = partitions(sum(mu))
    out: dict[Partition, QTPolynomial] = {}
    # dominance-larger shapes come first, so every K~_eta needed below is known
    for alpha in parts:
        acc = _hhl_coefficient(mu, alpha)
        for eta in out:
            k = kostka_number(eta, alpha)
            if k:
                acc = acc - out[eta] * k
        if kostka_number(alpha, alpha) != 1:
            raise ArithmeticError(f"Kostka matrix not unitriangular at {alpha}")
        out[alpha] = acc
    return out


def schur_expansion(mu: Sequence[int]) -> dict[Partition, QTPolynomial]:
    """``{lam: K~_{lam,mu}(q,t)}`` over all ``lam`` of size ``|mu|``."""
    return dict(_schur_expansion(as_partition(mu)))


def kostka_macdonald(lam: Sequence[int], mu: Sequence[int]) -> QTPolynomial:
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _schur_expansion(mu)[lam]


@lru_cache(maxsize=None)
def _kostka_macdonald_hw(lam: Partition, mu: Partition, convention: Callable) -> QTPolynomial:
    return QTPolynomial.from_exponents(
        inv_maj(p, mu) for p in enumerate_paths(lam) if convention(p)
    )


def kostka_macdonald_hw(
    lam: Sequence[int], mu: Sequence[int], convention: Callable = is_highest_weight
) -> QTPolynomial:
    """inv/maj generating function over the highest-weight paths of weight ``lam``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _kostka_macdonald_hw(lam, mu, convention)


def hhl_conditions(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``(mu_1 <= 3 and mu_2 <= 2) or lam is a hook``."""
    mu1 = mu[0] if mu else 0
    mu2 = mu[1] if len(mu) > 1 else 0
    return (mu1 <= 3 and mu2 <= 2) or is_hook(lam)
