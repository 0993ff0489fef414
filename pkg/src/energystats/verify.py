"""Both-sides computations for the path/Macdonald identities, and exhaustive sweeps.

Every check returns a :class:`Report` carrying both polynomials, so a failing
case can be inspected rather than just counted.  Sweeps may fan out over a
process pool (``ENERGYSTATS_WORKERS``); results always come back in
parameter order.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from energystats.boxball import evolve_ballmoving, evolve_carrier_word, tau_by_dynamics
from energystats.combinat import (
    as_composition,
    as_partition,
    conjugate,
    enumerate_paths,
    kostka_number,
    partitions,
)
from energystats.haglund import maj_mu
from energystats.macdonald import (
    hhl_conditions,
    kostka_macdonald,
    kostka_macdonald_hw,
    schur_expansion,
)
from energystats.path_stats import INFINITY, tau_mu, tau_word
from energystats.qtpoly import QTPolynomial

WORKERS_ENV = "ENERGYSTATS_WORKERS"


@dataclass
class Report:
    name: str
    params: dict
    lhs: QTPolynomial
    rhs: QTPolynomial
    equal: bool
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.extra.get("ok", self.equal)

    def to_json(self) -> dict:
        out = {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
            "params": {"check": self.name, **self.params},
        }
        out.update(self.extra)
        return out

    def line(self) -> str:
        params = " ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name} {params} lhs={self.lhs} rhs={self.rhs}"


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(str(x) for x in v) + ")"
    return str(v)


def _r_label(r) -> str | int:
    return "inf" if r == INFINITY else int(r)


def weighted_kostka_sum(alpha: Sequence[int], mu: Sequence[int]) -> QTPolynomial:
    """``sum_eta K_{eta,alpha} K~_{eta,mu}(q,1)``."""
    total = QTPolynomial()
    for eta, k_tilde in schur_expansion(mu).items():
        k = kostka_number(eta, alpha)
        if k:
            total = total + k_tilde.eval_t1() * k
    return total


def verify_thm_main(alpha: Sequence[int], mu: Sequence[int]) -> Report:
    """``sum_{P(alpha)} q^{maj_{mu'}}`` against ``sum_eta K_{eta,alpha} K_{eta,mu}(q,1)``."""
    alpha, mu = as_composition(alpha), as_partition(mu)
    mu_c = conjugate(mu)
    lhs = QTPolynomial.from_q_exponents(maj_mu(p, mu_c) for p in enumerate_paths(alpha))
    rhs = weighted_kostka_sum(alpha, mu)
    return Report("thm-main", {"alpha": list(alpha), "mu": list(mu)}, lhs, rhs, lhs == rhs)


def verify_conj_main(alpha: Sequence[int], mu: Sequence[int], r=INFINITY) -> Report:
    """``q^{-sum_{i>r} alpha_i} sum_{P(alpha)} q^{tau_mu^{r,1}}`` against the same right side."""
    alpha, mu = as_composition(alpha), as_partition(mu)
    N = max(len(alpha), 1) if r == INFINITY else max(len(alpha), int(r))
    shift = 0 if r == INFINITY else sum(alpha[int(r):])
    raw = QTPolynomial.from_q_exponents(tau_mu(r, mu, p, N) for p in enumerate_paths(alpha))
    rhs = weighted_kostka_sum(alpha, mu)
    params = {"alpha": list(alpha), "mu": list(mu), "r": _r_label(r)}
    low = raw.min_q_exponent()
    if low is not None and low < shift:
        return Report("conj-main", params, raw, rhs, False,
                      {"q_shift": -shift, "negative_powers": True})
    lhs = raw.shift_q(-shift)
    return Report("conj-main", params, lhs, rhs, lhs == rhs, {"q_shift": -shift})


def verify_hhl_kosmac(lam: Sequence[int], mu: Sequence[int]) -> Report:
    """Highest-weight inv/maj sum against ``K~_{lam,mu}``."""
    lam, mu = as_partition(lam), as_partition(mu)
    lhs = kostka_macdonald_hw(lam, mu)
    rhs = kostka_macdonald(lam, mu)
    return Report("hhl-kosmac", {"lambda": list(lam), "mu": list(mu)}, lhs, rhs, lhs == rhs)


def check_conjecture_hhl_kostka(lam: Sequence[int], mu: Sequence[int]) -> Report:
    """The conjecture predicts ``conditions_hold == formulas_agree``."""
    lam, mu = as_partition(lam), as_partition(mu)
    lhs = kostka_macdonald_hw(lam, mu)
    rhs = kostka_macdonald(lam, mu)
    agree = lhs == rhs
    cond = hhl_conditions(lam, mu)
    return Report(
        "conj-hhl-kostka",
        {"lambda": list(lam), "mu": list(mu)},
        lhs,
        rhs,
        agree,
        {"conditions_hold": cond, "formulas_agree": agree, "ok": cond == agree},
    )


def _count_report(name: str, params: dict, checked: int, mismatches: list) -> Report:
    return Report(
        name,
        params,
        QTPolynomial.monomial(c=checked) if checked else QTPolynomial(),
        QTPolynomial.monomial(c=checked - len(mismatches)) if checked > len(mismatches) else QTPolynomial(),
        not mismatches,
        {"checked": checked, "mismatches": mismatches[:20]},
    )


def verify_prop_bbs(length: int, alphabet: int) -> Report:
    """Carrier ``T_L^{(1)}`` against the ball-moving rule on every word of this length."""
    bad, checked = [], 0
    for w in product(range(1, alphabet + 1), repeat=length):
        checked += 1
        if evolve_carrier_word(w, length, alphabet) != evolve_ballmoving(w):
            bad.append("".join(map(str, w)))
    return _count_report("prop-bbs", {"length": length, "alphabet": alphabet}, checked, bad)


def verify_tau_dynamics(length: int, alphabet: int) -> Report:
    """Ball count over ``L`` time steps against ``tau^{1,1}`` on every word of this length."""
    bad, checked = [], 0
    for w in product(range(1, alphabet + 1), repeat=length):
        checked += 1
        if tau_by_dynamics(w) != tau_word(1, w, alphabet):
            bad.append("".join(map(str, w)))
    return _count_report("tau-dynamics", {"length": length, "alphabet": alphabet}, checked, bad)


# -- sweeps -----------------------------------------------------------------


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _call(job):
    fn, args = job
    return fn(*args)


def run_jobs(jobs: list[tuple[Callable, tuple]], progress: bool = False) -> list[Report]:
    workers = _workers()
    out: list[Report] = []
    every = max(1, len(jobs) // 10)

    def note(k: int, rep: Report) -> None:
        if progress and (k % every == 0 or k == len(jobs)):
            print(f"[{k}/{len(jobs)}] {rep.name}", file=sys.stderr)

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = pool.map(_call, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            for k, rep in enumerate(results, 1):
                out.append(rep)
                note(k, rep)
    else:
        for k, job in enumerate(jobs, 1):
            out.append(_call(job))
            note(k, out[-1])
    return out


def thm_main_jobs(max_size: int, max_parts: int = 4) -> list:
    return [
        (verify_thm_main, (alpha, mu))
        for n in range(1, max_size + 1)
        for mu in partitions(n)
        for alpha in partitions(n)
        if len(alpha) <= max_parts
    ]


def conj_main_jobs(max_size: int, rs: Iterable = (1, 2, 3, INFINITY)) -> list:
    return [
        (verify_conj_main, (alpha, mu, r))
        for r in rs
        for n in range(1, max_size + 1)
        for mu in partitions(n)
        for alpha in partitions(n)
    ]


def hhl_kosmac_jobs(max_size: int) -> list:
    return [
        (verify_hhl_kosmac, (lam, mu))
        for n in range(1, max_size + 1)
        for mu in partitions(n)
        if mu[0] <= 2
        for lam in partitions(n)
    ]


def conj_hhl_kostka_jobs(max_size: int) -> list:
    return [
        (check_conjecture_hhl_kostka, (lam, mu))
        for n in range(1, max_size + 1)
        for mu in partitions(n)
        for lam in partitions(n)
    ]


def prop_bbs_jobs(max_size: int, alphabet: int = 4) -> list:
    return [(verify_prop_bbs, (L, alphabet)) for L in range(1, max_size + 1)]


def tau_dynamics_jobs(max_size: int, alphabet: int = 4) -> list:
    return [(verify_tau_dynamics, (L, alphabet)) for L in range(1, max_size + 1)]


def dump_reports(reports: Sequence[Report]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=1, sort_keys=True)
