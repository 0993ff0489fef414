"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 an identity check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from energystats import boxball, haglund, macdonald, path_stats, verify
from energystats.combinat import (
    as_composition,
    as_partition,
    format_word,
    kostka_number,
    parse_parts,
    parse_word,
)
from energystats.crystal import (
    combinatorial_R,
    energy,
    parse_element,
    word_to_path,
)
from energystats.path_stats import INFINITY


class UsageError(ValueError):
    pass


def _parse_r(text: str):
    if text.lower() in ("inf", "infinity", "oo"):
        return INFINITY
    r = int(text)
    if r < 1:
        raise UsageError(f"r must be positive or 'inf', got {text}")
    return r


def _parse_path(items: Sequence[str]):
    """A path is either one word of letters or a sequence of ``tableau@r,s,N`` elements."""
    if len(items) == 1 and "@" not in items[0] and "/" not in items[0]:
        w = parse_word(items[0])
        return word_to_path(w, max(w)), w
    path = tuple(parse_element(x) for x in items)
    if len({b.N for b in path}) > 1:
        raise UsageError("all factors must share the alphabet bound N")
    return path, None


def cmd_rmatrix(args) -> int:
    left, right = combinatorial_R(parse_element(args.b), parse_element(args.b2))
    print(f"{left} {right}")
    return 0


def cmd_energy(args) -> int:
    print(energy(parse_element(args.b), parse_element(args.b2)))
    return 0


def cmd_maj(args) -> int:
    path, _ = _parse_path(args.path)
    print(path_stats.maj(path))
    return 0


def cmd_tau(args) -> int:
    r = _parse_r(args.r)
    path, word = _parse_path(args.path)
    if args.mu is not None:
        if word is None:
            raise UsageError("--mu needs a path of single letters")
        print(path_stats.tau_mu(r, parse_parts(args.mu), word, args.alphabet))
    elif word is not None and args.s == 1:
        print(path_stats.tau_word(r, word, args.alphabet))
    else:
        print(path_stats.tau(r, args.s, path))
    return 0


def cmd_bbs(args) -> int:
    w = parse_word(args.path)
    method = "carrier" if args.carrier else "ballmoving"
    for state in boxball.trajectory(w, args.steps, method):
        print(format_word(state, max(w)))
    return 0


def cmd_haglund(args) -> int:
    w = parse_word(args.path)
    inv, maj = haglund.inv_maj(w, parse_parts(args.mu))
    print(f"inv_mu={inv} maj_mu={maj}")
    return 0


def cmd_macdonald(args) -> int:
    mu = as_partition(parse_parts(args.mu))
    expansion = macdonald.modified_macdonald(mu, args.alphabet)
    if args.json:
        print(json.dumps({",".join(map(str, a)): p.to_json() for a, p in expansion.items()}, sort_keys=True))
    else:
        for alpha, poly in expansion.items():
            print(f"m[{','.join(map(str, alpha))}]: {poly}")
    return 0


def cmd_kostka_macdonald(args) -> int:
    lam = as_partition(parse_parts(args.lam))
    mu = as_partition(parse_parts(args.mu))
    poly = macdonald.kostka_macdonald_hw(lam, mu) if args.hw else macdonald.kostka_macdonald(lam, mu)
    print(json.dumps(poly.to_json()) if args.json else poly)
    return 0


def cmd_kostka(args) -> int:
    print(kostka_number(as_partition(parse_parts(args.eta)), as_composition(parse_parts(args.alpha))))
    return 0


def _verify_jobs(args) -> list:
    kind, n = args.check, args.max_size
    if kind == "thm-main":
        return verify.thm_main_jobs(n, args.max_parts)
    if kind == "conj-main":
        rs = [_parse_r(x) for x in args.r.split(",")]
        return verify.conj_main_jobs(n, rs)
    if kind == "hhl-kosmac":
        return verify.hhl_kosmac_jobs(n)
    if kind == "conj-hhl-kostka":
        return verify.conj_hhl_kostka_jobs(n)
    if kind == "prop-bbs":
        return verify.prop_bbs_jobs(n, args.alphabet or 4)
    if kind == "tau-dynamics":
        return verify.tau_dynamics_jobs(n, args.alphabet or 4)
    raise UsageError(f"unknown check {kind}")


def cmd_verify(args) -> int:
    reports = verify.run_jobs(_verify_jobs(args), progress=True)
    if args.json:
        print(verify.dump_reports(reports))
    else:
        for rep in reports:
            print(rep.line())
    failed = sum(not r.ok for r in reports)
    print(f"{args.check}: {len(reports) - failed}/{len(reports)} passed", file=sys.stderr)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(verify.dump_reports(reports))
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="energystats", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rmatrix", help="combinatorial R of b (x) b2")
    p.add_argument("b")
    p.add_argument("b2")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("energy", help="energy H(b (x) b2)")
    p.add_argument("b")
    p.add_argument("b2")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("maj", help="maj of a path")
    p.add_argument("path", nargs="+")
    p.set_defaults(func=cmd_maj)

    p = sub.add_parser("tau", help="tau^{r,s} or tau_mu^{r,1}")
    p.add_argument("--r", required=True, help="positive integer or 'inf'")
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--mu", help="composition cutting the path, e.g. 10,10")
    p.add_argument("--alphabet", type=int)
    p.add_argument("path", nargs="+")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("bbs", help="box-ball evolution")
    bsub = p.add_subparsers(dest="action", required=True)
    e = bsub.add_parser("evolve")
    e.add_argument("--steps", type=int, required=True)
    e.add_argument("--carrier", action="store_true", help="use the crystal carrier instead of ball moving")
    e.add_argument("path")
    e.set_defaults(func=cmd_bbs)

    p = sub.add_parser("haglund", help="inv_mu and maj_mu of a path")
    p.add_argument("--mu", required=True)
    p.add_argument("path")
    p.set_defaults(func=cmd_haglund)

    p = sub.add_parser("macdonald", help="monomial expansion of H~_mu")
    p.add_argument("--mu", required=True)
    p.add_argument("--alphabet", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("kostka-macdonald", help="K~_{lambda,mu}(q,t)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--hw", action="store_true", help="highest-weight path sum instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kostka_macdonald)

    p = sub.add_parser("kostka", help="Kostka number K_{eta,alpha}")
    p.add_argument("eta")
    p.add_argument("alpha")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("verify", help="exhaustive identity sweeps")
    p.add_argument(
        "check",
        choices=["thm-main", "conj-main", "hhl-kosmac", "conj-hhl-kostka", "prop-bbs", "tau-dynamics"],
    )
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--r", default="1,2,3,inf", help="comma list of carrier rows for conj-main")
    p.add_argument("--max-parts", type=int, default=4, help="parts of alpha for thm-main")
    p.add_argument("--alphabet", type=int, help="alphabet for prop-bbs / tau-dynamics (default 4)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="also write the JSON reports here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
