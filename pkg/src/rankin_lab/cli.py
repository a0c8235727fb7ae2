"""Command line interface.

Every command writes one JSON document to stdout.  The exit status is 1
when some verdict is FAIL and 2 for usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from . import charring, cohomology, compat, ktypes, ltheory
from .errors import InfeasibleScale, RankinLabError
from .sampling import random_compatible, random_pure
from .weights import HalfInt, k_eta, pair_kappa, parse_pair, parse_pure, parse_weight

RANDOMIZED = {"3.4", "4.10", "4.11", "coh"}
SWEEPABLE = ("3.4",) + ktypes.LEMMAS + ("coh",)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        if status:
            raise UsageError((message or "").strip() or "usage error")
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _parse_kappa(text: str) -> HalfInt:
    return HalfInt.of(Fraction(text))


def _parse_n_range(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if lo < 2 or hi < lo:
        raise UsageError(f"bad n range {text!r}")
    return list(range(lo, hi + 1))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    def pair_args(p, required=True):
        p.add_argument("--mu", required=required, help='pure weight, e.g. "5,-5;6,-4"')
        p.add_argument("--nu", required=required, help="second pure weight")

    parser = _Parser(prog="rankin-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("critical", parents=[common], help="critical places of pi_mu x pi_nu")
    pair_args(p)

    p = sub.add_parser("compat", parents=[common], help="compatibility windows")
    pair_args(p)

    p = sub.add_parser("vj", parents=[common], help="case label, V_j and l(j)")
    pair_args(p, required=False)
    p.add_argument("--n", type=int)
    p.add_argument("--k-eta", type=int, dest="k_eta")
    p.add_argument("--kappa", help='half-integer such as "1/2" or "3"')
    p.add_argument("--j", type=int, required=True)

    p = sub.add_parser("ktypes", parents=[common], help="distinguished K-types")
    pair_args(p)
    p.add_argument("--j", type=int, help="defaults to the central point")

    p = sub.add_parser("decompose", parents=[common], help="character ring operations")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tensor", nargs=2, metavar="WEIGHT")
    g.add_argument("--oracle-tensor", nargs=2, metavar="WEIGHT", dest="oracle_tensor")
    g.add_argument("--pieri", metavar="WEIGHT")
    g.add_argument("--exterior", nargs=2, type=int, metavar=("N", "K"))
    g.add_argument("--restrict", metavar="PAIR")
    g.add_argument("--invariant", nargs="+", metavar="WEIGHT")
    g.add_argument("--dim", metavar="WEIGHT")
    p.add_argument("--a", type=int, help="Sym power for --pieri")

    p = sub.add_parser("coh", parents=[common], help="cohomology profiles at the central point")
    pair_args(p)
    p.add_argument("--j", type=int)

    p = sub.add_parser("verify", parents=[common], help="check one multiplicity-one lemma")
    p.add_argument("--lemma", required=True, choices=ktypes.LEMMAS + ("3.4",))
    p.add_argument("--n", type=int)
    pair_args(p, required=False)
    p.add_argument("--j", type=int)

    p = sub.add_parser("sweep", parents=[common], help="run verification sweeps")
    p.add_argument("--lemma", action="append", required=True, choices=SWEEPABLE)
    p.add_argument("--n", required=True, help='single n or a range "2..4"')
    p.add_argument("--samples", type=int, default=0, help="randomized instances per lemma")
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="add wall-clock milliseconds")
    return parser


# -- command bodies -------------------------------------------------------------


def cmd_critical(args) -> tuple[dict, bool]:
    mu, nu = parse_pure(args.mu), parse_pure(args.nu)
    return ltheory.critical_places(mu, nu).to_json(), True


def cmd_compat(args) -> tuple[dict, bool]:
    mu, nu = parse_pure(args.mu), parse_pure(args.nu)
    kap = pair_kappa(mu, nu)
    report = compat.verify_lemma_3_4(mu, nu)
    doc = {
        "kappa": kap.to_json(),
        "k_eta": k_eta(mu, nu),
        "cond_b": list(compat.cond_set(mu, nu, "b")),
        "cond_c": list(compat.cond_set(mu, nu, "c")),
        "verdict": compat.compatible(mu, nu) or "false",
        "places": list(report.places),
        "lemma_3_4": report.verdict,
        "central_point": compat.central_point(mu, nu) if kap.is_half_odd else None,
    }
    return doc, report.verdict != "FAIL"


def cmd_vj(args) -> tuple[dict, bool]:
    if args.mu is not None or args.nu is not None:
        if args.mu is None or args.nu is None:
            raise UsageError("--mu and --nu go together")
        mu, nu = parse_pure(args.mu), parse_pure(args.nu)
        case = compat.classify_pair(mu, nu, args.j)
    else:
        if args.n is None or args.k_eta is None or args.kappa is None:
            raise UsageError("give --mu/--nu or all of --n, --k-eta, --kappa")
        case = compat.classify_case(args.n, args.k_eta, _parse_kappa(args.kappa), args.j)
    return case.to_json(), True


def cmd_ktypes(args) -> tuple[dict, bool]:
    mu, nu = parse_pure(args.mu), parse_pure(args.nu)
    j = compat.central_point(mu, nu) if args.j is None else args.j
    d = ktypes.distinguished(mu, nu, j)
    spectrum = ktypes.ij_spectrum(mu, nu, j)
    doc = {"j": j}
    doc.update(d.to_json())
    doc["spectrum"] = {"t": spectrum.t, "m_min": spectrum.m_min}
    return doc, True


def cmd_decompose(args) -> tuple[dict, bool]:
    if args.tensor:
        dec = charring.tensor(parse_weight(args.tensor[0]), parse_weight(args.tensor[1]))
    elif args.oracle_tensor:
        from . import oracle

        dec = oracle.tensor_oracle(parse_weight(args.oracle_tensor[0]), parse_weight(args.oracle_tensor[1]))
    elif args.pieri:
        if args.a is None:
            raise UsageError("--pieri needs --a")
        dec = charring.pieri(parse_weight(args.pieri), args.a)
    elif args.exterior:
        dec = charring.exterior_p(*args.exterior)
    elif args.restrict:
        dec = charring.restrict_to_K(parse_pair(args.restrict))
    elif args.invariant:
        return {"invariant_dim": charring.invariant_dim([parse_weight(w) for w in args.invariant])}, True
    else:
        return {"weyl_dim": charring.weyl_dim(parse_weight(args.dim))}, True
    doc = dec.to_json()
    doc["dim"] = dec.dim()
    return doc, True


def cmd_coh(args) -> tuple[dict, bool]:
    mu, nu = parse_pure(args.mu), parse_pure(args.nu)
    doc, ok = coh_report(mu, nu, args.j)
    return doc, ok


def coh_report(mu, nu, j: Optional[int] = None) -> tuple[dict, bool]:
    n = mu.n
    reduced, full = cohomology.coh_profile_Ij(mu, nu, j)
    j0 = compat.central_point(mu, nu)
    case = compat.classify_pair(mu, nu, j0)
    pi_mu = cohomology.coh_profile_pi(mu)
    pi_nu = cohomology.coh_profile_pi(nu)
    bn, cn = ktypes.b_n(n), ktypes.c_n(n)
    checks = {
        "ij_bottom": all(reduced[d] == 0 for d in range(cn)) and reduced[cn] == 1,
        "pi_bottom": all(p[d] == 0 for p in (pi_mu, pi_nu) for d in range(bn)) and pi_mu[bn] == pi_nu[bn] == 1,
        "pattern_121": cohomology.prop_pattern(full, case.l_j),
    }
    outside = cohomology.outside_pattern(full, case.l_j)
    checks["zero_elsewhere"] = not outside
    total = cohomology.coh_total(mu, nu)
    checks["total"] = total == 1
    doc = {
        "n": n,
        "j": j0,
        "label": case.label,
        "l": case.l_j,
        "pi_mu": pi_mu.to_json(),
        "pi_nu": pi_nu.to_json(),
        "ij_reduced": reduced.to_json(),
        "ij_full": full.to_json(),
        "total": total,
        "checks": checks,
        "outside_pattern": outside,
        "verdict": "PASS" if all(checks.values()) else "FAIL",
    }
    return doc, doc["verdict"] == "PASS"


def cmd_verify(args) -> tuple[dict, bool]:
    mu = parse_pure(args.mu) if args.mu else None
    nu = parse_pure(args.nu) if args.nu else None
    if args.lemma == "3.4":
        if mu is None or nu is None:
            raise UsageError("lemma 3.4 needs --mu and --nu")
        rep = compat.verify_lemma_3_4(mu, nu)
        doc = {"lemma": "3.4", "n": mu.n}
        doc.update(rep.to_json())
        return doc, rep.verdict != "FAIL"
    n = args.n if args.n is not None else (mu.n if mu is not None else None)
    if n is None:
        raise UsageError(f"lemma {args.lemma} needs --n")
    try:
        rep = ktypes.verify_lemma(args.lemma, n, mu, nu, args.j)
    except InfeasibleScale as exc:
        return {"lemma": args.lemma, "n": n, "verdict": "SKIPPED", "reason": str(exc)}, True
    return rep.to_json(), rep.verdict == "PASS"


# -- sweeps ---------------------------------------------------------------------


def _instances(lemma: str, ns: list[int], samples: int, rng: Optional[random.Random]) -> list[tuple]:
    if lemma not in RANDOMIZED:
        return [(lemma, f"n={n}", n, None, None) for n in ns]
    out = []
    for idx in range(samples):
        n = ns[idx % len(ns)]
        if lemma == "3.4":
            mu, nu = random_pure(rng, n), random_pure(rng, n)
        elif lemma == "coh":
            mu, nu = random_compatible(rng, n, -4, 4)
        else:
            mu, nu = random_compatible(rng, n)
        out.append((lemma, f"n={n}#{idx:05d}", n, str(mu), str(nu)))
    return out


def run_instance(inst: tuple) -> dict:
    lemma, key, n, mu_text, nu_text = inst
    doc = {"key": key, "n": n}
    mu = parse_pure(mu_text) if mu_text else None
    nu = parse_pure(nu_text) if nu_text else None
    if mu is not None:
        doc["mu"], doc["nu"] = mu_text, nu_text
    try:
        if lemma == "3.4":
            rep = compat.verify_lemma_3_4(mu, nu)
            scan_ok = ltheory.critical_places(mu, nu).places == ltheory.critical_places_scan(mu, nu)
            doc["verdict"] = rep.verdict if scan_ok else "FAIL"
            if not scan_ok:
                doc["reason"] = "closed-form interval differs from the exhaustive scan"
        elif lemma == "coh":
            report, _ = coh_report(mu, nu)
            doc["verdict"] = report["verdict"]
            doc["checks"] = report["checks"]
        else:
            rep = ktypes.verify_lemma(lemma, n, mu, nu)
            doc["verdict"] = rep.verdict
            doc["multiplicities"] = rep.multiplicities
    except InfeasibleScale as exc:
        doc["verdict"] = "SKIPPED"
        doc["reason"] = str(exc)
    return doc


def sweep(
    lemmas: Sequence[str],
    ns: Sequence[int],
    samples: int = 0,
    seed: Optional[int] = None,
    workers: int = 1,
    timing: bool = False,
) -> dict:
    """Deterministic aggregated report; instance order is canonical."""
    if any(l in RANDOMIZED for l in lemmas) and seed is None:
        raise UsageError("randomized sweeps need --seed")
    report = {"seed": seed, "n": list(ns), "lemmas": []}
    for lemma in lemmas:
        rng = random.Random(f"{seed}:{lemma}") if seed is not None else None
        insts = _instances(lemma, list(ns), samples, rng)
        start = time.perf_counter()
        if workers > 1 and len(insts) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(run_instance, insts, chunksize=8))
        else:
            results = [run_instance(i) for i in insts]
        elapsed = time.perf_counter() - start
        results.sort(key=lambda d: (d["n"], d["key"]))
        summary = {"PASS": 0, "FAIL": 0, "SKIPPED": 0, "vacuous": 0}
        for r in results:
            v = r["verdict"]
            if v == "vacuous-PASS":
                summary["PASS"] += 1
                summary["vacuous"] += 1
            else:
                summary[v] += 1
        entry = {"lemma": lemma, "summary": summary, "instances": results}
        if timing:
            entry["wall_ms"] = int(elapsed * 1000)
        report["lemmas"].append(entry)
    return report


def cmd_sweep(args) -> tuple[dict, bool]:
    ns = _parse_n_range(args.n)
    doc = sweep(args.lemma, ns, args.samples, args.seed, args.workers, args.timing)
    ok = all(entry["summary"]["FAIL"] == 0 for entry in doc["lemmas"])
    return doc, ok


COMMANDS = {
    "critical": cmd_critical,
    "compat": cmd_compat,
    "vj": cmd_vj,
    "ktypes": cmd_ktypes,
    "decompose": cmd_decompose,
    "coh": cmd_coh,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def _pretty(doc, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(_pretty(x, indent) if isinstance(x, (dict, list)) else f"{pad}- {json.dumps(x)}" for x in doc)
    return f"{pad}{json.dumps(doc)}"


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def run(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
        doc, ok = COMMANDS[args.command](args)
    except (UsageError, RankinLabError, ValueError) as exc:
        msg = " ".join(str(exc).split()) or type(exc).__name__
        err.write(f"rankin-lab: error: {msg}\n")
        return 2
    out.write((_pretty(doc) if args.pretty else dumps(doc)) + "\n")
    return 0 if ok else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
