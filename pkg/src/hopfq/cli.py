"""Command-line driver: named verification suites, sign-table exports,
and the structure-constant extraction.

    hopfq check <suite> [--n N] [--json] [--out PATH] [--parallel]
                [--deterministic]
    hopfq table (F|phi|R|psi) [--n N] [--format csv|json] [--out PATH]
    hopfq g2 [--n N] [--out PATH]

Exit codes: 0 all checks passed (or vacuous/skipped), 1 at least one
check failed, 2 usage or configuration error.  Reports are deterministic:
fixed sweep orders, first-witness-only failures; --deterministic also
drops timings so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coquasi, diffcalc, grouptables, hopfquasi, loops, qdeform
from .report import Report

COCHAIN_CHECKS = (
    "unital", "sign-valued", "diagonal-minus-one",
    "phi-linear-independence", "rho-linear-independence",
    "phi-shift-invariance", "rho-shift-invariance", "phi-symmetric",
)


def _suite_cochain(n):
    T = grouptables.cochain_build(n)
    rep = grouptables.verify_cochain_identities(T, names=COCHAIN_CHECKS)
    rep.suite = "cochain"
    return rep


def _suite_composition(n):
    T = grouptables.cochain_build(n)
    names = grouptables.COMPOSITION_CHECKS + (
        "phi-3-cocycle", "psi-case-table", "psi-derivation-rule")
    rep = grouptables.verify_cochain_identities(T, names=names)
    rep.suite = "composition"
    return rep


def _suite_loop(n):
    T = grouptables.cochain_build(n)
    G = loops.build_gn(T)
    rep = Report("loop", n)
    rep.extend(loops.loop_check(G))
    rep.extend(loops.associator_suite(G))
    rep.extend(loops.signed_basis_associator(T))
    assoc, witness = loops.is_associative(G)
    if n <= 2:
        rep.add("associator-trivial", assoc, witness)
    else:
        rep.add("associator-nontrivial", not assoc,
                "loop is associative" if assoc else None)
    for m in (2, 4):
        sub = loops.check_cyclic_twist(T, m)
        for c in sub.checks:
            c.name = "m%d-%s" % (m, c.name)
        rep.checks.extend(sub.checks)
    return rep


def _suite_sphere_sample(n):
    T = grouptables.cochain_build(n)
    return loops.sampled_sphere_checks(T)


def _suite_hopf_quasigroup(n):
    T = grouptables.cochain_build(n)
    H = hopfquasi.from_loop(loops.build_gn(T))
    rep = hopfquasi.check_hopf_quasigroup(H, deep=True)
    rep.suite, rep.n = "hopf-quasigroup", n
    return rep


def _suite_crossproduct_quasi(n):
    T = grouptables.cochain_build(n)
    H = hopfquasi.from_loop(loops.build_gn(T))
    HX = hopfquasi.cross_product(H, n, hopfquasi.character_action(T))
    rep = hopfquasi.check_hopf_quasigroup(HX, deep=True)
    rep.suite, rep.n = "crossproduct-quasi", n
    rep.add("dimension", HX.dim == (1 << (2 * n + 1)), {"dim": HX.dim})
    return rep


def _suite_coquasigroup(n):
    return coquasi.check_coquasigroup(n)


def _suite_moufang_coquasi(n):
    return coquasi.check_moufang_coquasi(n)


def _suite_coassociator(n):
    return coquasi.check_coassociator(n, deep=True)


def _suite_crossproduct_coquasi(n):
    return coquasi.cross_bounded_check(n)


def _suite_diffcalc(n):
    rep = diffcalc.check_diffcalc(n)
    rep.extend(diffcalc.check_mc(n))
    return rep


def _suite_malcev(n):
    return diffcalc.check_malcev(n)


def _suite_g2(n):
    return diffcalc.check_g2(n)


def _suite_qsu2(n):
    return qdeform.check_qhopf()


def _suite_complexify(n):
    return qdeform.complexify(n)


# name -> (runner, default n, allowed range)
SUITES = {
    "cochain": (_suite_cochain, 3, (0, 8)),
    "composition": (_suite_composition, 3, (0, 6)),
    "loop": (_suite_loop, 3, (0, 4)),
    "sphere-sample": (_suite_sphere_sample, 3, (1, 4)),
    "hopf-quasigroup": (_suite_hopf_quasigroup, 3, (1, 4)),
    "crossproduct-quasi": (_suite_crossproduct_quasi, 3, (1, 3)),
    "coquasigroup": (_suite_coquasigroup, 3, (1, 3)),
    "moufang-coquasi": (_suite_moufang_coquasi, 3, (1, 3)),
    "coassociator": (_suite_coassociator, 3, (1, 3)),
    "crossproduct-coquasi": (_suite_crossproduct_coquasi, 3, (1, 3)),
    "diffcalc": (_suite_diffcalc, 3, (2, 3)),
    "malcev": (_suite_malcev, 3, (2, 3)),
    "g2": (_suite_g2, 3, (2, 3)),
    "qsu2": (_suite_qsu2, None, None),
    "complexify": (_suite_complexify, 2, (1, 3)),
}

SUITE_ORDER = tuple(SUITES)


def run_suite(name, n):
    """Top-level so that --parallel can dispatch to worker processes."""
    runner, default, allowed = SUITES[name]
    if allowed is None:
        return runner(None)
    if n is None:
        n = default
    if not (allowed[0] <= n <= allowed[1]):
        raise ValueError("suite %r runs for %d <= n <= %d"
                         % (name, allowed[0], allowed[1]))
    return runner(n)


def _clamp(n, allowed, default):
    if allowed is None:
        return None
    if n is None:
        return default
    return max(allowed[0], min(allowed[1], n))


def _run_all(n, parallel=False):
    jobs = [(name, _clamp(n, SUITES[name][2], SUITES[name][1]))
            for name in SUITE_ORDER]
    if parallel:
        import concurrent.futures as cf
        with cf.ProcessPoolExecutor() as pool:
            futs = [pool.submit(run_suite, name, nn) for name, nn in jobs]
            return [f.result() for f in futs]
    return [run_suite(name, nn) for name, nn in jobs]


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _table_payload(kind, n, fmt):
    T = grouptables.cochain_build(n)
    if fmt == "csv":
        return {
            "F": grouptables.f_table_csv,
            "R": grouptables.rho_table_csv,
            "phi": grouptables.phi_table_csv,
            "psi": grouptables.psi_table_csv,
        }[kind](T)
    payload = {
        "F": grouptables.f_table_json,
        "R": grouptables.rho_table_json,
        "phi": grouptables.phi_table_json,
        "psi": grouptables.psi_table_json,
    }[kind](T)
    return json.dumps(payload, indent=2)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hopfq",
        description="exact verification suites for twisted group algebras, "
                    "sphere quasigroups and their Hopf-style axioms")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, default=None,
                       help="dimension of the underlying Z_2^n")
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--deterministic", action="store_true",
                       help="omit timings for byte-identical reports")

    pc = sub.add_parser("check", help="run a named verification suite")
    pc.add_argument("suite", help="one of: %s, all" % ", ".join(SUITE_ORDER))
    pc.add_argument("--json", action="store_true", help="JSON report")
    pc.add_argument("--parallel", action="store_true",
                    help="run independent suites in worker processes")
    common(pc)

    pt = sub.add_parser("table", help="print a sign table")
    pt.add_argument("kind", choices=("F", "phi", "R", "psi"))
    pt.add_argument("--format", choices=("csv", "json"), default="csv")
    common(pt)

    pg = sub.add_parser("g2", help="export extracted structure constants")
    common(pg)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else 2

    if args.command == "check":
        name = args.suite
        if name != "all" and name not in SUITES:
            print("unknown suite: %r (expected one of %s, all)"
                  % (name, ", ".join(SUITE_ORDER)), file=sys.stderr)
            return 2
        try:
            if name == "all":
                reports = _run_all(args.n, parallel=args.parallel)
            else:
                # a single suite has nothing to fan out; --parallel is a no-op
                reports = [run_suite(name, args.n)]
        except ValueError as e:
            print(str(e), file=sys.stderr)
            return 2
        ok = all(r.ok for r in reports)
        if args.json:
            if len(reports) == 1:
                payload = reports[0].to_dict(args.deterministic)
            else:
                payload = {"reports": [r.to_dict(args.deterministic)
                                       for r in reports],
                           "ok": ok}
            _emit(json.dumps(payload, indent=2), args.out)
        else:
            chunks = [r.text(args.deterministic) for r in reports]
            if len(reports) > 1:
                chunks.append("== overall: %s" % ("PASS" if ok else "FAIL"))
            _emit("\n".join(chunks), args.out)
        return 0 if ok else 1

    if args.command == "table":
        n = 3 if args.n is None else args.n
        if not (0 <= n <= grouptables.MAX_N):
            print("n out of range [0, %d]" % grouptables.MAX_N,
                  file=sys.stderr)
            return 2
        _emit(_table_payload(args.kind, n, args.format), args.out)
        return 0

    if args.command == "g2":
        n = 3 if args.n is None else args.n
        if n not in (2, 3):
            print("g2 extraction runs at n = 2 or 3", file=sys.stderr)
            return 2
        alg, rank, basis = diffcalc.g2_extract(n)
        _emit(json.dumps(alg.to_json(), indent=2), args.out)
        return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
