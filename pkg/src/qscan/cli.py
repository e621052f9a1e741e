"""Command-line interface: ``qscan {scan,crosscheck,gauss,certify,bernoulli}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .residue import is_prime

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_IRREGULAR = 3
EXIT_INCONCLUSIVE = 4

A2_NOTE = (
    "a2 is the Bernoulli index of an irregular pair (B_a2 = 0 mod p). "
    "With v the smallest primitive root and Q(v^k) = 0 for odd k, "
    "a2 = p - k = p - 1 - 2m."
)


def format_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "csv":
        lines = ["p,v,a2"] + [f"{r['p']},{r['v']},{r['a2']}" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(rows) + "\n"
    return "".join(f"p={r['p']} v={r['v']} a2={r['a2']}\n" for r in rows)


def parse_rows(text: str, fmt: str) -> list[dict]:
    """Inverse of :func:`format_rows`."""
    if fmt == "json":
        return json.loads(text)
    rows = []
    lines = text.splitlines()
    if fmt == "csv":
        for line in lines[1:]:
            p, v, a2 = line.split(",")
            rows.append({"p": int(p), "v": int(v), "a2": int(a2)})
    else:
        for line in lines:
            fields = dict(tok.split("=") for tok in line.split())
            rows.append({k: int(fields[k]) for k in ("p", "v", "a2")})
    return rows


def _default_jobs() -> int:
    return int(os.environ.get("QSCAN_JOBS", "1"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qscan",
        description="Irregular primes via the Stickelberger quotient Q(sigma), "
        "with Bernoulli and Gauss-sum cross-checks.",
        epilog=A2_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("scan", help="list irregular pairs found by the Q scan", epilog=A2_NOTE)
    s.add_argument("--p-max", type=int, required=True)
    s.add_argument("--format", choices=("text", "csv", "json"), default="text")
    s.add_argument("--jobs", type=int, default=None)

    c = sub.add_parser("crosscheck", help="compare the Q scan with Bernoulli numbers mod p")
    c.add_argument("--p-max", type=int, required=True)

    g = sub.add_parser("gauss", help="verify Gauss sum structure and Stickelberger factorisation")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.add_argument(
        "--checks",
        default="structure,power,stickelberger",
        help="comma-separated subset of structure,power,stickelberger (split case only)",
    )

    r = sub.add_parser("certify", help="regularity test over all X in F_p^*")
    r.add_argument("--p", type=int, required=True)

    b = sub.add_parser("bernoulli", help="dump B_n mod p for n = 0..p-3 as CSV")
    b.add_argument("--p", type=int, required=True)
    return parser


def cmd_scan(args, out) -> int:
    from .scan import scan_range

    hits = scan_range(args.p_max, jobs=args.jobs or _default_jobs())
    rows = [{"p": h.p, "v": h.v, "a2": h.a2} for h in hits]
    out.write(format_rows(rows, args.format))
    return EXIT_OK


def cmd_crosscheck(args, out) -> int:
    from .scan import cross_check

    report = cross_check(args.p_max)
    for d in report.discrepancies:
        out.write(f"p={d.p} scan_only={d.scan_only} oracle_only={d.oracle_only}\n")
    out.write(
        f"checked {report.primes_checked} primes <= {args.p_max}: "
        f"{len(report.discrepancies)} discrepancies\n"
    )
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def _line(out, label: str, ok: bool):
    out.write(f"{label}: {'pass' if ok else 'FAIL'}\n")


def cmd_gauss(args, out) -> int:
    from . import gauss

    p, q = args.p, args.q
    checks = {c.strip() for c in args.checks.split(",") if c.strip()}
    out.write(f"p={p} q={q}\n")
    if q % p != 1:
        rec = gauss.gauss_sum_general(p, q)
        out.write(f"case: general (f={rec.f}, N(q)=q^{rec.f})\n")
        _line(out, "g in Z[zeta_p]", rec.diagnostics["in_Zzeta_p"])
        _line(out, f"g*conj(g) = q^{rec.f}", rec.diagnostics["magnitude"])
        return EXIT_OK if rec.diagnostics["magnitude"] else EXIT_DISCREPANCY

    chr = gauss.build_character(p, q)
    rec = gauss.gauss_sum(chr)
    out.write(f"case: split (u={chr.u}, w={chr.w})\n")
    ok = True
    if "structure" in checks:
        s = gauss.structure_check(rec, chr, strict=False)
        _line(out, "g*conj(g) = q", s.magnitude)
        _line(out, "g = -1 mod pi", s.reduces_to_minus_one)
        _line(out, "g_0 = 0 (trace to Q(zeta_p) vanishes)", s.trace_zero)
        _line(out, "g_{u^-k} = g_1 zeta_p^{k rho}", s.geometric_pattern)
        _line(out, "g_1 root of unity", s.g1_root_of_unity)
        out.write(f"rho = {s.rho} (recorded; -v mod p = {s.rho_expected}, "
                  f"{'match' if s.rho_matches else 'differs'})\n")
        ok &= s.ok
    if "power" in checks or "stickelberger" in checks:
        gauss.gauss_power(rec)
        _line(out, "g^p in Z[zeta_p]", True)
        pw = rec.diagnostics["power"]
        out.write(
            f"v_pi(G-1) = {pw.val_G_minus_1}, v_pi(G+1) = {pw.val_G_plus_1}, "
            f"G = {pw.congruence} mod pi^p\n"
        )
    if "stickelberger" in checks:
        st = gauss.stickelberger_check(rec, chr, strict=False)
        vals = ",".join(str(st.valuations[t]) for t in sorted(st.valuations))
        out.write(f"valuations at zeta_p -> w^t, t=1..{p - 1}: {vals}\n")
        _line(out, "valuation multiset = {1..p-1}", st.multiset_ok)
        _line(out, "valuation sum = p(p-1)/2", st.sum_ok)
        _line(out, "valuation at w^t equals t", st.labeled_ok)
        _line(out, "|N(G)| = q^(p(p-1)/2)", st.norm_ok)
        _line(out, "G*conj(G) = q^p", st.conj_ok)
        ok &= st.ok
    return EXIT_OK if ok else EXIT_DISCREPANCY


def cmd_certify(args, out) -> int:
    from .scan import Verdict, regularity_certificate

    cert = regularity_certificate(args.p)
    out.write(f"p={cert.p} v={cert.v} verdict={cert.verdict.value}\n")
    if cert.hits:
        out.write("a2=" + ",".join(str(a) for a in cert.a2_list) + "\n")
    out.write(f"even-power roots (structural): {len(cert.even_roots)}\n")
    if cert.other_roots:
        out.write("other roots at v^k, k=" + ",".join(map(str, cert.other_roots)) + "\n")
    return {
        Verdict.REGULAR: EXIT_OK,
        Verdict.IRREGULAR: EXIT_IRREGULAR,
        Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[cert.verdict]


def cmd_bernoulli(args, out) -> int:
    from .bernoulli import bernoulli_mod_p

    table = bernoulli_mod_p(args.p)
    out.write("n,B_n_mod_p\n")
    for n, b in enumerate(table.values):
        out.write(f"{n},{b}\n")
    return EXIT_OK


def _validate(parser: argparse.ArgumentParser, args):
    if getattr(args, "p_max", None) is not None and args.p_max < 5:
        parser.error("--p-max must be >= 5")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.command in ("certify", "bernoulli"):
        if not (args.p >= 5 and is_prime(args.p)):
            parser.error(f"--p must be a prime >= 5, got {args.p}")
    if args.command == "gauss":
        for name in ("p", "q"):
            n = getattr(args, name)
            if not (n >= 3 and is_prime(n)):
                parser.error(f"--{name} must be an odd prime, got {n}")
        if args.p == args.q:
            parser.error("--p and --q must differ")
        unknown = {c.strip() for c in args.checks.split(",")} - {
            "structure", "power", "stickelberger", ""
        }
        if unknown:
            parser.error(f"unknown checks: {sorted(unknown)}")


COMMANDS = {
    "scan": cmd_scan,
    "crosscheck": cmd_crosscheck,
    "gauss": cmd_gauss,
    "certify": cmd_certify,
    "bernoulli": cmd_bernoulli,
}


def main(argv: list[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    return COMMANDS[args.command](args, out or sys.stdout)


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
