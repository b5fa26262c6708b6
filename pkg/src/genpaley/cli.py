"""Command-line interface: ``genpaley info | scan | export | verify``.

Flags fall back to GENPALEY_* environment variables (GENPALEY_TOLERANCE,
GENPALEY_BRUTE_CAP, GENPALEY_JOBS, GENPALEY_FORMAT) before their defaults.
Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction

from . import cheeger, ntheory as nt, paley, qchar, ramanujan, spectral, verify
from .errors import PaleyError

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3
ENV_PREFIX = "GENPALEY_"
INFO_DFT_CAP = 2000


def _env(name: str, default, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    return default if raw is None else cast(raw)


def _real(x: float) -> str:
    return f"{x:.12g}"


@dataclass(frozen=True)
class ScanRow:
    delta: int
    D: int
    phi_D: int
    degree: int
    is_bipartite: bool
    ramanujan_case: str
    is_ramanujan: bool
    lambda_g: float
    alpha: str
    alpha_numeric: float
    brute_h: str | None


def scan_row(delta: int, brute_cap: int = cheeger.DEFAULT_BRUTE_CAP) -> tuple[ScanRow, list[str]]:
    """One row of the scan, plus any violated checks (spectral vs classification, alpha corollary)."""
    disc = qchar.validate_fundamental(delta)
    n = disc.conductor
    phi = nt.euler_phi(n)
    spec = spectral.closed_form_spectrum(disc)
    verdict = ramanujan.classify_ramanujan(disc)
    alpha = cheeger.alpha_bound(disc)
    bipartite = spec.multiplicity(Fraction(-phi, 2)) > 0
    brute = cheeger.brute_force_cheeger(disc, brute_cap) if n <= brute_cap else None
    row = ScanRow(
        delta=disc.delta,
        D=n,
        phi_D=phi,
        degree=phi // 2,
        is_bipartite=bipartite,
        ramanujan_case=verdict.classification_case.value,
        is_ramanujan=verdict.is_ramanujan,
        lambda_g=float(verdict.spectral_witness),
        alpha=spectral.fraction_str(alpha),
        alpha_numeric=float(alpha),
        brute_h=None if brute is None else spectral.fraction_str(brute),
    )
    problems = []
    if not verdict.consistent:
        problems.append(f"delta={disc.delta}: classification disagrees with spectral test")
    if n >= 8 and not alpha < Fraction(phi, 4):
        problems.append(f"delta={disc.delta}: alpha={alpha} not below phi/4")
    if bipartite != (disc.delta % 2 == 0):
        problems.append(f"delta={disc.delta}: bipartite={bipartite} but delta parity says otherwise")
    if brute is not None and brute > alpha:
        problems.append(f"delta={disc.delta}: brute h={brute} exceeds alpha={alpha}")
    return row, problems


def _scan_row_worker(args: tuple[int, int]) -> tuple[ScanRow, list[str]]:
    return scan_row(*args)


def scan(d_min: int, d_max: int, brute_cap: int, jobs: int = 1) -> list[tuple[ScanRow, list[str]]]:
    deltas = [d.delta for d in qchar.fundamental_discriminants(d_min, d_max)]
    work = [(delta, brute_cap) for delta in deltas]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves input order, so output stays sorted by (D, delta)
            return list(pool.map(_scan_row_worker, work, chunksize=64))
    return [scan_row(*w) for w in work]


def _row_dict(row: ScanRow) -> dict:
    out = asdict(row)
    out["lambda_g"] = float(_real(row.lambda_g))
    out["alpha_numeric"] = float(_real(row.alpha_numeric))
    return out


def format_rows(rows: list[ScanRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([_row_dict(r) for r in rows], indent=2) + "\n"
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f.name for f in fields(ScanRow)])
    for r in rows:
        d = _row_dict(r)
        writer.writerow(
            [
                "true" if v is True else "false" if v is False else "" if v is None else _real(v) if isinstance(v, float) else v
                for v in d.values()
            ]
        )
    return buf.getvalue()


def info_report(delta: int, brute_cap: int, tolerance: float) -> dict:
    disc = qchar.validate_fundamental(delta)
    g = paley.build(disc)
    spec = spectral.closed_form_spectrum(disc)
    report = {
        "delta": disc.delta,
        "D": disc.conductor,
        "squarefree_root": disc.squarefree_root,
        "parity": disc.parity.value,
        "directed": g.directed,
        "degree": paley.degree(g),
        "spectrum": spec.to_json(),
    }
    if disc.conductor <= INFO_DFT_CAP:
        report["spectrum_matches_dft"] = spectral.spectra_match(spec, spectral.dft_spectrum(g), tolerance)
    if g.directed:
        return report
    report["is_bipartite"] = paley.is_bipartite(g)
    report["is_cycle"] = paley.is_cycle(g)
    verdict = ramanujan.classify_ramanujan(disc)
    report["ramanujan"] = {
        **verdict.to_json(),
        "lambda_g": str(verdict.spectral_witness),
        "spectral_is_ramanujan": verdict.bound.holds,
    }
    report["cheeger"] = cheeger.cheeger_report(disc, brute_cap).to_json()
    return report


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_info(report: dict) -> str:
    lines = [
        f"P_{report['delta']}: D={report['D']}, m={report['squarefree_root']}, {report['parity'].replace('_', ' ')}",
        f"degree {report['degree']} ({'directed' if report['directed'] else 'undirected'})",
    ]
    if report["directed"]:
        lines.append("directed graph (delta < 0): bipartite/cycle/Ramanujan/Cheeger not defined; spectrum only")
    else:
        lines.append(f"bipartite: {_yes(report['is_bipartite'])}, cycle: {_yes(report['is_cycle'])}")
    lines.append("spectrum (value x multiplicity):")
    for e in report["spectrum"]:
        ev = spectral.AlgebraicEigenvalue(Fraction(e["rational"]), Fraction(e["radical_coeff"]), e["radicand"])
        z = ev.numeric()
        num = _real(z.real) if ev.radicand > 0 or ev.is_rational else f"{_real(z.real)}{z.imag:+.12g}i"
        lines.append(f"  {ev}  ~ {num}  x{e['multiplicity']}")
    if "spectrum_matches_dft" in report:
        lines.append(f"closed form matches DFT: {_yes(report['spectrum_matches_dft'])}")
    if report["directed"]:
        return "\n".join(lines) + "\n"
    r = report["ramanujan"]
    lines.append(
        f"Ramanujan (classification): case {r['case']} -> {_yes(r['is_ramanujan'])}; "
        f"(spectral): lambda(G) = {r['lambda_g']}, lambda^2 = {r['lambda_sq']} vs 4(r-1) = {r['bound_4r_minus_4']} "
        f"-> {_yes(r['spectral_is_ramanujan'])}"
    )
    c = report["cheeger"]
    brute = c["brute_force_h"] if c["brute_force_h"] is not None else "not computed (D above brute-force cap)"
    lines.append(
        f"Cheeger: alpha = {c['alpha']} ~ {c['alpha_numeric']}, L-function form ~ {c['lfunction_form']}, "
        f"phi(D)/4 = {c['phi_quarter']}, alpha < phi(D)/4: {_yes(c['alpha_lt_phi_quarter'])}"
    )
    lines.append(
        f"  |boundary {{{c['boundary_set_witness']['F']}}}| = {c['boundary_set_witness']['boundary']}; brute-force h = {brute}"
    )
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_info(args) -> int:
    report = info_report(args.delta, args.brute_cap, args.tolerance)
    _write(json.dumps(report, indent=2) + "\n" if args.format == "json" else render_info(report), None)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.d_min < 3 or args.d_min > args.d_max:
        raise PaleyError(f"scan needs 3 <= d_min <= d_max, got {args.d_min}..{args.d_max}")
    results = scan(args.d_min, args.d_max, args.brute_cap, args.jobs)
    _write(format_rows([r for r, _ in results], args.format), args.out)
    if args.check:
        problems = [p for _, ps in results for p in ps]
        for p in problems:
            print(p, file=sys.stderr)
        print(f"checked {len(results)} discriminants: {len(problems)} violations", file=sys.stderr)
        return EXIT_FAIL if problems else EXIT_OK
    return EXIT_OK


def cmd_export(args) -> int:
    text = paley.export(paley.build(args.delta), args.format)
    _write(text if text.endswith("\n") or not text else text + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run(verify.LEVELS[args.level])
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genpaley", description="Generalized Paley graphs of quadratic characters.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=_env("TOLERANCE", 1e-9, float))
    common.add_argument("--brute-cap", type=int, default=_env("BRUTE_CAP", cheeger.DEFAULT_BRUTE_CAP, int))
    common.add_argument("--jobs", type=int, default=_env("JOBS", 1, int))

    p = sub.add_parser("info", parents=[common], help="report on one discriminant")
    p.add_argument("delta", type=int)
    p.add_argument("--format", choices=("text", "json"), default=_env("FORMAT", "text"))
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("scan", parents=[common], help="tabulate every delta > 0 with d_min <= D <= d_max")
    p.add_argument("d_min", type=int)
    p.add_argument("d_max", type=int)
    p.add_argument("--out", "-o", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=_env("FORMAT", "csv"))
    p.add_argument("--check", action="store_true", help="fail on any theorem violation")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("export", parents=[common], help="write the graph as DOT, edge list or JSON")
    p.add_argument("delta", type=int)
    p.add_argument("format", choices=paley.EXPORT_FORMATS)
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", parents=[common], help="run the verification criteria")
    p.add_argument("level", nargs="?", choices=tuple(verify.LEVELS), default="fast")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PaleyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
