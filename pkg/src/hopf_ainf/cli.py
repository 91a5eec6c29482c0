"""Command-line front end: certify, diagonal, factors, lemma.

Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
JSON goes to stdout with sorted keys; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections.abc import Sequence

from hopf_ainf.config import POLYTOPES, RunConfig, load_config_file
from hopf_ainf.registry import StructureRegistry
from hopf_ainf.reports import certify_report, diagonal_report, factors_report, lemma_report

logger = logging.getLogger("hopf_ainf")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "text"), default=None)
    common.add_argument("--config", metavar="PATH", help="key=value defaults file")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="hopf-ainf",
        description="Verify Hopf A∞-coalgebra structures and polytope diagonals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cert = sub.add_parser("certify", parents=[common], help="certify one structure")
    cert.add_argument("--p", type=int)
    cert.add_argument("--m", type=int)
    cert.add_argument("--max-j", dest="max_j", type=int)
    cert.add_argument("--workers", type=int)

    diag = sub.add_parser("diagonal", parents=[common], help="diagonal of a top cell")
    diag.add_argument("polytope", choices=POLYTOPES)
    diag.add_argument("n", type=int, nargs="?")

    fac = sub.add_parser("factors", parents=[common], help="factors of H_*(Z,3;Z_p)")
    fac.add_argument("--p", type=int)
    fac.add_argument("--count", type=int)
    fac.add_argument("--certify", action="store_true", default=None)
    fac.add_argument("--max-j", dest="max_j", type=int)
    fac.add_argument("--workers", type=int)

    lem = sub.add_parser("lemma", parents=[common], help="binomial identity sweep")
    lem.add_argument("--p", type=int)
    lem.add_argument("--trials", type=int)
    lem.add_argument("--seed", type=int)
    lem.add_argument("--exhaustive", action="store_true", help="also sweep over ℕ")
    return parser


_CONFIG_FIELDS = (
    "p", "m", "max_j", "n", "polytope", "fmt", "seed", "workers", "trials", "count", "certify",
)


def build_config(args: argparse.Namespace) -> RunConfig:
    """File values first, then explicit flags on top."""
    values: dict[str, object] = {}
    if args.config:
        values.update(load_config_file(args.config))
    for name in _CONFIG_FIELDS:
        value = getattr(args, name, None)
        if value is not None:
            values[name] = value
    return RunConfig(command=args.command, **values)


def _configure_logging(command: str, verbose: bool) -> None:
    root = logging.getLogger("hopf_ainf")
    root.setLevel(logging.DEBUG)
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    stderr = logging.StreamHandler(sys.stderr)
    stderr.setLevel(logging.DEBUG if verbose else logging.WARNING)
    stderr.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(stderr)
    if os.environ.get("HOPF_AINF_LOG"):
        path = f"/tmp/hopf-ainf-{command}.log"
        trace = logging.FileHandler(path, mode="w")
        trace.setLevel(logging.DEBUG)
        trace.setFormatter(logging.Formatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
        root.addHandler(trace)
        logger.debug("tracing to %s", path)


def _run(cfg: RunConfig, exhaustive: bool = False) -> dict:
    registry = StructureRegistry()
    if cfg.command == "certify":
        return certify_report(registry, cfg.p, cfg.m, cfg.effective_max_j, cfg.workers)
    if cfg.command == "diagonal":
        return diagonal_report(cfg.polytope, cfg.n)
    if cfg.command == "factors":
        return factors_report(
            registry, cfg.p, cfg.count, cfg.certify, cfg.max_j, cfg.workers,
        )
    if cfg.command == "lemma":
        return lemma_report(cfg.p, cfg.trials, cfg.seed, exhaustive)
    raise ValueError(f"Unknown command '{cfg.command}'")


def report_passed(command: str, report: dict) -> bool:
    if command == "diagonal":
        return report.get("chain_map", report.get("perm_chain_map")) is not False
    return report.get("pass", True)


# -- text rendering --

def _text_certify(report: dict) -> list[str]:
    s = report["subject"]
    lines = [
        f"{s['label']}  p={s['p']} m={s['m']} |v|={s['v_degree']} |w|={s['w_degree']}"
        f"  max_j={report['max_j']}",
    ]
    for r in report["reports"]:
        status = "PASS" if r["pass"] else f"FAIL ({r['failures']} inputs)"
        lines.append(f"  {r['relation_id']:<24} {r['inputs_checked']:>6}  {status}")
    lines.append(f"{'PASS' if report['pass'] else 'FAIL'}: {report['inputs_checked']} inputs")
    return lines


def _text_diagonal(report: dict) -> list[str]:
    lines = list(report["words"])
    lines.append(f"{report['term_count']} terms")
    if report.get("degenerate"):
        lines.append(f"degenerate under ϑ₀: {', '.join(report['degenerate'])}")
    if report.get("chain_map") is not None:
        lines.append(f"chain map: {'yes' if report['chain_map'] else 'NO'}")
    if report.get("perm_chain_map") is not None:
        lines.append(f"Δ_P chain map: {'yes' if report['perm_chain_map'] else 'NO'}")
    return lines


def _text_factors(report: dict) -> list[str]:
    lines = []
    for f in report["factors"]:
        line = f"  i={f['index']}  m={f['m']}  |v|={f['v_degree']}  |w|={f['w_degree']}"
        if "pass" in f:
            line += "  PASS" if f["pass"] else f"  FAIL {', '.join(f['failed_relations'])}"
        lines.append(line)
    return lines


def _text_lemma(report: dict) -> list[str]:
    lines = []
    for s in report["sweeps"]:
        lines.append(f"{s['ring']}: {s['passed']}/{s['trials']} pass")
        for w in s["witnesses"]:
            line = f"  z={w['z']} i={w['i']}: {w['lhs']} "
            line += "==" if w["equal"] else "!="
            line += f" {w['rhs']}"
            if w.get("expansion_ok") is False:
                line += ", expansion check failed"
            lines.append(line)
    return lines


_TEXT = {
    "certify": _text_certify,
    "diagonal": _text_diagonal,
    "factors": _text_factors,
    "lemma": _text_lemma,
}


def render(command: str, report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
    return "\n".join(_TEXT[command](report))


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.command, args.verbose)
    try:
        cfg = build_config(args)
        report = _run(cfg, getattr(args, "exhaustive", False))
    except ValueError as e:
        print(f"hopf-ainf {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(render(cfg.command, report, cfg.fmt))
    return EXIT_PASS if report_passed(cfg.command, report) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
