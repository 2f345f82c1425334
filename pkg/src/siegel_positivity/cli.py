"""Command line interface.

Exit status: 0 success / positive verdict, 1 usage error, 2 negative
mathematical verdict, 3 failed precondition (non-prime p, filtration bound).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import hyperbolicity as hyp
from .cache import default_cache_dir
from .chow import fixtures as eo
from .partitions import Partition, parse_partition
from .positivity import certify, min_certifying_prime, region_rows, region_scan, tensor_power_only
from .rootdata import RootDatumC, automorphic_weight, format_weight, parse_weight
from .symfunc import is_prime, plethysm, plethysm_stats

log = logging.getLogger("siegel_positivity")

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_PRECONDITION = 0, 1, 2, 3
MAX_G = 8
MAX_PLETHYSM_DEGREE = 40


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    g: int | None = None
    primes: list[int] = field(default_factory=list)
    partitions: list[Partition] = field(default_factory=list)
    weight: tuple[int, ...] | None = None
    box: tuple[int, int] | None = None
    out_dir: Path | None = None
    fmt: str = "text"
    cache_dir: Path | None = None
    long_tests: bool = False
    unsafe_large: bool = False

    def validate(self) -> None:
        if self.g is not None and not 1 <= self.g <= MAX_G:
            raise UsageError(f"g must be between 1 and {MAX_G}")
        for p in self.primes:
            if not is_prime(p):
                raise PreconditionError(f"p must be prime, got {p}")
        if self.weight is not None and self.g is not None and len(self.weight) != self.g:
            raise UsageError(f"weight {format_weight(self.weight)} does not have g={self.g} entries")
        if self.box is not None and self.box[0] > self.box[1]:
            raise UsageError("box lower end exceeds upper end")


def _parse_primes(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"bad prime list {text!r}") from None


def _parse_box(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad box {text!r}, expected LO:HI") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _progress_logger(label: str):
    def report(done: int, total: int):
        log.info("%s: block %d/%d", label, done, total)

    return report


# ---------------------------------------------------------------------------
# subcommands: each returns (exit status, text written to stdout)

def cmd_plethysm(cfg: RunConfig, stats: bool) -> tuple[int, str]:
    lam, mu = cfg.partitions
    degree = lam.size * mu.size
    if degree > MAX_PLETHYSM_DEGREE and not cfg.unsafe_large:
        raise UsageError(f"degree {degree} exceeds {MAX_PLETHYSM_DEGREE}; pass --unsafe-large")
    result = plethysm(lam, mu, max_height=cfg.g, cache_dir=cfg.cache_dir,
                      progress=_progress_logger(f"plethysm {lam} o {mu}"))
    st = plethysm_stats(result)
    if cfg.fmt == "json":
        obj = {
            "lhs": list(lam),
            "rhs": list(mu),
            "max_height": cfg.g,
            "constituents": [{"eta": list(eta), "multiplicity": m} for eta, m in result],
            "stats": st,
        }
        return EXIT_OK, _dump_json(obj)
    if cfg.fmt == "csv":
        return EXIT_OK, _csv([(str(eta), m) for eta, m in result], ("eta", "multiplicity"))
    if stats:
        return EXIT_OK, f"partitions={st['partitions']} max_mult={st['max_mult']} total={st['total']}\n"
    return EXIT_OK, "".join(f"{eta}\t{m}\n" for eta, m in result)


def cmd_lambda_sym2(cfg: RunConfig, k: int) -> tuple[int, str]:
    if k < 1:
        raise UsageError("k must be positive")
    pieces = hyp.lambda_k_sym2(k, cfg.g)
    if cfg.fmt == "json":
        obj = {
            "k": k,
            "g": cfg.g,
            "constituents": [
                {"eta": list(eta), "multiplicity": m, "weight": list(automorphic_weight(eta, cfg.g))}
                for eta, m in pieces
            ],
        }
        return EXIT_OK, _dump_json(obj)
    rows = [(str(eta), m, format_weight(automorphic_weight(eta, cfg.g))) for eta, m in pieces]
    if cfg.fmt == "csv":
        return EXIT_OK, _csv(rows, ("eta", "multiplicity", "weight"))
    return EXIT_OK, "".join(f"{a}\t{b}\t{c}\n" for a, b, c in rows)


def cmd_certify(cfg: RunConfig) -> tuple[int, str]:
    datum = RootDatumC(cfg.g)
    certs = [certify(cfg.weight, p, datum) for p in cfg.primes]
    status = EXIT_OK if all(c.certified for c in certs) else EXIT_NEGATIVE
    if cfg.fmt == "json":
        return status, _dump_json({"g": cfg.g, "certificates": [dict(c.to_json(), p=p) for c, p in zip(certs, cfg.primes)]})
    rows = [
        (format_weight(c.weight), p, c.route, c.min_prime if c.min_prime is not None else "-",
         c.orbit_ratio if c.orbit_ratio is not None else "undefined", c.z_empty_ok, c.notes)
        for c, p in zip(certs, cfg.primes)
    ]
    header = ("weight", "p", "route", "min_prime", "orbit_ratio", "z_empty_ok", "notes")
    if cfg.fmt == "csv":
        return status, _csv(rows, header)
    out = "".join(
        f"weight={r[0]} p={r[1]} route={r[2]} min_prime={r[3]} orbit_ratio={r[4]} z_empty_ok={r[5]}"
        + (f" notes={r[6]}" if r[6] else "") + "\n"
        for r in rows
    )
    return status, out


def cmd_min_prime(cfg: RunConfig) -> tuple[int, str]:
    p = min_certifying_prime(cfg.weight, RootDatumC(cfg.g))
    status = EXIT_OK if p is not None else EXIT_NEGATIVE
    if cfg.fmt == "json":
        return status, _dump_json({"g": cfg.g, "weight": list(cfg.weight), "min_prime": p})
    if cfg.fmt == "csv":
        return status, _csv([(format_weight(cfg.weight), p if p is not None else "none")], ("weight", "min_prime"))
    return status, f"weight={format_weight(cfg.weight)} min_prime={p if p is not None else 'none'}\n"


def cmd_figure1(cfg: RunConfig) -> tuple[int, str]:
    out_dir = cfg.out_dir or Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    summary = []
    for p in cfg.primes:
        region = region_scan(cfg.g, p, cfg.box)
        rows = region_rows(region)
        extra = sorted(tuple(reversed(w)) for w in tensor_power_only(cfg.g, p, cfg.box))
        if cfg.fmt == "json":
            path = out_dir / f"g={cfg.g}p={p}.json"
            payload = {"g": cfg.g, "p": p, "box": list(cfg.box), "columns": _columns(cfg.g),
                       "points": [list(r) for r in rows], "tensor_power_only": [list(r) for r in extra]}
            text = _dump_json(payload)
        else:
            path = out_dir / f"g={cfg.g}p={p}.txt"
            text = "".join(" ".join(str(x) for x in r) + "\n" for r in rows)
        path.write_text(text, encoding="utf-8", newline="\n")
        summary.append((p, str(path), len(rows), len(extra)))
    return EXIT_OK, "".join(f"p={p} file={path} points={n} tensor_power_only={e}\n" for p, path, n, e in summary)


def _columns(g: int) -> list[str]:
    return [f"k{i}" for i in range(g, 0, -1)]


def cmd_hyperbolicity(cfg: RunConfig, explain: bool) -> tuple[int, str]:
    lam = cfg.partitions[0]
    if len(cfg.primes) != 1:
        raise UsageError("hyperbolicity takes a single --p")
    report = hyp.analyze(lam, cfg.g, cfg.primes[0], cache_dir=cfg.cache_dir)
    status = {"certified": EXIT_OK, "not_certified": EXIT_NEGATIVE, "filtration_fails": EXIT_PRECONDITION}[report.verdict]
    if cfg.fmt == "json":
        return status, _dump_json(report.to_json())
    rows = [
        (str(c.eta), c.multiplicity, format_weight(c.weight), c.certificate.route,
         c.certificate.min_prime if c.certificate.min_prime is not None else "-")
        for c in report.constituents
    ]
    if cfg.fmt == "csv":
        return status, _csv(rows, ("eta", "multiplicity", "weight", "route", "min_prime"))
    lines = [
        f"g={report.g} p={report.p} lambda={report.lam} filtration_ok={report.filtration_ok} verdict={report.verdict}",
        "eta\tmult\tweight\troute\tmin_prime",
    ]
    lines += ["\t".join(str(x) for x in r) for r in rows]
    if report.uncovered:
        lines.append("uncovered: " + " ".join(format_weight(w) for w in report.uncovered))
    lines += [f"note: {n}" for n in report.notes]
    if explain:
        lines += hyp.explain(report)
    return status, "\n".join(lines) + "\n"


def cmd_chow_verify(cfg: RunConfig, fixture: Path | None) -> tuple[int, str]:
    if fixture is not None:
        fx = eo.parse_fixture(fixture.read_text(encoding="utf-8"))
        if fx.g != cfg.g:
            raise UsageError(f"fixture is for g={fx.g}, not g={cfg.g}")
    else:
        try:
            fx = eo.load_fixture(cfg.g)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    results = eo.verify(fx)
    status = EXIT_OK if all(r.status == "match" for r in results) else EXIT_NEGATIVE
    if cfg.fmt == "json":
        obj = {
            "g": fx.g,
            "results": [
                {"label": r.label, "status": r.status,
                 "computed": None if r.computed is None else str(r.computed), "expected": str(r.expected)}
                for r in results
            ],
            "inert": [{"label": c.label, "value": str(c.expected)} for c in fx.inert],
        }
        return status, _dump_json(obj)
    rows = [(r.label, r.status, "" if r.computed is None else str(r.computed), str(r.expected)) for r in results]
    if cfg.fmt == "csv":
        return status, _csv(rows, ("label", "status", "computed", "expected"))
    lines = [f"{label}\t{st}\t{comp}" for label, st, comp, _ in rows]
    lines += [f"{c.label}\tinert\t{c.expected}" for c in fx.inert]
    return status, "\n".join(lines) + "\n"


def cmd_thresholds(cfg: RunConfig) -> tuple[int, str]:
    gs = [cfg.g] if cfg.g is not None else [2, 3, 4, 5]
    rows = [(g, hyp.k_threshold(g), hyp.p_threshold(g)) for g in gs]
    if cfg.fmt == "json":
        return EXIT_OK, _dump_json({"thresholds": [{"g": g, "k_threshold": k, "p_threshold": p} for g, k, p in rows]})
    if cfg.fmt == "csv":
        return EXIT_OK, _csv(rows, ("g", "k_threshold", "p_threshold"))
    return EXIT_OK, "".join(f"g={g} k_threshold={k} p_threshold={p}\n" for g, k, p in rows)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="siegel-positivity", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on standard error")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("text", "json", "csv")):
        sp.add_argument("--format", choices=formats, default="text")

    sp = sub.add_parser("plethysm", help="Schur expansion of s_lam[s_mu]")
    sp.add_argument("lam")
    sp.add_argument("mu")
    sp.add_argument("--max-height", type=int, dest="g")
    sp.add_argument("--cache-dir", type=Path)
    sp.add_argument("--stats", action="store_true")
    sp.add_argument("--unsafe-large", action="store_true")
    common(sp)

    sp = sub.add_parser("lambda-sym2", help="graded pieces of the k-th exterior power of Sym^2")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    common(sp)

    sp = sub.add_parser("certify", help="ampleness certificate for a weight")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--p", required=True, help="prime or comma-separated primes")
    common(sp)

    sp = sub.add_parser("min-prime", help="smallest prime certifying a weight")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--weight", required=True)
    common(sp)

    sp = sub.add_parser("figure1", help="region files g=<g>p=<p>.txt")
    sp.add_argument("--g", type=int, default=2)
    sp.add_argument("--p", required=True)
    sp.add_argument("--box", default="-44:5")
    sp.add_argument("--out-dir", type=Path, default=Path("."))
    common(sp, ("text", "json"))

    sp = sub.add_parser("hyperbolicity", help="certify S_lam of the log cotangent bundle")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--partition", required=True)
    sp.add_argument("--cache-dir", type=Path)
    sp.add_argument("--explain", action="store_true")
    common(sp)

    sp = sub.add_parser("chow-verify", help="check EO fixture products")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--fixture", type=Path)
    common(sp)

    sp = sub.add_parser("thresholds", help="k and p thresholds for exterior powers")
    sp.add_argument("--g", type=int)
    common(sp)
    return parser


def _config(args) -> RunConfig:
    cfg = RunConfig(subcommand=args.command, fmt=args.format)
    cfg.g = getattr(args, "g", None)
    if hasattr(args, "p"):
        cfg.primes = _parse_primes(args.p)
    if getattr(args, "weight", None) is not None:
        cfg.weight = parse_weight(args.weight)
    if args.command == "plethysm":
        cfg.partitions = [parse_partition(args.lam), parse_partition(args.mu)]
        if not cfg.partitions[0] or not cfg.partitions[1]:
            raise UsageError("plethysm needs nonempty partitions")
        cfg.unsafe_large = args.unsafe_large
    if args.command == "hyperbolicity":
        cfg.partitions = [parse_partition(args.partition)]
        if not cfg.partitions[0]:
            raise UsageError("partition must be nonempty")
    if getattr(args, "box", None) is not None:
        cfg.box = _parse_box(args.box)
    if getattr(args, "out_dir", None) is not None:
        cfg.out_dir = args.out_dir
    if hasattr(args, "cache_dir"):
        cfg.cache_dir = args.cache_dir or default_cache_dir()
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = _config(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        cmd = args.command
        if cmd == "plethysm":
            status, out = cmd_plethysm(cfg, args.stats)
        elif cmd == "lambda-sym2":
            status, out = cmd_lambda_sym2(cfg, args.k)
        elif cmd == "certify":
            status, out = cmd_certify(cfg)
        elif cmd == "min-prime":
            status, out = cmd_min_prime(cfg)
        elif cmd == "figure1":
            status, out = cmd_figure1(cfg)
        elif cmd == "hyperbolicity":
            status, out = cmd_hyperbolicity(cfg, args.explain)
        elif cmd == "chow-verify":
            status, out = cmd_chow_verify(cfg, args.fixture)
        else:
            status, out = cmd_thresholds(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
