"""
Command-line entry point.

Exit codes: 0 success, 1 bad input, 2 size bound exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import asm as asm_mod
from .errors import InputError, ResourceLimitError, VerificationError
from .kl import kl_table
from .perm import Permutation, bruhat_leq_matrix, enumerate_sn
from .poset import FinitePoset
from .tetra import build_tetra
from .verify import SUITES, run_suite
from .verma import enumerate_verbar, from_permutation, intersect, socle, to_asm, verbar_lattice

log = logging.getLogger("asmverma")

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_VERIFY = 0, 1, 2, 3

KINDS = ("perm", "asm", "tetra", "verbar")
FORMATS = ("text", "json", "dot")

# per-kind bounds for enumerate/export
MAX_N = {"perm": 8, "asm": 5, "tetra": 12, "verbar": 5}
MAX_HASSE_N = {"perm": 6, "asm": 5, "tetra": 12, "verbar": 5}


@dataclass
class Config:
    n: int
    format: str = "text"
    cache_dir: Path | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.n < 1:
            raise InputError("--n must be at least 1")
        if self.format not in FORMATS:
            raise InputError(f"unknown format {self.format!r}")


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _check_kind_bound(kind: str, n: int, table: dict):
    if n > table[kind]:
        raise ResourceLimitError(f"{kind} is limited to n <= {table[kind]}")


def _items(kind: str, n: int):
    """``(text, json)`` rendering of every element of the requested kind."""
    if kind == "perm":
        return [(w.to_text(), w.to_json()) for w in enumerate_sn(n)]
    if kind == "asm":
        return [(a.to_text(), a.to_json()) for a in asm_mod.enumerate_asm(n, max_n=MAX_N["asm"])]
    if kind == "tetra":
        if n < 2:
            raise InputError("Tetr_n needs n >= 2")
        return [(str(p), p.to_json()) for p in build_tetra(n).labels]
    return [(str(m), m.to_json()) for m in enumerate_verbar(n)]


def cmd_enumerate(cfg: Config, kind: str) -> int:
    _check_kind_bound(kind, cfg.n, MAX_N)
    items = _items(kind, cfg.n)
    if cfg.format == "json":
        payload = {"kind": kind, "n": cfg.n, "count": len(items), "items": [j for _, j in items]}
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    elif cfg.format == "text":
        sep = "\n\n" if kind == "asm" else "\n"
        sys.stdout.write(sep.join(t for t, _ in items) + "\n")
        sys.stdout.write(f"# {len(items)} items\n")
    else:
        raise InputError("enumerate supports text and json")
    return EXIT_OK


def cmd_verify(cfg: Config, suite: str, large: bool, no_cache: bool) -> int:
    try:
        report = run_suite(suite, cfg.n, large=large, cache_dir=cfg.cache_dir, use_cache=not no_cache)
    except VerificationError as exc:
        sys.stdout.write(json.dumps(exc.report, ensure_ascii=False, sort_keys=True) + "\n")
        return EXIT_VERIFY
    if cfg.format == "json":
        sys.stdout.write(json.dumps(report, ensure_ascii=False, sort_keys=True) + "\n")
    else:
        for check in report["checks"]:
            sys.stdout.write(f"{'PASS' if check['passed'] else 'FAIL'}  {check['name']}\n")
        sys.stdout.write(f"suite {suite} n={cfg.n}: {'PASS' if report['passed'] else 'FAIL'}\n")
    return EXIT_OK


def cmd_intersect(cfg: Config, perms: list[str]) -> int:
    if not perms:
        raise InputError("give at least one permutation")
    ws = [Permutation.parse(text) for text in perms]
    for w in ws:
        if w.n != cfg.n:
            raise InputError(f"{w} is not in S_{cfg.n}")
    m = intersect([from_permutation(w) for w in ws])
    a = to_asm(m)
    if cfg.format == "json":
        payload = {"element": m.to_json(), "asm": a.to_json()}
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("ASM:\n" + a.to_text() + "\n")
        gens = ", ".join(w.to_text() for w in m.generators) or "(none: Delta_e)"
        sys.stdout.write(f"generators: {gens}\n")
        labels = socle(m)
        sys.stdout.write("socle: " + (", ".join(f"({s.i},{s.j},{s.degree})" for s in labels) or "(empty)") + "\n")
        for s in labels:
            sys.stdout.write(f"  {s}\n")
    return EXIT_OK


def _hasse_poset(kind: str, n: int) -> tuple[FinitePoset, callable]:
    _check_kind_bound(kind, n, MAX_HASSE_N)
    if kind == "perm":
        perms = enumerate_sn(n)
        return FinitePoset.from_matrix(perms, bruhat_leq_matrix(perms), check=False), lambda w: w.to_text()
    if kind == "asm":
        return asm_mod.asm_lattice(n), lambda a: " / ".join(" ".join(str(v) for v in row) for row in a.entries)
    if kind == "tetra":
        if n < 2:
            raise InputError("Tetr_n needs n >= 2")
        return build_tetra(n), str
    return verbar_lattice(n), str


def cmd_export(cfg: Config, obj: str, kind: str | None, output: str | None) -> int:
    if obj == "kl-table":
        table = kl_table(cfg.n, cache_dir=cfg.cache_dir)
        lines = [
            f"{cfg.n}\t{table.perms[x].to_text()}\t{table.perms[y].to_text()}\t"
            f"{','.join(str(c) for c in poly.coefficients)}\n"
            for x, y, poly in table.nonzero()
        ]
        _emit("".join(lines), output)
        return EXIT_OK
    if kind is None:
        raise InputError("export hasse needs a kind")
    poset, printer = _hasse_poset(kind, cfg.n)
    if cfg.format == "dot":
        _emit(poset.to_dot(printer, name=f"{kind}{cfg.n}"), output)
    elif cfg.format == "json":
        _emit(json.dumps(poset.to_json(printer), ensure_ascii=False) + "\n", output)
    else:
        lines = [f"{printer(poset.labels[a])}  <  {printer(poset.labels[b])}\n" for a, b in poset.cover_pairs()]
        _emit("".join(lines), output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="rank: work in S_n / ASM_n")
    common.add_argument("--format", default="text", help="text, json or dot")
    common.add_argument("--cache-dir", type=Path, default=None, help="KL cache directory (overrides ASMV_CACHE_DIR)")
    common.add_argument("--max-seconds", type=float, default=None, help="soft time budget; warns when exceeded")

    parser = argparse.ArgumentParser(prog="asmv", description="ASM lattice and Verma intersection toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list all elements of a kind")
    p.add_argument("kind", choices=KINDS)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--large", action="store_true", help="allow the larger, slower sizes")
    p.add_argument("--no-cache", action="store_true", help="recompute KL tables without touching the cache")

    p = sub.add_parser("intersect", parents=[common], help="intersect Verma submodules Delta_w")
    p.add_argument("perms", nargs="+", help='one-line permutations, e.g. "2 1 3"')

    p = sub.add_parser("export", parents=[common], help="export Hasse diagrams or the KL table")
    p.add_argument("object", choices=("hasse", "kl-table"))
    p.add_argument("kind", nargs="?", choices=KINDS)
    p.add_argument("--output", "-o", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    start = time.monotonic()
    try:
        cfg = Config(args.n, args.format, args.cache_dir, args.max_seconds)
        if args.command == "enumerate":
            code = cmd_enumerate(cfg, args.kind)
        elif args.command == "verify":
            code = cmd_verify(cfg, args.suite, args.large, args.no_cache)
        elif args.command == "intersect":
            code = cmd_intersect(cfg, args.perms)
        else:
            code = cmd_export(cfg, args.object, args.kind, args.output)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    elapsed = time.monotonic() - start
    if args.max_seconds is not None and elapsed > args.max_seconds:
        log.warning("took %.1fs, over the %.1fs budget", elapsed, args.max_seconds)
    return code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
