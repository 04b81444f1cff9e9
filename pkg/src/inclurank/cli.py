"""Command-line interface: rank, verify, table, filtration, bench, dump.

Exit codes: 0 success (and any printed comparison matched), 2 a
comparison between two independently computed ranks disagreed, 64
usage error, 70 memory budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .errors import MemoryBudgetError, ParameterError
from .fields import FieldSpec
from .formula import format_cases, rank_formula, sweep_cases
from .inclusion import (
    InclusionParams,
    build_inclusion_matrix,
    eliminate_rank,
    normalize_params,
    streaming_rank,
)
from .linalg import backend_name
from .specht import filtration_audit

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_USAGE = 64
EXIT_RESOURCE = 70


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_params(sub, with_field=True):
    sub.add_argument("--m", type=int, required=True, help="ground-set size")
    sub.add_argument("--n", type=int, required=True, help="column subset size")
    sub.add_argument("--i", type=int, required=True, help="row subset size")
    if with_field:
        sub.add_argument("--p", type=int, required=True, help="characteristic: 0 or a prime")


def _add_budget(sub):
    sub.add_argument(
        "--memory-budget",
        type=int,
        default=None,
        metavar="BYTES",
        help="dense matrix budget (default 1 GiB or INCLURANK_MEMORY_BUDGET)",
    )


def _add_out(sub):
    sub.add_argument("--out", default=None, metavar="PATH", help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="inclurank",
        description="Exact ranks of subset inclusion matrices over GF(p) and the rationals. "
        "Rows and columns are indexed by subsets in colexicographic order.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="rank of one inclusion matrix")
    _add_params(p_rank)
    p_rank.add_argument(
        "--method",
        choices=["formula", "eliminate", "both"],
        default="formula",
        help="closed form, elimination, or both with a match verdict",
    )
    p_rank.add_argument("--verbose", action="store_true", help="print the per-term breakdown")
    p_rank.add_argument(
        "--streaming",
        action="store_true",
        help="fall back to streaming elimination if the dense matrix exceeds the budget",
    )
    _add_budget(p_rank)

    p_verify = sub.add_parser("verify", help="sweep formula against the elimination oracle")
    p_verify.add_argument("--max-m", type=int, required=True, help="largest ground-set size")
    p_verify.add_argument(
        "--primes",
        default="2,3,5,7",
        help="comma-separated characteristics to check (0 allowed)",
    )
    _add_budget(p_verify)
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p_table = sub.add_parser("table", help="emit a rank table document")
    p_table.add_argument("--p", type=int, required=True, help="characteristic: 0 or a prime")
    p_table.add_argument("--max-m", type=int, required=True)
    p_table.add_argument("--min-m", type=int, default=0)
    p_table.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    p_table.add_argument(
        "--pairs",
        choices=["all", "normalized"],
        default="all",
        help="'normalized' keeps only i <= min(n, m-n)",
    )
    p_table.add_argument(
        "--no-oracle",
        action="store_true",
        help="skip the elimination column (formula only)",
    )
    _add_budget(p_table)
    _add_out(p_table)

    p_filt = sub.add_parser(
        "filtration",
        help="audit the kernel filtration of the column space (JSON report); "
        "parameters are normalized to i <= min(n, m-n) first",
    )
    _add_params(p_filt)
    _add_budget(p_filt)
    _add_out(p_filt)

    p_bench = sub.add_parser("bench", help="time dense (both backends) vs streaming rank")
    p_bench.add_argument("--p", type=int, default=2)
    p_bench.add_argument("--i", type=int, default=2)
    p_bench.add_argument("--n", type=int, default=3)
    p_bench.add_argument("--min-m", type=int, default=10)
    p_bench.add_argument("--max-m", type=int, default=14)
    _add_budget(p_bench)
    _add_out(p_bench)

    p_dump = sub.add_parser("dump", help="write the matrix itself in the text dump format")
    _add_params(p_dump)
    _add_budget(p_dump)
    _add_out(p_dump)

    return parser


def _field(p: int) -> FieldSpec:
    return FieldSpec(p)


def _params(args) -> InclusionParams:
    return InclusionParams(args.m, args.i, args.n, _field(args.p))


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def cmd_rank(args) -> int:
    params = _params(args)
    parts = []
    formula = None
    if args.method in ("formula", "both"):
        breakdown = rank_formula(params)
        formula = breakdown.total
        parts.append(f"formula={formula}")
        if args.verbose:
            norm = breakdown.normalized
            if norm.transposed:
                print(
                    f"normalized to m={norm.params.m} n={norm.params.n} i={norm.params.i} (transposed)"
                )
            for t in breakdown.terms:
                tag = "included" if t.included else "excluded"
                print(f"term j={t.j}: value={t.value} {tag}")
    oracle = None
    if args.method in ("eliminate", "both"):
        oracle = eliminate_rank(
            params, memory_budget=args.memory_budget, allow_streaming=args.streaming
        )
        parts.append(f"oracle={oracle}")
    if args.method == "both":
        verdict = "MATCH" if formula == oracle else "MISMATCH"
        parts.append(verdict)
        print(" ".join(parts))
        return EXIT_OK if verdict == "MATCH" else EXIT_MISMATCH
    print(" ".join(parts))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_m < 1:
        raise ParameterError(f"--max-m must be >= 1, got {args.max_m}")
    try:
        chars = [int(tok) for tok in args.primes.split(",") if tok.strip() != ""]
    except ValueError:
        raise ParameterError(f"--primes must be comma-separated integers, got {args.primes!r}") from None
    if not chars:
        raise ParameterError("--primes must name at least one characteristic")
    for p in chars:
        _field(p)
    cases = 0
    mismatches = 0
    for case in sweep_cases(
        range(args.max_m + 1),
        chars,
        include_oracle=True,
        memory_budget=args.memory_budget,
        allow_streaming=True,
        inject_fault=args.inject_fault,
    ):
        cases += 1
        if not case.match:
            mismatches += 1
            print(
                f"MISMATCH m={case.m} n={case.n} i={case.i} p={case.p} "
                f"formula={case.formula} oracle={case.oracle}"
            )
    print(f"{cases} cases, {mismatches} mismatches")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def cmd_table(args) -> int:
    _field(args.p)
    if args.min_m < 0 or args.max_m < args.min_m:
        raise ParameterError(f"bad m range {args.min_m}..{args.max_m}")
    doc = format_cases(
        sweep_cases(
            range(args.min_m, args.max_m + 1),
            [args.p],
            pairs=args.pairs,
            include_oracle=not args.no_oracle,
            memory_budget=args.memory_budget,
            allow_streaming=True,
        ),
        args.format,
    )
    _emit(doc, args.out)
    return EXIT_OK


def cmd_filtration(args) -> int:
    params = normalize_params(_params(args)).params
    report = filtration_audit(params, memory_budget=args.memory_budget)
    _emit(json.dumps(report.to_json_dict(), indent=2) + "\n", args.out)
    return EXIT_OK if report.match else EXIT_MISMATCH


def _gf2_words(n: int) -> int:
    return (n + 63) >> 6


def cmd_bench(args) -> int:
    field = _field(args.p)
    if field.characteristic == 0:
        raise ParameterError("bench needs a prime characteristic (streaming mode excludes 0)")
    if args.min_m < args.n or args.max_m < args.min_m:
        raise ParameterError(f"bad m range {args.min_m}..{args.max_m} for n={args.n}")
    lines = ["m n i p method backend rank seconds mem_bytes status"]
    worst = EXIT_OK
    for m in range(args.min_m, args.max_m + 1):
        params = InclusionParams(m, args.i, args.n, field)
        expect = rank_formula(params).total
        n_rows, n_cols = params.n_rows, params.n_cols
        for method, backend in (("dense", "compiled"), ("dense", "pure"), ("streaming", "-")):
            if method == "dense":
                t0 = time.perf_counter()
                try:
                    mat = build_inclusion_matrix(params, memory_budget=args.memory_budget)
                except MemoryBudgetError:
                    lines.append(f"{m} {args.n} {args.i} {args.p} dense {backend} - - - skipped(dense)")
                    continue
                if backend == "compiled" and backend_name() != "compiled":
                    lines.append(f"{m} {args.n} {args.i} {args.p} dense compiled - - - skipped(no-ext)")
                    continue
                rank = mat.rank(backend=backend)
                dt = time.perf_counter() - t0
                mem = n_rows * n_cols * 8
            else:
                t0 = time.perf_counter()
                rank = streaming_rank(params)
                dt = time.perf_counter() - t0
                row_bytes = _gf2_words(n_rows) * 8 if args.p == 2 else n_rows * 8
                mem = rank * row_bytes
            status = "ok" if rank == expect else "RANK-MISMATCH"
            if status != "ok":
                worst = EXIT_MISMATCH
            lines.append(
                f"{m} {args.n} {args.i} {args.p} {method} {backend} {rank} {dt:.4f} {mem} {status}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return worst


def cmd_dump(args) -> int:
    params = _params(args)
    mat = build_inclusion_matrix(params, memory_budget=args.memory_budget)
    if args.out is None:
        mat.dump(sys.stdout)
    else:
        with open(args.out, "w") as fh:
            mat.dump(fh)
    return EXIT_OK


_COMMANDS = {
    "rank": cmd_rank,
    "verify": cmd_verify,
    "table": cmd_table,
    "filtration": cmd_filtration,
    "bench": cmd_bench,
    "dump": cmd_dump,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParameterError as exc:
        print(f"inclurank {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryBudgetError as exc:
        print(f"inclurank {args.command}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
