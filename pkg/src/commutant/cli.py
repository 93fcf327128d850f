"""Command-line interface: analyze, cartan, verify, factor.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 internal assertion failure.  Output is byte-stable for fixed input and
flags: factor order, JSON key order and all random seeds are pinned.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .cartan import (
    AnalysisReport,
    BlockReport,
    assemble_report,
    full_cartan_matrix,
    partition_block,
)
from .errors import (
    CommutantError,
    InternalError,
    ParseError,
    VerificationFailure,
)
from .factorization import factor as factor_poly
from .fields import make_field
from .matrixio import load_matrix
from .oracle import sample_instance, verify_instance
from .poly import Poly, format_poly, parse_poly
from .structure import PartitionData

CHECK_NAMES = (
    "centralizer_dimension",
    "cartan_compressions",
    "radical_structure",
    "partition_round_trip",
)


# -- report serialization -----------------------------------------------------


def block_to_json_dict(block: BlockReport) -> dict:
    out: dict = {}
    if block.factor is not None:
        out["factor"] = format_poly(block.factor.poly)
        out["degree"] = block.factor.degree
    out["partition"] = {
        "parts": list(block.partition.parts),
        "mults": list(block.partition.mults),
    }
    out["cartan"] = [list(row) for row in block.cartan]
    out["cartan_det"] = block.cartan_det
    out["global_dimension"] = block.global_dimension.text()
    out["semisimple"] = block.semisimple
    out["dims"] = {
        "algebra": block.dim_algebra_over_K,
        "radical": block.dim_radical_over_K,
        "simples": list(block.simple_dims_over_K),
        "projectives": list(block.projective_dims_over_K),
        "injectives": list(block.injective_dims_over_K),
    }
    return out


def report_to_json_dict(report: AnalysisReport, full_cartan: bool = False) -> dict:
    out = {
        "field": report.field.spec_string(),
        "n": report.n,
        "charpoly": format_poly(report.charpoly),
        "blocks": [block_to_json_dict(b) for b in report.blocks],
        "l": report.total_num_simples_l,
        "total_cartan_det": report.total_cartan_det,
        "overall_global_dimension": report.overall_global_dimension.text(),
    }
    if full_cartan:
        out["full_cartan"] = full_cartan_matrix(report)
    return out


def _render_int_matrix(rows, indent: str) -> list[str]:
    width = max((len(str(x)) for row in rows for x in row), default=1)
    return [
        indent + "[" + " ".join(str(x).rjust(width) for x in row) + "]"
        for row in rows
    ]


def block_to_text_lines(block: BlockReport, indent: str = "  ") -> list[str]:
    lines = []
    if block.factor is not None:
        lines.append(
            f"{indent}factor: {format_poly(block.factor.poly)}  "
            f"(degree {block.factor.degree}, multiplicity {block.factor.multiplicity})"
        )
    else:
        lines.append(f"{indent}extension degree: {block.ext_degree}")
    lines.append(f"{indent}partition: {block.partition.text()}")
    lines.append(f"{indent}cartan matrix:")
    lines.extend(_render_int_matrix(block.cartan, indent + "  "))
    lines.append(f"{indent}cartan determinant: {block.cartan_det}")
    lines.append(f"{indent}global dimension: {block.global_dimension.text()}")
    lines.append(f"{indent}semisimple: {'true' if block.semisimple else 'false'}")
    lines.append(f"{indent}dim algebra over K: {block.dim_algebra_over_K}")
    lines.append(f"{indent}dim algebra over E: {block.dim_algebra_over_E}")
    lines.append(f"{indent}dim radical over K: {block.dim_radical_over_K}")
    lines.append(f"{indent}simple dims over K: {list(block.simple_dims_over_K)}")
    lines.append(
        f"{indent}projective dims over K: {list(block.projective_dims_over_K)}"
    )
    lines.append(
        f"{indent}injective dims over K: {list(block.injective_dims_over_K)}"
    )
    return lines


def report_to_text(report: AnalysisReport, full_cartan: bool = False) -> str:
    lines = [
        f"field: {report.field.spec_string()}",
        f"n: {report.n}",
        f"charpoly: {format_poly(report.charpoly)}",
    ]
    for idx, block in enumerate(report.blocks, start=1):
        lines.append(f"block {idx}:")
        lines.extend(block_to_text_lines(block))
    lines.append(f"l: {report.total_num_simples_l}")
    lines.append(f"total cartan determinant: {report.total_cartan_det}")
    lines.append(
        f"overall global dimension: {report.overall_global_dimension.text()}"
    )
    if full_cartan:
        lines.append("full cartan matrix:")
        lines.extend(_render_int_matrix(full_cartan_matrix(report), "  "))
    return "\n".join(lines) + "\n"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- argument parsing ----------------------------------------------------------


def parse_partition_arg(text: str) -> PartitionData:
    """Parse "a^m,b^n,..." with omitted exponents meaning 1; parts must be
    given strictly increasing."""
    parts: list[int] = []
    mults: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError(f"empty component in partition {text!r}")
        if "^" in chunk:
            base, _, exp = chunk.partition("^")
        else:
            base, exp = chunk, "1"
        try:
            part = int(base, 10)
            mult = int(exp, 10)
        except ValueError as exc:
            raise ParseError(f"bad partition component {chunk!r}") from exc
        parts.append(part)
        mults.append(mult)
    if not parts:
        raise ParseError("empty partition")
    if any(p <= 0 for p in parts) or any(m <= 0 for m in mults):
        raise ParseError("parts and exponents must be positive")
    if any(a >= b for a, b in zip(parts, parts[1:])):
        raise ParseError(
            "parts must be strictly increasing; write repeats as exponents (e.g. 2^2)"
        )
    return PartitionData(tuple(parts), tuple(mults))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commutant",
        description="Representation profile of matrix centralizer algebras "
        "over Q or GF(p), with brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser(
        "analyze", help="analyze a matrix file and print the block report"
    )
    p_analyze.add_argument("path", help="matrix file (see README for the format)")
    p_analyze.add_argument(
        "--format", choices=("json", "text"), default="text", dest="fmt"
    )
    p_analyze.add_argument(
        "--full-cartan",
        action="store_true",
        help="also emit the full block-diagonal Cartan matrix",
    )
    p_analyze.add_argument(
        "--seed", type=int, default=0, help="factorization seed (default 0)"
    )

    p_cartan = sub.add_parser(
        "cartan", help="Cartan data straight from a partition, no matrix needed"
    )
    p_cartan.add_argument(
        "--partition",
        required=True,
        help="block sizes as 'a^m,b^n,...', parts strictly increasing",
    )
    p_cartan.add_argument(
        "--ext-degree",
        type=int,
        default=1,
        help="degree d of the extension field E over K (default 1)",
    )
    p_cartan.add_argument(
        "--format", choices=("json", "text"), default="text", dest="fmt"
    )

    p_verify = sub.add_parser(
        "verify", help="run the brute-force oracle on random instances"
    )
    p_verify.add_argument("--trials", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-dim", type=int, default=10)
    p_verify.add_argument("--field", default="gf:5", dest="field_spec")
    p_verify.add_argument(
        "--product-samples",
        type=int,
        default=500,
        help="random radical products per nilpotency check (default 500)",
    )

    p_factor = sub.add_parser("factor", help="factor a monic polynomial")
    p_factor.add_argument(
        "path", nargs="?", help="file containing the polynomial text"
    )
    p_factor.add_argument("--poly", help="polynomial text, e.g. 't^2+1'")
    p_factor.add_argument("--field", default="q", dest="field_spec")
    p_factor.add_argument("--seed", type=int, default=0)
    return parser


# -- subcommands ----------------------------------------------------------------


def cmd_analyze(args) -> int:
    matrix = load_matrix(args.path)
    report = assemble_report(matrix, seed=args.seed)
    if args.fmt == "json":
        sys.stdout.write(_dump_json(report_to_json_dict(report, args.full_cartan)))
    else:
        sys.stdout.write(report_to_text(report, args.full_cartan))
    return 0


def cmd_cartan(args) -> int:
    partition = parse_partition_arg(args.partition)
    if args.ext_degree < 1:
        raise ParseError("--ext-degree must be at least 1")
    block = partition_block(partition, args.ext_degree)
    if args.fmt == "json":
        out = {"ext_degree": args.ext_degree}
        out.update(block_to_json_dict(block))
        out["dims"]["algebra_over_E"] = block.dim_algebra_over_E
        sys.stdout.write(_dump_json(out))
    else:
        sys.stdout.write("\n".join(block_to_text_lines(block, "")) + "\n")
    return 0


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ParseError("--trials must be at least 1")
    if args.max_dim < 1:
        raise ParseError("--max-dim must be at least 1")
    field = make_field(args.field_spec)
    rng = random.Random(args.seed)
    tallies = {name: 0 for name in CHECK_NAMES}
    failures: list[str] = []
    for trial in range(args.trials):
        fac, partition = sample_instance(field, rng, args.max_dim)
        report = verify_instance(
            fac,
            partition,
            product_samples=args.product_samples,
            seed=args.seed + trial,
        )
        for name in CHECK_NAMES:
            if report.checks.get(name, False):
                tallies[name] += 1
        if not report.passed:
            failures.append(
                f"instance {trial}: p = {report.factor_text}, "
                f"partition = {partition.text()}: "
                + "; ".join(report.failure_messages)
            )
    print(
        f"trials: {args.trials}  field: {field.spec_string()}  "
        f"max dimension: {args.max_dim}  seed: {args.seed}"
    )
    for name in CHECK_NAMES:
        print(f"{name}: {tallies[name]}/{args.trials}")
    if failures:
        print(f"result: FAIL ({len(failures)} failing instance(s))")
        for line in failures:
            print(line)
        return 1
    print(f"result: PASS ({args.trials}/{args.trials} instances)")
    return 0


def cmd_factor(args) -> int:
    if (args.path is None) == (args.poly is None):
        raise ParseError("factor needs exactly one of: a path argument or --poly")
    field = make_field(args.field_spec)
    if args.path is not None:
        try:
            with open(args.path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.path!r}: {exc}") from exc
    else:
        text = args.poly
    f = parse_poly(text, field)
    if not f.is_monic() or f.is_constant():
        raise ParseError("input must be a monic nonconstant polynomial")
    factors = factor_poly(f, seed=args.seed)
    check = Poly.one(field)
    for fac in factors:
        check = check * fac.poly**fac.multiplicity
    if check != f:
        raise InternalError("factor product does not reproduce the input")
    if len(factors) == 1 and factors[0].multiplicity == 1:
        print("irreducible")
        return 0
    pieces = []
    for fac in factors:
        text_f = f"({format_poly(fac.poly)})"
        if fac.multiplicity > 1:
            text_f += f"^{fac.multiplicity}"
        pieces.append(text_f)
    print("".join(pieces))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "cartan": cmd_cartan,
        "verify": cmd_verify,
        "factor": cmd_factor,
    }
    try:
        return handlers[args.command](args)
    except (InternalError, VerificationFailure) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (CommutantError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
