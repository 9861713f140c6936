"""Command-line interface.

Exit status: 0 on success, 1 on a verification failure, 2 on an input
error.  All indices in the output are external (file) indices; data of the
empty cell appears only under an ``augmentation`` key in JSON, and as index
-1 in text output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .bases import dump_bases, extract_bases, intersection_matrix
from .complexes import (
    ComplexFormatError,
    OrderedComplex,
    from_boundary_format,
    from_simplicial_format,
)
from .matroid import (
    CapExceededError,
    check_matroid,
    enumerate_cotrees,
    enumerate_leftovers,
    enumerate_trees,
)
from .reduction import (
    betti_numbers,
    exhaustive_column_reduce,
    exhaustive_row_reduce,
)
from .tripartition import dump_diagram, persistence_diagram, tri_partition

__all__ = ["RunConfig", "run", "main", "render_command"]

COMMANDS = ("tripartition", "diagram", "bases", "betti", "verify", "matroid")


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    format: str | None = None  # "simplicial" | "boundary" | None = infer
    complete: bool = False
    dimension: int | None = None
    output: str = "text"  # "text" | "json"
    seed: int = 0
    level: str = "quick"


def _load_complex(config: RunConfig) -> OrderedComplex:
    if config.input is None:
        raise ComplexFormatError("PARSE", "an input file is required")
    with open(config.input, "r", encoding="utf-8") as handle:
        text = handle.read()
    fmt = config.format
    if fmt is None:
        fmt = "boundary" if config.input.endswith(".bnd") else "simplicial"
    if fmt == "boundary":
        return from_boundary_format(text)
    return from_simplicial_format(text, complete=config.complete)


def _dim_key(p: int) -> str:
    return "augmentation" if p == -1 else f"p={p}"


def _ext(cells) -> list[int]:
    return sorted(c - 1 for c in cells)


def _dims(k: OrderedComplex, dimension: int | None) -> list[int]:
    if dimension is None:
        return list(range(-1, k.dim + 1))
    return [dimension] if -1 <= dimension <= k.dim else []


def render_command(
    command: str, k: OrderedComplex, dimension: int | None, as_json: bool
) -> str:
    """Deterministic output for the pure computation commands."""
    if command == "tripartition":
        tp = tri_partition(k)
        data = {
            _dim_key(p): {
                "tree": _ext(tp.tree[p]),
                "cotree": _ext(tp.cotree[p]),
                "leftover": _ext(tp.leftover[p]),
            }
            for p in _dims(k, dimension)
        }
        if as_json:
            return json.dumps(data, indent=2, sort_keys=True)
        lines = []
        for p in _dims(k, dimension):
            entry = data[_dim_key(p)]
            lines.append(
                f"p={p} tree={len(entry['tree'])} cotree={len(entry['cotree'])} "
                f"leftover={len(entry['leftover'])}"
            )
            for label in ("tree", "cotree", "leftover"):
                lines.append(f"  {label}: {' '.join(map(str, entry[label]))}")
        return "\n".join(lines)

    if command == "betti":
        betti = betti_numbers(k)
        keep = _dims(k, dimension)
        if as_json:
            return json.dumps(
                {_dim_key(p): betti[p] for p in keep}, indent=2, sort_keys=True
            )
        return "\n".join(f"{p} {betti[p]}" for p in keep)

    if command == "diagram":
        diag = persistence_diagram(k)
        if dimension is not None:
            diag = type(diag)(
                finite=tuple(pt for pt in diag.finite if pt[0] == dimension),
                essential=tuple(pt for pt in diag.essential if pt[0] == dimension),
            )
        if as_json:
            return json.dumps(
                {
                    "finite": [
                        {"dim": p, "birth": i - 1, "death": j - 1}
                        for p, i, j in diag.finite
                    ],
                    "essential": [
                        {"dim": p, "birth": i - 1} for p, i in diag.essential
                    ],
                },
                indent=2,
                sort_keys=True,
            )
        return dump_diagram(diag)

    if command == "bases":
        d = k.boundary_matrix()
        cr = exhaustive_column_reduce(d)
        rr = exhaustive_row_reduce(d)
        bs = extract_bases(cr, rr, tri_partition(k))
        if as_json:
            dims = {c.id: c.dim for c in k.cells}
            keep = set(_dims(k, dimension))
            homology = [
                {
                    "cell": j - 1,
                    "kind": bs.homology_kind[j].value,
                    "members": _ext(bs.homology_members[j]),
                }
                for j in range(bs.size)
                if dims[j] in keep
            ]
            cohomology = [
                {
                    "cell": i - 1,
                    "kind": bs.cohomology_kind[i].value,
                    "members": _ext(bs.cohomology_members[i]),
                }
                for i in range(bs.size)
                if dims[i] in keep
            ]
            return json.dumps(
                {"homology": homology, "cohomology": cohomology},
                indent=2,
                sort_keys=True,
            )
        return dump_bases(bs, k)

    raise ValueError(f"unknown command {command!r}")


def _run_matroid(config: RunConfig, k: OrderedComplex, out) -> int:
    failed = False
    dims = [p for p in _dims(k, config.dimension) if p >= 0]
    payload = {}
    for p in dims:
        per_dim = {}
        for label, family in (
            ("trees", enumerate_trees(k, p)),
            ("cotrees", enumerate_cotrees(k, p)),
            ("leftovers", enumerate_leftovers(k, p)),
        ):
            report = check_matroid(family)
            report.name = f"{label} p={p}"
            per_dim[label] = {
                "passed": report.passed,
                "rank": family.rank(),
                "members": len(family.members),
            }
            failed = failed or not report.passed
            if config.output != "json":
                print(report.render(), file=out)
        payload[_dim_key(p)] = per_dim
    if config.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    return 1 if failed else 0


def _run_verify(config: RunConfig, out) -> int:
    from .verify import run_verification

    threads = int(os.environ.get("TRIPART_THREADS", "1"))
    results = run_verification(seed=config.seed, level=config.level, threads=threads)
    for result in results:
        print(result.render(), file=out)
    failed = [r for r in results if not r.passed]
    print(
        f"{'FAIL' if failed else 'PASS'} verify "
        f"({len(results) - len(failed)}/{len(results)} suites, "
        f"seed={config.seed}, level={config.level})",
        file=out,
    )
    return 1 if failed else 0


def run(config: RunConfig, out=None) -> int:
    """Execute one command; returns the process exit status."""
    out = out if out is not None else sys.stdout
    try:
        if config.command == "verify":
            return _run_verify(config, out)
        k = _load_complex(config)
        if config.command == "matroid":
            return _run_matroid(config, k, out)
        text = render_command(
            config.command, k, config.dimension, as_json=config.output == "json"
        )
        print(text, file=out)
        return 0
    except (ComplexFormatError, CapExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripart",
        description="Tree/cotree/leftover decompositions of polyhedral complexes over GF(2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        p = sub.add_parser(command)
        if command != "verify":
            p.add_argument("input", help="complex file (.smp or .bnd)")
            p.add_argument(
                "--format",
                choices=("simplicial", "boundary"),
                help="input format (default: inferred from the extension)",
            )
            p.add_argument(
                "--complete",
                action="store_true",
                help="insert missing faces (simplicial format only)",
            )
            p.add_argument(
                "--dimension", "-p", type=int, help="restrict output to one dimension"
            )
        group = p.add_mutually_exclusive_group()
        group.add_argument(
            "--json", dest="output", action="store_const", const="json", default="text"
        )
        group.add_argument("--text", dest="output", action="store_const", const="text")
        if command == "verify":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--level", choices=("quick", "full"), default="quick")
    return parser


def main(argv: list[str] | None = None) -> None:
    args = _parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        format=getattr(args, "format", None),
        complete=getattr(args, "complete", False),
        dimension=getattr(args, "dimension", None),
        output=args.output,
        seed=getattr(args, "seed", 0),
        level=getattr(args, "level", "quick"),
    )
    sys.exit(run(config))


if __name__ == "__main__":
    main()
