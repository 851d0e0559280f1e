"""Command-line front end.

Subcommands
-----------
analyze     classification report for a tree (JSON)
generators  combined binomial generators (text, JSON, or Macaulay2 script)
verify      run the exact verification suite, exit 0 iff everything passes
laplacian   weighted complete graph and reduced Laplacian of the derived graph
kernel      check a generator file for kernel membership under the tree's map

Exit codes: 0 pass, 1 check failure, 2 tree outside the toric regimes,
3 input error.  Identical configurations produce byte-identical artifacts.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .binomials import parse_binomial
from .classify import classify
from .errors import NotApplicableError, TreeError
from .graphs import derive_graph
from .ideals import (
    combined_from_classification,
    generators_json,
    generators_m2,
    generators_text,
)
from .laplacians import form_text, gamma_graph, gamma_laplacian
from .pipeline import build_context, kernel_membership, verify_tree
from .trees import load_tree

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_NOT_APPLICABLE = 2
EXIT_INPUT_ERROR = 3


@dataclass
class CliConfig:
    subcommand: str
    tree: str
    out: str | None = None
    trials: int = 100
    seed: int = 0
    fmt: str = "text"
    generators: str | None = None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_analyze(config: CliConfig) -> int:
    tree = load_tree(config.tree)
    _emit(_json(classify(tree).to_dict()), config.out)
    return EXIT_OK


def _cmd_generators(config: CliConfig) -> int:
    tree = load_tree(config.tree)
    gens, kind = combined_from_classification(classify(tree))
    if config.fmt == "text":
        _emit(generators_text(gens), config.out)
    elif config.fmt == "json":
        _emit(_json(generators_json(gens, kind)), config.out)
    elif config.fmt == "m2-script":
        _emit(generators_m2(gens, kind, tree.n_leaves), config.out)
    else:
        raise ValueError(f"unknown format {config.fmt!r}")
    return EXIT_OK


def _cmd_verify(config: CliConfig) -> int:
    tree = load_tree(config.tree)
    report = verify_tree(tree, trials=config.trials, seed=config.seed)
    _emit(_json(report.to_dict()), config.out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_laplacian(config: CliConfig) -> int:
    tree = load_tree(config.tree)
    g = derive_graph(tree)
    weights = gamma_graph(g)
    grid = gamma_laplacian(g)
    doc = {
        "n": g.n,
        "gamma_weights": [
            {"edge": list(e), "weight": form_text(w)}
            for e, w in sorted(weights.items())
        ],
        "laplacian": [[form_text(entry) for entry in row] for row in grid],
        "reduced": [
            [form_text(grid[i][j]) for j in range(1, g.n + 1)]
            for i in range(1, g.n + 1)
        ],
    }
    _emit(_json(doc), config.out)
    return EXIT_OK


def _cmd_kernel(config: CliConfig) -> int:
    tree = load_tree(config.tree)
    if config.generators is None:
        raise ValueError("kernel needs --generators FILE")
    with open(config.generators, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    gens = [parse_binomial(ln) for ln in lines]
    ctx = build_context(tree)
    result = kernel_membership(ctx, gens)
    doc = {
        "tree": tree.to_dict(),
        "coordinates": ctx.kind,
        "results": [
            {"generator": b.text(), "in_kernel": b.text() not in result["failing"]}
            for b in gens
        ],
        "all_in_kernel": result["passed"],
    }
    _emit(_json(doc), config.out)
    return EXIT_OK if result["passed"] else EXIT_CHECK_FAILED


_COMMANDS = {
    "analyze": _cmd_analyze,
    "generators": _cmd_generators,
    "verify": _cmd_verify,
    "laplacian": _cmd_laplacian,
    "kernel": _cmd_kernel,
}


def run(config: CliConfig) -> int:
    """Execute one subcommand; maps exceptions to documented exit codes."""
    if config.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        return _COMMANDS[config.subcommand](config)
    except NotApplicableError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except (TreeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treetoric",
        description="Toric descriptions of tree-derived Gaussian models, verified exactly.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--tree", required=True, help="tree JSON document")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        if name == "verify":
            p.add_argument("--trials", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)
        if name == "generators":
            p.add_argument(
                "--format",
                dest="fmt",
                choices=("text", "json", "m2-script"),
                default="text",
            )
        if name == "kernel":
            p.add_argument("--generators", required=True, help="one binomial per line")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    config = CliConfig(
        subcommand=args.subcommand,
        tree=args.tree,
        out=args.out,
        trials=getattr(args, "trials", 100),
        seed=getattr(args, "seed", 0),
        fmt=getattr(args, "fmt", "text"),
        generators=getattr(args, "generators", None),
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
