"""Command-line front end.

Exit codes: 0 success, 1 bad input (parse or validation), 2 the oracle
disagrees with the transfer-matrix result.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .chain import (
    ERROR,
    Chain,
    evaluate,
    realize,
    transfer_matrices,
    validate,
)
from .errors import MatchflowError
from .generators import (
    CHAIN_KINDS,
    ChainSpec,
    gen_chain,
    gen_random_chain,
    parse_cyclic,
    synthetic_chain,
)
from .graph import Graph
from .oracle import KVector, MatchCounter, k_vector_direct
from .transfer import apply

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2
ORACLE_VERTEX_CAP = 64


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit status 2 is reserved for MISMATCH
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass
class RunReport:
    command: list[str]
    k: int
    pair: list[str]
    n_vertices: int
    descending: list[int]
    ascending: list[int]
    hosoya: int
    complete: bool
    wall_time: float
    verification: str | None = None
    kvector: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        assert self.descending == self.ascending[::-1]
        assert self.hosoya == sum(self.ascending)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def _fmt(values) -> str:
    return " ".join(str(v) for v in values)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _check_k(k: int) -> int:
    if k < 0:
        raise InputError(f"--k must be non-negative, got {k}")
    return k


def _read_chain(path: str) -> Chain:
    data = _load_json(path)
    try:
        return Chain.from_dict(data)
    except MatchflowError as exc:
        raise InputError(f"{path}: {exc}") from None


# -- commands ------------------------------------------------------------------


def cmd_compute(args) -> int:
    chain = _read_chain(args.chain)
    diags = validate(chain, strict=args.strict)
    for d in diags:
        print(d, file=sys.stderr)
    if any(d.level == ERROR for d in diags):
        return EXIT_INPUT
    k = _check_k(args.k) if args.k is not None else chain.default_k()
    n = chain.n_vertices

    t0 = time.perf_counter()
    vec = evaluate(chain, k)
    elapsed = time.perf_counter() - t0

    verdict = None
    if args.verify:
        if n > args.verify_cap:
            verdict = "SKIPPED"
        else:
            direct = k_vector_direct(realize(chain), *vec.pair, k)
            verdict = "MATCH" if direct == vec else "MISMATCH"

    report = RunReport(
        command=list(args.argv),
        k=k,
        pair=list(vec.pair),
        n_vertices=n,
        descending=vec.g.descending(),
        ascending=list(vec.g.coeffs),
        hosoya=vec.g.total(),
        complete=k >= n // 2,
        wall_time=elapsed,
        verification=verdict,
        kvector=[list(b.coeffs) for b in vec.blocks],
    )
    if args.json:
        print(report.to_json())
    else:
        order = "0..k" if args.ascending else "k..0"
        print(f"chain: {args.chain} ({len(chain.blocks)} blocks, {n} vertices)")
        print(f"pair: ({vec.pair[0]}, {vec.pair[1]})  k = {k}")
        print(f"p(G,{order}): {_fmt(report.ascending if args.ascending else report.descending)}")
        if report.complete:
            print(f"Z(G) = {report.hosoya}")
        else:
            print(f"sum of p(G,i) for i <= {k} = {report.hosoya} (k below the matching bound {n // 2})")
        if verdict is not None:
            extra = f" (more than {args.verify_cap} vertices)" if verdict == "SKIPPED" else ""
            print(f"verify: {verdict}{extra}")
        print(f"time: {elapsed:.6f} s")
    return EXIT_MISMATCH if verdict == "MISMATCH" else EXIT_OK


def cmd_oracle(args) -> int:
    data = _load_json(args.graph)
    try:
        g = Graph.from_dict(data)
    except MatchflowError as exc:
        raise InputError(f"{args.graph}: {exc}") from None
    if g.n > ORACLE_VERTEX_CAP:
        raise InputError(f"graph has {g.n} vertices; the oracle accepts at most {ORACLE_VERTEX_CAP}")
    k = _check_k(args.k) if args.k is not None else g.n // 2
    t0 = time.perf_counter()
    if args.pair:
        a, b = args.pair
        try:
            vec = k_vector_direct(g, a, b, k)
        except MatchflowError as exc:
            raise InputError(str(exc)) from None
        series = vec.g
    else:
        vec = None
        series = MatchCounter(g, k).series()
    elapsed = time.perf_counter() - t0

    def show(s):
        return s.descending() if args.descending else list(s.coeffs)

    if args.json:
        out = {
            "command": list(args.argv),
            "k": k,
            "n_vertices": g.n,
            "ascending": list(series.coeffs),
            "descending": series.descending(),
            "hosoya": series.total(),
            "complete": k >= g.n // 2,
            "wall_time": elapsed,
        }
        if vec is not None:
            out["pair"] = list(vec.pair)
            out["kvector"] = [list(b.coeffs) for b in vec.blocks]
        print(json.dumps(out, indent=2))
        return EXIT_OK
    order = "k..0" if args.descending else "0..k"
    if vec is None:
        print(_fmt(show(series)))
    else:
        a, b = vec.pair
        names = ("G", f"G-{a}", f"G-{b}", f"G-{a}-{b}")
        for name, s in zip(names, vec.blocks):
            print(f"p({name},{order}): {_fmt(show(s))}")
    if k >= g.n // 2:
        print(f"Z(G) = {series.total()}")
    return EXIT_OK


def _spec_from_args(family: str, params: str | None) -> Chain:
    if family == "random":
        try:
            seed = int(params) if params else 0
        except ValueError:
            raise InputError(f"random chains take an integer seed, got {params!r}") from None
        return gen_random_chain(seed)
    try:
        if family == "cyclic-chain":
            spec = ChainSpec("cyclic-chain", parse_cyclic(params or ""))
        elif family == "benzenoid":
            spec = ChainSpec("benzenoid", (params or "").upper())
        else:
            spec = ChainSpec(family, params)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return gen_chain(spec)


def cmd_gen(args) -> int:
    chain = _spec_from_args(args.family, args.params)
    text = chain.dumps()
    g = realize(chain)
    summary = f"{len(chain.blocks)} blocks, |V| = {g.n}, |E| = {g.m}"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}: {summary}")
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_realize(args) -> int:
    chain = _read_chain(args.chain)
    try:
        g = realize(chain)
    except MatchflowError as exc:
        raise InputError(str(exc)) from None
    text = json.dumps(g.to_dict(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}: |V| = {g.n}, |E| = {g.m}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_validate(args) -> int:
    chain = _read_chain(args.chain)
    diags = validate(chain, strict=args.strict)
    for d in diags:
        print(d)
    errors = sum(d.level == ERROR for d in diags)
    print(f"{errors} error(s), {len(diags) - errors} warning(s)")
    return EXIT_INPUT if errors else EXIT_OK


def run_bench(blocks: int, k: int, repeat: int = 1) -> dict:
    """Time the transfer pipeline on the synthetic chain; timings are best of ``repeat``."""
    if blocks < 1 or k < 1 or repeat < 1:
        raise InputError("--blocks, --k and --repeat must be at least 1")
    chain = synthetic_chain(blocks)
    best_build = best_fold = float("inf")
    peak = 0
    final: KVector | None = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        mats = transfer_matrices(chain, k)
        t1 = time.perf_counter()
        vec = k_vector_direct(chain.base, *chain.pair, k)
        for tm in mats:
            vec = apply(tm, vec)
            peak = max(peak, max(max(b.coeffs) for b in vec.blocks))
        t2 = time.perf_counter()
        best_build = min(best_build, t1 - t0)
        best_fold = min(best_fold, t2 - t1)
        final = vec
    return {
        "blocks": blocks,
        "k": k,
        "repeat": repeat,
        "vertices": chain.n_vertices,
        "build_s": best_build,
        "fold_s": best_fold,
        "per_block_us": (best_build + best_fold) / blocks * 1e6,
        "peak_digits": len(str(peak)),
        "top_coefficient_digits": len(str(final.g.coeffs[-1])),
    }


def cmd_bench(args) -> int:
    res = run_bench(args.blocks, args.k, args.repeat)
    if args.json:
        print(json.dumps(res, indent=2))
        return EXIT_OK
    print(f"synthetic chain: {res['blocks']} blocks, {res['vertices']} vertices, k = {res['k']}")
    print(f"matrix build: {res['build_s']:.6f} s")
    print(f"fold:         {res['fold_s']:.6f} s")
    print(f"per block:    {res['per_block_us']:.2f} us")
    print(f"peak digits:  {res['peak_digits']}")
    print(f"p(G,k) digits: {res['top_coefficient_digits']}")
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="matchflow",
        description="k-matching counts and Hosoya index of chains of glued blocks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate a chain file")
    p.add_argument("chain")
    p.add_argument("--k", type=int, help="size bound (default: chain file value or n // 2)")
    p.add_argument("--verify", action="store_true", help="compare with the direct oracle")
    p.add_argument("--verify-cap", type=int, default=20, help="largest graph the oracle checks (default 20)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--ascending", action="store_true", help="print p(G,0) first")
    p.add_argument("--strict", action="store_true", help="treat validation warnings as errors")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="matching series of a graph file by direct counting")
    p.add_argument("graph")
    p.add_argument("--pair", nargs=2, metavar=("A", "B"))
    p.add_argument("--k", type=int)
    p.add_argument("--descending", action="store_true", help="print p(G,k) first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a chain file")
    p.add_argument("family", choices=[*CHAIN_KINDS, "random"])
    p.add_argument("params", nargs="?", default=None,
                   help="fixture name, L/R word, LENGTH:OFFSET list, or seed")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the pipeline on a synthetic chain")
    p.add_argument("--blocks", type=int, default=1000)
    p.add_argument("--k", type=int, default=50)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("validate", help="check a chain file")
    p.add_argument("chain")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("realize", help="write the glued graph as a graph file")
    p.add_argument("chain")
    p.add_argument("--out")
    p.set_defaults(func=cmd_realize)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = ["matchflow", *argv]
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MatchflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
