"""Command-line front end: ``qrm <command> [flags]``.

Machine-readable output goes to stdout, diagnostics to stderr.  Exit codes:
0 on success, 1 on domain or runtime failures, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections.abc import Sequence
from dataclasses import asdict, dataclass, fields, replace

from qrm import css, error_analysis, gf2, reed_muller, verify
from qrm.errors import DomainError, QrmError

FORMATS = ("csv", "md", "json")


@dataclass(frozen=True)
class CliConfig:
    enumeration_cap: int = gf2.DEFAULT_ENUM_CAP
    leader_cap: int = css.DEFAULT_LEADER_CAP
    output_format: str = "csv"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.enumeration_cap < 1 or self.leader_cap < 1:
            raise ValueError("caps must be positive")
        if self.output_format not in FORMATS:
            raise ValueError(f"output_format must be one of {FORMATS}")


def read_config_file(path: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def load_config(args: argparse.Namespace) -> CliConfig:
    """Merge defaults, ``--config`` file, ``QRM_ENUM_CAP`` and explicit flags, in that order."""
    config = CliConfig()
    known = {f.name for f in fields(CliConfig)}
    if getattr(args, "config", None):
        updates = {}
        for key, value in read_config_file(args.config).items():
            if key not in known:
                raise ValueError(f"unknown config key {key!r}")
            updates[key] = value if key == "output_format" else int(value)
        config = replace(config, **updates)
    env = os.environ.get(gf2.ENUM_CAP_ENV)
    if env:
        config = replace(config, enumeration_cap=int(env))
    flags = {
        "enumeration_cap": getattr(args, "enum_cap", None),
        "leader_cap": getattr(args, "leader_cap", None),
        "output_format": getattr(args, "format", None),
        "seed": getattr(args, "seed", None),
    }
    return replace(config, **{k: v for k, v in flags.items() if v is not None})


def _grid_markdown(rows: Sequence, title: str) -> str:
    lengths = sorted({row.n for row in rows})
    distances = sorted({row.d for row in rows})
    cells = {(row.n, row.d): row.k for row in rows}
    head = "| n \\ d | " + " | ".join(str(d) for d in distances) + " |"
    rule = "|---:|" + "---:|" * len(distances)
    body = [
        f"| {n} | " + " | ".join(str(cells.get((n, d), "")) for d in distances) + " |"
        for n in lengths
    ]
    return "\n".join([f"{title} (cells give k)", "", head, rule, *body]) + "\n"


def cmd_tables(args: argparse.Namespace, config: CliConfig) -> int:
    if args.which == "classical":
        rows = reed_muller.classical_table(args.max_m)
        title = "Classical Reed-Muller codes (n, k, d)"
    else:
        rows = css.quantum_table(args.max_m)
        title = "Quantum Reed-Muller codes [[n, k, d]]"
    if config.output_format == "md":
        sys.stdout.write(_grid_markdown(rows, title))
    elif config.output_format == "json":
        json.dump([asdict(row) for row in rows], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["m", "r", "n", "k", "d"])
        writer.writerows([row.m, row.r, row.n, row.k, row.d] for row in rows)
    return 0


def cmd_params(args: argparse.Namespace, config: CliConfig) -> int:
    if args.quantum:
        code = css.css_from_rm(args.r, args.m)
        print(f"{code} t={code.t}")
    else:
        spec = reed_muller.RmSpec(args.r, args.m)
        print(f"({spec.n},{spec.k},{spec.d})")
    return 0


def cmd_matrix(args: argparse.Namespace, config: CliConfig) -> int:
    sys.stdout.write(reed_muller.rm_generator((args.r, args.m)).to_text())
    return 0


def cmd_encode(args: argparse.Namespace, config: CliConfig) -> int:
    code = css.css_from_rm(args.r, args.m)
    encode = css.encode_basis1 if args.basis == 1 else css.encode_basis2
    state = encode(code, args.w, config.enumeration_cap)
    json.dump(state.to_json(), sys.stdout)
    sys.stdout.write("\n")
    return 0


def _correctable(args: argparse.Namespace) -> int:
    if args.t is not None:
        return args.t
    if args.d is None:
        raise DomainError("give either --d or --t")
    return (args.d - 1) // 2


def cmd_bound(args: argparse.Namespace, config: CliConfig) -> int:
    t = _correctable(args)
    pe = error_analysis.block_error_bound(args.n, t, args.p)
    pq = error_analysis.qubit_error_rate(pe, args.n)
    if config.output_format == "json":
        print(json.dumps({"n": args.n, "t": t, "p": args.p, "pe": pe, "pq": pq}))
    else:
        print(f"P_e={pe:.9e}")
        print(f"P_q={pq:.9e}")
    return 0


def parse_code_spec(text: str) -> error_analysis.CodePoint:
    """Parse ``rm:<r>,<m>`` or ``rep:<n>,<d>``."""
    kind, _, rest = text.partition(":")
    try:
        a, b = (int(x) for x in rest.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad code spec {text!r}") from None
    if kind == "rm":
        return error_analysis.CodePoint.reed_muller(a, b)
    if kind == "rep":
        return error_analysis.CodePoint.repetition(a, b)
    raise argparse.ArgumentTypeError(f"unknown code kind {kind!r} (use rm or rep)")


def cmd_curve(args: argparse.Namespace, config: CliConfig) -> int:
    codes = args.codes or error_analysis.comparison_codes()
    curves = error_analysis.performance_curve(codes, args.p_min, args.p_max, args.points, args.spacing)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["label", "p", "pe", "pq"])
    writer.writerows(error_analysis.curve_rows(curves))
    return 0


def cmd_mc(args: argparse.Namespace, config: CliConfig) -> int:
    t = _correctable(args)
    res = error_analysis.monte_carlo_block_error(args.n, t, args.p, args.trials, config.seed)
    print(f"estimate={res.estimate:.9e}")
    print(f"stderr={res.stderr:.9e}")
    print(f"trials={res.trials}")
    print(f"seed={res.seed}")
    print(f"rng={res.algorithm}")
    return 0


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    first_failure = None
    for result in verify.run_checks(args.max_m, config.enumeration_cap, config.leader_cap, config.seed):
        print(result.line(), flush=True)
        if result.status == verify.FAIL and first_failure is None:
            first_failure = result.name
    if first_failure is not None:
        print(f"verification failed: {first_failure}", file=sys.stderr)
        return 1
    return 0


def _max_m(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("--max-m must be at least 2")
    return value


def _probability(text: str) -> float:
    return float(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="key = value file")
    common.add_argument("--enum-cap", type=int, default=argparse.SUPPRESS, help="log2 codeword cap")
    common.add_argument("--leader-cap", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="qrm", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="parameter tables")
    p.add_argument("--which", choices=("classical", "quantum"), required=True)
    p.add_argument("--max-m", type=_max_m, default=10)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("params", parents=[common], help="parameters of one code")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--quantum", action="store_true")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("matrix", parents=[common], help="generator matrix of RM(r,m)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("encode", parents=[common], help="encoded basis state as JSON")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--w", required=True, help="logical word as a bit string in C1")
    p.add_argument("--basis", type=int, choices=(1, 2), required=True)
    p.set_defaults(func=cmd_encode)

    for name, func, help_text in (
        ("bound", cmd_bound, "block and qubit error rate at one p"),
        ("mc", cmd_mc, "Monte Carlo block error estimate"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--n", type=int, required=True)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--d", type=int)
        group.add_argument("--t", type=int)
        p.add_argument("--p", type=_probability, required=True)
        if name == "mc":
            p.add_argument("--trials", type=int, default=10**6)
        p.set_defaults(func=func)

    p = sub.add_parser("curve", parents=[common], help="error performance curves as CSV")
    p.add_argument(
        "--codes", nargs="+", type=parse_code_spec, metavar="SPEC", help="rm:<r>,<m> or rep:<n>,<d>"
    )
    p.add_argument("--p-min", type=_probability, default=1e-4)
    p.add_argument("--p-max", type=_probability, default=0.2)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--spacing", choices=("linear", "log"), default="log")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--max-m", type=_max_m, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args)
    except (OSError, ValueError) as exc:
        parser.error(str(exc))
    try:
        return args.func(args, config)
    except (QrmError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
