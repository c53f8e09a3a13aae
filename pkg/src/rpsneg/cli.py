"""Command-line front end.

    rpsneg negate   MODEL [-k 9] [--format csv|json]
    rpsneg trace    MODEL [-k 9] [--eps 1e-4] [--format csv|json]
    rpsneg baseline MODEL --method yager|yin [--format csv|json]

Exit codes: 0 ok, 2 parse, 3 validation, 4 math domain, 5 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .errors import CapacityError, CountOverflowError, DomainError, NumericalError, ValidationError
from .measures import rd_matrix
from .modelfile import ModelFileError, bpa_to_model, load_model, pm_to_model, probability_to_model
from .negation import iterate_negation, yager_negate, yin_negate
from .pes import DEFAULT_MAX_FRAME_SIZE, enumerate_pes
from .trace import DEFAULT_EPS, DEFAULT_ITERATIONS, build_trace, theoretical_distance_series

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_DOMAIN = 4
EXIT_RESOURCE = 5


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.4f}"


def _write_csv(header: list[str], rows: list[list[str]], out) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buf.getvalue())


def _write_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _load_pm(args):
    model = load_model(args.model)
    if model.kind != "pm":
        raise ModelFileError(f"{args.model}: command '{args.command}' needs kind 'pm', got {model.kind!r}")
    index = enumerate_pes(model.frame, max_frame_size=args.max_frame_size)
    return model.to_pm(renormalize=args.renormalize), index


def cmd_negate(args, out) -> int:
    pm0, index = _load_pm(args)
    series = iterate_negation(pm0, args.iterations, index)
    if args.format == "json":
        _write_json([{"i": i, "model": pm_to_model(pm)} for i, pm in enumerate(series)], out)
    else:
        header = ["i"] + [index.frame.format_event(e) for e in index.nonempty_events]
        rows = [[str(i)] + [_fmt(x) for x in pm.as_dense_vector(index)] for i, pm in enumerate(series)]
        _write_csv(header, rows, out)
    return EXIT_OK


def cmd_trace(args, out) -> int:
    pm0, index = _load_pm(args)
    if args.iterations < 1:
        raise DomainError("trace needs --iterations >= 1")
    trace = build_trace(pm0, args.iterations, eps=args.eps, index=index, rd=rd_matrix(index))
    k = trace.iterations
    d = trace.step_distances
    theory = theoretical_distance_series(d[0], trace.delta, k)
    ratios = trace.distance_ratios()
    records = []
    for i in range(k + 1):
        records.append(
            {
                "i": i,
                "entropy": trace.entropies[i],
                "step_distance": d[i] if i < k else None,
                "theoretical_distance": theory[i] if i < k else None,
                "distance_ratio": ratios[i] if i < k - 1 and not math.isnan(ratios[i]) else None,
                "converged": trace.converged_at is not None and i >= trace.converged_at,
            }
        )
    if args.format == "json":
        _write_json(records, out)
    else:
        header = list(records[0])
        rows = [
            [
                str(r["i"]),
                _fmt(r["entropy"]),
                _fmt(r["step_distance"]),
                _fmt(r["theoretical_distance"]),
                _fmt(r["distance_ratio"]),
                "1" if r["converged"] else "0",
            ]
            for r in records
        ]
        _write_csv(header, rows, out)
    return EXIT_OK


def cmd_baseline(args, out) -> int:
    model = load_model(args.model)
    wanted = {"yager": "probability", "yin": "bpa"}[args.method]
    if model.kind != wanted:
        raise ModelFileError(
            f"{args.model}: method {args.method!r} needs kind {wanted!r}, got {model.kind!r}"
        )
    if args.method == "yager":
        result = yager_negate(model.to_probability(renormalize=args.renormalize))
        doc = probability_to_model(result)
    else:
        result = yin_negate(model.to_bpa(renormalize=args.renormalize))
        doc = bpa_to_model(result)
    if args.format == "json":
        _write_json(doc, out)
    else:
        rows = [["{" + " ".join(e["event"]) + "}", _fmt(e["mass"])] for e in doc["masses"]]
        _write_csv(["event", "mass"], rows, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpsneg", description="Negation of permutation mass functions in random permutation sets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("model", help="JSON model file")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--renormalize", action="store_true", help="rescale input masses to sum to 1")
    common.add_argument(
        "--max-frame-size", type=int, default=DEFAULT_MAX_FRAME_SIZE,
        help="largest frame whose event space may be enumerated (default %(default)s)",
    )

    p = sub.add_parser("negate", parents=[common], help="iterate the PM negation, one row per PM_i")
    p.add_argument("-k", "--iterations", type=int, default=DEFAULT_ITERATIONS)
    p.set_defaults(func=cmd_negate)

    p = sub.add_parser("trace", parents=[common], help="entropy and step distance per iteration")
    p.add_argument("-k", "--iterations", type=int, default=DEFAULT_ITERATIONS)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS, help="convergence tolerance (sup-norm)")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("baseline", parents=[common], help="one step of Yager or Yin negation")
    p.add_argument("--method", choices=("yager", "yin"), required=True)
    p.set_defaults(func=cmd_baseline)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ModelFileError as exc:
        code, msg = EXIT_PARSE, f"parse error: {exc}"
    except ValidationError as exc:
        code, msg = EXIT_VALIDATION, f"validation error: {exc}"
    except (CapacityError, CountOverflowError) as exc:
        code, msg = EXIT_RESOURCE, f"resource error: {exc}"
    except (DomainError, NumericalError) as exc:
        code, msg = EXIT_DOMAIN, f"math domain error: {exc}"
    print(f"rpsneg: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
