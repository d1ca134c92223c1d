"""Command-line entry point; every invocation prints one JSON document."""

import argparse
import json
import sys
from fractions import Fraction

from .core import DEFAULT_PRECISION, Kind, as_rat, load_sequence
from .corpus import DEFAULT_LENGTH, corpus_get, list_corpus
from .determinacy import DiagParams, index_estimate, stieltjes_index_estimate
from .errors import (ConstructionError, DegenerateError, DomainError, KindError, NotAMomentPrefixError,
                     PrecisionError, ShapeError, SingularPivotError, TruncationError)
from .hankel import max_order, psd_prefix
from .rigidity import extend_indeterminate, perturb_interval, prepend, prepend_region, rigidity_report, stieltjes_extend

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_TRUNCATION = 0, 1, 2, 3

_DOMAIN_ERRORS = (DomainError, KindError, ShapeError, NotAMomentPrefixError, ConstructionError,
                  LookupError, ValueError, TypeError, OSError)
_TRUNCATION_ERRORS = (TruncationError, DegenerateError, SingularPivotError, PrecisionError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rat(text):
    try:
        return as_rat(text)
    except (DomainError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _rat_list(text):
    return [_rat(v) for v in text.split(",") if v.strip()]


def _params(args) -> DiagParams:
    kwargs = {"precision": getattr(args, "precision", DEFAULT_PRECISION)}
    if getattr(args, "window", None) is not None:
        kwargs["window"] = args.window
    if getattr(args, "ratio_threshold", None) is not None:
        kwargs["ratio_threshold"] = args.ratio_threshold
    return DiagParams(**kwargs)


def _auto_terms(seq, nmax=0, cap=16):
    if seq.kind is Kind.STIELTJES:
        return max(1, min(cap, len(seq) - nmax - 1))
    return max(1, min(cap, (len(seq) - 2 * nmax - 1) // 2))


def cmd_check(args):
    seq = load_sequence(args.file)
    n = args.order or max_order(seq)
    out = {"order": n, "hankel": psd_prefix(seq, n).to_dict()}
    shifted_order = n if len(seq) >= 2 * n else n - 1
    if seq.kind is Kind.STIELTJES and shifted_order >= 1:
        out["shifted"] = psd_prefix(seq.entries[1:], shifted_order).to_dict()
    return out


def cmd_index(args):
    seq = load_sequence(args.file)
    K = args.terms or _auto_terms(seq, args.nmax)
    if seq.kind is Kind.STIELTJES:
        window = stieltjes_index_estimate(seq, args.nmax, K, _params(args))
    else:
        window = index_estimate(seq, args.nmax, K, _params(args))
    return {
        "kind": seq.kind.value,
        "K": K,
        "index_window": window.to_list(),
        "verdicts": [v.to_dict() for v in window.verdicts],
    }


def cmd_region(args):
    seq = load_sequence(args.file)
    return prepend_region(seq, args.terms).to_dict()


def cmd_prepend(args):
    seq = load_sequence(args.file)
    out, placement = prepend(seq, args.c1, args.c2, args.terms)
    return {"placement": placement.value, "sequence": out.to_dict()}


def cmd_extend(args):
    seq = load_sequence(args.file)
    margins = args.margins or [Fraction(1)] * args.n
    K = args.terms or min(12, _auto_terms(seq))
    if seq.kind is Kind.STIELTJES:
        out = stieltjes_extend(seq, args.n, margins, K)
    else:
        odd = args.odd_values or [Fraction(0)] * args.n
        out = extend_indeterminate(seq, args.n, odd, margins, K)
    return {"K": K, "sequence": out.to_dict()}


def cmd_perturb(args):
    seq = load_sequence(args.file)
    iv = perturb_interval(seq, args.m, args.order)
    out = iv.to_dict()
    out["interval"] = [out["lo"], out["hi"]]
    return out


def cmd_report(args):
    seq = load_sequence(args.file)
    report = rigidity_report(seq, args.nmax, _params(args), K=args.terms, order=args.order)
    out = report.to_dict()
    out["K"] = report.K
    return out


def cmd_corpus(args):
    if args.action == "list":
        return {"entries": [e.to_dict() for e in list_corpus()]}
    if not args.name:
        raise UsageError("corpus get needs a name")
    return corpus_get(args.name, args.len).to_dict()


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                        help=f"working precision in bits (default {DEFAULT_PRECISION})")
    common.add_argument("--window", type=int, default=argparse.SUPPRESS)
    common.add_argument("--ratio-threshold", type=float, default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="compact single-line JSON")

    parser = _Parser(prog="momentrigidity", parents=[common],
                     description="Exact diagnostics for moment sequences.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check", parents=[common], help="PSD / Stieltjes prefix verdicts")
    p.add_argument("file")
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("index", parents=[common], help="index-of-determinacy window")
    p.add_argument("file")
    p.add_argument("--nmax", type=int, default=2)
    p.add_argument("--terms", type=int)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("region", parents=[common], help="truncated prepend region")
    p.add_argument("file")
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("prepend", parents=[common], help="prepend (c_-2, c_-1)")
    p.add_argument("file")
    p.add_argument("--c1", type=_rat, required=True)
    p.add_argument("--c2", type=_rat, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=cmd_prepend)

    p = sub.add_parser("extend", parents=[common], help="iterated interior prepends")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--margins", type=_rat_list, help="comma-separated, default all 1")
    p.add_argument("--odd-values", type=_rat_list, help="comma-separated, default all 0")
    p.add_argument("--terms", type=int)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("perturb", parents=[common], help="single-entry perturbation interval")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("report", parents=[common], help="rigidity classification")
    p.add_argument("file")
    p.add_argument("--nmax", type=int, default=2)
    p.add_argument("--terms", type=int)
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("corpus", parents=[common], help="reference sequences")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?")
    p.add_argument("--len", type=int, default=DEFAULT_LENGTH)
    p.set_defaults(func=cmd_corpus)
    return parser


def _emit(stream, doc, compact):
    if compact:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    else:
        text = json.dumps(doc, sort_keys=True, indent=2)
    stream.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    compact = False
    try:
        args = parser.parse_args(argv)
        compact = getattr(args, "json", False)
        doc = args.func(args)
    except UsageError as exc:
        _emit(sys.stderr, {"error": "usage", "message": str(exc)}, compact)
        return EXIT_USAGE
    except _TRUNCATION_ERRORS as exc:
        _emit(sys.stderr, {"error": type(exc).__name__, "message": str(exc)}, compact)
        return EXIT_TRUNCATION
    except _DOMAIN_ERRORS as exc:
        _emit(sys.stderr, {"error": type(exc).__name__, "message": str(exc)}, compact)
        return EXIT_DOMAIN
    _emit(sys.stdout, doc, compact)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
