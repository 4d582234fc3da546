"""Command-line front end.

Matrices are read as JSON (a file path, or standard input when omitted) and
every verb writes one JSON report to standard output.

Exit codes: 0 success, 2 methods disagree or a check failed, 3 a
precondition failed (index too large, not Hermitian, bad shape), 4 the
determinant size cap was exceeded, 5 the input could not be parsed.
"""

import argparse
import json
import random
import sys
import time

from . import coreinv, geninv, oracle
from .config import configured, settings
from .coreinv import CmpVariant
from .demo import run_demo
from .errors import (
    IndexTooLarge,
    InternalInconsistency,
    MethodDisagreement,
    NotHermitian,
    ParseError,
    RankZero,
    ShapeError,
    SizeCapExceeded,
)
from .ncdet import cdet, det_rank, matrix_index, rdet
from .qmatrix import matrix_to_obj, parse_matrix
from .sampling import random_matrix

KINDS = ("mp", "drazin", "group", "core-r", "core-l", "corep-r", "corep-l", "dmp", "mpd", "cmp")

SYSTEM_FOR = {
    "mp": "penrose",
    "drazin": "drazin",
    "group": "drazin",
    "core-r": "core_right",
    "core-l": "core_left",
    "corep-r": "core_ep_right",
    "corep-l": "core_ep_left",
    "dmp": "dmp",
    "mpd": "mpd",
    "cmp": "cmp",
}

DEFAULT_FORM = {
    "mp": "auto",
    "drazin": "auto",
    "group": "auto",
    "core-r": "chain",
    "core-l": "chain",
    "corep-r": "determinantal",
    "corep-l": "determinantal",
    "dmp": "auto",
    "mpd": "auto",
}


class CheckFailed(Exception):
    """A verification or demo check did not hold."""


def parse_variant(text):
    """``"L:FORM[:SPEC]"``, e.g. ``"2:rdet"`` or ``"1:cdet:hermitian"``."""
    parts = text.split(":") if text else []
    try:
        l = int(parts[0]) if parts else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad CMP variant {text!r}") from None
    form = parts[1] if len(parts) > 1 else "cdet"
    spec = parts[2] if len(parts) > 2 else "general"
    try:
        return CmpVariant(l, form, spec)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def determinantal(kind, A, form=None, variant=None):
    form = form or DEFAULT_FORM.get(kind)
    if kind == "mp":
        return geninv.mp_inverse(A, form)
    if kind == "drazin":
        return geninv.drazin(A, form)
    if kind == "group":
        return geninv.group_inverse(A, form)
    if kind == "core-r":
        return coreinv.right_core(A, form)
    if kind == "core-l":
        return coreinv.left_core(A, form)
    if kind in ("corep-r", "corep-l"):
        return coreinv.core_ep(A, "right" if kind == "corep-r" else "left", form)
    if kind == "dmp":
        return coreinv.dmp(A, form)
    if kind == "mpd":
        return coreinv.mpd(A, form)
    if kind == "cmp":
        return coreinv.cmp(A, variant or CmpVariant())
    raise ValueError(f"unknown kind {kind!r}")


def by_oracle(kind, A):
    if kind == "mp":
        return oracle.mp_oracle(A)
    if not A.is_square():
        raise ShapeError(f"{kind} needs a square matrix")
    if kind == "drazin":
        return oracle.drazin_oracle(A)
    k = oracle.elim_index(A)
    if kind in ("group", "core-r", "core-l") and k > 1:
        raise IndexTooLarge(f"{kind} needs Ind A <= 1, got {k}")
    if kind == "group":
        return oracle.group_oracle(A)
    return coreinv.composition(kind, A, via="oracle")


def _read_matrix(path):
    if path in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_matrix(data)


def _emit(report, canonical):
    if canonical:
        report.pop("timing", None)
    json.dump(report, sys.stdout, indent=2, sort_keys=canonical)
    sys.stdout.write("\n")


# -- verbs ---------------------------------------------------------------

def cmd_inverse(args):
    A = _read_matrix(args.input)
    report = {"verb": "inverse", "kind": args.kind, "method": args.method,
              "input": matrix_to_obj(A)}
    t0 = time.perf_counter()
    results = {}
    if args.method in ("determinantal", "both"):
        results["determinantal"] = determinantal(args.kind, A, args.form, args.variant)
    if args.method in ("oracle", "both"):
        results["oracle"] = by_oracle(args.kind, A)
    report["timing"] = round(time.perf_counter() - t0, 6)
    X = next(iter(results.values()))
    report["result"] = matrix_to_obj(X)
    if args.method == "both":
        agree = results["determinantal"] == results["oracle"]
        report["agree"] = agree
        ver = oracle.verify(SYSTEM_FOR[args.kind], A, X)
        report["verification"] = ver.to_obj()
        if not agree:
            report["oracle_result"] = matrix_to_obj(results["oracle"])
            _emit(report, args.canonical)
            raise MethodDisagreement(f"{args.kind}: determinantal and oracle results differ")
    _emit(report, args.canonical)
    return 0


def cmd_rank(args):
    A = _read_matrix(args.input)
    report = {"verb": "rank"}
    if args.method in ("determinantal", "both"):
        report["rank"] = det_rank(A)
    if args.method in ("oracle", "both"):
        report["elim_rank"] = oracle.elim_rank(A)
        report.setdefault("rank", report["elim_rank"])
    _emit(report, args.canonical)
    if args.method == "both" and report["rank"] != report["elim_rank"]:
        raise MethodDisagreement("determinantal and elimination ranks differ")
    return 0


def cmd_index(args):
    A = _read_matrix(args.input)
    report = {"verb": "index"}
    if args.method in ("determinantal", "both"):
        report["index"] = matrix_index(A)
    if args.method in ("oracle", "both"):
        k = oracle.elim_index(A)
        if "index" in report and report["index"] != k:
            _emit(report, args.canonical)
            raise MethodDisagreement("determinantal and elimination indices differ")
        report["index"] = k
    _emit(report, args.canonical)
    return 0


def cmd_det(args):
    A = _read_matrix(args.input)
    if not A.is_square():
        raise ShapeError("determinants need a square matrix")
    n = A.rows
    rows = [args.row] if args.row else ([] if args.col else range(1, n + 1))
    cols = [args.col] if args.col else ([] if args.row else range(1, n + 1))
    report = {
        "verb": "det",
        "rdet": {str(i): rdet(A, i).to_strings() for i in rows},
        "cdet": {str(j): cdet(A, j).to_strings() for j in cols},
    }
    if A.is_hermitian():
        report["hermitian"] = True
    _emit(report, args.canonical)
    return 0


def cmd_split(args):
    A = _read_matrix(args.input)
    A1, A2 = coreinv.core_nilpotent_split(A)
    _emit({"verb": "split", "core": matrix_to_obj(A1), "nilpotent": matrix_to_obj(A2)}, args.canonical)
    return 0


def _verify_one(kind, A, X):
    return oracle.verify(SYSTEM_FOR[kind], A, X)


def cmd_verify(args):
    if args.random:
        return _verify_random(args)
    if args.kind is None:
        raise ShapeError("verify needs --kind unless --random is given")
    A = _read_matrix(args.input)
    if args.candidate:
        X = _read_matrix(args.candidate)
        source = "candidate"
    else:
        X = determinantal(args.kind, A, args.form, args.variant)
        source = "determinantal"
    ver = _verify_one(args.kind, A, X)
    _emit({"verb": "verify", "kind": args.kind, "source": source,
           "candidate": matrix_to_obj(X), "verification": ver.to_obj()}, args.canonical)
    if not ver.ok:
        raise CheckFailed(f"{args.kind} candidate fails its defining system")
    return 0


def _verify_random(args):
    rng = random.Random(args.seed)
    kinds = [args.kind] if args.kind else list(KINDS)
    failures = []
    tally = {k: {"checked": 0, "skipped": 0} for k in kinds}
    t0 = time.perf_counter()
    for t in range(args.random):
        n = args.sizes[t % len(args.sizes)]
        A = random_matrix(rng, n)
        k = oracle.elim_index(A)
        for kind in kinds:
            if kind in ("group", "core-r", "core-l") and k > 1:
                tally[kind]["skipped"] += 1
                continue
            X = determinantal(kind, A, None, None)
            ok = X == by_oracle(kind, A) and _verify_one(kind, A, X).ok
            tally[kind]["checked"] += 1
            if not ok:
                failures.append({"sample": t, "kind": kind, "input": matrix_to_obj(A)})
    report = {"verb": "verify", "random": args.random, "seed": args.seed,
              "tally": tally, "failures": failures,
              "timing": round(time.perf_counter() - t0, 3)}
    _emit(report, args.canonical)
    if failures:
        raise CheckFailed(f"{len(failures)} random checks failed")
    return 0


def cmd_demo(args):
    report = run_demo(args.golden)
    if args.json:
        _emit(report, True)
    else:
        for c in report["checks"]:
            print(f"{'ok  ' if c['ok'] else 'FAIL'} {c['name']}")
            if not c["ok"]:
                print(f"     expected {json.dumps(c['expected'])}")
                print(f"     actual   {json.dumps(c['actual'])}")
        print("all values reproduced" if report["ok"] else "MISMATCH")
    if not report["ok"]:
        raise CheckFailed("demo values differ from the golden file")
    return 0


# -- wiring --------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="qginv", description="Exact generalized inverses of quaternion matrices.")
    p.add_argument("--cap", type=int, default=None,
                   help=f"largest determinant order allowed (default {settings.cap}, env QGINV_DET_CAP)")
    p.add_argument("--canonical", action="store_true", help="sorted keys, no timing: byte-stable output")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, kind=False, method=True):
        sp.add_argument("input", nargs="?", help="matrix JSON file (default: stdin)")
        if method:
            sp.add_argument("--method", choices=("determinantal", "oracle", "both"), default="determinantal")
        if kind:
            sp.add_argument("--kind", choices=KINDS, required=kind == "required")
            sp.add_argument("--form", help="formula selector passed to the chosen inverse")
            sp.add_argument("--side", choices=("right", "left"),
                            help="shorthand for corep-r / corep-l when --kind is omitted")
            sp.add_argument("--variant", type=parse_variant, help="CMP variant L:FORM[:SPEC], e.g. 2:rdet")

    sp = sub.add_parser("inverse", help="compute a generalized inverse")
    common(sp, kind="required")
    sp.set_defaults(func=cmd_inverse)

    sp = sub.add_parser("rank", help="determinantal and/or elimination rank")
    common(sp)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("index", help="matrix index Ind A")
    common(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("det", help="row and column determinants")
    common(sp, method=False)
    sp.add_argument("--row", type=int, help="only rdet along this row (1-based)")
    sp.add_argument("--col", type=int, help="only cdet along this column (1-based)")
    sp.set_defaults(func=cmd_det)

    sp = sub.add_parser("split", help="core-nilpotent decomposition")
    common(sp, method=False)
    sp.set_defaults(func=cmd_split)

    sp = sub.add_parser("verify", help="check a candidate against its defining equations")
    common(sp, kind="optional", method=False)
    sp.add_argument("--candidate", help="candidate inverse JSON (default: compute it)")
    sp.add_argument("--random", type=int, default=0, metavar="N", help="run N seeded random checks instead")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4])
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("demo", help="reproduce the 3x3 worked example")
    sp.add_argument("--json", action="store_true", help="machine-readable transcript")
    sp.add_argument("--golden", help="alternative golden-value file")
    sp.set_defaults(func=cmd_demo)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "side", None) and getattr(args, "kind", None) is None:
        args.kind = "corep-r" if args.side == "right" else "corep-l"
    if not hasattr(args, "canonical"):
        args.canonical = False
    try:
        with configured(cap=args.cap):
            return args.func(args)
    except (MethodDisagreement, InternalInconsistency, CheckFailed) as e:
        print(f"qginv: {e}", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"qginv: parse error: {e}", file=sys.stderr)
        return 5
    except SizeCapExceeded as e:
        print(f"qginv: {e}", file=sys.stderr)
        return 4
    except (IndexTooLarge, NotHermitian, ShapeError, RankZero, ValueError) as e:
        print(f"qginv: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
