"""
Command-line front end.

Words are quoted, whitespace-separated signed integers: ``"1 -2 3"`` is
sigma_1 sigma_2^-1 sigma_3.  Free words use the same grammar (an ``x`` prefix
per letter is accepted), and S-words use it with S-indices.

Exit codes: 0 success, 1 a verify check failed, 2 a verify check errored,
64 usage error, 65 bad input or out-of-domain request, 66 resource guard hit.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import harness
from .braid_core import exponent_sum, max_word_length, parse_braid, set_max_word_length
from .commutator import MODES, commutator_expression, rewrite_in_S
from .errors import BraidCheckError, DomainError, ResourceError
from .free_group import boundary_word, is_inner, parse_free
from .garside import normal_form, words_equal
from .matrix_rep import (
    DEFAULT_TOL,
    Matrix2,
    braid_relation_residual,
    check_braid_relations,
    commutator_residual,
    cyclic_s_family,
    cyclic_sigma_family,
    evaluate_word,
    image_abelian,
    lemma_general_hypotheses,
)
from .representations import artin, center_power_detect, mu

EX_USAGE = 64
EX_DATAERR = 65
EX_RESOURCE = 66

ENV_MAX_LEN = "BRAIDCHECK_MAX_LEN"
ENV_TOL = "BRAIDCHECK_TOL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage().rstrip()}\n{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _tolerance(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be >= 0, got {text}")
    return v


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")


def _guard_flags(parser, default):
    parser.add_argument("--max-len", type=_positive_int, default=default,
                        help=f"word length guard (env {ENV_MAX_LEN})")
    parser.add_argument("--tol", type=_tolerance, default=default,
                        help=f"float tolerance for matrix checks (env {ENV_TOL})")


def build_parser() -> argparse.ArgumentParser:
    # guard flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    _guard_flags(common, argparse.SUPPRESS)

    strands = argparse.ArgumentParser(add_help=False)
    strands.add_argument("--n", type=int, required=True, help="number of strands")

    p = _Parser(prog="braidcheck", description="Braid group word problems, Artin actions and identity checks.")
    _guard_flags(p, None)
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("nf", parents=[common, strands], help="Garside left normal form")
    s.add_argument("word")

    s = sub.add_parser("eq", parents=[common, strands], help="decide equality of two braids")
    s.add_argument("u")
    s.add_argument("v")

    s = sub.add_parser("artin", parents=[common, strands], help="apply the Artin automorphism of a braid")
    s.add_argument("--braid", required=True)
    s.add_argument("--word", default=None, help="free word to act on (default: list all generator images)")

    s = sub.add_parser("mu", parents=[common, strands], help="underlying permutation (one-line notation)")
    s.add_argument("word")
    s.add_argument("--cycles", action="store_true", help="print disjoint cycles instead")

    s = sub.add_parser("expsum", parents=[common, strands], help="exponent sum")
    s.add_argument("word")

    s = sub.add_parser("rewrite", parents=[common, strands], help="rewrite a zero-exponent braid in S")
    s.add_argument("word")
    s.add_argument("--mode", choices=MODES, default="cyclic")

    s = sub.add_parser("commutators", parents=[common, strands], help="write a zero-exponent braid as commutators")
    s.add_argument("word")
    s.add_argument("--mode", choices=MODES, default="cyclic")

    s = sub.add_parser("inner", parents=[common, strands], help="is the Artin image of a braid inner?")
    s.add_argument("word")

    s = sub.add_parser("matrix", parents=[common], help="check 2x2 matrix images of braid generators")
    s.add_argument("images", nargs="+", help='row-major quadruples, e.g. "1,1,0,1"')
    s.add_argument("--word", default=None, help="braid word to evaluate on the images")

    s = sub.add_parser("hypotheses", parents=[common], help="conjugacy/commutation hypotheses for a cyclic family")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--family", choices=("sigma", "s"), default="sigma")

    s = sub.add_parser("verify", parents=[common], help="run the identity suite")
    s.add_argument("--n-range", type=_n_range, default=(5, 8), help="inclusive LO:HI (default 5:8)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=_positive_int, default=100)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("--workers", type=_positive_int, default=1)
    s.add_argument("--timings", action="store_true", help="record elapsed ms (output is then not reproducible)")
    return p


def _resolve_guards(args, environ) -> float:
    max_len = args.max_len
    if max_len is None and environ.get(ENV_MAX_LEN):
        try:
            max_len = _positive_int(environ[ENV_MAX_LEN])
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"{ENV_MAX_LEN}: {exc}")
    tol = args.tol
    if tol is None and environ.get(ENV_TOL):
        try:
            tol = _tolerance(environ[ENV_TOL])
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"{ENV_TOL}: {exc}")
    if max_len is not None:
        set_max_word_length(max_len)
    return DEFAULT_TOL if tol is None else tol


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _run(args, tol: float, out) -> int:
    cmd = args.command
    if cmd == "nf":
        print(normal_form(parse_braid(args.word, args.n)), file=out)
    elif cmd == "eq":
        print(_bool(words_equal(parse_braid(args.u, args.n), parse_braid(args.v, args.n))), file=out)
    elif cmd == "artin":
        phi = artin(parse_braid(args.braid, args.n))
        if args.word is None:
            for i, img in enumerate(phi.images, start=1):
                print(f"{i}: {img}", file=out)
        else:
            print(phi(parse_free(args.word, args.n)), file=out)
    elif cmd == "mu":
        perm = mu(parse_braid(args.word, args.n))
        if args.cycles:
            print(" ".join("(" + " ".join(map(str, c)) + ")" for c in perm.cycles()) or "()", file=out)
        else:
            print(perm, file=out)
    elif cmd == "expsum":
        print(exponent_sum(parse_braid(args.word, args.n)), file=out)
    elif cmd == "rewrite":
        print(rewrite_in_S(parse_braid(args.word, args.n), args.mode), file=out)
    elif cmd == "commutators":
        for a, b in commutator_expression(parse_braid(args.word, args.n), args.mode):
            print(f"[{a} , {b}]", file=out)
    elif cmd == "inner":
        phi = artin(parse_braid(args.word, args.n))
        w = is_inner(phi)
        if w is None:
            print("false", file=out)
        else:
            print("true", file=out)
            print(f"conjugator: {w}", file=out)
            r = center_power_detect(phi)
            if r is not None:
                print(f"boundary power: {r} (boundary word {boundary_word(args.n)})", file=out)
    elif cmd == "matrix":
        images = [Matrix2.parse(t) for t in args.images]
        # evaluate first so an error leaves no partial output
        value = None if args.word is None else evaluate_word(images, parse_braid(args.word, len(images) + 1))
        print(f"braid relations: {_bool(check_braid_relations(images, tol))} "
              f"(residual {braid_relation_residual(images)})", file=out)
        print(f"abelian image: {_bool(image_abelian(images, tol))} "
              f"(commutator residual {commutator_residual(images)})", file=out)
        if value is not None:
            print(value, file=out)
    elif cmd == "hypotheses":
        if args.n < 3:
            raise DomainError("cyclic families need n >= 3")
        taus, wits = cyclic_sigma_family(args.n) if args.family == "sigma" else cyclic_s_family(args.n)
        report = lemma_general_hypotheses(taus, args.k, wits)
        print(_bool(report.passes), file=out)
        for line in report.failures():
            print(line, file=out)
    elif cmd == "verify":
        report = harness.run_suite(
            args.n_range, args.seed, args.samples, workers=args.workers, timings=args.timings, tol=tol
        )
        print(harness.emit_report(report, args.format), file=out)
        return report.exit_code()
    return 0


def main(argv=None, out=None, err=None, environ=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    environ = os.environ if environ is None else environ
    parser = build_parser()
    saved_limit = max_word_length()
    try:
        try:
            args = parser.parse_args(argv)
            tol = _resolve_guards(args, environ)
        except UsageError as exc:
            print(exc, file=err)
            return EX_USAGE
        return _run(args, tol, out)
    except (ResourceError, MemoryError, RecursionError) as exc:
        print(f"resource limit: {exc}", file=err)
        return EX_RESOURCE
    except (BraidCheckError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EX_DATAERR
    finally:
        set_max_word_length(saved_limit)


if __name__ == "__main__":
    sys.exit(main())
