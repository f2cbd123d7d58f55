"""Command line interface.

Exit codes: 0 on success, 1 on usage errors, 2 when a verification fails.

Coweights are written in fundamental-coweight coordinates with the package's
node numbering (Bourbaki): for C2 node 2 is the long node, for G2 node 1 is
short and node 2 long.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cache import MemoStore
from .equivmult import RankGuardError, kumar_test, slice_multiplicity
from .mult import stalk_poly
from .report import VerificationError, classify, smooth_locus_verify, survey
from .rootdata import Coweight, build, parse_type


class UsageError(ValueError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_coweight(datum, text) -> Coweight:
    text = text.strip()
    if text in ("short-dom-coroot", "short-dominant-coroot"):
        return datum.short_dominant_coroot()
    body = text.strip("[]")
    try:
        coords = tuple(int(tok) for tok in body.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise UsageError(f"cannot parse coweight {text!r}") from exc
    if len(coords) != datum.rank:
        raise UsageError(
            f"coweight {text!r} has {len(coords)} coordinates, expected {datum.rank}"
        )
    return Coweight(datum, coords)


def _datum(args):
    try:
        letter, rank = parse_type(args.type)
        return build(letter, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _store(args):
    return MemoStore(args.cache_dir) if getattr(args, "cache_dir", None) else None


def _common_flags(sub, coweights=("lam", "mu"), equivariant=False):
    sub.add_argument("--type", required=True, help="simple type, e.g. C2 or F4")
    for name in coweights:
        sub.add_argument(
            f"--{name}",
            required=True,
            help="fundamental-coweight coordinates c1,..,cr",
        )
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument("--cache-dir", help="directory for the nil-Hecke memo store")
    sub.add_argument(
        "--allow-high-rank",
        action="store_true",
        help="lift the rank <= 2 guard on equivariant computations",
    )
    if equivariant:
        sub.add_argument(
            "--equivariant",
            action="store_true",
            help="include the equivariant multiplicity in the report",
        )


def build_parser():
    parser = _ArgumentParser(prog="grass-slice")
    sub = parser.add_subparsers(dest="command", required=True)

    _common_flags(sub.add_parser("classify", help="classify one degeneration"), equivariant=True)
    _common_flags(sub.add_parser("stalk", help="IC stalk polynomial of a pair"))
    _common_flags(sub.add_parser("equivmult", help="equivariant slice multiplicity"))
    _common_flags(sub.add_parser("smooth-locus", help="certify the smooth locus"), coweights=("mu",))
    survey_p = sub.add_parser("survey", help="classify all degenerations up to a bound")
    survey_p.add_argument("--type", required=True)
    survey_p.add_argument("--bound", required=True, type=int, help="bound on <2rho, mu>")
    survey_p.add_argument("--json", action="store_true")
    survey_p.add_argument("--cache-dir")
    survey_p.add_argument("--allow-high-rank", action="store_true")
    return parser


def _cmd_classify(args):
    datum = _datum(args)
    lam = _parse_coweight(datum, args.lam)
    mu = _parse_coweight(datum, args.mu)
    if not (lam.is_dominant() and mu.is_dominant()):
        raise UsageError("classification requires dominant coweights")
    store = _store(args)
    try:
        report = classify(
            datum,
            lam,
            mu,
            include_equivariant=args.equivariant,
            allow_high_rank=args.allow_high_rank,
            store=store,
        )
    except RankGuardError as exc:
        raise UsageError(str(exc)) from exc
    if store:
        store.flush()
    print(report.to_json() if args.json else report.to_text())


def _cmd_stalk(args):
    datum = _datum(args)
    lam = _parse_coweight(datum, args.lam)
    mu = _parse_coweight(datum, args.mu)
    try:
        poly = stalk_poly(lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        print(
            json.dumps(
                {
                    "datum": datum.label,
                    "lam": list(lam.fw),
                    "mu": list(mu.fw),
                    "stalk": str(poly),
                    "euler": poly.at_one(),
                },
                indent=2,
            )
        )
    else:
        print(str(poly))


def _cmd_equivmult(args):
    datum = _datum(args)
    lam = _parse_coweight(datum, args.lam)
    mu = _parse_coweight(datum, args.mu)
    store = _store(args)
    try:
        s = slice_multiplicity(lam, mu, allow_high_rank=args.allow_high_rank, store=store)
    except (RankGuardError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if store:
        store.flush()
    verdict = kumar_test(s)
    if args.json:
        numerator_terms = [
            [str(coeff), list(expts)] for expts, coeff in s.value.num.sorted_terms()
        ]
        print(
            json.dumps(
                {
                    "datum": datum.label,
                    "lam": list(lam.fw),
                    "mu": list(mu.fw),
                    "equivmult": s.value.to_canonical_string(),
                    "numerator_terms": numerator_terms,
                    "denominator_factors": [list(f.coeffs) for f in s.value.den],
                    "degree": s.degree,
                    "kumar": str(verdict),
                },
                indent=2,
            )
        )
    else:
        print(s.value.to_canonical_string())
        print(f"degree: {s.degree}")
        print(f"kumar: {verdict}")


def _cmd_smooth_locus(args):
    datum = _datum(args)
    mu = _parse_coweight(datum, args.mu)
    if not mu.is_dominant():
        raise UsageError("smooth-locus verification requires a dominant coweight")
    store = _store(args)
    record = smooth_locus_verify(datum, mu, allow_high_rank=args.allow_high_rank, store=store)
    if store:
        store.flush()
    print(json.dumps(record.to_json_dict(), indent=2) if args.json else record.to_text())


def _cmd_survey(args):
    datum = _datum(args)
    store = _store(args)
    reports = survey(datum, args.bound, allow_high_rank=args.allow_high_rank, store=store)
    if store:
        store.flush()
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    else:
        for r in reports:
            lam = ",".join(str(x) for x in r.lam)
            mu = ",".join(str(x) for x in r.mu)
            print(f"{r.datum} [{mu}] ~> [{lam}]: {r.case} {r.label} codim={r.codim} stalk={r.stalk}")


_COMMANDS = {
    "classify": _cmd_classify,
    "stalk": _cmd_stalk,
    "equivmult": _cmd_equivmult,
    "smooth-locus": _cmd_smooth_locus,
    "survey": _cmd_survey,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"grass-slice: error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"grass-slice: verification failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
