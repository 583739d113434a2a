"""Command-line front end.

Exit status: 0 on success, 1 when a verdict or bound fails, 2 on bad input or
a pipeline error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import EllIndepError, SchemaError
from .formchar import annihilator_lattice, canonical_form, formal_character
from .inertia import (
    TameCharacter,
    TameRep,
    check_serre_bound,
    decompose_tame,
    multiplication_rep,
    raise_level,
    restrict_digits,
)
from .lierank import LieFactorDescriptor, an_counts, composition_factors, total_rank
from .nori.thresholds import DEFAULT, Thresholds
from .sysharness import FIXTURES, SystemBundle, analyze_prime, check_independence, gen_fixture, verify_compatibility

OK, FAILED, ERROR = 0, 1, 2


class CliError(Exception):
    """Input problem detected by the front end itself."""


def _read_json(path):
    if path is None:
        raise CliError("an input file is required")
    try:
        with open(path) if path != "-" else sys.stdin as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from exc


def _thresholds(args) -> Thresholds:
    return Thresholds.with_ell_min(args.ell_min) if args.ell_min is not None else DEFAULT


def _ints(text):
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise CliError(f"expected a comma separated list of integers, got {text!r}") from exc


def _bundle(args):
    return SystemBundle.from_json(_read_json(args.bundle or args.input))


# -- commands -----------------------------------------------------------------


def cmd_fixtures(args):
    if args.name is None:
        return {"fixtures": list(FIXTURES)}, OK
    primes = _ints(args.primes) if args.primes else None
    return gen_fixture(args.name, primes).to_json(), OK


def cmd_envelope(args):
    b = _bundle(args)
    th = _thresholds(args)
    primes = [args.ell] if args.ell is not None else b.primes
    return {"label": b.label, "per_prime": [analyze_prime(b, p, args.seed, args.mode, th) for p in primes]}, OK


def cmd_formchar(args):
    obj = _read_json(args.input)
    if not isinstance(obj, dict):
        raise SchemaError("formchar input must be an object with 'weights' or 'basis'")
    n = obj.get("n")
    if "weights" in obj:
        W = obj["weights"]
        n = int(n if n is not None else len(W[0]))
        fc = formal_character(W, n)
        out = {"n": n, "annihilator": [list(r) for r in annihilator_lattice(W, n)], "formal_character": fc.to_json()}
    elif "basis" in obj:
        fc = canonical_form(obj["basis"], int(n))
        out = {"n": int(n), "formal_character": fc.to_json()}
    else:
        raise SchemaError("formchar input needs 'weights' or 'basis'")
    return out, OK


def cmd_rank(args):
    obj = _read_json(args.input)
    items = obj.get("factors") if isinstance(obj, dict) else obj
    if not isinstance(items, list):
        raise SchemaError("rank input must be a list of factor descriptors")
    factors = [LieFactorDescriptor.from_json(x) for x in items]
    out = {
        "factors": [d.to_json() for d in factors],
        "composition_factors": [composition_factors(d) for d in factors],
        "rank_report": total_rank(factors).to_json(),
        "an_counts": an_counts(factors),
    }
    return out, OK


def cmd_tame(args):
    action = args.action
    if action == "digits":
        digits = restrict_digits(args.exponent, args.level, args.ell)
        return {"ell": args.ell, "level": args.level, "exponent": args.exponent, "digits": list(digits)}, OK
    if action == "mult-fixture":
        return multiplication_rep(args.ell, args.level).to_json(), OK
    if action == "decompose":
        rep = TameRep.from_json(_read_json(args.input)) if args.input else multiplication_rep(args.ell, args.level)
        return {"ell": rep.ell, "level": rep.level, "characters": [c.to_json() for c in decompose_tame(rep)]}, OK
    if action == "raise":
        if args.digits is None or args.target is None:
            raise CliError("tame raise needs --digits and --target")
        d = _ints(args.digits)
        c = TameCharacter(args.ell, len(d), tuple(d))
        return {"source": c.to_json(), "raised": raise_level(c, args.target).to_json()}, OK
    if action == "serre":
        obj = _read_json(args.input)
        chars = [TameCharacter.from_json(x) for x in (obj["characters"] if isinstance(obj, dict) else obj)]
        ok, verdicts = check_serre_bound(chars, args.e, args.i)
        return {"bound": args.e * args.i, "passed": ok, "per_character": verdicts}, OK if ok else FAILED
    raise CliError(f"unknown tame action {action!r}")  # pragma: no cover


def cmd_compat(args):
    rep = verify_compatibility(_bundle(args))
    return rep, OK if rep["passed"] else FAILED


def cmd_independence(args):
    rep = check_independence(_bundle(args), args.seed, args.mode, _thresholds(args))
    return rep, OK if rep["verdict"] else FAILED


COMMANDS = {
    "fixtures": cmd_fixtures,
    "envelope": cmd_envelope,
    "formchar": cmd_formchar,
    "rank": cmd_rank,
    "tame": cmd_tame,
    "compat-check": cmd_compat,
    "independence": cmd_independence,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="input JSON file ('-' for stdin)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--ell-min", type=int, default=None, help="override the prime threshold")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--mode", choices=("exhaustive", "scan", "auto"), default="auto")

    p = argparse.ArgumentParser(prog="ellindep", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"ellindep {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fixtures", parents=[common], help="list or generate catalog bundles")
    f.add_argument("name", nargs="?")
    f.add_argument("--primes", help="comma separated primes")

    for name, help_ in (
        ("envelope", "per-prime envelope analysis"),
        ("compat-check", "check declared characteristic polynomials"),
        ("independence", "cross-prime constancy checks"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("--bundle")
        if name == "envelope":
            s.add_argument("--ell", type=int)

    sub.add_parser("formchar", parents=[common], help="canonical formal character of weights or a lattice")
    sub.add_parser("rank", parents=[common], help="ranks from composition-factor descriptors")

    t = sub.add_parser("tame", parents=[common], help="tame character tools")
    t.add_argument("action", choices=("digits", "decompose", "raise", "serre", "mult-fixture"))
    t.add_argument("--ell", type=int, default=7)
    t.add_argument("--level", type=int, default=2)
    t.add_argument("--exponent", type=int, default=1)
    t.add_argument("--digits")
    t.add_argument("--target", type=int)
    t.add_argument("--e", type=int, default=1)
    t.add_argument("--i", type=int, default=1)
    return p


def _origin(exc) -> str:
    tb = exc.__traceback__
    mod = "ellindep.cli"
    while tb is not None:
        name = tb.tb_frame.f_globals.get("__name__", "")
        if name.startswith("ellindep"):
            mod = name
        tb = tb.tb_next
    return mod


def render_text(report, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for k in sorted(report):
            v = report[k]
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(report, list):
        for item in report:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(item)}")
    else:
        lines.append(f"{pad}{json.dumps(report)}")
    return "\n".join(lines)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, status = COMMANDS[args.command](args)
    except (EllIndepError, CliError) as exc:
        print(f"{_origin(exc)}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return ERROR
    except (KeyError, TypeError, IndexError) as exc:
        print(f"{_origin(exc)}: malformed input: {exc!r}", file=sys.stderr)
        return ERROR
    if isinstance(report, dict):
        report = {**report, "seed": args.seed, "version": __version__, "command": args.command}
    text = json.dumps(report, sort_keys=True, indent=2) + "\n" if args.format == "json" else render_text(report) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"ellindep.cli: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return ERROR
    else:
        sys.stdout.write(text)
    return status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
