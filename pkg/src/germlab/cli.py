"""Command-line front end.  Every subcommand prints one JSON report.

Exit codes: 0 when the verdict is true, 1 when it is false, 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Any, Callable, Dict, List, Optional

from . import acceptance, bisect
from . import germ as gm
from . import polycyclic as pc
from . import spectrum
from .action import PolycyclicAction, load_action
from .errors import GermlabError, HypothesisFailed, InvalidTable
from .groupoid import load_groupoid
from .semigroup import load_semigroup, orthogonal_semilattice

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def to_json(obj: Any) -> Any:
    """Make a report serializable: sets become sorted lists, callables are dropped."""
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items() if not callable(v)}
    if isinstance(obj, (set, frozenset)):
        items = [to_json(x) for x in obj]
        return sorted(items, key=lambda x: json.dumps(x, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, pc.Pair) or obj is pc.ZERO:
        return pc.format_element(obj)
    return str(obj)


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _parse_gens(text: str) -> List[pc.PolyElement]:
    try:
        return [pc.parse_element(t.strip()) for t in text.split(",") if t.strip()]
    except GermlabError as exc:
        raise UsageError(str(exc)) from None


def _check_letters(n: int, gens) -> None:
    for g in gens:
        if pc.max_letter(g) > n:
            raise UsageError(f"{pc.format_element(g)} uses letters beyond 1..{n}")


# -- subcommands ------------------------------------------------------------------


def cmd_validate_semigroup(args) -> dict:
    doc = _read_json(args.file)
    try:
        S = load_semigroup(doc)
    except InvalidTable as exc:
        return {"instance": args.file, "checks": {"valid": False}, "error": str(exc), "verdict": False}
    return {
        "instance": repr(S),
        "size": S.size,
        "idempotents": len(S.idempotents),
        "semilattice": S.is_semilattice,
        "unit": None if S.unit is None else S.names[S.unit],
        "checks": {"valid": True},
        "verdict": True,
    }


def cmd_correspondence(args) -> dict:
    return gm.enumerate_correspondence(load_action(_read_json(args.file)))


def cmd_classify(args) -> dict:
    gens = _parse_gens(args.gens)
    _check_letters(args.n, gens)
    rep = pc.classify(args.n, gens, bound=args.bound)
    rep["bounds"] = {"length": args.bound}
    return rep


def _subsemigroup(n: int, text: str, bound: int):
    kind, _, rest = text.partition(":")
    if kind == "Pnm":
        try:
            m = int(rest)
        except ValueError:
            raise UsageError(f"bad m in {text!r}") from None
        if m < 0:
            raise UsageError("m must be non-negative")
        return pc.Pnm(n, m)
    if kind == "gens":
        gens = _parse_gens(rest)
        _check_letters(n, gens)
        return gm.alpha_join_closure(PolycyclicAction(n), gens, bound)
    raise UsageError(f"--subsemigroup must be Pnm:m or gens:..., got {text!r}")


def cmd_closedness(args) -> dict:
    A = PolycyclicAction(args.n)
    T = _subsemigroup(args.n, args.subsemigroup, args.bound)
    rep = gm.is_closed_subgroupoid(A, T, bound=args.bound, report=True)
    rep["instance"] = T.label
    rep["checks"] = dict(rep.pop("conditions"))
    rep["checks"]["two_iff_three"] = rep.pop("two_iff_three")
    rep["checks"]["cover_lemma"] = rep.pop("cover_lemma")
    rep["bounds"] = {"length": args.bound}
    return rep


def cmd_cover_lemma(args) -> dict:
    agree = acceptance.cover_trials(args.n, random.Random(args.seed), args.trials)
    checks = {"all_trials_agree": agree == args.trials, "empty_domain_action_rejected": acceptance.empty_domain_guard()}
    return {
        "instance": f"random cylinder ideals of E(P_{args.n})",
        "trials": args.trials,
        "agreements": agree,
        "checks": checks,
        "verdict": all(checks.values()),
    }


def cmd_spectrum(args) -> dict:
    if args.semilattice:
        S = load_semigroup(_read_json(args.semilattice))
        instance = args.semilattice
    elif args.family == "orthogonal":
        if args.N is None or args.N < 1:
            raise UsageError("--family orthogonal needs --N >= 1")
        S = orthogonal_semilattice(args.N, args.with_unit)
        instance = f"orthogonal N={args.N}" + (" with unit" if args.with_unit else "")
    else:
        raise UsageError("give --family orthogonal --N k or --semilattice FILE")
    rep = spectrum.compactness_report(S)
    chars = spectrum.characters(S)
    rep["instance"] = instance
    rep["ultracharacters"] = [spectrum.character_names(S, xi) for xi in spectrum.ultracharacters(S)]
    rep["checks"] = {
        "filters_match_oracle": chars == spectrum.homomorphism_supports(S),
        "ultra_equals_tight": rep["ultra_equals_tight"],
    }
    rep["verdict"] = all(rep["checks"].values())
    return rep


def cmd_characterize(args) -> dict:
    A = load_action(_read_json(args.file))
    try:
        return spectrum.verify_characterization(A)
    except HypothesisFailed as exc:
        return {"instance": repr(A), "checks": {"hypotheses": False}, "error": str(exc), "verdict": False}


def cmd_reconstruct(args) -> dict:
    return bisect.reconstruction_iso(load_groupoid(_read_json(args.file)))


def cmd_bisect_correspondence(args) -> dict:
    return bisect.join_closed_correspondence(load_groupoid(_read_json(args.file)))


def cmd_selftest(args) -> dict:
    rep = acceptance.run_all(seed=args.seed, trials=args.trials)
    rep["instance"] = "acceptance suite"
    return rep


COMMANDS: Dict[str, Callable] = {
    "validate-semigroup": cmd_validate_semigroup,
    "correspondence": cmd_correspondence,
    "classify-pn": cmd_classify,
    "closedness": cmd_closedness,
    "cover-lemma": cmd_cover_lemma,
    "spectrum": cmd_spectrum,
    "characterize": cmd_characterize,
    "reconstruct": cmd_reconstruct,
    "bisect-correspondence": cmd_bisect_correspondence,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented human-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=acceptance.DEFAULT_TRIALS)

    p = argparse.ArgumentParser(prog="germlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("validate-semigroup", "correspondence", "characterize", "reconstruct",
                 "bisect-correspondence"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file")

    sp = sub.add_parser("classify-pn", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--gens", required=True, help='comma separated, e.g. "1/e,11/2"')
    sp.add_argument("--bound", type=int, default=4)

    sp = sub.add_parser("closedness", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--subsemigroup", required=True, help="Pnm:m or gens:mu/nu,...")
    sp.add_argument("--bound", type=int, default=4)

    sp = sub.add_parser("cover-lemma", parents=[common])
    sp.add_argument("--n", type=int, default=2)

    sp = sub.add_parser("spectrum", parents=[common])
    sp.add_argument("--family", choices=["orthogonal"])
    sp.add_argument("--N", type=int)
    sp.add_argument("--with-unit", action="store_true")
    sp.add_argument("--semilattice")

    sub.add_parser("selftest", parents=[common])
    return p


def render(report: dict, pretty: bool) -> str:
    if not pretty:
        return json.dumps(report, sort_keys=False)
    return json.dumps(report, indent=2)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("n", "bound", "trials"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            parser.error(f"--{name} must be positive")
    start = time.perf_counter()
    try:
        body = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"germlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GermlabError as exc:
        print(f"germlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": args.command,
        "arguments": {k: v for k, v in vars(args).items() if k != "command"},
        "instance": body.pop("instance", None),
        "bounds": body.pop("bounds", None) or {"truncation": body.get("truncation")},
        "checks": body.pop("checks", {}),
        "verdict": bool(body.pop("verdict")),
    }
    report.update(body)
    report["wall_clock"] = round(time.perf_counter() - start, 3)
    print(render(to_json(report), args.pretty))
    return EXIT_TRUE if report["verdict"] else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
