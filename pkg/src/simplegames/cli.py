"""Command-line front end.

Every command prints one JSON document on stdout.  Exit status is 0 whenever
an answer was computed (including negative answers), 1 for invalid input and
2 when a size guard stopped an exponential computation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import recognize, reductions, succinct, weighted
from .convert import convert, dual_of, maximal_losing_of, minimal_winning_of
from .core import (
    CoalitionFamily,
    ExplicitGame,
    Form,
    InvalidGameError,
    ResourceLimitError,
    Verdict,
    members,
    validate_form,
)
from .oracle import enumerate_games, partition_exists, splitting_exists
from .sweep import cross_validate

EXIT_OK, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2

PROPERTIES = ("simple", "strong", "proper", "weighted", "homogeneous", "decisive", "majority")
REALIZATION_CHECKS = ("strong", "proper", "majority", "homogeneous-realization")


# -- documents ---------------------------------------------------------------


def load_document(path: str):
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
    except OSError as exc:
        raise InvalidGameError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidGameError(f"{path} is not valid JSON: {exc}") from None
    # output of `generate` can be fed back directly
    if isinstance(doc, dict) and "instance" in doc:
        doc = doc["instance"]
    if not isinstance(doc, dict):
        raise InvalidGameError("expected a JSON object")
    return doc


def _field(doc: dict, key: str):
    if key not in doc:
        raise InvalidGameError(f"missing field {key!r}")
    return doc[key]


def _player_count(doc: dict) -> int:
    n = _field(doc, "n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidGameError(f"'n' must be an integer, got {n!r}")
    return n


def parse_game(doc: dict) -> ExplicitGame:
    n = _player_count(doc)
    form = Form.parse(str(_field(doc, "form")))
    coalitions = _field(doc, "coalitions")
    if not isinstance(coalitions, list):
        raise InvalidGameError("'coalitions' must be a list")
    for c in coalitions:
        if not isinstance(c, list) or any(isinstance(p, bool) or not isinstance(p, int) for p in c):
            raise InvalidGameError(f"coalition {c!r} is not a list of player numbers")
        if any(a >= b for a, b in zip(c, c[1:])):
            raise InvalidGameError(f"coalition {c!r} is not strictly ascending")
    return ExplicitGame(n, form, CoalitionFamily.from_lists(n, coalitions))


def game_document(game: ExplicitGame) -> dict:
    return {"n": game.n, "form": game.form.value, "coalitions": game.family.to_lists()}


def parse_realization(doc: dict) -> weighted.WeightedRealization:
    weights = _field(doc, "weights")
    if not isinstance(weights, list):
        raise InvalidGameError("'weights' must be a list")
    return weighted.WeightedRealization(_field(doc, "quota"), tuple(weights))


def realization_document(r: weighted.WeightedRealization) -> dict:
    return {"quota": r.quota, "weights": list(r.weights)}


def parse_succinct(doc: dict) -> tuple[int, Form, succinct.Formula]:
    return (_player_count(doc), Form.parse(str(_field(doc, "form"))),
            succinct.parse_formula(_field(doc, "formula")))


def _coalitions(masks) -> list[list[int]]:
    return [list(members(m)) for m in masks]


def verdict_document(v: Verdict, n: int | None = None, assignments: bool = False) -> dict:
    out: dict = {"verdict": v.value}
    if v.witness:
        if assignments:
            out["witness"] = [succinct.assignment_bits(m, n) for m in v.witness]
        else:
            out["witness"] = _coalitions(v.witness)
    if v.count is not None:
        out["winning_count"] = v.count
    out["method"] = v.method
    return out


# -- commands ----------------------------------------------------------------


def _weighted_check(game: ExplicitGame, homogeneous: bool) -> dict:
    decision = weighted.decide_weighted(game, homogeneous=homogeneous)
    out: dict = {"verdict": decision.realization is not None}
    if decision.realization is not None:
        wm, lm = minimal_winning_of(game), maximal_losing_of(game)
        if not weighted.realizes(decision.realization, wm, lm, homogeneous):
            raise RuntimeError(f"realization {decision.realization} failed re-verification")
        out["realization"] = realization_document(decision.realization)
    else:
        out["certificate"] = decision.feasibility.as_dict(decision.lp)
    out["method"] = decision.method
    return out


def cmd_check(args) -> dict:
    doc = load_document(args.file)
    prop = args.property
    if args.succinct:
        n, form, phi = parse_succinct(doc)
        if prop == "simple":
            return verdict_document(succinct.validate_succinct(n, form, phi), n, assignments=True)
        game = succinct.explicit_from_succinct(n, phi, form)
    else:
        game = parse_game(doc)
        if prop == "simple":
            return {"verdict": validate_form(game.n, game.form, game.family), "method": "structural-laws"}
    if prop == "weighted":
        return _weighted_check(game, homogeneous=False)
    if prop == "homogeneous":
        return _weighted_check(game, homogeneous=True)
    if prop == "majority":
        out = verdict_document(recognize.is_majority(game))
        if out["verdict"]:
            out["realization"] = realization_document(weighted.test_weighted(game))
        return out
    decider = {"strong": recognize.is_strong, "proper": recognize.is_proper,
               "decisive": recognize.is_decisive}[prop]
    return verdict_document(decider(game))


def cmd_convert(args) -> dict:
    game = parse_game(load_document(args.file))
    result = convert(game, Form.parse(args.to))
    return {"game": game_document(result), "size": len(result.family),
            "method": f"{game.form.short}->{result.form.short}"}


def cmd_dual(args) -> dict:
    game = parse_game(load_document(args.file))
    return {"game": game_document(dual_of(game)), "method": "complement-members"}


def cmd_realization(args) -> dict:
    r = parse_realization(load_document(args.file))
    check = {"strong": weighted.realization_is_strong, "proper": weighted.realization_is_proper,
             "majority": weighted.realization_is_majority,
             "homogeneous-realization": weighted.is_homogeneous_realization}[args.check]
    return verdict_document(check(r))


def cmd_generate(args) -> dict:
    rng = np.random.default_rng(args.seed)
    kind = args.kind
    if kind == "partition":
        inst = reductions.random_partition_instance(rng, max_n=args.size or 15)
        r = reductions.partition_reduction(inst, args.variant)
        return {"kind": "realization", "instance": realization_document(r),
                "source": {"problem": "partition", "x": list(inst.x), "variant": args.variant,
                           "partition_exists": partition_exists(inst.x)},
                "method": "partition-reduction"}
    if kind == "setsplit":
        inst = reductions.random_set_splitting_instance(rng, max_ground=args.size or 12)
        game = reductions.set_splitting_reduction(inst)
        return {"kind": "game", "instance": game_document(game),
                "source": {"problem": "set-splitting", "n": inst.ground,
                           "collection": inst.collection.to_lists(),
                           "splitting_exists": splitting_exists(inst.ground, inst.collection)},
                "method": "set-splitting-reduction"}
    if kind == "sat":
        n = args.size or 3
        phi = reductions.random_cnf(rng, n, clauses=2 * n)
        psi = reductions.sat_reduction(phi, n)
        satisfiable = bool(succinct.truth_table(phi, n).any())
        return {"kind": "succinct",
                "instance": {"n": n + 1, "form": "min_winning", "formula": succinct.formula_to_json(psi)},
                "source": {"problem": "sat", "n": n, "formula": succinct.formula_to_json(phi),
                           "satisfiable": satisfiable},
                "method": "sat-reduction"}
    game = reductions.lemma5_game(args.size or 3)
    return {"kind": "game", "instance": game_document(game),
            "source": {"problem": "lemma5-pairs", "k": args.size or 3}, "method": "pair-family"}


def cmd_enumerate(args) -> dict:
    if args.cross_validate:
        report = cross_validate(args.n)
        return {"verdict": report.ok, "n": args.n, "count": report.count,
                "independent_count": report.independent_count, "checks": report.checks,
                "weighted_games": report.weighted_games, "escalations": report.escalations,
                "disagreements": report.disagreements, "method": "exhaustive-oracle-sweep"}
    games = [g.family.to_lists() for g in enumerate_games(args.n)]
    return {"n": args.n, "count": len(games), "games": games, "method": "antichain-enumeration"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplegames", description=__doc__.splitlines()[0])
    parser.add_argument("--timing", action="store_true", help="report wall-clock seconds in the output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide a property of an explicit or succinct game")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--succinct", action="store_true", help="the file holds a formula game")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="re-express a game in another explicit form")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=("w", "l", "wm", "lm"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("dual", help="dual game in the complementary form")
    p.add_argument("file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("realization", help="check a property of an integer realization (q; w)")
    p.add_argument("file")
    p.add_argument("--check", required=True, choices=REALIZATION_CHECKS)
    p.set_defaults(func=cmd_realization)

    p = sub.add_parser("generate", help="generate a reduction instance")
    p.add_argument("kind", choices=("partition", "setsplit", "sat", "lemma5"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", choices=reductions.VARIANTS, default="strong")
    p.add_argument("--size", type=int, default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", help="list all games on n <= 4 players")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cross-validate", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) is not None and getattr(args, "seed", 0) < 0:
        parser.error("--seed must be a nonnegative integer")
    start = time.perf_counter()
    try:
        out = {"command": args.command, **args.func(args)}
    except ResourceLimitError as exc:
        print(f"simplegames: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidGameError as exc:
        print(f"simplegames: {exc}", file=sys.stderr)
        return EXIT_INVALID
    # timing is opt-in so that repeated runs print identical bytes
    out["timing"] = round(time.perf_counter() - start, 6) if args.timing else None
    sys.stdout.write(json.dumps(out, ensure_ascii=False) + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
