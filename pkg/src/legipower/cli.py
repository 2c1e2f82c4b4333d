"""Command-line front end: spec-file analyses with deterministic reports.

Exit codes: 0 success, 1 oracle mismatch, 2 input validation failure,
3 capability bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, oracle
from .chambers import ChamberSpec, classify_bicameral, crossover_sizes, majority_quota
from .counting import CountVector
from .reporting import (
    Report,
    approx_int,
    approx_rational,
    format_int,
    format_rational,
    render,
)
from .semivalues import (
    WeightingVector,
    banzhaf,
    distinguishing_indices,
    evaluate,
    point_mass,
    shapley_shubik,
    weak_desirability,
)
from .specfile import LoadedSpec, SpecFileError, load_spec_file, load_weight_file
from .uslike import UsSpec, vp_rep_sign_table

def _canonical_echo(document: dict) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":"))


def _meta(args: argparse.Namespace, command: str, echo: dict | None) -> list[tuple[str, str]] | None:
    if args.no_meta:
        return None
    meta = [("tool", "legipower"), ("version", __version__), ("command", command)]
    if echo is not None:
        meta.append(("spec", _canonical_echo(echo)))
    return meta


def _resolve_index(selector: str, n: int) -> tuple[str, WeightingVector]:
    if selector == "banzhaf":
        return "banzhaf", banzhaf(n)
    if selector == "shapley":
        return "shapley", shapley_shubik(n)
    if selector.startswith("pointmass:"):
        raw = selector.split(":", 1)[1]
        try:
            size = int(raw)
        except ValueError:
            raise SpecFileError(f"pointmass size must be an integer, got {raw!r}") from None
        try:
            return f"pointmass:{size}", point_mass(n, size)
        except ValueError as exc:
            raise SpecFileError(str(exc)) from exc
    if selector.startswith("file:"):
        path = selector.split(":", 1)[1]
        return f"file:{path}", load_weight_file(path, n)
    raise SpecFileError(
        f"unknown index selector {selector!r}; use banzhaf, shapley, pointmass:<k>, file:<path>"
    )


def _spec_section(report: Report, loaded: LoadedSpec) -> None:
    sec = report.section("spec", "legislature", ("field", "value"))
    if loaded.us is not None:
        us = loaded.us
        senate, house = loaded.chamber_names
        sec.rows.extend([
            ("kind", "us-style"),
            (f"{senate}.size", str(us.senate_size)),
            (f"{senate}.quota", str(us.senate_quota)),
            (f"{senate}.override", str(us.senate_override)),
            (f"{house}.size", str(us.house_size)),
            (f"{house}.quota", str(us.house_quota)),
            (f"{house}.override", str(us.house_override)),
            ("president", str(us.has_president).lower()),
            ("vice_president", str(us.has_vp).lower()),
            ("players", str(us.total_players)),
        ])
    else:
        sec.rows.append(("kind", "multicameral"))
        for chamber in loaded.multicam.chambers:
            sec.rows.append((f"{chamber.name}.size", str(chamber.size)))
            sec.rows.append((f"{chamber.name}.quota", str(chamber.quota)))
        sec.rows.append(("players", str(loaded.multicam.total_players)))


def _vector_section(report: Report, vectors: dict[str, CountVector],
                    elide: bool, approx: bool) -> None:
    headers = ("class", "size", "count") + (("approx",) if approx else ())
    sec = report.section("critical_vectors", "critical numbers", headers)
    for class_id, vec in vectors.items():
        for k, v in vec.items():
            row = (class_id, str(k), format_int(v, elide))
            if approx:
                row += (approx_int(v),)
            sec.rows.append(row)


def _index_sections(report: Report, vectors: dict[str, CountVector],
                    indices: list[tuple[str, WeightingVector]], approx: bool) -> None:
    headers = ("class", "index", "value") + (("approx",) if approx else ())
    values_sec = report.section("index_values", "index values", headers)
    ranking_sec = report.section("ranking", "ranking", ("index", "rank", "class", "value"))
    for index_name, w in indices:
        values: dict[str, Fraction] = {}
        for class_id, vec in vectors.items():
            values[class_id] = evaluate(w, vec)
            row = (class_id, index_name, format_rational(values[class_id]))
            if approx:
                row += (approx_rational(values[class_id]),)
            values_sec.rows.append(row)
        ordered = sorted(values.items(), key=lambda cv: (-cv[1], list(vectors).index(cv[0])))
        rank = 0
        previous = None
        for position, (class_id, value) in enumerate(ordered, start=1):
            if value != previous:
                rank = position
                previous = value
            ranking_sec.rows.append((index_name, str(rank), class_id, format_rational(value)))


def _load_vectors(loaded: LoadedSpec) -> dict[str, CountVector]:
    return {class_id: loaded.vector(class_id) for class_id in loaded.class_ids()}


def cmd_analyze(args: argparse.Namespace) -> int:
    loaded = load_spec_file(args.specfile)
    vectors = _load_vectors(loaded)
    index_name, w = _resolve_index(args.index, loaded.total_players)
    report = Report(_meta(args, "analyze", loaded.echo))
    _spec_section(report, loaded)
    elide = args.format != "json" and not args.full
    _vector_section(report, vectors, elide, args.approx)
    _index_sections(report, vectors, [(index_name, w)], args.approx)
    print(render(report, args.format), end="")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    loaded = load_spec_file(args.specfile)
    class_a = loaded.resolve_class(args.class_a)
    class_b = loaded.resolve_class(args.class_b)
    if class_a == class_b:
        raise SpecFileError("compare needs two distinct classes")
    va = loaded.vector(class_a)
    vb = loaded.vector(class_b)
    relation = weak_desirability(va, vb)

    report = Report(_meta(args, "compare", loaded.echo))
    sec = report.section("comparison", "weak desirability", ("field", "value"))
    sec.rows.append(("first", class_a))
    sec.rows.append(("second", class_b))
    sec.rows.append(("relation", relation.kind.value))
    if relation.witness is not None:
        sec.rows.append(("first_ahead_at", str(relation.witness[0])))
        sec.rows.append(("second_ahead_at", str(relation.witness[1])))
        pair = distinguishing_indices(va, vb, loaded.total_players)
        dsec = report.section(
            "distinguishing_indices", "distinguishing point-mass indices",
            ("favours", "size", "weight"),
        )
        for favours, w in zip((class_a, class_b), pair):
            size = next(k for k in range(1, w.n + 1) if w.weight(k))
            dsec.rows.append((favours, str(size), format_rational(w.weight(size))))
    print(render(report, args.format), end="")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    loaded = load_spec_file(args.specfile)
    game = loaded.game()
    report = Report(_meta(args, "oracle", loaded.echo))
    sec = report.section("oracle", "closed form versus exhaustive enumeration",
                         ("class", "status", "detail"))
    mismatched = False
    for class_id in loaded.class_ids():
        closed = loaded.vector(class_id)
        players = game.players(class_id)
        if not players:
            sec.rows.append((class_id, "match", "no players"))
            continue
        enumerated = oracle.critical_vector(game, players[0])
        if closed == enumerated:
            sec.rows.append((class_id, "match", f"{len(closed.support())} sizes"))
        else:
            mismatched = True
            bad = next(
                k for k in sorted(set(closed.support()) | set(enumerated.support()))
                if closed[k] != enumerated[k]
            )
            sec.rows.append((
                class_id, "MISMATCH",
                f"size {bad}: closed {closed[bad]}, enumerated {enumerated[bad]}",
            ))
            break
    print(render(report, args.format), end="")
    return 1 if mismatched else 0


def _sign_runs(signs: dict[int, int]) -> list[tuple[int, int, int]]:
    runs: list[tuple[int, int, int]] = []
    for k in sorted(signs):
        if runs and runs[-1][2] == signs[k] and runs[-1][1] == k - 1:
            runs[-1] = (runs[-1][0], k, signs[k])
        else:
            runs.append((k, k, signs[k]))
    return runs


def cmd_us(args: argparse.Namespace) -> int:
    spec = UsSpec(
        senate_quota=args.qs if args.qs is not None else 51,
        house_quota=args.qr if args.qr is not None else 218,
        senate_override=args.os if args.os is not None else 67,
        house_override=args.override_reps if args.override_reps is not None else 290,
    )
    echo = {
        "chambers": [
            {"name": "senate", "size": spec.senate_size, "quota": spec.senate_quota},
            {"name": "house", "size": spec.house_size, "quota": spec.house_quota},
        ],
        "executive": {
            "president": True,
            "vice_president": True,
            "override": {"senate": spec.senate_override, "house": spec.house_override},
        },
    }
    loaded = LoadedSpec(None, spec, ("senate", "house"), echo)
    vectors = _load_vectors(loaded)
    n = spec.total_players

    report = Report(_meta(args, "us", echo))
    _spec_section(report, loaded)

    verdicts = report.section("verdicts", "weak desirability verdicts",
                              ("first", "second", "relation"))
    ids = list(vectors)
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            relation = weak_desirability(vectors[a], vectors[b])
            verdicts.rows.append((a, b, relation.kind.value))

    signs = vp_rep_sign_table(spec)
    sign_sec = report.section("vp_vs_representative", "vice president versus representative",
                              ("from_size", "to_size", "ahead"))
    for lo, hi, sign in _sign_runs(signs):
        ahead = {1: "vice_president", 0: "tie", -1: "representative"}[sign]
        sign_sec.rows.append((str(lo), str(hi), ahead))

    _index_sections(report, vectors, [("banzhaf", banzhaf(n)), ("shapley", shapley_shubik(n))],
                    args.approx)
    elide = args.format != "json" and not args.full
    _vector_section(report, vectors, elide, args.approx)
    print(render(report, args.format), end="")
    return 0


def cmd_crossover(args: argparse.Namespace) -> int:
    m_small, m_large = args.ms, args.mr
    if not 1 <= m_small < m_large:
        raise SpecFileError(f"need 1 <= --ms < --mr, got {m_small}, {m_large}")
    q_small = args.qs if args.qs is not None else majority_quota(m_small)
    q_large = args.qr if args.qr is not None else majority_quota(m_large)
    try:
        ChamberSpec("small", m_small, q_small)
        ChamberSpec("large", m_large, q_large)
    except ValueError as exc:
        raise SpecFileError(str(exc)) from exc
    sizes = crossover_sizes(m_small, q_small, m_large, q_large)

    report = Report(_meta(args, "crossover", None))
    sec = report.section("crossover", "larger-house advantage sizes", ("field", "value"))
    sec.rows.append(("small.size", str(m_small)))
    sec.rows.append(("small.quota", str(q_small)))
    sec.rows.append(("large.size", str(m_large)))
    sec.rows.append(("large.quota", str(q_large)))
    sec.rows.append(("case", classify_bicameral(m_small, m_large).value))
    sec.rows.append(("crossover_sizes", " ".join(str(k) for k in sorted(sizes)) or "none"))
    print(render(report, args.format), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legipower",
        description="Exact voting-power analysis for multicameral legislatures.",
    )
    parser.add_argument("--version", action="version", version=f"legipower {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table",
                        help="output format (default: table)")
    common.add_argument("--full", action="store_true",
                        help="never elide large counts in table/csv output")
    common.add_argument("--no-meta", action="store_true", help="omit the metadata block")
    common.add_argument("--approx", action="store_true",
                        help="add clearly-marked decimal approximations")

    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", parents=[common],
                               help="critical vectors, index values, and ranking")
    p_analyze.add_argument("specfile")
    p_analyze.add_argument("--index", default="banzhaf",
                           help="banzhaf | shapley | pointmass:<k> | file:<path>")
    p_analyze.set_defaults(func=cmd_analyze)

    p_compare = sub.add_parser("compare", parents=[common],
                               help="weak-desirability verdict for two player classes")
    p_compare.add_argument("specfile")
    p_compare.add_argument("class_a")
    p_compare.add_argument("class_b")
    p_compare.set_defaults(func=cmd_compare)

    p_oracle = sub.add_parser("oracle", parents=[common],
                              help="cross-validate closed forms by exhaustive enumeration")
    p_oracle.add_argument("specfile")
    p_oracle.set_defaults(func=cmd_oracle)

    p_us = sub.add_parser("us", parents=[common],
                          help="built-in US-style system with optional quota overrides")
    p_us.add_argument("--qs", type=int, help="senate signature quota (default 51)")
    p_us.add_argument("--qr", type=int, help="house signature quota (default 218)")
    p_us.add_argument("--os", type=int, help="senate override quota (default 67)")
    p_us.add_argument("--or", type=int, dest="override_reps",
                      help="house override quota (default 290)")
    p_us.set_defaults(func=cmd_us)

    p_cross = sub.add_parser("crossover", parents=[common],
                             help="sizes where the larger house's member is ahead")
    p_cross.add_argument("--ms", type=int, required=True, help="smaller house size")
    p_cross.add_argument("--mr", type=int, required=True, help="larger house size")
    p_cross.add_argument("--qs", type=int, help="smaller house quota (default: majority)")
    p_cross.add_argument("--qr", type=int, help="larger house quota (default: majority)")
    p_cross.set_defaults(func=cmd_crossover)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.GameSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
