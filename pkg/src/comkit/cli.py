"""Command-line surface.

Subcommands: check, topes, rank, contract, delete, reorient, build,
separate, witness, kirchberger, fuzz, verify.  Exit codes: 0 for an
affirmative or clean result, 1 for a negative verdict or counterexamples,
2 for input errors.  ``--json`` switches the report to a machine-readable
body that is byte-identical across runs for identical inputs (timing goes
to the human output only, for exactly that reason).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import combinations

from . import __version__
from .corpus import CorpusSpec, com_corpus, dump_corpus
from .minors import contraction, deletion, rank, reorient_system
from .realizable import (
    PointConfiguration,
    affine_com,
    linear_om,
    separating_functional,
    AffineFunctional,
)
from .separation import (
    CLAIM_CIRCUIT_COLLAPSE,
    CLAIM_MONOTONICITY,
    CLAIM_SEPARATION,
    CONTRACTION,
    DELETION,
    SeparationQuery,
    _minimal_failing,
    _padded_present,
    audit_circuit_collapse,
    audit_kirchberger,
    audit_monotonicity,
    check_circuit_collapse,
    circuit_collapse_findings,
    hypothesis_table,
    minimal_witness,
    separating_covector,
    target_vector,
)
from .signvectors import SignSystem


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")


def _load_system(path: str) -> SignSystem:
    try:
        return SignSystem.from_json(_load_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}")


def _load_points(path: str) -> PointConfiguration:
    try:
        return PointConfiguration.from_json(_load_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}")


def _elements(text: str) -> list[str]:
    return [e.strip() for e in text.split(",") if e.strip()]


def _query(args, system: SignSystem) -> SeparationQuery:
    pos = _elements(args.positive or "")
    neg = _elements(args.negative or "")
    try:
        query = SeparationQuery.of(pos, neg)
        query.validate(system.ground)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc))
    return query


def _require_com(system: SignSystem):
    if not system.is_com():
        raise InputError("input system is not a COM (face symmetry or strong elimination fails)")


def _emit(report: dict, args, human_lines, started: float) -> None:
    if args.json:
        print(json.dumps(report))
    else:
        for line in human_lines:
            print(line)
        print(f"time: {time.perf_counter() - started:.3f}s")


# -- subcommands ------------------------------------------------------------


def _cmd_check(args, started):
    system = _load_system(args.system)
    verdict = {
        "com": system.is_com(),
        "om": system.is_om(),
        "simple": system.is_simple(),
    }
    report = {"command": "check", "system": system.to_json(), "verdict": verdict}
    _emit(
        report,
        args,
        [f"com: {verdict['com']}", f"om: {verdict['om']}", f"simple: {verdict['simple']}"],
        started,
    )
    return 0 if verdict["com"] else 1


def _cmd_topes(args, started):
    system = _load_system(args.system)
    topes = sorted(t.to_string() for t in system.topes())
    report = {"command": "topes", "system": system.to_json(), "topes": topes}
    _emit(report, args, [f"{len(topes)} topes"] + topes, started)
    return 0


def _cmd_rank(args, started):
    system = _load_system(args.system)
    if len(system) == 0:
        raise InputError("rank is undefined for an empty covector set")
    value = rank(system)
    report = {"command": "rank", "system": system.to_json(), "rank": value}
    _emit(report, args, [f"rank: {value}"], started)
    return 0


def _minor_command(name, op):
    def cmd(args, started):
        system = _load_system(args.system)
        subset = _elements(args.elements or "")
        try:
            result = op(system, subset)
        except ValueError as exc:
            raise InputError(str(exc))
        report = {
            "command": name,
            "system": system.to_json(),
            "elements": subset,
            "result": result.to_json(),
        }
        _emit(
            report,
            args,
            [f"{len(result)} covectors on {len(result.ground)} elements"]
            + [json.dumps(result.to_json())],
            started,
        )
        return 0

    return cmd


def _cmd_build(args, started):
    config = _load_points(args.points)
    builder = linear_om if args.linear else affine_com
    try:
        system = builder(config, max_points=args.max_size)
    except ValueError as exc:
        raise InputError(str(exc))
    report = {
        "command": "build",
        "points": config.to_json(),
        "linear": bool(args.linear),
        "system": system.to_json(),
    }
    _emit(
        report,
        args,
        [f"{len(system)} covectors on {len(system.ground)} elements",
         json.dumps(system.to_json())],
        started,
    )
    return 0


def _first_failing_subset(config: PointConfiguration):
    """Smallest, then lexicographically first, labeled subset that cannot be
    separated.  Bounded by dim + 2 points, which suffices whenever the whole
    configuration is inseparable."""
    labeled = [i for i, lab in zip(config.ids, config.labels) if lab]
    for size in range(1, min(len(labeled), config.dim + 2) + 1):
        for sub in combinations(labeled, size):
            vs = [i for i in sub if config.labels[config.index(i)] == "V"]
            ws = [i for i in sub if config.labels[config.index(i)] == "W"]
            if separating_functional(config, vs, ws) is None:
                return list(sub)
    return None


def _cmd_separate(args, started):
    if args.points:
        config = _load_points(args.points)
        if args.positive or args.negative:
            raise InputError("--points mode takes labels from the file")
        functional = separating_functional(config)
        if functional is not None:
            report = {
                "command": "separate",
                "mode": "points",
                "points": config.to_json(),
                "separable": True,
                "certificate": {"functional": functional.to_json()},
            }
            _emit(report, args, ["separable: true",
                                 f"functional: {functional.to_json()}"], started)
            return 0
        failing = _first_failing_subset(config)
        report = {
            "command": "separate",
            "mode": "points",
            "points": config.to_json(),
            "separable": False,
            "certificate": {"failing_subset": failing},
        }
        _emit(report, args, ["separable: false",
                             f"failing subset: {failing}"], started)
        return 1
    if not args.system:
        raise InputError("separate needs --points or --system")
    system = _load_system(args.system)
    query = _query(args, system)
    witness = separating_covector(system, query)
    report = {
        "command": "separate",
        "mode": "system",
        "system": system.to_json(),
        "positive": sorted(query.positives),
        "negative": sorted(query.negatives),
        "separable": witness is not None,
        "certificate": {"covector": witness.to_string()} if witness else None,
    }
    _emit(
        report,
        args,
        [f"separable: {str(witness is not None).lower()}"]
        + ([f"covector: {witness}"] if witness else []),
        started,
    )
    return 0 if witness is not None else 1


def _cmd_witness(args, started):
    system = _load_system(args.system)
    _require_com(system)
    query = _query(args, system)
    if not query.is_full(system.ground):
        raise InputError("witness needs a full partition of the ground set")
    target = target_vector(system.ground, query)
    if target.signs in system.row_set():
        report = {
            "command": "witness",
            "system": system.to_json(),
            "positive": sorted(query.positives),
            "negative": sorted(query.negatives),
            "separable": True,
            "certificate": {"covector": target.to_string()},
        }
        _emit(report, args, ["separable: true (target is a tope)"], started)
        return 0
    result = minimal_witness(system, query)
    report = {
        "command": "witness",
        "system": system.to_json(),
        "positive": sorted(query.positives),
        "negative": sorted(query.negatives),
        "separable": False,
        "report": result.to_json(),
    }
    _emit(
        report,
        args,
        [
            "separable: false",
            f"minimal failing set: {list(result.witness_set)}",
            f"circuit structure verified: {result.circuit_verified}",
            f"extension {list(result.extension)} fails: {result.extension_fails}",
        ],
        started,
    )
    return 0


def _cmd_kirchberger(args, started):
    system = _load_system(args.system)
    _require_com(system)
    if len(system) == 0:
        raise InputError("no targets for an empty covector set")
    query = _query(args, system)
    if not query.is_full(system.ground):
        raise InputError("kirchberger needs a full partition of the ground set")
    table = hypothesis_table(system, query)
    holds_contraction = all(row[1] for row in table)
    holds_deletion = all(row[2] for row in table)
    disagreements = sum(1 for row in table if row[1] != row[2])
    report = {
        "command": "kirchberger",
        "system": system.to_json(),
        "positive": sorted(query.positives),
        "negative": sorted(query.negatives),
        "rank": rank(system),
        "table": [
            {"subset": list(ids), "contraction": c, "deletion": d}
            for ids, c, d in table
        ],
        "holds": {"contraction": holds_contraction, "deletion": holds_deletion},
        "disagreements": disagreements,
    }
    lines = [f"subsets of size {len(table[0][0]) if table else 0}: {len(table)}"]
    for ids, c, d in table:
        lines.append(f"  {','.join(ids)}  contraction={c} deletion={d}")
    lines.append(f"holds (contraction): {holds_contraction}")
    lines.append(f"holds (deletion): {holds_deletion}")
    lines.append(f"variant disagreements: {disagreements}")
    _emit(report, args, lines, started)
    chosen = holds_contraction if args.variant == CONTRACTION else holds_deletion
    return 0 if chosen else 1


def _cmd_fuzz(args, started):
    try:
        spec = CorpusSpec(
            seed=args.seed,
            count=args.count,
            max_points=args.max_size,
        )
    except ValueError as exc:
        raise InputError(str(exc))
    hard = []
    findings = []
    instances = 0
    dump_stream = open(args.dump, "w") if args.dump else None
    try:
        for instance in com_corpus(spec):
            instances += 1
            if dump_stream:
                dump_stream.write(json.dumps(instance.to_json()) + "\n")
            provenance = {"seed": instance.seed, "index": instance.index}
            for record in audit_kirchberger(instance.system):
                record["instance"] = provenance
                hard.append(record)
            for record in audit_circuit_collapse(instance.system):
                record["instance"] = provenance
                hard.append(record)
            for record in circuit_collapse_findings(instance.system):
                record["instance"] = provenance
                findings.append(record)
            for record in audit_monotonicity(instance.system):
                record["instance"] = provenance
                findings.append(record)
    finally:
        if dump_stream:
            dump_stream.close()
    counts = {
        CLAIM_SEPARATION: sum(1 for r in hard if r["claim"] == CLAIM_SEPARATION),
        CLAIM_CIRCUIT_COLLAPSE: sum(
            1 for r in hard if r["claim"] == CLAIM_CIRCUIT_COLLAPSE
        ),
    }
    finding_counts = {
        CLAIM_MONOTONICITY: sum(
            1 for r in findings if r["claim"] == CLAIM_MONOTONICITY
        ),
        CLAIM_CIRCUIT_COLLAPSE: sum(
            1 for r in findings if r["claim"] == CLAIM_CIRCUIT_COLLAPSE
        ),
    }
    report = {
        "command": "fuzz",
        "spec": {
            "seed": spec.seed,
            "count": spec.count,
            "max_points": spec.max_points,
            "max_dim": spec.max_dim,
            "coord_bound": spec.coord_bound,
            "minor_depth": spec.minor_depth,
        },
        "instances": instances,
        "counts": counts,
        "finding_counts": finding_counts,
        "counterexamples": hard,
        "findings": findings,
    }
    lines = [
        f"instances: {instances}",
        f"{len(hard)} counterexamples"
        f" (theorem8: {counts[CLAIM_SEPARATION]},"
        f" prop7: {counts[CLAIM_CIRCUIT_COLLAPSE]})",
        f"{len(findings)} proof-step findings"
        f" (monotonicity: {finding_counts[CLAIM_MONOTONICITY]},"
        f" prop7 statement: {finding_counts[CLAIM_CIRCUIT_COLLAPSE]})",
    ]
    _emit(report, args, lines, started)
    return 1 if hard else 0


# -- verify -----------------------------------------------------------------


def _verify_functional_separates(config: PointConfiguration, data: dict) -> bool:
    functional = AffineFunctional.from_json(data)
    for pid, lab in zip(config.ids, config.labels):
        value = functional.value_at(config.points[config.index(pid)])
        if lab == "V" and value >= 0:
            return False
        if lab == "W" and value <= 0:
            return False
    return True


def _verify(report: dict, checks: list[str]) -> bool:
    command = report.get("command")
    if command == "check":
        system = SignSystem.from_json(report["system"])
        verdict = report["verdict"]
        checks.append("recomputed verdict")
        return (
            verdict["com"] == system.is_com()
            and verdict["om"] == system.is_om()
            and verdict["simple"] == system.is_simple()
        )
    if command == "topes":
        system = SignSystem.from_json(report["system"])
        checks.append("recomputed topes")
        return report["topes"] == sorted(t.to_string() for t in system.topes())
    if command == "rank":
        system = SignSystem.from_json(report["system"])
        checks.append("recomputed rank")
        return report["rank"] == rank(system)
    if command in ("contract", "delete", "reorient"):
        system = SignSystem.from_json(report["system"])
        op = {"contract": contraction, "delete": deletion, "reorient": reorient_system}[command]
        checks.append(f"recomputed {command}")
        return op(system, report["elements"]).to_json() == report["result"]
    if command == "build":
        config = PointConfiguration.from_json(report["points"])
        builder = linear_om if report["linear"] else affine_com
        checks.append("re-enumerated system")
        return builder(config).to_json() == report["system"]
    if command == "separate" and report.get("mode") == "points":
        config = PointConfiguration.from_json(report["points"])
        if report["separable"]:
            checks.append("re-evaluated separating functional")
            return _verify_functional_separates(
                config, report["certificate"]["functional"]
            )
        checks.append("re-solved failing subset")
        sub = report["certificate"]["failing_subset"]
        vs = [i for i in sub if config.labels[config.index(i)] == "V"]
        ws = [i for i in sub if config.labels[config.index(i)] == "W"]
        return (
            separating_functional(config, vs, ws) is None
            and separating_functional(config) is None
        )
    if command == "separate" and report.get("mode") == "system":
        system = SignSystem.from_json(report["system"])
        query = SeparationQuery.of(report["positive"], report["negative"])
        if report["separable"]:
            checks.append("re-checked covector membership and pattern")
            cov = report["certificate"]["covector"]
            if cov not in system:
                return False
            signs = system.vector(
                [{"+": 1, "0": 0, "-": -1}[c] for c in cov]
            )
            return all(signs[e] == 1 for e in query.positives) and all(
                signs[e] == -1 for e in query.negatives
            )
        checks.append("re-scanned for separating covectors")
        return separating_covector(system, query) is None
    if command == "witness":
        system = SignSystem.from_json(report["system"])
        query = SeparationQuery.of(report["positive"], report["negative"])
        target = target_vector(system.ground, query)
        if report["separable"]:
            checks.append("re-checked target tope")
            return report["certificate"]["covector"] in system
        body = report["report"]
        d_idx = system.ground.positions(body["d"])
        checks.append("re-checked witness set failure and minimality")
        if _padded_present(system, target.signs, d_idx):
            return False
        if _minimal_failing(system, target.signs) != d_idx:
            return False
        checks.append("re-checked contraction snapshot and circuit claim")
        rest = [e for e in system.ground.elements if e not in set(body["d"])]
        if contraction(system, rest).to_json() != body["contraction"]:
            return False
        recomputed = minimal_witness(system, query)
        return (
            recomputed.circuit_verified == body["circuit_verified"]
            and list(recomputed.extension) == body["extension"]
            and recomputed.extension_fails == body["extension_fails"]
        )
    if command == "kirchberger":
        system = SignSystem.from_json(report["system"])
        query = SeparationQuery.of(report["positive"], report["negative"])
        checks.append("recomputed hypothesis table")
        table = hypothesis_table(system, query)
        return report["table"] == [
            {"subset": list(ids), "contraction": c, "deletion": d}
            for ids, c, d in table
        ]
    if command == "fuzz":
        checks.append("re-checked every counterexample record")
        for record in report.get("counterexamples", []) + report.get("findings", []):
            if not _verify_record(record):
                return False
        return True
    raise InputError(f"nothing to verify in a {command!r} report")


def _verify_record(record: dict) -> bool:
    system = SignSystem.from_json(record["system"])
    target = record["target"]
    signs = tuple({"+": 1, "0": 0, "-": -1}[c] for c in target)
    claim = record["claim"]
    if claim == CLAIM_SEPARATION:
        query = SeparationQuery.of(
            (e for e, s in zip(system.ground.elements, signs) if s == 1),
            (e for e, s in zip(system.ground.elements, signs) if s == -1),
        )
        from .separation import hypothesis_holds, target_tope_present

        holds, _ = hypothesis_holds(system, query, CONTRACTION)
        return holds and not target_tope_present(system, query)
    if claim == CLAIM_CIRCUIT_COLLAPSE:
        # a prop7 record always contradicts the statement-level claim
        return not check_circuit_collapse(
            system, require_simple=True, require_zero=False
        )
    if claim == CLAIM_MONOTONICITY:
        d_idx = system.ground.positions(record["witness"]["d"])
        c_idx = system.ground.positions(record["witness"]["c"])
        return (not _padded_present(system, signs, d_idx)) and _padded_present(
            system, signs, c_idx
        )
    return False


def _cmd_verify(args, started):
    report = _load_json(args.report)
    if not isinstance(report, dict):
        raise InputError(f"{args.report}: not a report object")
    checks: list[str] = []
    try:
        accepted = _verify(report, checks)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"malformed report: {exc}")
    out = {
        "command": "verify",
        "verified_command": report.get("command"),
        "accepted": accepted,
        "checks": checks,
    }
    _emit(out, args, [f"accepted: {str(accepted).lower()}"] + checks, started)
    return 0 if accepted else 1


# -- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="comkit",
        description="sign-vector systems, separation certificates, and audits",
    )
    parser.add_argument("--version", action="version", version=f"comkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="COM/OM/simplicity verdict")
    p.add_argument("--system", required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("topes", parents=[common], help="full-support covectors")
    p.add_argument("--system", required=True)
    p.set_defaults(func=_cmd_topes)

    p = sub.add_parser("rank", parents=[common], help="largest shattered subset size")
    p.add_argument("--system", required=True)
    p.set_defaults(func=_cmd_rank)

    for name, op in (
        ("contract", contraction),
        ("delete", deletion),
        ("reorient", reorient_system),
    ):
        p = sub.add_parser(name, parents=[common], help=f"{name} by an element set")
        p.add_argument("--system", required=True)
        p.add_argument("--elements", required=True, help="comma-separated ids")
        p.set_defaults(func=_minor_command(name, op))

    p = sub.add_parser("build", parents=[common], help="points to sign-vector system")
    p.add_argument("--points", required=True)
    p.add_argument("--linear", action="store_true", help="offset fixed to zero")
    p.add_argument("--max-size", type=int, default=12)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("separate", parents=[common], help="separability with certificate")
    p.add_argument("--points")
    p.add_argument("--system")
    p.add_argument("--positive", help="comma-separated ids (system mode)")
    p.add_argument("--negative", help="comma-separated ids (system mode)")
    p.set_defaults(func=_cmd_separate)

    p = sub.add_parser("witness", parents=[common], help="minimal failing set certificate")
    p.add_argument("--system", required=True)
    p.add_argument("--positive")
    p.add_argument("--negative")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser(
        "kirchberger", parents=[common], help="subset criterion table over all C"
    )
    p.add_argument("--system", required=True)
    p.add_argument("--positive")
    p.add_argument("--negative")
    p.add_argument("--variant", choices=[CONTRACTION, DELETION], default=CONTRACTION)
    p.set_defaults(func=_cmd_kirchberger)

    p = sub.add_parser("fuzz", parents=[common], help="audit a seeded corpus")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-size", type=int, default=7, help="points per instance")
    p.add_argument("--dump", help="write the corpus as JSON lines")
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("verify", parents=[common], help="re-verify an emitted report")
    p.add_argument("--report", required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
