"""Command-line front-end.

Exit codes: 0 success / positive decision, 1 input error, 2 negative decision
for the yes/no subcommands (morita, iso), 3 internal invariant violation
(cross-decider disagreement, which is always a bug).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .files import ParseError, monoid_to_obj, parse_monoid_file, parse_mset_file
from .karoubi import (
    KaroubiError,
    categories_equivalent,
    karoubi_envelope,
    skeleton,
)
from .monoid import (
    FiniteMonoid,
    MonoidError,
    classify_properties,
    find_isomorphism,
    idempotents,
    left_ideals,
    right_ideals,
)
from .morita import MoritaError, conjugations_between, morita_equivalent, semigroup_homs, triviality_report
from .mset import (
    MSetError,
    decompose,
    fixed_points,
    is_atomic_topos,
    is_indecomposable,
    is_projective,
    is_separator,
    reconstruct_from_separator,
    essential_points,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2
EXIT_INVARIANT = 3


def _digest(path) -> dict:
    with open(path, "rb") as fh:
        return {"path": str(path), "sha256": hashlib.sha256(fh.read()).hexdigest()}


def _labels(M: FiniteMonoid, items) -> list[str]:
    return [M.label(i) for i in sorted(items)]


def _emit(args, analysis: str, inputs, result: dict, started: float,
          human_lines) -> None:
    if args.json:
        report = {
            "analysis": analysis,
            "inputs": [_digest(p) for p in inputs],
            "result": result,
            "elapsed_ms": round((time.perf_counter() - started) * 1000.0, 3),
        }
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _cmd_validate(args) -> int:
    started = time.perf_counter()
    M = parse_monoid_file(args.monoid)
    result = {"valid": True, "order": M.order, "identity": M.label(M.identity)}
    _emit(args, "validate", [args.monoid], result, started,
          [f"valid monoid of order {M.order}, identity {M.label(M.identity)}"])
    return EXIT_OK


def _cmd_analyze(args) -> int:
    started = time.perf_counter()
    M = parse_monoid_file(args.monoid)
    props = classify_properties(M)
    trivial = triviality_report(M)
    result = {
        "order": M.order,
        "identity": M.label(M.identity),
        "properties": {
            "is_commutative": props.is_commutative,
            "is_group": props.is_group,
            "is_left_cancellative": props.is_left_cancellative,
            "is_right_cancellative": props.is_right_cancellative,
            "right_invertible_implies_unit": props.right_invertible_implies_unit,
            "left_invertible_implies_unit": props.left_invertible_implies_unit,
        },
        "units": _labels(M, props.units),
        "idempotents": _labels(M, props.idempotents),
        "right_ideals": [_labels(M, s) for s in right_ideals(M)],
        "left_ideals": [_labels(M, s) for s in left_ideals(M)],
        "triviality": {
            "commutative": trivial.commutative,
            "group": trivial.group,
            "one_sided_invertibles_are_units": trivial.one_sided_invertibles_are_units,
            "cancellative_one_side": trivial.cancellative_one_side,
            "dcc_idempotents_right_absorption": trivial.dcc_idempotents_right_absorption,
            "dcc_idempotents_two_sided": trivial.dcc_idempotents_two_sided,
            "dcc_right_ideals": trivial.dcc_right_ideals,
            "dcc_left_ideals": trivial.dcc_left_ideals,
            "verdict": trivial.verdict,
            "note": trivial.note,
        },
        "is_atomic_topos": is_atomic_topos(M),
    }
    lines = [
        f"order {M.order}, identity {M.label(M.identity)}",
        f"commutative: {props.is_commutative}, group: {props.is_group}",
        f"units: {{{', '.join(result['units'])}}}",
        f"idempotents: {{{', '.join(result['idempotents'])}}}",
        f"right ideals: {[sorted(s_labels) for s_labels in result['right_ideals']]}",
        f"Morita class: {trivial.verdict} ({trivial.note})",
        f"atomic action category: {result['is_atomic_topos']}",
    ]
    _emit(args, "analyze", [args.monoid], result, started, lines)
    return EXIT_OK


def _cmd_karoubi(args) -> int:
    started = time.perf_counter()
    M = parse_monoid_file(args.monoid)
    C = karoubi_envelope(M)
    reps, class_of = skeleton(C)
    matrix = [[len(C.hom[(e, d)]) for d in C.objects] for e in C.objects]
    classes = {}
    for e in C.objects:
        classes.setdefault(class_of[e], []).append(e)
    result = {
        "objects": [M.label(e) for e in C.objects],
        "hom_cardinality_matrix": matrix,
        "skeleton_classes": [
            {"representative": M.label(r), "members": [M.label(e) for e in classes[r]]}
            for r in reps],
    }
    lines = [f"objects: {result['objects']}",
             f"hom cardinalities: {matrix}",
             "skeleton classes: " + "; ".join(
                 f"[{', '.join(c['members'])}] ~ {c['representative']}"
                 for c in result["skeleton_classes"])]
    _emit(args, "karoubi", [args.monoid], result, started, lines)
    return EXIT_OK


def _cmd_points(args) -> int:
    started = time.perf_counter()
    M = parse_monoid_file(args.monoid)
    report = essential_points(M)
    result = {
        "idempotents": [M.label(e) for e in report.idempotents],
        "classes": [
            {
                "representative": M.label(c.representative),
                "members": [M.label(e) for e in c.members],
                "principal_carrier": [c.principal.label(x) for x in range(c.principal.size)],
                "surjective": c.is_surjective,
                "reconstructed": monoid_to_obj(c.reconstructed),
            }
            for c in report.classes],
    }
    lines = [f"{len(report.idempotents)} essential points "
             f"({len(report.classes)} isomorphism classes)"]
    for c in result["classes"]:
        lines.append(
            f"  class of {c['representative']}: members {{{', '.join(c['members'])}}}, "
            f"surjective: {c['surjective']}, End has order {c['reconstructed']['order']}")
    _emit(args, "points", [args.monoid], result, started, lines)
    return EXIT_OK


def _cmd_morita(args) -> int:
    started = time.perf_counter()
    M = parse_monoid_file(args.monoid_a)
    N = parse_monoid_file(args.monoid_b)
    witness = morita_equivalent(M, N)
    result: dict = {"equivalent": witness is not None}
    if witness is not None:
        t1, t2 = witness.equivalence.triangle_identities()
        result["witness"] = {
            "e": M.label(witness.e),
            "beta": M.label(witness.beta),
            "beta_prime": M.label(witness.beta_prime),
            "iso": [M.label(m) for m in witness.iso],
            "equivalence": {
                "forward": [M.label(m) for m in witness.equivalence.forward.mapping],
                "pseudo_inverse": [N.label(m)
                                   for m in witness.equivalence.pseudo_inverse.mapping],
                "alpha": N.label(witness.equivalence.alpha.element),
                "alpha_inverse": N.label(witness.equivalence.alpha_inverse.element),
                "beta": M.label(witness.equivalence.beta.element),
                "beta_inverse": M.label(witness.equivalence.beta_inverse.element),
                "triangle_identities": [t1, t2],
            },
        }
    lines = ["Morita equivalent" if witness is not None else "not Morita equivalent"]
    if witness is not None:
        w = result["witness"]
        lines.append(f"  e = {w['e']}, beta = {w['beta']}, beta' = {w['beta_prime']}, "
                     f"iso image = [{', '.join(w['iso'])}]")
    exit_code = EXIT_OK if witness is not None else EXIT_NEGATIVE
    if args.cross_check:
        karoubi_ok = categories_equivalent(karoubi_envelope(M), karoubi_envelope(N)) is not None
        iso_ok = find_isomorphism(M, N) is not None
        agreement = (witness is not None) == karoubi_ok == iso_ok
        result["cross_check"] = {
            "morita": witness is not None,
            "karoubi_equivalence": karoubi_ok,
            "isomorphism": iso_ok,
            "agree": agreement,
        }
        lines.append(f"  cross-check: karoubi {karoubi_ok}, isomorphism {iso_ok}"
                     + ("" if agreement else "  ** DISAGREEMENT **"))
        if not agreement:
            exit_code = EXIT_INVARIANT
    _emit(args, "morita", [args.monoid_a, args.monoid_b], result, started, lines)
    return exit_code


def _cmd_homs(args) -> int:
    started = time.perf_counter()
    M = parse_monoid_file(args.monoid_a)
    N = parse_monoid_file(args.monoid_b)
    homs = semigroup_homs(M, N)
    counts = [[len(conjugations_between(f, g)) for g in homs] for f in homs]
    result = {
        "homs": [{"map": [N.label(v) for v in h.mapping],
                  "is_monoid_hom": h.is_monoid_hom} for h in homs],
        "conjugation_counts": counts,
    }
    lines = [f"{len(homs)} semigroup homomorphisms"]
    for h in result["homs"]:
        lines.append(f"  [{', '.join(h['map'])}]"
                     + (" (monoid hom)" if h["is_monoid_hom"] else ""))
    lines.append(f"conjugation counts: {counts}")
    _emit(args, "homs", [args.monoid_a, args.monoid_b], result, started, lines)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    started = time.perf_counter()
    X = parse_mset_file(args.mset)
    parts = decompose(X)
    result = {
        "size": X.size,
        "components": [{"size": P.size,
                        "members": [P.label(x) for x in range(P.size)]}
                       for P in parts],
        "fixed_points": [X.label(x) for x in sorted(fixed_points(X))],
    }
    lines = [f"{len(parts)} indecomposable component(s)"]
    for c in result["components"]:
        lines.append(f"  {{{', '.join(c['members'])}}}")
    lines.append(f"fixed points: {{{', '.join(result['fixed_points'])}}}")
    _emit(args, "decompose", [args.mset], result, started, lines)
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    started = time.perf_counter()
    X = parse_mset_file(args.mset)
    checks = {
        "indecomposable": is_indecomposable(X),
        "projective": is_projective(X),
        "separator": is_separator(X),
    }
    monoid = reconstruct_from_separator(X)   # raises on failed preconditions
    iso = find_isomorphism(monoid, X.monoid)
    result = {
        "checks": checks,
        "reconstructed": monoid_to_obj(monoid),
        "isomorphic_to_action_monoid": iso is not None,
    }
    lines = [f"reconstructed monoid of order {monoid.order}",
             f"isomorphic to the acting monoid: {iso is not None}"]
    _emit(args, "reconstruct", [args.mset], result, started, lines)
    return EXIT_OK


def _cmd_iso(args) -> int:
    started = time.perf_counter()
    M = parse_monoid_file(args.monoid_a)
    N = parse_monoid_file(args.monoid_b)
    witness = find_isomorphism(M, N)
    result: dict = {"isomorphic": witness is not None}
    if witness is not None:
        result["mapping"] = [N.label(v) for v in witness]
    lines = ["isomorphic" if witness is not None else "not isomorphic"]
    if witness is not None:
        lines.append("  " + ", ".join(f"{M.label(i)} -> {result['mapping'][i]}"
                                      for i in range(M.order)))
    _emit(args, "iso", [args.monoid_a, args.monoid_b], result, started, lines)
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monact",
        description="Finite monoids, their action categories, and Morita equivalence.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(handler=handler)
        return p

    p = add("validate", _cmd_validate, "validate a monoid file")
    p.add_argument("monoid")
    p = add("analyze", _cmd_analyze, "properties, ideals, triviality, atomicity")
    p.add_argument("monoid")
    p = add("karoubi", _cmd_karoubi, "idempotent completion report")
    p.add_argument("monoid")
    p = add("points", _cmd_points, "essential points of the action category")
    p.add_argument("monoid")
    p = add("morita", _cmd_morita, "decide Morita equivalence of two monoids")
    p.add_argument("monoid_a")
    p.add_argument("monoid_b")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the Karoubi and isomorphism deciders; "
                        "exit 3 on disagreement")
    p = add("homs", _cmd_homs, "semigroup homomorphisms and conjugation counts")
    p.add_argument("monoid_a")
    p.add_argument("monoid_b")
    p = add("decompose", _cmd_decompose, "indecomposable components of an M-set")
    p.add_argument("mset")
    p = add("reconstruct", _cmd_reconstruct,
            "recover the monoid from an indecomposable projective separator")
    p.add_argument("mset")
    p = add("iso", _cmd_iso, "decide isomorphism of two monoids")
    p.add_argument("monoid_a")
    p.add_argument("monoid_b")
    return parser


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, MonoidError, MSetError, MoritaError, KaroubiError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
