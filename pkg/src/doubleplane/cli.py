"""Command line front end.

Verbs: components, connect, rao, character, liaison, bilink, catalog,
verify, selftest.  Every data command has a --json mirror whose output
round-trips byte-identically through json.loads/json.dumps.  Exit codes:
0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance, cohomology
from .bounds import bounds_for, classify
from .catalog import (
    CATALOG_FORMS,
    SpecializationError,
    catalog_entry,
    extract_report,
    extraction_window,
    extremal_like_ideal,
    predicted_source_triple,
    verify_specialization,
)
from .characters import (
    collinear_model,
    curve_character,
    curve_character_from_h0,
    curve_character_tail,
    generic_model,
    z_from_character_tail,
)
from .hilbert_scheme import (
    component_graph,
    components,
    graph_dot,
    graph_json_payload,
    is_connected,
    nonempty,
)
from .intfn import IntFn
from .liaison import bilink, liaison_invariants, link
from .polyoracle import format_ideal, format_poly, parse_ideal, parse_poly
from .triples import Triple, component_dim, curve_class


class DomainError(Exception):
    """User-facing error: valid syntax, impossible request."""


def _triple_payload(t: Triple) -> dict:
    return {"z": t.z, "y": t.y, "p": t.p}


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _model_for(t: Triple, profile: str):
    if profile == "generic":
        return generic_model(t)
    return collinear_model(t)


# --------------------------------------------------------------------------
# verbs


def cmd_components(args: argparse.Namespace) -> int:
    if not nonempty(args.d, args.g):
        raise DomainError(
            f"empty: no curves of degree {args.d} and genus {args.g} "
            "lie on the double plane"
        )
    comps = components(args.d, args.g)
    if args.json:
        _emit_json(
            {
                "d": args.d,
                "g": args.g,
                "components": [
                    {"z": t.z, "y": t.y, "p": t.p, "dim": component_dim(t)}
                    for t in comps
                ],
            }
        )
        return 0
    print(f"degree {args.d} genus {args.g}: {len(comps)} component(s)")
    ok = True
    for t in comps:
        cc = curve_class(t)
        good = (cc.d, cc.g) == (args.d, args.g)
        ok = ok and good
        mark = "ok" if good else "MISMATCH"
        print(f"  {t}  dim {component_dim(t)}  class {cc} [{mark}]")
    return 0 if ok else 1


def cmd_connect(args: argparse.Namespace) -> int:
    if not nonempty(args.d, args.g):
        raise DomainError(
            f"empty: no curves of degree {args.d} and genus {args.g} "
            "lie on the double plane"
        )
    graph = component_graph(args.d, args.g)
    connected = is_connected(args.d, args.g)
    if args.json:
        payload = graph_json_payload(graph)
        payload["connected"] = connected
        _emit_json(payload)
        return 0
    if args.dot:
        sys.stdout.write(graph_dot(graph))
        print(f"// connected: {'true' if connected else 'false'}")
        return 0
    print(
        f"degree {args.d} genus {args.g}: {len(graph.nodes)} component(s), "
        f"{len(graph.edges)} specialization edge(s)"
    )
    for a, b in graph.edges:
        print(f"  {a} -> {b}")
    print(f"connected: {'true' if connected else 'false'}")
    return 0


def _table_range(model) -> range:
    d = curve_class(model.triple).d
    rao = cohomology.rao_function(model)
    lo, hi = -2, d
    if not rao.is_zero():
        lo = min(lo, rao.support()[0])
        hi = max(hi, rao.support()[-1])
    return range(lo, hi + 1)


def cmd_rao(args: argparse.Namespace) -> int:
    model = _model_for(Triple(args.z, args.y, args.p), args.profile)
    cc = curve_class(model.triple)
    kind = classify(model)
    rho_e, rho_s = bounds_for(model)
    degrees = _table_range(model)
    if args.json:
        _emit_json(
            {
                "z": args.z,
                "y": args.y,
                "p": args.p,
                "profile": args.profile,
                "d": cc.d,
                "g": cc.g,
                "classification": kind.value,
                "acm": cohomology.is_acm(model),
                "h0": {str(n): cohomology.h0(model, n) for n in degrees},
                "h1": {str(n): cohomology.h1(model, n) for n in degrees},
                "h2": {str(n): cohomology.h2(model, n) for n in degrees},
                "rho_extremal": rho_e.to_json_dict() if rho_e is not None else None,
                "rho_subextremal": rho_s.to_json_dict() if rho_s is not None else None,
            }
        )
        return 0
    print(
        f"triple {model.triple}  profile {args.profile}  "
        f"class {cc}  classification: {kind.value}"
    )

    def cell(fn: IntFn | None, n: int) -> str:
        return "." if fn is None else str(fn(n))

    print(f"{'n':>4} {'h0':>6} {'h1':>4} {'h2':>6} {'rhoE':>5} {'rhoS':>5}")
    for n in degrees:
        print(
            f"{n:>4} {cohomology.h0(model, n):>6} {cohomology.h1(model, n):>4} "
            f"{cohomology.h2(model, n):>6} {cell(rho_e, n):>5} {cell(rho_s, n):>5}"
        )
    return 0


def cmd_character(args: argparse.Namespace) -> int:
    model = _model_for(Triple(args.z, args.y, args.p), args.profile)
    structural = curve_character(model)
    direct = curve_character_from_h0(model)
    equal = structural == direct
    recovered = z_from_character_tail(
        curve_character_tail(model), model.triple.p, model.zprofile.s
    )
    z_ok = recovered == model.triple.z
    if args.json:
        _emit_json(
            {
                "z": args.z,
                "y": args.y,
                "p": args.p,
                "profile": args.profile,
                "character": structural.to_json_dict(),
                "character_from_sections": direct.to_json_dict(),
                "equal": equal,
                "z_recovered": recovered,
            }
        )
        return 0 if equal and z_ok else 1
    print(f"triple {model.triple}  profile {args.profile}")
    print(f"character (closed form):    {structural.to_dict()}")
    print(f"character (section counts): {direct.to_dict()}")
    print(f"equal: {'true' if equal else 'false'}")
    print(f"z recovered from tail: {recovered} [{'ok' if z_ok else 'MISMATCH'}]")
    return 0 if equal and z_ok else 1


def cmd_liaison(args: argparse.Namespace) -> int:
    model = _model_for(Triple(args.z, args.y, args.p), args.profile)
    before = liaison_invariants(model)
    linked = link(model, args.q)
    after = liaison_invariants(linked)
    d_before = curve_class(model.triple).d
    d_after = curve_class(linked.triple).d
    preserved = before == after
    if args.json:
        _emit_json(
            {
                "input": _triple_payload(model.triple),
                "q": args.q,
                "result": _triple_payload(linked.triple),
                "d_before": d_before,
                "d_after": d_after,
                "invariants": {"z": after.z, "p_minus_y": after.p_minus_y},
                "preserved": preserved,
            }
        )
        return 0 if preserved else 1
    print(f"link {model.triple} by total degree q={args.q} -> {linked.triple}")
    print(f"degree: {d_before} -> {d_after} (2q - d)")
    print(
        f"invariants (z, p-y): ({before.z},{before.p_minus_y}) -> "
        f"({after.z},{after.p_minus_y}) "
        f"[{'preserved' if preserved else 'BROKEN'}]"
    )
    return 0 if preserved else 1


def cmd_bilink(args: argparse.Namespace) -> int:
    model = _model_for(Triple(args.z, args.y, args.p), args.profile)
    before = liaison_invariants(model)
    moved = bilink(model, args.y_new)
    after = liaison_invariants(moved)
    height = args.y_new - model.triple.y
    preserved = before == after
    if args.json:
        _emit_json(
            {
                "input": _triple_payload(model.triple),
                "y_new": args.y_new,
                "result": _triple_payload(moved.triple),
                "height": height,
                "invariants": {"z": after.z, "p_minus_y": after.p_minus_y},
                "preserved": preserved,
            }
        )
        return 0 if preserved else 1
    print(f"double link {model.triple} to residual degree {args.y_new} -> {moved.triple}")
    print(f"height: {height}")
    print(
        f"invariants (z, p-y): ({before.z},{before.p_minus_y}) -> "
        f"({after.z},{after.p_minus_y}) "
        f"[{'preserved' if preserved else 'BROKEN'}]"
    )
    return 0 if preserved else 1


_CATALOG_HELP = (
    ("extremal-like:R,P", "triple (R,2,P); needs P >= 2, R >= 0"),
    ("limit:R,P", "triple (R+P-2,1,P+1); the degeneration of extremal-like:R,P"),
    ("family:R,P,T", "fiber at T; T != 0 realizes (R,2,P), T = 0 the limit"),
    ("conic:T", "T != 0 realizes (0,1,1), T = 0 the plane conic (0,0,2)"),
)


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.name is None:
        if args.action == "show":
            raise DomainError("catalog show needs an entry name such as limit:1,2")
        if args.json:
            _emit_json(
                {
                    "families": [
                        {"form": form, "about": about}
                        for form, about in _CATALOG_HELP
                    ]
                }
            )
            return 0
        print("catalog families:")
        for form, about in _CATALOG_HELP:
            print(f"  {form:<20} {about}")
        return 0
    overrides = {}
    for key in ("form_s", "form_f", "form_g"):
        text = getattr(args, key)
        if text is not None:
            overrides[key[-1]] = parse_poly(text)
    if overrides:
        kind, _, rest = args.name.partition(":")
        if kind != "extremal-like":
            raise DomainError("form overrides apply only to extremal-like:R,P")
        r_text, _, p_text = rest.partition(",")
        r, p = int(r_text), int(p_text)
        ideal = extremal_like_ideal(
            r,
            p,
            s=overrides.get("s"),
            f=overrides.get("f"),
            g=overrides.get("g"),
        )
        predicted = predicted_source_triple(r, p)
        name = args.name
    else:
        entry = catalog_entry(args.name)
        ideal, predicted, name = entry.ideal, entry.predicted, entry.name
    if args.json:
        _emit_json(
            {
                "name": name,
                "predicted": _triple_payload(predicted),
                "generators": [format_poly(gen) for gen in ideal.generators],
            }
        )
        return 0
    print(f"# catalog {name}")
    print(f"# predicted triple {predicted}")
    sys.stdout.write(format_ideal(ideal))
    return 0


def _specialization_payload(report) -> dict:
    return {
        "r": report.r,
        "p": report.p,
        "source_expected": _triple_payload(report.source_expected),
        "source_extracted": _triple_payload(report.source_extracted),
        "limit_expected": _triple_payload(report.limit_expected),
        "limit_extracted": _triple_payload(report.limit_extracted),
        "class_preserved": report.class_preserved,
        "presentation_members": report.presentation_members,
        "saturation_matches": report.saturation_matches,
        "checked_through": report.checked_through,
        "ok": report.ok,
    }


def _print_specialization(report) -> None:
    print(f"specialization (r,p)=({report.r},{report.p}):")
    print(
        f"  general fiber: {report.source_extracted} "
        f"(expected {report.source_expected})"
    )
    print(
        f"  zero fiber:    {report.limit_extracted} "
        f"(expected {report.limit_expected})"
    )
    print(f"  curve class preserved: {'true' if report.class_preserved else 'false'}")
    print(
        "  presentation generators in limit saturation: "
        f"{'true' if report.presentation_members else 'false'}"
    )
    print(
        f"  saturation matches limit ideal through degree {report.checked_through}: "
        f"{'true' if report.saturation_matches else 'false'}"
    )
    print(f"  verdict: {'pass' if report.ok else 'FAIL'}")


def cmd_verify(args: argparse.Namespace) -> int:
    source = args.source
    family_params = None
    predicted = None
    if source.startswith("catalog:"):
        entry = catalog_entry(source[len("catalog:") :])
        ideal = entry.ideal
        predicted = entry.predicted
        family_params = entry.family_params
    else:
        path = source[len("file:") :] if source.startswith("file:") else source
        with open(path, "r", encoding="utf-8") as handle:
            ideal = parse_ideal(handle.read())
        if not ideal.generators:
            raise DomainError(f"{path} contains no generators")
    if args.max_degree is not None:
        max_degree = args.max_degree
    elif predicted is not None:
        max_degree = max(extraction_window(predicted), 8)
    else:
        max_degree = 10
    report = extract_report(ideal, max_degree)
    model = _model_for(report.triple, args.profile)
    rows = []
    for n in range(max_degree + 1):
        formula = cohomology.h0(model, n)
        oracle = report.saturated_dims[n]
        rows.append((n, oracle, formula, report.stabilized_at[n], oracle == formula))
    agree = all(match for *_, match in rows)
    predicted_ok = predicted is None or report.triple == predicted

    spec_report = None
    spec_error = None
    if family_params is not None:
        try:
            spec_report = verify_specialization(*family_params)
        except SpecializationError as exc:
            spec_report = exc.report
            spec_error = str(exc)
    spec_ok = spec_report.ok if spec_report is not None else True
    ok = agree and predicted_ok and spec_ok

    if args.json:
        payload = {
            "source": source,
            "generators": len(ideal.generators),
            "triple": _triple_payload(report.triple),
            "d": report.curve_class.d,
            "g": report.curve_class.g,
            "predicted": _triple_payload(predicted) if predicted else None,
            "predicted_ok": predicted_ok,
            "profile": args.profile,
            "max_degree": max_degree,
            "degrees": {
                str(n): {
                    "oracle": oracle,
                    "formula": formula,
                    "stabilized_at": stab,
                    "match": match,
                }
                for n, oracle, formula, stab, match in rows
            },
            "agree": agree,
            "specialization": (
                _specialization_payload(spec_report) if spec_report else None
            ),
            "ok": ok,
        }
        _emit_json(payload)
        return 0 if ok else 1

    print(f"source: {source} ({len(ideal.generators)} generators)")
    print(f"extracted triple: {report.triple}  class {report.curve_class}")
    if predicted is not None:
        print(f"predicted triple: {predicted} [{'ok' if predicted_ok else 'MISMATCH'}]")
    print(f"profile for the formula side: {args.profile}")
    print(f"{'n':>4} {'oracle':>7} {'formula':>8} {'stab_k':>7}  match")
    for n, oracle, formula, stab, match in rows:
        print(f"{n:>4} {oracle:>7} {formula:>8} {stab:>7}  {'yes' if match else 'NO'}")
    print(f"all degrees agree: {'true' if agree else 'false'}")
    if spec_report is not None:
        _print_specialization(spec_report)
        if spec_error:
            print(f"specialization failures: {spec_error}")
    return 0 if ok else 1


def cmd_selftest(args: argparse.Namespace) -> int:
    only = None
    if args.only:
        only = sorted({int(piece) for piece in args.only.split(",") if piece.strip()})
        bad = [n for n in only if not 1 <= n <= acceptance.criterion_count()]
        if bad:
            raise DomainError(f"unknown criterion number(s): {bad}")
    numbers = only or list(range(1, acceptance.criterion_count() + 1))
    results = []
    for number in numbers:
        result = acceptance.run_criterion(number, deep=args.deep)
        results.append(result)
        if not args.json:
            status = "PASS" if result.passed else "FAIL"
            print(
                f"criterion {result.number:02d} {result.name}: {status} "
                f"({result.detail})",
                flush=True,
            )
    ok = all(r.passed for r in results)
    if args.json:
        _emit_json(
            {
                "deep": bool(args.deep),
                "results": [
                    {
                        "number": r.number,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    }
                    for r in results
                ],
                "ok": ok,
            }
        )
    else:
        passed = sum(1 for r in results if r.passed)
        print(f"passed {passed}/{len(results)}")
    return 0 if ok else 1


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleplane",
        description=(
            "Classify, enumerate and verify locally Cohen-Macaulay curves "
            "on the double plane in projective 3-space."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_profile(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--profile",
            choices=("collinear", "generic"),
            default="collinear",
            help="position of the embedded points (default: collinear)",
        )

    p = sub.add_parser("components", help="list the components of one (d, g) class")
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("connect", help="specialization graph and connectedness")
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("rao", help="cohomology table, bounds and classification")
    p.add_argument("z", type=int)
    p.add_argument("y", type=int)
    p.add_argument("p", type=int)
    add_profile(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rao)

    p = sub.add_parser("character", help="postulation character, two ways")
    p.add_argument("z", type=int)
    p.add_argument("y", type=int)
    p.add_argument("p", type=int)
    add_profile(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("liaison", help="link a model inside a surface pair")
    p.add_argument("z", type=int)
    p.add_argument("y", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int, help="total degree of the linking pair")
    add_profile(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_liaison)

    p = sub.add_parser("bilink", help="elementary double link to a new residual degree")
    p.add_argument("z", type=int)
    p.add_argument("y", type=int)
    p.add_argument("p", type=int)
    p.add_argument("y_new", type=int, help="residual degree after the move")
    add_profile(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bilink)

    p = sub.add_parser("catalog", help="list catalog families or print one ideal")
    p.add_argument(
        "action", nargs="?", default="list", choices=("list", "show"),
    )
    p.add_argument("name", nargs="?", help="entry such as limit:1,2")
    p.add_argument("--form-s", help="override s (extremal-like only)")
    p.add_argument("--form-f", help="override f (extremal-like only)")
    p.add_argument("--form-g", help="override g (extremal-like only)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser(
        "verify",
        help="extract a triple from an ideal and compare oracle vs formulas",
    )
    p.add_argument("source", help="catalog:NAME or file:PATH (or a bare path)")
    p.add_argument("--max-degree", type=int, default=None)
    add_profile(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--deep", action="store_true", help="raise the scan bounds")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError, ArithmeticError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
