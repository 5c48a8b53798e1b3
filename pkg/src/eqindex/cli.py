"""Batch command-line front end.

Reads one JSON payload (stdin, --in FILE, or an inline JSON argument),
dispatches to the library, and writes canonical JSON or TSV.  Exit codes:
0 success, 1 domain error (with a machine-readable {"error": ...} object),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import burnside, gspace, indices, invertible, jsonio
from .burnside import cardinality, r_k
from .errors import EqIndexError, InputError


def _read_payload(args):
    if getattr(args, "inline", None):
        text = args.inline
        source = "<inline>"
    elif args.infile:
        try:
            with open(args.infile, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.infile}: {exc}") from None
        source = args.infile
    else:
        text = sys.stdin.read()
        source = "<stdin>"
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {source}: {exc}") from None


def _flatten(obj, path, lines):
    if isinstance(obj, dict):
        for key in sorted(obj):
            _flatten(obj[key], f"{path}.{key}" if path else str(key), lines)
    elif isinstance(obj, list):
        for i, item in enumerate(obj):
            _flatten(item, f"{path}[{i}]", lines)
    else:
        lines.append(f"{path}\t{json.dumps(obj)}")


def _emit(args, obj) -> int:
    if args.format == "tsv":
        lines = []
        _flatten(obj, "", lines)
        text = "\n".join(lines) + "\n"
    else:
        text = jsonio.dumps(obj) + "\n"
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _group(payload):
    if "group" not in payload:
        raise InputError("payload must contain a 'group' presentation")
    return jsonio.group_from_json(payload["group"])


# -- handlers -----------------------------------------------------------------

def cmd_group_info(args):
    payload = _read_payload(args)
    group = jsonio.group_from_json(payload)
    return _emit(args, {
        "id": group.fingerprint,
        "order": group.order,
        "abelian": group.is_abelian,
        "elements": [group.element_repr(i) for i in group.elements()],
    })


def cmd_group_lattice(args):
    payload = _read_payload(args)
    group = jsonio.group_from_json(payload)
    return _emit(args, jsonio.lattice_to_json(group))


def cmd_burnside_marks(args):
    payload = _read_payload(args)
    group = _group(payload)
    lat = group.lattice()
    return _emit(args, {
        "group": group.fingerprint,
        "classes": list(lat.class_labels),
        "marks": [list(r) for r in burnside.table_of_marks(group).matrix],
    })


def cmd_burnside_mul(args):
    payload = _read_payload(args)
    group = _group(payload)
    a = jsonio.element_from_json(group, payload.get("a"))
    b = jsonio.element_from_json(group, payload.get("b"))
    return _emit(args, jsonio.element_to_json(burnside.multiply(a, b)))


def cmd_burnside_restrict(args):
    payload = _read_payload(args)
    group = _group(payload)
    b = jsonio.element_from_json(group, payload.get("element"))
    sub = jsonio.subgroup_from_json(group, payload.get("subgroup"))
    res = burnside.restrict(b, sub)
    out = jsonio.element_to_json(res)
    out["subgroup"] = payload.get("subgroup")
    return _emit(args, out)


def cmd_burnside_induce(args):
    payload = _read_payload(args)
    group = _group(payload)
    sub = jsonio.subgroup_from_json(group, payload.get("subgroup"))
    b = jsonio.element_from_json(sub.as_group(), payload.get("element"))
    return _emit(args, jsonio.element_to_json(burnside.induce(b, group)))


def cmd_burnside_rk(args):
    payload = _read_payload(args)
    group = _group(payload)
    b = jsonio.element_from_json(group, payload.get("element"))
    return _emit(args, {"k": args.k, "value": r_k(b, args.k)})


def cmd_burnside_char(args):
    payload = _read_payload(args)
    group = _group(payload)
    b = jsonio.element_from_json(group, payload.get("element"))
    return _emit(args, jsonio.class_function_to_json(
        burnside.permutation_character(b)))


def cmd_euler_strat(args):
    payload = _read_payload(args)
    group = _group(payload)
    data = jsonio.strata_from_json(group, payload.get("strata", []))
    chi = gspace.chi_G_stratified(data, reduced=args.reduced)
    return _emit(args, jsonio.element_to_json(chi))


def cmd_euler_simplicial(args):
    payload = _read_payload(args)
    group = _group(payload)
    x = jsonio.complex_from_json(group, payload.get("complex", {}))
    chi = gspace.chi_G_simplicial(x)
    out = jsonio.element_to_json(chi)
    out["cardinality"] = cardinality(chi)
    return _emit(args, out)


def cmd_euler_orbifold(args):
    payload = _read_payload(args)
    group = _group(payload)
    x = jsonio.complex_from_json(group, payload.get("complex", {}))
    return _emit(args, {"k": args.k, "value": gspace.chi_k_direct(x, args.k)})


def cmd_index_from_strata(args):
    payload = _read_payload(args)
    group = _group(payload)
    data = jsonio.stratum_index_from_json(group, payload.get("entries", []))
    return _emit(args, jsonio.element_to_json(indices.index_from_strata(data)))


def cmd_index_invert(args):
    payload = _read_payload(args)
    group = _group(payload)
    data = jsonio.fixed_indices_from_json(group, payload)
    return _emit(args, jsonio.element_to_json(
        indices.index_from_fixed_indices(data)))


def cmd_index_induce(args):
    payload = _read_payload(args)
    group = _group(payload)
    sub = jsonio.subgroup_from_json(group, payload.get("isotropy"))
    local = jsonio.element_from_json(sub.as_group(), payload.get("local"))
    datum = indices.SingularOrbitDatum(isotropy=sub, local_index=local)
    return _emit(args, jsonio.element_to_json(
        indices.induce_orbit_index(datum, group)))


def cmd_index_ph_check(args):
    payload = _read_payload(args)
    group = _group(payload)
    chi = jsonio.element_from_json(group, payload.get("chi"))
    orbits = jsonio.orbit_data_from_json(group, payload.get("orbits", []))
    report = indices.poincare_hopf_check(chi, orbits)
    return _emit(args, {
        "pass": report.passed,
        "discrepancy": jsonio.element_to_json(report.discrepancy),
    })


def cmd_index_gsv(args):
    payload = _read_payload(args)
    group = _group(payload)
    rad = jsonio.element_from_json(group, payload.get("radial"))
    chibar = jsonio.element_from_json(group, payload.get("chibar"))
    return _emit(args, jsonio.element_to_json(
        indices.gsv_from_radial(rad, chibar)))


def cmd_poly_analyze(args):
    payload = _read_payload(args)
    f = jsonio.polynomial_from_json(payload)
    out = jsonio.polynomial_to_json(f)
    out["mu"] = invertible.milnor_number(f)
    diag = invertible.symmetry_group(f)
    out["group"] = {
        "id": diag.group.fingerprint,
        "order": diag.order,
        "generators": [[jsonio.rational_to_json(q) for q in g]
                       for g in diag.group.generator_keys],
    }
    return _emit(args, out)


def cmd_poly_index(args):
    payload = _read_payload(args)
    f = jsonio.polynomial_from_json(payload)
    diag = invertible.symmetry_group(f)
    chi = invertible.chi_G_milnor(f, diag)
    ind = invertible.index_df(f, diag)
    return _emit(args, {
        "group": diag.group.fingerprint,
        "order": diag.order,
        "chi_milnor": jsonio.element_to_json(chi),
        "index": jsonio.element_to_json(ind),
        "cardinality": cardinality(ind),
        "mu": invertible.milnor_number(f),
    })


def cmd_poly_dual_check(args):
    payload = _read_payload(args)
    f = jsonio.polynomial_from_json(payload)
    report = invertible.duality_check(f)
    return _emit(args, jsonio.duality_report_to_json(report))


# -- parser ---------------------------------------------------------------------

def _add_common(p):
    p.add_argument("inline", nargs="?", default=None,
                   help="inline JSON payload (otherwise stdin or --in)")
    p.add_argument("--in", dest="infile", default=None, metavar="FILE")
    p.add_argument("--out", dest="outfile", default=None, metavar="FILE")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--jobs", type=int, default=1,
                   help="accepted for interface compatibility; batches run "
                        "sequentially with deterministic output")
    p.add_argument("-v", "--verbose", action="count", default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqindex",
        description="Exact Burnside-ring invariants and equivariant indices")
    top = parser.add_subparsers(dest="command", required=True)

    group = top.add_parser("group", help="group construction and lattices")
    gsub = group.add_subparsers(dest="subcommand", required=True)
    p = gsub.add_parser("info"); _add_common(p); p.set_defaults(func=cmd_group_info)
    p = gsub.add_parser("lattice"); _add_common(p); p.set_defaults(func=cmd_group_lattice)

    burn = top.add_parser("burnside", help="Burnside ring operations")
    bsub = burn.add_subparsers(dest="subcommand", required=True)
    p = bsub.add_parser("marks"); _add_common(p); p.set_defaults(func=cmd_burnside_marks)
    p = bsub.add_parser("mul"); _add_common(p); p.set_defaults(func=cmd_burnside_mul)
    p = bsub.add_parser("restrict"); _add_common(p); p.set_defaults(func=cmd_burnside_restrict)
    p = bsub.add_parser("induce"); _add_common(p); p.set_defaults(func=cmd_burnside_induce)
    p = bsub.add_parser("rk"); _add_common(p)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_burnside_rk)
    p = bsub.add_parser("char"); _add_common(p); p.set_defaults(func=cmd_burnside_char)

    euler = top.add_parser("euler", help="equivariant Euler characteristics")
    esub = euler.add_subparsers(dest="subcommand", required=True)
    p = esub.add_parser("strat"); _add_common(p)
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_euler_strat)
    p = esub.add_parser("simplicial"); _add_common(p); p.set_defaults(func=cmd_euler_simplicial)
    p = esub.add_parser("orbifold"); _add_common(p)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_euler_orbifold)

    index = top.add_parser("index", help="radial/GSV index assembly")
    isub = index.add_subparsers(dest="subcommand", required=True)
    p = isub.add_parser("from-strata"); _add_common(p); p.set_defaults(func=cmd_index_from_strata)
    p = isub.add_parser("invert"); _add_common(p); p.set_defaults(func=cmd_index_invert)
    p = isub.add_parser("induce"); _add_common(p); p.set_defaults(func=cmd_index_induce)
    p = isub.add_parser("ph-check"); _add_common(p); p.set_defaults(func=cmd_index_ph_check)
    p = isub.add_parser("gsv"); _add_common(p); p.set_defaults(func=cmd_index_gsv)

    poly = top.add_parser("poly", help="invertible polynomial pipelines")
    psub = poly.add_subparsers(dest="subcommand", required=True)
    p = psub.add_parser("analyze"); _add_common(p); p.set_defaults(func=cmd_poly_analyze)
    p = psub.add_parser("index"); _add_common(p); p.set_defaults(func=cmd_poly_index)
    p = psub.add_parser("dual-check"); _add_common(p); p.set_defaults(func=cmd_poly_dual_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EqIndexError as exc:
        error = {"error": {"kind": type(exc).__name__, "message": str(exc)}}
        sys.stdout.write(jsonio.dumps(error) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
