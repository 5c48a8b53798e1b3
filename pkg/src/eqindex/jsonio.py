"""JSON schemas for the external interfaces.

Rationals cross the wire as {"num": int, "den": int} with den > 0 and the
fraction reduced.  Subgroups and conjugacy classes are referenced by their
canonical labels "H<order>_<index-in-canonical-list>".  Serialization is
canonical: fixed key order, zero coefficients omitted.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .burnside import BurnsideElement, ClassFunction
from .errors import InputError
from .groups import FiniteGroup, Subgroup, build_group
from .gspace import GSimplicialComplex, StratifiedGData, build_complex
from .indices import FixedSetIndexData, SingularOrbitDatum, StratumIndexData
from .invertible import DualityReport, InvertiblePolynomial, validate


def rational_to_json(q) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj) -> Fraction:
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return Fraction(int(obj[0]), int(obj[1]))
    if isinstance(obj, dict) and "num" in obj and "den" in obj:
        return Fraction(int(obj["num"]), int(obj["den"]))
    raise InputError(f"not a rational: {obj!r}")


def group_from_json(obj) -> FiniteGroup:
    if not isinstance(obj, dict):
        raise InputError("group presentation must be an object")
    kind = obj.get("kind")
    if kind == "diagonal":
        phases = [[rational_from_json(p) for p in vec]
                  for vec in obj.get("phases", [])]
        return build_group({"kind": "diagonal", "phases": phases})
    if kind in ("perm", "table"):
        return build_group(obj)
    raise InputError(f"unknown group presentation kind: {kind!r}")


def group_to_json(group: FiniteGroup) -> dict:
    return dict(group.presentation)


def element_to_json(b: BurnsideElement) -> dict:
    lat = b.group.lattice()
    coeffs = [{"class": lat.class_labels[c], "a": a}
              for c, a in enumerate(b.coeffs) if a != 0]
    return {"group": b.group.fingerprint, "coeffs": coeffs}


def element_from_json(group: FiniteGroup, obj) -> BurnsideElement:
    lat = group.lattice()
    out = [0] * lat.num_classes
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise InputError("Burnside element must be {'coeffs': [...]}")
    for item in obj["coeffs"]:
        try:
            c = lat.class_index_by_label(item["class"])
        except Exception as exc:
            raise InputError(f"bad coefficient entry {item!r}: {exc}") from None
        out[c] += int(item["a"])
    return BurnsideElement(group, out)


def subgroup_from_json(group: FiniteGroup, label) -> Subgroup:
    if not isinstance(label, str):
        raise InputError("subgroup must be referenced by its canonical label")
    try:
        return group.lattice().subgroup_by_label(label)
    except Exception:
        raise InputError(f"unknown subgroup label {label!r}") from None


def lattice_to_json(group: FiniteGroup) -> dict:
    lat = group.lattice()
    subgroups = []
    for i, s in enumerate(lat.subgroups):
        subgroups.append({
            "label": lat.labels[i],
            "order": s.order,
            "members": [group.element_repr(m) for m in sorted(s.members)],
            "normalizer": lat.labels[lat.normalizers[i]],
            "class": lat.class_labels[lat.class_of[i]],
        })
    classes = [{"label": lat.class_labels[c],
                "size": len(lat.classes[c]),
                "order": lat.class_order(c)}
               for c in range(lat.num_classes)]
    return {
        "group": group.fingerprint,
        "subgroups": subgroups,
        "classes": classes,
        "mu_sub": [list(row) for row in lat.mu_sub],
        "mu_conj": [list(row) for row in lat.mu_conj],
        "zeta_conj": [list(row) for row in lat.zeta_conj],
    }


def class_function_to_json(cf: ClassFunction) -> dict:
    group = cf.group
    classes = group.element_conjugacy_classes()
    return {"group": group.fingerprint,
            "values": [{"rep": group.element_repr(cls[0]),
                        "size": len(cls),
                        "value": v}
                       for cls, v in zip(classes, cf.values)]}


def strata_from_json(group: FiniteGroup, obj) -> StratifiedGData:
    lat = group.lattice()
    entries = []
    for item in obj:
        try:
            entries.append((lat.class_index_by_label(item["class"]),
                            int(item["chi"])))
        except Exception as exc:
            raise InputError(f"bad stratum entry {item!r}: {exc}") from None
    return StratifiedGData(group, entries)


def stratum_index_from_json(group: FiniteGroup, obj) -> StratumIndexData:
    lat = group.lattice()
    entries = []
    for item in obj:
        try:
            entries.append((lat.class_index_by_label(item["class"]),
                            int(item["ind"])))
        except Exception as exc:
            raise InputError(f"bad stratum entry {item!r}: {exc}") from None
    return StratumIndexData(group, entries)


def complex_from_json(group: FiniteGroup, obj) -> GSimplicialComplex:
    try:
        vertices = list(obj["vertices"])
        simplices = [frozenset(s) for s in obj["simplices"]]
    except Exception as exc:
        raise InputError(f"bad complex payload: {exc}") from None
    images = {}
    for label, imgs in (obj.get("action") or {}).items():
        if not (label.startswith("g") and label[1:].isdigit()):
            raise InputError(f"unknown generator label {label!r}")
        pos = int(label[1:])
        if pos >= len(group.generators):
            raise InputError(f"generator label {label!r} out of range")
        if len(imgs) != len(vertices):
            raise InputError(f"action for {label!r} has wrong length")
        images[pos] = dict(zip(vertices, imgs))
    return build_complex(group, vertices, simplices, images)


def fixed_indices_from_json(group: FiniteGroup, obj) -> FixedSetIndexData:
    lat = group.lattice()
    if not isinstance(obj, dict) or "per_subgroup" not in obj:
        raise InputError("fixed-set index data must contain 'per_subgroup'")
    per_subgroup = {}
    for label, v in obj["per_subgroup"].items():
        sub = subgroup_from_json(group, label)
        per_subgroup[lat.subgroup_index(sub.members)] = int(v)
    per_class = None
    if obj.get("per_class") is not None:
        per_class = {}
        for label, v in obj["per_class"].items():
            try:
                per_class[lat.class_index_by_label(label)] = int(v)
            except Exception:
                raise InputError(f"unknown class label {label!r}") from None
    return FixedSetIndexData(group, per_subgroup, per_class)


def orbit_data_from_json(group: FiniteGroup, obj) -> list:
    out = []
    for item in obj:
        sub = subgroup_from_json(group, item.get("isotropy"))
        local = element_from_json(sub.as_group(), item.get("local"))
        out.append(SingularOrbitDatum(isotropy=sub, local_index=local))
    return out


def polynomial_from_json(obj) -> InvertiblePolynomial:
    if not isinstance(obj, dict) or "E" not in obj:
        raise InputError("polynomial input must be {'E': [[...]]}")
    return validate(obj["E"])


def polynomial_to_json(f: InvertiblePolynomial) -> dict:
    return {
        "E": [list(row) for row in f.E],
        "det": f.det,
        "blocks": [{"kind": a.kind,
                    "variables": list(a.variables),
                    "exponents": list(a.exponents)} for a in f.atoms],
        "weights": [rational_to_json(q) for q in f.weights],
    }


def duality_report_to_json(report: DualityReport) -> dict:
    return {
        "E": [list(r) for r in report.E],
        "dual_E": [list(r) for r in report.dual_E],
        "orbit_index": {"f": report.orbit_index,
                        "dual": report.dual_orbit_index,
                        "equal": report.orbit_match},
        "pairs": [{"subgroup": p.subgroup_label,
                   "subgroup_order": p.subgroup_order,
                   "dual_subgroup": p.dual_label,
                   "dual_order": p.dual_order,
                   "orbifold_index": p.orbifold_index,
                   "dual_orbifold_index": p.dual_orbifold_index,
                   "equal": p.matches,
                   "equal_up_to_dimension_sign": p.sign_matches}
                  for p in report.pairs],
        "all_match": report.all_match,
        "all_match_up_to_dimension_sign": report.all_sign_match,
    }


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, stable formatting."""
    return json.dumps(obj, sort_keys=True, indent=2)
