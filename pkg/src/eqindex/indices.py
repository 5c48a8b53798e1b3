"""Equivariant radial and GSV index assembly.

Index data enters as integers attached to strata, quotient strata, fixed
sets, or singular orbits; the operations here are the Burnside-ring
bookkeeping that turns such data into an equivariant index and back.  Both
Moebius inversions (over all subgroups and over conjugacy classes of
subgroups) are computed and must agree; any non-integral coefficient is a
hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .burnside import BurnsideElement, induce, r_k
from .errors import InconsistentDataError, IntegralityError, NotASubgroupError
from .groups import FiniteGroup, Subgroup


class StratumIndexData:
    """Per-stratum index totals: (class_index of the isotropy, total index)."""

    def __init__(self, group: FiniteGroup, entries):
        self.group = group
        nc = group.lattice().num_classes
        checked = []
        for c, ind in entries:
            if not 0 <= c < nc:
                raise InconsistentDataError(f"unknown class index {c}")
            checked.append((int(c), int(ind)))
        self.entries = tuple(checked)


class FixedSetIndexData:
    """Radial indices on the fixed sets of subgroups.

    `per_subgroup[i]` is ind(X; V^H, 0) for the i-th subgroup in canonical
    order (must be constant on conjugacy classes); `per_class[c]`, when
    given, is ind(X; V^{[H]}, 0) for the c-th conjugacy class.
    """

    def __init__(self, group: FiniteGroup, per_subgroup: dict,
                 per_class: Optional[dict] = None):
        self.group = group
        lat = group.lattice()
        ns = len(lat.subgroups)
        if set(per_subgroup.keys()) != set(range(ns)):
            raise InconsistentDataError(
                "per_subgroup must cover every subgroup exactly once")
        self.per_subgroup = {i: int(v) for i, v in per_subgroup.items()}
        for cls in lat.classes:
            vals = {self.per_subgroup[i] for i in cls}
            if len(vals) > 1:
                raise InconsistentDataError(
                    "fixed-set indices are not constant on conjugacy classes")
        if per_class is not None:
            if set(per_class.keys()) != set(range(lat.num_classes)):
                raise InconsistentDataError(
                    "per_class must cover every conjugacy class exactly once")
            self.per_class = {c: int(v) for c, v in per_class.items()}
        else:
            self.per_class = None


@dataclass
class SingularOrbitDatum:
    """A singular orbit: its isotropy subgroup and the local index there."""
    isotropy: Subgroup
    local_index: BurnsideElement  # over isotropy.as_group()


@dataclass
class PoincareHopfReport:
    passed: bool
    discrepancy: BurnsideElement


def index_from_strata(data: StratumIndexData) -> BurnsideElement:
    """ind^G = sum over strata of (|G_i|/|G|) ind(X; V_i, 0) [G/G_i].

    Each stratum's singular points split into orbits isomorphic to [G/G_i],
    so each product must be an integer.
    """
    group = data.group
    lat = group.lattice()
    n = group.order
    coeffs = [0] * lat.num_classes
    for c, ind in data.entries:
        h = lat.class_order(c)
        num = h * ind
        if num % n:
            raise IntegralityError(
                f"stratum index {ind} is not a multiple of the orbit size {n // h}")
        coeffs[c] += num // n
    return BurnsideElement(group, coeffs)


def index_from_quotient(group: FiniteGroup, per_class_quotient_index) -> BurnsideElement:
    """ind^G = sum of ind(X-bar; V^{([H])}/G, 0) [G/H] from quotient data."""
    lat = group.lattice()
    coeffs = [0] * lat.num_classes
    for c, ind in per_class_quotient_index:
        if not 0 <= c < lat.num_classes:
            raise InconsistentDataError(f"unknown class index {c}")
        coeffs[c] += int(ind)
    return BurnsideElement(group, coeffs)


def fixed_indices_from_index(b: BurnsideElement) -> FixedSetIndexData:
    """Forward evaluation: indices on V^H (per subgroup) and V^{[H]} (per class).

    per_subgroup[H] = sum over subgroups K >= H of a_[K] |N_G(K)|/|K|;
    per_class[[H]]  = sum over classes [K] >= [H] of a_[K] |G|/|K|.
    """
    group = b.group
    lat = group.lattice()
    ns = len(lat.subgroups)
    norm_ratio = [lat.normalizer_order(i) // lat.subgroups[i].order
                  for i in range(ns)]
    per_subgroup = {}
    for h in range(ns):
        leq_h = lat.leq[h]
        per_subgroup[h] = sum(
            b.coeffs[lat.class_of[kk]] * norm_ratio[kk]
            for kk in range(ns) if leq_h[kk])
    per_class = {}
    n = group.order
    for c in range(lat.num_classes):
        zeta_c = lat.zeta_conj[c]
        per_class[c] = sum(
            b.coeffs[k] * (n // lat.class_order(k))
            for k in range(lat.num_classes) if zeta_c[k])
    return FixedSetIndexData(group, per_subgroup, per_class)


def index_from_fixed_indices(data: FixedSetIndexData) -> BurnsideElement:
    """Moebius inversion of fixed-set index data, in both poset flavors.

    a_[H] = (|H|/|N_G(H)|) sum_K mu'(H, K) ind(V^K)        over Sub(G)
    a_[H] = (|H|/|G|) sum_[K] mu([H], [K]) ind(V^{[K]})    over ConjSub(G)

    Both must be integral; when per-class data is present the two results
    must coincide.
    """
    group = data.group
    lat = group.lattice()
    ns = len(lat.subgroups)
    coeffs_sub = []
    for c in range(lat.num_classes):
        h = lat.representatives[c]
        total = sum(lat.mu_sub[h][kk] * data.per_subgroup[kk]
                    for kk in range(ns) if lat.leq[h][kk])
        a = Fraction(lat.subgroups[h].order * total, lat.normalizer_order(h))
        if a.denominator != 1:
            raise IntegralityError(
                "subgroup-poset inversion produced a non-integer coefficient")
        coeffs_sub.append(int(a))
    result = BurnsideElement(group, coeffs_sub)
    if data.per_class is not None:
        n = group.order
        coeffs_conj = []
        for c in range(lat.num_classes):
            total = sum(lat.mu_conj[c][k] * data.per_class[k]
                        for k in range(lat.num_classes) if lat.zeta_conj[c][k])
            a = Fraction(lat.class_order(c) * total, n)
            if a.denominator != 1:
                raise IntegralityError(
                    "class-poset inversion produced a non-integer coefficient")
            coeffs_conj.append(int(a))
        if tuple(coeffs_conj) != result.coeffs:
            raise InconsistentDataError(
                "the two Moebius inversions disagree; input data is inconsistent")
    return result


def induce_orbit_index(datum: SingularOrbitDatum, group: FiniteGroup) -> BurnsideElement:
    """The index contributed by one singular orbit: I^G_{G_p}(local index)."""
    sub = datum.isotropy
    if sub.parent is not group and not sub.parent.same_group(group):
        raise NotASubgroupError("orbit isotropy is not a subgroup of the group")
    local = datum.local_index
    if not local.group.same_group(sub.as_group()):
        raise InconsistentDataError("local index is not over the isotropy subgroup")
    return induce(local, group)


def poincare_hopf_check(chi_g: BurnsideElement, orbits) -> PoincareHopfReport:
    """Compare the sum of induced orbit indices against chi^G(V)."""
    total = BurnsideElement(chi_g.group, [0] * len(chi_g.coeffs))
    for datum in orbits:
        total = total + induce_orbit_index(datum, chi_g.group)
    disc = total - chi_g
    return PoincareHopfReport(passed=disc.is_zero(), discrepancy=disc)


def gsv_from_radial(ind_rad: BurnsideElement,
                    chibar_milnor: BurnsideElement) -> BurnsideElement:
    """ind_GSV^G = ind_rad^G + reduced chi^G of the Milnor fibre."""
    return ind_rad + chibar_milnor


def gsv_assemble_from_dims(group: FiniteGroup, dims: dict, fixed_dims: dict,
                           k: int) -> BurnsideElement:
    """Assemble an equivariant GSV index from module dimensions.

    `fixed_dims[i]` is the dimension n_K of the fixed subspace of the i-th
    subgroup; `dims[i]` is dim Omega_{V^K, omega}, required whenever
    n_K > k.  The coefficient of [G/H] is

        (|H|/|N_G(H)|) * sum over K with n_K > k of
            mu'(H, K) (-1)^(n_K - k) dims[K].
    """
    lat = group.lattice()
    ns = len(lat.subgroups)
    if set(fixed_dims.keys()) != set(range(ns)):
        raise InconsistentDataError("fixed-space dimension missing for some subgroup")
    for i in range(ns):
        if fixed_dims[i] > k and i not in dims:
            raise InconsistentDataError(
                f"missing dimension entry for subgroup {lat.labels[i]}")
    coeffs = []
    for c in range(lat.num_classes):
        h = lat.representatives[c]
        total = 0
        for kk in range(ns):
            if not lat.leq[h][kk] or fixed_dims[kk] <= k:
                continue
            sign = -1 if (fixed_dims[kk] - k) % 2 else 1
            total += lat.mu_sub[h][kk] * sign * int(dims[kk])
        a = Fraction(lat.subgroups[h].order * total, lat.normalizer_order(h))
        if a.denominator != 1:
            raise IntegralityError("GSV assembly produced a non-integer coefficient")
        coeffs.append(int(a))
    return BurnsideElement(group, coeffs)


def equivariant_milnor(chibar: BurnsideElement, n: int) -> BurnsideElement:
    """mu^G_f = (-1)^(n-1) * reduced chi^G(M_f) for an n-variable germ."""
    if (n - 1) % 2:
        return -chibar
    return chibar


def higher_order_index(b: BurnsideElement, k: int) -> int:
    """ind^{G,(k)} = r_G^(k)(ind^G); k = 1 is the orbifold index."""
    return r_k(b, k)
