"""Finite models of G-spaces and their equivariant Euler characteristics.

Two models: `StratifiedGData` records the Euler characteristic of each
orbit-type quotient stratum directly; `GSimplicialComplex` is a finite
simplicial complex with a simplicial group action, from which everything is
computed combinatorially.

Fixed-point computations need the action to be *regular* (a simplex fixed
setwise is fixed vertexwise); one barycentric subdivision always repairs an
irregular action.
"""

from __future__ import annotations

from typing import Optional

from .burnside import (BurnsideElement, commuting_class_counts, one,
                       TUPLE_ENUM_BOUND)
from .errors import (InconsistentDataError, IntegralityError, OrderBoundError,
                     RegularityError)
from .groups import FiniteGroup, Subgroup, trivial_group


class StratifiedGData:
    """Orbit-type strata with the Euler characteristic of each quotient.

    `strata` is a sequence of (class_index, chi(V_i/G)) pairs; class indices
    refer to ConjSub(G) in the canonical lattice order.
    """

    def __init__(self, group: FiniteGroup, strata):
        self.group = group
        nc = group.lattice().num_classes
        entries = []
        for c, chi in strata:
            if not 0 <= c < nc:
                raise InconsistentDataError(f"unknown class index {c}")
            entries.append((int(c), int(chi)))
        self.strata = tuple(entries)


def chi_G_stratified(data: StratifiedGData, reduced: bool = False) -> BurnsideElement:
    """chi^G = sum over strata of chi(V_i/G) [G/H_i]; reduced subtracts [G/G]."""
    lat = data.group.lattice()
    coeffs = [0] * lat.num_classes
    for c, chi in data.strata:
        coeffs[c] += chi
    out = BurnsideElement(data.group, coeffs)
    if reduced:
        out = out - one(data.group)
    return out


class GSimplicialComplex:
    """A finite simplicial complex with a simplicial action of a finite group.

    `action[g]` maps each vertex to its image under the group element with
    index g; the assignment is a homomorphism by construction.
    """

    def __init__(self, group: FiniteGroup, vertices, simplices, action):
        self.group = group
        self.vertices = tuple(sorted(set(vertices)))
        closed = set()
        for s in simplices:
            fs = frozenset(s)
            if not fs:
                continue
            if not fs <= set(self.vertices):
                raise InconsistentDataError(f"simplex {sorted(s)} uses unknown vertices")
            closed.add(fs)
        # downward closure
        work = list(closed)
        while work:
            s = work.pop()
            for v in s:
                face = s - {v}
                if face and face not in closed:
                    closed.add(face)
                    work.append(face)
        for v in self.vertices:
            closed.add(frozenset([v]))
        self.simplices = frozenset(closed)
        self.action = action
        for g in group.elements():
            m = action[g]
            if sorted(m.values()) != list(self.vertices) or \
               set(m.keys()) != set(self.vertices):
                raise InconsistentDataError("action maps are not vertex permutations")
        for g in group.generators:
            m = action[g]
            for s in self.simplices:
                if frozenset(m[v] for v in s) not in self.simplices:
                    raise InconsistentDataError("action does not preserve simplices")

    # -- basic operations ---------------------------------------------------

    def image(self, g: int, simplex: frozenset) -> frozenset:
        m = self.action[g]
        return frozenset(m[v] for v in simplex)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def is_regular(self) -> bool:
        for g in self.group.elements():
            m = self.action[g]
            for s in self.simplices:
                if frozenset(m[v] for v in s) == s and any(m[v] != v for v in s):
                    return False
        return True

    def check_regular(self):
        if not self.is_regular():
            raise RegularityError(
                "a simplex is fixed setwise but not vertexwise; "
                "barycentrically subdivide first")

    def sorted_simplices(self):
        return sorted(self.simplices, key=lambda s: (len(s), tuple(sorted(s))))


def build_complex(group: FiniteGroup, vertices, simplices,
                  generator_images: Optional[dict] = None) -> GSimplicialComplex:
    """Assemble a G-complex from images of the group generators.

    `generator_images` maps a generator position (int) to a vertex->vertex
    dict; omitted generators and the trivial group act identically.
    """
    vertices = tuple(sorted(set(vertices)))
    gen_maps = {}
    identity_map = {v: v for v in vertices}
    gens = group.generators
    for pos, g in enumerate(gens):
        img = (generator_images or {}).get(pos)
        if img is None:
            gen_maps[g] = dict(identity_map)
        else:
            gen_maps[g] = {v: img[v] for v in vertices}
    # extend along the Cayley graph: rho(g*e) = rho(g) o rho(e)
    action = {group.identity: identity_map}
    frontier = [group.identity]
    while frontier:
        new = []
        for e in frontier:
            pe = action[e]
            for g in gens:
                f = group.mul(g, e)
                if f not in action:
                    pg = gen_maps[g]
                    action[f] = {v: pg[pe[v]] for v in vertices}
                    new.append(f)
        frontier = new
    if len(action) != group.order:
        raise InconsistentDataError("generators do not generate the group")
    # the extension is well-defined only if the images respect all relations
    for e in group.elements():
        pe = action[e]
        for g in gens:
            pg = gen_maps[g]
            pf = action[group.mul(g, e)]
            if any(pf[v] != pg[pe[v]] for v in vertices):
                raise InconsistentDataError(
                    "generator images do not define a group action")
    return GSimplicialComplex(group, vertices, simplices, action)


def chi_G_simplicial(x: GSimplicialComplex) -> BurnsideElement:
    """chi^G(X) = sum over simplex orbits of (-1)^dim [G/Stab]."""
    x.check_regular()
    group = x.group
    lat = group.lattice()
    coeffs = [0] * lat.num_classes
    done = set()
    for s in x.sorted_simplices():
        if s in done:
            continue
        orbit = {x.image(g, s) for g in group.elements()}
        done |= orbit
        stab = frozenset(g for g in group.elements() if x.image(g, s) == s)
        coeffs[lat.class_index_of(stab)] += (-1) ** (len(s) - 1)
    return BurnsideElement(group, coeffs)


def fixed_subcomplex(x: GSimplicialComplex, subgroup) -> GSimplicialComplex:
    """X^H: the subcomplex of simplices fixed vertexwise by all of H.

    Returns a complex with the trivial action.
    """
    x.check_regular()
    members = subgroup.members if isinstance(subgroup, Subgroup) else frozenset(subgroup)
    fixed_vertices = [v for v in x.vertices
                      if all(x.action[h][v] == v for h in members)]
    vs = set(fixed_vertices)
    simplices = [s for s in x.simplices if s <= vs]
    tg = trivial_group()
    action = {tg.identity: {v: v for v in fixed_vertices}}
    return GSimplicialComplex(tg, fixed_vertices, simplices, action)


def barycentric_subdivide(x: GSimplicialComplex) -> GSimplicialComplex:
    """First barycentric subdivision with the induced action (always regular).

    New vertices are the simplices of X (as sorted tuples); new simplices are
    the strictly increasing chains.
    """
    old = x.sorted_simplices()
    as_tuple = {s: tuple(sorted(s)) for s in old}
    vertices = [as_tuple[s] for s in old]
    simplices = []
    # chains via DFS over the face relation
    by_size = {}
    for s in old:
        by_size.setdefault(len(s), []).append(s)

    def extend(chain, top):
        simplices.append(frozenset(as_tuple[s] for s in chain))
        for s in old:
            if len(s) > len(top) and top < s:
                extend(chain + [s], s)

    for s in old:
        extend([s], s)
    action = {}
    for g in x.group.elements():
        m = x.action[g]
        action[g] = {as_tuple[s]: tuple(sorted(m[v] for v in s)) for s in old}
    return GSimplicialComplex(x.group, vertices, simplices, action)


def chi_k_direct(x: GSimplicialComplex, k: int) -> int:
    """chi^(k)(X, G) by direct enumeration of commuting (k+1)-tuples.

    Averages chi(X^{<g_0..g_k>}) over all pairwise-commuting tuples; must
    agree with r_k(chi_G_simplicial(X)).
    """
    x.check_regular()
    group = x.group
    if group.order ** (k + 1) > TUPLE_ENUM_BOUND:
        raise OrderBoundError("commuting-tuple enumeration out of bounds")
    lat = group.lattice()
    counts = commuting_class_counts(group, k)
    total = 0
    for c, count in enumerate(counts):
        if count == 0:
            continue
        rep = lat.subgroups[lat.representatives[c]]
        total += count * fixed_subcomplex(x, rep).euler_characteristic()
    if total % group.order:
        raise IntegralityError("averaged fixed-point count is not an integer")
    return total // group.order


def chi_orbifold_direct(x: GSimplicialComplex) -> int:
    """The orbifold Euler characteristic: commuting pairs, i.e. chi^(1)."""
    return chi_k_direct(x, 1)
