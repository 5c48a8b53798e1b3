import pytest
from hypothesis import given, settings, strategies as st

from eqindex import (RegularityError, StratifiedGData, barycentric_subdivide,
                     build_complex, chi_G_simplicial, chi_G_stratified,
                     chi_k_direct, chi_orbifold_direct, cyclic_group,
                     fixed_subcomplex, perm_group, trivial_group)
from eqindex.burnside import cardinality, marks_vector, one, r_k

from complex_suite import SQUARE_EDGES, suite

NAMES = [name for name, _ in suite()]


def by_name(name):
    return dict(suite())[name]


# -- stratified model -------------------------------------------------------------

def test_chi_stratified_point():
    g = cyclic_group(6)
    d = StratifiedGData(g, [(3, 1)])  # single stratum [G/G], chi = 1
    assert chi_G_stratified(d) == one(g)
    assert chi_G_stratified(d, reduced=True).is_zero()


def test_chi_stratified_milnor_fibre_shape():
    g = cyclic_group(6)
    # chi(V/G) values -1, 1, 1 on classes e, Z2, Z3
    d = StratifiedGData(g, [(0, -1), (1, 1), (2, 1)])
    assert chi_G_stratified(d).coeffs == (-1, 1, 1, 0)


def test_chi_stratified_empty():
    g = cyclic_group(6)
    assert chi_G_stratified(StratifiedGData(g, [])).is_zero()


# -- simplicial fixtures -----------------------------------------------------------

def test_triangle_rotation_is_zero():
    chi = chi_G_simplicial(by_name("triangle-rot3"))
    assert chi.is_zero()


def test_square_diag_reflection():
    chi = chi_G_simplicial(by_name("square-diag-reflection"))
    assert chi.coeffs == (-1, 2)  # 2[G/G] - [G/e]


def test_square_edge_reflection_subdivided():
    chi = chi_G_simplicial(by_name("square-edge-reflection-subdivided"))
    assert chi.coeffs == (-1, 2)


def test_square_antipodal_free():
    assert chi_G_simplicial(by_name("square-antipodal")).is_zero()


def test_octahedron_pi_rotation():
    chi = chi_G_simplicial(by_name("octahedron-pi-rotation"))
    assert chi.coeffs == (0, 2)  # 2[G/G]


def test_octahedron_antipodal():
    chi = chi_G_simplicial(by_name("octahedron-antipodal"))
    assert chi.coeffs == (1, 0)  # [G/e]


def test_octahedron_rot4():
    x = by_name("octahedron-rot4")
    chi = chi_G_simplicial(x)
    lat = x.group.lattice()
    assert chi.coeffs[-1] == 2
    assert cardinality(chi) == 2


def test_octahedron_klein_product_action():
    x = by_name("octahedron-klein-product")
    chi = chi_G_simplicial(x)
    # -[G/e] + [G/Za] + [G/Zb] + [G/Zc]
    assert chi.coeffs == (-1, 1, 1, 1, 0)


def test_hexagon_dihedral():
    x = by_name("hexagon-dihedral3")
    chi = chi_G_simplicial(x)
    # 2[G/Z2] - [G/e] over D3; classes are e, [Z2], Z3, G
    assert chi.coeffs == (-1, 2, 0, 0)


def test_trivial_action_reduces_to_euler_characteristic():
    x = by_name("point-trivial")
    assert chi_G_simplicial(x).coeffs == (1,)
    for name in NAMES:
        c = by_name(name)
        assert cardinality(chi_G_simplicial(c)) == c.euler_characteristic()


def test_disjoint_union_additivity():
    z2 = perm_group(2, [[1, 0]])
    tri2 = by_name("two-triangles-swapped")
    assert chi_G_simplicial(tri2).is_zero()
    # one triangle fixed pointwise + one swapped pair decomposes additively
    a = build_complex(z2, range(3), [[0, 1], [1, 2], [0, 2]], {})
    b = by_name("two-triangles-swapped")
    union = build_complex(
        z2, range(9),
        [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5], [6, 7], [7, 8], [6, 8]],
        {0: {0: 0, 1: 1, 2: 2, 3: 6, 4: 7, 5: 8, 6: 3, 7: 4, 8: 5}})
    assert chi_G_simplicial(union) == chi_G_simplicial(a) + chi_G_simplicial(b)


# -- the central mark identity -------------------------------------------------------

def test_mark_identity_on_suite_all_subgroups():
    for name, x in suite():
        chi = chi_G_simplicial(x)
        mv = marks_vector(chi)
        lat = x.group.lattice()
        for i, sub in enumerate(lat.subgroups):
            got = fixed_subcomplex(x, sub).euler_characteristic()
            assert got == mv[lat.class_of[i]], (name, lat.labels[i])


def test_fixed_subcomplex_examples():
    x = by_name("square-diag-reflection")
    lat = x.group.lattice()
    assert fixed_subcomplex(x, lat.subgroups[0]).euler_characteristic() == 0
    fixed = fixed_subcomplex(x, lat.subgroups[1])
    assert sorted(fixed.vertices) == [0, 2]
    assert fixed.euler_characteristic() == 2
    free = by_name("square-antipodal")
    assert fixed_subcomplex(free, free.group.lattice().subgroups[1]).simplices == frozenset()


# -- consistency of the reductions ----------------------------------------------------

def test_r_k_consistency_on_suite():
    for name, x in suite():
        chi = chi_G_simplicial(x)
        for k in (0, 1, 2):
            assert chi_k_direct(x, k) == r_k(chi, k), (name, k)


def test_orbifold_fixture_square_reflection():
    x = by_name("square-diag-reflection")
    assert chi_k_direct(x, 0) == 1
    assert chi_orbifold_direct(x) == 3


# -- regularity and subdivision --------------------------------------------------------

def test_irregular_action_raises():
    z2 = perm_group(2, [[1, 0]])
    edge = build_complex(z2, [0, 1], [[0, 1]], {0: {0: 1, 1: 0}})
    assert not edge.is_regular()
    with pytest.raises(RegularityError):
        chi_G_simplicial(edge)
    with pytest.raises(RegularityError):
        fixed_subcomplex(edge, z2.lattice().subgroups[1])


def test_subdivision_repairs_edge_swap():
    z2 = perm_group(2, [[1, 0]])
    edge = build_complex(z2, [0, 1], [[0, 1]], {0: {0: 1, 1: 0}})
    sub = barycentric_subdivide(edge)
    assert sub.is_regular()
    assert len(sub.vertices) == 3
    assert chi_G_simplicial(sub).coeffs == (0, 1)  # [G/G]: a fixed midpoint


def test_subdivision_of_point():
    t = trivial_group()
    pt = build_complex(t, [0], [[0]], {})
    sub = barycentric_subdivide(pt)
    assert len(sub.vertices) == 1
    assert sub.euler_characteristic() == 1


def test_subdivision_counts_chains():
    x = by_name("triangle-rot3")
    sub = barycentric_subdivide(x)
    # 3 vertices + 3 edges become 6 vertices; each edge splits in two
    assert len(sub.vertices) == 6
    assert len([s for s in sub.simplices if len(s) == 2]) == 6


def test_chi_invariant_under_subdivision():
    for name, x in suite():
        sub = barycentric_subdivide(x)
        assert chi_G_simplicial(sub) == chi_G_simplicial(x), name


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(NAMES))
def test_suite_regularity_and_bonus_subdivision_regular(name):
    x = by_name(name)
    assert x.is_regular()
    assert barycentric_subdivide(x).is_regular()


def test_inconsistent_generator_images_rejected():
    from eqindex import InconsistentDataError
    z2 = perm_group(2, [[1, 0]])
    with pytest.raises(InconsistentDataError):
        # an order-2 generator cannot act by a 3-cycle
        build_complex(z2, [0, 1, 2], [[0, 1], [1, 2], [0, 2]],
                      {0: {0: 1, 1: 2, 2: 0}})


def test_reduction_order_bound():
    from eqindex import OrderBoundError
    x = by_name("triangle-rot3")
    with pytest.raises(OrderBoundError):
        chi_k_direct(x, 4)
