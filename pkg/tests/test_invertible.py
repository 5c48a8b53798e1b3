from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eqindex import (InvalidPolynomialError, OrderBoundError, PairingError,
                     chi_G_milnor, chi_milnor_fixed, dual_subgroup,
                     duality_check, fixed_locus, index_df, milnor_data,
                     milnor_number, pairing, restrict_to, symmetry_group,
                     transpose, validate)
from eqindex.burnside import cardinality, marks_vector, one, r_k, restrict
from eqindex.invertible import DiagonalGroup, check_perfect_pairing

from invertible_family import duality_family, mu_oracle_family
from oracles import milnor_number_jacobian

FERMAT = validate([[2, 0], [0, 3]])        # x^2 + y^3
CHAIN = validate([[2, 1], [0, 3]])         # x^2 y + y^3
DUAL_CHAIN = validate([[2, 0], [1, 3]])    # x^2 + x y^3


# -- validation ----------------------------------------------------------------

def test_validate_fermat_pair():
    assert [a.kind for a in FERMAT.atoms] == ["fermat", "fermat"]
    assert FERMAT.weights == (Fraction(1, 2), Fraction(1, 3))
    assert FERMAT.det == 6


def test_validate_chain():
    assert [a.kind for a in CHAIN.atoms] == ["chain"]
    assert CHAIN.atoms[0].variables == (0, 1)
    assert CHAIN.atoms[0].exponents == (2, 3)
    assert CHAIN.weights == (Fraction(1, 3), Fraction(1, 3))


def test_validate_smooth_single_variable():
    f = validate([[1]])
    assert f.atoms[0].kind == "fermat"
    assert f.weights == (Fraction(1),)
    assert milnor_number(f) == 0


def test_validate_loop():
    f = validate([[2, 1], [1, 2]])
    assert [a.kind for a in f.atoms] == ["loop"]
    assert f.det == 3


def test_validate_rejects_singular_matrix():
    with pytest.raises(InvalidPolynomialError):
        validate([[1, 1], [1, 1]])


def test_validate_rejects_non_atom_shapes():
    with pytest.raises(InvalidPolynomialError):
        validate([[2, 1, 1], [0, 2, 0], [0, 0, 2]])  # three-variable monomial
    with pytest.raises(InvalidPolynomialError):
        validate([[2, 2], [0, 3]])  # tail exponent 2


def test_validate_rejects_zero_weight():
    # x z + z y + y: decomposes combinatorially but the weights leave (0, 1]
    with pytest.raises(InvalidPolynomialError):
        validate([[1, 0, 1], [0, 1, 1], [0, 1, 0]])


# -- Milnor numbers ----------------------------------------------------------------

def test_milnor_numbers_of_named_fixtures():
    assert milnor_number(FERMAT) == 2
    assert milnor_number(CHAIN) == 4
    assert milnor_number(DUAL_CHAIN) == 5


def test_milnor_empty_polynomial_is_one():
    assert milnor_number(validate([])) == 1


def test_milnor_matches_jacobian_oracle_on_named_fixtures():
    for f in (FERMAT, CHAIN, DUAL_CHAIN):
        assert milnor_number(f) == milnor_number_jacobian(f.E)


def test_milnor_matches_jacobian_oracle_on_family():
    for f in mu_oracle_family():
        assert milnor_number(f) == milnor_number_jacobian(f.E), f.E


# -- symmetry groups ----------------------------------------------------------------

def test_symmetry_group_fermat_pair():
    g = symmetry_group(FERMAT)
    assert g.order == 6
    phases = {g.phases(i) for i in range(6)}
    assert (Fraction(1, 2), Fraction(0)) in phases
    assert (Fraction(0), Fraction(1, 3)) in phases


def test_symmetry_group_chain_is_cyclic_6():
    g = symmetry_group(CHAIN)
    assert g.order == 6
    gen = (Fraction(5, 6), Fraction(1, 3))  # -1/6 mod 1 = 5/6
    assert gen in set(g.group.keys)


def test_symmetry_group_dual_chain():
    g = symmetry_group(DUAL_CHAIN)
    assert g.order == 6
    assert (Fraction(1, 2), Fraction(5, 6)) in set(g.group.keys)


def test_symmetry_group_order_bound():
    with pytest.raises(OrderBoundError):
        symmetry_group(validate([[2023]]))


# -- transpose -----------------------------------------------------------------------

def test_transpose_examples():
    assert transpose(FERMAT).E == FERMAT.E
    assert transpose(CHAIN).E == DUAL_CHAIN.E
    assert transpose(transpose(CHAIN)).E == CHAIN.E


def test_transpose_of_head_one_chain_is_degenerate():
    f = validate([[1, 1], [0, 2]])  # x y + y^2: a valid germ
    assert milnor_number(f) == 1
    # but its dual x + x y^2 is not weighted-homogeneous with positive weights
    with pytest.raises(InvalidPolynomialError):
        transpose(f)


# -- pairing & dual subgroups ----------------------------------------------------------

def test_pairing_bilinear_and_zero_on_identity():
    gf = symmetry_group(CHAIN)
    gft = symmetry_group(DUAL_CHAIN)
    zero_f = gf.phases(gf.group.identity)
    for j in range(gft.order):
        assert pairing(CHAIN, zero_f, gft.phases(j)) == 0
    a = (Fraction(5, 6), Fraction(1, 3))
    b = (Fraction(1, 2), Fraction(5, 6))
    v = pairing(CHAIN, a, b)
    # additivity in each slot
    a2 = tuple((x + x) % 1 for x in a)
    assert pairing(CHAIN, a2, b) == (v + v) % 1
    assert v.denominator <= 6 and 6 % v.denominator == 0


def test_pairing_rejects_non_members():
    with pytest.raises(PairingError):
        pairing(CHAIN, (Fraction(1, 5), Fraction(0)), (Fraction(0), Fraction(0)))


def test_pairing_is_perfect_on_family_sample():
    for f in duality_family(24, 3)[::7]:
        gf = symmetry_group(f)
        gft = symmetry_group(transpose(f))
        check_perfect_pairing(f, gf, gft)


def test_dual_subgroup_examples():
    gf = symmetry_group(CHAIN)
    gft = symmetry_group(DUAL_CHAIN)
    lat = gf.group.lattice()
    triv = lat.subgroups[0]
    whole = lat.subgroups[-1]
    assert dual_subgroup(CHAIN, gf, triv.members, gft).order == 6
    assert dual_subgroup(CHAIN, gf, whole.members, gft).order == 1
    h2 = lat.subgroups[1]
    assert h2.order == 2
    assert dual_subgroup(CHAIN, gf, h2.members, gft).order == 3


def test_dual_subgroup_involution_and_order_product():
    for f in duality_family(20, 2):
        ft = transpose(f)
        gf, gft = symmetry_group(f), symmetry_group(ft)
        lat = gf.group.lattice()
        for sub in lat.subgroups:
            dual = dual_subgroup(f, gf, sub.members, gft)
            assert sub.order * dual.order == gf.order
            back = dual_subgroup(ft, gft, dual.members, gf)
            assert back.members == sub.members


# -- fixed loci and restriction ----------------------------------------------------------

def test_fixed_locus_examples():
    gf = symmetry_group(CHAIN)
    lat = gf.group.lattice()
    assert fixed_locus(gf, lat.subgroups[0].members) == frozenset({0, 1})
    z2 = lat.subgroups[1]
    assert fixed_locus(gf, z2.members) == frozenset({1})
    z3 = lat.subgroups[2]
    assert z3.order == 3
    assert fixed_locus(gf, z3.members) == frozenset()


def test_restrict_to_examples():
    assert restrict_to(CHAIN, {0, 1}).E == CHAIN.E
    assert restrict_to(CHAIN, {1}).E == ((3,),)
    assert restrict_to(FERMAT, {0}).E == ((2,),)
    assert restrict_to(FERMAT, frozenset()).E == ()


def test_restrict_to_non_fixed_locus_is_hard_error():
    with pytest.raises(InvalidPolynomialError):
        restrict_to(CHAIN, {0})  # x-axis is not a fixed locus of the chain


def test_chi_milnor_fixed_examples():
    gf = symmetry_group(CHAIN)
    lat = gf.group.lattice()
    assert chi_milnor_fixed(CHAIN, gf, lat.subgroups[-1].members) == 0
    assert chi_milnor_fixed(CHAIN, gf, lat.subgroups[1].members) == 3
    assert chi_milnor_fixed(CHAIN, gf, lat.subgroups[0].members) == 1 - 4


# -- equivariant Euler characteristic and the index of df ----------------------------------

def test_chi_G_milnor_fermat_pair():
    gf = symmetry_group(FERMAT)
    chi = chi_G_milnor(FERMAT, gf)
    assert chi.coeffs == (-1, 1, 1, 0)
    assert cardinality(chi) == -1


def test_chi_G_milnor_chain():
    gf = symmetry_group(CHAIN)
    assert chi_G_milnor(CHAIN, gf).coeffs == (-1, 1, 0, 0)


def test_chi_G_milnor_dual_chain():
    gf = symmetry_group(DUAL_CHAIN)
    assert chi_G_milnor(DUAL_CHAIN, gf).coeffs == (-1, 0, 1, 0)


def test_index_df_ground_truth():
    for f, coeffs, card in [
        (FERMAT, (1, -1, -1, 1), 2),
        (CHAIN, (1, -1, 0, 1), 4),
        (DUAL_CHAIN, (1, 0, -1, 1), 5),
    ]:
        gf = symmetry_group(f)
        ind = index_df(f, gf)
        assert ind.coeffs == coeffs
        assert cardinality(ind) == card


def test_index_df_trivial_group_reduction():
    gf = symmetry_group(CHAIN)
    triv = gf.group.lattice().subgroups[0]
    ind = index_df(CHAIN, gf.subgroup_diagonal(triv))
    assert ind.coeffs == (4,)  # (-1)^n mu for n = 2


def test_milnor_data_invariants():
    for f in (FERMAT, CHAIN, DUAL_CHAIN):
        gf = symmetry_group(f)
        data = milnor_data(f, gf)
        lat = gf.group.lattice()
        for i, entry in data.per_subgroup.items():
            if not entry.locus:
                assert entry.chi == 0
            else:
                m = len(entry.locus)
                assert entry.chi == 1 + (-1) ** (m - 1) * entry.mu
        assert cardinality(data.chi_g) == data.per_subgroup[0].chi


def test_mark_identity_for_chi_G_milnor():
    for f in duality_family(30, 2):
        gf = symmetry_group(f)
        lat = gf.group.lattice()
        mv = marks_vector(chi_G_milnor(f, gf))
        for i, sub in enumerate(lat.subgroups):
            assert mv[lat.class_of[i]] == chi_milnor_fixed(f, gf, sub.members)


def test_index_cardinality_is_signed_milnor_number():
    for f in duality_family(30, 3):
        gf = symmetry_group(f)
        ind = index_df(f, gf)
        mu = milnor_number(f)
        assert cardinality(ind) == (-1) ** f.n * mu
        assert cardinality(ind) == 1 - chi_milnor_fixed(f, gf, frozenset([gf.group.identity]))


def test_restriction_compatibility_named_fixtures():
    for f in (FERMAT, CHAIN, DUAL_CHAIN):
        gf = symmetry_group(f)
        ind = index_df(f, gf)
        for sub in gf.group.lattice().subgroups:
            sub_ind = index_df(f, gf.subgroup_diagonal(sub))
            assert restrict(ind, sub) == sub_ind


# -- duality ---------------------------------------------------------------------------------

def test_duality_check_chain_fixture():
    rep = duality_check(CHAIN)
    assert rep.orbit_index == 1 and rep.dual_orbit_index == 1
    by_orders = {(p.subgroup_order, p.dual_order): p for p in rep.pairs}
    assert by_orders[(6, 1)].orbifold_index == 5
    assert by_orders[(6, 1)].dual_orbifold_index == 5
    assert by_orders[(1, 6)].orbifold_index == 4
    assert by_orders[(1, 6)].dual_orbifold_index == 4
    assert rep.all_match


def test_duality_r0_example_values():
    rep = duality_check(CHAIN)
    # 1 + 1 - 1 on each side
    assert rep.orbit_index == 1 == rep.dual_orbit_index


def test_duality_bound():
    with pytest.raises(OrderBoundError):
        duality_check(validate([[501]]))


def test_duality_sign_phenomenon_on_one_variable():
    # for odd n the orbifold indices coincide only up to the sign (-1)^n
    rep = duality_check(validate([[3]]))
    assert rep.orbit_match
    assert not rep.all_match
    assert rep.all_sign_match
    flagged = rep.flagged_pairs
    assert flagged
    for p in flagged:
        assert p.orbifold_index == -p.dual_orbifold_index


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(duality_family(36, 2)))
def test_duality_even_dimension_matches_verbatim(f):
    rep = duality_check(f)
    assert rep.orbit_match
    assert rep.all_sign_match
    if f.n % 2 == 0:
        assert rep.all_match
