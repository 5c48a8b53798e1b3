"""Invertible polynomials with diagonal symmetry groups.

An invertible polynomial is n monomials in n variables with a nonsingular
exponent matrix E (row i encodes the monomial prod_j z_j^{E_ij}); only the
standard Fermat/chain/loop block shapes are accepted, which guarantees that
restricting to the fixed subspace of any diagonal symmetry subgroup stays
invertible.

Milnor numbers come from the weighted-homogeneous product formula
prod(1/q_i - 1); the equivariant Euler characteristic of the Milnor fibre is
assembled from fixed-locus data by Moebius inversion over the (abelian)
subgroup lattice, and the index of df is [G/G] - chi^G(M_f).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .burnside import BurnsideElement, one, r_k
from .errors import (IntegralityError, InvalidPolynomialError,
                     NotASubgroupError, OrderBoundError, PairingError)
from .groups import FiniteGroup, Subgroup, build_group

SYMMETRY_ORDER_BOUND = 2000
DUALITY_ORDER_BOUND = 500


# -- exact linear algebra -----------------------------------------------------

def det_int(matrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Gauss)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor == 0:
                continue
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    assert det.denominator == 1
    return int(det)


def solve_exact(matrix, rhs_columns):
    """Solve M X = B over the rationals; columns of B given as sequences."""
    n = len(matrix)
    width = len(rhs_columns)
    aug = [[Fraction(matrix[r][c]) for c in range(n)]
           + [Fraction(rhs_columns[k][r]) for k in range(width)]
           for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InvalidPolynomialError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [[aug[r][n + k] for r in range(n)] for k in range(width)]


# -- polynomial shape ---------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    """One block of the Fermat/chain/loop decomposition.

    `variables` lists column indices in atom order; `exponents[i]` is the
    power of variables[i] in its own monomial.
    """
    kind: str
    variables: tuple
    exponents: tuple


@dataclass(frozen=True)
class InvertiblePolynomial:
    E: tuple
    atoms: tuple
    weights: tuple
    det: int

    @property
    def n(self) -> int:
        return len(self.E)

    def monomials(self):
        return [tuple(row) for row in self.E]


_MU_CACHE: dict = {}


def validate(matrix) -> InvertiblePolynomial:
    """Check an exponent matrix and decompose it into Fermat/chain/loop atoms.

    Rejects anything that is not a disjoint union of the three standard
    shapes, and any matrix whose weight system leaves (0, 1].
    """
    E = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(E)
    if n == 0:
        return InvertiblePolynomial(E=(), atoms=(), weights=(), det=1)
    if any(len(row) != n for row in E):
        raise InvalidPolynomialError("exponent matrix must be square")
    if any(x < 0 for row in E for x in row):
        raise InvalidPolynomialError("exponents must be non-negative")
    d = det_int(E)
    if d == 0:
        raise InvalidPolynomialError("exponent matrix has determinant zero")

    # each monomial is z_h^a (head only) or z_h^a z_t (head and a tail of
    # exponent one); collect the possible (head, tail) readings per row
    options = []
    for i, row in enumerate(E):
        support = [j for j, v in enumerate(row) if v]
        opts = []
        if len(support) == 1:
            opts.append((support[0], None))
        elif len(support) == 2:
            j, l = support
            if row[l] == 1:
                opts.append((j, l))
            if row[j] == 1:
                opts.append((l, j))
        if not opts:
            raise InvalidPolynomialError(
                f"monomial {i} does not have Fermat/chain/loop shape")
        options.append(opts)

    assignment = _assign_heads(options, n)
    if assignment is None:
        raise InvalidPolynomialError(
            "matrix is not a disjoint union of Fermat/chain/loop atoms")

    head_row = {head: i for i, (head, _) in enumerate(assignment)}
    out_edge = {head: tail for head, tail in assignment}
    tails = {tail for _, tail in assignment if tail is not None}
    atoms = []
    visited = set()
    # chains start at variables that are nobody's tail
    for start in range(n):
        if start in visited or start in tails:
            continue
        path = [start]
        visited.add(start)
        while out_edge[path[-1]] is not None:
            nxt = out_edge[path[-1]]
            path.append(nxt)
            visited.add(nxt)
        kind = "fermat" if len(path) == 1 else "chain"
        atoms.append(Atom(kind, tuple(path),
                          tuple(E[head_row[v]][v] for v in path)))
    # what remains are loops; start each at its smallest variable
    for start in range(n):
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        nxt = out_edge[start]
        while nxt != start:
            cycle.append(nxt)
            visited.add(nxt)
            nxt = out_edge[nxt]
        atoms.append(Atom("loop", tuple(cycle),
                          tuple(E[head_row[v]][v] for v in cycle)))
    atoms.sort(key=lambda a: a.variables[0])

    ones = [1] * n
    weights = tuple(solve_exact(E, [ones])[0])
    for q in weights:
        if not 0 < q <= 1:
            raise InvalidPolynomialError(
                f"weight {q} outside (0, 1]; not an invertible polynomial germ")
    return InvertiblePolynomial(E=E, atoms=tuple(atoms), weights=weights, det=d)


def _assign_heads(options, n):
    """Pick one (head, tail) reading per row so heads are a bijection onto the
    variables and no variable is the tail of two rows."""

    def rec(i, heads_used, tails_used, acc):
        if i == n:
            return list(acc)
        for head, tail in options[i]:
            if head in heads_used:
                continue
            if tail is not None and tail in tails_used:
                continue
            heads_used.add(head)
            if tail is not None:
                tails_used.add(tail)
            found = rec(i + 1, heads_used, tails_used, acc + [(head, tail)])
            heads_used.discard(head)
            if tail is not None:
                tails_used.discard(tail)
            if found is not None:
                return found
        return None

    return rec(0, set(), set(), [])


def milnor_number(f: InvertiblePolynomial) -> int:
    """Milnor number via the weighted-homogeneous product prod(1/q_i - 1)."""
    cached = _MU_CACHE.get(f.E)
    if cached is not None:
        return cached
    mu = Fraction(1)
    for q in f.weights:
        mu *= 1 / q - 1
    if mu.denominator != 1 or mu < 0:
        raise InvalidPolynomialError(
            "Milnor product is not a non-negative integer")
    result = int(mu)
    _MU_CACHE[f.E] = result
    return result


def transpose(f: InvertiblePolynomial) -> InvertiblePolynomial:
    """The dual polynomial: transpose the exponent matrix."""
    n = f.n
    return validate(tuple(tuple(f.E[j][i] for j in range(n)) for i in range(n)))


# -- the diagonal symmetry group ----------------------------------------------

@dataclass(frozen=True)
class DiagonalGroup:
    """A finite group of diagonal scalings, with exact rational phases."""
    group: FiniteGroup
    dimension: int

    def phases(self, i: int) -> tuple:
        return self.group.keys[i]

    @property
    def order(self) -> int:
        return self.group.order

    def subgroup_diagonal(self, sub: Subgroup) -> "DiagonalGroup":
        if sub.parent is not self.group and not sub.parent.same_group(self.group):
            raise NotASubgroupError("subgroup of a different group")
        return DiagonalGroup(sub.as_group(), self.dimension)


def symmetry_group(f: InvertiblePolynomial) -> DiagonalGroup:
    """G_f, generated by the columns of E^{-1} mod 1; order |det E|."""
    if f.n == 0:
        raise InvalidPolynomialError("empty polynomial has no ambient space")
    if abs(f.det) > SYMMETRY_ORDER_BOUND:
        raise OrderBoundError(
            f"symmetry group order {abs(f.det)} exceeds {SYMMETRY_ORDER_BOUND}")
    identity_cols = [[1 if r == c else 0 for r in range(f.n)]
                     for c in range(f.n)]
    inv_cols = solve_exact(f.E, identity_cols)
    group = build_group({"kind": "diagonal", "phases": inv_cols})
    if group.order != abs(f.det):
        raise IntegralityError("symmetry group order does not match |det E|")
    return DiagonalGroup(group, f.n)


def _check_membership(f: InvertiblePolynomial, phases, transposed: bool):
    n = f.n
    if len(phases) != n:
        raise PairingError("phase vector has wrong dimension")
    for i in range(n):
        s = sum((f.E[j][i] if transposed else f.E[i][j]) * phases[j]
                for j in range(n))
        if s % 1 != 0:
            raise PairingError("phase vector is not a symmetry of the polynomial")


def pairing(f: InvertiblePolynomial, a, b) -> Fraction:
    """The duality pairing <a, b> = a^T E^T b mod 1 for a in G_f, b in G_{f~}."""
    _check_membership(f, a, transposed=False)
    _check_membership(f, b, transposed=True)
    n = f.n
    total = Fraction(0)
    for i in range(n):
        if a[i] == 0:
            continue
        total += a[i] * sum(f.E[j][i] * b[j] for j in range(n))
    return total % 1


def pairing_matrix(f: InvertiblePolynomial, gf: DiagonalGroup,
                   gft: DiagonalGroup):
    """All pairings at once, over a common denominator (exact integers).

    Membership of the group elements is guaranteed by construction, so the
    per-call checks of `pairing` are skipped here.
    """
    n = f.n
    denom = 1
    for g in (gf, gft):
        for i in range(g.order):
            for p in g.phases(i):
                denom = denom * p.denominator // math.gcd(denom, p.denominator)
    a_int = [[int(p * denom) for p in gf.phases(i)] for i in range(gf.order)]
    b_int = [[int(p * denom) for p in gft.phases(j)] for j in range(gft.order)]
    # u[j][i] = sum_l E[l][i] b_l, so <a, b> = (sum_i a_i u[j][i]) / denom^2
    u = [[sum(f.E[l][i] * b[l] for l in range(n)) for i in range(n)]
         for b in b_int]
    d2 = denom * denom
    out = []
    for a in a_int:
        row = []
        for j in range(gft.order):
            uj = u[j]
            val = sum(a[i] * uj[i] for i in range(n))
            row.append(Fraction(val % d2, d2))
        out.append(row)
    return out


def check_perfect_pairing(f: InvertiblePolynomial, gf: DiagonalGroup,
                          gft: DiagonalGroup):
    """The induced map G_{f~} -> Hom(G_f, Q/Z) must be injective."""
    if gf.order != gft.order:
        raise PairingError("dual symmetry groups have different orders")
    p = pairing_matrix(f, gf, gft)
    for j in range(gft.order):
        if j == gft.group.identity:
            continue
        if all(p[i][j] == 0 for i in range(gf.order)):
            raise PairingError(
                "pairing is degenerate: a nontrivial dual element annihilates G_f")


def dual_subgroup(f: InvertiblePolynomial, gf: DiagonalGroup,
                  members, gft: DiagonalGroup) -> Subgroup:
    """H^T: the annihilator of H under the pairing; |H| * |H^T| = |G_f|."""
    check_perfect_pairing(f, gf, gft)
    mem = sorted(frozenset(members))
    ann = [j for j in range(gft.order)
           if all(pairing(f, gf.phases(i), gft.phases(j)) == 0 for i in mem)]
    sub = Subgroup(gft.group, ann)
    if sub.order * len(mem) != gf.order:
        raise PairingError("annihilator order violates |H| |H^T| = |G|")
    return sub


# -- fixed loci and Milnor fibre data ------------------------------------------

def fixed_locus(diag: DiagonalGroup, members) -> frozenset:
    """Coordinates on which every element of the subgroup acts trivially."""
    n = diag.dimension
    fixed = set(range(n))
    for i in members:
        ph = diag.phases(i)
        fixed &= {j for j in fixed if ph[j] == 0}
    return frozenset(fixed)


def restrict_to(f: InvertiblePolynomial, coords) -> InvertiblePolynomial:
    """Restrict to the coordinate subspace `coords` (a fixed locus).

    Keeps the monomials supported inside the subspace; the block structure
    guarantees the result is square and invertible, so anything else is a
    hard error.
    """
    cols = sorted(coords)
    colset = set(cols)
    rows = [i for i, row in enumerate(f.E)
            if all(j in colset for j, v in enumerate(row) if v)]
    if len(rows) != len(cols):
        raise InvalidPolynomialError(
            "restriction is not square; the coordinate set is not a fixed locus")
    sub = tuple(tuple(f.E[i][j] for j in cols) for i in rows)
    return validate(sub)


def chi_milnor_fixed(f: InvertiblePolynomial, diag: DiagonalGroup,
                     members) -> int:
    """chi of the Milnor fibre of f restricted to the fixed locus of H.

    Empty locus gives 0; otherwise the fibre of an isolated m-variable
    singularity is a wedge of mu spheres of dimension m-1.
    """
    locus = fixed_locus(diag, members)
    if not locus:
        return 0
    mu = milnor_number(restrict_to(f, locus))
    m = len(locus)
    return 1 + (-1) ** (m - 1) * mu


@dataclass
class FixedMilnorEntry:
    locus: frozenset
    mu: int
    chi: int


@dataclass
class MilnorData:
    """Per-subgroup fixed-locus Milnor data plus the assembled chi^G(M_f)."""
    diag: DiagonalGroup
    per_subgroup: dict  # subgroup index -> FixedMilnorEntry
    chi_g: BurnsideElement


def _fixed_entries(f: InvertiblePolynomial, diag: DiagonalGroup) -> dict:
    lat = diag.group.lattice()
    entries = {}
    for i, sub in enumerate(lat.subgroups):
        locus = fixed_locus(diag, sub.members)
        if locus:
            mu = milnor_number(restrict_to(f, locus))
            chi = 1 + (-1) ** (len(locus) - 1) * mu
        else:
            mu = 0
            chi = 0
        entries[i] = FixedMilnorEntry(locus=locus, mu=mu, chi=chi)
    return entries


_VALIDATED_SYMMETRY: set = set()


def chi_G_milnor(f: InvertiblePolynomial, diag: DiagonalGroup) -> BurnsideElement:
    """chi^G(M_f) over a diagonal symmetry group, by exact-isotropy counts.

    chi(M^{(K)}) = sum over L >= K of mu'(K, L) chi(M^L); the group acts
    freely on each exact-isotropy piece modulo K, so every orbit count
    (|K|/|G|) chi(M^{(K)}) must be an integer.
    """
    group = diag.group
    if not group.is_abelian:
        raise NotASubgroupError("diagonal symmetry groups must be abelian")
    token = (f.E, group.fingerprint)
    if token not in _VALIDATED_SYMMETRY:
        for i in group.elements():
            _check_membership(f, diag.phases(i), transposed=False)
        _VALIDATED_SYMMETRY.add(token)
    lat = group.lattice()
    ns = len(lat.subgroups)
    entries = _fixed_entries(f, diag)
    coeffs = [0] * lat.num_classes
    n = group.order
    for kk in range(ns):
        exact = sum(lat.mu_sub[kk][l] * entries[l].chi
                    for l in range(ns) if lat.leq[kk][l])
        num = lat.subgroups[kk].order * exact
        if num % n:
            raise IntegralityError(
                "exact-isotropy Euler characteristic is not divisible by the orbit size")
        coeffs[lat.class_of[kk]] += num // n
    return BurnsideElement(group, coeffs)


def milnor_data(f: InvertiblePolynomial, diag: DiagonalGroup) -> MilnorData:
    return MilnorData(diag=diag, per_subgroup=_fixed_entries(f, diag),
                      chi_g=chi_G_milnor(f, diag))


def index_df(f: InvertiblePolynomial, diag: DiagonalGroup) -> BurnsideElement:
    """ind_rad^G(df) = -reduced chi^G(M_f) = [G/G] - chi^G(M_f)."""
    return one(diag.group) - chi_G_milnor(f, diag)


# -- duality report -------------------------------------------------------------

@dataclass
class DualityPair:
    subgroup_label: str
    subgroup_order: int
    dual_label: str
    dual_order: int
    orbifold_index: int
    dual_orbifold_index: int
    dimension: int

    @property
    def matches(self) -> bool:
        """Verbatim coincidence of the two orbifold indices."""
        return self.orbifold_index == self.dual_orbifold_index

    @property
    def sign_matches(self) -> bool:
        """Coincidence up to the global sign (-1)^n.

        Empirically the orbifold indices coincide verbatim for even n and
        differ by exactly (-1)^n in general; pairs failing `matches` but
        passing this are flagged for review rather than treated as errors.
        """
        return self.orbifold_index == \
            (-1) ** self.dimension * self.dual_orbifold_index


@dataclass
class DualityReport:
    E: tuple
    dual_E: tuple
    orbit_index: int          # r_0 of the index of df over the full G_f
    dual_orbit_index: int     # r_0 on the dual side
    pairs: list

    @property
    def orbit_match(self) -> bool:
        return self.orbit_index == self.dual_orbit_index

    @property
    def all_match(self) -> bool:
        return self.orbit_match and all(p.matches for p in self.pairs)

    @property
    def all_sign_match(self) -> bool:
        return self.orbit_match and all(p.sign_matches for p in self.pairs)

    @property
    def flagged_pairs(self) -> list:
        return [p for p in self.pairs if not p.matches]


def duality_check(f: InvertiblePolynomial) -> DualityReport:
    """Berglund-Huebsch duality consistency: r_0 equality of the df-indices of
    f and its transpose, and r_1 equality across every dual subgroup pair."""
    if abs(f.det) > DUALITY_ORDER_BOUND:
        raise OrderBoundError(
            f"duality check limited to |det E| <= {DUALITY_ORDER_BOUND}")
    ft = transpose(f)
    gf = symmetry_group(f)
    gft = symmetry_group(ft)
    p = pairing_matrix(f, gf, gft)
    for j in range(gft.order):
        if j != gft.group.identity and all(p[i][j] == 0 for i in range(gf.order)):
            raise PairingError(
                "pairing is degenerate: a nontrivial dual element annihilates G_f")
    r0 = r_k(index_df(f, gf), 0)
    r0_dual = r_k(index_df(ft, gft), 0)
    lat = gf.group.lattice()
    dual_lat = gft.group.lattice()

    def side_diag(diag, sub):
        # the full group as its own subgroup needs no rebuilt copy
        if sub.order == diag.order:
            return diag
        return diag.subgroup_diagonal(sub)

    pairs = []
    for i, sub in enumerate(lat.subgroups):
        mem = sorted(sub.members)
        ann = frozenset(j for j in range(gft.order)
                        if all(p[a][j] == 0 for a in mem))
        di = dual_lat.subgroup_index(ann)
        dual_sub = dual_lat.subgroups[di]
        if sub.order * dual_sub.order != gf.order:
            raise PairingError("annihilator order violates |H| |H^T| = |G|")
        v = r_k(index_df(f, side_diag(gf, sub)), 1)
        v_dual = r_k(index_df(ft, side_diag(gft, dual_sub)), 1)
        pairs.append(DualityPair(
            subgroup_label=lat.labels[i], subgroup_order=sub.order,
            dual_label=dual_lat.labels[di], dual_order=dual_sub.order,
            orbifold_index=v, dual_orbifold_index=v_dual,
            dimension=f.n))
    return DualityReport(E=f.E, dual_E=ft.E, orbit_index=r0,
                         dual_orbit_index=r0_dual, pairs=pairs)
