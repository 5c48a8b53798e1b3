"""The Burnside ring B(G) of a finite group.

Elements are integer vectors over the conjugacy classes of subgroups in the
canonical lattice order.  Multiplication goes through the table of marks
(fixed-coset counts): multiply the mark vectors componentwise, then invert
the triangular marks matrix.  Any non-integral coefficient on the way back
is a hard error -- integrality is a theorem, so a violation means a bug or
inconsistent input.
"""

from __future__ import annotations

from .errors import IntegralityError, NotASubgroupError, OrderBoundError
from .groups import FiniteGroup, Subgroup

TUPLE_ENUM_BOUND = 10**8


class BurnsideElement:
    """An element of B(G): one integer coefficient per class [G/H]."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != group.lattice().num_classes:
            raise ValueError("coefficient vector has wrong length")
        self.group = group
        self.coeffs = coeffs

    @classmethod
    def from_dict(cls, group: FiniteGroup, by_class: dict) -> "BurnsideElement":
        out = [0] * group.lattice().num_classes
        for c, a in by_class.items():
            out[c] += a
        return cls(group, out)

    def coeff(self, class_index: int) -> int:
        return self.coeffs[class_index]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other):
        if not (isinstance(other, BurnsideElement)
                and other.group.same_group(self.group)):
            raise ValueError("Burnside elements belong to different groups")

    def __add__(self, other):
        self._check(other)
        return BurnsideElement(self.group,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return BurnsideElement(self.group,
                               [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BurnsideElement(self.group, [-a for a in self.coeffs])

    def __rmul__(self, k):
        if isinstance(k, int):
            return BurnsideElement(self.group, [k * a for a in self.coeffs])
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(self.group, [other * a for a in self.coeffs])
        self._check(other)
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, BurnsideElement)
                and other.group.same_group(self.group)
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.group.fingerprint, self.coeffs))

    def __repr__(self):
        lat = self.group.lattice()
        terms = []
        for c, a in enumerate(self.coeffs):
            if a == 0:
                continue
            label = lat.class_labels[c]
            if a == 1:
                terms.append(f"[G/{label}]")
            elif a == -1:
                terms.append(f"-[G/{label}]")
            else:
                terms.append(f"{a}[G/{label}]")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"B({self.group.fingerprint}): {body}"


def zero(group: FiniteGroup) -> BurnsideElement:
    return BurnsideElement(group, [0] * group.lattice().num_classes)


def one(group: FiniteGroup) -> BurnsideElement:
    """[G/G], the multiplicative identity."""
    lat = group.lattice()
    coeffs = [0] * lat.num_classes
    coeffs[lat.num_classes - 1] = 1
    return BurnsideElement(group, coeffs)


def basis_element(group: FiniteGroup, class_index: int) -> BurnsideElement:
    lat = group.lattice()
    coeffs = [0] * lat.num_classes
    coeffs[class_index] = 1
    return BurnsideElement(group, coeffs)


class TableOfMarks:
    """marks[k][h] = |(G/K)^H| over conjugacy classes in canonical order."""

    def __init__(self, group: FiniteGroup):
        lat = group.lattice()
        nc = lat.num_classes
        n = group.order
        matrix = [[0] * nc for _ in range(nc)]
        if group.is_abelian:
            # every coset of K has isotropy exactly K
            for k in range(nc):
                korder = lat.class_order(k)
                for h in range(nc):
                    if lat.leq[lat.representatives[h]][lat.representatives[k]]:
                        matrix[k][h] = n // korder
        else:
            reps = [sorted(lat.subgroups[lat.representatives[c]].members)
                    for c in range(nc)]
            for k in range(nc):
                kmembers = frozenset(reps[k])
                # left cosets gK, one representative each
                seen = [False] * n
                coset_reps = []
                for g in range(n):
                    if seen[g]:
                        continue
                    coset_reps.append(g)
                    for m in kmembers:
                        seen[group.table[g][m]] = True
                for h in range(nc):
                    hmembers = reps[h]
                    count = 0
                    for g in coset_reps:
                        if all(group.conj(x, g) in kmembers for x in hmembers):
                            count += 1
                    matrix[k][h] = count
        self.group = group
        self.matrix = matrix

    def mark(self, k_class: int, h_class: int) -> int:
        return self.matrix[k_class][h_class]


def table_of_marks(group: FiniteGroup) -> TableOfMarks:
    if group._marks is None:
        group._marks = TableOfMarks(group)
    return group._marks


def marks_vector(b: BurnsideElement) -> tuple:
    """mark(b, [H]) for every class [H], i.e. the fixed-point counts."""
    m = table_of_marks(b.group).matrix
    nc = len(m)
    return tuple(sum(b.coeffs[k] * m[k][h] for k in range(nc))
                 for h in range(nc))


def element_from_marks(group: FiniteGroup, marks) -> BurnsideElement:
    """Invert the triangular table of marks; must land in integers."""
    m = table_of_marks(group).matrix
    nc = len(m)
    out = [0] * nc
    for h in range(nc - 1, -1, -1):
        s = marks[h] - sum(out[k] * m[k][h] for k in range(h + 1, nc))
        d = m[h][h]
        if s % d:
            raise IntegralityError(
                "mark vector is not in the image of the Burnside ring")
        out[h] = s // d
    return BurnsideElement(group, out)


def multiply(b1: BurnsideElement, b2: BurnsideElement) -> BurnsideElement:
    b1._check(b2)
    v1 = marks_vector(b1)
    v2 = marks_vector(b2)
    return element_from_marks(b1.group, [a * b for a, b in zip(v1, v2)])


def cardinality(b: BurnsideElement) -> int:
    """|A|: the underlying number of points; the mark at the trivial subgroup."""
    return marks_vector(b)[0]


def restrict(b: BurnsideElement, sub: Subgroup) -> BurnsideElement:
    """R^G_H: the same G-set viewed as an H-set, over ConjSub(H)."""
    group = b.group
    if sub.parent is not group and not sub.parent.same_group(group):
        raise NotASubgroupError("subgroup belongs to a different group")
    child = sub.as_group()
    child_lat = child.lattice()
    child_of = {p: c for c, p in enumerate(child.parent_index)}
    lat = group.lattice()
    out = [0] * child_lat.num_classes
    hmembers = sorted(sub.members)
    for k_cls, a in enumerate(b.coeffs):
        if a == 0:
            continue
        kmembers = sorted(lat.subgroups[lat.representatives[k_cls]].members)
        # coset rep of each element: min of its coset gK
        rep_of = {}
        for g in range(group.order):
            if g in rep_of:
                continue
            coset = [group.table[g][m] for m in kmembers]
            r = min(coset)
            for x in coset:
                rep_of[x] = r
        done = set()
        for g in range(group.order):
            r = rep_of[g]
            if r in done:
                continue
            orbit_reps = {rep_of[group.table[h][r]] for h in hmembers}
            done |= orbit_reps
            stab = frozenset(h for h in hmembers
                             if rep_of[group.table[h][r]] == r)
            cls = child_lat.class_index_of(frozenset(child_of[x] for x in stab))
            out[cls] += a
    return BurnsideElement(child, out)


def induce(b: BurnsideElement, group: FiniteGroup) -> BurnsideElement:
    """I^G_H: [H/K] -> [G/K]; additive, not multiplicative."""
    child = b.group
    if child is group or child.same_group(group):
        return BurnsideElement(group, b.coeffs)
    if child.parent is None or not (child.parent is group
                                    or child.parent.same_group(group)):
        raise NotASubgroupError("element's group is not a subgroup of the target")
    lat = group.lattice()
    child_lat = child.lattice()
    out = [0] * lat.num_classes
    for c_cls, a in enumerate(b.coeffs):
        if a == 0:
            continue
        kc = child_lat.subgroups[child_lat.representatives[c_cls]].members
        kp = frozenset(child.parent_index[i] for i in kc)
        out[lat.class_index_of(kp)] += a
    return BurnsideElement(group, out)


def commuting_class_counts(group: FiniteGroup, k: int) -> tuple:
    """Number of pairwise-commuting (k+1)-tuples whose generated subgroup lies
    in each conjugacy class.  Cached per group and k."""
    if k in group._tuple_counts:
        return group._tuple_counts[k]
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > 3 or group.order ** (k + 1) > TUPLE_ENUM_BOUND:
        raise OrderBoundError("commuting-tuple enumeration out of bounds")
    lat = group.lattice()
    counts = [0] * lat.num_classes
    table = group.table
    all_elems = list(group.elements())
    abelian = group.is_abelian

    if k == 0:
        for g in all_elems:
            counts[lat.class_index_of(group.closure([g]))] += 1
    elif k == 1:
        # <g,h> for commuting g,h is the product set <g><h>; memoize joins
        # over the pair of cyclic subgroups
        cyc = [lat.subgroup_index(group.closure([g])) for g in all_elems]
        join_cls = {}
        for g in all_elems:
            cg = cyc[g]
            row = table[g]
            partners = all_elems if abelian else \
                [h for h in all_elems if row[h] == table[h][g]]
            for h in partners:
                key = (cg, cyc[h]) if cg <= cyc[h] else (cyc[h], cg)
                c = join_cls.get(key)
                if c is None:
                    a = lat.subgroups[key[0]].members
                    b = lat.subgroups[key[1]].members
                    prod = frozenset(table[x][y] for x in a for y in b)
                    c = lat.class_index_of(prod)
                    join_cls[key] = c
                counts[c] += 1
    else:
        cls_cache = {}

        def cls_of(gens: frozenset) -> int:
            c = cls_cache.get(gens)
            if c is None:
                c = lat.class_index_of(group.closure(gens))
                cls_cache[gens] = c
            return c

        def rec(depth, chosen, cands):
            if depth == k + 1:
                counts[cls_of(frozenset(chosen))] += 1
                return
            for g in cands:
                row = table[g]
                rec(depth + 1, chosen + [g],
                    cands if abelian else
                    [h for h in cands if row[h] == table[h][g]])

        rec(0, [], all_elems)
    result = tuple(counts)
    group._tuple_counts[k] = result
    return result


def r_k(b: BurnsideElement, k: int) -> int:
    """The reduction r_G^(k): averaged fixed-point count over commuting
    (k+1)-tuples.  r_0 counts orbits; r_1 is the orbifold reduction."""
    counts = commuting_class_counts(b.group, k)
    mv = marks_vector(b)
    total = sum(c * v for c, v in zip(counts, mv))
    if total % b.group.order:
        raise IntegralityError("higher-order reduction is not an integer")
    return total // b.group.order


class ClassFunction:
    """A function on conjugacy classes of group elements."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        values = tuple(values)
        if len(values) != len(group.element_conjugacy_classes()):
            raise ValueError("value vector has wrong length")
        self.group = group
        self.values = values

    def at_element(self, g: int):
        for cls, v in zip(self.group.element_conjugacy_classes(), self.values):
            if g in cls:
                return v
        raise ValueError("element out of range")

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and other.group.same_group(self.group)
                and other.values == self.values)

    def __repr__(self):
        return f"ClassFunction({self.values})"


def permutation_character(b: BurnsideElement) -> ClassFunction:
    """Trace of the permutation action: value at g is the number of points of
    the virtual G-set fixed by g."""
    group = b.group
    lat = group.lattice()
    mv = marks_vector(b)
    values = []
    for cls in group.element_conjugacy_classes():
        g = cls[0]
        values.append(mv[lat.class_index_of(group.closure([g]))])
    return ClassFunction(group, values)
