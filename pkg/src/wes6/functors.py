"""Functorial constructions on finitely generated abelian groups.

Covers reduction mod 2 and its induced maps, the 2-torsion subgroup, the
exterior square (which computes second integral group homology for abelian
groups), and Ext^1 with pullback/pushforward plus the concrete extension
group attached to a class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import ShapeMismatch
from .groups import (
    Element,
    FgAbGroup,
    Homomorphism,
    ModSolver,
    presentation,
    solve_mod,
)
from .matrices import IntMatrix


def _mod2_survivors(group: FgAbGroup):
    """Indices of canonical generators that survive in A/2A."""
    return [i for i, d in enumerate(group.gen_orders()) if d == 0 or d % 2 == 0]


def tensor_z2(group: FgAbGroup):
    """A/2A together with the reduction map A -> A/2A.

    One Z2 summand per even invariant factor and per free generator, in the
    source's canonical generator order.
    """
    survivors = _mod2_survivors(group)
    target = FgAbGroup(0, (2,) * len(survivors))
    rows = [
        [1 if j == idx else 0 for j in range(group.n_gens)] for idx in survivors
    ]
    proj = Homomorphism(group, target, IntMatrix(len(survivors), group.n_gens, rows), check=False)
    return target, proj


def tensor_z2_map(f: Homomorphism) -> Homomorphism:
    """The induced map on mod-2 reductions; functorial."""
    src, _ = tensor_z2(f.source)
    tgt, _ = tensor_z2(f.target)
    rows_idx = _mod2_survivors(f.target)
    cols_idx = _mod2_survivors(f.source)
    data = [[f.matrix.data[i][j] % 2 for j in cols_idx] for i in rows_idx]
    return Homomorphism(src, tgt, IntMatrix(len(rows_idx), len(cols_idx), data), check=False)


def tor_z2(group: FgAbGroup) -> FgAbGroup:
    """The 2-torsion subgroup A[2]: one Z2 per even invariant factor."""
    evens = sum(1 for d in group.torsion if d % 2 == 0)
    return FgAbGroup(0, (2,) * evens)


def wedge_pairs(group: FgAbGroup):
    """Generator index pairs (i, j), i < j, of the exterior square."""
    n = group.n_gens
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def lambda2(group: FgAbGroup) -> FgAbGroup:
    """Exterior square, i.e. second integral homology of the abelian group.

    Closed form from the canonical decomposition: the wedge of generators i
    and j has order gcd of their orders, and the pair order (i, j), i < j,
    lexicographic, already lists torsion factors in a divisibility chain
    before the free wedges.
    """
    torsion = []
    free = 0
    orders = group.gen_orders()
    for i, j in wedge_pairs(group):
        di, dj = orders[i], orders[j]
        if di == 0 and dj == 0:
            free += 1
        elif di == 0 or dj == 0:
            torsion.append(di or dj)
        else:
            torsion.append(gcd(di, dj))
    return FgAbGroup(free, tuple(torsion))


def h2_integral(group: FgAbGroup) -> FgAbGroup:
    """Alias: H_2 of an abelian group with integer coefficients."""
    return lambda2(group)


def lambda2_map(f: Homomorphism) -> Homomorphism:
    """Induced map on exterior squares: the matrix of 2x2 minors."""
    src = lambda2(f.source)
    tgt = lambda2(f.target)
    src_pairs = wedge_pairs(f.source)
    tgt_pairs = wedge_pairs(f.target)
    m = f.matrix.data
    data = [
        [m[k][i] * m[l][j] - m[l][i] * m[k][j] for (i, j) in src_pairs]
        for (k, l) in tgt_pairs
    ]
    return Homomorphism(src, tgt, IntMatrix(len(tgt_pairs), len(src_pairs), data), check=False)


def h2_integral_map(f: Homomorphism) -> Homomorphism:
    return lambda2_map(f)


def _quotient_mod_d(c: FgAbGroup, d: int):
    """Cyclic orders of C/dC, smallest first."""
    factors = [g for g in (gcd(e, d) for e in c.torsion) if g >= 2]
    factors.extend([d] * c.rank)
    return sorted(factors)


def ext_group(a: FgAbGroup, c: FgAbGroup) -> FgAbGroup:
    """Ext^1(A, C) = direct sum of C/dC over A's torsion factors d."""
    cyclic = []
    for d in a.torsion:
        cyclic.extend(_quotient_mod_d(c, d))
    n = len(cyclic)
    group, _, _ = presentation(n, IntMatrix.diagonal(n, n, cyclic))
    return group


@dataclass(frozen=True)
class ExtClass:
    """An element of Ext^1(A, C) in canonical coordinates.

    One Element of C per torsion invariant factor d_i of A, interpreted
    modulo d_i * C.  Free factors of A contribute nothing.
    """

    A: FgAbGroup
    C: FgAbGroup
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != self.A.n_torsion:
            raise ShapeMismatch(
                f"need {self.A.n_torsion} coordinates, got {len(coords)}"
            )
        for el in coords:
            if not isinstance(el, Element) or el.group != self.C:
                raise ShapeMismatch("coordinates must be elements of C")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, a: FgAbGroup, c: FgAbGroup) -> "ExtClass":
        return cls(a, c, tuple(c.zero() for _ in a.torsion))

    @classmethod
    def from_coords(cls, a: FgAbGroup, c: FgAbGroup, vectors) -> "ExtClass":
        return cls(a, c, tuple(c.element(v) for v in vectors))

    def is_zero(self) -> bool:
        return self == ExtClass.zero(self.A, self.C)

    def __eq__(self, other):
        """Componentwise equality modulo d_i * C, decided by an SNF solve."""
        if not isinstance(other, ExtClass):
            return NotImplemented
        if self.A != other.A or self.C != other.C:
            return False
        n = self.C.n_gens
        for d, x, y in zip(self.A.torsion, self.coords, other.coords):
            diff = (x - y).coords
            scaled = IntMatrix.identity(n).scale(d)
            if solve_mod(scaled, self.C, diff) is None:
                return False
        return True

    def __hash__(self):
        # Classes that differ as raw coordinates may still be equal, so only
        # the ambient data participates in the hash.
        return hash((self.A, self.C))


def ext_classes(a: FgAbGroup, c: FgAbGroup):
    """One representative per class of Ext^1(A, C); finite C only."""
    if c.rank:
        raise ValueError("class enumeration needs finite C")
    per_factor = []
    for d in a.torsion:
        seen = []
        for el in c.elements():
            if all(not ExtClass(FgAbGroup(0, (d,)), c, (el,)) == ExtClass(FgAbGroup(0, (d,)), c, (s,)) for s in seen):
                seen.append(el)
        per_factor.append(seen)
    for combo in itertools.product(*per_factor):
        yield ExtClass(a, c, combo)


def ext_pushforward(g: Homomorphism, e: ExtClass) -> ExtClass:
    """Apply g: C -> C' to each coordinate."""
    if g.source != e.C:
        raise ShapeMismatch("pushforward map must start at the class's C")
    return ExtClass(e.A, g.target, tuple(g(x) for x in e.coords))


def ext_pullback(f: Homomorphism, e: ExtClass) -> ExtClass:
    """Pull back along f: A' -> A via the canonical diagonal resolutions.

    f lifts to a chain map between the resolutions of A' and A; the pulled
    back cocycle is the input cocycle precomposed with the lifted relation
    map.  The result does not depend on the lift choice.
    """
    if f.target != e.A:
        raise ShapeMismatch("pullback map must land in the class's A")
    a, a2 = e.A, f.source
    # Lift on relation level: column j of the chain lift scaled from the
    # diagonal resolutions; entries d'_j * M[i][j] / d_i.
    coords = []
    for j, dj in enumerate(a2.torsion):
        acc = e.C.zero()
        for i, di in enumerate(a.torsion):
            num = dj * f.matrix.data[i][j]
            assert num % di == 0, "well-defined map always lifts"
            acc = acc + e.coords[i].scale(num // di)
        coords.append(acc)
    return ExtClass(a2, e.C, tuple(coords))


def extension_group_from_class(e: ExtClass):
    """The middle group of the extension encoded by a class.

    Presented by C's generators plus lifts of A's generators, with the sign
    convention d_i * (lift of a_i) = +e_i.  Returns (G, inj, surj) with
    inj: C -> G injective, surj: G -> A surjective, ker surj = im inj.
    """
    a, c = e.A, e.C
    nc, na = c.n_gens, a.n_gens
    n = nc + na
    cols = []
    for j, d in enumerate(c.torsion):
        col = [0] * n
        col[j] = d
        cols.append(col)
    for j, d in enumerate(a.torsion):
        col = [-x for x in e.coords[j].coords] + [0] * na
        col[nc + j] = d
        cols.append(col)
    rel = IntMatrix(n, len(cols), [[col[i] for col in cols] for i in range(n)])
    group, proj, lift = presentation(n, rel)
    inj = Homomorphism(c, group, proj.take_cols(range(nc)), check=False)
    # Quotient map on the ambient generators: kill C, send lifts to A's gens.
    q_ambient = IntMatrix(
        na, n, [[1 if j == nc + i else 0 for j in range(n)] for i in range(na)]
    )
    surj = Homomorphism(group, a, q_ambient @ lift, check=False)
    return group, inj, surj


def classify_extension(group, inj: Homomorphism, surj: Homomorphism) -> ExtClass:
    """Recover the class of an extension C -> G -> A from its maps.

    Lift each torsion generator of A through surj, multiply by its order,
    and express the result through inj; independent of the lift choice
    modulo d_i * C.
    """
    a, c = surj.target, inj.source
    surj_solver = ModSolver(surj.matrix, a)
    inj_solver = ModSolver(inj.matrix, group)
    coords = []
    for i, d in enumerate(a.torsion):
        e_i = tuple(1 if k == i else 0 for k in range(a.n_gens))
        lift = surj_solver.solve(e_i)
        assert lift is not None, "surjection must hit every generator"
        dg = Element(group, tuple(d * x for x in lift))
        back = inj_solver.solve(dg.coords)
        assert back is not None, "d * lift lies in the image of inj"
        coords.append(Element(c, back))
    return ExtClass(a, c, tuple(coords))
