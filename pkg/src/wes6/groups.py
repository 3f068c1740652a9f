"""Finitely generated abelian groups in invariant-factor form.

Canonical generator order is a frozen contract: torsion generators first
(invariant factors ascending in the divisibility chain), then free
generators.  Every matrix in the package is interpreted against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod

from .errors import (
    BudgetExceeded,
    NotAutomorphism,
    NotWellDefined,
    ShapeMismatch,
    UnsupportedRank,
)
from .matrices import IntMatrix, snf, solve_exact, unimodular_inverse


@dataclass(frozen=True)
class FgAbGroup:
    """Z^rank plus cyclic torsion Z_{d1} + ... + Z_{dt} with d1 | d2 | ..."""

    rank: int
    torsion: tuple

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"broken divisibility chain: {a} does not divide {b}")

    @property
    def n_gens(self) -> int:
        return len(self.torsion) + self.rank

    @property
    def n_torsion(self) -> int:
        return len(self.torsion)

    def gen_orders(self):
        """Order of each canonical generator; 0 marks an infinite one."""
        return tuple(self.torsion) + (0,) * self.rank

    def order(self):
        """Group order, or None when infinite."""
        return None if self.rank else prod(self.torsion, start=1)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def relation_matrix(self) -> IntMatrix:
        """Columns d_i * e_i presenting the group on its own generators."""
        n, t = self.n_gens, self.n_torsion
        return IntMatrix(n, t, [[self.torsion[j] if i == j else 0 for j in range(t)] for i in range(n)])

    def reduce(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.n_gens:
            raise ShapeMismatch("coordinate length mismatch")
        return tuple(
            c % d if d else c for c, d in zip(coords, self.gen_orders())
        )

    def element(self, coords) -> "Element":
        return Element(self, self.reduce(coords))

    def zero(self) -> "Element":
        return Element(self, (0,) * self.n_gens)

    def elements(self):
        """All elements; only for finite groups."""
        if self.rank:
            raise ValueError("infinite group")
        for coords in itertools.product(*(range(d) for d in self.torsion)):
            yield Element(self, coords)

    def __str__(self):
        parts = [f"Z{d}" for d in self.torsion]
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


TRIVIAL = FgAbGroup(0, ())


@dataclass(frozen=True)
class Element:
    group: FgAbGroup
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def __add__(self, other: "Element") -> "Element":
        if self.group != other.group:
            raise ShapeMismatch("elements of different groups")
        return Element(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        if self.group != other.group:
            raise ShapeMismatch("elements of different groups")
        return Element(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.group, tuple(-a for a in self.coords))

    def scale(self, c: int) -> "Element":
        return Element(self.group, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


class Homomorphism:
    """A map between groups, stored as a matrix in canonical coordinates.

    Columns are indexed by source generators, rows by target generators.
    Torsion rows are kept reduced modulo the target invariant factor.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix, check: bool = True):
        if matrix.rows != target.n_gens or matrix.cols != source.n_gens:
            raise ShapeMismatch(
                f"matrix {matrix.rows}x{matrix.cols} does not map "
                f"{source.n_gens} generators to {target.n_gens}"
            )
        t_orders = target.gen_orders()
        reduced = [
            [x % d if d else x for x in row] for row, d in zip(matrix.data, t_orders)
        ]
        matrix = IntMatrix(matrix.rows, matrix.cols, reduced)
        if check:
            _check_well_defined(source, target, matrix)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("Homomorphism is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Homomorphism)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"Homomorphism({self.source} -> {self.target}, {list(map(list, self.matrix.data))})"

    def __call__(self, x: Element) -> Element:
        if x.group != self.source:
            raise ShapeMismatch("element not in the source group")
        return Element(self.target, self.matrix.apply(x.coords))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    @classmethod
    def identity(cls, g: FgAbGroup) -> "Homomorphism":
        return cls(g, g, IntMatrix.identity(g.n_gens), check=False)

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> "Homomorphism":
        return cls(source, target, IntMatrix.zero(target.n_gens, source.n_gens), check=False)


def _check_well_defined(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix):
    t_orders = target.gen_orders()
    for j, dj in enumerate(source.torsion):
        for i, ei in enumerate(t_orders):
            x = matrix.data[i][j]
            if ei:
                if (dj * x) % ei:
                    raise NotWellDefined(
                        f"column {j}: order-{dj} generator maps to an element "
                        f"whose row-{i} entry {x} is not killed mod {ei}"
                    )
            elif x:
                raise NotWellDefined(
                    f"column {j}: torsion generator has nonzero free coordinate {x}"
                )


def compose(g: Homomorphism, f: Homomorphism) -> Homomorphism:
    """g after f."""
    if f.target != g.source:
        raise ShapeMismatch("compose: target of f must equal source of g")
    return Homomorphism(f.source, g.target, g.matrix @ f.matrix, check=False)


def presentation(n_gens: int, relations: IntMatrix):
    """Canonicalize Z^n_gens / column-span(relations).

    Returns (G, proj, lift): proj maps ambient coordinates to canonical
    coordinates of G, lift is an integer section with proj @ lift == I
    (before torsion reduction of proj).
    """
    if relations.rows != n_gens:
        raise ShapeMismatch("relations must have one row per ambient generator")
    res = snf(relations)
    diag = res.diagonal
    rank_rel = res.rank
    torsion_idx = [i for i in range(rank_rel) if diag[i] >= 2]
    free_idx = list(range(rank_rel, n_gens))
    kept = torsion_idx + free_idx
    group = FgAbGroup(len(free_idx), tuple(diag[i] for i in torsion_idx))
    proj_full = res.U.take_rows(kept)
    orders = group.gen_orders()
    proj = IntMatrix(
        proj_full.rows,
        proj_full.cols,
        [[x % d if d else x for x in row] for row, d in zip(proj_full.data, orders)],
    )
    lift = unimodular_inverse(res.U).take_cols(kept)
    return group, proj, lift


def group_from_relations(relations: IntMatrix):
    """Canonical form of Z^rows / column-span(relations) plus the projection."""
    ambient = FgAbGroup(relations.rows, ())
    group, proj, _ = presentation(relations.rows, relations)
    return group, Homomorphism(ambient, group, proj, check=False)


class ModSolver:
    """Solve M x == b modulo the relations of a group, for many b."""

    def __init__(self, matrix: IntMatrix, modulus: FgAbGroup):
        if matrix.rows != modulus.n_gens:
            raise ShapeMismatch("solver shape mismatch")
        self._n = matrix.cols
        self._res = snf(matrix.hstack(modulus.relation_matrix()))

    def solve(self, b):
        res = self._res
        c = res.U.apply(tuple(b))
        diag = res.diagonal
        w = [0] * res.V.rows
        for i in range(res.U.rows):
            d = diag[i] if i < len(diag) else 0
            if d:
                if c[i] % d:
                    return None
                w[i] = c[i] // d
            elif c[i]:
                return None
        full = res.V.apply(tuple(w))
        return full[: self._n]


def solve_mod(matrix: IntMatrix, modulus: FgAbGroup, b):
    """One solution of matrix @ x == b in the group `modulus`, or None."""
    return ModSolver(matrix, modulus).solve(b)


def is_automorphism(f: Homomorphism) -> bool:
    """True iff f is bijective; decided by an SNF solve, no enumeration.

    A surjective endomorphism of a finitely generated abelian group is
    automatically injective, so a right inverse certifies bijectivity.
    """
    if f.source != f.target:
        raise ShapeMismatch("is_automorphism requires an endomorphism")
    return _right_inverse_columns(f) is not None


def _right_inverse_columns(f: Homomorphism):
    n = f.target.n_gens
    solver = ModSolver(f.matrix, f.target)
    cols = []
    for i in range(n):
        e = tuple(1 if k == i else 0 for k in range(n))
        x = solver.solve(e)
        if x is None:
            return None
        cols.append(x)
    return cols


def inverse_hom(f: Homomorphism) -> Homomorphism:
    cols = _right_inverse_columns(f)
    if cols is None:
        raise NotAutomorphism("homomorphism is not invertible")
    n = f.target.n_gens
    matrix = IntMatrix(n, n, [[cols[j][i] for j in range(n)] for i in range(n)])
    return Homomorphism(f.target, f.source, matrix)


def subgroup_from_columns(ambient_group: FgAbGroup, gen_cols: IntMatrix):
    """The subgroup generated by the given columns, with its inclusion."""
    n = ambient_group.n_gens
    if gen_cols.rows != n:
        raise ShapeMismatch("generator columns must live in the ambient group")
    w = gen_cols.hstack(ambient_group.relation_matrix())
    res = snf(w)
    r = res.rank
    uinv = unimodular_inverse(res.U)
    basis = IntMatrix(
        n, r, [[uinv.data[i][k] * res.diagonal[k] for k in range(r)] for i in range(n)]
    )
    # Relations of the subgroup: ambient relations written in the basis.
    rel_cols = []
    for j in range(ambient_group.n_torsion):
        col = ambient_group.relation_matrix().column_vec(j)
        x = solve_exact(basis, col)
        assert x is not None, "ambient relations lie in the lattice"
        rel_cols.append(x)
    rel = IntMatrix(r, len(rel_cols), [[c[i] for c in rel_cols] for i in range(r)])
    sub, _, lift = presentation(r, rel)
    incl = Homomorphism(sub, ambient_group, basis @ lift)
    return sub, incl


def kernel(f: Homomorphism):
    """Kernel subgroup of the source, with its inclusion map."""
    big = f.matrix.hstack(f.target.relation_matrix())
    res = snf(big)
    null = res.V.take_cols(range(res.rank, big.cols))
    in_source = null.take_rows(range(f.source.n_gens))
    return subgroup_from_columns(f.source, in_source)


def cokernel_data(f: Homomorphism):
    """(C, proj, section): target/image with projection and an integer section.

    The section maps canonical generators of C to representatives in the
    target's ambient coordinates; proj @ section == identity.
    """
    n = f.target.n_gens
    rels = f.matrix.hstack(f.target.relation_matrix())
    group, proj, lift = presentation(n, rels)
    return group, Homomorphism(f.target, group, proj, check=False), lift


def cokernel(f: Homomorphism):
    group, proj, _ = cokernel_data(f)
    return group, proj


def image(f: Homomorphism):
    """Image subgroup of the target, with its inclusion."""
    return subgroup_from_columns(f.target, f.matrix)


def _column_candidates(group: FgAbGroup, col_order: int, free_signs: bool):
    """Coordinate choices for the image of one generator.

    col_order == 0 marks a free source generator: its image is +/- the free
    generator plus an arbitrary torsion shift.
    """
    choices = []
    for d in group.torsion:
        if col_order:
            step = d // gcd(d, col_order)
            choices.append(range(0, d, step))
        else:
            choices.append(range(d))
    if group.rank:
        choices.append((1, -1) if free_signs and not col_order else ((0,) if col_order else (1, -1)))
    return choices


def aut_group(group: FgAbGroup, budget: int = 10**6):
    """All automorphisms, in lexicographic order of their matrix entries.

    Complete for free rank <= 1.  Candidates are generator images subject to
    order-divisibility, then filtered through is_automorphism.
    """
    if group.rank >= 2:
        raise UnsupportedRank(
            f"free rank {group.rank}: GL_r(Z) is infinite for r >= 2"
        )
    n = group.n_gens
    per_column = []
    total = 1
    for order in group.gen_orders():
        choices = list(itertools.product(*_column_candidates(group, order, True)))
        per_column.append(choices)
        total *= len(choices)
    if total > budget:
        raise BudgetExceeded(
            f"{total} automorphism candidates for {group} exceed budget {budget}"
        )
    result = []
    for cols in itertools.product(*per_column):
        matrix = IntMatrix(n, n, [[cols[j][i] for j in range(n)] for i in range(n)])
        f = Homomorphism(group, group, matrix, check=False)
        if is_automorphism(f):
            result.append(f)
    result.sort(key=lambda h: h.matrix.data)
    return result


@dataclass(frozen=True)
class DirectSum:
    """A canonical direct sum with the maps tying it to its parts.

    from_parts maps concatenated part coordinates to canonical coordinates;
    to_parts is an integer section of it.
    """

    group: FgAbGroup
    parts: tuple
    injections: tuple
    projections: tuple
    from_parts: IntMatrix
    to_parts: IntMatrix

    @property
    def part_gen_count(self) -> int:
        return sum(p.n_gens for p in self.parts)


def direct_sum(parts) -> DirectSum:
    """Canonicalize a direct sum while tracking the part coordinates.

    The parts' invariant factors need not interleave into one chain (even
    factors followed by odd ones, say), so the canonical group may merge
    cyclic summands; the recorded maps translate between the two bases.
    """
    parts = tuple(parts)
    n = sum(p.n_gens for p in parts)
    rel_cols = []
    offset = 0
    for p in parts:
        for j, d in enumerate(p.torsion):
            col = [0] * n
            col[offset + j] = d
            rel_cols.append(col)
        offset += p.n_gens
    rel = IntMatrix(n, len(rel_cols), [[c[i] for c in rel_cols] for i in range(n)])
    group, proj, lift = presentation(n, rel)
    injections = []
    projections = []
    offset = 0
    for p in parts:
        block = range(offset, offset + p.n_gens)
        injections.append(Homomorphism(p, group, proj.take_cols(block), check=False))
        projections.append(Homomorphism(group, p, lift.take_rows(block), check=False))
        offset += p.n_gens
    return DirectSum(group, parts, tuple(injections), tuple(projections), proj, lift)
