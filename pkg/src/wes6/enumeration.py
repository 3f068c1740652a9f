"""Enumeration of the full group of compatible graded automorphisms,
structure identification, and a brute-force oracle that re-decides
membership on the concretely constructed middle group.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from math import gcd

from .errors import BudgetExceeded, UnsupportedRank
from .functors import extension_group_from_class
from .groups import Homomorphism, aut_group, compose
from .wes import (
    GammaTuple,
    WesData,
    coker_b6,
    gamma_of,
    is_gamma_automorphism,
)


def _aut_lists(w: WesData, budget: int):
    """Automorphism lists for H3..H6, with the offending factor on error."""
    out = {}
    for name in ("H3", "H4", "H5", "H6"):
        group = getattr(w, name)
        try:
            out[name] = aut_group(group, budget)
        except (UnsupportedRank, BudgetExceeded) as exc:
            raise type(exc)(f"{name} = {group}: {exc}") from None
    return out


def all_tuples(w: WesData, budget: int = 10**6):
    """The full automorphism product, in deterministic order."""
    auts = _aut_lists(w, budget)
    for f6, f5, f4, f3 in itertools.product(
        auts["H6"], auts["H5"], auts["H4"], auts["H3"]
    ):
        yield GammaTuple(f3, f4, f5, f6)


def abelian_structure_from_orders(orders) -> tuple:
    """Invariant factors of a finite abelian group from its element orders.

    The multiset of element orders determines the isomorphism type; search
    the divisibility chains with matching order-dividing counts.
    """
    orders = sorted(orders)
    n = len(orders)
    if n == 1:
        return ()
    divisors = sorted({d for o in orders for d in range(1, o + 1) if o % d == 0})
    observed = {m: sum(1 for o in orders if m % o == 0) for m in divisors}

    def chains(remaining, minimum):
        if remaining == 1:
            yield ()
            return
        for d in range(max(2, minimum), remaining + 1):
            if remaining % d == 0 and d % minimum == 0:
                for rest in chains(remaining // d, d):
                    yield (d,) + rest

    def count_dividing(chain, m):
        out = 1
        for d in chain:
            out *= gcd(d, m)
        return out

    for chain in chains(n, 1):
        if all(observed[m] == count_dividing(chain, m) for m in divisors):
            return chain
    raise ValueError("element orders do not match any abelian group")


@dataclass(frozen=True)
class GroupTable:
    """The enumerated group of accepted tuples, with structure data."""

    elements: tuple
    order: int
    is_abelian: bool
    structure: tuple | None
    structure_label: str
    generators: tuple
    table_hash: str
    f6_f5_pairs: tuple
    f6_f5_structure: tuple | None
    notes: tuple = field(default_factory=tuple)


def _greedy_generators(elements, identity):
    """Minimal generating sublist, greedily in element order."""
    index = set(elements)
    span = {identity}
    gens = []
    for el in elements:
        if el in span:
            continue
        gens.append(el)
        frontier = set(span)
        frontier.add(el)
        while True:
            new = {a.compose(b) for a in frontier for b in frontier} - frontier
            if not new:
                break
            frontier |= new
        span = frontier
        if len(span) == len(index):
            break
    return tuple(gens)


def _structure_of(elements, compose_fn, identity):
    """(is_abelian, invariant factors or None, label) for a finite table."""
    abelian = all(
        compose_fn(a, b) == compose_fn(b, a)
        for i, a in enumerate(elements)
        for b in elements[i + 1 :]
    )
    if not abelian:
        return False, None, f"nonabelian of order {len(elements)}"
    orders = []
    for el in elements:
        power, n = el, 1
        while power != identity:
            power = compose_fn(power, el)
            n += 1
        orders.append(n)
    inv = abelian_structure_from_orders(orders)
    label = " + ".join(f"Z{d}" for d in inv) if inv else "0"
    return True, inv, label


def gamma_s_group(w: WesData, budget: int = 10**6) -> GroupTable:
    """Filter the automorphism product through the membership criterion.

    Element order is deterministic (lexicographic in the product of the
    sorted automorphism lists), so the output is reproducible.
    """
    accepted = [t for t in all_tuples(w, budget) if is_gamma_automorphism(w, t)[0]]
    elements = tuple(accepted)
    identity = GammaTuple(
        Homomorphism.identity(w.H3),
        Homomorphism.identity(w.H4),
        Homomorphism.identity(w.H5),
        Homomorphism.identity(w.H6),
    )
    is_abelian, structure, label = _structure_of(
        elements, lambda a, b: a.compose(b), identity
    )
    generators = _greedy_generators(elements, identity)
    index = {el: i for i, el in enumerate(elements)}
    digest = hashlib.sha256()
    for a in elements:
        for b in elements:
            digest.update(index[a.compose(b)].to_bytes(8, "little"))
    notes = []

    pairs = []
    for t in elements:
        key = (t.f6, t.f5)
        if key not in pairs:
            pairs.append(key)
    pair_identity = (identity.f6, identity.f5)

    def pair_compose(p, q):
        return (compose(p[0], q[0]), compose(p[1], q[1]))

    _, pair_structure, pair_label = _structure_of(
        tuple(pairs), pair_compose, pair_identity
    )
    if w.H5.rank == 0 and w.H5.n_torsion == 1 and elements:
        m = w.H5.torsion[0]
        f5_units = sorted({t.f5.matrix.data[0][0] for t in elements})
        notes.append(
            f"f5 factor is multiplication by units {f5_units} mod {m}; "
            f"the (f6, f5) projection has structure {pair_label} "
            "computed from its multiplication table"
        )
        if m == 8 and f5_units == [1, 3, 5, 7]:
            notes.append(
                "units mod 8 have exponent 2 (Klein four group), "
                "not cyclic of order 4; a 'Z2 + Z4' label for the "
                "(f6, f5) projection would be incorrect"
            )
    return GroupTable(
        elements=elements,
        order=len(elements),
        is_abelian=is_abelian,
        structure=structure,
        structure_label=label,
        generators=generators,
        table_hash=digest.hexdigest(),
        f6_f5_pairs=tuple(pairs),
        f6_f5_structure=pair_structure,
        notes=tuple(notes),
    )


def _middle_data(w: WesData):
    """pi5 with its bounding maps and the Gamma5 -> pi5 arrow."""
    coker, proj = coker_b6(w)
    group, inj, surj = extension_group_from_class(w.pi5_class)
    middle = compose(inj, proj)  # Gamma5 -> pi5, factoring through coker b6
    return group, inj, surj, middle


def oracle_membership(w: WesData, t: GammaTuple, budget: int = 10**6) -> bool:
    """Existential check on the constructed middle group.

    Accept iff the b6 square commutes and some automorphism phi of pi5
    closes both remaining squares of the ladder.
    """
    gamma = gamma_of(w, t.f3, t.f4)
    if compose(gamma, w.b6) != compose(w.b6, t.f6):
        return False
    group, _, surj, middle = _middle_data(w)
    left_mid = compose(middle, gamma)
    right_h5 = compose(t.f5, surj)
    for phi in aut_group(group, budget):
        if compose(phi, middle) == left_mid and compose(surj, phi) == right_h5:
            return True
    return False


@dataclass(frozen=True)
class OracleReport:
    total: int
    accepted: int
    disagreements: tuple

    @property
    def agreed(self) -> bool:
        return not self.disagreements


def oracle_compare(w: WesData, budget: int = 10**6) -> OracleReport:
    """Run both membership deciders on every tuple of the product."""
    total = accepted = 0
    disagreements = []
    group, _, surj, middle = _middle_data(w)
    phis = aut_group(group, budget)
    for t in all_tuples(w, budget):
        total += 1
        fast = is_gamma_automorphism(w, t)[0]
        gamma = gamma_of(w, t.f3, t.f4)
        if compose(gamma, w.b6) != compose(w.b6, t.f6):
            slow = False
        else:
            left_mid = compose(middle, gamma)
            right_h5 = compose(t.f5, surj)
            slow = any(
                compose(phi, middle) == left_mid and compose(surj, phi) == right_h5
                for phi in phis
            )
        if fast:
            accepted += 1
        if fast != slow:
            disagreements.append(t)
    return OracleReport(total, accepted, tuple(disagreements))
