"""Data model for the degree-5 Whitehead sequence of a 2-connected,
6-dimensional complex, and the membership test for graded automorphisms
compatible with it.

The sequence is determined by H3..H6, the boundary map b6 into
Gamma5 = (H4 tensor Z2) + Lambda^2 H3, and the extension class of pi5 over
(H5, coker b6).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    HypothesisViolation,
    NotAChainComplex,
    NotAutomorphism,
    NotInducible,
    ShapeMismatch,
)
from .functors import (
    ExtClass,
    ext_group,
    ext_pullback,
    ext_pushforward,
    lambda2,
    lambda2_map,
    tensor_z2,
    tensor_z2_map,
)
from .groups import (
    DirectSum,
    FgAbGroup,
    Homomorphism,
    cokernel_data,
    compose,
    direct_sum,
    group_from_relations,
    is_automorphism,
    solve_mod,
)
from .matrices import IntMatrix, kernel_basis, snf, solve_exact


def h3_hypothesis_ok(h3: FgAbGroup) -> bool:
    """H3 tensor Z2 must vanish: rank 0 and odd invariant factors only."""
    return h3.rank == 0 and all(d % 2 for d in h3.torsion)


def gamma5_decomposition(h3: FgAbGroup, h4: FgAbGroup) -> DirectSum:
    """Canonical Gamma5 with the frozen part order: tensor part, then wedges."""
    if not h3_hypothesis_ok(h3):
        raise HypothesisViolation(f"H3 = {h3} has nonzero mod-2 reduction")
    tensor_part, _ = tensor_z2(h4)
    wedge_part = lambda2(h3)
    return direct_sum((tensor_part, wedge_part))


def gamma5(h3: FgAbGroup, h4: FgAbGroup) -> FgAbGroup:
    """(H4 tensor Z2) + Lambda^2 H3 in canonical form."""
    return gamma5_decomposition(h3, h4).group


@dataclass(frozen=True)
class WesData:
    """Input data: homology groups, b6, and the class of pi5.

    b6 maps H6 into the canonical Gamma5 of (H3, H4); the class lives in
    Ext^1(H5, coker b6).  Construction is permissive: use validate() to
    check the invariants.
    """

    H3: FgAbGroup
    H4: FgAbGroup
    H5: FgAbGroup
    H6: FgAbGroup
    b6: Homomorphism
    pi5_class: ExtClass


@dataclass(frozen=True)
class GammaTuple:
    """One candidate graded automorphism (f3, f4, f5, f6)."""

    f3: Homomorphism
    f4: Homomorphism
    f5: Homomorphism
    f6: Homomorphism

    def compose(self, other: "GammaTuple") -> "GammaTuple":
        return GammaTuple(
            compose(self.f3, other.f3),
            compose(self.f4, other.f4),
            compose(self.f5, other.f5),
            compose(self.f6, other.f6),
        )


@lru_cache(maxsize=256)
def _context(w: WesData):
    decomp = gamma5_decomposition(w.H3, w.H4)
    coker, proj, section = cokernel_data(w.b6)
    return decomp, coker, proj, section


def coker_b6(w: WesData):
    """(coker b6, projection from Gamma5)."""
    _, coker, proj, _ = _context(w)
    return coker, proj


def build_wes_data(h3, h4, h5, h6, b6_part_rows, pi5_vectors) -> WesData:
    """Assemble WesData from raw coordinates.

    b6_part_rows is the b6 matrix over the Gamma5 part generators (tensor
    block first, then wedge block); pi5_vectors gives one coker-b6
    coordinate vector per torsion factor of H5.
    """
    decomp = gamma5_decomposition(h3, h4)
    raw = IntMatrix(decomp.part_gen_count, h6.n_gens, b6_part_rows)
    b6 = Homomorphism(h6, decomp.group, decomp.from_parts @ raw)
    coker, _, _ = cokernel_data(b6)
    pi5 = ExtClass.from_coords(h5, coker, pi5_vectors)
    return WesData(h3, h4, h5, h6, b6, pi5)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    reason: str


def validate(w: WesData):
    """Check every WesData invariant; returns a list of CheckResults."""
    checks = []

    ok = h3_hypothesis_ok(w.H3)
    checks.append(
        CheckResult(
            "h3_odd_torsion",
            ok,
            "H3 tensor Z2 = 0" if ok else f"H3 tensor Z2 != 0 for H3 = {w.H3}",
        )
    )

    free = not w.H6.torsion
    checks.append(
        CheckResult(
            "h6_torsion_free",
            free,
            "H6 is torsion-free" if free else f"H6 must be torsion-free, got {w.H6}",
        )
    )

    if ok:
        g5 = gamma5(w.H3, w.H4)
        b6_ok = w.b6.source == w.H6 and w.b6.target == g5
        checks.append(
            CheckResult(
                "b6_shape",
                b6_ok,
                "b6 maps H6 into the canonical Gamma5"
                if b6_ok
                else f"b6 has source {w.b6.source} and target {w.b6.target}, "
                f"expected {w.H6} -> {g5}",
            )
        )
        if b6_ok and free:
            coker, _, _ = cokernel_data(w.b6)
            cls_ok = (
                w.pi5_class.A == w.H5
                and w.pi5_class.C == coker
                and len(w.pi5_class.coords) == w.H5.n_torsion
            )
            checks.append(
                CheckResult(
                    "pi5_class_coords",
                    cls_ok,
                    "class coordinates live in coker b6"
                    if cls_ok
                    else f"class is over ({w.pi5_class.A}, {w.pi5_class.C}), "
                    f"expected ({w.H5}, {coker})",
                )
            )
    return checks


def validate_ok(w: WesData) -> bool:
    return all(c.passed for c in validate(w))


def gamma_of(w: WesData, f3: Homomorphism, f4: Homomorphism) -> Homomorphism:
    """Induced automorphism of Gamma5: block diagonal in the part order."""
    if not is_automorphism(f3) or not is_automorphism(f4):
        raise NotAutomorphism("gamma_of needs automorphisms of H3 and H4")
    decomp, _, _, _ = _context(w)
    t_map = tensor_z2_map(f4)
    w_map = lambda2_map(f3)
    inj_t, inj_w = decomp.injections
    proj_t, proj_w = decomp.projections
    return Homomorphism(
        decomp.group,
        decomp.group,
        (inj_t.matrix @ t_map.matrix @ proj_t.matrix)
        + (inj_w.matrix @ w_map.matrix @ proj_w.matrix),
        check=False,
    )


def gamma_tilde(w: WesData, gamma: Homomorphism) -> Homomorphism:
    """The automorphism of coker b6 induced by gamma on Gamma5."""
    decomp, coker, proj, section = _context(w)
    if gamma.source != decomp.group or gamma.target != decomp.group:
        raise ShapeMismatch("gamma must be an endomorphism of Gamma5")
    # Inducibility: gamma(im b6) inside im b6 (+ relations).
    span = w.b6.matrix
    for j in range(w.H6.n_gens):
        img = gamma.matrix.apply(span.column_vec(j))
        if solve_mod(span, decomp.group, img) is None:
            raise NotInducible("gamma does not preserve the image of b6")
    return Homomorphism(coker, coker, proj.matrix @ gamma.matrix @ section, check=False)


def is_gamma_automorphism(w: WesData, t: GammaTuple):
    """Decide membership by the commuting b6 square plus the Ext criterion.

    Returns (ok, reason).
    """
    gamma = gamma_of(w, t.f3, t.f4)
    left = compose(gamma, w.b6)
    right = compose(w.b6, t.f6)
    if left != right:
        return False, "b6 square does not commute"
    # Condition (a) makes gamma preserve im b6, so the quotient map exists.
    gt = gamma_tilde(w, gamma)
    pulled = ext_pullback(t.f5, w.pi5_class)
    pushed = ext_pushforward(gt, w.pi5_class)
    if pulled != pushed:
        return False, "extension-class criterion fails"
    return True, "b6 square commutes and extension-class criterion holds"


def identity_tuple(w: WesData) -> GammaTuple:
    return GammaTuple(
        Homomorphism.identity(w.H3),
        Homomorphism.identity(w.H4),
        Homomorphism.identity(w.H5),
        Homomorphism.identity(w.H6),
    )


def wes_report(w: WesData) -> dict:
    """Computed invariants of the sequence, as a plain dict."""
    decomp, coker, _, _ = _context(w)
    ext = ext_group(w.H5, coker)
    coker_order = coker.order()
    h5_order = w.H5.order()
    pi5_order = (
        coker_order * h5_order if coker_order is not None and h5_order is not None else None
    )
    return {
        "gamma5": str(decomp.group),
        "gamma5_tensor_part": str(decomp.parts[0]),
        "gamma5_wedge_part": str(decomp.parts[1]),
        "coker_b6": str(coker),
        "ext_h5_coker_b6": str(ext),
        "pi5_class_coords": [list(el.coords) for el in w.pi5_class.coords],
        "pi4": str(w.H4),
        "pi3": str(w.H3),
        "pi5_order": pi5_order,
    }


def _quotient_group(ker_cols: IntMatrix, img: IntMatrix) -> FgAbGroup:
    """ker / im for an inclusion im(img) inside colspan(ker_cols)."""
    s = ker_cols.cols
    rel_cols = []
    for j in range(img.cols):
        x = solve_exact(ker_cols, img.column_vec(j))
        if x is None:
            raise NotAChainComplex("image does not lie in the kernel")
        rel_cols.append(x)
    rel = IntMatrix(s, len(rel_cols), [[c[i] for c in rel_cols] for i in range(s)])
    group, _ = group_from_relations(rel)
    return group


def homology_of_complex(d4: IntMatrix, d5: IntMatrix, d6: IntMatrix):
    """Homology in degrees 3..6 of the cellular complex C6 -> C5 -> C4 -> C3.

    Cells below degree 3 and above degree 6 are trivial, so H3 is the full
    cokernel of d4 and H6 is the kernel of d6 (torsion-free).  The boundary
    map and extension class are homotopy data and are not derivable here.
    """
    if d4.cols != d5.rows or d5.cols != d6.rows:
        raise NotAChainComplex("differential shapes are not composable")
    if not (d4 @ d5).is_zero() or not (d5 @ d6).is_zero():
        raise NotAChainComplex("consecutive differentials do not compose to zero")
    h3, _ = group_from_relations(d4)
    h4 = _quotient_group(kernel_basis(d4), d5)
    h5 = _quotient_group(kernel_basis(d5), d6)
    h6 = FgAbGroup(d6.cols - snf(d6).rank, ())
    return h3, h4, h5, h6
