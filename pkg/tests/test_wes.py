"""Tests for the sequence model: Gamma5, validation, the membership test."""

import pytest

from wes6.errors import (
    HypothesisViolation,
    NotAChainComplex,
    NotAutomorphism,
    NotInducible,
)
from wes6.functors import ext_pullback
from wes6.groups import TRIVIAL, FgAbGroup, Homomorphism
from wes6.matrices import IntMatrix
from wes6.wes import (
    GammaTuple,
    build_wes_data,
    coker_b6,
    gamma5,
    gamma5_decomposition,
    gamma_of,
    gamma_tilde,
    h3_hypothesis_ok,
    homology_of_complex,
    identity_tuple,
    is_gamma_automorphism,
    validate,
    validate_ok,
    wes_report,
)

Z = FgAbGroup(rank=1, torsion=())
Z2 = FgAbGroup(rank=0, torsion=(2,))
Z3 = FgAbGroup(rank=0, torsion=(3,))
Z8 = FgAbGroup(rank=0, torsion=(8,))
Z2Z2 = FgAbGroup(rank=0, torsion=(2, 2))
Z3Z3 = FgAbGroup(rank=0, torsion=(3, 3))


def example_data(pi5=0):
    """H3 = Z3, H4 = Z2+Z2, H5 = Z8, H6 = Z, b6(1) = (1, 0)."""
    return build_wes_data(
        h3=Z3,
        h4=Z2Z2,
        h5=Z8,
        h6=Z,
        b6_part_rows=[[1], [0]],
        pi5_vectors=[[pi5]],
    )


class TestHypothesis:
    def test_h3_hypothesis(self):
        assert h3_hypothesis_ok(TRIVIAL)
        assert h3_hypothesis_ok(Z3)
        assert h3_hypothesis_ok(FgAbGroup(rank=0, torsion=(3, 9)))
        assert not h3_hypothesis_ok(Z2)
        assert not h3_hypothesis_ok(FgAbGroup(rank=0, torsion=(6,)))
        assert not h3_hypothesis_ok(Z)

    def test_gamma5_rejects_bad_h3(self):
        with pytest.raises(HypothesisViolation):
            gamma5(Z2, Z2)


class TestGamma5:
    def test_examples(self):
        assert gamma5(Z3, Z2Z2) == Z2Z2
        assert gamma5(TRIVIAL, Z3) == TRIVIAL
        assert gamma5(Z3Z3, TRIVIAL) == Z3
        assert gamma5(Z3Z3, Z2) == FgAbGroup(rank=0, torsion=(6,))
        assert gamma5(Z3, Z) == Z2

    def test_decomposition_parts(self):
        d = gamma5_decomposition(Z3Z3, Z2)
        assert d.parts[0] == Z2  # H4 tensor Z2
        assert d.parts[1] == Z3  # Lambda^2 H3
        assert d.group == FgAbGroup(rank=0, torsion=(6,))


class TestValidate:
    def test_good_instance(self):
        w = example_data()
        assert validate_ok(w)
        names = [c.name for c in validate(w)]
        assert names == [
            "h3_odd_torsion",
            "h6_torsion_free",
            "b6_shape",
            "pi5_class_coords",
        ]

    def test_bad_h3_reported_not_raised(self):
        b6 = Homomorphism.zero(Z, Z2)
        w_bad = build_wes_data(
            h3=Z3, h4=Z2, h5=Z8, h6=Z, b6_part_rows=[[0]], pi5_vectors=[[0]]
        )
        object.__setattr__(w_bad, "H3", Z2)
        results = {c.name: c.passed for c in validate(w_bad)}
        assert results["h3_odd_torsion"] is False

    def test_bad_h6(self):
        w = build_wes_data(
            h3=Z3, h4=Z2, h5=Z8, h6=TRIVIAL, b6_part_rows=[[]], pi5_vectors=[[0]]
        )
        assert validate_ok(w)
        object.__setattr__(w, "H6", Z2)
        results = {c.name: c.passed for c in validate(w)}
        assert results["h6_torsion_free"] is False


class TestGammaOf:
    def test_identity(self):
        w = example_data()
        g = gamma_of(w, Homomorphism.identity(Z3), Homomorphism.identity(Z2Z2))
        assert g == Homomorphism.identity(g.source)

    def test_swap_on_tensor_part(self):
        w = example_data()
        swap = Homomorphism(Z2Z2, Z2Z2, IntMatrix.from_rows([[0, 1], [1, 0]]))
        g = gamma_of(w, Homomorphism.identity(Z3), swap)
        assert g.matrix == IntMatrix.from_rows([[0, 1], [1, 0]])

    def test_wedge_part_scaling(self):
        # H3 = Z3+Z3: f3 = diag(1, 2) acts on the wedge x01 by det = 2
        w = build_wes_data(
            h3=Z3Z3, h4=TRIVIAL, h5=Z8, h6=TRIVIAL,
            b6_part_rows=[[]], pi5_vectors=[[0]],
        )
        f3 = Homomorphism(Z3Z3, Z3Z3, IntMatrix.from_rows([[1, 0], [0, 2]]))
        g = gamma_of(w, f3, Homomorphism.identity(TRIVIAL))
        assert g.matrix == IntMatrix.from_rows([[2]])

    def test_rejects_non_automorphism(self):
        w = example_data()
        bad = Homomorphism.zero(Z2Z2, Z2Z2)
        with pytest.raises(NotAutomorphism):
            gamma_of(w, Homomorphism.identity(Z3), bad)


class TestGammaTilde:
    def test_identity_descends(self):
        w = example_data()
        coker, _ = coker_b6(w)
        assert coker == Z2
        g = gamma_of(w, Homomorphism.identity(Z3), Homomorphism.identity(Z2Z2))
        gt = gamma_tilde(w, g)
        assert gt == Homomorphism.identity(coker)

    def test_not_inducible(self):
        # b6 image is the first Z2 factor; swapping the factors moves it
        w = example_data()
        swap = Homomorphism(Z2Z2, Z2Z2, IntMatrix.from_rows([[0, 1], [1, 0]]))
        g = gamma_of(w, Homomorphism.identity(Z3), swap)
        with pytest.raises(NotInducible):
            gamma_tilde(w, g)


class TestMembership:
    def test_identity_always_accepted(self):
        for pi5 in (0, 1):
            w = example_data(pi5)
            ok, reason = is_gamma_automorphism(w, identity_tuple(w))
            assert ok, reason

    def test_swap_rejected_by_b6_square(self):
        w = example_data()
        swap = Homomorphism(Z2Z2, Z2Z2, IntMatrix.from_rows([[0, 1], [1, 0]]))
        t = identity_tuple(w)
        t = GammaTuple(t.f3, swap, t.f5, t.f6)
        ok, reason = is_gamma_automorphism(w, t)
        assert not ok and "b6 square" in reason

    def test_ext_criterion_rejection(self):
        # H5 = Z4, coker = Z2+Z2 (b6 = 0), class (1, 0); a gamma that moves
        # the class while f5 fixes it must be rejected
        w = build_wes_data(
            h3=Z3, h4=Z2Z2, h5=FgAbGroup(rank=0, torsion=(4,)), h6=TRIVIAL,
            b6_part_rows=[[], []], pi5_vectors=[[1, 0]],
        )
        swap = Homomorphism(Z2Z2, Z2Z2, IntMatrix.from_rows([[0, 1], [1, 0]]))
        t = identity_tuple(w)
        t = GammaTuple(t.f3, swap, t.f5, t.f6)
        ok, reason = is_gamma_automorphism(w, t)
        assert not ok and "extension-class" in reason

    def test_matches_direct_ext_computation(self):
        w = example_data(1)
        t = identity_tuple(w)
        f5 = Homomorphism(Z8, Z8, IntMatrix.from_rows([[3]]))
        t = GammaTuple(t.f3, t.f4, f5, t.f6)
        ok, _ = is_gamma_automorphism(w, t)
        pulled = ext_pullback(f5, w.pi5_class)
        assert ok == (pulled == w.pi5_class)


class TestReport:
    def test_example_report(self):
        w = example_data(1)
        rep = wes_report(w)
        assert rep["gamma5"] == "Z2 + Z2"
        assert rep["gamma5_tensor_part"] == "Z2 + Z2"
        assert rep["gamma5_wedge_part"] == "0"
        assert rep["coker_b6"] == "Z2"
        assert rep["ext_h5_coker_b6"] == "Z2"
        assert rep["pi5_class_coords"] == [[1]]
        assert rep["pi4"] == "Z2 + Z2"
        assert rep["pi3"] == "Z3"
        assert rep["pi5_order"] == 16

    def test_infinite_pi5(self):
        w = build_wes_data(
            h3=Z3, h4=TRIVIAL, h5=Z, h6=TRIVIAL, b6_part_rows=[], pi5_vectors=[]
        )
        assert wes_report(w)["pi5_order"] is None


class TestHomology:
    def test_sphere_like_complex(self):
        # one 3-cell and one 6-cell, zero differentials
        d4 = IntMatrix.zero(1, 0)
        d5 = IntMatrix.zero(0, 0)
        d6 = IntMatrix.zero(0, 1)
        h3, h4, h5, h6 = homology_of_complex(d4, d5, d6)
        assert (h3, h4, h5, h6) == (Z, TRIVIAL, TRIVIAL, Z)

    def test_moore_like_complex(self):
        # C4 = Z -> C3 = Z by multiplication by 3
        d4 = IntMatrix.from_rows([[3]])
        d5 = IntMatrix.zero(1, 0)
        d6 = IntMatrix.zero(0, 0)
        h3, h4, h5, h6 = homology_of_complex(d4, d5, d6)
        assert (h3, h4, h5, h6) == (Z3, TRIVIAL, TRIVIAL, TRIVIAL)

    def test_torsion_in_middle(self):
        # C5 = Z -> C4 = Z by 2, nothing else
        d4 = IntMatrix.zero(0, 1)
        d5 = IntMatrix.from_rows([[2]])
        d6 = IntMatrix.zero(1, 0)
        h3, h4, h5, h6 = homology_of_complex(d4, d5, d6)
        assert (h3, h4, h5, h6) == (TRIVIAL, Z2, TRIVIAL, TRIVIAL)

    def test_rejects_non_complex(self):
        d4 = IntMatrix.from_rows([[1]])
        d5 = IntMatrix.from_rows([[1]])
        d6 = IntMatrix.zero(1, 0)
        with pytest.raises(NotAChainComplex):
            homology_of_complex(d4, d5, d6)

    def test_rejects_bad_shapes(self):
        with pytest.raises(NotAChainComplex):
            homology_of_complex(
                IntMatrix.zero(1, 2), IntMatrix.zero(1, 1), IntMatrix.zero(1, 1)
            )

    def test_rank_bookkeeping(self):
        # C6 = Z^2 -> C5 = Z with d6 = [1 0]: H6 = Z, H5 = 0
        d4 = IntMatrix.zero(0, 0)
        d5 = IntMatrix.zero(0, 1)
        d6 = IntMatrix.from_rows([[1, 0]])
        h3, h4, h5, h6 = homology_of_complex(d4, d5, d6)
        assert (h5, h6) == (TRIVIAL, Z)
