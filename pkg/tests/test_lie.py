"""Lie layer: basis order, decomposition, brackets, gauges.

Bracket values below were expanded by hand from e_{i,j} e_{k,l} =
delta_{j,k} e_{i,l} and frozen.
"""

import random

import pytest

from skewlie.errors import (
    ComplexWeight,
    DimensionMismatch,
    EqualIndices,
    NotSkewAdjoint,
    ZeroWeight,
)
from skewlie.lie import (
    InnerDerivation,
    LinearLieMap,
    apply_linear_map,
    basis_labels,
    bracket,
    canonical_basis,
    centralizer_gauge,
    decompose,
    ebar_elem,
    ie_bar,
    ie_diag,
    is_central,
    random_skew,
    recompose,
    s_elem,
    span_contains,
    staircase,
)
from skewlie.matrices import Matrix, corner, is_skew_adjoint, matrix_unit, zeros
from skewlie.rings import GAUSS, FunctionRing, GaussianRational, PolynomialRing

RINGS = [GAUSS, FunctionRing(2), PolynomialRing(("z0", "z1"), ((0, 1),))]


class TestGenerators:
    def test_s_and_ebar_shape(self):
        assert s_elem(3, 1, 2) == matrix_unit(3, 1, 2) - matrix_unit(3, 2, 1)
        assert ebar_elem(3, 1, 2) == matrix_unit(3, 1, 2) + matrix_unit(3, 2, 1)
        assert s_elem(3, 2, 1) == -s_elem(3, 1, 2)
        with pytest.raises(EqualIndices):
            s_elem(3, 2, 2)

    @pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
    def test_generators_are_skew_adjoint(self, ring):
        for x in (s_elem(3, 1, 3, ring), ie_bar(3, 2, 3, ring),
                  ie_diag(3, 2, ring), staircase(3, ring=ring)):
            assert is_skew_adjoint(x)

    def test_staircase_unit_weights(self):
        x0 = staircase(4)
        assert x0 == s_elem(4, 1, 2) + s_elem(4, 2, 3) + s_elem(4, 3, 4)
        assert staircase(4, "Unit") == x0
        assert corner(x0, 3, 4) == matrix_unit(4, 3, 4)

    def test_staircase_weight_validation(self):
        staircase(3, [2, GaussianRational(1, 0, 2)])
        with pytest.raises(DimensionMismatch):
            staircase(3, [1])
        with pytest.raises(ZeroWeight):
            staircase(3, [1, 0])
        with pytest.raises(ComplexWeight):
            staircase(3, [1, GAUSS.imag])

    def test_staircase_weight_zero_at_one_point(self):
        r = FunctionRing(2)
        with pytest.raises(ZeroWeight):
            staircase(3, [r.one, r.lift([1, 0])], ring=r)


class TestBasis:
    def test_labels_frozen_for_n2(self):
        assert basis_labels(2) == ["s[1,2]", "Ibar[1,2]", "Idiag[1]", "Idiag[2]"]

    def test_order_s_then_ibar_then_diag(self):
        labels = basis_labels(3)
        assert labels[:3] == ["s[1,2]", "s[1,3]", "s[2,3]"]
        assert labels[3:6] == ["Ibar[1,2]", "Ibar[1,3]", "Ibar[2,3]"]
        assert labels[6:] == ["Idiag[1]", "Idiag[2]", "Idiag[3]"]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_basis_matches_labels(self, n):
        elems = canonical_basis(n)
        labels = basis_labels(n)
        assert len(elems) == len(labels) == n * n
        named = dict(zip(labels, elems))
        assert named["s[1,2]"] == s_elem(n, 1, 2)
        assert named["Ibar[1,2]"] == ie_bar(n, 1, 2)
        assert named["Idiag[%d]" % n] == ie_diag(n, n)


class TestBracket:
    def test_frozen_values(self):
        n = 3
        assert bracket(s_elem(n, 1, 2), s_elem(n, 2, 3)) == s_elem(n, 1, 3)
        assert bracket(ie_diag(n, 1), s_elem(n, 1, 2)) == ie_bar(n, 1, 2)
        assert bracket(s_elem(n, 1, 2), ie_diag(n, 1)) == -ie_bar(n, 1, 2)
        assert bracket(ie_diag(n, 1), ie_diag(n, 2)) == zeros(n)

    def test_antisymmetry_and_jacobi(self):
        rng = random.Random(3)
        a, b, c = (random_skew(rng, 3) for _ in range(3))
        assert bracket(a, b) == -bracket(b, a)
        lhs = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) \
            + bracket(c, bracket(a, b))
        assert lhs == zeros(3)

    @pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
    def test_closed_under_bracket(self, ring):
        rng = random.Random(4)
        a = random_skew(rng, 3, ring)
        b = random_skew(rng, 3, ring)
        assert is_skew_adjoint(bracket(a, b))


class TestDecompose:
    def test_frozen_coefficients(self):
        # x^{12} = 3 + 2i forces x^{21} = -3 + 2i; then the s and Ibar
        # coefficients are 3 and 2
        v = GaussianRational(3, 2, 1)
        x = Matrix(GAUSS, [[GAUSS.zero, v], [-v.conjugate(), GAUSS.zero]])
        coeffs = decompose(x)
        assert coeffs == [GAUSS.scalar(3), GAUSS.scalar(2),
                          GAUSS.zero, GAUSS.zero]

    @pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.name)
    def test_round_trip_and_star_fixed(self, ring):
        rng = random.Random(6)
        for _ in range(5):
            x = random_skew(rng, 3, ring)
            coeffs = decompose(x)
            assert all(ring.star(c) == c for c in coeffs)
            assert recompose(coeffs, 3, ring) == x

    def test_basis_decomposes_to_unit_vectors(self):
        elems = canonical_basis(3)
        for k, b in enumerate(elems):
            coeffs = decompose(b)
            assert coeffs[k] == GAUSS.one
            assert all(not c for m, c in enumerate(coeffs) if m != k)

    def test_rejects_non_skew(self):
        with pytest.raises(NotSkewAdjoint):
            decompose(matrix_unit(2, 1, 1))


class TestLinearMaps:
    def test_tabulated_inner_derivation_agrees(self):
        rng = random.Random(8)
        a = random_skew(rng, 4)
        der = InnerDerivation(a)
        m = der.as_linear_map()
        for _ in range(5):
            x = random_skew(rng, 4)
            assert apply_linear_map(m, x) == bracket(a, x)

    def test_linear_map_shape_guard(self):
        m = LinearLieMap(GAUSS, 2, canonical_basis(2))
        with pytest.raises(DimensionMismatch):
            m.apply(zeros(3))
        with pytest.raises(DimensionMismatch):
            LinearLieMap(GAUSS, 2, [zeros(2)])

    def test_inner_derivation_needs_skew_seed(self):
        with pytest.raises(NotSkewAdjoint):
            InnerDerivation(matrix_unit(2, 1, 2))


class TestGauge:
    def test_gauge_is_central_and_skew(self):
        g = centralizer_gauge(GaussianRational(3, 0, 2), 3)
        assert is_skew_adjoint(g)
        assert is_central(g)

    def test_gauge_rejects_complex_scale(self):
        with pytest.raises(ComplexWeight):
            centralizer_gauge(GAUSS.imag, 3)

    def test_noncentral_detected(self):
        assert not is_central(s_elem(3, 1, 2))


class TestSpan:
    def test_membership_and_non_membership(self):
        gens = [s_elem(3, 1, 2), s_elem(3, 2, 3)]
        assert span_contains(s_elem(3, 1, 2) - 2 * s_elem(3, 2, 3), gens)
        assert not span_contains(s_elem(3, 1, 3), gens)
