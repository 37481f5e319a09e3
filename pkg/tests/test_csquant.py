import math
import numpy as np
import pytest
from pydantic import ValidationError

from pisotcs.csquant import (
    FockModel,
    FourierSeries,
    OperatorLabel,
    TruncatedOperator,
    angle_factors,
    angle_lower_symbol,
    angle_operator,
    boson_coefficients,
    build_model,
    coherent_state,
    d_coefficients,
    d_k,
    dispersions,
    evolve_lower_symbol,
    factorial_ratio,
    generic_F_lower_symbol,
    ladder_and_quadratures,
    lower_symbol,
    phase_density,
    photon_statistics,
    probabilities,
    quantize_angular,
    quantize_radial,
)
from pisotcs.pisot_core import DeformationSpec
from pisotcs.shared.errors import InvalidSpec, NonConvergent, OutOfDomain

PISOT_SPECS = [DeformationSpec.bosonic(s) for s in (3, 4, 5)]


@pytest.fixture(scope="module")
def s3_model():
    return build_model(DeformationSpec.bosonic(3), z_max=6.0)


@pytest.fixture(scope="module")
def small_model():
    return build_model(DeformationSpec.bosonic(3), z_max=2.0)


@pytest.fixture(scope="module")
def classical_model():
    return build_model(1.0, z_max=4.0)


@pytest.fixture(scope="module", params=[3, 4, 5, 1], ids=["s3", "s4", "s5", "q1"])
def spectrum_model(request):
    source = DeformationSpec.bosonic(request.param) if request.param > 1 else 1.0
    return build_model(source, z_max=5.0)


@pytest.fixture(scope="module", params=[3, 4, 5], ids=["s3", "s4", "s5"])
def pisot_model(request):
    return build_model(DeformationSpec.bosonic(request.param), z_max=5.0)


class TestBuildModel:
    """Tests for truncated Fock models"""

    def test_pisot_truncation(self, s3_model):
        """Test the s = 3 model stays small and integral"""
        assert s3_model.n_max <= 30
        assert s3_model.exact
        assert s3_model.x[:6] == [0, 1, 3, 8, 21, 55]
        assert all(isinstance(v, int) for v in s3_model.x)
        assert len(s3_model.x) == s3_model.n_max + 3

    def test_classical_truncation(self):
        """Test q = 1 needs far more basis vectors"""
        model = build_model(1.0, z_max=6.0)
        assert model.n_max >= 36
        assert model.x[:4] == [0, 1, 2, 3]
        assert model.trace == 2

    def test_zero_radius(self):
        """Test z_max = 0 keeps the minimal basis"""
        assert build_model(DeformationSpec.bosonic(4), z_max=0.0).n_max == 2

    def test_fermionic_refused(self):
        """Test non-symmetric deformations are refused"""
        with pytest.raises(InvalidSpec):
            build_model(DeformationSpec.fermionic(3))

    @pytest.mark.parametrize("q", [0.0, -0.5, math.inf, math.nan])
    def test_bad_q(self, q):
        """Test nonpositive or non-finite q is refused"""
        with pytest.raises(InvalidSpec):
            build_model(q)

    def test_q_above_one_folds(self):
        """Test q > 1 and a Pisot q given as a float"""
        q = (3 - math.sqrt(5)) / 2
        model = build_model(1.0 / q, z_max=2.0)
        assert model.spec == DeformationSpec.bosonic(3)
        assert model.q == pytest.approx(q, rel=1e-14)

    def test_generic_q(self):
        """Test a non-Pisot q gives a float spectrum"""
        model = build_model(0.5, z_max=2.0)
        assert not model.exact
        assert model.spec is None
        assert model.x[2] == pytest.approx(2.5)
        assert model.x_at(model.n_max + 5) == pytest.approx(
            model.trace * model.x_at(model.n_max + 4) - model.x_at(model.n_max + 3), rel=1e-12
        )

    def test_negative_radius(self):
        """Test a negative z_max is refused"""
        with pytest.raises(OutOfDomain):
            build_model(DeformationSpec.bosonic(3), z_max=-1.0)

    def test_max_terms(self):
        """Test the truncation gives up after max_terms"""
        from pisotcs.client.config import configure

        configure(max_terms=10)
        with pytest.raises(NonConvergent):
            build_model(1.0, z_max=6.0)

    def test_x_at_extends(self, s3_model):
        """Test the spectrum extends past the stored entries"""
        n = s3_model.n_max + 3
        assert s3_model.x_at(n) == 3 * s3_model.x_at(n - 1) - s3_model.x_at(n - 2)

    def test_model_validation(self):
        """Test inconsistent spectra are rejected"""
        with pytest.raises(InvalidSpec):
            FockModel(q=1.0, n_max=2, x=[0, 1, 2, 3], log_factorials=[0.0] * 4, z_max=1.0, tol=1e-16)
        with pytest.raises(InvalidSpec):
            FockModel(q=1.0, n_max=2, x=[0, 2, 1, 3, 4], log_factorials=[0.0] * 5, z_max=1.0, tol=1e-16)


class TestCoherentStates:
    """Tests for coherent states"""

    @pytest.mark.parametrize("z", [0.7, 1.5 - 2.0j, 3.0j, 5.9])
    def test_normalized(self, s3_model, z):
        """Test |v_z> has unit norm"""
        state = coherent_state(s3_model, z)
        assert np.vdot(state.coeffs, state.coeffs).real == pytest.approx(1.0, rel=1e-12)
        assert state.tail_mass < 1e-12

    @pytest.mark.parametrize("z", [0.7, 1.5 - 2.0j, 3.0j, 3.9])
    def test_eigenvector(self, spectrum_model, z):
        """Test a|v_z> = z|v_z> away from the truncation edge"""
        ladders = ladder_and_quadratures(spectrum_model)
        c = coherent_state(spectrum_model, z).coeffs
        residual = ladders.a.matrix @ c - z * c
        assert np.linalg.norm(residual[:-1]) < 1e-10

    def test_eigenvector_at_large_radius(self, s3_model):
        """Test the eigen-equation near z_max"""
        ladders = ladder_and_quadratures(s3_model)
        c = coherent_state(s3_model, 5.9).coeffs
        assert np.linalg.norm((ladders.a.matrix @ c - 5.9 * c)[:-1]) < 1e-10

    def test_vacuum(self, s3_model):
        """Test |v_0> = e_0"""
        state = coherent_state(s3_model, 0.0)
        expected = np.zeros(s3_model.dim)
        expected[0] = 1.0
        np.testing.assert_allclose(state.coeffs, expected)
        assert state.normalization == 1.0
        assert state.tail_mass == 0.0

    def test_outside_radius(self, s3_model):
        """Test |z| > z_max is refused"""
        with pytest.raises(OutOfDomain):
            coherent_state(s3_model, 6.5)

    def test_probabilities_sum(self, s3_model):
        """Test rho_q(n, r) sums to one"""
        assert probabilities(s3_model, 2.5).sum() == pytest.approx(1.0, rel=1e-13)
        assert probabilities(s3_model, 0.0)[0] == 1.0


class TestOperators:
    """Tests for ladder, quadrature and quantized operators"""

    def test_commutator(self, s3_model):
        """Test [a, a_dagger] = diag(x_{n+1} - x_n) on the interior"""
        ladders = ladder_and_quadratures(s3_model)
        x = s3_model.spectrum()
        inner = ladders.commutator_a.interior()
        k = inner.shape[0]
        np.testing.assert_allclose(inner, np.diag(x[1:k + 1] - x[:k]), atol=1e-9)

    def test_commutator_qp(self, spectrum_model):
        """Test [Q, P] = i [a, a_dagger], diag(i (x_{n+1} - x_n)) on the interior"""
        ladders = ladder_and_quadratures(spectrum_model)
        x = spectrum_model.spectrum()
        scale = float(x[spectrum_model.dim])
        np.testing.assert_allclose(
            ladders.commutator_qp.matrix / scale, 1j * ladders.commutator_a.matrix / scale, atol=1e-13
        )
        inner = ladders.commutator_qp.interior()
        k = inner.shape[0]
        np.testing.assert_allclose(inner / scale, 1j * np.diag(x[1:k + 1] - x[:k]) / scale, atol=1e-13)

    def test_momentum_squared(self, spectrum_model):
        """Test A_{p^2} - P^2 = A_{q^2} - Q^2 = diag((x_{n+1} - x_n)/2) on the interior"""
        ladders = ladder_and_quadratures(spectrum_model)
        x = spectrum_model.spectrum()
        P, Q = ladders.P.matrix, ladders.Q.matrix
        k = spectrum_model.dim - 1
        scale = float(x[k])
        shift_p = (ladders.momentum_squared.matrix - P @ P)[:k, :k]
        shift_q = (ladders.position_squared.matrix - Q @ Q)[:k, :k]
        np.testing.assert_allclose(shift_p / scale, np.diag((x[1:k + 1] - x[:k]) / 2.0) / scale, atol=1e-13)
        np.testing.assert_allclose(shift_p / scale, shift_q / scale, atol=1e-13)
        total = ladders.momentum_squared.matrix + ladders.position_squared.matrix
        np.testing.assert_allclose(np.diag(total).real, 2.0 * x[1:spectrum_model.dim + 1])

    def test_polluted_band(self, s3_model):
        """Test the band excludes the trailing rows where truncation shows"""
        ladders = ladder_and_quadratures(s3_model)
        x = s3_model.spectrum()
        dim = s3_model.dim
        op = ladders.commutator_a
        assert op.polluted_band == 2
        assert op.interior().shape == (dim - 2, dim - 2)
        diag = np.diag(op.matrix).real
        np.testing.assert_allclose(diag[:-1], x[1:dim] - x[:dim - 1])
        assert diag[-1] == pytest.approx(-x[dim - 1])
        assert abs(diag[-1] - (x[dim] - x[dim - 1])) > 1.0
        custom = TruncatedOperator(matrix=np.eye(5), label=OperatorLabel.CUSTOM, polluted_band=1)
        assert custom.interior().shape == (4, 4)

    def test_hamiltonian_diagonal(self, s3_model):
        """Test (P^2 + Q^2)/2 = (x_{n+1} + x_n)/2 on the interior"""
        ladders = ladder_and_quadratures(s3_model)
        x = s3_model.spectrum()
        h = (ladders.P.matrix @ ladders.P.matrix + ladders.Q.matrix @ ladders.Q.matrix) / 2.0
        k = s3_model.dim - 1
        scale = float(x[k])
        np.testing.assert_allclose(h[:k, :k] / scale, np.diag((x[1:k + 1] + x[:k]) / 2.0) / scale, atol=1e-13)

    def test_position_squared_shift(self, s3_model):
        """Test A_{q^2} - Q^2 = diag((x_{n+1} - x_n)/2) on the interior"""
        ladders = ladder_and_quadratures(s3_model)
        x = s3_model.spectrum()
        diff = ladders.position_squared.matrix - ladders.Q.matrix @ ladders.Q.matrix
        k = s3_model.dim - 1
        scale = float(x[k])
        np.testing.assert_allclose(diff[:k, :k] / scale, np.diag((x[1:k + 1] - x[:k]) / 2.0) / scale, atol=1e-13)

    def test_hermitian(self, s3_model):
        """Test Q, P and A_theta are Hermitian"""
        ladders = ladder_and_quadratures(s3_model)
        assert ladders.Q.is_hermitian()
        assert ladders.P.is_hermitian()
        assert not ladders.a.is_hermitian()
        theta = angle_operator(s3_model)
        assert theta.label == OperatorLabel.A_THETA
        assert theta.is_hermitian()
        assert np.allclose(np.diag(theta.matrix), math.pi)

    @pytest.mark.parametrize("spec", PISOT_SPECS)
    def test_angle_factors_bounded(self, spec):
        """Test x_{(n+n')/2}!/sqrt(x_n! x_n'!) <= 1"""
        factors = angle_factors(build_model(spec, z_max=4.0))
        assert np.all(factors <= 1.0 + 1e-12)
        np.testing.assert_allclose(np.diag(factors), 1.0)

    def test_constant_function(self, s3_model):
        """Test F = 1 quantizes to the identity"""
        op = quantize_angular(s3_model, FourierSeries.constant(1.0))
        np.testing.assert_allclose(op.matrix, np.eye(s3_model.dim), atol=1e-14)

    def test_quantize_radial(self):
        """Test radial quantization of 1, t and t^2"""
        model = build_model(DeformationSpec.bosonic(3), z_max=1.0)
        x = model.spectrum()
        dim = model.dim
        one = np.diag(quantize_radial(model, lambda t: 1.0).matrix).real
        np.testing.assert_allclose(one, 1.0, rtol=1e-7)
        linear = np.diag(quantize_radial(model, lambda t: t).matrix).real
        np.testing.assert_allclose(linear, x[1:dim + 1], rtol=1e-7)
        square = np.diag(quantize_radial(model, lambda t: t * t).matrix).real
        np.testing.assert_allclose(square, x[1:dim + 1] * x[2:dim + 2], rtol=1e-7)

    def test_quantize_radial_classical(self):
        """Test q = 1 gives A_t = N + 1"""
        model = build_model(1.0, z_max=1.0)
        diag = np.diag(quantize_radial(model, lambda t: t).matrix).real
        np.testing.assert_allclose(diag, np.arange(1, model.dim + 1), rtol=1e-8)

    def test_lower_symbol_of_a(self, s3_model):
        """Test <v_z|a|v_z> = z"""
        ladders = ladder_and_quadratures(s3_model)
        z = 1.2 + 0.9j
        assert lower_symbol(s3_model, ladders.a, z) == pytest.approx(z, rel=1e-12)

    def test_non_square(self):
        """Test operators must be square"""
        with pytest.raises(ValidationError):
            TruncatedOperator(matrix=np.zeros((2, 3)), label=OperatorLabel.CUSTOM)

    def test_fourier_from_samples(self):
        """Test sampled cos(theta) has c_1 = c_-1 = 1/2"""
        theta = 2 * np.pi * np.arange(16) / 16
        series = FourierSeries.from_samples(np.cos(theta), 3)
        assert series.c(1) == pytest.approx(0.5)
        assert series.c(-1) == pytest.approx(0.5)
        assert abs(series.c(2)) < 1e-14
        assert series.c(7) == 0
        assert series.is_real(1e-14)
        with pytest.raises(InvalidSpec):
            FourierSeries.from_samples([1.0, 2.0], 3)


class TestAngleSymbol:
    """Tests for d_k(r) and the angle lower symbol"""

    @pytest.mark.parametrize("source", PISOT_SPECS + [1.0], ids=["s3", "s4", "s5", "q1"])
    def test_d_range(self, source):
        """Test 0 <= d_k(r) <= 1 for k <= 10 and r <= 10"""
        model = build_model(source, z_max=10.0)
        for r in (0.3, 1.0, 2.5, 5.0, 7.5, 10.0):
            d = d_coefficients(model, r, 10)
            assert d[0] == 1.0
            assert np.all(d >= 0.0)
            assert np.all(d <= 1.0 + 1e-12)

    def test_d_at_origin(self, s3_model):
        """Test d_k(0) = 0 for k >= 1"""
        assert d_k(s3_model, 0, 0.0) == 1.0
        assert d_k(s3_model, 3, 0.0) == 0.0

    def test_d_classical_large_r(self):
        """Test d_1(r) tends to 1 at q = 1"""
        model = build_model(1.0, z_max=10.0)
        assert d_k(model, 1, 10.0) > 0.98

    def test_d_negative(self, s3_model):
        """Test negative r or k is refused"""
        with pytest.raises(OutOfDomain):
            d_k(s3_model, 1, -1.0)
        with pytest.raises(OutOfDomain):
            d_coefficients(s3_model, 1.0, -1)

    def test_symbol_at_zero_angle(self, small_model):
        """Test the angle symbol is pi at theta = 0"""
        for r in (0.5, 1.0, 2.0):
            assert angle_lower_symbol(small_model, r, 0.0) == pytest.approx(math.pi, abs=1e-15)

    def test_symbol_average(self, small_model):
        """Test the angle symbol averages to pi over a period"""
        theta = 2 * np.pi * np.arange(256) / 256
        values = angle_lower_symbol(small_model, 1.5, theta)
        assert values.shape == (256,)
        assert values.mean() == pytest.approx(math.pi, abs=1e-12)

    @pytest.mark.parametrize("z", [0.8 + 0.3j, -1.1 + 1.2j, 1.9j])
    def test_matrix_and_series_agree(self, small_model, z):
        """Test <v_z|A_theta|v_z> matches the d_k series"""
        matrix_value = lower_symbol(small_model, angle_operator(small_model), z)
        series_value = angle_lower_symbol(small_model, abs(z), np.angle(z))
        assert abs(matrix_value.imag) < 1e-10
        assert matrix_value.real == pytest.approx(series_value, abs=1e-8)

    def test_generic_symbol(self, small_model):
        """Test the generic symbol with the sawtooth coefficients"""
        theta = np.linspace(0.0, 2 * np.pi, 9)
        generic = generic_F_lower_symbol(small_model, FourierSeries.sawtooth(small_model.n_max), 1.3, theta)
        np.testing.assert_allclose(generic.real, angle_lower_symbol(small_model, 1.3, theta), atol=1e-12)
        np.testing.assert_allclose(generic.imag, 0.0, atol=1e-12)


class TestStatistics:
    """Tests for photon statistics and dispersions"""

    @pytest.mark.parametrize("r", [0.5, 1.0, 2.0, 4.0])
    def test_mean_and_mandel(self, pisot_model, r):
        """Test <x_N> = |z|^2 and sub-Poissonian counting"""
        stats = photon_statistics(pisot_model, r)
        assert stats.mean == pytest.approx(r * r, rel=1e-10)
        assert stats.mandel < 0.0
        assert sum(stats.probs) == pytest.approx(1.0)
        # <x_{N+1} - x_N> - 1
        assert stats.mandel_spectral == pytest.approx(2.0 * dispersions(pisot_model, r).var_q - 1.0, abs=1e-8)

    def test_vacuum_statistics(self, s3_model):
        """Test the vacuum has zero Mandel parameters"""
        stats = photon_statistics(s3_model, 0.0)
        assert stats.mandel == 0.0
        assert stats.mandel_spectral == 0.0
        assert stats.snr == 0.0

    def test_characteristic(self, pisot_model):
        """Test the characteristic ratios exceed one for n <= 20"""
        stats = photon_statistics(pisot_model, 1.0, n_characteristic=20)
        assert len(stats.characteristic) == 20
        assert stats.characteristic[0] == pytest.approx(pisot_model.x[2] / 2.0)
        assert all(c > 1.0 for c in stats.characteristic)

    def test_characteristic_s3(self, s3_model):
        """Test rho_q(1) = x_2 / 2 for s = 3"""
        stats = photon_statistics(s3_model, 1.0, n_characteristic=25)
        assert stats.characteristic[0] == pytest.approx(1.5)
        assert all(c > 1.0 for c in stats.characteristic)

    @pytest.mark.parametrize("spec", PISOT_SPECS)
    def test_dispersion(self, spec):
        """Test (Delta Q)^2 >= 1/2 and its closed form"""
        model = build_model(spec, z_max=4.0)
        assert dispersions(model, 0.0).var_q == pytest.approx(0.5)
        for z in (0.4, 1.5 + 1.0j, 3.0):
            disp = dispersions(model, z)
            assert disp.var_q >= 0.5
            assert disp.var_p == disp.var_q
            assert disp.closed_form == pytest.approx(disp.var_q, rel=1e-9)

    def test_classical_dispersion(self, classical_model):
        """Test q = 1 saturates the uncertainty bound"""
        for z in (0.0, 1.0, 2.0 - 1.0j):
            assert dispersions(classical_model, z).var_q == pytest.approx(0.5, rel=1e-12)

    def test_snr(self, s3_model):
        """Test the signal-to-noise ratio 2 Re(z)^2 / (Delta Q)^2"""
        stats = photon_statistics(s3_model, 2.0)
        assert stats.snr == pytest.approx(8.0 / dispersions(s3_model, 2.0).var_q)

    def test_factorial_ratio(self, s3_model, classical_model):
        """Test d_q(n) = x_n! / n!"""
        assert factorial_ratio(s3_model, 4) == pytest.approx(21.0)
        assert factorial_ratio(classical_model, 6) == pytest.approx(1.0)

    def test_boson_coefficients(self, s3_model, classical_model):
        """Test sqrt(x_{n+1}/(n+1))"""
        coeffs = boson_coefficients(s3_model)
        assert coeffs[:3].tolist() == pytest.approx([1.0, math.sqrt(1.5), math.sqrt(8.0 / 3.0)])
        np.testing.assert_allclose(boson_coefficients(classical_model), 1.0)


class TestDynamics:
    """Tests for time evolution and the phase density"""

    def test_initial_value(self, s3_model):
        """Test z(0) = z"""
        z = 1.3 - 0.4j
        assert evolve_lower_symbol(s3_model, z, 0.0) == pytest.approx(z, rel=1e-12)

    @pytest.mark.parametrize("spec", PISOT_SPECS)
    def test_periodic(self, spec):
        """Test integer spectra evolve with period 2 pi"""
        model = build_model(spec, z_max=3.0)
        z = 1.5 + 0.5j
        for t in (0.0, 1.0, 2.7):
            gap = abs(evolve_lower_symbol(model, z, t + 2 * math.pi) - evolve_lower_symbol(model, z, t))
            assert gap < 1e-9

    def test_contraction(self, s3_model):
        """Test |z(t)| <= |z|"""
        z = 2.0 + 1.0j
        for t in np.linspace(0.0, 2 * np.pi, 17):
            assert abs(evolve_lower_symbol(s3_model, z, t)) <= abs(z) * (1 + 1e-12)

    def test_classical_rotation(self, classical_model):
        """Test q = 1 rotates z rigidly"""
        z = 1.5 + 0.5j
        for t in (0.3, 2.0):
            expected = complex(np.exp(1j * t) * z)
            assert evolve_lower_symbol(classical_model, z, t) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("spec", PISOT_SPECS)
    def test_periodic_on_grid(self, spec):
        """Test the 2 pi return on a 1000-point grid"""
        model = build_model(spec, z_max=2.0)
        z = 1.0
        gaps = [
            abs(evolve_lower_symbol(model, z, t + 2 * math.pi) - evolve_lower_symbol(model, z, t))
            for t in np.linspace(0.0, 2 * math.pi, 1000)
        ]
        assert max(gaps) < 1e-9

    @pytest.mark.parametrize("q", [1 / math.sqrt(2), 1 / math.e, 1 / math.pi], ids=["sqrt2", "e", "pi"])
    def test_irrational_q_not_periodic(self, q):
        """Test q mapped from sqrt(2), e and pi misses the 2 pi return at |z| = 1"""
        model = build_model(q, z_max=2.0)
        z = 1.0
        gaps = [
            abs(evolve_lower_symbol(model, z, t + 2 * math.pi) - evolve_lower_symbol(model, z, t))
            for t in np.linspace(0.0, 2 * math.pi, 1000)
        ]
        assert max(gaps) > 1e-3

    def test_folded_q_matches(self):
        """Test q and 1/q give the same trajectory"""
        inner, outer = build_model(1 / math.e, z_max=2.0), build_model(math.e, z_max=2.0)
        for t in (0.5, 4.0):
            assert evolve_lower_symbol(outer, 1.0, t) == pytest.approx(evolve_lower_symbol(inner, 1.0, t), rel=1e-12)

    def test_generic_q_not_periodic(self):
        """Test a non-Pisot q does not return after 2 pi"""
        model = build_model(0.5, z_max=2.0)
        z = 1.5
        assert abs(evolve_lower_symbol(model, z, 2 * math.pi) - z) > 1e-3

    def test_evolve_outside_radius(self, small_model):
        """Test |z| > z_max is refused"""
        with pytest.raises(OutOfDomain):
            evolve_lower_symbol(small_model, 3.0, 1.0)

    def test_phase_density_bounds(self, s3_model):
        """Test 0 <= rho <= 1 and rho(z0, z0, 0) = 1"""
        z0 = 1.0
        assert phase_density(s3_model, z0, z0) == pytest.approx(1.0, rel=1e-12)
        for z in (0.0, 0.5j, -1.0, 2.0 + 2.0j):
            for t in (0.0, 0.7, 3.0):
                value = phase_density(s3_model, z0, z, t)
                assert 0.0 <= value <= 1.0

    @pytest.mark.parametrize("spec", PISOT_SPECS)
    def test_phase_density_periodic(self, spec):
        """Test the phase density repeats after 2 pi for integer spectra"""
        model = build_model(spec, z_max=3.0)
        z0 = 1.0 + 1.0j
        for z in (0.0, 0.5j, -1.0 + 0.3j, 2.0 + 1.0j):
            for t in (0.0, 0.9, 4.1):
                later = phase_density(model, z0, z, t + 2 * math.pi)
                assert later == pytest.approx(phase_density(model, z0, z, t), abs=1e-9)

    def test_phase_density_overlap(self, s3_model):
        """Test rho at t = 0 is the coherent-state overlap"""
        z0, z = 1.0, 0.6 + 0.8j
        overlap = np.vdot(coherent_state(s3_model, z).coeffs, coherent_state(s3_model, z0).coeffs)
        assert phase_density(s3_model, z0, z) == pytest.approx(abs(overlap) ** 2, rel=1e-10)


if __name__ == "__main__":
    pytest.main(["-v"])
