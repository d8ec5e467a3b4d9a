import numpy as np
import numpy.testing as npt
import pytest

from gsslink.constellation import (
    Constellation,
    GssParameters,
    build_gss,
    build_pm16qam,
    build_ps_pm16qam,
    deserialize,
    dof_count,
    gss_bounds,
    gss_first_orthant,
    load,
    orthant_symmetry,
    papr,
    polarization_powers,
    save,
    serialize,
    shell_count,
    unconstrained_dof,
    validate_shape,
    xy_symmetry,
)
from gsslink.errors import ConstellationError, ParseError
from gsslink.utils import bits_to_int

# per-dimension sign bit, amplitude bit -> PAM-4 level
PAM4_GRAY = {(1, 0): -3, (1, 1): -1, (0, 1): 1, (0, 0): 3}


def _row_of_label(c):
    rows = np.empty(c.size, dtype=np.int64)
    rows[c.label_ints] = np.arange(c.size)
    return rows


class TestConstellationModel(object):
    def test_rejects_duplicate_points(self):
        points = np.array([[1.0, 0, 0, 0], [1.0, 0, 0, 0]])
        with pytest.raises(ConstellationError):
            Constellation(points, [[0], [1]], [0.5, 0.5])

    def test_rejects_bad_pmf(self):
        points = np.array([[1.0, 0, 0, 0], [-1.0, 0, 0, 0]])
        with pytest.raises(ConstellationError):
            Constellation(points, [[0], [1]], [0.5, 0.6])

    def test_rejects_size_mismatch(self):
        points = np.eye(4)[:3]
        with pytest.raises(ConstellationError):
            Constellation(points, [[0, 0], [0, 1], [1, 0]], np.full(3, 1 / 3))

    def test_rejects_repeated_labels(self):
        points = np.array([[1.0, 0, 0, 0], [-1.0, 0, 0, 0]])
        with pytest.raises(ConstellationError):
            Constellation(points, [[1], [1]], [0.5, 0.5])

    def test_arrays_read_only(self, pm16qam):
        with pytest.raises(ValueError):
            pm16qam.points[0, 0] = 0.0

    def test_normalized(self, gss_params):
        c = build_gss(gss_params)
        doubled = c.normalized(2.0)
        npt.assert_allclose(doubled.mean_power(), 2.0)
        npt.assert_array_equal(doubled.labels, c.labels)


class TestPM16QAM(object):
    def test_shape_and_power(self, pm16qam):
        assert pm16qam.size == 256
        assert pm16qam.m == 8
        npt.assert_allclose(pm16qam.mean_power(), 1.0)
        assert pm16qam.is_uniform()

    def test_papr(self, pm16qam):
        npt.assert_allclose(papr(pm16qam), 1.8)

    def test_label_is_row_index(self, pm16qam):
        npt.assert_array_equal(pm16qam.label_ints, np.arange(256))

    @pytest.mark.parametrize('dim', range(4))
    def test_gray_mapping_per_dimension(self, pm16qam, dim):
        levels = np.round(pm16qam.points[:, dim] * np.sqrt(20)).astype(int)
        for row in range(pm16qam.size):
            key = (pm16qam.labels[row, dim], pm16qam.labels[row, 4 + dim])
            assert levels[row] == PAM4_GRAY[key]

    def test_shells(self, pm16qam):
        assert shell_count(pm16qam) == 5

    def test_polarization_balance(self, pm16qam):
        npt.assert_allclose(polarization_powers(pm16qam), (0.5, 0.5))


class TestPSPM16QAM(object):
    def test_half_is_uniform(self, pm16qam):
        c = build_ps_pm16qam(0.5)
        assert c.is_uniform()
        npt.assert_allclose(c.points, pm16qam.points)

    @pytest.mark.parametrize('p_low', [0.3, 0.6, 0.8])
    def test_shaped(self, p_low):
        c = build_ps_pm16qam(p_low)
        npt.assert_allclose(c.pmf.sum(), 1.0)
        npt.assert_allclose(c.mean_power(), 1.0)
        assert c.entropy() < 8.0

    def test_entropy_of_product(self):
        p_low = 0.7
        per_dim = 1 - (p_low * np.log2(p_low) + (1 - p_low) * np.log2(1 - p_low))
        npt.assert_allclose(build_ps_pm16qam(p_low).entropy(), 4 * per_dim)

    @pytest.mark.parametrize('p_low', [0.0, 1.0, -0.1])
    def test_invalid(self, p_low):
        with pytest.raises(ConstellationError):
            build_ps_pm16qam(p_low)


class TestGssShape(object):
    @pytest.mark.parametrize('m, t, dof', [(8, 4, 28), (8, 8, 32), (8, 1, 25), (6, 2, 8)])
    def test_dof(self, m, t, dof):
        assert dof_count(m, t) == dof
        lower, upper = gss_bounds(m, t)
        assert lower.size == upper.size == dof

    def test_unconstrained_dof(self):
        assert unconstrained_dof(8) == 1024

    @pytest.mark.parametrize('m, t', [(4, 1), (8, 3), (8, 16), (5, 2)])
    def test_invalid_shape(self, m, t):
        with pytest.raises(ConstellationError):
            validate_shape(m, t)

    def test_parameter_bounds(self, gss_params):
        radii = gss_params.radii.copy()
        radii[0] = 0.0
        with pytest.raises(ConstellationError):
            GssParameters(8, 4, radii, gss_params.angles)
        angles = gss_params.angles.copy()
        angles[0, 1] = np.pi / 2
        with pytest.raises(ConstellationError):
            GssParameters(8, 4, gss_params.radii, angles)
        with pytest.raises(ConstellationError):
            GssParameters(8, 4, gss_params.radii, angles[:4])

    def test_vector_layout(self, gss_params):
        vector = gss_params.to_vector()
        npt.assert_array_equal(vector[:4], gss_params.radii)
        npt.assert_array_equal(vector[4:7], gss_params.angles[0])
        back = GssParameters.from_vector(8, 4, vector)
        npt.assert_array_equal(back.angles, gss_params.angles)
        with pytest.raises(ConstellationError):
            GssParameters.from_vector(8, 4, vector[:-1])


class TestGssConstruction(object):
    def test_size_power_labels(self, gss_params):
        c = build_gss(gss_params)
        assert c.size == 256
        assert c.shells == 4
        assert c.name == '4D-256-GSS-4'
        npt.assert_allclose(c.mean_power(), 1.0)
        assert np.unique(c.label_ints).size == 256

    def test_sign_bits_select_orthant(self, gss_params):
        c = build_gss(gss_params)
        npt.assert_array_equal(np.sign(c.points), 1 - 2 * c.labels[:, :4].astype(int))

    def test_single_sign_flip_is_single_bit(self, gss_params):
        c = build_gss(gss_params)
        rows = _row_of_label(c)
        for k in range(4):
            partner = rows[c.label_ints ^ (1 << (7 - k))]
            flipped = c.points.copy()
            flipped[:, k] *= -1
            npt.assert_allclose(c.points[partner], flipped)

    def test_last_bit_swaps_polarizations(self, gss_params):
        c = build_gss(gss_params)
        partner = _row_of_label(c)[c.label_ints ^ 1]
        npt.assert_allclose(c.points[partner], c.points[:, [2, 3, 0, 1]])

    def test_shell_bits_share_energy(self, gss_params):
        c = build_gss(gss_params)
        shell = bits_to_int(c.labels[:, 4:6])
        for s in range(4):
            energies = c.energies[shell == s]
            npt.assert_allclose(energies, energies[0])
        assert shell_count(c) == 4
        ratio = c.energies[shell == 3][0] / c.energies[shell == 0][0]
        npt.assert_allclose(ratio, (1.0 / 0.4) ** 2)

    def test_on_shell_rank_follows_theta(self, gss_params):
        angles = gss_params.angles.copy()
        angles[:, 0] = angles[::-1, 0]
        params = GssParameters(8, 4, gss_params.radii, angles)
        points, labels = gss_first_orthant(params)
        npt.assert_array_equal(bits_to_int(labels[:, :2]), [0, 0, 1, 1, 2, 2, 3, 3])
        # theta decreases with the point index, so the rank inside a shell flips
        npt.assert_array_equal(labels[:, 2], [1, 0] * 4)
        npt.assert_allclose(np.linalg.norm(points, axis=1), np.repeat(params.radii, 2))

    def test_single_shell_papr(self):
        angles = np.pi / 4 + 0.03 * np.arange(8)[:, np.newaxis] + np.array([0.0, 0.1, -0.1])
        c = build_gss(GssParameters(8, 1, np.array([0.7]), angles))
        npt.assert_allclose(papr(c), 1.0)
        assert shell_count(c) == 1

    def test_coinciding_points_rejected(self):
        angles = np.full((8, 3), np.pi / 4)
        with pytest.raises(ConstellationError):
            build_gss(GssParameters(8, 1, np.array([0.7]), angles))

    def test_xy_collision(self):
        with pytest.raises(ConstellationError):
            xy_symmetry(np.array([[0.5, 0.2, 0.5, 0.2]]), np.zeros((1, 0)))

    def test_orthant_needs_positive(self):
        with pytest.raises(ConstellationError):
            orthant_symmetry(np.array([[0.5, 0.0, 0.3, 0.2]]), np.zeros((1, 0)))


class TestTextFormat(object):
    @pytest.mark.parametrize('name', ['pm16qam', 'gss', 'ps'])
    def test_lossless(self, name, gss_params, pm16qam):
        c = {'pm16qam': pm16qam, 'gss': build_gss(gss_params), 'ps': build_ps_pm16qam(0.65)}[name]
        back = deserialize(serialize(c))
        npt.assert_array_equal(back.points, c.points)
        npt.assert_array_equal(back.labels, c.labels)
        npt.assert_array_equal(back.pmf, c.pmf)
        assert back.name == c.name
        assert back.shells == c.shells

    def test_save_load(self, tmp_path, gss_params):
        c = build_gss(gss_params)
        path = tmp_path / 'gss.txt'
        save(c, path)
        npt.assert_array_equal(load(path).points, c.points)

    def test_header(self, pm16qam):
        lines = serialize(pm16qam).splitlines()
        assert lines[:3] == ['m=8', 't=-', 'name=PM-16QAM']
        assert len(lines) == 3 + 256

    def test_bad_line_number(self, pm16qam):
        lines = serialize(pm16qam).splitlines()
        lines[4] = '0.1 0.2 0.3'
        with pytest.raises(ParseError) as info:
            deserialize('\n'.join(lines))
        assert info.value.line_no == 5

    def test_bad_header(self, pm16qam):
        text = serialize(pm16qam).replace('m=8', 'bits=8', 1)
        with pytest.raises(ParseError) as info:
            deserialize(text)
        assert info.value.line_no == 1

    def test_truncated(self, pm16qam):
        lines = serialize(pm16qam).splitlines()[:-1]
        with pytest.raises(ParseError):
            deserialize('\n'.join(lines))

    def test_bad_label(self, pm16qam):
        lines = serialize(pm16qam).splitlines()
        fields = lines[3].split()
        fields[4] = '0000000x'
        lines[3] = ' '.join(fields)
        with pytest.raises(ParseError) as info:
            deserialize('\n'.join(lines))
        assert info.value.line_no == 4

    def test_invariant_violation_is_parse_error(self, pm16qam):
        lines = serialize(pm16qam).splitlines()
        lines[4] = lines[3]
        with pytest.raises(ParseError):
            deserialize('\n'.join(lines))

    def test_pmf_not_summing_to_one(self, pm16qam):
        lines = serialize(pm16qam).splitlines()
        for i in range(3, len(lines)):
            fields = lines[i].split()
            fields[5] = repr(0.9 / 256)
            lines[i] = ' '.join(fields)
        with pytest.raises(ParseError):
            deserialize('\n'.join(lines))


class TestGssInvariants(object):
    DRAWS = 1000

    def _draw(self, rng, t):
        lower, upper = gss_bounds(8, t)
        return GssParameters.from_vector(8, t, rng.uniform(lower, upper))

    def test_random_parameters(self):
        rng = np.random.default_rng(20241017)
        shell_choices = [1, 2, 4, 8]
        for draw in range(self.DRAWS):
            t = shell_choices[draw % len(shell_choices)]
            params = self._draw(rng, t)
            c = build_gss(params)

            npt.assert_allclose(c.mean_power(), 1.0, err_msg=f'draw {draw}')
            npt.assert_allclose(c.pmf @ c.points, np.zeros(4), atol=1e-12, err_msg=f'draw {draw}')
            power_x, power_y = polarization_powers(c)
            npt.assert_allclose(power_x, power_y, err_msg=f'draw {draw}')
            npt.assert_array_equal(np.sign(c.points), 1 - 2 * c.labels[:, :4].astype(int))

            # each shell label holds 256 / t points of one energy, ordered like the radii
            p = params.shell_bits
            shell = bits_to_int(c.labels[:, 4 : 4 + p]) if p else np.zeros(c.size, int)
            scale = np.sqrt(c.energies[shell == 0][0]) / params.radii[0]
            for s in range(t):
                on_shell = c.energies[shell == s]
                assert on_shell.size == 256 // t
                npt.assert_allclose(np.sqrt(on_shell), scale * params.radii[s])
            assert shell_count(c) == t

            assert np.unique(c.label_ints).size == c.size
            assert np.unique(np.round(c.points, 12), axis=0).shape[0] == c.size
