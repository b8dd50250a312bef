import math

import numpy as np
import pytest

from conftest import FIG, QUARTER, random_config
from mqeraser import metrics
from mqeraser.core import ZeroProbabilityError, closed_form_state
from mqeraser.measurement import MeasurementBasis
from mqeraser.oracle import (
    DensityMatrix,
    build_initial,
    conditional_decomposition,
    distinguishability_bruteforce,
    embed,
    evolve,
    jc_apply,
    partial_trace,
    project_bruteforce,
    visibility_predictability_bruteforce,
    wootters_concurrence,
)

BELL = np.array([1, 0, 0, 1]) / math.sqrt(2)


class TestRegister:
    def test_initial_n0(self):
        s = build_initial(0)
        assert np.count_nonzero(s.amplitudes) == 2
        assert np.allclose(s.amplitudes[np.nonzero(s.amplitudes)], 1 / math.sqrt(2))

    def test_initial_n3(self):
        s = build_initial(3)
        assert s.norm == pytest.approx(1.0)
        assert s.excitation_leakage() == 0.0

    def test_initial_overlaps_closed_form(self):
        e = embed(closed_form_state(FIG, 0))
        assert abs(np.vdot(e.amplitudes, build_initial(0).amplitudes)) == pytest.approx(1.0, abs=1e-12)

    def test_cap(self):
        with pytest.raises(ValueError):
            build_initial(13)


class TestJC:
    def test_vacuum_branch_is_dark(self):
        psi = np.zeros(8, dtype=complex)
        psi[0b100] = 1.0  # |e, g_1, 0>: atom 1 ground, no photon
        s = jc_apply(type(build_initial(1))(psi, 1), 1, 0.7)
        assert np.allclose(s.amplitudes, psi)

    def test_rotation_additivity(self):
        s = build_initial(1)
        twice = jc_apply(jc_apply(s, 1, math.pi / 8), 1, math.pi / 8)
        once = jc_apply(s, 1, math.pi / 4)
        assert np.max(np.abs(twice.amplitudes - once.amplitudes)) < 1e-15

    def test_sequential_matches_closed_form(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            cfg = random_config(rng, min_N=8, max_N=20)
            for n in range(9):
                dense = evolve(n, cfg.g_dt)
                assert np.max(np.abs(dense.amplitudes - embed(closed_form_state(cfg, n)).amplitudes)) < 1e-12
                assert dense.excitation_leakage() < 1e-12

    def test_bad_index(self):
        with pytest.raises(ValueError):
            jc_apply(build_initial(2), 3, 0.1)
        with pytest.raises(ValueError):
            jc_apply(build_initial(2), 0, 0.1)


class TestPartialTrace:
    def test_s0_maximally_mixed_at_start(self):
        rho = partial_trace(build_initial(0), ["S0"])
        assert np.allclose(np.linalg.eigvalsh(rho.entries), [0.5, 0.5])

    def test_s0_field_quarter_turn(self):
        rho = partial_trace(evolve(1, math.pi / 4), ["S0", "F"]).entries
        # basis |g0>, |g1>, |e0>, |e1>
        expected = np.zeros((4, 4), dtype=complex)
        a2 = 0.5
        expected[1, 1] = a2 / 2
        expected[0, 0] = (1 - a2) / 2
        expected[2, 2] = 0.5
        expected[1, 2] = expected[2, 1] = math.sqrt(a2) / 2
        assert np.max(np.abs(rho - expected)) < 1e-15

    def test_trace_preserved(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            cfg = random_config(rng, min_N=5, max_N=10)
            n = int(rng.integers(0, 6))
            s = evolve(n, cfg.g_dt)
            labels = [lab for lab in s.labels if rng.random() < 0.5] or ["F"]
            assert np.trace(partial_trace(s, labels).entries).real == pytest.approx(1.0, abs=1e-12)

    def test_trace_of_density_matrix_agrees(self):
        s = evolve(3, 0.4)
        full = partial_trace(s, s.labels)
        a = partial_trace(full, ["S0", 2]).entries
        b = partial_trace(s, ["S0", 2]).entries
        assert np.max(np.abs(a - b)) < 1e-15

    @pytest.mark.parametrize("keep", [[], ["X"], [4], ["F", "F"]])
    def test_invalid_labels(self, keep):
        with pytest.raises(ValueError):
            partial_trace(evolve(3, 0.4), keep)


class TestDistinguishability:
    def test_n0_full_probe(self):
        assert distinguishability_bruteforce(build_initial(0), ["F"]) == pytest.approx(1.0, abs=1e-12)

    def test_field_and_atoms(self):
        for n in range(7):
            s = evolve(n, FIG.g_dt)
            assert distinguishability_bruteforce(s, ["F"]) == pytest.approx(FIG.a ** (2 * n), abs=1e-10)
            for i in range(1, n + 1):
                assert distinguishability_bruteforce(s, [i]) == pytest.approx(
                    metrics.distinguishability_S0_atom(FIG, n, i), abs=1e-10
                )

    def test_whole_probe_keeps_all_information(self):
        for n in range(4):
            s = evolve(n, FIG.g_dt)
            assert distinguishability_bruteforce(s, ["F", *range(1, n + 1)]) == pytest.approx(1.0, abs=1e-10)

    def test_pure_bipartite_identity(self):
        # D = sqrt(C^2 + P^2) for S0+F at n = 0
        s = build_initial(0)
        D = distinguishability_bruteforce(s, ["F"])
        C = wootters_concurrence(partial_trace(s, ["S0", "F"]))
        _, P = visibility_predictability_bruteforce(partial_trace(s, ["S0"]))
        assert D == pytest.approx(math.sqrt(C**2 + P**2), abs=1e-10)

    def test_decomposition_weights(self):
        dec = conditional_decomposition(partial_trace(evolve(4, 0.3), ["S0", "F"]))
        assert dec.w1 + dec.w2 == pytest.approx(1.0, abs=1e-12)
        assert dec.w1 >= 0 and dec.w2 >= 0

    def test_probe_excludes_s0(self):
        with pytest.raises(ValueError):
            distinguishability_bruteforce(build_initial(1), ["S0"])


class TestConcurrence:
    def test_bell(self):
        assert wootters_concurrence(np.outer(BELL, BELL)) == pytest.approx(1.0, abs=1e-12)

    def test_product(self):
        v = np.kron([1, 0], [0.6, 0.8])
        assert wootters_concurrence(np.outer(v, v)) == pytest.approx(0.0, abs=1e-12)

    def test_pure_state_formula(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            v = rng.normal(size=4) + 1j * rng.normal(size=4)
            v /= np.linalg.norm(v)
            assert wootters_concurrence(np.outer(v, v.conj())) == pytest.approx(
                2 * abs(v[0] * v[3] - v[1] * v[2]), abs=1e-12
            )

    def test_w_state_pairs(self):
        for n in range(1, 7):
            s = evolve(n, FIG.g_dt)
            for i in range(1, n + 1):
                assert wootters_concurrence(partial_trace(s, ["S0", i])) == pytest.approx(
                    metrics.concurrence_S0_atom(FIG, n, i), abs=1e-10
                )

    def test_dimension(self):
        with pytest.raises(ValueError):
            wootters_concurrence(np.eye(2) / 2)


class TestVisibility:
    def test_mixed(self):
        assert visibility_predictability_bruteforce(np.eye(2) / 2) == (0.0, 0.0)

    def test_pre_measurement(self):
        for n in range(6):
            V, P = visibility_predictability_bruteforce(partial_trace(evolve(n, 0.9), ["S0"]))
            assert V < 1e-12 and P < 1e-12

    def test_post_measurement_quarter_turn(self):
        post, _ = project_bruteforce(evolve(1, math.pi / 4), MeasurementBasis((math.pi / 4,), (0.0,)))
        V, _ = visibility_predictability_bruteforce(partial_trace(post, ["S0"]))
        assert V == pytest.approx(math.sqrt(0.5), abs=1e-12)

    def test_dimension(self):
        with pytest.raises(ValueError):
            visibility_predictability_bruteforce(np.eye(4) / 4)


class TestProjection:
    def test_ground_outcome_probability(self):
        for n in range(1, 6):
            _, prob = project_bruteforce(evolve(n, FIG.g_dt), MeasurementBasis.uniform(n, 0.0))
            assert prob == pytest.approx((FIG.a ** (2 * n) + 1) / 2, abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_completeness(self, n):
        rng = np.random.default_rng(10 + n)
        s = evolve(n, 0.5)
        b = MeasurementBasis(tuple(rng.uniform(0, math.pi / 2, n)), tuple(rng.uniform(0, 2 * math.pi, n)))
        assert sum(project_bruteforce(s, o)[1] for o in b.all_outcomes()) == pytest.approx(1.0, abs=1e-12)

    def test_zero_probability(self):
        with pytest.raises(ZeroProbabilityError):
            project_bruteforce(evolve(2, 0.5), MeasurementBasis.uniform(2, math.pi / 2))


def test_density_matrix_validation():
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(2), ("S0",))
    with pytest.raises(ValueError):
        DensityMatrix(np.diag([1.5, -0.5]), ("S0",))
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(4) / 4, ("S0",))
