"""Descriptors, parameter maps, Hamiltonian evaluation, vector fields."""

import pytest

from painlab.catalog import (PhaseState, alpha_relation_residual,
                             derive_alphas, eval_h, full_params, list_systems,
                             lookup, vector_field)
from painlab.fuchsian import accessory_count
from painlab.sampling import rng_from_seed, sample_params, sample_state


def test_lookup_dimensions():
    assert (lookup("11,11,11,11").n_times, lookup("11,11,11,11").n_pairs) == (1, 1)
    assert (lookup("21,21,21,21,111").n_times,
            lookup("21,21,21,21,111").n_pairs) == (2, 3)
    assert (lookup("51,33,33,111111").n_times,
            lookup("51,33,33,111111").n_pairs) == (1, 3)


def test_lookup_unknown_id():
    with pytest.raises(KeyError):
        lookup("99,99")


def test_catalog_size():
    assert len(list_systems()) == 17


def test_partition_count_matches_times():
    for sid in list_systems():
        d = lookup(sid)
        assert len(d.partitions) == d.n_times + 3


def test_accessory_count_equals_phase_dimension():
    for sid in list_systems():
        d = lookup(sid)
        assert accessory_count(sid) == 2 * d.n_pairs


def test_hvi_alpha_relation():
    rng = rng_from_seed(2)
    par = sample_params("11,11,11,11", rng)
    al = derive_alphas("11,11,11,11", par)
    total = al["alpha0"] + al["alpha1"] + 2 * al["alpha2"] + al["alpha3"] \
        + al["alpha4"]
    assert abs(total - 1) < 1e-12


def test_alphas_at_zero_exponents():
    par = {n: 0.0 for n in lookup("21,21,21,21,111").param_names}
    al = derive_alphas("21,21,21,21,111", par)
    assert al["alpha0"] == 0 and al["alpha4"] == 1 and al["alpha5"] == -1
    assert al["alpha1"] == al["alpha2"] == al["alpha3"] == 0


def test_fuchs_relation_solved_exactly():
    rng = rng_from_seed(3)
    for sid in list_systems():
        for _ in range(5):
            par = sample_params(sid, rng)
            assert abs(lookup(sid).fuchs_relation(par)) < 1e-12
            assert alpha_relation_residual(sid, par) < 1e-10


def test_fuchs_violation_raises():
    par = dict.fromkeys(lookup("21,21,21,21,111").param_names, 0.5)
    with pytest.raises(ValueError):
        derive_alphas("21,21,21,21,111", par)


def test_derive_alphas_is_linear_in_homogeneous_part():
    rng = rng_from_seed(4)
    for sid in ("21,21,21,21,111", "31,22,211,1111", "51,33,222,222"):
        par = sample_params(sid, rng)
        zero = {k: 0.0 for k in par}
        base = derive_alphas(sid, zero)
        a1 = derive_alphas(sid, par)
        a2 = derive_alphas(sid, {k: 2 * v for k, v in par.items()})
        for name in a1:
            hom1 = a1[name] - base[name]
            hom2 = a2[name] - base[name]
            assert abs(hom2 - 2 * hom1) < 1e-12 * (1 + abs(hom2))


def test_hvi_vanishes_at_origin_with_zero_alphas():
    par = {"alpha0": 0.0, "alpha1": 0.0, "alpha2": 0.5, "alpha3": 0.0,
           "alpha4": 0.0}
    st = PhaseState((0.0,), (0.7 - 0.2j,), (0.6 + 0.4j,))
    assert eval_h("11,11,11,11", 1, par, st) == 0
    dq, dp = vector_field("11,11,11,11", 1, par, st)
    assert abs(dq[0]) == 0


def test_trace_form_zero_case():
    # alpha2 = alpha5 = 0 and p = 0 makes the matrix P vanish
    par = {"alpha0": 0.3 + 0.1j, "alpha1": 0.2, "alpha2": 0.0,
           "alpha3": 0.5 - 0.1j, "alpha4": -0.0 - 0.0j, "alpha5": 0.0}
    par["alpha4"] = 1 - par["alpha0"] - par["alpha1"] - par["alpha3"]
    st = PhaseState((0.4, -0.7 + 0.2j), (0.0, 0.0), (1.7 + 0.3j,))
    assert abs(eval_h("22,22,22,211", 1, par, st)) < 1e-14


def test_time_collision_rejected():
    with pytest.raises(ValueError):
        PhaseState((0.1,) * 3, (0.1,) * 3, (1.0 + 0j, 0.5))
    with pytest.raises(ValueError):
        PhaseState((0.1,) * 3, (0.1,) * 3, (0.5, 0.5))


def test_eval_h_validates_index():
    rng = rng_from_seed(6)
    par = sample_params("21,21,111,111", rng)
    st = sample_state("21,21,111,111", rng)
    with pytest.raises(ValueError):
        eval_h("21,21,111,111", 2, par, st)


def test_state_dimension_checked():
    rng = rng_from_seed(7)
    par = sample_params("21,21,21,21,111", rng)
    st = sample_state("11,11,11,11,11", rng)
    with pytest.raises(ValueError):
        eval_h("21,21,21,21,111", 1, par, st)


def test_vector_field_matches_finite_differences_everywhere():
    rng = rng_from_seed(8)
    step = 1e-6
    for sid in list_systems():
        desc = lookup(sid)
        par = sample_params(sid, rng)
        st = sample_state(sid, rng)
        for i in range(1, desc.n_times + 1):
            dq, dp = vector_field(sid, i, par, st)
            ti = st.t[i - 1]
            scale = 1.0 / (ti * (ti - 1))
            for j in range(desc.n_pairs):
                p_plus = list(st.p)
                p_minus = list(st.p)
                p_plus[j] += step
                p_minus[j] -= step
                fd = (eval_h(sid, i, par, PhaseState(st.q, p_plus, st.t))
                      - eval_h(sid, i, par, PhaseState(st.q, p_minus, st.t))) \
                    / (2 * step) * scale
                assert abs(dq[j] - fd) <= 1e-6 * (1 + abs(dq[j]))


def test_hamiltonians_are_polynomial_in_phase_variables():
    # dual evaluation at q = p = 0 would raise if any formula divided by a
    # phase variable; only time-variable coefficients may sit in denominators
    from painlab.algebra import Dual
    from painlab.catalog import HAMILTONIANS

    rng = rng_from_seed(10)
    for sid in list_systems():
        desc = lookup(sid)
        par = sample_params(sid, rng)
        merged = full_params(sid, par)
        st = sample_state(sid, rng)
        n = desc.n_pairs
        zeros = tuple(Dual(0.0, (1.0,) * (2 * n)) for _ in range(n))
        for i in range(1, desc.n_times + 1):
            HAMILTONIANS[sid](i, merged, zeros, zeros, st.t)


def test_specialization_of_headline_onto_five_point_system():
    rng = rng_from_seed(9)
    for _ in range(10):
        par = sample_params("21,21,21,21,111", rng, fixed={"rho3": 0.0})
        st = sample_state("21,21,21,21,111", rng)
        st = PhaseState(st.q, (st.p[0], st.p[1], 0.0), st.t)
        al = derive_alphas("21,21,21,21,111", par)
        small = PhaseState(st.q[:2], st.p[:2], st.t)
        for i in (1, 2):
            hb = eval_h("21,21,21,21,111", i, par, st)
            hs = eval_h("11,11,11,11,11", i, al, small)
            assert abs(hb - hs) < 1e-10
