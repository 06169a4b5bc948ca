"""Matrix flows, factor flows, trace Hamiltonians, canonical maps."""

import numpy as np
import pytest

from painlab.catalog import PhaseState, eval_h, lookup, vector_field
from painlab.parametrizations import assemble
from painlab.sampling import rng_from_seed, sample_params, sample_state
from painlab.schlesinger import (bc_rhs, bc_vector, from_canonical,
                                 induced_state_field, schlesinger_rhs,
                                 state_from_bc_vector, to_canonical,
                                 trace_hamiltonian)


def random_system(rng, n_pts=4, L=2, scale=0.4):
    pts = [1.6 + 0.4j, -0.7 + 0.6j, 1.0, 0.0][:n_pts]
    mats = [scale * (rng.normal(size=(L, L)) + 1j * rng.normal(size=(L, L)))
            for _ in pts]
    return pts, mats


def test_commuting_residues_give_zero_flow():
    rng = rng_from_seed(1)
    d = [np.diag(rng.normal(size=3) + 1j * rng.normal(size=3))
         for _ in range(3)]
    pts = [1.5, 1.0, 0.0]
    ders = schlesinger_rhs(pts, d, 1)
    assert max(np.max(np.abs(x)) for x in ders) < 1e-14


def test_derivatives_are_traceless_and_sum_to_zero():
    rng = rng_from_seed(2)
    pts, mats = random_system(rng)
    ders = schlesinger_rhs(pts, mats, 1)
    for d in ders:
        assert abs(np.trace(d)) < 1e-12
    assert np.max(np.abs(sum(ders))) < 1e-12


def test_flow_is_hamiltonian_for_trace_function():
    # the entrywise bracket {(A)_kl, (A)_rs} = d_rl A_ks - d_ks A_rl turns
    # the trace Hamiltonian into {H, A_j} = [(dH/dA_j)^T, A_j]; check that
    # against finite differences of H in the matrix entries
    rng = rng_from_seed(3)
    pts, mats = random_system(rng, n_pts=4, L=2)
    i = 1
    ders = schlesinger_rhs(pts, mats, i)
    h = 1e-7

    def H(ms):
        return trace_hamiltonian(pts, ms, i)

    for j in range(len(mats)):
        G = np.zeros((2, 2), dtype=complex)
        for r in range(2):
            for s in range(2):
                ms_p = [m.copy() for m in mats]
                ms_m = [m.copy() for m in mats]
                ms_p[j][r, s] += h
                ms_m[j][r, s] -= h
                G[r, s] = (H(ms_p) - H(ms_m)) / (2 * h)
        bracket = G.T @ mats[j] - mats[j] @ G.T
        assert np.max(np.abs(bracket - ders[j])) < 1e-6


def test_trace_hamiltonian_diagonal_expansion():
    d1 = np.diag([0.3, -0.6])
    d2 = np.diag([0.9, 0.2])
    d3 = np.diag([-0.1, 0.5])
    pts = [1.8, 1.0, 0.0]
    got = trace_hamiltonian(pts, [d1, d2, d3], 1)
    want = sum(d1[k, k] * d2[k, k] for k in range(2)) / (1.8 - 1.0) \
        + sum(d1[k, k] * d3[k, k] for k in range(2)) / 1.8
    assert abs(got - want) < 1e-14


def test_trace_hamiltonian_conjugation_invariant():
    rng = rng_from_seed(4)
    pts, mats = random_system(rng)
    g = np.diag([1.0, 2.5 - 0.5j])
    gi = np.linalg.inv(g)
    conj = [gi @ m @ g for m in mats]
    a = trace_hamiltonian(pts, mats, 1)
    b = trace_hamiltonian(pts, conj, 1)
    assert abs(a - b) < 1e-12 * (1 + abs(a))


def test_catalog_hamiltonian_is_scaled_trace_hamiltonian():
    # H_i equals t_i(t_i-1)(trace H_i + correction) up to a state-free shift
    sid = "21,21,21,21,111"
    rng = rng_from_seed(5)
    par = sample_params(sid, rng, generic=True)
    times = (1.7 + 0.4j, -0.8 + 0.6j)

    def shifted(i, st):
        sys = assemble(sid, par, st)
        pts = st.t + (1.0, 0.0)
        htr = trace_hamiltonian(pts, sys.residues, i)
        if i == 1:
            corr = st.q[0] * st.p[0] / st.t[0] + st.q[2] * st.p[2] / st.t[0]
        else:
            corr = st.q[1] * st.p[1] / st.t[1]
        ti = st.t[i - 1]
        return eval_h(sid, i, par, st) - ti * (ti - 1) * (htr + corr)

    st1 = sample_state(sid, rng, times=times)
    st2 = sample_state(sid, rng, times=times)
    for i in (1, 2):
        d1, d2 = shifted(i, st1), shifted(i, st2)
        assert abs(d1 - d2) < 1e-9 * (1 + abs(d1))


def test_bc_rhs_product_rule_matches_matrix_flow():
    rng = rng_from_seed(6)
    pts = [1.6 + 0.4j, -0.7 + 0.6j, 1.0, 0.0]
    Bs = [0.5 * (rng.normal(size=(3, r)) + 1j * rng.normal(size=(3, r)))
          for r in (1, 1, 2, 1)]
    Cs = [0.5 * (rng.normal(size=(r, 3)) + 1j * rng.normal(size=(r, 3)))
          for r in (1, 1, 2, 1)]
    mats = [b @ c for b, c in zip(Bs, Cs)]
    for i in (1, 2):
        dBs, dCs = bc_rhs(pts, Bs, Cs, i)
        ders = schlesinger_rhs(pts, mats, i)
        for dB, dC, B, C, dA in zip(dBs, dCs, Bs, Cs, ders):
            assert np.max(np.abs(dB @ C + B @ dC - dA)) < 1e-12


def test_bc_rhs_zero_first_factor_is_fixed():
    rng = rng_from_seed(7)
    pts = [1.6 + 0.4j, -0.7 + 0.6j, 1.0, 0.0]
    Bs = [rng.normal(size=(3, 1)) + 0j for _ in pts]
    Cs = [rng.normal(size=(1, 3)) + 0j for _ in pts]
    Cs[0] = np.zeros((1, 3), dtype=complex)
    for i in (1, 2):
        _, dCs = bc_rhs(pts, Bs, Cs, i)
        assert np.max(np.abs(dCs[0])) == 0


def test_bc_rhs_commuting_matrices_preserve_rank():
    # commuting diagonal residues: derivative factors stay scalar multiples
    pts = [2.0, 1.0, 0.0]
    Bs = [np.array([[1.0], [0.0]]), np.array([[0.0], [1.0]]),
          np.array([[1.0], [1.0]])]
    Cs = [np.array([[0.3, 0.0]]), np.array([[0.0, -0.7]]),
          np.array([[0.0, 0.0]])]
    dBs, dCs = bc_rhs(pts, Bs, Cs, 1)
    for dB in dBs:
        assert dB.shape[1] == 1


def test_canonical_round_trips():
    for sid in ("21,21,21,21,111", "31,31,22,22,22", "22,22,211,211"):
        rng = rng_from_seed(8)
        desc = lookup(sid)
        for _ in range(20):
            par = sample_params(sid, rng, generic=True)
            st = sample_state(sid, rng)
            try:
                bc = bc_vector(sid, par, st)
            except ValueError:
                continue
            back = state_from_bc_vector(sid, par, bc, st.t)
            dev = max(abs(np.array(back.q + back.p) - np.array(st.q + st.p)))
            assert dev < 1e-10


def test_involutive_map_is_exact():
    sid = "22,22,211,211"
    rng = rng_from_seed(9)
    par = sample_params(sid, rng)
    st = sample_state(sid, rng)
    bc = bc_vector(sid, par, st)
    assert bc[:3] == tuple(-z for z in st.p)
    assert bc[3:] == st.q


def test_singular_locus_raises_not_nan():
    sid = "21,21,21,21,111"
    rng = rng_from_seed(10)
    par = sample_params(sid, rng)
    # t2*p2 - q3*p1 == 0 is the declared singular locus of the map
    st = PhaseState((0.3, 0.4, 1.0), (0.5, 0.25, 0.7),
                    (2.0 + 0j, 0.5 + 0j))
    # arrange q3*p1 == t2*p2
    st = PhaseState((0.3, 0.4, (st.t[1] * st.p[1]) / st.p[0]),
                    st.p, st.t)
    with pytest.raises(ValueError):
        bc_vector(sid, par, st)


def test_to_canonical_inverts_from_canonical():
    for sid in ("21,21,21,21,111", "22,22,211,211"):
        rng = rng_from_seed(11)
        par = sample_params(sid, rng, generic=True)
        st = sample_state(sid, rng)
        sys = from_canonical(sid, par, st)
        back = to_canonical(sid, par, sys)
        assert max(abs(np.array(back.q + back.p) - np.array(st.q + st.p))) \
            < 1e-9


def test_catalog_field_matches_matrix_side():
    # the canonical flow of the trace Hamiltonian, pushed through the
    # coordinate maps, is an independent derivation of the vector field
    for sid in ("21,21,21,21,111", "31,31,22,22,22", "22,22,211,211"):
        rng = rng_from_seed(12)
        desc = lookup(sid)
        done = 0
        while done < 3:
            par = sample_params(sid, rng, generic=True)
            st = sample_state(sid, rng)
            try:
                for i in range(1, desc.n_times + 1):
                    ds = induced_state_field(sid, par, st, i)
                    dc = vector_field(sid, i, par, st)
                    dev = max(abs(a - b) for a, b in
                              zip(ds[0] + ds[1], dc[0] + dc[1]))
                    assert dev < 1e-9 * (1 + max(abs(x) for x in ds[0] + ds[1]))
            except ValueError:
                continue
            done += 1
