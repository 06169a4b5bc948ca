"""Adaptive integration along complex paths."""

import io

import numpy as np
import pytest

from painlab.catalog import PhaseState
from painlab.integrator import (Arc, ComplexPath, PathMarginError,
                                integrate, integrate_two_time,
                                trajectory_to_csv)
from painlab.sampling import rng_from_seed, sample_params, sample_state


def test_exponential_growth():
    lam = 0.7 - 0.3j
    path = ComplexPath.polyline([0.0, 1.2 + 0.5j])
    rel_tol = 1e-10
    traj = integrate(lambda z, y: lam * y, np.array([1.0 + 0j]), path,
                     rel_tol=rel_tol)
    exact = np.exp(lam * (1.2 + 0.5j))
    assert abs(traj.end_state[0] - exact) / abs(exact) < 10 * rel_tol


def test_scalar_monodromy_multiplier():
    theta = 0.37 + 0.11j
    path = ComplexPath.circle(0.0, 1.0)
    traj = integrate(lambda z, y: (theta / z) * y, np.array([1.0 + 0j]),
                     path, rel_tol=1e-10)
    assert abs(traj.end_state[0] - np.exp(2j * np.pi * theta)) < 1e-8


def test_reversal_returns_to_start():
    theta = 0.4 - 0.2j
    path = ComplexPath.circle(0.0, 1.0)
    rel_tol = 1e-9
    fwd = integrate(lambda z, y: (theta / z) * y, np.array([1.0 + 0j]),
                    path, rel_tol=rel_tol)
    back = integrate(lambda z, y: (theta / z) * y, fwd.end_state,
                     path.reversed(), rel_tol=rel_tol)
    assert abs(back.end_state[0] - 1.0) < 10 * rel_tol * 30


def test_tolerance_monotonicity():
    # endpoint error against a tight reference decreases with rel_tol
    sid = "11,11,11,11"
    rng = rng_from_seed(1)
    par = sample_params(sid, rng)
    st = PhaseState((0.3 + 0.1j,), (-0.2 + 0.4j,), (1.6 + 0.4j,))
    from painlab.catalog import flow_rhs

    rhs = flow_rhs(sid, 1, par, st.t)
    path = ComplexPath.polyline([st.t[0], st.t[0] + 0.6],
                                singularities=[0.0, 1.0])
    y0 = np.array(st.q + st.p, dtype=complex)
    ref = integrate(rhs, y0, path, rel_tol=1e-12, abs_tol=1e-14).end_state
    errors = []
    for tol in (1e-5, 1e-7, 1e-9):
        end = integrate(rhs, y0, path, rel_tol=tol, abs_tol=1e-14).end_state
        errors.append(float(np.max(np.abs(end - ref))))
    assert errors[0] > errors[1] > errors[2]
    assert errors[0] / errors[2] > 100


def test_margin_violation_rejected_at_construction():
    with pytest.raises(PathMarginError):
        ComplexPath.polyline([-1.0, 1.0], singularities=[0.0, 5.0],
                             margin=0.1)


def test_degenerate_arc_rejected():
    with pytest.raises(ValueError):
        Arc(0.0, 0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        Arc(0.0, 1.0, 0.0, 0.0)


def test_zero_length_two_time_returns_input():
    sid = "11,11,11,11,11"
    rng = rng_from_seed(2)
    par = sample_params(sid, rng)
    st = sample_state(sid, rng, times=(1.8 + 0.6j, -0.9 + 0.4j))
    out = integrate_two_time(sid, par, st, 1, st.t[0], 2, st.t[1])
    assert out.q == st.q and out.p == st.p and out.t == st.t


@pytest.mark.parametrize("sid", ["11,11,11,11,11", "21,21,21,21,111"])
def test_two_time_path_order_independence(sid):
    rng = rng_from_seed(3)
    par = sample_params(sid, rng, generic=True)
    st = sample_state(sid, rng, times=(1.8 + 0.6j, -0.9 + 0.4j))
    st = PhaseState(tuple(0.4 * z for z in st.q),
                    tuple(0.4 * z for z in st.p), st.t)
    ta, tb = st.t[0] + 0.2, st.t[1] + 0.2
    a = integrate_two_time(sid, par, st, 1, ta, 2, tb, rel_tol=1e-9)
    b = integrate_two_time(sid, par, st, 2, tb, 1, ta, rel_tol=1e-9)
    assert max(abs(np.array(a.q + a.p) - np.array(b.q + b.p))) < 1e-6


def test_csv_export_layout():
    path = ComplexPath.polyline([0.0, 1.0])
    traj = integrate(lambda z, y: 0 * y, np.array([1.0 + 2.0j, -1.0 + 0j]),
                     path, rel_tol=1e-8, samples=[0.5])
    buf = io.StringIO()
    trajectory_to_csv(traj, buf, component_names=["a", "b"])
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "path_parameter,re_a,im_a,re_b,im_b"
    assert len(lines) == 1 + len(traj.params)
    assert [float(x) for x in lines[1].split(",")] == [0.0, 1.0, 2.0, -1.0, 0.0]
    params = [float(l.split(",")[0]) for l in lines[1:]]
    assert params == sorted(params)
    assert 0.5 in params
