"""Rigid fourth-order systems and the particular-solution lifts.

Each case pins an invariant submanifold of a parent catalog system on
which the dynamics linearize to a rigid (zero accessory parameter)
Fuchsian system in an auxiliary vector y = (y0, y1, y2, y3).  The case
data carries the residue matrices of the rigid system, the submanifold
constraints, the lift recovering the parent coordinates from y, and the
printed logarithmic-derivative rule for y0 used as a consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Dual
from .catalog import PhaseState, full_params, lookup, vector_field

__all__ = ["RigidCase", "RIGID_CASES", "rigid_case", "build_rigid_matrices",
           "rigid_rhs", "specialization_residual", "constraint_flow_drift",
           "lift_solution", "pfaff_residual", "riemann_scheme_columns",
           "lift_report_csv"]

_E23 = np.array([[1, 0, 0, 0],
                 [0, 0, 1, 0],
                 [0, 1, 0, 0],
                 [0, 0, 0, 1]], dtype=complex)


@dataclass(frozen=True)
class RigidCase:
    """One invariant-manifold case: matrices, constraints, lift."""

    case_id: str
    parent: str
    spectral_type: str
    n_times: int
    # map merged parent params -> violation of the parameter constraint
    parameter_constraint: callable
    # per deformation time: merged params -> (M_t | None, M_1, M_0)
    matrices: callable
    # constraint expressions g_k(q, p, t, par) cutting the submanifold
    constraints: tuple
    # y (len 4), t values, par -> (q, p) on the manifold
    lift: callable
    # i, y, dy/dt_i, t, par -> residual of the printed log-derivative rule
    pfaff: callable
    # per time: list of (point label, exponents builder par -> tuple)
    scheme: callable
    # rng with par fixed -> a state on the manifold
    manifold_state: callable


def _mats_case51(par):
    a1, a2, a3, a5 = par["alpha1"], par["alpha2"], par["alpha3"], par["alpha5"]
    r3 = par["rho3"]
    Mt = np.array([
        [0, 0, 0, 0],
        [0, -a2, -a1, -1],
        [0, a2, a1, 1],
        [0, -a2 * r3, -a1 * r3, -r3]], dtype=complex)
    M1_1 = np.array([
        [a1, a5 + 1, 0, 0],
        [a1, a5 + 1, 0, 0],
        [0, 0, 0, 0],
        [0, 0, a1 * r3, a1 + a5 + 1]], dtype=complex)
    M0_1 = np.array([
        [0, -a5 - 1, 0, 0],
        [0, a1 - a3 + 1, 0, 0],
        [0, -a2, 0, 0],
        [0, a2 * r3, 0, 0]], dtype=complex)
    M1_2 = np.array([
        [-a2, 0, a5 - r3 + 1, -1],
        [0, 0, 0, 0],
        [-a2, 0, a5 - r3 + 1, -1],
        [0, 0, 0, 0]], dtype=complex)
    M0_2 = np.array([
        [0, 0, -a5 + r3 - 1, 1],
        [0, 0, a1, 1],
        [0, 0, -a2 - a3 + r3 + 1, 0],
        [0, 0, 0, -a2 - a3 + r3 + 1]], dtype=complex)
    return ((Mt, M1_1, M0_1), (Mt, M1_2, M0_2))


def _mats_case52(par):
    a0, a2, a3, a5 = par["alpha0"], par["alpha2"], par["alpha3"], par["alpha5"]
    Mt = np.array([
        [0, 0, 0, 0],
        [0, a2, -a2, 0],
        [0, -a2, a2, 0],
        [0, 0, 0, 0]], dtype=complex)
    M1 = np.array([
        [-(a0 + a5 + 1), -1, 0, 0],
        [a0 * (a0 + a5 + 1), a0, 0, 0],
        [0, 0, -(a0 + a2 + a5 + 1), -1],
        [0, 0, (a0 + a2) * (a0 + a2 + a5 + 1), a0 + a2]], dtype=complex)
    M0 = np.array([
        [-a3, 1, 0, 0],
        [0, 0, 0, 0],
        [0, a2, -a3, 1],
        [0, 0, 0, 0]], dtype=complex)
    first = (Mt, M1, M0)
    second = tuple(_E23 @ m @ _E23 for m in first)
    return (first, second)


def _mats_case53(par):
    a1, a2, a3, a4, a5 = (par["alpha1"], par["alpha2"], par["alpha3"],
                          par["alpha4"], par["alpha5"])
    th21 = par["theta21"]
    M1 = np.array([
        [-a3, -a1, -a5, 0],
        [-a3, -a1 + th21, -a5 - th21, a3],
        [-a3, -a1, -a5, 0],
        [0, -th21, th21, -a3]], dtype=complex)
    M0 = np.array([
        [0, 0, 0, 0],
        [a3, -a2 - a3, 0, -a3],
        [a3, a1, a4 + a5 - 1, 0],
        [0, 0, 0, 0]], dtype=complex)
    return ((None, M1, M0),)


def _mats_case54(par):
    a0, a1, a2, a5 = par["alpha0"], par["alpha1"], par["alpha2"], par["alpha5"]
    eta, r4 = par["eta"], par["rho4"]
    M1 = np.array([
        [a1 - a5 - r4, -1, -1, -1],
        [a1 * (a1 - eta), -a1 - a5 + eta - r4, -a1, -a1 + eta],
        [-(a1 - eta) * (a5 + r4) * (eta - r4) / eta,
         (a5 + r4) * (eta - r4) / eta, eta - r4, 0],
        [-a1 * (a5 - eta + r4) * r4 / eta,
         (a5 - eta + r4) * r4 / eta, 0, -r4]], dtype=complex)
    M0 = np.array([
        [-a0 - a1 - a2, 1, 1, 1],
        [0, -a0, a1, a1 - eta],
        [0, 0, 0, 0],
        [0, 0, 0, 0]], dtype=complex)
    return ((None, M1, M0),)


def _lift51(y, t, par):
    y0, y1, y2, y3 = y
    t1, t2 = t
    a1 = par["alpha1"]
    q1 = y1 / y0
    q2 = y2 / y0
    p3 = -y3 / (t2 * y1)
    return (q1, q2, 0.0), (a1 / q1, 0.0, p3)


def _lift52(y, t, par):
    y0, y1, y2, y3 = y
    t1, t2 = t
    a2 = par["alpha2"]
    p1 = -y1 / (t1 * y0)
    p2 = -y2 / (t2 * y0)
    p3 = (p1 * p2 - y3 / (y0 * t1 * t2)) / a2
    return (0.0, 0.0, 0.0), (p1, p2, p3)


def _lift53(y, t, par):
    y0, y1, y2, y3 = y
    (tt,) = t
    return (tt * y1 / y0, tt * y2 / y0, y3 / y0), (0.0, 0.0, 0.0)


def _lift54(y, t, par):
    # ratio signs follow the residue matrices and the log-derivative rule,
    # which jointly contradict the published ratio display
    y0, y1, y2, y3 = y
    (tt,) = t
    a1, eta = par["alpha1"], par["eta"]
    p1 = -y1 / (tt * y0)
    p3 = eta * y3 / (tt * y1)
    p2 = -(y2 + y3) / (tt * y0)
    return (a1 / p1, 0.0, 0.0), (p1, p2, p3)


def _pfaff51(i, y, dy, t, par):
    a1, a2, a5, r3 = par["alpha1"], par["alpha2"], par["alpha5"], par["rho3"]
    ti = t[i - 1]
    lhs = ti * (ti - 1) * dy[0] / y[0]
    q1 = y[1] / y[0]
    q2 = y[2] / y[0]
    if i == 1:
        return lhs - ((a5 + 1) * q1 + a1 * ti)
    p3 = -y[3] / (t[1] * y[1])
    return lhs - (t[1] * q1 * p3 + (a5 - r3 + 1) * q2 - a2 * ti)


def _pfaff52(i, y, dy, t, par):
    a0, a3, a5 = par["alpha0"], par["alpha3"], par["alpha5"]
    ti = t[i - 1]
    lhs = ti * (ti - 1) * dy[0] / y[0]
    pi = -y[i] / (ti * y[0])
    return lhs - (ti * pi - (a0 + a5 + 1) * ti - a3 * (ti - 1))


def _pfaff53(i, y, dy, t, par):
    a1, a3, a5 = par["alpha1"], par["alpha3"], par["alpha5"]
    (tt,) = t
    lhs = tt * (tt - 1) * dy[0] / y[0]
    q1 = tt * y[1] / y[0]
    q2 = tt * y[2] / y[0]
    return lhs - (-a1 * q1 - a5 * q2 - a3 * tt)


def _pfaff54(i, y, dy, t, par):
    a0, a1, a2, a5, r4 = (par["alpha0"], par["alpha1"], par["alpha2"],
                          par["alpha5"], par["rho4"])
    (tt,) = t
    lhs = tt * (tt - 1) * dy[0] / y[0]
    p1 = -y[1] / (tt * y[0])
    p2 = -(y[2] + y[3]) / (tt * y[0])
    return lhs - (tt * p1 + tt * p2 + (a1 - a5 - r4) * tt
                  - (a0 + a1 + a2) * (tt - 1))


def _scheme51(par):
    a1, a2, a3, a5, r3 = (par["alpha1"], par["alpha2"], par["alpha3"],
                          par["alpha5"], par["rho3"])
    first = (
        (a1 - a2 - r3, 0, 0, 0),
        (a1 + a5 + 1, a1 + a5 + 1, 0, 0),
        (a1 - a3 + 1, 0, 0, 0),
        (-a1 + a2 + a3 - a5 - 2, -a1 - a5 + r3 - 1, -a1, -a1),
    )
    second = (
        (a1 - a2 - r3, 0, 0, 0),
        (-a2 + a5 - r3 + 1, 0, 0, 0),
        (-a2 - a3 + r3 + 1, -a2 - a3 + r3 + 1, 0, 0),
        (-a1 + a2 + a3 - a5 - 2, a2 + a3 - 1, a2, a2),
    )
    return (first, second)


def _scheme52(par):
    a0, a2, a3, a5 = par["alpha0"], par["alpha2"], par["alpha3"], par["alpha5"]
    col = (
        (2 * a2, 0, 0, 0),
        (-a5 - 1, -a5 - 1, 0, 0),
        (-a3, -a3, 0, 0),
        (a0 + a3 + a5 + 1, a0 + a3 + a5 + 1, -a0 - a2, -a0 - a2),
    )
    return (col, col)


def _scheme53(par):
    a1, a2, a3, a4, a5 = (par["alpha1"], par["alpha2"], par["alpha3"],
                          par["alpha4"], par["alpha5"])
    th21 = par["theta21"]
    return ((
        (-a1 - a3 - a5, -a3 + th21, 0, 0),
        (a4 + a5 - 1, -a2 - a3, 0, 0),
        (-a4 + 1, a1 + a2 + a3 - th21, a3, a3),
    ),)


def _scheme54(par):
    a0, a1, a2, a5 = par["alpha0"], par["alpha1"], par["alpha2"], par["alpha5"]
    eta, r4 = par["eta"], par["rho4"]
    return ((
        (-a5 + eta - 2 * r4, -a5 + eta - 2 * r4, 0, 0),
        (-a0 - a1 - a2, -a0, 0, 0),
        (a0 + a2 + a5 + r4, a0 + a1 + a5 - eta + r4, -eta + r4, r4),
    ),)


def _manifold51(rng, par, times):
    from .sampling import rational_complex

    q1 = rational_complex(rng, nonzero=True)
    q2 = rational_complex(rng)
    p3 = rational_complex(rng)
    return PhaseState((q1, q2, 0.0), (par["alpha1"] / q1, 0.0, p3), times)


def _manifold52(rng, par, times):
    from .sampling import rational_complex

    p = tuple(rational_complex(rng) for _ in range(3))
    return PhaseState((0.0, 0.0, 0.0), p, times)


def _manifold53(rng, par, times):
    from .sampling import rational_complex

    q = tuple(rational_complex(rng) for _ in range(3))
    return PhaseState(q, (0.0, 0.0, 0.0), times)


def _manifold54(rng, par, times):
    from .sampling import rational_complex

    p1 = rational_complex(rng, nonzero=True)
    p2 = rational_complex(rng)
    p3 = rational_complex(rng)
    return PhaseState((par["alpha1"] / p1, 0.0, 0.0), (p1, p2, p3), times)


RIGID_CASES = {
    "case-21x4": RigidCase(
        case_id="case-21x4",
        parent="21,21,21,21,111",
        spectral_type="31,31,22,211",
        n_times=2,
        parameter_constraint=lambda par: (par["alpha0"] + par["alpha1"]
                                          + par["alpha5"] + 1),
        matrices=_mats_case51,
        constraints=(
            lambda q, p, t, par: q[0] * p[0] - par["alpha1"],
            lambda q, p, t, par: p[1],
            lambda q, p, t, par: q[2],
        ),
        lift=_lift51,
        pfaff=_pfaff51,
        scheme=_scheme51,
        manifold_state=_manifold51,
    ),
    "case-3131": RigidCase(
        case_id="case-3131",
        parent="31,31,22,22,22",
        spectral_type="31,22,22,22",
        n_times=2,
        parameter_constraint=lambda par: par["alpha1"],
        matrices=_mats_case52,
        constraints=(
            lambda q, p, t, par: q[0],
            lambda q, p, t, par: q[1],
            lambda q, p, t, par: q[2],
        ),
        lift=_lift52,
        pfaff=_pfaff52,
        scheme=_scheme52,
        manifold_state=_manifold52,
    ),
    "case-21-111": RigidCase(
        case_id="case-21-111",
        parent="21,111,111,111",
        spectral_type="211,211,211",
        n_times=1,
        parameter_constraint=lambda par: par["eta"],
        matrices=_mats_case53,
        constraints=(
            lambda q, p, t, par: p[0],
            lambda q, p, t, par: p[1],
            lambda q, p, t, par: p[2],
        ),
        lift=_lift53,
        pfaff=_pfaff53,
        scheme=_scheme53,
        manifold_state=_manifold53,
    ),
    "case-3122": RigidCase(
        case_id="case-3122",
        parent="31,22,211,1111",
        spectral_type="22,211,1111",
        n_times=1,
        parameter_constraint=lambda par: (par["alpha1"] + par["alpha3"]
                                          - par["eta"]),
        matrices=_mats_case54,
        constraints=(
            lambda q, p, t, par: q[0] * p[0] - par["alpha1"],
            lambda q, p, t, par: q[1],
            lambda q, p, t, par: q[2],
        ),
        lift=_lift54,
        pfaff=_pfaff54,
        scheme=_scheme54,
        manifold_state=_manifold54,
    ),
}


def rigid_case(case_id: str) -> RigidCase:
    try:
        return RIGID_CASES[case_id]
    except KeyError:
        raise KeyError(f"unknown rigid case {case_id!r}") from None


def build_rigid_matrices(case: RigidCase, params, check=True, tol=1e-9):
    """Residue matrices of the rigid system(s), one tuple per time."""
    par = full_params(case.parent, params)
    if check:
        res = abs(case.parameter_constraint(par))
        if res > tol:
            raise ValueError(
                f"{case.case_id}: parameter constraint violated ({res:.3e})")
    return case.matrices(par)


def rigid_rhs(case: RigidCase, params, i, other_times):
    """dy/dt_i = (M_t/(t_i - t_j) + M_1/(t_i - 1) + M_0/t_i) y."""
    mats = build_rigid_matrices(case, params)
    Mt, M1, M0 = mats[i - 1]

    def rhs(z, y):
        M = M1 / (z - 1) + M0 / z
        if Mt is not None:
            tj = other_times[0]
            M = M + Mt / (z - tj)
        return M @ y

    return rhs


def specialization_residual(case: RigidCase, params, state: PhaseState):
    """Max violation of the case's constraint chain at a state."""
    par = full_params(case.parent, params)
    vals = [abs(g(state.q, state.p, state.t, par)) for g in case.constraints]
    vals.append(abs(case.parameter_constraint(par)))
    return max(vals)


def constraint_flow_drift(case: RigidCase, params, state: PhaseState):
    """Max |d g_k/dt_i| along the parent flow, on the manifold."""
    desc = lookup(case.parent)
    par = full_params(case.parent, params)
    n = desc.n_pairs
    worst = 0.0
    for i in range(1, desc.n_times + 1):
        dq, dp = vector_field(case.parent, i, params, state)
        for g in case.constraints:
            k = 2 * n + 1
            vals = list(state.q) + list(state.p) + [state.t[i - 1]]
            seeds = [Dual(v, tuple(1.0 if j == m else 0.0 for j in range(k)))
                     for m, v in enumerate(vals)]
            tt = tuple(seeds[2 * n] if m == i - 1 else state.t[m]
                       for m in range(desc.n_times))
            out = g(seeds[:n], seeds[n:2 * n], tt, par)
            dz = list(dq) + list(dp) + [1.0]
            if isinstance(out, Dual):
                d = sum(out.grad[m] * dz[m] for m in range(k))
            else:
                d = 0.0
            worst = max(worst, abs(d))
    return worst


def lift_solution(case: RigidCase, params, ys, times_list):
    """Map rigid-system samples y(t) to parent phase-space points.

    ``ys``: iterable of 4-vectors; ``times_list``: matching deformation
    time tuples.  Raises ZeroDivisionError if y0 vanishes.
    """
    par = full_params(case.parent, params)
    out = []
    for y, t in zip(ys, times_list):
        if abs(y[0]) < 1e-14:
            raise ZeroDivisionError("y0 vanished along the lift")
        q, p = case.lift(tuple(y), tuple(t), par)
        out.append(PhaseState(q, p, tuple(t)))
    return out


def pfaff_residual(case: RigidCase, params, i, y, t, other_times=None):
    """|printed log-derivative rule| at one point, dy from the rigid rhs."""
    par = full_params(case.parent, params)
    rhs = rigid_rhs(case, params, i,
                    other_times if other_times is not None else ())
    dy = rhs(t[i - 1], np.asarray(y, dtype=complex))
    return abs(case.pfaff(i, tuple(y), tuple(dy), tuple(t), par))


def riemann_scheme_columns(case: RigidCase, params):
    """Printed exponent columns, one tuple of columns per deformation time."""
    par = full_params(case.parent, params)
    return case.scheme(par)


def lift_report_csv(case: RigidCase, params, ys, times_list, fileobj):
    """CSV of deformation time, lifted (q, p), and constraint residuals."""
    par = full_params(case.parent, params)
    n_g = len(case.constraints)
    cols = ["re_t", "im_t"]
    for name in ("q1", "q2", "q3", "p1", "p2", "p3"):
        cols += [f"re_{name}", f"im_{name}"]
    cols += [f"constraint_{k}" for k in range(n_g)]
    fileobj.write(",".join(cols) + "\n")
    for st in lift_solution(case, params, ys, times_list):
        row = [f"{st.t[0].real:.16g}", f"{st.t[0].imag:.16g}"]
        for z in st.q + st.p:
            row += [f"{z.real:.16g}", f"{z.imag:.16g}"]
        for g in case.constraints:
            row.append(f"{abs(g(st.q, st.p, st.t, par)):.3e}")
        fileobj.write(",".join(row) + "\n")
