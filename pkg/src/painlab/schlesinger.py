"""Matrix deformation flows and the canonical coordinate bridge.

The residue matrices of an isomonodromic family satisfy the commutator
flow ``dA_j/dt_i = [A_i, A_j]/(t_i - t_j)`` with trace Hamiltonians
``H_i = sum_j tr(A_i A_j)/(t_i - t_j)``.  Rank factors ``A_i = B_i C_i``
turn this into a canonical system; the own-index equations below carry
the signs forced by that canonical structure (the flow they induce on
``A_i`` is the commutator flow above, which also pins them).
"""

from __future__ import annotations

import numpy as np

from .algebra import Dual, dual_gradient
from .catalog import PhaseState, full_params, lookup
from .fuchsian import FuchsianSystem
from .parametrizations import assemble, parametrization

__all__ = [
    "schlesinger_rhs",
    "schlesinger_flow_rhs",
    "trace_hamiltonian",
    "bc_rhs",
    "to_canonical",
    "from_canonical",
    "bc_vector",
    "state_from_bc_vector",
    "realign_to_slice",
    "induced_state_field",
]


def _check_times(points, i):
    n = len(points)
    if not 1 <= i <= n - 2:
        raise ValueError(f"deformation index {i} out of range")
    for a in range(n):
        for b in range(a + 1, n):
            if abs(points[a] - points[b]) < 1e-12:
                raise ValueError("singular points collide")


def schlesinger_rhs(points, mats, i):
    """d/dt_i of every residue matrix (the commutator flow).

    ``points`` lists the finite singular points (deformation times, then
    1, then 0); ``mats`` the matching residues; ``i`` is 1-based among
    the deformation times.  The derivatives sum to zero, so the residue
    at infinity stays constant.
    """
    _check_times(points, i)
    mats = [np.asarray(a, dtype=complex) for a in mats]
    Ai = mats[i - 1]
    ti = points[i - 1]
    out = []
    own = np.zeros_like(Ai)
    for j, (tj, Aj) in enumerate(zip(points, mats)):
        if j == i - 1:
            out.append(None)
            continue
        comm = (Ai @ Aj - Aj @ Ai) / (ti - tj)
        out.append(comm)
        own -= comm
    out[i - 1] = own
    return out


def schlesinger_flow_rhs(points, i):
    """rhs(z, y) for the integrator: y = stacked residues, z = t_i."""
    fixed = list(points)

    def rhs(z, y):
        pts = [z if k == i - 1 else fixed[k] for k in range(len(fixed))]
        n = len(pts)
        L = int(round((len(y) / n) ** 0.5))
        mats = [y[k * L * L:(k + 1) * L * L].reshape(L, L) for k in range(n)]
        ders = schlesinger_rhs(pts, mats, i)
        return np.concatenate([d.ravel() for d in ders])

    return rhs


def trace_hamiltonian(points, mats, i):
    """H_i = sum over the other finite points of tr(A_i A_j)/(t_i - t_j)."""
    _check_times(points, i)
    Ai = mats[i - 1]
    ti = points[i - 1]
    out = 0.0 + 0.0j
    for j, (tj, Aj) in enumerate(zip(points, mats)):
        if j == i - 1:
            continue
        out += np.trace(np.asarray(Ai) @ np.asarray(Aj)) / (ti - tj)
    return out


def bc_rhs(points, Bs, Cs, i):
    """d/dt_i of the rank factors, canonical form.

    Off-index: dB_j = A_i B_j/(t_i - t_j), dC_j = -C_j A_i/(t_i - t_j).
    Own-index: dB_i = +sum_j A_j B_i/(t_i - t_j),
               dC_i = -C_i sum_j A_j/(t_i - t_j).
    The induced dA_j = dB_j C_j + B_j dC_j equals the commutator flow.
    """
    _check_times(points, i)
    Bs = [np.asarray(b, dtype=complex) for b in Bs]
    Cs = [np.asarray(c, dtype=complex) for c in Cs]
    mats = [b @ c for b, c in zip(Bs, Cs)]
    ti = points[i - 1]
    Ai = mats[i - 1]
    dBs, dCs = [], []
    S = sum(mats[j] / (ti - points[j])
            for j in range(len(points)) if j != i - 1)
    for j, tj in enumerate(points):
        if j == i - 1:
            dBs.append(S @ Bs[j])
            dCs.append(-Cs[j] @ S)
        else:
            dBs.append(Ai @ Bs[j] / (ti - tj))
            dCs.append(-Cs[j] @ Ai / (ti - tj))
    return dBs, dCs


# ---------------------------------------------------------------------------
# canonical coordinate bridge
# ---------------------------------------------------------------------------


def from_canonical(sid, params, state: PhaseState) -> FuchsianSystem:
    """Residue matrices at a phase-space point (gauge-fixed)."""
    return assemble(sid, params, state)


def to_canonical(sid, params, sys: FuchsianSystem) -> PhaseState:
    """Phase-space point of a gauge-fixed matrix tuple."""
    pz = parametrization(sid)
    par = full_params(sid, params)
    t = sys.points[:-2]
    mats = [tuple(tuple(row) for row in a) for a in sys.residues]
    q, p = pz.state_from_matrices(par, mats, t)
    return PhaseState(q, p, t)


def bc_vector(sid, params, state: PhaseState):
    """Flat (b..., c...) canonical vector of the matrix variables."""
    pz = parametrization(sid)
    par = full_params(sid, params)
    b, c = pz.bc_from_state(par, state.q, state.p, state.t)
    return tuple(b) + tuple(c)


def state_from_bc_vector(sid, params, bc, t):
    pz = parametrization(sid)
    par = full_params(sid, params)
    n = pz.n_bc_pairs
    q, p = pz.state_from_bc(par, bc[:n], bc[n:], tuple(t))
    return PhaseState(q, p, t)


def _generic_trace_h(points, mats, i):
    ti = points[i - 1]
    L = len(mats[0])
    out = 0
    for j, tj in enumerate(points):
        if j == i - 1:
            continue
        Ai, Aj = mats[i - 1], mats[j]
        tr = sum(Ai[r][k] * Aj[k][r] for r in range(L) for k in range(L))
        out = out + tr / (ti - tj)
    return out


def realign_to_slice(sid, params, mats, max_iter=50, tol=1e-12):
    """Conjugate raw matrices back onto the gauge slice of the parametrization.

    The matrix deformation flow preserves the residue at infinity exactly,
    while the parametrized family lets its lower-triangular entries move;
    the two families differ by a triangular conjugation.  This solves for
    the lower-triangular gauge g (Newton, analytic Jacobian via duals)
    that restores the slice normalization, for the headline system.
    """
    if sid != "21,21,21,21,111":
        raise NotImplementedError("slice realignment implemented for the "
                                  "headline three-by-three system only")
    A = [np.asarray(m, dtype=complex) for m in mats]

    def conditions(u):
        x, y, z, d2, d3 = u
        g = ((1, 0, 0), (x, d2, 0), (y, z, d3))
        gi = ((1, 0, 0),
              (-x / d2, 1 / d2, 0),
              ((x * z - y * d2) / (d2 * d3), -z / (d2 * d3), 1 / d3))

        def conj(M):
            rows = []
            for r in range(3):
                row = []
                for s in range(3):
                    val = 0
                    for a in range(3):
                        for b in range(3):
                            val = val + gi[r][a] * M[a][b] * g[b][s]
                    row.append(val)
                rows.append(tuple(row))
            return tuple(rows)

        B = [conj(m) for m in A]
        B4, B3 = B[3], B[2]
        col = max(range(3), key=lambda j: abs(A[3][0, j]))
        u4 = tuple(B4[r][col] for r in range(3))
        ainf21 = -(B[0][2][1] + B[1][2][1] + B[2][2][1] + B[3][2][1])
        return (u4[1] / u4[0], u4[2] / u4[0],
                B3[0][1] - 1, B3[0][2] - 1, ainf21)

    u = [0.0 + 0j, 0.0 + 0j, 0.0 + 0j, 1.0 + 0j, 1.0 + 0j]
    for _ in range(max_iter):
        seeds = [Dual(v, tuple(1.0 if j == m else 0.0 for j in range(5)))
                 for m, v in enumerate(u)]
        out = conditions(seeds)
        F = np.array([o.val for o in out])
        if np.max(np.abs(F)) < tol:
            break
        J = np.array([list(o.grad) for o in out])
        du = np.linalg.solve(J, -F)
        u = [ui + d for ui, d in zip(u, du)]
    else:
        raise RuntimeError("slice realignment did not converge")
    x, y, z, d2, d3 = u
    g = np.array([[1, 0, 0], [x, d2, 0], [y, z, d3]], dtype=complex)
    gi = np.linalg.inv(g)
    return [gi @ m @ g for m in A]


def induced_state_field(sid, params, state: PhaseState, i):
    """(dq/dt_i, dp/dt_i) obtained from the canonical matrix-variable flow.

    The trace Hamiltonian drives the (b, c) pairs; the chain rule through
    the coordinate maps (including their explicit time dependence) gives
    the phase-space field.  Independent of the catalog Hamiltonians, so
    it serves as their cross-check.
    """
    desc = lookup(sid)
    pz = parametrization(sid)
    par = full_params(sid, params)
    b, c = pz.bc_from_state(par, state.q, state.p, state.t)
    nb = pz.n_bc_pairs
    points = state.t + (1.0, 0.0)

    def H(*z):
        mats = pz.matrices_from_bc(par, z[:nb], z[nb:])
        return _generic_trace_h(points, mats, i)

    _, g = dual_gradient(H, tuple(b) + tuple(c))
    bdot = [g[nb + k] for k in range(nb)]
    cdot = [-g[k] for k in range(nb)]

    k = 2 * nb + 1
    seeds = [Dual(v, tuple(1.0 if j == m else 0.0 for j in range(k)))
             for m, v in enumerate(list(b) + list(c) + [state.t[i - 1]])]
    tt = tuple(seeds[2 * nb] if m == i - 1 else state.t[m]
               for m in range(desc.n_times))
    q, p = pz.state_from_bc(par, seeds[:nb], seeds[nb:2 * nb], tt)
    dz = bdot + cdot + [1.0]
    der = [sum(v.grad[m] * dz[m] for m in range(k)) for v in q + p]
    return tuple(der[:desc.n_pairs]), tuple(der[desc.n_pairs:])
