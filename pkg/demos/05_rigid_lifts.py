"""Particular solutions from rigid systems.

On an invariant submanifold, the nonlinear dynamics linearize to a
fourth-order rigid system in an auxiliary vector y.  Integrating y and
lifting back recovers a trajectory of the parent system; the printed
logarithmic-derivative rule for y0 is a free consistency check.
"""

import numpy as np

from painlab.catalog import full_params, vector_field
from painlab.integrator import ComplexPath, integrate
from painlab.rigid import RIGID_CASES, lift_solution, pfaff_residual, rigid_rhs
from painlab.sampling import rng_from_seed
from painlab.verify import _lift_chain_rule, constrained_rigid_params

rng = rng_from_seed(43)
for cid in ("case-21x4", "case-3131", "case-21-111"):
    case = RIGID_CASES[cid]
    par = constrained_rigid_params(case, rng)
    merged = full_params(case.parent, par)
    times = (1.7 + 0.6j, -0.8 + 0.5j)[:case.n_times]
    other = times[1:]
    t0, t1 = times[0], times[0] + 0.25
    rhs = rigid_rhs(case, par, 1, other)
    path = ComplexPath.polyline([t0, t1],
                                singularities=[0.0, 1.0] + list(other))
    traj = integrate(rhs, np.array([1.0, 0.1, 0.1, 0.1], dtype=complex),
                     path, rel_tol=1e-11, samples=[0.5])
    worst_f = worst_p = 0.0
    for s, y in zip(traj.params, traj.states):
        tcur = (t0 + s * (t1 - t0),) + tuple(other)
        dy = rhs(tcur[0], y)
        der = _lift_chain_rule(case, merged, y, dy, tcur, 1)
        st = lift_solution(case, par, [y], [tcur])[0]
        dq, dp = vector_field(case.parent, 1, par, st)
        worst_f = max(worst_f, float(np.max(np.abs(np.array(der)
                                                   - np.array(dq + dp)))))
        worst_p = max(worst_p, pfaff_residual(case, par, 1, y, tcur, other))
    print(f"{cid:12s} parent {case.parent:16s} "
          f"field residual {worst_f:.2e}  log-derivative rule {worst_p:.2e}")
