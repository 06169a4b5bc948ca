"""Invariance of monodromy along the Hamiltonian deformation.

The Hamiltonian flow moves a singular point of the linear problem while
keeping the conjugacy class of every monodromy generator fixed.  Scaling
the Hamiltonian by 1.1 destroys the property, which makes a sharp
negative control.
"""

from painlab.catalog import PhaseState
from painlab.sampling import rng_from_seed, sample_params, sample_state
from painlab.verify import _deformed_states, _trace_drift

sid = "21,21,21,21,111"
rng = rng_from_seed(12)
par = sample_params(sid, rng, generic=True)
par = {k: 0.25 * v for k, v in par.items()}
st = sample_state(sid, rng, times=(1.7 + 0.8j, -0.6 + 0.5j))
st = PhaseState(tuple(0.4 * z for z in st.q), tuple(0.4 * z for z in st.p),
                st.t)

states = _deformed_states(sid, par, st, 0.2, 1.0, 1e-10, 3)
print("trace drift along the Hamiltonian flow:",
      f"{_trace_drift(sid, par, states, 1e-10):.3e}")

states = _deformed_states(sid, par, st, 0.2, 1.1, 1e-10, 3)
print("trace drift with the Hamiltonian scaled by 1.1:",
      f"{_trace_drift(sid, par, states, 1e-10):.3e}")
