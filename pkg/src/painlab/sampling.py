"""Seeded random sampling of parameters and phase-space points.

Property tests draw rational complex values of modulus at most 2 and
solve the last free parameter from the trace relation exactly, so the
relation holds to machine precision and accidental resonances are
avoided.  All draws go through a caller-supplied ``numpy.random.Generator``
so every report is reproducible from its seed.
"""

from __future__ import annotations

import numpy as np

from .catalog import PhaseState, lookup

__all__ = ["rational_complex", "sample_params", "sample_state", "rng_from_seed"]


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def rational_complex(rng, max_mod=2.0, nonzero=False) -> complex:
    """Random rational complex value with |z| <= max_mod."""
    while True:
        den = int(rng.integers(1, 5))
        hi = int(max_mod * den)
        z = complex(int(rng.integers(-hi, hi + 1)) / den,
                    int(rng.integers(-hi, hi + 1)) / den)
        if abs(z) > max_mod:
            continue
        if nonzero and abs(z) < 0.25:
            continue
        return z


def sample_params(sid: str, rng, fixed=None, solve_name=None, generic=False,
                  separation=0.2):
    """Random parameter assignment with the trace relation solved exactly.

    ``fixed`` presets some parameters (used by degeneration rules); the
    relation is solved for ``solve_name`` (default: the last parameter
    not preset).  With ``generic=True`` the draw is repeated until all
    parameters are nonzero and pairwise distinct by ``separation``, which
    keeps eigenvalue clusters of assembled systems well separated.
    """
    desc = lookup(sid)
    fixed = dict(fixed or {})
    names = list(desc.param_names)
    free = [n for n in names if n not in fixed]
    if solve_name is None:
        candidates = [n for n in free if n in desc.fuchs_relation.coeffs]
        solve_name = candidates[-1]
    for _ in range(400):
        values = {}
        for n in names:
            if n in fixed:
                values[n] = complex(fixed[n])
            elif n != solve_name:
                values[n] = rational_complex(rng)
        values[solve_name] = desc.fuchs_relation.solve_for(solve_name, values)
        if not generic:
            return values
        vals = list(values.values())
        if all(abs(v) > separation for v in vals) and all(
                abs(vals[i] - vals[j]) > separation
                for i in range(len(vals)) for j in range(i + 1, len(vals))):
            return values
    raise RuntimeError("could not draw generic parameters")


def _good_times(rng, n_times):
    """Times of moderate size, separated from 0, 1 and each other."""
    while True:
        ts = [rational_complex(rng, max_mod=2.0) for _ in range(n_times)]
        pts = [0.0, 1.0] + ts
        ok = all(abs(pts[i] - pts[j]) > 0.3
                 for i in range(len(pts)) for j in range(i + 1, len(pts)))
        if ok:
            return tuple(ts)


def sample_state(sid: str, rng, times=None) -> PhaseState:
    desc = lookup(sid)
    n = desc.n_pairs
    q = tuple(rational_complex(rng) for _ in range(n))
    p = tuple(rational_complex(rng) for _ in range(n))
    t = tuple(times) if times is not None else _good_times(rng, desc.n_times)
    return PhaseState(q, p, t)
