"""System descriptors, parameter maps, Hamiltonian evaluation and flows.

A catalog entry is addressed by its spectral-type id, the comma-separated
partition string also used on the command line (e.g. ``21,21,21,21,111``).
Systems come in two parameter conventions: the newly derived six-dimensional
ones are parametrized by local exponents (theta/rho) with a linear map to
alpha values, while the companion systems are parametrized by alphas
directly.  Either way one linear relation (the trace condition on the
exponents) must vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .algebra import dual_gradient
from .hamiltonians import HAMILTONIANS

__all__ = [
    "LinearForm",
    "SystemDescriptor",
    "PhaseState",
    "lookup",
    "list_systems",
    "derive_alphas",
    "full_params",
    "eval_h",
    "vector_field",
    "flow_rhs",
    "TIME_COLLISION_TOL",
]

TIME_COLLISION_TOL = 1e-12


@dataclass(frozen=True)
class LinearForm:
    """Affine form sum(coeffs[name] * value[name]) + const."""

    coeffs: Mapping[str, float]
    const: float = 0.0

    def __call__(self, values: Mapping[str, complex]) -> complex:
        return sum(c * values[name] for name, c in self.coeffs.items()) + self.const

    def solve_for(self, name: str, values: Mapping[str, complex]) -> complex:
        """Value of ``name`` that makes the form vanish, others given."""
        c = self.coeffs[name]
        rest = sum(ck * values[k] for k, ck in self.coeffs.items() if k != name)
        return -(rest + self.const) / c


@dataclass(frozen=True)
class SystemDescriptor:
    """Static data of one catalog system."""

    sid: str
    n_times: int
    n_pairs: int
    matrix_size: int
    family: str
    param_names: tuple
    fuchs_relation: LinearForm
    alpha_map: Mapping[str, LinearForm] | None = None
    alpha_relation: LinearForm | None = None

    @property
    def alpha_names(self):
        if self.alpha_map is not None:
            return tuple(self.alpha_map)
        return tuple(n for n in self.param_names if n.startswith(("alpha", "eta")))

    @property
    def partitions(self):
        return tuple(tuple(int(ch) for ch in part) for part in self.sid.split(","))


def _uniform(names, coeff=1.0, const=0.0, **overrides):
    coeffs = {n: overrides.get(n, coeff) for n in names}
    return LinearForm(coeffs=coeffs, const=const)


def _lf(const=0.0, **coeffs):
    return LinearForm(coeffs=coeffs, const=const)


_ALPHAS6 = tuple(f"alpha{k}" for k in range(6))

# printed exponent->alpha maps of the newly derived systems
_ALPHA_MAPS = {
    "21,21,21,21,111": {
        "alpha0": _lf(rho2=-1),
        "alpha1": _lf(theta1=-1),
        "alpha2": _lf(theta2=-1, rho3=-1),
        "alpha3": _lf(theta4=-1),
        "alpha4": _lf(rho1=-1, rho2=1, const=1),
        "alpha5": _lf(theta3=-1, const=-1),
    },
    "31,31,22,22,22": {
        "alpha0": _lf(theta1=0.5, theta2=-0.5, rho2=-1),
        "alpha1": _lf(theta1=-1),
        "alpha2": _lf(theta1=-0.5, theta2=0.5),
        "alpha3": _lf(theta4=-1),
        "alpha4": _lf(rho1=-1, rho2=1, const=1),
        "alpha5": _lf(theta3=-1, const=-1),
    },
    "21,111,111,111": {
        "alpha0": _lf(rho2=1),
        "alpha1": _lf(theta32=-1, rho2=-1),
        "alpha2": _lf(theta31=-1, theta32=1),
        "alpha3": _lf(theta21=1, theta31=1, rho1=1),
        "alpha4": _lf(rho1=-1, rho3=1, const=1),
        "alpha5": _lf(theta21=-1, rho3=-1),
        "eta": _lf(theta1=1, theta21=1, theta31=1, rho1=1),
    },
    "31,22,211,1111": {
        "alpha0": _lf(theta32=1),
        "alpha1": _lf(theta2=-1, theta32=-1, rho2=-1, rho4=-1),
        "alpha2": _lf(theta2=1, theta31=1, rho2=1, rho4=1),
        "alpha3": _lf(theta2=-1, theta31=-1, rho1=-1, rho4=-1),
        "alpha4": _lf(rho1=1, rho3=-1, const=1),
        "alpha5": _lf(theta2=1, rho3=1, rho4=1),
        "eta": _lf(rho3=1, rho4=-1),
    },
    "22,22,211,211": {
        "alpha0": _lf(theta2=-1),
        "alpha1": _lf(theta31=-1, const=1),
        "alpha2": _lf(rho3=-1),
        "alpha3": _lf(theta1=1, theta2=1, theta31=1, rho3=2),
        "alpha4": _lf(theta1=-1),
        "alpha5": _lf(theta1=-1, theta2=-1, theta32=-1, rho2=-1),
    },
    "22,22,22,1111": {
        "alpha0": _lf(theta2=-1),
        "alpha1": _lf(theta3=-1, const=1),
        "alpha2": _lf(rho3=-1),
        "alpha3": _lf(theta1=1, theta2=1, theta3=1, rho3=2),
        "alpha4": _lf(theta1=-1),
        "alpha5": _lf(theta1=-1, theta2=-1, theta3=-1, rho2=-1),
    },
    "51,33,222,222": {
        "alpha0": _lf(theta1=1, theta31=1, theta32=1, rho2=1, rho3=1, const=1),
        "alpha1": _lf(theta1=1, rho2=1),
        "alpha2": _lf(theta1=-1),
        "alpha3": _lf(rho3=-1),
        "alpha4": _lf(theta1=-0.5, theta2=-0.5, theta32=-1, rho2=-1),
        "alpha5": _lf(theta31=-1, theta32=1),
        "alpha6": _lf(theta1=0.5, theta2=0.5, rho3=1),
    },
}

_THETA4 = ("theta1", "theta2", "theta3", "theta4")


def _make_catalog():
    entries = []

    def add(sid, n_times, n_pairs, L, family, params, fuchs,
            alpha_relation=None):
        entries.append(SystemDescriptor(
            sid=sid, n_times=n_times, n_pairs=n_pairs, matrix_size=L,
            family=family, param_names=tuple(params), fuchs_relation=fuchs,
            alpha_map=_ALPHA_MAPS.get(sid), alpha_relation=alpha_relation,
        ))

    a = lambda k: tuple(f"alpha{j}" for j in range(k))

    add("11,11,11,11", 1, 1, 2, "classical", a(5),
        _uniform(a(5), alpha2=2, const=-1),
        alpha_relation=_uniform(a(5), alpha2=2, const=-1))

    sixdim = "sixdim"
    add("21,21,21,21,111", 2, 3, 3, sixdim,
        _THETA4 + ("rho1", "rho2", "rho3"),
        _uniform(_THETA4 + ("rho1", "rho2", "rho3")),
        alpha_relation=_uniform(_ALPHAS6, alpha0=2))
    add("31,31,22,22,22", 2, 3, 4, sixdim,
        _THETA4 + ("rho1", "rho2"),
        _lf(theta1=1, theta2=1, theta3=2, theta4=2, rho1=2, rho2=2),
        alpha_relation=_uniform(_ALPHAS6, alpha0=2))
    add("21,111,111,111", 1, 3, 3, sixdim,
        ("theta1", "theta21", "theta22", "theta31", "theta32",
         "rho1", "rho2", "rho3"),
        _uniform(("theta1", "theta21", "theta22", "theta31", "theta32",
                  "rho1", "rho2", "rho3")),
        alpha_relation=_uniform(_ALPHAS6, const=-1))
    add("31,22,211,1111", 1, 3, 4, sixdim,
        ("theta1", "theta2", "theta31", "theta32",
         "rho1", "rho2", "rho3", "rho4"),
        _lf(theta1=1, theta2=2, theta31=1, theta32=1,
            rho1=1, rho2=1, rho3=1, rho4=1),
        alpha_relation=_uniform(_ALPHAS6, const=-1))
    add("22,22,211,211", 1, 3, 4, sixdim,
        ("theta1", "theta2", "theta31", "theta32", "rho1", "rho2", "rho3"),
        _lf(theta1=2, theta2=2, theta31=1, theta32=1, rho1=1, rho2=1, rho3=2),
        alpha_relation=_lf(alpha0=1, alpha1=1, alpha2=2, alpha3=1, alpha4=1,
                           const=-1))
    add("22,22,22,1111", 1, 3, 4, sixdim,
        ("theta1", "theta2", "theta3", "rho1", "rho2", "rho3", "rho4"),
        _lf(theta1=2, theta2=2, theta3=2, rho1=1, rho2=1, rho3=1, rho4=1),
        alpha_relation=_lf(alpha0=1, alpha1=1, alpha2=2, alpha3=1, alpha4=1,
                           const=-1))
    add("42,33,33,222", 1, 3, 6, sixdim,
        ("theta1", "theta2", "theta3", "rho1", "rho2", "rho3"),
        _lf(theta1=3, theta2=3, theta3=2, rho1=2, rho2=2, rho3=2))
    add("51,33,222,222", 1, 3, 6, sixdim,
        ("theta1", "theta2", "theta31", "theta32", "rho1", "rho2", "rho3"),
        _lf(theta1=3, theta2=1, theta31=2, theta32=2, rho1=2, rho2=2, rho3=2))

    comp = "sixdim-companion"
    add("11,11,11,11,11,11", 3, 3, 2, comp, a(7),
        _uniform(a(7), alpha0=2),
        alpha_relation=_uniform(a(7), alpha0=2))
    add("31,31,1111,1111", 1, 3, 4, comp, a(8) + ("eta",),
        _uniform(a(8), const=-1),
        alpha_relation=_uniform(a(8), const=-1))
    add("33,33,33,321", 1, 3, 6, comp, a(6),
        _lf(alpha0=1, alpha1=1, alpha2=2, alpha3=1, alpha4=1, const=-1),
        alpha_relation=_lf(alpha0=1, alpha1=1, alpha2=2, alpha3=1, alpha4=1,
                           const=-1))
    add("51,33,33,111111", 1, 3, 6, comp, a(9),
        _lf(alpha0=1, alpha1=1, alpha2=2, alpha3=2, alpha4=2, alpha5=2,
            alpha6=2, alpha7=1, alpha8=1, const=-1),
        alpha_relation=_lf(alpha0=1, alpha1=1, alpha2=2, alpha3=2, alpha4=2,
                           alpha5=2, alpha6=2, alpha7=1, alpha8=1, const=-1))

    four = "fourdim"
    add("11,11,11,11,11", 2, 2, 2, four, a(6),
        _uniform(a(6), alpha0=2),
        alpha_relation=_uniform(a(6), alpha0=2))
    add("21,21,111,111", 1, 2, 3, four, a(6) + ("eta",),
        _uniform(a(6), const=-1),
        alpha_relation=_uniform(a(6), const=-1))
    add("22,22,22,211", 1, 2, 4, four, a(6),
        _lf(alpha0=1, alpha1=1, alpha2=2, alpha3=1, alpha4=1, const=-1),
        alpha_relation=_lf(alpha0=1, alpha1=1, alpha2=2, alpha3=1, alpha4=1,
                           const=-1))
    add("31,22,22,1111", 1, 2, 4, four, a(7),
        _lf(alpha0=1, alpha1=1, alpha2=2, alpha3=2, alpha4=2, alpha5=1,
            alpha6=1, const=-1),
        alpha_relation=_lf(alpha0=1, alpha1=1, alpha2=2, alpha3=2, alpha4=2,
                           alpha5=1, alpha6=1, const=-1))

    return {e.sid: e for e in entries}


CATALOG = _make_catalog()

FUCHS_TOL = 1e-10


def lookup(sid: str) -> SystemDescriptor:
    try:
        return CATALOG[sid]
    except KeyError:
        raise KeyError(f"unknown system id {sid!r}") from None


def list_systems():
    return tuple(CATALOG)


def derive_alphas(sid: str, params: Mapping[str, complex], check=True):
    """Alpha values of a system from its native parameters.

    For exponent-parametrized systems this applies the printed linear map;
    for alpha-native systems it passes the values through.  The trace
    relation on the native parameters must vanish (to ``FUCHS_TOL``).
    """
    desc = lookup(sid)
    if check:
        res = abs(desc.fuchs_relation(params))
        if res > FUCHS_TOL:
            raise ValueError(
                f"{sid}: exponent trace relation violated (residual {res:.3e})")
    if desc.alpha_map is None:
        return {n: complex(params[n]) for n in desc.alpha_names}
    return {name: form(params) for name, form in desc.alpha_map.items()}


def alpha_relation_residual(sid: str, params: Mapping[str, complex]) -> float:
    """|printed alpha relation| at the derived alpha values (0.0 if none)."""
    desc = lookup(sid)
    if desc.alpha_relation is None:
        return 0.0
    alphas = derive_alphas(sid, params, check=False)
    return abs(desc.alpha_relation(alphas))


def full_params(sid: str, params: Mapping[str, complex], check=True):
    """Native parameters merged with derived alpha values."""
    merged = {k: complex(v) for k, v in params.items()}
    merged.update(derive_alphas(sid, params, check=check))
    return merged


@dataclass(frozen=True)
class PhaseState:
    """Point of the extended phase space: (q, p) plus deformation times."""

    q: tuple
    p: tuple
    t: tuple

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(complex(z) for z in self.q))
        object.__setattr__(self, "p", tuple(complex(z) for z in self.p))
        object.__setattr__(self, "t", tuple(complex(z) for z in self.t))
        for ti in self.t:
            if abs(ti) <= TIME_COLLISION_TOL or abs(ti - 1) <= TIME_COLLISION_TOL:
                raise ValueError(f"deformation time {ti} collides with 0 or 1")
        for i in range(len(self.t)):
            for j in range(i + 1, len(self.t)):
                if abs(self.t[i] - self.t[j]) <= TIME_COLLISION_TOL:
                    raise ValueError("deformation times collide")

    def with_time(self, i: int, value: complex) -> "PhaseState":
        t = list(self.t)
        t[i - 1] = value
        return PhaseState(self.q, self.p, tuple(t))


def eval_h(sid: str, i: int, params, state: PhaseState):
    """Value of the i-th Hamiltonian at a phase-space point."""
    desc = lookup(sid)
    if not 1 <= i <= desc.n_times:
        raise ValueError(f"{sid}: time index {i} out of range 1..{desc.n_times}")
    if len(state.q) != desc.n_pairs or len(state.t) != desc.n_times:
        raise ValueError(f"{sid}: state has wrong dimensions")
    merged = full_params(sid, params)
    return HAMILTONIANS[sid](i, merged, state.q, state.p, state.t)


def vector_field(sid: str, i: int, params, state: PhaseState):
    """(dq/dt_i, dp/dt_i): the canonical flow of H_i.

    Convention: t_i(t_i-1) dq_j/dt_i = +dH_i/dp_j and
    t_i(t_i-1) dp_j/dt_i = -dH_i/dq_j.
    """
    desc = lookup(sid)
    merged = full_params(sid, params)
    n = desc.n_pairs
    h = HAMILTONIANS[sid]

    def f(*z):
        return h(i, merged, z[:n], z[n:], state.t)

    _, grad = dual_gradient(f, state.q + state.p)
    ti = state.t[i - 1]
    scale = 1.0 / (ti * (ti - 1))
    dq = tuple(scale * grad[n + j] for j in range(n))
    dp = tuple(-scale * grad[j] for j in range(n))
    return dq, dp


def flow_rhs(sid: str, i: int, params, times) -> Callable:
    """rhs(z, y) for integrating the i-th flow with the integrator module.

    ``y`` stacks q then p; ``z`` is the running value of t_i; the other
    entries of ``times`` stay frozen.
    """
    import numpy as np

    desc = lookup(sid)
    merged = full_params(sid, params)
    n = desc.n_pairs
    h = HAMILTONIANS[sid]
    tvals = [complex(v) for v in times]

    def rhs(z, y):
        t = tuple(z if k == i - 1 else tvals[k] for k in range(desc.n_times))

        def f(*w):
            return h(i, merged, w[:n], w[n:], t)

        _, grad = dual_gradient(f, tuple(y))
        scale = 1.0 / (z * (z - 1))
        out = np.empty(2 * n, dtype=complex)
        for j in range(n):
            out[j] = scale * grad[n + j]
            out[n + j] = -scale * grad[j]
        return out

    return rhs
