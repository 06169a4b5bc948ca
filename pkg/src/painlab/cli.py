"""Command line driver: system listing, trajectory runs, verification.

Usage:
    painlab list
    painlab integrate --system ID [--config FILE] [flags] --out traj.csv
    painlab verify {counts,degeneration,compat,isospectral,isomonodromy,
                    riemann-schemes,particular,symplectic,gradients,all}
                   [--seed N] [--out report.json]

A JSON config file supplies defaults; command line flags override config
fields.  PAINLAB_SEED overrides the configured seed.  Reports carry the
seed and are byte-reproducible from it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import catalog, verify
from .catalog import PhaseState, lookup
from .integrator import ComplexPath, integrate, trajectory_to_csv
from .sampling import rng_from_seed, sample_params, sample_state

__all__ = ["main"]


def _load_config(path):
    if path is None:
        return {}
    with open(path) as fh:
        return json.load(fh)


def _complex_from(v):
    if isinstance(v, (list, tuple)):
        return complex(v[0], v[1])
    return complex(v)


def cmd_list(args, config):
    rows = [("id", "times", "pairs", "dim", "matrix", "family")]
    for sid in catalog.list_systems():
        d = lookup(sid)
        rows.append((sid, str(d.n_times), str(d.n_pairs),
                     str(2 * d.n_pairs), str(d.matrix_size), d.family))
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    for r in rows:
        print("  ".join(s.ljust(w) for s, w in zip(r, widths)))
    return 0


def cmd_integrate(args, config):
    sid = args.system or config.get("system")
    if sid is None:
        print("error: --system is required", file=sys.stderr)
        return 2
    try:
        desc = lookup(sid)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    seed = _resolve_seed(args, config)
    rng = rng_from_seed(seed)

    params = config.get("params")
    if args.params is not None:
        params = json.loads(args.params)
    if params is None:
        params = {k: [v.real, v.imag]
                  for k, v in sample_params(sid, rng, generic=True).items()}
    par = {k: _complex_from(v) for k, v in params.items()}
    missing = [n for n in desc.param_names if n not in par]
    if missing:
        print(f"error: missing parameters {missing}", file=sys.stderr)
        return 2

    time_index = args.time_index or int(config.get("time_index", 1))
    state_cfg = config.get("state")
    if state_cfg is not None:
        st = PhaseState(tuple(_complex_from(z) for z in state_cfg["q"]),
                        tuple(_complex_from(z) for z in state_cfg["p"]),
                        tuple(_complex_from(z) for z in state_cfg["t"]))
    else:
        st = sample_state(sid, rng)
        st = PhaseState(tuple(0.4 * z for z in st.q),
                        tuple(0.4 * z for z in st.p), st.t)
    t_end = (_complex_from(json.loads(args.t_end)) if args.t_end
             else _complex_from(config.get("t_end",
                                           st.t[time_index - 1] + 0.3)))
    rel_tol = args.rel_tol or float(config.get("rel_tol", 1e-9))

    sing = [0.0, 1.0] + [st.t[k] for k in range(desc.n_times)
                         if k != time_index - 1]
    try:
        path = ComplexPath.polyline([st.t[time_index - 1], t_end],
                                    singularities=sing)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rhs = catalog.flow_rhs(sid, time_index, par, st.t)
    y0 = np.array(st.q + st.p, dtype=complex)
    traj = integrate(rhs, y0, path, rel_tol=rel_tol,
                     samples=list(np.linspace(0.1, 0.9, 9)))
    names = [f"q{k+1}" for k in range(desc.n_pairs)] + \
            [f"p{k+1}" for k in range(desc.n_pairs)]
    out = args.out or config.get("out", "trajectory.csv")
    with open(out, "w") as fh:
        trajectory_to_csv(traj, fh, component_names=names)
    print(f"wrote {out} ({traj.n_steps} accepted steps, "
          f"{traj.n_rejected} rejected)")
    return 0


def _resolve_seed(args, config):
    env = os.environ.get("PAINLAB_SEED")
    if args.seed is not None:
        return int(args.seed)
    if env is not None:
        return int(env)
    return int(config.get("seed", verify.DEFAULT_SEED))


def cmd_verify(args, config):
    seed = _resolve_seed(args, config)
    names = list(verify.CHECKS) if args.what == "all" else [args.what]
    results = verify.run_checks(names, seed=seed)
    report = {"seed": seed, "results": results,
              "passed": all(r["passed"] for r in results)}
    for r in results:
        mark = "PASS" if r["passed"] else "FAIL"
        print(f"{mark} {r['name']} ({r['seconds']}s)")
    out = args.out or config.get("report", "report.json")
    with open(out, "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True, default=repr)
        fh.write("\n")
    print(f"wrote {out}")
    return 0 if report["passed"] else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="painlab",
        description="Hamiltonian deformation systems: catalog, flows, checks")
    parser.add_argument("--config", help="JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="show the system catalog")

    p_int = sub.add_parser("integrate", help="integrate one deformation flow")
    p_int.add_argument("--system")
    p_int.add_argument("--params", help="JSON object of parameter values")
    p_int.add_argument("--time-index", type=int, dest="time_index")
    p_int.add_argument("--t-end", dest="t_end",
                       help="target time, JSON number or [re, im]")
    p_int.add_argument("--rel-tol", type=float, dest="rel_tol")
    p_int.add_argument("--seed", type=int)
    p_int.add_argument("--out")

    p_ver = sub.add_parser("verify", help="run verification checks")
    p_ver.add_argument("what", choices=list(verify.CHECKS) + ["all"])
    p_ver.add_argument("--seed", type=int)
    p_ver.add_argument("--out")

    args = parser.parse_args(argv)
    config = _load_config(args.config)
    if args.command == "list":
        return cmd_list(args, config)
    if args.command == "integrate":
        return cmd_integrate(args, config)
    return cmd_verify(args, config)


if __name__ == "__main__":
    sys.exit(main())
