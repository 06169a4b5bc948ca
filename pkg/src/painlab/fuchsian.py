"""Fuchsian systems: residue bookkeeping, spectral types, Riemann schemes.

A system is the data of its finite singular points (deformation times,
then 1, then 0) and one residue matrix per point; the residue at
infinity is minus their sum.  Spectral types are tuples of integer
partitions, one per singular point including infinity, in that order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .algebra import EigenMultiset, eigen_small

__all__ = [
    "FuchsianSystem",
    "SpectralType",
    "RiemannScheme",
    "ClusterAmbiguityError",
    "parse_spectral_type",
    "format_spectral_type",
    "accessory_count",
    "residue_infinity",
    "spectral_type_of",
    "riemann_scheme_of",
    "rank_decompose",
    "RankAmbiguityError",
]


def parse_spectral_type(sid: str):
    """'21,21,111' -> ((2,1),(2,1),(1,1,1)); digits are the parts."""
    parts = tuple(tuple(int(ch) for ch in block) for block in sid.split(","))
    sums = {sum(p) for p in parts}
    if len(sums) != 1:
        raise ValueError(f"partitions of {sid!r} do not share a common sum")
    return parts


def format_spectral_type(parts) -> str:
    return ",".join("".join(str(m) for m in p) for p in parts)


SpectralType = tuple


def accessory_count(st) -> int:
    """Number of accessory parameters: (N+1)L^2 - sum of m^2 + 2.

    ``st`` is a spectral-type string or tuple of partitions; the number
    of singular points is N+3 (N deformation times, 1, 0, infinity).
    """
    parts = parse_spectral_type(st) if isinstance(st, str) else tuple(st)
    L = sum(parts[0])
    n_points = len(parts)
    N = n_points - 3
    sq = sum(m * m for p in parts for m in p)
    return (N + 1) * L * L - sq + 2


@dataclass(frozen=True)
class FuchsianSystem:
    """Finite singular points with residue matrices; A_infinity derived."""

    points: tuple
    residues: tuple  # complex arrays, one per finite point

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(complex(z) for z in self.points))
        res = tuple(np.array(a, dtype=complex) for a in self.residues)
        if len(res) != len(self.points):
            raise ValueError("one residue matrix per finite point required")
        L = res[0].shape[0]
        for a in res:
            if a.shape != (L, L):
                raise ValueError("residue matrices must share one square size")
        for i in range(len(self.points)):
            for j in range(i + 1, len(self.points)):
                if abs(self.points[i] - self.points[j]) < 1e-12:
                    raise ValueError("finite singular points must be distinct")
        object.__setattr__(self, "residues", res)

    @property
    def size(self):
        return self.residues[0].shape[0]

    @property
    def residue_at_infinity(self):
        return -sum(self.residues)

    def rhs(self):
        """dY/dx = (sum A_i/(x - t_i)) Y for the integrator (Y flattened)."""
        pts = self.points
        res = self.residues
        L = self.size

        def f(x, y):
            Y = y.reshape(L, L)
            M = sum(a / (x - t) for a, t in zip(res, pts))
            return (M @ Y).ravel()

        return f

    # -- serialization ---------------------------------------------------

    def to_json_dict(self):
        def cplx(z):
            return [z.real, z.imag]

        return {
            "L": self.size,
            "points": [cplx(z) for z in self.points],
            "residues": [[cplx(z) for z in a.ravel()] for a in self.residues],
        }

    @classmethod
    def from_json_dict(cls, d):
        L = int(d["L"])
        pts = [complex(re, im) for re, im in d["points"]]
        res = []
        for flat in d["residues"]:
            a = np.array([complex(re, im) for re, im in flat]).reshape(L, L)
            res.append(a)
        return cls(points=tuple(pts), residues=tuple(res))

    def to_json(self, **kwargs):
        return json.dumps(self.to_json_dict(), **kwargs)

    @classmethod
    def from_json(cls, s):
        return cls.from_json_dict(json.loads(s))


def residue_infinity(sys: FuchsianSystem, diag_tol=1e-10):
    """A_infinity = -sum(A_i) and whether it is diagonal within tolerance."""
    a = sys.residue_at_infinity
    off = a - np.diag(np.diag(a))
    return a, bool(np.max(np.abs(off)) <= diag_tol)


class ClusterAmbiguityError(RuntimeError):
    """Two eigenvalue clusters are too close to call the multiplicities."""


def _checked_multiset(a, cluster_tol, label) -> EigenMultiset:
    em = eigen_small(a, cluster_tol)
    if em.separation <= 10 * em.tol:
        raise ClusterAmbiguityError(
            f"eigenvalue clusters at {label} separated by only "
            f"{em.separation:.3e} (tol {em.tol:.3e})")
    return em


def spectral_type_of(sys: FuchsianSystem, cluster_tol=None):
    """Multiplicity partitions of all residues, finite points then infinity."""
    parts = []
    for t, a in zip(sys.points, sys.residues):
        parts.append(_checked_multiset(a, cluster_tol, f"x={t}").partition)
    parts.append(_checked_multiset(sys.residue_at_infinity, cluster_tol,
                                   "x=inf").partition)
    return tuple(parts)


@dataclass(frozen=True)
class RiemannScheme:
    """Exponents with multiplicity per singular point (finite..., infinity)."""

    points: tuple          # finite points then the string "inf"
    exponents: tuple       # tuple of EigenMultiset

    def fuchs_residual(self) -> float:
        """|multiplicity-weighted sum of all exponents| (must vanish)."""
        total = 0.0 + 0.0j
        for em in self.exponents:
            for w, m in zip(em.values, em.mults):
                total += w * m
        return abs(total)


def riemann_scheme_of(sys: FuchsianSystem, cluster_tol=None) -> RiemannScheme:
    ems = [_checked_multiset(a, cluster_tol, f"x={t}")
           for t, a in zip(sys.points, sys.residues)]
    ems.append(_checked_multiset(sys.residue_at_infinity, cluster_tol, "x=inf"))
    return RiemannScheme(points=sys.points + ("inf",), exponents=tuple(ems))


class RankAmbiguityError(RuntimeError):
    """Singular values too close to the cut to decide the rank."""


def rank_decompose(a, tol=None):
    """Factor A = B C with inner dimension rank(A), via the SVD.

    For the diagonalizable residues used here the rank equals the number
    of nonzero eigenvalues.  Raises RankAmbiguityError when a singular
    value sits within a factor 10 of the cut.
    """
    a = np.asarray(a, dtype=complex)
    u, s, vh = np.linalg.svd(a)
    smax = s[0] if len(s) else 0.0
    cut = (1e-10 * (1.0 + smax)) if tol is None else tol
    r = int(np.sum(s > cut))
    ambiguous = [val for val in s if 0.1 * cut < val <= 10 * cut]
    if ambiguous:
        raise RankAmbiguityError(
            f"singular values {ambiguous} too close to the rank cut {cut:.3e}")
    B = u[:, :r] * s[:r]
    C = vh[:r, :]
    return B, C
