"""Scalar substrate and small dense-matrix eigenvalue utilities.

Everything downstream evaluates over either plain ``complex`` or
:class:`Dual` scalars, so each Hamiltonian is written once and
differentiated exactly (forward mode, no truncation error).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Dual",
    "dual_gradient",
    "value_of",
    "EigenMultiset",
    "EigenvalueError",
    "eigen_small",
    "default_cluster_tol",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_smul",
    "mat_shift",
    "mat_trace",
]


class Dual:
    """Forward-mode dual scalar: a complex value plus a gradient vector.

    The gradient has one slot per independent variable of the current
    evaluation context; its width is fixed per call.  A Dual with zero
    gradient behaves exactly like its value under all operations.
    """

    __slots__ = ("val", "grad")

    def __init__(self, val, grad=()):
        self.val = complex(val)
        self.grad = tuple(grad)

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val + other.val,
                        tuple(a + b for a, b in zip(self.grad, other.grad)))
        return Dual(self.val + other, self.grad)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.val, tuple(-a for a in self.grad))

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val - other.val,
                        tuple(a - b for a, b in zip(self.grad, other.grad)))
        return Dual(self.val - other, self.grad)

    def __rsub__(self, other):
        return Dual(other - self.val, tuple(-a for a in self.grad))

    def __mul__(self, other):
        if isinstance(other, Dual):
            v, w = self.val, other.val
            return Dual(v * w,
                        tuple(w * a + v * b for a, b in zip(self.grad, other.grad)))
        return Dual(self.val * other, tuple(other * a for a in self.grad))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            if other.val == 0:
                raise ZeroDivisionError("division by a dual with zero value part")
            v = self.val / other.val
            inv = 1.0 / other.val
            return Dual(v, tuple((a - v * b) * inv
                                 for a, b in zip(self.grad, other.grad)))
        return Dual(self.val / other, tuple(a / other for a in self.grad))

    def __rtruediv__(self, other):
        if self.val == 0:
            raise ZeroDivisionError("division by a dual with zero value part")
        v = other / self.val
        inv = 1.0 / self.val
        return Dual(v, tuple(-v * a * inv for a in self.grad))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise TypeError("Dual powers are restricted to nonnegative integers")
        out = Dual(1.0, (0.0,) * len(self.grad))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"Dual({self.val!r}, {self.grad!r})"


def value_of(x) -> complex:
    """Plain complex value of either a Dual or a number."""
    return x.val if isinstance(x, Dual) else complex(x)


def dual_gradient(f, point):
    """Evaluate ``f`` and all first partials at ``point`` in one pass.

    ``f`` must accept ``len(point)`` scalar arguments and be built from
    arithmetic the :class:`Dual` type supports.  Returns
    ``(value, gradient_tuple)``; the partials are exact up to rounding.
    """
    point = [complex(z) for z in point]
    k = len(point)
    seeds = [Dual(z, tuple(1.0 if j == i else 0.0 for j in range(k)))
             for i, z in enumerate(point)]
    out = f(*seeds)
    if isinstance(out, Dual):
        return out.val, out.grad
    return complex(out), (0j,) * k


# ---------------------------------------------------------------------------
# eigenvalues of small matrices, with multiplicity clustering
# ---------------------------------------------------------------------------


class EigenvalueError(RuntimeError):
    """Eigenvalue extraction failed to converge."""


def default_cluster_tol(eigvals) -> float:
    """Relative clustering tolerance, stable across parameter scales."""
    return 1e-8 * (1.0 + max(abs(w) for w in eigvals))


@dataclass(frozen=True)
class EigenMultiset:
    """Clustered eigenvalues of a small matrix.

    ``values[k]`` is the mean of cluster ``k`` and ``mults[k]`` its size;
    multiplicities sum to the matrix dimension.  ``separation`` is the
    smallest distance between distinct cluster means (``inf`` for a
    single cluster), used by callers to detect borderline clusterings.
    """

    values: tuple
    mults: tuple
    tol: float
    separation: float

    @property
    def partition(self):
        """Multiplicities sorted descending (a partition of L)."""
        return tuple(sorted(self.mults, reverse=True))

    def as_list(self):
        """Eigenvalues with multiplicity, flattened."""
        out = []
        for w, m in zip(self.values, self.mults):
            out.extend([w] * m)
        return out


def eigen_small(m, cluster_tol=None) -> EigenMultiset:
    """Eigenvalues of a dense matrix of size 2..6, clustered by tolerance.

    Clusters are connected components of the "distance < tol" graph on
    the raw eigenvalues; each cluster is reported as (mean, multiplicity).
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    L = a.shape[0]
    if not 2 <= L <= 6:
        raise ValueError(f"matrix size {L} outside the supported range 2..6")
    try:
        w = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological input
        raise EigenvalueError(f"eigenvalue iteration failed: {exc}") from exc
    tol = default_cluster_tol(w) if cluster_tol is None else float(cluster_tol)

    # single-linkage clustering; L <= 6 so the quadratic scan is fine
    labels = list(range(L))

    def find(i):
        while labels[i] != i:
            labels[i] = labels[labels[i]]
            i = labels[i]
        return i

    for i in range(L):
        for j in range(i + 1, L):
            if abs(w[i] - w[j]) <= tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    labels[rj] = ri
    groups = {}
    for i in range(L):
        groups.setdefault(find(i), []).append(w[i])
    clusters = sorted(((np.mean(g), len(g)) for g in groups.values()),
                      key=lambda vw: (vw[0].real, vw[0].imag))
    values = tuple(complex(v) for v, _ in clusters)
    mults = tuple(int(k) for _, k in clusters)
    if len(values) > 1:
        separation = min(abs(values[i] - values[j])
                         for i in range(len(values))
                         for j in range(i + 1, len(values)))
    else:
        separation = float("inf")
    return EigenMultiset(values=values, mults=mults, tol=tol, separation=separation)


# ---------------------------------------------------------------------------
# tiny generic matrix helpers (nested tuples over Dual-or-complex scalars)
# ---------------------------------------------------------------------------


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return tuple(
        tuple(sum(a[i][l] * b[l][j] for l in range(k)) for j in range(m))
        for i in range(n)
    )


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_smul(s, a):
    return tuple(tuple(s * x for x in row) for row in a)


def mat_shift(a, s):
    """a + s*I for a square generic matrix."""
    return tuple(
        tuple(x + s if i == j else x for j, x in enumerate(row))
        for i, row in enumerate(a)
    )


def mat_trace(a):
    out = a[0][0]
    for i in range(1, len(a)):
        out = out + a[i][i]
    return out
