"""Adjacency matrices, numeric spectra and exact integer linear algebra.

Numeric eigenvalues come from a dense symmetric solver (LAPACK by default, a
cyclic Jacobi implementation on request).  Anything that must be exact, such as
nullity, determinant and the characteristic polynomial, is computed over Python
integers and never inferred from floating point output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

DEFAULT_TOL = 1e-10


class EigensolverError(ArithmeticError):
    pass


def adjacency_matrix(h) -> np.ndarray:
    """Entry (i, j) counts the edges containing both ``i`` and ``j``; zero diagonal."""
    a = np.zeros((h.n, h.n), dtype=np.int64)
    for e in h.edges:
        for i, j in combinations(e, 2):
            a[i, j] += 1
            a[j, i] += 1
    return a


def kronecker(p, q) -> np.ndarray:
    """Block matrix ``(p[i, j] * q)``."""
    p, q = np.asarray(p), np.asarray(q)
    rp, cp = p.shape
    rq, cq = q.shape
    out = np.zeros((rp * rq, cp * cq), dtype=np.result_type(p, q))
    for i in range(rp):
        for j in range(cp):
            out[i * rq:(i + 1) * rq, j * cq:(j + 1) * cq] = p[i, j] * q
    return out


def check_symmetric(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


# -- numeric eigensolvers ------------------------------------------------------

def jacobi_eigh(a, tol: float = 1e-14, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Returns ``(w, v)`` with ascending eigenvalues and orthonormal columns.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    if n < 2:
        return np.diag(a).copy(), v
    scale = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = np.linalg.norm(np.triu(a, 1))
        if off <= tol * max(scale, 1.0):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(1.0, theta)) if theta != 0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise EigensolverError(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], v[:, order]


def eigh(a, method: str = "lapack") -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=float)
    if method == "lapack":
        return np.linalg.eigh(a)
    if method == "jacobi":
        return jacobi_eigh(a)
    raise ValueError(f"unknown eigensolver {method!r}")


# -- exact integer routines ----------------------------------------------------

def _int_rows(a) -> list[list[int]]:
    return [[int(x) for x in row] for row in np.asarray(a).tolist()]


def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns ``(rank, sign * last pivot)``.

    The second value is the determinant when the matrix is square and of full
    rank.  Every division is exact because intermediate entries are minors of
    the input.
    """
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    prev = 1
    sign = 1
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        pivot = next((i for i in range(rank, m) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            sign = -sign
        pr = rows[rank]
        pv = pr[col]
        for i in range(rank + 1, m):
            ri = rows[i]
            f = ri[col]
            for j in range(col + 1, ncols):
                q, rem = divmod(pv * ri[j] - f * pr[j], prev)
                assert rem == 0, "Bareiss division must be exact"
                ri[j] = q
            ri[col] = 0
        prev = pv
        rank += 1
    return rank, sign * prev


def exact_rank(a) -> int:
    rows = _int_rows(a)
    if not rows:
        return 0
    return _bareiss(rows)[0]


def exact_nullity(a) -> int:
    a = np.asarray(a)
    return a.shape[0] - exact_rank(a)


def exact_det(a) -> int:
    rows = _int_rows(a)
    n = len(rows)
    if n == 0:
        return 1
    rank, det = _bareiss(rows)
    return det if rank == n else 0


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial ``det(tI - A)``, highest degree first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in self.coefficients:
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for i, c in enumerate(self.coefficients):
            p = d - i
            if c == 0:
                continue
            mag = abs(c)
            body = ("" if mag == 1 and p else str(mag)) + ("" if p == 0 else "x" if p == 1 else f"x^{p}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def char_poly(a) -> CharPoly:
    """Exact characteristic polynomial by Faddeev-LeVerrier over Python integers.

    ``c[n-j] = -trace(A M_j) / j`` divides exactly for integer ``A``.
    """
    a = np.asarray(a)
    n = a.shape[0]
    A = np.array(_int_rows(a), dtype=object).reshape(n, n)
    coeffs = [1]
    ident = np.zeros((n, n), dtype=object)
    for i in range(n):
        ident[i, i] = 1
    m = np.zeros((n, n), dtype=object)
    for j in range(1, n + 1):
        m = A.dot(m) + coeffs[-1] * ident
        am = A.dot(m)
        tr = sum(am[i, i] for i in range(n))
        c, rem = divmod(-tr, j)
        assert rem == 0, "Faddeev-LeVerrier trace must be divisible"
        coeffs.append(int(c))
    return CharPoly(tuple(int(c) for c in coeffs))


def are_cospectral(a1, a2) -> bool:
    a1, a2 = np.asarray(a1), np.asarray(a2)
    if a1.shape != a2.shape:
        return False
    return char_poly(a1) == char_poly(a2)


# -- spectra -------------------------------------------------------------------

def cluster(values: Sequence[float], eps: float) -> list[tuple[float, int]]:
    """Group descending-sorted values whose consecutive spacing is at most ``eps``."""
    vals = sorted((float(v) for v in values), reverse=True)
    groups: list[list[float]] = []
    for v in vals:
        if groups and groups[-1][-1] - v <= eps:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(float(np.mean(g)), len(g)) for g in groups]


@dataclass(frozen=True)
class Spectrum:
    """A multiset of real eigenvalues, stored in descending order.

    ``nullity`` and ``det`` are exact when the spectrum comes from a matrix;
    closed-form spectra count numerically zero values and leave ``det`` unset.
    """

    values: tuple[float, ...]
    nullity: int
    det: Optional[int] = None
    charpoly: Optional[CharPoly] = None
    cluster_eps: float = 1e-7
    energy_bound: float = 0.0
    max_residual: float = 0.0
    source: str = "eigensolver"

    @classmethod
    def from_values(cls, values, source: str, zero_tol: float = 1e-7) -> "Spectrum":
        vals = tuple(sorted((float(v) for v in values), reverse=True))
        scale = max([1.0] + [abs(v) for v in vals])
        eps = zero_tol * scale
        nullity = sum(1 for v in vals if abs(v) <= eps)
        return cls(vals, nullity, cluster_eps=eps, source=source)

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def energy(self) -> float:
        return float(sum(abs(v) for v in self.values))

    @property
    def spectral_radius(self) -> float:
        return float(max((abs(v) for v in self.values), default=0.0))

    @property
    def multiplicities(self) -> list[tuple[float, int]]:
        return cluster(self.values, self.cluster_eps)

    def to_dict(self) -> dict:
        out = {
            "eigenvalues": [{"value": v, "multiplicity": m} for v, m in self.multiplicities],
            "energy": self.energy,
            "energy_bound": self.energy_bound,
            "nullity": self.nullity,
            "spectral_radius": self.spectral_radius,
            "det": None if self.det is None else str(self.det),
            "charpoly": None if self.charpoly is None else [str(c) for c in self.charpoly.coefficients],
        }
        if self.source != "eigensolver":
            out["source"] = self.source
        return out


def eigenvalues(
    a,
    tol: float = DEFAULT_TOL,
    method: str = "lapack",
    exact: bool = True,
    with_charpoly: bool = False,
) -> Spectrum:
    """Spectrum of a symmetric integer matrix with residual-checked eigenpairs.

    Raises :class:`EigensolverError` if any eigenpair has residual above
    ``tol * ||a||_F``.
    """
    a = check_symmetric(a)
    n = a.shape[0]
    norm = float(np.linalg.norm(a.astype(float))) if n else 0.0
    if n == 0:
        return Spectrum((), 0, det=1, charpoly=CharPoly((1,)) if with_charpoly else None)
    w, v = eigh(a, method)
    af = a.astype(float)
    residual = float(np.max(np.linalg.norm(af @ v - v * w, axis=0)))
    if residual > tol * max(norm, 1.0):
        raise EigensolverError(f"eigenpair residual {residual:.3e} exceeds {tol:.1e} * ||A||")
    if exact:
        nullity = exact_nullity(a)
        det = exact_det(a)
    else:
        nullity = int(np.sum(np.abs(w) <= 1e-7 * max(1.0, norm)))
        det = None
    return Spectrum(
        values=tuple(float(x) for x in w[::-1]),
        nullity=nullity,
        det=det,
        charpoly=char_poly(a) if with_charpoly else None,
        cluster_eps=1e-7 * max(1.0, norm),
        energy_bound=n * tol * max(norm, 1.0),
        max_residual=residual,
    )


def energy(a, tol: float = DEFAULT_TOL) -> float:
    return eigenvalues(a, tol, exact=False).energy


def spectral_radius(a, tol: float = DEFAULT_TOL) -> float:
    return eigenvalues(a, tol, exact=False).spectral_radius


def multiset_deviation(x: Sequence[float], y: Sequence[float]) -> float:
    """Max pairwise gap after sorting both; ``inf`` when sizes differ."""
    if len(x) != len(y):
        return float("inf")
    if not len(x):
        return 0.0
    return float(np.max(np.abs(np.sort(np.asarray(x, float)) - np.sort(np.asarray(y, float)))))


def multisets_close(x: Sequence[float], y: Sequence[float], tol: float = 1e-8) -> bool:
    scale = 1.0 + max([0.0] + [abs(float(v)) for v in (*x, *y)])
    return multiset_deviation(x, y) <= tol * scale


def multiset_diff(x: Sequence[float], y: Sequence[float], tol: float = 1e-8) -> dict[str, list[float]]:
    """Values of ``x`` with no partner in ``y`` (and vice versa) within ``tol``."""
    left = sorted(float(v) for v in x)
    right = sorted(float(v) for v in y)
    only_x, only_y = [], []
    i = j = 0
    while i < len(left) and j < len(right):
        if abs(left[i] - right[j]) <= tol * (1 + abs(left[i])):
            i += 1
            j += 1
        elif left[i] < right[j]:
            only_x.append(left[i])
            i += 1
        else:
            only_y.append(right[j])
            j += 1
    only_x.extend(left[i:])
    only_y.extend(right[j:])
    return {"formula_only": only_x, "oracle_only": only_y}
