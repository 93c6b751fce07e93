"""Closed-form spectra, energies and related quantities of the constructions.

Every function here works from the base hypergraph's eigenvalues and the
integer parameters (n, k, r, m) alone.  None of them builds the constructed
matrix, which keeps them usable as an independent check on the eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .constructions import binom
from .linalg import Spectrum, multisets_close

Values = Union[Spectrum, Sequence[float]]

REGULAR_TOL = 1e-8


class NotRegularError(ValueError):
    """Raised when a formula that assumes a (k, r)-regular base gets anything else."""


def _values(spec: Values) -> list[float]:
    if isinstance(spec, Spectrum):
        return list(spec.values)
    return [float(v) for v in spec]


def _drop_principal(values: Sequence[float], r: int, k: int) -> list[float]:
    """Remove one copy of ``r(k-1)`` after checking it is the largest eigenvalue."""
    lead = r * (k - 1)
    vals = sorted(values, reverse=True)
    if not vals:
        raise NotRegularError("empty spectrum")
    scale = max(1.0, abs(lead))
    if abs(vals[0] - lead) > REGULAR_TOL * scale:
        raise NotRegularError(f"largest eigenvalue {vals[0]:.12g} is not r(k-1) = {lead}")
    return vals[1:]


@dataclass(frozen=True)
class SplitFactors:
    """The two nonzero eigenvalues of the m-splitting factor matrix."""

    m: int
    k: int

    @property
    def corner(self) -> int:
        return self.m * self.k - 2 * self.m + 1

    @property
    def disc(self) -> float:
        return math.sqrt(self.corner ** 2 + 4 * self.m)

    @property
    def nu1(self) -> float:
        return (self.corner + self.disc) / 2

    @property
    def nu2(self) -> float:
        # product form avoids cancellation when the corner dominates
        return -self.m / self.nu1


@dataclass(frozen=True)
class NNSQuadratic:
    n: int
    k: int
    r: int

    @property
    def x(self) -> int:
        n, k, r = self.n, self.k, self.r
        return r * (k - 1) * (k - 3) - (n - 1) * (n - 2) * binom(n - 3, k - 3)

    @property
    def y(self) -> int:
        n, k, r = self.n, self.k, self.r
        return r * (k - 1) - (n - 1) * binom(n - 2, k - 2)

    @property
    def alphas(self) -> tuple[float, float]:
        """Roots of ``t^2 + X t - Y^2``; the first is nonnegative, the second nonpositive."""
        return _quadratic_roots(self.x, self.y ** 2)

    def branch(self, lam: float) -> tuple[float, float]:
        """Roots of ``t^2 + ((k-3) lam + (n-2) C(n-3,k-3)) t - (lam + C(n-2,k-2))^2``."""
        n, k = self.n, self.k
        b = (k - 3) * lam + (n - 2) * binom(n - 3, k - 3)
        c = (lam + binom(n - 2, k - 2)) ** 2
        return _quadratic_roots(b, c)


def _quadratic_roots(b: float, c: float) -> tuple[float, float]:
    """Roots of ``t^2 + b t - c`` with ``c >= 0``, largest first, cancellation-free."""
    d = math.sqrt(b * b + 4 * c)
    if b >= 0:
        lo = (-b - d) / 2
        hi = -c / lo if lo != 0 else 0.0
    else:
        hi = (-b + d) / 2
        lo = -c / hi if hi != 0 else 0.0
    return hi, lo


@dataclass(frozen=True)
class JoinCubic:
    """Cubic governing the three eigenvalues on the block-constant vectors of a join.

    ``coefficients`` are exact integers ``(1, c2, c1, c0)`` for
    ``t^3 + c2 t^2 + c1 t + c0``.
    """

    kind: str
    n1: int
    n2: int
    k: int
    r1: int
    r2: int

    @property
    def a(self) -> int:
        return self.r2 * (self.k - 1) + binom(self.n2 - 2, self.k - 3) * self.n1 * (self.n2 - 1)

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        n1, n2, k, r1 = self.n1, self.n2, self.k, self.r1
        a = self.a
        s = r1 * (k - 1) ** 2
        cc = n1 * n2 * binom(n2 - 1, k - 2) ** 2
        if self.kind == "V":
            return (1, -(a + s), s * (a - r1) - cc, a * r1 ** 2 * (k - 1) ** 2)
        if self.kind == "S":
            # (t - a)(t^2 - s t - r1^2 (k-1)^2) - cc (t - s)
            q = r1 ** 2 * (k - 1) ** 2
            return (1, -(a + s), a * s - q - cc, a * q + cc * s)
        raise ValueError(f"unknown join kind {self.kind!r}")

    @property
    def roots(self) -> tuple[float, float, float]:
        c = self.coefficients
        companion = np.array(
            [[-c[1], -c[2], -c[3]], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]], dtype=float
        )
        z = np.linalg.eigvals(companion)
        scale = 1.0 + float(np.max(np.abs(z)))
        if np.max(np.abs(z.imag)) > 1e-6 * scale:
            raise ArithmeticError(f"cubic {c} has non-real roots {z}")
        return tuple(sorted((float(x) for x in z.real), reverse=True))


# -- neighbourhood m-splitting ---------------------------------------------------

def ns_m_spectrum_formula(spec: Values, m: int, k: int, n: int | None = None) -> Spectrum:
    vals = _values(spec)
    if n is not None and len(vals) != n:
        raise ValueError(f"expected {n} eigenvalues, got {len(vals)}")
    f = SplitFactors(m, k)
    out = [f.nu1 * v for v in vals] + [f.nu2 * v for v in vals] + [0.0] * (len(vals) * (m - 1))
    return Spectrum.from_values(out, "closed-form:nsm-spectrum" if m > 1 else "closed-form:ns-spectrum")


def ns_m_energy_formula(energy: float, m: int, k: int) -> float:
    if energy < 0:
        raise ValueError("energy must be nonnegative")
    return SplitFactors(m, k).disc * energy


def ns_m_nullity_formula(n: int, m: int, base_nullity: int) -> int:
    return n * (m - 1) + 2 * base_nullity


def ns_pairing_check(spec_nsm: Values, spec_g: Values, m: int, k: int, tol: float = 1e-8) -> bool:
    """Check the eigenvalue pairing of an m-splitting against its base spectrum.

    Three conditions, all to tolerance:

    * every nonzero eigenvalue ``mu`` has some base ``lam`` with ``-m lam^2 / mu`` also present;
    * the nonzero part equals ``{nu1 lam} | {nu2 lam}`` over nonzero base eigenvalues;
    * scaling by ``-nu2^2 / m`` carries the ``nu1`` branch onto the ``nu2`` branch.
    """
    big = _values(spec_nsm)
    base = _values(spec_g)
    f = SplitFactors(m, k)
    scale = 1.0 + max([0.0] + [abs(v) for v in big])
    eps = tol * scale
    nonzero = [v for v in big if abs(v) > eps]
    base_nz = [v for v in base if abs(v) > tol * (1.0 + max([0.0] + [abs(x) for x in base]))]

    def present(x: float) -> bool:
        return any(abs(x - v) <= eps for v in nonzero)

    for mu in nonzero:
        if not any(present(-m * lam * lam / mu) for lam in base_nz):
            return False
    branch1 = [f.nu1 * lam for lam in base_nz]
    branch2 = [f.nu2 * lam for lam in base_nz]
    if not multisets_close(nonzero, branch1 + branch2, tol):
        return False
    mapped = [-(f.nu2 ** 2 / m) * mu for mu in branch1]
    return multisets_close(mapped, branch2, tol)


@dataclass(frozen=True)
class DetRadius:
    det_ns: int
    radius_ns: float


def nsm_det_radius_relations(spec_g: Spectrum, m: int, k: int) -> DetRadius:
    """Determinant rule (exact) and spectral radius of the m-splitting."""
    if spec_g.det is None:
        raise ValueError("base spectrum must carry an exact determinant")
    n = spec_g.order
    det = (-1) ** n * spec_g.det ** 2 if m == 1 else 0
    return DetRadius(det, SplitFactors(m, k).nu1 * spec_g.spectral_radius)


# -- non-neighbourhood splitting -------------------------------------------------

def nns_spectrum_formula(spec: Values, n: int, k: int, r: int) -> Spectrum:
    if k < 3:
        raise ValueError(f"closed form needs k >= 3, got k={k}")
    rest = _drop_principal(_values(spec), r, k)
    q = NNSQuadratic(n, k, r)
    out = list(q.alphas)
    for lam in rest:
        out.extend(q.branch(lam))
    return Spectrum.from_values(out, "closed-form:nns-spectrum")


def nns_energy_formula(spec: Values, n: int, k: int, r: int) -> float:
    if k < 3:
        raise ValueError(f"closed form needs k >= 3, got k={k}")
    rest = _drop_principal(_values(spec), r, k)
    q = NNSQuadratic(n, k, r)
    total = math.sqrt(q.x ** 2 + 4 * q.y ** 2)
    for lam in rest:
        b = (k - 3) * lam + (n - 2) * binom(n - 3, k - 3)
        total += math.sqrt(b * b + 4 * (lam + binom(n - 2, k - 2)) ** 2)
    return total


# -- joins -----------------------------------------------------------------------

def _join_spectrum(kind: str, spec1: Values, spec2: Values, n1: int, n2: int, k: int, r1: int, r2: int) -> Spectrum:
    rest1 = _drop_principal(_values(spec1), r1, k)
    rest2 = _drop_principal(_values(spec2), r2, k)
    if len(rest1) != n1 - 1 or len(rest2) != n2 - 1:
        raise ValueError("spectrum sizes do not match n1, n2")
    f = SplitFactors(1, k)
    shift = n1 * binom(n2 - 2, k - 3)
    out = [lam - shift for lam in rest2]
    out += [f.nu1 * lam for lam in rest1] + [f.nu2 * lam for lam in rest1]
    out += list(JoinCubic(kind, n1, n2, k, r1, r2).roots)
    tag = "vjoin-spectrum" if kind == "V" else "sjoin-spectrum"
    return Spectrum.from_values(out, f"closed-form:{tag}")


def vjoin_spectrum_formula(spec1: Values, spec2: Values, n1: int, n2: int, k: int, r1: int, r2: int) -> Spectrum:
    return _join_spectrum("V", spec1, spec2, n1, n2, k, r1, r2)


def sjoin_spectrum_formula(spec1: Values, spec2: Values, n1: int, n2: int, k: int, r1: int, r2: int) -> Spectrum:
    return _join_spectrum("S", spec1, spec2, n1, n2, k, r1, r2)
