"""Theorem verification, cospectral mining and singular families.

:func:`verify` builds a construction, eigensolves its adjacency matrix, evaluates
the matching closed form and compares the two.  It also checks the constructed
adjacency against the block-matrix builder with exact integer equality.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import closed_forms as cf
from .constructions import (
    ns_m,
    ns_m_matrix,
    ns_m_matrix_kron,
    nns,
    nns_matrix,
    s_join,
    sjoin_matrix,
    v_join,
    vjoin_matrix,
)
from .hypergraph import (
    Hypergraph,
    are_isomorphic,
    complete_hypergraph,
    degree_profile,
    enumerate_regular,
    fig2a,
    fig3,
)
from .linalg import (
    CharPoly,
    Spectrum,
    adjacency_matrix,
    char_poly,
    eigenvalues,
    exact_det,
    exact_nullity,
    multiset_deviation,
    multiset_diff,
)

THEOREM_IDS = (
    "nsm-spectrum",
    "ns-spectrum",
    "nsm-energy",
    "nsm-pairing",
    "nsm-det-radius",
    "nns-spectrum",
    "nns-energy",
    "vjoin-spectrum",
    "sjoin-spectrum",
)


def default_tolerance() -> float:
    return float(os.environ.get("HYPERSPEC_TOL", "1e-8"))


@dataclass
class VerificationReport:
    theorem_id: str
    instance: str
    verdict: str
    tolerance: float
    formula_spectrum: Optional[list[float]] = None
    oracle_spectrum: Optional[list[float]] = None
    formula_value: Optional[float] = None
    oracle_value: Optional[float] = None
    max_abs_deviation: Optional[float] = None
    exact_fields: dict = field(default_factory=dict)
    matrix_identity: Optional[bool] = None
    diff: Optional[dict] = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == "match"

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "formula_spectrum": self.formula_spectrum,
            "oracle_spectrum": self.oracle_spectrum,
            "formula_value": self.formula_value,
            "oracle_value": self.oracle_value,
            "max_abs_deviation": self.max_abs_deviation,
            "exact_fields": {
                name: {"formula": _jsonable(v["formula"]), "oracle": _jsonable(v["oracle"])}
                for name, v in self.exact_fields.items()
            },
            "matrix_identity": self.matrix_identity,
            "diff": self.diff,
            "notes": self.notes,
        }


def _jsonable(x):
    # exact integers travel as decimal strings
    return str(x) if isinstance(x, int) and not isinstance(x, bool) else x


def _describe(h: Hypergraph) -> str:
    return f"n={h.n} k={h.k} edges={[list(e) for e in h.edges]}"


def _finalize(report: VerificationReport, scale: float) -> VerificationReport:
    dev = report.max_abs_deviation
    close = dev is not None and dev <= report.tolerance * (1.0 + scale)
    exact_ok = all(v["formula"] == v["oracle"] for v in report.exact_fields.values())
    identity_ok = report.matrix_identity is not False
    report.verdict = "match" if close and exact_ok and identity_ok else "mismatch"
    if report.verdict == "mismatch" and report.formula_spectrum is not None:
        report.diff = multiset_diff(report.formula_spectrum, report.oracle_spectrum, report.tolerance)
    return report


def _compare_spectra(report: VerificationReport, formula: Spectrum, oracle: Spectrum) -> VerificationReport:
    report.formula_spectrum = list(formula.values)
    report.oracle_spectrum = list(oracle.values)
    report.max_abs_deviation = multiset_deviation(formula.values, oracle.values)
    return _finalize(report, oracle.spectral_radius)


def _not_applicable(theorem_id: str, instance: str, tol: float, why: str) -> VerificationReport:
    return VerificationReport(theorem_id, instance, "not-applicable", tol, notes=[why])


def verify(
    theorem_id: str,
    h: Hypergraph,
    m: int = 1,
    second: Optional[Hypergraph] = None,
    tol: Optional[float] = None,
    label: Optional[str] = None,
) -> VerificationReport:
    """Check one theorem on one instance.

    ``m`` is the copy count for the splitting theorems (forced to 1 for
    ``ns-spectrum``); ``second`` is the right-hand join factor, defaulting to
    the complete hypergraph ``K_k^k``.
    """
    if theorem_id not in THEOREM_IDS:
        raise KeyError(f"unknown theorem id {theorem_id!r}; expected one of {', '.join(THEOREM_IDS)}")
    tol = default_tolerance() if tol is None else tol
    if theorem_id == "ns-spectrum":
        m = 1
    instance = label or _describe(h)
    if theorem_id.startswith("nsm") or theorem_id == "ns-spectrum":
        return _verify_nsm(theorem_id, h, m, tol, f"{instance} m={m}")
    if theorem_id.startswith("nns"):
        return _verify_nns(theorem_id, h, tol, instance)
    if second is None:
        second = complete_hypergraph(h.k, h.k)
    instance += f" second=({_describe(second)})" if label is None else ""
    return _verify_join(theorem_id, h, second, tol, instance)


def _verify_nsm(theorem_id: str, h: Hypergraph, m: int, tol: float, instance: str) -> VerificationReport:
    a = adjacency_matrix(h)
    big = ns_m(h, m)
    a_big = adjacency_matrix(big)
    identity = bool(np.array_equal(a_big, ns_m_matrix(a, m, h.k)) and np.array_equal(a_big, ns_m_matrix_kron(a, m, h.k)))
    base = eigenvalues(a)
    oracle = eigenvalues(a_big)
    report = VerificationReport(theorem_id, instance, "mismatch", tol, matrix_identity=identity)

    if theorem_id in ("nsm-spectrum", "ns-spectrum"):
        formula = cf.ns_m_spectrum_formula(base, m, h.k, h.n)
        report.exact_fields["nullity"] = {
            "formula": cf.ns_m_nullity_formula(h.n, m, base.nullity),
            "oracle": oracle.nullity,
        }
        if m == 1 and base.nullity > 0:
            report.notes.append(
                f"nullity of the splitting is {oracle.nullity} = 2 x {base.nullity}; "
                "the equality eta(G) = eta(NS(G)) does not hold for singular G"
            )
        return _compare_spectra(report, formula, oracle)

    if theorem_id == "nsm-energy":
        report.formula_value = cf.ns_m_energy_formula(base.energy, m, h.k)
        report.oracle_value = oracle.energy
        report.max_abs_deviation = abs(report.formula_value - report.oracle_value)
        return _finalize(report, report.oracle_value)

    if theorem_id == "nsm-pairing":
        ok = cf.ns_pairing_check(oracle, base, m, h.k, tol)
        formula = cf.ns_m_spectrum_formula(base, m, h.k, h.n)
        report.formula_spectrum = list(formula.values)
        report.oracle_spectrum = list(oracle.values)
        report.max_abs_deviation = multiset_deviation(formula.values, oracle.values)
        report.exact_fields["pairing"] = {"formula": True, "oracle": ok}
        return _finalize(report, oracle.spectral_radius)

    # nsm-det-radius
    rel = cf.nsm_det_radius_relations(base, m, h.k)
    report.exact_fields["det"] = {"formula": rel.det_ns, "oracle": oracle.det}
    report.formula_value = rel.radius_ns
    report.oracle_value = oracle.spectral_radius
    report.max_abs_deviation = abs(rel.radius_ns - oracle.spectral_radius)
    return _finalize(report, oracle.spectral_radius)


def _verify_nns(theorem_id: str, h: Hypergraph, tol: float, instance: str) -> VerificationReport:
    prof = degree_profile(h)
    if h.k < 3:
        return _not_applicable(theorem_id, instance, tol, "closed form requires k >= 3")
    if not prof.is_regular:
        return _not_applicable(theorem_id, instance, tol, "closed form requires a (k,r)-regular hypergraph")
    r = prof.regular_degree
    a = adjacency_matrix(h)
    big = nns(h)
    a_big = adjacency_matrix(big)
    report = VerificationReport(
        theorem_id, instance, "mismatch", tol,
        matrix_identity=bool(np.array_equal(a_big, nns_matrix(a, h.n, h.k))),
    )
    base = eigenvalues(a)
    oracle = eigenvalues(a_big)
    if theorem_id == "nns-spectrum":
        return _compare_spectra(report, cf.nns_spectrum_formula(base, h.n, h.k, r), oracle)
    report.formula_value = cf.nns_energy_formula(base, h.n, h.k, r)
    report.oracle_value = oracle.energy
    report.max_abs_deviation = abs(report.formula_value - report.oracle_value)
    return _finalize(report, report.oracle_value)


def _verify_join(theorem_id: str, h1: Hypergraph, h2: Hypergraph, tol: float, instance: str) -> VerificationReport:
    if h1.k != h2.k:
        return _not_applicable(theorem_id, instance, tol, "join factors have different k")
    p1, p2 = degree_profile(h1), degree_profile(h2)
    if not (p1.is_regular and p2.is_regular):
        return _not_applicable(theorem_id, instance, tol, "closed form requires both factors regular")
    k = h1.k
    a1, a2 = adjacency_matrix(h1), adjacency_matrix(h2)
    if theorem_id == "vjoin-spectrum":
        joined, block, formula_fn = v_join(h1, h2), vjoin_matrix, cf.vjoin_spectrum_formula
    else:
        joined, block, formula_fn = s_join(h1, h2), sjoin_matrix, cf.sjoin_spectrum_formula
    a_big = adjacency_matrix(joined)
    report = VerificationReport(
        theorem_id, instance, "mismatch", tol,
        matrix_identity=bool(np.array_equal(a_big, block(a1, a2, h1.n, h2.n, k))),
    )
    formula = formula_fn(eigenvalues(a1), eigenvalues(a2), h1.n, h2.n, k, p1.regular_degree, p2.regular_degree)
    return _compare_spectra(report, formula, eigenvalues(a_big))


# -- corpus ----------------------------------------------------------------------

def default_corpus() -> list[tuple[str, Hypergraph]]:
    """Complete hypergraphs K_n^k (k in 3..4, n in k..7), fig3, fig2a and two regular enumerations."""
    corpus = []
    for k in (3, 4):
        for n in range(k, 8):
            corpus.append((f"K_{n}^{k}", complete_hypergraph(n, k)))
    corpus.append(("fig3", fig3()))
    corpus.append(("fig2a", fig2a()))
    for i, h in enumerate(enumerate_regular(6, 3, 2)):
        corpus.append((f"reg(6,3,2)#{i}", h))
    for i, h in enumerate(enumerate_regular(4, 3, 3)):
        corpus.append((f"reg(4,3,3)#{i}", h))
    return corpus


# -- cospectral mining -----------------------------------------------------------

JOIN_PRODUCTS: dict[str, Callable[[Hypergraph, Hypergraph, Hypergraph], tuple[Hypergraph, Hypergraph]]] = {
    "G1 v G2 ~ H1 v G2": lambda g, h, f: (v_join(g, f), v_join(h, f)),
    "G2 v G1 ~ G2 v H1": lambda g, h, f: (v_join(f, g), v_join(f, h)),
    "G1 s G2 ~ H1 s G2": lambda g, h, f: (s_join(g, f), s_join(h, f)),
    "G2 s G1 ~ G2 s H1": lambda g, h, f: (s_join(f, g), s_join(f, h)),
}


@dataclass
class CospectralPair:
    first: Hypergraph
    second: Hypergraph
    isomorphic: bool
    products: dict[str, bool] = field(default_factory=dict)
    products_nonisomorphic: dict[str, bool] = field(default_factory=dict)

    @property
    def products_verified(self) -> bool:
        return bool(self.products) and all(self.products.values())


@dataclass
class CospectralCatalog:
    n: int
    k: int
    r: int
    count: int
    classes: list[tuple[CharPoly, list[Hypergraph]]]
    pairs: list[CospectralPair]

    def to_dict(self) -> dict:
        return {
            "parameters": {"n": self.n, "k": self.k, "r": self.r},
            "hypergraphs": self.count,
            "classes": [
                {"charpoly": [str(c) for c in poly.coefficients], "size": len(members)}
                for poly, members in self.classes
            ],
            "pairs": [
                {
                    "first": [list(e) for e in p.first.edges],
                    "second": [list(e) for e in p.second.edges],
                    "isomorphic": p.isomorphic,
                    "products_cospectral": p.products,
                    "products_nonisomorphic": p.products_nonisomorphic,
                    "products_verified": p.products_verified,
                }
                for p in self.pairs
            ],
        }


def certify_join_products(
    g: Hypergraph, h: Hypergraph, factor: Hypergraph, check_isomorphism: bool = False
) -> tuple[dict[str, bool], dict[str, bool]]:
    """Exact cospectrality (and optionally non-isomorphism) of the four join products."""
    cospectral, noniso = {}, {}
    for name, build in JOIN_PRODUCTS.items():
        x, y = build(g, h, factor)
        cospectral[name] = char_poly(adjacency_matrix(x)) == char_poly(adjacency_matrix(y))
        if check_isomorphism:
            noniso[name] = not are_isomorphic(x, y)
    return cospectral, noniso


def search_cospectral(
    n: int,
    k: int,
    r: int,
    require_nonisomorphic: bool = False,
    cap: Optional[int] = None,
    factor: Optional[Hypergraph] = None,
) -> CospectralCatalog:
    """Bucket all (k, r)-regular hypergraphs on ``n`` vertices by exact characteristic polynomial.

    Inside a bucket, members are reduced to isomorphism-class representatives.
    Every pair of distinct representatives is a non-isomorphic cospectral pair.
    Unless ``require_nonisomorphic`` is set, each class with several labelings
    also contributes one (representative, relabeled copy) pair.  Every pair has
    its join products with ``factor`` (default ``K_k^k``) certified exactly.
    """
    members = enumerate_regular(n, k, r, cap)
    factor = complete_hypergraph(k, k) if factor is None else factor
    buckets: dict[CharPoly, list[Hypergraph]] = defaultdict(list)
    for h in members:
        buckets[char_poly(adjacency_matrix(h))].append(h)
    classes = sorted(buckets.items(), key=lambda kv: kv[1][0].edges)

    pairs: list[CospectralPair] = []
    for _, group in classes:
        reps: list[tuple[Hypergraph, list[Hypergraph]]] = []
        for h in group:
            for rep, copies in reps:
                if are_isomorphic(rep, h):
                    copies.append(h)
                    break
            else:
                reps.append((h, []))
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                g, h = reps[i][0], reps[j][0]
                co, ni = certify_join_products(g, h, factor, check_isomorphism=True)
                pairs.append(CospectralPair(g, h, False, co, ni))
        if not require_nonisomorphic:
            for rep, copies in reps:
                if copies:
                    co, _ = certify_join_products(rep, copies[0], factor)
                    pairs.append(CospectralPair(rep, copies[0], True, co))
    return CospectralCatalog(n, k, r, len(members), [(p, g) for p, g in classes], pairs)


# -- singular families -----------------------------------------------------------

@dataclass(frozen=True)
class FamilyMember:
    descriptor: str
    order: int
    nullity: int
    lower_bound: int


def singular_family(base: Hypergraph, m_max: int, factor: Optional[Hypergraph] = None) -> list[FamilyMember]:
    """Singular hypergraphs derived from ``base`` with exactly certified nullity.

    Always emits the m-splittings for ``m`` in ``2..m_max``.  When ``base`` is
    itself singular it also emits the 1-splitting and both joins with
    ``factor`` (default ``K_k^k``).
    """
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    n = base.n
    eta = exact_nullity(adjacency_matrix(base))
    out = []
    for m in range(2, m_max + 1):
        h = ns_m(base, m)
        out.append(FamilyMember(f"ns_m(base, m={m})", h.n, exact_nullity(adjacency_matrix(h)), n * (m - 1)))
    if eta > 0:
        h = ns_m(base, 1)
        out.append(FamilyMember("ns(base)", h.n, exact_nullity(adjacency_matrix(h)), 2 * eta))
        factor = complete_hypergraph(base.k, base.k) if factor is None else factor
        for name, fn in (("v_join", v_join), ("s_join", s_join)):
            h = fn(base, factor)
            out.append(FamilyMember(f"{name}(base, factor)", h.n, exact_nullity(adjacency_matrix(h)), 1))
    return out


def ns_det_identity(h: Hypergraph) -> tuple[int, int]:
    """``(det A(NS(h)), (-1)^n det(A(h))^2)`` computed exactly."""
    d = exact_det(adjacency_matrix(h))
    return exact_det(adjacency_matrix(ns_m(h, 1))), (-1) ** h.n * d * d
