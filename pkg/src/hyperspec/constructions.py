"""Splitting and join operations, built two ways.

Each operation exists as a hypergraph construction taken straight from its
definition and as a block adjacency matrix assembled from the closed-form block
layout.  The two routes share no code, so comparing their outputs certifies the
block formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .hypergraph import Hypergraph, is_neighbor, validate
from .linalg import kronecker


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class VertexLayout:
    """Named half-open vertex ranges of a constructed hypergraph."""

    blocks: tuple[tuple[str, int, int], ...]

    def range(self, name: str) -> range:
        for label, lo, hi in self.blocks:
            if label == name:
                return range(lo, hi)
        raise KeyError(name)

    @property
    def order(self) -> int:
        return self.blocks[-1][2] if self.blocks else 0

    def header_lines(self) -> list[str]:
        return [f"# {label} {lo}..{hi}" for label, lo, hi in self.blocks]


def ns_layout(n: int, m: int) -> VertexLayout:
    return VertexLayout((("originals", 0, n),) + tuple((f"copy{i}", i * n, (i + 1) * n) for i in range(1, m + 1)))


def nns_layout(n: int) -> VertexLayout:
    return VertexLayout((("originals", 0, n), ("split", n, 2 * n)))


def join_layout(n1: int, n2: int) -> VertexLayout:
    return VertexLayout((("V1", 0, n1), ("S1", n1, 2 * n1), ("V2", 2 * n1, 2 * n1 + n2)))


def _finish(n: int, k: int, edges: list) -> Hypergraph:
    out = Hypergraph(n, k, tuple(sorted(tuple(sorted(e)) for e in edges)))
    problem = validate(out)
    assert problem is None, problem
    return out


# -- hypergraph constructions ----------------------------------------------------

def ns_m(h: Hypergraph, m: int) -> Hypergraph:
    """Neighbourhood m-splitting: copy vertex ``u_{i,j} = i*n + j`` joins every (k-1)-set that ``v_j`` neighbours."""
    if m < 1:
        raise ValueError(f"copy count m must be >= 1, got {m}")
    n = h.n
    edges = list(h.edges)
    for i in range(1, m + 1):
        for e in h.edges:
            for j in e:
                edges.append((i * n + j, *(v for v in e if v != j)))
    return _finish(n * (m + 1), h.k, edges)


def nns(h: Hypergraph) -> Hypergraph:
    """Non-neighbourhood splitting: ``u_i = n + i`` joins every (k-1)-set of ``V - {v_i}`` that ``v_i`` does not neighbour."""
    n, k = h.n, h.k
    edges = list(h.edges)
    for i in range(n):
        rest = [v for v in range(n) if v != i]
        for D in combinations(rest, k - 1):
            if not is_neighbor(h, i, D):
                edges.append((n + i, *D))
    return _finish(2 * n, k, edges)


def _join(h1: Hypergraph, h2: Hypergraph, attach: str) -> Hypergraph:
    if h1.k != h2.k:
        raise ValueError(f"join needs equal uniformity, got k={h1.k} and k={h2.k}")
    k, n1, n2 = h1.k, h1.n, h2.n
    edges = list(ns_m(h1, 1).edges)
    offset = 2 * n1
    edges.extend(tuple(offset + v for v in e) for e in h2.edges)
    base = 0 if attach == "V" else n1
    for D in combinations(range(offset, offset + n2), k - 1):
        for v in range(n1):
            edges.append((base + v, *D))
    return _finish(2 * n1 + n2, k, edges)


def v_join(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """``NS(h1)`` plus ``h2``, with every original vertex of ``h1`` neighbouring every (k-1)-subset of ``V(h2)``."""
    return _join(h1, h2, "V")


def s_join(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """As :func:`v_join` but the coupling edges hang off the split vertices ``S(h1)``."""
    return _join(h1, h2, "S")


# -- block matrices --------------------------------------------------------------

def split_matrix(m: int, k: int) -> np.ndarray:
    """The (m+1)x(m+1) factor with ``mk-2m+1`` in the corner and ones along the first row and column."""
    M = np.zeros((m + 1, m + 1), dtype=np.int64)
    M[0, 0] = m * k - 2 * m + 1
    M[0, 1:] = 1
    M[1:, 0] = 1
    return M


def ns_m_matrix(a, m: int, k: int) -> np.ndarray:
    if m < 1:
        raise ValueError(f"copy count m must be >= 1, got {m}")
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    out = np.zeros(((m + 1) * n, (m + 1) * n), dtype=np.int64)
    out[:n, :n] = (m * k - 2 * m + 1) * a
    for i in range(1, m + 1):
        out[:n, i * n:(i + 1) * n] = a
        out[i * n:(i + 1) * n, :n] = a
    return out


def ns_m_matrix_kron(a, m: int, k: int) -> np.ndarray:
    return kronecker(split_matrix(m, k), np.asarray(a, dtype=np.int64))


def _jmi(n: int) -> np.ndarray:
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)


def nns_matrix(a, n: int, k: int) -> np.ndarray:
    if k < 3:
        raise ValueError(f"the NNS block formula needs k >= 3, got k={k}")
    a = np.asarray(a, dtype=np.int64)
    top = (n - 2) * binom(n - 3, k - 3) * _jmi(n) - (k - 3) * a
    off = binom(n - 2, k - 2) * _jmi(n) - a
    out = np.zeros((2 * n, 2 * n), dtype=np.int64)
    out[:n, :n] = top
    out[:n, n:] = off
    out[n:, :n] = off
    return out


def _join_matrix(a1, a2, n1: int, n2: int, k: int, attach: str) -> np.ndarray:
    a1 = np.asarray(a1, dtype=np.int64)
    a2 = np.asarray(a2, dtype=np.int64)
    if a1.shape != (n1, n1) or a2.shape != (n2, n2):
        raise ValueError("matrix sizes do not match n1, n2")
    out = np.zeros((2 * n1 + n2, 2 * n1 + n2), dtype=np.int64)
    out[:n1, :n1] = (k - 1) * a1
    out[:n1, n1:2 * n1] = a1
    out[n1:2 * n1, :n1] = a1
    out[2 * n1:, 2 * n1:] = a2 + binom(n2 - 2, k - 3) * n1 * _jmi(n2)
    row = slice(0, n1) if attach == "V" else slice(n1, 2 * n1)
    out[row, 2 * n1:] = binom(n2 - 1, k - 2)
    out[2 * n1:, row] = binom(n2 - 1, k - 2)
    return out


def vjoin_matrix(a1, a2, n1: int, n2: int, k: int) -> np.ndarray:
    return _join_matrix(a1, a2, n1, n2, k, "V")


def sjoin_matrix(a1, a2, n1: int, n2: int, k: int) -> np.ndarray:
    return _join_matrix(a1, a2, n1, n2, k, "S")
