"""k-uniform hypergraphs: data model, generators, enumeration and isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

Edge = tuple[int, ...]


class InvalidHypergraph(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices ``0..n-1``.

    The raw constructor stores whatever it is given so that :func:`validate`
    can report problems; use :meth:`from_edges` to build a canonical,
    validated instance.
    """

    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        raw = cls(n, k, tuple(tuple(int(v) for v in e) for e in edges))
        problem = validate(raw)
        if problem is not None:
            raise InvalidHypergraph(problem)
        return cls(n, k, tuple(sorted(tuple(sorted(e)) for e in raw.edges)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image of the hypergraph under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Hypergraph.from_edges(self.n, self.k, ([perm[v] for v in e] for e in self.edges))

    def __str__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    regular_degree: Optional[int]

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None


def validate(h: Hypergraph) -> Optional[str]:
    """Return ``None`` if ``h`` satisfies every invariant, else the first violation."""
    if h.k < 2:
        return f"edge size k={h.k} must be at least 2"
    if h.n < 0:
        return f"negative vertex count {h.n}"
    seen = set()
    for idx, e in enumerate(h.edges):
        if len(e) != h.k:
            return f"wrong edge size: edge {idx} {list(e)} has {len(e)} vertices, expected {h.k}"
        for v in e:
            if not 0 <= v < h.n:
                return f"vertex out of range: {v} in edge {idx} (n={h.n})"
        if len(set(e)) != len(e):
            return f"repeated vertex in edge {idx} {list(e)}"
        key = tuple(sorted(e))
        if key in seen:
            return f"duplicate edge {list(key)}"
        seen.add(key)
    return None


def degree_profile(h: Hypergraph) -> DegreeProfile:
    degrees = [0] * h.n
    for e in h.edges:
        for v in e:
            degrees[v] += 1
    regular = degrees[0] if degrees and all(d == degrees[0] for d in degrees) else None
    return DegreeProfile(tuple(degrees), regular)


def is_neighbor(h: Hypergraph, v: int, D: Sequence[int]) -> bool:
    """Whether ``{v} | D`` is an edge of ``h``; a vertex is never a neighbour of a set containing it."""
    if len(D) != h.k - 1:
        raise ValueError(f"D must have k-1={h.k - 1} vertices, got {len(D)}")
    if not 0 <= v < h.n or any(not 0 <= d < h.n for d in D):
        raise ValueError("vertex out of range")
    if v in D:
        return False
    return tuple(sorted((v, *D))) in _edge_set(h)


def _edge_set(h: Hypergraph) -> frozenset[Edge]:
    # frozen dataclass: cache on the instance without tripping __setattr__
    cached = h.__dict__.get("_edge_set")
    if cached is None:
        cached = frozenset(h.edges)
        object.__setattr__(h, "_edge_set", cached)
    return cached


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    if k < 2 or k > n:
        raise ValueError(f"complete hypergraph needs 2 <= k <= n, got n={n}, k={k}")
    return Hypergraph(n, k, tuple(combinations(range(n), k)))


def empty_hypergraph(n: int, k: int) -> Hypergraph:
    return Hypergraph.from_edges(n, k, [])


def fig3() -> Hypergraph:
    """The (3,2)-regular hypergraph on six vertices used as the running energy example."""
    return Hypergraph.from_edges(6, 3, [(0, 1, 3), (2, 4, 5), (0, 1, 2), (3, 4, 5)])


def fig2a() -> Hypergraph:
    """Two triangles sharing the pair {1, 2}; non-regular."""
    return Hypergraph.from_edges(4, 3, [(0, 1, 2), (1, 2, 3)])


def enumerate_regular(n: int, k: int, r: int, cap: Optional[int] = None) -> list[Hypergraph]:
    """All (k, r)-regular hypergraphs on ``n`` labeled vertices, lexicographic by edge list.

    Edges are grouped by their smallest vertex; when the search reaches vertex
    ``u`` every edge still able to cover ``u`` has minimum ``u``, so exactly
    ``deficit[u]`` of them must be chosen there.
    """
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got n={n}, k={k}")
    if r < 1:
        raise ValueError(f"degree r must be positive, got {r}")
    if (n * r) % k:
        raise ValueError(f"no ({k},{r})-regular hypergraph on {n} vertices")
    if r > comb(n - 1, k - 1):
        return []

    by_min = [
        [(u, *rest) for rest in combinations(range(u + 1, n), k - 1)] for u in range(n)
    ]
    deficit = [r] * n
    chosen: list[Edge] = []
    out: list[Hypergraph] = []

    def feasible(u: int) -> bool:
        # remaining edges live inside {u..n-1}
        room = comb(n - u - 1, k - 1)
        return all(deficit[w] <= room for w in range(u, n))

    def search(u: int) -> bool:
        if cap is not None and len(out) >= cap:
            return True
        if u == n:
            out.append(Hypergraph(n, k, tuple(chosen)))
            return False
        need = deficit[u]
        if need == 0:
            return search(u + 1)
        cands = [e for e in by_min[u] if all(deficit[v] > 0 for v in e[1:])]
        for group in combinations(cands, need):
            for e in group:
                for v in e:
                    deficit[v] -= 1
            if all(deficit[v] >= 0 for e in group for v in e) and feasible(u + 1):
                chosen.extend(group)
                stop = search(u + 1)
                del chosen[len(chosen) - len(group):]
            else:
                stop = False
            for e in group:
                for v in e:
                    deficit[v] += 1
            if stop:
                return True
        return False

    search(0)
    return out


# -- isomorphism -------------------------------------------------------------

def _codegree(h: Hypergraph) -> np.ndarray:
    a = np.zeros((h.n, h.n), dtype=np.int64)
    for e in h.edges:
        for i, j in combinations(e, 2):
            a[i, j] += 1
            a[j, i] += 1
    return a


def _refine(hs: Sequence[Hypergraph], adjs: Sequence[np.ndarray]) -> list[list[int]]:
    """Joint colour refinement so that colours are comparable across ``hs``."""
    incident = [[[e for e in h.edges if v in e] for v in range(h.n)] for h in hs]
    colours = [[len(incident[g][v]) for v in range(h.n)] for g, h in enumerate(hs)]
    n_classes = -1
    while True:
        sigs = []
        for g, h in enumerate(hs):
            col, a = colours[g], adjs[g]
            row = []
            for v in range(h.n):
                pair = sorted((int(a[v, w]), col[w]) for w in range(h.n) if w != v)
                edge = sorted(tuple(sorted(col[w] for w in e if w != v)) for e in incident[g][v])
                row.append((col[v], tuple(pair), tuple(edge)))
            sigs.append(row)
        palette = {s: i for i, s in enumerate(sorted({s for row in sigs for s in row}))}
        colours = [[palette[s] for s in row] for row in sigs]
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def find_isomorphism(h1: Hypergraph, h2: Hypergraph) -> Optional[list[int]]:
    """A vertex bijection ``perm`` with ``h1.relabel(perm) == h2``, or ``None``."""
    if (h1.n, h1.k, len(h1.edges)) != (h2.n, h2.k, len(h2.edges)):
        return None
    n = h1.n
    if n == 0:
        return []
    a1, a2 = _codegree(h1), _codegree(h2)
    if sorted(degree_profile(h1).degrees) != sorted(degree_profile(h2).degrees):
        return None
    if sorted(a1[np.triu_indices(n, 1)].tolist()) != sorted(a2[np.triu_indices(n, 1)].tolist()):
        return None
    c1, c2 = _refine([h1, h2], [a1, a2])
    if sorted(c1) != sorted(c2):
        return None

    edges2 = _edge_set(h2)
    incident1 = [[e for e in h1.edges if v in e] for v in range(n)]
    # most constrained first: rare colours, then many edges
    freq = {c: c1.count(c) for c in c1}
    order = sorted(range(n), key=lambda v: (freq[c1[v]], -len(incident1[v]), v))
    position = {v: i for i, v in enumerate(order)}
    cands = {v: [w for w in range(n) if c2[w] == c1[v]] for v in range(n)}
    perm = [-1] * n
    used = [False] * n

    def consistent(v: int, w: int) -> bool:
        for u in order[: position[v]]:
            if a1[v, u] != a2[w, perm[u]]:
                return False
        for e in incident1[v]:
            if all(position[x] <= position[v] for x in e):
                img = tuple(sorted(w if x == v else perm[x] for x in e))
                if img not in edges2:
                    return False
        return True

    def search(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in cands[v]:
            if not used[w] and consistent(v, w):
                perm[v], used[w] = w, True
                if search(i + 1):
                    return True
                perm[v], used[w] = -1, False
        return False

    if not search(0):
        return None
    return perm


def are_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    return find_isomorphism(h1, h2) is not None
