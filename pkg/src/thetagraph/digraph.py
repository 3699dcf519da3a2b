"""Directed graphs with loops and without multiple arcs.

Vertices are ``0..n-1``.  Out- and in-neighbourhoods are held as Python
integers used as bitsets, which keeps neighbourhood intersections (the
inner loop of every closure computation) cheap.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_ISO_VERTICES = 2000


class PropertyViolation(ValueError):
    """The graph lacks a structural property an operation relies on."""


class CapacityError(ValueError):
    """An instance exceeds a configured size cap."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Digraph:
    """Immutable digraph; ``out[v]`` is the bitset of post-neighbours of v."""

    def __init__(self, n: int, out: Sequence[int], labels: Sequence | None = None):
        if len(out) != n:
            raise ValueError("need one out-neighbour set per vertex")
        full = (1 << n) - 1
        for m in out:
            if m & ~full:
                raise ValueError("arc target out of range")
        self.n = n
        self.out = tuple(out)
        self.labels = None if labels is None else tuple(labels)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]], labels=None) -> "Digraph":
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range")
            out[u] |= 1 << v
        return cls(n, out, labels)

    @cached_property
    def inc(self) -> tuple[int, ...]:
        inc = [0] * self.n
        for u, m in enumerate(self.out):
            bit = 1 << u
            for v in members(m):
                inc[v] |= bit
        return tuple(inc)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.out[u])]

    def arc_count(self) -> int:
        return sum(popcount(m) for m in self.out)

    def outdegree(self, v: int) -> int:
        return popcount(self.out[v])

    def indegree(self, v: int) -> int:
        return popcount(self.inc[v])

    def has_loop(self, v: int) -> bool:
        return self.has_arc(v, v)

    # -- neighbourhoods and closures on bitsets --
    def n_plus_mask(self, X: int) -> int:
        """Common post-neighbours of X; the empty set maps to V(G)."""
        r = self.full_mask
        out = self.out
        while X and r:
            low = X & -X
            r &= out[low.bit_length() - 1]
            X ^= low
        return r

    def n_minus_mask(self, X: int) -> int:
        r = self.full_mask
        inc = self.inc
        while X and r:
            low = X & -X
            r &= inc[low.bit_length() - 1]
            X ^= low
        return r

    def cl_t_mask(self, X: int) -> int:
        return self.n_plus_mask(self.n_minus_mask(X))

    def cl_s_mask(self, X: int) -> int:
        return self.n_minus_mask(self.n_plus_mask(X))

    @cached_property
    def cl_t_vertex(self) -> tuple[int, ...]:
        """Target closure of every single vertex."""
        return tuple(self.cl_t_mask(1 << v) for v in range(self.n))

    @cached_property
    def cl_s_vertex(self) -> tuple[int, ...]:
        return tuple(self.cl_s_mask(1 << v) for v in range(self.n))

    # -- edits --
    def with_arc(self, u: int, v: int) -> "Digraph":
        out = list(self.out)
        out[u] |= 1 << v
        return Digraph(self.n, out, self.labels)

    def without_arc(self, u: int, v: int) -> "Digraph":
        out = list(self.out)
        out[u] &= ~(1 << v)
        return Digraph(self.n, out, self.labels)

    def induced(self, keep: Sequence[int]) -> "Digraph":
        """Subgraph induced on ``keep`` (vertices renumbered in that order)."""
        pos = {v: i for i, v in enumerate(keep)}
        out = []
        for v in keep:
            out.append(mask_of(pos[w] for w in members(self.out[v]) if w in pos))
        labels = None if self.labels is None else [self.labels[v] for v in keep]
        return Digraph(len(keep), out, labels)

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Graph with vertex v renamed perm[v]."""
        out = [0] * self.n
        for u in range(self.n):
            out[perm[u]] = mask_of(perm[w] for w in members(self.out[u]))
        return Digraph(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self):
        return hash((self.n, self.out))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_count()})"

    # -- serialisation --
    def to_json(self, label_json=None) -> dict:
        labels = None
        if self.labels is not None:
            labels = [label_json(x) if label_json else x for x in self.labels]
        return {"n": self.n, "arcs": [list(a) for a in self.arcs()], "labels": labels}

    @classmethod
    def from_json(cls, data: dict) -> "Digraph":
        return cls.from_arcs(int(data["n"]), [tuple(a) for a in data["arcs"]], data.get("labels"))

    def to_dot(self, name: str = "G", label_text=None) -> str:
        lines = [f"digraph {name} {{"]
        for v in range(self.n):
            if self.labels is None:
                text = str(v)
            else:
                text = label_text(self.labels[v]) if label_text else str(self.labels[v])
            lines.append(f"  {v} [label={json.dumps(text)}];")
        for u, v in self.arcs():
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def n_plus(G: Digraph, X: Iterable[int]) -> frozenset[int]:
    return frozenset(members(G.n_plus_mask(mask_of(X))))


def n_minus(G: Digraph, X: Iterable[int]) -> frozenset[int]:
    return frozenset(members(G.n_minus_mask(mask_of(X))))


def cl_t(G: Digraph, X: Iterable[int]) -> frozenset[int]:
    return frozenset(members(G.cl_t_mask(mask_of(X))))


def cl_s(G: Digraph, X: Iterable[int]) -> frozenset[int]:
    return frozenset(members(G.cl_s_mask(mask_of(X))))


def tensor_product(G: Digraph, H: Digraph) -> Digraph:
    """Categorical product; vertex (g, h) is numbered g * |H| + h."""
    m = H.n
    # spread each out-set of H to every block g'
    out = [0] * (G.n * m)
    for g in range(G.n):
        gs = members(G.out[g])
        for h in range(H.n):
            hm = H.out[h]
            acc = 0
            for g2 in gs:
                acc |= hm << (g2 * m)
            out[g * m + h] = acc
    labels = None
    if G.labels is not None or H.labels is not None:
        gl = G.labels or tuple(range(G.n))
        hl = H.labels or tuple(range(H.n))
        labels = [(a, b) for a in gl for b in hl]
    return Digraph(G.n * m, out, labels)


@dataclass(frozen=True)
class TypePartition:
    """Vertices grouped by outdegree, largest outdegree first."""

    classes: tuple[frozenset[int], ...]
    degrees: tuple[int, ...]
    type_of: tuple[int, ...]

    def __len__(self):
        return len(self.classes)

    def masks(self) -> list[int]:
        return [mask_of(c) for c in self.classes]


def type_partition(G: Digraph) -> TypePartition:
    degs = [G.outdegree(v) for v in range(G.n)]
    distinct = sorted(set(degs), reverse=True)
    rank = {d: i for i, d in enumerate(distinct)}
    classes = [set() for _ in distinct]
    for v, d in enumerate(degs):
        classes[rank[d]].add(v)
    return TypePartition(
        tuple(frozenset(c) for c in classes),
        tuple(distinct),
        tuple(rank[d] for d in degs),
    )


def opposite_vertex(G: Digraph, v: int, partition: TypePartition | None = None) -> int:
    """The unique w of complementary type with arcs v -> w and w -> v."""
    tp = partition or type_partition(G)
    top = len(tp) - 1
    k = tp.type_of[v]
    cand = G.out[v] & G.inc[v] & mask_of(tp.classes[top - k])
    found = members(cand)
    if len(found) != 1:
        raise PropertyViolation(
            f"vertex {v} has {len(found)} opposite candidates (expected exactly one)"
        )
    return found[0]


# -- isomorphism by individualisation and refinement --

def _refine(n_total, succ, pred, colors):
    """Colour refinement on the disjoint union; colours are dense ints."""
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n_total):
            sigs.append((
                colors[v],
                tuple(sorted(colors[w] for w in succ[v])),
                tuple(sorted(colors[w] for w in pred[v])),
            ))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == ncolors:
            return new
        colors, ncolors = new, len(order)


def _balanced(colors, n_left):
    left, right = {}, {}
    for v, c in enumerate(colors):
        d = left if v < n_left else right
        d[c] = d.get(c, 0) + 1
    return left == right


def isomorphic_small(G: Digraph, H: Digraph, cap: int = MAX_ISO_VERTICES) -> list[int] | None:
    """An arc-preserving bijection V(G) -> V(H) as a list, or None."""
    if G.n > cap or H.n > cap:
        raise CapacityError(f"isomorphism search capped at {cap} vertices")
    if G.n != H.n or G.arc_count() != H.arc_count():
        return None
    n = G.n
    if n == 0:
        return []
    succ = [members(G.out[v]) for v in range(n)] + [[w + n for w in members(H.out[v])] for v in range(n)]
    pred = [[] for _ in range(2 * n)]
    for v in range(2 * n):
        for w in succ[v]:
            pred[w].append(v)
    init = []
    for v in range(2 * n):
        init.append((len(succ[v]), len(pred[v]), v in succ[v]))
    order = {s: i for i, s in enumerate(sorted(set(init)))}
    colors = _refine(2 * n, succ, pred, [order[s] for s in init])
    if not _balanced(colors, n):
        return None
    result = _search(n, succ, pred, colors)
    if result is None:
        return None
    if G.relabel(result) != H:
        raise AssertionError("refinement produced a non-isomorphism")
    return result


def _search(n, succ, pred, colors):
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    if all(len(c) == 1 for c in cells.values()):
        right = {colors[w]: w - n for w in range(n, 2 * n)}
        mapping = [right[colors[v]] for v in range(n)]
        for v in range(n):
            targets = sorted(mapping[w] for w in succ[v])
            if targets != sorted(w - n for w in succ[mapping[v] + n]):
                return None
        return mapping
    cell = min((c for c in cells.values() if len(c) > 1), key=len)
    v = cell[0]
    fresh = max(colors) + 1
    for w in range(n, 2 * n):
        if colors[w] != colors[v]:
            continue
        trial = list(colors)
        trial[v] = trial[w] = fresh
        refined = _refine(2 * n, succ, pred, trial)
        if not _balanced(refined, n):
            continue
        found = _search(n, succ, pred, refined)
        if found is not None:
            return found
    return None


def is_isomorphism(G: Digraph, H: Digraph, mapping: Sequence[int]) -> bool:
    if G.n != H.n or sorted(mapping) != list(range(H.n)):
        return False
    return G.relabel(mapping) == H


def undirected_components(G: Digraph, keep: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of the underlying undirected graph on ``keep``."""
    keep_mask = G.full_mask if keep is None else mask_of(keep)
    adj = [(G.out[v] | G.inc[v]) & keep_mask for v in range(G.n)]
    comps = []
    todo = keep_mask
    while todo:
        low = todo & -todo
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        todo &= ~comp
        comps.append(members(comp))
    return comps
