"""Adjacency test, neighbor generation and graph construction.

Two pencils are adjacent iff they have equal slices through some hyperplane
not containing either initial entry; neighbor generation therefore walks the
m0 maximal-clique copies incident to a vertex instead of scanning pairs.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from functools import lru_cache

from pencilgraphs import gf2, pencil
from pencilgraphs.gf2 import SpaceCtx
from pencilgraphs.pencil import VTuple


class BuildError(RuntimeError):
    pass


DEFAULT_CAP = 1 << 20


def adjacent(ctx: SpaceCtx, v: VTuple, w: VTuple):
    """Return the mask of the hyperplane U(v, w) if v ~ w, else None.

    Checks the three edge conditions literally; condition 3 is evaluated even
    where it is implied by the first two (rho = 2), as a cross-check.
    """
    if len(v) != len(w) or len(v) != ctx.m1 + 1:
        raise BuildError("pencils from different contexts")
    half = 1 << (ctx.sigma - 1)
    inter = v[0] & w[0]
    if inter.bit_count() != half - 1:
        return None
    if v[0] == w[0]:
        return None
    u = inter
    for i in range(1, ctx.m1 + 1):
        m = v[i] & w[i]
        if m.bit_count() != half:
            return None
        if m != gf2.coset_mask(inter, gf2.min_point(m)):
            return None
        u |= m
    if u.bit_count() != (1 << (ctx.r - 1)) - 1 or not gf2.is_xor_closed(u):
        return None
    return u


@lru_cache(maxsize=64)
def _copy_dual_points(r: int, a0_mask: int) -> tuple[int, ...]:
    """Dual points y whose hyperplane does not contain a0 (one per clique copy)."""
    hp = gf2.hyperplane_masks(r)
    return tuple(
        y for y in range(1, 1 << r) if hp[y - 1] & a0_mask != a0_mask
    )


def clique_slices(ctx: SpaceCtx, v: VTuple) -> list[tuple[int, VTuple]]:
    """The m0 clique-copy slices at v: (hyperplane mask, sliced pencil)."""
    hp = gf2.hyperplane_masks(ctx.r)
    out = []
    for y in _copy_dual_points(ctx.r, v[0]):
        h = hp[y - 1]
        out.append((h, tuple(m & h for m in v)))
    assert len(out) == ctx.m0
    return out


def _slice_vertices(ctx: SpaceCtx, h: int, sl: VTuple) -> list[VTuple]:
    """All 2s pencils whose slice through hyperplane h equals sl."""
    u0 = sl[0]
    outside = ctx.all_points_mask & ~h
    out = []
    seen = 0
    x = outside
    while x:
        low = x & -x
        x ^= low
        p = low.bit_length() - 1
        if seen >> p & 1:
            continue
        blk = gf2.coset_mask(u0, p)
        seen |= blk
        a0 = u0 | blk
        _, lut = gf2.coset_table(ctx.r, a0)
        out.append((a0,) + tuple(lut[gf2.min_point(m)] for m in sl[1:]))
    assert len(out) == 2 * ctx.s
    return out


def clique_copy_vertices(ctx: SpaceCtx, h: int, sl: VTuple) -> list[VTuple]:
    return _slice_vertices(ctx, h, sl)


def neighbors(ctx: SpaceCtx, v: VTuple) -> list[VTuple]:
    """The s(t-1)m1 neighbors of v, in deterministic copy-then-vertex order."""
    out = []
    for h, sl in clique_slices(ctx, v):
        for w in _slice_vertices(ctx, h, sl):
            if w != v:
                out.append(w)
    return out


@dataclass
class PencilGraph:
    """A built graph: indexed vertices plus flat constant-degree adjacency."""

    ctx: SpaceCtx
    vertices: list[VTuple]
    index: dict[VTuple, int]
    adj: array  # flat, stride = degree
    degree: int
    is_component: bool
    component_id: array | None = None
    n_components: int = 1
    _nbr_masks: list[int] | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors_of(self, i: int) -> array:
        d = self.degree
        return self.adj[i * d : (i + 1) * d]

    def edge_count(self) -> int:
        return len(self.vertices) * self.degree // 2

    def edges(self):
        d = self.degree
        for i in range(len(self.vertices)):
            for j in self.adj[i * d : (i + 1) * d]:
                if i < j:
                    yield i, j

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.nbr_mask(i) >> j & 1)

    def nbr_mask(self, i: int) -> int:
        if self._nbr_masks is None:
            d = self.degree
            masks = []
            for k in range(len(self.vertices)):
                m = 0
                for j in self.adj[k * d : (k + 1) * d]:
                    m |= 1 << j
                masks.append(m)
            self._nbr_masks = masks
        return self._nbr_masks[i]

    def vertex_display(self, i: int) -> str:
        return pencil.from_tuple(self.ctx, self.vertices[i]).display()


def _bfs_close(ctx: SpaceCtx, seeds: list[VTuple], cap: int,
               vertices: list[VTuple], index: dict[VTuple, int],
               adj_rows: list[array]) -> list[int]:
    """Deterministic BFS closure; returns the new vertex indices."""
    new_ids = []
    frontier = []
    for s in seeds:
        if s not in index:
            index[s] = len(vertices)
            vertices.append(s)
            adj_rows.append(None)
            new_ids.append(index[s])
            frontier.append(s)
    while frontier:
        frontier.sort(key=pencil.encode_tuple)
        next_frontier = []
        for v in frontier:
            nbrs = neighbors(ctx, v)
            row = array("i", bytes(4 * len(nbrs)))
            for k, w in enumerate(nbrs):
                j = index.get(w)
                if j is None:
                    if len(vertices) >= cap:
                        raise BuildError(
                            f"vertex cap {cap} exceeded; raise --cap-vertices"
                        )
                    j = len(vertices)
                    index[w] = j
                    vertices.append(w)
                    adj_rows.append(None)
                    new_ids.append(j)
                    next_frontier.append(w)
                row[k] = j
            adj_rows[index[v]] = array("i", sorted(row))
        frontier = next_frontier
    return new_ids


def build_component(ctx: SpaceCtx, cap: int = DEFAULT_CAP) -> PencilGraph:
    """BFS closure of the base vertex under adjacency; vertex 0 is the base."""
    predicted = pencil.component_order(ctx)
    if predicted > cap:
        raise BuildError(
            f"predicted component order {predicted} exceeds cap {cap}"
        )
    vertices: list[VTuple] = []
    index: dict[VTuple, int] = {}
    adj_rows: list[array] = []
    _bfs_close(ctx, [pencil.base_vertex_tuple(ctx)], cap, vertices, index, adj_rows)
    flat = array("i")
    for row in adj_rows:
        flat.extend(row)
    return PencilGraph(ctx, vertices, index, flat, ctx.degree, True)


def build_full(ctx: SpaceCtx, cap: int = DEFAULT_CAP) -> PencilGraph:
    """All pencils over every A0, with per-component BFS; reports components."""
    total = pencil.total_pencil_count(ctx)
    if total > cap:
        raise BuildError(f"full graph order {total} exceeds cap {cap}")
    vertices: list[VTuple] = []
    index: dict[VTuple, int] = {}
    adj_rows: list[array] = []
    comp_of: dict[int, int] = {}
    n_comp = 0
    for sub in gf2.enumerate_subspaces(ctx, ctx.sigma):
        for seed in pencil.tuples_through(ctx, sub.mask):
            if seed in index:
                continue
            new_ids = _bfs_close(ctx, [seed], cap, vertices, index, adj_rows)
            for i in new_ids:
                comp_of[i] = n_comp
            n_comp += 1
    assert len(vertices) == total
    flat = array("i")
    for row in adj_rows:
        flat.extend(row)
    comp = array("i", (comp_of[i] for i in range(len(vertices))))
    return PencilGraph(ctx, vertices, index, flat, ctx.degree, False,
                       component_id=comp, n_components=n_comp)


def component_sizes(g: PencilGraph) -> list[int]:
    if g.component_id is None:
        return [len(g)]
    sizes = [0] * g.n_components
    for c in g.component_id:
        sizes[c] += 1
    return sizes


def bfs_metrics(g: PencilGraph, source: int) -> tuple[array, int]:
    """Distances from source and the source's eccentricity."""
    dist = array("i", [-1]) * len(g.vertices)
    dist[source] = 0
    frontier = [source]
    d = g.degree
    ecc = 0
    while frontier:
        nxt = []
        for i in frontier:
            base = i * d
            for k in range(base, base + d):
                j = g.adj[k]
                if dist[j] < 0:
                    dist[j] = dist[i] + 1
                    nxt.append(j)
        if nxt:
            ecc += 1
        frontier = nxt
    return dist, ecc


def diameter(g: PencilGraph, assume_vertex_transitive: bool = False) -> int:
    """Max eccentricity; single-source when vertex-transitivity is asserted."""
    dist, ecc = bfs_metrics(g, 0)
    if min(dist) < 0:
        raise BuildError("diameter of a disconnected graph")
    if assume_vertex_transitive:
        return ecc
    best = ecc
    for src in range(1, len(g.vertices)):
        _, e = bfs_metrics(g, src)
        best = max(best, e)
    return best


@lru_cache(maxsize=8)
def component(r: int, sigma: int, cap: int = DEFAULT_CAP) -> PencilGraph:
    """Cached component build (graphs are immutable once built)."""
    return build_component(SpaceCtx(r, sigma), cap)


@lru_cache(maxsize=4)
def full_graph(r: int, sigma: int, cap: int = DEFAULT_CAP) -> PencilGraph:
    return build_full(SpaceCtx(r, sigma), cap)
