"""Homogeneity checks: orbits of decorated copies, and extension search.

The working generator set contains the extending base-vertex stabilizer
generators, the entry-position permutations, and additionally the
position-preserving linear maps that move the base vertex.  The last family
is required: the first two preserve the initial-entry fiber of the base
vertex, so on their own they can never be vertex-transitive.  The report
carries the measured closure data so the discrepancy with the nominal
semidirect-product order stays visible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from pencilgraphs import autnr, decomp, gf2, graphbuild, hrho
from pencilgraphs.gf2 import SpaceCtx
from pencilgraphs.graphbuild import PencilGraph
from pencilgraphs.pencil import VTuple, encode_tuple


class HomogError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# generators


def index_perm_vperm(ctx: SpaceCtx, g: PencilGraph, psi: bytes):
    """Uniform entry-position permutation as a vertex permutation, or None."""
    vperm = []
    for v in g.vertices:
        w = decomp.apply_index_perm(ctx, v, psi)
        j = g.index.get(w)
        if j is None:
            return None
        vperm.append(j)
    return vperm


def linear_vperm(ctx: SpaceCtx, g: PencilGraph, table: list[int]):
    """Position-preserving pointwise linear map, or None if it leaves g."""
    mapper = autnr.mask_mapper(ctx.r, table)
    vperm = []
    for v in g.vertices:
        w = tuple(mapper(m) for m in v)
        j = g.index.get(w)
        if j is None:
            return None
        vperm.append(j)
    return vperm


@dataclass
class GeneratorSet:
    stabilizer: list[tuple[str, tuple[int, ...]]]
    entry_perms: list[tuple[str, tuple[int, ...]]]
    movers: list[tuple[str, tuple[int, ...]]]
    notes: dict = field(default_factory=dict)

    def vperms(self) -> list[tuple[int, ...]]:
        return [p for _, p in self.stabilizer + self.entry_perms + self.movers]


def full_generator_set(ctx: SpaceCtx, g: PencilGraph,
                       stab_gens: list[autnr.AutoMap] | None = None,
                       validate_sample: int | None = None,
                       threads: int | None = None) -> GeneratorSet:
    from pencilgraphs.parallel import pmap

    if stab_gens is None:
        stab_gens = autnr.synth_generators(ctx, g, threads=threads)
    stab = [
        (a.display(), a.vperm) for a in stab_gens if a.vperm is not None
    ]
    entry = []
    for q, a, psi in hrho.generators(ctx.rho):
        vperm = index_perm_vperm(ctx, g, psi)
        if vperm is None or not autnr._is_automorphism(g, vperm, validate_sample):
            raise HomogError(
                f"entry permutation p({gf2.mask_str(q)},{a}) is not an automorphism"
            )
        entry.append((f"psi:{hrho.perm_display(psi, pivot=a)}", tuple(vperm)))

    def build_mover(cand):
        alpha, c = cand
        table = autnr.transvection_table(ctx.r, alpha, c)
        vperm = linear_vperm(ctx, g, table)
        if vperm is None or vperm[0] == 0:
            return None
        if not autnr._is_automorphism(g, vperm, validate_sample):
            return None
        return (f"mov:{gf2.mask_str(alpha)}+{gf2.point_str(c)}", tuple(vperm))

    cands = [
        (alpha, c)
        for alpha in gf2.hyperplane_masks(ctx.r)
        for c in gf2.points_of(alpha)
    ]
    movers = [m for m in pmap(build_mover, cands, threads) if m is not None]
    return GeneratorSet(stab, entry, movers)


_FEEDBACK = {3: 3, 4: 3, 5: 5, 6: 3, 7: 3, 8: 29}  # primitive polynomials


def _table_from_basis_images(r: int, images: list[int]) -> list[int]:
    n = (1 << r) - 1
    table = [0] * (n + 1)
    for x in range(1, n + 1):
        y = 0
        for i in range(r):
            if x >> i & 1:
                y ^= images[i]
        table[x] = y
    return table


def lean_transitive_vperms(ctx: SpaceCtx, g: PencilGraph) -> list[tuple[int, ...]]:
    """A small vertex-transitive generator set: entry permutations plus a
    full-cycle linear map and transvections.  The pointwise linear maps are
    automorphisms outright (no adjacency validation needed), only their
    staying inside the component is checked during materialization."""
    out = []
    for q, a, psi in hrho.generators(ctx.rho):
        vperm = index_perm_vperm(ctx, g, psi)
        if vperm is not None:
            out.append(tuple(vperm))
    # companion map of a primitive polynomial: cycles all points
    images = [1 << (i + 1) for i in range(ctx.r - 1)] + [_FEEDBACK[ctx.r]]
    cyc = linear_vperm(ctx, g, _table_from_basis_images(ctx.r, images))
    if cyc is not None:
        out.append(tuple(cyc))
    seen = {0}
    _orbit_grow(seen, [0], out, lambda x, p: p[x])
    for alpha in gf2.hyperplane_masks(ctx.r):
        if len(seen) == len(g.vertices):
            break
        for c in gf2.points_of(alpha):
            table = autnr.transvection_table(ctx.r, alpha, c)
            vperm = linear_vperm(ctx, g, table)
            if vperm is None or vperm[0] == 0:
                continue
            out.append(tuple(vperm))
            _orbit_grow(seen, list(seen), out, lambda x, p: p[x])
            break
    return out


# ---------------------------------------------------------------------------
# orbits


def orbit(seed, gens: list[tuple[int, ...]], act) -> set:
    """Closure of one object under the generator actions."""
    seen = {seed}
    _orbit_grow(seen, [seed], gens, act)
    return seen


def _orbit_grow(seen: set, frontier: list, gens, act) -> None:
    while frontier:
        nxt = []
        for obj in frontier:
            for p in gens:
                img = act(obj, p)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt


def _staged_orbit(seed, staged_gens: list[list], act, target: int):
    """Grow the orbit stage by stage, stopping once it reaches target size.

    Returns (orbit, generators actually used); conclusions drawn from the
    orbit only rely on the used generators.
    """
    seen = {seed}
    used: list = []
    for stage in staged_gens:
        used = used + stage
        _orbit_grow(seen, list(seen), used, act)
        if len(seen) >= target:
            break
    return seen, used


def orbit_partition(objects, gens, act) -> dict:
    """object -> orbit id over a given finite object list."""
    ids = {}
    next_id = 0
    for obj in objects:
        if obj in ids:
            continue
        for x in orbit(obj, gens, act):
            ids[x] = next_id
        next_id += 1
    return ids


def vertex_orbit_of_base(g: PencilGraph, gens: list[tuple[int, ...]]) -> set[int]:
    return orbit(0, gens, lambda x, p: p[x])


# ---------------------------------------------------------------------------
# copy-arc triples


@dataclass
class HReport:
    family: str
    exhaustive: bool
    orbit_size: int
    total: int
    sampled_checked: int
    copies_equivariant: bool
    ok: bool

    def as_dict(self):
        return self.__dict__.copy()


def _copies_equivariant(copy_sets: set[frozenset], vperms) -> bool:
    """Every generator maps each copy's vertex set onto a copy's vertex set."""
    for p in vperms:
        for fs in copy_sets:
            if frozenset(p[x] for x in fs) not in copy_sets:
                return False
    return True


def check_H_property(ctx: SpaceCtx, g: PencilGraph, gens: GeneratorSet,
                     exhaustive: bool = True, sample: int = 500,
                     seed: int = 20240801) -> list[HReport]:
    """Single-orbit check on (copy, arc) triples for both families.

    An edge lies in exactly one copy of each family, so once the generators
    are verified to permute the copy family, the (copy, arc) orbit is the
    arc orbit; the orbit runs on arcs directly.
    """
    stages = [
        [p for _, p in gens.stabilizer[:6]]
        + [p for _, p in gens.entry_perms[:4]]
        + [p for _, p in gens.movers[:6]],
        [p for _, p in gens.stabilizer[6:14]]
        + [p for _, p in gens.entry_perms[4:]]
        + [p for _, p in gens.movers[6:18]],
        gens.vperms(),
    ]
    cl_copies, _ = decomp.enumerate_clique_copies(ctx, g)
    tu_copies, _ = decomp.enumerate_turan_copies(ctx, g)
    families = {
        "clique": {frozenset(v) for v in cl_copies.values()},
        "turan": set(tu_copies.keys()),
    }
    total = 2 * g.edge_count()
    base = base_arc(ctx, g)

    def act(arc, p):
        return (p[arc[0]], p[arc[1]])

    orb, used = _staged_orbit(base, stages, act, total)
    out = []
    for family, copy_sets in families.items():
        equi = _copies_equivariant(copy_sets, used)
        if exhaustive:
            ok = equi and len(orb) == total
            checked = total
        else:
            rng = random.Random(seed)
            checked = 0
            ok = equi
            edges = None
            while ok and checked < sample:
                i = rng.randrange(len(g.vertices))
                nbrs = g.neighbors_of(i)
                j = nbrs[rng.randrange(len(nbrs))]
                if (i, j) not in orb:
                    ok = False
                    break
                checked += 1
        out.append(HReport(family, exhaustive, len(orb), total, checked,
                           equi, ok))
    return out


# ---------------------------------------------------------------------------
# partial-map extension


@dataclass
class ExtendStats:
    nodes: int = 0
    max_depth: int = 0
    exhausted: bool = False


def extend_partial(g: PencilGraph, partial: dict[int, int],
                   node_cap: int = 2_000_000):
    """Complete a partial vertex map to an automorphism, or prove exhaustion.

    Returns (vperm | None, stats).  Propagation keeps per-vertex candidate
    bitmasks; vertices with a unique candidate are forced before branching.
    """
    n = len(g.vertices)
    full = (1 << n) - 1
    nbr = [g.nbr_mask(i) for i in range(n)]
    stats = ExtendStats()

    m_fwd = [-1] * n
    used = 0
    cand = [full] * n

    def assign(x, y, trail):
        nonlocal used
        m_fwd[x] = y
        used |= 1 << y
        trail.append(("a", x))
        # constrain all unmapped
        for z in range(n):
            if m_fwd[z] >= 0:
                continue
            old = cand[z]
            new = old & (nbr[y] if nbr[x] >> z & 1 else ~nbr[y]) & ~(1 << y)
            if new != old:
                trail.append(("c", z, old))
                cand[z] = new
                if new == 0:
                    return False
        return True

    def undo(trail, mark):
        nonlocal used
        while len(trail) > mark:
            entry = trail.pop()
            if entry[0] == "a":
                x = entry[1]
                used &= ~(1 << m_fwd[x])
                m_fwd[x] = -1
            else:
                _, z, old = entry
                cand[z] = old

    trail: list = []
    for x, y in sorted(partial.items()):
        if m_fwd[x] >= 0 or used >> y & 1:
            if m_fwd[x] == y:
                continue
            stats.exhausted = True
            return None, stats
        if not assign(x, y, trail):
            stats.exhausted = True
            return None, stats

    def pick():
        best, bestc, bestk = -1, 0, None
        for i in range(n):
            if m_fwd[i] < 0:
                c = cand[i]
                k = c.bit_count()
                if bestk is None or k < bestk:
                    best, bestc, bestk = i, c, k
                    if k <= 1:
                        break
        return best, bestc

    # iterative most-constrained-first backtracking; one frame per vertex
    frames: list[list] = []
    found = False
    while True:
        best, bestc = pick()
        if best < 0:
            found = True
            break
        frames.append([best, bestc, len(trail)])
        live = False
        while frames:
            x, cands, mark = frames[-1]
            undo(trail, mark)
            y = None
            while cands:
                low = cands & -cands
                cands ^= low
                frames[-1][1] = cands
                y0 = low.bit_length() - 1
                stats.nodes += 1
                if stats.nodes > node_cap:
                    raise HomogError("extension search exceeded node cap")
                if assign(x, y0, trail):
                    y = y0
                    break
                undo(trail, mark)
            if y is not None:
                live = True
                break
            frames.pop()
        stats.max_depth = max(stats.max_depth, len(frames))
        if not live:
            break

    if found:
        return list(m_fwd), stats
    stats.exhausted = True
    return None, stats


# ---------------------------------------------------------------------------
# the non-UH witness


def _copy_automorphisms_fixing_arc(part_sets: list[list[int]], a: int, b: int):
    """Bijections of a complete multipartite copy fixing vertices a and b.

    Yields dicts vertex -> image, identity first, in deterministic order.
    """
    from itertools import permutations

    parts = [sorted(p) for p in part_sets]
    ia = next(i for i, p in enumerate(parts) if a in p)
    ib = next(i for i, p in enumerate(parts) if b in p)
    rest = [i for i in range(len(parts)) if i not in (ia, ib)]

    def part_maps(src, dst, pinned=None):
        src2 = [x for x in src if x != pinned]
        dst2 = [x for x in dst if x != pinned]
        for perm in permutations(dst2):
            m = dict(zip(src2, perm))
            if pinned is not None:
                m[pinned] = pinned
            yield m

    for rest_order in permutations(rest):
        for ma in part_maps(parts[ia], parts[ia], pinned=a):
            for mb in part_maps(parts[ib], parts[ib], pinned=b):
                stack = [dict()]
                for src_i, dst_i in zip(rest, rest_order):
                    new_stack = []
                    for base in stack:
                        for mm in part_maps(parts[src_i], parts[dst_i]):
                            d = dict(base)
                            d.update(mm)
                            new_stack.append(d)
                    stack = new_stack
                for d in stack:
                    full = dict(ma)
                    full.update(mb)
                    full.update(d)
                    yield full


@dataclass
class Witness:
    copy_display: str
    partial: dict[int, int]
    stats: ExtendStats

    def as_dict(self):
        return {
            "copy": self.copy_display,
            "partial_map": {str(k): v for k, v in sorted(self.partial.items())},
            "search_nodes": self.stats.nodes,
            "search_max_depth": self.stats.max_depth,
            "exhausted": self.stats.exhausted,
        }


def base_arc(ctx: SpaceCtx, g: PencilGraph) -> tuple[int, int]:
    """(base vertex, its lexicographically least neighbor) as indices."""
    u = min(g.neighbors_of(0), key=lambda j: encode_tuple(g.vertices[j]))
    return 0, u


def non_uh_witness(ctx: SpaceCtx, g: PencilGraph, limit: int | None = None):
    """First non-extensible arc-fixing automorphism of the least Turan copy.

    Returns (Witness | None, tried_count).
    """
    v_i, u_i = base_arc(ctx, g)
    tid = decomp.turan_copies_at(ctx, g.vertices[v_i])[0]
    parts = decomp.turan_vertices(ctx, g, tid)
    part_sets = [
        sorted(g.index[w] for w in plist) for _, plist in sorted(parts.items())
    ]
    members = set().union(*map(set, part_sets))
    if u_i not in members:
        raise HomogError("least neighbor not in the least Turan copy")
    tried = 0
    for m in _copy_automorphisms_fixing_arc(part_sets, v_i, u_i):
        tried += 1
        if limit is not None and tried > limit:
            break
        if all(k == vv for k, vv in m.items()):
            continue
        vperm, stats = extend_partial(g, m)
        if vperm is None:
            return Witness(tid.display(), m, stats), tried
    return None, tried


def clique_uh_spot_check(ctx: SpaceCtx, g: PencilGraph, pairs: int = 3,
                         seed: int = 20240801) -> bool:
    """Every bijection between sampled clique copies extends (rho = 2)."""
    from itertools import permutations

    copies, _ = decomp.enumerate_clique_copies(ctx, g)
    keys = sorted(copies, key=lambda k: copies[k])
    rng = random.Random(seed)
    for _ in range(pairs):
        k1, k2 = rng.choice(keys), rng.choice(keys)
        src = list(copies[k1])
        for img in permutations(copies[k2]):
            vperm, _ = extend_partial(g, dict(zip(src, img)))
            if vperm is None:
                return False
    return True
