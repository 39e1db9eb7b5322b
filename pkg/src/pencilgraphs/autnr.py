"""Generators of the base-vertex symmetry group and their closure order.

The group measured here is the automorphism group of the subgraph induced by
the open neighborhood of the base vertex.  Its generators come in two kinds:

* point kind: a transvection x -> x ^ c off a hyperplane axis, together with
  the induced permutation of entry positions.  These act on every vertex and
  are genuine automorphisms of the whole graph.
* fiber kind: a swap of affine blocks applied only to the neighbors whose
  initial entry meets the base initial entry in a prescribed hyperplane.
  For sigma >= 2 these are automorphisms of the neighborhood subgraph that
  provably do not extend to the whole graph (the closure order check below
  is what detects the difference).

Candidate parameters are enumerated more broadly than strictly necessary and
validated against the built graph; only verified automorphisms are kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from pencilgraphs import gf2
from pencilgraphs.gf2 import SpaceCtx
from pencilgraphs.graphbuild import PencilGraph
from pencilgraphs.pencil import VTuple


class AutError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# point maps


def transvection_table(r: int, alpha: int, c: int) -> list[int]:
    """Point table of x -> x ^ c for x outside alpha, identity on alpha."""
    n = (1 << r) - 1
    if not alpha >> c & 1:
        raise AutError("transvection center must lie on its axis")
    return [x if alpha >> x & 1 else x ^ c for x in range(n + 1)]


def mask_mapper(r: int, table: list[int]):
    """Chunked lookup tables mapping point-set masks through a point table."""
    n = (1 << r) - 1
    chunks = []
    for lo in range(0, n + 1, 8):
        tbl = []
        for bits in range(256):
            m = 0
            b = bits
            while b:
                low = b & -b
                b ^= low
                p = lo + low.bit_length() - 1
                if 1 <= p <= n:
                    m |= 1 << table[p]
                elif p != 0:
                    m = -1
                    break
            tbl.append(m)
        chunks.append(tbl)

    def _map(mask: int) -> int:
        out = 0
        i = 0
        while mask:
            out |= chunks[i][mask & 255]
            mask >>= 8
            i += 1
        return out

    return _map


def subsets_of_dim(mask: int, d: int) -> list[int]:
    """All linear-dimension-d subspaces contained in the given subspace."""
    pts = gf2.points_of(mask)
    out = set()
    if d == 0:
        return [0]
    from itertools import combinations

    for pick in combinations(pts, d):
        sp = gf2.span_mask(pick)
        if sp.bit_count() == (1 << d) - 1 and sp & mask == sp:
            out.add(sp)
    return sorted(out)


def theta_blocks(n: int, theta: int) -> list[int]:
    """All cosets of theta u {0} (affine blocks with theta at infinity)."""
    out = []
    seen = theta
    for x in range(1, n + 1):
        if seen >> x & 1:
            continue
        b = gf2.coset_mask(theta, x)
        seen |= b
        out.append(b)
    return out


Factor = tuple[int, int, tuple[tuple[int, int], ...]]  # (theta, chi, pairs)


@dataclass(frozen=True)
class AutoMap:
    """One synthesized generator with its neighborhood permutation."""

    category: str  # 'A' | 'B' | 'C'
    kind: str  # 'point' | 'fiber'
    pi: int  # point or subspace mask, category-dependent
    alpha: int  # hyperplane mask (the axis)
    factors: tuple[Factor, ...]
    psi: tuple[int, ...]  # images of entry positions 1..m1 (psi[0] unused)
    nperm: tuple[int, ...] = field(compare=False)  # on sorted N(v) slots
    vperm: tuple[int, ...] | None = field(compare=False, default=None)
    center: int | None = None  # transvection center for point kind

    def display(self) -> str:
        parts = []
        for theta, chi, pairs in self.factors:
            ptxt = "".join(
                f"({gf2.mask_str(a)} {gf2.mask_str(b)})" for a, b in pairs
            )
            parts.append(f"[{gf2.mask_str(theta)}.{gf2.mask_str(chi)}{ptxt}]")
        fixed = [i for i in range(1, len(self.psi)) if self.psi[i] == i]
        cyc = ""
        seen = set(fixed)
        for i in range(1, len(self.psi)):
            if i in seen:
                continue
            c = [i]
            seen.add(i)
            j = self.psi[i]
            while j != i:
                seen.add(j)
                c.append(j)
                j = self.psi[j]
            cyc += "(" + " ".join(gf2.point_str(x) for x in c) + ")"
        psi_txt = "".join(gf2.point_str(x) for x in fixed) + (cyc or "()")
        return "".join(parts) + "." + psi_txt


def apply_point_map(ctx: SpaceCtx, mapper, psi, v: VTuple) -> VTuple:
    a0 = mapper(v[0])
    out = [0] * (ctx.m1 + 1)
    out[0] = a0
    for i in range(1, ctx.m1 + 1):
        out[psi[i]] = mapper(v[i])
    return tuple(out)


def quotient_psi(ctx: SpaceCtx, table: list[int]) -> tuple[int, ...]:
    """Entry-position permutation induced on the base-vertex cosets."""
    width = 1 << ctx.sigma
    psi = [0] * (ctx.m1 + 1)
    for k in range(1, ctx.m1 + 1):
        psi[k] = table[k * width] // width
    if sorted(psi[1:]) != list(range(1, ctx.m1 + 1)):
        raise AutError("point map does not permute the base cosets")
    return tuple(psi)


def point_factors(ctx: SpaceCtx, table, alpha: int, thetas: list[int],
                  within_span_of: int | None = None) -> tuple[Factor, ...]:
    """Bracket data [theta.chi(pairs)] of a point map, one factor per theta.

    With within_span_of set, only pairs inside span(within_span_of u theta)
    are listed -- the presentation convention for the family whose thetas
    leave the base initial entry.
    """
    n = ctx.n
    factors = []
    for theta in thetas:
        if within_span_of is not None:
            w = gf2.span_mask(gf2.points_of(within_span_of | theta))
        pairs = []
        chi = None
        for b in theta_blocks(n, theta):
            img = 0
            rest = b
            while rest:
                low = rest & -rest
                rest ^= low
                img |= 1 << table[low.bit_length() - 1]
            if img == b:
                continue
            if within_span_of is not None and (b | img) & ~w:
                continue
            pair = (min(b, img), max(b, img))
            if pair not in pairs:
                pairs.append(pair)
            d = gf2.min_point(b) ^ gf2.min_point(img)
            chi_b = gf2.coset_mask(theta, d)
            if chi is None:
                chi = chi_b
        if pairs:
            factors.append((theta, chi, tuple(sorted(pairs))))
    return tuple(factors)


# ---------------------------------------------------------------------------
# synthesis


def _neighbor_slots(g: PencilGraph) -> list[int]:
    return sorted(g.neighbors_of(0))


def _materialize_point(ctx, g, table, psi):
    """Full vertex permutation of a point map, or None if it escapes g."""
    mapper = mask_mapper(ctx.r, table)
    vperm = []
    for v in g.vertices:
        w = apply_point_map(ctx, mapper, psi, v)
        j = g.index.get(w)
        if j is None:
            return None
        vperm.append(j)
    return vperm


def _is_automorphism(g: PencilGraph, vperm, sample: int | None = None) -> bool:
    """Adjacency preservation; sample limits the edge scan on big graphs."""
    if sorted(vperm) != list(range(len(g.vertices))):
        return False
    d = g.degree
    n = len(g.vertices)
    if sample is None or sample >= n:
        rows = range(n)
    else:
        step = max(1, n // sample)
        rows = range(0, n, step)
    for i in rows:
        ii = vperm[i]
        base = i * d
        for k in range(base, base + d):
            j = g.adj[k]
            if not g.has_edge(ii, vperm[j]):
                return False
    return True


def _nperm_from_vperm(g: PencilGraph, vperm, slots, slot_index) -> tuple[int, ...]:
    return tuple(slot_index[vperm[s]] for s in slots)


def synth_point_kind(ctx: SpaceCtx, g: PencilGraph,
                     exhaustive: bool | None = None,
                     threads: int | None = None) -> list[AutoMap]:
    """Transvection generators fixing the base vertex, validated on g."""
    from pencilgraphs.parallel import pmap

    if exhaustive is None:
        exhaustive = len(g.vertices) <= 3000
    sample = None if exhaustive else 400
    J = g.vertices[0][0]
    slots = _neighbor_slots(g)
    slot_index = {s: k for k, s in enumerate(slots)}
    j_thetas = subsets_of_dim(J, ctx.sigma - 1)
    candidates = [
        (alpha, c)
        for alpha in gf2.hyperplane_masks(ctx.r)
        for c in gf2.points_of(alpha)
        if (J >> c & 1) or alpha & J == J  # else it cannot fix the base
    ]

    def build(cand):
        alpha, c = cand
        table = transvection_table(ctx.r, alpha, c)
        psi = quotient_psi(ctx, table)
        vperm = _materialize_point(ctx, g, table, psi)
        if vperm is None or vperm[0] != 0:
            return None
        if not _is_automorphism(g, vperm, sample):
            return None
        in_j = bool(J >> c & 1)
        within = None
        if not in_j:
            cat, pi, thetas = "A", c, j_thetas
        elif alpha & J == J:
            # pi for category B: the hyperplane of J missing the center
            cat, pi, thetas = "B", _b_pi(ctx, J, c), j_thetas
        else:
            cat, pi, thetas = "C", alpha & J, [
                t for t in subsets_of_dim(alpha, ctx.sigma - 1)
                if t & J != t
            ]
            within = J
        factors = point_factors(ctx, table, alpha, thetas, within)
        return AutoMap(cat, "point", pi, alpha, factors, psi,
                       _nperm_from_vperm(g, vperm, slots, slot_index),
                       tuple(vperm), center=c)

    out = []
    seen_vperms = set()
    for a in pmap(build, candidates, threads):
        if a is None or a.vperm in seen_vperms:
            continue
        seen_vperms.add(a.vperm)
        out.append(a)
    return out


def _b_pi(ctx: SpaceCtx, J: int, c: int) -> int:
    """The hyperplane of J whose complementary block contains c."""
    for theta in subsets_of_dim(J, ctx.sigma - 1):
        blk = J & ~theta
        if blk >> c & 1:
            return theta
    raise AutError("no hyperplane of J avoids the center")


def fiber_apply(ctx: SpaceCtx, J: int, theta: int, block_map: dict[int, int],
                v: VTuple):
    """Image of v under a fiber map, or None when v is outside the fiber's
    reach or the image is not a pencil."""
    if v[0] & J != theta:
        return v
    blk = v[0] & ~theta
    a0 = theta | block_map.get(blk, blk)
    ents = []
    for m in v[1:]:
        img = 0
        rest = m
        ok = True
        while rest:
            x = gf2.min_point(rest)
            b = gf2.coset_mask(theta, x)
            if b & m != b:
                ok = False
                break
            rest &= ~b
            img |= block_map.get(b, b)
        if not ok:
            return None
        ents.append(img)
    return (a0,) + tuple(ents)


def synth_fiber_kind(ctx: SpaceCtx, g: PencilGraph) -> list[AutoMap]:
    """Block-swap generators acting on a single neighbor fiber.

    For each hyperplane theta of the base initial entry and each axis alpha
    containing it, swap the theta-blocks outside alpha with their translate
    by the complementary block of theta; keep the candidate when the induced
    permutation of the closed neighborhood preserves its adjacency.
    """
    J = g.vertices[0][0]
    n = ctx.n
    slots = _neighbor_slots(g)
    slot_index = {s: k for k, s in enumerate(slots)}
    ball = {0} | set(slots)
    out = []
    seen = set()
    for theta in subsets_of_dim(J, ctx.sigma - 1):
        chi = J & ~theta
        c = gf2.min_point(chi)
        for alpha in gf2.hyperplane_masks(ctx.r):
            if alpha & J != J:
                continue
            block_map = {}
            for b in theta_blocks(n, theta):
                if b & alpha == b:
                    continue
                b2 = 0
                rest = b
                while rest:
                    low = rest & -rest
                    rest ^= low
                    b2 |= 1 << ((low.bit_length() - 1) ^ c)
                if b2 & alpha != b2 and b != b2:
                    block_map[b] = b2
            if not block_map:
                continue
            nperm = []
            ok = True
            for s in slots:
                w = fiber_apply(ctx, J, theta, block_map, g.vertices[s])
                j = g.index.get(w) if w is not None else None
                if j is None or j not in slot_index:
                    ok = False
                    break
                nperm.append(slot_index[j])
            if not ok or sorted(nperm) != list(range(len(slots))):
                continue
            # verify adjacency inside the closed ball
            if not _nperm_preserves_ball(g, slots, nperm):
                continue
            key = tuple(nperm)
            if key in seen:
                continue
            seen.add(key)
            pairs = tuple(sorted((min(b, b2), max(b, b2))
                                 for b, b2 in block_map.items() if b < b2))
            factors = ((theta, chi, pairs),)
            psi = tuple(range(ctx.m1 + 1))
            out.append(AutoMap("B", "fiber", theta, alpha, factors, psi,
                               key, None))
    return out


def _nperm_preserves_ball(g: PencilGraph, slots, nperm) -> bool:
    k = len(slots)
    sub = []
    for a in range(k):
        m = 0
        ga = g.nbr_mask(slots[a])
        for b in range(k):
            if ga >> slots[b] & 1:
                m |= 1 << b
        sub.append(m)
    for a in range(k):
        ia = nperm[a]
        ma = sub[a]
        for b in range(a + 1, k):
            if bool(ma >> b & 1) != bool(sub[ia] >> nperm[b] & 1):
                return False
    return True


def synth_generators(ctx: SpaceCtx, g: PencilGraph, category: str | None = None,
                     exhaustive: bool | None = None,
                     threads: int | None = None) -> list[AutoMap]:
    gens = synth_point_kind(ctx, g, exhaustive, threads) + synth_fiber_kind(ctx, g)
    if category is not None:
        gens = [a for a in gens if a.category == category]
    return gens


# ---------------------------------------------------------------------------
# closure


def close_permutations(gens: list[tuple[int, ...]], cap: int = 1 << 21) -> int:
    """Order of the permutation group generated by the given tuples.

    Generators already inside the running closure are skipped, so a long
    redundant generator list costs little; the product sweep is vectorized
    once the degree is large enough for that to pay off.
    """
    if not gens:
        return 1
    k = len(gens[0])
    if k >= 100:
        return _close_numpy(gens, cap)
    ident = tuple(range(k))
    els = {ident}
    kept: list[tuple[int, ...]] = []
    for gen in gens:
        if gen in els:
            continue
        kept.append(gen)
        frontier = list(els)
        while frontier:
            nxt = []
            for p in frontier:
                for q in kept:
                    r = tuple(q[x] for x in p)
                    if r not in els:
                        if len(els) >= cap:
                            raise AutError(f"closure exceeded cap {cap}")
                        els.add(r)
                        nxt.append(r)
            frontier = nxt
    return len(els)


def _close_numpy(gens, cap):
    import numpy as np

    k = len(gens[0])
    dtype = np.uint8 if k <= 255 else np.uint16
    ident = np.arange(k, dtype=dtype)
    els = {ident.tobytes()}
    rows = [ident]
    kept: list = []
    for gen in gens:
        garr = np.asarray(gen, dtype=dtype)
        if garr.tobytes() in els:
            continue
        kept.append(garr)
        frontier = np.vstack(rows)
        while len(frontier):
            new_rows = []
            for q in kept:
                prods = q[frontier]  # compose: apply frontier, then q
                for row in prods:
                    b = row.tobytes()
                    if b not in els:
                        if len(els) >= cap:
                            raise AutError(f"closure exceeded cap {cap}")
                        els.add(b)
                        new_rows.append(row)
            if new_rows:
                frontier = np.vstack(new_rows)
                rows.append(frontier)
            else:
                frontier = np.empty((0, k), dtype)
    return len(els)


def closure_order(gens: list[AutoMap], g: PencilGraph, cap: int = 1 << 21,
                  cross_check_full: bool = False) -> int:
    """Group order generated by the neighborhood restrictions.

    With cross_check_full, also closes the full-graph permutations of the
    point-kind generators and verifies the restriction loses nothing (this
    is the faithfulness check; it is feasible on the small cases).
    """
    nperms = [a.nperm for a in gens]
    order = close_permutations(nperms, cap)
    if cross_check_full:
        vperms = [a.vperm for a in gens if a.vperm is not None]
        full = close_permutations(vperms, cap)
        restricted = close_permutations(
            [a.nperm for a in gens if a.vperm is not None], cap
        )
        if full != restricted:
            raise AutError(
                f"neighborhood restriction is not faithful: {full} vs {restricted}"
            )
    return order


def nr_order_formula(ctx: SpaceCtx) -> int:
    """2^A * B * C with the rho = 2 caveat on the final term of A."""
    sigma, rho = ctx.sigma, ctx.rho
    a = (1 << (sigma + 1)) - 1 + (rho - 2) * ((1 << sigma) + 1) + max(rho - 3, 0)
    b = 1
    for i in range(1, rho + 1):
        b *= (1 << i) - 1
    c = 1
    for i in range(2, (1 << sigma)):
        c *= i
    return (1 << a) * b * c


def apply(ctx: SpaceCtx, a: AutoMap, v: VTuple) -> VTuple:
    """Apply a generator to a pencil (point kind: any vertex)."""
    if a.kind == "point":
        table = transvection_table(ctx.r, a.alpha, a.center)
        mapper = mask_mapper(ctx.r, table)
        return apply_point_map(ctx, mapper, a.psi, v)
    J = a.factors[0][0] | a.factors[0][1]
    w = fiber_apply(ctx, J, a.pi, dict(a.factors[0][2]), v)
    if w is None:
        raise AutError("fiber map undefined on this pencil")
    return w
