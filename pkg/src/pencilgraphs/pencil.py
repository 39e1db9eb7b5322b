"""Ordered pencils: a sigma-subspace A0 plus an ordered tuple of its cosets.

These are the graph vertices.  The hot representation is a plain tuple of
bitmasks ``(a0, e1, .., e_m1)`` (see :func:`as_tuple`); the OrderedPencil
dataclass is the API-level view.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from pencilgraphs import gf2
from pencilgraphs.gf2 import Coset, SpaceCtx, Subspace


class PencilError(ValueError):
    pass


# A vertex in mask form: (a0_mask, entry1_mask, ..., entry_m1_mask).
VTuple = tuple[int, ...]


@dataclass(frozen=True)
class OrderedPencil:
    a0: Subspace
    entries: tuple[Coset, ...]

    def as_tuple(self) -> VTuple:
        return (self.a0.mask,) + tuple(e.mask for e in self.entries)

    def display(self) -> str:
        parts = [gf2.mask_str(self.a0.mask)]
        parts += [gf2.mask_str(e.mask) for e in self.entries]
        return "(" + ",".join(parts) + ")"


def from_tuple(ctx: SpaceCtx, v: VTuple) -> OrderedPencil:
    a0 = Subspace.from_mask(v[0])
    return OrderedPencil(
        a0, tuple(Coset(gf2.points_of(m), m, a0) for m in v[1:])
    )


def validate(ctx: SpaceCtx, v: VTuple) -> None:
    """Raise unless v is a well-formed (r, sigma)-ordered pencil."""
    a0 = v[0]
    if a0.bit_count() != (1 << ctx.sigma) - 1 or not gf2.is_xor_closed(a0):
        raise PencilError(f"bad initial entry {gf2.mask_str(a0)}")
    masks, _ = gf2.coset_table(ctx.r, a0)
    if len(v) - 1 != ctx.m1 or set(v[1:]) != set(masks):
        raise PencilError("entries are not the cosets of A0, each exactly once")


def base_vertex_tuple(ctx: SpaceCtx) -> VTuple:
    a0 = (1 << (1 << ctx.sigma)) - 2
    masks, _ = gf2.coset_table(ctx.r, a0)
    return (a0,) + tuple(masks)


def base_vertex(ctx: SpaceCtx) -> OrderedPencil:
    """The lexicographically smallest (r, sigma)-ordered pencil."""
    return from_tuple(ctx, base_vertex_tuple(ctx))


def pencils_through(ctx: SpaceCtx, a0: Subspace) -> Iterator[OrderedPencil]:
    """All m1! orderings of the cosets of a0, in lex order of the orderings."""
    cosets = gf2.cosets_mod(ctx, a0)
    for perm in permutations(cosets):
        yield OrderedPencil(a0, perm)


def tuples_through(ctx: SpaceCtx, a0_mask: int) -> Iterator[VTuple]:
    masks, _ = gf2.coset_table(ctx.r, a0_mask)
    for perm in permutations(masks):
        yield (a0_mask,) + perm


_KEY_CACHE: dict[int, bytes] = {}


def _mask_bytes(mask: int) -> bytes:
    b = _KEY_CACHE.get(mask)
    if b is None:
        b = bytes(gf2.points_of(mask))
        _KEY_CACHE[mask] = b
    return b


def encode_tuple(v: VTuple) -> bytes:
    """Injective byte key; lexicographic byte order = lexicographic pencil order."""
    return b"".join(map(_mask_bytes, v))


def encode(v: OrderedPencil) -> bytes:
    return encode_tuple(v.as_tuple())


def decode(ctx: SpaceCtx, key: bytes) -> OrderedPencil:
    w = 1 << ctx.sigma
    a0 = gf2.mask_of(key[: w - 1])
    masks = [
        gf2.mask_of(key[i : i + w]) for i in range(w - 1, len(key), w)
    ]
    v = (a0,) + tuple(masks)
    validate(ctx, v)
    return from_tuple(ctx, v)


def total_pencil_count(ctx: SpaceCtx) -> int:
    """Order of the full graph: one pencil per (A0, coset ordering)."""
    count = gf2.gaussian_binomial(ctx.r, ctx.sigma)
    for i in range(2, ctx.m1 + 1):
        count *= i
    return count


def component_order(ctx: SpaceCtx) -> int:
    """Predicted component order: prod_{i=1..rho} 2^(i-1) (2^(i+sigma) - 1)."""
    out = 1
    for i in range(1, ctx.rho + 1):
        out *= (1 << (i - 1)) * ((1 << (i + ctx.sigma)) - 1)
    return out
