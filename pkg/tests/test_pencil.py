from itertools import islice

import pytest

from pencilgraphs import gf2, pencil
from pencilgraphs.gf2 import SpaceCtx, Subspace


@pytest.mark.parametrize("r,sigma,display", [
    (3, 1, "(1,23,45,67)"),
    (4, 1, "(1,23,45,67,89,ab,cd,ef)"),
    (4, 2, "(123,4567,89ab,cdef)"),
])
def test_base_vertex(r, sigma, display):
    assert pencil.base_vertex(SpaceCtx(r, sigma)).display() == display


def test_pencils_through_counts_and_order():
    ctx = SpaceCtx(3, 1)
    ps = list(pencil.pencils_through(ctx, Subspace.from_points([1])))
    assert len(ps) == 6
    assert ps[0].display() == "(1,23,45,67)"
    ctx = SpaceCtx(4, 2)
    assert len(list(pencil.pencils_through(ctx, Subspace.from_points([1, 2, 3])))) == 6
    ctx = SpaceCtx(4, 1)
    gen = pencil.pencils_through(ctx, Subspace.from_points([1]))
    assert sum(1 for _ in gen) == 5040


def test_encode_orders_and_roundtrip():
    ctx = SpaceCtx(3, 1)
    a = pencil.base_vertex_tuple(ctx)
    swapped = (a[0], a[1], a[3], a[2])
    assert pencil.encode_tuple(a) != pencil.encode_tuple(swapped)

    keys = []
    for sub in gf2.enumerate_subspaces(ctx, 1):
        for p in pencil.pencils_through(ctx, sub):
            k = pencil.encode(p)
            assert pencil.decode(ctx, k).as_tuple() == p.as_tuple()
            keys.append(k)
    assert len(keys) == len(set(keys)) == 42
    assert min(keys) == pencil.encode(pencil.base_vertex(ctx))


def test_validate():
    ctx = SpaceCtx(3, 1)
    v = pencil.base_vertex_tuple(ctx)
    pencil.validate(ctx, v)
    with pytest.raises(pencil.PencilError):
        pencil.validate(ctx, (v[0], v[1], v[1], v[3]))
    with pytest.raises(pencil.PencilError):
        pencil.validate(ctx, (gf2.mask_of([1, 2]), v[1], v[2], v[3]))


def test_total_and_component_counts():
    assert pencil.total_pencil_count(SpaceCtx(3, 1)) == 42
    assert pencil.total_pencil_count(SpaceCtx(4, 2)) == 210
    assert pencil.total_pencil_count(SpaceCtx(4, 1)) == 15 * 5040
    # product over i of 2^(i-1) (2^(i+sigma) - 1)
    assert pencil.component_order(SpaceCtx(5, 2)) == 7 * 30 * 124 == 26040
    assert pencil.component_order(SpaceCtx(4, 1)) == 2520


def test_entries_cover_everything():
    ctx = SpaceCtx(4, 2)
    for p in islice(pencil.pencils_through(ctx, Subspace.from_points([1, 2, 3])), 6):
        cover = p.a0.mask
        for e in p.entries:
            assert cover & e.mask == 0
            cover |= e.mask
        assert cover == ctx.all_points_mask
