from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilgraphs import gf2
from pencilgraphs.gf2 import SpaceCtx


def test_ctx_derived_values():
    ctx = SpaceCtx(4, 2)
    assert (ctx.n, ctx.rho, ctx.s, ctx.t, ctx.m1, ctx.m0) == (15, 2, 2, 7, 3, 12)
    # m1 * 2^sigma + (2^sigma - 1) = n
    assert ctx.m1 * (1 << ctx.sigma) + (1 << ctx.sigma) - 1 == ctx.n


@pytest.mark.parametrize("r,sigma", [(2, 1), (3, 0), (3, 3), (4, 3)])
def test_ctx_rejects_bad_parameters(r, sigma):
    with pytest.raises(gf2.Gf2Error):
        SpaceCtx(r, sigma)


@pytest.mark.parametrize("a,b,c", [(8, 9, 1), (1, 2, 3), (3, 4, 7)])
def test_line_third(a, b, c):
    assert gf2.line_third(a, b) == c


def test_line_third_degenerate():
    with pytest.raises(gf2.Gf2Error):
        gf2.line_third(5, 5)


@pytest.mark.parametrize("r,i,c", [(3, 4, 3), (4, 1, 14), (3, 1, 6)])
def test_complement_point(r, i, c):
    assert gf2.complement_point(SpaceCtx(r, 1), i) == c


def test_complement_point_whole_space():
    ctx = SpaceCtx(3, 1)
    with pytest.raises(gf2.Gf2Error):
        gf2.complement_point(ctx, 7)
    for i in range(1, ctx.n):
        assert gf2.complement_point(ctx, i) == ctx.n ^ i


def test_span_examples():
    assert gf2.span([1, 2]).points == (1, 2, 3)
    assert gf2.span([3, 4]).points == (3, 4, 7)
    assert gf2.span([1, 6, 7]).points == (1, 6, 7)


@given(st.sets(st.integers(min_value=1, max_value=31), min_size=1, max_size=5))
@settings(max_examples=150, deadline=None)
def test_span_is_closed_and_minimal(pts):
    s = gf2.span(pts)
    assert gf2.is_xor_closed(s.mask)
    for a, b in combinations(s.points, 2):
        assert (a ^ b) in s
    assert all(p in s for p in pts)


def _brute_subspaces(r, d):
    n = (1 << r) - 1
    out = []
    for pts in combinations(range(1, n + 1), (1 << d) - 1):
        if gf2.is_xor_closed(gf2.mask_of(pts)):
            out.append(pts)
    return out


def test_enumerate_subspaces_small():
    ctx = SpaceCtx(3, 1)
    singles = gf2.enumerate_subspaces(ctx, 1)
    assert [s.points for s in singles] == [(i,) for i in range(1, 8)]
    lines = gf2.enumerate_subspaces(ctx, 2)
    assert len(lines) == 7
    assert lines[0].points == (1, 2, 3)
    assert [s.points for s in lines] == _brute_subspaces(3, 2)


def test_enumerate_subspaces_r4_brute_force():
    ctx = SpaceCtx(4, 2)
    lines = gf2.enumerate_subspaces(ctx, 2)
    assert len(lines) == 35
    assert [s.points for s in lines] == _brute_subspaces(4, 2)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_subspace_counts_match_gaussian(r):
    ctx = SpaceCtx(r, 1)
    for d in range(0, r + 1):
        assert len(gf2.enumerate_subspaces(ctx, d)) == gf2.gaussian_binomial(r, d)


def test_gaussian_binomial_values():
    assert gf2.gaussian_binomial(3, 1) == len(_brute_subspaces(3, 1)) == 7
    assert gf2.gaussian_binomial(4, 2) == 35
    assert gf2.gaussian_binomial(4, 1) == 15
    assert gf2.gaussian_binomial(5, 2) == 155


def test_cosets_mod_examples():
    ctx = SpaceCtx(3, 1)
    cs = gf2.cosets_mod(ctx, gf2.Subspace.from_points([1]))
    assert [c.points for c in cs] == [(2, 3), (4, 5), (6, 7)]
    ctx = SpaceCtx(4, 2)
    cs = gf2.cosets_mod(ctx, gf2.Subspace.from_points([1, 2, 3]))
    assert [c.points for c in cs] == [
        (4, 5, 6, 7), (8, 9, 10, 11), (12, 13, 14, 15)]
    ctx = SpaceCtx(4, 1)
    cs = gf2.cosets_mod(ctx, gf2.Subspace.from_points([2]))
    assert cs[0].points == (1, 3)


def test_cosets_mod_wrong_dimension():
    ctx = SpaceCtx(4, 2)
    with pytest.raises(gf2.Gf2Error):
        gf2.cosets_mod(ctx, gf2.Subspace.from_points([1]))


@pytest.mark.parametrize("r,sigma", [(3, 1), (4, 1), (4, 2), (5, 2), (5, 3)])
def test_cosets_partition_everything(r, sigma):
    ctx = SpaceCtx(r, sigma)
    for sub in gf2.enumerate_subspaces(ctx, sigma)[:8]:
        cs = gf2.cosets_mod(ctx, sub)
        union = sub.mask
        for c in cs:
            assert union & c.mask == 0
            assert len(c) == 1 << sigma
            union |= c.mask
        assert union == ctx.all_points_mask


def test_hyperplanes():
    ctx = SpaceCtx(3, 1)
    hs = gf2.hyperplanes(ctx)
    assert len(hs) == 7
    pts = {h.points for h in hs}
    assert (1, 2, 3) in pts
    assert (1, 6, 7) in pts
    assert pts == {s.points for s in gf2.enumerate_subspaces(ctx, 2)}
    ctx = SpaceCtx(4, 1)
    hs = gf2.hyperplanes(ctx)
    assert len(hs) == 15
    assert (1, 2, 3, 4, 5, 6, 7) in {h.points for h in hs}


@given(st.integers(min_value=3, max_value=5))
@settings(max_examples=10, deadline=None)
def test_subspace_closure_property(r):
    ctx = SpaceCtx(r, 1)
    for s in gf2.enumerate_subspaces(ctx, min(3, r - 1)):
        for a, b in combinations(s.points, 2):
            assert (a ^ b) in s


def test_point_labels():
    assert gf2.point_str(10) == "a"
    assert gf2.point_str(31) == "v"
    assert gf2.mask_str(gf2.mask_of([1, 6, 7, 8, 9, 14, 15])) == "16789ef"
    assert gf2.parse_mask("3478bcf") == gf2.mask_of([3, 4, 7, 8, 11, 12, 15])
