"""Molecules over a base: cell enumeration and the strict ω-category axioms."""

import pytest

from rdcx import shapes
from rdcx.core import El, MINUS, PLUS, SIGNS, CompositionError
from rdcx.molecule import as_molecule, atom, paste
from rdcx.omegacat import (
    atoms_of_factorisation,
    enumerate_cells,
    evaluate_factorisation,
    factor_into_atoms,
    generating_atoms,
    subset_cell,
)


def cells_of(P, max_dim, bound=None):
    return enumerate_cells(P, max_dim, bound=bound)


def composable_pairs(cells, k):
    for a in cells:
        for b in cells:
            if a.composable(b, k):
                yield a, b


# -- enumeration -------------------------------------------------------------------


def test_arrow_has_three_cells():
    cs = cells_of(shapes.arrow(), 1)
    assert cs.complete
    assert cs.by_dim() == {0: 2, 1: 1}


def test_two_path_has_six_cells():
    # oracle: closed molecule subsets are the vertices, edges, and paths
    cs = cells_of(shapes.path(2), 2)
    assert cs.complete
    assert cs.by_dim() == {0: 3, 1: 3}


def test_merge_whisker_cells():
    cs = cells_of(shapes.merge_whisker(), 2)
    assert cs.complete
    assert cs.by_dim() == {0: 4, 1: 8, 2: 2}


def test_max_dim_truncates():
    cs = cells_of(shapes.merge_whisker(), 1)
    assert cs.by_dim() == {0: 4, 1: 8}


def test_loop_graph_subsets_flagged_incomplete():
    cs = cells_of(shapes.loop_graph(), 1)
    assert not cs.complete
    assert cs.mode == "subsets"


def test_loop_graph_bounded_generation_gives_paths():
    cs = cells_of(shapes.loop_graph(), 1, bound=3)
    assert not cs.complete and cs.mode == "generated"
    # paths from a: f, fg, fh, fgf, fhf; from b: g, h, gf, hf, gfg, ... all <= 3 edges
    lengths = sorted(len(c.shape.poset.whole().maximal()) for c in cs if c.dim == 1)
    assert max(lengths) == 3
    assert lengths.count(1) == 3  # the three generating edges
    by_len = {n: lengths.count(n) for n in set(lengths)}
    assert by_len[2] == 4  # fg, fh, gf, hf
    assert by_len[3] == 6  # fgf, fhf, gfg, gfh, hfg, hfh


def test_generating_atoms_are_the_closures():
    P = shapes.merge_whisker()
    gens = generating_atoms(P)
    assert len(gens) == P.size
    for g in gens:
        assert g.map.is_inclusion()
        assert len(g.shape.poset.whole().maximal()) == 1


# -- cell equality -------------------------------------------------------------------


def test_subset_cells_equal_iff_same_subset():
    P = shapes.lens_chain()
    a = subset_cell(P, P.under(El(2, 0)))
    b = subset_cell(P, P.under(El(2, 0)))
    c = subset_cell(P, P.under(El(2, 1)))
    assert a == b and hash(a) == hash(b)
    assert a != c


def test_distinct_paths_same_shape_are_distinct_cells():
    L = shapes.loop_graph()
    cs = cells_of(L, 1, bound=2)
    two_step = [c for c in cs if c.dim == 1 and len(c.shape.poset.whole().maximal()) == 2]
    assert len(two_step) == len({id(c) for c in two_step})
    fg = [c for c in two_step if {c.map(x) for x in c.shape.poset if x.dim == 1} == {El(1, 0), El(1, 1)}]
    fh = [c for c in two_step if {c.map(x) for x in c.shape.poset if x.dim == 1} == {El(1, 0), El(1, 2)}]
    assert len(fg) == 2 and len(fh) == 2  # fg vs gf, fh vs hf
    assert fg[0] != fg[1]


# -- boundaries -------------------------------------------------------------------------


def test_cell_boundary_restricts_map():
    P = shapes.merge_whisker()
    whole = subset_cell(P, P.whole())
    src = whole.boundary(0, MINUS)
    assert src.dim == 0
    assert {src.map(x) for x in src.shape.poset} == {El(0, 0)}


def test_cell_boundary_at_dim_is_identity():
    P = shapes.merge_whisker()
    c = subset_cell(P, P.whole())
    for n in (c.dim, c.dim + 2):
        for a in SIGNS:
            assert c.boundary(n, a) == c


def test_cell_globularity():
    P = shapes.merge_whisker()
    for c in cells_of(P, 2):
        for n in range(c.dim + 1):
            for b in SIGNS:
                inner = c.boundary(n, b)
                for k in range(n):
                    for a in SIGNS:
                        assert inner.boundary(k, a) == c.boundary(k, a)


# -- composition and the axioms ----------------------------------------------------------


BASES = [shapes.arrow(), shapes.path(2), shapes.merge_whisker()]


@pytest.mark.parametrize("P", BASES, ids=lambda P: P.name)
def test_unitality(P):
    cells = list(cells_of(P, 2))
    for c in cells:
        for k in range(2):
            assert c.compose(c.boundary(k, PLUS), k) == c
            assert c.boundary(k, MINUS).compose(c, k) == c


@pytest.mark.parametrize("P", BASES, ids=lambda P: P.name)
def test_boundary_compatibility(P):
    cells = list(cells_of(P, 2))
    for k in range(2):
        for a, b in composable_pairs(cells, k):
            ab = a.compose(b, k)
            for n in range(3):
                for s in SIGNS:
                    want_low = a.boundary(n, s)
                    if n < k:
                        assert ab.boundary(n, s) == want_low == b.boundary(n, s)
                    elif n == k:
                        assert ab.boundary(k, MINUS) == a.boundary(k, MINUS)
                        assert ab.boundary(k, PLUS) == b.boundary(k, PLUS)
                    else:
                        assert ab.boundary(n, s) == a.boundary(n, s).compose(b.boundary(n, s), k)


@pytest.mark.parametrize("P", BASES, ids=lambda P: P.name)
def test_associativity(P):
    cells = list(cells_of(P, 2))
    for k in range(2):
        for a, b in composable_pairs(cells, k):
            for c in cells:
                if b.composable(c, k):
                    assert a.compose(b, k).compose(c, k) == a.compose(b.compose(c, k), k)


def test_interchange_on_grid():
    lens = atom(as_molecule(shapes.arrow()), as_molecule(shapes.arrow()))
    tower = paste(lens, lens, 1)
    grid = paste(tower, tower, 0).poset
    cells = [c for c in cells_of(grid, 2) if c.dim == 2]
    found = 0
    for t, t2 in composable_pairs(cells, 1):
        for u, u2 in composable_pairs(cells, 1):
            left_col = t.compose(t2, 1)
            right_col = u.compose(u2, 1)
            if not left_col.composable(right_col, 0):
                continue
            lhs = left_col.compose(right_col, 0)
            rhs = t.compose(u, 0).compose(t2.compose(u2, 0), 1)
            assert lhs == rhs
            found += 1
    assert found >= 1  # at least the genuine 2x2 quadruple


def test_non_composable_raises():
    P = shapes.path(2)
    a = subset_cell(P, P.under(El(0, 0)))
    b = subset_cell(P, P.under(El(1, 1)))
    with pytest.raises(CompositionError):
        a.compose(b, 0)


# -- basis factorisation --------------------------------------------------------------------


@pytest.mark.parametrize("P", BASES, ids=lambda P: P.name)
def test_every_cell_factors_into_atoms(P):
    gens = generating_atoms(P)
    for c in cells_of(P, 2):
        expr = factor_into_atoms(c)
        leaves = atoms_of_factorisation(expr)
        assert all(any(f == g for g in gens) for f in leaves)
        assert evaluate_factorisation(expr) == c


def test_factorisation_recomposes():
    P = shapes.lens_chain()
    whole = subset_cell(P, P.whole())
    expr = factor_into_atoms(whole)
    leaves = atoms_of_factorisation(expr)
    assert len(leaves) >= 3
    # every maximal element shows up among the leaf atoms (whiskers may repeat)
    tops = {x for x in P.whole().maximal()}
    leaf_tops = {next(iter(c.map(x) for x in c.shape.poset.whole().maximal())) for c in leaves}
    assert tops <= leaf_tops
    assert evaluate_factorisation(expr) == whole
