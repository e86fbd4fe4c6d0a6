"""Suspension, Gray product, join, duals: laws, graph lemmas, instabilities."""

from hypothesis import given, settings, strategies as st

from rdcx import shapes
from rdcx.acyclicity import is_acyclic, is_dw_acyclic, is_frame_acyclic, is_strongly_dw_acyclic
from rdcx.constructions import dual, gray, gray_el, join, join_el, suspension, suspend_el, total_dual
from rdcx.core import El, MINUS, PLUS, OgPoset, oriented_hasse
from rdcx.flows import extended_flow_graph, flow_graph, max_flow_graph
from rdcx.generate import random_molecules
from rdcx.molecule import as_molecule, atom, is_regular_directed_complex, paste, recognise, unique_molecule_iso


def test_suspension_point_is_arrow():
    assert suspension(shapes.point_poset()) == shapes.arrow()


def test_suspension_arrow_is_two_globe():
    got = as_molecule(suspension(shapes.arrow()))
    want = atom(as_molecule(shapes.arrow()), as_molecule(shapes.arrow()))
    assert unique_molecule_iso(got, want) is not None


def test_gray_unit_laws():
    pt = shapes.point_poset()
    for mk in (shapes.arrow, shapes.triangle_fan, shapes.flow_cycle_atom):
        P = mk()
        assert gray(pt, P) == P
        assert gray(P, pt) == P


def test_gray_square_faces_frozen():
    # evaluated by hand from the alternating sign rule
    A = shapes.arrow()
    sq = gray(A, A)
    a, b, e = El(0, 0), El(0, 1), El(1, 0)
    assert sq.grade_sizes == (4, 4, 1)
    two = El(2, 0)
    assert sq.faces(two, MINUS) == {gray_el(A, A, a, e), gray_el(A, A, e, b)}
    assert sq.faces(two, PLUS) == {gray_el(A, A, b, e), gray_el(A, A, e, a)}


def test_gray_dimension_is_additive():
    P, Q = shapes.merge_whisker(), shapes.arrow()
    G = gray(P, Q)
    assert G.dim == P.dim + Q.dim
    for x in P:
        for y in Q:
            assert gray_el(P, Q, x, y).dim == x.dim + y.dim


def test_join_point_point_is_arrow():
    J = join(shapes.point_poset(), shapes.point_poset())
    assert unique_molecule_iso(as_molecule(J), as_molecule(shapes.arrow())) is not None


def test_join_units():
    empty = OgPoset([])
    for mk in (shapes.arrow, shapes.triangle_fan):
        P = mk()
        assert join(P, empty) == P
        assert join(empty, P) == P


def test_join_point_arrow_is_triangle():
    J = join(shapes.point_poset(), shapes.arrow())
    assert J.grade_sizes == (3, 3, 1)
    assert recognise(J) is not None


def test_total_dual_of_arrow():
    td = total_dual(shapes.arrow())
    e = El(1, 0)
    assert td.faces(e, MINUS) == {El(0, 1)}
    assert td.faces(e, PLUS) == {El(0, 0)}


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(min_value=1, max_value=3)))
def test_dual_involutive(J):
    P = shapes.merge_whisker()
    assert dual(dual(P, J), J) == P


def test_dual_of_hasse_cycle_atom_at_one_is_acyclic():
    U = shapes.hasse_cycle_atom()
    assert not is_acyclic(U)
    assert is_acyclic(dual(U, {1}))


# -- closure of the molecule/rdc classes ------------------------------------------


def test_molecules_closed_under_constructions():
    for m in random_molecules(25, seed=23):
        P = m.poset
        assert recognise(suspension(P)) is not None
        if P.dim <= 1:
            assert recognise(gray(P, shapes.arrow())) is not None
        assert recognise(total_dual(P)) is not None
        assert is_regular_directed_complex(suspension(P))


# -- suspension graph lemma ---------------------------------------------------------


def susp_relabel(x):
    return suspend_el(x)


def test_suspension_flow_graphs_shift():
    for mk in (shapes.merge_whisker, shapes.triangle_fan, shapes.flow_cycle_atom):
        P = mk()
        S = suspension(P)
        for k in range(-1, P.dim + 1):
            assert flow_graph(P, k).relabel(susp_relabel) == flow_graph(S, k + 1).induced(
                suspend_el(x) for x in P
            )
            assert flow_graph(S, k + 1) == flow_graph(P, k).relabel(susp_relabel)
            assert max_flow_graph(S, k + 1) == max_flow_graph(P, k).relabel(susp_relabel)


def test_suspension_extflow_embeds_with_discrete_poles():
    for mk in (shapes.merge_whisker, shapes.hasse_cycle_atom):
        P = mk()
        S = suspension(P)
        poles = {El(0, 0), El(0, 1)}
        for k in range(0, P.dim + 1):
            lifted = extended_flow_graph(P, k).relabel(susp_relabel)
            big = extended_flow_graph(S, k + 1)
            assert big.induced(set(big.vertices) - poles) == lifted
            assert not [e for e in big.edges if e[0] in poles or e[1] in poles]


def test_suspension_extflow_zero_edges():
    # at level 0 the poles feed and drain every suspended element
    P = shapes.arrow()
    S = suspension(P)
    g = extended_flow_graph(S, 0)
    bottom, top = El(0, 0), El(0, 1)
    expect = set()
    for x in P:
        expect.add((bottom, suspend_el(x)))
        expect.add((suspend_el(x), top))
    assert set(g.edges) == expect


def test_suspension_preserves_acyclicity_classes():
    for m in random_molecules(20, seed=29):
        P = m.poset
        S = suspension(P)
        if is_acyclic(P):
            assert is_acyclic(S)
        if is_strongly_dw_acyclic(P):
            assert is_strongly_dw_acyclic(S)
        if is_dw_acyclic(P):
            assert is_dw_acyclic(S)
        if P.dim <= 2 and is_frame_acyclic(P, exhaustive=True):
            assert is_frame_acyclic(S, exhaustive=True)


# -- dual graph lemma -----------------------------------------------------------------


def test_dual_flow_graphs_converse_rule():
    P = shapes.triangle_fan()
    for J in ({1}, {2}, {1, 2}):
        D = dual(P, J)
        relabel = lambda x: x  # duals keep positions
        for k in range(-1, P.dim + 1):
            f, fd = flow_graph(P, k), flow_graph(D, k)
            mf, mfd = max_flow_graph(P, k), max_flow_graph(D, k)
            ef, efd = extended_flow_graph(P, k), extended_flow_graph(D, k)
            if k + 1 in J:
                assert fd == f.converse()
                assert mfd == mf.converse()
                assert efd == ef.converse()
            else:
                assert fd == f
                assert mfd == mf
                assert efd == ef


def test_total_dual_hasse_is_converse():
    for mk in (shapes.merge_whisker, shapes.flow_cycle_atom, shapes.triangle_fan):
        P = mk()
        assert oriented_hasse(total_dual(P)) == oriented_hasse(P).converse()


def test_duals_preserve_dw_classes():
    for m in random_molecules(20, seed=31):
        P = m.poset
        for J in ({1}, {1, 2}, {2, 3}):
            D = dual(P, J)
            assert is_dw_acyclic(D) == is_dw_acyclic(P)
            assert is_strongly_dw_acyclic(D) == is_strongly_dw_acyclic(P)
        assert is_acyclic(total_dual(P)) == is_acyclic(P)


# -- stability positives ---------------------------------------------------------------


def test_pasting_preserves_acyclicity():
    lens = atom(as_molecule(shapes.arrow()), as_molecule(shapes.arrow()))
    tower = paste(lens, lens, 1)
    grid = paste(tower, tower, 0)
    for M in (tower, grid):
        assert is_acyclic(M.poset)


def test_gray_join_preserve_acyclicity():
    for mk in (shapes.arrow, shapes.merge_whisker):
        P = mk()
        assert is_acyclic(gray(P, shapes.arrow()))
        assert is_acyclic(join(P, shapes.point_poset()))


# -- stability negatives (the worked counterexamples) -----------------------------------


GRAY_CYCLE = [
    ((0, 1), (3, 0)),
    ((1, 1), (2, 2)),
    ((2, 1), (1, 0)),
    ((3, 0), (0, 1)),
    ((2, 2), (1, 2)),
    ((1, 4), (2, 1)),
]


def test_gray_product_breaks_dw_acyclicity():
    U = shapes.gray_unstable_atom()
    assert is_strongly_dw_acyclic(U)
    G = gray(U, U)
    f2 = flow_graph(G, 2)
    cycle = [gray_el(U, U, El(*a), El(*b)) for a, b in GRAY_CYCLE]
    for i, v in enumerate(cycle):
        assert (v, cycle[(i + 1) % len(cycle)]) in f2.edges
    assert not is_dw_acyclic(G)
    assert not is_strongly_dw_acyclic(G)


def test_join_breaks_dw_acyclicity():
    U = shapes.gray_unstable_atom()
    Ud = total_dual(U)
    assert is_strongly_dw_acyclic(Ud)
    J = join(U, Ud)
    f3 = flow_graph(J, 3)
    cycle = [join_el(U, Ud, El(*a), El(*b)) for a, b in GRAY_CYCLE]
    for i, v in enumerate(cycle):
        assert (v, cycle[(i + 1) % len(cycle)]) in f3.edges
    assert not is_dw_acyclic(J)


def test_pasting_breaks_dw_acyclicity():
    V = as_molecule(shapes.pasting_unstable_atom())
    U = as_molecule(shapes.hasse_cycle_atom())
    assert is_strongly_dw_acyclic(V.poset)
    assert is_strongly_dw_acyclic(U.poset)
    W = paste(V, U, 2)
    assert not is_dw_acyclic(W.poset)
    cyc = flow_graph(W.poset, 0).find_cycle()
    assert cyc is not None and all(x.dim == 1 for x in cyc)
