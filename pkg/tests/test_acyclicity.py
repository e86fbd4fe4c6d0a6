"""The acyclicity hierarchy on the worked counterexamples."""

from rdcx import shapes
from rdcx.acyclicity import (
    classify,
    has_frame_acyclic_molecules,
    is_acyclic,
    is_dw_acyclic,
    is_frame_acyclic,
    is_strongly_dw_acyclic,
)
from rdcx.core import El, oriented_hasse
from rdcx.flows import extended_flow_graph, flow_graph
from rdcx.generate import random_molecules


def test_point_is_everything():
    P = shapes.point_poset()
    assert is_acyclic(P) and is_strongly_dw_acyclic(P) and is_dw_acyclic(P)
    assert classify(P)["class"] == "acyclic"


def test_merge_whisker_is_acyclic():
    # oracle: SCC-free reachability on the Hasse graph
    P = shapes.merge_whisker()
    g = oriented_hasse(P)
    for v in g.vertices:
        stack, seen = [v], set()
        while stack:
            for w in g.successors(stack.pop()):
                assert w != v, "found a Hasse cycle"
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    assert is_acyclic(P)


def test_flow_cycle_atom_verdicts():
    U = shapes.flow_cycle_atom()
    assert not is_dw_acyclic(U)
    assert not is_strongly_dw_acyclic(U)
    assert not is_acyclic(U)
    assert is_frame_acyclic(U)  # dimension 3 shortcut
    assert is_frame_acyclic(U, exhaustive=True)  # and directly
    cycle = flow_graph(U, 0).find_cycle()
    assert set(cycle) == {El(1, 2), El(1, 5)}


def test_hasse_cycle_atom_verdicts():
    U = shapes.hasse_cycle_atom()
    assert is_strongly_dw_acyclic(U)
    assert is_dw_acyclic(U)
    assert not is_acyclic(U)
    for k in (0, 1, 2):
        g = extended_flow_graph(U, k)
        assert g.is_acyclic() and not g.is_discrete()
    for k in (-1, 3):
        assert extended_flow_graph(U, k).is_discrete()


def test_classify_flow_cycle_atom():
    rep = classify(shapes.flow_cycle_atom())
    assert rep["dw"] is False
    assert rep["frame"] == "yes" and rep["frame_reason"] == "dim<=3"
    flow_certs = [c for c in rep["certificates"] if c["graph"] == "flow"]
    assert flow_certs and flow_certs[0]["k"] == 0
    assert sorted(map(tuple, flow_certs[0]["cycle"])) == [(1, 2), (1, 5)]


def test_classify_hasse_cycle_atom():
    rep = classify(shapes.hasse_cycle_atom())
    assert rep["class"] == "strongly-dw-acyclic"
    assert rep["acyclic"] is False and rep["strongly_dw"] is True and rep["dw"] is True
    hasse_certs = [c for c in rep["certificates"] if c["graph"] == "hasse"]
    assert len(hasse_certs) == 1
    assert len(hasse_certs[0]["cycle"]) == 6


def test_classify_stats_levels():
    rep = classify(shapes.triangle_fan())
    assert set(rep["stats"]["flow"]) == {"-1", "0", "1", "2"}
    assert rep["stats"]["flow"]["0"]["edges"] == 15


# -- implications ------------------------------------------------------------------


def test_implication_chain_on_fixtures():
    for mk in shapes.CATALOGUE.values():
        P = mk()
        if is_acyclic(P):
            assert is_strongly_dw_acyclic(P)
        if is_strongly_dw_acyclic(P):
            assert is_dw_acyclic(P)


def test_dw_acyclic_molecules_are_frame_acyclic():
    for m in random_molecules(30, seed=3):
        if is_dw_acyclic(m.poset):
            assert is_frame_acyclic(m.poset, exhaustive=True)


def test_path_lifting_flow_to_extflow():
    # a flow path between elements yields an extended-flow path
    for mk in (shapes.triangle_fan, shapes.hasse_cycle_atom):
        P = mk()
        for k in range(0, P.dim):
            f = flow_graph(P, k)
            ext = extended_flow_graph(P, k)
            for a, b in f.edges:
                assert ext.has_path(a, b)


def test_extflow_connectivity_on_frame_acyclic():
    # frame-acyclic molecules: any two elements are linked in some ExtFlow_k
    for mk in (shapes.merge_whisker, shapes.lens_chain):
        P = mk()
        els = sorted(P)
        for i, x in enumerate(els):
            for y in els[i + 1:]:
                assert any(
                    extended_flow_graph(P, k).has_path(x, y) or extended_flow_graph(P, k).has_path(y, x)
                    for k in range(-1, P.dim + 1)
                ), (x, y)


def test_morphism_reflects_acyclicity():
    # the pinch quotient is dw-acyclic and its source disc is acyclic
    disc, pinched, q = shapes.disc_pinch()
    assert is_acyclic(disc)
    assert is_dw_acyclic(pinched)
    assert not is_acyclic(pinched)  # going around the pinch point


def test_molecule_into_strongly_dw_acyclic_is_injective():
    # all subset cells over a strongly dw-acyclic RDC have injective maps
    from rdcx.omegacat import enumerate_cells

    P = shapes.hasse_cycle_atom()
    assert is_strongly_dw_acyclic(P)
    cells = enumerate_cells(P, 3)
    assert cells.complete
    assert all(c.map.is_injective() for c in cells)


# -- the semi-decision ----------------------------------------------------------------


def test_has_frame_acyclic_molecules_positive_cases():
    assert has_frame_acyclic_molecules(shapes.merge_whisker()) == "yes"  # acyclic
    assert has_frame_acyclic_molecules(shapes.flow_cycle_atom()) == "yes"  # dim <= 3
    assert has_frame_acyclic_molecules(shapes.loop_graph()) == "yes"  # dim <= 3


def test_has_frame_acyclic_molecules_dim4_acyclic():
    from rdcx.constructions import suspension

    P = suspension(shapes.flow_cycle_atom())
    assert P.dim == 4
    assert has_frame_acyclic_molecules(P) in {"yes", "unknown"}

    Q = suspension(shapes.merge_whisker())
    assert has_frame_acyclic_molecules(suspension(Q)) == "yes"  # stays acyclic
