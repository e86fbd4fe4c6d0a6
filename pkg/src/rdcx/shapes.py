"""A catalogue of small named shapes used in tests and documentation.

Each builder returns a fresh OgPoset with explicit face tables, so element
indices are stable and can be referred to by (dim, index) in golden tests.
Conventions in the comments: ``e2: 1->3`` means the 1-cell with index 2 runs
from vertex 1 to vertex 3; ``c0: {e0,e2} => {e3}`` means the 2-cell with
index 0 has input faces e0, e2 and output face e3.
"""

from __future__ import annotations

from .core import OgPoset


def point_poset() -> OgPoset:
    return OgPoset([[((), ())]], name="point")


def arrow() -> OgPoset:
    return OgPoset([[((), ()), ((), ())], [((0,), (1,))]], name="arrow")


def path(n: int) -> OgPoset:
    """Chain of n composable 1-cells."""
    return OgPoset(
        [
            [((), ())] * (n + 1),
            [((i,), (i + 1,)) for i in range(n)],
        ],
        name=f"path{n}",
    )


def globe(n: int) -> OgPoset:
    """The n-globe: two parallel cells in every positive dimension below n."""
    if n == 0:
        return point_poset()
    grades = [[((), ()), ((), ())]]
    for d in range(1, n):
        grades.append([((0,), (1,)), ((0,), (1,))])
    grades.append([((0,), (1,))])
    return OgPoset(grades, name=f"globe{n}")


def cospan() -> OgPoset:
    """Two 1-cells sharing their source: not a pasting shape."""
    return OgPoset(
        [
            [((), ()), ((), ()), ((), ())],
            [((1,), (0,)), ((1,), (2,))],  # e0: 1->0, e1: 1->2
        ],
        name="cospan",
    )


def merge_whisker() -> OgPoset:
    """A 2-cell collapsing a 2-step path onto one edge, then a whisker edge.

    e0: 0->1, e1: 1->2, e2: 2->3, e3: 0->2; c0: {e0,e1} => {e3}.
    """
    return OgPoset(
        [
            [((), ())] * 4,
            [((0,), (1,)), ((1,), (2,)), ((2,), (3,)), ((0,), (2,))],
            [((0, 1), (3,))],
        ],
        name="merge_whisker",
    )


def lens_chain() -> OgPoset:
    """Two lens-shaped 2-cells joined by a middle whisker edge.

    e0: 0->1, e1: 1->2, e2: 2->3, e3: 0->1, e4: 2->3;
    c0: {e0} => {e3}, c1: {e2} => {e4}.
    """
    return OgPoset(
        [
            [((), ())] * 4,
            [((0,), (1,)), ((1,), (2,)), ((2,), (3,)), ((0,), (1,)), ((2,), (3,))],
            [((0,), (3,)), ((2,), (4,))],
        ],
        name="lens_chain",
    )


def triangle_fan() -> OgPoset:
    """Two triangular 2-cells and one lens over a five-vertex frame.

    Vertices: 0, 1, 2 and the two endpoints 3, 4 of the final edges.
    e0: 0->1, e1: 1->3, e2: 3->4, e3: 0->2, e4: 2->1, e5: 2->3, e6: 3->4;
    c0: {e0} => {e3,e4}, c1: {e4,e1} => {e5}, c2: {e2} => {e6}.
    """
    return OgPoset(
        [
            [((), ())] * 5,
            [
                ((0,), (1,)),  # e0
                ((1,), (3,)),  # e1
                ((3,), (4,)),  # e2
                ((0,), (2,)),  # e3
                ((2,), (1,)),  # e4
                ((2,), (3,)),  # e5
                ((3,), (4,)),  # e6
            ],
            [((0,), (3, 4)), ((4, 1), (5,)), ((2,), (6,))],
        ],
        name="triangle_fan",
    )


def flow_cycle_atom() -> OgPoset:
    """3-atom whose 0-flow graph has a cycle through 1-cells 2 and 5.

    Input side: e0: 0->1, e1: 1->2, e2: 1->3, e3: 0->3, e4: 3->2;
                c0: {e0,e2} => {e3}, c1: {e1} => {e2,e4}.
    Output side: e5: 3->1; c2: {e0} => {e3,e5}, c3: {e5,e1} => {e4}.
    """
    return OgPoset(
        [
            [((), ())] * 4,
            [
                ((0,), (1,)),  # e0
                ((1,), (2,)),  # e1
                ((1,), (3,)),  # e2
                ((0,), (3,)),  # e3
                ((3,), (2,)),  # e4
                ((3,), (1,)),  # e5
            ],
            [
                ((0, 2), (3,)),  # c0
                ((1,), (2, 4)),  # c1
                ((0,), (3, 5)),  # c2
                ((5, 1), (4,)),  # c3
            ],
            [((0, 1), (2, 3))],
        ],
        name="flow_cycle_atom",
    )


def hasse_cycle_atom() -> OgPoset:
    """3-atom that is strongly dimension-wise acyclic but has a Hasse cycle.

    Input side: e0: 0->1, e1: 1->2, e2: 0->3, e3: 3->2; c0: {e0,e1} => {e2,e3}.
    Output side: e4: 3->1; c1: {e0} => {e2,e4}, c2: {e4,e1} => {e3}.
    """
    return OgPoset(
        [
            [((), ())] * 4,
            [
                ((0,), (1,)),  # e0
                ((1,), (2,)),  # e1
                ((0,), (3,)),  # e2
                ((3,), (2,)),  # e3
                ((3,), (1,)),  # e4
            ],
            [
                ((0, 1), (2, 3)),  # c0
                ((0,), (2, 4)),  # c1
                ((4, 1), (3,)),  # c2
            ],
            [((0,), (1, 2))],
        ],
        name="hasse_cycle_atom",
    )


def gray_unstable_atom() -> OgPoset:
    """3-atom that is strongly dimension-wise acyclic, though neither its
    Gray square with itself nor its join with its total dual stays so.

    Input side: e0: 0->1, e1: 1->2, e2: 1->2, e3: 0->2;
                c0: {e0,e2} => {e3}, c1: {e1} => {e2}.
    Output side: e4: 0->1; c2: {e0} => {e4}, c3: {e4,e1} => {e3}.
    """
    return OgPoset(
        [
            [((), ())] * 3,
            [
                ((0,), (1,)),  # e0
                ((1,), (2,)),  # e1
                ((1,), (2,)),  # e2
                ((0,), (2,)),  # e3
                ((0,), (1,)),  # e4
            ],
            [
                ((0, 2), (3,)),  # c0
                ((1,), (2,)),  # c1
                ((0,), (4,)),  # c2
                ((4, 1), (3,)),  # c3
            ],
            [((0, 1), (2, 3))],
        ],
        name="gray_unstable_atom",
    )


def pasting_unstable_atom() -> OgPoset:
    """3-atom rewriting two chained triangles into a single 2-cell.

    Pasted at the 2-boundary onto ``hasse_cycle_atom`` it produces a shape
    whose 0-flow graph is cyclic, although both factors are strongly
    dimension-wise acyclic.

    e0: 0->1, e1: 1->2, e2: 1->3, e3: 0->3, e4: 3->2;
    input side c0: {e1} => {e2,e4}, c1: {e0,e2} => {e3};
    output side c2: {e0,e1} => {e3,e4}.
    """
    return OgPoset(
        [
            [((), ())] * 4,
            [
                ((0,), (1,)),  # e0: 0->1
                ((1,), (2,)),  # e1: 1->2
                ((1,), (3,)),  # e2: 1->3
                ((0,), (3,)),  # e3: 0->3
                ((3,), (2,)),  # e4: 3->2
            ],
            [
                ((1,), (2, 4)),  # c0: {e1} => {e2,e4}
                ((0, 2), (3,)),  # c1: {e0,e2} => {e3}
                ((0, 1), (3, 4)),  # c2: {e0,e1} => {e3,e4}
            ],
            [((0, 1), (2,))],
        ],
        name="pasting_unstable_atom",
    )


def loop_graph() -> OgPoset:
    """One forward and two backward 1-cells between two vertices.

    f: a->b, g: b->a, h: b->a; the free category on it is infinite.
    """
    return OgPoset(
        [
            [((), ()), ((), ())],
            [((0,), (1,)), ((1,), (0,)), ((1,), (0,))],
        ],
        name="loop_graph",
    )


def bad_edge() -> OgPoset:
    """A 1-cell with two input faces and no output: not a regular directed complex."""
    return OgPoset([[((), ()), ((), ())], [((0, 1), ())]], name="bad_edge")


def disc_pinch():
    """The two-triangle disc, its pinch quotient, and the quotient map.

    The disc has two 2-cells stacked between paths through distinct middle
    vertices (1 bottom, 3 top); the quotient identifies those two vertices.
    Returns (disc, pinched, q).
    """
    from .core import El, OgMap

    disc = OgPoset(
        [
            [((), ())] * 4,  # 0: left, 1: bottom, 2: right, 3: top
            [
                ((0,), (1,)),  # e0: 0->1
                ((1,), (2,)),  # e1: 1->2
                ((0,), (2,)),  # e2: 0->2
                ((0,), (3,)),  # e3: 0->3
                ((3,), (2,)),  # e4: 3->2
            ],
            [((0, 1), (2,)), ((2,), (3, 4))],
        ],
        name="disc",
    )
    pinched = OgPoset(
        [
            [((), ())] * 3,  # 0: left, 1: middle (both marked vertices), 2: right
            [
                ((0,), (1,)),  # e0
                ((1,), (2,)),  # e1
                ((0,), (2,)),  # e2
                ((0,), (1,)),  # e3
                ((1,), (2,)),  # e4
            ],
            [((0, 1), (2,)), ((2,), (3, 4))],
        ],
        name="pinched_disc",
    )
    q = OgMap(
        disc,
        pinched,
        [
            [El(0, 0), El(0, 1), El(0, 2), El(0, 1)],
            [El(1, 0), El(1, 1), El(1, 2), El(1, 3), El(1, 4)],
            [El(2, 0), El(2, 1)],
        ],
    )
    return disc, pinched, q


CATALOGUE = {
    "point": point_poset,
    "arrow": arrow,
    "cospan": cospan,
    "merge_whisker": merge_whisker,
    "lens_chain": lens_chain,
    "triangle_fan": triangle_fan,
    "flow_cycle_atom": flow_cycle_atom,
    "hasse_cycle_atom": hasse_cycle_atom,
    "gray_unstable_atom": gray_unstable_atom,
    "pasting_unstable_atom": pasting_unstable_atom,
    "loop_graph": loop_graph,
    "bad_edge": bad_edge,
}
