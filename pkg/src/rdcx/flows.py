"""Flow graphs, frame and layering dimensions, orderings and layerings.

The k-flow graph of an oriented graded poset links elements of dimension
above k whenever an output k-face of one is an input k-face of another; the
maximal flow graph restricts to maximal elements, and the extended flow graph
adds the low-dimensional elements through the interiors of k-boundaries.

A k-layering of a molecule is a pasting decomposition at level k in which
each factor contains exactly one maximal element of dimension above k.
Layerings are enumerated by realising each topological sort of the maximal
k-flow graph greedily and keeping the ones that work; by construction every
layering induces its sort back, so ``ordering_of`` is injective on the
result.
"""

from __future__ import annotations

from dataclasses import dataclass
from .core import MINUS, PLUS, StructureError, Subset, _as_subset
from .graphs import DirectedGraph
from .molecule import _lydim, _realise_layers, _recognise


def _subset_of(X) -> Subset:
    return _as_subset(X)


def flow_graph(X, k: int) -> DirectedGraph:
    """Edges x -> y between dim > k elements with an output k-face of x among
    the input k-faces of y."""
    U = _subset_of(X)
    P = U.poset
    memo = P._cache.setdefault("flow", {})
    key = (U.mask, k)
    if key not in memo:
        vertices = [x for x in U if x.dim > k]
        outs = {x: (P.under(x) & U).kfaces(k, PLUS).mask for x in vertices}
        ins = {x: (P.under(x) & U).kfaces(k, MINUS).mask for x in vertices}
        edges = [(x, y) for x in vertices for y in vertices if outs[x] & ins[y]]
        memo[key] = DirectedGraph(vertices, edges)
    return memo[key]


def max_flow_graph(X, k: int) -> DirectedGraph:
    U = _subset_of(X)
    return flow_graph(U, k).induced(x for x in U.maximal() if x.dim > k)


def extended_flow_graph(X, k: int) -> DirectedGraph:
    """Bipartite graph through interiors of k-boundaries.

    Low-to-high edges y -> x for y in the interior of the input k-boundary of
    x; high-to-low edges y -> x for x in the interior of the output
    k-boundary of y.
    """
    U = _subset_of(X)
    P = U.poset
    memo = P._cache.setdefault("extflow", {})
    key = (U.mask, k)
    if key not in memo:
        edges = []
        for x in U:
            if x.dim <= k:
                continue
            cl = P.under(x) & U
            for y in cl.boundary(k, MINUS).interior():
                edges.append((y, x))
            for y in cl.boundary(k, PLUS).interior():
                edges.append((x, y))
        memo[key] = DirectedGraph(U, edges)
    return memo[key]


# -- dimensions ---------------------------------------------------------------


def frame_dim(X) -> int:
    """Dimension of the union of pairwise intersections of maximal closures."""
    U = _subset_of(X)
    P = U.poset
    tops = [P.under(x) & U for x in U.maximal()]
    meet = 0
    for i, a in enumerate(tops):
        for b in tops[i + 1:]:
            meet |= a.mask & b.mask
    return Subset(P, meet).dim


def layering_dim(X) -> int:
    """Least k >= -1 with at most one maximal element of dimension > k + 1."""
    return _lydim(_subset_of(X))


# -- layerings ----------------------------------------------------------------


@dataclass(frozen=True)
class Layering:
    """A k-layering: an ordered pasting decomposition with one maximal
    element of dimension > k per layer."""

    k: int
    layers: tuple

    def __len__(self):
        return len(self.layers)


def ordering_of(layering: Layering) -> tuple:
    """The induced ordering: each layer's unique maximal element above k."""
    out = []
    for layer in layering.layers:
        tops = [x for x in layer.maximal() if x.dim > layering.k]
        if len(tops) != 1:
            raise StructureError("not a layering: a layer has several maximal elements above k")
        out.append(tops[0])
    return tuple(out)


def _check_molecule(U: Subset):
    if _recognise(U.poset, U.mask) is None:
        raise StructureError("not a molecule")


def orderings(X, k: int) -> list:
    """All topological sorts of the maximal k-flow graph."""
    U = _subset_of(X)
    _check_molecule(U)
    if not -1 <= k < U.dim:
        raise ValueError(f"ordering level k={k} out of range for dim {U.dim}")
    return list(max_flow_graph(U, k).topological_sorts())


def layerings(X, k: int) -> list:
    """All k-layerings, one per realisable ordering."""
    U = _subset_of(X)
    P = U.poset
    _check_molecule(U)
    if not -1 <= k < U.dim:
        raise ValueError(f"layering level k={k} out of range for dim {U.dim}")
    found = []
    seen = set()
    for sort in max_flow_graph(U, k).topological_sorts():
        masks = _realise_layers(P, U, k, sort)
        if masks is None:
            continue
        if all(_recognise(P, m) is not None for m in masks):
            key = tuple(masks)
            if key not in seen:
                seen.add(key)
                found.append(Layering(k, tuple(Subset(P, m) for m in masks)))
    return found
