"""Small directed-graph toolkit.

Everything downstream (Hasse diagrams, flow graphs, chain-complex graphs)
reduces to questions about finite directed graphs: acyclicity with a concrete
cycle as certificate, enumeration of topological sorts, converses, relabelling
along a bijection, and DOT export.  Vertices are arbitrary hashable labels;
all outputs are deterministic given the natural sort order of the labels.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional


class DirectedGraph:
    """Immutable directed graph with hashable vertex labels."""

    __slots__ = ("vertices", "edges", "_succ")

    def __init__(self, vertices: Iterable, edges: Iterable[tuple]):
        self.vertices = frozenset(vertices)
        self.edges = frozenset((a, b) for a, b in edges)
        for a, b in self.edges:
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside the vertex set")
        self._succ = None

    def successors(self, v) -> tuple:
        if self._succ is None:
            succ = {v: [] for v in self.vertices}
            for a, b in self.edges:
                succ[a].append(b)
            self._succ = {v: tuple(sorted(ws)) for v, ws in succ.items()}
        return self._succ[v]

    def __eq__(self, other):
        return (
            isinstance(other, DirectedGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"DirectedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def is_discrete(self) -> bool:
        return not self.edges

    def converse(self) -> "DirectedGraph":
        return DirectedGraph(self.vertices, ((b, a) for a, b in self.edges))

    def relabel(self, fn: Callable) -> "DirectedGraph":
        """Image under a vertex relabelling; `fn` must be injective on vertices."""
        table = {v: fn(v) for v in self.vertices}
        if len(set(table.values())) != len(table):
            raise ValueError("relabelling is not injective")
        return DirectedGraph(table.values(), ((table[a], table[b]) for a, b in self.edges))

    def induced(self, vs: Iterable) -> "DirectedGraph":
        keep = frozenset(vs)
        return DirectedGraph(
            keep & self.vertices,
            ((a, b) for a, b in self.edges if a in keep and b in keep),
        )

    def find_cycle(self) -> Optional[list]:
        """One directed cycle as a vertex list (no repeated vertex), or None.

        Deterministic: DFS in sorted vertex order; the result is rotated so
        that it starts at its least vertex.
        """
        for a, b in self.edges:
            if a == b:
                return [a]
        WHITE, GREY, BLACK = 0, 1, 2
        colour = {v: WHITE for v in self.vertices}
        stack: list = []
        on_stack: dict = {}

        def visit(v):
            colour[v] = GREY
            on_stack[v] = len(stack)
            stack.append(v)
            for w in self.successors(v):
                if colour[w] == GREY:
                    return stack[on_stack[w]:]
                if colour[w] == WHITE:
                    found = visit(w)
                    if found is not None:
                        return found
            colour[v] = BLACK
            stack.pop()
            del on_stack[v]
            return None

        for v in self.sorted_vertices():
            if colour[v] == WHITE:
                cycle = visit(v)
                if cycle is not None:
                    i = cycle.index(min(cycle))
                    return cycle[i:] + cycle[:i]
        return None

    def is_acyclic(self) -> bool:
        return self.find_cycle() is None

    def topological_sorts(self) -> Iterator[tuple]:
        """All topological sorts, lexicographically by vertex order.

        Recursive source removal; yields nothing when the graph is cyclic.
        """
        indeg = {v: 0 for v in self.vertices}
        for _, b in self.edges:
            indeg[b] += 1
        order = self.sorted_vertices()
        prefix: list = []

        def rec():
            if len(prefix) == len(order):
                yield tuple(prefix)
                return
            for v in order:
                if indeg[v] == 0:
                    indeg[v] = -1
                    for w in self.successors(v):
                        indeg[w] -= 1
                    prefix.append(v)
                    yield from rec()
                    prefix.pop()
                    indeg[v] = 0
                    for w in self.successors(v):
                        indeg[w] += 1

        return rec()

    def has_path(self, a, b) -> bool:
        seen = {a}
        frontier = [a]
        while frontier:
            v = frontier.pop()
            for w in self.successors(v):
                if w == b:
                    return True
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return False

    def to_dot(self, name: str = "g", edge_attr: Optional[Callable] = None) -> str:
        """Render as Graphviz DOT; vertex labels use str(), lines sorted."""
        lines = [f'digraph "{name}" {{']
        for v in self.sorted_vertices():
            lines.append(f'  "{v}";')
        for a, b in self.sorted_edges():
            attr = edge_attr(a, b) if edge_attr is not None else ""
            suffix = f" [{attr}]" if attr else ""
            lines.append(f'  "{a}" -> "{b}"{suffix};')
        lines.append("}")
        return "\n".join(lines) + "\n"
