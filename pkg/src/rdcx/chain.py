"""Augmented directed chain complexes and the table-based ω-category on them.

Linearisation sends an oriented graded poset whose augmentation is oriented
thin to the chain complex of free abelian groups on its grades, with
generator boundaries (sum of output faces) - (sum of input faces) and
augmentation sending every 0-generator to 1.  Chains are sparse integer
vectors; directions are the nonnegative spans of the bases, so positive and
negative parts are componentwise.

Globular tables are double sequences of nonnegative chains with matching
boundaries and unit augmentation; they compose by the cut-and-add rule and
carry their own flow graph and oriented Hasse diagram, which for a
linearised complex reproduce the graphs of the underlying poset on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .core import El, MINUS, PLUS, SIGNS, OgPoset, StructureError, Subset, _as_subset, augment, is_oriented_thin
from .graphs import DirectedGraph

Chain = Dict[int, int]  # basis index -> integer coefficient, one fixed dimension


def _add(a: Chain, b: Chain, scale: int = 1) -> Chain:
    out = dict(a)
    for i, c in b.items():
        v = out.get(i, 0) + scale * c
        if v:
            out[i] = v
        else:
            out.pop(i, None)
    return out


def _pos(a: Chain) -> Chain:
    return {i: c for i, c in a.items() if c > 0}


def _neg(a: Chain) -> Chain:
    return {i: -c for i, c in a.items() if c < 0}


def _frozen(a: Chain) -> tuple:
    return tuple(sorted(a.items()))


@dataclass(frozen=True)
class ADC:
    """Augmented directed chain complex with a distinguished basis.

    ``sizes[n]`` is the rank in dimension n; ``boundaries[n-1][i]`` is the
    boundary chain of the i-th generator of dimension n (so the list is
    indexed from dimension 1 up); ``aug[i]`` is the augmentation of the i-th
    0-generator.  The direction is implicitly the nonnegative span of the
    basis.
    """

    sizes: tuple
    boundaries: tuple  # tuple over n >= 1 of tuples of frozen chains
    aug: tuple

    def __post_init__(self):
        for n in range(1, len(self.sizes)):
            for i in range(self.sizes[n]):
                d2 = self.d(n - 1, self.d(n, {i: 1}))
                if n >= 2 and d2:
                    raise StructureError(f"boundary of boundary is nonzero at generator ({n},{i})")
                if n == 1 and self.eps(self.d(1, {i: 1})) != 0:
                    raise StructureError(f"augmented boundary is nonzero at generator (1,{i})")

    @property
    def dim(self) -> int:
        return len(self.sizes) - 1

    def size(self, n: int) -> int:
        return self.sizes[n] if 0 <= n < len(self.sizes) else 0

    def basis(self, n: int):
        return (El(n, i) for i in range(self.size(n)))

    def d(self, n: int, chain: Chain) -> Chain:
        """Boundary of a dimension-n chain (zero for n = 0)."""
        if n <= 0:
            return {}
        out: Chain = {}
        for i, c in chain.items():
            out = _add(out, dict(self.boundaries[n - 1][i]), c)
        return out

    def eps(self, chain: Chain) -> int:
        return sum(self.aug[i] * c for i, c in chain.items())

    def to_json(self) -> dict:
        """Row-major matrices, rows indexed by the lower grade."""
        mats = []
        for n in range(1, len(self.sizes)):
            rows = [[0] * self.sizes[n] for _ in range(self.sizes[n - 1])]
            for i in range(self.sizes[n]):
                for j, c in self.boundaries[n - 1][i]:
                    rows[j][i] = c
            mats.append(rows)
        return {
            "basis": list(self.sizes),
            "boundary": mats,
            "augmentation": list(self.aug),
        }


def linearize(P) -> ADC:
    """Chain complex on the grades of P; requires oriented-thin augmentation."""
    P = P if isinstance(P, OgPoset) else _as_subset(P).extract()[0]
    if not is_oriented_thin(augment(P)):
        raise StructureError("augmentation is not oriented thin; cannot linearise")
    sizes = P.grade_sizes if P.size else (0,)
    boundaries = []
    for n in range(1, len(sizes)):
        row = []
        for i in range(sizes[n]):
            fin, fout = P.grades[n][i]
            chain: Chain = {}
            for j in fout:
                chain[j] = chain.get(j, 0) + 1
            for j in fin:
                chain[j] = chain.get(j, 0) - 1
            row.append(_frozen(chain))
        boundaries.append(tuple(row))
    aug = tuple(1 for _ in range(sizes[0]))
    return ADC(tuple(sizes), tuple(boundaries), aug)


# -- globular tables ----------------------------------------------------------


@dataclass(frozen=True)
class GlobularTable:
    """Finitely supported double sequence of nonnegative chains.

    ``entries[(n, sign)]`` holds the dimension-n chain of that sign; keys are
    only present up to the table's top dimension.
    """

    entries: tuple  # sorted tuple of ((n, sign), frozen chain)

    @staticmethod
    def make(raw: dict) -> "GlobularTable":
        cleaned = {}
        for key, chain in raw.items():
            if isinstance(chain, dict):
                chain = _frozen(chain)
            if chain:
                cleaned[key] = chain
        return GlobularTable(tuple(sorted(cleaned.items())))

    def chain(self, n: int, a: int) -> Chain:
        for key, frozen in self.entries:
            if key == (n, a):
                return dict(frozen)
        return {}

    @property
    def dim(self) -> int:
        top = -1
        for (n, _), _chain in self.entries:
            top = max(top, n)
        return top

    def support(self, n: int, a: int) -> frozenset:
        return frozenset(self.chain(n, a))

    def __repr__(self):
        bits = [f"{n}{'+' if a == PLUS else '-'}:{dict(ch)}" for (n, a), ch in self.entries]
        return "Table(" + ", ".join(bits) + ")"


def is_globular_table(C: ADC, x: GlobularTable) -> bool:
    top = x.dim
    for n in range(top + 1):
        for a in SIGNS:
            chain = x.chain(n, a)
            if any(c < 0 for c in chain.values()):
                return False
            if any(not 0 <= i < C.size(n) for i in chain):
                return False
            if n > 0 and _frozen(C.d(n, chain)) != _frozen(_add(x.chain(n - 1, PLUS), x.chain(n - 1, MINUS), -1)):
                return False
            if n == 0 and C.eps(chain) != 1:
                return False
    return top >= 0


def basis_table(C: ADC, b: El) -> GlobularTable:
    """The table of a basis element, by downward positive/negative recursion."""
    n, i = b.dim, b.index
    if not 0 <= i < C.size(n):
        raise StructureError(f"no basis element {b}")
    entries = {(n, MINUS): {i: 1}, (n, PLUS): {i: 1}}
    for m in range(n - 1, -1, -1):
        entries[(m, PLUS)] = _pos(C.d(m + 1, entries[(m + 1, PLUS)]))
        entries[(m, MINUS)] = _neg(C.d(m + 1, entries[(m + 1, MINUS)]))
    return GlobularTable.make(entries)


def is_unital_basis(C: ADC) -> bool:
    for n in range(C.dim + 1):
        for b in C.basis(n):
            t = basis_table(C, b)
            if C.eps(t.chain(0, MINUS)) != 1 or C.eps(t.chain(0, PLUS)) != 1:
                return False
    return True


def adc_flow_graph(C: ADC, k: int) -> DirectedGraph:
    """Edges b -> c between generators above dimension k whose k-tables meet."""
    vertices = [b for n in range(k + 1, C.dim + 1) for b in C.basis(n)]
    tables = {b: basis_table(C, b) for b in vertices}
    edges = [
        (b, c)
        for b in vertices
        for c in vertices
        if tables[b].support(k, PLUS) & tables[c].support(k, MINUS)
    ]
    return DirectedGraph(vertices, edges)


def adc_hasse(C: ADC) -> DirectedGraph:
    vertices = [b for n in range(C.dim + 1) for b in C.basis(n)]
    edges = []
    for n in range(1, C.dim + 1):
        for c in C.basis(n):
            bd = C.d(n, {c.index: 1})
            for i in _pos(bd):
                edges.append((c, El(n - 1, i)))
            for i in _neg(bd):
                edges.append((El(n - 1, i), c))
    return DirectedGraph(vertices, edges)


def is_steiner(C: ADC) -> bool:
    if not is_unital_basis(C):
        return False
    return all(adc_flow_graph(C, k).is_acyclic() for k in range(C.dim + 1))


def is_strong_steiner(C: ADC) -> bool:
    return is_unital_basis(C) and adc_hasse(C).is_acyclic()


# -- tables from molecules ------------------------------------------------------


def molecule_table(P, U) -> GlobularTable:
    """Table of a molecule subset: the sum of top cells of each boundary."""
    from .molecule import _recognise

    V = _as_subset(U) if not isinstance(U, Subset) else U
    if _recognise(V.poset, V.mask) is None:
        raise StructureError("molecule_table needs a molecule subset")
    entries = {}
    for n in range(V.dim + 1):
        for a in SIGNS:
            entries[(n, a)] = {x.index: 1 for x in V.boundary(n, a).grade(n)}
    return GlobularTable.make(entries)


def cell_table(cell) -> GlobularTable:
    """Table of a molecule over P: push the shape's table along the map."""
    shape = cell.shape.poset.whole()
    entries: dict = {}
    for n in range(shape.dim + 1):
        for a in SIGNS:
            chain: Chain = {}
            for x in shape.boundary(n, a).grade(n):
                i = cell.map(x).index
                chain[i] = chain.get(i, 0) + 1
            entries[(n, a)] = chain
    return GlobularTable.make(entries)


# -- the ω-category structure on tables ------------------------------------------


def nu_boundary(x: GlobularTable, n: int, a: int) -> GlobularTable:
    entries = {}
    for (m, b), chain in x.entries:
        if m < n:
            entries[(m, b)] = dict(chain)
        elif m == n:
            entries[(m, b)] = x.chain(n, a)
    return GlobularTable.make(entries)


def nu_composable(x: GlobularTable, y: GlobularTable, k: int) -> bool:
    return nu_boundary(x, k, PLUS) == nu_boundary(y, k, MINUS)


def nu_compose(x: GlobularTable, y: GlobularTable, k: int) -> GlobularTable:
    """Cut-and-add composition: x + y minus the shared k-boundary."""
    if not nu_composable(x, y, k):
        raise StructureError("tables are not composable at this level")
    cut = nu_boundary(x, k, PLUS)
    entries = {}
    for n in range(max(x.dim, y.dim) + 1):
        for a in SIGNS:
            entries[(n, a)] = _add(_add(x.chain(n, a), cut.chain(n, a), -1), y.chain(n, a))
    return GlobularTable.make(entries)


# -- comparison of the two ω-categories ------------------------------------------


def generate_tables(C: ADC, max_dim: int, bound: Optional[int] = None) -> Tuple[list, bool]:
    """Close the basis tables under composition.

    Returns (tables, complete): iterates to a fixpoint unless ``bound`` caps
    the coefficient mass at top dimensions, in which case the closure is
    reported as possibly incomplete.
    """
    seeds = [basis_table(C, b) for n in range(min(max_dim, C.dim) + 1) for b in C.basis(n)]

    def mass(t: GlobularTable) -> int:
        return max(
            (sum(dict(ch).values()) for (n, a), ch in t.entries if n == t.dim),
            default=0,
        )

    tables = {t: None for t in seeds}
    frontier = list(seeds)
    complete = True
    steps = 0
    cap = 20000
    while frontier:
        new = []
        for x in list(tables):
            for y in frontier:
                for pair in ((x, y), (y, x)) if x is not y else ((x, y),):
                    for k in range(max_dim):
                        a, b = pair
                        if not nu_composable(a, b, k):
                            continue
                        z = nu_compose(a, b, k)
                        if bound is not None and mass(z) > bound:
                            complete = False
                            continue
                        if z not in tables:
                            tables[z] = None
                            new.append(z)
                        steps += 1
                        if steps > cap:
                            return list(tables), False
        frontier = new
    return list(tables), complete


def compare_molec_nu(P: OgPoset, max_dim: int, bound: Optional[int] = None) -> dict:
    """Compare molecules over P with the table ω-category of its linearisation.

    Maps every enumerated cell to its table; checks injectivity, surjectivity
    onto the tables generated by the basis under composition, and commutation
    with boundaries and a sample of compositions.  The report never claims
    completeness beyond what the enumeration provides.
    """
    from .omegacat import enumerate_cells

    C = linearize(P)
    cells = enumerate_cells(P, max_dim, bound=bound)
    tables, tables_complete = generate_tables(C, max_dim, bound=bound)

    mapped = [(cell, cell_table(cell)) for cell in cells.cells]
    by_table: dict = {}
    for cell, table in mapped:
        by_table.setdefault(table, []).append(cell)
    collisions = [(t, cs) for t, cs in by_table.items() if len(cs) > 1]
    injective = not collisions

    table_set = set(tables)
    surjective = all(t in by_table for t in table_set)
    image_inside = all(t in table_set for t in by_table)

    boundaries_ok = True
    for cell, table in mapped:
        for n in range(max_dim + 1):
            for a in SIGNS:
                if cell_table(cell.boundary(n, a)) != nu_boundary(table, n, a):
                    boundaries_ok = False
    compositions_ok = True
    for i, (c1, t1) in enumerate(mapped):
        for c2, t2 in mapped:
            for k in range(max_dim):
                composable = c1.composable(c2, k)
                if composable:
                    if not nu_composable(t1, t2, k):
                        compositions_ok = False
                    elif cell_table(c1.compose(c2, k)) != nu_compose(t1, t2, k):
                        compositions_ok = False

    complete = cells.complete and tables_complete
    isomorphic = injective and surjective and image_inside and boundaries_ok and compositions_ok
    return {
        "cells": len(mapped),
        "tables": len(table_set),
        "complete": complete,
        "partial": not complete,
        "injective": injective,
        "surjective_onto_generated": surjective,
        "image_in_generated": image_inside,
        "boundaries_commute": boundaries_ok,
        "compositions_commute": compositions_ok,
        "isomorphic": isomorphic,
        "collisions": [
            {
                "table": [[list(key), dict(ch)] for key, ch in t.entries],
                "cells": len(cs),
            }
            for t, cs in collisions[:4]
        ],
    }
