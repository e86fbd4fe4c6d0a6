"""Molecules over a base poset: a desk-scale strict ω-category.

A cell is a morphism from a molecule into the base, taken up to isomorphism
of the molecule commuting with the maps.  Boundaries restrict the map;
composition pastes the shapes over the base.  When the base is acyclic, or a
strongly dimension-wise acyclic regular directed complex, every cell is a
closed subset and enumeration by subsets is complete; otherwise enumeration
either stays on subsets (flagged incomplete) or generates composites of the
basis atoms up to a user-set bound on the number of top cells, never
truncating silently.

Cell equality falls back to an isomorphism search constrained by the maps
only when the cheap invariants (grade sizes, image multiset) agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    El,
    MINUS,
    PLUS,
    CompositionError,
    OgMap,
    OgPoset,
    StructureError,
    Subset,
    find_isos,
)
from .molecule import (
    Molecule,
    _recognise,
    _subset_molecule,
    is_regular_directed_complex,
    paste,
)


@dataclass(frozen=True)
class Cell:
    """A molecule over the base: shape, map, and a cached invariant key."""

    shape: Molecule
    map: OgMap

    def __post_init__(self):
        if self.map.source != self.shape.poset:
            raise StructureError("cell map must start at the cell shape")

    @property
    def base(self) -> OgPoset:
        return self.map.target

    @property
    def dim(self) -> int:
        return self.shape.dim

    def fingerprint(self) -> tuple:
        images = sorted(
            (x.dim, self.map(x)) for x in self.shape.poset
        )
        return (self.shape.poset.grade_sizes, tuple(images))

    def __eq__(self, other):
        if not isinstance(other, Cell) or self.base != other.base:
            return NotImplemented
        if self.shape.poset is other.shape.poset and self.map.assignment == other.map.assignment:
            return True
        if self.fingerprint() != other.fingerprint():
            return False
        isos = find_isos(
            self.shape.poset,
            other.shape.poset,
            limit=1,
            pair_ok=lambda x, y: self.map(x) == other.map(y),
        )
        return bool(isos)

    def __hash__(self):
        return hash(self.fingerprint())

    def __repr__(self):
        return f"Cell(dim={self.dim}, size={self.shape.poset.size})"

    def is_subset_cell(self) -> bool:
        return self.map.is_injective()

    def boundary(self, n: Optional[int] = None, a: Optional[int] = None) -> "Cell":
        U = self.shape.poset.whole().boundary(n, a)
        if U.mask == self.shape.poset.whole().mask:
            return self
        restricted, embed = self.map.restrict(U)
        piece = _subset_molecule(self.shape.poset, U.mask)
        return Cell(piece, restricted)

    def composable(self, other: "Cell", k: int) -> bool:
        if self.base != other.base:
            return False
        return self.boundary(k, PLUS) == other.boundary(k, MINUS)

    def compose(self, other: "Cell", k: int) -> "Cell":
        """Pasting over the base, with unit handling at low dimensions."""
        if not self.composable(other, k):
            raise CompositionError("cells are not composable at this level")
        if self.dim <= k:
            return other
        if other.dim <= k:
            return self
        glued = paste(self.shape, other.shape, k)
        iota_u, iota_v = glued.incl
        table = [[None] * n for n in glued.poset.grade_sizes]
        for x in self.shape.poset:
            y = iota_u(x)
            table[y.dim][y.index] = self.map(x)
        for x in other.shape.poset:
            y = iota_v(x)
            img = other.map(x)
            if table[y.dim][y.index] not in (None, img):
                raise CompositionError("maps disagree on the pasting boundary")
            table[y.dim][y.index] = img
        return Cell(glued, OgMap(glued.poset, self.base, table))


def subset_cell(P: OgPoset, U) -> Cell:
    """The cell of a closed molecule subset, with its inclusion."""
    U = U if isinstance(U, Subset) else P.closure(U)
    piece = _subset_molecule(P, U.mask)
    _, embed = U.extract()
    return Cell(piece, embed)


def atom_cell(P: OgPoset, x: El) -> Cell:
    return subset_cell(P, P.under(x))


def generating_atoms(P: OgPoset) -> list:
    """The basis cells: closures of elements, for a regular directed complex."""
    if not is_regular_directed_complex(P):
        raise StructureError("generating atoms require a regular directed complex")
    return [atom_cell(P, x) for x in P]


def cell_boundary(c: Cell, n: Optional[int] = None, a: Optional[int] = None) -> Cell:
    return c.boundary(n, a)


def compose(a: Cell, b: Cell, k: int) -> Cell:
    return a.compose(b, k)


@dataclass(frozen=True)
class CellSet:
    cells: tuple
    complete: bool
    mode: str

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def by_dim(self) -> dict:
        counts: dict = {}
        for c in self.cells:
            counts[c.dim] = counts.get(c.dim, 0) + 1
        return counts


def enumerate_cells(P: OgPoset, max_dim: int, bound: Optional[int] = None) -> CellSet:
    """All cells of dimension <= max_dim, when that is decidable.

    Subsets suffice (and the result is complete) for acyclic bases and for
    strongly dimension-wise acyclic regular directed complexes.  Otherwise,
    with a bound, composites of the basis atoms are generated with at most
    ``bound`` maximal cells per shape; without one, subsets are returned and
    flagged incomplete.
    """
    from .acyclicity import is_acyclic, is_strongly_dw_acyclic

    complete = is_acyclic(P) or (is_strongly_dw_acyclic(P) and is_regular_directed_complex(P))
    if complete or bound is None:
        cells = tuple(
            subset_cell(P, Subset(P, m)) for m in _molecule_masks(P, max_dim)
        )
        return CellSet(cells, complete, "subsets")
    return CellSet(tuple(_generated_cells(P, max_dim, bound)), False, "generated")


def _molecule_masks(P: OgPoset, max_dim: int) -> list:
    """Masks of closed molecule subsets of dimension <= max_dim."""
    seeds = [x for x in P if x.dim <= max_dim]
    masks = {0}
    for x in seeds:
        masks |= {m | P.under(x).mask for m in masks}
    out = [m for m in sorted(masks) if m and _recognise(P, m) is not None]
    return out


def _generated_cells(P: OgPoset, max_dim: int, bound: int) -> list:
    atoms = [c for c in generating_atoms(P) if c.dim <= max_dim]

    def weight(c: Cell) -> int:
        return len(c.shape.poset.whole().maximal())

    cells = list(atoms)
    frontier = list(atoms)
    while frontier:
        new = []
        for a in cells[:]:
            for b in frontier:
                for x, y in ((a, b), (b, a)):
                    for k in range(max_dim):
                        if x.dim <= k and y.dim <= k:
                            continue
                        if not x.composable(y, k):
                            continue
                        z = x.compose(y, k)
                        if weight(z) > bound:
                            continue
                        if z not in cells and z not in new:
                            new.append(z)
        cells.extend(new)
        frontier = new
    return cells


def factor_into_atoms(cell: Cell):
    """Write a cell as an iterated composite of basis atoms.

    Returns an expression tree: a Cell at the leaves, or a tuple
    ``(k, [subtrees...])`` denoting the k-composite of the parts in order.
    ``evaluate_factorisation`` recomposes it; ``atoms_of_factorisation``
    lists the leaves.  Raises when no factorisation exists.
    """
    from .flows import layerings, layering_dim

    shape = cell.shape.poset
    whole = shape.whole()
    tops = whole.maximal().elements()
    if len(tops) == 1:
        return cell
    k = layering_dim(whole)
    for layering in layerings(whole, k):
        parts = []
        ok = True
        for layer in layering.layers:
            restricted, _ = cell.map.restrict(layer)
            sub = Cell(_subset_molecule(shape, layer.mask), restricted)
            try:
                parts.append(factor_into_atoms(sub))
            except CompositionError:
                ok = False
                break
        if ok:
            return (k, parts)
    raise CompositionError("no factorisation into atoms found")


def evaluate_factorisation(expr) -> Cell:
    if isinstance(expr, Cell):
        return expr
    k, parts = expr
    acc = evaluate_factorisation(parts[0])
    for part in parts[1:]:
        acc = acc.compose(evaluate_factorisation(part), k)
    return acc


def atoms_of_factorisation(expr) -> list:
    if isinstance(expr, Cell):
        return [expr]
    _, parts = expr
    out = []
    for part in parts:
        out.extend(atoms_of_factorisation(part))
    return out
