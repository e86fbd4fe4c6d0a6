"""Molecules: inductive pasting-diagram shapes and their recognition.

A molecule is built from the point by two constructions: pasting two
molecules along a shared k-boundary, and the rewrite construction gluing two
round molecules of equal dimension along their whole boundary under a fresh
top element.  Witnesses record a derivation as a tree of tagged tuples

    ("point",)
    ("paste", left, right, k)
    ("atom", input_side, output_side)

and can be rebuilt into a poset isomorphic to the recognised one.

Recognition works on closed subsets of an ambient poset and memoises on the
subset bitmask: a subset with a single maximal element is checked directly
against the rewrite shape; otherwise we compute the layering dimension k,
enumerate topological sorts of the maximal k-flow graph, and greedily realise
layers until one sort yields a valid pasting decomposition.  Each layer is
forced: it is the closure of its maximal element together with the running
k-boundary, so failure of every sort is a sound rejection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    El,
    MINUS,
    PLUS,
    SIGNS,
    CompositionError,
    OgMap,
    OgPoset,
    StructureError,
    Subset,
    _as_subset,
    find_isos,
)
from .graphs import DirectedGraph

POINT = ("point",)


@dataclass(frozen=True)
class Molecule:
    """An oriented graded poset together with a derivation witness.

    ``incl`` holds the two structure maps into a pasted/rewritten result and
    is None for points and recognised inputs.
    """

    poset: OgPoset
    witness: tuple
    incl: Optional[tuple] = None

    @property
    def dim(self) -> int:
        return self.poset.dim

    def whole(self) -> Subset:
        return self.poset.whole()

    def __repr__(self):
        return f"Molecule(dim={self.dim}, size={self.poset.size})"


def point(name: Optional[str] = None) -> Molecule:
    return Molecule(OgPoset([[((), ())]], name=name), POINT)


# -- boundary-level predicates ----------------------------------------------


def is_globular(X) -> bool:
    """All nested boundaries collapse: bd_k(bd_n U) = bd_k U for k < n."""
    U = _as_subset(X)
    d = U.dim
    for n in range(d + 1):
        for b in SIGNS:
            inner = U.boundary(n, b)
            for k in range(n):
                for a in SIGNS:
                    if inner.boundary(k, a).mask != U.boundary(k, a).mask:
                        return False
    return True


def is_round(X) -> bool:
    """Globular, with opposite boundaries meeting exactly in the next one down."""
    U = _as_subset(X)
    if not is_globular(U):
        return False
    for n in range(U.dim):
        meet = U.boundary(n, MINUS) & U.boundary(n, PLUS)
        if meet.mask != U.boundary(n - 1, None).mask:
            return False
    return True


def _round_in(P: OgPoset, mask: int) -> bool:
    return is_round(Subset(P, mask))


# -- layering dimension and maximal flow (local copies to avoid an import
# cycle with the flows module, which builds on recognition) ------------------


def _lydim(U: Subset) -> int:
    """Least k >= -1 with at most one maximal element of dimension > k + 1."""
    dims = sorted((x.dim for x in U.maximal()), reverse=True)
    if len(dims) <= 1:
        return -1
    return max(dims[1] - 1, -1)


def _maxflow(U: Subset, k: int) -> DirectedGraph:
    tops = [x for x in U.maximal() if x.dim > k]
    P = U.poset
    outs = {x: P.under(x).kfaces(k, PLUS).mask for x in tops}
    ins = {x: P.under(x).kfaces(k, MINUS).mask for x in tops}
    edges = [(x, y) for x in tops for y in tops if outs[x] & ins[y]]
    return DirectedGraph(tops, edges)


# -- recognition -------------------------------------------------------------


def recognise(X) -> Optional[tuple]:
    """Witness that a poset or closed subset is a molecule, or None."""
    U = _as_subset(X)
    return _recognise(U.poset, U.mask)


def is_molecule(X) -> Optional[tuple]:
    return recognise(X)


def is_atom(X) -> bool:
    U = _as_subset(X)
    if len(U.maximal()) != 1:
        return False
    return _recognise(U.poset, U.mask) is not None


def as_molecule(X) -> Molecule:
    """Standalone Molecule from a recognised poset or closed subset."""
    U = _as_subset(X)
    w = _recognise(U.poset, U.mask)
    if w is None:
        raise StructureError("not a molecule")
    sub, _ = U.extract()
    return Molecule(sub, w)


def _recognise(P: OgPoset, mask: int) -> Optional[tuple]:
    memo = P._cache.setdefault("molecule", {})
    if mask in memo:
        return memo[mask]
    w = _recognise_raw(P, mask)
    memo[mask] = w
    return w


def _recognise_raw(P: OgPoset, mask: int) -> Optional[tuple]:
    if mask == 0:
        return None
    U = Subset(P, mask)
    if not U.is_closed():
        return None
    tops = U.maximal().elements()
    if len(tops) == 1:
        return _recognise_atom(P, U, tops[0])
    k = _lydim(U)
    if k < 0:
        return None  # several maximal elements but no admissible pasting level
    for sort in _maxflow(U, k).topological_sorts():
        layers = _realise_layers(P, U, k, sort)
        if layers is None:
            continue
        witness = None
        ok = True
        for layer_mask in layers:
            w = _recognise(P, layer_mask)
            if w is None:
                ok = False
                break
            witness = w if witness is None else ("paste", witness, w, k)
        if ok:
            return witness
    return None


def _recognise_atom(P: OgPoset, U: Subset, top: El) -> Optional[tuple]:
    n = top.dim
    if U.dim != n:
        return None
    if n == 0:
        return POINT if len(U) == 1 else None
    minus = U.boundary(n - 1, MINUS)
    plus = U.boundary(n - 1, PLUS)
    # the two sides must carve up everything under the top cell
    if (minus | plus).mask != U.mask & ~(1 << P.bit(top)):
        return None
    if P.faces(top, MINUS) != set(minus.grade(n - 1)):
        return None
    if P.faces(top, PLUS) != set(plus.grade(n - 1)):
        return None
    # per-sign boundary agreement, and the sides meet exactly in it
    for a in SIGNS:
        if minus.boundary(n - 2, a).mask != plus.boundary(n - 2, a).mask:
            return None
    if (minus & plus).mask != minus.boundary(n - 2, None).mask:
        return None
    if not (_round_in(P, minus.mask) and _round_in(P, plus.mask)):
        return None
    w_minus = _recognise(P, minus.mask)
    if w_minus is None:
        return None
    w_plus = _recognise(P, plus.mask)
    if w_plus is None:
        return None
    return ("atom", w_minus, w_plus)


def _realise_layers(P: OgPoset, U: Subset, k: int, sort) -> Optional[list]:
    """Greedy layer realisation for one ordering of the maximal elements.

    layer_i = cl(x_i) | current, where current walks input to output
    k-boundary; checks the layer's input boundary and the pushout condition
    (accumulated ∩ layer = shared boundary) at each step.
    """
    current = U.boundary(k, MINUS)
    accumulated = current
    layers = []
    for x in sort:
        layer = P.under(x) | current
        if layer.boundary(k, MINUS).mask != current.mask:
            return None
        if (accumulated & layer).mask != current.mask:
            return None
        if _recognise(P, layer.mask) is None:
            return None
        layers.append(layer.mask)
        current = layer.boundary(k, PLUS)
        accumulated = accumulated | layer
    if accumulated.mask != U.mask or current.mask != U.boundary(k, PLUS).mask:
        return None
    return layers


# -- unique isomorphism ------------------------------------------------------


def unique_molecule_iso(U: Molecule, V: Molecule, exhaustive: bool = False) -> Optional[OgMap]:
    """The unique isomorphism between two molecules, or None.

    With ``exhaustive`` the search continues past the first hit and asserts
    that no second one exists.
    """
    for M in (U, V):
        if not isinstance(M, Molecule):
            raise TypeError("unique_molecule_iso needs witnessed molecules")
    isos = find_isos(U.poset, V.poset, limit=None if exhaustive else 1)
    if exhaustive and len(isos) > 1:
        raise StructureError("molecule isomorphism is not unique; inputs are not molecules")
    return isos[0] if isos else None


def _subset_molecule(P: OgPoset, mask: int) -> Molecule:
    """Molecule on the extracted subposet of a recognised subset."""
    w = _recognise(P, mask)
    if w is None:
        raise StructureError("subset is not a molecule")
    sub, _ = Subset(P, mask).extract()
    return Molecule(sub, w)


def _boundary_iso(P: OgPoset, pm: int, Q: OgPoset, qm: int) -> Optional[dict]:
    """Identification of two boundary subsets as a dict El(Q) -> El(P)."""
    if pm == 0 or qm == 0:
        return {} if pm == qm else None
    MP = _subset_molecule(P, pm)
    MQ = _subset_molecule(Q, qm)
    phi = unique_molecule_iso(MP, MQ)
    if phi is None:
        return None
    _, embed_p = Subset(P, pm).extract()
    _, embed_q = Subset(Q, qm).extract()
    out = {}
    for x in MP.poset:
        out[embed_q(phi(x))] = embed_p(x)
    return out


# -- pasting and rewrite constructions ----------------------------------------


def paste(U: Molecule, V: Molecule, k: int) -> Molecule:
    """Pasting of U and V at the k-boundary.

    Requires k < min(dim U, dim V) and the (unique) isomorphism between the
    output k-boundary of U and the input k-boundary of V.
    """
    if not isinstance(U, Molecule) or not isinstance(V, Molecule):
        raise TypeError("paste needs witnessed molecules")
    if not 0 <= k < min(U.dim, V.dim):
        raise ValueError(f"pasting level k={k} out of range for dims {U.dim}, {V.dim}")
    P, Q = U.poset, V.poset
    glue = _boundary_iso(P, P.whole().boundary(k, PLUS).mask, Q, Q.whole().boundary(k, MINUS).mask)
    if glue is None:
        raise CompositionError("boundaries do not match: no pasting at this level")
    return _glue(U, V, glue, k=k)


def atom(U: Molecule, V: Molecule) -> Molecule:
    """Rewrite of U into V: glue the boundaries, adjoin one top element."""
    if not isinstance(U, Molecule) or not isinstance(V, Molecule):
        raise TypeError("atom needs witnessed molecules")
    n = U.dim
    if V.dim != n or n < 0:
        raise CompositionError("sides of an atom must share a finite dimension")
    for M in (U, V):
        if not is_round(M.poset):
            raise CompositionError("sides of an atom must be round")
    P, Q = U.poset, V.poset
    glue: dict = {}
    for a in SIGNS:
        half = _boundary_iso(P, P.whole().boundary(n - 1, a).mask, Q, Q.whole().boundary(n - 1, a).mask)
        if half is None:
            raise CompositionError("boundaries do not match sign-wise: no rewrite")
        for q_el, p_el in half.items():
            if glue.get(q_el, p_el) != p_el:
                raise CompositionError("boundary identifications disagree on the shared part")
            glue[q_el] = p_el
    return _glue(U, V, glue, top=True)


def _glue(U: Molecule, V: Molecule, glue: dict, k: Optional[int] = None, top: bool = False) -> Molecule:
    """Pushout of U <- shared -> V along an identification of V-elements with
    U-elements, optionally capped with a fresh top element."""
    P, Q = U.poset, V.poset
    result_dim = max(P.dim, Q.dim) + (1 if top else 0)
    u_pos: dict = {}
    v_pos: dict = {}
    sizes = [0] * (result_dim + 1)
    for x in P:
        u_pos[x] = El(x.dim, sizes[x.dim])
        sizes[x.dim] += 1
    for y in Q:
        if y in glue:
            v_pos[y] = u_pos[glue[y]]
        else:
            v_pos[y] = El(y.dim, sizes[y.dim])
            sizes[y.dim] += 1

    grades: list = [[None] * sizes[d] for d in range(result_dim + 1)]
    for x in P:
        fin, fout = P.grades[x.dim][x.index]
        grades[x.dim][u_pos[x].index] = (
            frozenset(u_pos[El(x.dim - 1, j)].index for j in fin),
            frozenset(u_pos[El(x.dim - 1, j)].index for j in fout),
        )
    for y in Q:
        if y in glue:
            continue
        fin, fout = Q.grades[y.dim][y.index]
        grades[y.dim][v_pos[y].index] = (
            frozenset(v_pos[El(y.dim - 1, j)].index for j in fin),
            frozenset(v_pos[El(y.dim - 1, j)].index for j in fout),
        )
    if top:
        n = P.dim
        grades[n + 1] = [
            (
                frozenset(u_pos[El(n, i)].index for i in range(P.grade_size(n))),
                frozenset(v_pos[El(n, i)].index for i in range(Q.grade_size(n))),
            )
        ]
    R = OgPoset(grades)
    iota_u = OgMap(P, R, [[u_pos[El(d, i)] for i in range(P.grade_size(d))] for d in range(P.dim + 1)])
    iota_v = OgMap(Q, R, [[v_pos[El(d, i)] for i in range(Q.grade_size(d))] for d in range(Q.dim + 1)])
    witness = ("atom", U.witness, V.witness) if top else ("paste", U.witness, V.witness, k)
    return Molecule(R, witness, incl=(iota_u, iota_v))


def rebuild(witness: tuple) -> Molecule:
    """Reconstruct a molecule from a witness tree via the constructors."""
    tag = witness[0]
    if tag == "point":
        return point()
    if tag == "paste":
        _, wl, wr, k = witness
        return paste(rebuild(wl), rebuild(wr), k)
    if tag == "atom":
        _, wl, wr = witness
        return atom(rebuild(wl), rebuild(wr))
    raise ValueError(f"unknown witness node {tag!r}")


# -- submolecules ------------------------------------------------------------


def submolecules(X) -> list:
    """All closed subsets occurring as factors of pasting decompositions.

    Includes the molecule itself, its iterated boundaries (the factors of
    unit-padded decompositions), and both factors of every proper binary
    pasting, transitively.  Returns Subsets of the ambient poset, sorted.
    """
    U = _as_subset(X)
    P = U.poset
    if _recognise(P, U.mask) is None:
        raise StructureError("not a molecule")
    memo = P._cache.setdefault("submolecules", {})

    def sub(mask: int) -> frozenset:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        acc = {mask}
        V = Subset(P, mask)
        d = V.dim
        for n in range(d):
            for a in SIGNS:
                acc |= sub(V.boundary(n, a).mask)
        for k, left, right in _binary_decompositions(P, V):
            acc |= sub(left)
            acc |= sub(right)
        out = frozenset(acc)
        memo[mask] = out
        return out

    return sorted((Subset(P, m) for m in sub(U.mask)), key=lambda s: (len(s), s.mask))


def _binary_decompositions(P: OgPoset, V: Subset):
    """Proper splits V = L #k R with both sides molecules of dim > k.

    The maximal elements of dimension > k are bipartitioned; a necessary
    condition is that the left part is downward closed in the maximal k-flow
    graph, after which both sides are forced and checked.
    """
    d = V.dim
    for k in range(d):
        tops = [x for x in V.maximal() if x.dim > k]
        if len(tops) < 2:
            continue
        graph = _maxflow(V, k)
        lower_bd = V.boundary(k, MINUS)
        upper_bd = V.boundary(k, PLUS)
        order = list(tops)
        m = len(order)
        for split in range(1, 1 << m):
            if split == (1 << m) - 1:
                continue
            left_tops = [order[i] for i in range(m) if split >> i & 1]
            right_tops = [order[i] for i in range(m) if not split >> i & 1]
            if any((r, l) in graph.edges for l in left_tops for r in right_tops):
                continue
            left = lower_bd
            for x in left_tops:
                left = left | P.under(x)
            right = upper_bd
            for x in right_tops:
                right = right | P.under(x)
            if (left | right).mask != V.mask:
                continue
            shared = left.boundary(k, PLUS)
            if (left & right).mask != shared.mask:
                continue
            if right.boundary(k, MINUS).mask != shared.mask:
                continue
            if _recognise(P, left.mask) is None or _recognise(P, right.mask) is None:
                continue
            yield k, left.mask, right.mask


# -- regular directed complexes ----------------------------------------------


def is_regular_directed_complex(P: OgPoset) -> bool:
    """Every element's closure must be recognised as an atom."""
    for x in P:
        cl = P.under(x)
        if _recognise(P, cl.mask) is None:
            return False
    return True
