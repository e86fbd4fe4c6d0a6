"""Suspension, Gray product, join, and duals.

The Gray product carries the alternating sign rule: the faces of a pair
(x, y) combine the faces of x with those of y taken at sign flipped when the
dimension of x is odd.  The join is implemented literally as its definition,
diminish(gray(augment(P), augment(Q))), which keeps the sign bookkeeping in
one place.  Duals swap input and output faces exactly at a chosen set of
positive dimensions and are involutive.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .core import El, MINUS, PLUS, OgPoset, augment, diminish, _as_subset


def _poset_of(X) -> OgPoset:
    if isinstance(X, OgPoset):
        return X
    return _as_subset(X).poset


def suspension(P) -> OgPoset:
    """Two new poles at dimension 0; everything else shifts up one dimension.

    Former 0-dimensional elements acquire the negative pole as input face and
    the positive pole as output face; all other face sets lift verbatim.
    """
    P = _poset_of(P)
    grades: list = [[((), ()), ((), ())]]  # index 0: negative pole, 1: positive pole
    if P.dim >= 0:
        grades.append([((0,), (1,)) for _ in range(P.grade_size(0))])
    for d in range(1, P.dim + 1):
        grades.append(list(P.grades[d]))
    return OgPoset(grades, name=f"susp({P.name})" if P.name else None)


def suspend_el(x: El) -> El:
    return El(x.dim + 1, x.index)


# -- Gray product --------------------------------------------------------------


def gray(P, Q) -> OgPoset:
    """Gray product on the product poset, with the alternating sign rule.

    Elements of total dimension d are ordered with the first factor's
    dimension ascending, then by the two indices; ``gray_el`` computes the
    position of a pair without building the product.
    """
    P, Q = _poset_of(P), _poset_of(Q)
    if P.size == 0 or Q.size == 0:
        return OgPoset([], name=None)
    dim = P.dim + Q.dim
    index: dict = {}
    grades: list = []
    for d in range(dim + 1):
        row_els = []
        for i in range(max(0, d - Q.dim), min(d, P.dim) + 1):
            for xi in range(P.grade_size(i)):
                for yi in range(Q.grade_size(d - i)):
                    pair = (El(i, xi), El(d - i, yi))
                    index[pair] = El(d, len(row_els))
                    row_els.append(pair)
        grades.append(row_els)

    tables: list = []
    for d, row_els in enumerate(grades):
        row = []
        for x, y in row_els:
            flip = x.dim % 2 == 1
            fin, fout = set(), set()
            for a, acc in ((MINUS, fin), (PLUS, fout)):
                for xf in P.faces(x, a):
                    acc.add(index[(xf, y)].index)
                for yf in Q.faces(y, (-a) if flip else a):
                    acc.add(index[(x, yf)].index)
            row.append((frozenset(fin), frozenset(fout)))
        tables.append(row)
    return OgPoset(tables)


def gray_el(P, Q, x: El, y: El) -> El:
    """Position of the pair (x, y) in gray(P, Q)."""
    P, Q = _poset_of(P), _poset_of(Q)
    d = x.dim + y.dim
    pos = 0
    for i in range(max(0, d - Q.dim), x.dim):
        pos += P.grade_size(i) * Q.grade_size(d - i)
    pos += x.index * Q.grade_size(y.dim) + y.index
    return El(d, pos)


# -- join ----------------------------------------------------------------------


def join(P, Q) -> OgPoset:
    P, Q = _poset_of(P), _poset_of(Q)
    return diminish(gray(augment(P), augment(Q)))


def join_el(P, Q, x: Optional[El] = None, y: Optional[El] = None) -> El:
    """Position in join(P, Q) of x * y; pass None to omit a side."""
    P, Q = _poset_of(P), _poset_of(Q)
    ax = El(x.dim + 1, x.index) if x is not None else El(0, 0)
    ay = El(y.dim + 1, y.index) if y is not None else El(0, 0)
    if x is None and y is None:
        raise ValueError("the empty pair is removed by the join")
    g = gray_el(augment(P), augment(Q), ax, ay)
    return El(g.dim - 1, g.index)


# -- duals ----------------------------------------------------------------------


def dual(P, J: Iterable[int]) -> OgPoset:
    """Swap input and output faces exactly at the dimensions in J."""
    P = _poset_of(P)
    J = {int(j) for j in J}
    if any(j < 1 for j in J):
        raise ValueError("dual dimensions must be positive")
    grades = []
    for d, grade in enumerate(P.grades):
        if d in J:
            grades.append([(fout, fin) for fin, fout in grade])
        else:
            grades.append(list(grade))
    return OgPoset(grades, name=P.name)


def total_dual(P) -> OgPoset:
    P = _poset_of(P)
    return dual(P, range(1, max(P.dim, 0) + 1))
