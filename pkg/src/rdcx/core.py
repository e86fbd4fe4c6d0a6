"""Oriented graded posets and their closed subsets.

The base structure for diagram shapes: a finite graded poset where every
element's codimension-1 faces are split into an input set and an output set.
Gradedness is enforced structurally (face references point exactly one grade
down), so invalid gradings are unrepresentable.

Closed subsets are bitmasks over a fixed ambient poset.  All the heavy
machinery built on top (molecule recognition, layerings, submolecule
enumeration) memoises on these plain integers, which is what keeps exhaustive
desk-scale searches affordable.

Conventions.  A sign is one of the ints MINUS (-1) and PLUS (+1).  The
cofaces with sign a of x are the elements having x among their sign-a faces.
The graded face sets of a closed subset U are

    kfaces(U, k, a) = { x in U of dim k : no (-a)-coface of x lies in U },

and the k-boundary with sign a is the closure of kfaces(U, k, a) together
with the closures of all maximal elements of U of dimension < k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .graphs import DirectedGraph

PLUS = 1
MINUS = -1
SIGNS = (MINUS, PLUS)


def sign_name(a: int) -> str:
    return "+" if a == PLUS else "-"


class El(NamedTuple):
    """Positional reference to an element: (dimension, index within grade)."""

    dim: int
    index: int

    def __repr__(self):
        return f"({self.dim},{self.index})"


class StructureError(ValueError):
    """A structural invariant of an oriented graded poset is violated."""


class CompositionError(ValueError):
    """A pasting/rewrite/composition is not defined for the given inputs."""


class FormatError(ValueError):
    """Malformed serialized diagram data."""


class OgPoset:
    """Finite oriented graded poset.

    ``grades[d][i]`` is a pair ``(faces_in, faces_out)`` of frozensets of
    indices into grade ``d-1``.  Instances are immutable after construction;
    derived tables (cofaces, closures, flow graphs, recognition memos) are
    cached lazily on the instance, which is safe because nothing mutates.
    """

    __slots__ = (
        "name",
        "grades",
        "offsets",
        "size",
        "_els",
        "_face_bits",
        "_cof_bits",
        "_grade_masks",
        "_cl",
        "_cache",
        "_hash",
    )

    def __init__(self, grades: Sequence[Sequence[tuple]], name: Optional[str] = None):
        norm = []
        for d, grade in enumerate(grades):
            row = []
            for i, (fin, fout) in enumerate(grade):
                fin, fout = frozenset(fin), frozenset(fout)
                if d == 0:
                    if fin or fout:
                        raise StructureError(f"0-dimensional element {i} must have no faces")
                else:
                    if not fin and not fout:
                        raise StructureError(f"element ({d},{i}) has no faces")
                    if fin & fout:
                        raise StructureError(f"element ({d},{i}) has overlapping input and output faces")
                    below = len(grades[d - 1])
                    for j in fin | fout:
                        if not (isinstance(j, int) and 0 <= j < below):
                            raise StructureError(f"element ({d},{i}) refers to missing face {j} at grade {d - 1}")
                row.append((fin, fout))
            norm.append(tuple(row))
        while norm and not norm[-1]:
            norm.pop()
        for d in range(1, len(norm)):
            if not norm[d - 1]:
                raise StructureError(f"grade {d - 1} is empty below a non-empty grade")
        self.name = name
        self.grades = tuple(norm)
        offsets = []
        total = 0
        for grade in self.grades:
            offsets.append(total)
            total += len(grade)
        self.offsets = tuple(offsets)
        self.size = total
        self._els = tuple(El(d, i) for d, grade in enumerate(self.grades) for i in range(len(grade)))

        # Bit tables: direct faces (both signs) and per-sign cofaces.
        face_bits = [0] * total
        cof_bits = [[0] * total, [0] * total]  # index 0: MINUS, 1: PLUS
        for d, grade in enumerate(self.grades):
            for i, (fin, fout) in enumerate(grade):
                b = offsets[d] + i
                for j in fin:
                    face_bits[b] |= 1 << (offsets[d - 1] + j)
                    cof_bits[0][offsets[d - 1] + j] |= 1 << b
                for j in fout:
                    face_bits[b] |= 1 << (offsets[d - 1] + j)
                    cof_bits[1][offsets[d - 1] + j] |= 1 << b
        self._face_bits = tuple(face_bits)
        self._cof_bits = (tuple(cof_bits[0]), tuple(cof_bits[1]))
        masks = []
        for d, grade in enumerate(self.grades):
            m = 0
            for i in range(len(grade)):
                m |= 1 << (offsets[d] + i)
            masks.append(m)
        self._grade_masks = tuple(masks)
        self._cl: list = [None] * total
        self._cache: dict = {}
        self._hash = hash(self.grades)

    # -- basic structure ---------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.grades) - 1

    def grade_size(self, d: int) -> int:
        return len(self.grades[d]) if 0 <= d <= self.dim else 0

    @property
    def grade_sizes(self) -> tuple:
        return tuple(len(g) for g in self.grades)

    def __len__(self):
        return self.size

    def __iter__(self) -> Iterator[El]:
        return iter(self._els)

    def __contains__(self, x) -> bool:
        return isinstance(x, tuple) and len(x) == 2 and 0 <= x[0] <= self.dim and 0 <= x[1] < len(self.grades[x[0]])

    def __eq__(self, other):
        return isinstance(other, OgPoset) and self.grades == other.grades

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"OgPoset{label}{list(self.grade_sizes)}"

    def check(self, x: El) -> El:
        if x not in self:
            raise StructureError(f"no element {x} in this poset")
        return El(*x)

    def bit(self, x: El) -> int:
        return self.offsets[x[0]] + x[1]

    def el_of_bit(self, b: int) -> El:
        return self._els[b]

    # -- faces and cofaces -------------------------------------------------

    def faces(self, x: El, a: Optional[int] = None) -> frozenset:
        """Input (a = MINUS), output (a = PLUS), or all (a = None) faces of x."""
        x = self.check(x)
        fin, fout = self.grades[x.dim][x.index]
        if a is None:
            chosen = fin | fout
        else:
            chosen = fin if a == MINUS else fout
        return frozenset(El(x.dim - 1, j) for j in chosen)

    def cofaces(self, x: El, a: Optional[int] = None) -> frozenset:
        x = self.check(x)
        b = self.bit(x)
        if a is None:
            m = self._cof_bits[0][b] | self._cof_bits[1][b]
        else:
            m = self._cof_bits[0 if a == MINUS else 1][b]
        return frozenset(self._els[i] for i in _bits(m))

    def _cl_mask(self, b: int) -> int:
        m = self._cl[b]
        if m is None:
            m = 1 << b
            frontier = self._face_bits[b]
            while frontier:
                new = frontier & ~m
                m |= new
                frontier = 0
                for i in _bits(new):
                    frontier |= self._face_bits[i]
            self._cl[b] = m
        return m

    # -- subsets -----------------------------------------------------------

    def subset(self, els: Iterable[El]) -> "Subset":
        m = 0
        for x in els:
            m |= 1 << self.bit(self.check(x))
        return Subset(self, m)

    def closure(self, els: Iterable[El]) -> "Subset":
        m = 0
        for x in els:
            m |= self._cl_mask(self.bit(self.check(x)))
        return Subset(self, m)

    def under(self, x: El) -> "Subset":
        """The closure of the single element x."""
        return Subset(self, self._cl_mask(self.bit(self.check(x))))

    def whole(self) -> "Subset":
        return Subset(self, (1 << self.size) - 1)

    def empty(self) -> "Subset":
        return Subset(self, 0)


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


@dataclass(frozen=True)
class Subset:
    """A closed subset of an ambient poset, stored as a bitmask.

    Construction does not itself enforce closedness (boundary internals hop
    through non-closed intermediate masks), but every public operation either
    takes closed inputs to closed outputs or is explicit about it.
    """

    poset: OgPoset
    mask: int

    def __iter__(self) -> Iterator[El]:
        return (self.poset._els[b] for b in _bits(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, x):
        return x in self.poset and bool(self.mask >> self.poset.bit(El(*x)) & 1)

    def __bool__(self):
        return self.mask != 0

    def __le__(self, other: "Subset"):
        return self.mask & ~other.mask == 0

    def __and__(self, other):
        return Subset(self.poset, self.mask & other.mask)

    def __or__(self, other):
        return Subset(self.poset, self.mask | other.mask)

    def __sub__(self, other):
        return Subset(self.poset, self.mask & ~other.mask)

    def __repr__(self):
        return "{" + ", ".join(map(repr, self)) + "}"

    def elements(self) -> list:
        return list(self)

    @property
    def dim(self) -> int:
        d = -1
        for x in self:
            if x.dim > d:
                d = x.dim
        return d

    def grade(self, k: int) -> "Subset":
        P = self.poset
        m = self.mask & P._grade_masks[k] if 0 <= k <= P.dim else 0
        return Subset(P, m)

    def is_closed(self) -> bool:
        P = self.poset
        for b in _bits(self.mask):
            if P._face_bits[b] & ~self.mask:
                return False
        return True

    def closure(self) -> "Subset":
        P = self.poset
        m = 0
        for b in _bits(self.mask):
            m |= P._cl_mask(b)
        return Subset(P, m)

    def maximal(self) -> "Subset":
        """Elements of the subset with no coface inside the subset."""
        P = self.poset
        m = 0
        for b in _bits(self.mask):
            if not (P._cof_bits[0][b] | P._cof_bits[1][b]) & self.mask:
                m |= 1 << b
        return Subset(P, m)

    def kfaces(self, k: int, a: int) -> "Subset":
        """Graded face set: dim-k members with no (-a)-coface in the subset."""
        P = self.poset
        if not 0 <= k <= P.dim:
            return Subset(P, 0)
        opposite = P._cof_bits[1 if a == MINUS else 0]
        m = 0
        for b in _bits(self.mask & P._grade_masks[k]):
            if not opposite[b] & self.mask:
                m |= 1 << b
        return Subset(P, m)

    def boundary(self, n: Optional[int] = None, sign: Optional[int] = None) -> "Subset":
        """The n-boundary with the given sign (None: union of both signs).

        n defaults to dim - 1; negative n gives the empty subset.
        """
        P = self.poset
        if n is None:
            n = self.dim - 1
        if n < 0:
            return Subset(P, 0)
        if sign is None:
            return self.boundary(n, MINUS) | self.boundary(n, PLUS)
        m = self.kfaces(n, sign).closure().mask
        low = self.maximal().mask
        for k in range(min(n - 1, P.dim) + 1):
            for b in _bits(low & P._grade_masks[k]):
                m |= P._cl_mask(b)
        return Subset(P, m)

    def interior(self) -> "Subset":
        return self - self.boundary()

    def extract(self) -> tuple:
        """Standalone poset on a closed subset, with its embedding map.

        Indices are renumbered per grade preserving ambient order.  Cached on
        the ambient poset per mask.
        """
        P = self.poset
        memo = P._cache.setdefault("extract", {})
        hit = memo.get(self.mask)
        if hit is not None:
            return hit
        if not self.is_closed():
            raise StructureError("can only extract a closed subset")
        index = {}
        per_grade: list = []
        for x in self:
            while len(per_grade) <= x.dim:
                per_grade.append([])
            index[x] = len(per_grade[x.dim])
            per_grade[x.dim].append(x)
        grades = []
        for d, xs in enumerate(per_grade):
            row = []
            for x in xs:
                fin, fout = P.grades[x.dim][x.index]
                row.append(
                    (
                        frozenset(index[El(d - 1, j)] for j in fin),
                        frozenset(index[El(d - 1, j)] for j in fout),
                    )
                )
            grades.append(row)
        Q = OgPoset(grades)
        embed = OgMap(Q, P, tuple(tuple(xs) for xs in per_grade))
        memo[self.mask] = (Q, embed)
        return Q, embed


# -- operations mirroring the published interface ---------------------------


def closure(P: OgPoset, els: Iterable[El]) -> Subset:
    """Smallest closed subset containing the given elements."""
    return P.closure(els)


def faces(P: OgPoset, x: El, a: Optional[int] = None) -> frozenset:
    return P.faces(x, a)


def cofaces(P: OgPoset, x: El, a: Optional[int] = None) -> frozenset:
    return P.cofaces(x, a)


def boundary(X, n: Optional[int] = None, sign: Optional[int] = None) -> Subset:
    """n-boundary of a Subset, OgPoset, or anything with a ``.poset``."""
    return _as_subset(X).boundary(n, sign)


def _as_subset(X) -> Subset:
    if isinstance(X, Subset):
        return X
    if isinstance(X, OgPoset):
        return X.whole()
    poset = getattr(X, "poset", None)
    if isinstance(poset, OgPoset):
        return poset.whole()
    raise TypeError(f"cannot interpret {X!r} as a closed subset")


def oriented_hasse(P: OgPoset) -> DirectedGraph:
    """Oriented Hasse diagram: x -> y iff x is an input face of y or y an output face of x."""
    edges = []
    for y in P:
        for x in P.faces(y, MINUS):
            edges.append((x, y))
        for x in P.faces(y, PLUS):
            edges.append((y, x))
    return DirectedGraph(P, edges)


def hasse_edge_kind(a: El, b: El) -> int:
    """Sign of a Hasse edge: MINUS for input (up-going), PLUS for output."""
    return MINUS if a.dim < b.dim else PLUS


# -- morphisms ---------------------------------------------------------------


@dataclass(frozen=True)
class MapReport:
    ok: bool
    reason: Optional[str] = None
    at: Optional[El] = None
    sign: Optional[int] = None

    def __bool__(self):
        return self.ok


class OgMap:
    """A map of oriented graded posets given by per-grade target tables.

    The table may represent an arbitrary assignment; ``validate`` decides
    whether it is a morphism (dimension-preserving with per-sign face
    bijections).
    """

    __slots__ = ("source", "target", "assignment")

    def __init__(self, source: OgPoset, target: OgPoset, assignment: Sequence[Sequence[El]]):
        self.source = source
        self.target = target
        self.assignment = tuple(tuple(El(*y) for y in row) for row in assignment)
        if tuple(len(row) for row in self.assignment) != source.grade_sizes:
            raise StructureError("assignment does not cover the source exactly")
        for row in self.assignment:
            for y in row:
                target.check(y)

    def __call__(self, x: El) -> El:
        x = self.source.check(x)
        return self.assignment[x.dim][x.index]

    def __eq__(self, other):
        return (
            isinstance(other, OgMap)
            and self.source == other.source
            and self.target == other.target
            and self.assignment == other.assignment
        )

    def __hash__(self):
        return hash((self.source, self.target, self.assignment))

    def __repr__(self):
        return f"OgMap({self.source!r} -> {self.target!r})"

    def image(self, U: Optional[Subset] = None) -> Subset:
        if U is None:
            U = self.source.whole()
        return self.target.subset(self(x) for x in U)

    def validate(self) -> MapReport:
        for x in self.source:
            y = self(x)
            if y.dim != x.dim:
                return MapReport(False, "dimension not preserved", x)
            for a in SIGNS:
                fx = self.source.faces(x, a)
                fy = self.target.faces(y, a)
                sent = {self(z) for z in fx}
                if len(sent) != len(fx) or sent != fy:
                    return MapReport(False, "faces do not map bijectively", x, a)
        return MapReport(True)

    def is_valid(self) -> bool:
        return self.validate().ok

    def is_injective(self) -> bool:
        seen = set()
        for row in self.assignment:
            for y in row:
                if y in seen:
                    return False
                seen.add(y)
        return True

    def is_inclusion(self) -> bool:
        return self.is_valid() and self.is_injective()

    def is_isomorphism(self) -> bool:
        return self.is_inclusion() and self.source.grade_sizes == self.target.grade_sizes

    def compose(self, other: "OgMap") -> "OgMap":
        """self after other."""
        if other.target != self.source:
            raise StructureError("maps are not composable")
        return OgMap(
            other.source,
            self.target,
            tuple(tuple(self(y) for y in row) for row in other.assignment),
        )

    def inverse(self) -> "OgMap":
        if not self.is_isomorphism():
            raise StructureError("only isomorphisms can be inverted")
        table: list = [[None] * len(g) for g in self.target.grades]
        for x in self.source:
            y = self(x)
            table[y.dim][y.index] = x
        return OgMap(self.target, self.source, table)

    def restrict(self, U: Subset) -> tuple:
        """Restriction to a closed subset of the source.

        Returns ``(g, embed)`` where ``embed: extracted(U) -> source`` and
        ``g = self . embed``.
        """
        sub, embed = U.extract()
        return self.compose(embed), embed


def identity(P: OgPoset) -> OgMap:
    return OgMap(P, P, tuple(tuple(El(d, i) for i in range(len(g))) for d, g in enumerate(P.grades)))


def validate_morphism(f: OgMap) -> MapReport:
    return f.validate()


def is_inclusion(f: OgMap) -> bool:
    return f.is_inclusion()


def image(f: OgMap, U: Subset) -> Subset:
    return f.image(U)


# -- isomorphism search ------------------------------------------------------


def _wl_colours(P: OgPoset, Q: OgPoset, rounds: int = 4) -> tuple:
    """Iterated neighbourhood refinement, interned jointly over both posets
    so that colour ids agree across them."""

    def initial(R: OgPoset) -> list:
        return [(x.dim, len(R.grades[x.dim][x.index][0]), len(R.grades[x.dim][x.index][1])) for x in R]

    def step(R: OgPoset, colours: list) -> list:
        sigs = []
        for x in R:
            b = R.bit(x)
            fin, fout = R.grades[x.dim][x.index]
            below = R.offsets[x.dim - 1] if x.dim > 0 else 0
            sigs.append(
                (
                    colours[b],
                    tuple(sorted(colours[below + j] for j in fin)),
                    tuple(sorted(colours[below + j] for j in fout)),
                    tuple(sorted(colours[i] for i in _bits(R._cof_bits[0][b]))),
                    tuple(sorted(colours[i] for i in _bits(R._cof_bits[1][b]))),
                )
            )
        return sigs

    cp, cq = _intern(initial(P), initial(Q))
    for _ in range(rounds):
        rp, rq = _intern(step(P, cp), step(Q, cq))
        if rp == cp and rq == cq:
            break
        cp, cq = rp, rq
    return cp, cq


def _intern(first: list, second: list) -> tuple:
    table: dict = {}
    out = []
    for values in (first, second):
        out.append([table.setdefault(v, len(table)) for v in values])
    return tuple(out)


def find_isos(P: OgPoset, Q: OgPoset, limit: Optional[int] = None, pair_ok=None) -> list:
    """Isomorphisms P -> Q by colour-refined backtracking.

    ``pair_ok(x, y)`` can impose extra per-element constraints (used for
    slice-category equality, where the maps into the base must agree).
    Stops after ``limit`` isomorphisms when given.
    """
    if P.grade_sizes != Q.grade_sizes:
        return []
    cp, cq = _wl_colours(P, Q)
    if sorted(cp) != sorted(cq):
        return []
    by_colour: dict = {}
    for y in Q:
        by_colour.setdefault((y.dim, cq[Q.bit(y)]), []).append(y)
    candidates = {}
    for x in P:
        cand = [y for y in by_colour.get((x.dim, cp[P.bit(x)]), ())]
        if pair_ok is not None:
            cand = [y for y in cand if pair_ok(x, y)]
        if not cand:
            return []
        candidates[x] = cand
    order = sorted(P, key=lambda x: (len(candidates[x]), -x.dim, x.index))
    assign: dict = {}
    used: set = set()
    found: list = []

    def compatible(x: El, y: El) -> bool:
        for a in SIGNS:
            for z in P.faces(x, a):
                w = assign.get(z)
                if w is not None and w not in Q.faces(y, a):
                    return False
            for z in P.cofaces(x, a):
                w = assign.get(z)
                if w is not None and y not in Q.faces(w, a):
                    return False
        return True

    def rec(i: int):
        if i == len(order):
            table: list = [[None] * n for n in P.grade_sizes]
            for x, y in assign.items():
                table[x.dim][x.index] = y
            found.append(OgMap(P, Q, table))
            return
        x = order[i]
        for y in candidates[x]:
            if y in used or not compatible(x, y):
                continue
            assign[x] = y
            used.add(y)
            rec(i + 1)
            del assign[x]
            used.discard(y)
            if limit is not None and len(found) >= limit:
                return

    rec(0)
    return found


# -- augmentation ------------------------------------------------------------


def augment(P: OgPoset) -> OgPoset:
    """Adjoin a positive least element below everything.

    All grades shift up by one; each former 0-dimensional element acquires the
    new least element as its single output face, making every coface of the
    least element positive.
    """
    grades: list = [[(frozenset(), frozenset())]]
    if P.dim >= 0:
        grades.append([(frozenset(), frozenset({0})) for _ in range(P.grade_size(0))])
    for d in range(1, P.dim + 1):
        grades.append(list(P.grades[d]))
    return OgPoset(grades, name=P.name)


def has_positive_least(P: OgPoset) -> bool:
    if P.grade_size(0) != 1 or P.size == 0:
        return False
    return all(not fin and fout == {0} for fin, fout in P.grades[1]) if P.dim >= 1 else True


def diminish(P: OgPoset) -> OgPoset:
    """Remove a positive least element, shifting all grades down by one."""
    if not has_positive_least(P):
        raise StructureError("poset has no positive least element")
    grades: list = []
    if P.dim >= 1:
        grades.append([(frozenset(), frozenset()) for _ in range(P.grade_size(1))])
    for d in range(2, P.dim + 1):
        grades.append(list(P.grades[d]))
    return OgPoset(grades, name=P.name)


def is_oriented_thin(P: OgPoset) -> bool:
    """Check the diamond property on all codimension-2 intervals.

    Every interval [x, y] with dim y - dim x = 2 must contain exactly two
    intermediate elements, and the product of the four incidence signs around
    the diamond must be -1.
    """
    for d in range(2, P.dim + 1):
        for i in range(P.grade_size(d)):
            y = El(d, i)
            seen: dict = {}
            for a in SIGNS:
                for z in P.faces(y, a):
                    for b in SIGNS:
                        for x in P.faces(z, b):
                            seen.setdefault(x, []).append(a * b)
            for x, signs in seen.items():
                if len(signs) != 2 or signs[0] * signs[1] != -1:
                    return False
    return True
