"""Seeded random generation of small molecules.

Grows a pool from the point by randomly applying the constructors (pasting,
rewrite) and the stability operations (suspension, Gray product, duals).
Pairs for pasting and rewriting are found by matching boundary fingerprints
inside the pool, falling back to self-rewrites which are always defined on
round molecules.  Everything is driven by one ``random.Random`` seed and is
deterministic; sizes stay small so that exhaustive downstream checks
(submolecule enumeration, layering counts) remain fast.
"""

from __future__ import annotations

import random
from typing import Optional

from .constructions import dual, gray, suspension
from .core import CompositionError, OgPoset, StructureError
from .molecule import Molecule, as_molecule, atom, is_round, paste, point, recognise


def _fingerprint(P: OgPoset, mask: int) -> tuple:
    from .core import Subset

    U = Subset(P, mask)
    sub, _ = U.extract()
    return sub.grade_sizes


class MoleculeSampler:
    """Pool-based sampler; ``take(n)`` returns n distinct-by-construction molecules."""

    def __init__(self, seed: int = 0, max_dim: int = 3, max_size: int = 26, max_tops: int = 4):
        self.rng = random.Random(seed)
        self.max_dim = max_dim
        self.max_size = max_size
        self.max_tops = max_tops
        self.pool = [point(), as_molecule(_arrow()), as_molecule(_arrow())]

    def _admissible(self, M: Molecule) -> bool:
        if M.dim > self.max_dim or M.poset.size > self.max_size:
            return False
        tops = M.poset.whole().maximal()
        return len(tops) <= self.max_tops

    def _try_paste(self) -> Optional[Molecule]:
        rng = self.rng
        for _ in range(8):
            U = rng.choice(self.pool)
            if U.dim < 1:
                continue
            k = rng.randrange(0, U.dim)
            out_fp = _fingerprint(U.poset, U.poset.whole().boundary(k, 1).mask)
            candidates = [
                V
                for V in self.pool
                if V.dim > k and _fingerprint(V.poset, V.poset.whole().boundary(k, -1).mask) == out_fp
            ]
            rng.shuffle(candidates)
            for V in candidates[:4]:
                try:
                    M = paste(U, V, k)
                except (CompositionError, StructureError):
                    continue
                if self._admissible(M):
                    return M
        return None

    def _try_atom(self) -> Optional[Molecule]:
        rng = self.rng
        rounds = [M for M in self.pool if M.dim < self.max_dim and is_round(M.poset)]
        if not rounds:
            return None
        for _ in range(8):
            U = rng.choice(rounds)
            fp = U.poset.grade_sizes
            candidates = [V for V in rounds if V.poset.grade_sizes == fp and V.dim == U.dim]
            rng.shuffle(candidates)
            for V in candidates[:3] + [U]:
                try:
                    M = atom(U, V)
                except (CompositionError, StructureError):
                    continue
                if self._admissible(M):
                    return M
        return None

    def _try_unary(self) -> Optional[Molecule]:
        rng = self.rng
        U = rng.choice(self.pool)
        op = rng.choice(["susp", "gray", "dual"])
        try:
            if op == "susp":
                Q = suspension(U.poset)
            elif op == "gray":
                V = rng.choice(self.pool)
                if U.dim + V.dim > self.max_dim:
                    return None
                Q = gray(U.poset, V.poset)
            else:
                J = [j for j in range(1, self.max_dim + 1) if rng.random() < 0.5]
                if not J:
                    return None
                Q = dual(U.poset, J)
        except (CompositionError, StructureError):
            return None
        if Q.size == 0 or Q.size > self.max_size or Q.dim > self.max_dim:
            return None
        if recognise(Q) is None:
            raise StructureError(f"{op} of a molecule was not recognised as a molecule")
        M = as_molecule(Q)
        return M if self._admissible(M) else None

    def grow(self) -> Molecule:
        while True:
            op = self.rng.choices(["paste", "atom", "unary"], weights=[5, 3, 3])[0]
            M = {"paste": self._try_paste, "atom": self._try_atom, "unary": self._try_unary}[op]()
            if M is not None:
                self.pool.append(M)
                return M

    def take(self, n: int) -> list:
        return [self.grow() for _ in range(n)]


def _arrow() -> OgPoset:
    return OgPoset([[((), ()), ((), ())], [((0,), (1,))]], name="arrow")


def random_molecules(count: int = 200, seed: int = 0, max_dim: int = 3, max_size: int = 26) -> list:
    """Deterministic list of ``count`` molecules of dimension <= max_dim."""
    sampler = MoleculeSampler(seed=seed, max_dim=max_dim, max_size=max_size)
    return sampler.take(count)
