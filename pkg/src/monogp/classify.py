"""Perfect pairs, perfect paths and the Gorenstein-projective classification.

Orientation reminder: for a pair ``(p, q)`` the product ``pq`` walks ``q``
first, so ``pq`` is ``q.then(p)`` here.  A pair is perfect when ``pq`` is a
minimal relation, ``q`` is the only minimal right annihilator of ``p`` and ``p``
the only minimal left annihilator of ``q``.  Perfect paths are the paths lying
on a cycle of the resulting partner map; their cyclic modules ``Ap`` are, up to
isomorphism, exactly the indecomposable non-projective Gorenstein-projective
modules.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from .algebra import (
    MonomialAlgebra,
    left_min_annihilators,
    right_min_annihilators,
)
from .errors import NotApplicable, PreconditionError
from .quiver import Path, concat


class Verdict(str, enum.Enum):
    PROJECTIVE = "Projective"
    GORENSTEIN_NON_PROJECTIVE = "GorensteinNonProjective"
    NOT_GP = "NotGP"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PerfectPair:
    p: Path
    q: Path


@dataclass(frozen=True)
class RelationCycle:
    """``paths[i]`` and ``paths[i+1]`` (cyclically) form perfect pairs."""

    paths: tuple

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    @classmethod
    def canonical(cls, paths):
        paths = list(paths)
        i = paths.index(min(paths))
        return cls(tuple(paths[i:] + paths[:i]))


@dataclass(frozen=True)
class GPEntry:
    perfect_path: Path
    cycle: RelationCycle
    top_vertex: object
    dim_vector: dict
    syzygy: Path  # Omega(A p) is A syzygy


@dataclass
class GPClassification:
    entries: list = field(default_factory=list)
    cycles: list = field(default_factory=list)

    @property
    def perfect_paths(self):
        return [e.perfect_path for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def entry(self, p: Path) -> GPEntry:
        for e in self.entries:
            if e.perfect_path == p:
                return e
        raise KeyError(p)


def _check_pair(A, p, q):
    for x in (p, q):
        A.quiver.check_path(x)
        if x.is_trivial or not A.nonzero(x):
            raise PreconditionError("%s must be a nonzero nontrivial path" % (x,))
    if p.source != q.target:
        raise PreconditionError("a pair (p, q) needs s(p) == t(q)")


def _has_relation_prefix(A, w):
    return any(w.startswith(r) for r in A.F)


def _has_relation_suffix(A, w):
    return any(w.endswith(r) for r in A.F)


def is_perfect_pair(A: MonomialAlgebra, p: Path, q: Path) -> bool:
    """Decide perfection of ``(p, q)`` by the relation-factor criterion.

    The product ``pq`` must be a minimal relation; any ``q'`` into s(p) for which
    ``p q'`` begins (walk-wise) with a relation must end with ``q``; any ``p'``
    out of t(q) for which ``p' q`` ends with a relation must begin with ``p``.
    """
    _check_pair(A, p, q)
    if not A.is_relation(concat(p, q)):
        return False
    for q2 in A.paths_to(p.source):
        if _has_relation_prefix(A, q2.then(p)) and not q2.endswith(q):
            return False
    for p2 in A.paths_from(q.target):
        if _has_relation_suffix(A, q.then(p2)) and not p2.startswith(p):
            return False
    return True


def is_perfect_pair_direct(A: MonomialAlgebra, p: Path, q: Path) -> bool:
    """The defining conditions: pq = 0, R(p) = {q}, L(q) = {p}."""
    _check_pair(A, p, q)
    if A.nonzero(q.then(p)):
        return False
    return right_min_annihilators(A, p) == [q] and left_min_annihilators(A, q) == [p]


def successor(A: MonomialAlgebra, p: Path):
    """The unique ``q`` with ``(p, q)`` perfect, or None."""
    A.quiver.check_path(p)
    if p.is_trivial or not A.nonzero(p):
        raise PreconditionError("%s must be a nonzero nontrivial path" % (p,))
    cache = A._cache.setdefault("succ", {})
    if p in cache:
        return cache[p]
    found = None
    n = p.length
    for r in A.F:
        if r.length > n and r.endswith(p):
            q = r.prefix(r.length - n)
            if is_perfect_pair(A, p, q):
                found = q
                break
    cache[p] = found
    return found


def perfect_pairs(A: MonomialAlgebra) -> list:
    """Every perfect pair; each comes from splitting a minimal relation in two."""
    pairs = []
    for r in A.F:
        for i in range(1, r.length):
            q, p = r.prefix(i), r.suffix(r.length - i)
            if is_perfect_pair(A, p, q):
                pairs.append(PerfectPair(p, q))
    pairs.sort(key=lambda pq: (pq.p, pq.q))
    return pairs


def _candidates(A):
    return sorted({r.suffix(k) for r in A.F for k in range(1, r.length)})


def dim_vector(A: MonomialAlgebra, p: Path) -> dict:
    """Per-vertex dimensions of ``Ap``."""
    counts = Counter(x.target for x in A.left_ideal_basis(p))
    return {v: counts.get(v, 0) for v in A.quiver.vertices}


def perfect_paths(A: MonomialAlgebra) -> GPClassification:
    succ = {c: successor(A, c) for c in _candidates(A)}
    cycles = []
    on_cycle = set()
    for start in succ:
        if start in on_cycle:
            continue
        seen = [start]
        cur = succ[start]
        while cur is not None and cur != start and cur not in seen and cur in succ:
            seen.append(cur)
            cur = succ[cur]
        if cur == start:
            cycles.append(RelationCycle.canonical(seen))
            on_cycle.update(seen)
    cycles.sort(key=lambda c: c.paths[0])
    pred = {}
    for c in cycles:
        n = len(c)
        for i, x in enumerate(c.paths):
            pred[x] = c.paths[(i - 1) % n]
    entries = []
    for c in cycles:
        for x in c.paths:
            entries.append(GPEntry(x, c, x.target, dim_vector(A, x), pred[x]))
    entries.sort(key=lambda e: e.perfect_path)
    return GPClassification(entries, cycles)


def _perfect_set(A):
    if "perfect" not in A._cache:
        A._cache["perfect"] = frozenset(perfect_paths(A).perfect_paths)
    return A._cache["perfect"]


def is_perfect(A: MonomialAlgebra, p: Path) -> bool:
    return p in _perfect_set(A)


def syzygy(A: MonomialAlgebra, p: Path) -> list:
    """Paths ``q`` with Omega(Ap) = sum of Aq; empty when Ap is projective."""
    return left_min_annihilators(A, p)


def is_gp_cyclic(A: MonomialAlgebra, p: Path) -> Verdict:
    A.quiver.check_path(p)
    if not A.nonzero(p):
        raise PreconditionError("%s is zero in the algebra" % (p,))
    if p.is_trivial:
        return Verdict.PROJECTIVE
    L = left_min_annihilators(A, p)
    if not L:
        return Verdict.PROJECTIVE
    if len(L) == 1 and is_perfect(A, L[0]):
        return Verdict.GORENSTEIN_NON_PROJECTIVE
    return Verdict.NOT_GP


def stable_hom_dim(A: MonomialAlgebra, a: Path, b: Path) -> int:
    """dim of the stable Hom from Aa to Ab, for a perfect path ``a``.

    Counts basis paths in aA ∩ Ab that are not in aAb.  Only valid when the
    comparison map aA -> Hom(Aa, A) is bijective, which holds for perfect ``a``;
    anything else raises NotApplicable.
    """
    A.quiver.check_path(a)
    A.quiver.check_path(b)
    if not A.nonzero(b):
        raise PreconditionError("%s is zero in the algebra" % (b,))
    if not is_perfect(A, a):
        raise NotApplicable("%s is not a perfect path" % (a,))
    both = [x for x in A.left_ideal_basis(b) if x.endswith(a)]
    inside = [x for x in both if x.length >= a.length + b.length]
    return len(both) - len(inside)


@dataclass(frozen=True)
class Overlap:
    kind: str  # "O1" or "O2"
    p: Path
    q: Path
    factor: Path
    witness: Path


def find_overlaps(A: MonomialAlgebra) -> list:
    """Pairs of perfect paths sharing a factor ``x`` (a walk-wise prefix of ``p``
    and suffix of ``q``) whose glued path is still nonzero."""
    perfect = perfect_paths(A).perfect_paths
    found = []
    for p in perfect:
        for q in perfect:
            same = p == q
            top = p.length - 1 if same else min(p.length, q.length)
            for k in range(1, top + 1):
                if same and k >= q.length:
                    break
                x = p.prefix(k)
                if not q.endswith(x):
                    continue
                glued = q.then(p.suffix(p.length - k))
                if A.nonzero(glued):
                    found.append(Overlap("O1" if same else "O2", p, q, x, glued))
    found.sort(key=lambda o: (o.p, o.q, o.factor))
    return found


@dataclass(frozen=True)
class StableShape:
    cycle_lengths: tuple
    semisimple: bool


def stable_category_shape(A: MonomialAlgebra) -> StableShape:
    """Cycle lengths d_1..d_m; when ``semisimple`` the stable category of
    Gorenstein-projectives is T_{d_1} x ... x T_{d_m}."""
    lengths = tuple(sorted(len(c) for c in perfect_paths(A).cycles))
    return StableShape(lengths, not find_overlaps(A))
