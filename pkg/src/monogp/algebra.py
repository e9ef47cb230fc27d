"""Monomial algebras kQ/I given by a set of forbidden paths.

A path is *nonzero* when it contains no minimal relation as a factor; the
nonzero paths form a basis.  Membership is decided by an Aho-Corasick style
automaton over the arrow alphabet whose states remember the longest suffix of
the walk that is still a proper prefix of some relation.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyQuiver, NotAdmissible, PreconditionError
from .quiver import Path, Quiver, is_subpath

DEAD = None


@dataclass(frozen=True)
class MonomialPresentation:
    quiver: Quiver
    generators: tuple

    def __post_init__(self):
        seen = []
        for g in self.generators:
            self.quiver.check_path(g)
            if g.length < 2:
                raise PreconditionError("relation %s has length < 2" % (g,))
            if g not in seen:
                seen.append(g)
        object.__setattr__(self, "generators", tuple(seen))

    @classmethod
    def from_words(cls, quiver: Quiver, words: Iterable):
        """Relations as arrow-name sequences in traversal order (or strings
        like ``"a b a"``)."""
        gens = []
        for w in words:
            if isinstance(w, str):
                w = w.split()
            gens.append(quiver.path(w))
        return cls(quiver, tuple(gens))


def minimal_relations(gens: Iterable[Path]) -> list:
    """Drop every generator that has another generator as a proper factor."""
    gens = sorted(set(gens))
    return [g for g in gens if not any(h != g and is_subpath(h, g) for h in gens)]


class AvoidanceAutomaton:
    """Deterministic automaton accepting exactly the paths that avoid ``F``.

    A live state is ``(vertex, u)`` where ``u`` is the longest suffix of the
    walk so far that is a proper prefix of a relation.  Walks that complete a
    relation go to :data:`DEAD`.
    """

    def __init__(self, quiver: Quiver, relations: Iterable[Path]):
        self.quiver = quiver
        self.relations = {r.arrows for r in relations}
        self._prefixes = {r[:i] for r in self.relations for i in range(1, len(r))}
        self._lengths = sorted({len(r) for r in self.relations})
        self.roots = {v: (v, ()) for v in quiver.vertices}
        self.transitions = {}
        todo = list(self.roots.values())
        seen = set(todo)
        while todo:
            state = todo.pop()
            v, u = state
            for a in quiver.out_arrows(v):
                nxt = self._step(u, a)
                self.transitions[state, a] = nxt
                if nxt is not DEAD and nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        self.states = seen

    def _step(self, u, a):
        w = u + (a,)
        for n in self._lengths:
            if n > len(w):
                break
            if w[-n:] in self.relations:
                return DEAD
        for i in range(len(w)):
            if w[i:] in self._prefixes:
                return (self.quiver.target_of(a), w[i:])
        return (self.quiver.target_of(a), ())

    def run(self, p: Path, state=None):
        """Final state after reading ``p`` (``DEAD`` if a relation occurred)."""
        if state is None:
            state = self.roots[p.source]
        for a in p.arrows:
            state = self.transitions.get((state, a), DEAD)
            if state is DEAD:
                return DEAD
        return state

    def accepts(self, p: Path) -> bool:
        return self.run(p) is not DEAD

    def live_cycle(self):
        """Arrow labels of a cycle among live states, or None."""
        colour = {}
        for root in self.roots.values():
            if root in colour:
                continue
            # iterative DFS keeping the arrow stack for the witness
            stack = [(root, iter(self.quiver.out_arrows(root[0])))]
            labels = []
            colour[root] = 1
            on_stack = [root]
            while stack:
                state, it = stack[-1]
                for a in it:
                    nxt = self.transitions[state, a]
                    if nxt is DEAD:
                        continue
                    if colour.get(nxt) == 1:
                        start = on_stack.index(nxt)
                        return labels[start:] + [a]
                    if nxt not in colour:
                        colour[nxt] = 1
                        labels.append(a)
                        on_stack.append(nxt)
                        stack.append((nxt, iter(self.quiver.out_arrows(nxt[0]))))
                        break
                else:
                    colour[state] = 2
                    stack.pop()
                    on_stack.pop()
                    if labels:
                        labels.pop()
        return None

    def enumerate(self):
        """All accepted paths.  Only terminates when there is no live cycle."""
        out = []
        for v, root in self.roots.items():
            stack = [(self.quiver.trivial(v), root)]
            while stack:
                p, state = stack.pop()
                out.append(p)
                for a in self.quiver.out_arrows(p.target):
                    nxt = self.transitions[state, a]
                    if nxt is not DEAD:
                        stack.append((self.quiver.extend(p, a), nxt))
        return out


class MonomialAlgebra:
    """A finite-dimensional monomial algebra with its basis of nonzero paths.

    Build instances with :func:`build_algebra`.
    """

    def __init__(self, presentation, relations, automaton, basis):
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.F = tuple(relations)
        self.automaton = automaton
        self.basis = tuple(basis)
        self._basis_set = frozenset(self.basis)
        self._from = defaultdict(list)
        self._to = defaultdict(list)
        for p in self.basis:
            self._from[p.source].append(p)
            self._to[p.target].append(p)
        self._F_set = frozenset(self.F)
        self._L = {}
        self._R = {}
        self._cache = {}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __repr__(self):
        return "MonomialAlgebra(%d vertices, %d arrows, |F|=%d, dim=%d)" % (
            len(self.quiver.vertices), len(self.quiver.arrow_names), len(self.F), self.dimension,
        )

    @property
    def is_quadratic(self) -> bool:
        return all(r.length == 2 for r in self.F)

    def is_relation(self, p: Path) -> bool:
        return p in self._F_set

    def nonzero(self, p: Path) -> bool:
        """Fast membership test for an already validated path."""
        return p in self._basis_set

    def paths_from(self, v) -> list:
        return self._from[v]

    def paths_to(self, v) -> list:
        return self._to[v]

    def nontrivial_basis(self) -> list:
        return [p for p in self.basis if p.arrows]

    def projective_dimensions(self) -> dict:
        """dim P_i = number of basis paths starting at i."""
        return {v: len(self._from[v]) for v in self.quiver.vertices}

    def left_ideal_basis(self, p: Path) -> list:
        """Basis of ``Ap``: nonzero paths that begin by walking ``p``."""
        return [x for x in self._from[p.source] if x.startswith(p)]

    def right_ideal_basis(self, p: Path) -> list:
        """Basis of ``pA``: nonzero paths that end by walking ``p``."""
        return [x for x in self._to[p.target] if x.endswith(p)]


def build_algebra(pres: MonomialPresentation) -> MonomialAlgebra:
    if not pres.quiver.vertices:
        raise EmptyQuiver("the quiver has no vertices")
    F = minimal_relations(pres.generators)
    auto = AvoidanceAutomaton(pres.quiver, F)
    cycle = auto.live_cycle()
    if cycle is not None:
        raise NotAdmissible(cycle)
    basis = sorted(auto.enumerate())
    return MonomialAlgebra(pres, F, auto, basis)


def algebra_from_words(vertices, arrows, relations) -> MonomialAlgebra:
    """Shorthand: ``algebra_from_words([1, 2], [("a", 1, 2), ...], ["a b"])``."""
    Q = Quiver(vertices, arrows)
    return build_algebra(MonomialPresentation.from_words(Q, relations))


def truncated_algebra(quiver: Quiver, d: int) -> MonomialAlgebra:
    """kQ/J^d: every path of length ``d`` is a relation."""
    if d < 2:
        raise PreconditionError("truncation degree must be at least 2")
    gens = tuple(quiver.paths_of_length(d))
    return build_algebra(MonomialPresentation(quiver, gens))


def is_nonzero(A: MonomialAlgebra, p: Path) -> bool:
    A.quiver.check_path(p)
    return A.automaton.accepts(p)


def _check_nonzero_nontrivial(A, p):
    A.quiver.check_path(p)
    if p.is_trivial:
        raise PreconditionError("%s is trivial" % (p,))
    if not A.nonzero(p):
        raise PreconditionError("%s is zero in the algebra" % (p,))


def left_min_annihilators(A: MonomialAlgebra, p: Path) -> list:
    """L(p): the shortest continuations ``q`` after ``p`` with ``p`` then ``q`` zero.

    Each ``q`` is itself nonzero, starts at t(p), and no proper initial piece
    of ``q`` already kills ``p``.
    """
    _check_nonzero_nontrivial(A, p)
    if p in A._L:
        return list(A._L[p])
    Q = A.quiver
    found = []
    stack = [Q.trivial(p.target)]
    while stack:
        q = stack.pop()
        for a in Q.out_arrows(q.target):
            q2 = Q.extend(q, a)
            if not A.nonzero(q2):
                continue
            if A.nonzero(p.then(q2)):
                stack.append(q2)
            else:
                found.append(q2)
    found.sort()
    A._L[p] = tuple(found)
    return found


def right_min_annihilators(A: MonomialAlgebra, p: Path) -> list:
    """R(p): the shortest lead-ins ``q`` before ``p`` with ``q`` then ``p`` zero."""
    _check_nonzero_nontrivial(A, p)
    if p in A._R:
        return list(A._R[p])
    Q = A.quiver
    found = []
    stack = [Q.trivial(p.source)]
    while stack:
        q = stack.pop()
        for a in Q.in_arrows(q.source):
            q2 = Q.prepend(a, q)
            if not A.nonzero(q2):
                continue
            if A.nonzero(q2.then(p)):
                stack.append(q2)
            else:
                found.append(q2)
    found.sort()
    A._R[p] = tuple(found)
    return found

