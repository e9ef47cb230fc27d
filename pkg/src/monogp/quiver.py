"""Finite quivers and paths.

Paths are stored in *traversal order*: ``("a", "b")`` first walks along ``a``
and then along ``b``.  Algebra texts usually write composition right to left,
so the path written ``ba`` there is ``("a", "b")`` here.  :func:`concat` keeps
the right-to-left convention (``concat(p, q)`` is "p after q"); everything
else in the package, including all printed output, uses traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Sequence

from .errors import CompositionError, DomainError


def vertex_key(v):
    """Sort key for opaque vertex tokens: numerals numerically, then the rest."""
    if isinstance(v, int):
        return (0, v, "")
    s = str(v)
    if s.isdigit():
        return (0, int(s), "")
    return (1, 0, s)


@total_ordering
@dataclass(frozen=True)
class Path:
    """A path: ``arrows`` in traversal order and the ``len(arrows) + 1``
    vertices it visits.  A trivial path has no arrows and one vertex."""

    arrows: tuple
    vertices: tuple

    @property
    def source(self):
        return self.vertices[0]

    @property
    def target(self):
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self):
        """Length, then arrow names, then source vertex (for trivial paths)."""
        return (len(self.arrows), self.arrows, vertex_key(self.source))

    def __lt__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def then(self, other: "Path") -> "Path":
        """Walk ``self`` and afterwards ``other``."""
        if self.target != other.source:
            raise CompositionError(
                "cannot follow %s (ends at %s) by %s (starts at %s)"
                % (self, self.target, other, other.source)
            )
        return Path(self.arrows + other.arrows, self.vertices + other.vertices[1:])

    def factor(self, start: int, stop: int) -> "Path":
        """The subpath made of arrows ``start .. stop-1``."""
        return Path(self.arrows[start:stop], self.vertices[start:stop + 1])

    def prefix(self, n: int) -> "Path":
        return self.factor(0, n)

    def suffix(self, n: int) -> "Path":
        m = len(self.arrows)
        return self.factor(m - n, m)

    def startswith(self, other: "Path") -> bool:
        n = len(other.arrows)
        return self.source == other.source and self.arrows[:n] == other.arrows

    def endswith(self, other: "Path") -> bool:
        n = len(other.arrows)
        if self.target != other.target:
            return False
        return n == 0 or self.arrows[-n:] == other.arrows

    def label(self) -> str:
        if not self.arrows:
            return "e_%s" % (self.source,)
        return " ".join(str(a) for a in self.arrows)

    def __str__(self):
        return self.label()

    def __repr__(self):
        return "Path(%r)" % self.label()


class Quiver:
    """A finite quiver; loops and parallel arrows are allowed.

    >>> Q = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])
    >>> Q.path(["a", "b"]).target
    1
    """

    def __init__(self, vertices: Iterable, arrows: Iterable[Sequence]):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise DomainError("duplicate vertex identifiers")
        vset = set(self.vertices)
        self._arrows = {}
        for name, s, t in arrows:
            if name in self._arrows:
                raise DomainError("duplicate arrow identifier %r" % (name,))
            if s not in vset or t not in vset:
                raise DomainError("arrow %r joins undeclared vertices" % (name,))
            self._arrows[name] = (s, t)
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for name, (s, t) in self._arrows.items():
            self._out[s].append(name)
            self._in[t].append(name)
        self._index = {v: i for i, v in enumerate(self.vertices)}

    @property
    def arrows(self):
        """``(name, source, target)`` triples in declaration order."""
        return [(a, s, t) for a, (s, t) in self._arrows.items()]

    @property
    def arrow_names(self):
        return list(self._arrows)

    def __contains__(self, arrow):
        return arrow in self._arrows

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self._arrows == other._arrows

    def __hash__(self):
        return hash((self.vertices, tuple(self._arrows.items())))

    def __repr__(self):
        return "Quiver(%d vertices, %d arrows)" % (len(self.vertices), len(self._arrows))

    def vertex_index(self, v) -> int:
        return self._index[v]

    def has_vertex(self, v) -> bool:
        return v in self._index

    def source_of(self, arrow):
        try:
            return self._arrows[arrow][0]
        except KeyError:
            raise DomainError("unknown arrow %r" % (arrow,)) from None

    def target_of(self, arrow):
        try:
            return self._arrows[arrow][1]
        except KeyError:
            raise DomainError("unknown arrow %r" % (arrow,)) from None

    def out_arrows(self, v):
        return self._out[v]

    def in_arrows(self, v):
        return self._in[v]

    def trivial(self, v) -> Path:
        if v not in self._index:
            raise DomainError("unknown vertex %r" % (v,))
        return Path((), (v,))

    def arrow(self, name) -> Path:
        s, t = self.source_of(name), self.target_of(name)
        return Path((name,), (s, t))

    def path(self, arrows: Sequence) -> Path:
        """Build a nontrivial path from arrow names in traversal order."""
        arrows = tuple(arrows)
        if not arrows:
            raise CompositionError("use Quiver.trivial for paths of length zero")
        verts = [self.source_of(arrows[0])]
        for a in arrows:
            if self.source_of(a) != verts[-1]:
                raise CompositionError(
                    "arrow %r does not start where %r ends" % (a, arrows[len(verts) - 2])
                )
            verts.append(self._arrows[a][1])
        return Path(arrows, tuple(verts))

    def extend(self, p: Path, arrow) -> Path:
        """``p`` followed by a single arrow (no composability re-check of ``p``)."""
        s, t = self._arrows[arrow]
        if s != p.target:
            raise CompositionError("arrow %r does not start at %s" % (arrow, p.target))
        return Path(p.arrows + (arrow,), p.vertices + (t,))

    def prepend(self, arrow, p: Path) -> Path:
        """A single arrow followed by ``p``."""
        s, t = self._arrows[arrow]
        if t != p.source:
            raise CompositionError("arrow %r does not end at %s" % (arrow, p.source))
        return Path((arrow,) + p.arrows, (s,) + p.vertices)

    def check_path(self, p: Path) -> None:
        """Raise DomainError unless ``p`` is a genuine path of this quiver."""
        if p.is_trivial:
            if len(p.vertices) != 1 or p.source not in self._index:
                raise DomainError("%r is not a trivial path of this quiver" % (p,))
            return
        try:
            q = self.path(p.arrows)
        except CompositionError as exc:
            raise DomainError(str(exc)) from None
        if q != p:
            raise DomainError("%r has inconsistent vertices" % (p,))

    def paths_of_length(self, n: int) -> Iterator[Path]:
        """All paths of length ``n``.  Exponential; meant for small quivers."""
        frontier = [self.trivial(v) for v in self.vertices]
        for _ in range(n):
            frontier = [self.extend(p, a) for p in frontier for a in self._out[p.target]]
        return iter(frontier)

    def is_basic_cycle(self) -> bool:
        n = len(self.vertices)
        if n == 0 or len(self._arrows) != n:
            return False
        if any(len(self._out[v]) != 1 or len(self._in[v]) != 1 for v in self.vertices):
            return False
        seen, v = set(), self.vertices[0]
        while v not in seen:
            seen.add(v)
            v = self._arrows[self._out[v][0]][1]
        return len(seen) == n

    def has_sources_or_sinks(self) -> bool:
        return any(not self._out[v] or not self._in[v] for v in self.vertices)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = self.vertices[0]
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            nbrs = [self._arrows[a][1] for a in self._out[v]]
            nbrs += [self._arrows[a][0] for a in self._in[v]]
            for w in nbrs:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def concat(p: Path, q: Path) -> Path:
    """The product ``pq``: walk ``q`` first, then ``p``.  Requires s(p) = t(q).

    >>> Q = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])
    >>> concat(Q.arrow("b"), Q.arrow("a")).label()
    'a b'
    """
    if p.source != q.target:
        raise CompositionError(
            "concat(p, q) needs s(p) == t(q); got s(p)=%s, t(q)=%s" % (p.source, q.target)
        )
    return q.then(p)


def is_subpath(q: Path, p: Path) -> bool:
    """True iff ``q`` occurs as a contiguous factor of ``p``."""
    if q.is_trivial:
        return q.source in p.vertices
    n, m = len(q.arrows), len(p.arrows)
    return any(
        p.arrows[i:i + n] == q.arrows and p.vertices[i] == q.source
        for i in range(m - n + 1)
    )


def subpaths(p: Path) -> set:
    """Every subpath of ``p``, trivial ones included."""
    n = len(p.arrows)
    return {p.factor(i, j) for i in range(n + 1) for j in range(i, n + 1)}
