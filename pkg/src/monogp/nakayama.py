"""Monomial Nakayama algebras kZ_n/I, Kupisch series and the theta map.

Vertices are relabelled 1..n along the cycle, starting at the first declared
vertex.  With c_i = dim P_i, theta(i) = [i + c_i]; vertex i is black when
c_i <= c_[i+1]; a theta-cyclic vertex is theta-cyclically black when its whole
theta-orbit is black.  Perfect paths are then exactly the nonzero nontrivial
paths whose two endpoints are theta-cyclically black.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    MonomialAlgebra,
    MonomialPresentation,
    build_algebra,
    left_min_annihilators,
)
from .errors import InvalidKupisch, NotNakayama, PreconditionError
from .quiver import Path, Quiver


@dataclass(frozen=True)
class NakayamaData:
    n: int
    c: tuple
    theta: tuple  # theta[i-1] = theta(i)
    black: frozenset
    theta_cyclic: frozenset
    theta_cyclically_black: frozenset
    labels: tuple  # labels[i-1] = original vertex id of i

    def bracket(self, m: int) -> int:
        return (m - 1) % self.n + 1

    def vertex(self, i: int):
        return self.labels[i - 1]

    def index(self, v) -> int:
        return self.labels.index(v) + 1


def _cycle_order(Q: Quiver):
    if not Q.is_basic_cycle():
        raise NotNakayama("the quiver is not a basic cycle")
    order, v = [], Q.vertices[0]
    while v not in order:
        order.append(v)
        v = Q.target_of(Q.out_arrows(v)[0])
    return order


def theta_data(c) -> tuple:
    """theta, black, theta-cyclic and theta-cyclically-black sets for a
    Kupisch series ``c = (c_1, ..., c_n)``."""
    n = len(c)
    theta = tuple((i - 1 + c[i - 1]) % n + 1 for i in range(1, n + 1))
    black = frozenset(i for i in range(1, n + 1) if c[i - 1] <= c[i % n])
    image = set(range(1, n + 1))
    while True:
        nxt = {theta[i - 1] for i in image}
        if nxt == image:
            break
        image = nxt
    cyclic = frozenset(image)
    cb = set()
    for i in cyclic:
        j, ok = i, True
        while True:
            if j not in black:
                ok = False
                break
            j = theta[j - 1]
            if j == i:
                break
        if ok:
            cb.add(i)
    return theta, black, cyclic, frozenset(cb)


def nakayama_data(A: MonomialAlgebra) -> NakayamaData:
    order = _cycle_order(A.quiver)
    dims = A.projective_dimensions()
    c = tuple(dims[v] for v in order)
    theta, black, cyclic, cb = theta_data(c)
    return NakayamaData(len(order), c, theta, black, cyclic, cb, tuple(order))


def validate_kupisch(c) -> tuple:
    c = tuple(int(x) for x in c)
    n = len(c)
    if n == 0:
        raise InvalidKupisch(0, "empty series")
    for i in range(n):
        if c[i] < 2:
            raise InvalidKupisch(i + 1, "c_%d = %d < 2" % (i + 1, c[i]))
    for i in range(n):
        if c[(i + 1) % n] < c[i] - 1:
            raise InvalidKupisch(
                i + 1, "c_%d = %d < c_%d - 1 = %d" % ((i + 1) % n + 1, c[(i + 1) % n], i + 1, c[i] - 1)
            )
    return c


def kupisch_presentation(c) -> MonomialPresentation:
    """Z_n with arrows a1..an (a_i : i -> i+1) and one relation of length c_i
    out of every black vertex i."""
    c = validate_kupisch(c)
    n = len(c)
    arrows = [("a%d" % i, i, i % n + 1) for i in range(1, n + 1)]
    Q = Quiver(range(1, n + 1), arrows)
    _, black, _, _ = theta_data(c)
    gens = []
    for i in sorted(black):
        word = ["a%d" % ((i - 1 + k) % n + 1) for k in range(c[i - 1])]
        gens.append(Q.path(word))
    return MonomialPresentation(Q, tuple(gens))


def kupisch_algebra(c) -> MonomialAlgebra:
    return build_algebra(kupisch_presentation(c))


def perfect_paths_nakayama(A: MonomialAlgebra) -> list:
    data = nakayama_data(A)
    cb = {data.vertex(i) for i in data.theta_cyclically_black}
    return [p for p in A.nontrivial_basis() if p.source in cb and p.target in cb]


def gp_by_tops(A: MonomialAlgebra, p: Path) -> bool:
    """Gorenstein-projectivity of Ap read off the tops of Ap and Omega(Ap)."""
    data = nakayama_data(A)
    A.quiver.check_path(p)
    if p.is_trivial or not A.nonzero(p):
        raise PreconditionError("%s must be a nonzero nontrivial path" % (p,))
    L = left_min_annihilators(A, p)
    if not L:
        raise PreconditionError("A%s is projective" % (p,))
    (q,) = L
    cb = {data.vertex(i) for i in data.theta_cyclically_black}
    return p.target in cb and q.target in cb
