"""Relation quivers of quadratic monomial algebras.

The relation quiver has one vertex per arrow of Q and an edge ``a -> b`` for
every length-two relation walking ``a`` then ``b``.  Its components decide the
Gorenstein behaviour: basic-cycle components carry the perfect arrows, acyclic
components the modules of finite projective dimension.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .algebra import MonomialAlgebra
from .errors import QuadraticRequired


class ComponentKind(str, enum.Enum):
    PERFECT_CYCLE = "PerfectCycle"
    ACYCLIC = "Acyclic"
    MIXED = "Mixed"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Component:
    vertices: tuple
    kind: ComponentKind
    longest_path_length: Optional[int]  # only for acyclic components


@dataclass(frozen=True)
class RelationQuiver:
    vertices: tuple
    edges: tuple  # (from_arrow, to_arrow) pairs
    components: tuple

    def successors(self, v):
        return [b for a, b in self.edges if a == v]

    def predecessors(self, v):
        return [a for a, b in self.edges if b == v]

    def component_of(self, v) -> Component:
        for c in self.components:
            if v in c.vertices:
                return c
        raise KeyError(v)

    def to_dot(self, name="R") -> str:
        lines = ["digraph %s {" % name]
        for v in self.vertices:
            lines.append('  "%s";' % v)
        for a, b in self.edges:
            lines.append('  "%s" -> "%s" [label="%s %s"];' % (a, b, a, b))
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GorensteinReport:
    is_quadratic: bool
    gorenstein: bool
    gorenstein_bound: Optional[int]
    cm_free: bool
    finite_global_dimension: bool


def _require_quadratic(A):
    if not A.is_quadratic:
        raise QuadraticRequired("every minimal relation must have length 2")


def _find_cycle(nodes, succ):
    """True iff the subgraph on ``nodes`` has a directed cycle."""
    state = {}

    def visit(v):
        stack = [(v, iter(succ[v]))]
        state[v] = 1
        while stack:
            u, it = stack[-1]
            for w in it:
                if state.get(w) == 1:
                    return True
                if w not in state:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    break
            else:
                state[u] = 2
                stack.pop()
        return False

    return any(visit(v) for v in nodes if v not in state)


def _longest_path(nodes, succ, pred):
    indeg = {v: len(pred[v]) for v in nodes}
    order = [v for v in nodes if indeg[v] == 0]
    for v in order:
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    best = {v: 0 for v in nodes}
    for v in reversed(order):
        for w in succ[v]:
            best[v] = max(best[v], best[w] + 1)
    return max(best.values(), default=0)


def relation_quiver(A: MonomialAlgebra) -> RelationQuiver:
    _require_quadratic(A)
    verts = tuple(A.quiver.arrow_names)
    edges = tuple(sorted((r.arrows[0], r.arrows[1]) for r in A.F))
    succ = {v: [] for v in verts}
    pred = {v: [] for v in verts}
    for a, b in edges:
        succ[a].append(b)
        pred[b].append(a)
    seen = set()
    components = []
    for v in verts:
        if v in seen:
            continue
        comp, stack = [v], [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in succ[u] + pred[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp = tuple(sorted(comp, key=verts.index))
        n_edges = sum(len(succ[u]) for u in comp)
        if all(len(succ[u]) == 1 and len(pred[u]) == 1 for u in comp) and n_edges == len(comp):
            kind, longest = ComponentKind.PERFECT_CYCLE, None
        elif not _find_cycle(comp, succ):
            kind, longest = ComponentKind.ACYCLIC, _longest_path(comp, succ, pred)
        else:
            kind, longest = ComponentKind.MIXED, None
        components.append(Component(comp, kind, longest))
    return RelationQuiver(verts, edges, tuple(components))


def perfect_arrows(A: MonomialAlgebra) -> list:
    R = relation_quiver(A)
    out = [v for c in R.components if c.kind is ComponentKind.PERFECT_CYCLE for v in c.vertices]
    return sorted(out)


def gorenstein_report(A: MonomialAlgebra) -> GorensteinReport:
    """Gorenstein / CM-free / finite global dimension verdicts.

    ``gorenstein_bound`` is d + 2 with d the longest path in an acyclic
    component; it is an upper bound on the self-injective dimension and is
    not sharp in general.
    """
    R = relation_quiver(A)
    kinds = [c.kind for c in R.components]
    gorenstein = ComponentKind.MIXED not in kinds
    bound = None
    if gorenstein:
        d = max(
            (c.longest_path_length for c in R.components if c.kind is ComponentKind.ACYCLIC),
            default=0,
        )
        bound = d + 2
    return GorensteinReport(
        is_quadratic=True,
        gorenstein=gorenstein,
        gorenstein_bound=bound,
        cm_free=ComponentKind.PERFECT_CYCLE not in kinds,
        finite_global_dimension=all(k is ComponentKind.ACYCLIC for k in kinds),
    )


@dataclass(frozen=True)
class ArrowStatus:
    gp: bool
    finite_projdim: bool


def is_bounded(R: RelationQuiver, v) -> bool:
    """No directed path from ``v`` reaches a cycle."""
    succ = {u: R.successors(u) for u in R.vertices}
    reach, stack = {v}, [v]
    while stack:
        u = stack.pop()
        for w in succ[u]:
            if w not in reach:
                reach.add(w)
                stack.append(w)
    return not _find_cycle(reach, succ)


def arrow_module_status(A: MonomialAlgebra, alpha) -> ArrowStatus:
    R = relation_quiver(A)
    gp = R.component_of(alpha).kind is ComponentKind.PERFECT_CYCLE
    return ArrowStatus(gp=gp, finite_projdim=is_bounded(R, alpha))
