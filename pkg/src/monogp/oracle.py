"""Independent check of the classification by exact linear algebra.

Modules are quiver representations with rational matrices.  Projective covers,
syzygies, Hom and Ext^1 are computed by exact rank and nullspace; nothing
here looks at perfect pairs.  The only combinatorial input is the annihilator
set L(p), used to walk syzygies of cyclic path modules, and every such step
is confirmed against the kernel of an explicitly computed projective cover.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import MonomialAlgebra, left_min_annihilators
from .classify import Verdict
from .errors import OracleInconsistency, PreconditionError
from .linalg import Echelon
from .quiver import Path


@dataclass
class Representation:
    """``maps[a]`` is a ``dims[t(a)] x dims[s(a)]`` matrix given as a list of rows."""

    quiver: object
    dims: dict
    maps: dict
    labels: dict = field(default=None, repr=False)  # optional basis names per vertex

    def __post_init__(self):
        self._paths = {}

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> dict:
        return dict(self.dims)

    def path_action(self, p: Path):
        """Matrix of ``p`` acting from vertex s(p) to t(p)."""
        if p in self._paths:
            return self._paths[p]
        if p.is_trivial:
            n = self.dims[p.source]
            out = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            head = p.prefix(p.length - 1)
            last = p.arrows[-1]
            out = _mul(self.maps[last], self.path_action(head), self.dims[p.source])
        self._paths[p] = out
        return out

    def satisfies(self, A: MonomialAlgebra) -> bool:
        """Every minimal relation acts as zero."""
        for r in A.F:
            if any(v for row in self.path_action(r) for v in row):
                return False
        return True


def _mul(X, Y, ncols):
    """X @ Y where Y has ``ncols`` columns (kept explicit for empty shapes)."""
    out = []
    for row in X:
        acc = [0] * ncols
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(Y[k]):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def _apply(X, vec):
    return [sum(a * b for a, b in zip(row, vec) if a and b) for row in X]


def zero_module(A: MonomialAlgebra) -> Representation:
    Q = A.quiver
    return Representation(Q, {v: 0 for v in Q.vertices}, {a: [] for a in Q.arrow_names})


def path_module(A: MonomialAlgebra, p: Path) -> Representation:
    """The cyclic module Ap on the basis of nonzero paths beginning with ``p``."""
    Q = A.quiver
    Q.check_path(p)
    if not A.nonzero(p):
        raise PreconditionError("%s is zero in the algebra" % (p,))
    by_vertex = {v: [] for v in Q.vertices}
    for x in A.left_ideal_basis(p):
        by_vertex[x.target].append(x)
    index = {v: {x: i for i, x in enumerate(xs)} for v, xs in by_vertex.items()}
    dims = {v: len(xs) for v, xs in by_vertex.items()}
    maps = {}
    for a, s, t in Q.arrows:
        M = [[0] * dims[s] for _ in range(dims[t])]
        for j, x in enumerate(by_vertex[s]):
            y = Q.extend(x, a)
            if A.nonzero(y):
                M[index[t][y]][j] = 1
        maps[a] = M
    return Representation(Q, dims, maps, by_vertex)


def projective_module(A: MonomialAlgebra, v) -> Representation:
    return path_module(A, A.quiver.trivial(v))


def direct_sum(A: MonomialAlgebra, reps) -> Representation:
    Q = A.quiver
    reps = list(reps)
    dims = {v: sum(R.dims[v] for R in reps) for v in Q.vertices}
    maps = {}
    for a, s, t in Q.arrows:
        M = [[0] * dims[s] for _ in range(dims[t])]
        r0 = c0 = 0
        for R in reps:
            for i, row in enumerate(R.maps[a]):
                for j, val in enumerate(row):
                    if val:
                        M[r0 + i][c0 + j] = val
            r0 += R.dims[t]
            c0 += R.dims[s]
        maps[a] = M
    return Representation(Q, dims, maps)


def regular_module(A: MonomialAlgebra) -> Representation:
    return direct_sum(A, [projective_module(A, v) for v in A.quiver.vertices])


# -- Hom ---------------------------------------------------------------------


def _hom_system(Q, M, N):
    """Sparse rows of the intertwining equations f_t M_a = N_a f_s."""
    offset, n = {}, 0
    for v in Q.vertices:
        offset[v] = n
        n += N.dims[v] * M.dims[v]
    rows = []
    for a, s, t in Q.arrows:
        Ma, Na = M.maps[a], N.maps[a]
        ms, mt, nt = M.dims[s], M.dims[t], N.dims[t]
        if not ms or not nt:
            continue
        col_nz = [[(k, Ma[k][c]) for k in range(mt) if Ma[k][c]] for c in range(ms)]
        row_nz = [[(k, v) for k, v in enumerate(Na[r]) if v] for r in range(nt)]
        for r in range(nt):
            for c in range(ms):
                eq = {}
                # (f_t M_a)[r, c] = sum_k f_t[r, k] M_a[k, c]
                for k, val in col_nz[c]:
                    idx = offset[t] + r * mt + k
                    eq[idx] = eq.get(idx, 0) + val
                # (N_a f_s)[r, c] = sum_k N_a[r, k] f_s[k, c]
                for k, val in row_nz[r]:
                    idx = offset[s] + k * ms + c
                    eq[idx] = eq.get(idx, 0) - val
                eq = {i: v for i, v in eq.items() if v}
                if eq:
                    rows.append(eq)
    return rows, n, offset


def hom_dim(A: MonomialAlgebra, M: Representation, N: Representation) -> int:
    """dim Hom_A(M, N) as the solution count of the intertwining system."""
    rows, n, _ = _hom_system(A.quiver, M, N)
    e = Echelon(n)
    for r in rows:
        e.add(r)
    return n - e.rank


def hom_basis(A: MonomialAlgebra, M: Representation, N: Representation) -> list:
    """A basis of Hom_A(M, N); each element maps vertex -> matrix."""
    Q = A.quiver
    rows, n, offset = _hom_system(Q, M, N)
    e = Echelon(n)
    for r in rows:
        e.add(r)
    _, vecs = e.nullspace()
    out = []
    for vec in vecs:
        f = {}
        for v in Q.vertices:
            m, k = M.dims[v], N.dims[v]
            f[v] = [[vec.get(offset[v] + r * m + c, 0) for c in range(m)] for r in range(k)]
        out.append(f)
    return out


# -- projective covers and syzygies -------------------------------------------


@dataclass
class ResolutionStep:
    module: Representation
    cover_multiplicities: dict
    cover: Representation
    cover_map: dict  # vertex -> matrix from cover to module
    kernel: Representation
    generators: list = field(default_factory=list)  # (vertex, vector) tops


def top_generators(A: MonomialAlgebra, M: Representation) -> list:
    """Vectors spanning a complement of rad M at each vertex."""
    Q = A.quiver
    gens = []
    for v in Q.vertices:
        d = M.dims[v]
        if not d:
            continue
        e = Echelon(d)
        for a in Q.in_arrows(v):
            Ma = M.maps[a]
            for j in range(M.dims[Q.source_of(a)]):
                e.add({i: Ma[i][j] for i in range(d) if Ma[i][j]})
        for j in range(d):
            if e.rank == d:
                break
            if e.add({j: 1}):
                vec = [0] * d
                vec[j] = 1
                gens.append((v, vec))
    return gens


def projective_cover(A: MonomialAlgebra, M: Representation):
    """(generators, cover, cover_map) for the projective cover of ``M``."""
    Q = A.quiver
    gens = top_generators(A, M)
    pieces = [projective_module(A, v) for v, _ in gens]
    cover = direct_sum(A, pieces)
    cover_map = {}
    for w in Q.vertices:
        cols = []
        for (v, g), P in zip(gens, pieces):
            for u in P.labels[w]:
                cols.append(_apply(M.path_action(u), g))
        cover_map[w] = [[col[i] for col in cols] for i in range(M.dims[w])]
    return gens, cover, cover_map


def _kernel(A, P, phi, M):
    """Kernel of phi : P -> M as a representation on nullspace coordinates."""
    Q = A.quiver
    basis, free = {}, {}
    for w in Q.vertices:
        e = Echelon(P.dims[w])
        for row in phi[w]:
            e.add({j: x for j, x in enumerate(row) if x})
        free[w], basis[w] = e.nullspace()
    dims = {w: len(basis[w]) for w in Q.vertices}
    maps = {}
    for a, s, t in Q.arrows:
        Pa = P.maps[a]
        K = [[0] * dims[s] for _ in range(dims[t])]
        for j, vec in enumerate(basis[s]):
            image = [sum(Pa[r][c] * x for c, x in vec.items() if Pa[r][c]) for r in range(P.dims[t])]
            coords = [image[f] for f in free[t]]
            recon = [0] * P.dims[t]
            for lam, bv in zip(coords, basis[t]):
                if lam:
                    for c, x in bv.items():
                        recon[c] += lam * x
            if recon != image:
                raise OracleInconsistency("kernel is not closed under arrow %r" % (a,))
            for i, lam in enumerate(coords):
                K[i][j] = lam
        maps[a] = K
    return Representation(Q, dims, maps)


def syzygy_rep(A: MonomialAlgebra, M: Representation) -> ResolutionStep:
    gens, cover, phi = projective_cover(A, M)
    mult = Counter(v for v, _ in gens)
    kernel = _kernel(A, cover, phi, M)
    for w in A.quiver.vertices:
        if kernel.dims[w] != cover.dims[w] - M.dims[w]:
            raise OracleInconsistency("projective cover is not surjective at %s" % (w,))
    mult = {v: mult.get(v, 0) for v in A.quiver.vertices}
    return ResolutionStep(M, mult, cover, phi, kernel, gens)


def ext1_dim(A: MonomialAlgebra, M: Representation, N: Representation) -> int:
    """dim Ext^1(M, N) from 0 -> Omega M -> P -> M -> 0."""
    step = syzygy_rep(A, M)
    return hom_dim(A, step.kernel, N) - hom_dim(A, step.cover, N) + hom_dim(A, M, N)


def ext1_into_regular(A: MonomialAlgebra, M: Representation) -> int:
    """dim Ext^1(M, A), summed over the indecomposable projectives."""
    step = syzygy_rep(A, M)
    total = 0
    for v in A.quiver.vertices:
        P = projective_module(A, v)
        total += hom_dim(A, step.kernel, P) - hom_dim(A, step.cover, P) + hom_dim(A, M, P)
    return total


def stable_hom_dim_oracle(A: MonomialAlgebra, M: Representation, N: Representation) -> int:
    """dim Hom(M, N) minus the maps factoring through the projective cover of N."""
    Q = A.quiver
    _, cover, pi = projective_cover(A, N)
    e = Echelon(sum(N.dims[v] * M.dims[v] for v in Q.vertices))
    for f in hom_basis(A, M, cover):
        flat, off = {}, 0
        for v in Q.vertices:
            m = M.dims[v]
            if m and N.dims[v]:
                g = _mul(pi[v], f[v], m)
                for r, row in enumerate(g):
                    for c, x in enumerate(row):
                        if x:
                            flat[off + r * m + c] = x
            off += N.dims[v] * m
        e.add(flat)
    return hom_dim(A, M, N) - e.rank


# -- the Gorenstein-projectivity decision --------------------------------------


def _signature(A, q):
    return (q.target, tuple(left_min_annihilators(A, q)))


def check_syzygy_step(A: MonomialAlgebra, q: Path) -> ResolutionStep:
    """Compare the kernel of the cover of Aq with the sum of Aq' over L(q)."""
    step = syzygy_rep(A, path_module(A, q))
    expected = {v: 0 for v in A.quiver.vertices}
    for q2 in left_min_annihilators(A, q):
        for v, d in path_module(A, q2).dims.items():
            expected[v] += d
    if step.kernel.dims != expected:
        raise OracleInconsistency(
            "syzygy of A(%s) has dims %s, expected %s" % (q, step.kernel.dims, expected)
        )
    return step


def check_isomorphic(A: MonomialAlgebra, p: Path, q: Path) -> None:
    """Hom-rank consistency for two paths with the same signature."""
    Mp, Mq = path_module(A, p), path_module(A, q)
    if Mp.dims != Mq.dims:
        raise OracleInconsistency("%s and %s share a signature but not dims" % (p, q))
    e = hom_dim(A, Mp, Mp)
    if not (hom_dim(A, Mp, Mq) == e == hom_dim(A, Mq, Mq) == hom_dim(A, Mq, Mp)):
        raise OracleInconsistency("%s and %s share a signature but hom ranks differ" % (p, q))


def gp_oracle(A: MonomialAlgebra, p: Path, check_isos: bool = True) -> Verdict:
    """Decide whether Ap is projective, Gorenstein-projective, or neither.

    Walks the syzygies of Ap as sums of cyclic path modules (identified up to
    isomorphism by their signature (t(q), L(q))), checking each step against a
    computed projective cover.  Ap is declared Gorenstein-projective when the
    walk returns to Ap and Ext^1(-, A) vanishes on every module met in one
    period; this gives a complete resolution, so the answer is sound.  A
    non-projective Gorenstein-projective Ap must recur within as many steps as
    there are nonzero nontrivial paths, which bounds the walk.
    """
    A.quiver.check_path(p)
    if not A.nonzero(p):
        raise PreconditionError("%s is zero in the algebra" % (p,))
    if p.is_trivial:
        if syzygy_rep(A, path_module(A, p)).kernel.dimension:
            raise OracleInconsistency("projective %s has a nonzero syzygy" % (p,))
        return Verdict.PROJECTIVE
    checked = {}
    reps = {}
    seen_paths = {}

    def sig(q):
        s = _signature(A, q)
        reps.setdefault(s, q)
        others = seen_paths.setdefault(s, [])
        if q != reps[s] and q not in others and len(others) < 2:
            others.append(q)
        return s

    def step(s):
        if s not in checked:
            checked[s] = check_syzygy_step(A, reps[s])
        return left_min_annihilators(A, reps[s])

    start = Counter({sig(p): 1})
    if not step(sig(p)):
        return Verdict.PROJECTIVE
    n_max = len(A.nontrivial_basis())
    history = [start]
    state = start
    verdict = Verdict.NOT_GP
    for _ in range(n_max):
        nxt = Counter()
        for s, count in state.items():
            for q in step(s):
                nxt[sig(q)] += count
        if not nxt:
            break  # finite projective dimension, and Ap is not projective
        if nxt == start:
            cocycles = {s for h in history for s in h}
            if all(ext1_into_regular(A, path_module(A, reps[s])) == 0 for s in cocycles):
                verdict = Verdict.GORENSTEIN_NON_PROJECTIVE
            break
        if nxt in history:
            break  # periodic without ever returning to Ap
        history.append(nxt)
        state = nxt
    if check_isos:
        for s, others in seen_paths.items():
            for q in others:
                check_isomorphic(A, reps[s], q)
    return verdict
