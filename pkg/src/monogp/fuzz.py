"""Seeded random monomial presentations for differential testing.

The generator draws from SplitMix64, chosen because it is tiny and
bit-exact to reproduce in any language: the state advances by
0x9E3779B97F4A7C15 and each output is the standard mix of the state.
Bounded integers use rejection sampling on the 64-bit output, so a
corpus depends only on the seed and the config.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import MonomialPresentation, build_algebra
from .errors import GenerationExhausted, NotAdmissible, PreconditionError
from .nakayama import kupisch_presentation, validate_kupisch
from .quiver import Quiver

MASK = (1 << 64) - 1
RELATION_DRAWS = 25


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_vertices: int = 4
    max_arrows: int = 6
    max_relation_length: int = 4
    max_relations: int = 6
    quadratic_only: bool = False
    nakayama_only: bool = False
    no_sources_sinks: bool = False
    max_dimension: Optional[int] = None
    retry_budget: int = 1000

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_arrows < 1:
            raise PreconditionError("need at least one vertex and one arrow")
        if self.max_relation_length < 2:
            raise PreconditionError("relations have length at least 2")
        if self.max_relations < 0 or self.retry_budget < 1:
            raise PreconditionError("negative relation count or empty retry budget")
        if self.no_sources_sinks and self.max_arrows < 1:
            raise PreconditionError("no_sources_sinks needs arrows")


def random_quiver(cfg: GenConfig, rng: SplitMix64) -> Quiver:
    nv = rng.randint(1, cfg.max_vertices)
    verts = list(range(1, nv + 1))
    ends = []
    if cfg.no_sources_sinks:
        nv = min(nv, cfg.max_arrows)
        verts = list(range(1, nv + 1))
        # a random permutation gives every vertex one outgoing and one incoming arrow
        perm = verts[:]
        for i in range(nv - 1, 0, -1):
            j = rng.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        ends = [(v, perm[k]) for k, v in enumerate(verts)]
    na = rng.randint(max(1, len(ends)), cfg.max_arrows)
    while len(ends) < na:
        ends.append((rng.choice(verts), rng.choice(verts)))
    arrows = [("a%d" % (k + 1), s, t) for k, (s, t) in enumerate(ends)]
    return Quiver(verts, arrows)


def _random_relations(cfg, rng, Q):
    starts = [v for v in Q.vertices if Q.out_arrows(v)]
    if not starts:
        return []
    k = rng.randint(0, cfg.max_relations)
    gens = []
    for _ in range(k):
        length = 2 if cfg.quadratic_only else rng.randint(2, cfg.max_relation_length)
        p = Q.trivial(rng.choice(starts))
        for _ in range(length):
            outs = Q.out_arrows(p.target)
            if not outs:
                break
            p = Q.extend(p, rng.choice(outs))
        if p.length >= 2 and p not in gens:
            gens.append(p)
    return gens


def random_kupisch(cfg: GenConfig, rng: SplitMix64) -> tuple:
    top = max(2, cfg.max_relation_length)
    n = rng.randint(1, cfg.max_vertices)
    while True:
        c = [rng.randint(2, top)]
        for _ in range(n - 1):
            c.append(rng.randint(max(2, c[-1] - 1), top))
        if c[0] >= c[-1] - 1:
            return validate_kupisch(c)


def generate(cfg: GenConfig) -> MonomialPresentation:
    """An admissible presentation drawn deterministically from ``cfg.seed``."""
    rng = SplitMix64(cfg.seed)
    Q = None
    for attempt in range(cfg.retry_budget):
        if cfg.nakayama_only:
            pres = kupisch_presentation(random_kupisch(cfg, rng))
        else:
            # keep a quiver for a batch of relation draws so that quivers with
            # many cycles are not drowned out by easy acyclic ones
            if attempt % RELATION_DRAWS == 0:
                Q = random_quiver(cfg, rng)
            pres = MonomialPresentation(Q, tuple(_random_relations(cfg, rng, Q)))
        try:
            A = build_algebra(pres)
        except NotAdmissible:
            continue
        if cfg.max_dimension is not None and A.dimension > cfg.max_dimension:
            continue
        return pres
    raise GenerationExhausted("no admissible presentation in %d tries" % cfg.retry_budget)


def corpus(seed: int, count: int, **kwargs) -> list:
    """``count`` presentations from consecutive seeds ``seed, seed+1, ...``."""
    return [generate(GenConfig(seed=seed + i, **kwargs)) for i in range(count)]


def _restrict(pres, drop_arrow=None, drop_relation=None):
    Q = pres.quiver
    arrows = [a for a in Q.arrows if a[0] != drop_arrow]
    gens = [
        g.arrows
        for k, g in enumerate(pres.generators)
        if k != drop_relation and drop_arrow not in g.arrows
    ]
    Q2 = Quiver(Q.vertices, arrows)
    return MonomialPresentation(Q2, tuple(Q2.path(w) for w in gens))


def shrink(pres: MonomialPresentation, still_failing) -> MonomialPresentation:
    """Greedily drop relations, then arrows, while ``still_failing`` holds
    and the presentation stays admissible."""
    changed = True
    while changed:
        changed = False
        candidates = [dict(drop_relation=k) for k in range(len(pres.generators))]
        candidates += [dict(drop_arrow=a) for a in pres.quiver.arrow_names]
        for kw in candidates:
            smaller = _restrict(pres, **kw)
            try:
                build_algebra(smaller)
            except NotAdmissible:
                continue
            if still_failing(smaller):
                pres, changed = smaller, True
                break
    return pres
