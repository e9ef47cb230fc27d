"""Acceptance gate: one check per criterion, each reported as a PASS/FAIL line.

Run with pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import itertools
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import properties  # noqa: E402
from corpus import corpus, gentle_example, named_algebras, three_vertex, z2_abab  # noqa: E402
from monogp.algebra import build_algebra, truncated_algebra  # noqa: E402
from monogp.classify import (  # noqa: E402
    Verdict,
    find_overlaps,
    is_gp_cyclic,
    perfect_pairs,
    perfect_paths,
    stable_category_shape,
    stable_hom_dim,
)
from monogp.errors import InvalidKupisch  # noqa: E402
from monogp.fuzz import GenConfig, SplitMix64, generate, random_quiver  # noqa: E402
from monogp.nakayama import kupisch_algebra, nakayama_data, perfect_paths_nakayama, validate_kupisch  # noqa: E402
from monogp.oracle import (  # noqa: E402
    check_syzygy_step,
    ext1_into_regular,
    gp_oracle,
    path_module,
    stable_hom_dim_oracle,
)
from monogp.quadratic import ComponentKind, gorenstein_report, relation_quiver  # noqa: E402
from monogp.quiver import Quiver  # noqa: E402

RESULTS = {}


def labels(paths):
    return [p.label() for p in paths]


def criterion_1():
    A = three_vertex()
    C = perfect_paths(A)
    Q = A.quiver
    checks = [
        labels(C.perfect_paths) == ["a", "b"],
        C.entry(Q.arrow("a")).dim_vector == {1: 0, 2: 1, 3: 0},
        C.entry(Q.arrow("b")).dim_vector == {1: 1, 2: 0, 3: 0},
        is_gp_cyclic(A, Q.path(["c", "b"])) is Verdict.GORENSTEIN_NON_PROJECTIVE,
        Q.path(["c", "b"]) not in C.perfect_paths,
    ]
    return all(checks), "perfect paths %s, Aa = S_2, Ab = S_1, 'c b' Gorenstein-projective" % labels(
        C.perfect_paths
    )


def criterion_2():
    A = gentle_example()
    R = relation_quiver(A)
    comps = sorted((c.vertices, c.kind, c.longest_path_length) for c in R.components)
    rep = gorenstein_report(A)
    shape = stable_category_shape(A)
    ok = (
        comps == [(("a", "b"), ComponentKind.PERFECT_CYCLE, None), (("c", "d"), ComponentKind.ACYCLIC, 1)]
        and rep.gorenstein
        and rep.gorenstein_bound == 3
        and not rep.cm_free
        and shape.cycle_lengths == (2,)
        and shape.semisimple
    )
    return ok, "components %s, bound %s, CM-free %s, shape %s" % (
        [(c[0], str(c[1])) for c in comps], rep.gorenstein_bound, rep.cm_free, shape.cycle_lengths,
    )


def criterion_3():
    A = z2_abab()
    pairs = [(x.p.label(), x.q.label()) for x in perfect_pairs(A)]
    C = perfect_paths(A)
    ab = A.quiver.path(["a", "b"])
    ok = (
        sorted(pairs) == sorted([("b", "a b a"), ("a b", "a b"), ("b a b", "a")])
        and C.perfect_paths == [ab]
        and [len(c) for c in C.cycles] == [1]
        and find_overlaps(A) == []
        and stable_category_shape(A).cycle_lengths == (1,)
        and stable_category_shape(A).semisimple
        and stable_hom_dim(A, ab, ab) == 1
    )
    return ok, "pairs %s, perfect %s, stable hom 1" % (pairs, labels(C.perfect_paths))


def no_source_sink_quivers(count, seed=2024):
    cfg = GenConfig(seed=seed, no_sources_sinks=True, max_arrows=6)
    rng = SplitMix64(seed)
    out = []
    while len(out) < count:
        Q = random_quiver(cfg, rng)
        if Q.is_connected() and not Q.is_basic_cycle():
            out.append(Q)
    return out


def basic_cycle(n):
    return Quiver(range(1, n + 1), [("x%d" % i, i, i % n + 1) for i in range(1, n + 1)])


def criterion_4():
    bad = []
    quivers = no_source_sink_quivers(20)
    for Q in quivers:
        for d in (2, 3, 4):
            A = truncated_algebra(Q, d)
            if perfect_paths(A).perfect_paths:
                bad.append("CM-free failure on %s, d=%d" % (Q.arrows, d))
            # every path when d = 2, the arrows otherwise (keeps the gate fast)
            for p in A.nontrivial_basis() if d == 2 else [Q.arrow(a) for a in Q.arrow_names]:
                if gp_oracle(A, p) is Verdict.GORENSTEIN_NON_PROJECTIVE:
                    bad.append("oracle finds A%s Gorenstein-projective on %s, d=%d" % (p, Q.arrows, d))
    for n in range(1, 5):
        for d in range(2, 6):
            A = truncated_algebra(basic_cycle(n), d)
            perfect = set(perfect_paths(A).perfect_paths)
            gnp = Verdict.GORENSTEIN_NON_PROJECTIVE
            by_oracle = {p for p in A.nontrivial_basis() if gp_oracle(A, p) is gnp}
            if perfect != by_oracle:
                bad.append("Z_%d/J^%d classifier and oracle differ" % (n, d))
            found = sorted({p.length for p in perfect})
            if found != list(range(1, d)):
                bad.append("Z_%d/J^%d perfect lengths %s" % (n, d, found))
    detail = "20 quivers x d in {2,3,4} CM-free; on Z_n/J^d the perfect lengths are exactly 1..d-1"
    return not bad, bad[0] if bad else detail


def kupisch_series(nmax=6, cmin=2, cmax=8, cap=10000, seed=5):
    series = []
    for n in range(1, nmax + 1):
        for c in itertools.product(range(cmin, cmax + 1), repeat=n):
            try:
                series.append(validate_kupisch(c))
            except InvalidKupisch:
                pass
    if len(series) > cap:
        rng = SplitMix64(seed)
        for i in range(cap):
            j = i + rng.below(len(series) - i)
            series[i], series[j] = series[j], series[i]
        series = series[:cap]
    return series


def criterion_5():
    series = kupisch_series()
    bad, npairs = [], 0
    for c in series:
        A = kupisch_algebra(c)
        N = nakayama_data(A)
        if sorted(perfect_paths_nakayama(A)) != perfect_paths(A).perfect_paths:
            bad.append("closed form differs for c=%s" % (c,))
        for pair in perfect_pairs(A):
            npairs += 1
            if N.index(pair.p.target) != N.theta[N.index(pair.q.source) - 1]:
                bad.append("t(p) != theta(s(q)) for c=%s" % (c,))
    detail = "%d Kupisch series, %d perfect pairs, all consistent" % (len(series), npairs)
    return not bad, bad[0] if bad else detail


def differential_algebras():
    return [A for _, A in corpus()] + list(named_algebras().values())


def criterion_6():
    bad, npaths = [], 0
    algebras = differential_algebras()
    for A in algebras:
        for p in A.nontrivial_basis():
            npaths += 1
            check_syzygy_step(A, p)
            if gp_oracle(A, p) != is_gp_cyclic(A, p):
                bad.append("disagreement on %s in %r" % (p, A))
        for p in perfect_paths(A).perfect_paths:
            if ext1_into_regular(A, path_module(A, p)):
                bad.append("Ext^1(A%s, A) != 0" % (p,))
    return not bad, bad[0] if bad else "%d algebras, %d paths, 100%% agreement" % (len(algebras), npaths)


def criterion_7():
    bad = []
    for name, check in properties.ALL.items():
        for seed, A in corpus():
            bad.extend("%s (seed %d): %s" % (name, seed, m) for m in check(A))
    return not bad, bad[0] if bad else "%d properties x %d algebras, zero violations" % (
        len(properties.ALL), len(corpus()),
    )


def criterion_8():
    bad, npairs, nquad = [], 0, 0
    algebras = differential_algebras()
    algebras += [build_algebra(generate(GenConfig(seed=s, quadratic_only=True))) for s in range(200)]
    for A in algebras:
        perfect = perfect_paths(A).perfect_paths
        mods = {p: path_module(A, p) for p in perfect}
        for a in perfect:
            for b in perfect:
                npairs += 1
                got = stable_hom_dim(A, a, b)
                if got != stable_hom_dim_oracle(A, mods[a], mods[b]):
                    bad.append("stable hom (%s, %s) in %r" % (a, b, A))
                if A.is_quadratic:
                    nquad += 1
                    if got != (a == b):
                        bad.append("quadratic stable hom (%s, %s) = %d" % (a, b, got))
    return not bad, bad[0] if bad else "%d pairs (%d quadratic), all match" % (npairs, nquad)


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4,
    criterion_5, criterion_6, criterion_7, criterion_8,
]


def run_criterion(k):
    ok, detail = CRITERIA[k - 1]()
    line = "criterion %d: %s - %s" % (k, "PASS" if ok else "FAIL", detail)
    RESULTS[k] = line
    print(line)
    return ok, line


def test_criterion_1():
    ok, line = run_criterion(1)
    assert ok, line


def test_criterion_2():
    ok, line = run_criterion(2)
    assert ok, line


def test_criterion_3():
    ok, line = run_criterion(3)
    assert ok, line


def test_criterion_4():
    ok, line = run_criterion(4)
    assert ok, line


def test_criterion_5():
    ok, line = run_criterion(5)
    assert ok, line


def test_criterion_6():
    ok, line = run_criterion(6)
    assert ok, line


def test_criterion_7():
    ok, line = run_criterion(7)
    assert ok, line


def test_criterion_8():
    ok, line = run_criterion(8)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(k)[0] for k in range(1, len(CRITERIA) + 1)]
    sys.exit(0 if all(results) else 1)
