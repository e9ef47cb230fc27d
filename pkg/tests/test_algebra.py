import pytest
from hypothesis import given, settings, strategies as st

import brute
from corpus import as_words, corpus
from monogp.algebra import (
    AvoidanceAutomaton,
    MonomialPresentation,
    algebra_from_words,
    build_algebra,
    is_nonzero,
    left_min_annihilators,
    minimal_relations,
    right_min_annihilators,
    truncated_algebra,
)
from monogp.errors import DomainError, EmptyQuiver, NotAdmissible, PreconditionError
from monogp.quiver import Quiver, is_subpath

Z2 = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1)])


def labels(paths):
    return [p.label() for p in paths]


def test_minimal_relations_absorbs_longer_generators():
    ab, ba, aba = Z2.path(["a", "b"]), Z2.path(["b", "a"]), Z2.path(["a", "b", "a"])
    assert minimal_relations([ab, ba]) == [ab, ba]
    assert minimal_relations([ab, aba]) == [ab]
    abab = Z2.path(["a", "b", "a", "b"])
    assert minimal_relations([abab]) == [abab]


def test_presentation_validation():
    with pytest.raises(PreconditionError):
        MonomialPresentation.from_words(Z2, ["a"])
    pres = MonomialPresentation.from_words(Z2, ["a b", "a b"])
    assert len(pres.generators) == 1


def test_z2_basis(z2):
    # frozen from brute-force enumeration of words avoiding "a b a b"
    assert z2.dimension == 9
    assert labels(z2.basis) == ["e_1", "e_2", "a", "b", "a b", "b a", "a b a", "b a b", "b a b a"]


def test_three_vertex_basis(three):
    # "c b a" contains the relation "b a", so it is not a basis element
    assert three.dimension == 7
    assert labels(three.basis) == ["e_1", "e_2", "e_3", "a", "b", "c", "c b"]
    assert not is_nonzero(three, three.quiver.path(["c", "b", "a"]))


def test_cycle_without_relations_is_not_admissible():
    with pytest.raises(NotAdmissible) as info:
        algebra_from_words(*([1, 2], [("a", 1, 2), ("b", 2, 1)]), [])
    assert sorted(info.value.cycle) == ["a", "b"]


def test_empty_quiver():
    with pytest.raises(EmptyQuiver):
        algebra_from_words([], [], [])


def test_isolated_vertices_and_acyclic_without_relations():
    A = algebra_from_words([1, 2, 3], [("a", 1, 2)], [])
    assert A.dimension == 4


def test_is_nonzero_examples(z2):
    Q = z2.quiver
    assert is_nonzero(z2, Q.path(["b", "a", "b", "a"]))
    assert not is_nonzero(z2, Q.path(["a", "b", "a", "b"]))
    assert not is_nonzero(z2, Q.path(["a", "b", "a", "b", "a"]))
    assert all(is_nonzero(z2, Q.trivial(v)) for v in Q.vertices)
    other = Quiver([1], [("x", 1, 1)])
    with pytest.raises(DomainError):
        is_nonzero(z2, other.arrow("x"))


def test_annihilator_examples(three, z2):
    Q = three.quiver
    assert labels(left_min_annihilators(three, Q.arrow("a"))) == ["b"]
    assert left_min_annihilators(three, Q.arrow("c")) == []
    assert labels(left_min_annihilators(three, Q.path(["c", "b"]))) == ["a"]
    assert labels(right_min_annihilators(z2, z2.quiver.path(["a", "b"]))) == ["a b"]
    with pytest.raises(PreconditionError):
        left_min_annihilators(three, Q.trivial(1))
    with pytest.raises(PreconditionError):
        right_min_annihilators(three, Q.path(["a", "b"]))


def test_truncated_dimensions():
    for n in range(1, 5):
        Q = Quiver(range(1, n + 1), [("x%d" % i, i, i % n + 1) for i in range(1, n + 1)])
        for d in (2, 3, 4):
            assert truncated_algebra(Q, d).dimension == n * d


def test_automaton_state_bound():
    for _, A in corpus()[:100]:
        auto = AvoidanceAutomaton(A.quiver, A.F)
        assert len(auto.states) <= len(A.quiver.vertices) + sum(r.length for r in A.F)


@pytest.mark.parametrize("index", range(0, 500, 25))
def test_basis_matches_brute_force(index):
    _, A = corpus()[index]
    vertices, arrows, gens = as_words(A)
    want = sorted(brute.basis(vertices, arrows, gens))
    got = sorted((p.source, p.arrows) for p in A.basis)
    assert got == want


@pytest.mark.parametrize("index", range(0, 500, 25))
def test_annihilators_match_brute_force(index):
    _, A = corpus()[index]
    vertices, arrows, gens = as_words(A)
    for p in A.nontrivial_basis():
        L = [q.arrows for q in left_min_annihilators(A, p)]
        R = [q.arrows for q in right_min_annihilators(A, p)]
        assert L == brute.left_ann(vertices, arrows, gens, p.source, p.arrows)
        assert R == brute.right_ann(vertices, arrows, gens, p.source, p.arrows)


def test_annihilator_minimality(three, z2):
    for A in (three, z2):
        for p in A.nontrivial_basis():
            for q in left_min_annihilators(A, p):
                assert not A.nonzero(p.then(q))
                assert all(A.nonzero(p.then(q.prefix(k))) for k in range(1, q.length))
            for q in right_min_annihilators(A, p):
                assert not A.nonzero(q.then(p))
                assert all(A.nonzero(q.suffix(k).then(p)) for k in range(1, q.length))


def test_dimension_is_sum_of_projectives():
    for _, A in corpus()[:100]:
        assert sum(A.projective_dimensions().values()) == A.dimension


def test_basis_is_subpath_closed_and_contains_idempotents(z2, three):
    for A in (z2, three):
        basis = set(A.basis)
        for v in A.quiver.vertices:
            assert A.quiver.trivial(v) in basis
        for p in A.basis:
            for i in range(p.length + 1):
                for j in range(i, p.length + 1):
                    assert p.factor(i, j) in basis


def test_relations_are_antichain():
    for _, A in corpus()[:100]:
        for r in A.F:
            for s in A.F:
                assert r == s or not is_subpath(r, s)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 499), st.data())
def test_automaton_agrees_with_naive_scan(index, data):
    _, A = corpus()[index]
    Q = A.quiver
    gens = [r.arrows for r in A.F]
    starts = [v for v in Q.vertices if Q.out_arrows(v)]
    if not starts:
        return
    p = Q.trivial(data.draw(st.sampled_from(starts)))
    for _ in range(data.draw(st.integers(1, 8))):
        outs = Q.out_arrows(p.target)
        if not outs:
            break
        p = Q.extend(p, data.draw(st.sampled_from(outs)))
    assert is_nonzero(A, p) == (not brute.is_zero(p.arrows, gens))
    assert is_nonzero(A, p) == A.nonzero(p)


def test_build_is_deterministic():
    pres = MonomialPresentation.from_words(Z2, ["b a b", "a b a"])
    assert build_algebra(pres).basis == build_algebra(pres).basis
