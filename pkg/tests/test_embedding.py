from collections import Counter

import pytest

from heffter.constructions import NzsArray, construct, construct_t2
from heffter.decomposition import circuits, col_decomposition, row_decomposition
from heffter.embedding import (NotCyclic, build_rho0, embed, line_lambda, predicted_spectrum,
                               predicted_spectrum_check)
from heffter.oracle import archdeacon_rotation, trace_faces_bruteforce
from heffter.verifier import DirectedCyclicOrdering, cycle_lengths, find_compatible_orderings

N3_T = [2, 3, 6, 9, 18]


def _embedded(n, t, seed=0):
    A = construct(n, t)
    dirs = find_compatible_orderings(A, seed=seed)
    return A, dirs, embed(A, dirs)


def test_rho0_examples():
    one = NzsArray.from_signed([[1]], 1)
    seed = build_rho0(one, DirectedCyclicOrdering.forward(1, 1))
    assert seed.rho0 == {1: 2, 2: 1}
    A = construct_t2(3)
    seed = build_rho0(A, find_compatible_orderings(A))
    assert cycle_lengths(seed.rho0) == [18]
    with pytest.raises(NotCyclic):
        build_rho0(A, DirectedCyclicOrdering.forward(3, 3))


def test_k3_on_sphere():
    rep = embed(NzsArray.from_signed([[1]], 1), DirectedCyclicOrdering.forward(1, 1))
    assert (rep.V, rep.E, rep.F, rep.genus) == (3, 3, 2, 0)
    assert sorted(f.length for f in rep.faces) == [3, 3]


@pytest.mark.parametrize("t", N3_T)
def test_closed_and_two_colored(t):
    A, dirs, rep = _embedded(3, t)
    darts = Counter()
    colors = {}
    for f in rep.faces:
        b = f.boundary
        for p in range(len(b)):
            darts[(b[p], b[(p + 1) % len(b)])] += 1
        for e in f.edges():
            colors.setdefault(e, []).append(f.color)
    assert set(darts.values()) == {1} and len(darts) == 2 * rep.E
    assert all(sorted(c) == ["col", "row"] for c in colors.values())
    assert (rep.V - rep.E + rep.F) % 2 == 0
    assert predicted_spectrum_check(rep, 3, t)


@pytest.mark.parametrize("t", N3_T)
def test_spectrum_matches_line_sums(t):
    A, _, rep = _embedded(3, t)
    got = Counter({(L, col): c for L, c, col in rep.spectrum})
    assert got == predicted_spectrum(A)


@pytest.mark.parametrize("n,t", [(3, 2), (3, 3), (3, 9), (5, 5)])
def test_faces_are_the_circuits(n, t):
    A, dirs, rep = _embedded(n, t)
    col_faces = {frozenset(f.edges()) for f in rep.faces if f.color == "col"}
    row_faces = {frozenset(f.edges()) for f in rep.faces if f.color == "row"}
    assert col_faces == {frozenset(c.edges()) for c in circuits(col_decomposition(A, dirs))}
    assert row_faces == {frozenset(c.edges()) for c in circuits(row_decomposition(A, dirs))}


@pytest.mark.parametrize("n,t", [(1, 1), (3, 2), (3, 3), (3, 18), (5, 10)])
def test_bruteforce_tracer_agrees(n, t):
    A, dirs, rep = _embedded(n, t)
    faces = trace_faces_bruteforce(A.v, archdeacon_rotation(A, dirs.row_dirs, dirs.col_dirs))
    assert sorted(len(f) for f in faces) == sorted(f.length for f in rep.faces)


def test_known_embeddings():
    _, _, rep = _embedded(3, 2)
    assert (rep.F, rep.genus) == (22, 70)
    got = Counter({(L, col): c for L, c, col in rep.spectrum})
    assert got == {(15, "col"): 4, (12, "col"): 5, (30, "col"): 2,
                   (15, "row"): 4, (12, "row"): 5, (30, "row"): 2}
    # row 2 of NH_3(3;3) is (5,-12,19) with sum 12, so it splits into three faces
    _, _, rep = _embedded(3, 3)
    assert (rep.F, rep.genus) == (14, 78)
    got = Counter({(L, col): c for L, c, col in rep.spectrum})
    assert got == {(21, "col"): 9, (21, "row"): 3, (63, "row"): 2}


def test_line_lambda_examples():
    assert line_lambda(construct_t2(3), "col", 1) == 4
    A = construct(3, 3)
    assert [line_lambda(A, "col", j) for j in range(3)] == [7, 7, 7]
    assert [line_lambda(A, "row", i) for i in range(3)] == [21, 7, 21]


def test_spectrum_predicates():
    for t, allowed in ((9, {27, 81}), (18, {12, 36, 108})):
        _, _, rep = _embedded(3, t)
        assert {f.length for f in rep.faces} <= allowed
    _, _, rep = _embedded(3, 3)
    assert all(f.length % 21 == 0 for f in rep.faces)


def test_embedding_is_seed_deterministic():
    a = _embedded(9, 3, seed=7)[2].to_dict(boundaries=True)
    b = _embedded(9, 3, seed=7)[2].to_dict(boundaries=True)
    assert a == b
