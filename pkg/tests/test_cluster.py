import itertools
import json
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cgcluster.cg import build_initial_seed, build_quiver_cg
from cgcluster.cluster import (
    MutationError,
    NotFound,
    Quiver,
    Seed,
    enumerate_cluster_variables,
    enumerate_modular,
    enumerate_seeds,
    generic_seed,
    is_laurent_in,
    mutate_matrix,
    mutate_seed,
    mutate_sequence,
    quiver_isomorphic,
    read_sequence,
    search_sequence,
    write_sequence,
)
from cgcluster.exact import RationalFn, X


def random_quiver(rnd: random.Random, nv: int, nf: int, p: float = 0.4) -> Quiver:
    verts = list(range(nv))
    frozen = set(rnd.sample(verts, nf))
    arrows = []
    for u, v in itertools.combinations(verts, 2):
        if u in frozen and v in frozen:
            continue
        if rnd.random() < p:
            a = (u, v) if rnd.random() < 0.5 else (v, u)
            arrows += [a] * rnd.randint(1, 2)
    return Quiver.build(verts, frozen, arrows)


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_matrix_mutation_is_involutive(rnd):
    q = random_quiver(rnd, rnd.randint(2, 6), rnd.randint(0, 2))
    order, b = q.to_matrix()
    for k in range(len(b)):
        assert mutate_matrix(mutate_matrix(b, k), k) == b


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_seed_mutation_is_involutive(rnd):
    q = random_quiver(rnd, rnd.randint(2, 5), rnd.randint(0, 2))
    s = generic_seed(q)
    for v in s.mutable:
        assert mutate_seed(mutate_seed(s, v), v).same_as(s)


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_quiver_matrix_round_trip(rnd):
    nv = rnd.randint(1, 7)
    q = random_quiver(rnd, nv, rnd.randint(0, min(3, nv)))
    order, b = q.to_matrix()
    assert Quiver.from_matrix(order, b) == q


def test_matrix_mutation_formula():
    b = ((0, 1, 0), (-1, 0, 1), (0, -1, 0))
    # A3 quiver 0 -> 1 -> 2, mutate at the middle
    assert mutate_matrix(b, 1) == ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


def test_frozen_mutation_rejected():
    s = build_initial_seed(3)
    with pytest.raises(MutationError):
        mutate_seed(s, s.frozen[0])
    with pytest.raises(MutationError):
        mutate_seed(s, (9, 9))


def brute_force_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    if len(q1.vertices) != len(q2.vertices) or len(q1.frozen) != len(q2.frozen):
        return False
    a1, a2 = +q1.arrows, +q2.arrows
    for perm in itertools.permutations(q2.vertices):
        m = dict(zip(q1.vertices, perm))
        if {m[v] for v in q1.frozen} != set(q2.frozen):
            continue
        if Counter({(m[u], m[v]): k for (u, v), k in a1.items()}) == a2:
            return True
    return False


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_isomorphism_matches_brute_force(rnd):
    nv = rnd.randint(1, 5)
    q1 = random_quiver(rnd, nv, rnd.randint(0, min(2, nv)))
    if rnd.random() < 0.5:
        perm = list(q1.vertices)
        rnd.shuffle(perm)
        m = dict(zip(q1.vertices, perm))
        q2 = Quiver.build(q1.vertices, {m[v] for v in q1.frozen},
                          [(m[u], m[v]) for (u, v), k in q1.arrows.items() for _ in range(k)])
    else:
        q2 = random_quiver(rnd, nv, len(q1.frozen))
    found = quiver_isomorphic(q1, q2)
    assert (found is not None) == brute_force_isomorphic(q1, q2)
    if found is not None:
        assert Counter({(found[u], found[v]): k for (u, v), k in (+q1.arrows).items()}) == +q2.arrows


def test_laurent_phenomenon_formal_seed():
    s = build_initial_seed(3).formal()
    for _, (seed, _) in enumerate_seeds(s, 3).items():
        for f in seed.cluster():
            assert is_laurent_in(s, f)
    assert not is_laurent_in(s, RationalFn(X(1, 1), X(1, 1) + X(1, 2)))


def test_laurent_negative_case():
    s = build_initial_seed(3).formal()
    z = [s.var(v) for v in s.mutable]
    assert is_laurent_in(s, RationalFn(z[0] + z[1], z[2] ** 2))
    assert not is_laurent_in(s, RationalFn(z[0], z[1] + z[2]))


def test_symbolic_and_modular_enumeration_agree():
    s = build_initial_seed(3)
    sym = enumerate_cluster_variables(s, 4, method="symbolic")
    mod = enumerate_modular(s, 4)
    assert len(sym) == len(mod) == 102
    assert all(f in mod for f in sym)
    assert enumerate_cluster_variables(s, 1) == {v for v in sym if v in enumerate_cluster_variables(s, 1)}


def test_modular_witness_replays():
    s = build_initial_seed(3)
    mod = enumerate_modular(s, 3)
    for fp in list(mod)[:10]:
        path, v = mod.witness(fp)
        f = mutate_sequence(s, path).var(v)
        assert mod.sampler.of(f) == fp


def test_enumeration_depth_bound():
    with pytest.raises(ValueError):
        enumerate_cluster_variables(build_initial_seed(3), 9)


def test_search_sequence_finds_known_path():
    s = build_initial_seed(3)
    path = [(3, 2), (3, 3)]
    target = mutate_sequence(s, path)
    found = search_sequence(s, lambda t: set(t.variables) == set(target.variables), 3)
    assert set(mutate_sequence(s, found).variables) == set(target.variables)
    assert len(found) == 2
    with pytest.raises(NotFound):
        search_sequence(s, lambda t: False, 1)


def test_empty_and_repeated_sequences_are_identity():
    s = build_initial_seed(3)
    assert mutate_sequence(s, []).same_as(s)
    v = s.mutable[0]
    assert mutate_sequence(s, [v, v]).same_as(s)


def test_sequence_file_format():
    seq = [(1, 2), (3, 3)]
    assert read_sequence(write_sequence(seq)) == seq


def test_seed_json_round_trip():
    for variant in ("mat", "sl"):
        s = mutate_seed(build_initial_seed(3, variant), (2, 2))
        t = Seed.from_json(json.loads(s.dumps()))
        assert t.same_as(s)
        assert (t.casimir is None) == (variant == "mat")


def test_seed_validation():
    with pytest.raises(ValueError):
        Seed(((1,), (2,)), ((0, 1), (1, 0)), (X(1, 1), X(1, 2)))


def test_sl_exchange_balanced_by_det():
    s = build_initial_seed(3, "sl")
    for v in s.mutable:
        t = mutate_seed(s, v)
        assert t.regular
        assert t.var(v).is_homogeneous() is not None
