import itertools
import random

import pytest

from abpart.generators import cycle, petersen
from abpart.multigraph import DegreeSpec, Instance, Multigraph
from abpart.oracle import (
    MAX_PAIR_N,
    MAX_PARTITION_N,
    MAX_SUBSET_N,
    brute_degenerate,
    brute_feasible_pair,
    brute_minimal_nice,
    brute_partition,
)

from conftest import random_multigraph


def const(g, a, b):
    return Instance(g, DegreeSpec.constant(g.n, a, b))


def naive_ok(g, S, f):
    return all(sum(g.multiplicity(u, v) for u in S if u != v) >= f[v] for v in S)


def test_brute_partition_examples():
    v = brute_partition(const(petersen(), 2, 2))
    assert v.feasible
    assert naive_ok(petersen(), v.A, [2] * 10) and naive_ok(petersen(), v.B, [2] * 10)
    assert not brute_partition(const(cycle(3), 2, 2)).feasible
    assert not brute_partition(const(cycle(5), 1, 2)).feasible
    # one edge with a = b = 1 cannot be split
    assert not brute_partition(const(Multigraph(2, [(0, 1)]), 1, 1)).feasible
    assert brute_partition(const(Multigraph(2, [(0, 1)]), 0, 0)).A == {0}


def test_brute_feasible_pair_examples():
    X, Y = brute_feasible_pair(const(petersen(), 2, 2))
    assert X and Y and not X & Y
    assert naive_ok(petersen(), X, [2] * 10) and naive_ok(petersen(), Y, [2] * 10)
    assert brute_feasible_pair(const(cycle(6), 2, 2)) is None


def test_caps():
    big = Instance(cycle(MAX_PARTITION_N + 1), DegreeSpec.constant(MAX_PARTITION_N + 1, 2, 2))
    with pytest.raises(ValueError):
        brute_partition(big)
    with pytest.raises(ValueError):
        brute_degenerate(cycle(MAX_SUBSET_N + 1), range(MAX_SUBSET_N + 1), 1)
    with pytest.raises(ValueError):
        brute_minimal_nice(cycle(MAX_SUBSET_N + 1), 2)
    with pytest.raises(ValueError):
        brute_feasible_pair(const(cycle(MAX_PAIR_N + 1), 2, 2))


@pytest.mark.parametrize("seed", range(40))
def test_agrees_with_itertools_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    g = random_multigraph(rng, n, rng.uniform(0.3, 0.9), 2)
    a = [rng.randint(0, 3) for _ in range(n)]
    b = [rng.randint(0, 3) for _ in range(n)]
    inst = Instance(g, DegreeSpec(a, b))
    V = range(n)
    splits = [
        set(A) for r in range(1, n) for A in itertools.combinations(V, r)
        if naive_ok(g, A, a) and naive_ok(g, set(V) - set(A), b)
    ]
    assert brute_partition(inst).feasible == bool(splits)
    sets = [frozenset(S) for r in range(1, n + 1) for S in itertools.combinations(V, r)]
    has_pair = any(
        naive_ok(g, X, a) and naive_ok(g, Y, b) for X in sets for Y in sets if not X & Y
    )
    assert (brute_feasible_pair(inst) is not None) == has_pair
    f = [rng.randint(0, 3) for _ in range(n)]
    degenerate = all(
        any(sum(g.multiplicity(u, v) for u in S if u != v) <= f[v] for v in S) for S in sets
    )
    assert brute_degenerate(g, V, f) == degenerate
