import json
import random

import pytest

from abpart.feasibility import is_f_feasible
from abpart.generators import cycle, fixture, petersen
from abpart.multigraph import DegreeSpec, Instance, Multigraph
from abpart.oracle import brute_partition
from abpart.partition import Partition, deficiency, is_feasible_partition
from abpart.solver import (
    FEASIBLE,
    INFEASIBLE,
    UNKNOWN,
    FeasiblePair,
    SolveOptions,
    SolveStats,
    complete_pair,
    exact_solve,
    local_search,
    seed_partition,
    solve,
    validate,
)


def const(g, a, b):
    return Instance(g, DegreeSpec.constant(g.n, a, b))


def induces_c5(g, S):
    return len(S) == 5 and all(g.degree_within(v, S) == 2 for v in S)


def test_validate_examples():
    assert validate(const(petersen(), 2, 2), strict=True) == []
    vs = validate(const(cycle(5), 2, 2), strict=True)
    assert {v.kind for v in vs} == {"degree"} and len(vs) == 5
    vs = validate(const(cycle(5), 1, 2), strict=True)
    assert {v.kind for v in vs} == {"range"}


def test_validate_structure_only_in_strict_mode():
    k23 = fixture("k23")
    assert "structure" in {v.kind for v in validate(k23, strict=True)}
    assert "structure" not in {v.kind for v in validate(k23, strict=False)}


def test_validate_tiny_graph():
    assert [v.kind for v in validate(const(Multigraph(1), 2, 2), strict=False)][0] == "size"


def test_seed_petersen_gives_complementary_cycles():
    inst = const(petersen(), 2, 2)
    seeded = seed_partition(inst)
    assert isinstance(seeded, FeasiblePair)
    g = inst.graph
    assert induces_c5(g, seeded.X) and induces_c5(g, seeded.Y)
    assert seeded.X | seeded.Y == frozenset(range(10))


def test_seed_triangle_partition_branch():
    seeded = seed_partition(const(cycle(3), 2, 2))
    assert isinstance(seeded, Partition)


def test_seed_two_petersens():
    p = petersen()
    edges = [(u, v) for u, v, _ in p.edges()] + [(u + 10, v + 10) for u, v, _ in p.edges()]
    g = Multigraph(20, edges)
    seeded = seed_partition(const(g, 2, 2))
    assert isinstance(seeded, FeasiblePair)
    # shrinking drops vertices in order, so the 5-cycle lands in the later copy
    assert induces_c5(g, seeded.X) and seeded.X <= frozenset(range(10, 20))
    assert seeded.X | seeded.Y == frozenset(range(20))


def test_complete_pair_spanning_pair_unchanged():
    inst = const(petersen(), 2, 2)
    seeded = seed_partition(inst)
    p = complete_pair(inst, seeded.X, seeded.Y)
    assert p.A == seeded.X and p.B == seeded.Y


def test_complete_pair_rejects_non_feasible_pair():
    # 4 vertices of the inner cycle induce a path, which is not 2-feasible
    inst = const(petersen(), 2, 2)
    with pytest.raises(ValueError):
        complete_pair(inst, range(5), [5, 7, 9, 6])


def test_complete_pair_with_leftovers(corpus):
    done = 0
    for _, _, _, inst in corpus:
        seeded = seed_partition(inst)
        if isinstance(seeded, FeasiblePair) and len(seeded.X | seeded.Y) < inst.n:
            p = complete_pair(inst, seeded.X, seeded.Y)
            assert is_feasible_partition(inst.graph, p, inst.spec)
            done += 1
    assert done > 0


def test_complete_pair_from_arbitrary_pairs():
    inst = const(petersen(), 2, 2)
    g = inst.graph
    # outer cycle plus the empty-leftover complement, and a smaller pair
    p = complete_pair(inst, range(5), range(5, 10))
    assert is_feasible_partition(g, p, inst.spec)
    rob = fixture("robertson-doubled")
    seeded = seed_partition(rob)
    assert isinstance(seeded, FeasiblePair)
    Y = seeded.Y
    # shrink Y to its 2-feasible core after dropping one vertex, if any
    from abpart.feasibility import max_f_feasible_core

    for v in sorted(Y):
        core = max_f_feasible_core(rob.graph, Y - {v}, 2)
        if core:
            Y = core
            break
    assert is_f_feasible(rob.graph, Y, 2)
    p = complete_pair(rob, seeded.X, Y)
    assert is_feasible_partition(rob.graph, p, rob.spec)


def test_local_search_fixed_point():
    inst = const(petersen(), 2, 2)
    start = Partition(inst.graph, range(5))
    stats = SolveStats()
    p = local_search(inst, start, stats=stats)
    assert p == start and stats.moves == 0 and stats.restarts == 0


def test_local_search_random_petersen_splits():
    inst = const(petersen(), 2, 2)
    g = inst.graph
    solved = 0
    for seed in range(100):
        rng = random.Random(seed)
        A = rng.sample(range(10), rng.randint(1, 9))
        p = local_search(inst, Partition(g, A), rng_seed=seed)
        solved += is_feasible_partition(g, p, inst.spec)
    assert solved >= 99


def test_local_search_triangle_stays_deficient():
    inst = const(cycle(3), 2, 2)
    for budget in (0, 10, 1000):
        p = local_search(inst, Partition(inst.graph, [0]), budget=budget)
        assert deficiency(inst.graph, p, inst.spec) > 0


def test_local_search_never_worsens():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(3, 10)
        edges = [(u, v, rng.randint(1, 2)) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Multigraph(n, edges)
        spec = DegreeSpec([rng.randint(1, 4) for _ in range(n)], [rng.randint(1, 4) for _ in range(n)])
        inst = Instance(g, spec)
        start = Partition(g, rng.sample(range(n), rng.randint(1, n - 1)))
        p = local_search(inst, start, budget=rng.randint(0, 50), rng_seed=rng.randint(0, 99))
        assert deficiency(g, p, spec) <= deficiency(g, start, spec)


def test_exact_solve_examples():
    assert not exact_solve(const(cycle(5), 1, 2)).feasible
    res = exact_solve(const(petersen(), 2, 2))
    assert res.feasible
    assert is_feasible_partition(res.partition.g, res.partition, DegreeSpec.constant(10, 2, 2))
    assert not exact_solve(const(cycle(7), 2, 2)).feasible
    with pytest.raises(ValueError):
        exact_solve(const(cycle(23), 2, 2))


def test_exact_solve_returns_smallest_mask():
    inst = const(petersen(), 2, 2)
    res = exact_solve(inst)
    verdict = brute_partition(inst)
    assert res.partition.A == verdict.A


def test_solve_examples():
    rep = solve(const(petersen(), 2, 2), SolveOptions(strict=True))
    assert rep.status == FEASIBLE and rep.deficiency == 0
    rob = fixture("robertson-doubled")
    assert validate(rob, strict=True) == []
    rep = solve(rob, SolveOptions(strict=True))
    assert rep.status == FEASIBLE
    assert is_feasible_partition(rob.graph, rep.partition, rob.spec)
    rep = solve(const(cycle(5), 2, 2), SolveOptions(strict=True))
    assert rep.stats.aborted and rep.status == UNKNOWN
    assert {v.kind for v in rep.violations} == {"degree"}


def test_infeasible_only_from_exhaustion():
    inst = const(cycle(3), 2, 2)
    rep = solve(inst, SolveOptions(max_exact=0))
    assert rep.status == UNKNOWN and not rep.stats.exhaustive
    rep = solve(inst)
    assert rep.status == INFEASIBLE and rep.stats.exhaustive and rep.stats.exact_ran


def test_solve_deterministic():
    for name in ("petersen", "robertson-doubled", "triangle-ab2", "c7-tight-degree"):
        inst = fixture(name)
        runs = {json.dumps(solve(inst, SolveOptions(seed=3)).to_json()) for _ in range(3)}
        assert len(runs) == 1


def test_tightened_spec_partitions_remain_feasible(corpus):
    rng = random.Random(11)
    for _, _, _, inst in corpus[:60]:
        a2 = [x + rng.randint(0, 2) for x in inst.spec.a]
        b2 = [x + rng.randint(0, 2) for x in inst.spec.b]
        tight = Instance(inst.graph, DegreeSpec(a2, b2))
        verdict = brute_partition(tight)
        if verdict.feasible:
            p = Partition(inst.graph, verdict.A)
            assert is_feasible_partition(inst.graph, p, inst.spec)


def test_corpus_sample_is_solved(corpus):
    for _, _, _, inst in corpus[::10]:
        rep = solve(inst)
        assert rep.status == FEASIBLE
        assert exact_solve(inst).feasible
        assert brute_partition(inst).feasible
