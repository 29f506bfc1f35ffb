from __future__ import annotations

import random
from functools import lru_cache

import pytest

from abpart.generators import (
    FAMILIES,
    assign_spec,
    cycle,
    gen_structure,
    inflate_multiplicities,
    petersen,
)
from abpart.multigraph import Instance, Multigraph
from abpart.solver import validate


def path(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Multigraph:
    return Multigraph(k + 1, [(0, i) for i in range(1, k + 1)])


def c5_doubled() -> Multigraph:
    """C5 with edge (0, 1) of multiplicity 2."""
    return Multigraph(5, [(0, 1, 2), (1, 2), (2, 3), (3, 4), (4, 0)])


def random_multigraph(rng: random.Random, n: int, p: float = 0.4, max_mult: int = 3) -> Multigraph:
    edges = [
        (u, v, rng.randint(1, max_mult))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Multigraph(n, edges)


@lru_cache(maxsize=None)
def valid_corpus(total: int = 500, inflated: int = 40) -> tuple[tuple[str, int, int, Instance], ...]:
    """Seeded instances that pass strict validation, ``n`` in [6, 12].

    Scans seeds over every family, with and without multiplicity
    inflation, until ``total`` instances with at least ``inflated``
    multigraphs are collected. Items are ``(family, max_mult, seed, inst)``.
    """
    out = []
    n_infl = 0
    seed = 0
    while len(out) < total or n_infl < inflated:
        n = 6 + seed % 7
        for fam in FAMILIES:
            for mm in (1, 2):
                if mm == 2 and n_infl >= inflated:
                    continue
                if mm == 1 and len(out) - n_infl >= total - inflated:
                    continue
                g = gen_structure(n, 1.0, seed, fam)
                if mm > 1:
                    g = inflate_multiplicities(g, mm, seed)
                spec = assign_spec(g, seed)
                if spec is None:
                    continue
                inst = Instance(g, spec)
                if not validate(inst, strict=True):
                    out.append((fam, mm, seed, inst))
                    n_infl += mm == 2
        seed += 1
    return tuple(out)


@pytest.fixture(scope="session")
def corpus():
    return valid_corpus()


@pytest.fixture
def triangle():
    return cycle(3)


@pytest.fixture
def pet():
    return petersen()


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {line}")
