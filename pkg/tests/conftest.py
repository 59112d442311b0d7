import random

import pytest

from toricsurf.fan import Fan, blowup, build_named


@pytest.fixture
def king() -> Fan:
    return build_named("king-counterexample")


@pytest.fixture
def p2() -> Fan:
    return build_named("p2")


@pytest.fixture
def p1p1() -> Fan:
    return build_named("p1p1")


@pytest.fixture
def f2() -> Fan:
    return build_named("hirzebruch", 2)


def random_blowup_chain(rng: random.Random, depth: int) -> Fan:
    base = rng.choice(["p2", "p1p1", "hirzebruch"])
    fan = build_named(base, rng.randint(0, 3)) if base == "hirzebruch" else build_named(base)
    for _ in range(depth):
        fan = blowup(fan, rng.randint(1, fan.n))
    return fan
