import pytest

from hypermod.fixtures import cyclic_module, k2_ring, self_module, v4_module, zero_module, zn_ring
from hypermod.search import generate_hypermodules, generate_krasner_hyperrings


def fixture_modules():
    z6 = zn_ring(6)
    return {
        "z2": self_module(zn_ring(2)),
        "z4": self_module(zn_ring(4)),
        "z6": self_module(z6),
        "k2": self_module(k2_ring()),
        "v4": v4_module(),
        "zero_z4": zero_module(zn_ring(4)),
        "z2_over_z6": cyclic_module(z6, 2),
        "z3_over_z6": cyclic_module(z6, 3),
        "z3_33": self_module(zn_ring(3, 3, 3)),
    }


_CORPUS = None


def generated_corpus():
    """Every (2,2) hyperring of size <= 3 with every hypermodule of size <= 3."""
    global _CORPUS
    if _CORPUS is None:
        out = []
        for rsize in (1, 2, 3):
            for R in generate_krasner_hyperrings(rsize):
                for msize in (1, 2, 3):
                    out.extend(generate_hypermodules(R, msize))
        _CORPUS = out
    return _CORPUS


_RINGS4 = None


def size_four_rings():
    global _RINGS4
    if _RINGS4 is None:
        _RINGS4 = list(generate_krasner_hyperrings(4))
    return _RINGS4


@pytest.fixture(scope="session")
def fixtures():
    return fixture_modules()


@pytest.fixture(scope="session")
def corpus():
    return generated_corpus()
