import random

import pytest

from hypermod.core import validate_hypermodule, validate_krasner_hyperring
from hypermod.errors import CapacityError
from hypermod.fixtures import k2_ring, self_module, v4_module, zn_ring
from hypermod.search import (PROPERTY_TARGETS, SearchSpec, generate_canonical_hypergroups,
                             generate_hypermodules, generate_krasner_hyperrings, hunt,
                             hypergroup_canonical_form, module_canonical_form, random_instances,
                             ring_canonical_form)

from oracles import (binary_key, naive_binary_hypergroups, naive_binary_rings, naive_modules,
                     relabel_module, relabel_ring)


@pytest.mark.parametrize("size,expected", [(1, 1), (2, 2), (3, 10)])
def test_binary_hypergroups_match_naive(size, expected):
    ours = list(generate_canonical_hypergroups(size))
    assert len(ours) == expected
    assert {binary_key(op) for op in ours} == naive_binary_hypergroups(size)


def test_hypergroup_counts_frozen():
    # [DERIVED] sizes 1..4 for m = 2 and 1..3 for m = 3
    assert [sum(1 for _ in generate_canonical_hypergroups(s)) for s in (1, 2, 3)] == [1, 2, 10]
    assert [sum(1 for _ in generate_canonical_hypergroups(s, 3)) for s in (1, 2, 3)] == [1, 1, 8]


@pytest.mark.slow
def test_size_four_hypergroups():
    assert sum(1 for _ in generate_canonical_hypergroups(4)) == 97


def test_hypergroup_limits():
    with pytest.raises(CapacityError):
        next(generate_canonical_hypergroups(6))


@pytest.mark.parametrize("size", [1, 2, 3])
def test_rings_match_naive(size):
    ours = list(generate_krasner_hyperrings(size))
    assert all(validate_krasner_hyperring(R).valid for R in ours)
    assert len(ours) == len(naive_binary_rings(size))
    assert len({ring_canonical_form(R) for R in ours}) == len(ours)


def test_size_two_rings_are_z2_and_k2():
    forms = {ring_canonical_form(R) for R in generate_krasner_hyperrings(2)}
    assert forms == {ring_canonical_form(zn_ring(2)), ring_canonical_form(k2_ring())}


def test_size_three_with_cyclic_addition_is_classical():
    z3 = zn_ring(3)
    key = hypergroup_canonical_form(z3.h)
    hits = [R for R in generate_krasner_hyperrings(3) if hypergroup_canonical_form(R.h) == key]
    assert [ring_canonical_form(R) for R in hits] == [ring_canonical_form(z3)]


def test_ring_count_size_four_frozen():
    # [DERIVED]
    from conftest import size_four_rings
    assert len(size_four_rings()) == 18


def test_relabelled_ring_is_recognised():
    rng = random.Random(7)
    for R in generate_krasner_hyperrings(3):
        perm = [0] + rng.sample([1, 2], 2)
        R2 = relabel_ring(R, perm, ["a", "b", "c"])
        assert ring_canonical_form(R2) == ring_canonical_form(R)


@pytest.mark.parametrize("ring", ["z2", "k2", "z3", "all3"])
def test_modules_match_naive(ring):
    rings = {"z2": [zn_ring(2)], "k2": [k2_ring()], "z3": [zn_ring(3)],
             "all3": list(generate_krasner_hyperrings(3))}[ring]
    for R in rings:
        for size in (1, 2):
            ours = list(generate_hypermodules(R, size))
            assert all(validate_hypermodule(M).valid for M in ours)
            assert len(ours) == len(naive_modules(R, size))
    assert len(naive_modules(zn_ring(2), 3)) == len(list(generate_hypermodules(zn_ring(2), 3))) == 0


def test_size_four_modules_over_size_two_rings():
    # [DERIVED] only V4 over Z2; none over K2
    mods = list(generate_hypermodules(zn_ring(2), 4))
    assert [module_canonical_form(M) for M in mods] == [module_canonical_form(v4_module())]
    assert list(generate_hypermodules(k2_ring(), 4)) == []


def test_module_canonical_form_invariant():
    rng = random.Random(3)
    M = self_module(zn_ring(4))
    for _ in range(10):
        perm = [0] + rng.sample([1, 2, 3], 3)
        M2 = relabel_module(M, [0, 1, 2, 3], ["0", "1", "2", "3"], perm, ["p", "q", "r", "s"])
        assert module_canonical_form(M2) == module_canonical_form(M)


def test_random_mode_is_deterministic():
    spec = SearchSpec(max_ring_size=3, max_module_size=3, mode="random", seed=11, count=8)
    a = [module_canonical_form(M) for M in random_instances(spec)]
    b = [module_canonical_form(M) for M in random_instances(spec)]
    assert a == b and len(a) > 0
    other = SearchSpec(max_ring_size=3, max_module_size=3, mode="random", seed=12, count=8)
    assert [module_canonical_form(M) for M in random_instances(other)] != a or len(a) < 3


def test_random_instances_are_valid():
    spec = SearchSpec(max_ring_size=3, max_module_size=3, mode="random", seed=5, count=10, dedup=False)
    for M in random_instances(spec):
        assert validate_krasner_hyperring(M.ring).valid and validate_hypermodule(M).valid


def test_lemma_hunt_is_empty():
    assert hunt(SearchSpec(max_ring_size=2, max_module_size=2, target="L3.2")) == []


def test_full_hunt_finds_only_zero_modules():
    hits = hunt(SearchSpec(max_ring_size=3, max_module_size=3))
    assert hits
    assert {h.verdict.theorem_id for h in hits} == {"T3.8"}
    assert all(h.module.size == 1 for h in hits)


def test_jobs_do_not_change_results():
    spec = dict(max_ring_size=3, max_module_size=2, target="is_multiplication")
    a = [(module_canonical_form(h.module), h.verdict.conclusion_holds) for h in hunt(SearchSpec(**spec))]
    b = [(module_canonical_form(h.module), h.verdict.conclusion_holds)
         for h in hunt(SearchSpec(**spec, jobs=2))]
    assert a == b


def test_property_targets():
    assert "is_multiplication" in PROPERTY_TARGETS
    hits = hunt(SearchSpec(max_ring_size=2, max_module_size=4, target="is_multiplication"))
    vals = {module_canonical_form(h.module): h.verdict.conclusion_holds for h in hits}
    assert vals[module_canonical_form(v4_module())] is False


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(mode="random")
    with pytest.raises(ValueError):
        SearchSpec(target="X1")
    with pytest.raises(CapacityError):
        SearchSpec(max_ring_size=7)
    with pytest.raises(ValueError):
        SearchSpec(mode="sideways")
