import random

import pytest
from hypothesis import given, settings, strategies as st

from hypermod.bitset import is_subset
from hypermod.errors import CapacityError
from hypermod.fixtures import k2_ring, self_module, v4_module, zn_ring
from hypermod.substructures import (annihilator_sets, classify_ideal, colon_ideal,
                                    enumerate_hyperideals, enumerate_subhypermodules,
                                    hyperideal_closure, ideal_action, ideal_product, is_faithful,
                                    is_hyperideal, is_P_cyclic, is_subhypermodule, jacobson_radical_ring,
                                    maximal_hyperideals, maximal_subhypermodules, p_cyclic_witness,
                                    power, radical, residual, subhypermodule_closure, torsion_part)

from oracles import naive_ideals, naive_submodules, oracle_action, random_relabel, zk_expected, zk_ideal


def test_zn_ideal_examples():
    # [DERIVED] brute force over all subsets
    assert enumerate_hyperideals(zn_ring(4)) == [0b0001, 0b0101, 0b1111]
    assert enumerate_hyperideals(zn_ring(6)) == sorted([0b000001, 0b001001, 0b010101, 0b111111])
    assert enumerate_hyperideals(k2_ring()) == [0b01, 0b11]


def test_v4_has_five_submodules():
    subs = enumerate_subhypermodules(v4_module())
    assert len(subs) == 5
    assert subs == naive_submodules(v4_module())


@pytest.mark.parametrize("k", range(1, 13))
def test_zn_ideals_match_divisors(k):
    R = zn_ring(k)
    ideals = enumerate_hyperideals(R)
    expected = zk_expected(k)
    assert ideals == sorted(expected)
    if k == 1:
        return
    for Q in ideals:
        c = classify_ideal(R, Q, ideals)
        e = expected[Q]
        assert (c.is_maximal, c.is_prime, c.is_primary, c.radical) == \
            (e["maximal"], e["prime"], e["primary"], e["radical"]), (k, Q)


@pytest.mark.parametrize("method", ["naive", "closure"])
def test_methods_agree_with_oracle_on_fixtures(fixtures, method):
    for name, M in fixtures.items():
        assert enumerate_hyperideals(M.ring, method=method) == naive_ideals(M.ring), name
        assert enumerate_subhypermodules(M, method=method) == naive_submodules(M), name


def test_methods_agree_on_generated(corpus):
    for M in corpus:
        assert enumerate_hyperideals(M.ring, method="closure") == naive_ideals(M.ring)
        assert enumerate_subhypermodules(M, method="closure") == naive_submodules(M)


def test_enumeration_bound():
    with pytest.raises(CapacityError):
        enumerate_hyperideals(zn_ring(13))
    assert len(enumerate_hyperideals(zn_ring(13), bound=13)) == 2


def test_closures():
    R = zn_ring(12)
    assert hyperideal_closure(R, 1 << 8) == zk_ideal(12, 4)
    assert hyperideal_closure(R, (1 << 4) | (1 << 6)) == zk_ideal(12, 2)
    M = v4_module()
    assert subhypermodule_closure(M, 0b0110) == 0b1111


def test_colon_and_residual():
    M = self_module(zn_ring(4))
    assert colon_ideal(M, 0b0101) == 0b0101
    assert colon_ideal(M, 0b0001) == 0b0001
    assert residual(M, 0b0101, 0b0001) == 0b0101  # 2 * {0,2} = 0
    V = v4_module()
    assert colon_ideal(V, 0b0011) == 0b01
    assert ideal_action(M, 0b0101) == 0b0101
    with pytest.raises(ValueError):
        ideal_action(M, 0)


def test_annihilators_and_faithful():
    Z4 = self_module(zn_ring(4))
    an = annihilator_sets(Z4, 2)
    assert an.A == 0b0101 and an.F == 0b0100
    assert not is_faithful(Z4)
    assert is_faithful(self_module(zn_ring(5)))
    assert is_faithful(v4_module())


def test_ideal_product():
    R = zn_ring(8)
    two, four = zk_ideal(8, 2), zk_ideal(8, 4)
    assert ideal_product(R, two, two) == four
    assert ideal_product(R, four, two) == 1


def test_powers_and_radical():
    R = zn_ring(8)
    assert power(R, 2, 3) == 0
    assert power(R, 3, 2) == 1
    assert radical(R, 1) == zk_ideal(8, 2)
    T = zn_ring(3, 3, 3)  # n = 3: powers 1, 2, 3, then 5, 7, ...
    assert power(T, 2, 3) == 2
    assert power(T, 2, 4) is None
    assert power(T, 2, 5) == 2


def test_jacobson_radical_ring():
    assert jacobson_radical_ring(zn_ring(12)) == zk_ideal(12, 6)
    assert jacobson_radical_ring(zn_ring(8)) == zk_ideal(8, 2)


def test_torsion_examples():
    # [DERIVED] P = {0,2} in Z4: h(1, -p) is 1 or 3, both units, so only 0 is killed
    M = self_module(zn_ring(4))
    tp = torsion_part(M, 0b0101)
    assert tp.X_lower == 0b0001 and tp.X_upper == 0b0001
    # Z6 over itself at P = (3): h(1,-3) = 4 kills {0, 3}
    M6 = self_module(zn_ring(6))
    assert torsion_part(M6, zk_ideal(6, 3)).X_lower == zk_ideal(6, 3)


def test_p_cyclic():
    M = self_module(zn_ring(6))
    ok, w = is_P_cyclic(M, zk_ideal(6, 2))
    assert ok
    q, m = w
    assert q in (0, 2, 4)
    assert p_cyclic_witness(M, zk_ideal(6, 2)) == w


@pytest.mark.parametrize("name", ["z4", "z6", "k2", "v4", "z2_over_z6", "z3_33"])
def test_maximal_submodules_are_coatoms(fixtures, name):
    M = fixtures[name]
    subs = enumerate_subhypermodules(M)
    maxes = maximal_subhypermodules(M, subs)
    for N in maxes:
        assert N != M.full
        assert not any(S != N and S != M.full and is_subset(N, S) for S in subs)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2**32))
def test_lattice_properties_on_corpus(idx, seed):
    """Ideals and submodules are closed under intersection, the action of an
    ideal is a submodule, and colon ideals are ideals with g(S_N, M) inside N.
    Checked on relabelled copies of generated instances."""
    from conftest import generated_corpus
    corpus = generated_corpus()
    M = random_relabel(corpus[idx % len(corpus)], random.Random(seed))
    R = M.ring
    ideals = enumerate_hyperideals(R)
    subs = enumerate_subhypermodules(M)
    assert ideals == naive_ideals(R) and subs == naive_submodules(M)
    for I in ideals:
        for J in ideals:
            assert I & J in ideals
        act = M.action(I, M.full)
        assert is_subhypermodule(M, act)
        Iset = {i for i in range(R.size) if I >> i & 1}
        assert act == sum(1 << y for y in oracle_action(M, Iset, set(range(M.size))))
    for N in subs:
        for K in subs:
            assert N & K in subs
        S = colon_ideal(M, N)
        assert is_hyperideal(R, S)
        assert is_subset(M.action(S, M.full), N)


def test_maximal_hyperideals_k2():
    assert maximal_hyperideals(k2_ring()) == [0b01]
