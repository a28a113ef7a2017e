import itertools

import pytest

from hypermod.constructions import (coset, coset_forms_agree, embedding_images, external_direct_sum,
                                    fold_count, internal_direct_sum_check, quotient, restrict,
                                    submodule_sum)
from hypermod.core import validate_hypermodule
from hypermod.errors import ArityError, CapacityError, StructureViolation
from hypermod.fixtures import cyclic_module, self_module, v4_module, zn_ring
from hypermod.substructures import enumerate_subhypermodules

from oracles import zk_ideal


def same_tables(A, B, perm):
    """A maps onto B by x -> perm[x] (shared ring, identity on scalars)."""
    R = A.ring
    for xs in itertools.product(range(A.size), repeat=R.m):
        img = sum(1 << perm[y] for y in range(A.size) if A.f(*xs) >> y & 1)
        if img != B.f(*(perm[x] for x in xs)):
            return False
    for rs in itertools.product(range(R.size), repeat=R.n - 1):
        for x in range(A.size):
            img = sum(1 << perm[y] for y in range(A.size) if A.g(rs, x) >> y & 1)
            if img != B.g(rs, perm[x]):
                return False
    return perm[A.zero] == B.zero


def test_fold_count():
    assert fold_count(2, 1) == 0
    assert fold_count(2, 4) == 3
    assert fold_count(3, 2) is None
    assert fold_count(3, 5) == 2
    assert fold_count(4, 0) is None


def test_z4_mod_two_is_z2():
    R = zn_ring(4)
    q = quotient(self_module(R), 0b0101)
    assert q.classes == [0b0101, 0b1010]
    assert q.class_of == (0, 1, 0, 1)
    assert q.module.carrier.labels == ("[0]", "[1]")
    assert same_tables(q.module, cyclic_module(R, 2), [0, 1])
    assert q.validate().valid
    assert q.image(0b0110) == 0b11


def test_quotient_requires_submodule():
    with pytest.raises(StructureViolation):
        quotient(self_module(zn_ring(4)), 0b0011)


def test_quotients_and_restrictions_validate(fixtures, corpus):
    cases = list(fixtures.values()) + list(corpus)
    for M in cases:
        for N in enumerate_subhypermodules(M):
            assert coset_forms_agree(M, N)
            q = quotient(M, N)
            assert q.validate().valid
            # cosets partition M but need not share a size
            assert sum(q.classes) == M.full
            assert q.image(N) == 1 << q.class_of[M.zero]
            assert validate_hypermodule(restrict(M, N)).valid


def test_ternary_quotient():
    M = self_module(zn_ring(3, 3, 3))
    q = quotient(M, 0b111)
    assert q.module.size == 1
    assert coset(M, 1, 0b001) == 0b010


def test_z2_plus_z3_is_z6():
    R = zn_ring(6)
    parts = [cyclic_module(R, 2), cyclic_module(R, 3)]
    S = external_direct_sum(parts)
    assert S.size == 6 and validate_hypermodule(S).valid
    # x -> (x mod 2, x mod 3), encoded first component most significant
    perm = [(x % 2) * 3 + x % 3 for x in range(6)]
    assert same_tables(self_module(R), S, perm)
    imgs = embedding_images(parts)
    assert imgs == [0b001001, 0b000111]
    w = internal_direct_sum_check(S, imgs)
    assert w.holds and w.l == 1
    for j, img in enumerate(imgs):
        assert same_tables(restrict(S, img), parts[j], list(range(parts[j].size)))


def test_internal_direct_sums():
    Z6 = self_module(zn_ring(6))
    assert internal_direct_sum_check(Z6, [zk_ideal(6, 2), zk_ideal(6, 3)]).holds
    w = internal_direct_sum_check(Z6, [zk_ideal(6, 2), zk_ideal(6, 2)])
    assert not w.sum_check and not w.independence_check
    V = v4_module()
    assert internal_direct_sum_check(V, [0b0011, 0b0101]).holds
    w = internal_direct_sum_check(V, [0b0011, 0b0101, 0b1001])
    assert w.sum_check and not w.independence_check and w.l == 2
    assert submodule_sum(V, [0b0011]) == 0b0011
    with pytest.raises(ArityError):
        internal_direct_sum_check(V, [0b0011])
    with pytest.raises(ArityError):
        internal_direct_sum_check(self_module(zn_ring(3, 3, 3)), [0b001, 0b111])


def test_external_sum_guards():
    R = zn_ring(4)
    with pytest.raises(CapacityError):
        external_direct_sum([self_module(R)] * 4, bound=64)
    with pytest.raises(ValueError):
        external_direct_sum([self_module(R), self_module(zn_ring(2))])
    with pytest.raises(ValueError):
        external_direct_sum([])


def test_ternary_direct_sum():
    R = zn_ring(3, 3, 3)
    M = self_module(R)
    S = external_direct_sum([M, M, M])
    assert S.size == 27
    assert internal_direct_sum_check(S, embedding_images([M, M, M])).holds
