"""Small named structures used throughout the tests and docs.

``Z(k)`` is the classical ring Z/k with singleton sums; ``K2`` is the
two-element Krasner hyperfield with ``h(1,1) = {0,1}`` and ``k = min``.
"""

from __future__ import annotations

import math

from .core import Carrier, HyperOperation, Hypermodule, KrasnerHyperring, Operation


def zn_ring(k: int, m: int = 2, n: int = 2) -> KrasnerHyperring:
    C = Carrier.of_size(k)
    h = HyperOperation.from_function(C, m, lambda *xs: [sum(xs) % k])
    mul = Operation.from_function(C, n, lambda *xs: math.prod(xs) % k)
    return KrasnerHyperring(C, h, mul, 0, 1 % k)


def k2_ring() -> KrasnerHyperring:
    C = Carrier(("0", "1"))
    h = HyperOperation.from_function(
        C, 2, lambda x, y: [0, 1] if x == y == 1 else [max(x, y)])
    mul = Operation.from_function(C, 2, min)
    return KrasnerHyperring(C, h, mul, 0, 1)


def self_module(R: KrasnerHyperring) -> Hypermodule:
    """R as a hypermodule over itself with ``g(r_1..r_{n-1}, x) = {k(r_1..r_{n-1}, x)}``."""
    return Hypermodule.from_function(R, R.carrier, R.h, lambda *rx: [R.mul(*rx)], R.zero)


def cyclic_module(R: KrasnerHyperring, a: int) -> Hypermodule:
    """Z/a over a classical ring Z/k (a must divide k), scalars acting by multiplication."""
    k = R.size
    if k % a:
        raise ValueError(f"{a} does not divide {k}")
    C = Carrier.of_size(a)
    f = HyperOperation.from_function(C, R.m, lambda *xs: [sum(xs) % a])
    return Hypermodule.from_function(R, C, f, lambda *rx: [math.prod(rx) % a], 0)


def v4_module() -> Hypermodule:
    """Z/2 x Z/2 over Z/2, componentwise."""
    R = zn_ring(2)
    C = Carrier(("00", "01", "10", "11"))
    f = HyperOperation.from_function(C, 2, lambda x, y: [x ^ y])
    return Hypermodule.from_function(R, C, f, lambda r, x: [x if r else 0], 0)


def zero_module(R: KrasnerHyperring) -> Hypermodule:
    C = Carrier(("0",))
    f = HyperOperation.from_function(C, R.m, lambda *xs: [0])
    return Hypermodule.from_function(R, C, f, lambda *rx: [0], 0)
