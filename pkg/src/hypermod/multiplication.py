"""Deciding the multiplication property and the invariants that go with it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bitset import intersect_all, is_subset, members
from .core import Hypermodule, KrasnerHyperring
from .errors import CapacityError
from .substructures import (by_popcount, enumerate_hyperideals, enumerate_subhypermodules,
                            joint_powers, maximal_subhypermodules, residual)

COFINITE_CAP = 20


@dataclass
class MultiplicationCertificate:
    verdict: bool
    witnesses: dict[int, Optional[int]] = field(default_factory=dict)
    failing: Optional[int] = None


def multiplication_certificate(M: Hypermodule, ideals: Optional[Sequence[int]] = None,
                               submodules: Optional[Sequence[int]] = None,
                               within: Optional[int] = None) -> MultiplicationCertificate:
    """Witness ideals for every subhypermodule.

    With ``within`` set to a subhypermodule N0, N0 is treated as a hypermodule
    in its own right: its subhypermodules are those of M inside N0 and the
    action is ``g(I, 1, N0)``.  The colon ideal is tried first, then all
    hyperideals by increasing size.
    """
    ideals = enumerate_hyperideals(M.ring) if ideals is None else ideals
    submodules = enumerate_subhypermodules(M) if submodules is None else submodules
    top = M.full if within is None else within
    ordered = by_popcount(ideals)
    cert = MultiplicationCertificate(True)
    for N in submodules:
        if not is_subset(N, top):
            continue
        colon = residual(M, top, N)
        found = None
        if M.action(colon, top) == N:
            found = colon
        else:
            for I in ordered:
                if M.action(I, top) == N:
                    found = I
                    break
        cert.witnesses[N] = found
        if found is None and cert.verdict:
            cert.verdict = False
            cert.failing = N
    return cert


def is_multiplication(M: Hypermodule, **kw) -> MultiplicationCertificate:
    return multiplication_certificate(M, **kw)


def is_cyclic(M: Hypermodule, within: Optional[int] = None) -> Optional[int]:
    """Least generator m with ``g(R, 1^(n-2), m)`` equal to the (sub)module."""
    top = M.full if within is None else within
    for x in members(top):
        if M.action(M.ring.full, 1 << x) == top:
            return x
    return None


@dataclass
class OmegaData:
    members: list[int]
    omega_M: int


def omega(M: Hypermodule, ideals: Optional[Sequence[int]] = None) -> OmegaData:
    ideals = enumerate_hyperideals(M.ring) if ideals is None else ideals
    fam = [A for A in ideals if M.action(A, M.full) == M.full]
    return OmegaData(fam, intersect_all(fam, M.ring.full))


@dataclass
class CofiniteReport:
    holds: bool
    minimal_families: list[list[int]]
    zero_families: int
    max_family_size: int


def cofinite_families(masks: Sequence[int], zero: int, cap: int = COFINITE_CAP) -> CofiniteReport:
    """Literal check: every nonempty family with intersection ``zero`` has a
    finite subfamily with the same intersection.

    Each such family contains one of the reported minimal families.
    """
    c = len(masks)
    if c > cap:
        raise CapacityError(f"{c} members exceed the family cap {cap}")
    inter = [0] * (1 << c)
    universe = 0
    for s in masks:
        universe |= s
    inter[0] = universe | zero
    zero_count = 0
    minimal = []
    for F in range(1, 1 << c):
        low = (F & -F).bit_length() - 1
        inter[F] = inter[F & (F - 1)] & masks[low]
        if inter[F] == zero:
            zero_count += 1
            if all(inter[F & ~(1 << i)] != zero for i in members(F) if F & ~(1 << i)):
                minimal.append([masks[i] for i in members(F)])
    # On a finite lattice every such family is its own finite subfamily.
    holds = zero_count == 0 or bool(minimal)
    return CofiniteReport(holds, minimal, zero_count, c)


def is_cofinitely_generated(M: Hypermodule, submodules: Optional[Sequence[int]] = None) -> CofiniteReport:
    submodules = enumerate_subhypermodules(M) if submodules is None else submodules
    return cofinite_families(list(submodules), 1 << M.zero)


def is_ring_cofinitely_generated(R: KrasnerHyperring, ideals: Optional[Sequence[int]] = None) -> CofiniteReport:
    ideals = enumerate_hyperideals(R) if ideals is None else ideals
    return cofinite_families(list(ideals), 1 << R.zero)


def jacobson_radical_module(M: Hypermodule, submodules: Optional[Sequence[int]] = None) -> int:
    """Intersection of the maximal subhypermodules; M itself when there are none."""
    return intersect_all(maximal_subhypermodules(M, submodules), M.full)


def is_primary_subhypermodule(M: Hypermodule, N: int) -> tuple[bool, Optional[tuple]]:
    """Returns ``(ok, (scalars, x))`` with the first violating hypothesis tuple."""
    if N == M.full:
        raise ValueError("primary subhypermodules are proper")
    R = M.ring
    settled: dict[tuple[int, ...], bool] = {}
    for rs in itertools.product(range(R.size), repeat=R.n - 1):
        for x in range(M.size):
            if N >> x & 1 or not is_subset(M.g(rs, x), N):
                continue
            if rs not in settled:
                settled[rs] = any(
                    is_subset(M.g_sets([1 << p for p in pw], M.full), N)
                    for _, pw in joint_powers(R, rs))
            if not settled[rs]:
                return False, (rs, x)
    return True, None
