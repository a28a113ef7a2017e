"""Hyperideals, subhypermodules and the ideal-theoretic objects built from them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .bitset import intersect_all, is_subset, members, popcount
from .core import (HyperOperation, Hypermodule, KrasnerHyperring, _encode,
                   evaluate_on_sets)
from .errors import CapacityError, InternalAssertError, StructureViolation

DEFAULT_ENUM_BOUND = 12
NAIVE_LIMIT = 8


# ---------------------------------------------------------------------------
# membership predicates


def is_subhypergroup(op: HyperOperation, mask: int) -> bool:
    """Closure plus solvability of ``b in op(b.., x, ..b)`` inside the subset."""
    if not mask:
        return False
    t = op.arity
    elems = list(members(mask))
    if not is_subset(evaluate_on_sets(op, [mask] * t), mask):
        return False
    size = op.carrier.size
    tab = op.table
    for i in range(t):
        for rest in itertools.product(elems, repeat=t - 1):
            reach = 0
            for x in elems:
                reach |= tab[_encode(size, rest[:i] + (x,) + rest[i:])]
            if not is_subset(mask, reach):
                return False
    return True


def _absorbs(R: KrasnerHyperring, mask: int) -> bool:
    size, n = R.size, R.n
    ktab = R.k.table
    for i in range(n):
        for rest in itertools.product(range(size), repeat=n - 1):
            pre, post = rest[:i], rest[i:]
            for y in members(mask):
                if not mask >> ktab[_encode(size, pre + (y,) + post)] & 1:
                    return False
    return True


def is_hyperideal(R: KrasnerHyperring, mask: int) -> bool:
    return bool(mask) and is_subhypergroup(R.h, mask) and _absorbs(R, mask)


def is_subhypermodule(M: Hypermodule, mask: int) -> bool:
    if not mask or not is_subhypergroup(M.f, mask):
        return False
    all_scalars = [M.ring.full] * (M.ring.n - 1)
    return is_subset(M.g_sets(all_scalars, mask), mask)


# ---------------------------------------------------------------------------
# closures and enumeration


def _neg_table(op: HyperOperation, zero: int) -> list[int]:
    size, t = op.carrier.size, op.arity
    out = []
    for x in range(size):
        inv = 0
        for y in range(size):
            if op(x, y, *([zero] * (t - 2))) >> zero & 1:
                inv |= 1 << y
        out.append(inv)
    return out


def _close(mask: int, op: HyperOperation, neg: Sequence[int], spread: Sequence[int]) -> int:
    """Least superset closed under ``op``, inverses and the per-element ``spread`` map."""
    t = op.arity
    while True:
        new = mask
        for x in members(mask):
            new |= neg[x] | spread[x]
        new |= evaluate_on_sets(op, [new] * t)
        if new == mask:
            return mask
        mask = new


def _ring_spread(R: KrasnerHyperring) -> list[int]:
    size, n = R.size, R.n
    ktab = R.k.table
    out = []
    for y in range(size):
        s = 0
        for i in range(n):
            for rest in itertools.product(range(size), repeat=n - 1):
                s |= 1 << ktab[_encode(size, rest[:i] + (y,) + rest[i:])]
        out.append(s)
    return out


def _module_spread(M: Hypermodule) -> list[int]:
    all_scalars = [M.ring.full] * (M.ring.n - 1)
    return [M.g_sets(all_scalars, 1 << x) for x in range(M.size)]


def hyperideal_closure(R: KrasnerHyperring, mask: int) -> int:
    """Smallest hyperideal containing ``mask`` (on a validated ring)."""
    return _close(mask | 1 << R.zero, R.h, _neg_table(R.h, R.zero), _ring_spread(R))


def subhypermodule_closure(M: Hypermodule, mask: int) -> int:
    return _close(mask | 1 << M.zero, M.f, _neg_table(M.f, M.zero), _module_spread(M))


def _closure_lattice(size: int, close) -> list[int]:
    start = close(0)
    seen = {start}
    todo = [start]
    while todo:
        cur = todo.pop()
        for x in range(size):
            if not cur >> x & 1:
                nxt = close(cur | 1 << x)
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    return sorted(seen)


def _check_bound(size: int, bound: int):
    if size > bound:
        raise CapacityError(f"carrier of size {size} exceeds enumeration bound {bound}")


def enumerate_hyperideals(R: KrasnerHyperring, bound: int = DEFAULT_ENUM_BOUND,
                          method: str = "auto") -> list[int]:
    """All hyperideals as bitmasks, ascending.

    ``method`` is ``naive`` (filter every nonempty subset), ``closure``
    (grow closures of generator sets) or ``auto`` (naive up to size 8).
    """
    _check_bound(R.size, bound)
    if method == "auto":
        method = "naive" if R.size <= NAIVE_LIMIT else "closure"
    if method == "naive":
        return [s for s in range(1, 1 << R.size) if is_hyperideal(R, s)]
    neg, spread = _neg_table(R.h, R.zero), _ring_spread(R)
    found = _closure_lattice(R.size, lambda s: _close(s | 1 << R.zero, R.h, neg, spread))
    for s in found:
        if not is_hyperideal(R, s):
            raise InternalAssertError(f"closure {R.carrier.fmt(s)} is not a hyperideal")
    return found


def enumerate_subhypermodules(M: Hypermodule, bound: int = DEFAULT_ENUM_BOUND,
                              method: str = "auto") -> list[int]:
    _check_bound(M.size, bound)
    if method == "auto":
        method = "naive" if M.size <= NAIVE_LIMIT else "closure"
    if method == "naive":
        return [s for s in range(1, 1 << M.size) if is_subhypermodule(M, s)]
    neg, spread = _neg_table(M.f, M.zero), _module_spread(M)
    found = _closure_lattice(M.size, lambda s: _close(s | 1 << M.zero, M.f, neg, spread))
    for s in found:
        if not is_subhypermodule(M, s):
            raise InternalAssertError(f"closure {M.carrier.fmt(s)} is not a subhypermodule")
    return found


def maximal_elements(proper: Sequence[int]) -> list[int]:
    """Members of a family not strictly contained in another member."""
    return [a for a in proper if not any(a != b and is_subset(a, b) for b in proper)]


def maximal_hyperideals(R: KrasnerHyperring, ideals: Optional[Sequence[int]] = None) -> list[int]:
    ideals = enumerate_hyperideals(R) if ideals is None else ideals
    return maximal_elements([i for i in ideals if i != R.full])


def maximal_subhypermodules(M: Hypermodule, submodules: Optional[Sequence[int]] = None) -> list[int]:
    subs = enumerate_subhypermodules(M) if submodules is None else submodules
    return maximal_elements([s for s in subs if s != M.full])


# ---------------------------------------------------------------------------
# derived sets


def colon_ideal(M: Hypermodule, N: int) -> int:
    """``S_N = {r | g(r, 1^(n-2), M) <= N}``; raises if it is not a hyperideal."""
    out = 0
    for r in range(M.ring.size):
        if is_subset(M.action(1 << r, M.full), N):
            out |= 1 << r
    if not is_hyperideal(M.ring, out):
        raise StructureViolation(f"S_N for N = {M.carrier.fmt(N)} is not a hyperideal")
    return out


def residual(M: Hypermodule, source: int, target: int) -> int:
    """``{r | g(r, 1^(n-2), source) <= target}`` (no hyperideal check)."""
    out = 0
    for r in range(M.ring.size):
        if is_subset(M.action(1 << r, source), target):
            out |= 1 << r
    return out


@dataclass(frozen=True)
class Annihilators:
    A: int
    F: int


def annihilator_sets(M: Hypermodule, x: int) -> Annihilators:
    """``A(x) = {r | 0 in g(r, 1^(n-2), x)}`` and ``F_x = A(x) minus {0}``."""
    a = 0
    for r in range(M.ring.size):
        if M.act1[r][x] >> M.zero & 1:
            a |= 1 << r
    return Annihilators(a, a & ~(1 << M.ring.zero))


def is_faithful(M: Hypermodule) -> bool:
    return all(annihilator_sets(M, x).F == 0 for x in range(M.size) if x != M.zero)


def ideal_action(M: Hypermodule, I: int, check: bool = True) -> int:
    """``g(I, 1^(n-2), M)``; with ``check`` the result must be a subhypermodule
    whenever I is a hyperideal."""
    if not I:
        raise ValueError("ideal must be nonempty")
    out = M.action(I, M.full)
    if check and is_hyperideal(M.ring, I) and not is_subhypermodule(M, out):
        raise StructureViolation(
            f"g({M.ring.carrier.fmt(I)}, 1, M) = {M.carrier.fmt(out)} is not a subhypermodule")
    return out


def ideal_product(R: KrasnerHyperring, I: int, J: int) -> int:
    """Smallest hyperideal containing every ``k(a, b, 1^(n-2))``."""
    gens = 0
    for a in members(I):
        for b in members(J):
            gens |= 1 << R.mul_pad(a, b)
    return hyperideal_closure(R, gens)


# ---------------------------------------------------------------------------
# powers, radicals, classification


def power(R: KrasnerHyperring, r: int, t: int) -> Optional[int]:
    """The t-th k-power: ``k(r^(t), 1^(n-t))`` for t <= n, ``k_(l)(r^(t))`` for
    t = l(n-1)+1 > n, None for other t."""
    n = R.n
    if t < 1:
        raise ValueError("t must be positive")
    if t <= n:
        return R.mul(*([r] * t + [R.one] * (n - t)))
    if (t - 1) % (n - 1):
        return None
    p = R.mul(*([r] * n))
    for _ in range((t - 1) // (n - 1) - 1):
        p = R.mul(p, *([r] * (n - 1)))
    return p


def joint_powers(R: KrasnerHyperring, rs: Sequence[int]) -> Iterator[tuple[int, tuple[int, ...]]]:
    """``(t, (power(r, t) for r in rs))`` over representable t, stopping once
    the joint sequence has cycled."""
    n = R.n
    for t in range(1, n + 1):
        yield t, tuple(power(R, r, t) for r in rs)
    state = tuple(R.mul(*([r] * n)) for r in rs)
    seen = {state}
    t = n
    while True:
        state = tuple(R.mul(p, *([r] * (n - 1))) for p, r in zip(state, rs))
        t += n - 1
        if state in seen:
            return
        seen.add(state)
        yield t, state


def radical(R: KrasnerHyperring, Q: int) -> int:
    out = 0
    for r in range(R.size):
        if any(Q >> p[0] & 1 for _, p in joint_powers(R, (r,))):
            out |= 1 << r
    return out


def is_prime_ideal(R: KrasnerHyperring, Q: int) -> bool:
    if Q == R.full:
        return False
    for xs in itertools.product(range(R.size), repeat=R.n):
        if Q >> R.mul(*xs) & 1 and not any(Q >> x & 1 for x in xs):
            return False
    return True


def is_primary_ideal(R: KrasnerHyperring, Q: int, rad: Optional[int] = None) -> bool:
    """``k(x_1^n) in Q`` and ``x_i not in Q`` imply ``k(x with x_i -> 1) in rad(Q)``."""
    if Q == R.full:
        return False
    rad = radical(R, Q) if rad is None else rad
    for xs in itertools.product(range(R.size), repeat=R.n):
        if not Q >> R.mul(*xs) & 1:
            continue
        for i, x in enumerate(xs):
            if not Q >> x & 1:
                rest = xs[:i] + (R.one,) + xs[i + 1:]
                if not rad >> R.mul(*rest) & 1:
                    return False
    return True


@dataclass(frozen=True)
class IdealClassification:
    ideal: int
    is_maximal: bool
    is_prime: bool
    is_primary: bool
    radical: int


def classify_ideal(R: KrasnerHyperring, Q: int, ideals: Optional[Sequence[int]] = None) -> IdealClassification:
    ideals = enumerate_hyperideals(R) if ideals is None else ideals
    proper = Q != R.full
    maximal = proper and not any(J != Q and J != R.full and is_subset(Q, J) for J in ideals)
    rad = radical(R, Q)
    return IdealClassification(Q, maximal, is_prime_ideal(R, Q), is_primary_ideal(R, Q, rad), rad)


def jacobson_radical_ring(R: KrasnerHyperring, ideals: Optional[Sequence[int]] = None) -> int:
    maxes = maximal_hyperideals(R, ideals)
    if not maxes:
        raise InternalAssertError("ring has no maximal hyperideal")
    return intersect_all(maxes, R.full)


# ---------------------------------------------------------------------------
# P-torsion and P-cyclicity


@dataclass(frozen=True)
class TorsionPart:
    X_lower: int
    X_upper: int


def torsion_part(M: Hypermodule, P: int) -> TorsionPart:
    """Elements x with ``0 in`` (lower) or ``{0} =`` (upper)
    ``g(h(1, -p, 0^(m-2)), 1^(n-2), x)`` for some p in P."""
    R = M.ring
    shifts = [R.unit_shift(p) for p in members(P)]
    lower = upper = 0
    zero = 1 << M.zero
    for x in range(M.size):
        for s in shifts:
            v = M.action(s, 1 << x)
            if v & zero:
                lower |= 1 << x
            if v == zero:
                upper |= 1 << x
    return TorsionPart(lower, upper)


def p_cyclic_witness(M: Hypermodule, P: int, within: Optional[int] = None) -> Optional[tuple[int, int]]:
    """Least ``(q, m)`` with q in P, m in the submodule, and
    ``g(h(1,-q,0), 1, N) <= g(R, 1, m)``; ``within`` defaults to all of M."""
    R = M.ring
    N = M.full if within is None else within
    orbits = {x: M.action(R.full, 1 << x) for x in members(N)}
    for q in members(P):
        lhs = M.action(R.unit_shift(q), N)
        for x in members(N):
            if is_subset(lhs, orbits[x]):
                return q, x
    return None


def is_P_cyclic(M: Hypermodule, P: int) -> tuple[bool, Optional[tuple[int, int]]]:
    w = p_cyclic_witness(M, P)
    return w is not None, w


def by_popcount(masks: Sequence[int]) -> list[int]:
    return sorted(masks, key=lambda s: (popcount(s), s))
