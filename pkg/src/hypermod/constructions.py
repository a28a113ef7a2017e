"""Quotient hypermodules, internal/external direct sums and submodule restriction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .bitset import from_indices, members, to_list
from .core import (Carrier, HyperOperation, Hypermodule, ValidationReport,
                   evaluate_extended_on_sets, validate_hypermodule)
from .errors import ArityError, CapacityError, StructureViolation, WellDefinednessError
from .substructures import is_subhypermodule

DEFAULT_SUM_BOUND = 64


def coset(M: Hypermodule, x: int, N: int) -> int:
    """``f(x, N, 0^(m-2))``."""
    return M.sum_sets(1 << x, N)


def coset_forms_agree(M: Hypermodule, N: int) -> bool:
    """Whether the multi-slot sets ``f(x_1..x_{i-1}, N, x_{i+1}..x_m)`` are
    exactly the cosets ``f(x, N, 0^(m-2))``."""
    m = M.ring.m
    simple = {coset(M, x, N) for x in range(M.size)}
    general = set()
    for i in range(m):
        for rest in itertools.product(range(M.size), repeat=m - 1):
            args = [1 << r for r in rest]
            args.insert(i, N)
            general.add(M.sum_sets(*args))
    return simple == general


@dataclass
class QuotientModule:
    base: Hypermodule
    divisor: int
    classes: list[int]
    class_of: tuple[int, ...]
    module: Hypermodule

    def image(self, subset: int) -> int:
        """Classes meeting ``subset``, as a mask over the quotient carrier."""
        return from_indices(self.class_of[x] for x in members(subset))

    def validate(self) -> ValidationReport:
        return validate_hypermodule(self.module)


def quotient(M: Hypermodule, N: int) -> QuotientModule:
    """``M/N`` with classes ``f(x, N, 0^(m-2))``; operations are checked to be
    independent of the chosen representatives."""
    if not is_subhypermodule(M, N):
        raise StructureViolation(f"{M.carrier.fmt(N)} is not a subhypermodule")
    R = M.ring
    classes: list[int] = []
    class_of = [-1] * M.size
    for x in range(M.size):
        c = coset(M, x, N)
        if class_of[x] >= 0:
            if classes[class_of[x]] != c:
                raise WellDefinednessError(f"coset of {M.carrier.labels[x]} differs from its class")
            continue
        if any(class_of[y] >= 0 for y in members(c)):
            raise WellDefinednessError(f"coset of {M.carrier.labels[x]} overlaps an earlier class")
        if not c >> x & 1:
            raise WellDefinednessError(f"{M.carrier.labels[x]} is not in its own coset")
        for y in members(c):
            class_of[y] = len(classes)
        classes.append(c)
    class_of = tuple(class_of)

    def lift(mask: int) -> int:
        return from_indices(class_of[y] for y in members(mask))

    m, n = R.m, R.n
    q = len(classes)
    ftab = []
    for cs in itertools.product(range(q), repeat=m):
        reps = [to_list(classes[c]) for c in cs]
        value = None
        for xs in itertools.product(*reps):
            v = lift(M.f(*xs))
            if value is None:
                value = v
            elif v != value:
                raise WellDefinednessError(f"F depends on representatives at classes {cs}")
        ftab.append(value)

    gtab = []
    for rs in itertools.product(range(R.size), repeat=n - 1):
        for c in range(q):
            value = None
            for x in members(classes[c]):
                v = lift(M.g(rs, x))
                if value is None:
                    value = v
                elif v != value:
                    raise WellDefinednessError(f"G depends on representatives at scalars {rs}, class {c}")
            gtab.append(value)

    labels = tuple("[" + M.carrier.labels[next(members(c))] + "]" for c in classes)
    QC = Carrier(labels)
    Q = Hypermodule(R, QC, HyperOperation(QC, m, tuple(ftab)), tuple(gtab), class_of[M.zero])
    return QuotientModule(M, N, classes, class_of, Q)


@dataclass
class DirectSumWitness:
    parts: list[int]
    l: int
    sum_check: bool
    independence_check: bool

    @property
    def holds(self) -> bool:
        return self.sum_check and self.independence_check


def fold_count(m: int, t: int) -> Optional[int]:
    """l with ``t = l(m-1)+1``, or None."""
    if t < 1 or (t - 1) % (m - 1):
        return None
    return (t - 1) // (m - 1)


def submodule_sum(M: Hypermodule, parts: Sequence[int]) -> int:
    """``f_(l)(N_1, ..., N_t)``; a single part is returned unchanged."""
    return evaluate_extended_on_sets(M.f, list(parts))


def internal_direct_sum_check(M: Hypermodule, parts: Sequence[int]) -> DirectSumWitness:
    t = len(parts)
    l = fold_count(M.ring.m, t)
    if l is None or l < 1:
        raise ArityError(f"{t} parts is not of the form l(m-1)+1 with l >= 1")
    zero = 1 << M.zero
    total = submodule_sum(M, parts)
    independent = True
    for i, P in enumerate(parts):
        rest = list(parts)
        rest[i] = zero
        if P & submodule_sum(M, rest) != zero:
            independent = False
            break
    return DirectSumWitness(list(parts), l, total == M.full, independent)


def external_direct_sum(Ms: Sequence[Hypermodule], bound: int = DEFAULT_SUM_BOUND) -> Hypermodule:
    """Cartesian product with componentwise f and g; element tuples are
    encoded first-component-most-significant."""
    if not Ms:
        raise ValueError("need at least one summand")
    R = Ms[0].ring
    if any(M.ring != R for M in Ms):
        raise ValueError("summands must share the ring")
    sizes = [M.size for M in Ms]
    total = 1
    for s in sizes:
        total *= s
    if total > bound:
        raise CapacityError(f"direct sum has {total} elements, bound is {bound}")
    comps = list(itertools.product(*(range(s) for s in sizes)))

    def encode(parts):
        i = 0
        for p, s in zip(parts, sizes):
            i = i * s + p
        return i

    def product_mask(masks):
        return from_indices(encode(p) for p in itertools.product(*(to_list(v) for v in masks)))

    labels = tuple("(" + ",".join(M.carrier.labels[c] for M, c in zip(Ms, cs)) + ")" for cs in comps)
    C = Carrier(labels)
    m, n = R.m, R.n
    ftab = tuple(
        product_mask([M.f(*(x[j] for x in xs)) for j, M in enumerate(Ms)])
        for xs in itertools.product(comps, repeat=m))
    gtab = tuple(
        product_mask([M.g(rs, x[j]) for j, M in enumerate(Ms)])
        for rs in itertools.product(range(R.size), repeat=n - 1)
        for x in comps)
    return Hypermodule(R, C, HyperOperation(C, m, ftab), gtab, encode([M.zero for M in Ms]))


def embedding_images(Ms: Sequence[Hypermodule]) -> list[int]:
    """Images of the canonical embeddings of each summand in ``external_direct_sum(Ms)``."""
    sizes = [M.size for M in Ms]
    out = []
    for j in range(len(Ms)):
        mask = 0
        for cs in itertools.product(*(range(s) for s in sizes)):
            if all(c == Mi.zero for i, (c, Mi) in enumerate(zip(cs, Ms)) if i != j):
                idx = 0
                for c, s in zip(cs, sizes):
                    idx = idx * s + c
                mask |= 1 << idx
        out.append(mask)
    return out


def restrict(M: Hypermodule, N: int) -> Hypermodule:
    """The subhypermodule N as a hypermodule in its own right (labels kept)."""
    if not is_subhypermodule(M, N):
        raise StructureViolation(f"{M.carrier.fmt(N)} is not a subhypermodule")
    R = M.ring
    elems = to_list(N)
    pos = {x: i for i, x in enumerate(elems)}
    C = Carrier(tuple(M.carrier.labels[x] for x in elems))

    def shrink(mask):
        return from_indices(pos[y] for y in members(mask))

    ftab = tuple(shrink(M.f(*xs)) for xs in itertools.product(elems, repeat=R.m))
    gtab = tuple(shrink(M.g(rs, x))
                 for rs in itertools.product(range(R.size), repeat=R.n - 1) for x in elems)
    return Hypermodule(R, C, HyperOperation(C, R.m, ftab), gtab, pos[M.zero])
