"""Generation of small canonical hypergroups, Krasner hyperrings and
hypermodules, plus counterexample hunting over them.

All generators fill tables cell by cell.  A partial table stores 0 for an
unknown entry (real entries are nonempty masks), and every check below skips
any instance that touches an unknown cell, so the same code prunes partial
tables and validates complete ones.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .bitset import members, to_list
from .core import (Carrier, HyperOperation, Hypermodule, KrasnerHyperring, Operation, _encode,
                   check_canonical_hypergroup, validate_hypermodule, validate_krasner_hyperring)
from .errors import CapacityError
from .harness import THEOREM_IDS, Analysis, TheoremVerdict, known_target, run_theorem

EXHAUSTIVE_HYPERGROUP_SIZE = 5
EXHAUSTIVE_HYPERGROUP_ARITY = 3
EXHAUSTIVE_SIZE = 6
STALE_LIMIT = 25
PROPERTY_TARGETS = ("is_multiplication", "is_faithful", "standing_assumptions")


class _Unknown(Exception):
    pass


def _peval(table: Sequence[int], size: int, args: Sequence[int]) -> int:
    out = 0
    for xs in itertools.product(*(to_list(a) for a in args)):
        v = table[_encode(size, xs)]
        if not v:
            raise _Unknown
        out |= v
    return out


def _associative(table: Sequence[int], size: int, arity: int) -> bool:
    for xs in itertools.product(range(size), repeat=2 * arity - 1):
        single = [1 << x for x in xs]
        try:
            ref = _peval(table, size, [_peval(table, size, single[:arity])] + single[arity:])
            for i in range(1, arity):
                inner = _peval(table, size, single[i:i + arity])
                if _peval(table, size, single[:i] + [inner] + single[i + arity:]) != ref:
                    return False
        except _Unknown:
            continue
    return True


def _map_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for x in members(mask):
        out |= 1 << perm[x]
    return out


def _permute(table: Sequence[int], size: int, arity: int, perm: Sequence[int]) -> tuple[int, ...]:
    new = [0] * len(table)
    for idx, xs in enumerate(itertools.product(range(size), repeat=arity)):
        new[_encode(size, [perm[x] for x in xs])] = _map_mask(table[idx], perm)
    return tuple(new)


def _perms_fixing_zero(size: int) -> Iterator[tuple[int, ...]]:
    for rest in itertools.permutations(range(1, size)):
        yield (0,) + rest


def hypergroup_canonical_form(op: HyperOperation) -> tuple[int, ...]:
    """Least relabelled table over permutations fixing index 0."""
    size = op.carrier.size
    return min(_permute(op.table, size, op.arity, p) for p in _perms_fixing_zero(size))


def ring_canonical_form(R: KrasnerHyperring) -> tuple:
    size = R.size
    return min((_permute(R.h.table, size, R.m, p), _permute(R.k.mask_table, size, R.n, p), p[R.one])
               for p in _perms_fixing_zero(size))


def _permute_g(M: Hypermodule, perm: Sequence[int]) -> tuple[int, ...]:
    size = M.size
    new = [0] * len(M.g_table)
    for idx, v in enumerate(M.g_table):
        base, x = divmod(idx, size)
        new[base * size + perm[x]] = _map_mask(v, perm)
    return tuple(new)


def module_canonical_form(M: Hypermodule) -> tuple:
    """Relabelling of the module carrier only; the ring is held fixed."""
    return min((_permute(M.f.table, M.size, M.f.arity, p), _permute_g(M, p))
               for p in _perms_fixing_zero(M.size))


def _backtrack(cells: list[tuple[list[int], list[int]]], table: list[int],
               ok, rng: Optional[random.Random]) -> Iterator[None]:
    """Assign each cell group (indices, options) in turn, yielding at every
    complete table for which ``ok(table)`` held after each assignment."""
    def go(i):
        if i == len(cells):
            yield None
            return
        idxs, opts = cells[i]
        if rng is not None:
            opts = list(opts)
            rng.shuffle(opts)
        for v in opts:
            for j in idxs:
                table[j] = v
            if ok(table):
                yield from go(i + 1)
        for j in idxs:
            table[j] = 0
    yield from go(0)


def _orbit(cell: Sequence[int], size: int) -> list[int]:
    return sorted({_encode(size, p) for p in itertools.permutations(cell)})


def _involution_reps(size: int) -> Iterator[tuple[int, ...]]:
    """One involution of {1..size-1} per conjugacy class, 0 fixed."""
    for pairs in range((size - 1) // 2 + 1):
        inv = list(range(size))
        for p in range(pairs):
            a, b = 2 * p + 1, 2 * p + 2
            inv[a], inv[b] = b, a
        yield tuple(inv)


def _hypergroup_cells(size: int, m: int, inv: Sequence[int]) -> tuple[list[int], list]:
    """Partial table with the neutral cells filled, plus the free cell groups
    (one per multiset of arguments) with options respecting the inverse map."""
    top = (1 << size) - 1
    table = [0] * size**m
    cells = []
    for cell in itertools.combinations_with_replacement(range(size), m):
        nz = [x for x in cell if x]
        if len(nz) <= 1:
            v = 1 << (nz[0] if nz else 0)
            for j in _orbit(cell, size):
                table[j] = v
            continue
        if len(nz) == 2:
            want0 = inv[nz[0]] == nz[1]
            opts = [v for v in range(1, top + 1) if bool(v & 1) == want0]
        else:
            opts = list(range(1, top + 1))
        cells.append((_orbit(cell, size), opts))
    return table, cells


def generate_canonical_hypergroups(size: int, m: int = 2, dedup: bool = True,
                                   rng: Optional[random.Random] = None) -> Iterator[HyperOperation]:
    """Commutative canonical m-ary hypergroups on ``size`` points with neutral 0.

    Without ``rng`` the search is exhaustive and results come in a fixed
    order; with it, option order is shuffled (use ``next`` for one sample).
    """
    if rng is None and (size > EXHAUSTIVE_HYPERGROUP_SIZE or m > EXHAUSTIVE_HYPERGROUP_ARITY):
        raise CapacityError(f"exhaustive hypergroup generation is limited to size <= "
                            f"{EXHAUSTIVE_HYPERGROUP_SIZE}, m <= {EXHAUSTIVE_HYPERGROUP_ARITY}")
    if size < 1 or m < 2:
        raise ValueError("need size >= 1 and m >= 2")
    C = Carrier.of_size(size)
    seen = set()
    invs = list(_involution_reps(size))
    if rng is not None:
        rng.shuffle(invs)
    for inv in invs:
        table, cells = _hypergroup_cells(size, m, inv)
        for _ in _backtrack(cells, table, lambda t: _associative(t, size, m), rng):
            op = HyperOperation(C, m, tuple(table))
            rep = check_canonical_hypergroup(op)
            if not rep.is_canonical or rep.neutral != 0:
                continue
            if dedup:
                key = hypergroup_canonical_form(op)
                if key in seen:
                    continue
                seen.add(key)
            yield op


def _distributive_partial(h: Sequence[int], k: Sequence[int], size: int, m: int, n: int) -> bool:
    for xs in itertools.product(range(size), repeat=m):
        hx = h[_encode(size, xs)]
        for ys in itertools.product(range(size), repeat=n - 1):
            tail = [1 << y for y in ys]
            try:
                lhs = _peval(k, size, [hx] + tail)
                rhs = _peval(h, size, [_peval(k, size, [1 << x] + tail) for x in xs])
            except _Unknown:
                continue
            if lhs != rhs:
                return False
    return True


def _ring_from(C: Carrier, h: HyperOperation, ktab: Sequence[int], n: int, one: int) -> KrasnerHyperring:
    k = Operation(C, n, tuple(v.bit_length() - 1 for v in ktab))
    return KrasnerHyperring(C, h, k, 0, one)


def generate_krasner_hyperrings(size: int, m: int = 2, n: int = 2, dedup: bool = True,
                                rng: Optional[random.Random] = None,
                                additive: Optional[Sequence[HyperOperation]] = None) -> Iterator[KrasnerHyperring]:
    """Krasner (m,n)-hyperrings on ``size`` points with zero 0.

    Additive structures are the outer loop; multiplication tables are filled
    with commutativity, absorption and unit built in and associativity and
    distributivity pruned per cell.  Size 1 gives the zero ring (1 = 0).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if rng is None and size > EXHAUSTIVE_SIZE:
        raise CapacityError(f"exhaustive generation is limited to size <= {EXHAUSTIVE_SIZE}")
    C = Carrier.of_size(size)
    hs = additive if additive is not None else generate_canonical_hypergroups(size, m, rng=rng)
    seen = set()
    for h in hs:
        ones = [0] if size == 1 else list(range(1, size))
        if rng is not None:
            rng.shuffle(ones)
        for one in ones:
            table = [0] * size**n
            cells = []
            for cell in itertools.combinations_with_replacement(range(size), n):
                idxs = _orbit(cell, size)
                if 0 in cell:
                    v = 1
                elif cell.count(one) >= n - 1:
                    v = 1 << next((x for x in cell if x != one), one)
                else:
                    cells.append((idxs, [1 << v for v in range(size)]))
                    continue
                for j in idxs:
                    table[j] = v

            def ok(t, h=h):
                return _associative(t, size, n) and _distributive_partial(h.table, t, size, m, n)

            for _ in _backtrack(cells, table, ok, rng):
                R = _ring_from(C, h, table, n, one)
                if not validate_krasner_hyperring(R).valid:
                    continue
                if dedup:
                    key = ring_canonical_form(R)
                    if key in seen:
                        continue
                    seen.add(key)
                yield R


def _module_partial_ok(R: KrasnerHyperring, f: Sequence[int], g: Sequence[int], size: int) -> bool:
    rs_, m, n = R.size, R.m, R.n
    h, k = R.h.table, R.k.mask_table

    def gev(rsets, xs):
        out = 0
        for rs in itertools.product(*(to_list(a) for a in rsets)):
            base = _encode(rs_, rs) * size
            for x in members(xs):
                v = g[base + x]
                if not v:
                    raise _Unknown
                out |= v
        return out

    for rs in itertools.product(range(rs_), repeat=n - 1):
        rsets = [1 << r for r in rs]
        for xs in itertools.product(range(size), repeat=m):
            try:
                lhs = gev(rsets, _peval(f, size, [1 << x for x in xs]))
                rhs = _peval(f, size, [gev(rsets, 1 << x) for x in xs])
            except _Unknown:
                continue
            if lhs != rhs:
                return False
    for ss in itertools.product(range(rs_), repeat=m):
        hs = h[_encode(rs_, ss)]
        for rest in itertools.product(range(rs_), repeat=n - 2):
            rsets = [1 << r for r in rest]
            for x in range(size):
                try:
                    lhs = gev([hs] + rsets, 1 << x)
                    rhs = _peval(f, size, [gev([1 << s] + rsets, 1 << x) for s in ss])
                except _Unknown:
                    continue
                if lhs != rhs:
                    return False
    for rs in itertools.product(range(rs_), repeat=2 * n - 2):
        outer, inner = rs[:n - 1], rs[n - 1:]
        for x in range(size):
            try:
                ref = gev([1 << r for r in outer], gev([1 << r for r in inner], 1 << x))
                for i in range(n - 1):
                    col = rs[:i] + (k[_encode(rs_, rs[i:i + n])].bit_length() - 1,) + rs[i + n:]
                    if gev([1 << r for r in col], 1 << x) != ref:
                        return False
            except _Unknown:
                continue
    return True


def _action_cells(R: KrasnerHyperring, size: int, offset: int = 0) -> tuple[list[int], list]:
    """g table with the zero-scalar and unit cells filled, plus the free cells."""
    n = R.n
    top = (1 << size) - 1
    table = [0] * (R.size ** (n - 1) * size)
    cells = []
    ones = (R.one,) * (n - 1)
    for rs in itertools.product(range(R.size), repeat=n - 1):
        base = _encode(R.size, rs) * size
        for x in range(size):
            if R.zero in rs:
                table[base + x] = 1
            elif rs == ones:
                table[base + x] = 1 << x
            else:
                cells.append(([offset + base + x], list(range(1, top + 1))))
    return table, cells


def generate_hypermodules(R: KrasnerHyperring, size: int, dedup: bool = True,
                          rng: Optional[random.Random] = None,
                          additive: Optional[Sequence[HyperOperation]] = None) -> Iterator[Hypermodule]:
    """Hypermodules over R on ``size`` points with zero 0, labelled x0, x1, ...

    Unless ``additive`` fixes the candidate f tables, f and g are filled in
    one pass so the module axioms prune f as well.
    """
    if rng is None and size > EXHAUSTIVE_SIZE:
        raise CapacityError(f"exhaustive generation is limited to size <= {EXHAUSTIVE_SIZE}")
    m = R.m
    C = Carrier(tuple(f"x{i}" for i in range(size)))
    F = size**m
    if additive is not None:
        starts = []
        for f0 in additive:
            gtab, gcells = _action_cells(R, size, F)
            starts.append((list(f0.table) + gtab, gcells))
    else:
        invs = list(_involution_reps(size))
        if rng is not None:
            rng.shuffle(invs)
        starts = []
        for inv in invs:
            ftab, fcells = _hypergroup_cells(size, m, inv)
            gtab, gcells = _action_cells(R, size, F)
            starts.append((ftab + gtab, fcells + gcells))

    def ok(t):
        f = t[:F]
        return _associative(f, size, m) and _module_partial_ok(R, f, t[F:], size)

    seen = set()
    for table, cells in starts:
        for _ in _backtrack(cells, table, ok, rng):
            f = HyperOperation(C, m, tuple(table[:F]))
            if additive is None:
                rep = check_canonical_hypergroup(f)
                if not rep.is_canonical or rep.neutral != 0:
                    continue
            M = Hypermodule(R, C, f, tuple(table[F:]), 0)
            if not validate_hypermodule(M).valid:
                continue
            if dedup:
                key = module_canonical_form(M)
                if key in seen:
                    continue
                seen.add(key)
            yield M


# ---------------------------------------------------------------------------
# hunting


@dataclass
class SearchSpec:
    max_ring_size: int = 2
    max_module_size: int = 2
    m: int = 2
    n: int = 2
    target: str = "all"
    mode: str = "exhaustive"
    seed: Optional[int] = None
    dedup: bool = True
    count: int = 20
    jobs: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "random" and self.seed is None:
            raise ValueError("random mode needs a seed")
        if self.mode == "exhaustive" and max(self.max_ring_size, self.max_module_size) > EXHAUSTIVE_SIZE:
            raise CapacityError(f"exhaustive search is limited to size <= {EXHAUSTIVE_SIZE}")
        if self.target != "all" and not known_target(self.target) and self.target not in PROPERTY_TARGETS:
            raise ValueError(f"unknown target {self.target!r}")


@dataclass
class SearchHit:
    module: Hypermodule
    verdict: TheoremVerdict


def _property_verdict(an: Analysis, name: str) -> TheoremVerdict:
    if name == "is_multiplication":
        value = an.multiplication
        w = {} if value else {"failing_N": an.mf(an.certificate.failing)}
    elif name == "is_faithful":
        value, w = an.faithful, {}
    else:
        value, w = an.assumptions.holds, an.assumptions.to_dict()
    return TheoremVerdict(name, True, value, w, an.out_of_contract)


def evaluate_instance(M: Hypermodule, target: str) -> list[TheoremVerdict]:
    an = Analysis(M)
    if target in PROPERTY_TARGETS:
        return [_property_verdict(an, target)]
    if target == "all":
        return [run_theorem(an, t) for t in THEOREM_IDS]
    return [run_theorem(an, target)]


def _hits_for(M: Hypermodule, target: str) -> list[SearchHit]:
    out = []
    for v in evaluate_instance(M, target):
        if target in PROPERTY_TARGETS:
            out.append(SearchHit(M, v))
        elif not v.passed and not v.out_of_contract:
            out.append(SearchHit(M, v))
    return out


def _hunt_ring(args) -> list[SearchHit]:
    R, spec = args
    hits = []
    for size in range(1, spec.max_module_size + 1):
        for M in generate_hypermodules(R, size, spec.dedup):
            hits.extend(_hits_for(M, spec.target))
    return hits


def exhaustive_rings(spec: SearchSpec) -> list[KrasnerHyperring]:
    rings = []
    for size in range(1, spec.max_ring_size + 1):
        rings.extend(generate_krasner_hyperrings(size, spec.m, spec.n, spec.dedup))
    return rings


def random_instances(spec: SearchSpec) -> Iterator[Hypermodule]:
    """Up to ``spec.count`` reproducible samples.  With dedup on, repeats are
    dropped and sampling stops after ``STALE_LIMIT`` misses in a row."""
    rng = random.Random(spec.seed)
    seen = set()
    produced = 0
    stale = 0
    while produced < spec.count and stale < STALE_LIMIT:
        stale += 1
        rsize = rng.randint(1, spec.max_ring_size)
        R = next(generate_krasner_hyperrings(rsize, spec.m, spec.n, False, rng), None)
        if R is None:
            continue
        msize = rng.randint(1, spec.max_module_size)
        M = next(generate_hypermodules(R, msize, False, rng), None)
        if M is None:
            continue
        if spec.dedup:
            key = (ring_canonical_form(R), module_canonical_form(M))
            if key in seen:
                continue
            seen.add(key)
        produced += 1
        stale = 0
        yield M


def hunt(spec: SearchSpec) -> list[SearchHit]:
    """In-contract failures of ``spec.target`` (for property targets: every
    instance with its property value).  Exhaustive results come in generation
    order regardless of ``jobs``."""
    if spec.mode == "random":
        hits = []
        for M in random_instances(spec):
            hits.extend(_hits_for(M, spec.target))
        return hits
    rings = exhaustive_rings(spec)
    work = [(R, spec) for R in rings if not R.degenerate]
    if spec.jobs > 1:
        with ProcessPoolExecutor(spec.jobs) as pool:
            parts = list(pool.map(_hunt_ring, work))
    else:
        parts = [_hunt_ring(w) for w in work]
    return [h for part in parts for h in part]
