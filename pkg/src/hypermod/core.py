"""Finite carriers, operation tables and the axiom stack up to (m,n)-hypermodules.

Elements are dense indices ``0..size-1``; subsets are int bitmasks (see
:mod:`hypermod.bitset`).  A t-ary table is a flat tuple indexed by the
mixed-radix encoding of the argument tuple, first argument most significant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence, Union

from .bitset import from_indices, full, members
from .errors import ArityError, CapacityError, InternalAssertError

DEFAULT_TABLE_BUDGET = 10**8


@dataclass(frozen=True)
class Carrier:
    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a carrier needs at least one element")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate element labels in {self.labels!r}")

    @classmethod
    def of_size(cls, size: int) -> "Carrier":
        return cls(tuple(str(i) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def full(self) -> int:
        return full(self.size)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        return self._positions[label]

    def fmt(self, mask: int) -> str:
        return "{" + ", ".join(self.labels[i] for i in members(mask)) + "}"

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in members(mask)]


def _encode(size: int, args: Iterable[int]) -> int:
    i = 0
    for a in args:
        i = i * size + a
    return i


@dataclass(frozen=True)
class HyperOperation:
    """Total map carrier^arity -> nonempty subsets, entries stored as bitmasks."""

    carrier: Carrier
    arity: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise ArityError(f"arity must be positive, got {self.arity}")
        expected = self.carrier.size**self.arity
        if len(self.table) != expected:
            raise ValueError(f"table has {len(self.table)} entries, expected {expected}")
        top = self.carrier.full
        for entry in self.table:
            if entry <= 0 or entry & ~top:
                raise ValueError("hyperoperation entries must be nonempty subsets of the carrier")

    @classmethod
    def from_function(cls, carrier: Carrier, arity: int,
                      fn: Callable[..., Iterable[int]]) -> "HyperOperation":
        table = tuple(from_indices(fn(*xs))
                      for xs in itertools.product(range(carrier.size), repeat=arity))
        return cls(carrier, arity, table)

    @property
    def mask_table(self) -> tuple[int, ...]:
        return self.table

    def index(self, args: Sequence[int]) -> int:
        return _encode(self.carrier.size, args)

    def __call__(self, *args: int) -> int:
        return self.table[_encode(self.carrier.size, args)]


@dataclass(frozen=True)
class Operation:
    """Total single-valued map carrier^arity -> carrier."""

    carrier: Carrier
    arity: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise ArityError(f"arity must be positive, got {self.arity}")
        expected = self.carrier.size**self.arity
        if len(self.table) != expected:
            raise ValueError(f"table has {len(self.table)} entries, expected {expected}")
        size = self.carrier.size
        if any(not 0 <= v < size for v in self.table):
            raise ValueError("operation entries must be carrier indices")

    @classmethod
    def from_function(cls, carrier: Carrier, arity: int, fn: Callable[..., int]) -> "Operation":
        table = tuple(fn(*xs) for xs in itertools.product(range(carrier.size), repeat=arity))
        return cls(carrier, arity, table)

    @cached_property
    def mask_table(self) -> tuple[int, ...]:
        return tuple(1 << v for v in self.table)

    def index(self, args: Sequence[int]) -> int:
        return _encode(self.carrier.size, args)

    def __call__(self, *args: int) -> int:
        return self.table[_encode(self.carrier.size, args)]


AnyOperation = Union[HyperOperation, Operation]


# ---------------------------------------------------------------------------
# set-valued evaluation and extensions


def evaluate_on_sets(op: AnyOperation, args: Sequence[int]) -> int:
    """Union of ``op`` over the Cartesian product of the argument subsets."""
    if len(args) != op.arity:
        raise ArityError(f"expected {op.arity} argument sets, got {len(args)}")
    size = op.carrier.size
    idxs = [0]
    for a in args:
        elems = list(members(a))
        if not elems:
            raise ValueError("argument sets must be nonempty")
        idxs = [i * size + x for i in idxs for x in elems]
    tab = op.mask_table
    out = 0
    for i in idxs:
        out |= tab[i]
    return out


def extended_arity(arity: int, l: int) -> int:
    return l * (arity - 1) + 1


def extend_hyperoperation(op: AnyOperation, l: int, budget: int = DEFAULT_TABLE_BUDGET):
    """Table of the left-nested ``l``-fold extension, of arity ``l*(arity-1)+1``.

    A single-valued :class:`Operation` yields an :class:`Operation`.
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    if l == 1:
        return op
    size = op.carrier.size
    t = extended_arity(op.arity, l)
    if size**t > budget:
        raise CapacityError(f"extended table needs {size**t} entries, budget is {budget}")
    base = op.mask_table
    tail = size ** (op.arity - 1)
    cur = base
    for _ in range(l - 1):
        nxt = []
        append = nxt.append
        for prev in cur:
            heads = [y * tail for y in members(prev)]
            for rest in range(tail):
                v = 0
                for h in heads:
                    v |= base[h + rest]
                append(v)
        cur = nxt
    if isinstance(op, Operation):
        vals = []
        for v in cur:
            if v & (v - 1):
                raise InternalAssertError("single-valued extension produced a set")
            vals.append(v.bit_length() - 1)
        return Operation(op.carrier, t, tuple(vals))
    return HyperOperation(op.carrier, t, tuple(cur))


def evaluate_extended_on_sets(op: AnyOperation, args: Sequence[int]) -> int:
    """Set-valued ``op_(l)`` by left folding, without materialising the table.

    ``len(args)`` must be ``l*(arity-1)+1`` for some ``l >= 0``.
    """
    a = op.arity
    t = len(args)
    if t < 1 or (t - 1) % (a - 1):
        raise ArityError(f"{t} arguments do not fit an extension of a {a}-ary operation")
    acc = args[0]
    for start in range(1, t, a - 1):
        acc = evaluate_on_sets(op, [acc, *args[start:start + a - 1]])
    return acc


# ---------------------------------------------------------------------------
# single-operation axioms


def _nested(op: AnyOperation, xs: tuple[int, ...], i: int) -> int:
    tab = op.mask_table
    size = op.carrier.size
    t = op.arity
    inner = tab[_encode(size, xs[i:i + t])]
    pre, post = xs[:i], xs[i + t:]
    out = 0
    for y in members(inner):
        out |= tab[_encode(size, pre + (y,) + post)]
    return out


def check_associative(op: AnyOperation) -> tuple[bool, Optional[tuple]]:
    """Returns ``(ok, witness)``; witness is ``(xs, 1, j)``: nesting at j differs from nesting at 1."""
    t = op.arity
    for xs in itertools.product(range(op.carrier.size), repeat=2 * t - 1):
        first = _nested(op, xs, 0)
        for i in range(1, t):
            if _nested(op, xs, i) != first:
                return False, (xs, 1, i + 1)
    return True, None


def check_commutative(op: AnyOperation) -> tuple[bool, Optional[tuple]]:
    tab = op.mask_table
    size = op.carrier.size
    for idx, xs in enumerate(itertools.product(range(size), repeat=op.arity)):
        if tab[idx] != tab[_encode(size, sorted(xs))]:
            return False, xs
    return True, None


def is_scalar_neutral(op: AnyOperation, e: int) -> bool:
    tab = op.mask_table
    size = op.carrier.size
    t = op.arity
    for x in range(size):
        for i in range(t):
            args = [e] * t
            args[i] = x
            if tab[_encode(size, args)] != 1 << x:
                return False
    return True


def scalar_neutrals(op: AnyOperation) -> list[int]:
    return [e for e in range(op.carrier.size) if is_scalar_neutral(op, e)]


def find_scalar_neutral(op: AnyOperation) -> Optional[int]:
    """Least scalar neutral element, or None.

    For binary operations two neutrals coincide, which is asserted.  For
    arity >= 3 several may exist (ternary addition mod 2 has two); the least
    is returned and :func:`check_canonical_hypergroup` rejects the table.
    """
    found = scalar_neutrals(op)
    if not found:
        return None
    if len(found) > 1 and op.arity == 2:
        raise InternalAssertError(f"binary operation with several neutrals {found}")
    return found[0]


def is_zero_element(op: AnyOperation, z: int) -> bool:
    tab = op.mask_table
    size = op.carrier.size
    t = op.arity
    target = 1 << z
    for i in range(t):
        for rest in itertools.product(range(size), repeat=t - 1):
            if tab[_encode(size, rest[:i] + (z,) + rest[i:])] != target:
                return False
    return True


def find_zero(op: AnyOperation) -> Optional[int]:
    found = [z for z in range(op.carrier.size) if is_zero_element(op, z)]
    if len(found) > 1:
        raise InternalAssertError(f"several absorbing elements {found}")
    return found[0] if found else None


@dataclass
class CanonicalReport:
    is_canonical: bool
    neutral: Optional[int] = None
    inverse_map: Optional[tuple[int, ...]] = None
    violation: Optional[tuple[str, object]] = None


def check_canonical_hypergroup(op: HyperOperation) -> CanonicalReport:
    """Associativity, commutativity, unique neutral, unique inverses,
    reversibility and quasihypergroup solvability, in that order."""
    ok, w = check_associative(op)
    if not ok:
        return CanonicalReport(False, violation=("associative", w))
    ok, w = check_commutative(op)
    if not ok:
        return CanonicalReport(False, violation=("commutative", w))

    size = op.carrier.size
    t = op.arity
    tab = op.table
    top = op.carrier.full

    neutrals = [e for e in range(size)
                if all(tab[_encode(size, (x,) + (e,) * (t - 1))] == 1 << x for x in range(size))]
    if len(neutrals) != 1:
        return CanonicalReport(False, violation=("unique_neutral", tuple(neutrals)))
    e = neutrals[0]

    inverse = []
    for x in range(size):
        cands = [y for y in range(size)
                 if tab[_encode(size, (x, y) + (e,) * (t - 2))] >> e & 1]
        if len(cands) != 1:
            return CanonicalReport(False, neutral=e,
                                   violation=("unique_inverse", (x, tuple(cands))))
        inverse.append(cands[0])
    inverse = tuple(inverse)

    for idx, xs in enumerate(itertools.product(range(size), repeat=t)):
        for x in members(tab[idx]):
            for i in range(t):
                others = tuple(inverse[xs[j]] for j in range(t) if j != i)
                if not tab[_encode(size, (x,) + others)] >> xs[i] & 1:
                    return CanonicalReport(False, neutral=e, inverse_map=inverse,
                                           violation=("reversibility", (xs, x, i + 1)))

    for i in range(t):
        for rest in itertools.product(range(size), repeat=t - 1):
            reach = 0
            for y in range(size):
                reach |= tab[_encode(size, rest[:i] + (y,) + rest[i:])]
            if reach != top:
                return CanonicalReport(False, neutral=e, inverse_map=inverse,
                                       violation=("quasihypergroup", (rest, i + 1)))
    return CanonicalReport(True, neutral=e, inverse_map=inverse)


# ---------------------------------------------------------------------------
# structures


@dataclass(frozen=True)
class KrasnerHyperring:
    carrier: Carrier
    h: HyperOperation
    k: Operation
    zero: int
    one: int

    def __post_init__(self):
        if self.h.carrier != self.carrier or self.k.carrier != self.carrier:
            raise ValueError("h and k must live on the ring carrier")
        if self.h.arity < 2 or self.k.arity < 2:
            raise ArityError("a Krasner (m,n)-hyperring needs m, n >= 2")
        for v in (self.zero, self.one):
            if not 0 <= v < self.carrier.size:
                raise ValueError("zero/one must be carrier indices")

    @property
    def m(self) -> int:
        return self.h.arity

    @property
    def n(self) -> int:
        return self.k.arity

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def full(self) -> int:
        return self.carrier.full

    @property
    def degenerate(self) -> bool:
        return self.one == self.zero

    @cached_property
    def neg(self) -> tuple[int, ...]:
        """Additive inverse map; the least candidate where it is not unique."""
        size, m, z = self.size, self.m, self.zero
        out = []
        for x in range(size):
            cands = [y for y in range(size) if self.h(x, y, *([z] * (m - 2))) >> z & 1]
            out.append(cands[0] if cands else x)
        return tuple(out)

    def mul(self, *args: int) -> int:
        return self.k.table[_encode(self.size, args)]

    def mul_pad(self, *args: int) -> int:
        """``k(args, 1, ..., 1)`` padded with ones to arity n."""
        return self.k.table[_encode(self.size, args + (self.one,) * (self.n - len(args)))]

    def add_pad(self, *args: int) -> int:
        """``h(args, 0, ..., 0)`` padded with zeros to arity m (a bitmask)."""
        return self.h.table[_encode(self.size, args + (self.zero,) * (self.m - len(args)))]

    def add_sets(self, *sets: int) -> int:
        """Set-valued ``h(A, B, ..., {0}, ...)`` padded with the zero singleton."""
        return evaluate_on_sets(self.h, list(sets) + [1 << self.zero] * (self.m - len(sets)))

    def unit_shift(self, p: int) -> int:
        """``h(1, -p, 0^(m-2))``."""
        return self.add_pad(self.one, self.neg[p])


@dataclass(frozen=True)
class Hypermodule:
    """(M, f, g) over ``ring``; ``g_table`` is indexed by (r_1..r_{n-1}, x)."""

    ring: KrasnerHyperring
    carrier: Carrier
    f: HyperOperation
    g_table: tuple[int, ...]
    zero: int

    def __post_init__(self):
        if self.f.carrier != self.carrier:
            raise ValueError("f must live on the module carrier")
        if self.f.arity != self.ring.m:
            raise ArityError("module addition must have the ring's additive arity m")
        expected = self.ring.size ** (self.ring.n - 1) * self.carrier.size
        if len(self.g_table) != expected:
            raise ValueError(f"g table has {len(self.g_table)} entries, expected {expected}")
        top = self.carrier.full
        if any(v <= 0 or v & ~top for v in self.g_table):
            raise ValueError("g entries must be nonempty subsets of the module")
        if not 0 <= self.zero < self.carrier.size:
            raise ValueError("zero must be a module index")

    @classmethod
    def from_function(cls, ring: KrasnerHyperring, carrier: Carrier, f: HyperOperation,
                      gfn: Callable[..., Iterable[int]], zero: int) -> "Hypermodule":
        table = tuple(
            from_indices(gfn(*rx))
            for rx in itertools.product(*([range(ring.size)] * (ring.n - 1) + [range(carrier.size)]))
        )
        return cls(ring, carrier, f, table, zero)

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def full(self) -> int:
        return self.carrier.full

    def g(self, rs: Sequence[int], x: int) -> int:
        return self.g_table[_encode(self.ring.size, rs) * self.carrier.size + x]

    def g_sets(self, ring_sets: Sequence[int], xs: int) -> int:
        """``g(T_1, ..., T_{n-1}, X)`` as a union."""
        out = 0
        for rs in itertools.product(*(list(members(t)) for t in ring_sets)):
            base = _encode(self.ring.size, rs) * self.carrier.size
            for x in members(xs):
                out |= self.g_table[base + x]
        return out

    @cached_property
    def act1(self) -> tuple[tuple[int, ...], ...]:
        """``act1[a][x] = g(a, 1^(n-2), x)``."""
        R = self.ring
        pad = (R.one,) * (R.n - 2)
        return tuple(tuple(self.g((a,) + pad, x) for x in range(self.size))
                     for a in range(R.size))

    def action(self, ideal: int, subset: int) -> int:
        """``g(I, 1^(n-2), S)`` for ring subset I and module subset S."""
        out = 0
        for a in members(ideal):
            row = self.act1[a]
            for x in members(subset):
                out |= row[x]
        return out

    def sum_sets(self, *sets: int) -> int:
        """Set-valued ``f(A, B, ..., {0}, ...)`` padded with the zero singleton."""
        return evaluate_on_sets(self.f, list(sets) + [1 << self.zero] * (self.ring.m - len(sets)))


# ---------------------------------------------------------------------------
# validation reports


@dataclass
class AxiomResult:
    name: str
    holds: bool
    witness: Optional[str] = None
    note: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"axiom": self.name, "holds": self.holds, "witness": self.witness}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class ValidationReport:
    subject: str
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(r.holds for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.holds]

    def get(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"subject": self.subject, "valid": self.valid,
                "axioms": [r.to_dict() for r in self.results]}


def _call(sym: str, labels: Sequence[str], args: Sequence[int]) -> str:
    return f"{sym}(" + ", ".join(labels[a] for a in args) + ")"


def _canonical_results(prefix: str, op: HyperOperation, declared_zero: int) -> list[AxiomResult]:
    labels = op.carrier.labels
    rep = check_canonical_hypergroup(op)
    out = []
    axioms = ["associative", "commutative", "unique_neutral", "unique_inverse",
              "reversibility", "quasihypergroup"]
    failed = rep.violation[0] if rep.violation else None
    for ax in axioms:
        if failed is None or axioms.index(ax) < axioms.index(failed):
            out.append(AxiomResult(f"{prefix}_{ax}", True))
        elif ax == failed:
            out.append(AxiomResult(f"{prefix}_{ax}", False, _describe_violation(prefix, labels, rep.violation)))
        else:
            out.append(AxiomResult(f"{prefix}_{ax}", False, None, "not evaluated: earlier axiom failed"))
    if rep.is_canonical:
        ok = rep.neutral == declared_zero
        out.append(AxiomResult(f"zero_is_{prefix}_neutral", ok,
                               None if ok else f"neutral is {labels[rep.neutral]}, zero declared {labels[declared_zero]}"))
    else:
        out.append(AxiomResult(f"zero_is_{prefix}_neutral", is_scalar_neutral(op, declared_zero),
                               None, "checked as scalar neutral only"))
    return out


def _describe_violation(sym: str, labels: Sequence[str], violation) -> str:
    kind, w = violation
    if kind == "associative":
        xs, i, j = w
        return f"nestings at positions {i} and {j} differ on ({', '.join(labels[x] for x in xs)})"
    if kind == "commutative":
        return _call(sym, labels, w) + " differs from its sorted permutation"
    if kind == "unique_neutral":
        return "neutral candidates: [" + ", ".join(labels[x] for x in w) + "]"
    if kind == "unique_inverse":
        x, cands = w
        return f"{labels[x]} has inverse candidates [" + ", ".join(labels[c] for c in cands) + "]"
    if kind == "reversibility":
        xs, x, i = w
        return f"{labels[x]} in {_call(sym, labels, xs)} but position {i} is not recovered"
    if kind == "quasihypergroup":
        rest, i = w
        return f"position {i} not solvable with fixed arguments ({', '.join(labels[x] for x in rest)})"
    return repr(w)


def check_distributive(R: KrasnerHyperring) -> tuple[bool, Optional[tuple]]:
    """k(a.., h(x_1^m), ..a) = h(k(a.., x_1, ..a), ..., k(a.., x_m, ..a)) in every slot."""
    size, m, n = R.size, R.m, R.n
    htab, ktab = R.h.table, R.k.table
    for i in range(n):
        for a in itertools.product(range(size), repeat=n - 1):
            pre, post = a[:i], a[i:]
            col = [ktab[_encode(size, pre + (y,) + post)] for y in range(size)]
            for xs in itertools.product(range(size), repeat=m):
                lhs = 0
                for y in members(htab[_encode(size, xs)]):
                    lhs |= 1 << col[y]
                rhs = htab[_encode(size, [col[x] for x in xs])]
                if lhs != rhs:
                    return False, (i + 1, a, xs)
    return True, None


def validate_krasner_hyperring(R: KrasnerHyperring) -> ValidationReport:
    labels = R.carrier.labels
    rep = ValidationReport("ring")
    rep.results.extend(_canonical_results("h", R.h, R.zero))

    ok, w = check_associative(R.k)
    rep.results.append(AxiomResult("k_associative", ok, None if ok else _describe_violation("k", labels, ("associative", w))))
    ok, w = check_commutative(R.k)
    rep.results.append(AxiomResult("k_commutative", ok, None if ok else _call("k", labels, w) + " is not symmetric"))

    ok, w = check_distributive(R)
    if ok:
        rep.results.append(AxiomResult("distributive", True))
    else:
        i, a, xs = w
        rep.results.append(AxiomResult(
            "distributive", False,
            f"slot {i}, other arguments ({', '.join(labels[x] for x in a)}), h-arguments ({', '.join(labels[x] for x in xs)})"))

    ok = is_zero_element(R.k, R.zero)
    rep.results.append(AxiomResult("zero_absorbing", ok, None if ok else f"{labels[R.zero]} is not absorbing for k"))
    ok = is_scalar_neutral(R.k, R.one)
    rep.results.append(AxiomResult("one_neutral", ok, None if ok else f"{labels[R.one]} is not a scalar neutral of k"))
    return rep


def validate_hypermodule(M: Hypermodule) -> ValidationReport:
    """Canonical hypergroup (M, f) plus scalar-action axioms (i)-(iv) and unitality.

    The mixed-associativity axiom is checked as
    ``g(r_1^{i-1}, k(r_i^{i+n-1}), r_{i+n}^{2n-2}, x) = g(r_1^{n-1}, g(r_n^{2n-2}, x))``
    for every slot i in 1..n-1 (printed ranges normalised to 2n-2 scalars).
    """
    R = M.ring
    rl, ml = R.carrier.labels, M.carrier.labels
    rs_, ms_ = R.size, M.size
    m, n = R.m, R.n
    rep = ValidationReport("module")
    rep.results.extend(_canonical_results("f", M.f, M.zero))

    def scal(rs):
        return ", ".join(rl[r] for r in rs)

    def mods(xs):
        return ", ".join(ml[x] for x in xs)

    ftab = M.f.table
    # (i) scalar action distributes over module addition
    w = None
    for rs in itertools.product(range(rs_), repeat=n - 1):
        row = [M.g(rs, x) for x in range(ms_)]
        for xs in itertools.product(range(ms_), repeat=m):
            lhs = 0
            for y in members(ftab[_encode(ms_, xs)]):
                lhs |= row[y]
            rhs = evaluate_on_sets(M.f, [row[x] for x in xs])
            if lhs != rhs:
                w = f"g({scal(rs)}; f({mods(xs)}))"
                break
        if w:
            break
    rep.results.append(AxiomResult("g_distributes_over_f", w is None, w))

    # (ii) scalar addition distributes
    w = None
    htab = R.h.table
    for i in range(n - 1):
        for rest in itertools.product(range(rs_), repeat=n - 2):
            for x in range(ms_):
                col = [M.g(rest[:i] + (s,) + rest[i:], x) for s in range(rs_)]
                for ss in itertools.product(range(rs_), repeat=m):
                    lhs = 0
                    for y in members(htab[_encode(rs_, ss)]):
                        lhs |= col[y]
                    rhs = evaluate_on_sets(M.f, [col[s] for s in ss])
                    if lhs != rhs:
                        w = f"slot {i + 1}: g({scal(rest[:i])} h({scal(ss)}) {scal(rest[i:])}; {ml[x]})"
                        break
                if w:
                    break
            if w:
                break
        if w:
            break
    rep.results.append(AxiomResult("g_distributes_over_h", w is None, w))

    # (iii) mixed associativity
    w = None
    for rs in itertools.product(range(rs_), repeat=2 * n - 2):
        outer, inner = rs[:n - 1], rs[n - 1:]
        for x in range(ms_):
            rhs = M.g_sets([1 << r for r in outer], M.g(inner, x))
            for i in range(n - 1):
                collapsed = rs[:i] + (R.k.table[_encode(rs_, rs[i:i + n])],) + rs[i + n:]
                if M.g(collapsed, x) != rhs:
                    w = f"scalars ({scal(rs)}), collapse at slot {i + 1}, element {ml[x]}"
                    break
            if w:
                break
        if w:
            break
    rep.results.append(AxiomResult("g_mixed_associative", w is None, w))

    # (iv) zero scalar annihilates
    w = None
    zero_m = 1 << M.zero
    for i in range(n - 1):
        for rest in itertools.product(range(rs_), repeat=n - 2):
            rs = rest[:i] + (R.zero,) + rest[i:]
            for x in range(ms_):
                if M.g(rs, x) != zero_m:
                    w = f"g({scal(rs)}; {ml[x]}) = {M.carrier.fmt(M.g(rs, x))}"
                    break
            if w:
                break
        if w:
            break
    rep.results.append(AxiomResult("g_zero_scalar", w is None, w))

    ones = (R.one,) * (n - 1)
    bad = [x for x in range(ms_) if M.g(ones, x) != 1 << x]
    rep.results.append(AxiomResult(
        "g_unital", not bad, f"g(1..1; {ml[bad[0]]}) = {M.carrier.fmt(M.g(ones, bad[0]))}" if bad else None,
        "implied axiom"))
    return rep
