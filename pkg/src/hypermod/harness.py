"""Each lemma, theorem and corollary about multiplication hypermodules as an
executable predicate over one finite instance.

A predicate evaluates its hypotheses and conclusion over every instantiation
of its free arguments (ideals, submodules, families up to ``family_cap``
members) and reports the first instantiation whose hypotheses hold but whose
conclusion fails.  ``pass <=> not hypotheses_hold or conclusion_holds``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence

from .assumptions import AssumptionReport, check_standing_assumptions
from .bitset import intersect_all, is_subset, members
from .constructions import (external_direct_sum, fold_count, internal_direct_sum_check, quotient,
                            restrict, submodule_sum)
from .core import Hypermodule, evaluate_extended_on_sets
from .fixtures import zero_module
from .multiplication import (is_cofinitely_generated, is_cyclic, is_primary_subhypermodule,
                             is_ring_cofinitely_generated, jacobson_radical_module,
                             multiplication_certificate, omega)
from .substructures import (DEFAULT_ENUM_BOUND, annihilator_sets, colon_ideal,
                            enumerate_hyperideals, enumerate_subhypermodules, is_faithful,
                            ideal_product, is_prime_ideal, is_primary_ideal, maximal_hyperideals,
                            radical, residual, torsion_part)

THEOREM_IDS = ("L3.2", "T3.3", "T3.4", "T3.5", "T3.7", "T3.8", "T3.9", "T3.10",
               "L4.1", "C4.2", "C4.3",
               "T5.1", "C5.2", "T5.3", "T5.4", "L5.5", "T5.6", "T5.7", "C5.8")
T38_PARTS = tuple(f"T3.8.{i}" for i in range(1, 6))
DEFAULT_FAMILY_CAP = 4
DEFAULT_SELF_SUM_BOUND = 16


@dataclass
class TheoremVerdict:
    theorem_id: str
    hypotheses_hold: bool
    conclusion_holds: bool
    witness: dict = field(default_factory=dict)
    out_of_contract: bool = False
    directions: Optional[dict[str, bool]] = None
    parts: list["TheoremVerdict"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.hypotheses_hold or self.conclusion_holds

    def to_dict(self) -> dict:
        d = {
            "theorem_id": self.theorem_id,
            "pass": self.passed,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
            "out_of_contract": self.out_of_contract,
        }
        if self.directions is not None:
            d["directions"] = dict(self.directions)
        if self.parts:
            d["parts"] = [p.to_dict() for p in self.parts]
        return d


class Analysis:
    """Memoised substructure data for one hypermodule, shared by all predicates."""

    def __init__(self, M: Hypermodule, family_cap: int = DEFAULT_FAMILY_CAP,
                 bound: int = DEFAULT_ENUM_BOUND):
        self.M = M
        self.R = M.ring
        self.family_cap = family_cap
        self.bound = bound
        self._action: dict[int, int] = {}
        self._colon: dict[int, int] = {}
        self._mult: dict[int, bool] = {}
        self._primary_sub: dict[int, bool] = {}

    # formatting
    def rf(self, mask: int) -> str:
        return self.R.carrier.fmt(mask)

    def mf(self, mask: int) -> str:
        return self.M.carrier.fmt(mask)

    @cached_property
    def ideals(self) -> list[int]:
        return enumerate_hyperideals(self.R, self.bound)

    @cached_property
    def submodules(self) -> list[int]:
        return enumerate_subhypermodules(self.M, self.bound)

    @cached_property
    def maximal_ideals(self) -> list[int]:
        return maximal_hyperideals(self.R, self.ideals)

    @cached_property
    def prime_ideals(self) -> list[int]:
        return [P for P in self.ideals if is_prime_ideal(self.R, P)]

    @cached_property
    def radicals(self) -> dict[int, int]:
        return {Q: radical(self.R, Q) for Q in self.ideals}

    @cached_property
    def primary_ideals(self) -> list[int]:
        return [Q for Q in self.ideals if is_primary_ideal(self.R, Q, self.radicals[Q])]

    @cached_property
    def jacobson_ring(self) -> Optional[int]:
        """None for the zero ring, which has no maximal hyperideal."""
        if not self.maximal_ideals:
            return None
        return intersect_all(self.maximal_ideals, self.R.full)

    @cached_property
    def certificate(self):
        return multiplication_certificate(self.M, self.ideals, self.submodules)

    @property
    def multiplication(self) -> bool:
        return self.certificate.verdict

    @cached_property
    def faithful(self) -> bool:
        return is_faithful(self.M)

    @cached_property
    def assumptions(self) -> AssumptionReport:
        return check_standing_assumptions(self.M, self.ideals)

    @property
    def out_of_contract(self) -> bool:
        return not self.assumptions.holds

    @property
    def nonzero(self) -> bool:
        return self.M.size > 1

    @property
    def zero(self) -> int:
        return 1 << self.M.zero

    @cached_property
    def S0(self) -> int:
        return self.colon(self.zero)

    def act(self, I: int) -> int:
        """``g(I, 1^(n-2), M)``."""
        v = self._action.get(I)
        if v is None:
            v = self._action[I] = self.M.action(I, self.M.full)
        return v

    def colon(self, N: int) -> int:
        v = self._colon.get(N)
        if v is None:
            v = self._colon[N] = colon_ideal(self.M, N)
        return v

    def sum(self, A: int, B: int) -> int:
        """``f(A, B, 0^(m-2))``."""
        return self.M.sum_sets(A, B)

    def is_submodule(self, N: int) -> bool:
        return N in self._submodule_set

    @cached_property
    def _submodule_set(self) -> frozenset[int]:
        return frozenset(self.submodules)

    def mult(self, N: int) -> bool:
        """Whether the subhypermodule N is a multiplication hypermodule (False
        when N is not a subhypermodule at all)."""
        v = self._mult.get(N)
        if v is None:
            if not self.is_submodule(N):
                v = False
            elif N == self.M.full:
                v = self.multiplication
            else:
                v = multiplication_certificate(self.M, self.ideals, self.submodules, within=N).verdict
            self._mult[N] = v
        return v

    def primary_sub(self, N: int) -> bool:
        v = self._primary_sub.get(N)
        if v is None:
            v = self._primary_sub[N] = is_primary_subhypermodule(self.M, N)[0]
        return v

    def families(self, sizes: Sequence[int]) -> list[tuple[int, ...]]:
        out = []
        for t in sizes:
            out.extend(itertools.combinations_with_replacement(self.submodules, t))
        return out

    def sum_family_sizes(self) -> list[int]:
        m = self.R.m
        return [t for t in range(1, self.family_cap + 1) if fold_count(m, t) is not None]


class _Tally:
    """Folds per-instantiation outcomes into one verdict."""

    def __init__(self, tid: str, an: Analysis, directions: Sequence[str] = ()):
        self.tid = tid
        self.an = an
        self.count = 0
        self.hyp_count = 0
        self.failed: Optional[dict] = None
        self.single_conclusion: Optional[bool] = None
        self.directions = {d: True for d in directions} if directions else None
        self.direction_witness: dict[str, dict] = {}

    def record(self, hyp: bool, concl: bool, witness: Callable[[], dict],
               directions: Optional[dict[str, bool]] = None):
        self.count += 1
        self.single_conclusion = concl
        if not hyp:
            return
        self.hyp_count += 1
        if directions:
            for d, ok in directions.items():
                if not ok and self.directions[d]:
                    self.directions[d] = False
                    self.direction_witness[d] = witness()
        if not concl and self.failed is None:
            self.failed = witness()

    def verdict(self, extra: Optional[dict] = None) -> TheoremVerdict:
        hyp = self.hyp_count > 0
        if self.count == 1:
            concl = bool(self.single_conclusion)
        else:
            concl = self.failed is None
        w = {"instantiations": self.count, "hypotheses_held": self.hyp_count}
        if self.failed is not None:
            w["counterexample"] = self.failed
        if self.direction_witness:
            w["direction_failures"] = self.direction_witness
        if extra:
            w.update(extra)
        return TheoremVerdict(self.tid, hyp, concl, w, self.an.out_of_contract,
                              dict(self.directions) if self.directions is not None else None)


# ---------------------------------------------------------------------------
# T3.x checks


def check_L3_2(an: Analysis) -> TheoremVerdict:
    tally = _Tally("L3.2", an)
    J = an.jacobson_ring
    if J is None:
        tally.record(False, True, dict)
        return tally.verdict({"note": "zero ring: no maximal hyperideal"})
    for I in an.ideals:
        if not is_subset(I, J):
            continue
        hyp = an.multiplication and an.act(I) == an.M.full
        tally.record(hyp, not an.nonzero, lambda: {"I": an.rf(I), "J(R)": an.rf(J)})
    return tally.verdict({"J(R)": an.rf(J)})


def check_T3_3(an: Analysis) -> TheoremVerdict:
    tally = _Tally("T3.3", an)
    hyp = an.nonzero and an.multiplication and len(an.maximal_ideals) == 1
    gen = is_cyclic(an.M)
    tally.record(hyp, gen is not None, lambda: {"maximal": an.rf(an.maximal_ideals[0])})
    return tally.verdict({"generator": None if gen is None else an.M.carrier.labels[gen],
                          "maximal_ideals": [an.rf(P) for P in an.maximal_ideals]})


def check_T3_4(an: Analysis) -> TheoremVerdict:
    tally = _Tally("T3.4", an)
    J = an.jacobson_ring
    if J is None:
        tally.record(False, True, dict)
        return tally.verdict({"note": "zero ring: no maximal hyperideal"})
    N1 = an.act(J)
    Q = quotient(an.M, N1)
    qcert = multiplication_certificate(Q.module)
    tally.record(an.multiplication, qcert.verdict,
                 lambda: {"N1": an.mf(N1),
                          "quotient_failing_N": Q.module.carrier.fmt(qcert.failing)})
    return tally.verdict({"N1": an.mf(N1), "quotient_size": Q.module.size})


def _ideal_families(an: Analysis) -> list[tuple[int, ...]]:
    ideals = an.ideals
    fams = []
    for t in (1, 2, 3):
        fams.extend(itertools.combinations(ideals, t))
    if len(ideals) > 3:
        fams.append(tuple(ideals))
    return fams


def check_T3_5(an: Analysis) -> TheoremVerdict:
    tally = _Tally("T3.5", an, ("forward", "backward"))
    M, R = an.M, an.R
    S0 = an.S0
    cond1_fail = None
    for fam in _ideal_families(an):
        lhs = intersect_all((an.act(I) for I in fam), M.full)
        shifted = intersect_all((R.add_sets(I, S0) for I in fam), R.full)
        if lhs != M.action(shifted, M.full):
            cond1_fail = {"family": [an.rf(I) for I in fam]}
            break
    cond2_fail = None
    for A in an.ideals:
        GA = an.act(A)
        for N in an.submodules:
            if N == GA or not is_subset(N, GA):
                continue
            if not any(B != A and is_subset(B, A) and is_subset(N, an.act(B)) for B in an.ideals):
                cond2_fail = {"A": an.rf(A), "N": an.mf(N)}
                break
        if cond2_fail:
            break
    lhs = an.multiplication
    rhs = cond1_fail is None and cond2_fail is None
    dirs = {"forward": (not lhs) or rhs, "backward": (not rhs) or lhs}
    tally.record(True, lhs == rhs,
                 lambda: {"multiplication": lhs, "cond1_failure": cond1_fail,
                          "cond2_failure": cond2_fail}, dirs)
    return tally.verdict({"multiplication": lhs, "cond1": cond1_fail is None,
                          "cond2": cond2_fail is None,
                          "cond1_failure": cond1_fail, "cond2_failure": cond2_fail})


def check_T3_7(an: Analysis) -> TheoremVerdict:
    tally = _Tally("T3.7", an, ("forward", "backward"))
    hyp = an.faithful and an.multiplication
    mod = is_cofinitely_generated(an.M, an.submodules).holds
    ring = is_ring_cofinitely_generated(an.R, an.ideals).holds
    tally.record(hyp, mod == ring, lambda: {"module": mod, "ring": ring},
                 {"forward": (not mod) or ring, "backward": (not ring) or mod})
    return tally.verdict({"module_cofinite": mod, "ring_cofinite": ring, "flag": "DESK_TRIVIAL"})


def check_T3_8(an: Analysis) -> TheoremVerdict:
    M, R = an.M, an.R
    hyp = an.faithful and an.multiplication
    B = omega(M, an.ideals).omega_M
    subs: list[TheoremVerdict] = []

    t = _Tally("T3.8.1", an)
    bad = [x for x in range(M.size) if not M.action(B, 1 << x) >> x & 1]
    t.record(hyp, not bad, lambda: {"x": M.carrier.labels[bad[0]]})
    subs.append(t.verdict())

    t = _Tally("T3.8.2", an)
    BB = ideal_product(R, B, B)
    t.record(hyp, BB == B, lambda: {"B.B": an.rf(BB)})
    subs.append(t.verdict())

    t = _Tally("T3.8.3", an)
    for P in an.prime_ideals:
        ok = is_subset(B, P) or R.add_sets(B, P) == R.full
        t.record(hyp, ok, lambda P=P: {"P": an.rf(P), "h(B,P,0)": an.rf(R.add_sets(B, P))})
    if not an.prime_ideals:
        t.record(False, True, dict)
    subs.append(t.verdict())

    t = _Tally("T3.8.4", an)
    inside = [D for D in an.ideals if is_subset(D, B)]
    for N in an.submodules:
        ok = any(an.act(D) == N for D in inside)
        t.record(hyp, ok, lambda N=N: {"N": an.mf(N)})
    subs.append(t.verdict())

    t = _Tally("T3.8.5", an)
    for C in an.ideals:
        if C == R.full:
            continue
        t.record(hyp, an.act(C) != M.full, lambda C=C: {"C": an.rf(C)})
    if len(an.ideals) == 1:
        t.record(False, True, dict)
    subs.append(t.verdict())

    concl = all(s.conclusion_holds for s in subs)
    v = TheoremVerdict("T3.8", hyp, concl, {"B": an.rf(B)}, an.out_of_contract)
    failing = [s.theorem_id for s in subs if not s.passed]
    if failing:
        v.witness["failing_parts"] = failing
    v.parts = subs
    return v


def check_T3_9(an: Analysis) -> TheoremVerdict:
    tally = _Tally("T3.9", an)
    M, R = an.M, an.R
    hyp = an.nonzero and an.multiplication
    A1 = [P for P in an.maximal_ideals if an.act(P) != M.full]
    A2 = [P for P in an.maximal_ideals if is_subset(an.S0, P)]
    B1 = intersect_all(A1, R.full)
    B2 = intersect_all(A2, R.full)
    JM = jacobson_radical_module(M, an.submodules)
    g1, g2 = an.act(B1), an.act(B2)
    pairs = {"J(M)=g(B1)": JM == g1, "J(M)=g(B2)": JM == g2, "g(B1)=g(B2)": g1 == g2}
    tally.record(hyp, all(pairs.values()), lambda: {"J(M)": an.mf(JM), "g(B1)": an.mf(g1), "g(B2)": an.mf(g2)})
    return tally.verdict({"pairwise": pairs, "J(M)": an.mf(JM), "B1": an.rf(B1), "B2": an.rf(B2)})


def check_T3_10(Ms: Sequence[Hypermodule], sum_bound: int = 64) -> TheoremVerdict:
    """Direct-sum criterion for an explicit list of summands over one ring."""
    R = Ms[0].ring
    t = len(Ms)
    l = fold_count(R.m, t)
    S = external_direct_sum(Ms, sum_bound)
    an = Analysis(S, bound=max(DEFAULT_ENUM_BOUND, S.size))
    tally = _Tally("T3.10", an, ("forward", "backward"))
    hyp = l is not None
    lhs = an.multiplication
    each = [multiplication_certificate(Mi).verdict for Mi in Ms]
    witnesses = []
    ideals = an.ideals
    for i, Mi in enumerate(Ms):
        others = [Mj for j, Mj in enumerate(Ms) if j != i]
        hat = external_direct_sum(others, sum_bound) if others else zero_module(R)
        hat_zero = 1 << hat.zero
        found = None
        for I in ideals:
            if Mi.action(I, Mi.full) == Mi.full and hat.action(I, hat.full) == hat_zero:
                found = I
                break
        witnesses.append(found)
    cond_i = all(each)
    cond_ii = all(w is not None for w in witnesses)
    rhs = cond_i and cond_ii
    tally.record(hyp, lhs == rhs,
                 lambda: {"sum_multiplication": lhs, "parts_multiplication": each,
                          "witness_ideals": [None if w is None else an.rf(w) for w in witnesses]},
                 {"forward": (not lhs) or rhs, "backward": (not rhs) or lhs})
    return tally.verdict({"summands": t, "sum_multiplication": lhs, "cond_i": cond_i,
                          "cond_ii": cond_ii,
                          "witness_ideals": [None if w is None else an.rf(w) for w in witnesses]})


def _T3_10_instances(an: Analysis, self_sum_bound: int) -> list[tuple[str, list[Hypermodule]]]:
    M = an.M
    m = an.R.m
    out = [("single", [M])]
    if M.size**m <= self_sum_bound:
        out.append(("self_sum", [M] * m))
    proper = [N for N in an.submodules if N != an.zero and N != M.full]
    for t in an.sum_family_sizes():
        if t < 2:
            continue
        for parts in itertools.combinations(proper, t):
            if internal_direct_sum_check(M, parts).holds:
                out.append(("internal:" + " + ".join(an.mf(p) for p in parts),
                            [restrict(M, p) for p in parts]))
    return out


def check_T3_10_on(an: Analysis, self_sum_bound: int = DEFAULT_SELF_SUM_BOUND) -> TheoremVerdict:
    """Quantified form on one module: the module alone, ``M + ... + M`` when
    small enough, and every internal direct-sum decomposition of M."""
    tally = _Tally("T3.10", an, ("forward", "backward"))
    for label, Ms in _T3_10_instances(an, self_sum_bound):
        v = check_T3_10(Ms, max(64, self_sum_bound))
        tally.record(v.hypotheses_hold, v.conclusion_holds,
                     lambda v=v, label=label: {"decomposition": label, **v.witness}, v.directions)
    return tally.verdict()


# ---------------------------------------------------------------------------
# L4.x and C4.x checks


def check_L4_1(an: Analysis, Q: Optional[int] = None, r: Optional[int] = None,
               x: Optional[int] = None) -> TheoremVerdict:
    M, R = an.M, an.R
    tally = _Tally("L4.1", an)
    base = an.faithful and an.multiplication
    Qs = an.ideals if Q is None else [Q]
    rs = range(R.size) if r is None else [r]
    xs = range(M.size) if x is None else [x]
    primary = set(an.primary_ideals)
    for q in Qs:
        QM = an.act(q)
        rad = an.radicals.get(q) if q in an.radicals else radical(R, q)
        for a in rs:
            for y in xs:
                hyp = base and q in primary and is_subset(M.act1[a][y], QM)
                concl = bool(rad >> a & 1) or bool(QM >> y & 1)
                tally.record(hyp, concl, lambda q=q, a=a, y=y: {
                    "Q": an.rf(q), "r": R.carrier.labels[a], "m": M.carrier.labels[y]})
    return tally.verdict()


def check_C4_2(an: Analysis, Q: Optional[int] = None) -> TheoremVerdict:
    tally = _Tally("C4.2", an)
    base = an.faithful and an.multiplication
    primary = set(an.primary_ideals)
    for q in (an.ideals if Q is None else [Q]):
        N = an.act(q)
        hyp = base and q in primary and N != an.M.full
        concl = N != an.M.full and an.primary_sub(N)
        tally.record(hyp, concl, lambda q=q, N=N: {"Q": an.rf(q), "N": an.mf(N)})
    return tally.verdict()


def check_C4_3(an: Analysis, N: Optional[int] = None) -> TheoremVerdict:
    tally = _Tally("C4.3", an, ("1=>2", "2=>3", "3=>1"))
    M = an.M
    primary = [Q for Q in an.primary_ideals if is_subset(an.S0, Q)]
    for K in (an.submodules if N is None else [N]):
        if K == M.full:
            tally.record(False, True, lambda: {"N": an.mf(K), "note": "N not proper"})
            continue
        c1 = an.primary_sub(K)
        c2 = an.colon(K) in set(an.primary_ideals)
        c3 = any(an.act(Q) == K for Q in primary)
        dirs = {"1=>2": (not c1) or c2, "2=>3": (not c2) or c3, "3=>1": (not c3) or c1}
        tally.record(an.multiplication, all(dirs.values()),
                     lambda K=K, c1=c1, c2=c2, c3=c3: {"N": an.mf(K), "(1)": c1, "(2)": c2, "(3)": c3},
                     dirs)
    return tally.verdict()


# ---------------------------------------------------------------------------
# T5.x, L5.x and C5.x checks


def _colon_sum(an: Analysis, parts: Sequence[int]) -> int:
    """``h_(l)(S_{N_1}, ..., S_{N_t})``."""
    return evaluate_extended_on_sets(an.R.h, [an.colon(N) for N in parts])


def check_T5_1(an: Analysis, parts: Optional[Sequence[int]] = None) -> TheoremVerdict:
    M, R = an.M, an.R
    tally = _Tally("T5.1", an, ("1=>2", "2=>3", "3=>4", "4=>1"))
    families = an.families(an.sum_family_sizes()) if parts is None else [tuple(parts)]
    c1 = an.multiplication
    ann = [annihilator_sets(M, x).A for x in range(M.size)]
    torsion = {P: torsion_part(M, P).X_lower for P in an.maximal_ideals}
    orbits = [M.action(R.full, 1 << x) for x in range(M.size)]
    for fam in families:
        if not all(an.mult(N) for N in fam) or submodule_sum(M, fam) != M.full:
            tally.record(False, True, dict)
            continue
        c2 = all(an.act(an.colon(N)) == N for N in fam)
        B = _colon_sum(an, fam)
        c3 = all(R.add_sets(A, B) == R.full for A in ann)
        union = 0
        for N in fam:
            union |= N
        c4 = True
        for P in an.maximal_ideals:
            if torsion[P] == M.full:
                continue
            if not any(is_subset(M.action(R.unit_shift(p), M.full), orbits[a])
                       for p in members(P) for a in members(union)):
                c4 = False
                break
        dirs = {"1=>2": (not c1) or c2, "2=>3": (not c2) or c3,
                "3=>4": (not c3) or c4, "4=>1": (not c4) or c1}
        tally.record(True, c1 == c2 == c3 == c4,
                     lambda fam=fam, c2=c2, c3=c3, c4=c4: {
                         "parts": [an.mf(N) for N in fam], "(1)": c1, "(2)": c2, "(3)": c3, "(4)": c4},
                     dirs)
    return tally.verdict()


def check_C5_2(an: Analysis, parts: Optional[Sequence[int]] = None) -> TheoremVerdict:
    tally = _Tally("C5.2", an)
    families = an.families(an.sum_family_sizes()) if parts is None else [tuple(parts)]
    for fam in families:
        hyp = all(an.mult(N) for N in fam) and _colon_sum(an, fam) == an.R.full
        tally.record(hyp, an.multiplication, lambda fam=fam: {"parts": [an.mf(N) for N in fam]})
    return tally.verdict()


def check_T5_3(an: Analysis, parts: Optional[Sequence[int]] = None) -> TheoremVerdict:
    M = an.M
    tally = _Tally("T5.3", an)
    families = an.families(an.sum_family_sizes()) if parts is None else [tuple(parts)]
    for fam in families:
        hyp = all(an.mult(N) for N in fam) and submodule_sum(M, fam) == M.full
        if not hyp:
            tally.record(False, True, dict)
            continue
        bad = None
        for N in an.submodules:
            if submodule_sum(M, [N & P for P in fam]) != N:
                bad = N
                break
        tally.record(True, bad is None,
                     lambda fam=fam, bad=bad: {"parts": [an.mf(P) for P in fam], "N": an.mf(bad)})
    return tally.verdict()


def check_T5_4(an: Analysis, H: Optional[int] = None, K: Optional[int] = None) -> TheoremVerdict:
    tally = _Tally("T5.4", an)
    pairs = itertools.combinations_with_replacement(an.submodules, 2) if H is None else [(H, K)]
    for a, b in pairs:
        s = an.sum(a, b)
        hyp = an.mult(a) and an.mult(b) and an.mult(s)
        tally.record(hyp, an.mult(a & b), lambda a=a, b=b: {"H": an.mf(a), "K": an.mf(b)})
    return tally.verdict()


def check_L5_5(an: Analysis, N1: Optional[int] = None, N2: Optional[int] = None) -> TheoremVerdict:
    M, R = an.M, an.R
    tally = _Tally("L5.5", an)
    pairs = itertools.combinations_with_replacement(an.submodules, 2) if N1 is None else [(N1, N2)]
    for a, b in pairs:
        A = residual(M, b, a)
        B = residual(M, a, b)
        hyp = an.mult(a) and an.mult(b) and R.add_sets(A, B) == R.full
        s = an.sum(a, b)
        tally.record(hyp, an.mult(s), lambda a=a, b=b, s=s: {
            "N1": an.mf(a), "N2": an.mf(b), "f(N1,N2,0)": an.mf(s)})
    return tally.verdict()


def check_T5_6(an: Analysis, L: Optional[int] = None, Ns: Optional[Sequence[int]] = None) -> TheoremVerdict:
    M = an.M
    tally = _Tally("T5.6", an)
    Ls = an.submodules if L is None else [L]
    fams = an.families(range(1, an.family_cap)) if Ns is None else [tuple(Ns)]
    for l_ in Ls:
        for fam in fams:
            N = intersect_all(fam, M.full)
            hyp = (an.mult(l_) and all(an.mult(x) for x in fam)
                   and all(an.mult(an.sum(l_, x)) for x in fam) and an.mult(N))
            s = an.sum(l_, N)
            tally.record(hyp, an.mult(s), lambda l_=l_, fam=fam: {
                "L": an.mf(l_), "N_i": [an.mf(x) for x in fam]})
    return tally.verdict()


def check_T5_7(an: Analysis, Ns: Optional[Sequence[int]] = None) -> TheoremVerdict:
    M = an.M
    tally = _Tally("T5.7", an, ("forward", "backward"))
    fams = an.families(range(2, an.family_cap + 1)) if Ns is None else [tuple(Ns)]
    for fam in fams:
        hyp = all(an.mult(an.sum(a, b)) for a, b in itertools.combinations(fam, 2))
        every = all(an.mult(x) for x in fam)
        inter = an.mult(intersect_all(fam, M.full))
        tally.record(hyp, every == inter, lambda fam=fam, every=every, inter=inter: {
            "N_i": [an.mf(x) for x in fam], "all_multiplication": every,
            "intersection_multiplication": inter},
            {"forward": (not every) or inter, "backward": (not inter) or every})
    return tally.verdict()


def check_C5_8(an: Analysis, Ns: Optional[Sequence[int]] = None, split: Optional[int] = None) -> TheoremVerdict:
    M = an.M
    tally = _Tally("C5.8", an)
    fams = an.families(range(2, an.family_cap + 1)) if Ns is None else [tuple(Ns)]
    for fam in fams:
        splits = range(1, len(fam)) if split is None else [split]
        hyp = (all(an.mult(x) for x in fam)
               and all(an.mult(an.sum(a, b)) for a, b in itertools.combinations(fam, 2)))
        for s in splits:
            N = intersect_all(fam[:s], M.full)
            L = intersect_all(fam[s:], M.full)
            tally.record(hyp, an.mult(an.sum(N, L)), lambda fam=fam, s=s: {
                "N_i": [an.mf(x) for x in fam], "split": s})
    return tally.verdict()


# ---------------------------------------------------------------------------
# registry


CHECKS: dict[str, Callable[[Analysis], TheoremVerdict]] = {
    "L3.2": check_L3_2, "T3.3": check_T3_3, "T3.4": check_T3_4, "T3.5": check_T3_5,
    "T3.7": check_T3_7, "T3.8": check_T3_8, "T3.9": check_T3_9, "T3.10": check_T3_10_on,
    "L4.1": check_L4_1, "C4.2": check_C4_2, "C4.3": check_C4_3,
    "T5.1": check_T5_1, "C5.2": check_C5_2, "T5.3": check_T5_3, "T5.4": check_T5_4,
    "L5.5": check_L5_5, "T5.6": check_T5_6, "T5.7": check_T5_7, "C5.8": check_C5_8,
}


def known_target(tid: str) -> bool:
    return tid in CHECKS or tid in T38_PARTS


def run_theorem(an: Analysis, tid: str) -> TheoremVerdict:
    if tid in T38_PARTS:
        return check_T3_8(an).parts[T38_PARTS.index(tid)]
    try:
        fn = CHECKS[tid]
    except KeyError:
        raise KeyError(f"unknown theorem id {tid!r}") from None
    return fn(an)


def run_all(an: Analysis) -> list[TheoremVerdict]:
    return [CHECKS[tid](an) for tid in THEOREM_IDS]
