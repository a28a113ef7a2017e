"""The eight acceptance criteria, one test each.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line with its
measurement, then asserts.  Time limits are pinned below.
"""

import json
import pathlib
import random
import subprocess
import sys
import time

import pytest

from hypermod.constructions import quotient
from hypermod.core import Hypermodule, validate_hypermodule, validate_krasner_hyperring
from hypermod.errors import StructureFileError
from hypermod.fixtures import cyclic_module, k2_ring, self_module, v4_module, zn_ring
from hypermod.harness import THEOREM_IDS, Analysis, check_T3_10, run_all
from hypermod.multiplication import is_multiplication
from hypermod.search import (SearchSpec, generate_hypermodules, generate_krasner_hyperrings, hunt)
from hypermod.substructures import enumerate_hyperideals, enumerate_subhypermodules
from hypermod.textformat import emit, parse

from conftest import size_four_rings
from helpers import mutate, same_module
from oracles import (classical_module_axioms, classical_ring_axioms, naive_ideals, naive_submodules,
                     oracle_action, oracle_multiplication_witnesses, random_relabel, table_ring,
                     zk_tables)

CRIT1_SECONDS = 1.0
CRIT2_SECONDS = 10.0
CRIT4_SECONDS = 600.0
ROUND_TRIPS = 1000
FUZZ_CASES = 1000
FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def report(capsys):
    def emit_line(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit_line


def test_1_axiom_stack_soundness(report):
    """Classical Z/2, Z/4, Z/6, modules over them and single-cell
    mutations: every check agrees with the classical oracle."""
    rng = random.Random(1)
    cases = 0
    disagreements = []
    elapsed = 0.0
    for k in (2, 4, 6):
        add, mul = zk_tables(k)
        tables = [(add, mul)]
        for _ in range(30):
            a, b = list(add), list(mul)
            t = a if rng.random() < 0.5 else b
            t[rng.randrange(len(t))] = rng.randrange(k)
            tables.append((a, b))
        for a, b in tables:
            R = table_ring(k, a, b)
            t0 = time.perf_counter()
            ours = validate_krasner_hyperring(R).valid
            elapsed += time.perf_counter() - t0
            theirs = all(classical_ring_axioms(k, lambda x, y: a[x * k + y], lambda x, y: b[x * k + y], 0, 1).values())
            cases += 1
            if ours != theirs:
                disagreements.append(("ring", k, a, b))
        R = zn_ring(k)
        for size in (d for d in range(1, k + 1) if k % d == 0):
            base = cyclic_module(R, size)
            mods = [base]
            for _ in range(20):
                g = list(base.g_table)
                g[rng.randrange(len(g))] = 1 << rng.randrange(size)
                mods.append(Hypermodule(R, base.carrier, base.f, tuple(g), 0))
            for M in mods:
                t0 = time.perf_counter()
                ours = validate_hypermodule(M).valid
                elapsed += time.perf_counter() - t0
                act = {(r, x): M.g((r,), x).bit_length() - 1 for r in range(k) for x in range(size)}
                theirs = all(classical_module_axioms(
                    k, lambda r, s: (r + s) % k, lambda r, s: r * s % k, 1, size,
                    lambda x, y: (x + y) % size, lambda r, x: act[(r, x)], 0).values())
                cases += 1
                if ours != theirs:
                    disagreements.append(("module", k, size, M.g_table))
    ok = not disagreements and elapsed < CRIT1_SECONDS
    report(1, ok, f"{cases} cases, {len(disagreements)} disagreements, "
                  f"checks took {elapsed:.3f}s (limit {CRIT1_SECONDS}s)")


def _enumeration_cases():
    out = []
    for k in range(1, 7):
        out.append(self_module(zn_ring(k)))
        for a in range(1, k + 1):
            if k % a == 0 and a != k:
                out.append(cyclic_module(zn_ring(k), a))
    out += [self_module(k2_ring()), v4_module(), self_module(zn_ring(3, 3, 3)),
            self_module(zn_ring(5, 2, 3))]
    for rsize in (1, 2, 3):
        for R in generate_krasner_hyperrings(rsize):
            for msize in (1, 2, 3):
                out.extend(generate_hypermodules(R, msize))
    for R in generate_krasner_hyperrings(2):
        out.extend(generate_hypermodules(R, 4))
    out += [self_module(R) for R in size_four_rings()]
    rng = random.Random(2)
    out += [random_relabel(M, rng) for M in list(out)]
    return out


def test_2_enumeration_correctness(report):
    cases = _enumeration_cases()
    assert max(max(M.size, M.ring.size) for M in cases) == 6
    bad = []
    t0 = time.perf_counter()
    for M in cases:
        if enumerate_hyperideals(M.ring) != naive_ideals(M.ring):
            bad.append(("ideals", M.ring.carrier.labels))
        if enumerate_subhypermodules(M) != naive_submodules(M):
            bad.append(("submodules", M.carrier.labels))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < CRIT2_SECONDS
    report(2, ok, f"{len(cases)} instances up to size 6, {len(bad)} mismatches, "
                  f"{elapsed:.2f}s including oracle (limit {CRIT2_SECONDS}s)")


def test_3_multiplication_detection(report):
    z4 = is_multiplication(self_module(zn_ring(4)))
    ok_z4 = z4.verdict and z4.witnesses == {0b0001: 0b0001, 0b0101: 0b0101, 0b1111: 0b1111}
    v4 = is_multiplication(v4_module())
    lines = {0b0011, 0b0101, 0b1001}
    ok_v4 = not v4.verdict and v4.failing in lines
    zk = []
    for k in range(1, 9):
        M = self_module(zn_ring(k))
        oracle = oracle_multiplication_witnesses(M)
        zk.append(is_multiplication(M).verdict and all(oracle.values()))
    ok = ok_z4 and ok_v4 and all(zk)
    report(3, ok, f"Z4 witness map {'ok' if ok_z4 else 'wrong'}; V4 fails at "
                  f"{v4_module().carrier.fmt(v4.failing)}; Z/k multiplication for k<=8: {sum(zk)}/8")


def test_4_exhaustive_harness(report):
    """Every in-contract failure among (2,2) instances of size <= 3 is
    surfaced by the hunt with a serialized instance that reproduces it."""
    t0 = time.perf_counter()
    hits = hunt(SearchSpec(max_ring_size=3, max_module_size=3))
    elapsed = time.perf_counter() - t0
    surfaced = set()
    reproduced = True
    for h in hits:
        text = emit(h.module)
        back = parse(text).module
        v = [x for x in run_all(Analysis(back)) if x.theorem_id == h.verdict.theorem_id][0]
        reproduced = reproduced and not v.passed and not v.out_of_contract
        surfaced.add((text, h.verdict.theorem_id))
    # independent sweep over the same bounds
    silent = []
    instances = in_contract = 0
    for rsize in (1, 2, 3):
        for R in generate_krasner_hyperrings(rsize):
            if R.degenerate:
                continue
            for msize in (1, 2, 3):
                for M in generate_hypermodules(R, msize):
                    instances += 1
                    an = Analysis(M)
                    if an.out_of_contract:
                        continue
                    in_contract += 1
                    vs = run_all(an)
                    assert len(vs) == len(THEOREM_IDS) == 19
                    for v in vs:
                        if not v.passed and (emit(M), v.theorem_id) not in surfaced:
                            silent.append((emit(M), v.theorem_id))
    ids = sorted({h.verdict.theorem_id for h in hits})
    parts = sorted({p.theorem_id for h in hits for p in h.verdict.parts if not p.passed})
    ok = not silent and reproduced and elapsed < CRIT4_SECONDS
    report(4, ok, f"{instances} instances, {in_contract} in contract, {len(hits)} serialized "
                  f"counterexample(s) for {ids} (parts {parts}), {len(silent)} silent, "
                  f"hunt {elapsed:.1f}s (limit {CRIT4_SECONDS:.0f}s)")


def test_5_quotient_validity(report, fixtures, corpus):
    pairs = 0
    bad = []
    for M in list(fixtures.values()) + list(corpus):
        for N in enumerate_subhypermodules(M):
            pairs += 1
            try:
                if not quotient(M, N).validate().valid:
                    bad.append((M.carrier.labels, N, "invalid"))
            except Exception as e:  # noqa: BLE001 - any failure counts
                bad.append((M.carrier.labels, N, type(e).__name__))
    report(5, not bad, f"{pairs} (M, N) pairs, {len(bad)} failures")


def test_6_direct_sum_criterion(report):
    R = zn_ring(6)
    Z2, Z3 = cyclic_module(R, 2), cyclic_module(R, 3)
    v = check_T3_10([Z2, Z3])
    # CRT oracle: 3 is the idempotent for Z/2 and 4 for Z/3, so the
    # witnesses are the ideals they generate
    crt = []
    for e, here, there in ((3, Z2, Z3), (4, Z3, Z2)):
        I = {e * r % 6 for r in range(6)}
        crt.append("{" + ", ".join(str(x) for x in sorted(I)) + "}")
        assert oracle_action(here, I, set(range(here.size))) == set(range(here.size))
        assert oracle_action(there, I, set(range(there.size))) == {0}
    ok = (v.passed and v.hypotheses_hold and v.directions == {"forward": True, "backward": True}
          and v.witness["witness_ideals"] == crt and v.witness["sum_multiplication"])
    report(6, ok, f"directions {v.directions}, witness ideals {v.witness['witness_ideals']} "
                  f"(CRT oracle {crt})")


def _round_trip_pool(corpus):
    base = list(corpus) + [self_module(zn_ring(3, 3, 3)), v4_module(), self_module(zn_ring(6))]
    base += [self_module(R) for R in size_four_rings()]
    return base


def test_7_parser_round_trip(report, corpus):
    files = sorted(FIX.glob("*.hs"))
    fixture_ok = all(emit(parse(emit(parse(p.read_text())))) == emit(parse(p.read_text())) for p in files)
    rng = random.Random(7)
    pool = _round_trip_pool(corpus)
    trips = 0
    for i in range(ROUND_TRIPS):
        M = random_relabel(pool[i % len(pool)], rng, fresh_names=bool(i % 2))
        text = emit(M)
        back = parse(text).module
        if not same_module(back, M) or emit(back) != text:
            break
        trips += 1
    crashes = []
    diagnostics = 0
    sources = [p.read_text() for p in files]
    for _ in range(FUZZ_CASES):
        text = mutate(rng.choice(sources), rng)
        try:
            parse(text)
        except StructureFileError as e:
            diagnostics += bool(e.diagnostics)
        except Exception as e:  # noqa: BLE001 - anything else is a crash
            crashes.append(type(e).__name__)
    ok = fixture_ok and trips == ROUND_TRIPS and not crashes
    report(7, ok, f"{len(files)} fixtures, {trips}/{ROUND_TRIPS} round trips, {FUZZ_CASES} fuzz cases: "
                  f"{diagnostics} diagnosed, {len(crashes)} crashes")


def _cli(*argv):
    r = subprocess.run([sys.executable, "-m", "hypermod", "--format", "json", *map(str, argv)],
                       capture_output=True, check=False)
    return r.returncode, r.stdout


def test_8_determinism(report):
    runs = [
        ("verify", FIX / "v4.hs"),
        ("classify", FIX / "z6.hs"),
        ("search", "--max-size", "3", "--max-module-size", "3", "--random", "--seed", "17",
         "--count", "10", "--target", "is_multiplication"),
        ("search", "--max-size", "3", "--max-module-size", "3", "--target", "T3.8.5"),
    ]
    identical = 0
    for argv in runs:
        a, b = _cli(*argv), _cli(*argv)
        identical += a == b and bool(a[1])
        json.loads(a[1])
    serial = _cli("search", "--max-size", "3", "--max-module-size", "3")
    parallel = _cli("search", "--max-size", "3", "--max-module-size", "3", "--jobs", "3")
    par_ok = serial == parallel
    ok = identical == len(runs) and par_ok
    report(8, ok, f"{identical}/{len(runs)} repeated runs byte-identical; "
                  f"--jobs 3 vs serial {'identical' if par_ok else 'DIFFERENT'}")
