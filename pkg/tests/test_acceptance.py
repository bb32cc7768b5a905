"""Acceptance criteria, one test per criterion.

Each test prints a ``PASS``/``FAIL criterion N: ...`` line. The module can
also be run directly (``python3 tests/test_acceptance.py``) to print the
same lines without pytest.
"""
import contextlib
import io
import random
import statistics
import sys
import tempfile
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from completion import best_completion, u, v, worked_example  # noqa: E402
from rrsplit.bounds import ClassSplit, split_class, ub_class_ve, ub_existing, ub_ve  # noqa: E402
from rrsplit.cli import main as cli_main  # noqa: E402
from rrsplit.formats import format_edgelist, parse_mapping  # noqa: E402
from rrsplit.graph import bitset, build_graph, equivalence_classes, members, random_graph  # noqa: E402
from rrsplit.oracle import brute_force_mcs, verify_mapping  # noqa: E402
from rrsplit.solver import VARIANTS, SolverConfig, solve  # noqa: E402

SEED = 20250101
N_INSTANCES = 500
DENSITIES = (0.2, 0.5, 0.8)


@dataclass
class Instance:
    Q: object
    G: object
    expected: int
    reports: dict = field(default_factory=dict)
    visited: dict = field(default_factory=dict)


def build_suite(seed=SEED, count=N_INSTANCES):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nq = rng.randint(1, 7)
        ng = rng.randint(nq, 8)
        p = rng.choice(DENSITIES)
        Q, G = random_graph(nq, p, rng), random_graph(ng, p, rng)
        inst = Instance(Q, G, brute_force_mcs(Q, G)[0])
        for name in VARIANTS:
            seen = []
            inst.reports[name] = solve(Q, G, SolverConfig.variant(name), observer=seen.append)
            inst.visited[name] = seen
        out.append(inst)
    return out


_SUITE = None


def shared_suite():
    global _SUITE
    if _SUITE is None:
        _SUITE = build_suite()
    return _SUITE


# --- checks: each returns (ok, detail) -------------------------------------


def check_exactness(suite):
    wrong = invalid = 0
    for inst in suite:
        for rep in inst.reports.values():
            wrong += rep.best_size != inst.expected
            invalid += not verify_mapping(inst.Q, inst.G, rep.best_mapping)
    runs = len(suite) * len(VARIANTS)
    return wrong == 0 and invalid == 0, f"{runs} runs, {wrong} size mismatches, {invalid} invalid mappings"


def check_worked_bound():
    b, psi = worked_example()
    (X1, Y1), (X2, Y2) = b.C
    first = ub_class_ve(ClassSplit(bitset([u(2)]), bitset([u(3)]), bitset([v(4), v(5)]), 0), 2)
    second = ub_class_ve(ClassSplit(bitset([u(4)]), bitset([u(5), u(6), u(7)]), 0, Y2), 4)
    derived = (
        ub_class_ve(split_class(X1, Y1, b.D, psi, u(2)), 2),
        ub_class_ve(split_class(X2, Y2, b.D, psi, u(4)), 4),
    )
    total = ub_ve(b.S, b.C, b.D, psi)
    old = ub_existing(b.S, b.C)
    got = (first, second, total, old)
    ok = got == (1, 4, 6, 7) and derived == (1, 4)
    return ok, f"class bounds {first},{second}; ub_ve {total}; ub_existing {old}"


def check_bounds(suite):
    dominance = soundness = checked = 0
    for inst in suite:
        psi = equivalence_classes(inst.Q)
        small = inst.Q.n <= 6
        for name, seen in inst.visited.items():
            for b in seen:
                if not b.C:
                    continue
                bound = ub_ve(b.S, b.C, b.D, psi)
                dominance += bound > ub_existing(b.S, b.C)
                if small:
                    checked += 1
                    soundness += best_completion(inst.Q, inst.G, b) > bound
    ok = dominance == 0 and soundness == 0
    return ok, f"{dominance} dominance and {soundness} soundness violations ({checked} completions checked)"


def check_branch_bound(suite):
    bad = total = 0
    for inst in suite:
        nq, ng = inst.Q.n, inst.G.n
        if nq > 5:
            continue
        for rep in inst.reports.values():
            total += 1
            bad += rep.branches > nq * (ng + 1) ** nq
    return bad == 0, f"{bad} of {total} runs above |V_Q|*(|V_G|+1)^|V_Q|"


def check_disjoint_rows(suite):
    overlaps = stray = rows = 0
    for inst in suite:
        psi = equivalence_classes(inst.Q)
        for name, (algorithm, *_) in VARIANTS.items():
            if algorithm != "rrsplit":
                continue
            for b in inst.visited[name]:
                mapped = {a for a, _ in b.S}
                keys = list(b.D)
                rows += len(keys)
                stray += sum(k not in mapped for k in keys)
                for a, c in combinations(keys, 2):
                    if psi.class_of[a] == psi.class_of[c] and b.D[a] & b.D[c]:
                        overlaps += 1
    return overlaps == 0 and stray == 0, f"{rows} rows inspected, {overlaps} overlapping twin rows, {stray} unmapped keys"


def check_reduction_trend(suite):
    ratios = []
    fewer = 0
    for inst in suite:
        rr, mc = inst.reports["rrsplit"].branches, inst.reports["mcsplit"].branches
        fewer += rr <= mc
        ratios.append(rr / mc)
    share = fewer / len(suite)
    med = statistics.median(ratios)
    return share >= 0.95 and med <= 0.9, f"rrsplit <= mcsplit on {share:.1%}, median ratio {med:.3f}"


def _twin_graph(rng):
    # a random core plus copies of some core vertices that share their neighbourhood
    core = rng.randint(1, 40)
    p = rng.choice((0.1, 0.3, 0.5, 0.7))
    base = random_graph(core, p, rng)
    edges = list(base.edges())
    n = core
    for _ in range(rng.randint(0, 64 - core)):
        src = rng.randrange(core)
        edges.extend((w, n) for w in members(base.adj[src]))
        n += 1
    return build_graph(n, edges)


def _pairwise_classes(g):
    nbrs = [frozenset(w for w in range(g.n) if g.adjacent(x, w)) for x in range(g.n)]
    return {frozenset(w for w in range(g.n) if nbrs[w] == nbrs[x]) for x in range(g.n)}


def check_equivalence(seed=SEED):
    rng = random.Random(seed)
    start = time.perf_counter()
    bad = 0
    for i in range(200):
        if i % 2:
            g = random_graph(rng.randint(0, 64), rng.choice((0.0, 0.05, 0.5, 0.95, 1.0)), rng)
        else:
            g = _twin_graph(rng)
        got = {frozenset(members(m)) for m in equivalence_classes(g).members}
        bad += got != _pairwise_classes(g)
    elapsed = time.perf_counter() - start
    return bad == 0 and elapsed < 10, f"{bad} of 200 graphs differ, {elapsed:.2f}s"


def _quiet_cli(args):
    with contextlib.redirect_stdout(io.StringIO()) as out, contextlib.redirect_stderr(io.StringIO()):
        code = cli_main([str(a) for a in args])
    return code, out.getvalue()


def check_cli_round_trip(workdir, seed=SEED):
    workdir = Path(workdir)
    rng = random.Random(seed)
    failures = 0
    for i in range(50):
        nq = rng.randint(1, 7)
        Q = random_graph(nq, rng.choice(DENSITIES), rng)
        G = random_graph(rng.randint(nq, 8), rng.choice(DENSITIES), rng)
        qf, gf, mf = workdir / f"q{i}", workdir / f"g{i}", workdir / f"m{i}"
        qf.write_text(format_edgelist(Q))
        gf.write_text(format_edgelist(G))
        solved, _ = _quiet_cli(["solve", "--q", qf, "--g", gf, "--mapping-out", mf])
        checked, _ = _quiet_cli(["verify", "--q", qf, "--g", gf, "--mapping", mf])
        size = len(parse_mapping(mf.read_text())) if mf.exists() else -1
        failures += (solved, checked) != (0, 0) or size != brute_force_mcs(Q, G)[0]

    bench = workdir / "bench"
    bench.mkdir()
    for i in range(4):
        (bench / f"graph{i}").write_text(format_edgelist(random_graph(rng.randint(3, 7), 0.5, rng)))
    algos = list(VARIANTS)
    code, out = _quiet_cli(["bench", "--dir", bench, "--algos", ",".join(algos), "--time-limit", "60"])
    rows = len(out.splitlines()) - 1
    expected = 6 * len(algos)
    ok = failures == 0 and code == 0 and rows == expected
    return ok, f"{50 - failures}/50 solve->verify round trips, bench emitted {rows} rows (expected {expected})"


# --- pytest wrappers ----------------------------------------------------------


@pytest.fixture(scope="module")
def suite():
    return shared_suite()


@pytest.fixture
def announce(capsys):
    def emit(number, result):
        ok, detail = result
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        return ok

    return emit


def test_criterion_1_exactness(suite, announce):
    assert announce(1, check_exactness(suite))


def test_criterion_2_worked_bound(announce):
    assert announce(2, check_worked_bound())


def test_criterion_3_bound_dominance_and_soundness(suite, announce):
    assert announce(3, check_bounds(suite))


def test_criterion_4_branch_count_bound(suite, announce):
    assert announce(4, check_branch_bound(suite))


def test_criterion_5_disjoint_twin_rows(suite, announce):
    assert announce(5, check_disjoint_rows(suite))


def test_criterion_6_reduction_trend(suite, announce):
    assert announce(6, check_reduction_trend(suite))


def test_criterion_7_equivalence_classes(announce):
    assert announce(7, check_equivalence())


def test_criterion_8_cli_round_trip(tmp_path, announce):
    assert announce(8, check_cli_round_trip(tmp_path))


if __name__ == "__main__":
    data = shared_suite()
    with tempfile.TemporaryDirectory() as tmp:
        results = [
            check_exactness(data),
            check_worked_bound(),
            check_bounds(data),
            check_branch_bound(data),
            check_disjoint_rows(data),
            check_reduction_trend(data),
            check_equivalence(),
            check_cli_round_trip(tmp),
        ]
    for number, (ok, detail) in enumerate(results, 1):
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
    sys.exit(0 if all(ok for ok, _ in results) else 1)
