"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion <k>: pass|fail ...`` line, even when
pytest is capturing output. Run just this file with::

    pytest tests/test_acceptance.py -v

or directly with ``python3 tests/test_acceptance.py`` for the summary only.
"""
import os
import random
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

from augcube.aqcore import Graph, build_aq, graph_difference, parse_label
from augcube.cli import main as cli_main
from augcube.decomposer import (AQ4_HAMILTONIAN, HamiltonianCycle, base_aq4_hamiltonian,
                                base_aq4_n13, decompose)
from augcube.flow import vertex_connectivity
from augcube.formats import BUNDLE_FILES, read_bundle
from augcube.ladder import LadderCert, cycle_edges, extract_cycle, validate_cert
from augcube.report import Report
from augcube.verifier import (canonical_cycle, cycles_of_length, exhaustive_cycle_spectrum,
                              verify_aq_sanity, verify_common_neighbor_bound,
                              verify_decomposition, verify_matching_join_property,
                              verify_pancyclic_via_cert)

try:
    from .oracles import brute_force_kappa, random_graph
except ImportError:  # script mode
    sys.path.insert(0, str(Path(__file__).parent))
    from oracles import brute_force_kappa, random_graph

DESK_RANGE = (4, 5, 6, 7)


def partitions(n):
    return [n1 for n1 in range(2, n) if n1 <= 2 * n - 1 - n1]


def _silent_cli(argv) -> int:
    # the CLI prints progress lines; keep the criterion output readable
    with open(os.devnull, "w") as sink:
        saved = sys.stdout
        sys.stdout = sink
        try:
            return cli_main([str(a) for a in argv])
        finally:
            sys.stdout = saved


def criterion_1():
    """Every desk-scale partition: CLI decompose then exact verify."""
    bad = []
    with tempfile.TemporaryDirectory() as tmp:
        for n in DESK_RANGE:
            for n1 in partitions(n):
                out = Path(tmp) / f"aq{n}_{n1}"
                if _silent_cli(["decompose", "--n", n, "--n1", n1, "--out", out]) != 0:
                    bad.append(f"decompose({n},{n1})")
                    continue
                if _silent_cli(["verify", out, "--mode", "exact"]) != 0:
                    bad.append(f"verify({n},{n1})")
    count = sum(len(partitions(n)) for n in DESK_RANGE)
    return not bad, f"{count} partitions, exact kappa == n_i" + (f"; failed {bad}" if bad else "")


def criterion_2():
    bad = []
    for n in DESK_RANGE:
        for n1 in partitions(n):
            d = decompose(n, n1)
            for side, k, cert in ((d.H, d.n1, d.cert_h), (d.K, d.n2, d.cert_k)):
                if k >= 3 and not verify_pancyclic_via_cert(side, cert).overall:
                    bad.append(f"cert({n},{n1},{k})")
    full = set(range(4, 17))
    spectra = []
    for n1 in partitions(4):
        d = decompose(4, n1)
        for side, k in ((d.H, d.n1), (d.K, d.n2)):
            lengths = exhaustive_cycle_spectrum(side)
            spectra.append(f"{k}:{min(lengths)}..{max(lengths)}")
            if k == 2:
                if lengths != {16}:
                    bad.append(f"hamiltonian spectrum {sorted(lengths)}")
            elif {x for x in lengths if x >= 4} != full:
                bad.append(f"spectrum({n1},{k}) {sorted(lengths)}")
    return not bad, "certificates 4..2^n; n=4 spectra " + " ".join(spectra) + (
        f"; failed {bad}" if bad else "")


def criterion_3():
    aq4 = build_aq(4)
    seq = [parse_label(s) for s in AQ4_HAMILTONIAN.split()]
    cyc_ok = len(set(seq)) == 16 and cycle_edges(seq) <= aq4.edges
    _, base = base_aq4_hamiltonian()
    quoted = LadderCert(4, base.u, base.v, base.special_t, base.special_dim)
    cert_ok = validate_cert(quoted, graph_difference(aq4, cycle_edges(seq)),
                            require_special=True).overall
    l1, _ = base_aq4_n13()
    pins = tuple(parse_label(s) for s in ("1000", "1001", "1011", "1010"))
    pins_ok = (l1.U(1), l1.V(1), l1.U(4), l1.V(4)) == pins and validate_cert(l1, aq4).overall
    special = tuple(parse_label(s) for s in ("0100", "1011", "1100", "0011"))
    special_ok = base.special_cycle() == special
    parts = dict(cycle=cyc_ok, ladder=cert_ok, pins=pins_ok, special=special_ok)
    return all(parts.values()), " ".join(f"{k}={'ok' if v else 'bad'}" for k, v in parts.items())


def criterion_4():
    bad = []
    t0 = time.perf_counter()
    with tempfile.TemporaryDirectory() as tmp:
        for n in (8, 9):
            for n1 in partitions(n):
                out = Path(tmp) / f"aq{n}_{n1}"
                if _silent_cli(["decompose", "--n", n, "--n1", n1, "--out", out]) != 0:
                    bad.append(f"decompose({n},{n1})")
                    continue
                rep = verify_decomposition(read_bundle(out), "sampled", seed=1, pairs=100)
                if not rep.overall:
                    bad.append(f"verify({n},{n1}): {[c.name for c in rep.failures()]}")
                if any(c.name.endswith("[exact]") for c in rep.checks):
                    bad.append(f"verify({n},{n1}) not sampled")
    elapsed = time.perf_counter() - t0
    if elapsed >= 600:
        bad.append(f"took {elapsed:.0f}s")
    return not bad, f"n=8,9 sampled seed=1 pairs=100, {elapsed:.1f}s" + (
        f"; failed {bad}" if bad else "")


def criterion_5():
    rep = Report()
    for n in range(3, 9):
        rep.extend(verify_common_neighbor_bound(n))
    rep.extend(verify_matching_join_property(100, seed=7))
    for n in range(1, 8):
        rep.extend(verify_aq_sanity(n))
    failed = [f"{c.name} expected={c.expected} observed={c.observed}" for c in rep.failures()]
    return rep.overall, f"{len(rep.checks)} checks" + (f"; failed {failed}" if failed else "")


def criterion_6():
    bad = []
    rng = random.Random(20240601)
    for i in range(200):
        order, edges = random_graph(rng, 12)
        got = vertex_connectivity(Graph.from_edges(order, edges))
        want = brute_force_kappa(order, edges)
        if got != want:
            bad.append(f"graph {i}: flow {got} brute {want}")
    certs = []
    for n1 in partitions(4):
        d = decompose(4, n1)
        certs += [(side, c) for side, c in ((d.H, d.cert_h), (d.K, d.cert_k))
                  if not isinstance(c, HamiltonianCycle)]
    checked = 0
    for side, cert in certs:
        for length in range(4, 2 * cert.m + 1):
            want = canonical_cycle(extract_cycle(cert, length))
            if not any(c == want for c in cycles_of_length(side, length)):
                bad.append(f"length {length} cycle not found by oracle")
            checked += 1
    return not bad, f"200 random graphs, {checked} extracted cycles" + (
        f"; failed {bad[:5]}" if bad else "")


def _bundle_bytes(path: Path) -> dict:
    return {name: (path / name).read_bytes() for name in BUNDLE_FILES}


def criterion_7():
    bad = []
    with tempfile.TemporaryDirectory() as tmp:
        for n in DESK_RANGE:
            for n1 in partitions(n):
                runs = []
                for run, hashseed in enumerate(("0", "12345")):
                    out = Path(tmp) / f"aq{n}_{n1}_{run}"
                    env = dict(os.environ, PYTHONHASHSEED=hashseed)
                    proc = subprocess.run(
                        [sys.executable, "-m", "augcube", "decompose", "--n", str(n),
                         "--n1", str(n1), "--out", str(out)],
                        env=env, capture_output=True, check=False)
                    if proc.returncode != 0:
                        bad.append(f"decompose({n},{n1}) exit {proc.returncode}")
                        break
                    runs.append(_bundle_bytes(out))
                if len(runs) == 2 and runs[0] != runs[1]:
                    bad.append(f"({n},{n1})")
    return not bad, "two processes per partition, different hash seeds" + (
        f"; differs {bad}" if bad else "")


CRITERIA = {
    1: ("every desk-scale partition, exact", criterion_1, 300),
    2: ("pancyclicity", criterion_2, None),
    3: ("base-case fidelity", criterion_3, None),
    4: ("scaling smoke test", criterion_4, 600),
    5: ("side facts and AQ sanity", criterion_5, None),
    6: ("oracle agreement", criterion_6, None),
    7: ("determinism", criterion_7, None),
}


def run_criterion(k: int):
    title, fn, budget = CRITERIA[k]
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    if budget is not None and elapsed >= budget:
        ok, detail = False, f"{detail}; over {budget}s budget"
    line = f"criterion {k}: {'pass' if ok else 'fail'} [{title}] {detail} ({elapsed:.1f}s)"
    return ok, line


@pytest.mark.slow
@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line = run_criterion(k)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
