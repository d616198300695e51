"""Acceptance criteria 1-8. Each test logs one PASS/FAIL line per criterion
(plus indented detail lines) and fails if any item in it fails.

Tolerances pinned here: interval width 1e-9, float oracle agreement 1e-8,
runtimes 1 s per small group, 30 s for A5, 10 s (clique path) and 300 s
(exact path) for PSL(2,8).
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from commenergy import verify as V
from commenergy.commgraph import clique_decomposition, commuting_graph, components, matrices
from commenergy.energies import graph_energy_report
from commenergy.formulas import PR_SET, PR_SET_VALUES, Surd, value_enclosure
from commenergy.groups import build, center, centralizer_count, commutativity_degree, parse_descriptor
from commenergy.spectra import exact_spectrum, float_eigensolve, max_float_deviation

WIDTH = Fraction(1, 10**9)
FLOAT_TOL = 1e-8
F = Fraction


def _verdict(log, n, title, items):
    ok = all(passed for _, passed in items)
    log(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
    for text, passed in items:
        log(f"    [{'ok' if passed else 'FAIL'}] {text}")
    return ok


def _timed_report(desc, route="auto", tol=WIDTH):
    t = time.perf_counter()
    G = build(parse_descriptor(desc))
    r = graph_energy_report(commuting_graph(G), tol, route)
    return r, time.perf_counter() - t


def _exact(r):
    return tuple(x.value if x.is_exact else None for x in r.triple())


# -- 1 -----------------------------------------------------------------------

GOLDEN = [
    ("suzuki2", (26, F(504, 19), F(484, 19))),
    ("sl23", (30, F(408, 11), F(312, 11))),
    ("dicyclic:m=2", (6, 6, 6)),
    ("dihedral:m=3", (2, F(16, 5), F(16, 5))),
    ("a4", (12, F(140, 11), F(124, 11))),
    *[(V.PLANAR_GROUPS[n], (18, 18, 18)) for n in V.ORDER16_GROUPS],
    ("hanakiV:p=3,n=1", (40, 40, 40)),
]


def test_criterion_1_golden_triples(criterion_log):
    items = []
    for desc, want in GOLDEN:
        r, dt = _timed_report(desc)
        got = _exact(r)
        want = tuple(F(x) for x in want)
        items.append((f"{desc}: computed {tuple(map(str, got))} expected {tuple(map(str, want))} in {dt:.2f}s",
                      got == want and dt < 1.0))

    r, dt = _timed_report("psl2:k=2")
    got = _exact(r)
    for name, g, w in zip(("E", "LE", "LE+"), got, (F(76), F(3924, 59), F(3844, 59))):
        items.append((f"A5 via psl2:k=2 {name}: computed {g} expected {w} ({dt:.2f}s)", g == w and dt < 30))

    k = 3
    printed_expr = 2 ** (3 * k + 1) - 2 ** (2 * k + 1) - 2 ** (k + 2) - 4
    t = time.perf_counter()
    G = build(parse_descriptor("psl2:k=3"))
    graph = commuting_graph(G)
    build_s = time.perf_counter() - t
    t = time.perf_counter()
    fast = graph_energy_report(graph, WIDTH, "clique")
    fast_s = time.perf_counter() - t + build_s
    t = time.perf_counter()
    slow = graph_energy_report(graph, WIDTH, "exact")
    slow_s = time.perf_counter() - t + build_s
    items.append((f"PSL(2,8) E: clique {fast.energy} ({fast_s:.1f}s), exact {slow.energy} ({slow_s:.1f}s), "
                  f"2^10-2^7-2^5-4 = {printed_expr}",
                  fast.energy.value == slow.energy.value == printed_expr and fast_s < 10 and slow_s < 300))
    items.append((f"PSL(2,8) vertices = |G| - |Z| = {G.order} - {len(center(G))} = {graph.vertex_count}",
                  graph.vertex_count == G.order - len(center(G))))
    assert _verdict(criterion_log, 1, "golden exact triples", items)


# -- 2 -----------------------------------------------------------------------

def test_criterion_2_s4_intervals(criterion_log):
    r, _ = _timed_report("s4", "auto", WIDTH)
    printed = (
        Surd(F(17), ((F(4), 5), (F(1), 17))),
        Surd(F(526, 23), ((F(46, 23), 13),)),
        F(756, 23),
    )
    items = []
    for name, got, want in zip(("E", "LE", "LE+"), r.triple(), printed):
        lo, hi = value_enclosure(want, F(1, 10**20))
        inside = got.lo <= lo and hi <= got.hi
        items.append((f"{name}: width {float(got.width):.1e} <= 1e-9, interval [{float(got.lo):.12f}, "
                      f"{float(got.hi):.12f}] contains {want} ~ {float(want):.12f}",
                      got.width <= WIDTH and inside))
    graph = commuting_graph(build(parse_descriptor("s4")))
    A, _, L, Q = matrices(graph)
    dev = max(max_float_deviation(exact_spectrum(M), float_eigensolve(M)) for M in (A, L, Q))
    items.append((f"float oracle deviation {dev:.1e} <= 1e-8", dev <= FLOAT_TOL))
    assert _verdict(criterion_log, 2, "S4 certified enclosures", items)


# -- 3 -----------------------------------------------------------------------

def test_criterion_3_regular_identity(criterion_log):
    items = []
    for p in (2, 3, 5):
        for z in (p, 2 * p, 3 * p):
            r, _ = _timed_report(f"elementary:p={p},z={z}")
            e, le, lq = _exact(r)
            want = 2 * (p * p - 1) * z - 2 * (p + 1)
            G = build(parse_descriptor(f"elementary:p={p},z={z}"))
            items.append((f"p={p} |Z|={len(center(G))}: E=LE=LE+={e}, formula {want}",
                          e == le == lq == want and len(center(G)) == z))
    assert _verdict(criterion_log, 3, "G/Z = Zp x Zp gives E = LE = LE+", items)


# -- 4 and 5 -------------------------------------------------------------------

def suite_groups():
    extra = [d for d, _ in GOLDEN] + ["psl2:k=2", "psl2:k=3", "s4"]
    return list(dict.fromkeys(V.census_groups() + [V.canonical(d) for d in extra]))


def test_criterion_4_oracle_equivalence(criterion_log):
    items = []
    for desc in suite_groups():
        graph = commuting_graph(build(parse_descriptor(desc)))
        dec = clique_decomposition(graph)
        if not dec.present:
            continue
        fast = graph_energy_report(graph, WIDTH, "clique").spectra
        slow = graph_energy_report(graph, WIDTH, "exact").spectra
        same = all(a == b for a, b in zip(fast, slow))
        A, _, L, Q = matrices(graph)
        dev = max(max_float_deviation(S, float_eigensolve(M)) for S, M in zip(slow, (A, L, Q)))
        items.append((f"{desc} ({dec}): closed form == char poly {same}, float dev {dev:.1e}",
                      same and dev <= FLOAT_TOL))
    assert len(items) > 40
    assert _verdict(criterion_log, 4, "clique == exact == float on clique unions", items)


def test_criterion_5_spectral_sanity(criterion_log):
    items = []
    for desc in suite_groups():
        graph = commuting_graph(build(parse_descriptor(desc)))
        A, _, L, Q = matrices(graph)
        n = graph.vertex_count
        bad = []
        for M in (A, L, Q):
            S = exact_spectrum(M)
            tr = int(M.data.trace())
            tr2 = int((M.data.astype(object) @ M.data.astype(object)).trace())
            lo, hi = S.trace_enclosure()
            lo2, hi2 = S.square_sum_enclosure()
            if S.dimension != n:
                bad.append(f"{M.kind} mult sum")
            if not lo <= tr <= hi:
                bad.append(f"{M.kind} trace")
            if not lo2 <= tr2 <= hi2:
                bad.append(f"{M.kind} trace of square")
            if M.kind in ("L", "Q"):
                for v, _ in S.entries:
                    low = v if isinstance(v, int) else v.excluding(Fraction(0)).lo
                    if low < 0:
                        bad.append(f"{M.kind} negative eigenvalue")
            if M.kind == "L" and S.multiplicity(0) != len(components(graph)):
                bad.append("L zero multiplicity != components")
        items.append((f"{desc}: {'all properties hold' if not bad else ', '.join(bad)}", not bad))
    assert _verdict(criterion_log, 5, "spectral sanity on every computed spectrum", items)


# -- 6 and 8 -------------------------------------------------------------------

@pytest.fixture(scope="module")
def verify_all_runs():
    cmd = [sys.executable, "-m", "commenergy", "verify", "--all", "--threads", "8", "--format", "json"]
    outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    return outs


def _mismatch(report, fid, q, group):
    for m in report["errata"]["mismatches"]:
        if m["formula"] == fid and m["quantity"] == q:
            for w in m["witnesses"]:
                if w["group"] == group:
                    return w
    return None


def test_criterion_6_errata_ledger(criterion_log, verify_all_runs):
    rep = json.loads(verify_all_runs[0])
    items = []

    w = _mismatch(rep, "F11", "E", "gl2:p=3,n=1")
    items.append((f"F11 E at GL(2,3): {w and (w['printed'], w['computed'])}",
                  bool(w) and w["printed"] == "21/2" and w["computed"] == {"exact": "66"}))

    w = _mismatch(rep, "F1", "LEplus", "product:inner=suzuki2,k=2")
    ok = bool(w) and F(w["printed"]) < 0 < F(w["computed"]["exact"])
    items.append((f"F1 LE+ at Sz(2) x Z2: {w and (w['printed'], w['computed'])}", ok))

    odd = [m for m in rep["errata"]["mismatches"] if (m["formula"], m["quantity"]) == ("F6", "E")]
    deltas = {x["group"]: x["status"].get("delta") for m in odd for x in m["witnesses"]}
    odd_groups = [f"dihedral:m={m}" for m in (3, 5, 7, 9)]
    items.append((f"F6 E odd-m off by one: {deltas}", all(deltas.get(g) == "1" for g in odd_groups)))

    w = _mismatch(rep, "F19", "LEplus", "a4")
    items.append((f"F19 A4 LE+: {w and (w['printed'], w['computed'])}",
                  bool(w) and w["printed"] == "256/11" and w["computed"] == {"exact": "124/11"}))

    w = _mismatch(rep, "F8", "LEplus", "frobenius:p=2,q=3")
    items.append((f"F8 LE+ at (2,3): {w and (w['printed'], w['computed'])}",
                  bool(w) and w["printed"] == "3" and w["computed"] == {"exact": "16/5"}))

    notes = [x for n in rep["errata"]["spectrumNotes"] if n["formula"] == "F8" for x in n["witnesses"]
             if x["group"] == "frobenius:p=3,q=7"]
    items.append((f"F8 adjacency multiplicities at (3,7): {notes and notes[0]['check']['multiplicitySums']}",
                  bool(notes) and notes[0]["check"]["multiplicitySums"][0] == 21
                  and notes[0]["check"]["vertices"] == 20))

    evidence = [x["evidence"] for m in rep["errata"]["mismatches"] for x in m["witnesses"]]
    items.append((f"{len(evidence)} mismatch witnesses all carry decomposition and route agreement",
                  all("decomposition" in e and "float" in e["routesAgree"] for e in evidence)))
    assert _verdict(criterion_log, 6, "errata ledger from verify --all", items)


def test_criterion_8_determinism(criterion_log, verify_all_runs):
    a, b = verify_all_runs
    in_process = V.verify_all(threads=1).to_json().encode()
    items = [
        (f"two `verify --all --threads 8` runs: {len(a)} bytes, identical {a == b}", a == b),
        (f"single-threaded in-process run identical {in_process == a}", in_process == a),
    ]
    assert _verdict(criterion_log, 8, "byte-identical verify reports", items)


# -- 7 -----------------------------------------------------------------------

def _pair_count(desc):
    G = build(parse_descriptor(desc))
    n = G.order
    pairs = sum(1 for x in range(n) for y in range(n) if G.mul(x, y) == G.mul(y, x))
    return Fraction(pairs, n * n)


def test_criterion_7_hypothesis_checks(criterion_log):
    d8, d6 = build(parse_descriptor("dihedral:m=4")), build(parse_descriptor("dihedral:m=3"))
    f13 = V.verify_group("dihedral:m=4", "F13")
    items = [
        (f"centralizer_count(D8) = {centralizer_count(d8)}", centralizer_count(d8) == 4),
        (f"F13 on D8: {[str(f13.status_of(q)) for q in ('E', 'LE', 'LEplus')]}",
         all(f13.status_of(q).kind == "ExactMatch" for q in ("E", "LE", "LEplus"))),
        (f"centralizer_count(D6) = {centralizer_count(d6)}", centralizer_count(d6) == 5),
        (f"Pr(D8) = {commutativity_degree(d8)}", commutativity_degree(d8) == F(5, 8) == _pair_count("dihedral:m=4")),
        (f"Pr(D6) = {commutativity_degree(d6)}", commutativity_degree(d6) == F(1, 2) == _pair_count("dihedral:m=3")),
    ]
    z7 = build(parse_descriptor("frobenius:p=3,q=7"))
    pr = commutativity_degree(z7)
    items.append((f"Pr(Z7 x| Z3) = {pr} by table, {_pair_count('frobenius:p=3,q=7')} by pair count; "
                  f"in F18 set: {pr in PR_SET}", pr == _pair_count("frobenius:p=3,q=7")))
    try:
        V.verify_group("frobenius:p=3,q=7", "F18")
        skipped = False
    except V.InapplicablePairing:
        skipped = True
    items.append(("F18 pairing with Z7 x| Z3 refused because its Pr is outside the hypothesis set",
                  skipped == (pr not in PR_SET)))
    for desc in ("dihedral:m=3", "dihedral:m=5", "hanakiV:p=3,n=1"):
        rec = V.verify_group(desc, "F18")
        comp = dict(zip(("E", "LE", "LEplus"), rec.computed.triple()))
        member = {q: comp[q].value in PR_SET_VALUES[q] for q in comp}
        status = {q: rec.status_of(q).is_match for q in comp}
        items.append((f"F18 on {desc} (Pr {commutativity_degree(build(parse_descriptor(desc)))}): "
                      f"membership {member}", member == status))
    assert _verdict(criterion_log, 7, "centralizer counts, Pr(G) and F18 membership", items)
