"""Acceptance suite: one criterion per test, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
report lines."""

import time

from graceful import (Graph, SearchBudget, VertexColoring, a_of_n,
                      a_of_n_bruteforce, bounds, complete_bipartite,
                      complete_graph, cubic_graph, distance_two_chromatic_number,
                      distance_two_k_colorable, gnp_graph,
                      graceful_chromatic_number, graceful_k_colorable,
                      graceful_k_colorable_bruteforce, hypercube_graph,
                      is_graceful_coloring, lift_distance_two, petersen_graph,
                      prism_graph)
from graceful.cnf import encode_graceful, internal_sat
from graceful.graph import SplitMix64
from graceful.reductions import (check_construction1_guarantee,
                                 check_nae_reduction, clause_gadget,
                                 smallest_e4_instance, variable_gadget,
                                 verify_gadget)


def report(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def cubic_corpus(sizes, seeds_per_size, base_seed):
    out = []
    s = 0
    while len(out) < seeds_per_size * len(sizes):
        n = sizes[s % len(sizes)]
        try:
            out.append(cubic_graph(n, base_seed + s))
        except RuntimeError:
            pass
        s += 1
    return out


def test_criterion_1_complete_graphs_match_sequence():
    t0 = time.time()
    expected = {1: 1, 2: 2, 3: 4, 4: 5, 5: 9, 6: 11}
    for n in range(1, 7):
        assert a_of_n_bruteforce(n) == expected[n]
        assert a_of_n(n)[0] == expected[n]
        assert graceful_chromatic_number(complete_graph(n)).value == expected[n]
    elapsed = time.time() - t0
    report(1, elapsed < 60, f"chi_g(K_n) = a(n) for n=1..6 in {elapsed:.1f}s")


def test_criterion_2_sandwich_with_certified_lift():
    t0 = time.time()
    violations = 0
    densities = (0.2, 0.5, 0.8)
    count = 0
    for i in range(200):
        n = 3 + i % 6
        g = gnp_graph(n, densities[i % 3], 1000 + i)
        lo = distance_two_chromatic_number(g)
        assert lo.status == "ok"
        hi = a_of_n(lo.value)[0]
        chig = graceful_chromatic_number(g)
        assert chig.status == "ok"
        if not lo.value <= chig.value <= hi:
            violations += 1
        lifted = lift_distance_two(g, lo.coloring)  # verifies gracefulness
        if lifted.k != hi:
            violations += 1
        count += 1
    report(2, violations == 0,
           f"{count} graphs, {violations} sandwich/lift violations "
           f"in {time.time() - t0:.1f}s")


def test_criterion_3_reference_figure_regression(fig1):
    t0 = time.time()
    g, f = fig1
    ok = is_graceful_coloring(g, f)[0]
    ok = ok and graceful_chromatic_number(g).value == 5
    ok = ok and distance_two_chromatic_number(g).value == 5
    elapsed = time.time() - t0
    report(3, ok and elapsed < 1.0,
           f"5-coloring verified, chi_g = chi(G^2) = 5 in {elapsed:.2f}s")


def test_criterion_4_cubic_equivalence():
    t0 = time.time()
    corpus = [complete_graph(4), complete_bipartite(3, 3), hypercube_graph(3),
              petersen_graph(), prism_graph()]
    corpus += cubic_corpus((4, 6, 8, 10), 8, base_seed=5000)
    assert len(corpus) >= 35
    violations = 0
    for g in corpus:
        a = graceful_k_colorable(g, 5)
        b = distance_two_k_colorable(g, 4)
        assert a.status != "unknown" and b.status != "unknown"
        if a.status != b.status:
            violations += 1
    report(4, violations == 0,
           f"{len(corpus)} cubic graphs, graceful-5 iff distance-two-4, "
           f"{violations} violations in {time.time() - t0:.1f}s")


def test_criterion_5_construction1_guarantee():
    t0 = time.time()
    corpus = [complete_graph(4), complete_bipartite(3, 3), hypercube_graph(3),
              prism_graph()]
    corpus += cubic_corpus((6, 8), 3, base_seed=7000)
    bad = 0
    for g in corpus:
        for k in (5, 6, 7):
            res = check_construction1_guarantee(g, k)
            if res.status != "consistent":
                bad += 1
    report(5, bad == 0,
           f"{len(corpus)} cubic graphs x k in 5..7, {bad} inconsistencies "
           f"in {time.time() - t0:.1f}s")


def test_criterion_6_gadget_certification():
    t0 = time.time()
    vrep = verify_gadget(variable_gadget())
    crep = verify_gadget(clause_gadget())
    ok = vrep.certified and crep.certified
    report(6, ok,
           f"variable gadget ({vrep.colorings_enumerated} colorings) and "
           f"clause gadget ({crep.colorings_enumerated} colorings) certified "
           f"in {time.time() - t0:.1f}s")


def test_criterion_7_end_to_end_reduction():
    t0 = time.time()
    res = check_nae_reduction(smallest_e4_instance())
    if res.status == "unknown":
        # tolerated: criterion 6 stands as the required evidence
        print(f"ACCEPTANCE 7: UNKNOWN - budget exhausted after "
              f"{res.details['nodes']} nodes (gadget certification stands)")
        return
    report(7, res.status == "consistent",
           f"3-var/4-clause instance consistent ({res.details['nodes']} nodes) "
           f"in {time.time() - t0:.1f}s")


def test_criterion_8_solver_oracle_equivalence():
    t0 = time.time()
    pairs = 0
    disagreements = 0
    i = 0
    while pairs < 500:
        n = 2 + i % 5  # 2..6
        g = gnp_graph(n, (0.3, 0.6, 0.9)[i % 3], 4000 + i)
        for k in range(1, 6):
            native = graceful_k_colorable(g, k).status
            brute = graceful_k_colorable_bruteforce(g, k).status
            sat = internal_sat(encode_graceful(g, k)).status
            if not (native == brute and (native == "yes") == (sat == "sat")):
                disagreements += 1
            pairs += 1
        i += 1
    report(8, disagreements == 0,
           f"{pairs} (g,k) pairs, {disagreements} disagreements "
           f"in {time.time() - t0:.1f}s")


def test_criterion_9_metamorphic_invariants():
    t0 = time.time()
    rng = SplitMix64(99)
    checks = 0
    violations = 0
    i = 0
    while checks < 1000:
        n = 2 + i % 5
        g = gnp_graph(n, 0.5, 8000 + i)
        res = graceful_chromatic_number(g)
        f, k = res.coloring, res.value
        # reflection
        if not is_graceful_coloring(g, VertexColoring(
                tuple(k + 1 - c for c in f.colors), k))[0]:
            violations += 1
        checks += 1
        # translation
        t = 1 + rng.randint(4)
        if not is_graceful_coloring(g, VertexColoring(
                tuple(c + t for c in f.colors), k + t))[0]:
            violations += 1
        checks += 1
        # subgraph restriction
        edges = g.edges()
        if edges:
            drop = edges[rng.randint(len(edges))]
            sub = Graph.from_edges(g.n, [e for e in edges if e != drop])
            if not is_graceful_coloring(sub, f)[0]:
                violations += 1
        checks += 1
        # monotonicity
        if graceful_k_colorable(g, k + 1).status != "yes":
            violations += 1
        checks += 1
        i += 1
    report(9, violations == 0,
           f"{checks} metamorphic checks, {violations} violations "
           f"in {time.time() - t0:.1f}s")
