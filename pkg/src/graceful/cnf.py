"""CNF encoding of graceful k-colorability, DIMACS emission, solver-output
parsing, and a small complete DPLL solver for cross-checks.

Variable x_{v,c} (id v*k + c) means vertex v gets color c.  Clause families:

  a: at-least-one color per vertex                          n clauses
  b: at-most-one color per vertex (pairwise)                n * k(k-1)/2
  c: adjacent vertices differ, per color                    m * k
  d2: distance-two pairs differ, per color                  (m(G^2) - m(G)) * k
  d3: forbidden equal-difference triples on paths u-v-w     paths * T(k)

where paths = sum_v C(d(v),2) and T(k) counts ordered same-parity color
pairs (cu, cw), cu != cw; the middle color is then forced to (cu+cw)/2.
The cu == cw half of the path constraint is exactly family d2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .coloring import VertexColoring, is_graceful_coloring
from .graph import Graph, square
from .solve import SearchBudget, _Exhausted


@dataclass
class CnfFormula:
    num_vars: int
    clauses: list[tuple[int, ...]]
    varmap: dict[tuple[int, int], int] = field(default_factory=dict)
    rev: dict[int, tuple[int, int]] = field(default_factory=dict)
    graph: Graph | None = None
    k: int = 0
    family_counts: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for cl in self.clauses:
            if any(lit == 0 for lit in cl):
                raise ValueError("zero literal in clause")
            if any(abs(lit) > self.num_vars for lit in cl):
                raise ValueError("literal exceeds num_vars")
            if any(-lit in cl for lit in cl):
                raise ValueError("clause contains a literal and its negation")


def predicted_clause_counts(g: Graph, k: int) -> dict[str, int]:
    """Closed-form clause counts per family; asserted against the encoder."""
    n, m = g.n, g.m
    paths = sum(g.degree(v) * (g.degree(v) - 1) // 2 for v in range(n))
    odd = (k + 1) // 2
    even = k // 2
    t = odd * (odd - 1) + even * (even - 1)
    return {
        "a": n,
        "b": n * k * (k - 1) // 2,
        "c": m * k,
        "d2": (square(g).m - m) * k,
        "d3": paths * t,
    }


def encode_graceful(g: Graph, k: int) -> CnfFormula:
    """CNF satisfiable iff g has a graceful k-coloring."""
    if k < 1:
        raise ValueError("k must be >= 1")
    varmap = {(v, c): v * k + c for v in range(g.n) for c in range(1, k + 1)}
    rev = {i: vc for vc, i in varmap.items()}
    clauses: list[tuple[int, ...]] = []
    counts = {"a": 0, "b": 0, "c": 0, "d2": 0, "d3": 0}

    for v in range(g.n):
        clauses.append(tuple(varmap[v, c] for c in range(1, k + 1)))
        counts["a"] += 1
    for v in range(g.n):
        for c1 in range(1, k + 1):
            for c2 in range(c1 + 1, k + 1):
                clauses.append((-varmap[v, c1], -varmap[v, c2]))
                counts["b"] += 1
    for u, v in g.edges():
        for c in range(1, k + 1):
            clauses.append((-varmap[u, c], -varmap[v, c]))
            counts["c"] += 1
    sq = square(g)
    originals = set(g.edges())
    for u, v in sq.edges():
        if (u, v) in originals:
            continue
        for c in range(1, k + 1):
            clauses.append((-varmap[u, c], -varmap[v, c]))
            counts["d2"] += 1
    # equal-difference triples on paths u - mid - w with distinct endpoint colors
    for mid in range(g.n):
        nbrs = sorted(g.adjacency[mid])
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                u, w = nbrs[i], nbrs[j]
                for cu in range(1, k + 1):
                    for cw in range(1, k + 1):
                        if cu == cw or (cu + cw) % 2:
                            continue
                        cv = (cu + cw) // 2
                        clauses.append((-varmap[u, cu], -varmap[mid, cv],
                                        -varmap[w, cw]))
                        counts["d3"] += 1

    formula = CnfFormula(g.n * k, clauses, varmap, rev, g, k, counts)
    if counts != predicted_clause_counts(g, k):
        raise AssertionError(
            f"clause-count mismatch: {counts} vs {predicted_clause_counts(g, k)}")
    return formula


def decode_model(formula: CnfFormula, model: Sequence[int]) -> VertexColoring:
    """Map a satisfying model back to a coloring; verified before return."""
    if formula.graph is None:
        raise ValueError("formula carries no graph to decode against")
    truth = {}
    for lit in model:
        truth[abs(lit)] = lit > 0
    chosen: dict[int, int] = {}
    for (v, c), var in formula.varmap.items():
        if truth.get(var, False):
            if v in chosen:
                raise ValueError(f"vertex {v} assigned colors {chosen[v]} and {c}")
            chosen[v] = c
    g = formula.graph
    missing = [v for v in range(g.n) if v not in chosen]
    if missing:
        raise ValueError(f"no color for vertices {missing}")
    f = VertexColoring(tuple(chosen[v] for v in range(g.n)), formula.k)
    ok, viol = is_graceful_coloring(g, f)
    if not ok:
        raise ValueError(f"decoded coloring fails verification ({viol}): encoder defect")
    return f


# ---------------------------------------------------------------------------
# DIMACS

def write_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.num_vars} {len(formula.clauses)}"]
    for cl in formula.clauses:
        lines.append(" ".join(str(lit) for lit in cl) + " 0")
    return "\n".join(lines) + "\n"


def parse_solver_output(text: str):
    """Parse SAT-competition style output: 's ...' verdict plus 'v' lines.

    Returns ('sat', model) or ('unsat', None)."""
    verdict = None
    model: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("s "):
            word = line[2:].strip().upper()
            if word == "SATISFIABLE":
                verdict = "sat"
            elif word == "UNSATISFIABLE":
                verdict = "unsat"
            else:
                raise ValueError(f"line {lineno}: unknown verdict {word!r}")
        elif line.startswith("v "):
            try:
                lits = [int(tok) for tok in line[2:].split()]
            except ValueError:
                raise ValueError(f"line {lineno}: bad literal in model line") from None
            model.extend(lit for lit in lits if lit != 0)
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if verdict is None:
        raise ValueError("no 's' verdict line found")
    return (verdict, model if verdict == "sat" else None)


# ---------------------------------------------------------------------------
# Internal DPLL

@dataclass(frozen=True)
class SatResult:
    status: str  # 'sat', 'unsat', 'unknown'
    model: tuple[int, ...] | None
    nodes: int


def internal_sat(formula: CnfFormula,
                 budget: SearchBudget = SearchBudget()) -> SatResult:
    """Complete DPLL with unit propagation and pure-literal elimination."""
    nodes = 0

    def simplify(clauses, assignment, lit):
        out = []
        for cl in clauses:
            if lit in cl:
                continue
            if -lit in cl:
                cl = tuple(x for x in cl if x != -lit)
                if not cl:
                    return None
            out.append(cl)
        assignment[abs(lit)] = lit > 0
        return out

    def dpll(clauses, assignment):
        nonlocal nodes
        while True:
            unit = next((cl[0] for cl in clauses if len(cl) == 1), None)
            if unit is not None:
                clauses = simplify(clauses, assignment, unit)
                if clauses is None:
                    return None
                continue
            lits = {lit for cl in clauses for lit in cl}
            pure = next((lit for lit in lits if -lit not in lits), None)
            if pure is not None:
                clauses = simplify(clauses, assignment, pure)
                if clauses is None:
                    return None
                continue
            break
        if not clauses:
            return assignment
        var = min(abs(lit) for cl in clauses for lit in cl)
        for lit in (var, -var):
            nodes += 1
            if nodes > budget.max_nodes:
                raise _Exhausted
            branch = dict(assignment)
            reduced = simplify(clauses, branch, lit)
            if reduced is not None:
                got = dpll(reduced, branch)
                if got is not None:
                    return got
        return None

    try:
        got = dpll(list(formula.clauses), {})
    except _Exhausted:
        return SatResult("unknown", None, nodes)
    if got is None:
        return SatResult("unsat", None, nodes)
    model = tuple(v if got.get(v, False) else -v
                  for v in range(1, formula.num_vars + 1))
    return SatResult("sat", model, nodes)
