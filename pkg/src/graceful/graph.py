"""Simple undirected graphs: representation, graph6/edge-list I/O, structural
queries and generators.

Vertices are always the dense integers 0..n-1.  Graph objects are immutable
after construction, so they can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph6 / edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with adjacency sets."""

    n: int
    adjacency: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in adj))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edge list, each edge (u,v) with u < v, sorted."""
        return [(u, v) for u in range(self.n)
                for v in sorted(self.adjacency[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)

def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 line into a Graph.

    Errors report the byte offset of the offending character.
    """
    s = text.strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    first = ord(s[0])
    if first == 126:
        raise GraphFormatError(
            "long-form graph6 header at byte 0: only n <= 62 supported")
    if not (63 <= first <= 125):
        raise GraphFormatError(f"out-of-range byte {first} at offset 0")
    n = first - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise GraphFormatError(
            f"truncated bit vector: need {need} bytes after header, got {len(body)}")
    if len(body) > need:
        raise GraphFormatError(
            f"trailing data at offset {1 + need}: expected {need} body bytes")
    bits: list[int] = []
    for off, ch in enumerate(body):
        b = ord(ch)
        if not (63 <= b <= 126):
            raise GraphFormatError(f"out-of-range byte {b} at offset {off + 1}")
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in final byte")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a Graph as a short-form graph6 line (requires n <= 62)."""
    if g.n > 62:
        raise ValueError(f"n={g.n} exceeds short-form graph6 range (n <= 62)")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Edge-list format: first line "n m", then m lines "u v".

def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"bad header {lines[0]!r}: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphFormatError(
            f"edge count mismatch: header says {m}, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structural queries

def square(g: Graph) -> Graph:
    """G^2: same vertices, edges between all pairs at distance 1 or 2."""
    edges = set(g.edges())
    for v in range(g.n):
        nbrs = sorted(g.adjacency[v])
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                edges.add((nbrs[i], nbrs[j]))
    return Graph.from_edges(g.n, sorted(edges))


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy by repeated minimum-degree peeling.

    Returns (d, order) where order is the elimination order used.
    """
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order = []
    d = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        removed[v] = True
        order.append(v)
        for u in g.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
    return d, order


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """BFS 2-coloring; on failure the second item is an odd-cycle certificate."""
    side = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop(0)
            for u in g.adjacency[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    queue.append(u)
                elif side[u] == side[v]:
                    # walk both vertices up to a common ancestor
                    pv, pu = v, u
                    anc_v = []
                    while pv != -1:
                        anc_v.append(pv)
                        pv = parent[pv]
                    seen = set(anc_v)
                    path_u = []
                    while pu not in seen:
                        path_u.append(pu)
                        pu = parent[pu]
                    cycle = anc_v[:anc_v.index(pu) + 1] + list(reversed(path_u))
                    return False, cycle
    return True, None


@dataclass(frozen=True)
class StructuralReport:
    max_degree: int
    is_regular: bool
    is_bipartite: bool
    degeneracy: int
    odd_cycle: tuple[int, ...] | None = None


def structural_report(g: Graph) -> StructuralReport:
    degs = [g.degree(v) for v in range(g.n)]
    maxd = max(degs, default=0)
    regular = len(set(degs)) <= 1
    bip, cert = is_bipartite(g)
    d, _ = degeneracy(g)
    return StructuralReport(maxd, regular, bip, d,
                            tuple(cert) if cert else None)


# ---------------------------------------------------------------------------
# Deterministic PRNG for generators.
#
# splitmix64: a fixed, portable 64-bit mixer so seeded corpora reproduce
# bit-for-bit across machines and languages.

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, n: int) -> int:
        """Uniform-ish integer in [0, n); modulo bias is negligible at desk scale."""
        return self.next_u64() % n

    def random(self) -> float:
        return self.next_u64() / 2.0 ** 64

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.randint(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


# ---------------------------------------------------------------------------
# Generators

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n}: center 0 joined to n leaves."""
    if n < 0:
        raise ValueError("star needs n >= 0 leaves")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    return Graph.from_edges(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def prism_graph() -> Graph:
    """Triangular prism: two triangles joined by a matching."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0,1]")
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def cubic_graph(n: int, seed: int, max_retries: int = 1000) -> Graph:
    """Random 3-regular graph via the pairing model, rejecting loops and
    multi-edges.  Deterministic in (n, seed)."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need even n >= 4")
    rng = SplitMix64(seed)
    for attempt in range(max_retries):
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, sorted(edges))
    raise RuntimeError(f"cubic generation failed after {max_retries} retries")


def generate(kind: str, *args) -> Graph:
    """Named generator dispatch used by the CLI: e.g. generate('cycle', 5)."""
    table = {
        "complete": lambda n: complete_graph(int(n)),
        "path": lambda n: path_graph(int(n)),
        "cycle": lambda n: cycle_graph(int(n)),
        "star": lambda n: star_graph(int(n)),
        "gnp": lambda n, p, seed: gnp_graph(int(n), float(p), int(seed)),
        "cubic": lambda n, seed: cubic_graph(int(n), int(seed)),
    }
    if kind not in table:
        raise ValueError(f"unknown graph kind {kind!r}")
    return table[kind](*args)
