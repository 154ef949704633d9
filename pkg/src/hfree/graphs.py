"""Small dense graphs with exact induced-subgraph search.

Vertices are the integers 0..vertex_count-1 and edges are unordered pairs
stored min-first. All algorithms here are exact and meant for desk-scale
inputs: connectivity tests brute-force over removal sets, and the induced
copy search is a plain backtracker with degree and adjacency pruning (no
symmetry breaking; callers deduplicate by vertex set where needed).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalize an unordered vertex pair to (min, max). Rejects loops."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    edges is a frozenset of (u, v) tuples with u < v; endpoints must lie in
    range. Parallel edges are impossible by construction, self-loops are
    rejected.
    """

    __slots__ = ("vertex_count", "edges", "_adj", "_hash")

    def __init__(self, vertex_count: int, edges=()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = frozenset(edge_key(u, v) for u, v in edges)
        adj = [set() for _ in range(vertex_count)]
        for u, v in normalized:
            if not (0 <= u and v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            adj[u].add(v)
            adj[v].add(u)
        self.vertex_count = vertex_count
        self.edges = normalized
        self._adj = tuple(frozenset(s) for s in adj)
        self._hash = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def adjacency(self) -> list:
        """Mutable adjacency copy (list of sets), for search loops."""
        return [set(s) for s in self._adj]

    def non_edges(self) -> list:
        """All absent pairs, in lexicographic order."""
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in range(u + 1, self.vertex_count)
            if (u, v) not in self.edges
        ]

    def degree_sequence(self) -> tuple:
        return tuple(sorted(len(s) for s in self._adj))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertex_count, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph({self.vertex_count}, {sorted(self.edges)})"


@dataclass(frozen=True)
class VertexCorrespondence:
    """Injective map from pattern vertices to host vertices.

    mapping[p] is the host vertex carrying pattern vertex p; the domain is
    exactly 0..pattern.vertex_count-1 and the image has no repeats.
    """

    mapping: tuple

    def __getitem__(self, pattern_vertex: int) -> int:
        return self.mapping[pattern_vertex]

    def image(self) -> frozenset:
        return frozenset(self.mapping)

    def check(self, host: Graph, pattern: Graph) -> None:
        """Assert the map is a witness: edges and non-edges both preserved."""
        assert len(self.mapping) == pattern.vertex_count
        assert len(set(self.mapping)) == len(self.mapping), "not injective"
        for p in range(pattern.vertex_count):
            for q in range(p + 1, pattern.vertex_count):
                want = (p, q) in pattern.edges
                got = host.has_edge(self.mapping[p], self.mapping[q])
                assert want == got, f"pair ({p},{q}) not preserved"


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly g's non-edges."""
    n = g.vertex_count
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in g.edges]
    return Graph(n, edges)


def _connected_without(g: Graph, removed) -> bool:
    """BFS connectivity of g minus a vertex set; empty remainder counts as connected."""
    removed = set(removed)
    remaining = [v for v in range(g.vertex_count) if v not in removed]
    if not remaining:
        return True
    seen = {remaining[0]}
    frontier = [remaining[0]]
    while frontier:
        v = frontier.pop()
        for w in g.neighbors(v):
            if w not in removed and w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(remaining)


def is_connected(g: Graph) -> bool:
    """Connectivity; the 1-vertex and 0-vertex graphs count as connected."""
    return _connected_without(g, ())


def is_3_connected(g: Graph) -> bool:
    """True iff g has >= 3 vertices and stays connected after removing any
    set of at most 2 vertices (checked by brute force over removal sets)."""
    if g.vertex_count < 3:
        return False
    if not is_connected(g):
        return False
    verts = range(g.vertex_count)
    for v in verts:
        if not _connected_without(g, (v,)):
            return False
    for pair in combinations(verts, 2):
        if not _connected_without(g, pair):
            return False
    return True


class MatchPlan:
    """Precomputed vertex ordering and consistency lists for one pattern.

    order starts at a maximum-degree vertex (or the given seed vertices) and
    then always prefers vertices with the most already-placed neighbors, so
    connected patterns extend through adjacency (candidates come from one
    placed neighbor).
    """

    __slots__ = ("pattern", "order", "anchors", "earlier", "degrees", "pattern_edges", "pattern_non_edges")

    def __init__(self, pattern: Graph, seed=()):
        n = pattern.vertex_count
        order = list(seed)
        placed = set(seed)
        while len(order) < n:
            best = None
            best_key = None
            for v in range(n):
                if v in placed:
                    continue
                key = (len(pattern.neighbors(v) & placed), pattern.degree(v), -v)
                if best_key is None or key > best_key:
                    best, best_key = v, key
            order.append(best)
            placed.add(best)
        pos = {v: i for i, v in enumerate(order)}
        anchors = [None] * n
        earlier = [[] for _ in range(n)]
        for i, v in enumerate(order):
            for j in range(i):
                w = order[j]
                adjacent = w in pattern.neighbors(v)
                earlier[i].append((j, adjacent))
                if adjacent and anchors[i] is None:
                    anchors[i] = j
        self.pattern = pattern
        self.order = order
        self.anchors = anchors
        self.earlier = earlier
        self.degrees = [pattern.degree(v) for v in order]
        self.pattern_edges = tuple(sorted(pattern.edges))
        self.pattern_non_edges = tuple(pattern.non_edges())
        del pos


@lru_cache(maxsize=256)
def match_plan(pattern: Graph) -> MatchPlan:
    return MatchPlan(pattern)


@lru_cache(maxsize=2048)
def match_plan_seeded(pattern: Graph, seed: tuple) -> MatchPlan:
    """Plan whose vertex order starts with the seed vertices, so searches
    that pin those vertices never scan global candidates."""
    return MatchPlan(pattern, seed)


def find_embedding(
    host_adj, host_n: int, plan: MatchPlan, blocked=None, blocked_mode="edges", step_limit=None, fixed=None
):
    """Find one induced embedding of plan.pattern into the host adjacency.

    host_adj is indexable by vertex and yields neighbor sets. When blocked is
    given, embeddings are rejected if a pattern edge lands on a blocked host
    pair (blocked_mode "edges") or a pattern non-edge lands on a blocked host
    pair (blocked_mode "nonedges"); the packing bound uses this to collect
    element-disjoint copies. fixed pins pattern vertices to host vertices
    (use a plan seeded with them, or the search degenerates). Returns the
    host image in plan order, or None.

    step_limit truncates the backtracking after that many candidate probes.
    A truncated search can miss copies, so only callers that never read None
    as a certificate of absence may pass it.
    """
    n = len(plan.order)
    if n > host_n:
        return None
    image = [0] * n
    used = [False] * (host_n if host_n else 1)
    block_edges = blocked is not None and blocked_mode == "edges"
    block_non = blocked is not None and blocked_mode == "nonedges"
    steps = 0

    def extend(i: int):
        nonlocal steps
        if i == n:
            return True
        vertex = plan.order[i]
        anchor = plan.anchors[i]
        if fixed is not None and vertex in fixed:
            candidates = (fixed[vertex],)
        elif anchor is None:
            # Sparse vertices first: pendant-style copies sit on low-degree
            # vertices and turn up long before dense hubs are explored.
            candidates = sorted(range(host_n), key=lambda h: len(host_adj[h]))
        else:
            candidates = host_adj[image[anchor]]
        needed = plan.degrees[i]
        checks = plan.earlier[i]
        for h in candidates:
            if step_limit is not None:
                steps += 1
                if steps > step_limit:
                    return False
            if used[h] or len(host_adj[h]) < needed:
                continue
            ok = True
            for j, adjacent in checks:
                other = image[j]
                if adjacent:
                    if other not in host_adj[h]:
                        ok = False
                        break
                    if block_edges and (edge_key(h, other) in blocked):
                        ok = False
                        break
                else:
                    if other in host_adj[h]:
                        ok = False
                        break
                    if block_non and (edge_key(h, other) in blocked):
                        ok = False
                        break
            if not ok:
                continue
            image[i] = h
            used[h] = True
            if extend(i + 1):
                return True
            used[h] = False
        return False

    if extend(0):
        return list(image)
    return None


def find_induced_copy(host: Graph, pattern: Graph):
    """One induced copy of pattern in host, or None.

    The witness preserves adjacency and non-adjacency (induced, not just
    subgraph). Empty patterns embed trivially.
    """
    if pattern.vertex_count == 0:
        return VertexCorrespondence(())
    plan = match_plan(pattern)
    image = find_embedding(host._adj, host.vertex_count, plan)
    if image is None:
        return None
    mapping = [0] * pattern.vertex_count
    for i, v in enumerate(plan.order):
        mapping[v] = image[i]
    return VertexCorrespondence(tuple(mapping))


def is_h_free(host: Graph, pattern: Graph) -> bool:
    """True iff host contains no induced copy of pattern."""
    return find_induced_copy(host, pattern) is None


def induced_subgraph(g: Graph, verts) -> Graph:
    """Subgraph induced by verts, relabelled 0..len(verts)-1 in sorted order."""
    verts = sorted(verts)
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in combinations(verts, 2)
        if (min(u, v), max(u, v)) in g.edges
    ]
    return Graph(len(verts), edges)


def enumerate_induced_copies(host: Graph, pattern: Graph):
    """Yield each vertex set spanning an induced copy of pattern, once.

    Deduplicates by vertex set (a set may admit several isomorphisms) and
    yields sorted tuples in lexicographic order. Meant for small hosts; the
    copy count can be binomial in the host size.
    """
    p = pattern.vertex_count
    want_edges = pattern.edge_count
    want_degrees = pattern.degree_sequence()
    for verts in combinations(range(host.vertex_count), p):
        sub = induced_subgraph(host, verts)
        if sub.edge_count != want_edges or sub.degree_sequence() != want_degrees:
            continue
        if find_induced_copy(sub, pattern) is not None:
            yield verts
