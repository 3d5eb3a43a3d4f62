"""Finite simple graphs with stable labels, family generators, and the
structural queries (bipartition, induced-subgraph search, isomorphism)
that the classifiers and the verification suite rely on.

The edge set is the single source of truth; vertex order is kept only so
that serialization and bipartition output stay deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    pass


def _label_key(label):
    # Stable sort key that tolerates mixed int/str labels.
    return (label.__class__.__name__, label)


def _norm_edge(a, b):
    return (a, b) if _label_key(a) <= _label_key(b) else (b, a)


def grid_label(i: int, j: int) -> str:
    """Composite label for grid vertices, column i and row j."""
    return f"v_{i},{j}"


class Graph:
    """Finite simple graph: no loops, no parallel edges, hashable labels."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices: Iterable, edges: Iterable = ()):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise GraphError("duplicate vertex labels")
        adj = {v: set() for v in self.vertices}
        es = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at {a!r}")
            if a not in vset or b not in vset:
                raise GraphError(f"edge endpoint {a!r}/{b!r} not a vertex")
            e = _norm_edge(a, b)
            if e not in es:
                es.add(e)
                adj[a].add(b)
                adj[b].add(a)
        self.edges = frozenset(es)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, a, b) -> bool:
        return _norm_edge(a, b) in self.edges

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple:
        return tuple(sorted(len(nb) for nb in self._adj.values()))

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=_label_key)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: (_label_key(e[0]), _label_key(e[1])))

    def induced_subgraph(self, keep: Iterable) -> "Graph":
        keep_set = set(keep)
        missing = keep_set - set(self.vertices)
        if missing:
            raise GraphError(f"unknown vertices {sorted(missing, key=_label_key)!r}")
        verts = tuple(v for v in self.vertices if v in keep_set)
        edges = [e for e in self.edges if e[0] in keep_set and e[1] in keep_set]
        return Graph(verts, edges)

    def relabeled(self, mapping: Mapping) -> "Graph":
        """Rename vertices through a label bijection."""
        verts = tuple(mapping[v] for v in self.vertices)
        edges = [(mapping[a], mapping[b]) for a, b in self.edges]
        return Graph(verts, edges)

    def union(self, other: "Graph") -> "Graph":
        verts = list(self.vertices)
        seen = set(verts)
        for v in other.vertices:
            if v not in seen:
                verts.append(v)
                seen.add(v)
        return Graph(verts, list(self.edges) + list(other.edges))

    def complement(self) -> "Graph":
        edges = [
            (a, b)
            for a, b in combinations(self.vertices, 2)
            if not self.has_edge(a, b)
        ]
        return Graph(self.vertices, edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count()})"


# ---------------------------------------------------------------------------
# Family generators
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    verts = [f"v{i}" for i in range(1, n + 1)]
    return Graph(verts, [(f"v{i}", f"v{i+1}") for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"v{i}", f"v{i+1}") for i in range(1, n)] + [(f"v{n}", "v1")]
    return Graph(verts, edges)


def complete_graph(n: int) -> Graph:
    verts = [f"v{i}" for i in range(1, n + 1)]
    return Graph(verts, combinations(verts, 2))


def empty_graph(n: int) -> Graph:
    return Graph([f"v{i}" for i in range(1, n + 1)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """K_{p,q} with parts labeled g1..gp (green) and r1..rq (red)."""
    if p < 1 or q < 1:
        raise GraphError("complete bipartite needs p, q >= 1")
    greens = [f"g{i}" for i in range(1, p + 1)]
    reds = [f"r{j}" for j in range(1, q + 1)]
    return Graph(greens + reds, [(g, r) for g in greens for r in reds])


def validate_parent_array(parents: Sequence) -> list:
    """Normalize a rooted-tree parent array (1-based, root v1 has parent 0/None)."""
    n = len(parents)
    if n < 1:
        raise GraphError("empty parent array")
    norm = []
    for k, p in enumerate(parents, start=1):
        if k == 1:
            if p not in (0, None):
                raise GraphError("root v1 must have parent 0 or None")
            norm.append(0)
            continue
        if not isinstance(p, int) or not (1 <= p <= n):
            raise GraphError(f"parent of v{k} out of range: {p!r}")
        norm.append(p)
    # Every vertex must reach the root without revisiting anything.
    for k in range(2, n + 1):
        seen = set()
        cur = k
        while cur != 1:
            if cur in seen:
                raise GraphError(f"cycle in parent array through v{cur}")
            seen.add(cur)
            cur = norm[cur - 1]
            if cur == 0:
                raise GraphError("non-root vertex with parent 0")
    return norm


def tree_graph(parents: Sequence) -> Graph:
    """Tree from a parent array; vertex k is labeled vk, root is v1."""
    norm = validate_parent_array(parents)
    n = len(norm)
    verts = [f"v{k}" for k in range(1, n + 1)]
    edges = [(f"v{k}", f"v{norm[k-1]}") for k in range(2, n + 1)]
    return Graph(verts, edges)


def normalize_creation_sequence(seq) -> str:
    """Creation sequence as a string over 'I' (isolated) / 'U' (universal)."""
    if isinstance(seq, str):
        s = seq.upper()
    else:
        s = "".join(str(step).upper()[0] for step in seq)
    if not s or any(c not in "IU" for c in s):
        raise GraphError(f"creation sequence must be nonempty over I/U, got {seq!r}")
    return s


def threshold_graph(seq) -> Graph:
    """Threshold graph built by adding isolated ('I') or universal ('U') vertices."""
    s = normalize_creation_sequence(seq)
    verts = [f"v{k}" for k in range(1, len(s) + 1)]
    edges = []
    for k, step in enumerate(s, start=1):
        if step == "U":
            edges.extend((f"v{i}", f"v{k}") for i in range(1, k))
    return Graph(verts, edges)


def rect_grid_graph(m: int, n: int) -> Graph:
    """m columns by n rows, edges between horizontal and vertical neighbors."""
    if m < 1 or n < 1:
        raise GraphError("rect grid needs m, n >= 1")
    verts = [grid_label(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    edges = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if i < m:
                edges.append((grid_label(i, j), grid_label(i + 1, j)))
            if j < n:
                edges.append((grid_label(i, j), grid_label(i, j + 1)))
    return Graph(verts, edges)


def tri_grid_graph(rows: int, cols: int) -> Graph:
    """Triangular-lattice patch: row paths plus the two upward diagonals
    (i,j)-(i,j+1) and (i,j)-(i-1,j+1)."""
    if rows < 1 or cols < 2:
        raise GraphError("tri grid needs rows >= 1, cols >= 2")
    verts = [grid_label(i, j) for j in range(1, rows + 1) for i in range(1, cols + 1)]
    edges = []
    for j in range(1, rows + 1):
        for i in range(1, cols + 1):
            if i < cols:
                edges.append((grid_label(i, j), grid_label(i + 1, j)))
            if j < rows:
                edges.append((grid_label(i, j), grid_label(i, j + 1)))
                if i > 1:
                    edges.append((grid_label(i, j), grid_label(i - 1, j + 1)))
    return Graph(verts, edges)


def hex_grid_removed(i: int, j: int) -> bool:
    """Vertices deleted from the triangular patch to leave the hex lattice."""
    return (i - j) % 3 == 0


def hex_grid_graph(rows: int, cols: int) -> Graph:
    if rows < 3 or cols < 3:
        raise GraphError("hex grid patch needs rows, cols >= 3 to hold a hexagon")
    tri = tri_grid_graph(rows, cols)
    keep = [
        grid_label(i, j)
        for j in range(1, rows + 1)
        for i in range(1, cols + 1)
        if not hex_grid_removed(i, j)
    ]
    return tri.induced_subgraph(keep)


def cyclic_distance(i: int, j: int, n: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def power_cycle_graph(n: int, a: int) -> Graph:
    """C_n^a: v_i ~ v_j iff their cyclic index distance is at most a."""
    if n < 3 or a < 1:
        raise GraphError("power of cycle needs n >= 3, a >= 1")
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = [
        (f"v{i}", f"v{j}")
        for i, j in combinations(range(1, n + 1), 2)
        if cyclic_distance(i, j, n) <= a
    ]
    return Graph(verts, edges)


def complement_power_cycle_graph(n: int, a: int) -> Graph:
    """D_n^a: v_i ~ v_j iff their cyclic index distance exceeds a."""
    if n < 3 or a < 1:
        raise GraphError("complement power of cycle needs n >= 3, a >= 1")
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = [
        (f"v{i}", f"v{j}")
        for i, j in combinations(range(1, n + 1), 2)
        if cyclic_distance(i, j, n) > a
    ]
    return Graph(verts, edges)


def extremal_bipartite_graph(n: int) -> Graph:
    """Edge-maximal bipartite target: 4 reds, 3 full-degree greens, and
    n-7 corner squares each seeing r1 and r3; 2n-2 edges total."""
    if n < 7:
        raise GraphError("extremal bipartite family needs n >= 7")
    reds = [f"r{j}" for j in range(1, 5)]
    greens = [f"g{i}" for i in range(1, 4)]
    smalls = [f"s{t}" for t in range(1, n - 6)]
    edges = [(g, r) for g in greens for r in reds]
    edges += [(s, "r1") for s in smalls] + [(s, "r3") for s in smalls]
    return Graph(reds + greens + smalls, edges)


def extremal_bipartite_torus_graph(n: int) -> Graph:
    """Torus edge-maximal bipartite target: 4 reds, 3 big greens plus one
    wrapping green all of degree 4, n-8 diagonal squares of degree 2; 2n edges."""
    if n < 8:
        raise GraphError("extremal bipartite torus family needs n >= 8")
    reds = [f"r{j}" for j in range(1, 5)]
    bigs = [f"b{i}" for i in range(1, 4)]
    smalls = [f"s{t}" for t in range(1, n - 7)]
    edges = [(b, r) for b in bigs for r in reds]
    edges += [("w", r) for r in reds]
    edges += [(s, "r1") for s in smalls] + [(s, "r3") for s in smalls]
    return Graph(reds + bigs + ["w"] + smalls, edges)


@dataclass(frozen=True)
class GraphFamilySpec:
    """A named graph family plus its parameters, e.g. ('power-cycle', (7, 2))."""

    family: str
    args: tuple

    def build(self) -> Graph:
        return expected_graph(self)


_FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": empty_graph,
    "tree": tree_graph,
    "threshold": threshold_graph,
    "complete-bipartite": complete_bipartite_graph,
    "rect-grid": rect_grid_graph,
    "tri-grid": tri_grid_graph,
    "hex-grid": hex_grid_graph,
    "power-cycle": power_cycle_graph,
    "complement-power-cycle": complement_power_cycle_graph,
    "extremal-bipartite": extremal_bipartite_graph,
    "extremal-bipartite-torus": extremal_bipartite_torus_graph,
}


def expected_graph(spec: GraphFamilySpec) -> Graph:
    """Build the labeled graph a constructor of the same family must realize."""
    try:
        fn = _FAMILIES[spec.family]
    except KeyError:
        raise GraphError(f"unknown graph family {spec.family!r}") from None
    return fn(*spec.args)


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

def bipartition(g: Graph):
    """2-color g, or return None on an odd cycle.

    Deterministic: components are rooted at their lowest label, and the
    root always lands in the first part.
    """
    color = {}
    for root in g.sorted_vertices():
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in sorted(g.neighbors(v), key=_label_key):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    part_a = tuple(v for v in g.sorted_vertices() if color[v] == 0)
    part_b = tuple(v for v in g.sorted_vertices() if color[v] == 1)
    return part_a, part_b


def is_valid_induced_map(g: Graph, h: Graph, mapping: Mapping) -> bool:
    """Check that mapping embeds h into g preserving edges and non-edges."""
    if set(mapping.keys()) != set(h.vertices):
        return False
    images = list(mapping.values())
    if len(set(images)) != len(images):
        return False
    if not set(images) <= set(g.vertices):
        return False
    for u, v in combinations(h.vertices, 2):
        if h.has_edge(u, v) != g.has_edge(mapping[u], mapping[v]):
            return False
    return True


def contains_induced(g: Graph, h: Graph):
    """Exact search for an induced copy of h inside g.

    Returns an injective map V(h) -> V(g) preserving both adjacency and
    non-adjacency, or None. Backtracking with degree pruning; exhaustive,
    intended for |V(h)| <= 10.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}

    # Order h's vertices so each new one touches the mapped prefix when possible.
    order = []
    placed = set()
    pending = sorted(h.vertices, key=lambda v: (-h.degree(v), _label_key(v)))
    while pending:
        pick = None
        for v in pending:
            if any(w in placed for w in h.neighbors(v)):
                pick = v
                break
        if pick is None:
            pick = pending[0]
        order.append(pick)
        placed.add(pick)
        pending.remove(pick)

    g_sorted = g.sorted_vertices()
    assignment = {}
    used = set()

    def backtrack(idx: int):
        if idx == len(order):
            return dict(assignment)
        u = order[idx]
        for cand in g_sorted:
            if cand in used or g.degree(cand) < h.degree(u):
                continue
            ok = True
            for w, img in assignment.items():
                if h.has_edge(u, w) != g.has_edge(cand, img):
                    ok = False
                    break
            if not ok:
                continue
            assignment[u] = cand
            used.add(cand)
            found = backtrack(idx + 1)
            if found is not None:
                return found
            del assignment[u]
            used.remove(cand)
        return None

    return backtrack(0)


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test; degree-sequence prefilter then backtracking."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return isomorphism_map(g, h) is not None


def isomorphism_map(g: Graph, h: Graph):
    """An explicit isomorphism V(h) -> V(g), or None."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    # An induced embedding between equal-sized graphs with equal edge counts
    # is a bijection preserving adjacency both ways.
    return contains_induced(g, h)
