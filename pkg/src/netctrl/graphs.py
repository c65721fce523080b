"""Simple undirected graphs with 1-based vertex labels.

Vertices are always exactly ``1..n``.  The canonical interchange format is an
edge-list text document: the first significant line holds the order ``n``,
every following line holds one edge ``u v``.  Lines starting with ``#`` are
comments, blank lines are skipped, CRLF is tolerated.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction


class GraphFormatError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..order``.

    Edges are stored as a frozenset of ``(u, v)`` pairs with ``u < v``; no
    loops, no multiplicity.
    """

    order: int
    edges: frozenset

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"graph order must be >= 1, got {self.order}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.order):
                raise ValueError(f"invalid edge ({u}, {v}) for order {self.order}")

    @property
    def vertices(self) -> range:
        return range(1, self.order + 1)


def graph(order: int, edges=()) -> Graph:
    """Build a Graph, normalizing each edge to ``(min, max)`` form."""
    normalized = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        normalized.add((min(u, v), max(u, v)))
    return Graph(order, frozenset(normalized))


def adjacency_sets(g: Graph) -> dict:
    """Vertex -> set of neighbors."""
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def check_vertex(g: Graph, v: int) -> None:
    if not (1 <= v <= g.order):
        raise ValueError(f"vertex {v} out of range 1..{g.order}")


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a Graph.

    Duplicate edges collapse.  Raises GraphFormatError with the line number
    on malformed lines, out-of-range vertices, and loop edges.
    """
    order = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 1:
                raise GraphFormatError(lineno, f"expected the graph order, got {line!r}")
            try:
                order = int(tokens[0])
            except ValueError:
                raise GraphFormatError(lineno, f"order is not an integer: {tokens[0]!r}") from None
            if order < 1:
                raise GraphFormatError(lineno, f"order must be >= 1, got {order}")
            continue
        if len(tokens) != 2:
            raise GraphFormatError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(lineno, f"vertices are not integers: {line!r}") from None
        if not (1 <= u <= order and 1 <= v <= order):
            raise GraphFormatError(lineno, f"vertex out of range 1..{order}: {line!r}")
        if u == v:
            raise GraphFormatError(lineno, f"loop edge not allowed: {line!r}")
        edges.add((min(u, v), max(u, v)))
    if order is None:
        raise GraphFormatError(1, "empty document; first line must be the graph order")
    return Graph(order, frozenset(edges))


def format_graph(g: Graph) -> str:
    """Serialize to the canonical edge-list form (parse round-trips exactly)."""
    lines = [str(g.order)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def to_dot(g: Graph) -> str:
    """DOT export for visualization; never parsed back."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in g.vertices)
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    """Path 1-2-...-n."""
    return graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    """Cycle 1-2-...-n-1; requires n >= 3."""
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    return graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    """All pairs adjacent."""
    return graph(n, itertools.combinations(range(1, n + 1), 2))


def generate(family: str, n: int) -> Graph:
    """Dispatch on family name: path, cycle, or complete."""
    makers = {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph}
    if family not in makers:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(makers)}")
    return makers[family](n)


def random_connected(n: int, edge_probability, seed: int, max_tries: int = 10_000) -> Graph:
    """Erdos-Renyi draw conditioned on connectivity, by rejection sampling.

    ``edge_probability`` is an exact rational in (0, 1]; each candidate edge
    is kept with exactly that probability, so identical ``(n, p, seed)``
    reproduce the identical graph.  Raises RuntimeError after ``max_tries``
    rejections.
    """
    p = Fraction(edge_probability)
    if not (0 < p <= 1):
        raise ValueError(f"edge probability must be in (0, 1], got {p}")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for _ in range(max_tries):
        edges = [e for e in pairs if rng.randrange(p.denominator) < p.numerator]
        g = graph(n, edges)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected graph found in {max_tries} draws (n={n}, p={p}, seed={seed})")


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 1."""
    adj = adjacency_sets(g)
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def distance(g: Graph, u: int, v: int):
    """Shortest-path edge count between u and v; math.inf when unreachable."""
    check_vertex(g, u)
    check_vertex(g, v)
    if u == v:
        return 0
    adj = adjacency_sets(g)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if w not in dist:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return float("inf")


def neighborhood(g: Graph, v: int) -> tuple:
    """Sorted tuple of vertices adjacent to v."""
    check_vertex(g, v)
    out = set()
    for a, b in g.edges:
        if a == v:
            out.add(b)
        elif b == v:
            out.add(a)
    return tuple(sorted(out))


def degree(g: Graph, v: int) -> int:
    return len(neighborhood(g, v))
