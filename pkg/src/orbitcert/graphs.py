"""Finite simple graphs, lazy graph oracles, and graph constructions.

FiniteGraph is canonical: vertices are kept sorted and edges normalized, so
structural equality and the JSON form are byte-stable.  GraphOracle describes
a possibly infinite graph through an adjacency predicate; finite windows are
materialized on demand and validated for symmetry and irreflexivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import (
    ConnectionSetError,
    DuplicateVertexError,
    InvalidRuleError,
    MalformedInputError,
    SizeCapError,
    WindowError,
)
from .groups import GroupElement, GroupFamily, element_text, gp_inv, gp_mul, parse_element
from .jsonutil import sort_key, vertex_from_json, vertex_to_json
from . import kernels


def _norm_edge(u, v):
    return (u, v) if sort_key(u) <= sort_key(v) else (v, u)


@dataclass(frozen=True)
class FiniteGraph:
    vertices: tuple
    edges: frozenset

    def has_edge(self, u, v) -> bool:
        return u != v and _norm_edge(u, v) in self.edges

    def neighbors(self, u):
        return [w for w in self.vertices if self.has_edge(u, w)]

    def degree(self, u) -> int:
        return len(self.neighbors(u))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise MalformedInputError(f"{v!r} is not a vertex") from None

    def adjacency_flat(self) -> bytes:
        """Row-major n*n 0/1 bytes; the kernel-facing form."""
        n = self.n
        pos = {v: i for i, v in enumerate(self.vertices)}
        buf = bytearray(n * n)
        for u, v in self.edges:
            i, j = pos[u], pos[v]
            buf[i * n + j] = 1
            buf[j * n + i] = 1
        return bytes(buf)


def finite_graph(vertices: Iterable, edges: Iterable = ()) -> FiniteGraph:
    verts = sorted(vertices, key=sort_key)
    vset = set(verts)
    if len(verts) != len(vset):
        raise DuplicateVertexError("vertex list contains duplicates")
    norm = set()
    for e in edges:
        u, v = tuple(e)
        if u == v:
            raise MalformedInputError(f"self-loop at {u!r}")
        if u not in vset or v not in vset:
            raise MalformedInputError(f"edge {e!r} leaves the vertex set")
        norm.add(_norm_edge(u, v))
    return FiniteGraph(tuple(verts), frozenset(norm))


def graph_to_json(g: FiniteGraph) -> dict:
    edges = sorted(
        ([vertex_to_json(u), vertex_to_json(v)] for u, v in g.edges),
        key=lambda e: (sort_key(vertex_from_json(e[0])), sort_key(vertex_from_json(e[1]))),
    )
    return {"vertices": [vertex_to_json(v) for v in g.vertices], "edges": edges}


def graph_from_json(doc: Mapping) -> FiniteGraph:
    try:
        verts = [vertex_from_json(v) for v in doc["vertices"]]
        edges = [tuple(vertex_from_json(x) for x in e) for e in doc["edges"]]
    except (KeyError, TypeError) as exc:
        raise MalformedInputError("graph document needs 'vertices' and 'edges'") from exc
    return finite_graph(verts, edges)


@dataclass(frozen=True)
class GraphOracle:
    """A graph given by a symmetric irreflexive predicate on some vertex
    universe.  ``enumerate_vertices`` is present exactly when the universe is
    finite and materializable."""

    describe: str
    adjacent: Callable[[object, object], bool]
    enumerate_vertices: Callable[[], list] | None = None

    def all_vertices(self) -> list:
        if self.enumerate_vertices is None:
            raise WindowError(f"oracle {self.describe!r} has no vertex enumerator")
        return list(self.enumerate_vertices())


def oracle_from_graph(g: FiniteGraph, describe: str = "explicit") -> GraphOracle:
    return GraphOracle(
        describe=describe,
        adjacent=g.has_edge,
        enumerate_vertices=lambda: list(g.vertices),
    )


def window(oracle: GraphOracle, verts: Iterable) -> FiniteGraph:
    """The induced subgraph on ``verts``, validated as it is materialized."""
    verts = list(verts)
    if len(set(verts)) != len(verts):
        raise DuplicateVertexError("window vertices are not pairwise distinct")
    edges = []
    for i, u in enumerate(verts):
        try:
            if oracle.adjacent(u, u):
                raise WindowError(f"oracle {oracle.describe!r} has a loop at {u!r}")
        except WindowError:
            raise
        except Exception as exc:
            raise WindowError(f"adjacency predicate failed on {u!r}") from exc
        for v in verts[i + 1:]:
            fwd = oracle.adjacent(u, v)
            if fwd != oracle.adjacent(v, u):
                raise WindowError(f"oracle {oracle.describe!r} asymmetric on {(u, v)!r}")
            if fwd:
                edges.append((u, v))
    return finite_graph(verts, edges)


def is_graph_embedding(vmap: Mapping, source: FiniteGraph, target: FiniteGraph) -> bool:
    """True iff vmap is injective and preserves and reflects adjacency."""
    imgs = []
    for v in source.vertices:
        if v not in vmap:
            return False
        imgs.append(vmap[v])
    if len(set(imgs)) != len(imgs):
        return False
    tset = set(target.vertices)
    if any(w not in tset for w in imgs):
        return False
    for i, u in enumerate(source.vertices):
        for v in source.vertices[i + 1:]:
            if source.has_edge(u, v) != target.has_edge(vmap[u], vmap[v]):
                return False
    return True


def complement(g: FiniteGraph) -> FiniteGraph:
    edges = [
        (u, v)
        for i, u in enumerate(g.vertices)
        for v in g.vertices[i + 1:]
        if not g.has_edge(u, v)
    ]
    return finite_graph(g.vertices, edges)


def coproduct(g1: FiniteGraph, g2: FiniteGraph) -> FiniteGraph:
    verts = [(0, v) for v in g1.vertices] + [(1, v) for v in g2.vertices]
    edges = [((0, u), (0, v)) for u, v in g1.edges] + [((1, u), (1, v)) for u, v in g2.edges]
    return finite_graph(verts, edges)


EQUAL, ADJACENT, DISTINCT = "equal", "adjacent", "distinct"
_STATES = (EQUAL, ADJACENT, DISTINCT)


@dataclass(frozen=True)
class ProductRule:
    """Which combinations of per-coordinate states make a product edge.

    Each coordinate pair is in exactly one state: equal, adjacent, or
    distinct non-adjacent.  (equal, equal) can never be an edge.
    """

    true_pairs: frozenset

    def __post_init__(self):
        for pair in self.true_pairs:
            if pair not in {(a, b) for a in _STATES for b in _STATES}:
                raise InvalidRuleError(f"unknown state pair {pair!r}")
        if (EQUAL, EQUAL) in self.true_pairs:
            raise InvalidRuleError("equal/equal pairs cannot be edges (no self-loops)")

    def holds(self, s1: str, s2: str) -> bool:
        return (s1, s2) in self.true_pairs


def product_rule(pairs: Iterable) -> ProductRule:
    return ProductRule(frozenset(tuple(p) for p in pairs))


PRESET_RULES = {
    "cartesian": product_rule([(ADJACENT, EQUAL), (EQUAL, ADJACENT)]),
    "tensor": product_rule([(ADJACENT, ADJACENT)]),
    "strong": product_rule([(ADJACENT, EQUAL), (EQUAL, ADJACENT), (ADJACENT, ADJACENT)]),
    "lexicographic": product_rule(
        [(ADJACENT, EQUAL), (ADJACENT, ADJACENT), (ADJACENT, DISTINCT), (EQUAL, ADJACENT)]
    ),
    "co-normal": product_rule(
        [(ADJACENT, EQUAL), (ADJACENT, ADJACENT), (ADJACENT, DISTINCT),
         (EQUAL, ADJACENT), (DISTINCT, ADJACENT)]
    ),
    "modular": product_rule([(ADJACENT, ADJACENT), (DISTINCT, DISTINCT)]),
    "homomorphic": product_rule(
        [(ADJACENT, EQUAL), (ADJACENT, ADJACENT), (ADJACENT, DISTINCT), (EQUAL, DISTINCT)]
    ),
}


def rule_to_json(rule: ProductRule) -> list:
    return sorted([list(p) for p in rule.true_pairs])


def rule_from_json(doc) -> ProductRule:
    if isinstance(doc, str):
        if doc not in PRESET_RULES:
            raise MalformedInputError(f"unknown rule preset {doc!r}")
        return PRESET_RULES[doc]
    return product_rule(doc)


def _pair_state(u, v, g: FiniteGraph) -> str:
    if u == v:
        return EQUAL
    return ADJACENT if g.has_edge(u, v) else DISTINCT


def product(g1: FiniteGraph, g2: FiniteGraph, rule: ProductRule) -> FiniteGraph:
    verts = [(u, v) for u in g1.vertices for v in g2.vertices]
    edges = []
    for i, (u1, u2) in enumerate(verts):
        for v1, v2 in verts[i + 1:]:
            if rule.holds(_pair_state(u1, v1, g1), _pair_state(u2, v2, g2)):
                edges.append(((u1, u2), (v1, v2)))
    return finite_graph(verts, edges)


def automorphism_group(g: FiniteGraph, cap: int = 10) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex permutations, as index tuples over the
    canonical vertex order.  Brute-force backtracking with degree pruning."""
    if g.n > cap:
        raise SizeCapError(f"{g.n} vertices exceeds the automorphism cap {cap}")
    return kernels.automorphisms(g.n, g.adjacency_flat())


def apply_automorphism(g: FiniteGraph, perm: tuple[int, ...], v):
    return g.vertices[perm[g.index(v)]]


def is_isomorphic(g1: FiniteGraph, g2: FiniteGraph, cap: int = 8) -> bool:
    """Brute-force isomorphism check, for tests only."""
    import itertools

    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    if g1.n > cap:
        raise SizeCapError(f"{g1.n} vertices exceeds the isomorphism cap {cap}")
    for perm in itertools.permutations(range(g2.n)):
        vmap = {u: g2.vertices[perm[i]] for i, u in enumerate(g1.vertices)}
        if is_graph_embedding(vmap, g1, g2):
            return True
    return False


def cayley_oracle(family: GroupFamily, conn: Iterable[GroupElement]) -> GraphOracle:
    """Adjacency g ~ h iff g^{-1} h lies in the symmetric connection set."""
    conn = list(conn)
    conn_set = set(conn)
    for k in conn:
        if k.family != family:
            raise ConnectionSetError("connection element from wrong family")
        if k.is_identity():
            raise ConnectionSetError("identity in connection set")
        if gp_inv(k) not in conn_set:
            raise ConnectionSetError(f"connection set not symmetric at {k!r}")

    def adjacent(g, h):
        return gp_mul(gp_inv(_as_element(family, g)), _as_element(family, h)) in conn_set

    return GraphOracle(describe=f"cayley({family!r})", adjacent=adjacent)


def _as_element(family: GroupFamily, v) -> GroupElement:
    if isinstance(v, GroupElement):
        return v
    return parse_element(family, v)


def complement_oracle(oracle: GraphOracle) -> GraphOracle:
    return GraphOracle(
        describe=f"complement({oracle.describe})",
        adjacent=lambda u, v: u != v and not oracle.adjacent(u, v),
        enumerate_vertices=oracle.enumerate_vertices,
    )


def edgeless_oracle(oracle: GraphOracle) -> GraphOracle:
    return GraphOracle(
        describe=f"edgeless({oracle.describe})",
        adjacent=lambda u, v: False,
        enumerate_vertices=oracle.enumerate_vertices,
    )


def complete_oracle(oracle: GraphOracle) -> GraphOracle:
    return GraphOracle(
        describe=f"complete({oracle.describe})",
        adjacent=lambda u, v: u != v,
        enumerate_vertices=oracle.enumerate_vertices,
    )
