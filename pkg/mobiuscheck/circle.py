# -*- coding: utf-8 -*-
"""Which graphs are interlacement graphs of some hieroglyph.

Not every symmetric 0/1 matrix is a crossing matrix: the off-diagonal part
must be the adjacency matrix of a circle graph. The searches here are
exhaustive and meant for graphs with at most eight vertices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from string import ascii_lowercase
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from . import workers
from .config import config
from .errors import MalformedGraph, VerificationError, check_bound
from .enumeration import enumerate_words
from .hieroglyph import Hieroglyph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        normalized = set()
        for edge in self.edges:
            try:
                u, v = edge
            except (TypeError, ValueError):
                raise MalformedGraph("Edge {!r} is not a vertex pair.".format(edge))
            if u == v:
                raise MalformedGraph("Loop at vertex {}.".format(u))
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise MalformedGraph("Edge {} leaves the vertex range 0..{}.".format(edge, self.n - 1))
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "LabeledGraph":
        edges = list(edges)
        if len({(min(e), max(e)) for e in edges}) != len(edges):
            raise MalformedGraph("Repeated edge.")
        return cls(n, frozenset(edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "LabeledGraph":
        labels = {node: i for i, node in enumerate(sorted(graph.nodes))}
        return cls(graph.number_of_nodes(), frozenset((labels[u], labels[v]) for u, v in graph.edges))

    @classmethod
    def from_text(cls, text: str) -> "LabeledGraph":
        """First line is the vertex count, then one ``u v`` edge per line."""
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise MalformedGraph("Graph file is empty.")
        try:
            n = int(lines[0])
            edges = [tuple(int(token) for token in line.split()) for line in lines[1:]]
        except ValueError:
            raise MalformedGraph("Graph file must hold integers only.")
        if n < 0 or any(len(edge) != 2 for edge in edges):
            raise MalformedGraph("Expected a vertex count and lines of two vertices.")
        return cls.from_edges(n, edges)

    def to_text(self) -> str:
        return "{}\n".format(self.n) + "".join("{} {}\n".format(u, v) for u, v in sorted(self.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self, u: int) -> List[int]:
        return [v for v in range(self.n) if v != u and self.adjacent(u, v)]

    def induced(self, vertices: Sequence[int]) -> "LabeledGraph":
        index = {v: i for i, v in enumerate(vertices)}
        return LabeledGraph(
            len(vertices),
            frozenset((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def as_dict(self):
        return {"n": self.n, "edges": [list(edge) for edge in sorted(self.edges)]}


def vertex_token(v: int) -> str:
    return ascii_lowercase[v]


def interlacement_graph(hieroglyph: Hieroglyph) -> LabeledGraph:
    """Vertex ``i`` is the ``i``-th letter in first-occurrence order."""
    rows = hieroglyph.interlacement_rows()
    return LabeledGraph(
        hieroglyph.n,
        frozenset(
            (i, j) for i in range(hieroglyph.n) for j in range(i + 1, hieroglyph.n) if (rows[i] >> j) & 1
        ),
    )


def realizes(hieroglyph: Hieroglyph, graph: LabeledGraph) -> bool:
    """Letter ``vertex_token(v)`` interlaces ``vertex_token(u)`` iff u, v are adjacent."""
    if hieroglyph.n != graph.n:
        return False
    tokens = [vertex_token(v) for v in range(graph.n)]
    if set(tokens) != set(hieroglyph.letters):
        return False
    index = {letter: i for i, letter in enumerate(hieroglyph.letters)}
    rows = hieroglyph.interlacement_rows()
    return all(
        bool((rows[index[tokens[u]]] >> index[tokens[v]]) & 1) == graph.adjacent(u, v)
        for u in range(graph.n)
        for v in range(u + 1, graph.n)
    )


def letter_vertices(hieroglyph: Hieroglyph) -> List[int]:
    """Vertex of each letter, in the first-occurrence order ``interlacement_matrix`` uses."""
    return [ascii_lowercase.index(letter) for letter in hieroglyph.letters]


def _placement_order(graph: LabeledGraph) -> List[int]:
    """Vertex 0 first, then always the vertex with most placed neighbours."""
    if not graph.n:
        return []
    degree = [len(graph.neighbours(v)) for v in range(graph.n)]
    order = [0]
    remaining = set(range(1, graph.n))
    while remaining:
        placed = set(order)
        nxt = max(
            sorted(remaining),
            key=lambda v: (sum(1 for u in graph.neighbours(v) if u in placed), degree[v], -v),
        )
        order.append(nxt)
        remaining.discard(nxt)
    return order


def _crosses(sequence: List[int], v: int, placed: Sequence[int], graph: LabeledGraph) -> bool:
    first = sequence.index(v)
    second = sequence.index(v, first + 1)
    inside = sequence[first + 1:second]
    for u in placed:
        if (inside.count(u) == 1) != graph.adjacent(u, v):
            return False
    return True


def _placements(graph: LabeledGraph, order: List[int], ordered: bool = False) -> Iterator[List[int]]:
    """Every linear arrangement starting with ``order[0]`` that realizes ``graph``.

    Chords are inserted one vertex at a time; a placement survives only if the
    new chord interlaces exactly its already placed neighbours. With
    ``ordered`` each new chord must open after every placed one, so first
    occurrences follow ``order``.
    """
    if not order:
        yield []
        return

    def extend(sequence, k):
        if k == len(order):
            yield list(sequence)
            return
        v = order[k]
        placed = order[:k]
        length = len(sequence)
        lowest = sequence.index(order[k - 1]) + 1 if ordered else 1
        for i in range(length, lowest - 1, -1):
            for j in range(length + 1, i, -1):
                candidate = sequence[:i] + [v] + sequence[i:]
                candidate.insert(j, v)
                if _crosses(candidate, v, placed, graph):
                    yield from extend(candidate, k + 1)

    yield from extend([order[0], order[0]], 1)


def _first_placement(graph: LabeledGraph) -> Optional[List[int]]:
    return next(_placements(graph, _placement_order(graph)), None)


def realize_graph(graph: LabeledGraph) -> Optional[Hieroglyph]:
    """A hieroglyph whose interlacement graph is ``graph`` (letter ``a`` is vertex 0, ...).

    A witness whose letters first occur in vertex order is preferred, so that
    ``interlacement_matrix`` equals the adjacency matrix. Some labelings have no
    such witness; then ``letter_vertices`` gives the row order.
    """
    check_bound("vertices", graph.n, config.get("REALIZE_MAX_N"))
    sequence = next(_placements(graph, list(range(graph.n)), ordered=True), None)
    if sequence is None:
        sequence = _first_placement(graph)
        if sequence is None:
            return None
        logger.debug("No witness lists the vertices in order; rows follow first occurrence.")
    hieroglyph = Hieroglyph(tuple(vertex_token(v) for v in sequence))
    if not realizes(hieroglyph, graph):
        raise VerificationError("Placement {} does not realize the graph.".format(hieroglyph))
    return hieroglyph


def count_realizations(graph: LabeledGraph) -> int:
    """Number of distinct labeled cyclic words realizing ``graph`` (rotations identified)."""
    check_bound("vertices", graph.n, config.get("REALIZE_MAX_N"))
    seen = set()
    for sequence in _placements(graph, _placement_order(graph)):
        seen.add(min(tuple(sequence[r:] + sequence[:r]) for r in range(max(1, len(sequence)))))
    return len(seen)


def _nonrealizable_among(graphs: List[LabeledGraph]) -> List[LabeledGraph]:
    return [graph for graph in graphs if _first_placement(graph) is None]


def find_nonrealizable(n: int) -> List[LabeledGraph]:
    """Graphs on n vertices, one per isomorphism class, that are not interlacement graphs."""
    check_bound("vertices", n, config.get("NONREALIZABLE_MAX_N"))
    graphs = [LabeledGraph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    logger.info("Trying to realize {} graphs on {} vertices...".format(len(graphs), n))
    size = max(1, -(-len(graphs) // (config.get("WORKERS") * 4)))
    chunks = [(graphs[lo:lo + size],) for lo in range(0, len(graphs), size)]
    found = []
    for part in workers.run_partitioned(_nonrealizable_among, chunks):
        found.extend(part)
    return found


def _degree_signature(graph: nx.Graph) -> Tuple[int, ...]:
    return tuple(sorted(d for _, d in graph.degree()))


def confirm_nonrealizable(graph: LabeledGraph) -> bool:
    """Independent check: no chord diagram on n chords has an isomorphic interlacement graph."""
    target = graph.to_networkx()
    signature = _degree_signature(target)
    for hieroglyph in enumerate_words(graph.n):
        candidate = interlacement_graph(hieroglyph).to_networkx()
        if _degree_signature(candidate) == signature and nx.is_isomorphic(candidate, target):
            return False
    return True
