"""The generalized Paley graph P_delta as a circulant (di)graph on Z/D."""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from . import ntheory as nt
from .errors import DomainError, ParityError
from .qchar import FundamentalDiscriminant, as_discriminant, quadratic_character

EXPORT_FORMATS = ("dot", "edge_list", "adjacency_json")


@dataclass(frozen=True, eq=False)
class PaleyGraph:
    """Circulant graph: arc u -> v iff ``generator[(v - u) % order] == 1``."""

    discriminant: FundamentalDiscriminant
    order: int
    generator: np.ndarray = field(repr=False)
    directed: bool

    @property
    def delta(self) -> int:
        return self.discriminant.delta

    @property
    def offsets(self) -> np.ndarray:
        return np.flatnonzero(self.generator)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.generator[(v - u) % self.order])

    def neighbors(self, u: int) -> Iterator[int]:
        for a in self.offsets.tolist():
            yield (u + a) % self.order

    def edges(self) -> Iterator[tuple[int, int]]:
        """Arcs (u, v) for digraphs; undirected edges once each with u < v."""
        n = self.order
        offs = self.offsets.tolist()
        for u in range(n):
            for a in offs:
                v = (u + a) % n
                if self.directed or u < v:
                    yield u, v

    def adjacency_matrix(self) -> np.ndarray:
        idx = np.arange(self.order)
        return self.generator[(idx[None, :] - idx[:, None]) % self.order].astype(np.int64)


def build(disc: FundamentalDiscriminant | int) -> PaleyGraph:
    disc = as_discriminant(disc)
    values = quadratic_character(disc).values
    generator = (values == 1).astype(np.int8)
    generator.setflags(write=False)
    return PaleyGraph(disc, disc.conductor, generator, disc.delta < 0)


def degree(g: PaleyGraph) -> int:
    r = nt.euler_phi(g.order) // 2
    assert int(g.generator.sum()) == r, "generator weight differs from phi(D)/2"
    return r


def _require_undirected(g: PaleyGraph) -> None:
    if g.directed:
        raise ParityError(f"P_{g.delta} is directed; the operation needs delta > 0")


def _bfs_colors(g: PaleyGraph) -> np.ndarray:
    """BFS layer parity from vertex 0; -1 marks unreached vertices."""
    n = g.order
    offs = g.offsets
    color = np.full(n, -1, dtype=np.int8)
    color[0] = 0
    frontier = np.array([0])
    level = 0
    while frontier.size:
        level ^= 1
        nbrs = np.unique((frontier[:, None] + offs[None, :]) % n)
        nbrs = nbrs[color[nbrs] < 0]
        color[nbrs] = level
        frontier = nbrs
    return color


def is_connected(g: PaleyGraph) -> bool:
    return bool(np.all(_bfs_colors(g) >= 0))


def bipartition(g: PaleyGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-coloring by BFS, returned as (side of vertex 1, side of vertex 0), or None.

    For even delta this is (odd residues, even residues).
    """
    _require_undirected(g)
    color = _bfs_colors(g)
    n = g.order
    idx = np.arange(n)
    for a in g.offsets.tolist():
        if np.any(color == color[(idx + a) % n]):
            return None
    ones = frozenset(np.flatnonzero(color == 1).tolist())
    zeros = frozenset(np.flatnonzero(color == 0).tolist())
    return ones, zeros


def is_bipartite(g: PaleyGraph) -> bool:
    return bipartition(g) is not None


def is_cycle(g: PaleyGraph) -> bool:
    _require_undirected(g)
    return int(g.generator.sum()) == 2 and is_connected(g)


def _edge_list(g: PaleyGraph) -> list[tuple[int, int]]:
    return sorted(g.edges())


def export(g: PaleyGraph, fmt: str) -> str:
    """Serialize as Graphviz DOT, a sorted ``u v`` edge list, or a JSON generator descriptor."""
    if fmt == "edge_list":
        return "\n".join(f"{u} {v}" for u, v in _edge_list(g))
    if fmt == "adjacency_json":
        payload = {"delta": g.delta, "D": g.order, "generator": g.generator.tolist()}
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "dot":
        kind, arrow = ("digraph", "->") if g.directed else ("graph", "--")
        lines = [f'{kind} "P_{g.delta}" {{']
        lines += [f"  {u};" for u in range(g.order)]
        lines += [f"  {u} {arrow} {v};" for u, v in _edge_list(g)]
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")


def vertex_mask(g: PaleyGraph, vertices: Iterable[int]) -> np.ndarray:
    mask = np.zeros(g.order, dtype=bool)
    mask[np.fromiter((v % g.order for v in vertices), dtype=np.int64)] = True
    return mask
