"""Cartesian products with fiber bookkeeping and script lifting.

Product vertices are flattened g-major: (g, h) gets id g * hn + h. All
downstream certificates report product vertices as "g:h" so they can be
audited coordinate by coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from boxcap.graphs import Graph, GraphError
from boxcap.minors import ContractEdge, DeleteEdge, DeleteVertex, MinorOp, MinorScript


@dataclass(frozen=True)
class ProductGraph:
    """A Cartesian product together with its coordinate structure."""

    graph: Graph
    gn: int
    hn: int

    def vertex(self, g: int, h: int) -> int:
        if not (0 <= g < self.gn and 0 <= h < self.hn):
            raise GraphError(f"coordinate ({g},{h}) out of range")
        return g * self.hn + h

    def coords(self, vid: int) -> tuple[int, int]:
        if not (0 <= vid < self.graph.n):
            raise GraphError(f"vertex id {vid} out of range")
        return divmod(vid, self.hn)

    def coordinate_keys(self) -> list[tuple[int, int]]:
        """The (g, h) key of every vertex in id order."""
        return [divmod(v, self.hn) for v in range(self.graph.n)]

    def coordinate_labels(self) -> dict[int, str]:
        return {v: f"{v // self.hn}:{v % self.hn}" for v in range(self.graph.n)}


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """The Cartesian product: move along exactly one coordinate per edge."""
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must be nonempty")
    edges = []
    for gu, gv in g.edges():
        for hh in range(h.n):
            edges.append((gu * h.n + hh, gv * h.n + hh))
    for hu, hv in h.edges():
        for gg in range(g.n):
            edges.append((gg * h.n + hu, gg * h.n + hv))
    labels = {gg * h.n + hh: f"{gg}:{hh}" for gg in range(g.n) for hh in range(h.n)}
    return ProductGraph(Graph(g.n * h.n, edges, labels=labels), g.n, h.n)


def fiber(p: ProductGraph, side: str, index: int) -> tuple[int, ...]:
    """Vertex ids of one fiber.

    side "G" fixes the second coordinate (a copy of the G factor at h =
    index); side "H" fixes the first (a copy of H at g = index).
    """
    if side == "G":
        if not (0 <= index < p.hn):
            raise GraphError(f"G-fiber index {index} out of range")
        return tuple(g * p.hn + index for g in range(p.gn))
    if side == "H":
        if not (0 <= index < p.gn):
            raise GraphError(f"H-fiber index {index} out of range")
        return tuple(index * p.hn + h for h in range(p.hn))
    raise GraphError(f"fiber side must be 'G' or 'H', got {side!r}")


def lift_script(script, h: Graph) -> MinorScript:
    """Lift a script on factor G to the product G x H.

    Vertex ops fan out over all h-coordinates: deleting g deletes every
    (g, h); deleting or contracting gg' acts on every rung {(g,h), (g',h)}
    in turn, so the lifted script turns (G x H) into (G' x H) where G' is
    the factor script's result.
    """
    ops: list[MinorOp] = []
    source = script.ops if isinstance(script, MinorScript) else tuple(script)
    for op in source:
        if isinstance(op, DeleteVertex):
            ops.extend(DeleteVertex((op.v, hh)) for hh in range(h.n))
        elif isinstance(op, DeleteEdge):
            ops.extend(DeleteEdge((op.u, hh), (op.v, hh)) for hh in range(h.n))
        elif isinstance(op, ContractEdge):
            keep = op.u if op.label is None else op.label
            ops.extend(ContractEdge((op.u, hh), (op.v, hh), (keep, hh))
                       for hh in range(h.n))
        else:
            raise GraphError(f"cannot lift op {op!r}")
    base = script.base if isinstance(script, MinorScript) else "factor"
    return MinorScript(f"{base} x H", tuple(ops))
