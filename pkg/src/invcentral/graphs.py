"""Graph encoding of o_N m-invariants.

Edge ``e`` stands for the factor ``m_{i_e j_e}``: its tail carries the row
slot ``i_e`` and its head the column slot ``j_e``.  A white vertex joins
exactly two slots and sums them against each other (``delta``), which gives
the three patterns

* two tails:        ``m_{c j_a} m_{c j_b}``   (a column of ``M^t M``)
* two heads:        ``m_{i_a c} m_{i_b c}``   (``M M^t``)
* head a, tail b:   ``m_{i_a c} m_{c j_b}``   (``M M``)

A black vertex has exactly ``N`` slots in a fixed order and contracts them
with the rank-``N`` alternator.  A loop contributes two slots to its vertex.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exact_math import ZERO, perm_sign
from .mpoly import Monomial, MPolynomial

WHITE, BLACK = "white", "black"
TAIL, HEAD = "tail", "head"


@dataclass
class Vertex:
    color: str
    # black vertices only: ordered (edge number, "tail" | "head")
    incidence: List[Tuple[int, str]] = field(default_factory=list)


@dataclass
class InvariantGraph:
    vertices: List[Vertex]
    edges: Dict[int, Tuple[int, int]]  # edge number -> (tail vertex, head vertex)

    def slots_at(self, v: int) -> List[Tuple[int, str]]:
        """Slots attached to vertex ``v``; for black vertices in their fixed order."""
        vert = self.vertices[v]
        if vert.color == BLACK:
            return list(vert.incidence)
        out = []
        for e in sorted(self.edges):
            tail, head = self.edges[e]
            if tail == v:
                out.append((e, TAIL))
            if head == v:
                out.append((e, HEAD))
        return out

    def validate(self, n: int) -> None:
        k = len(self.edges)
        if sorted(self.edges) != list(range(1, k + 1)):
            raise ValueError(f"edge numbers must be exactly 1..{k}, got {sorted(self.edges)}")
        for e, (t, h) in self.edges.items():
            for v in (t, h):
                if not 0 <= v < len(self.vertices):
                    raise ValueError(f"edge {e} refers to missing vertex {v}")
        for v, vert in enumerate(self.vertices):
            ends = [(e, TAIL) for e, (t, _) in self.edges.items() if t == v]
            ends += [(e, HEAD) for e, (_, h) in self.edges.items() if h == v]
            if vert.color == WHITE:
                if len(ends) != 2:
                    raise ValueError(f"white vertex {v} has degree {len(ends)}, expected 2")
            elif vert.color == BLACK:
                if len(ends) != n:
                    raise ValueError(f"black vertex {v} has degree {len(ends)}, expected N={n}")
                if sorted(vert.incidence) != sorted(ends):
                    raise ValueError(f"black vertex {v}: incidence list {vert.incidence} does not match its edges {sorted(ends)}")
            else:
                raise ValueError(f"vertex {v} has unknown color {vert.color!r}")

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"color": v.color, **({"incidence": [[e, end] for e, end in v.incidence]} if v.color == BLACK else {})}
                for v in self.vertices
            ],
            "edges": [{"id": e, "tail": t, "head": h} for e, (t, h) in sorted(self.edges.items())],
        }

    @classmethod
    def from_json(cls, doc) -> "InvariantGraph":
        if isinstance(doc, str):
            doc = json.loads(doc)
        verts = [Vertex(v["color"], [(int(e), str(end)) for e, end in v.get("incidence", [])])
                 for v in doc["vertices"]]
        edges = {int(e["id"]): (int(e["tail"]), int(e["head"])) for e in doc["edges"]}
        return cls(verts, edges)


def compile_graph(g: InvariantGraph, n: int) -> MPolynomial:
    """The m-invariant (over general ``M``) encoded by ``g`` for ``N = n``."""
    g.validate(n)
    whites = [v for v, vert in enumerate(g.vertices) if vert.color == WHITE]
    blacks = [v for v, vert in enumerate(g.vertices) if vert.color == BLACK]
    white_slots = [g.slots_at(v) for v in whites]
    black_slots = [g.slots_at(v) for v in blacks]
    perms = [(p, perm_sign(p)) for p in itertools.permutations(range(1, n + 1))]
    acc: Dict[Monomial, Fraction] = {}
    for wvals in itertools.product(range(1, n + 1), repeat=len(whites)):
        for bchoice in itertools.product(perms, repeat=len(blacks)):
            assign = {}
            sign = 1
            for slots, c in zip(white_slots, wvals):
                for s in slots:
                    assign[s] = c
            for slots, (p, s) in zip(black_slots, bchoice):
                sign *= s
                for slot, val in zip(slots, p):
                    assign[slot] = val
            counts: Dict[tuple, int] = {}
            for e in g.edges:
                var = ("m", assign[e, TAIL], assign[e, HEAD])
                counts[var] = counts.get(var, 0) + 1
            mono = tuple(sorted(counts.items()))
            acc[mono] = acc.get(mono, ZERO) + sign
    return MPolynomial(acc)


# standard graphs

def trace_graph() -> InvariantGraph:
    """One loop at a white vertex: ``tr M``."""
    return InvariantGraph([Vertex(WHITE)], {1: (0, 0)})


def trace_power_graph(k: int) -> InvariantGraph:
    """Oriented cycle of ``k`` edges through ``k`` white vertices: ``tr M^k``."""
    return InvariantGraph([Vertex(WHITE) for _ in range(k)], {e: (e - 1, e % k) for e in range(1, k + 1)})


def pfaffian_graph(k: int) -> InvariantGraph:
    """One black vertex carrying ``k`` loops (``N = 2k``): ``k! 2^k Pf M`` on skew ``M``."""
    inc = [(e, end) for e in range(1, k + 1) for end in (TAIL, HEAD)]
    return InvariantGraph([Vertex(BLACK, inc)], {e: (0, 0) for e in range(1, k + 1)})


def determinant_graph(k: int) -> InvariantGraph:
    """Two black vertices joined by ``k`` parallel edges (``N = k``): ``k! det M``."""
    return InvariantGraph(
        [Vertex(BLACK, [(e, TAIL) for e in range(1, k + 1)]), Vertex(BLACK, [(e, HEAD) for e in range(1, k + 1)])],
        {e: (0, 1) for e in range(1, k + 1)},
    )


def random_graph(rng: random.Random, n: int, n_black: int, n_white: int) -> InvariantGraph:
    """Random valid graph: vertex stubs shuffled and paired into edges."""
    if (n * n_black) % 2:
        raise ValueError("N * (number of black vertices) must be even")
    stubs = [v for v in range(n_black) for _ in range(n)] + [n_black + w for w in range(n_white) for _ in range(2)]
    if not stubs:
        raise ValueError("empty graph")
    rng.shuffle(stubs)
    edges = {}
    inc: Dict[int, List[Tuple[int, str]]] = {v: [] for v in range(n_black)}
    for e, pos in enumerate(range(0, len(stubs), 2), start=1):
        t, h = stubs[pos], stubs[pos + 1]
        edges[e] = (t, h)
        if t < n_black:
            inc[t].append((e, TAIL))
        if h < n_black:
            inc[h].append((e, HEAD))
    for v in inc:
        rng.shuffle(inc[v])
    verts = [Vertex(BLACK, inc[v]) for v in range(n_black)] + [Vertex(WHITE) for _ in range(n_white)]
    return InvariantGraph(verts, edges)
