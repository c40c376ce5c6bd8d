"""Marked graphs and quivers for the T-hat diagram, the divisor at infinity and
the strong exceptional collection on a weighted projective line.

Vertex indices are 0-based throughout; labels carry the conventional names.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DomainError
from .exactalg import IntMat


class EdgeKind(str, Enum):
    SOLID = "solid"
    DOUBLE_DOTTED = "double-dotted"


@dataclass(frozen=True)
class MarkedGraph:
    n: int
    labels: tuple[str, ...]
    edges: tuple[tuple[int, int, EdgeKind], ...]

    def __post_init__(self):
        if len(self.labels) != self.n:
            raise ValueError("one label per vertex")
        pairs = set()
        for i, j, _ in self.edges:
            if not 0 <= i < j < self.n:
                raise ValueError(f"bad edge ({i}, {j}); need 0 <= i < j < n")
            if (i, j) in pairs:
                raise ValueError(f"duplicate edge ({i}, {j})")
            pairs.add((i, j))

    def edges_of_kind(self, kind: EdgeKind) -> list[tuple[int, int]]:
        return [(i, j) for i, j, k in self.edges if k is kind]


def _check_triple(t: Sequence[int], what: str) -> tuple[int, int, int]:
    t = tuple(int(x) for x in t)
    if len(t) != 3 or any(x < 2 for x in t):
        raise DomainError(f"{what} must be three integers >= 2, got {t}")
    return t


def _graph(n, labels, edges) -> MarkedGraph:
    norm = tuple(sorted((min(i, j), max(i, j), k) for i, j, k in edges))
    return MarkedGraph(n, tuple(labels), norm)


def arm_ranges(triple: Sequence[int]) -> list[range]:
    """0-based index ranges of the three arms of T-hat, each listed from the hub outward."""
    g1, g2, g3 = triple
    return [range(1, g1), range(g1, g1 + g2 - 1), range(g1 + g2 - 1, g1 + g2 + g3 - 2)]


def that_diagram(g1: int, g2: int, g3: int) -> MarkedGraph:
    """T-hat(g1, g2, g3) with the alpha-numbering of the distinguished basis.

    Index 0 is the hub, then the three arms (hub-adjacent vertex first), then the
    second hub ``mu - 2`` and its pendant ``mu - 1``.
    """
    triple = _check_triple((g1, g2, g3), "T-hat arm lengths")
    mu = sum(triple)
    hub, top, pendant = 0, mu - 2, mu - 1
    edges = []
    for arm in arm_ranges(triple):
        prev = hub
        for v in arm:
            edges.append((prev, v, EdgeKind.SOLID))
            prev = v
        edges.append((arm[0], top, EdgeKind.SOLID))
    edges.append((top, pendant, EdgeKind.SOLID))
    edges.append((hub, top, EdgeKind.DOUBLE_DOTTED))
    return _graph(mu, (f"alpha_{k}" for k in range(1, mu + 1)), edges)


def divisor_labels(d1: int, d2: int, d3: int) -> list[str]:
    """``E_inf`` then, per arm, ``E^i_{d_i - 1}`` down to ``E^i_1``."""
    labels = ["E_inf"]
    for i, d in enumerate((d1, d2, d3), start=1):
        labels.extend(f"E^{i}_{j}" for j in range(d - 1, 0, -1))
    return labels


def divisor_graph(d1: int, d2: int, d3: int) -> MarkedGraph:
    """Chains of (-2)-curves at infinity: ``E_inf`` joined to ``E^i_{d_i - 1}``."""
    triple = _check_triple((d1, d2, d3), "Dolgachev numbers")
    edges = []
    k = 1
    for d in triple:
        prev = 0
        for _ in range(d - 1):
            edges.append((prev, k, EdgeKind.SOLID))
            prev = k
            k += 1
    return _graph(k, divisor_labels(*triple), edges)


def gram_from_marked_graph(g: MarkedGraph) -> IntMat:
    """-2 on the diagonal, +1 per solid edge, -2 per double-dotted edge."""
    a = [[0] * g.n for _ in range(g.n)]
    for i in range(g.n):
        a[i][i] = -2
    for i, j, kind in g.edges:
        a[i][j] = a[j][i] = 1 if kind is EdgeKind.SOLID else -2
    return IntMat.from_rows(a)


@dataclass(frozen=True)
class Quiver:
    labels: tuple[str, ...]
    solid_arrows: tuple[tuple[int, int], ...]
    relation_arrows: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


def u_label(i: int, j: int) -> str:
    return f"U_{i}^({j})"


def lp_quiver(p1: int, p2: int, p3: int) -> Quiver:
    """Quiver of the strong exceptional collection on the weighted projective line.

    Vertex order: ``O``, then ``U_i^(1..p_i-1)`` for i = 1, 2, 3, then ``W``
    (the object ``O(-omega-c)[1]``). The two ``O -> W`` arrows are the relations.
    """
    p = _check_triple((p1, p2, p3), "weights")
    labels = ["O"]
    for i, pi in enumerate(p, start=1):
        labels.extend(u_label(i, j) for j in range(1, pi))
    labels.append("W")
    idx = {lab: k for k, lab in enumerate(labels)}
    o, w = idx["O"], idx["W"]
    solid = []
    for i, pi in enumerate(p, start=1):
        for j in range(1, pi - 1):
            solid.append((idx[u_label(i, j)], idx[u_label(i, j + 1)]))
        root = idx[u_label(i, pi - 1)]
        solid.append((o, root))
        solid.append((root, w))
    return Quiver(tuple(labels), tuple(solid), ((o, w), (o, w)))


def matrix_csv(m: IntMat) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(m.to_rows())
    return buf.getvalue()


def matrix_json(m: IntMat) -> str:
    return json.dumps(m.to_rows())
