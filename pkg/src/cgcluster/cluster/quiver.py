"""Quivers with frozen vertices, interconvertible with extended exchange matrices."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .exchange import Matrix, as_matrix

log = logging.getLogger(__name__)

Vertex = Hashable


@dataclass(frozen=True)
class Quiver:
    """Vertices (in a fixed order), frozen set, and an arrow multiset.

    Arrows between two frozen vertices are never stored.
    """

    vertices: tuple
    frozen: frozenset
    arrows: Counter = field(compare=False, hash=False)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex")
        if not self.frozen <= vs:
            raise ValueError("frozen vertex not in vertex set")
        clean = Counter()
        for (u, v), m in self.arrows.items():
            if u not in vs or v not in vs:
                raise ValueError(f"arrow {u}->{v} leaves the vertex set")
            if u == v:
                raise ValueError("loops are not allowed")
            if m > 0 and not (u in self.frozen and v in self.frozen):
                clean[(u, v)] += m
        object.__setattr__(self, "arrows", clean)

    @classmethod
    def build(cls, vertices: Iterable, frozen: Iterable, arrows: Iterable[tuple]) -> "Quiver":
        frozen = frozenset(frozen)
        c = Counter()
        for a in arrows:
            u, v = a[0], a[1]
            m = a[2] if len(a) > 2 else 1
            if u in frozen and v in frozen:
                log.info("dropping frozen-frozen arrow %s -> %s", u, v)
                continue
            c[(u, v)] += m
        return cls(tuple(vertices), frozen, c)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return (set(self.vertices) == set(other.vertices) and self.frozen == other.frozen
                and +self.arrows == +other.arrows)

    def __hash__(self):
        return hash((frozenset(self.vertices), self.frozen, frozenset((+self.arrows).items())))

    @property
    def mutable(self) -> tuple:
        return tuple(v for v in self.vertices if v not in self.frozen)

    def ordered_vertices(self) -> tuple:
        """Mutable vertices first, then frozen, each in stored order."""
        return self.mutable + tuple(v for v in self.vertices if v in self.frozen)

    def arrow_count(self) -> int:
        return sum(self.arrows.values())

    def canonical(self) -> "Quiver":
        """Cancel opposite arrows pairwise (removes 2-cycles)."""
        c = Counter()
        done = set()
        for (u, v), m in self.arrows.items():
            if (u, v) in done:
                continue
            back = self.arrows.get((v, u), 0)
            net = m - back
            if net > 0:
                c[(u, v)] = net
            elif net < 0:
                c[(v, u)] = -net
            done.add((u, v))
            done.add((v, u))
        return Quiver(self.vertices, self.frozen, c)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, self.frozen, Counter({(v, u): m for (u, v), m in self.arrows.items()}))

    def delete_vertex(self, x) -> "Quiver":
        vs = tuple(v for v in self.vertices if v != x)
        arrows = Counter({a: m for a, m in self.arrows.items() if x not in a})
        return Quiver(vs, self.frozen - {x}, arrows)

    def add_arrows(self, arrows: Iterable[tuple]) -> "Quiver":
        c = Counter(self.arrows)
        for u, v in arrows:
            c[(u, v)] += 1
        return Quiver(self.vertices, self.frozen, c)

    def degree_signature(self, v) -> tuple:
        outd = sum(m for (a, _), m in self.arrows.items() if a == v)
        ind = sum(m for (_, b), m in self.arrows.items() if b == v)
        return (v in self.frozen, outd, ind)

    # matrix interchange ------------------------------------------------
    def to_matrix(self) -> tuple[tuple, Matrix]:
        """Return (vertex order, extended exchange matrix); rows = mutable vertices."""
        order = self.ordered_vertices()
        pos = {v: i for i, v in enumerate(order)}
        nmut = len(self.mutable)
        b = [[0] * len(order) for _ in range(nmut)]
        for (u, v), m in self.arrows.items():
            iu, iv = pos[u], pos[v]
            if iu < nmut:
                b[iu][iv] += m
            if iv < nmut:
                b[iv][iu] -= m
        return order, as_matrix(b)

    @classmethod
    def from_matrix(cls, order: tuple, b: Matrix) -> "Quiver":
        """Inverse of :meth:`to_matrix`; the principal part must be skew-symmetric."""
        nmut = len(b)
        c = Counter()
        for i in range(nmut):
            for j in range(i + 1, len(order)):
                x = b[i][j]
                if j < nmut and b[j][i] != -x:
                    raise ValueError("principal part is not skew-symmetric")
                if x > 0:
                    c[(order[i], order[j])] += x
                elif x < 0:
                    c[(order[j], order[i])] += -x
        return cls(tuple(order), frozenset(order[nmut:]), c)

    # export ----------------------------------------------------------------
    def to_dot(self, name: str = "Q") -> str:
        def lab(v):
            return f'"{v[0]},{v[1]}"' if isinstance(v, tuple) and len(v) == 2 else f'"{v}"'

        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            shape = "box" if v in self.frozen else "circle"
            lines.append(f"  {lab(v)} [shape={shape}];")
        for (u, v), m in sorted(self.arrows.items(), key=lambda t: (str(t[0][0]), str(t[0][1]))):
            extra = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  {lab(u)} -> {lab(v)}{extra};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": [{"label": list(v) if isinstance(v, tuple) else v, "frozen": v in self.frozen}
                         for v in self.vertices],
            "arrows": [{"from": list(u) if isinstance(u, tuple) else u,
                        "to": list(v) if isinstance(v, tuple) else v, "mult": m}
                       for (u, v), m in sorted(self.arrows.items(), key=str)],
        }
