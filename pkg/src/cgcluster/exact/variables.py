"""Variable identifiers and the session-wide variable registry.

Every polynomial in the package is keyed by packed integer monomials; the
registry fixes which digit of the packed key belongs to which variable.
"""
from __future__ import annotations

import threading
from typing import NamedTuple

# kind ranks drive the canonical (printing / leading-term) order
_KIND_RANK = {"x": 0, "chart": 1, "param": 2, "atom": 3}


class VarId(NamedTuple):
    """A variable: matrix entry ``x[i][j]``, a chart variable, a formal
    parameter, or a formal cluster atom (used by generic seeds)."""

    kind: str
    a: object
    b: object = None

    def sort_key(self):
        b = self.b
        return (_KIND_RANK[self.kind], str(type(self.a)), self.a, b is not None, str(type(b)), b if b is not None else 0)

    def __str__(self):
        if self.kind == "x":
            return f"x[{self.a}][{self.b}]"
        if self.kind == "atom":
            return f"z[{self.a}]" if self.b is None else f"z[{self.a}][{self.b}]"
        return str(self.a)


def entry(i: int, j: int) -> VarId:
    return VarId("x", int(i), int(j))


def chart(name: str) -> VarId:
    return VarId("chart", name)


def param(name: str) -> VarId:
    return VarId("param", name)


def atom(a, b=None) -> VarId:
    return VarId("atom", a, b)


class Registry:
    """Assigns each VarId a digit position in packed monomial keys."""

    BITS = 16
    BASE = 1 << BITS
    HALF = 1 << (BITS - 1)
    MASK = BASE - 1

    def __init__(self):
        self._index: dict[VarId, int] = {}
        self._vars: list[VarId] = []
        self._lock = threading.Lock()
        self._bias = 0

    def index(self, v: VarId) -> int:
        idx = self._index.get(v)
        if idx is None:
            with self._lock:
                idx = self._index.get(v)
                if idx is None:
                    idx = len(self._vars)
                    self._vars.append(v)
                    self._index[v] = idx
                    self._bias += self.HALF << (self.BITS * idx)
        return idx

    def var(self, idx: int) -> VarId:
        return self._vars[idx]

    def __len__(self):
        return len(self._vars)

    @property
    def bias(self) -> int:
        # one HALF per registered digit; maps balanced digits to unsigned ones
        return self._bias


REGISTRY = Registry()
