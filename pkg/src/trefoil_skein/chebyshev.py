"""Chebyshev families ``T_n`` and ``S_n`` for all integer ``n``.

Both satisfy ``F_{n+1} = x F_n - F_{n-1}``; ``T_0 = 2, T_1 = x`` and
``S_0 = 1, S_1 = x``.  Extending the recurrence backwards gives
``T_{-n} = T_n`` and ``S_{-n} = -S_{n-2}`` (so ``S_{-1} = 0``).

In the ``T`` basis the degree-0 slot holds a plain constant rather than a
multiple of ``T_0``; this matches the torus algebra, where ``(0,0)_T`` is the
scalar 2 and never a basis curve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .exactcoeff import LaurentT

BASES = ("power", "T", "S")


def _clean(coeffs: Mapping[int, LaurentT]) -> dict:
    return {int(k): v for k, v in coeffs.items() if v}


@dataclass(frozen=True)
class PolyX:
    """Polynomial in one variable ``x`` with ``LaurentT`` coefficients."""

    coeffs: Mapping[int, LaurentT] = field(default_factory=dict)
    basis: str = "power"

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if any(k < 0 for k in self.coeffs):
            raise ValueError("PolyX degrees must be nonnegative")
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, PolyX):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __add__(self, other: "PolyX") -> "PolyX":
        if self.basis != other.basis:
            other = convert(other, self.basis)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, LaurentT.zero()) + v
        return PolyX(out, self.basis)

    def __neg__(self):
        return PolyX({k: -v for k, v in self.coeffs.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyX":
        return PolyX({k: v * c for k, v in self.coeffs.items()}, self.basis)

    def __mul__(self, other: "PolyX") -> "PolyX":
        a, b = convert(self, "power"), convert(other, "power")
        out: dict = {}
        for i, u in a.coeffs.items():
            for j, v in b.coeffs.items():
                out[i + j] = out.get(i + j, LaurentT.zero()) + u * v
        return convert(PolyX(out, "power"), self.basis)

    def to_json(self) -> dict:
        return {"basis": self.basis, "coeffs": {str(k): v.to_json() for k, v in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, obj) -> "PolyX":
        return cls({int(k): LaurentT.from_json(v) for k, v in obj["coeffs"].items()}, obj["basis"])

    def __str__(self):
        if not self.coeffs:
            return "0"
        name = {"power": "x^{}", "T": "T_{}", "S": "S_{}"}[self.basis]
        parts = []
        for k, v in sorted(self.coeffs.items(), reverse=True):
            if self.basis == "T" and k == 0:
                parts.append(f"({v})")
            else:
                parts.append(f"({v})*{name.format(k)}")
        return " + ".join(parts)


def _x_times(p: dict) -> dict:
    return {k + 1: v for k, v in p.items()}


def _lin(a: dict, b: dict, sb: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, LaurentT.zero()) + v.scale(sb)
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _family(n: int, f0: int) -> tuple:
    """Power-basis coefficients of the family with ``F_0 = f0``, ``F_1 = x``."""
    one = LaurentT.one()
    if n == 0:
        return tuple(sorted({0: one.scale(f0)}.items()))
    if n == 1:
        return ((1, one),)
    if n < 0:
        raise ValueError("negative indices go through t_poly / s_index_normalize")
    prev = dict(_family(n - 1, f0))
    prev2 = dict(_family(n - 2, f0))
    return tuple(sorted(_lin(_x_times(prev), prev2, -1).items()))


def t_poly(n: int) -> PolyX:
    """``T_n`` in the power basis."""
    return PolyX(dict(_family(abs(n), 2)), "power")


def s_poly(n: int) -> PolyX:
    """``S_n`` in the power basis; ``S_{-1} = 0`` and ``S_{-n} = -S_{n-2}``."""
    out = s_index_normalize(n, LaurentT.one())
    if not out:
        return PolyX({}, "power")
    (k, c), = out
    return PolyX(dict(_family(k, 1)), "power").scale(c)


def s_index_normalize(n: int, c) -> list:
    """Rewrite the formal term ``c * S_n`` with a nonnegative index."""
    if not c:
        return []
    if n >= 0:
        return [(n, c)]
    if n == -1:
        return []
    return [(-n - 2, -c)]


def _from_power(p: dict, basis: str) -> dict:
    """Peel leading terms: ``S_d`` and ``T_d`` (d >= 1) are monic of degree d."""
    rem = dict(p)
    out: dict = {}
    while rem:
        d = max(rem)
        c = rem[d]
        if d == 0:
            out[0] = out.get(0, LaurentT.zero()) + c
            break
        out[d] = c
        gen = dict(_family(d, 1 if basis == "S" else 2))
        rem = _lin(rem, {k: v * c for k, v in gen.items()}, -1)
    return {k: v for k, v in out.items() if v}


def convert(p: PolyX, target: str) -> PolyX:
    """Re-express ``p`` in the ``target`` basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if p.basis == target:
        return p
    # go through the power basis
    if p.basis == "power":
        power = dict(p.coeffs)
    else:
        power = {}
        for k, c in p.coeffs.items():
            if p.basis == "T" and k == 0:
                power = _lin(power, {0: c})
                continue
            gen = dict(_family(k, 1 if p.basis == "S" else 2))
            power = _lin(power, {d: v * c for d, v in gen.items()})
    if target == "power":
        return PolyX(power, "power")
    return PolyX(_from_power(power, target), target)


def s_in_t_basis(n: int) -> dict:
    """``S_n = T_n + T_{n-2} + ...`` ending in the constant 1 when n is even.

    Keys are indices of ``T``; key 0 is the plain constant.  Negative ``n``
    goes through ``S_{-n} = -S_{n-2}``.
    """
    out = s_index_normalize(n, 1)
    if not out:
        return {}
    (k, sign), = out
    res = {}
    while k > 0:
        res[k] = sign
        k -= 2
    if k == 0:
        res[0] = sign
    return res


def t_in_s_basis(n: int) -> dict:
    """``T_n = S_n - S_{n-2}`` for n >= 1, ``T_0 = 2 S_0``; keys are S-indices >= 0."""
    n = abs(n)
    if n == 0:
        return {0: 2}
    out: dict = {}
    for idx, c in ((n, 1), (n - 2, -1)):
        for k, v in s_index_normalize(idx, c):
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}
