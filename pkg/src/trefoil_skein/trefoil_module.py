"""Skein module of the trefoil complement as a module over the torus algebra.

Elements are written in the basis ``S_n(x)`` and ``S_n(x) y`` (n >= 0), where
``S_n(x) y`` is the action of ``(0,n)_JW`` on ``y``.

The evaluator is recursive.  The seed rows are

* ``p = 0``: ``(0,q)_T`` acts as multiplication by ``T_q(x) = S_q - S_{q-2}``;
* ``p = 1``: ``pi((1,q)_T) = t^{q+6}S_{q+6} - t^{q+2}S_q + t^{q+4}S_{q+4}y - t^q S_q y``
  and ``(1,q)_T . y = t^q S_{q-2} - t^{q+8}S_{q+6} + t^{q-2}S_{q-2}y - t^{q+6}S_{q+4}y``;

and higher rows follow from ``(1,0)_T * (p,q)_T = t^q (p+1,q)_T + t^-q (p-1,q)_T``.
The right-handed trefoil is handled by mirroring: ``(p,q) -> (p,-q)``, ``t -> 1/t``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Union

from .chebyshev import s_index_normalize, t_in_s_basis
from .exactcoeff import Coeff, LaurentT, RatFuncT, coeff_from_json, format_terms, simplify_coeff
from .torus_skein import TorusSkein, canonicalize, jw_to_t, mirror as mirror_skein, mul

T = LaurentT.mono


class Chirality(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def _chir(c: Union[Chirality, str]) -> Chirality:
    return Chirality(c) if not isinstance(c, Chirality) else c


def _add_into(d: dict, key, c) -> None:
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class ModuleElt:
    """``sum s[n] S_n(x) + sum sy[n] S_n(x) y`` with ``n >= 0``."""

    __slots__ = ("s", "sy", "_hash")

    def __init__(self, s: Optional[Mapping[int, Coeff]] = None, sy: Optional[Mapping[int, Coeff]] = None):
        self.s = self._clean(s)
        self.sy = self._clean(sy)
        self._hash = None

    @staticmethod
    def _clean(d) -> dict:
        out = {}
        for n, c in (d or {}).items():
            if n < 0:
                raise ValueError("ModuleElt indices must be nonnegative; use ModuleElt.term")
            if not isinstance(c, (LaurentT, RatFuncT)):
                c = LaurentT.const(c)
            if c:
                out[int(n)] = c
        return out

    @classmethod
    def term(cls, n: int, c=1, y: bool = False) -> "ModuleElt":
        """``c * S_n(x)`` (or ``c * S_n(x) y``) for any integer ``n``."""
        if not isinstance(c, (LaurentT, RatFuncT)):
            c = LaurentT.const(c)
        part = {k: v for k, v in s_index_normalize(n, c)}
        return cls(None, part) if y else cls(part, None)

    @classmethod
    def unit(cls) -> "ModuleElt":
        return cls.term(0)

    @classmethod
    def y(cls) -> "ModuleElt":
        return cls.term(0, y=True)

    def is_zero(self) -> bool:
        return not self.s and not self.sy

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        if not isinstance(other, ModuleElt):
            return NotImplemented
        s, sy = dict(self.s), dict(self.sy)
        for n, c in other.s.items():
            _add_into(s, n, c)
        for n, c in other.sy.items():
            _add_into(sy, n, c)
        return ModuleElt(s, sy)

    def __neg__(self):
        return ModuleElt({n: -c for n, c in self.s.items()}, {n: -c for n, c in self.sy.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ModuleElt":
        if not isinstance(c, (LaurentT, RatFuncT)):
            c = LaurentT.const(c)
        return ModuleElt({n: v * c for n, v in self.s.items()}, {n: v * c for n, v in self.sy.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, LaurentT, RatFuncT)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ModuleElt):
            return NotImplemented
        return self.s == other.s and self.sy == other.sy

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.s.items()), frozenset(self.sy.items())))
        return self._hash

    def map_coeffs(self, f) -> "ModuleElt":
        return ModuleElt({n: f(c) for n, c in self.s.items()}, {n: f(c) for n, c in self.sy.items()})

    def specialize(self, t0) -> "ModuleElt":
        return self.map_coeffs(lambda c: LaurentT.const(c.specialize(t0)))

    def simplify(self) -> "ModuleElt":
        return self.map_coeffs(simplify_coeff)

    def x_times(self) -> "ModuleElt":
        """Multiply by ``x``: ``x S_n = S_{n+1} + S_{n-1}``."""
        out = ModuleElt()
        for n, c in self.s.items():
            out = out + ModuleElt.term(n + 1, c) + ModuleElt.term(n - 1, c)
        for n, c in self.sy.items():
            out = out + ModuleElt.term(n + 1, c, True) + ModuleElt.term(n - 1, c, True)
        return out

    def __str__(self):
        pairs = [(c, f"S({n})") for n, c in sorted(self.s.items(), reverse=True)]
        pairs += [(c, f"S({n})*y") for n, c in sorted(self.sy.items(), reverse=True)]
        return format_terms(pairs)

    def __repr__(self):
        return f"ModuleElt({self})"

    def to_json(self) -> dict:
        return {
            "type": "module_elt",
            "s": [{"n": n, "c": c.to_json()} for n, c in sorted(self.s.items())],
            "sy": [{"n": n, "c": c.to_json()} for n, c in sorted(self.sy.items())],
        }

    @classmethod
    def from_json(cls, obj) -> "ModuleElt":
        if obj.get("type") != "module_elt":
            raise ValueError(f"expected a module_elt object, got {obj.get('type')!r}")
        return cls({e["n"]: coeff_from_json(e["c"]) for e in obj.get("s", [])},
                   {e["n"]: coeff_from_json(e["c"]) for e in obj.get("sy", [])})


# ---------------------------------------------------------------------------
# authoritative recursive evaluator (left-handed trefoil)


def _t_of_x(q: int, y: bool) -> ModuleElt:
    """``T_q(x)`` or ``T_q(x) y`` in the S basis."""
    out = ModuleElt()
    for n, c in t_in_s_basis(q).items():
        out = out + ModuleElt.term(n, c, y)
    return out


def _pi_p1(q: int) -> ModuleElt:
    return (ModuleElt.term(q + 6, T(q + 6)) - ModuleElt.term(q, T(q + 2))
            + ModuleElt.term(q + 4, T(q + 4), True) - ModuleElt.term(q, T(q), True))


def _act_y_p1(q: int) -> ModuleElt:
    return (ModuleElt.term(q - 2, T(q)) - ModuleElt.term(q + 6, T(q + 8))
            + ModuleElt.term(q - 2, T(q - 2), True) - ModuleElt.term(q + 4, T(q + 6), True))


def _pair_value(p: int, q: int, on_y: bool) -> ModuleElt:
    """Image of ``(p,q)_T`` acting on 1 or ``y``, for any integer pair."""
    lab, s = canonicalize(p, q)
    if lab is None:
        return (ModuleElt.y() if on_y else ModuleElt.unit()).scale(s)
    return _label_value(lab[0], lab[1], on_y)


@lru_cache(maxsize=None)
def _label_value(p: int, q: int, on_y: bool) -> ModuleElt:
    if p == 0:
        return _t_of_x(q, on_y)
    if p == 1:
        return _act_y_p1(q) if on_y else _pi_p1(q)
    # (p,q) = t^-q [ (1,0) * (p-1,q) - t^-q (p-2,q) ]
    prev = _label_value(p - 1, q, on_y)
    lifted = _act_label_left(1, 0, prev)
    return (lifted - _pair_value(p - 2, q, on_y).scale(T(-q))).scale(T(-q))


@lru_cache(maxsize=None)
def _act_on_basis(p: int, q: int, n: int, on_y: bool) -> ModuleElt:
    """``(p,q)_T`` acting on ``S_n(x)`` (or ``S_n(x) y``): lift ``S_n(x)`` to ``(0,n)_JW``."""
    prod = mul(TorusSkein.curve(p, q), jw_to_t(0, n))
    return _eval_skein_left(prod, on_y)


def _eval_skein_left(u: TorusSkein, on_y: bool) -> ModuleElt:
    base = ModuleElt.y() if on_y else ModuleElt.unit()
    out = base.scale(u.unit) if u.unit else ModuleElt()
    for (p, q), c in u.terms.items():
        out = out + _label_value(p, q, on_y).scale(c)
    return out


def _act_label_left(p: int, q: int, v: ModuleElt) -> ModuleElt:
    out = ModuleElt()
    for n, c in v.s.items():
        out = out + _act_on_basis(p, q, n, False).scale(c)
    for n, c in v.sy.items():
        out = out + _act_on_basis(p, q, n, True).scale(c)
    return out


def _act_left(u: TorusSkein, v: ModuleElt) -> ModuleElt:
    out = v.scale(u.unit) if u.unit else ModuleElt()
    for (p, q), c in u.terms.items():
        out = out + _act_label_left(p, q, v).scale(c)
    return out


def mirror(obj):
    """Mirror a ``TorusSkein`` or ``ModuleElt``: ``(p,q) -> (p,-q)``, ``t -> 1/t``."""
    if isinstance(obj, TorusSkein):
        return mirror_skein(obj)
    if isinstance(obj, ModuleElt):
        return obj.map_coeffs(lambda c: c.invert_t())
    raise TypeError(f"cannot mirror {type(obj).__name__}")


def act(u: TorusSkein, v: ModuleElt, chirality: Union[Chirality, str] = Chirality.LEFT) -> ModuleElt:
    """Left action ``u . v`` of the torus algebra on the trefoil-complement module."""
    if _chir(chirality) is Chirality.LEFT:
        return _act_left(u, v)
    return mirror(_act_left(mirror(u), mirror(v)))


def pi(u: TorusSkein, chirality: Union[Chirality, str] = Chirality.LEFT) -> ModuleElt:
    """Image of a boundary skein in the skein module of the trefoil complement."""
    return act(u, ModuleElt.unit(), chirality)


# ---------------------------------------------------------------------------
# closed forms


def _eps(k: int) -> int:
    return k & 1


def _drop(k: int) -> int:
    # exponent deficit of the k-th inner term; for odd k = 2j+1 it is (j+1)(6j+4),
    # for even k = 2j it is j(6j+2)
    return ((k + 1) // 2) * (6 * (k // 2) + 2 + 2 * _eps(k))


def pi_closed(p: int, q: int, chirality: Union[Chirality, str] = Chirality.LEFT) -> ModuleElt:
    """Closed form for ``pi((p,q)_T)``, ``p >= 1``.

    Left-handed:

        t^{6p^2+pq} S_{q+6p} + t^{6p^2+pq-2} S_{q+6p-2} y
        + sum_{k=1}^{2p-1} (-1)^[(k+1)/2] t^{6p^2 - D_k + pq} S_{q+6p-3k-eps_k-2} (1 + t^-2 y)

    with ``D_k = [(k+1)/2] (6[k/2] + 2 + 2 eps_k)``.  The right-handed form
    negates the ``q``-free part of every exponent and reads ``S`` indices at ``-q``.
    """
    if p < 1:
        raise ValueError("closed forms need p >= 1")
    sg = 1 if _chir(chirality) is Chirality.LEFT else -1
    qq = sg * q
    lead = 6 * p * p
    out = (ModuleElt.term(qq + 6 * p, T(sg * lead + p * q))
           + ModuleElt.term(qq + 6 * p - 2, T(sg * (lead - 2) + p * q), True))
    for k in range(1, 2 * p):
        idx = qq + 6 * p - 3 * k - _eps(k) - 2
        c = T(sg * (lead - _drop(k)) + p * q, (-1) ** ((k + 1) // 2))
        out = out + ModuleElt.term(idx, c) + ModuleElt.term(idx, c * T(-2 * sg), True)
    return out


def act_y_closed(p: int, q: int, chirality: Union[Chirality, str] = Chirality.LEFT) -> ModuleElt:
    """Closed form for ``(p,q)_T . y``, ``p >= 1``.

    Left-handed:

        -t^{6p^2+pq+2} S_{q+6p} - t^{6p^2+pq} S_{q+6p-2} y
        + sum_{k=1}^{2p-2} (-1)^[(k-1)/2] t^{6p^2 - D_k + pq} S_{q+6p-3k-eps_k-2} (t^2 + y)
        + (-1)^{p-1} t^{p(q-2)} S_{q-2} (t^2 + y)
    """
    if p < 1:
        raise ValueError("closed forms need p >= 1")
    sg = 1 if _chir(chirality) is Chirality.LEFT else -1
    qq = sg * q
    lead = 6 * p * p
    out = (ModuleElt.term(qq + 6 * p, -T(sg * (lead + 2) + p * q))
           - ModuleElt.term(qq + 6 * p - 2, T(sg * lead + p * q), True))
    for k in range(1, 2 * p - 1):
        idx = qq + 6 * p - 3 * k - _eps(k) - 2
        c = T(sg * (lead - _drop(k)) + p * q, (-1) ** ((k - 1) // 2))
        out = out + ModuleElt.term(idx, c * T(2 * sg)) + ModuleElt.term(idx, c, True)
    c = T(p * q - sg * 2 * p, (-1) ** (p - 1))
    out = out + ModuleElt.term(qq - 2, c * T(2 * sg)) + ModuleElt.term(qq - 2, c, True)
    return out


def pi_closed_literal(p: int, q: int) -> ModuleElt:
    """The left-handed ``pi`` closed form transcribed literally (kept for comparison).

    Differs from :func:`pi_closed` in the sign of ``eps_k`` in the ``S`` index and
    in the exponent deficit ``([k/2]+1)(6[k/2]+4 eps_k)`` for even ``k``.
    """
    out = (ModuleElt.term(q + 6 * p, T(6 * p * p + p * q))
           + ModuleElt.term(q + 6 * p - 2, T(6 * p * p + p * q - 2), True))
    for k in range(1, 2 * p):
        idx = q + 6 * p - 3 * k + _eps(k) - 2
        e = 6 * p * p - (k // 2 + 1) * (6 * (k // 2) + 4 * _eps(k)) + p * q
        c = T(e, (-1) ** ((k + 1) // 2))
        out = out + ModuleElt.term(idx, c) + ModuleElt.term(idx, c * T(-2), True)
    return out


# ---------------------------------------------------------------------------
# peripheral element for y and powers of y


def peripheral_y(chirality: Union[Chirality, str] = Chirality.LEFT) -> TorusSkein:
    """Boundary skein ``u`` with ``pi(u) = (t^4 - t^-4) y`` (mirrored for the right trefoil)."""
    u = TorusSkein.from_pairs(
        [(1, -4, T(4)), (1, -2, -T(-2)), (0, 4, T(2)), (0, 2, -T(6))],
        unit=T(-2) - T(6),
    )
    return u if _chir(chirality) is Chirality.LEFT else mirror_skein(u)


def peripheral_factor(chirality: Union[Chirality, str] = Chirality.LEFT) -> LaurentT:
    f = T(4) - T(-4)
    return f if _chir(chirality) is Chirality.LEFT else f.invert_t()


def y_power_check(k: int, chirality: Union[Chirality, str] = Chirality.LEFT) -> ModuleElt:
    """``y^k`` computed as ``(u / f)^(k-1) . y`` with ``pi(u) = f y`` over Q(t)."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    u = peripheral_y(chirality)
    inv = RatFuncT(LaurentT.one(), peripheral_factor(chirality))
    v = ModuleElt.y()
    for _ in range(k - 1):
        v = act(u, v, chirality).scale(inv)
    return v.simplify()


# ---------------------------------------------------------------------------
# commutative structure at t = -1


def s_product(a: int, b: int) -> dict:
    """``S_a S_b = sum_{j=0}^{min(a,b)} S_{a+b-2j}`` for ``a, b >= 0``."""
    return {a + b - 2 * j: 1 for j in range(min(a, b) + 1)}


def commutative_product(v: ModuleElt, w: ModuleElt, y_squared: ModuleElt) -> ModuleElt:
    """Product in the commutative algebra ``Q(t)[x][y] / (y^2 - y_squared)``.

    Only meaningful where the skein module is an algebra (``t = ±1``).
    """
    parts = [(v.s, False), (v.sy, True)]
    wparts = [(w.s, False), (w.sy, True)]
    out = ModuleElt()
    for pv, yv in parts:
        for pw, yw in wparts:
            for a, ca in pv.items():
                for b, cb in pw.items():
                    c = ca * cb
                    for n, mlt in s_product(a, b).items():
                        piece = ModuleElt.term(n, c.scale(mlt) if isinstance(c, LaurentT) else c * mlt)
                        if yv and yw:
                            out = out + _times_s_elt(piece, y_squared)
                        elif yv or yw:
                            out = out + ModuleElt(None, piece.s)
                        else:
                            out = out + piece
    return out


def _times_s_elt(piece: ModuleElt, w: ModuleElt) -> ModuleElt:
    out = ModuleElt()
    for a, ca in piece.s.items():
        for part, on_y in ((w.s, False), (w.sy, True)):
            for b, cb in part.items():
                for n, mlt in s_product(a, b).items():
                    out = out + ModuleElt.term(n, ca * cb * mlt, on_y)
    return out


def stated_y_squared(chirality: Union[Chirality, str] = Chirality.LEFT) -> ModuleElt:
    """``y^2 = -t^2 S_2 y - t^4 S_2 + S_0`` (mirrored for the right trefoil)."""
    v = ModuleElt.term(2, -T(2), True) - ModuleElt.term(2, T(4)) + ModuleElt.term(0)
    return v if _chir(chirality) is Chirality.LEFT else mirror(v)


def stated_y_cubed(chirality: Union[Chirality, str] = Chirality.LEFT) -> ModuleElt:
    """``y^3 = t^4 S_4 y + 2 S_0 y + t^6 S_4 + t^10 S_0`` (mirrored for the right trefoil)."""
    v = (ModuleElt.term(4, T(4), True) + ModuleElt.term(0, 2, True)
         + ModuleElt.term(4, T(6)) + ModuleElt.term(0, T(10)))
    return v if _chir(chirality) is Chirality.LEFT else mirror(v)
