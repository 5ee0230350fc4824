"""Noncommutative torus ``Q(t)[l^±1, m^±1]`` with ``l m = t^2 m l``.

Monomials are kept normal ordered, all ``l`` before all ``m``; a term
``(a, b) -> c`` means ``c * l^a m^b``.  Moving ``m^b`` past ``l^c`` costs
``t^(-2bc)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional

from .exactcoeff import Coeff, LaurentT, RatFuncT, as_ratfunc, coeff_from_json, format_terms
from .torus_skein import TorusSkein

Mono = tuple[int, int]


class QTorusPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Mono, Coeff]] = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if not isinstance(c, (LaurentT, RatFuncT)):
                c = LaurentT.const(c)
            if c:
                clean[(int(a), int(b))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def mono(cls, a: int, b: int, c=1) -> "QTorusPoly":
        """``c * l^a m^b`` (already normal ordered)."""
        return cls({(a, b): c})

    @classmethod
    def scalar(cls, c) -> "QTorusPoly":
        return cls({(0, 0): c})

    @classmethod
    def one(cls) -> "QTorusPoly":
        return cls.scalar(1)

    @classmethod
    def l(cls) -> "QTorusPoly":
        return cls.mono(1, 0)

    @classmethod
    def m(cls) -> "QTorusPoly":
        return cls.mono(0, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, QTorusPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return QTorusPoly(out)

    def __neg__(self):
        return QTorusPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "QTorusPoly":
        if not isinstance(c, (LaurentT, RatFuncT)):
            c = LaurentT.const(c)
        return QTorusPoly({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QTorusPoly):
            return qt_mul(self, other)
        if isinstance(other, (int, Fraction, LaurentT, RatFuncT)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction, LaurentT, RatFuncT)):
            return self.scale(c)
        return NotImplemented

    def __pow__(self, n: int) -> "QTorusPoly":
        out = QTorusPoly.one()
        for _ in range(n):
            out = qt_mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, QTorusPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def l_range(self) -> tuple[int, int]:
        a = [k[0] for k in self.terms]
        return min(a), max(a)

    def m_range(self) -> tuple[int, int]:
        b = [k[1] for k in self.terms]
        return min(b), max(b)

    def is_plane(self) -> bool:
        """True when every exponent is nonnegative (an element of the quantum plane)."""
        return all(a >= 0 and b >= 0 for a, b in self.terms)

    def map_coeffs(self, f) -> "QTorusPoly":
        return QTorusPoly({k: f(v) for k, v in self.terms.items()})

    def items(self):
        return sorted(self.terms.items())

    def __str__(self):
        pairs = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            atoms = []
            if a:
                atoms.append("l" if a == 1 else f"l^{a}")
            if b:
                atoms.append("m" if b == 1 else f"m^{b}")
            pairs.append((c, "*".join(atoms)))
        return format_terms(pairs)

    def __repr__(self):
        return f"QTorusPoly({self})"

    def to_json(self) -> dict:
        return {"type": "qtorus",
                "terms": [{"l": a, "m": b, "c": c.to_json()} for (a, b), c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj) -> "QTorusPoly":
        if obj.get("type") != "qtorus":
            raise ValueError(f"expected a qtorus object, got {obj.get('type')!r}")
        out = cls()
        for term in obj.get("terms", []):
            out = out + cls.mono(term["l"], term["m"], coeff_from_json(term["c"]))
        return out


# alias used where only nonnegative exponents are meaningful
PlanePoly = QTorusPoly


def qt_mul(f: QTorusPoly, g: QTorusPoly) -> QTorusPoly:
    """``(l^a m^b)(l^c m^d) = t^(-2bc) l^(a+c) m^(b+d)``, bilinearly."""
    out: dict = {}
    for (a, b), x in f.terms.items():
        for (c, d), y in g.terms.items():
            k = (a + c, b + d)
            v = (x * y) * LaurentT.mono(-2 * b * c)
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
    return QTorusPoly(out)


def e_monomial(p: int, q: int) -> QTorusPoly:
    """Noncommutative exponential ``e_{p,q} = t^(-pq) l^p m^q``."""
    return QTorusPoly.mono(p, q, LaurentT.mono(-p * q))


def cos_sin(p: int, q: int, kind: str = "cos") -> QTorusPoly:
    """``cos_t(p,q)`` or ``sin_t(p,q)``: ``(e_{p,q} ± e_{-p,-q}) / 2``."""
    if kind not in ("cos", "sin"):
        raise ValueError(f"kind must be 'cos' or 'sin', not {kind!r}")
    sign = 1 if kind == "cos" else -1
    return (e_monomial(p, q) + e_monomial(-p, -q).scale(sign)).scale(Fraction(1, 2))


def embed(s: TorusSkein) -> QTorusPoly:
    """Algebra map sending ``(p,q)_T`` to ``2 cos_t(p,q)`` and the empty link to 1."""
    out = QTorusPoly.scalar(s.unit) if s.unit else QTorusPoly()
    for (p, q), c in s.terms.items():
        out = out + (e_monomial(p, q) + e_monomial(-p, -q)).scale(c)
    return out


def clear_to_plane(f: QTorusPoly) -> tuple[QTorusPoly, QTorusPoly]:
    """Left-multiply by the smallest ``l^a m^b`` (``a, b >= 0``) that lands ``f`` in the quantum plane.

    Returns ``(g, multiplier)`` with ``g = multiplier * f``.  Only negative
    exponents are cleared; a polynomial already in the plane is returned as is.
    """
    if f.is_zero():
        raise ValueError("cannot clear the zero polynomial")
    amin, _ = f.l_range()
    bmin, _ = f.m_range()
    mult = QTorusPoly.mono(max(0, -amin), max(0, -bmin))
    return qt_mul(mult, f), mult


def inverse_monomial(mult: QTorusPoly) -> QTorusPoly:
    """Two-sided inverse of ``c * l^a m^b``."""
    (ab, c), = mult.terms.items()
    a, b = ab
    inv = c ** -1 if isinstance(c, LaurentT) and c.is_monomial() else as_ratfunc(c).inverse()
    # (l^a m^b)(l^-a m^-b) = t^(2ab)
    return QTorusPoly.mono(-a, -b, inv * LaurentT.mono(-2 * a * b))


def equal_up_to_unit(f: QTorusPoly, g: QTorusPoly) -> Optional[tuple[Fraction, int]]:
    """``(c, k)`` with ``f == c t^k g`` if such a unit exists, else ``None``."""
    if f.is_zero() or g.is_zero():
        return (Fraction(1), 0) if f.is_zero() and g.is_zero() else None
    if set(f.terms) != set(g.terms):
        return None
    key = min(g.terms)
    fc, gc = f.terms[key], g.terms[key]
    if not (isinstance(fc, LaurentT) and isinstance(gc, LaurentT)):
        fc, gc = _laurent(fc), _laurent(gc)
        if fc is None or gc is None:
            return None
    if len(fc.terms) != len(gc.terms):
        return None
    k = fc.max_exp() - gc.max_exp()
    c = fc.terms[fc.max_exp()] / gc.terms[gc.max_exp()]
    unit = LaurentT.mono(k, c)
    if g.scale(unit) == f:
        return c, k
    return None


def _laurent(c):
    if isinstance(c, LaurentT):
        return c
    if isinstance(c, RatFuncT) and c.is_laurent():
        return c.num
    return None


def specialize_t(f: QTorusPoly, t0) -> QTorusPoly:
    """Specialize every coefficient at ``t = t0`` (``t0 != 0``)."""
    return f.map_coeffs(lambda c: LaurentT.const(c.specialize(t0)))


def commutative_terms(f: QTorusPoly) -> dict:
    """Plain ``{(a, b): Fraction}`` view of a polynomial with constant coefficients."""
    out = {}
    for k, c in f.terms.items():
        if isinstance(c, RatFuncT):
            c = c.to_laurent()
        out[k] = c.const_value()
    return out
