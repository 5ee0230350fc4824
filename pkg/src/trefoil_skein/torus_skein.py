"""The Kauffman bracket skein algebra of the thickened torus.

Elements are finite combinations of the curves ``(p,q)_T`` with canonical
labels (``p > 0``, or ``p == 0`` and ``q > 0``) plus a coefficient on the
empty link.  Multiplication is the product-to-sum rule

    (p,q)_T * (r,s)_T = t^(ps-qr) (p+r,q+s)_T + t^-(ps-qr) (p-r,q-s)_T
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Optional, Union

from .chebyshev import PolyX, s_in_t_basis
from .exactcoeff import Coeff, LaurentT, RatFuncT, coeff_from_json, format_terms, simplify_coeff

Label = tuple[int, int]


def canonicalize(p: int, q: int) -> tuple[Optional[Label], int]:
    """Canonical label for ``(p,q)_T`` and the scalar it carries.

    Returns ``(None, 2)`` for ``(0,0)``, which is the scalar ``T_0 = 2``.
    """
    if p == 0 and q == 0:
        return None, 2
    if p < 0 or (p == 0 and q < 0):
        return (-p, -q), 1
    return (p, q), 1


def is_canonical(label: Label) -> bool:
    p, q = label
    return p > 0 or (p == 0 and q > 0)


def _add_into(d: dict, key, c) -> None:
    v = d.get(key)
    v = c if v is None else v + c
    if v:
        d[key] = v
    else:
        d.pop(key, None)


class TorusSkein:
    """Element of K_t(T^2 x I)."""

    __slots__ = ("unit", "terms", "_hash")

    def __init__(self, unit: Coeff = None, terms: Optional[Mapping[Label, Coeff]] = None):
        self.unit = LaurentT.zero() if unit is None else _coeff(unit)
        clean = {}
        for lab, c in (terms or {}).items():
            lab = (int(lab[0]), int(lab[1]))
            if not is_canonical(lab):
                raise ValueError(f"non-canonical label {lab}; use TorusSkein.curve")
            c = _coeff(c)
            if c:
                clean[lab] = c
        self.terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zero(cls) -> "TorusSkein":
        return cls()

    @classmethod
    def one(cls) -> "TorusSkein":
        return cls(LaurentT.one())

    @classmethod
    def scalar(cls, c) -> "TorusSkein":
        return cls(_coeff(c))

    @classmethod
    def curve(cls, p: int, q: int, c=1) -> "TorusSkein":
        """``c * (p,q)_T`` for any integer pair."""
        c = _coeff(c)
        lab, s = canonicalize(p, q)
        if lab is None:
            return cls(c * s)
        return cls(None, {lab: c})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int, Coeff]], unit=None) -> "TorusSkein":
        out = cls(unit)
        for p, q, c in pairs:
            out = out + cls.curve(p, q, c)
        return out

    # -- algebra ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.unit and not self.terms

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other: "TorusSkein") -> "TorusSkein":
        if not isinstance(other, TorusSkein):
            return NotImplemented
        terms = dict(self.terms)
        for lab, c in other.terms.items():
            _add_into(terms, lab, c)
        return TorusSkein(self.unit + other.unit, terms)

    def __neg__(self):
        return TorusSkein(-self.unit, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TorusSkein":
        c = _coeff(c)
        return TorusSkein(self.unit * c, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentT, RatFuncT)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TorusSkein):
            return mul(self, other)
        if isinstance(other, (int, LaurentT, RatFuncT)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TorusSkein):
            return NotImplemented
        return self.unit == other.unit and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.unit, frozenset(self.terms.items())))
        return self._hash

    def items(self):
        """``(label or None, coeff)`` pairs in lexicographic label order, unit first."""
        out = []
        if self.unit:
            out.append((None, self.unit))
        out.extend(sorted(self.terms.items()))
        return out

    def max_p(self) -> int:
        return max((p for p, _ in self.terms), default=0)

    def map_coeffs(self, f) -> "TorusSkein":
        return TorusSkein(f(self.unit) if self.unit else self.unit,
                          {k: f(v) for k, v in self.terms.items()})

    def specialize(self, t0) -> "TorusSkein":
        return self.map_coeffs(lambda c: LaurentT.const(c.specialize(t0)))

    def simplify(self) -> "TorusSkein":
        return self.map_coeffs(simplify_coeff)

    # -- text / json -----------------------------------------------------------
    def __str__(self):
        pairs = [(c, "" if lab is None else f"T({lab[0]},{lab[1]})") for lab, c in self.items()]
        return format_terms(pairs)

    def __repr__(self):
        return f"TorusSkein({self})"

    def to_json(self) -> dict:
        return {
            "type": "torus_skein",
            "unit": self.unit.to_json(),
            "terms": [{"p": p, "q": q, "c": c.to_json()} for (p, q), c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj) -> "TorusSkein":
        if obj.get("type") != "torus_skein":
            raise ValueError(f"expected a torus_skein object, got {obj.get('type')!r}")
        out = cls(coeff_from_json(obj.get("unit", {})))
        for term in obj.get("terms", []):
            out = out + cls.curve(term["p"], term["q"], coeff_from_json(term["c"]))
        return out


def _coeff(c) -> Coeff:
    if isinstance(c, (LaurentT, RatFuncT)):
        return c
    return LaurentT.const(c)


def mul_labels(a: Label, b: Label) -> TorusSkein:
    """Product-to-sum for two curves (labels need not be canonical)."""
    p, q = a
    r, s = b
    d = p * s - q * r
    return TorusSkein.curve(p + r, q + s, LaurentT.mono(d)) + TorusSkein.curve(p - r, q - s, LaurentT.mono(-d))


def mul(a: TorusSkein, b: TorusSkein) -> TorusSkein:
    """Bilinear extension of the product-to-sum formula."""
    unit = a.unit * b.unit
    terms: dict = {}
    if a.unit:
        for lab, c in b.terms.items():
            _add_into(terms, lab, a.unit * c)
    if b.unit:
        for lab, c in a.terms.items():
            _add_into(terms, lab, c * b.unit)
    for la, ca in a.terms.items():
        for lb, cb in b.terms.items():
            c = ca * cb
            prod = mul_labels(la, lb)
            if prod.unit:
                unit = unit + c * prod.unit
            for lab, e in prod.terms.items():
                _add_into(terms, lab, c * e)
    return TorusSkein(unit, terms)


def jw_to_t(p: int, q: int) -> TorusSkein:
    """``(p,q)_JW = S_n(curve)`` expanded in the ``T`` basis, ``n = gcd(p,q)``.

    A non-canonical direction (``p < 0``, or ``p == 0`` and ``q < 0``) is read as
    a negative color on the canonical curve, ``S_{-n} = -S_{n-2}``.
    """
    n = gcd(p, q)
    if n == 0:
        return TorusSkein.one()
    (cp, cq), _ = canonicalize(p // n, q // n)
    color = n if is_canonical((p, q)) else -n
    out = TorusSkein.zero()
    for k, c in s_in_t_basis(color).items():
        if k == 0:
            out = out + TorusSkein.scalar(c)
        else:
            out = out + TorusSkein.curve(k * cp, k * cq, c)
    return out


def poly_of_meridian(poly: PolyX) -> TorusSkein:
    """Evaluate a one-variable polynomial at the curve ``(0,1)``."""
    out = TorusSkein.zero()
    if poly.basis == "power":
        x = TorusSkein.curve(0, 1)
        power = TorusSkein.one()
        for k in range(poly.degree() + 1):
            c = poly.coeffs.get(k)
            if c:
                out = out + power.scale(c)
            power = mul(power, x)
        return out
    for k, c in poly.coeffs.items():
        if poly.basis == "T":
            term = TorusSkein.scalar(1) if k == 0 else TorusSkein.curve(0, k)
        else:
            term = jw_to_t(0, k)
        out = out + term.scale(c)
    return out


def mirror(u: TorusSkein) -> TorusSkein:
    """Mirror image: ``(p,q) -> (p,-q)`` and ``t -> 1/t`` on every coefficient."""
    out = TorusSkein(u.unit.invert_t() if u.unit else None)
    for (p, q), c in u.terms.items():
        out = out + TorusSkein.curve(p, -q, c.invert_t())
    return out
