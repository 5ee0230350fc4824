"""Exact coefficient arithmetic in the deformation parameter ``t``.

``LaurentT`` is a sparse Laurent polynomial in ``t`` with rational
coefficients; ``RatFuncT`` is a reduced quotient of two of them.  Both are
immutable and hashable, and equality is structural on canonical forms.
``solve_linear`` does deterministic Gauss-Jordan elimination over ``RatFuncT``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Optional, Sequence, Union

__all__ = [
    "LaurentT",
    "RatFuncT",
    "Coeff",
    "as_ratfunc",
    "rref",
    "nullspace",
    "solve_linear",
    "parse_rational",
    "format_rational",
]


def parse_rational(s: Union[str, int, Fraction]) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(s.strip())


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentT:
    """Laurent polynomial in ``t`` over Q, stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Union[int, Fraction]]] = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = c if isinstance(c, Fraction) else Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentT":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Union[int, Fraction]) -> "LaurentT":
        return cls({0: c})

    @classmethod
    def mono(cls, k: int, c: Union[int, Fraction] = 1) -> "LaurentT":
        """``c * t**k``."""
        return cls({k: c})

    @classmethod
    def zero(cls) -> "LaurentT":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentT":
        return cls._raw({0: Fraction(1)})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> Mapping[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_const(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, Fraction(0))

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> Optional["LaurentT"]:
        if isinstance(other, LaurentT):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            return LaurentT.const(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        res = dict(self._terms)
        for e, c in o._terms.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return LaurentT._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return LaurentT._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return LaurentT._raw({})
        res: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                res[e] = res.get(e, 0) + c1 * c2
        return LaurentT._raw({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self._terms.items()
            return LaurentT._raw({e * n: Fraction(1) / c ** (-n)})
        result = LaurentT.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentT":
        """Multiply by ``t**k``."""
        return LaurentT._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c) -> "LaurentT":
        c = Fraction(c)
        if not c:
            return LaurentT._raw({})
        return LaurentT._raw({e: v * c for e, v in self._terms.items()})

    def invert_t(self) -> "LaurentT":
        """Substitute ``t -> 1/t``."""
        return LaurentT._raw({-e: c for e, c in self._terms.items()})

    def specialize(self, t0) -> Fraction:
        t0 = Fraction(t0)
        if t0 == 0:
            raise ZeroDivisionError("cannot specialize a Laurent polynomial at t = 0")
        return sum((c * t0 ** e for e, c in self._terms.items()), Fraction(0))

    def specialize_mod(self, t0: int, p: int) -> int:
        """Evaluate at ``t = t0`` in GF(p)."""
        inv = pow(t0, -1, p)
        acc = 0
        for e, c in self._terms.items():
            base = pow(t0, e, p) if e >= 0 else pow(inv, -e, p)
            acc += c.numerator * pow(c.denominator, -1, p) * base
        return acc % p

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, RatFuncT):
                return other == self
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- dense polynomial view (for gcd) ------------------------------------
    def to_poly(self) -> tuple[int, list]:
        """Return ``(k, coeffs)`` with ``self = t**k * sum(coeffs[i] t**i)``, coeffs[0] != 0."""
        lo, hi = self.min_exp(), self.max_exp()
        dense = [Fraction(0)] * (hi - lo + 1)
        for e, c in self._terms.items():
            dense[e - lo] = c
        return lo, dense

    @classmethod
    def from_poly(cls, coeffs: Sequence[Fraction], shift: int = 0) -> "LaurentT":
        return cls._raw({i + shift: Fraction(c) for i, c in enumerate(coeffs) if c})

    # -- text / json --------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if e == 0:
                body = format_rational(a)
            else:
                tp = "t" if e == 1 else f"t^{e}"
                body = tp if a == 1 else f"{format_rational(a)}*{tp}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentT({self})"

    def to_json(self) -> dict:
        return {str(e): format_rational(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "LaurentT":
        return cls({int(e): parse_rational(c) for e, c in obj.items()})


# ---------------------------------------------------------------------------
# dense univariate helpers over Q (index = degree)


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        _trim(a)
    return _trim(q), a


def _poly_gcd(a: list, b: list) -> list:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


class RatFuncT:
    """Element of Q(t) as ``num / den`` in canonical reduced form.

    Canonical: ``den`` is an ordinary polynomial with nonzero constant term
    and leading coefficient 1; ``num`` carries any power of ``t``; the two
    are coprime.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _canonical: bool = False):
        num = _as_laurent(num)
        den = LaurentT.one() if den is None else _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFuncT with zero denominator")
        self._hash = None
        if _canonical:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = num, LaurentT.one()
            return
        if den.is_monomial():
            (e, c), = den._terms.items()
            self.num, self.den = num.shift(-e).scale(1 / c), LaurentT.one()
            return
        ka, pa = num.to_poly()
        kb, pb = den.to_poly()
        g = _poly_gcd(pa, pb)
        if len(g) > 1:
            pa, _ = _poly_divmod(pa, g)
            pb, _ = _poly_divmod(pb, g)
        lead = pb[-1]
        self.num = LaurentT.from_poly([c / lead for c in pa], ka - kb)
        self.den = LaurentT.from_poly([c / lead for c in pb])

    @classmethod
    def from_laurent(cls, a: LaurentT) -> "RatFuncT":
        return cls(a, LaurentT.one(), _canonical=True)

    def normalize(self) -> "RatFuncT":
        return RatFuncT(self.num, self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == LaurentT.one()

    def to_laurent(self) -> LaurentT:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    @staticmethod
    def _coerce(other) -> Optional["RatFuncT"]:
        if isinstance(other, RatFuncT):
            return other
        if isinstance(other, LaurentT):
            return RatFuncT.from_laurent(other)
        if isinstance(other, (int, Fraction)):
            return RatFuncT.from_laurent(LaurentT.const(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFuncT(self.num + o.num, self.den)
        return RatFuncT(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncT(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_laurent() and o.is_laurent():
            return RatFuncT(self.num * o.num, _canonical=True)
        return RatFuncT(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFuncT(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inverse(self) -> "RatFuncT":
        return RatFuncT.from_laurent(LaurentT.one()) / self

    def invert_t(self) -> "RatFuncT":
        return RatFuncT(self.num.invert_t(), self.den.invert_t())

    def specialize(self, t0) -> Fraction:
        d = self.den.specialize(t0)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at t = {t0}")
        return self.num.specialize(t0) / d

    def specialize_mod(self, t0: int, p: int) -> int:
        d = self.den.specialize_mod(t0, p)
        if d == 0:
            raise ZeroDivisionError("pole at the chosen modular point")
        return self.num.specialize_mod(t0, p) * pow(d, -1, p) % p

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFuncT({self})"

    def to_json(self):
        if self.is_laurent():
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "RatFuncT":
        if "num" in obj and isinstance(obj["num"], dict):
            return cls(LaurentT.from_json(obj["num"]), LaurentT.from_json(obj["den"]))
        return cls.from_laurent(LaurentT.from_json(obj))


Coeff = Union[LaurentT, RatFuncT]


def _as_laurent(a) -> LaurentT:
    if isinstance(a, LaurentT):
        return a
    if isinstance(a, (int, Fraction)):
        return LaurentT.const(a)
    raise TypeError(f"expected a Laurent polynomial, got {type(a).__name__}")


def as_ratfunc(a) -> RatFuncT:
    r = RatFuncT._coerce(a)
    if r is None:
        raise TypeError(f"cannot convert {type(a).__name__} to RatFuncT")
    return r


def coeff_from_json(obj) -> Coeff:
    """Decode a serialized coefficient, keeping Laurent values as ``LaurentT``."""
    if "num" in obj and isinstance(obj["num"], dict):
        return RatFuncT.from_json(obj)
    return LaurentT.from_json(obj)


def simplify_coeff(c: Coeff) -> Coeff:
    """Demote a ``RatFuncT`` with trivial denominator back to ``LaurentT``."""
    if isinstance(c, RatFuncT) and c.is_laurent():
        return c.num
    return c


# ---------------------------------------------------------------------------
# linear algebra


def rref(A: Sequence[Sequence]) -> tuple[list[list[RatFuncT]], list[int]]:
    """Reduced row echelon form over Q(t).

    Pivot rule: scan columns left to right; in each, the lowest-indexed
    remaining row with a nonzero entry is the pivot row.
    """
    M = [[as_ratfunc(x) for x in row] for row in A]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [x * inv if x else x for x in M[r]]
        nz = [j for j in range(c, ncols) if M[r][j]]
        for i in range(nrows):
            if i != r and M[i][c]:
                f = M[i][c]
                row = M[i]
                for j in nz:
                    row[j] = row[j] - f * M[r][j]
        pivots.append(c)
        r += 1
    return M, pivots


def nullspace(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[list[RatFuncT]]:
    """Nullspace basis: one vector per free column, with a 1 in that column."""
    if not A:
        n = ncols or 0
        one, zero = as_ratfunc(1), as_ratfunc(0)
        return [[one if j == i else zero for j in range(n)] for i in range(n)]
    R, pivots = rref(A)
    n = len(R[0])
    free = [j for j in range(n) if j not in set(pivots)]
    zero, one = as_ratfunc(0), as_ratfunc(1)
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for i, pc in enumerate(pivots):
            if R[i][f]:
                v[pc] = -R[i][f]
        basis.append(v)
    return basis


def solve_linear(A: Sequence[Sequence], b: Optional[Sequence] = None):
    """Solve ``A x = b`` exactly over Q(t).

    With ``b is None`` returns a nullspace basis (list of vectors).  Otherwise
    returns the particular solution with all free variables set to zero, or
    ``None`` when the system is inconsistent.
    """
    if b is None:
        return nullspace(A)
    if len(b) != len(A):
        raise ValueError(f"dimension mismatch: {len(A)} rows but rhs of length {len(b)}")
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    zero = as_ratfunc(0)
    x = [zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = R[i][n]
    return x


def matvec(A: Sequence[Sequence], x: Sequence) -> list[RatFuncT]:
    out = []
    for row in A:
        acc = as_ratfunc(0)
        for a, xi in zip(row, x):
            if a and xi:
                acc = acc + as_ratfunc(a) * xi
        out.append(acc)
    return out


def lcm_denominator(values: Iterable[Coeff]) -> LaurentT:
    """Least common multiple of the denominators (monic, as polynomial in t)."""
    acc = [Fraction(1)]
    for v in values:
        if isinstance(v, RatFuncT) and not v.is_laurent():
            _, d = v.den.to_poly()
            g = _poly_gcd(acc, d)
            prod = LaurentT.from_poly(acc) * LaurentT.from_poly(d)
            q, _ = _poly_divmod(prod.to_poly()[1], g)
            acc = q
    return LaurentT.from_poly(acc)


# ---------------------------------------------------------------------------
# text rendering shared by the element types


def _monomial_prefix(c: Fraction, k: int) -> list[str]:
    parts = []
    if c != 1:
        parts.append(format_rational(c))
    if k == 1:
        parts.append("t")
    elif k != 0:
        parts.append(f"t^{k}")
    return parts


def format_terms(pairs: Iterable[tuple]) -> str:
    """Render ``sum(coeff * atom)`` for ``(coeff, atom)`` pairs in the given order.

    ``atom`` may be ``""`` for a scalar.  Laurent coefficients print as
    ``t``-monomials or parenthesized sums, so the output re-parses; rational
    functions print as ``(num)/(den)`` and do not.
    """
    chunks: list[tuple[str, str]] = []
    for coeff, atom in pairs:
        if isinstance(coeff, RatFuncT) and coeff.is_laurent():
            coeff = coeff.num
        if isinstance(coeff, LaurentT) and not atom:
            # a bare scalar: spell out each monomial
            for k, c in sorted(coeff.items(), reverse=True):
                sign = "-" if c < 0 else "+"
                body = "*".join(_monomial_prefix(abs(c), k)) or "1"
                chunks.append((sign, body))
            continue
        if isinstance(coeff, LaurentT) and coeff.is_monomial():
            (k, c), = coeff.items()
            sign = "-" if c < 0 else "+"
            body = "*".join(_monomial_prefix(abs(c), k) + [atom])
            chunks.append((sign, body))
            continue
        body = f"({coeff})" + (f"*{atom}" if atom else "")
        chunks.append(("+", body))
    if not chunks:
        return "0"
    out = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def coeff_specialize(c: Coeff, t0) -> LaurentT:
    """Specialize a coefficient to a constant, kept as a ``LaurentT``."""
    return LaurentT.const(c.specialize(t0))


def coeff_invert_t(c: Coeff) -> Coeff:
    return c.invert_t()
