"""Peripheral ideal of the trefoil, its noncommutative A-ideal, and membership certificates.

Membership questions are linear algebra: a target lies in the span of
``multiplier * generator`` products iff a linear system over Q(t) is
consistent.  The systems are screened first at a random point modulo a large
prime (numpy), which picks the lowest search bound and a small independent set
of columns; the final coefficients are then solved exactly over Q(t) and the
certificate is replayed before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

import numpy as np

from .exactcoeff import Coeff, LaurentT, RatFuncT, as_ratfunc, coeff_from_json, lcm_denominator, simplify_coeff, solve_linear
from .quantum_torus import QTorusPoly, clear_to_plane, embed, equal_up_to_unit, qt_mul, specialize_t
from .torus_skein import TorusSkein, jw_to_t, mirror as mirror_skein, mul
from .trefoil_module import Chirality, ModuleElt, _chir, peripheral_y, pi

T = LaurentT.mono

PRIME = 2**31 - 1
SAMPLE_T = 1_234_577  # evaluation point for the modular screen


class IllegalSpecialization(ValueError):
    """Raised when ``t`` is specialized where a construction degenerates."""


class VerificationError(AssertionError):
    """Raised when an identity that should hold exactly does not."""


def check_t_value(t0, allow_minus_one: bool = False) -> Fraction:
    """Reject ``t = 0`` and eighth roots of unity (``t = ±1`` over Q).

    ``allow_minus_one`` admits ``t = -1`` for the constructions that handle it
    separately.
    """
    t0 = Fraction(t0)
    if t0 == 0:
        raise IllegalSpecialization("t = 0 is not allowed (Laurent coefficients)")
    if t0 ** 8 == 1 and not (allow_minus_one and t0 == -1):
        raise IllegalSpecialization(f"t = {t0} is an eighth root of unity; the y-elimination step divides by t^4 - t^-4")
    return t0


# ---------------------------------------------------------------------------
# containers


@dataclass
class GeneratorSet:
    """Generators of a left ideal, with provenance tags.

    Skein generators are checked to lie in the kernel of ``pi`` on construction
    (at ``t = t_value`` when given, otherwise for symbolic ``t``).
    """

    chirality: Chirality
    elements: list
    provenance: list = field(default_factory=list)
    generic_t_only: bool = True  # the set is only valid when t^8 != 1
    t_value: Optional[Fraction] = None
    factors: Optional[list] = None  # factored forms, when the generators are products
    check: bool = True

    def __post_init__(self):
        self.chirality = _chir(self.chirality)
        if not self.provenance:
            self.provenance = [f"g{i + 1}" for i in range(len(self.elements))]
        if len(self.provenance) != len(self.elements):
            raise ValueError("one provenance tag per element is required")
        if self.check:
            for i, g in enumerate(self.elements):
                if isinstance(g, TorusSkein) and not in_kernel(g, self.chirality, self.t_value):
                    raise VerificationError(f"generator {self.provenance[i]} is not in the kernel of pi")

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    def to_json(self) -> dict:
        return {
            "chirality": self.chirality.value,
            "generic_t_only": self.generic_t_only,
            "t_value": None if self.t_value is None else str(self.t_value),
            "elements": [{"tag": tag, "value": g.to_json()} for tag, g in zip(self.provenance, self.elements)],
        }


def in_kernel(g: TorusSkein, chirality=Chirality.LEFT, t_value=None) -> bool:
    img = pi(g, chirality)
    if t_value is not None:
        img = img.specialize(t_value)
    return img.is_zero()


def _mult(multiplier, g, t_value=None):
    out = mul(multiplier, g) if isinstance(g, TorusSkein) else qt_mul(multiplier, g)
    return out if t_value is None else out.specialize(t_value) if isinstance(out, TorusSkein) \
        else specialize_t(out, t_value)


@dataclass
class Certificate:
    """``target = sum coeff * (multiplier * gens[gen])``."""

    target: object
    combination: list  # (multiplier, coeff, gen index)
    gens: list
    bound: tuple = ()
    t_value: Optional[Fraction] = None  # products are specialized here when set

    def replay(self):
        out = None
        for multiplier, c, i in self.combination:
            term = _mult(multiplier, self.gens[i], self.t_value).scale(c)
            out = term if out is None else out + term
        if out is None:
            out = type(self.target)()
        return out.map_coeffs(simplify_coeff)

    def verify(self) -> bool:
        return self.replay() == self.target.map_coeffs(simplify_coeff)

    def to_json(self) -> dict:
        return {
            "target": self.target.to_json(),
            "combination": [{"multiplier": mlt.to_json(), "coeff": c.to_json(), "gen": i}
                            for mlt, c, i in self.combination],
            "bound": list(self.bound),
            "t_value": None if self.t_value is None else str(self.t_value),
        }

    @classmethod
    def from_json(cls, obj, gens) -> "Certificate":
        kind = TorusSkein if obj["target"].get("type") == "torus_skein" else QTorusPoly
        combo = [(kind.from_json(e["multiplier"]), coeff_from_json(e["coeff"]), e["gen"]) for e in obj["combination"]]
        tv = obj.get("t_value")
        return cls(kind.from_json(obj["target"]), combo, list(gens), tuple(obj.get("bound", ())),
                   None if tv is None else Fraction(tv))


@dataclass(frozen=True)
class NotFoundAtBound:
    """No certificate exists with multipliers inside ``bound``."""

    bound: tuple

    def __bool__(self):
        return False


# ---------------------------------------------------------------------------
# the peripheral ideal


def tau(chirality=Chirality.LEFT) -> TorusSkein:
    """``(1,-5)_T - t^-8 (1,-1)_T + t^-3 (0,5)_T - t (0,1)_T`` (mirrored for the right trefoil)."""
    u = TorusSkein.from_pairs([(1, -5, 1), (1, -1, -T(-8)), (0, 5, T(-3)), (0, 1, -T(1))])
    return u if _chir(chirality) is Chirality.LEFT else mirror_skein(u)


def _g2() -> TorusSkein:
    a4 = T(4) + T(-4)
    return TorusSkein.from_pairs([(2, -6, 1), (1, 0, -(T(6) + T(-6))), (1, -6, a4), (0, 6, 1)], unit=-a4.scale(2))


def _g3(literal_sign: bool = False) -> TorusSkein:
    # the (1,-7) coefficient is +t^-5; with -t^-5 the element is not in the kernel
    s = -1 if literal_sign else 1
    return TorusSkein.from_pairs([
        (2, -7, 1), (1, -7, T(-5, s)), (1, -3, T(-5) - T(-1)), (1, -1, -T(5)),
        (0, 3, T(2) - T(-2)), (0, 1, -T(-6)),
    ])


def kernel_gens(chirality=Chirality.LEFT, literal_sign: bool = False) -> GeneratorSet:
    """Three generators of the peripheral ideal (valid when ``t^8 != 1``).

    ``literal_sign=True`` returns the third generator with the opposite sign on
    its ``(1,∓7)`` term; that element is *not* in the kernel, so the set is
    returned unchecked.
    """
    c = _chir(chirality)
    gens = [tau(Chirality.LEFT), _g2(), _g3(literal_sign)]
    if c is Chirality.RIGHT:
        gens = [mirror_skein(g) for g in gens]
    return GeneratorSet(c, gens, ["tau", "g2", "g3"], check=not literal_sign)


def phi(q: int, chirality=Chirality.LEFT) -> TorusSkein:
    """Kernel element combining the ``(1,q)`` row of ``pi`` with the y-elimination element.

    ``phi_q = (t^4-t^-4)((1,q)_T - t^{q+6}(0,q+6)_JW + t^{q+2}(0,q)_JW)
              - (t^{q+4}(0,q+4)_JW - t^q (0,q)_JW) * u``, with ``pi(u) = (t^4-t^-4) y``.
    Negative colors follow ``S_{-n} = -S_{n-2}``.
    """
    f = T(4) - T(-4)
    first = TorusSkein.curve(1, q) - jw_to_t(0, q + 6).scale(T(q + 6)) + jw_to_t(0, q).scale(T(q + 2))
    second = jw_to_t(0, q + 4).scale(T(q + 4)) - jw_to_t(0, q).scale(T(q))
    out = first.scale(f) - mul(second, peripheral_y(Chirality.LEFT))
    return out if _chir(chirality) is Chirality.LEFT else mirror_skein(out)


def proportional(u, v) -> Optional[Coeff]:
    """Scalar ``c`` with ``u == c * v`` (``v != 0``), or ``None``."""
    if v.is_zero():
        raise ValueError("proportional() needs a nonzero reference")
    if isinstance(u, TorusSkein):
        uu, vv = dict(u.terms), dict(v.terms)
        if u.unit:
            uu[None] = u.unit
        if v.unit:
            vv[None] = v.unit
    else:
        uu, vv = u.terms, v.terms
    if not uu:
        return LaurentT.zero()
    if set(uu) != set(vv):
        return None
    key = next(iter(vv))
    c = simplify_coeff(as_ratfunc(uu[key]) / as_ratfunc(vv[key]))
    return c if v.scale(c).map_coeffs(simplify_coeff) == u.map_coeffs(simplify_coeff) else None


def _module_coords(e: ModuleElt) -> dict:
    out = {("s", n): c for n, c in e.s.items()}
    out.update({("sy", n): c for n, c in e.sy.items()})
    return out


def kernel_labels(pmax: int, qrange: tuple[int, int]) -> list:
    """Truncated basis: unit, ``(0,|q|)``, then ``(p,q)`` for ``1 <= p <= pmax``."""
    lo, hi = qrange
    labels: list = [None]
    labels += [(0, k) for k in sorted({abs(q) for q in range(lo, hi + 1) if q})]
    labels += [(p, q) for p in range(1, pmax + 1) for q in range(lo, hi + 1)]
    return labels


def _label_elt(lab) -> TorusSkein:
    return TorusSkein.one() if lab is None else TorusSkein.curve(*lab)


def kernel_basis(pmax: int, qrange: tuple[int, int], chirality=Chirality.LEFT) -> list:
    """Basis of the kernel of ``pi`` on the truncated span, with Laurent coefficients.

    Each vector is normalized to coefficient 1 on its free ``(p,q)`` label and
    then cleared of denominators.
    """
    if pmax < 0:
        raise ValueError("pmax must be >= 0")
    labels = kernel_labels(pmax, qrange)
    images = [_module_coords(pi(_label_elt(lab), chirality)) for lab in labels]
    keys = sorted({k for img in images for k in img})
    zero = LaurentT.zero()
    A = [[img.get(k, zero) for img in images] for k in keys]
    out = []
    for vec in solve_linear(A, None) if A else []:
        scale = lcm_denominator(vec)
        elt = TorusSkein.zero()
        for lab, c in zip(labels, vec):
            if c:
                elt = elt + _label_elt(lab).scale(simplify_coeff(c * scale))
        out.append(elt)
    return out


# ---------------------------------------------------------------------------
# linear combination search


def _coords(x) -> dict:
    if isinstance(x, TorusSkein):
        d = dict(x.terms)
        if x.unit:
            d[None] = x.unit
        return d
    return x.terms


def _key_order(k):
    return (0, ()) if k is None else (1, k)


def _mod_rref(M: np.ndarray) -> tuple[np.ndarray, list]:
    """Row reduce over GF(PRIME); returns the reduced matrix and pivot columns."""
    M = M % PRIME
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if not len(nz):
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = (M[r] * pow(int(M[r, c]), PRIME - 2, PRIME)) % PRIME
        f = M[:, c].copy()
        f[r] = 0
        hit = np.nonzero(f)[0]
        if len(hit):
            M[hit] = (M[hit] - (f[hit, None] * M[r][None, :]) % PRIME) % PRIME
        pivots.append(c)
        r += 1
    return M, pivots


def _mod_matrix(columns: Sequence[dict], keys: list) -> np.ndarray:
    idx = {k: i for i, k in enumerate(keys)}
    M = np.zeros((len(keys), len(columns)), dtype=np.int64)
    for j, col in enumerate(columns):
        for k, c in col.items():
            M[idx[k], j] = c.specialize_mod(SAMPLE_T, PRIME)
    return M


def _screen(columns: Sequence[dict], target: dict) -> Optional[list]:
    """Modular screen: indices of an independent set of columns whose span holds the target."""
    keys = sorted({k for col in list(columns) + [target] for k in col}, key=_key_order)
    M = _mod_matrix(list(columns) + [target], keys)
    R, pivots = _mod_rref(M)
    n = len(columns)
    if n in pivots:
        return None
    support = [pc for i, pc in enumerate(pivots) if R[i, n]]
    return support


def _exact_solve(columns: Sequence[dict], target: dict) -> Optional[list]:
    keys = sorted({k for col in list(columns) + [target] for k in col}, key=_key_order)
    zero = LaurentT.zero()
    A = [[col.get(k, zero) for col in columns] for k in keys]
    b = [target.get(k, zero) for k in keys]
    if not columns:
        return [] if all(not x for x in b) else None
    return solve_linear(A, b)


def find_combination(columns: Sequence, target) -> Optional[list]:
    """Exact coefficients ``x`` with ``sum x_j columns[j] == target``, or ``None``.

    Returned as ``(index, coeff)`` pairs with nonzero coefficients.
    """
    cols = [_coords(c) for c in columns]
    tgt = _coords(target)
    if not tgt:
        return []
    support = _screen(cols, tgt)
    if support is None:
        return None
    x = _exact_solve([cols[j] for j in support], tgt)
    if x is not None:
        return [(j, simplify_coeff(c)) for j, c in zip(support, x) if c]
    # the sample point was unlucky; fall back to the full system
    x = _exact_solve(cols, tgt)
    if x is None:
        return None
    return [(j, simplify_coeff(c)) for j, c in enumerate(x) if c]


def _bounds_in_order(bound_a: int, bound_b: int):
    """All ``(a, b)`` with ``a <= bound_a``, ``b <= bound_b`` ordered by ``(a+b, a)``."""
    pts = [(a, b) for a in range(bound_a + 1) for b in range(bound_b + 1)]
    return sorted(pts, key=lambda ab: (ab[0] + ab[1], ab[0]))


def _search(target, gens, multipliers_for, bound_a: int, bound_b: int):
    """Lowest-bound certificate search over a nested family of multiplier sets."""
    t_value = gens.t_value if isinstance(gens, GeneratorSet) else None
    gens = _as_gens(gens)
    for bound in _bounds_in_order(bound_a, bound_b):
        mults = multipliers_for(*bound)
        products = [(mlt, i) for mlt in mults for i in range(len(gens))]
        cols = [_mult(mlt, gens[i], t_value) for mlt, i in products]
        sol = find_combination(cols, target)
        if sol is None:
            continue
        combo = [(products[j][0], c, products[j][1]) for j, c in sol]
        cert = Certificate(target, combo, gens, bound, t_value)
        if not cert.verify():
            raise VerificationError("certificate failed to replay")
        return cert
    return NotFoundAtBound((bound_a, bound_b))


def skein_multipliers(bound_p: int, bound_q: int) -> list:
    """Unit plus canonical ``(r,s)_T`` with ``r <= bound_p`` and ``|s| <= bound_q``."""
    out = [TorusSkein.one()]
    out += [TorusSkein.curve(0, s) for s in range(1, bound_q + 1)]
    out += [TorusSkein.curve(r, s) for r in range(1, bound_p + 1) for s in range(-bound_q, bound_q + 1)]
    return out


def _as_gens(gens) -> list:
    return list(gens.elements) if isinstance(gens, GeneratorSet) else list(gens)


def skein_membership(target: TorusSkein, gens, bound_p: int, bound_q: int,
                     multipliers: Optional[Sequence[TorusSkein]] = None):
    """Certificate that ``target`` lies in the left ideal generated by ``gens``.

    With explicit ``multipliers`` the search is a single solve over that set;
    otherwise bounds grow from ``(0,0)`` to ``(bound_p, bound_q)``.
    """
    if multipliers is not None:
        mults = list(multipliers)
        return _search(target, gens, lambda a, b: mults, 0, 0)
    return _search(target, gens, skein_multipliers, bound_p, bound_q)


def plane_multipliers(bound_l: int, bound_m: int, laurent: bool = False) -> list:
    lo_l = -bound_l if laurent else 0
    lo_m = -bound_m if laurent else 0
    return [QTorusPoly.mono(a, b) for a in range(lo_l, bound_l + 1) for b in range(lo_m, bound_m + 1)]


def plane_membership(target: QTorusPoly, gens, bound_l: int, bound_m: int, laurent: bool = False):
    """Certificate ``target = sum c * l^a m^b * gen`` with ``0 <= a <= bound_l, 0 <= b <= bound_m``.

    ``laurent=True`` lets the exponents range over ``[-bound, bound]`` (left
    multiples inside the noncommutative torus).
    """
    return _search(target, gens, lambda a, b: plane_multipliers(a, b, laurent), bound_l, bound_m)


# ---------------------------------------------------------------------------
# the A-ideal


def _sc(k: int, c=1) -> QTorusPoly:
    return QTorusPoly.scalar(T(k, c))


def _product(factors: Sequence[QTorusPoly]) -> QTorusPoly:
    out = QTorusPoly.one()
    for f in factors:
        out = qt_mul(out, f)
    return out


def aideal_factors(chirality=Chirality.LEFT) -> list:
    """Factored generators ``[[f1, f2, ...], ...]`` of the noncommutative A-ideal."""
    l, m = QTorusPoly.l(), QTorusPoly.m()
    if _chir(chirality) is Chirality.LEFT:
        last = l - _sc(6) * m ** 6
    else:
        last = l * m ** 6 - _sc(6)
    first = m ** 4 * (l + _sc(10)) - _sc(-4) * (l + _sc(2))
    return [
        [first, last],
        [l + _sc(24), l + _sc(10), l + _sc(2), last],
        [m ** 2 - _sc(-22), l + _sc(10), l + _sc(2), last],
    ]


def aideal_gens(chirality=Chirality.LEFT) -> GeneratorSet:
    """Expanded (normal-ordered) generators of the noncommutative A-ideal."""
    fs = aideal_factors(chirality)
    tags = ["*".join(f"({f})" for f in fl) for fl in fs]
    return GeneratorSet(chirality, [_product(fl) for fl in fs], tags, factors=fs)


def cleared_images(gens: GeneratorSet) -> GeneratorSet:
    """``clear_to_plane(embed(g))`` for every skein generator."""
    imgs = [clear_to_plane(embed(g))[0] for g in gens]
    if gens.t_value is not None:
        imgs = [specialize_t(g, gens.t_value) for g in imgs]
    return GeneratorSet(gens.chirality, imgs, [f"plane({tag})" for tag in gens.provenance],
                        generic_t_only=gens.generic_t_only, t_value=gens.t_value)


def verify_aideal_gen1(chirality=Chirality.LEFT, generator: Optional[QTorusPoly] = None) -> tuple:
    """Unit ``(c, k)`` with ``clear_to_plane(embed(tau)) == c t^k * gen1``.

    Raises ``VerificationError`` when the two differ by more than a unit.
    """
    g = aideal_gens(chirality)[0] if generator is None else generator
    contracted, _ = clear_to_plane(embed(tau(chirality)))
    unit = equal_up_to_unit(contracted, g)
    if unit is None:
        raise VerificationError("contracted image of tau is not a unit multiple of the first generator")
    return unit


# ---------------------------------------------------------------------------
# t = -1


def t_minus1_gens(chirality=Chirality.LEFT) -> tuple[GeneratorSet, GeneratorSet]:
    """Generators of the peripheral ideal and A-ideal at ``t = -1``.

    The skein generators are ``(1,-4)_T - (1,-2)_T + (0,4)_T - (0,2)_T`` (the
    y-elimination element at ``t = -1``) and ``(2,-6)_T - (0,6)_T``; the plane
    generators are ``(l^2-1)(l+1)(l-m^6)`` and ``(m^2-1)(l+1)(l-m^6)``
    (``l m^6 - 1`` for the right trefoil).
    """
    c = _chir(chirality)
    skein = [
        TorusSkein.from_pairs([(1, -4, 1), (1, -2, -1), (0, 4, 1), (0, 2, -1)]),
        TorusSkein.from_pairs([(2, -6, 1), (0, 6, -1)]),
    ]
    if c is Chirality.RIGHT:
        skein = [mirror_skein(g) for g in skein]
    sk = GeneratorSet(c, skein, ["y-elimination at t=-1", "(2,-6)-(0,6)"],
                      generic_t_only=False, t_value=Fraction(-1))
    fs = classical_factor_lists(c)
    plane = GeneratorSet(c, [specialize_t(_product(fl), -1) for fl in fs],
                         ["*".join(f"({f})" for f in fl) for fl in fs],
                         generic_t_only=False, t_value=Fraction(-1), factors=fs)
    return sk, plane


def classical_factor_lists(chirality=Chirality.LEFT) -> list:
    l, m = QTorusPoly.l(), QTorusPoly.m()
    one = QTorusPoly.one()
    last = l - m ** 6 if _chir(chirality) is Chirality.LEFT else l * m ** 6 - one
    return [[l * l - one, l + one, last], [m * m - one, l + one, last]]


def _commutative(f: QTorusPoly) -> dict:
    out = {}
    for k, c in f.terms.items():
        c = simplify_coeff(c)
        if not (isinstance(c, LaurentT) and c.is_const()):
            raise ValueError("expected constant coefficients")
        out[k] = c.const_value()
    return out


def _sign_substitute(f: dict) -> dict:
    """``l -> -l``, ``m -> -m``."""
    return {(a, b): c * (-1) ** (a + b) for (a, b), c in f.items()}


def canonical_factor(f: dict) -> dict:
    """Primitive integer content and positive coefficient on the lex-leading monomial."""
    den = 1
    for c in f.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {k: int(c * den) for k, c in f.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = max(ints)
    s = 1 if ints[lead] > 0 else -1
    return {k: Fraction(s * v, g) for k, v in ints.items()}


def _to_poly(f: dict) -> QTorusPoly:
    return QTorusPoly({k: LaurentT.const(c) for k, c in f.items()})


def common_factor(factor_lists: Sequence[Sequence[QTorusPoly]]) -> list:
    """Multiset intersection of canonicalized factor lists."""
    canon = [[canonical_factor(_commutative(f)) for f in fl] for fl in factor_lists]
    shared = []
    rest = [list(fl) for fl in canon[1:]]
    for f in canon[0]:
        if all(f in fl for fl in rest):
            for fl in rest:
                fl.remove(f)
            shared.append(f)
    return [_to_poly(f) for f in shared]


@dataclass(frozen=True)
class ClassicalFactor:
    factors: tuple
    product: QTorusPoly

    def __str__(self):
        return "*".join(f"({f})" for f in self.factors)


def classical_common_factor(chirality=Chirality.LEFT, factor_lists=None) -> ClassicalFactor:
    """Sign-substitute the ``t = -1`` A-ideal generators and keep their common factors."""
    fls = classical_factor_lists(chirality) if factor_lists is None else factor_lists
    subst = [[_to_poly(_sign_substitute(_commutative(f))) for f in fl] for fl in fls]
    shared = common_factor(subst)
    return ClassicalFactor(tuple(shared), specialize_t(_product(shared), -1))
