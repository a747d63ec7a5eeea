"""Noncommutative arithmetic in the ring of differential operators with
polynomial coefficients.

Operators are normal-ordered: every term is coefficient * x-monomial *
D-monomial, stored as a map from (x-exponent, D-exponent) pairs to Fraction.
Two operators are equal iff their term maps are equal.  On top of the
arithmetic sit principal symbols, formal adjoints, the action on rational
functions, left-ideal Groebner bases, left-module syzygies, and the dimension
of the graded ideal of principal symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .algebra import Exponent, Poly, RationalFunction, _coerce, grevlex_key
from .engine import GBEngine, Vec
from .groebner import MonomialOrder, hilbert_dimension, weighted_order

TermKey = tuple[Exponent, Exponent]


class WeylOp:
    """Normal-ordered differential operator over Q[x_1..x_n]."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: dict[TermKey, Fraction]):
        vs = tuple(vars)
        clean: dict[TermKey, Fraction] = {}
        for (a, b), c in terms.items():
            c = _coerce(c)
            if c:
                if len(a) != len(vs) or len(b) != len(vs):
                    raise ValueError("exponent length does not match variable count")
                clean[(tuple(a), tuple(b))] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("WeylOp is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "WeylOp":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Sequence[str], c) -> "WeylOp":
        n = len(vars)
        return cls(vars, {((0,) * n, (0,) * n): _coerce(c)})

    @classmethod
    def from_poly(cls, p: Poly) -> "WeylOp":
        n = len(p.vars)
        zero = (0,) * n
        return cls(p.vars, {(e, zero): c for e, c in p.terms.items()})

    @classmethod
    def partial(cls, vars: Sequence[str], index: int) -> "WeylOp":
        n = len(vars)
        b = [0] * n
        b[index] = 1
        return cls(vars, {((0,) * n, tuple(b)): Fraction(1)})

    @classmethod
    def vector_field(cls, coefficients: Sequence[Poly]) -> "WeylOp":
        """Build sum(coefficients[k] * D_k)."""
        vars = coefficients[0].vars
        out = cls.zero(vars)
        for k, c in enumerate(coefficients):
            out = out + cls.from_poly(c) * cls.partial(vars, k)
        return out

    # -- structure queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def order(self) -> int:
        """Maximal total D-degree."""
        if not self.terms:
            return 0
        return max(sum(b) for _, b in self.terms)

    def is_vector_field(self) -> bool:
        """Order one with no order-zero part (a derivation)."""
        return bool(self.terms) and all(sum(b) == 1 for _, b in self.terms)

    def coefficient_of_partial(self, index: int) -> Poly:
        """For order-<=1 operators, the Poly coefficient of D_index."""
        n = len(self.vars)
        out = {}
        for (a, b), c in self.terms.items():
            if sum(b) == 1 and b[index] == 1:
                out[a] = c
        return Poly(self.vars, out)

    def order_zero_part(self) -> Poly:
        n = len(self.vars)
        zero = (0,) * n
        return Poly(self.vars, {a: c for (a, b), c in self.terms.items() if b == zero})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeylOp.const(self.vars, other)
        if isinstance(other, Poly):
            other = WeylOp.from_poly(other)
        if not isinstance(other, WeylOp):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic ----------------------------------------------------------

    def _coerce_op(self, other) -> "WeylOp":
        if isinstance(other, WeylOp):
            if self.vars != other.vars:
                raise ValueError("variable mismatch")
            return other
        if isinstance(other, Poly):
            return WeylOp.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return WeylOp.const(self.vars, other)
        raise TypeError(f"cannot combine WeylOp with {type(other).__name__}")

    def __add__(self, other) -> "WeylOp":
        other = self._coerce_op(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t, Fraction(0)) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return WeylOp(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "WeylOp":
        return WeylOp(self.vars, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other) -> "WeylOp":
        return self + (-self._coerce_op(other))

    def __rsub__(self, other) -> "WeylOp":
        return (-self) + other

    def __mul__(self, other) -> "WeylOp":
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            return WeylOp(self.vars, {t: v * c for t, v in self.terms.items()})
        other = self._coerce_op(other)
        return weyl_mul(self, other)

    def __rmul__(self, other) -> "WeylOp":
        if isinstance(other, (int, Fraction)):
            return self * other
        return self._coerce_op(other) * self

    def __pow__(self, n: int) -> "WeylOp":
        if n < 0:
            raise ValueError("negative power")
        out = WeylOp.const(self.vars, 1)
        for _ in range(n):
            out = out * self
        return out

    # -- printing -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[TermKey, Fraction]]:
        return sorted(self.terms.items(),
                      key=lambda t: grevlex_key(t[0][0] + t[0][1]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for (a, b), c in self.sorted_terms():
            factors = [v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, a) if k]
            factors += [f"D{v}" if k == 1 else f"D{v}^{k}" for v, k in zip(self.vars, b) if k]
            ac = abs(c)
            if factors:
                body = "*".join(factors) if ac == 1 else "*".join([str(ac)] + factors)
            else:
                body = str(ac)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"WeylOp({str(self)!r})"


def _term_product(n: int, a1: Exponent, b1: Exponent, a2: Exponent, b2: Exponent,
                  c: Fraction, out: dict, pos=None):
    """Accumulate the normal-ordered expansion of (x^a1 D^b1)(x^a2 D^b2).

    D^beta x^gamma = sum_k k! C(beta,k) C(gamma,k) x^(gamma-k) D^(beta-k),
    independently per variable.
    """
    ranges = [range(min(b1[i], a2[i]) + 1) for i in range(n)]
    for k in product(*ranges):
        coef = c
        for i, ki in enumerate(k):
            if ki:
                coef *= math.comb(b1[i], ki) * math.comb(a2[i], ki) * math.factorial(ki)
        xe = tuple(a1[i] + a2[i] - k[i] for i in range(n))
        de = tuple(b1[i] + b2[i] - k[i] for i in range(n))
        key = (xe, de) if pos is None else (pos, xe + de)
        s = out.get(key, Fraction(0)) + coef
        if s:
            out[key] = s
        else:
            del out[key]


def weyl_mul(P: WeylOp, Q: WeylOp) -> WeylOp:
    """Normal-ordered operator product."""
    if P.vars != Q.vars:
        raise ValueError("variable mismatch")
    n = len(P.vars)
    out: dict[TermKey, Fraction] = {}
    for (a1, b1), c1 in P.terms.items():
        for (a2, b2), c2 in Q.terms.items():
            _term_product(n, a1, b1, a2, b2, c1 * c2, out)
    return WeylOp(P.vars, out)


def commutator(P: WeylOp, Q: WeylOp) -> WeylOp:
    return weyl_mul(P, Q) - weyl_mul(Q, P)


def symbol_vars(vars: Sequence[str]) -> tuple[str, ...]:
    """Variable list of the associated graded (symbol) ring: the original
    variables followed by commuting D-variables."""
    doubled = tuple(vars) + tuple(f"D{v}" for v in vars)
    if len(set(doubled)) != len(doubled):
        raise ValueError(f"variable names {vars} collide with symbol names")
    return doubled


def principal_symbol(P: WeylOp) -> Poly:
    """Top D-degree part with each D_i replaced by a commuting variable."""
    if P.is_zero():
        raise ValueError("the zero operator has no principal symbol")
    d = P.order()
    sv = symbol_vars(P.vars)
    out = {}
    for (a, b), c in P.terms.items():
        if sum(b) == d:
            out[a + b] = c
    return Poly(sv, out)


def formal_adjoint(P: WeylOp) -> WeylOp:
    """The anti-automorphism with x* = x, D* = -D, (PQ)* = Q*P*."""
    n = len(P.vars)
    out: dict[TermKey, Fraction] = {}
    zero = (0,) * n
    for (a, b), c in P.terms.items():
        sign = -1 if sum(b) % 2 else 1
        # (x^a D^b)* = (-1)^|b| D^b x^a, then normal-order
        _term_product(n, zero, b, a, zero, c * sign, out)
    return WeylOp(P.vars, out)


def apply_operator(P: WeylOp, g) -> RationalFunction:
    """Let P act on a rational function by differentiation and multiplication;
    the result is reduced to lowest terms."""
    if isinstance(g, Poly):
        g = RationalFunction.from_poly(g)
    vars = P.vars
    total = RationalFunction.from_poly(Poly.zero(vars))
    for (a, b), c in P.terms.items():
        acted = g
        for i, k in enumerate(b):
            for _ in range(k):
                acted = acted.diff(i)
        mono = Poly(vars, {a: c})
        total = total + acted * mono
    return total


# -- left Groebner bases ------------------------------------------------------


WEYL_GREVLEX = MonomialOrder("grevlex")


def d_weight_order(n: int) -> MonomialOrder:
    """Order refining the operator-order filtration: weight 0 on x, 1 on D,
    grevlex tie-break.  Symbols of a basis under this order generate the
    graded ideal."""
    return weighted_order((0,) * n + (1,) * n, tie="grevlex")


def is_weyl_admissible(order: MonomialOrder, n: int) -> bool:
    if order.kind == "grevlex":
        return True
    if order.kind == "weighted" and order.weights == (0,) * n + (1,) * n:
        return True
    return False


def _weyl_engine(vars: Sequence[str], order: MonomialOrder) -> GBEngine:
    n = len(vars)

    def term_mul(c: Fraction, e: tuple[int, ...], v: Vec) -> Vec:
        a1, b1 = e[:n], e[n:]
        out: Vec = {}
        for (pos, e2), c2 in v.items():
            _term_product(n, a1, b1, e2[:n], e2[n:], c * c2, out, pos=pos)
        return out

    return GBEngine(term_mul, order.key, commutative=False)


def _op_vec(P: WeylOp) -> Vec:
    return {(0, a + b): c for (a, b), c in P.terms.items()}


def _vec_op(v: Vec, vars: Sequence[str]) -> WeylOp:
    n = len(vars)
    return WeylOp(vars, {(e[:n], e[n:]): c for (_, e), c in v.items()})


def _ops_vec(ops: Sequence[WeylOp]) -> Vec:
    out: Vec = {}
    for pos, P in enumerate(ops):
        for (a, b), c in P.terms.items():
            out[(pos, a + b)] = c
    return out


def _vec_ops(v: Vec, vars: Sequence[str], rank: int) -> tuple[WeylOp, ...]:
    n = len(vars)
    comps: list[dict] = [{} for _ in range(rank)]
    for (pos, e), c in v.items():
        comps[pos][(e[:n], e[n:])] = c
    return tuple(WeylOp(vars, t) for t in comps)


@dataclass
class LeftIdealGB:
    """Reduced left Groebner basis; origin[k] gives left cofactors expressing
    generators[k] over the inputs."""

    generators: list[WeylOp]
    order: MonomialOrder
    origin: list[list[WeylOp]]
    vars: tuple[str, ...]


def weyl_groebner(gens: Sequence[WeylOp], order: Optional[MonomialOrder] = None) -> LeftIdealGB:
    """Left Groebner basis of the left ideal generated by `gens`.

    Only orders refining the total (x, D)-degree or the D-weight filtration
    are accepted; these guarantee termination and make leading symbols
    generate the graded ideal.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    vars = gens[0].vars
    n = len(vars)
    if order is None:
        order = WEYL_GREVLEX
    if not is_weyl_admissible(order, n):
        raise ValueError(f"order {order} is not admissible for operator bases")
    eng = _weyl_engine(vars, order)
    vecs = [_op_vec(g) for g in gens if not g.is_zero()]
    if not vecs:
        return LeftIdealGB([], order, [], tuple(vars))
    gb, reps = eng.reduced_basis(vecs, track=True)
    ops = [_vec_op(v, vars) for v in gb]
    origin = []
    nz = [g for g in gens if not g.is_zero()]
    for rep in reps:
        row = [WeylOp.zero(vars) for _ in nz]
        for (pos, e), c in rep.items():
            row[pos] = row[pos] + WeylOp(vars, {(e[:n], e[n:]): c})
        origin.append(row)
    return LeftIdealGB(ops, order, origin, tuple(vars))


def weyl_normal_form(P: WeylOp, gb: LeftIdealGB) -> tuple[WeylOp, list[WeylOp]]:
    """Left normal form plus left cofactors:
    P = sum(cof[k] * gb.generators[k]) + remainder."""
    eng = _weyl_engine(gb.vars, gb.order)
    rem, cof = eng.reduce(_op_vec(P), [_op_vec(g) for g in gb.generators],
                          want_cofactors=True)
    n = len(gb.vars)
    rem_op = _vec_op(rem, gb.vars)
    cof_ops = [WeylOp(gb.vars, {(e[:n], e[n:]): c for (_, e), c in q.items()})
               for q in cof]
    return rem_op, cof_ops


def in_left_ideal(P: WeylOp, gb: LeftIdealGB) -> bool:
    return weyl_normal_form(P, gb)[0].is_zero()


@dataclass
class WeylModuleBasis:
    generators: list[tuple[WeylOp, ...]]
    order: MonomialOrder
    rank: int
    vars: tuple[str, ...]


def weyl_module_groebner(vectors: Sequence[Sequence[WeylOp]],
                         order: Optional[MonomialOrder] = None) -> WeylModuleBasis:
    vars = vectors[0][0].vars
    if order is None:
        order = WEYL_GREVLEX
    eng = _weyl_engine(vars, order)
    gb, _ = eng.reduced_basis([_ops_vec(v) for v in vectors])
    rank = len(vectors[0])
    return WeylModuleBasis([_vec_ops(v, vars, rank) for v in gb], order, rank, tuple(vars))


def weyl_module_member(v: Sequence[WeylOp], mb: WeylModuleBasis) -> bool:
    eng = _weyl_engine(mb.vars, mb.order)
    return eng.is_member(_ops_vec(v), [_ops_vec(g) for g in mb.generators])


def weyl_syzygies(gens: Sequence, order: Optional[MonomialOrder] = None,
                  minimize: bool = True) -> list[tuple[WeylOp, ...]]:
    """Generators of the left syzygy module of operators (or operator
    vectors): every returned w satisfies sum(w[i] * gens[i]) = 0.

    Schreyer construction on a tracked left Groebner basis; output vectors
    are sign-normalized and sorted, and redundant generators are pruned by
    left-module membership when `minimize` is set.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if isinstance(gens[0], WeylOp):
        vectors = [(g,) for g in gens]
    else:
        vectors = [tuple(g) for g in gens]
    vars = vectors[0][0].vars
    if order is None:
        order = WEYL_GREVLEX
    if not is_weyl_admissible(order, len(vars)):
        raise ValueError(f"order {order} is not admissible for operator bases")
    eng = _weyl_engine(vars, order)
    syz = eng.syzygies([_ops_vec(v) for v in vectors])
    if minimize:
        syz = eng.minimize(syz)
    syz = eng.sort_vectors([eng.normalize_sign(v) for v in syz])
    return [_vec_ops(v, vars, len(vectors)) for v in syz]


def graded_ideal_dimension(gens: Sequence[WeylOp]) -> int:
    """Dimension of the variety of the graded ideal of the left ideal
    generated by `gens`: left Groebner basis under the D-weight order, then
    the commutative dimension of the ideal of principal symbols in the
    doubled variable ring."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    vars = gens[0].vars
    n = len(vars)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 2 * n  # zero ideal: the graded ideal is (0)
    gb = weyl_groebner(gens, d_weight_order(n))
    symbols = [principal_symbol(g) for g in gb.generators]
    return hilbert_dimension(symbols, nvars=2 * n)
