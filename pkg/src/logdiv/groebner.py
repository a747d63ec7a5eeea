"""Commutative Groebner engine over the exact polynomial kernel.

Provides reduced bases with cofactor bookkeeping, normal forms, ideal
quotients, syzygy modules (Schreyer construction), Krull dimension from
leading-term ideals, and regular-sequence testing with witnesses.  Submodules
of free modules are supported alongside ideals; vectors are plain tuples of
Poly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .algebra import Exponent, Poly, exact_divide, grevlex_key
from .engine import GBEngine, Vec, commutative_term_mul


@dataclass(frozen=True)
class MonomialOrder:
    """Term order on exponent vectors.

    kind is one of "grevlex", "lex", "weighted"; weighted orders compare the
    weighted degree first and break ties with grevlex or lex.
    """

    kind: str
    weights: Optional[tuple[int, ...]] = None
    tie: str = "grevlex"

    def key(self, e: Exponent):
        if self.kind == "grevlex":
            return grevlex_key(e)
        if self.kind == "lex":
            return tuple(e)
        if self.kind == "weighted":
            w = sum(a * b for a, b in zip(self.weights, e))
            tie = grevlex_key(e) if self.tie == "grevlex" else tuple(e)
            return (w, tie)
        raise ValueError(f"unknown order kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "weighted":
            return f"weighted{self.weights}/{self.tie}"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def weighted_order(weights: Sequence[int], tie: str = "grevlex") -> MonomialOrder:
    return MonomialOrder("weighted", tuple(weights), tie)


def _engine(order: MonomialOrder) -> GBEngine:
    return GBEngine(commutative_term_mul, order.key, commutative=True)


def _to_vec(polys: Sequence[Poly]) -> Vec:
    out: Vec = {}
    for pos, p in enumerate(polys):
        for e, c in p.terms.items():
            out[(pos, e)] = c
    return out


def _from_vec(v: Vec, vars: Sequence[str], rank: int) -> tuple[Poly, ...]:
    comps: list[dict] = [{} for _ in range(rank)]
    for (pos, e), c in v.items():
        comps[pos][e] = c
    return tuple(Poly(vars, t) for t in comps)


def _poly_vec(p: Poly) -> Vec:
    return {(0, e): c for e, c in p.terms.items()}


def _vec_poly(v: Vec, vars: Sequence[str]) -> Poly:
    return Poly(vars, {e: c for (_, e), c in v.items()})


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis; `origin[k]` expresses generators[k] as a
    cofactor combination of the input generators."""

    generators: list[Poly]
    order: MonomialOrder
    origin: list[list[Poly]]
    vars: tuple[str, ...]

    def leading_exponents(self) -> list[Exponent]:
        return [g.leading(self.order.key)[0] for g in self.generators]


def groebner_basis(gens: Sequence[Poly], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `gens`."""
    if not gens:
        raise ValueError("need at least one generator")
    vars = gens[0].vars
    eng = _engine(order)
    vecs = [_poly_vec(g) for g in gens]
    gb, reps = eng.reduced_basis(vecs, track=True)
    polys = [_vec_poly(v, vars) for v in gb]
    origin = []
    for rep in reps:
        row = [Poly.zero(vars) for _ in gens]
        for (pos, e), c in rep.items():
            row[pos] = row[pos] + Poly(vars, {e: c})
        origin.append(row)
    return GroebnerBasis(polys, order, origin, tuple(vars))


def normal_form(p: Poly, gb: GroebnerBasis) -> tuple[Poly, list[Poly]]:
    """Remainder and cofactors of p on division by the basis:
    p = sum(cofactors[k] * gb.generators[k]) + remainder."""
    eng = _engine(gb.order)
    rem, cof = eng.reduce(_poly_vec(p), [_poly_vec(g) for g in gb.generators],
                          want_cofactors=True)
    return _vec_poly(rem, gb.vars), [_vec_poly(q, gb.vars) for q in cof]


def in_ideal(p: Poly, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb)[0].is_zero()


@dataclass
class ModuleBasis:
    """Groebner basis of a submodule of a rank-`rank` free module."""

    generators: list[tuple[Poly, ...]]
    order: MonomialOrder
    rank: int
    vars: tuple[str, ...]


def module_groebner(vectors: Sequence[Sequence[Poly]], order: MonomialOrder = GREVLEX) -> ModuleBasis:
    vecs = [_to_vec(v) for v in vectors]
    rank = len(vectors[0])
    vars = vectors[0][0].vars
    eng = _engine(order)
    gb, _ = eng.reduced_basis(vecs)
    return ModuleBasis([_from_vec(v, vars, rank) for v in gb], order, rank, tuple(vars))


def module_member(v: Sequence[Poly], mb: ModuleBasis) -> bool:
    eng = _engine(mb.order)
    return eng.is_member(_to_vec(v), [_to_vec(g) for g in mb.generators])


def module_normal_form(v: Sequence[Poly], mb: ModuleBasis) -> tuple[tuple[Poly, ...], list[Poly]]:
    eng = _engine(mb.order)
    rem, cof = eng.reduce(_to_vec(v), [_to_vec(g) for g in mb.generators],
                          want_cofactors=True)
    return _from_vec(rem, mb.vars, mb.rank), [_vec_poly(q, mb.vars) for q in cof]


@dataclass
class SyzygyModule:
    """Generating set of the syzygy module of the stored generators: every
    vector v satisfies sum(v[i] * gens[i]) = 0 exactly."""

    rank: int
    generators: list[tuple[Poly, ...]]
    gens: list[Poly] = field(default_factory=list)


def syzygy_module(gens: Sequence[Poly], order: MonomialOrder = GREVLEX,
                  minimize: bool = True) -> SyzygyModule:
    """Generators of the module of relations among `gens` (rank-1 inputs),
    via the Schreyer construction with division-cofactor bookkeeping."""
    if not gens:
        raise ValueError("need at least one generator")
    vars = gens[0].vars
    eng = _engine(order)
    syz = eng.syzygies([_poly_vec(g) for g in gens])
    if minimize:
        syz = eng.minimize(syz)
    syz = eng.sort_vectors([eng.normalize_sign(v) for v in syz])
    vectors = [_from_vec(v, vars, len(gens)) for v in syz]
    return SyzygyModule(len(gens), vectors, list(gens))


def module_syzygies(vectors: Sequence[Sequence[Poly]], order: MonomialOrder = GREVLEX,
                    minimize: bool = True) -> list[tuple[Poly, ...]]:
    """Syzygies among module vectors; each result w satisfies
    sum(w[i] * vectors[i]) = 0 componentwise."""
    vars = vectors[0][0].vars
    eng = _engine(order)
    syz = eng.syzygies([_to_vec(v) for v in vectors])
    if minimize:
        syz = eng.minimize(syz)
    syz = eng.sort_vectors([eng.normalize_sign(v) for v in syz])
    return [_from_vec(v, vars, len(vectors)) for v in syz]


def hilbert_dimension(gens: Sequence[Poly], order: MonomialOrder = GREVLEX,
                      nvars: Optional[int] = None) -> int:
    """Krull dimension of the quotient by the ideal, read off the leading-term
    ideal of a Groebner basis: the size of the largest variable subset S such
    that no leading monomial is supported inside S."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        if nvars is None:
            raise ValueError("dimension of the zero ideal needs the variable count")
        return nvars
    n = len(gens[0].vars)
    gb = groebner_basis(gens, order)
    supports = []
    for e in gb.leading_exponents():
        supports.append(frozenset(i for i, k in enumerate(e) if k))
    if frozenset() in supports:
        return -1  # unit ideal
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            sset = set(S)
            if all(not sup <= sset for sup in supports):
                return size
    return -1


def ideal_quotient(gens: Sequence[Poly], p: Poly,
                   order: MonomialOrder = GREVLEX) -> list[Poly]:
    """Generators of (I : p) = {q : q*p in I}, via intersecting I with (p)
    using a homogenizing variable and dividing out p; auto-reduced."""
    if p.is_zero():
        raise ZeroDivisionError("cannot form a quotient by zero")
    gens = [g for g in gens if not g.is_zero()]
    vars = p.vars
    n = len(vars)
    ext = tuple(vars) + ("_t",)

    def lift(q: Poly) -> Poly:
        return Poly(ext, {e + (0,): c for e, c in q.terms.items()})

    t = Poly.variable(ext, "_t")
    big = [t * lift(g) for g in gens]
    big.append((Poly.const(ext, 1) - t) * lift(p))
    elim = weighted_order((0,) * n + (1,), tie="grevlex")
    gb = groebner_basis(big, elim)
    inter = []
    for g in gb.generators:
        if all(e[n] == 0 for e in g.terms):
            inter.append(Poly(vars, {e[:n]: c for e, c in g.terms.items()}))
    quotient = [exact_divide(g, p) for g in inter]
    if not quotient:
        return []
    return groebner_basis(quotient, order).generators


@dataclass
class RegularSequenceResult:
    regular: bool
    failure_index: Optional[int] = None
    witness: Optional[Poly] = None
    scope: str = "global"


def is_regular_sequence(seq: Sequence[Poly], order: MonomialOrder = GREVLEX) -> RegularSequenceResult:
    """Test whether seq is a regular sequence in the ambient polynomial ring:
    for each i, ((p_0..p_{i-1}) : p_i) must equal (p_0..p_{i-1}).

    On failure reports the first failing index and the smallest quotient
    generator that is not in the preceding ideal (a witness q with
    q * p_i in the ideal but q outside it).
    """
    if any(p.is_zero() for p in seq):
        raise ValueError("regular-sequence test requires nonzero elements")
    prior: list[Poly] = []
    gb: Optional[GroebnerBasis] = None
    for idx, p in enumerate(seq):
        quotient = ideal_quotient(prior, p, order)
        bad = []
        for q in quotient:
            if gb is None:
                if not q.is_zero():
                    bad.append(q)
            elif not in_ideal(q, gb):
                bad.append(q)
        if bad:
            bad.sort(key=lambda q: order.key(q.leading(order.key)[0]))
            return RegularSequenceResult(False, idx, bad[0])
        prior.append(p)
        gb = groebner_basis(prior, order)
    return RegularSequenceResult(True)
