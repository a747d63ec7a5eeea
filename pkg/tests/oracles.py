"""Independent brute-force oracles used by the tests.

The syzygy oracles find all relations of bounded degree by solving exact
linear systems in the unknown cofactor coefficients -- no Groebner machinery
involved -- so they can certify completeness of the syzygy computations on
small instances.
"""

from fractions import Fraction
from itertools import product

from logdiv.algebra import Poly, kernel_basis
from logdiv.weyl import WeylOp


def monomials_up_to(nvars: int, degree: int):
    out = []
    for e in product(range(degree + 1), repeat=nvars):
        if sum(e) <= degree:
            out.append(e)
    return sorted(out)


def poly_syzygies_by_ansatz(gens: list[Poly], degree: int) -> list[tuple[Poly, ...]]:
    """All syzygies among gens whose cofactors have total degree <= degree."""
    vars = gens[0].vars
    n = len(vars)
    monos = monomials_up_to(n, degree)
    unknowns = [(i, m) for i in range(len(gens)) for m in monos]
    rows_by_exp: dict = {}
    for col, (i, m) in enumerate(unknowns):
        prod_ = Poly.monomial(vars, m) * gens[i]
        for e, c in prod_.terms.items():
            rows_by_exp.setdefault(e, [Fraction(0)] * len(unknowns))[col] = c
    matrix = list(rows_by_exp.values())
    kernel = kernel_basis(matrix, len(unknowns))
    out = []
    for v in kernel:
        cof = [Poly.zero(vars) for _ in gens]
        for col, coeff in enumerate(v):
            if coeff:
                i, m = unknowns[col]
                cof[i] = cof[i] + Poly.monomial(vars, m, coeff)
        out.append(tuple(cof))
    return out


def weyl_monomials_up_to(nvars: int, degree: int):
    out = []
    for e in product(range(degree + 1), repeat=2 * nvars):
        if sum(e) <= degree:
            out.append((e[:nvars], e[nvars:]))
    return sorted(out)


def weyl_syzygies_by_ansatz(gens: list[WeylOp], degree: int) -> list[tuple[WeylOp, ...]]:
    """All left relations among gens with cofactors of (x, D)-degree <= degree."""
    vars = gens[0].vars
    n = len(vars)
    monos = weyl_monomials_up_to(n, degree)
    unknowns = [(i, ab) for i in range(len(gens)) for ab in monos]
    rows_by_term: dict = {}
    for col, (i, ab) in enumerate(unknowns):
        term_op = WeylOp(vars, {ab: Fraction(1)})
        prod_ = term_op * gens[i]
        for t, c in prod_.terms.items():
            rows_by_term.setdefault(t, [Fraction(0)] * len(unknowns))[col] = c
    matrix = list(rows_by_term.values())
    kernel = kernel_basis(matrix, len(unknowns))
    out = []
    for v in kernel:
        cof = [WeylOp.zero(vars) for _ in gens]
        for col, coeff in enumerate(v):
            if coeff:
                i, ab = unknowns[col]
                cof[i] = cof[i] + WeylOp(vars, {ab: coeff})
        out.append(tuple(cof))
    return out
