"""Free-divisor analysis.

Given a reduced polynomial equation f, the derivations logarithmic along
f = 0 are read off the syzygies of (f, df/dx_1, ..., df/dx_n): a relation
c_0 f + sum c_k f_k = 0 yields the field sum c_k D_k with multiplier -c_0.
A set of n such fields whose coefficient matrix has determinant equal to a
nonzero constant times f is a free basis (Saito's criterion); on top of a
certified basis sit the bracket structure constants, the determinant
derivation identity, Koszul-freeness of the principal symbols, and
holonomicity of the associated operator ideal.

All verdicts are global statements about the polynomial ring (the analytic
theory is local; reports carry the "global" qualifier).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .algebra import (NotDivisible, Poly, RationalFunction, exact_divide,
                      divides_power, is_squarefree)
from .groebner import (GREVLEX, RegularSequenceResult, is_regular_sequence,
                       syzygy_module)
from .weyl import (WeylOp, apply_operator, commutator, graded_ideal_dimension,
                   principal_symbol)

Matrix = list[list[Poly]]


class NotReduced(ValueError):
    """The divisor equation has a repeated factor."""

    def __init__(self, f: Poly, witness: Poly):
        super().__init__(f"not reduced: repeated factor {witness}")
        self.f = f
        self.witness = witness


# -- polynomial matrices -------------------------------------------------


def mat_det(A: Matrix) -> Poly:
    n = len(A)
    if n == 1:
        return A[0][0]
    vars = A[0][0].vars
    total = Poly.zero(vars)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * mat_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def mat_cofactor(A: Matrix) -> Matrix:
    """Cofactor matrix C with C[k][j] = (-1)^(k+j) * minor(k, j), so that
    det(A) = sum_j A[k][j] * C[k][j] for every row k."""
    n = len(A)
    if n == 1:
        return [[Poly.const(A[0][0].vars, 1)]]
    C: Matrix = []
    for k in range(n):
        row = []
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for i, r in enumerate(A) if i != k]
            m = mat_det(minor)
            row.append(m if (k + j) % 2 == 0 else -m)
        C.append(row)
    return C


def mat_apply(delta: WeylOp, A: Matrix) -> Matrix:
    """Apply a derivation entrywise."""
    return [[apply_operator(delta, a).as_poly() for a in row] for row in A]


def row_in_span(v: Sequence[Poly], A: Matrix, det: Poly) -> bool:
    """Membership of a row vector in the row span of a square matrix with
    nonzero determinant: v = u*A has a polynomial solution iff det divides
    every component of v * cofactor(A)^t... equivalently v * adjugate."""
    C = mat_cofactor(A)
    n = len(A)
    for j in range(n):
        # (v . adj(A))_j = sum_k v_k * C[j][k]  since adj = C^t
        s = Poly.zero(det.vars)
        for k in range(n):
            s = s + v[k] * C[j][k]
        try:
            exact_divide(s, det)
        except NotDivisible:
            return False
    return True


def solve_in_span(v: Sequence[Poly], A: Matrix, det: Poly) -> list[Poly]:
    """The unique u with v = u*A (requires membership)."""
    C = mat_cofactor(A)
    n = len(A)
    out = []
    for j in range(n):
        s = Poly.zero(det.vars)
        for k in range(n):
            s = s + v[k] * C[j][k]
        out.append(exact_divide(s, det))
    return out


# -- logarithmic fields ----------------------------------------------------


def field_coefficients(delta: WeylOp) -> list[Poly]:
    if not delta.is_vector_field():
        raise ValueError(f"{delta} is not an order-one operator without constant term")
    return [delta.coefficient_of_partial(k) for k in range(len(delta.vars))]


def logarithmic_membership(delta: WeylOp, f: Poly) -> tuple[bool, Optional[Poly]]:
    """Whether delta(f) is a multiple of f; on success also the multiplier
    a with delta(f) = a*f."""
    field_coefficients(delta)  # validates shape
    image = apply_operator(delta, f).as_poly()
    try:
        return True, exact_divide(image, f)
    except NotDivisible:
        return False, None


def lemma_det_check(A: Matrix, delta: WeylOp) -> bool:
    """Determinant derivation identity: delta(det A) equals the sum over rows
    of the delta-derived row paired with its cofactor row.  Holds for every
    derivation; used as a self-test primitive."""
    n = len(A)
    C = mat_cofactor(A)
    lhs = apply_operator(delta, mat_det(A)).as_poly()
    rhs = Poly.zero(lhs.vars)
    dA = mat_apply(delta, A)
    for k in range(n):
        for j in range(n):
            rhs = rhs + dA[k][j] * C[k][j]
    return lhs == rhs


def _alpha_closed_form(A: Matrix, fields: Sequence[WeylOp], det: Poly,
                       i: int, j: int) -> list[Poly]:
    """Structure constants of [delta_i, delta_j] against the basis rows, by
    the cofactor closed form: det(A) * alpha = v * adj(A) with
    v_l = delta_i(a_jl) - delta_j(a_il).  Exactness of the division is part
    of the freeness certificate (NotDivisible propagates)."""
    n = len(A)
    C = mat_cofactor(A)
    v = [apply_operator(fields[i], A[j][l]).as_poly()
         - apply_operator(fields[j], A[i][l]).as_poly() for l in range(n)]
    alpha = []
    for k in range(n):
        s = Poly.zero(det.vars)
        for l in range(n):
            s = s + v[l] * C[k][l]
        alpha.append(exact_divide(s, det))
    return alpha


@dataclass
class LogBasis:
    """Certified free basis of the logarithmic derivation module of f.

    Rows of `matrix` are the coefficient vectors of the fields; det(matrix)
    = det_constant * f exactly; fields[i](f) = multipliers[i] * f exactly;
    alpha[i][j] expresses [fields[i], fields[j]] over the basis.
    """

    f: Poly
    fields: list[WeylOp]
    matrix: Matrix
    multipliers: list[Poly]
    alpha: list[list[list[Poly]]]
    det_constant: Fraction

    @property
    def n(self) -> int:
        return len(self.fields)

    @classmethod
    def build(cls, f: Poly, matrix: Matrix) -> "LogBasis":
        """Certify a candidate coefficient matrix: Saito determinant test,
        multiplier divisions, closed-form structure constants, and an exact
        re-expansion of every commutator."""
        n = len(f.vars)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"need a {n}x{n} coefficient matrix")
        fields = [WeylOp.vector_field(row) for row in matrix]
        det = mat_det(matrix)
        quotient = exact_divide(det, f)  # NotDivisible on a non-basis
        if not quotient.is_constant():
            raise ValueError("determinant is not a constant multiple of f")
        c = quotient.constant_value()
        if c == 0:
            raise ValueError("determinant vanishes")
        multipliers = []
        for delta in fields:
            multipliers.append(exact_divide(apply_operator(delta, f).as_poly(), f))
        alpha: list[list[list[Poly]]] = [[None] * n for _ in range(n)]  # type: ignore
        zero_row = [Poly.zero(f.vars)] * n
        for i in range(n):
            alpha[i][i] = list(zero_row)
        for i in range(n):
            for j in range(i + 1, n):
                a = _alpha_closed_form(matrix, fields, det, i, j)
                expansion = WeylOp.zero(f.vars)
                for k in range(n):
                    expansion = expansion + WeylOp.from_poly(a[k]) * fields[k]
                if expansion != commutator(fields[i], fields[j]):
                    raise ValueError(
                        f"bracket [{fields[i]}, {fields[j]}] is not the closed-form "
                        "combination of the basis")
                alpha[i][j] = a
                alpha[j][i] = [-p for p in a]
        return cls(f, fields, matrix, multipliers, alpha, c)

    def contains_field(self, delta: WeylOp) -> bool:
        """Membership of a derivation in the span of the basis rows."""
        return row_in_span(field_coefficients(delta), self.matrix, mat_det(self.matrix))


def saito_check(fields: Sequence[WeylOp], f: Poly) -> tuple[bool, str]:
    """Saito's criterion: brackets of the fields stay inside their span and
    the coefficient determinant is a reduced equation equal to a nonzero
    constant times f."""
    n = len(f.vars)
    if len(fields) != n:
        raise ValueError(f"need exactly {n} fields, got {len(fields)}")
    matrix = [field_coefficients(d) for d in fields]
    det = mat_det(matrix)
    if det.is_zero():
        return False, "coefficient determinant vanishes"
    for i in range(n):
        for j in range(i + 1, n):
            try:
                alpha = _alpha_closed_form(matrix, list(fields), det, i, j)
                expansion = WeylOp.zero(f.vars)
                for k in range(n):
                    expansion = expansion + WeylOp.from_poly(alpha[k]) * fields[k]
                ok = expansion == commutator(fields[i], fields[j])
            except NotDivisible:
                ok = False
            if not ok:
                # closed form failed; fall back to module membership
                comm = commutator(fields[i], fields[j])
                if not row_in_span(field_coefficients(comm), matrix, det):
                    return False, f"bracket of fields {i} and {j} leaves the span"
    try:
        quotient = exact_divide(det, f)
    except NotDivisible:
        return False, "determinant is not a multiple of f"
    if not quotient.is_constant() or quotient.constant_value() == 0:
        return False, "determinant is not a constant multiple of f"
    sqf, witness = is_squarefree(det)
    if not sqf:
        return False, f"determinant is not reduced (repeated factor {witness})"
    return True, "Saito criterion satisfied"


def structure_constants(basis: LogBasis) -> list[list[list[Poly]]]:
    """Recompute the bracket structure constants from the closed form and
    verify them against direct commutator expansion."""
    fresh = LogBasis.build(basis.f, basis.matrix)
    return fresh.alpha


@dataclass
class DerlogResult:
    basis: Optional[LogBasis]
    generators: list[tuple[Poly, WeylOp]]  # (multiplier, field) pairs
    diagnostic: str

    @property
    def certified(self) -> bool:
        return self.basis is not None


def derlog(f: Poly, max_degree: int = 12) -> DerlogResult:
    """Compute generators of the logarithmic derivation module of f and
    search them for a free basis certified by Saito's criterion.

    Candidates are the syzygies of (f, grad f) of total degree at most
    `max_degree`, sorted by degree; n-subsets are tried in lexicographic
    order and the first whose determinant is a nonzero constant multiple of
    f wins.  If no subset certifies, the generator list is returned with an
    explanatory diagnostic.
    """
    sqf, witness = is_squarefree(f)
    if not sqf:
        raise NotReduced(f, witness)
    n = len(f.vars)
    syz = syzygy_module([f] + [f.diff(i) for i in range(n)])
    generators: list[tuple[Poly, WeylOp]] = []
    for vec in syz.generators:
        m = -vec[0]
        delta = WeylOp.vector_field(list(vec[1:]))
        if delta.is_zero():
            continue
        generators.append((m, delta))

    candidates = [g for g in generators
                  if max(c.total_degree() for c in field_coefficients(g[1])) <= max_degree]
    for subset in combinations(range(len(candidates)), n):
        matrix = [field_coefficients(candidates[i][1]) for i in subset]
        det = mat_det(matrix)
        if det.is_zero():
            continue
        try:
            quotient = exact_divide(det, f)
        except NotDivisible:
            continue
        if not quotient.is_constant():
            continue
        ok, reason = saito_check([candidates[i][1] for i in subset], f)
        if not ok:  # pragma: no cover - defensive; implied by the det test
            continue
        basis = LogBasis.build(f, matrix)
        return DerlogResult(basis, generators, "free basis certified by Saito's criterion")
    return DerlogResult(None, generators,
                        "freeness not certified: no generator subset has "
                        "determinant equal to a constant multiple of f")


# -- Koszul freeness and holonomicity ------------------------------------


@dataclass
class KoszulResult:
    koszul: bool
    failure_index: Optional[int]
    witness: Optional[Poly]
    symbols: list[Poly]
    scope: str = "global"


def koszul_check(basis: LogBasis) -> KoszulResult:
    """Regular-sequence test on the principal symbols of the basis fields,
    in the commutative ring of the doubled variables (global verdict)."""
    symbols = [principal_symbol(d) for d in basis.fields]
    r: RegularSequenceResult = is_regular_sequence(symbols)
    return KoszulResult(r.regular, r.failure_index, r.witness, symbols)


def holonomicity_check(basis: LogBasis) -> bool:
    """The operator ideal of the basis is holonomic iff the variety of its
    graded ideal has dimension n."""
    return graded_ideal_dimension(basis.fields) == basis.n


# -- logarithmic differential forms ----------------------------------------


@dataclass
class LogForm:
    """Meromorphic p-form with poles along f = 0: a coefficient for each
    p-subset of the variables, denominators dividing a power of f."""

    degree: int
    coefficients: dict[tuple[int, ...], RationalFunction]
    vars: tuple[str, ...]

    def coefficient(self, subset: tuple[int, ...]) -> RationalFunction:
        zero = RationalFunction.from_poly(Poly.zero(self.vars))
        return self.coefficients.get(subset, zero)


def logarithmic_form_check(omega: LogForm, f: Poly) -> bool:
    """A form with poles along f = 0 is logarithmic iff both f*omega and
    df ^ omega have polynomial coefficients."""
    for subset, c in omega.coefficients.items():
        if len(subset) != omega.degree or list(subset) != sorted(set(subset)):
            raise ValueError(f"bad index subset {subset}")
        if not divides_power(c.den, f):
            raise ValueError(f"coefficient denominator {c.den} does not divide a power of f")
    for c in omega.coefficients.values():
        if not (c * f).is_polynomial():
            return False
    n = len(f.vars)
    grad = [f.diff(i) for i in range(n)]
    for bigger in combinations(range(n), omega.degree + 1):
        total = RationalFunction.from_poly(Poly.zero(f.vars))
        for pos, i in enumerate(bigger):
            rest = bigger[:pos] + bigger[pos + 1:]
            sign = 1 if pos % 2 == 0 else -1
            total = total + omega.coefficient(rest) * grad[i] * sign
        if not total.is_polynomial():
            return False
    return True
