"""Exact multivariate polynomial and rational-function arithmetic over Q.

A polynomial is a sparse map from exponent vectors (one non-negative int per
variable) to nonzero Fraction coefficients.  Everything downstream -- Groebner
bases, differential operators, divisor analysis -- runs on this kernel, so all
arithmetic here is exact: no floats anywhere.

Canonical term order for iteration and printing is graded reverse
lexicographic (grevlex).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

Exponent = tuple[int, ...]


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class PolyParseError(ValueError):
    """Syntax or name error while parsing a polynomial expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def grevlex_key(e: Exponent):
    """Sort key realizing grevlex: compare total degree, then reverse lex on
    negated exponents.  Larger key = larger monomial."""
    return (sum(e), tuple(-x for x in reversed(e)))


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class Poly:
    """Immutable sparse polynomial with Fraction coefficients.

    `vars` fixes the variable context; all arithmetic requires both operands
    to share it.  `terms` never stores zero coefficients.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: dict[Exponent, Fraction]):
        vs = tuple(vars)
        clean: dict[Exponent, Fraction] = {}
        for e, c in terms.items():
            c = _coerce(c)
            if c:
                if len(e) != len(vs):
                    raise ValueError("exponent length does not match variable count")
                clean[tuple(e)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Sequence[str], c) -> "Poly":
        return cls(vars, {(0,) * len(vars): _coerce(c)})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Poly":
        idx = list(vars).index(name)
        e = [0] * len(vars)
        e[idx] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], exponent: Exponent, c=1) -> "Poly":
        return cls(vars, {tuple(exponent): _coerce(c)})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def leading(self, key=grevlex_key) -> tuple[Exponent, Fraction]:
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def sorted_terms(self, reverse: bool = True) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=reverse)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Poly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return Poly.zero(self.vars)
            return Poly(self.vars, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def diff(self, index: int) -> "Poly":
        """Formal partial derivative with respect to the index-th variable."""
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            k = e[index]
            if k:
                e2 = e[:index] + (k - 1,) + e[index + 1:]
                out[e2] = out.get(e2, Fraction(0)) + c * k
        return Poly(self.vars, out)

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e)
                if k
            )
            ac = abs(c)
            if mono:
                body = mono if ac == 1 else f"{ac}*{mono}"
            else:
                body = str(ac)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, vars={self.vars})"


def partial_derivative(p: Poly, index: int) -> Poly:
    if index < 0 or index >= len(p.vars):
        raise IndexError(f"variable index {index} out of range")
    return p.diff(index)


def gradient(p: Poly) -> list[Poly]:
    return [p.diff(i) for i in range(len(p.vars))]


# -- parsing ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()/]))")


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.text = text
        self.vars = tuple(vars)
        self.pos = 0
        self.tok: Optional[str] = None
        self.tok_pos = 0
        self._advance()

    def _advance(self):
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            stripped = self.text[self.pos:].strip()
            if stripped:
                raise PolyParseError(f"unexpected character {stripped[0]!r}", self.pos)
            self.tok = None
            self.tok_pos = len(self.text)
            return
        self.tok = m.group(1) or m.group(2) or m.group(3)
        self.tok_pos = m.start(m.lastindex)
        self.pos = m.end()

    def _expect(self, t: str):
        if self.tok != t:
            raise PolyParseError(f"expected {t!r}, found {self.tok!r}", self.tok_pos)
        self._advance()

    def parse(self) -> Poly:
        p = self.expr()
        if self.tok is not None:
            raise PolyParseError(f"trailing input {self.tok!r}", self.tok_pos)
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.tok in ("+", "-"):
            sign = -1 if self.tok == "-" else 1
            self._advance()
        p = self.term() * sign
        while self.tok in ("+", "-"):
            op = self.tok
            self._advance()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.tok == "*":
            self._advance()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        if self.tok == "-":
            self._advance()
            return -self.factor()
        p = self.base()
        if self.tok == "^":
            self._advance()
            if self.tok is None or not self.tok.isdigit():
                raise PolyParseError("expected a non-negative integer exponent", self.tok_pos)
            n = int(self.tok)
            self._advance()
            p = p ** n
        return p

    def base(self) -> Poly:
        tok, at = self.tok, self.tok_pos
        if tok is None:
            raise PolyParseError("unexpected end of input", at)
        if tok == "(":
            self._advance()
            p = self.expr()
            self._expect(")")
            return p
        if tok.isdigit():
            self._advance()
            num = int(tok)
            if self.tok == "/":
                self._advance()
                if self.tok is None or not self.tok.isdigit():
                    raise PolyParseError("expected an integer denominator", self.tok_pos)
                den = int(self.tok)
                if den == 0:
                    raise PolyParseError("zero denominator", self.tok_pos)
                self._advance()
                return Poly.const(self.vars, Fraction(num, den))
            return Poly.const(self.vars, num)
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            if tok not in self.vars:
                raise PolyParseError(f"unknown variable {tok!r}", at)
            self._advance()
            return Poly.variable(self.vars, tok)
        raise PolyParseError(f"unexpected token {tok!r}", at)


def parse_poly(text: str, vars: Sequence[str]) -> Poly:
    """Parse an expression over `vars` in the grammar

        expr   := ['+'|'-'] term (('+'|'-') term)*
        term   := factor ('*' factor)*
        factor := ['-'] base ('^' nat)?
        base   := nat ('/' nat)? | var | '(' expr ')'

    Unknown names and malformed syntax raise PolyParseError with a position.
    """
    return _Parser(text, vars).parse()


# -- exact division, gcd, squarefreeness --------------------------------


def exact_divide(p: Poly, q: Poly) -> Poly:
    """Return r with p = q*r, raising NotDivisible if no such r exists."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return Poly.zero(p.vars)
    p._check(q)
    qe, qc = q.leading()
    rem = dict(p.terms)
    out: dict[Exponent, Fraction] = {}
    while rem:
        e = max(rem, key=grevlex_key)
        c = rem[e]
        d = tuple(a - b for a, b in zip(e, qe))
        if any(x < 0 for x in d):
            raise NotDivisible(f"({p}) is not divisible by ({q})")
        coef = c / qc
        out[d] = coef
        for e2, c2 in q.terms.items():
            e3 = tuple(a + b for a, b in zip(d, e2))
            s = rem.get(e3, Fraction(0)) - coef * c2
            if s:
                rem[e3] = s
            else:
                rem.pop(e3, None)
    return Poly(p.vars, out)


def normalize_primitive(p: Poly) -> Poly:
    """Scale p to integer coprime coefficients with positive leading one."""
    if p.is_zero():
        return p
    den_lcm = 1
    for c in p.terms.values():
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    num_gcd = 0
    for c in p.terms.values():
        num_gcd = math.gcd(num_gcd, abs(c.numerator * (den_lcm // c.denominator)))
    scale = Fraction(den_lcm, num_gcd)
    if p.leading()[1] < 0:
        scale = -scale
    return p * scale


def _vars_present(p: Poly) -> list[int]:
    n = len(p.vars)
    present = [False] * n
    for e in p.terms:
        for i, k in enumerate(e):
            if k:
                present[i] = True
    return [i for i in range(n) if present[i]]


def _as_univariate(p: Poly, v: int) -> dict[int, Poly]:
    """View p as a univariate polynomial in variable v with Poly coefficients
    (which do not involve v)."""
    out: dict[int, Poly] = {}
    for e, c in p.terms.items():
        d = e[v]
        e2 = e[:v] + (0,) + e[v + 1:]
        coeff = out.get(d)
        add = Poly(p.vars, {e2: c})
        out[d] = add if coeff is None else coeff + add
    return {d: q for d, q in out.items() if not q.is_zero()}


def _uv_to_poly(u: dict[int, Poly], v: int, vars: Sequence[str]) -> Poly:
    total = Poly.zero(vars)
    xv = Poly.variable(vars, vars[v])
    for d, q in u.items():
        total = total + q * xv ** d
    return total


def _uv_deg(u: dict[int, Poly]) -> int:
    return max(u) if u else -1


def _uv_scale(u: dict[int, Poly], q: Poly) -> dict[int, Poly]:
    return {d: c * q for d, c in u.items() if not (c * q).is_zero()}


def _uv_sub(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    out = dict(a)
    for d, c in b.items():
        s = out.get(d, Poly.zero(c.vars)) - c
        if s.is_zero():
            out.pop(d, None)
        else:
            out[d] = s
    return out


def _uv_shift(u: dict[int, Poly], k: int) -> dict[int, Poly]:
    return {d + k: c for d, c in u.items()}


def _pseudo_rem(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    db = _uv_deg(b)
    lb = b[db]
    r = dict(a)
    e = _uv_deg(a) - db + 1
    while r and _uv_deg(r) >= db:
        dr = _uv_deg(r)
        lr = r[dr]
        r = _uv_sub(_uv_scale(r, lb), _uv_shift(_uv_scale(b, lr), dr - db))
        e -= 1
    for _ in range(e):
        r = _uv_scale(r, lb)
    return r


def _uv_content(u: dict[int, Poly], vars: Sequence[str]) -> Poly:
    g = Poly.zero(vars)
    for c in u.values():
        g = poly_gcd(g, c)
    return g


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Multivariate gcd over Q via primitive subresultant remainder
    sequences on a recursive univariate view.

    The result is normalized primitive (integer coprime coefficients,
    positive leading coefficient); gcd(p, 0) = normalize(p).
    """
    if p.is_zero():
        return normalize_primitive(q)
    if q.is_zero():
        return normalize_primitive(p)
    p._check(q)
    pv, qv = _vars_present(p), _vars_present(q)
    if not pv or not qv:
        return Poly.const(p.vars, 1)
    common = p.vars
    v = min(pv[0], qv[0])
    if v not in pv or v not in qv:
        # One argument does not involve v; gcd divides the other's content.
        if v in pv:
            return poly_gcd(_uv_content(_as_univariate(p, v), common), q)
        return poly_gcd(p, _uv_content(_as_univariate(q, v), common))

    a = _as_univariate(p, v)
    b = _as_univariate(q, v)
    ca = _uv_content(a, common)
    cb = _uv_content(b, common)
    a = {d: exact_divide(c, ca) for d, c in a.items()}
    b = {d: exact_divide(c, cb) for d, c in b.items()}
    if _uv_deg(a) < _uv_deg(b):
        a, b = b, a

    one = Poly.const(common, 1)
    g = one
    h = one
    while True:
        delta = _uv_deg(a) - _uv_deg(b)
        r = _pseudo_rem(a, b)
        if not r:
            break
        if _uv_deg(r) == 0:
            b = {0: one}
            break
        a, b = b, _uv_scale_div(r, g * h ** delta)
        g = a[_uv_deg(a)]
        if delta >= 1:
            h = exact_divide(g ** delta, h ** (delta - 1))
    result = _uv_to_poly(b, v, common)
    result = exact_divide(result, _uv_content(b, common))
    return normalize_primitive(result * poly_gcd(ca, cb))


def _uv_scale_div(u: dict[int, Poly], q: Poly) -> dict[int, Poly]:
    return {d: exact_divide(c, q) for d, c in u.items()}


def is_squarefree(p: Poly) -> tuple[bool, Optional[Poly]]:
    """Test squarefreeness via the gcd of p with its full gradient.

    Returns (True, None) or (False, witness) where witness is a nonconstant
    common factor of p and all its partials (a repeated factor of p).
    """
    if p.is_zero():
        raise ValueError("zero polynomial is not a divisor equation")
    g = p
    for i in range(len(p.vars)):
        g = poly_gcd(g, p.diff(i))
        if g.is_constant():
            return True, None
    return False, g


# -- weighted homogeneity ------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    """Positive integer weights (coprime) and the common weighted degree."""

    weights: tuple[int, ...]
    degree: int

    def term_degree(self, e: Exponent) -> int:
        return sum(w * k for w, k in zip(self.weights, e))


def rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot column list)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel_basis(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel of the given matrix over Q."""
    if not rows:
        return [[Fraction(i == j) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -m[ri][fc]
        basis.append(v)
    return basis


def _fm_feasible(ineqs: list[tuple[list[Fraction], Fraction]], nvars: int) -> Optional[list[Fraction]]:
    """Find t with coeffs . t >= const for every inequality, by
    Fourier-Motzkin elimination; None if infeasible."""
    if nvars == 0:
        return [] if all(const <= 0 for _, const in ineqs) else None
    pos = [iq for iq in ineqs if iq[0][-1] > 0]
    neg = [iq for iq in ineqs if iq[0][-1] < 0]
    zero = [iq for iq in ineqs if iq[0][-1] == 0]
    reduced = [(c[:-1], d) for c, d in zero]
    for cp, dp in pos:
        for cn, dn in neg:
            a, b = cp[-1], -cn[-1]
            comb = [b * x + a * y for x, y in zip(cp[:-1], cn[:-1])]
            reduced.append((comb, b * dp + a * dn))
    rest = _fm_feasible(reduced, nvars - 1)
    if rest is None:
        return None
    lowers = [(d - sum(c * t for c, t in zip(cs[:-1], rest))) / cs[-1] for cs, d in pos]
    uppers = [(d - sum(c * t for c, t in zip(cs[:-1], rest))) / cs[-1] for cs, d in neg]
    if lowers:
        val = max(lowers)
    elif uppers:
        val = min(uppers)
    else:
        val = Fraction(0)
    return rest + [val]


def weighted_homogeneity(p: Poly) -> Optional[WeightVector]:
    """Search for positive weights making every term of p the same weighted
    degree.  Exact: kernel of the exponent-difference matrix, then a strictly
    positive point found by Fourier-Motzkin; weights are normalized to
    coprime positive integers.  Returns None if no positive solution exists.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no weighted-degree structure")
    n = len(p.vars)
    exps = sorted(p.terms, key=grevlex_key)
    e0 = exps[0]
    rows = [[Fraction(e[i] - e0[i]) for i in range(n)] for e in exps[1:]]
    rows = [r for r in rows if any(r)]
    basis = kernel_basis(rows, n)
    if not basis:
        return None
    k = len(basis)
    # Need (B t)_i >= 1 componentwise, where columns of B are the basis vectors.
    ineqs = [([basis[j][i] for j in range(k)], Fraction(1)) for i in range(n)]
    t = _fm_feasible(ineqs, k)
    if t is None:
        return None
    w = [sum(basis[j][i] * t[j] for j in range(k)) for i in range(n)]
    den_lcm = 1
    for x in w:
        den_lcm = den_lcm * x.denominator // math.gcd(den_lcm, x.denominator)
    ints = [int(x * den_lcm) for x in w]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    weights = tuple(x // g for x in ints)
    if any(x <= 0 for x in weights):
        return None
    wv = WeightVector(weights, sum(w_ * k_ for w_, k_ in zip(weights, e0)))
    for e in exps:
        if wv.term_degree(e) != wv.degree:
            return None
    return wv


# -- rational functions ---------------------------------------------------


class RationalFunction:
    """Quotient of polynomials, always reduced: gcd(num, den) constant and
    den monic under grevlex."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num._check(den)
        if num.is_zero():
            den = Poly.const(num.vars, 1)
        else:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = exact_divide(num, g)
                den = exact_divide(den, g)
        lc = den.leading()[1] if not den.is_zero() else Fraction(1)
        object.__setattr__(self, "num", num * (1 / lc))
        object.__setattr__(self, "den", den * (1 / lc))

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p, Poly.const(p.vars, 1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num * (1 / self.den.constant_value())

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = RationalFunction.from_poly(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce_rf(other))

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def _coerce_rf(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_poly(Poly.const(self.num.vars, other))
        raise TypeError(f"cannot combine RationalFunction with {type(other).__name__}")

    def diff(self, index: int) -> "RationalFunction":
        return RationalFunction(
            self.num.diff(index) * self.den - self.num * self.den.diff(index),
            self.den * self.den,
        )

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.as_poly())
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self!s})"


def divides_power(d: Poly, f: Poly) -> bool:
    """True iff d divides some power of f (every irreducible factor of d
    divides f)."""
    if d.is_constant():
        return True
    rest = d
    while True:
        g = poly_gcd(rest, f)
        if g.is_constant():
            return rest.is_constant()
        rest = exact_divide(rest, g)
        if rest.is_constant():
            return True
