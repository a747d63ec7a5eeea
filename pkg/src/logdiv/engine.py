"""Shared Buchberger machinery over exponent-keyed term dictionaries.

Elements of a free module of finite rank are dicts mapping (position,
exponent) to Fraction; ring elements are the same with every position 0, and
ideals are the rank-1 module case.  The commutative polynomial engine and the
differential-operator engine differ only in how a ring term multiplies an
element from the left, injected here as `term_mul`.  Leading-monomial
arithmetic (divisibility, lcm, S-pair construction) is identical in both
cases because normal-ordering corrections are always strictly smaller in any
admissible order.

Orders extend to module terms term-over-position: compare exponents first,
break ties toward the lower position.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Callable, Optional

Term = tuple[int, tuple[int, ...]]
Vec = dict[Term, Fraction]
TermMul = Callable[[Fraction, tuple[int, ...], Vec], Vec]


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for t, c in b.items():
        s = out.get(t, Fraction(0)) + c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def vec_scale(a: Vec, c: Fraction) -> Vec:
    if not c:
        return {}
    return {t: v * c for t, v in a.items()}


def vec_sub(a: Vec, b: Vec) -> Vec:
    return vec_add(a, vec_scale(b, Fraction(-1)))


def commutative_term_mul(c: Fraction, e: tuple[int, ...], v: Vec) -> Vec:
    out: Vec = {}
    for (pos, e2), c2 in v.items():
        out[(pos, tuple(a + b for a, b in zip(e, e2)))] = c * c2
    return out


def elem_mul(q: Vec, v: Vec, term_mul: TermMul) -> Vec:
    """Multiply a ring element q (positions all 0) onto a vector from the left."""
    out: Vec = {}
    for (pos, e), c in q.items():
        if pos != 0:
            raise ValueError("ring element has a nonzero position")
        out = vec_add(out, term_mul(c, e, v))
    return out


class GBEngine:
    """Buchberger driver with optional transformation tracking and Schreyer
    syzygy extraction, generic over the left term action."""

    def __init__(self, term_mul: TermMul, order_key, commutative: bool):
        self.term_mul = term_mul
        self.key = order_key
        self.commutative = commutative

    # -- term helpers --------------------------------------------------

    def term_key(self, t: Term):
        pos, e = t
        return (self.key(e), -pos)

    def leading(self, v: Vec) -> tuple[Term, Fraction]:
        t = max(v, key=self.term_key)
        return t, v[t]

    def monic(self, v: Vec) -> tuple[Vec, Fraction]:
        _, c = self.leading(v)
        return vec_scale(v, 1 / c), c

    # -- division ------------------------------------------------------

    def reduce(self, v: Vec, basis: list[Vec], want_cofactors: bool = False):
        """Full normal form of v against basis (leading and tail reduction).

        Returns (remainder, cofactors) with v = sum(cofactors[i] * basis[i])
        + remainder; cofactors is None unless requested.
        """
        leads = [self.leading(g) for g in basis]
        cof: Optional[list[Vec]] = [{} for _ in basis] if want_cofactors else None
        rem: Vec = {}
        work = dict(v)
        while work:
            t = max(work, key=self.term_key)
            c = work[t]
            pos, e = t
            hit = None
            for i, ((gpos, ge), gc) in enumerate(leads):
                if gpos == pos and all(a >= b for a, b in zip(e, ge)):
                    hit = (i, ge, gc)
                    break
            if hit is None:
                rem[t] = c
                del work[t]
                continue
            i, ge, gc = hit
            me = tuple(a - b for a, b in zip(e, ge))
            coef = c / gc
            work = vec_sub(work, self.term_mul(coef, me, basis[i]))
            if cof is not None:
                cof[i] = vec_add(cof[i], {(0, me): coef})
        return rem, cof

    def is_member(self, v: Vec, gb: list[Vec]) -> bool:
        if not v:
            return True
        if not gb:
            return False
        rem, _ = self.reduce(v, gb)
        return not rem

    # -- Buchberger ----------------------------------------------------

    def buchberger(self, inputs: list[Vec], track: bool = False,
                   use_criteria: bool = True):
        """Compute a (non-reduced) left Groebner basis.

        Returns (gb, reps, syzygies):
          gb        -- monic basis vectors; the nonzero inputs appear scaled
                       monic as its first elements
          reps      -- reps[k] expresses gb[k] over the inputs (tracked mode)
          syzygies  -- Schreyer generators of Syz(gb), as vectors whose
                       position indexes gb (tracked mode; criteria disabled)
        """
        if track:
            use_criteria = False
        gb: list[Vec] = []
        reps: list[Vec] = []
        lead: list[Term] = []
        for i, v in enumerate(inputs):
            if not v:
                continue
            m, c = self.monic(v)
            gb.append(m)
            reps.append({(i, self._zero_exp(v)): 1 / c})
            lead.append(self.leading(m)[0])

        syzygies: list[Vec] = []
        pairs: list[tuple] = []
        done: set[tuple[int, int]] = set()

        def lcm_exp(i: int, j: int):
            (pi, ei), (pj, ej) = lead[i], lead[j]
            if pi != pj:
                return None
            return tuple(max(a, b) for a, b in zip(ei, ej))

        def push(i: int, j: int):
            le = lcm_exp(i, j)
            if le is None:
                return
            heapq.heappush(pairs, (self.key(le), i, j, le))

        for j in range(len(gb)):
            for i in range(j):
                push(i, j)

        while pairs:
            _, i, j, le = heapq.heappop(pairs)
            done.add((i, j))
            if use_criteria:
                ei, ej = lead[i][1], lead[j][1]
                if self.commutative and tuple(a + b for a, b in zip(ei, ej)) == le:
                    continue  # coprime leading terms (commutative only)
                skip = False
                for k in range(len(gb)):
                    if k in (i, j) or lead[k][0] != lead[i][0]:
                        continue
                    ek = lead[k][1]
                    if all(a <= b for a, b in zip(ek, le)) and \
                            (min(i, k), max(i, k)) in done and \
                            (min(j, k), max(j, k)) in done:
                        skip = True
                        break
                if skip:
                    continue
            mi = tuple(a - b for a, b in zip(le, lead[i][1]))
            mj = tuple(a - b for a, b in zip(le, lead[j][1]))
            spoly = vec_sub(self.term_mul(Fraction(1), mi, gb[i]),
                            self.term_mul(Fraction(1), mj, gb[j]))
            rem, cof = self.reduce(spoly, gb, want_cofactors=track)
            if track:
                z: Vec = {(i, mi): Fraction(1)}
                z = vec_sub(z, {(j, mj): Fraction(1)})
                for k, q in enumerate(cof):
                    for (_, qe), qc in q.items():
                        z = vec_sub(z, {(k, qe): qc})
            if rem:
                m, c = self.monic(rem)
                if track:
                    z = vec_sub(z, {(len(gb), self._zero_exp(rem)): c})
                    rep = {}
                    rep = vec_add(rep, self.term_mul(Fraction(1), mi, reps[i]))
                    rep = vec_sub(rep, self.term_mul(Fraction(1), mj, reps[j]))
                    for k, q in enumerate(cof):
                        if q:
                            rep = vec_sub(rep, elem_mul(q, reps[k], self.term_mul))
                    reps.append(vec_scale(rep, 1 / c))
                gb.append(m)
                lead.append(self.leading(m)[0])
                new = len(gb) - 1
                for k in range(new):
                    push(k, new)
            if track:
                syzygies.append(z)
        return gb, (reps if track else None), (syzygies if track else None)

    def _zero_exp(self, v: Vec) -> tuple[int, ...]:
        t = next(iter(v))
        return (0,) * len(t[1])

    # -- reduced basis ---------------------------------------------------

    def reduced_basis(self, inputs: list[Vec], track: bool = False):
        """Canonical auto-reduced monic Groebner basis, sorted by ascending
        leading term; with track=True also the expression of each element
        over the inputs."""
        gb, reps, _ = self.buchberger(inputs, track=track)
        # drop elements whose leading term is divisible by another's
        keep: list[int] = []
        leads = [self.leading(g)[0] for g in gb]
        for i, (pi, ei) in enumerate(leads):
            dominated = False
            for j, (pj, ej) in enumerate(leads):
                if i == j or pi != pj:
                    continue
                if all(a >= b for a, b in zip(ei, ej)):
                    if tuple(ej) != tuple(ei) or j < i:
                        dominated = True
                        break
            if not dominated:
                keep.append(i)
        gb = [gb[i] for i in keep]
        reps = [reps[i] for i in keep] if track else None
        # tail-reduce each element against the others
        out: list[Vec] = []
        out_reps: list[Vec] = []
        for i, g in enumerate(gb):
            others = gb[:i] + gb[i + 1:]
            rem, cof = self.reduce(g, others, want_cofactors=track)
            if not rem:
                continue
            rem, c = self.monic(rem)
            out.append(rem)
            if track:
                rep = reps[i]
                for k, q in enumerate(cof):
                    src = k if k < i else k + 1
                    if q:
                        rep = vec_sub(rep, elem_mul(q, reps[src], self.term_mul))
                out_reps.append(vec_scale(rep, 1 / c))
        idx = sorted(range(len(out)), key=lambda k: self.term_key(self.leading(out[k])[0]))
        out = [out[k] for k in idx]
        if track:
            out_reps = [out_reps[k] for k in idx]
        return out, (out_reps if track else None)

    # -- syzygies ----------------------------------------------------------

    def syzygies(self, inputs: list[Vec]) -> list[Vec]:
        """Generators of the left syzygy module of `inputs`, via Schreyer's
        construction on a tracked (non-reduced) Groebner basis."""
        nz = [i for i, v in enumerate(inputs) if v]
        out: list[Vec] = []
        exp_len = None
        for v in inputs:
            if v:
                exp_len = len(next(iter(v))[1])
                break
        if exp_len is None:
            # all inputs zero: unit syzygies only
            return []
        zero_e = (0,) * exp_len
        for i, v in enumerate(inputs):
            if not v:
                out.append({(i, zero_e): Fraction(1)})
        live = [inputs[i] for i in nz]
        gb, reps, zs = self.buchberger(live, track=True)
        for z in zs:
            syz: Vec = {}
            for (k, e), c in z.items():
                syz = vec_add(syz, self.term_mul(c, e, reps[k]))
            if syz:
                # re-index over the original input positions
                out.append({(nz[pos], e): c for (pos, e), c in syz.items()})
        return out

    def normalize_sign(self, v: Vec) -> Vec:
        if not v:
            return v
        _, c = self.leading(v)
        return vec_scale(v, Fraction(-1)) if c < 0 else v

    def sort_vectors(self, vs: list[Vec]) -> list[Vec]:
        def skey(v: Vec):
            t, _ = self.leading(v)
            deg = max(sum(e) for _, e in v)
            return (deg, self.term_key(t), len(v), sorted(v.items()))
        return sorted(vs, key=skey)

    def dedupe(self, vs: list[Vec]) -> list[Vec]:
        seen = []
        out = []
        for v in vs:
            m, _ = self.monic(v)
            if m not in seen:
                seen.append(m)
                out.append(v)
        return out

    def minimize(self, vs: list[Vec]) -> list[Vec]:
        """Greedily remove generators lying in the module of the others
        (largest first); deterministic given the sort order."""
        vs = self.sort_vectors(self.dedupe([v for v in vs if v]))
        i = len(vs) - 1
        while i >= 0 and len(vs) > 1:
            rest = vs[:i] + vs[i + 1:]
            gb, _, _ = self.buchberger(rest)
            if self.is_member(vs[i], gb):
                vs = rest
            i -= 1
        return vs
