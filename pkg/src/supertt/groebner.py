"""Buchberger-based ideal arithmetic: membership, radical membership, sums
and products.

Everything runs over the fixed grevlex order of `supertt.poly`.  The radical
test uses the Rabinowitsch trick in a ring extended by one auxiliary
variable t ranked above all others: p lies in the radical of I iff
1 belongs to I + (1 - t*p).  Only the "is 1 in the ideal" question is ever
asked of the extended ring, so no elimination order is needed.

Computations count processed S-pairs against a work budget and raise
BudgetExceededError beyond it; they are never silently wrong.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceededError, default_budget
from .poly import Monomial, Poly, grevlex_key


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _quot(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _mono_mul(p: Poly, mono: Monomial, coeff: Fraction) -> Poly:
    out = {
        tuple(e + d for e, d in zip(mo, mono)): c * coeff
        for mo, c in p.terms.items()
    }
    q = Poly.__new__(Poly)
    q.nvars = p.nvars
    q.terms = out
    q._hash = None
    return q


def normal_form(p: Poly, basis: Sequence[Poly]) -> Poly:
    """Remainder of p under multivariate division by `basis` (full tail
    reduction).  Unique when `basis` is a Groebner basis."""
    if not basis:
        return p
    leads = [(g.leading()[0], g.leading()[1], g) for g in basis if g.terms]
    remainder = Poly.zero(p.nvars)
    work = p
    while work.terms:
        mono, coeff = work.leading()
        reduced = False
        for lm, lc, g in leads:
            if _divides(lm, mono):
                factor = _mono_mul(g, _quot(mono, lm), coeff / lc)
                work = work - factor
                reduced = True
                break
        if not reduced:
            term = Poly(p.nvars, {mono: coeff})
            remainder = remainder + term
            work = work - term
    return remainder


def s_poly(f: Poly, g: Poly) -> Poly:
    fm, fc = f.leading()
    gm, gc = g.leading()
    lcm = _lcm(fm, gm)
    return _mono_mul(f, _quot(lcm, fm), Fraction(1) / fc) - _mono_mul(
        g, _quot(lcm, gm), Fraction(1) / gc
    )


class GroebnerBasis:
    """Reduced Groebner basis for the fixed grevlex order."""

    __slots__ = ("basis", "nvars")

    def __init__(self, basis: Sequence[Poly], nvars: int):
        self.basis = tuple(basis)
        self.nvars = nvars

    def normal_form(self, p: Poly) -> Poly:
        return normal_form(p, self.basis)

    def contains(self, p: Poly) -> bool:
        return self.normal_form(p).is_zero()

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].total_degree() == 0

    def __repr__(self):
        return f"GroebnerBasis({list(self.basis)!r})"


def _autoreduce(basis: List[Poly]) -> List[Poly]:
    basis = [g.monic() for g in basis if g.terms]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda g: grevlex_key(g.leading()[0]))
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            r = normal_form(basis[i], others)
            if r != basis[i]:
                changed = True
                if r.terms:
                    basis[i] = r.monic()
                else:
                    del basis[i]
                break
    basis.sort(key=lambda g: grevlex_key(g.leading()[0]))
    return basis


def buchberger(
    generators: Sequence[Poly], budget: Optional[int] = None
) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger with the normal pair strategy.

    Deterministic: the reduced basis is unique for the order, so permuted
    generator lists give identical output.
    """
    gens = [g for g in generators if g.terms]
    if not gens:
        raise ValueError("ideal needs at least one nonzero generator")
    nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise ValueError("generators live in different rings")
    if budget is None:
        budget = default_budget()

    basis: List[Poly] = []
    for g in sorted(gens, key=lambda g: grevlex_key(g.leading()[0])):
        r = normal_form(g, basis)
        if r.terms:
            basis.append(r.monic())

    def pair_key(pair):
        i, j = pair
        lcm = _lcm(basis[i].leading()[0], basis[j].leading()[0])
        return (grevlex_key(lcm), i, j)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    work = 0
    while pairs:
        pair = min(pairs, key=pair_key)
        pairs.discard(pair)
        work += 1
        if work > budget:
            raise BudgetExceededError(
                f"Buchberger exceeded budget of {budget} S-pairs"
            )
        i, j = pair
        fi, fj = basis[i], basis[j]
        if _coprime(fi.leading()[0], fj.leading()[0]):
            continue
        r = normal_form(s_poly(fi, fj), basis)
        if r.terms:
            r = r.monic()
            basis.append(r)
            k = len(basis) - 1
            pairs.update((i2, k) for i2 in range(k))
            if r.total_degree() == 0:
                break
    return GroebnerBasis(_autoreduce(basis), nvars)


class Ideal:
    """An ideal given by generators, caching its reduced Groebner basis."""

    __slots__ = ("generators", "nvars", "_gb")

    def __init__(self, generators: Sequence[Poly]):
        gens = [g for g in generators if g.terms]
        if not gens:
            raise ValueError("ideal needs at least one nonzero generator")
        self.nvars = gens[0].nvars
        for g in gens:
            if g.nvars != self.nvars:
                raise ValueError("generators live in different rings")
        self.generators = tuple(gens)
        self._gb: Optional[GroebnerBasis] = None

    def groebner(self, budget: Optional[int] = None) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self.generators, budget=budget)
        return self._gb

    def contains(self, p: Poly, budget: Optional[int] = None) -> bool:
        return self.groebner(budget).contains(p)

    def __repr__(self):
        return f"Ideal({list(self.generators)!r})"


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.nvars != b.nvars:
        raise ValueError("ideals live in different rings")
    return Ideal(list(a.generators) + list(b.generators))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.nvars != b.nvars:
        raise ValueError("ideals live in different rings")
    return Ideal([f * g for f in a.generators for g in b.generators])


def _extend(p: Poly) -> Poly:
    """Embed Q[x_1..x_n] into Q[t, x_1..x_n] (t is variable 0)."""
    return Poly(p.nvars + 1, {(0,) + mono: c for mono, c in p.terms.items()})


def radical_member(
    p: Poly, ideal: Ideal | Sequence[Poly], budget: Optional[int] = None
) -> bool:
    """Exact test p in sqrt(I) via the Rabinowitsch trick."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    if p.is_zero():
        return True
    if p.total_degree() == 0:
        return ideal.groebner(budget).is_unit_ideal()
    # cheap sufficient checks first: membership of p or a small power
    gb = ideal.groebner(budget)
    if gb.is_unit_ideal():
        return True
    q = p
    for _ in range(2):
        if gb.contains(q):
            return True
        q = q * p
    n1 = p.nvars + 1
    t = Poly.variable(n1, 0)
    gens = [_extend(g) for g in ideal.generators]
    gens.append(Poly.const(n1, 1) - t * _extend(p))
    return buchberger(gens, budget=budget).is_unit_ideal()
