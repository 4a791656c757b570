"""Buchberger's algorithm with the Gebauer-Moeller criteria.

Monomials are packed ints (see :class:`~mldsl.polyring.orders.PackedLayout`);
a working polynomial is a list of ``(key, E, c)`` triples, descending by key.
Basis elements are kept monic.
"""

from __future__ import annotations

import time
from heapq import heapify, heappop, heappush
from typing import Sequence

from ..polyring import ExponentOverflow, MonomialOrder, Polynomial
from .context import Budget, BudgetExceeded, GBStats, current_budget


class _Elem:
    __slots__ = ("terms", "lk", "lE", "deg", "sugar")

    def __init__(self, terms, sugar, layout):
        self.terms = terms
        self.lk, self.lE, _ = terms[0]
        self.deg = sum(layout.unpack(self.lE))
        self.sugar = sugar


class Engine:
    """One Groebner computation in a fixed ring, field and order."""

    def __init__(self, ring, order: MonomialOrder, budget: Budget | None = None, stats: GBStats | None = None):
        self.ring = ring
        self.order = order
        self.layout = order.layout(ring.nvars)
        self.guard = self.layout.guard
        self.p = ring.field.modulus
        self.field = ring.field
        self.budget = budget if budget is not None else current_budget()
        self.stats = stats if stats is not None else GBStats()
        self.basis: list[_Elem] = []
        self.active: list[int] = []

    # conversion ---------------------------------------------------------

    def to_terms(self, f: Polynomial):
        pack, key = self.layout.pack, self.layout.key
        ts = []
        for e, c in f.items():
            E = pack(e)
            ts.append((key(E), E, c))
        ts.sort(reverse=True)
        return ts

    def from_terms(self, terms) -> Polynomial:
        unpack = self.layout.unpack
        return Polynomial(self.ring, {unpack(E): c for _, E, c in terms}, _clean=True)

    def _monic(self, terms):
        c0 = terms[0][2]
        if c0 == 1:
            return terms
        if self.p:
            inv = pow(c0, -1, self.p)
            p = self.p
            return [(k, E, c * inv % p) for k, E, c in terms]
        return [(k, E, c / c0) for k, E, c in terms]

    # reduction ----------------------------------------------------------

    def reduce(self, start, reducers: Sequence[int], full: bool = True):
        """Normal form of the polynomial given by ``start`` (iterable of
        ``(key, E, c)``) modulo the monic basis elements ``reducers``.

        Returns the remainder as a descending term list.  With ``full=False``
        it stops at the first irreducible term (the remainder's tail is then
        left unreduced)."""
        p = self.p
        guard = self.guard
        basis = self.basis
        lead = [(basis[i].lE, basis[i].lk, basis[i].terms) for i in reducers]
        coef = {}
        emon = {}
        for k, E, c in start:
            if k in coef:
                v = coef[k] + c
                if p:
                    v %= p
                if v:
                    coef[k] = v
                else:
                    del coef[k]
            elif c:
                coef[k] = c
                emon[k] = E
        heap = [-k for k in coef]
        heapify(heap)
        rem = []
        max_terms = self.budget.max_terms if self.budget else None
        peak = len(coef)
        while heap:
            k = -heappop(heap)
            c = coef.pop(k, None)
            if c is None:
                continue
            E = emon[k]
            for lE, lk, gterms in lead:
                if not (E - lE) & guard:
                    break
            else:
                rem.append((k, E, c))
                if not full:
                    # hand back the untouched tail as-is
                    for kk in sorted(coef, reverse=True):
                        rem.append((kk, emon[kk], coef[kk]))
                    return rem
                continue
            qk = k - lk
            qE = E - lE
            it = iter(gterms)
            next(it)
            if p:
                for gk, gE, gc in it:
                    nk = gk + qk
                    old = coef.get(nk)
                    if old is None:
                        coef[nk] = (-c * gc) % p
                        emon[nk] = gE + qE
                        heappush(heap, -nk)
                    else:
                        v = (old - c * gc) % p
                        if v:
                            coef[nk] = v
                        else:
                            del coef[nk]
            else:
                for gk, gE, gc in it:
                    nk = gk + qk
                    old = coef.get(nk)
                    if old is None:
                        coef[nk] = -c * gc
                        emon[nk] = gE + qE
                        heappush(heap, -nk)
                    else:
                        v = old - c * gc
                        if v:
                            coef[nk] = v
                        else:
                            del coef[nk]
            n = len(coef)
            if n > peak:
                peak = n
                if max_terms is not None and n > max_terms:
                    raise BudgetExceeded(f"intermediate polynomial exceeded {max_terms} terms")
        if peak > self.stats.max_intermediate_terms:
            self.stats.max_intermediate_terms = peak
        return rem

    # basis construction --------------------------------------------------

    def _add(self, terms, sugar):
        for _, E, _ in terms:
            if E & self.guard:
                raise ExponentOverflow("exponent overflow during Groebner basis computation")
        idx = len(self.basis)
        self.basis.append(_Elem(terms, sugar, self.layout))
        return idx

    def _lcm(self, a, b):
        lay = self.layout
        return lay.pack(tuple(max(x, y) for x, y in zip(lay.unpack(a), lay.unpack(b))))

    def _coprime(self, a, b):
        lay = self.layout
        return not any(x and y for x, y in zip(lay.unpack(a), lay.unpack(b)))

    def _update(self, t):
        """Gebauer-Moeller installation of basis element ``t``."""
        basis = self.basis
        guard = self.guard
        h = basis[t]
        hE = h.lE
        cand = []
        for i in self.active:
            gE = basis[i].lE
            cand.append((i, self._lcm(gE, hE), self._coprime(gE, hE)))
        self.stats.pairs_considered += len(cand)
        kept = []
        for pos, (i, L, cop) in enumerate(cand):
            if cop:
                kept.append((i, L, cop))
                continue
            later = cand[pos + 1 :]
            if any(not (L - L2) & guard for _, L2, _ in later):
                continue
            if any(not (L - L2) & guard for _, L2, _ in kept):
                continue
            kept.append((i, L, cop))
        new_pairs = [(i, L) for i, L, cop in kept if not cop]
        pruned = len(cand) - len(new_pairs)
        # chain criterion on old pairs
        dead = []
        for pair, L in self.pair_lcm.items():
            i, j = pair
            if not (L - hE) & guard:
                Lit = self._lcm(basis[i].lE, hE)
                Ljt = self._lcm(basis[j].lE, hE)
                if Lit != L and Ljt != L:
                    dead.append(pair)
        for pair in dead:
            del self.pair_lcm[pair]
        pruned += len(dead)
        self.stats.pairs_pruned += pruned
        key = self.layout.key
        for i, L in new_pairs:
            g = basis[i]
            dL = sum(self.layout.unpack(L))
            sugar = max(g.sugar + dL - g.deg, h.sugar + dL - h.deg)
            self.pair_lcm[(i, t)] = L
            heappush(self.pairs, (sugar, key(L), i, t))
        self.active = [i for i in self.active if (basis[i].lE - hE) & guard] + [t]

    def _spoly(self, i, j, L):
        """Terms of the S-polynomial of basis elements i and j (leading terms cancel)."""
        f, g = self.basis[i], self.basis[j]
        key = self.layout.key
        qf = L - f.lE
        qg = L - g.lE
        kf, kg = key(qf), key(qg)
        out = [(k + kf, E + qf, c) for k, E, c in f.terms[1:]]
        p = self.p
        if p:
            out += [(k + kg, E + qg, (-c) % p) for k, E, c in g.terms[1:]]
        else:
            out += [(k + kg, E + qg, -c) for k, E, c in g.terms[1:]]
        return out

    def run(self, gens: Sequence[Polynomial]) -> list[Polynomial]:
        """Reduced Groebner basis of ``gens``."""
        self.pairs: list = []
        self.pair_lcm: dict = {}
        inputs = [self.to_terms(f) for f in gens if f]
        inputs.sort(key=lambda ts: ts[0][0])
        for ts in inputs:
            rem = self.reduce(ts, self.active)
            if not rem:
                continue
            rem = self._monic(rem)
            if rem[0][1] == 0:
                return [self.ring.one()]
            deg = max(sum(self.layout.unpack(E)) for _, E, _ in rem)
            t = self._add(rem, deg)
            self._update(t)
        budget = self.budget
        processed = 0
        while self.pairs:
            sugar, _, i, j = heappop(self.pairs)
            L = self.pair_lcm.pop((i, j), None)
            if L is None:
                continue
            processed += 1
            if budget is not None:
                if processed > budget.max_pairs:
                    raise BudgetExceeded(f"more than {budget.max_pairs} critical pairs")
                budget.check_time()
            rem = self.reduce(self._spoly(i, j, L), self.active)
            if not rem:
                self.stats.reductions_to_zero += 1
                continue
            rem = self._monic(rem)
            if rem[0][1] == 0:
                return [self.ring.one()]
            t = self._add(rem, sugar)
            self._update(t)
        self.stats.bases_computed += 1
        return self._reduced()

    def _reduced(self) -> list[Polynomial]:
        act = sorted(self.active, key=lambda i: self.basis[i].lk)
        out = []
        for i in act:
            others = [j for j in act if j != i]
            g = self.basis[i]
            tail = self.reduce(g.terms[1:], others)
            out.append(self.from_terms([g.terms[0]] + tail))
        return out


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """``(lcm/lt(f)) f - (lcm/lt(g)) g`` for the leading monomials under ``order``."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    order = order or f.ring.order
    cf, ef = f.leading_term(order)
    cg, eg = g.leading_term(order)
    L = tuple(max(a, b) for a, b in zip(ef, eg))
    F = f.ring.field
    a = f.mul_monomial(tuple(x - y for x, y in zip(L, ef)), F.inv(cf))
    b = g.mul_monomial(tuple(x - y for x, y in zip(L, eg)), F.inv(cg))
    return a - b


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on multivariate division by ``G`` (tried in sequence
    order, leading reducible term first)."""
    order = order or f.ring.order
    G = [g for g in G if g]
    if not f:
        return f
    if not G:
        return f
    eng = Engine(f.ring, order, budget=Budget())
    for g in G:
        if g.ring != f.ring:
            raise ValueError("ring mismatch")
        eng._add(eng._monic(eng.to_terms(g)), 0)
    rem = eng.reduce(eng.to_terms(f), range(len(eng.basis)))
    return eng.from_terms(rem)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder, ring=None, stats: GBStats | None = None,
               budget: Budget | None = None) -> list[Polynomial]:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    if not any(gens):
        return []
    eng = Engine(ring, order, budget=budget, stats=stats)
    return eng.run(gens)
