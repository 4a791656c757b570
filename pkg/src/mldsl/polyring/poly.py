"""Sparse multivariate polynomials over an exact field."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping

from .orders import Monomial, MonomialOrder
from .ring import PolyRing, RingError


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero
    coefficients of ``ring.field``."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object], _clean: bool = False):
        self.ring = ring
        if _clean:
            self._terms = dict(terms)
        else:
            conv = ring.field
            n = ring.nvars
            out = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise RingError(f"monomial {e} has wrong length for {ring}")
                c = conv(c)
                if c:
                    c = out.get(e, 0) + c
                    c = conv.reduce(c)
                    if c:
                        out[e] = c
                    else:
                        out.pop(e, None)
            self._terms = out
        self._hash = None

    # basic accessors ----------------------------------------------------

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, e: Monomial):
        return self._terms.get(tuple(e), self.ring.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, names) -> int:
        idx = [self.ring.index(n) for n in names]
        return max((sum(e[i] for i in idx) for e in self._terms), default=-1)

    def is_homogeneous(self, names=None) -> bool:
        if names is None:
            names = self.ring.variables
        idx = [self.ring.index(n) for n in names]
        degs = {sum(e[i] for i in idx) for e in self._terms}
        return len(degs) <= 1

    def support(self) -> set[str]:
        used = set()
        for e in self._terms:
            for i, x in enumerate(e):
                if x:
                    used.add(self.ring.variables[i])
        return used

    def terms(self, order: MonomialOrder | None = None):
        """(coefficient, monomial) pairs, strictly descending under ``order``."""
        key = (order or self.ring.order).key
        return [(c, e) for e, c in sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)]

    def leading_term(self, order: MonomialOrder | None = None):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = (order or self.ring.order).key
        e = max(self._terms, key=key)
        return self._terms[e], e

    def leading_monomial(self, order=None) -> Monomial:
        return self.leading_term(order)[1]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[0]

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.field.reduce
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = red(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.field.reduce
        return Polynomial(self.ring, {e: red(-c) for e, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.field.reduce
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        out = {e: v for e, v in ((e, red(c)) for e, c in out.items()) if v}
        return Polynomial(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: f.reduce(v * c) for e, v in self._terms.items()}, _clean=True)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, e: Monomial, c=1) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, e)): f.reduce(v * c) for m, v in self._terms.items()},
            _clean=bool(c),
        )

    def monic(self, order=None) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        return self.scale(self.ring.field.inv(lc))

    # calculus and substitution -----------------------------------------

    def diff(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        red = self.ring.field.reduce
        conv = self.ring.field
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                v = red(c * conv(k))
                if v:
                    out[e[:i] + (k - 1,) + e[i + 1 :]] = v
        return Polynomial(self.ring, out, _clean=True)

    def evaluate(self, point: Mapping[str, object] | tuple):
        """Value at a full point (mapping name -> value, or a tuple in ring order)."""
        f = self.ring.field
        if isinstance(point, Mapping):
            vals = [f(point[v]) for v in self.ring.variables]
        else:
            vals = [f(x) for x in point]
        total = f.zero
        for e, c in self._terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * x**k
            total = f.reduce(total + t)
        return total

    def subs(self, bindings: Mapping[str, object], ring: PolyRing | None = None) -> "Polynomial":
        """Simultaneous substitution of polynomials or constants for variables.

        With ``ring`` given, the result is re-based into it (all variables not
        in ``ring`` must have been substituted away)."""
        R = self.ring
        idx = {}
        for name, val in bindings.items():
            i = R.index(name)
            if not isinstance(val, Polynomial):
                val = R.constant(val)
            elif val.ring != R:
                val = val.rebase(R)
            idx[i] = val
        powers: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = idx[i] ** k
            return powers[key]

        out = R.zero()
        acc: dict = {}
        for e, c in self._terms.items():
            kept = tuple(0 if i in idx else x for i, x in enumerate(e))
            term = Polynomial(R, {kept: c}, _clean=True)
            for i, x in enumerate(e):
                if x and i in idx:
                    term = term * power(i, x)
            for m, v in term._terms.items():
                acc[m] = acc.get(m, 0) + v
        red = R.field.reduce
        out = Polynomial(R, {m: v for m, v in ((m, red(v)) for m, v in acc.items()) if v}, _clean=True)
        return out.rebase(ring) if ring is not None else out

    def rebase(self, ring: PolyRing) -> "Polynomial":
        """The same polynomial in ``ring``, matching variables by name."""
        if ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise RingError("rebase cannot change the coefficient field; use change_field")
        src = self.ring.variables
        pos = []
        for i, v in enumerate(src):
            pos.append(ring.index(v) if v in ring else None)
        n = ring.nvars
        out = {}
        for e, c in self._terms.items():
            t = [0] * n
            for i, x in enumerate(e):
                if x:
                    j = pos[i]
                    if j is None:
                        raise RingError(f"variable {src[i]} not present in target ring")
                    t[j] = x
            out[tuple(t)] = c
        return Polynomial(ring, out, _clean=True)

    def change_field(self, ring: PolyRing) -> "Polynomial":
        """Map coefficients into ``ring.field`` (e.g. reduce rationals mod p)."""
        src = self.ring.with_field(ring.field)
        return Polynomial(src, dict(self._terms)).rebase(ring)

    # canonical forms ----------------------------------------------------

    def primitive(self, order=None) -> "Polynomial":
        """Display-canonical scaling: over Q integer coefficients with content 1
        and positive leading coefficient; over GF(p) the monic multiple."""
        if not self._terms:
            return self
        f = self.ring.field
        if f.modulus:
            return self.monic(order)
        den = 1
        for c in self._terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        lc, _ = Polynomial(self.ring, ints).leading_term(order)
        sign = 1 if lc > 0 else -1
        return Polynomial(self.ring, {e: Fraction(v * sign, g) for e, v in ints.items()}, _clean=True)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        from ..textio import render_polynomial

        return render_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"
