"""Ideals with cached reduced Groebner bases."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..polyring import GrevLex, MonomialOrder, PolyRing, Polynomial, RingError
from .buchberger import Engine, normal_form
from .context import GBStats, current_budget, current_cache, current_stats


class Ideal:
    """A finitely generated ideal of ``ring``.

    Zero generators are dropped and an ideal containing a nonzero constant
    is normalized to ``<1>``.  ``gb_cache`` maps a monomial order to the
    reduced Groebner basis under that order."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring(g)
            if g.ring != ring:
                raise RingError(f"generator {g} is not in {ring}")
            if not g:
                continue
            if g.is_constant():
                gens = [ring.one()]
                break
            if g not in seen:
                seen.add(g)
                gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self.gb_cache: dict[MonomialOrder, tuple[Polynomial, ...]] = {}
        if self.known_unit():
            self.gb_cache[GrevLex()] = (ring.one(),)

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    def known_unit(self) -> bool:
        """Cheap test: true only if <1> is evident without a new basis."""
        if len(self.generators) == 1 and self.generators[0].is_constant():
            return True
        return any(self._gb_is_unit(gb) for gb in self.gb_cache.values())

    def is_unit(self) -> bool:
        if self.known_unit():
            return True
        if not self.generators:
            return False
        return self._gb_is_unit(groebner_basis(self, GrevLex()))

    @staticmethod
    def _gb_is_unit(gb):
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def support(self) -> set[str]:
        out = set()
        for g in self.generators:
            out |= g.support()
        return out

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise RingError("ring mismatch in ideal sum")
            return Ideal(self.ring, self.generators + other.generators)
        return Ideal(self.ring, self.generators + tuple(other))

    def rebase(self, ring: PolyRing) -> "Ideal":
        return Ideal(ring, [g.rebase(ring) for g in self.generators])

    def change_field(self, field) -> "Ideal":
        ring = self.ring.with_field(field)
        return Ideal(ring, [g.change_field(ring) for g in self.generators])

    def groebner_basis(self, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
        return groebner_basis(self, order)

    def reduce(self, f: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
        order = order or GrevLex()
        return normal_form(f, self.groebner_basis(order), order)

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        if self.known_unit():
            return True
        return not self.reduce(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_ideal(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __repr__(self):
        from ..textio import render_polynomial

        return f"Ideal<{', '.join(render_polynomial(g) for g in self.generators)}>"


def groebner_basis(I: Ideal, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
    """Reduced Groebner basis of ``I`` under ``order`` (default grevlex), cached
    on the ideal and, when a basis cache is installed, on disk."""
    order = order or GrevLex()
    hit = I.gb_cache.get(order)
    if hit is not None:
        return hit
    if I.is_zero():
        basis: tuple = ()
    elif I.known_unit():
        basis = (I.ring.one(),)
    else:
        sink = current_stats()

        def produce():
            stats = GBStats()
            out = Engine(I.ring, order, budget=current_budget(), stats=stats).run(I.generators)
            if sink is not None:
                sink.merge(stats)
            return out

        cache = current_cache()
        if cache is not None:
            basis = tuple(cache.get_or_compute(I.ring, order, I.generators, produce))
        else:
            basis = tuple(produce())
    I.gb_cache[order] = basis
    return basis


def reduced_basis_of(ring: PolyRing, gens: Sequence[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    return groebner_basis(Ideal(ring, gens), order)
