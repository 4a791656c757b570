"""Elimination, saturation, intersection and the dimension counts built on
reduced Groebner bases."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from ..polyring import Block, BlockElim, GrevLex, PolyRing, Polynomial, RingError
from .buchberger import normal_form
from .ideal import Ideal, groebner_basis


class NotZeroDimensional(ValueError):
    pass


def _aux_ring(ring: PolyRing, stem: str = "t") -> tuple[PolyRing, str]:
    t = ring.fresh_name(stem)
    if ring.blocks and ring.blocks[0].role == "auxiliary":
        first = ring.blocks[0]
        blocks = (Block("auxiliary", (t,) + first.variables),) + ring.blocks[1:]
        return PolyRing((t,) + ring.variables, ring.field, blocks, ring.order), t
    return ring.with_auxiliary([t]), t


def eliminate(I: Ideal, names: Iterable[str]) -> Ideal:
    """``I`` intersected with the subring omitting ``names``."""
    names = set(names)
    for n in names:
        I.ring.index(n)
    if not names:
        return I
    ring = I.ring
    sub = ring.without(names)
    if I.known_unit():
        return Ideal.unit(sub)
    if I.is_zero():
        return Ideal(sub)
    elim = [v for v in ring.variables if v in names]
    keep = [v for v in ring.variables if v not in names]
    work = ring.reordered(elim + keep)
    J = Ideal(work, [g.rebase(work) for g in I.generators])
    G = groebner_basis(J, BlockElim(len(elim)))
    kept = [g.rebase(sub) for g in G if not (g.support() & names)]
    out = Ideal(sub, kept)
    out.gb_cache[GrevLex()] = tuple(kept)
    return out


def _saturate_variable(I: Ideal, x: str) -> Ideal:
    """``I : x^oo`` for homogeneous ``I`` via a grevlex basis with ``x`` last."""
    ring = I.ring
    order = [v for v in ring.variables if v != x] + [x]
    work = ring.reordered(order)
    G = groebner_basis(Ideal(work, [g.rebase(work) for g in I.generators]), GrevLex())
    j = work.index(x)
    out = []
    for g in G:
        k = min(e[j] for e in g.monomials())
        if k:
            g = Polynomial(work, {e[:j] + (e[j] - k,) + e[j + 1:]: c for e, c in g.items()}, _clean=True)
        out.append(g.rebase(ring))
    return Ideal(ring, out)


def _rabinowitsch(I: Ideal, f: Polynomial) -> Ideal:
    aux, t = _aux_ring(I.ring)
    T = aux.var(t)
    gens = [g.rebase(aux) for g in I.generators] + [T * f.rebase(aux) - 1]
    return eliminate(Ideal(aux, gens), [t])


def _monomial_support(f: Polynomial) -> list[str] | None:
    if len(f) != 1:
        return None
    (e, _), = f.items()
    return [v for v, k in zip(f.ring.variables, e) if k]


def saturate(I: Ideal, f: Polynomial, method: str = "auto") -> Ideal:
    """``I : f^oo``.

    ``method="rabinowitsch"`` eliminates ``t`` from ``I + <t f - 1>``.
    ``method="auto"`` uses it too, except when ``f`` is a monomial and ``I``
    is homogeneous: then each variable is removed in turn with a grevlex
    basis that orders it last."""
    if not f:
        raise ValueError("cannot saturate by zero")
    if f.ring != I.ring:
        raise RingError("ring mismatch in saturate")
    if I.known_unit() or I.is_zero():
        return I
    if f.is_constant():
        return I
    if method not in ("auto", "rabinowitsch", "bayer"):
        raise ValueError(f"unknown saturation method {method!r}")
    names = _monomial_support(f)
    if method == "bayer" or (method == "auto" and names is not None and I.is_homogeneous()):
        if names is None or not I.is_homogeneous():
            raise ValueError("variable-wise saturation needs a monomial and a homogeneous ideal")
        out = I
        for x in names:
            out = _saturate_variable(out, x)
            if out.known_unit():
                break
        return out
    return _rabinowitsch(I, f)


def saturate_by_variables(I: Ideal, names: Sequence[str], method: str = "auto") -> Ideal:
    """``I : (prod names)^oo``."""
    if not names:
        return I
    m = I.ring.one()
    for n in names:
        m = m * I.ring.var(n)
    return saturate(I, m, method)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I`` intersected with ``J``, by eliminating ``t`` from ``t I + (1-t) J``."""
    if I.ring != J.ring:
        raise RingError("ring mismatch in intersect")
    if I.known_unit():
        return J
    if J.known_unit():
        return I
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring)
    aux, t = _aux_ring(I.ring)
    T = aux.var(t)
    gens = [T * g.rebase(aux) for g in I.generators] + [(1 - T) * h.rebase(aux) for h in J.generators]
    return eliminate(Ideal(aux, gens), [t])


def saturate_by_ideal(I: Ideal, J: Ideal, method: str = "auto") -> Ideal:
    """``I : J^oo`` as the intersection of ``I : g^oo`` over generators ``g`` of ``J``."""
    if I.ring != J.ring:
        raise RingError("ring mismatch in saturate_by_ideal")
    if J.is_zero():
        raise ValueError("cannot saturate by the zero ideal")
    if I.known_unit() or J.known_unit():
        return I
    parts = []
    for g in J.generators:
        if I.contains(g):
            continue
        parts.append(saturate(I, g, method))
    if not parts:
        return Ideal.unit(I.ring)
    out = parts[0]
    for P in parts[1:]:
        if out.contains_ideal(P):
            out = P
        elif not P.contains_ideal(out):
            out = intersect(out, P)
    return out


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """Whether ``f`` lies in the radical of ``I`` (Rabinowitsch trick)."""
    if f.ring != I.ring:
        raise RingError("ring mismatch in radical_membership")
    if not f or I.known_unit():
        return True
    if I.contains(f):
        return True
    aux, t = _aux_ring(I.ring)
    T = aux.var(t)
    J = Ideal(aux, [g.rebase(aux) for g in I.generators] + [T * f.rebase(aux) - 1])
    G = groebner_basis(J, GrevLex())
    return len(G) == 1 and G[0].is_constant()


def variety_contains(outer: Ideal, inner: Ideal) -> bool:
    """Whether ``V(inner)`` is a subset of ``V(outer)``."""
    if outer.ring != inner.ring:
        raise RingError("ring mismatch in variety_contains")
    if inner.known_unit():
        return True
    return all(radical_membership(g, inner) for g in outer.generators)


def same_variety(I: Ideal, J: Ideal) -> bool:
    return variety_contains(I, J) and variety_contains(J, I)


def _leading_masks(I: Ideal) -> list[int] | None:
    G = groebner_basis(I, GrevLex())
    if len(G) == 1 and G[0].is_constant():
        return None
    masks = []
    for g in G:
        e = g.leading_monomial(GrevLex())
        masks.append(sum(1 << i for i, k in enumerate(e) if k))
    return masks


def dimension(I: Ideal) -> int:
    """Krull dimension of ``V(I)`` in affine space (``-1`` for the unit ideal):
    the size of a largest variable set containing no leading monomial."""
    masks = _leading_masks(I)
    if masks is None:
        return -1
    n = I.ring.nvars
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            smask = sum(1 << i for i in S)
            if all(m & ~smask for m in masks):
                return size
    return 0


def projective_dimension(I: Ideal) -> int:
    """Dimension of the projective variety of a homogeneous ideal; ``-1`` when empty."""
    d = dimension(I)
    return -1 if d <= 0 else d - 1


def standard_monomials(I: Ideal) -> list[tuple[int, ...]]:
    if dimension(I) != 0:
        raise NotZeroDimensional("ideal is not zero-dimensional")
    G = groebner_basis(I, GrevLex())
    lms = [g.leading_monomial(GrevLex()) for g in G]
    n = I.ring.nvars

    def standard(e):
        return not any(all(a >= b for a, b in zip(e, m)) for m in lms)

    start = (0,) * n
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in seen and standard(f):
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return sorted(seen, key=GrevLex().key)


def quotient_basis_size(I: Ideal) -> int:
    """Vector-space dimension of ``R/I`` for zero-dimensional ``I``."""
    return len(standard_monomials(I))


__all__ = [
    "NotZeroDimensional", "dimension", "eliminate", "intersect", "normal_form", "projective_dimension",
    "quotient_basis_size", "radical_membership", "same_variety", "saturate", "saturate_by_ideal",
    "saturate_by_variables", "standard_monomials", "variety_contains",
]
