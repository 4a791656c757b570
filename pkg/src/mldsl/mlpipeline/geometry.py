"""Singular loci, conormal and dual varieties, Hadamard products, the
extended likelihood correspondence, ML degree and the data singular locus."""

from __future__ import annotations

import logging
import random
from typing import Sequence

from ..groebner import (
    Ideal, NotZeroDimensional, dimension, eliminate, quotient_basis_size, saturate_by_ideal,
    saturate_by_variables,
)
from ..polyring import Block, PolyMatrix, PolyRing, Polynomial
from .model import LikelihoodRing, ModelError, ModelSpec

log = logging.getLogger(__name__)


class PipelineError(RuntimeError):
    pass


class MLDegreeError(PipelineError):
    """No usable data point was found, or seeds disagree."""


def jacobian(I: Ideal | Sequence[Polynomial], wrt: Sequence[str]) -> PolyMatrix:
    gens = I.generators if isinstance(I, Ideal) else tuple(I)
    if not gens:
        raise ValueError("jacobian of an ideal without generators")
    ring = gens[0].ring
    return PolyMatrix(ring, [[g.diff(v) for v in wrt] for g in gens])


def minors(M: PolyMatrix, k: int) -> Ideal:
    return Ideal(M.ring, M.minors(k))


def point_ideal(ring: PolyRing, names: Sequence[str], point: Sequence) -> Ideal:
    """Ideal of the projective point ``point`` in coordinates ``names``."""
    xs = [ring.var(v) for v in names]
    F = ring.field
    cs = [F(c) for c in point]
    if not any(cs):
        raise ValueError("a projective point needs a nonzero coordinate")
    M = PolyMatrix(ring, [xs, [ring.constant(c) for c in cs]])
    return minors(M, 2)


def codimension_of(I: Ideal) -> int:
    if I.is_unit():
        raise ModelError("the model ideal is the unit ideal")
    return I.ring.nvars - dimension(I)


def singular_ideal(I: Ideal, names: Sequence[str], c: int) -> Ideal:
    """``I`` plus the c x c minors of its Jacobian in ``names``."""
    J = jacobian(I, names)
    if c > min(J.rows, J.cols):
        return I
    return I + minors(J, c)


def conormal_ideal(I: Ideal, primal: Sequence[str], dual: Sequence[str], ring: PolyRing,
                   c: int, sing_full: Ideal) -> Ideal:
    """Conormal ideal in ``ring`` (which holds both coordinate sets): the
    (c+1)-minors of the Jacobian with the dual row on top, plus ``I``,
    saturated by the singular ideal."""
    Ir = I.rebase(ring)
    J = jacobian(Ir, primal)
    top = [ring.var(v) for v in dual]
    aug = PolyMatrix(ring, [top] + [J.row(i) for i in range(J.rows)])
    base = Ir + minors(aug, c + 1) if c + 1 <= min(aug.rows, aug.cols) else Ir
    return saturate_by_ideal(base, sing_full.rebase(ring))


def raw_conormal(I: Ideal, dual: Sequence[str] | None = None) -> tuple[Ideal, tuple[str, ...]]:
    """Conormal variety of a plain projective variety (no sum relation).

    Returns the conormal ideal in the ring ``primal + dual`` and the dual names."""
    R = I.ring
    primal = R.variables
    if dual is None:
        dual = tuple(R.fresh_name("b" + v) for v in primal)
    dual = tuple(dual)
    ring = PolyRing(primal + dual, R.field, (Block("primal-p", primal), Block("dual-b", dual)))
    c = codimension_of(I)
    sing = singular_ideal(I, primal, c)
    return conormal_ideal(I, primal, dual, ring, c, sing), dual


def raw_dual(I: Ideal, dual: Sequence[str] | None = None) -> Ideal:
    """Dual variety of a plain projective variety, in the dual coordinates."""
    N, dual = raw_conormal(I, dual)
    return eliminate(N, I.ring.variables)


def hadamard_product(lr: LikelihoodRing, A: Ideal, B: Ideal) -> Ideal:
    """Hadamard product of ``V(A)`` (p-coordinates) and ``V(B)`` (b-coordinates)
    with respect to the incidence hypersurface ``sum p_i b_i = 0``."""
    R = lr.full
    if A.is_unit() or B.is_unit():
        return Ideal.unit(lr.ring_u)
    pb = [R.var(p) * R.var(b) for p, b in zip(lr.P, lr.B)]
    incidence = sum(pb, R.zero())
    hada = minors(PolyMatrix(R, [pb, [R.var(u) for u in lr.U]]), 2)
    G = A.rebase(R) + B.rebase(R) + hada + [incidence]
    G = saturate_by_variables(G, lr.P + lr.B)
    return eliminate(G, lr.P + lr.B).rebase(lr.ring_u)


def hadamard_minors(lr: LikelihoodRing) -> Ideal:
    """2-minors of the matrix with rows (p_i b_i) and (u_i)."""
    R = lr.full
    pb = [R.var(p) * R.var(b) for p, b in zip(lr.P, lr.B)]
    return minors(PolyMatrix(R, [pb, [R.var(u) for u in lr.U]]), 2)


class GeometryContext:
    """A model plus its lazily computed pipeline ideals."""

    def __init__(self, spec: ModelSpec):
        self.spec = spec
        self.lr = LikelihoodRing(spec.states, spec.field)
        Rp = self.lr.ring_p
        self.I_X = Ideal(Rp, [f.rebase(Rp) for f in spec.model_polys] + [self.lr.sum_relation()])
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            log.info("computing %s for %s", key, self.spec.label)
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def codim(self) -> int:
        return self._memo("codim", lambda: codimension_of(self.I_X))

    def _singular(self):
        c = self.codim
        full = singular_ideal(self.I_X, self.lr.P, c)
        if dimension(full) >= dimension(self.I_X):
            raise PipelineError("model not generically reduced/equidimensional as assumed")
        sing = saturate_by_variables(full, self.lr.P)
        return full, sing

    @property
    def F_sing_full(self) -> Ideal:
        return self._memo("sing", self._singular)[0]

    @property
    def F_sing(self) -> Ideal:
        return self._memo("sing", self._singular)[1]

    @property
    def F_N(self) -> Ideal:
        return self._memo("conormal", lambda: conormal_ideal(
            self.I_X, self.lr.P, self.lr.B, self.lr.ring_pb, self.codim, self.F_sing_full))

    @property
    def F_dual(self) -> Ideal:
        return self._memo("dual", lambda: eliminate(self.F_N, self.lr.P).rebase(self.lr.ring_b))

    @property
    def F_E(self) -> Ideal:
        return self._memo("extended", lambda: self.F_N.rebase(self.lr.full) + hadamard_minors(self.lr))

    @property
    def F_DSL(self) -> Ideal:
        return self._memo("dsl", self._dsl)

    def _dsl(self) -> Ideal:
        lr = self.lr
        if self.F_sing.is_unit():
            return Ideal.unit(lr.ring_u)
        G = self.F_E + self.F_sing.rebase(lr.full)
        G = saturate_by_variables(G, lr.P + lr.B + lr.U)
        return eliminate(G, lr.P + lr.B).rebase(lr.ring_u)

    def ml_degree(self, seed: int = 0, attempts: int = 5) -> int:
        key = ("mldeg", seed)
        if key not in self._cache:
            self._cache[key] = self._ml_degree(seed, attempts)
        return self._cache[key]

    def data_point(self, rng: random.Random) -> list:
        F = self.spec.field
        hi = F.modulus - 1 if F.modulus else 10**4
        while True:
            us = [F(rng.randint(1, hi)) for _ in range(self.spec.states)]
            last = F.reduce(-sum(us))
            if last:
                return us + [last]

    def fiber(self, data: Sequence) -> Ideal:
        """Critical-point ideal in ``p`` for the data vector ``data`` (length m+1)."""
        lr = self.lr
        Rpb = lr.ring_pb
        bindings = dict(zip(lr.U, data))
        gens = [g.subs(bindings, Rpb) for g in self.F_E.generators]
        K = Ideal(Rpb, gens)
        K = saturate_by_variables(K, lr.P + lr.B)
        K = K + [Rpb.var("ps") - 1, Rpb.var("bs") - 1]
        return eliminate(K, lr.B).rebase(lr.ring_p)

    def _ml_degree(self, seed: int, attempts: int) -> int:
        rng = random.Random(seed)
        for attempt in range(attempts):
            data = self.data_point(rng)
            fib = self.fiber(data)
            if fib.is_unit():
                log.warning("seed %d attempt %d: empty fiber, redrawing data", seed, attempt)
                continue
            try:
                return quotient_basis_size(fib)
            except NotZeroDimensional:
                log.warning("seed %d attempt %d: positive-dimensional fiber, redrawing data", seed, attempt)
        raise MLDegreeError(f"no generic data point found for seed {seed} after {attempts} attempts")


def build_context(spec: ModelSpec) -> GeometryContext:
    return GeometryContext(spec)


def codimension(ctx: GeometryContext) -> int:
    return ctx.codim


def singular_locus(ctx: GeometryContext) -> tuple[Ideal, Ideal]:
    return ctx.F_sing_full, ctx.F_sing


def conormal(ctx: GeometryContext) -> Ideal:
    return ctx.F_N


def dual_variety(ctx: GeometryContext) -> Ideal:
    return ctx.F_dual


def extended_likelihood(ctx: GeometryContext) -> Ideal:
    return ctx.F_E


def data_singular_locus(ctx: GeometryContext) -> Ideal:
    return ctx.F_DSL


def ml_degree(ctx: GeometryContext, seed: int = 0) -> int:
    return ctx.ml_degree(seed)


def ml_degree_stable(ctx: GeometryContext, seeds: Sequence[int] = (0, 1, 2)) -> int:
    values = {s: ctx.ml_degree(s) for s in seeds}
    if len(set(values.values())) != 1:
        raise MLDegreeError(f"ML degree differs across seeds: {values}")
    return next(iter(values.values()))
