"""Statistical models and the (p, b, u) likelihood ring."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..polyring import GF, Block, PolyRing, Polynomial


class ModelError(ValueError):
    pass


def primal_names(m: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(m)) + ("ps",)


def primal_ring(m: int, field) -> PolyRing:
    names = primal_names(m)
    return PolyRing(names, field, (Block("primal-p", names),))


@dataclass(frozen=True)
class ModelSpec:
    """``states`` probability coordinates and homogeneous model equations in
    ``p0..p(states-1), ps``.  The sum relation is adjoined later."""

    states: int
    model_polys: tuple[Polynomial, ...]
    field: object = None
    label: str = "model"

    def __post_init__(self):
        if self.field is None:
            object.__setattr__(self, "field", GF())
        if self.states < 2:
            raise ModelError(f"a model needs at least 2 states, got {self.states}")
        ring = primal_ring(self.states, self.field)
        polys = []
        for f in self.model_polys:
            if not isinstance(f, Polynomial):
                f = ring(f)
            elif f.ring != ring:
                f = f.rebase(ring) if f.ring.field == self.field else f.change_field(ring)
            if not f.is_homogeneous():
                raise ModelError(f"model polynomial {f} is not homogeneous")
            polys.append(f)
        object.__setattr__(self, "model_polys", tuple(polys))

    @property
    def ring(self) -> PolyRing:
        return primal_ring(self.states, self.field)

    def with_field(self, field) -> "ModelSpec":
        ring = primal_ring(self.states, field)
        return ModelSpec(self.states, tuple(f.change_field(ring) for f in self.model_polys), field, self.label)

    @classmethod
    def from_strings(cls, states: int, equations, field=None, label: str = "model") -> "ModelSpec":
        field = field if field is not None else GF()
        ring = primal_ring(states, field)
        from ..textio import parse_polynomial

        return cls(states, tuple(parse_polynomial(s, ring) for s in equations), field, label)


class LikelihoodRing:
    """Blocks P = (p0..ps), B = (b0..bs), U = (u0..us) over one field."""

    def __init__(self, m: int, field):
        self.m = m
        self.field = field
        self.P = primal_names(m)
        self.B = tuple(f"b{i}" for i in range(m)) + ("bs",)
        self.U = tuple(f"u{i}" for i in range(m)) + ("us",)
        self.full = PolyRing(self.P + self.B + self.U, field,
                             (Block("primal-p", self.P), Block("dual-b", self.B), Block("data-u", self.U)))

    @cached_property
    def ring_p(self) -> PolyRing:
        return self.full.subring(self.P)

    @cached_property
    def ring_b(self) -> PolyRing:
        return self.full.subring(self.B)

    @cached_property
    def ring_u(self) -> PolyRing:
        return self.full.subring(self.U)

    @cached_property
    def ring_pb(self) -> PolyRing:
        return self.full.subring(self.P + self.B)

    def sum_relation(self) -> Polynomial:
        R = self.ring_p
        return sum((R.var(v) for v in self.P[:-1]), R.zero()) - R.var("ps")

    def data_relation(self) -> Polynomial:
        R = self.ring_u
        return sum((R.var(v) for v in self.U), R.zero())

    def __repr__(self):
        return f"LikelihoodRing(m={self.m}, {self.field!r})"
