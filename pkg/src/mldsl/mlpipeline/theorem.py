"""Automated check of the two inclusions bounding the data singular locus."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from ..groebner import Ideal, projective_dimension, variety_contains
from .geometry import GeometryContext, PipelineError, hadamard_product, point_ideal


class TheoremViolation(PipelineError):
    """A mandatory inclusion failed; this signals a bug, not a model property."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass
class TheoremReport:
    lower_contained: bool
    lower_equal: bool
    upper_contains: bool
    upper_equal: bool
    dims: dict = field(default_factory=dict)
    edim: int | None = None
    edim_note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def lower_bound(ctx: GeometryContext) -> Ideal:
    """Hadamard product of the singular locus with ``[1:...:1:-1]``."""
    lr = ctx.lr
    ones = [1] * ctx.spec.states + [-1]
    return ctx._memo("lower", lambda: hadamard_product(lr, ctx.F_sing, point_ideal(lr.ring_b, lr.B, ones)))


def upper_bound(ctx: GeometryContext) -> Ideal:
    """Hadamard product of the singular locus with the dual variety."""
    return ctx._memo("upper", lambda: hadamard_product(ctx.lr, ctx.F_sing, ctx.F_dual))


def expected_hadamard_dimension(ctx: GeometryContext) -> int:
    """``dim(sing) + dim(dual) - 1`` in projective terms."""
    if ctx.F_sing.is_unit() or ctx.F_dual.is_unit():
        raise ValueError("expected dimension is undefined for an empty factor")
    return projective_dimension(ctx.F_sing) + projective_dimension(ctx.F_dual) - 1


def theorem_check(ctx: GeometryContext, strict: bool = True) -> TheoremReport:
    D = ctx.F_DSL
    lower = lower_bound(ctx)
    upper = upper_bound(ctx)
    lower_contained = variety_contains(D, lower)
    upper_contains = variety_contains(upper, D)
    lower_equal = lower_contained and variety_contains(lower, D)
    upper_equal = upper_contains and variety_contains(D, upper)
    dims = {
        "sing": projective_dimension(ctx.F_sing),
        "dual": projective_dimension(ctx.F_dual),
        "dsl": projective_dimension(D),
        "sing_hadamard_dual": projective_dimension(upper),
    }
    edim, note = None, ""
    if not ctx.F_sing.is_unit() and not ctx.F_dual.is_unit():
        edim = expected_hadamard_dimension(ctx)
        if edim < 0:
            note = "possibly empty"
        elif dims["sing_hadamard_dual"] < edim:
            note = "below expected dimension"
        else:
            note = "expected dimension"
    else:
        note = "empty singular locus off the coordinate hyperplanes"
    report = TheoremReport(lower_contained, lower_equal, upper_contains, upper_equal, dims, edim, note)
    if strict and not (lower_contained and upper_contains):
        raise TheoremViolation("a mandatory inclusion of the sandwich theorem failed", report)
    return report
