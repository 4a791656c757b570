import random

import pytest

from mldsl.groebner import Ideal, dimension, eliminate, projective_dimension, radical_membership, same_variety
from mldsl.groebner import saturate_by_variables, variety_contains
from mldsl.mlpipeline import (
    LikelihoodRing, ModelError, ModelSpec, PipelineError, build_context, codimension, conormal, data_singular_locus,
    dual_variety, expected_hadamard_dimension, extended_likelihood, hadamard_product, jacobian, lower_bound,
    minors, ml_degree, ml_degree_stable, point_ideal, raw_dual, singular_locus, theorem_check, upper_bound,
)
from mldsl.polyring import GF, QQ, PolyMatrix, PolyRing

FP = GF()
DET = "p0^3 - p0*p1^2 - p0*p2^2 + 2*p1*p2*p3 - p0*p3^2"
TERNARY = "p2*(p1-p2)^2 + (p0-p2)^3"
WHITNEY = "(p0-p1)^2*p3 - (p1-p2)^2*(p2-p3)"
CUSP = "p0^3 + p1^2*p2"


@pytest.fixture(scope="module")
def ternary():
    return build_context(ModelSpec.from_strings(3, [TERNARY], label="ternary"))


@pytest.fixture(scope="module")
def simplex():
    return build_context(ModelSpec.from_strings(3, [], label="simplex"))


@pytest.fixture(scope="module")
def cusp():
    return build_context(ModelSpec.from_strings(3, [CUSP], label="cusp"))


def test_model_ideal_adjoins_sum_relation():
    ctx = build_context(ModelSpec.from_strings(4, [DET], field=QQ))
    R = ctx.I_X.ring
    assert ctx.I_X.same_ideal(Ideal(R, [R(DET), R("p0 + p1 + p2 + p3 - ps")]))
    simplex = build_context(ModelSpec.from_strings(3, []))
    assert simplex.I_X.same_ideal(Ideal(simplex.I_X.ring, [simplex.I_X.ring("p0 + p1 + p2 - ps")]))
    with pytest.raises(ModelError):
        ModelSpec.from_strings(2, ["p0^2 + p1"])


def test_jacobian_rows_of_determinantal_cubic():
    ctx = build_context(ModelSpec.from_strings(4, [DET], field=QQ))
    R = ctx.I_X.ring
    J = jacobian([R("p0 + p1 + p2 + p3 - ps"), R(DET)], ctx.lr.P)
    assert list(J.row(0)) == [R("1"), R("1"), R("1"), R("1"), R("-1")]
    want = ["3*p0^2 - p1^2 - p2^2 - p3^2", "-2*(p0*p1 - p2*p3)", "-2*(p0*p2 - p1*p3)", "2*(p1*p2 - p0*p3)", "0"]
    assert list(J.row(1)) == [R(s) for s in want]


def test_jacobian_small_cases():
    R = PolyRing(["x", "y"])
    assert list(jacobian([R("x")], ["x", "y"]).row(0)) == [R("1"), R("0")]
    assert list(jacobian([R("5")], ["x", "y"]).row(0)) == [R.zero(), R.zero()]


def test_minors_small_cases():
    R = PolyRing(["a", "b", "c", "d"])
    M = PolyMatrix(R, [[R("a"), R("b")], [R("c"), R("d")]])
    assert minors(M, 2).same_ideal(Ideal(R, [R("a*d - b*c")]))
    assert minors(M, 1).same_ideal(Ideal(R, R.gens()))


def test_codimensions(simplex, ternary):
    assert codimension(simplex) == 1
    assert codimension(ternary) == 2
    assert codimension(build_context(ModelSpec.from_strings(4, [DET]))) == 2
    assert codimension(build_context(ModelSpec.from_strings(4, [WHITNEY]))) == 2


def test_non_reduced_model_is_rejected():
    ctx = build_context(ModelSpec.from_strings(3, ["(p0 - p1)^2"]))
    with pytest.raises(PipelineError):
        singular_locus(ctx)


def test_cusp_singular_point_lies_on_coordinate_hyperplanes(cusp):
    full, sing = singular_locus(cusp)
    assert sing.is_unit()
    R = full.ring
    # on the sum hyperplane the cusp point has ps = p2
    assert same_variety(full, point_ideal(R, cusp.lr.P, [0, 0, 1, 1]))
    assert not variety_contains(cusp.I_X, point_ideal(R, cusp.lr.P, [0, 0, 1, -1]))
    assert data_singular_locus(cusp).is_unit()


def test_simplex_model_pipeline(simplex):
    lr = simplex.lr
    N = conormal(simplex)
    expect = Ideal(lr.ring_pb, [lr.ring_pb(s) for s in ("p0 + p1 + p2 - ps", "b0 - b1", "b1 - b2", "b2 + bs")])
    assert same_variety(N, expect)
    assert dual_variety(simplex).same_ideal(point_ideal(lr.ring_b, lr.B, [1, 1, 1, -1]))
    assert ml_degree_stable(simplex, (0, 1, 2)) == 1
    assert data_singular_locus(simplex).is_unit()
    E = saturate_by_variables(extended_likelihood(simplex), lr.P + lr.B)
    proj = eliminate(E, lr.P + lr.B).rebase(lr.ring_u)
    assert proj.same_ideal(Ideal(lr.ring_u, [lr.ring_u("u0 + u1 + u2 + us")]))


def test_conormal_contains_model_and_incidence(ternary):
    lr = ternary.lr
    N = conormal(ternary)
    for g in ternary.I_X.generators:
        assert N.contains(g.rebase(N.ring))
    incidence = sum((N.ring.var(p) * N.ring.var(b) for p, b in zip(lr.P, lr.B)), N.ring.zero())
    assert N.contains(incidence)
    E = extended_likelihood(ternary)
    full = saturate_by_variables(E, lr.P + lr.B + lr.U)
    assert radical_membership(E.ring("u0 + u1 + u2 + us"), full)


def test_dual_is_projection_of_conormal(ternary):
    D = dual_variety(ternary)
    assert D.same_ideal(eliminate(conormal(ternary), ternary.lr.P).rebase(ternary.lr.ring_b))
    assert projective_dimension(D) == 2


def test_raw_conic_dual_and_biduality():
    R = PolyRing(["p0", "p1", "p2"], FP)
    conic = Ideal(R, [R("p0*p2 - p1^2")])
    D = raw_dual(conic, ("b0", "b1", "b2"))
    assert D.same_ideal(Ideal(D.ring, [D.ring("b1^2 - 4*b0*b2")]))
    back = raw_dual(D, ("p0", "p1", "p2"))
    assert same_variety(back, conic.rebase(back.ring))


def test_raw_biduality_nodal_cubic():
    # dual of a nodal plane cubic is a quartic; the bidual is the cubic again
    R = PolyRing(["x", "y", "z"], FP)
    nodal = Ideal(R, [R("y^2*z - x^3 - x^2*z")])
    D = raw_dual(nodal, ("a", "b", "c"))
    assert len(D.generators) == 1 and D.generators[0].total_degree() == 4
    back = raw_dual(D, ("x", "y", "z"))
    assert same_variety(back, nodal.rebase(back.ring))


def _line_data():
    lr = LikelihoodRing(2, FP)
    line = Ideal(lr.ring_p, [lr.ring_p("p0 + p1 - ps")])
    return lr, line


def test_hadamard_point_times_point():
    lr = LikelihoodRing(3, QQ)
    A = point_ideal(lr.ring_p, lr.P, [1, 1, 1, 3])
    B = point_ideal(lr.ring_b, lr.B, [1, 1, 1, -1])
    H = hadamard_product(lr, A, B)
    assert H.same_ideal(point_ideal(lr.ring_u, lr.U, [1, 1, 1, -3]))


def test_hadamard_line_times_generic_incident_point():
    lr, line = _line_data()
    H = hadamard_product(lr, line, point_ideal(lr.ring_b, lr.B, [1, 1, -1]))
    assert projective_dimension(H) == 1
    rng = random.Random(1)
    for _ in range(100):
        t0, t1 = FP(rng.randrange(1, FP.modulus)), FP(rng.randrange(1, FP.modulus))
        pt = dict(zip(lr.U, [t0, -2 * t0 - t1, t0 + t1]))
        for g in H.generators:
            assert FP.reduce(g.evaluate(pt)) == 0


def test_hadamard_line_times_point_is_single_point():
    lr, line = _line_data()
    H = hadamard_product(lr, line, point_ideal(lr.ring_b, lr.B, [1, 2, -3]))
    assert H.same_ideal(point_ideal(lr.ring_u, lr.U, [1, -4, 3]))
    # the stated [0:-2:3] has u0 = 0 and is not on the product
    assert not variety_contains(H, point_ideal(lr.ring_u, lr.U, [0, -2, 3]))


def test_ternary_cubic_results(ternary):
    lr = ternary.lr
    _, sing = singular_locus(ternary)
    assert same_variety(sing, point_ideal(lr.ring_p, lr.P, [1, 1, 1, 3]))
    D = data_singular_locus(ternary)
    U = lr.ring_u
    assert same_variety(D, Ideal(U, [U("2*u0 - u1 - u2"), U("u0 + u1 + u2 + us")]))
    assert same_variety(lower_bound(ternary), point_ideal(U, lr.U, [1, 1, 1, -3]))
    assert same_variety(upper_bound(ternary), D)
    rep = theorem_check(ternary)
    assert rep.lower_contained and not rep.lower_equal and rep.upper_equal
    assert expected_hadamard_dimension(ternary) == 1 == rep.dims["sing_hadamard_dual"]


def test_ml_degree_regression_constants(ternary, cusp):
    assert [ml_degree(ternary, s) for s in (0, 1, 2)] == [5, 5, 5]
    assert ml_degree_stable(cusp) == 3


def test_fiber_is_a_critical_point_set(ternary):
    """Every fibre point satisfies the model and the likelihood equations."""
    data = ternary.data_point(random.Random(4))
    fib = ternary.fiber(data)
    assert dimension(fib) == 0
    for g in ternary.I_X.generators:
        assert fib.contains(g.rebase(fib.ring))


def test_rational_and_modular_dsl_agree():
    spec_q = ModelSpec.from_strings(3, [TERNARY], field=QQ)
    spec_p = spec_q.with_field(FP)
    Dq = data_singular_locus(build_context(spec_q))
    Dp = data_singular_locus(build_context(spec_p))
    assert Dq.change_field(FP).same_ideal(Dp)


def test_data_quadric_substitution_matches_extended_dsl():
    """The specialization u3 = 50 of the published quadric is the polynomial
    obtained from the DSL generators after eliminating us and fixing u3."""
    U = PolyRing(["u0", "u1", "u2", "u3", "us"], QQ)
    q = U("3*u0^2-2*u0*u1-5*u1^2-2*u0*u2+6*u1*u2-5*u2^2-2*u0*u3+6*u1*u3+6*u2*u3-5*u3^2")
    ours = U("16*u1*u2 + 16*u1*u3 + 16*u2*u3 + 8*u1*us + 8*u2*us + 8*u3*us + 3*us^2")
    on_plane = ours.subs({"us": U("-u0 - u1 - u2 - u3")})
    assert on_plane == q
    fixed = q.subs({"u3": 50})
    assert fixed == U("3*u0^2-2*u0*u1-5*u1^2-2*u0*u2+6*u1*u2-5*u2^2-100*u0+300*u1+300*u2-12500")
