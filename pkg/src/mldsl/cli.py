"""Command-line driver.

Exit codes: 0 success, 2 parse/validation error, 3 budget exceeded,
4 ML-degree instability, 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import dataclasses
from dataclasses import dataclass
from pathlib import Path

from . import ENGINE_VERSION
from .cache import GBCache
from .groebner import (
    Budget, BudgetExceeded, GBStats, Ideal, computation, eliminate, groebner_basis, same_variety, saturate,
)
from .mlpipeline import (
    MLDegreeError, ModelError, PipelineError, TheoremViolation, build_context, lower_bound, ml_degree_stable,
    theorem_check, upper_bound,
)
from .polyring import DEFAULT_PRIME, GF, FieldError, GrevLex, Lex, PrimeField, RingError, field_from_spec
from .textio import (
    ParseError, RenderOptions, canonical_generators, parse_ideal_json, parse_model, parse_polynomial,
    render_ideal, render_model, render_polynomial,
)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_MLDEG, EXIT_INVARIANT = 0, 2, 3, 4, 5

MODEL_COMMANDS = ("parse", "singular", "conormal", "dual", "mldeg", "dsl", "hadamard", "check-theorem", "run-all")
IDEAL_COMMANDS = ("gb", "eliminate", "saturate")

log = logging.getLogger("mldsl")


@dataclass
class RunConfig:
    subcommand: str
    path: str
    field: object | None = None
    seed: int = 0
    max_pairs: int = 2_000_000
    max_terms: int = 5_000_000
    budget_seconds: float = 600.0
    cache_dir: str | None = None
    json: bool = False
    verbosity: int = 0
    extra: dict = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        if self.max_pairs <= 0 or self.max_terms <= 0 or self.budget_seconds <= 0:
            raise ValueError("budgets must be positive")


class UsageError(ValueError):
    pass


def _gens(I: Ideal) -> list[str]:
    """Reduced grevlex basis in canonical order and display form."""
    if I.is_unit():
        return ["1"]
    return [render_polynomial(g) for g in canonical_generators(groebner_basis(I, GrevLex()))]


def _emit(cfg: RunConfig, payload: dict, text: str) -> str:
    if cfg.json:
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"
    return text if text.endswith("\n") else text + "\n"


def _section(title: str, I: Ideal) -> str:
    body = "\n".join(_gens(I))
    return f"[{title}]\n{body}\n"


def _load_model(cfg: RunConfig):
    try:
        raw = Path(cfg.path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read model file: {exc}") from None
    return parse_model(raw, default_field=cfg.field)


def _theorem_dict(rep) -> dict:
    return {
        "lower_contained": rep.lower_contained,
        "lower_equal": rep.lower_equal,
        "upper_contains": rep.upper_contains,
        "upper_equal": rep.upper_equal,
        "dims": rep.dims,
        "edim": rep.edim,
        "edim_note": rep.edim_note,
    }


def _theorem_text(rep) -> str:
    lines = ["[theorem]"]
    for k in ("lower_contained", "lower_equal", "upper_contains", "upper_equal"):
        lines.append(f"{k}: {str(getattr(rep, k)).lower()}")
    lines.append("dims: " + ", ".join(f"{k}={v}" for k, v in rep.dims.items()))
    lines.append(f"edim: {rep.edim if rep.edim is not None else 'n/a'} ({rep.edim_note})")
    return "\n".join(lines) + "\n"


def _model_command(cfg: RunConfig) -> str:
    spec = _load_model(cfg)
    head = {"model": spec.label, "field": spec.field.spec}
    if cfg.subcommand == "parse":
        return _emit(cfg, {**head, "states": spec.states,
                           "equations": [render_polynomial(g) for g in canonical_generators(spec.model_polys)]},
                     render_model(spec))
    ctx = build_context(spec)
    sub = cfg.subcommand
    if sub == "singular":
        text = f"codim: {ctx.codim}\n" + _section("singular locus off coordinate hyperplanes", ctx.F_sing)
        return _emit(cfg, {**head, "codim": ctx.codim, "sing_full": _gens(ctx.F_sing_full),
                           "sing": _gens(ctx.F_sing)}, text)
    if sub == "conormal":
        return _emit(cfg, {**head, "conormal": _gens(ctx.F_N)}, _section("conormal variety", ctx.F_N))
    if sub == "dual":
        return _emit(cfg, {**head, "dual": _gens(ctx.F_dual)}, _section("dual variety", ctx.F_dual))
    if sub == "dsl":
        D = ctx.F_DSL
        note = "data singular locus is empty" if D.is_unit() else ""
        text = _section("data singular locus", D) + (f"note: {note}\n" if note else "")
        return _emit(cfg, {**head, "dsl": _gens(D), "note": note}, text)
    if sub == "mldeg":
        seeds = [cfg.seed, cfg.seed + 1, cfg.seed + 2]
        deg = ml_degree_stable(ctx, seeds)
        return _emit(cfg, {**head, "seeds": seeds, "ml_degree": deg}, f"ml_degree: {deg}\n")
    if sub == "hadamard":
        lo, up = lower_bound(ctx), upper_bound(ctx)
        text = _section("sing * [1:...:1:-1]", lo) + _section("sing * dual", up)
        return _emit(cfg, {**head, "lower": _gens(lo), "upper": _gens(up)}, text)
    if sub == "check-theorem":
        rep = theorem_check(ctx)
        return _emit(cfg, {**head, "theorem": _theorem_dict(rep)}, _theorem_text(rep))
    if sub == "run-all":
        return _run_all(cfg, spec, ctx, head)
    raise UsageError(f"unknown subcommand {sub}")


def _run_all(cfg, spec, ctx, head) -> str:
    seeds = [cfg.seed, cfg.seed + 1, cfg.seed + 2]
    D = ctx.F_DSL
    deg = ml_degree_stable(ctx, seeds)
    rep = theorem_check(ctx)
    report = {
        "model": spec.label,
        "field": spec.field.spec,
        "seed": cfg.seed,
        "artifacts": {"sing": _gens(ctx.F_sing), "dual": _gens(ctx.F_dual), "dsl": _gens(D)},
        "ml_degree": deg,
        "theorem": _theorem_dict(rep),
        "stats": {"engine": ENGINE_VERSION, "codim": ctx.codim, "conormal_generators": len(ctx.F_N.generators),
                  "ml_degree_seeds": seeds},
    }
    text = [f"model: {spec.label}", f"field: {spec.field.spec}", f"seed: {cfg.seed}", f"codim: {ctx.codim}", ""]
    text.append(_section("singular locus off coordinate hyperplanes", ctx.F_sing))
    text.append(_section("dual variety", ctx.F_dual))
    text.append(_section("data singular locus", D))
    if D.is_unit():
        text.append("note: data singular locus is empty\n")
    text.append(f"ml_degree: {deg}\n")
    text.append(_theorem_text(rep))
    if cfg.extra.get("verify_q"):
        ok = _verify_q(spec, D)
        report["verify_q"] = ok
        text.append(f"verify_q: {str(ok).lower()}\n")
    return _emit(cfg, report, "\n".join(text))


def _verify_q(spec, D_fp) -> bool:
    """Recompute the data singular locus over Q and compare modulo the prime."""
    if not spec.field.modulus:
        return True
    ctx_q = build_context(_spec_over_q(spec))
    Dq = ctx_q.F_DSL.change_field(spec.field)
    return same_variety(Dq, D_fp)


def _spec_over_q(spec):
    from .mlpipeline import ModelSpec
    from .polyring import QQ
    from .textio import display_form

    # lift through the small-integer display form
    ring_q = spec.ring.with_field(QQ)
    polys = []
    for f in spec.model_polys:
        shown = render_polynomial(display_form(f))
        polys.append(parse_polynomial(shown, ring_q))
    return ModelSpec(spec.states, tuple(polys), QQ, spec.label)


def _ideal_command(cfg: RunConfig) -> str:
    try:
        raw = Path(cfg.path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read ideal file: {exc}") from None
    I = parse_ideal_json(raw)
    if cfg.field is not None and cfg.field != I.ring.field:
        I = I.change_field(cfg.field)
    sub = cfg.subcommand
    if sub == "gb":
        order = {"grevlex": GrevLex(), "lex": Lex()}[cfg.extra.get("order", "grevlex")]
        G = groebner_basis(I, order)
        out = Ideal(I.ring, G)
        strs = [render_polynomial(g, order) for g in G]
        text = "\n".join(strs)
        return _emit(cfg, {"ring": json.loads(render_ideal(out, RenderOptions("json")))["ring"],
                           "order": repr(order), "generators": strs}, text)
    if sub == "eliminate":
        names = [v.strip() for v in cfg.extra.get("vars", "").split(",") if v.strip()]
        for n in names:
            I.ring.index(n)
        out = eliminate(I, names)
    elif sub == "saturate":
        by = cfg.extra.get("by")
        if not by:
            raise UsageError("saturate needs --by POLY")
        f = parse_polynomial(by, I.ring)
        if not f:
            raise UsageError("cannot saturate by zero")
        out = saturate(I, f)
    else:
        raise UsageError(f"unknown subcommand {sub}")
    if cfg.json:
        return render_ideal(out, RenderOptions("json")) + "\n"
    return render_ideal(out) + "\n"


def run(cfg: RunConfig, out=None, err=None) -> int:
    """Execute one subcommand; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    stats = GBStats()
    cache = None
    if cfg.cache_dir:
        cache = GBCache(cfg.cache_dir)
    budget = Budget(max_pairs=cfg.max_pairs, max_terms=cfg.max_terms, seconds=cfg.budget_seconds)
    try:
        with computation(budget=budget, stats=stats, cache=cache):
            if cfg.subcommand in MODEL_COMMANDS:
                text = _model_command(cfg)
            elif cfg.subcommand in IDEAL_COMMANDS:
                text = _ideal_command(cfg)
            else:
                raise UsageError(f"unknown subcommand {cfg.subcommand}")
    except (ParseError, ModelError, FieldError, RingError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=err)
        return EXIT_BUDGET
    except MLDegreeError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_MLDEG
    except TheoremViolation as exc:
        print(f"error: invariant violation: {exc}", file=err)
        if exc.report is not None:
            print(json.dumps(_theorem_dict(exc.report)), file=err)
        return EXIT_INVARIANT
    except PipelineError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    finally:
        if cfg.verbosity:
            print(f"stats: {stats}", file=err)
            if cache is not None:
                print(f"cache: hits={cache.hits} misses={cache.misses} dir={cache.directory}", file=err)
    out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="q or fp:<prime> (default fp:%d)" % DEFAULT_PRIME)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget-seconds", type=float, default=600.0)
    common.add_argument("--max-pairs", type=int, default=2_000_000)
    common.add_argument("--max-terms", type=int, default=5_000_000)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache-dir", default=None, help="basis cache directory (default ./.gbcache or $GBCACHE_DIR)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("-v", "--verbose", action="count", default=0)

    ap = argparse.ArgumentParser(prog="mldsl", description=__doc__.splitlines()[1] if __doc__ else None)
    sub = ap.add_subparsers(dest="subcommand", required=True)
    for name in MODEL_COMMANDS:
        p = sub.add_parser(name, parents=[common], help=f"{name} on a model file")
        p.add_argument("model")
        if name == "run-all":
            p.add_argument("--verify-q", action="store_true", help="recompute the DSL over Q and cross-check")
    for name in IDEAL_COMMANDS:
        p = sub.add_parser(name, parents=[common], help=f"{name} on a JSON ideal")
        p.add_argument("ideal")
        if name == "gb":
            p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
        if name == "eliminate":
            p.add_argument("--vars", required=True, help="comma-separated variables to eliminate")
        if name == "saturate":
            p.add_argument("--by", required=True, help="polynomial to saturate by")
    return ap


def config_from_args(ns) -> RunConfig:
    fld = field_from_spec(ns.field) if ns.field else None
    if ns.no_cache:
        cache_dir = None
    else:
        cache_dir = ns.cache_dir or os.environ.get("GBCACHE_DIR") or ".gbcache"
    extra = {}
    for k in ("order", "vars", "by", "verify_q"):
        if hasattr(ns, k):
            extra[k] = getattr(ns, k)
    path = getattr(ns, "model", None) or getattr(ns, "ideal", None)
    return RunConfig(ns.subcommand, path, fld, ns.seed, ns.max_pairs, ns.max_terms, ns.budget_seconds,
                     cache_dir, ns.json, ns.verbose, extra)


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    level = logging.WARNING - 10 * min(ns.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = config_from_args(ns)
    except (FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
