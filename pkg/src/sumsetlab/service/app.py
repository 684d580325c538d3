"""FastAPI application exposing every sumsetlab operation as an endpoint.

All endpoints are POST with JSON bodies (GET /health excepted) and map
domain errors (ValueError and subclasses) to HTTP 400.  Budget exhaustion
during dimension search is not an error: the response carries
certified=false and the best lower bound found.
"""

from __future__ import annotations

import random

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..blocks import (
    block_decomposition,
    check_all_fiber_inclusions,
    check_fiber_inclusions,
)
from ..certificates import certify_case, exceptional_pairs, growth_constant
from ..cubes import CubeWitness, cube_dimension
from ..exactmath import format_rational
from ..extremal import (
    FamilySpec,
    family_limit,
    generate,
    lehmer_code,
    lehmer_image,
    predicted_counts,
    random_downset,
    root_sum_check,
    transposition_cube_report,
    verify_main_bound,
)
from ..inequality import check_family, min_ratio_search, random_assignment
from ..lattice import (
    LatticeSet,
    box,
    compress_all,
    is_down_set,
    minkowski_sum,
    unit_cube,
)
from . import models as m

_CLOSED_FORM_KINDS = ("box", "even", "odd", "cube")


def _points(s: LatticeSet) -> m.Points:
    return [list(p) for p in s.sorted_points()]


def _witness_model(w: CubeWitness | None) -> m.WitnessModel | None:
    if w is None:
        return None
    return m.WitnessModel(base=list(w.base), generators=[list(g) for g in w.generators])


def _downset_violation(a: LatticeSet) -> m.DownsetViolation | None:
    for p in a.sorted_points():
        if any(c < 0 for c in p):
            return m.DownsetViolation(point=list(p), missing=None)
        for i, c in enumerate(p):
            if c > 0:
                q = p[:i] + (c - 1,) + p[i + 1 :]
                if q not in a:
                    return m.DownsetViolation(point=list(p), missing=list(q))
    return None


def create_app() -> FastAPI:
    app = FastAPI(
        title="sumsetlab",
        version=__version__,
        description="Exact sumset-growth computations on integer lattices.",
    )

    @app.exception_handler(ValueError)
    async def _domain_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=m.HealthResponse)
    def health() -> m.HealthResponse:
        return m.HealthResponse(status="ok", version=__version__)

    @app.post("/sumset", response_model=m.SumsetResponse)
    def sumset(req: m.SumsetRequest) -> m.SumsetResponse:
        a = LatticeSet(req.a)
        b = a if req.b is None else LatticeSet(req.b)
        out = minkowski_sum(a, b)
        return m.SumsetResponse(points=_points(out), size=len(out))

    @app.post("/compress", response_model=m.CompressResponse)
    def compress(req: m.CompressRequest) -> m.CompressResponse:
        a = LatticeSet(req.points)
        c = compress_all(a)
        return m.CompressResponse(
            points=_points(c),
            size=len(c),
            down_set=is_down_set(c),
            sumset_size_before=len(minkowski_sum(a, a)),
            sumset_size_after=len(minkowski_sum(c, c)),
        )

    @app.post("/downset-check", response_model=m.DownsetCheckResponse)
    def downset_check(req: m.DownsetCheckRequest) -> m.DownsetCheckResponse:
        a = LatticeSet(req.points)
        violation = _downset_violation(a)
        return m.DownsetCheckResponse(
            ok=violation is None, size=len(a), violation=violation
        )

    @app.post("/dim", response_model=m.DimResponse)
    def dim(req: m.DimRequest) -> m.DimResponse:
        a = LatticeSet(req.points)
        if len(a) == 1:
            return m.DimResponse(dimension=0, certified=True, witness=None)
        found = cube_dimension(a, k_max=req.k_max, budget_ms=req.budget_ms)
        return m.DimResponse(
            dimension=found.dimension,
            certified=found.certified,
            witness=_witness_model(found.witness),
        )

    @app.post("/family", response_model=m.FamilyResponse)
    def family(req: m.FamilyRequest) -> m.FamilyResponse:
        spec = FamilySpec(req.kind, req.d, req.n)
        pts = generate(spec)
        return m.FamilyResponse(
            kind=spec.kind, d=spec.d, n=spec.n, points=_points(pts), size=len(pts)
        )

    @app.post("/predict", response_model=m.PredictResponse)
    def predict(req: m.FamilyRequest) -> m.PredictResponse:
        spec = FamilySpec(req.kind, req.d, req.n)
        size, sumset_size = predicted_counts(spec)
        limit = (
            format_rational(family_limit(spec.kind, spec.d))
            if spec.kind in ("box", "even", "odd")
            else None
        )
        return m.PredictResponse(
            kind=spec.kind,
            d=spec.d,
            n=spec.n,
            size=size,
            sumset_size=sumset_size,
            limit=limit,
        )

    @app.post("/check-bound", response_model=m.CheckBoundResponse)
    def check_bound(req: m.CheckBoundRequest) -> m.CheckBoundResponse:
        predicted_match: bool | None = None
        dim_hint = req.dim
        if req.points is not None:
            if req.kind is not None:
                raise ValueError("give either points or a family, not both")
            a = LatticeSet(req.points)
            sums = minkowski_sum(a, a)
        else:
            if req.kind is None or req.d is None:
                raise ValueError("need either points or a family kind with d")
            spec = FamilySpec(req.kind, req.d, req.n)
            a = generate(spec)
            sums = minkowski_sum(a, a)
            if spec.kind in _CLOSED_FORM_KINDS:
                predicted_match = predicted_counts(spec) == (len(a), len(sums))
            if dim_hint is None and unit_cube(a.dim).points <= a.points:
                dim_hint = a.dim  # the standard-basis cube is a maximal witness
        report = verify_main_bound(
            a, dim=dim_hint, budget_ms=req.budget_ms, sumset=sums
        )
        return m.CheckBoundResponse(
            size=report.size,
            sumset_size=report.sumset_size,
            dimension=report.dimension,
            dimension_certified=report.dimension_certified,
            growth=format_rational(report.growth),
            main_bound=format_rational(report.main_bound),
            main_bound_float=float(report.main_bound),
            main_ok=report.main_ok,
            slack=format_rational(report.slack),
            slack_float=float(report.slack),
            equality=report.equality,
            root2_bound=report.root2_bound,
            root2_ok=report.root2_ok,
            error_term=format_rational(report.error_term),
            error_term_positive=report.error_term_positive,
            predicted_match=predicted_match,
            ok=report.ok and predicted_match is not False,
        )

    @app.post("/blocks", response_model=m.BlocksResponse)
    def blocks(req: m.BlocksRequest) -> m.BlocksResponse:
        a = LatticeSet(req.points)
        dec = block_decomposition(a, req.axes)
        return m.BlocksResponse(
            axes=list(dec.axes),
            size=dec.size,
            grid_size=dec.grid_size,
            blocks=[
                m.BlockEntry(
                    pattern=list(u),
                    size=len(pts),
                    points=[list(p) for p in sorted(pts)],
                )
                for u, pts in sorted(dec.blocks.items())
            ],
            grid_blocks=[
                m.BlockEntry(
                    pattern=list(w),
                    size=len(pts),
                    points=[list(p) for p in sorted(pts)],
                )
                for w, pts in sorted(dec.grid_blocks.items())
            ],
        )

    @app.post("/fiber-check", response_model=m.FiberCheckResponse)
    def fiber_check(req: m.FiberCheckRequest) -> m.FiberCheckResponse:
        a = LatticeSet(req.points)
        if req.axes is not None:
            reports = [check_fiber_inclusions(a, req.axes)]
        else:
            reports = check_all_fiber_inclusions(a)
        checks = [
            m.FiberCheckEntry(
                axes=list(r.axes),
                inclusions_ok=r.inclusions_ok,
                block_size=r.block_size,
                grid_block_size=r.grid_block_size,
                bound_ok=r.bound_ok,
                bound_slack=(
                    format_rational(r.bound_slack)
                    if r.bound_slack is not None
                    else None
                ),
                ok=r.ok,
                failures=[
                    m.FiberFailure(u=list(u), v=list(v), missing=list(p))
                    for u, v, p in r.failures
                ],
            )
            for r in reports
        ]
        return m.FiberCheckResponse(ok=all(c.ok for c in checks), checks=checks)

    @app.post("/bm-check", response_model=m.BmCheckResponse)
    def bm_check(req: m.BmCheckRequest) -> m.BmCheckResponse:
        report = root_sum_check(LatticeSet(req.x), LatticeSet(req.y))
        return m.BmCheckResponse(
            dim=report.dim,
            x_size=report.x_size,
            y_size=report.y_size,
            expanded_size=report.expanded_size,
            ok=report.ok,
            equality=report.equality,
            slack=report.slack,
        )

    @app.post("/certify", response_model=m.CertifyResponse)
    def certify(req: m.CertifyRequest) -> m.CertifyResponse:
        cert = certify_case(req.k, req.d)
        return m.CertifyResponse(
            k=cert.k,
            d=cert.d,
            strategy=cert.strategy,
            families=[
                m.WeightedFamily(family=f, t=t, weight=format_rational(w))
                for f, t, w in cert.families
            ],
            redistributed=cert.redistributed,
            target=format_rational(cert.target),
            base_vector=[format_rational(c) for c in cert.base_vector],
            final_vector=[format_rational(c) for c in cert.final_vector],
            ok=cert.ok,
            first_violation=cert.first_violation,
        )

    @app.post("/minimize", response_model=m.MinimizeResponse)
    def minimize(req: m.MinimizeRequest) -> m.MinimizeResponse:
        result = min_ratio_search(
            req.k,
            req.d,
            restarts=req.restarts,
            seed=req.seed,
            tol=req.tol,
            monotone=req.monotone,
        )
        return m.MinimizeResponse(
            k=result.k,
            d=result.d,
            value=result.value,
            exact=format_rational(result.exact) if result.exact is not None else None,
            argmin=[float(v) for v in result.argmin],
            bound=format_rational(growth_constant(req.d)),
            meets_bound=result.meets_bound,
            monotone=result.monotone,
            candidates=[
                m.CandidateModel(value=val, values=[float(v) for v in vals])
                for val, vals in result.candidates
            ],
        )

    @app.post("/lemma-check", response_model=m.LemmaCheckResponse)
    def lemma_check(req: m.LemmaCheckRequest) -> m.LemmaCheckResponse:
        rng = random.Random(req.seed)
        failures = 0
        min_slack = None
        first_failure = None
        for _ in range(req.count):
            x = random_assignment(req.k, rng)
            outcome = check_family(req.family, x, req.d, t=req.t)
            if min_slack is None or outcome.slack < min_slack:
                min_slack = outcome.slack
            if not outcome.ok:
                failures += 1
                if first_failure is None:
                    first_failure = [format_rational(v) for v in x.values]
        return m.LemmaCheckResponse(
            family=req.family,
            k=req.k,
            d=req.d,
            t=req.t,
            count=req.count,
            ok=failures == 0,
            min_slack=format_rational(min_slack),
            failures=failures,
            first_failure_values=first_failure,
        )

    @app.post("/exceptional-pairs", response_model=m.ExceptionalPairsResponse)
    def exceptional(req: m.ExceptionalPairsRequest) -> m.ExceptionalPairsResponse:
        pairs = exceptional_pairs(req.max_m)
        return m.ExceptionalPairsResponse(
            max_m=req.max_m, pairs=[[k, mm] for k, mm in pairs]
        )

    @app.post("/lehmer", response_model=m.LehmerResponse)
    def lehmer(req: m.LehmerRequest) -> m.LehmerResponse:
        codes = (
            [list(lehmer_code(s)) for s in req.sigmas]
            if req.sigmas is not None
            else None
        )
        image = lehmer_image(req.d)
        matches = image == box(range(req.d, 0, -1))
        implied = (
            format_rational(growth_constant(req.d - 1)) if req.d >= 2 else None
        )
        return m.LehmerResponse(
            d=req.d,
            codes=codes,
            image=_points(image),
            image_size=len(image),
            matches_box=matches,
            implied_growth=implied,
        )

    @app.post("/permutohedron-cube", response_model=m.PermutohedronCubeResponse)
    def permutohedron_cube(
        req: m.PermutohedronCubeRequest,
    ) -> m.PermutohedronCubeResponse:
        report = transposition_cube_report(
            req.d, max_check_dim=req.max_check_dim, budget_ms=req.budget_ms
        )
        return m.PermutohedronCubeResponse(
            d=report.d,
            witness=_witness_model(report.witness),
            witness_valid=report.witness_valid,
            expected_k=report.expected_k,
            max_dimension=report.max_dimension,
            max_dimension_certified=report.max_dimension_certified,
            ok=report.ok,
        )

    @app.post("/random-downset", response_model=m.RandomDownsetResponse)
    def random_downset_endpoint(
        req: m.RandomDownsetRequest,
    ) -> m.RandomDownsetResponse:
        pts = random_downset(
            req.d, req.volume, seed=req.seed, sample_box=req.sample_box
        )
        return m.RandomDownsetResponse(
            d=req.d, points=_points(pts), size=len(pts), down_set=True
        )

    return app


app = create_app()
