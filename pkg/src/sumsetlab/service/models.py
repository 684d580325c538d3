"""Request/response models for the service endpoints.

Conventions: point sets travel as lists of integer coordinate lists; exact
rationals travel as strings "p/q" (plain "p" for integers) so nothing is
rounded on the wire.  Float mirrors are provided where a quick numeric read
is useful.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

Points = list[list[int]]


class SumsetRequest(BaseModel):
    a: Points
    b: Points | None = None


class SumsetResponse(BaseModel):
    points: Points
    size: int


class CompressRequest(BaseModel):
    points: Points


class CompressResponse(BaseModel):
    points: Points
    size: int
    down_set: bool
    sumset_size_before: int
    sumset_size_after: int


class DownsetCheckRequest(BaseModel):
    points: Points


class DownsetViolation(BaseModel):
    point: list[int]
    missing: list[int] | None = None  # absent predecessor; None if point invalid


class DownsetCheckResponse(BaseModel):
    ok: bool
    size: int
    violation: DownsetViolation | None = None


class DimRequest(BaseModel):
    points: Points
    k_max: int | None = Field(default=None, ge=0)
    budget_ms: float | None = Field(default=None, gt=0)


class WitnessModel(BaseModel):
    base: list[int]
    generators: list[list[int]]


class DimResponse(BaseModel):
    dimension: int
    certified: bool
    witness: WitnessModel | None = None


class FamilyRequest(BaseModel):
    kind: str
    d: int = Field(ge=1)
    n: int = 0


class FamilyResponse(BaseModel):
    kind: str
    d: int
    n: int
    points: Points
    size: int


class PredictResponse(BaseModel):
    kind: str
    d: int
    n: int
    size: int
    sumset_size: int
    limit: str | None = None  # limiting doubling ratio of the family, "p/q"


class CheckBoundRequest(BaseModel):
    points: Points | None = None
    kind: str | None = None
    d: int | None = Field(default=None, ge=1)
    n: int = 0
    dim: int | None = Field(default=None, ge=0)
    budget_ms: float | None = Field(default=None, gt=0)


class CheckBoundResponse(BaseModel):
    size: int
    sumset_size: int
    dimension: int
    dimension_certified: bool
    growth: str
    main_bound: str
    main_bound_float: float
    main_ok: bool
    slack: str
    slack_float: float
    equality: bool
    root2_bound: float
    root2_ok: bool
    error_term: str
    error_term_positive: bool
    predicted_match: bool | None = None  # set when built from a closed-form family
    ok: bool


class BlocksRequest(BaseModel):
    points: Points
    axes: list[int]


class BlockEntry(BaseModel):
    pattern: list[int]
    size: int
    points: Points


class BlocksResponse(BaseModel):
    axes: list[int]
    size: int
    grid_size: int
    blocks: list[BlockEntry]
    grid_blocks: list[BlockEntry]


class FiberCheckRequest(BaseModel):
    points: Points
    axes: list[int] | None = None  # None checks every axis subset


class FiberFailure(BaseModel):
    u: list[int]
    v: list[int]
    missing: list[int]


class FiberCheckEntry(BaseModel):
    axes: list[int]
    inclusions_ok: bool
    block_size: int
    grid_block_size: int
    bound_ok: bool | None = None
    bound_slack: str | None = None
    ok: bool
    failures: list[FiberFailure]


class FiberCheckResponse(BaseModel):
    ok: bool
    checks: list[FiberCheckEntry]


class BmCheckRequest(BaseModel):
    x: Points
    y: Points


class BmCheckResponse(BaseModel):
    dim: int
    x_size: int
    y_size: int
    expanded_size: int
    ok: bool
    equality: bool
    slack: float


class CertifyRequest(BaseModel):
    k: int = Field(ge=0)
    d: int = Field(ge=1)


class WeightedFamily(BaseModel):
    family: str
    t: int | None = None
    weight: str


class CertifyResponse(BaseModel):
    k: int
    d: int
    strategy: str
    families: list[WeightedFamily]
    redistributed: bool
    target: str
    base_vector: list[str]
    final_vector: list[str]
    ok: bool
    first_violation: int | None = None


class MinimizeRequest(BaseModel):
    k: int = Field(ge=1)
    d: int = Field(ge=2)
    restarts: int = Field(default=200, ge=1)
    seed: int = 0
    tol: float = Field(default=1e-6, gt=0)
    monotone: bool = True


class CandidateModel(BaseModel):
    value: float
    values: list[float]


class MinimizeResponse(BaseModel):
    k: int
    d: int
    value: float
    exact: str | None = None
    argmin: list[float]
    bound: str
    meets_bound: bool
    monotone: bool
    candidates: list[CandidateModel]  # assignments seen below bound - tol


class LemmaCheckRequest(BaseModel):
    family: str
    k: int = Field(ge=0)
    d: int = Field(ge=1)
    t: int | None = None
    count: int = Field(default=100, ge=1)
    seed: int = 0


class LemmaCheckResponse(BaseModel):
    family: str
    k: int
    d: int
    t: int | None = None
    count: int
    ok: bool
    min_slack: str
    failures: int
    first_failure_values: list[str] | None = None


class ExceptionalPairsRequest(BaseModel):
    max_m: int = Field(ge=3)


class ExceptionalPairsResponse(BaseModel):
    max_m: int
    pairs: list[list[int]]


class LehmerRequest(BaseModel):
    d: int = Field(ge=1)
    sigmas: Points | None = None


class LehmerResponse(BaseModel):
    d: int
    codes: Points | None = None
    image: Points
    image_size: int
    matches_box: bool
    implied_growth: str | None = None  # growth constant inherited by supersets


class PermutohedronCubeRequest(BaseModel):
    d: int = Field(ge=2)
    max_check_dim: int = Field(default=4, ge=0)
    budget_ms: float | None = Field(default=None, gt=0)


class PermutohedronCubeResponse(BaseModel):
    d: int
    witness: WitnessModel
    witness_valid: bool
    expected_k: int
    max_dimension: int | None = None
    max_dimension_certified: bool | None = None
    ok: bool


class RandomDownsetRequest(BaseModel):
    d: int = Field(ge=1)
    volume: int = Field(ge=1)
    seed: int = 0
    sample_box: list[int] | None = None


class RandomDownsetResponse(BaseModel):
    d: int
    points: Points
    size: int
    down_set: bool


class HealthResponse(BaseModel):
    status: str
    version: str
