"""Request/response models for the computation service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class Provenance(BaseModel):
    rule: str


class CohomologyResponse(BaseModel):
    params: dict
    nu: int | None
    rank: int
    descriptor: str
    provenance: Provenance


class RankPolyResponse(BaseModel):
    params: dict
    coefficients: list[dict]  # {num, den} per power of z, ascending
    degree: int
    sample_values: list[dict]  # {z, value} on the interpolation window
    provenance: Provenance


class BettiSummand(BaseModel):
    rank: int
    descriptor: str
    twist: int | None


class BettiRow(BaseModel):
    mu: int
    total_rank: int
    summands: list[BettiSummand]


class BettiResponse(BaseModel):
    params: dict
    rows: list[BettiRow]
    projective_dimension: int
    perfect: bool
    provenance: Provenance


class PresentationResponse(BaseModel):
    params: dict
    normalized: dict
    p0_blocks: list[dict]
    p1_blocks: list[dict]
    rho: dict
    blocks: list[dict] | None = None
    provenance: Provenance


class ExtSummandModel(BaseModel):
    alpha: list[int]
    square: list[int]
    f_shape: list[int]
    g_shape: list[int]
    dim_f: int
    dim_g: int
    dim: int
    twist: int


class ExtResponse(BaseModel):
    params: dict
    summands: list[ExtSummandModel]
    total_dim: int
    provenance: Provenance


class SimplesRow(BaseModel):
    t: int
    entries: list[dict]


class SimplesResponse(BaseModel):
    params: dict
    rows: list[SimplesRow]
    provenance: Provenance


class ModuliRequest(BaseModel):
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    alpha: list[list[str]]  # exact rationals "p/q"
    beta: list[list[str]]


class ModuliResponse(BaseModel):
    params: dict
    relations_ok: bool
    violations: list[str]
    scalar_matrix: list[list[str]]
    associated_rank: int
    simple: bool
    round_trip_exact: bool
    provenance: Provenance


class VerifyRequest(BaseModel):
    suite: str
    m: int = Field(ge=1)
    n: int | None = None
    max_degree: int = 6
    seed: int = 0
    count: int | None = None


class VerifyResponse(BaseModel):
    report: dict
    passed: bool
