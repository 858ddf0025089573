"""Computation service: every table the library produces, over HTTP.

All state is per-request; computations are pure functions of the query
parameters so the service scales to any number of clients.  The CLI is
a thin client for these endpoints.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException, Query

from .. import clifford, cohomology, ext_simples, moduli, resolutions, verify
from ..poly import RingContext
from ..serialize import matrix_to_json, poly_to_json
from .schemas import (BettiResponse, BettiRow, BettiSummand,
                      CohomologyResponse, ExtResponse, ExtSummandModel,
                      ModuliRequest, ModuliResponse, PresentationResponse,
                      Provenance, RankPolyResponse, SimplesResponse,
                      SimplesRow, VerifyRequest, VerifyResponse)

app = FastAPI(
    title="detsing",
    description="Exact invariants of the non-commutative desingularization "
                "of generic determinantal varieties",
)


def _bad(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/cohomology", response_model=CohomologyResponse)
def get_cohomology(m: int, a: int, b: int, c: int):
    try:
        entry = cohomology.direct_image(m, a, b, c)
    except (ValueError, AssertionError) as exc:
        raise _bad(exc)
    return CohomologyResponse(
        params={"m": m, "a": a, "b": b, "c": c},
        nu=entry.nu, rank=entry.rank, descriptor=entry.descriptor,
        provenance=Provenance(rule="higher-direct-image-cases"),
    )


@app.get("/rankpoly", response_model=RankPolyResponse)
def get_rankpoly(m: int, a: int, b: int):
    try:
        poly = cohomology.rank_polynomial(m, a, b)
    except (ValueError, AssertionError) as exc:
        raise _bad(exc)
    coeffs = [{"num": c.numerator, "den": c.denominator} for c in poly.coeffs]
    samples = [
        {"z": -c, "value": int(poly(Fraction(-c)))} for c in range(m + 1)
    ]
    return RankPolyResponse(
        params={"m": m, "a": a, "b": b},
        coefficients=coeffs, degree=poly.degree, sample_values=samples,
        provenance=Provenance(rule="euler-rank-polynomial"),
    )


@app.get("/betti", response_model=BettiResponse)
def get_betti(m: int, n: int, a: int, b: int, c: int):
    try:
        table = resolutions.resolution_shape(m, n, a, b, c)
        pd = resolutions.projective_dimension(m, n, a, b, c)
        perfect = resolutions.perfection_check(m, n, a, b, c)
    except ValueError as exc:
        raise _bad(exc)
    rows = [
        BettiRow(
            mu=mu,
            total_rank=table.rank_at(mu),
            summands=[
                BettiSummand(rank=s.rank, descriptor=s.descriptor, twist=s.twist)
                for s in table.rows[mu]
            ],
        )
        for mu in table.support()
    ]
    return BettiResponse(
        params={"m": m, "n": n, "a": a, "b": b, "c": c},
        rows=rows, projective_dimension=pd, perfect=perfect,
        provenance=Provenance(rule="pushdown-resolution-table"),
    )


@app.get("/presentation", response_model=PresentationResponse)
def get_presentation(m: int, n: int, a: int, b: int, blocks: bool = False):
    try:
        ctx = RingContext(m, n)
        pres = clifford.presentation(ctx, a, b)
    except ValueError as exc:
        raise _bad(exc)
    payload = PresentationResponse(
        params={"m": m, "n": n, "a": a, "b": b},
        normalized={"a": pres.a, "b": pres.b},
        p0_blocks=[
            {"k": k, "g_power": qg, "f_dual_power": ql}
            for (k, qg, ql) in pres.p0_blocks
        ],
        p1_blocks=[
            {"l": l, "g_power": qg, "f_dual_power": ql}
            for (l, qg, ql) in pres.p1_blocks
        ],
        rho=matrix_to_json(pres.rho),
        provenance=Provenance(rule="divided-power-presentation"),
    )
    if blocks:
        try:
            bd = clifford.block_decomposition(ctx, a, b)
        except ValueError as exc:
            raise _bad(exc)
        payload.blocks = [
            {
                "alpha": blk.alpha,
                "beta": blk.beta,
                "scale": {"num": blk.scale.numerator,
                          "den": blk.scale.denominator},
                "map": matrix_to_json(blk.map),
            }
            for blk in bd.blocks
        ]
    return payload


@app.get("/ext", response_model=ExtResponse)
def get_ext(m: int, n: int, a: int, b: int, t: int):
    try:
        summands = ext_simples.ext_dims(m, n, t, a, b)
    except ValueError as exc:
        raise _bad(exc)
    models = [
        ExtSummandModel(
            alpha=list(s.alpha.parts), square=[s.row, s.col],
            f_shape=list(s.col_drop.parts),
            g_shape=list(s.row_drop_conj.parts),
            dim_f=s.dim_f, dim_g=s.dim_g, dim=s.dim, twist=s.twist,
        )
        for s in summands
    ]
    return ExtResponse(
        params={"m": m, "n": n, "a": a, "b": b, "t": t},
        summands=models, total_dim=sum(s.dim for s in summands),
        provenance=Provenance(rule="convex-square-ext"),
    )


@app.get("/simples", response_model=SimplesResponse)
def get_simples(m: int, n: int, a: int, tmax: int):
    try:
        table = ext_simples.simple_resolution_table(m, n, a, tmax)
    except ValueError as exc:
        raise _bad(exc)
    rows = [
        SimplesRow(
            t=t,
            entries=[
                {
                    "vertex": e.vertex,
                    "twist": -e.twist,
                    "descriptor": e.descriptor,
                    "rank": e.rank,
                }
                for e in table[t]
            ],
        )
        for t in sorted(table)
    ]
    return SimplesResponse(
        params={"m": m, "n": n, "a": a, "tmax": tmax},
        rows=rows, provenance=Provenance(rule="simple-resolution-table"),
    )


def _parse_matrix(rows: list[list[str]], nr: int, nc: int, name: str):
    if len(rows) != nr or any(len(r) != nc for r in rows):
        raise ValueError(f"{name} must be {nr} x {nc}")
    return [[Fraction(x) for x in row] for row in rows]


@app.post("/moduli", response_model=ModuliResponse)
def post_moduli(req: ModuliRequest):
    try:
        alpha = _parse_matrix(req.alpha, req.m, req.m - 1, "alpha")
        beta = _parse_matrix(req.beta, req.n, req.m - 1, "beta")
        pt = moduli.ModuliPoint(req.m, req.n, alpha, beta)
        if not pt.is_split():
            raise ValueError("alpha is not a split monomorphism")
        rep = moduli.build_rep(pt)
    except (ValueError, ZeroDivisionError) as exc:
        raise _bad(exc)
    violations = moduli.check_relations(rep)
    amat, rank = moduli.associated_matrix(pt)
    pt2 = moduli.reconstruct(rep)
    return ModuliResponse(
        params={"m": req.m, "n": req.n},
        relations_ok=not violations,
        violations=violations,
        scalar_matrix=[[str(x) for x in row] for row in amat],
        associated_rank=rank,
        simple=moduli.is_simple(rep),
        round_trip_exact=(pt2.alpha == pt.alpha and pt2.beta == pt.beta),
        provenance=Provenance(rule="exterior-power-representation"),
    )


@app.post("/verify", response_model=VerifyResponse)
def post_verify(req: VerifyRequest):
    try:
        report = verify.run_suite(
            req.suite, req.m, req.n, max_degree=req.max_degree,
            seed=req.seed, count=req.count,
        )
    except ValueError as exc:
        raise _bad(exc)
    return VerifyResponse(report=report, passed=report["passed"])
