"""Command-line client for the computation service.

Every subcommand builds an HTTP request against the service API.  By
default the app is mounted in-process (no server needed); pass
--server URL (or set DETSING_SERVER) to talk to a running instance,
and `detsing serve` to start one.  Exit codes: 0 success/verified,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import asyncio
import json
import sys
from fractions import Fraction

import click
import httpx


def _request(server: str | None, method: str, path: str,
             params: dict | None = None, body: dict | None = None) -> dict:
    async def go():
        if server:
            transport = None
            base = server.rstrip("/")
            client = httpx.AsyncClient(base_url=base, timeout=None)
        else:
            from .service import app
            transport = httpx.ASGITransport(app=app)
            client = httpx.AsyncClient(transport=transport,
                                       base_url="http://detsing.internal",
                                       timeout=None)
        async with client:
            resp = await client.request(method, path, params=params, json=body)
        return resp

    resp = asyncio.run(go())
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail", resp.text)
        raise click.UsageError(str(detail))
    resp.raise_for_status()
    return resp.json()


def _emit(payload: dict, as_json: bool, human_lines, out: str | None = None):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    if as_json:
        click.echo(text)
    else:
        for line in human_lines(payload):
            click.echo(line)


server_option = click.option(
    "--server", envvar="DETSING_SERVER", default=None,
    help="URL of a running service; defaults to in-process execution.",
)
json_option = click.option("--json", "as_json", is_flag=True,
                           help="Emit machine-readable JSON.")
out_option = click.option("--out", type=click.Path(writable=True), default=None,
                          help="Also write the JSON payload to this file.")


@click.group()
def main():
    """Exact invariants of determinantal non-commutative resolutions."""


@main.command()
@click.option("--m", required=True, type=int)
@click.option("--a", required=True, type=int)
@click.option("--b", required=True, type=int)
@click.option("--c", required=True, type=int)
@json_option
@out_option
@server_option
def cohomology(m, a, b, c, as_json, out, server):
    """The surviving higher direct image at twist -c."""
    payload = _request(server, "GET", "/cohomology",
                       {"m": m, "a": a, "b": b, "c": c})

    def human(p):
        if p["nu"] is None:
            yield f"all higher direct images vanish (m={m}, a={a}, b={b}, c={c})"
        else:
            yield (f"nu = {p['nu']}   rank = {p['rank']}   "
                   f"descriptor = {p['descriptor']}")

    _emit(payload, as_json, human, out)


@main.command()
@click.option("--m", required=True, type=int)
@click.option("--a", required=True, type=int)
@click.option("--b", required=True, type=int)
@json_option
@out_option
@server_option
def rankpoly(m, a, b, as_json, out, server):
    """Euler-characteristic polynomial of the twists."""
    payload = _request(server, "GET", "/rankpoly", {"m": m, "a": a, "b": b})

    def human(p):
        terms = []
        for k, coeff in enumerate(p["coefficients"]):
            if coeff["num"] == 0:
                continue
            frac = Fraction(coeff["num"], coeff["den"])
            terms.append(f"({frac})z^{k}" if k else f"{frac}")
        yield "r(z) = " + (" + ".join(terms) if terms else "0")
        yield "samples: " + "  ".join(
            f"r({v['z']})={v['value']}" for v in p["sample_values"]
        )

    _emit(payload, as_json, human, out)


@main.command()
@click.option("--m", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--a", required=True, type=int)
@click.option("--b", required=True, type=int)
@click.option("--c", required=True, type=int)
@json_option
@out_option
@server_option
def betti(m, n, a, b, c, as_json, out, server):
    """Resolution shape of the pushed-down hom bundle."""
    payload = _request(server, "GET", "/betti",
                       {"m": m, "n": n, "a": a, "b": b, "c": c})

    def human(p):
        yield (f"projective dimension {p['projective_dimension']}"
               f"{'  (perfect)' if p['perfect'] else ''}")
        for row in p["rows"]:
            parts = ", ".join(
                f"{s['rank']} x {s['descriptor']}"
                f"[{s['twist'] if s['twist'] is not None else '?'}]"
                for s in row["summands"]
            )
            yield f"  mu = {row['mu']:>3}: rank {row['total_rank']:>5}   {parts}"

    _emit(payload, as_json, human, out)


@main.command()
@click.option("--m", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--a", required=True, type=int)
@click.option("--b", required=True, type=int)
@click.option("--blocks", is_flag=True, help="Include the block decomposition.")
@json_option
@out_option
@server_option
def presentation(m, n, a, b, blocks, as_json, out, server):
    """Minimal presentation of a graded piece of the algebra."""
    payload = _request(server, "GET", "/presentation",
                       {"m": m, "n": n, "a": a, "b": b,
                        "blocks": "true" if blocks else "false"})

    def human(p):
        yield (f"normalized (a, b) = ({p['normalized']['a']},"
               f" {p['normalized']['b']})")
        yield "P0 blocks: " + ", ".join(
            f"k={blk['k']} (G^{blk['g_power']} x F*^{blk['f_dual_power']})"
            for blk in p["p0_blocks"])
        yield "P1 blocks: " + ", ".join(
            f"l={blk['l']} (G^{blk['g_power']} x F*^{blk['f_dual_power']})"
            for blk in p["p1_blocks"])
        rho = p["rho"]
        yield (f"rho: {rho['rows']} x {rho['cols']} with "
               f"{len(rho['entries'])} nonzero entries")
        if p.get("blocks"):
            for blk in p["blocks"]:
                yield (f"block C^({blk['alpha']},{blk['beta']}): "
                       f"{blk['map']['rows']} x {blk['map']['cols']}, scale "
                       f"{Fraction(blk['scale']['num'], blk['scale']['den'])}")

    _emit(payload, as_json, human, out)


@main.command()
@click.option("--m", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--a", required=True, type=int)
@click.option("--b", required=True, type=int)
@click.option("--t", required=True, type=int)
@json_option
@out_option
@server_option
def ext(m, n, a, b, t, as_json, out, server):
    """Ext dimensions between two graded simples."""
    payload = _request(server, "GET", "/ext",
                       {"m": m, "n": n, "a": a, "b": b, "t": t})

    def human(p):
        yield f"Ext^{t} total dimension: {p['total_dim']}"
        for s in p["summands"]:
            yield (f"  alpha={tuple(s['alpha'])} square={tuple(s['square'])}"
                   f" F-shape {tuple(s['f_shape'])} ({s['dim_f']})"
                   f" x G-shape {tuple(s['g_shape'])} ({s['dim_g']})"
                   f" twist {s['twist']}")

    _emit(payload, as_json, human, out)


@main.command()
@click.option("--m", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--a", required=True, type=int)
@click.option("--tmax", required=True, type=int)
@json_option
@out_option
@server_option
def simples(m, n, a, tmax, as_json, out, server):
    """Shape of the minimal resolution of a graded simple."""
    payload = _request(server, "GET", "/simples",
                       {"m": m, "n": n, "a": a, "tmax": tmax})

    def human(p):
        for row in p["rows"]:
            if not row["entries"]:
                yield f"t={row['t']}: (nothing)"
                continue
            yield f"t={row['t']}:"
            for e in row["entries"]:
                yield (f"    P_{e['vertex']}({e['twist']}) (x) {e['descriptor']}"
                       f"   rank {e['rank']}")

    _emit(payload, as_json, human, out)


def _read_matrix_file(path: str):
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append([str(Fraction(tok)) for tok in line.split()])
    return rows


@main.command()
@click.option("--m", required=True, type=int)
@click.option("--n", required=True, type=int)
@click.option("--alpha", "alpha_file", required=True,
              type=click.Path(exists=True))
@click.option("--beta", "beta_file", required=True,
              type=click.Path(exists=True))
@json_option
@out_option
@server_option
def moduli(m, n, alpha_file, beta_file, as_json, out, server):
    """Check the representation attached to a point (alpha, beta)."""
    try:
        alpha = _read_matrix_file(alpha_file)
        beta = _read_matrix_file(beta_file)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad matrix file: {exc}")
    payload = _request(server, "POST", "/moduli", body={
        "m": m, "n": n, "alpha": alpha, "beta": beta,
    })

    def human(p):
        yield f"relations: {'ok' if p['relations_ok'] else 'VIOLATED'}"
        yield f"associated matrix rank: {p['associated_rank']} (of at most {m - 1})"
        yield f"simple: {p['simple']}"
        yield f"reconstruction round-trip exact: {p['round_trip_exact']}"
        for row in p["scalar_matrix"]:
            yield "  " + "  ".join(f"{x:>8}" for x in row)

    _emit(payload, as_json, human, out)


@main.command()
@click.option("--suite", required=True,
              type=click.Choice(["star", "pbw", "cohomology", "hilbert",
                                 "betti", "moduli", "ext"]))
@click.option("--m", required=True, type=int)
@click.option("--n", type=int, default=None)
@click.option("--max-degree", type=int, default=6)
@click.option("--seed", type=int, default=0)
@click.option("--count", type=int, default=None)
@json_option
@out_option
@server_option
def verify(suite, m, n, max_degree, seed, count, as_json, out, server):
    """Run a verification suite; exit 0 iff everything passes."""
    body = {"suite": suite, "m": m, "n": n, "max_degree": max_degree,
            "seed": seed, "count": count}
    payload = _request(server, "POST", "/verify", body=body)

    def human(p):
        rep = p["report"]
        for c in rep["checks"]:
            yield f"[{c['status']:>4}] {c['name']}"
        yield ("suite passed" if p["passed"] else "suite FAILED")

    _emit(payload, as_json or not payload["passed"], human, out)
    if not payload["passed"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Start the computation service."""
    import uvicorn

    from .service import app
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
