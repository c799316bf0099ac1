"""Command-line driver: verify, sweep, term-eq, emit-dot, serve.

The CLI is a thin client. Every command (except ``serve``) builds one
request, sends it through the service — in-process by default, or at
``--server URL`` — and renders the reports. Exit codes: 0 when every
check passes, 1 when any check fails, 2 for invalid input.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Optional

import click

from .client import ServiceClient


def _parse_sizes(text: Optional[str]) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        sizes = [int(part) for part in text.split(",")]
    except ValueError:
        raise click.UsageError(f"--sizes wants integers like 2,1,3, got {text!r}")
    if len(sizes) != 3 or any(s < 0 for s in sizes):
        raise click.UsageError("--sizes wants exactly three non-negative counts")
    return sizes


def _parse_lattice(text: Optional[str]) -> Optional[dict[str, Any]]:
    if text is None:
        return None
    if text.startswith("divisors:"):
        try:
            return {"kind": "divisors", "n": int(text.split(":", 1)[1])}
        except ValueError:
            raise click.UsageError(f"bad divisor bound in {text!r}")
    if text.startswith("downset:"):
        path = Path(text.split(":", 1)[1])
        data = _load_json(path)
        if "points" not in data:
            raise click.UsageError(f"{path} is missing the poset's 'points'")
        return {
            "kind": "downset",
            "points": data["points"],
            "relation": data.get("relation", []),
        }
    path = Path(text)
    data = _load_json(path)
    if "elements" not in data or "leq" not in data:
        raise click.UsageError(f"{path} must provide 'elements' and 'leq'")
    return {"kind": "explicit", "elements": data["elements"], "leq": data["leq"]}


def _load_json(path: Path) -> dict[str, Any]:
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise click.UsageError(f"no such file: {path}")
    except json.JSONDecodeError as bad:
        raise click.UsageError(f"{path} is not valid JSON: {bad}")


def _parse_objects(text: Optional[str]) -> Optional[list[str]]:
    if text is None:
        return None
    objects = [part.strip() for part in text.split(",") if part.strip()]
    if len(objects) != 3:
        raise click.UsageError("--objects wants exactly three element labels")
    return objects


def _render_reports(body: dict[str, Any], as_json: bool) -> int:
    if as_json:
        click.echo(json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        for report in body["reports"]:
            params = ", ".join(
                f"{k}={v}" for k, v in report["params"].items() if v is not None
            )
            line = "{:<8} {:<10} {:<8} {}".format(
                report["verdict"].upper(), report["check"], report["instance"], params
            )
            click.echo(f"{line}  ({report['elapsed_ms']:.1f} ms)")
            if report["detail"]:
                click.echo(f"         {report['detail']}")
            if report["counterexample"]:
                click.echo(
                    "         counterexample: "
                    + json.dumps(report["counterexample"], sort_keys=True, ensure_ascii=False)
                )
        s = body["summary"]
        click.echo(
            f"{s['total']} check(s): {s['passed']} passed, {s['failed']} failed, "
            f"{s['rejected']} rejected"
        )
    summary = body["summary"]
    if summary["rejected"]:
        return 2
    if summary["failed"]:
        return 1
    return 0


def _post_reports(client: ServiceClient, path: str, payload: dict, as_json: bool) -> None:
    response = client.post(path, payload)
    if response.status_code != 200:
        click.echo(f"request rejected ({response.status_code}): {response.text}", err=True)
        sys.exit(2)
    sys.exit(_render_reports(response.json(), as_json))


@click.group()
@click.option(
    "--server",
    default=None,
    envvar="DISTCAT_SERVER",
    help="URL of a running service; defaults to driving the app in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: Optional[str]) -> None:
    """Verification checks for distributivity in bicartesian closed categories."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.argument("check", type=click.Choice(["distrib", "curry", "adjunction", "mediator"]))
@click.option("--instance", type=click.Choice(["finset", "heyting", "terms"]), default="finset")
@click.option("--sizes", default=None, help="finset sizes, e.g. 2,1,3")
@click.option("--lattice", default=None, help="divisors:N, a lattice JSON file, or downset:FILE")
@click.option("--objects", default=None, help="three lattice elements, e.g. 6,10,15")
@click.option("--trials", type=int, default=None, help="seeded repetitions where sampling applies")
@click.option("--seed", type=int, default=0)
@click.option("--json", "as_json", is_flag=True, help="emit the JSON report document")
@click.pass_obj
def verify(
    client: ServiceClient,
    check: str,
    instance: str,
    sizes: Optional[str],
    lattice: Optional[str],
    objects: Optional[str],
    trials: Optional[int],
    seed: int,
    as_json: bool,
) -> None:
    """Run one check in one instance."""
    payload = {
        "check": check,
        "instance": instance,
        "sizes": _parse_sizes(sizes),
        "lattice": _parse_lattice(lattice),
        "objects": _parse_objects(objects),
        "trials": trials,
        "seed": seed,
    }
    _post_reports(client, "/verify", payload, as_json)


@main.command()
@click.option("--instance", type=click.Choice(["finset", "heyting"]), default="finset")
@click.option("--max-size", type=int, default=None, help="finset: sweep sizes {0..k}³")
@click.option("--max-poset", type=int, default=None, help="heyting: posets on up to n points")
@click.option("--trials", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def sweep(
    client: ServiceClient,
    instance: str,
    max_size: Optional[int],
    max_poset: Optional[int],
    trials: Optional[int],
    seed: int,
    as_json: bool,
) -> None:
    """Run every check over a family of inputs."""
    if instance == "finset" and max_size is None:
        raise click.UsageError("finset sweeps need --max-size")
    if instance == "heyting" and max_poset is None:
        raise click.UsageError("heyting sweeps need --max-poset")
    payload = {
        "instance": instance,
        "max_size": max_size,
        "max_poset": max_poset,
        "trials": trials,
        "seed": seed,
    }
    _post_reports(client, "/sweep", payload, as_json)


@main.command("term-eq")
@click.argument("left", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("right", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--trials", type=int, default=10)
@click.option("--max-size", "max_base_size", type=int, default=3, help="largest base-set size tried")
@click.option("--seed", type=int, default=0)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def term_eq(
    client: ServiceClient,
    left: Path,
    right: Path,
    trials: int,
    max_base_size: int,
    seed: int,
    as_json: bool,
) -> None:
    """Compare two term documents semantically."""
    payload = {
        "left": left.read_text(),
        "right": right.read_text(),
        "trials": trials,
        "max_base_size": max_base_size,
        "seed": seed,
    }
    _post_reports(client, "/term-eq", payload, as_json)


@main.command("emit-dot")
@click.argument("diagram", type=int)
@click.option(
    "--instance", type=click.Choice(["symbolic", "finset", "heyting"]), default="symbolic"
)
@click.option("--sizes", default=None, help="finset sizes, e.g. 2,1,3")
@click.option("--lattice", default=None)
@click.option("--objects", default=None)
@click.pass_obj
def emit_dot(
    client: ServiceClient,
    diagram: int,
    instance: str,
    sizes: Optional[str],
    lattice: Optional[str],
    objects: Optional[str],
) -> None:
    """Print one construction diagram as dot text."""
    payload = {
        "diagram": diagram,
        "instance": instance,
        "sizes": _parse_sizes(sizes),
        "lattice": _parse_lattice(lattice),
        "objects": _parse_objects(objects),
    }
    if instance == "finset" and sizes is None:
        payload["sizes"] = [2, 2, 2]
    response = client.post("/dot", payload)
    if response.status_code != 200:
        click.echo(f"request rejected ({response.status_code}): {response.text}", err=True)
        sys.exit(2)
    click.echo(response.text, nl=False)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the verification service with uvicorn."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
