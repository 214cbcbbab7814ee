"""Command-line front end.

Exit codes: 0 success/feasible, 1 infeasible or not colorable (witness
printed), 2 usage or input error.  JSON on stdout by default;
``--format text`` gives human-readable summaries.  Diagnostics go to
stderr.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import oracle
from .digraph import Digraph, format_digraph, parse_digraph, random_digraph
from .errors import DicolorError
from .inversion import make_two_dicolorable, replay_trace
from .ordering import (
    Coloring,
    Feasible,
    Infeasible,
    Ordering,
    check_ordering,
    coloring_from_potentials,
    format_ordering,
    identity_ordering,
    kappa,
    min_forward_ratio,
    ordering_from_coloring,
    parse_ordering,
)

DEFAULT_P_CYCLE = (0.1, 0.3, 0.6)


def _read_digraph(path: str) -> Digraph:
    if path == "-":
        return parse_digraph(sys.stdin.read())
    with open(path) as fh:
        return parse_digraph(fh.read())


def _get_ordering(D: Digraph, order: str | None) -> Ordering:
    if order is None:
        return identity_ordering(D.n)
    sigma = parse_ordering(order)
    if sigma.n != D.n:
        raise DicolorError(
            f"ordering has {sigma.n} vertices, digraph has {D.n}"
        )
    return sigma


def _emit(obj: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(obj))
    else:
        click.echo(text)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _coloring_json(col: Coloring) -> dict:
    return {"k": col.k, "color": list(col.color)}


def _witness_json(witness) -> dict:
    return {"witness": {"arcs": list(witness.arc_ids)}}


@click.group()
def main():
    """Acyclic digraph colorings via vertex orderings, with certificates."""


input_arg = click.argument("input", type=str)
order_opt = click.option(
    "--order", default=None, help="comma-separated vertex list, e.g. 2,0,1"
)
format_opt = click.option(
    "--format", "fmt", type=click.Choice(["json", "text"]), default="json"
)


@main.command()
@input_arg
@click.option("--k", type=int, required=True)
@order_opt
@format_opt
def check(input, k, order, fmt):
    """Decide the circuit condition; print a potential or a witness."""
    try:
        D = _read_digraph(input)
        sigma = _get_ordering(D, order)
        if k < 1:
            raise DicolorError("k must be at least 1")
        outcome = check_ordering(D, sigma, k)
    except (DicolorError, OSError, ValueError) as exc:
        _fail(str(exc))
    if isinstance(outcome, Feasible):
        z = list(outcome.potential.z)
        _emit({"potential": z}, fmt, f"feasible, potential {z}")
        sys.exit(0)
    arcs = list(outcome.witness.arc_ids)
    _emit(_witness_json(outcome.witness), fmt, f"infeasible, witness arcs {arcs}")
    sys.exit(1)


@main.command()
@input_arg
@click.option("--k", type=int, required=True)
@order_opt
@format_opt
def color(input, k, order, fmt):
    """Produce a k-coloring from an ordering, or the witness circuit."""
    try:
        D = _read_digraph(input)
        sigma = _get_ordering(D, order)
        if k < 1:
            raise DicolorError("k must be at least 1")
        outcome = check_ordering(D, sigma, k)
    except (DicolorError, OSError, ValueError) as exc:
        _fail(str(exc))
    if isinstance(outcome, Infeasible):
        _emit(
            _witness_json(outcome.witness),
            fmt,
            f"infeasible, witness arcs {list(outcome.witness.arc_ids)}",
        )
        sys.exit(1)
    col = coloring_from_potentials(D, outcome.potential, k)
    _emit(_coloring_json(col), fmt, f"colors {list(col.color)}")
    sys.exit(0)


@main.command("order-from-coloring")
@input_arg
@click.option(
    "--coloring",
    required=True,
    help='coloring JSON ({"k":..,"color":[..]}) or a path to it',
)
@format_opt
def order_from_coloring_cmd(input, coloring, fmt):
    """Ordering certifying a given valid coloring (easy direction)."""
    try:
        D = _read_digraph(input)
        raw = coloring
        if not raw.lstrip().startswith("{"):
            with open(raw) as fh:
                raw = fh.read()
        data = json.loads(raw)
        col = Coloring(int(data["k"]), tuple(int(c) for c in data["color"]))
        sigma = ordering_from_coloring(D, col)
    except (DicolorError, OSError, ValueError, KeyError, TypeError) as exc:
        _fail(str(exc))
    text = format_ordering(sigma)
    _emit({"order": text}, fmt, text)
    sys.exit(0)


@main.command()
@input_arg
@order_opt
@format_opt
def ratio(input, order, fmt):
    """Exact minimum forward ratio of an ordering, and kappa."""
    try:
        D = _read_digraph(input)
        sigma = _get_ordering(D, order)
        rho = min_forward_ratio(D, sigma)
        k = kappa(D, sigma)
    except (DicolorError, OSError, ValueError) as exc:
        _fail(str(exc))
    rho_str = "inf" if rho is None else f"{rho.numerator}/{rho.denominator}"
    _emit({"ratio": rho_str, "kappa": k}, fmt, f"ratio {rho_str}, kappa {k}")
    sys.exit(0)


@main.command()
@input_arg
@order_opt
@click.option("--random-order", is_flag=True, help="use a seeded random ordering")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--digraph-out", default=None, help="also write the final edge list here"
)
@click.option("--report-dir", default=None, help="write CSV and figures here")
@format_opt
def invert(input, order, random_order, seed, digraph_out, report_dir, fmt):
    """Reverse circuits until the digraph is 2-dicolorable."""
    try:
        D = _read_digraph(input)
        if random_order:
            import random as _random

            seq = list(range(D.n))
            _random.Random(seed).shuffle(seq)
            from .ordering import ordering_from_sequence

            sigma = ordering_from_sequence(seq)
        else:
            sigma = _get_ordering(D, order)
        trace = make_two_dicolorable(D, sigma)
    except (DicolorError, OSError, ValueError) as exc:
        _fail(str(exc))
    final_text = format_digraph(trace.final_digraph)
    if digraph_out is not None:
        with open(digraph_out, "w") as fh:
            fh.write(final_text)
    if report_dir is not None:
        from .report import write_inversion_report

        for path in write_inversion_report(trace, report_dir):
            click.echo(f"wrote {path}", err=True)
    payload = trace.to_json_dict()
    payload["final_digraph"] = final_text
    _emit(
        payload,
        fmt,
        final_text
        + f"# {len(trace.steps)} reversals, forward "
        f"{trace.initial_forward} -> "
        f"{trace.steps[-1][1] if trace.steps else trace.initial_forward}",
    )
    sys.exit(0)


@main.command()
@input_arg
@format_opt
def exact(input, fmt):
    """Brute-force dichromatic number and a witness coloring."""
    try:
        D = _read_digraph(input)
        k = oracle.dichromatic_number(D)
        col = oracle.is_k_dicolorable_bruteforce(D, k)
    except (DicolorError, OSError, ValueError) as exc:
        _fail(str(exc))
    _emit(
        {"dichromatic_number": k, "coloring": _coloring_json(col)},
        fmt,
        f"dichromatic number {k}, colors {list(col.color)}",
    )
    sys.exit(0)


@main.command()
@input_arg
@click.option("--cap", type=int, default=oracle.DEFAULT_CIRCUIT_CAP, show_default=True)
@format_opt
def circuits(input, cap, fmt):
    """Enumerate all elementary circuits."""
    try:
        D = _read_digraph(input)
        clist = oracle.enumerate_circuits(D, cap)
    except (DicolorError, OSError, ValueError) as exc:
        _fail(str(exc))
    items = [
        {"vertices": list(c.vertices(D)), "arcs": list(c.arc_ids)}
        for c in clist.circuits
    ]
    _emit(
        {"count": len(items), "circuits": items},
        fmt,
        "\n".join(
            [f"{len(items)} circuits"]
            + [" ".join(map(str, it["vertices"])) for it in items]
        ),
    )
    sys.exit(0)


@main.command("check-bf")
@input_arg
@click.option("--k", type=int, required=True)
@order_opt
@click.option("--cap", type=int, default=oracle.DEFAULT_CIRCUIT_CAP, show_default=True)
@format_opt
def check_bf(input, k, order, cap, fmt):
    """Check the circuit condition by complete enumeration."""
    try:
        D = _read_digraph(input)
        sigma = _get_ordering(D, order)
        if k < 1:
            raise DicolorError("k must be at least 1")
        ok = oracle.check_ordering_bruteforce(D, sigma, k, cap)
    except (DicolorError, OSError, ValueError) as exc:
        _fail(str(exc))
    _emit({"feasible": ok}, fmt, "feasible" if ok else "infeasible")
    sys.exit(0 if ok else 1)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--p", type=float, required=True)
@click.option("--seed", type=int, required=True)
def gen(n, p, seed):
    """Generate a seeded random digraph (edge list on stdout)."""
    try:
        D = random_digraph(n, p, seed)
    except (DicolorError, ValueError) as exc:
        _fail(str(exc))
    click.echo(format_digraph(D), nl=False)
    sys.exit(0)


@main.command("verify-equivalence")
@click.option("--n", type=int, required=True)
@click.option("--samples", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--p", type=float, default=None, help="fixed arc probability; default cycles 0.1/0.3/0.6")
@click.option("--report-dir", default=None, help="write CSV and figures here")
@format_opt
def verify_equivalence(n, samples, seed, p, report_dir, fmt):
    """Compare the full ordering search against the exact oracle."""
    try:
        if n > 8:
            raise DicolorError("equivalence harness limited to n <= 8")
        rows = []
        for i in range(samples):
            pi = p if p is not None else DEFAULT_P_CYCLE[i % len(DEFAULT_P_CYCLE)]
            D = random_digraph(n, pi, seed + i)
            dic = oracle.dichromatic_number(D)
            best = oracle.best_k_over_orderings(D)
            rows.append(
                {
                    "sample": i,
                    "n": n,
                    "m": D.m,
                    "dichromatic": dic,
                    "best_ordering_k": best,
                    "agree": dic == best,
                }
            )
    except (DicolorError, ValueError) as exc:
        _fail(str(exc))
    if report_dir is not None:
        from .report import write_equivalence_report

        for path in write_equivalence_report(rows, report_dir):
            click.echo(f"wrote {path}", err=True)
    agree = sum(1 for r in rows if r["agree"])
    disagreements = [r for r in rows if not r["agree"]]
    _emit(
        {
            "samples": len(rows),
            "agreements": agree,
            "disagreements": disagreements,
        },
        fmt,
        f"{agree}/{len(rows)} agreements",
    )
    sys.exit(0 if not disagreements else 1)


if __name__ == "__main__":
    main()
