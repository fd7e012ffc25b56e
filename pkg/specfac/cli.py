"""
Command-line front end.

    specfac check --g6 "A_"
    specfac check --family s=1,n1=17,i=2
    specfac rho --family g2:20 --alpha 0.5
    specfac tau --n 20 --alpha 0
    specfac verify --harness theorem1 --n 6 --out reports
    specfac enumerate --n 5

stdout carries JSON (one object per line), diagnostics go to stderr. Exit codes: 0 success,
2 input error, 3 negative answer, 4 capability limit.
"""

import contextlib
import functools
import itertools
import sys
import time
from pathlib import Path
import click
from joblib import Parallel, delayed
from specfac import polynomials as poly
from specfac.claims import ALPHA_57, ClaimGrid
from specfac.enumeration import enumerate_connected
from specfac.factor import (
    CriterionStrategy,
    find_factor,
    has_factor_criterion,
    sample_violation,
)
from specfac.families import build_family
from specfac.graph import construct_family, is_connected
from specfac.io import graph6_decode, graph6_encode, read_graph6_lines
from specfac.spectral import alpha_matrix, spectral_radius
from specfac.util import (
    TOL_EIG,
    TOL_ROOT,
    CapabilityError,
    InconclusiveSearchError,
    check_alpha,
    check_tol,
    to_json,
)
from specfac.verify import HARNESSES


EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_CAPABILITY = 4

# graphs decoded and processed per worker round in batch mode
BATCH_CHUNK = 256

F_TABLE_ALPHAS = (0.0, 0.25, 0.5, ALPHA_57, 0.75, 0.9)


def _exit_codes(f):
    """Map library exceptions to exit codes; the command returns its own code otherwise."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = f(*args, **kwargs)
        except (CapabilityError, InconclusiveSearchError) as e:
            click.echo("capability limit: {}".format(e), err=True)
            code = EXIT_CAPABILITY
        except ValueError as e:
            click.echo("input error: {}".format(e), err=True)
            code = EXIT_INPUT
        ctx.exit(code or EXIT_OK)

    return wrapper


def parse_family(text):
    """
    Graph from a --family value: "s=1,n1=17,i=2", a preset name ("k2_join_4k1") or a preset
    with its order ("g2:20").
    """
    text = text.strip()
    if "=" in text:
        values = {}
        for part in text.split(","):
            key, _, val = part.partition("=")
            key = key.strip()
            if key not in ("s", "n1", "i"):
                raise ValueError("Unknown family key {!r}, expected s, n1, i".format(key))
            try:
                values[key] = int(val)
            except ValueError:
                raise ValueError("Family value {!r} is not an integer".format(val))
        missing = {"s", "n1", "i"} - set(values)
        if missing:
            raise ValueError("Family needs s, n1 and i, missing {}".format(sorted(missing)))
        return construct_family(values["s"], values["n1"], values["i"])
    name, _, order = text.partition(":")
    return build_family(name, int(order) if order else None)


def _single_source(g6, family, file):
    given = [x for x in (g6, family, file) if x is not None]
    if len(given) != 1:
        raise ValueError("Give exactly one of --g6, --family, --file.")


def _load_graph(g6, family, require_connected):
    G = graph6_decode(g6) if g6 is not None else parse_family(family)
    if G.n == 0:
        raise ValueError("Graph has no vertices.")
    if require_connected and not is_connected(G):
        raise ValueError("Graph is not connected.")
    return G


def _check_graph(G, strategy="auto", certificate=False, sample=None, seed=0):
    """Record and exit code of `check` for one graph."""
    out = {"n": G.n, "m": G.m}
    if sample is not None:
        witness = sample_violation(G, trials=sample, seed=seed)
        if witness is None:
            raise InconclusiveSearchError(
                "No violating set in {} samples, factor existence undecided".format(sample)
            )
        out.update({"has_factor": False, "witness_S": list(witness.subset)})
        out["isolated"] = witness.isolated
        out["mode"] = "sampled"
        return out, EXIT_NEGATIVE
    has, witness = has_factor_criterion(G, strategy=strategy)
    out["has_factor"] = has
    if witness is not None:
        out["witness_S"] = list(witness.subset)
        out["isolated"] = witness.isolated
    if certificate and has:
        try:
            cert = find_factor(G)
            out["certificate"] = None if cert is None else cert.to_dict()
        except (CapabilityError, InconclusiveSearchError) as e:
            out["certificate"] = None
            out["certificate_error"] = str(e)
    return out, EXIT_OK if has else EXIT_NEGATIVE


def _rho_graph(G, alpha):
    start = time.perf_counter()
    rho = spectral_radius(alpha_matrix(G, alpha))
    return {
        "n": G.n,
        "m": G.m,
        "alpha": alpha,
        "rho_alpha": rho,
        "runtime_ms": 1000 * (time.perf_counter() - start),
    }


def _batch_line(lineno, line, func, require_connected):
    """One batch record; errors are reported in the record instead of raised."""
    try:
        G = graph6_decode(line)
        if require_connected and not is_connected(G):
            raise ValueError("Graph is not connected.")
        out, code = func(G)
    except (CapabilityError, InconclusiveSearchError) as e:
        out, code = {"error": str(e)}, EXIT_CAPABILITY
    except ValueError as e:
        out, code = {"error": str(e)}, EXIT_INPUT
    out["line"] = lineno
    out["g6"] = line
    return out, code


def _run_batch(source, func, jobs, require_connected):
    """
    Stream graph6 lines through `func`, printing one JSON line per graph in input order.
    Returns the most severe exit code (input > capability > negative).
    """
    severity = {EXIT_OK: 0, EXIT_NEGATIVE: 1, EXIT_CAPABILITY: 2, EXIT_INPUT: 3}
    worst = EXIT_OK
    lines = enumerate(read_graph6_lines(source), start=1)
    pool = Parallel(n_jobs=jobs) if jobs != 1 else None
    while True:
        chunk = list(itertools.islice(lines, BATCH_CHUNK * max(1, abs(jobs))))
        if not chunk:
            break
        if pool is None:
            results = [_batch_line(k, line, func, require_connected) for k, line in chunk]
        else:
            results = pool(
                delayed(_batch_line)(k, line, func, require_connected) for k, line in chunk
            )
        for out, code in results:
            click.echo(to_json(out))
            if severity[code] > severity[worst]:
                worst = code
    return worst


def _graph_options(f):
    f = click.option(
        "--require-connected", is_flag=True, help="Reject disconnected input (exit 2)."
    )(f)
    f = click.option(
        "--jobs",
        type=int,
        default=-1,
        envvar="SPECFAC_JOBS",
        show_default=True,
        help="Worker processes in batch mode, -1 for all cores.",
    )(f)
    f = click.option(
        "--file", "file", type=str, help="graph6 file, one graph per line, - for stdin."
    )(f)
    f = click.option("--family", type=str, help="s=..,n1=..,i=.. or a preset such as g2:20.")(f)
    f = click.option("--g6", type=str, help="Graph in graph6 format.")(f)
    return f


@click.group()
@click.option(
    "--tol-eig",
    type=float,
    default=TOL_EIG,
    envvar="SPECFAC_TOL_EIG",
    show_default=True,
    help="Eigenvalue equality tolerance.",
)
@click.option(
    "--tol-root",
    type=float,
    default=TOL_ROOT,
    envvar="SPECFAC_TOL_ROOT",
    show_default=True,
    help="Root finder tolerance.",
)
@click.pass_context
def cli(ctx, tol_eig, tol_root):
    """Spectral conditions for {P2, C3, P5, T3}-factors."""
    ctx.ensure_object(dict)
    try:
        ctx.obj["tol_eig"] = check_tol(tol_eig, TOL_EIG, "tol_eig")
        ctx.obj["tol_root"] = check_tol(tol_root, TOL_ROOT, "tol_root")
    except ValueError as e:
        raise click.BadParameter(str(e))


@cli.command()
@_graph_options
@click.option(
    "--strategy",
    type=click.Choice(CriterionStrategy.values()),
    default="auto",
    show_default=True,
)
@click.option("--certificate", is_flag=True, help="Also search for an explicit factor.")
@click.option("--sample", type=int, default=None, help="Randomised search with N trials.")
@click.option("--seed", type=int, default=0, show_default=True)
@_exit_codes
def check(g6, family, file, jobs, require_connected, strategy, certificate, sample, seed):
    """Decide whether a graph has a {P2, C3, P5, T3}-factor."""
    _single_source(g6, family, file)
    func = functools.partial(
        _check_graph, strategy=strategy, certificate=certificate, sample=sample, seed=seed
    )
    if file is not None:
        return _run_batch(file, func, jobs, require_connected)
    out, code = func(_load_graph(g6, family, require_connected))
    click.echo(to_json(out))
    return code


def _rho_record(G, alpha):
    return _rho_graph(G, alpha), EXIT_OK


@cli.command()
@_graph_options
@click.option("--alpha", type=float, default=0.0, show_default=True)
@_exit_codes
def rho(g6, family, file, jobs, require_connected, alpha):
    """A_α spectral radius of a graph."""
    _single_source(g6, family, file)
    alpha = check_alpha(alpha)
    if file is not None:
        func = functools.partial(_rho_record, alpha=alpha)
        return _run_batch(file, func, jobs, require_connected)
    click.echo(to_json(_rho_graph(_load_graph(g6, family, require_connected), alpha)))
    return EXIT_OK


def f_table(alpha=None):
    alphas = list(F_TABLE_ALPHAS)
    if alpha is not None and alpha not in alphas:
        alphas.append(alpha)
    return [{"alpha": a, "f_alpha": poly.f_threshold(a)} for a in sorted(alphas)]


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.pass_context
@_exit_codes
def tau(ctx, n, alpha):
    """Threshold τ(n), largest root of φ."""
    alpha = check_alpha(alpha)
    f = poly.f_threshold(alpha)
    if n < f:
        click.echo("n={} below f(alpha)={:g}".format(n, f), err=True)
        click.echo(to_json({"f_table": f_table(alpha)}))
        return EXIT_CAPABILITY
    value = poly.tau(n, alpha, tol=ctx.obj["tol_root"])
    click.echo(
        to_json(
            {
                "n": n,
                "alpha": alpha,
                "f_alpha": f,
                "tau": value,
                "phi_coeffs": poly.phi(n, alpha).coeffs.tolist(),
            }
        )
    )
    return EXIT_OK


def _int_list(text):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError("Expected a comma-separated list of integers, got {!r}".format(text))


def _harness_kwargs(harness, ctx, n, alpha, n_list, max_n, trials, seed, claims, jobs, verbose):
    tol = ctx.obj["tol_eig"]
    if harness == "theorem1":
        return {"n": 6 if n is None else n, "jobs": jobs, "verbose": verbose}
    if harness == "theorem2":
        kwargs = {"alpha": alpha, "n_list": n_list, "seed": seed, "tol": tol, "jobs": jobs}
        if trials is not None:
            kwargs["trials"] = trials
        return dict(kwargs, verbose=verbose)
    if harness == "corollary3":
        return {"n_list": n_list or (20, 25, 30), "tol": tol}
    if harness == "signclaims":
        return {"grid": ClaimGrid(), "names": list(claims) or None, "verbose": verbose}
    if harness == "lemma-equivalence":
        return {"max_n": 8 if max_n is None else max_n, "jobs": jobs, "verbose": verbose}
    if harness == "quotient":
        return {"tol": tol}
    if harness == "lemma3":
        return {"n_max": 30 if max_n is None else max_n}
    if harness == "lemma4":
        return {"trials": 1000 if trials is None else trials, "seed": seed}
    if harness == "chain":
        return {"n_list": n_list, "tol": tol}
    return {"max_vertices": 15 if max_n is None else max_n, "verbose": verbose}


@cli.command()
@click.option("--harness", type=click.Choice(sorted(HARNESSES)), required=True)
@click.option("--n", "n", type=int, default=None, help="Order (theorem1).")
@click.option("--alpha", type=float, default=0.0, show_default=True, help="α (theorem2).")
@click.option("--n-list", type=str, default=None, help="Comma-separated orders.")
@click.option("--max-n", type=int, default=None, help="Largest order or tree size.")
@click.option("--trials", type=int, default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--claim", "claims", multiple=True, help="Restrict signclaims to these names.")
@click.option("--jobs", type=int, default=1, envvar="SPECFAC_JOBS", show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default=None, help="Report directory.")
@click.option("--verbose", is_flag=True, help="Progress on stderr.")
@click.pass_context
@_exit_codes
def verify(ctx, harness, n, alpha, n_list, max_n, trials, seed, claims, jobs, out, verbose):
    """Run a verification harness and write its report."""
    alpha = check_alpha(alpha)
    kwargs = _harness_kwargs(
        harness, ctx, n, alpha, _int_list(n_list), max_n, trials, seed, claims, jobs, verbose
    )
    with contextlib.redirect_stdout(sys.stderr):
        report = HARNESSES[harness](**kwargs)
    if out is not None:
        out = Path(out)
        out.mkdir(parents=True, exist_ok=True)
        report.to_jsonl(out / "{}.jsonl".format(harness))
        report.to_csv(out / "summary.csv")
    click.echo(to_json(report.summary()))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


@cli.command(name="enumerate")
@click.option("--n", "n", type=int, required=True)
@click.option("--corpus", type=str, default=None, help="graph6 corpus, - for stdin.")
@_exit_codes
def enumerate_cmd(n, corpus):
    """Connected graphs of order n, one graph6 line per isomorphism class."""
    for G in enumerate_connected(n, corpus=corpus):
        click.echo(graph6_encode(G))
    return EXIT_OK


def main():
    cli(auto_envvar_prefix="SPECFAC")


if __name__ == "__main__":
    main()
