"""Command line interface.

Three commands share a process-wide memo store and optional persistent
cache:

* ``invariant`` -- one key, printed as an exact rational Gamma and/or the
  integer Welschinger count;
* ``table`` -- the product of degree/multi-index/boundary-count ranges as
  CSV or JSON rows;
* ``verify`` -- recompute the built-in regression corpus and report
  mismatches.

Multi-indices accept repeat notation: ``2^8`` is eight entries of 2, and
entries may be mixed, as in ``3,2^4``.  Integer ranges accept ``a..b``
(inclusive) and comma lists.  Exit codes: 0 success, 1 verification
mismatch, 2 malformed invocation or cache in strict mode, 3 internal
consistency failure.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import click

from .cache_store import CacheError, MemoStore, load_store, save_store
from .closed_gw import ClosedEngine
from .core_index import RAT, canonical_key, interior_points, maslov_index
from .open_gw import OpenEngine
from .regression import ALL_OPEN_ENTRIES, CLOSED_ENTRIES
from .welschinger import s_p, welschinger_from_gamma


def parse_multi_index(text: str) -> tuple:
    """Parse a comma list with repeat notation, e.g. ``3,2^4`` or ``""``."""
    text = text.strip()
    if not text:
        return ()
    entries: List[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if "^" in part:
                value, _, count = part.partition("^")
                n = int(count)
                if n < 0:
                    raise ValueError("negative repeat count")
                entries.extend([int(value)] * n)
            else:
                entries.append(int(part))
        except ValueError as exc:
            raise click.BadParameter(
                f"bad multi-index component {part!r}: {exc}"
            ) from exc
    return tuple(entries)


def parse_int_range(text: str) -> List[int]:
    """Parse an integer list with ranges, e.g. ``6..8`` or ``1,3``."""
    out: List[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, _, hi = part.partition("..")
                lo, hi = int(lo), int(hi)
                if hi < lo:
                    raise ValueError("empty range")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError as exc:
            raise click.BadParameter(f"bad range component {part!r}: {exc}") from exc
    return out


def format_rational(value) -> str:
    v_num, v_den = value.numerator, value.denominator
    return str(v_num) if v_den == 1 else f"{v_num}/{v_den}"


class Session:
    """Shared state behind one CLI invocation: store, cache, engines."""

    def __init__(self, cache_path: Optional[str], strict_cache: bool,
                 threads: int, trace: bool, fmt: str) -> None:
        self.cache_path = cache_path
        self.trace = trace
        self.fmt = fmt
        self.threads = os.cpu_count() or 1 if threads == 0 else threads
        if cache_path is None:
            self.store = MemoStore()
        else:
            try:
                self.store = load_store(cache_path)
            except CacheError as exc:
                if strict_cache:
                    click.echo(f"error: corrupt cache: {exc}", err=True)
                    sys.exit(2)
                click.echo(f"warning: ignoring corrupt cache: {exc}", err=True)
                self.store = MemoStore()
        self.closed = ClosedEngine(self.store)
        self._local = threading.local()

    def engine(self) -> OpenEngine:
        """A per-thread open engine over the shared store."""
        engine = getattr(self._local, "engine", None)
        if engine is None:
            engine = OpenEngine(self.store, ClosedEngine(self.store))
            self._local.engine = engine
        return engine

    def gamma_many(self, keys: List[tuple]) -> List[object]:
        """Evaluate Gamma for several keys, in order, possibly in parallel."""
        if self.threads <= 1 or len(keys) <= 1:
            return [self.engine().gamma(*key) for key in keys]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(lambda key: self.engine().gamma(*key), keys))

    def finish(self) -> None:
        if self.cache_path is not None:
            save_store(self.store, self.cache_path)


_INTERNAL_ERRORS = (ArithmeticError, AssertionError, RecursionError, ValueError)


def _run(ctx: click.Context, body) -> None:
    session: Session = ctx.obj
    try:
        body(session)
    except click.exceptions.Exit:
        raise
    except _INTERNAL_ERRORS as exc:
        click.echo(f"error: internal consistency failure: {exc}", err=True)
        sys.exit(3)
    finally:
        session.finish()


@click.group()
@click.option("--cache", "cache_path", type=click.Path(dir_okay=False),
              default=None, help="Persistent cache file (created if absent).")
@click.option("--strict-cache", is_flag=True,
              help="Abort on a corrupt cache instead of ignoring it.")
@click.option("--threads", type=int, default=1, show_default=True,
              help="Worker threads for bulk evaluation (0 = auto).")
@click.option("--trace", is_flag=True, help="Print grading and recursion info.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True, help="Table output format.")
@click.pass_context
def main(ctx: click.Context, cache_path, strict_cache, threads, trace, fmt):
    """Exact open Gromov-Witten and Welschinger invariants of plane blowups."""
    if threads < 0:
        raise click.BadParameter("--threads must be >= 0")
    ctx.obj = Session(cache_path, strict_cache, threads, trace, fmt)


@main.command()
@click.option("--d", "degree", type=int, required=True, help="Degree d.")
@click.option("--alpha", default="", help="Real-point multi-index.")
@click.option("--beta", default="", help="Conjugate-pair multi-index.")
@click.option("--k", "boundary", type=int, default=0, show_default=True,
              help="Number of boundary (real) point constraints.")
@click.option("--mode", type=click.Choice(["gamma", "welschinger", "both"]),
              default="gamma", show_default=True)
@click.pass_context
def invariant(ctx, degree, alpha, beta, boundary, mode):
    """Print one invariant."""
    a = parse_multi_index(alpha)
    b = parse_multi_index(beta)
    if boundary < 0:
        raise click.BadParameter("--k must be >= 0")

    def body(session: Session) -> None:
        engine = session.engine()
        gamma = engine.gamma(degree, a, b, boundary)
        if session.trace:
            mu = maslov_index(degree, a, b)
            l = interior_points(degree, a, b, boundary)
            key = canonical_key(degree, a, b, boundary)
            relation = engine.relation_used.get(key, "none")
            click.echo(
                f"# mu={mu} l={'-' if l is None else l} "
                f"relation={relation} chain-depth={engine.max_depth} "
                f"keys={len(session.store.open)}",
                err=True,
            )
        if mode in ("gamma", "both"):
            click.echo(format_rational(gamma))
        if mode in ("welschinger", "both"):
            click.echo(str(welschinger_from_gamma(degree, a, b, boundary, gamma)))

    _run(ctx, body)


def _table_rows(session: Session, degrees, alphas, betas, ks):
    requests = [
        (d, a, b, k)
        for d in degrees for a in alphas for b in betas for k in ks
    ]
    gammas = session.gamma_many(requests)
    rows = []
    for (d, a, b, k), gamma in zip(requests, gammas):
        l = interior_points(d, a, b, k)
        rows.append({
            "d": d,
            "alpha": ",".join(str(x) for x in a),
            "beta": ",".join(str(x) for x in b),
            "k": k,
            "l": l,
            "gamma": format_rational(gamma),
            "welschinger": welschinger_from_gamma(d, a, b, k, gamma),
            "sign": s_p(d, a, b),
        })
    return rows


_COLUMNS = ["d", "alpha", "beta", "k", "l", "gamma", "welschinger", "sign"]


@main.command()
@click.option("--d", "degrees", required=True,
              help="Degree range, e.g. '6' or '6..8'.")
@click.option("--alpha", "alphas", multiple=True,
              help="Real-point multi-index pattern (repeatable).")
@click.option("--beta", "betas", multiple=True,
              help="Conjugate-pair multi-index pattern (repeatable).")
@click.option("--k", "ks", default="0", show_default=True,
              help="Boundary count range, e.g. '0..3'.")
@click.pass_context
def table(ctx, degrees, alphas, betas, ks):
    """Print rows for the product of the given ranges."""
    d_values = parse_int_range(degrees)
    a_values = [parse_multi_index(a) for a in (alphas or ("",))]
    b_values = [parse_multi_index(b) for b in (betas or ("",))]
    k_values = parse_int_range(ks)
    if any(k < 0 for k in k_values):
        raise click.BadParameter("--k values must be >= 0")

    def body(session: Session) -> None:
        rows = _table_rows(session, d_values, a_values, b_values, k_values)
        if session.fmt == "json":
            click.echo(json.dumps(rows, indent=2))
        else:
            buffer = io.StringIO()
            writer = csv.DictWriter(buffer, fieldnames=_COLUMNS,
                                    lineterminator="\n")
            writer.writeheader()
            for row in rows:
                out = dict(row)
                if out["l"] is None:
                    out["l"] = ""
                writer.writerow(out)
            click.echo(buffer.getvalue(), nl=False)

    _run(ctx, body)


@main.command()
@click.pass_context
def verify(ctx):
    """Recompute the built-in regression corpus; exit 1 on any mismatch."""

    def check(label, compute, expected) -> bool:
        try:
            got = compute()
        except _INTERNAL_ERRORS as exc:
            click.echo(f"FAIL {label}: error: {exc}")
            return False
        if got == expected:
            click.echo(f"PASS {label}: {format_rational(RAT(got))}")
            return True
        click.echo(f"FAIL {label}: {format_rational(RAT(got))} "
                   f"(expected {expected})")
        return False

    def body(session: Session) -> None:
        failures = 0
        for d, m, expected in CLOSED_ENTRIES:
            label = f"closed d={d} m={','.join(map(str, m))}"
            failures += not check(
                label, lambda d=d, m=m: session.closed.invariant(d, m), expected
            )
        engine = session.engine()
        for d, a, b, k, expected in ALL_OPEN_ENTRIES:
            label = (f"open d={d} alpha={','.join(map(str, a))} "
                     f"beta={','.join(map(str, b))} k={k}")
            failures += not check(
                label,
                lambda d=d, a=a, b=b, k=k: engine.gamma(d, a, b, k),
                expected,
            )
        total = len(CLOSED_ENTRIES) + len(ALL_OPEN_ENTRIES)
        click.echo(f"{total - failures}/{total} regression values verified")
        if failures:
            sys.exit(1)

    _run(ctx, body)


if __name__ == "__main__":  # pragma: no cover
    main()
