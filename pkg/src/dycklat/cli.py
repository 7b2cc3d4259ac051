"""Command-line surface: sequences, route verification, shape listings,
lattice export, index tables, and series dumps.

Exit codes: 0 success or agreement, 1 disagreement, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields
from fractions import Fraction

from . import genseries, indices
from .errors import (
    InvalidWordError,
    ResourceLimitError,
    RouteMismatchError,
    SeriesError,
)
from .formula import DEFAULT_MAX_CHAIN_LENGTH, chain_count_via_shapes, total_chains_via_shapes
from .lattice import (
    HasseDiagram,
    count_saturated_chains,
    total_valleys,
    valley_abscissae_sum,
)
from .paths import DEFAULT_MAX_SEMILENGTH, DyckPath
from .shapes import DEFAULT_MAX_AREA, enumerate_shapes
from .series import Poly

SERIES_NAMES = ("SC2", "SC3", "V", "F2", "F3", "A", "B", "C")
SEQ_STATS = ("sc2", "sc3", "catalan", "edges", "valley-abscissae")
ROUTE_NAMES = ("bruteforce", "formula", "series", "closedform")


@dataclass
class RunConfig:
    n_max: int = 9
    h: int = 2
    order: int = 20
    fmt: str = "plain"
    max_lattice_n: int = DEFAULT_MAX_SEMILENGTH
    max_closed_n: int = 200
    max_formula_h: int = DEFAULT_MAX_CHAIN_LENGTH
    max_shape_area: int = DEFAULT_MAX_AREA


_INT_KEYS = {f.name for f in fields(RunConfig) if f.type == "int"}


def load_config_file(path: str) -> dict:
    """Parse a key=value file; '#' starts a comment, keys use flag names."""
    values = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            value = value.strip()
            if key not in {f.name for f in fields(RunConfig)}:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            if key in _INT_KEYS:
                try:
                    values[key] = int(value)
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: {key} needs an integer") from None
            else:
                values[key] = value
    return values


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, overridden by the config file, overridden by explicit flags."""
    cfg = RunConfig()
    if getattr(args, "config", None):
        for key, value in load_config_file(args.config).items():
            setattr(cfg, key, value)
    for field in fields(RunConfig):
        value = getattr(args, field.name, None)
        if value is not None:
            setattr(cfg, field.name, value)
    if cfg.fmt not in ("plain", "csv", "bfile", "dot"):
        raise ValueError(f"unknown format {cfg.fmt!r}")
    return cfg


def render_bfile(values) -> str:
    return "\n".join(f"{n} {v}" for n, v in enumerate(values))


def parse_bfile(text: str) -> list[int]:
    """Read 'n a(n)' lines back into the sequence; index gaps are rejected."""
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        n_part, _, v_part = line.partition(" ")
        n = int(n_part)
        if n != len(out):
            raise ValueError(f"b-file index {n} out of order")
        out.append(int(v_part))
    return out


def _emit_sequence(values, name: str, fmt: str) -> str:
    if fmt == "plain":
        return ",".join(str(v) for v in values)
    if fmt == "csv":
        rows = [f"n,{name}"]
        rows.extend(f"{n},{v}" for n, v in enumerate(values))
        return "\n".join(rows)
    if fmt == "bfile":
        return render_bfile(values)
    raise ValueError(f"format {fmt!r} does not apply to sequences")


def _require(limit_ok: bool, message: str) -> None:
    if not limit_ok:
        raise ResourceLimitError(message)


def cmd_seq(args, cfg: RunConfig) -> int:
    stat = args.stat
    ns = range(cfg.n_max + 1)
    if stat in ("sc2", "sc3", "catalan"):
        _require(cfg.n_max <= cfg.max_closed_n, f"n-max {cfg.n_max} exceeds closed-form cap {cfg.max_closed_n}")
        fn = {"sc2": indices.sc2_closed, "sc3": indices.sc3_closed, "catalan": indices.catalan}[stat]
        values = [fn(n) for n in ns]
    else:
        _require(cfg.n_max <= cfg.max_lattice_n, f"n-max {cfg.n_max} exceeds exhaustive cap {cfg.max_lattice_n}")
        fn = {"edges": total_valleys, "valley-abscissae": valley_abscissae_sum}[stat]
        values = [fn(n) for n in ns]
    print(_emit_sequence(values, stat, cfg.fmt))
    return 0


def _verify_routes(args, cfg: RunConfig) -> list[str]:
    names = [r.strip() for r in args.routes.split(",") if r.strip()]
    if names == ["all"]:
        names = list(ROUTE_NAMES) if cfg.h in (2, 3) else ["bruteforce", "formula"]
    bad = [r for r in names if r not in ROUTE_NAMES]
    if bad:
        raise ValueError(f"unknown route(s): {', '.join(bad)}")
    if cfg.h not in (2, 3):
        rejected = [r for r in names if r in ("series", "closedform")]
        if rejected:
            raise ValueError(
                f"route(s) {', '.join(rejected)} only exist for chain length 2 or 3"
            )
    if not names:
        raise ValueError("no routes requested")
    return names


def cmd_verify(args, cfg: RunConfig) -> int:
    routes = _verify_routes(args, cfg)
    if "bruteforce" in routes or "formula" in routes:
        _require(cfg.n_max <= cfg.max_lattice_n, f"n-max {cfg.n_max} exceeds exhaustive cap {cfg.max_lattice_n}")
    if "formula" in routes:
        _require(cfg.h <= cfg.max_formula_h, f"chain length {cfg.h} exceeds formula cap {cfg.max_formula_h}")
    if "series" in routes or "closedform" in routes:
        _require(cfg.n_max <= cfg.max_closed_n, f"n-max {cfg.n_max} exceeds closed-form cap {cfg.max_closed_n}")

    columns = {}
    if "bruteforce" in routes:
        columns["bruteforce"] = [count_saturated_chains(n, cfg.h) for n in range(cfg.n_max + 1)]
    if "formula" in routes:
        columns["formula"] = [total_chains_via_shapes(n, cfg.h) for n in range(cfg.n_max + 1)]
    if "series" in routes:
        order = max(cfg.order, cfg.n_max)
        series = genseries.sc2_series(order) if cfg.h == 2 else genseries.sc3_series(order)
        columns["series"] = genseries.integer_coefficients(series)[: cfg.n_max + 1]
    if "closedform" in routes:
        fn = indices.sc2_closed if cfg.h == 2 else indices.sc3_closed
        columns["closedform"] = [fn(n) for n in range(cfg.n_max + 1)]

    enabled = [r for r in ROUTE_NAMES if r in columns]
    print(f"verify h={cfg.h} routes={','.join(enabled)}")
    mismatches = 0
    for n in range(cfg.n_max + 1):
        row = {r: columns[r][n] for r in enabled}
        agree = len(set(row.values())) == 1
        mismatches += not agree
        cells = " ".join(f"{r}={v}" for r, v in row.items())
        print(f"n={n} {cells} {'ok' if agree else 'MISMATCH'}")
    if mismatches:
        print(f"DISAGREEMENT in {mismatches} row(s)")
        return 1
    print("all rows agree")
    return 0


def cmd_shapes(args, cfg: RunConfig) -> int:
    _require(args.area <= cfg.max_shape_area, f"area {args.area} exceeds shape cap {cfg.max_shape_area}")
    shapes = enumerate_shapes(args.area, max_area=cfg.max_shape_area)
    if cfg.fmt == "csv":
        print("lower,upper,tableaux")
        for s in shapes:
            print(f"{s.lower},{s.upper},{s.tableau_count(cfg.max_shape_area)}")
    else:
        for s in shapes:
            print(f"{s.lower} {s.upper} t={s.tableau_count(cfg.max_shape_area)}")
    return 0


def cmd_chains(args, cfg: RunConfig) -> int:
    path = DyckPath(args.path)
    _require(cfg.h <= cfg.max_formula_h, f"chain length {cfg.h} exceeds formula cap {cfg.max_formula_h}")
    print(chain_count_via_shapes(path, cfg.h, max_h=cfg.max_formula_h))
    return 0


def cmd_lattice(args, cfg: RunConfig) -> int:
    _require(args.n <= cfg.max_lattice_n, f"n {args.n} exceeds exhaustive cap {cfg.max_lattice_n}")
    diagram = HasseDiagram.build(args.n, max_semilength=cfg.max_lattice_n)
    print(diagram.to_dot() if cfg.fmt == "dot" else diagram.to_edge_list())
    return 0


def _index_rows(cfg: RunConfig):
    closed = cfg.h in (2, 3)
    if closed:
        _require(cfg.n_max <= cfg.max_closed_n, f"n-max {cfg.n_max} exceeds closed-form cap {cfg.max_closed_n}")
    else:
        _require(cfg.n_max <= cfg.max_lattice_n, f"n-max {cfg.n_max} exceeds exhaustive cap {cfg.max_lattice_n}")
    for n in range(cfg.n_max + 1):
        count = (
            indices.dyck_chain_count_closed(n, cfg.h)
            if closed
            else count_saturated_chains(n, cfg.h, max_semilength=cfg.max_lattice_n)
        )
        size = indices.catalan(n)
        index = indices.hasse_index(count, size)
        target = Fraction(n**cfg.h, 2**cfg.h)
        ratio = str(index / target) if n > 0 else "-"
        yield n, count, size, index, target, ratio


def cmd_index(args, cfg: RunConfig) -> int:
    rows = _index_rows(cfg)
    if cfg.fmt == "csv":
        print("n,chains,elements,index,index_decimal,boolean_target,ratio")
        for n, count, size, index, target, ratio in rows:
            print(f"{n},{count},{size},{index},{float(index):.6f},{target},{ratio}")
    else:
        for n, count, size, index, target, ratio in rows:
            print(
                f"n={n} chains={count} elements={size} index={index} "
                f"decimal={float(index):.6f} target={target} ratio={ratio}"
            )
    return 0


def _series_by_name(name: str, order: int):
    if name == "SC2":
        return genseries.sc2_series(order)
    if name == "SC3":
        return genseries.sc3_series(order)
    if name == "V":
        return genseries.valley_marked_series(order)
    if name == "F2":
        return genseries.duu_marked_system(order)[0]
    if name == "F3":
        return genseries.duu_valley_marked_system(order)[0]
    if name == "A":
        return genseries.dduu_marked_series(order)
    if name == "B":
        return genseries.dudu_marked_series(order)
    return genseries.duuu_marked_series(order)


def cmd_series(args, cfg: RunConfig) -> int:
    order = cfg.order
    _require(order <= cfg.max_closed_n, f"order {order} exceeds closed-form cap {cfg.max_closed_n}")
    series = _series_by_name(args.name, order)
    coeffs = series.coefficients()
    if cfg.fmt == "bfile":
        if any(isinstance(c, Poly) or Fraction(c).denominator != 1 for c in coeffs):
            raise ValueError(f"series {args.name} has non-integer coefficients; bfile does not apply")
        print(render_bfile(Fraction(c).numerator for c in coeffs))
    elif cfg.fmt == "csv":
        print("n,coefficient")
        for n, c in enumerate(coeffs):
            print(f"{n},{c}")
    else:
        for n, c in enumerate(coeffs):
            print(f"{n} {c}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dycklat",
        description="Saturated chain counts in Dyck lattices via independent exact routes.",
    )
    parser.add_argument("--config", help="key=value config file; explicit flags win")

    def add_common(sub, n_max=False, h=False, order=False):
        sub.add_argument("--fmt", choices=("plain", "csv", "bfile", "dot"), help="output format")
        if n_max:
            sub.add_argument("--n-max", dest="n_max", type=int, help="largest semilength emitted")
        if h:
            sub.add_argument("--h", type=int, help="chain length")
        if order:
            sub.add_argument("--order", type=int, help="series truncation order")
        sub.add_argument("--max-lattice-n", dest="max_lattice_n", type=int, help=argparse.SUPPRESS)
        sub.add_argument("--max-closed-n", dest="max_closed_n", type=int, help=argparse.SUPPRESS)
        sub.add_argument("--max-formula-h", dest="max_formula_h", type=int, help=argparse.SUPPRESS)
        sub.add_argument("--max-shape-area", dest="max_shape_area", type=int, help=argparse.SUPPRESS)

    commands = parser.add_subparsers(dest="command", required=True)

    seq = commands.add_parser("seq", help="emit a statistic sequence a(0)..a(n-max)")
    seq.add_argument("stat", choices=SEQ_STATS)
    add_common(seq, n_max=True)
    seq.set_defaults(handler=cmd_seq)

    verify = commands.add_parser("verify", help="cross-check chain-count routes")
    verify.add_argument("--routes", default="all", help="comma list of routes, or 'all'")
    add_common(verify, n_max=True, h=True, order=True)
    verify.set_defaults(handler=cmd_verify)

    shapes = commands.add_parser("shapes", help="list shapes of a given area with tableau counts")
    shapes.add_argument("--area", type=int, required=True)
    add_common(shapes)
    shapes.set_defaults(handler=cmd_shapes)

    chains = commands.add_parser("chains", help="count length-h chains upward from one path")
    chains.add_argument("--path", required=True, help="Dyck word in letters u and d")
    add_common(chains, h=True)
    chains.set_defaults(handler=cmd_chains)

    lattice = commands.add_parser("lattice", help="export the Hasse diagram")
    lattice.add_argument("--n", type=int, required=True)
    add_common(lattice)
    lattice.set_defaults(handler=cmd_lattice)

    index = commands.add_parser("index", help="Hasse index table against the Boolean target")
    add_common(index, n_max=True, h=True)
    index.set_defaults(handler=cmd_index)

    series = commands.add_parser("series", help="dump coefficients of a named series")
    series.add_argument("--name", choices=SERIES_NAMES, required=True)
    add_common(series, order=True)
    series.set_defaults(handler=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        return args.handler(args, cfg)
    except InvalidWordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RouteMismatchError, SeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
