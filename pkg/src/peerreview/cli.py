"""Command-line front end.

Scenario files are flat ``key = value`` text (``#`` starts a comment) using
the keys alpha, theta_skilled, theta_unskilled, sigma, n, kappa, z_bar,
population_size and seed. ``--config`` also accepts the built-in names
exampleA, exampleB, exampleC and infeasible. Flags override file values.

Exit status: 0 success, 1 invalid or infeasible input, 2 internal
numerical failure.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict

import numpy as np

from . import dynamic, first_best, one_shot, sweep
from .errors import InfeasibleCapacityError, NumericalError, RootNotFoundError
from .model import DynamicPolicy, OneShotPolicy, average_cost
from .monte_carlo import SimConfig, simulate

PRESETS = {
    "exampleA": dict(alpha=0.5, theta_skilled=8.0, theta_unskilled=4.0, sigma=1.0, n=0.3125),
    "exampleB": dict(alpha=0.5, theta_skilled=8.0, theta_unskilled=4.0, sigma=1.0, n=0.3125,
                     kappa=0.3, z_bar=1.0),
    "exampleC": dict(alpha=0.5, theta_skilled=4.0, theta_unskilled=2.0, sigma=1.0, n=0.5),
    "infeasible": dict(alpha=0.5, theta_skilled=4.0, theta_unskilled=2.0, sigma=1.0, n=0.7),
}
FLOAT_KEYS = ("alpha", "theta_skilled", "theta_unskilled", "sigma", "n", "kappa", "z_bar")
INT_KEYS = ("population_size", "seed")
DEFAULT_SEED = 20240705
DEFAULT_POPULATION = 1_000_000
SIG_DIGITS = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_config_text(text, source="<config>"):
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sep = "=" if "=" in line else ":" if ":" in line else None
        if sep is None:
            raise UsageError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split(sep, 1))
        try:
            if key in FLOAT_KEYS:
                values[key] = float(value)
            elif key in INT_KEYS:
                values[key] = int(value)
            else:
                raise UsageError(f"{source}:{lineno}: unknown key {key!r}")
        except ValueError:
            raise UsageError(f"{source}:{lineno}: bad value for {key}: {value!r}") from None
    return values


def load_config(name):
    if name is None:
        return {}
    if name in PRESETS and not os.path.exists(name):
        return dict(PRESETS[name])
    try:
        with open(name, encoding="utf-8") as fh:
            return parse_config_text(fh.read(), name)
    except OSError as exc:
        raise UsageError(f"cannot read config {name!r}: {exc.strerror}") from None


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "nan" if math.isnan(value) else f"{float(value):.{SIG_DIGITS}g}"
    return str(value)


def _json_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return None if math.isnan(value) else float(f"{float(value):.{SIG_DIGITS}g}")
    return value


def render_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(rows[0]))
    for row in rows:
        writer.writerow([_fmt(v) for v in row.values()])
    return buf.getvalue()


def render_json(command, scenario, rows):
    doc = {"command": command,
           "scenario": {k: _json_value(v) for k, v in scenario.items()},
           "rows": [{k: _json_value(v) for k, v in row.items()} for row in rows]}
    return json.dumps(doc, indent=2) + "\n"


def render_table(rows):
    cols = list(rows[0])
    cells = [[_fmt(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(line[i]) for line in cells)) for i, c in enumerate(cols)]
    out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)),
           "  ".join("-" * w for w in widths)]
    out += ["  ".join(v.rjust(w) for v, w in zip(line, widths)) for line in cells]
    return "\n".join(out) + "\n"


def _scenario(args):
    values = load_config(args.config)
    for key in FLOAT_KEYS + INT_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    missing = [k for k in ("alpha", "theta_skilled", "theta_unskilled", "sigma", "n")
               if k not in values]
    if missing:
        raise UsageError(f"scenario is missing {', '.join(missing)}")
    return values


def _sweep_scenario(values):
    return sweep.Scenario(**{k: values.get(k) for k in FLOAT_KEYS})


def _need(values, key):
    if values.get(key) is None:
        raise UsageError(f"this command needs --{key.replace('_', '-')}")
    return values[key]


def cmd_first_best(values):
    sc = _sweep_scenario(values)
    row = sweep.solve_row(sc, "first_best")
    row["implementing_probability"] = first_best.implementing_probability(sc.population, sc.n)
    return [row]


def cmd_one_shot(values):
    sc = _sweep_scenario(values)
    return [sweep.solve_row(sc, "one_shot_equilibrium")]


def cmd_dynamic(values):
    sc = _sweep_scenario(values)
    kappa = _need(values, "kappa")
    z = values.get("z_bar")
    if z is None:
        z = dynamic.threshold_for_capacity(sc.population, sc.sigma, sc.n, kappa)
    o = dynamic.aggregate_dynamic(sc.population, DynamicPolicy(z, kappa), sc.sigma)
    row = {"c_bar": average_cost(sc.population)}
    row.update(sweep._dynamic_columns(o))
    row["total_rate_high"], row["total_rate_low"] = o.total_rate_high, o.total_rate_low
    row["virtual_rate_high"], row["virtual_rate_low"] = o.virtual_rate_high, o.virtual_rate_low
    return [row]


def cmd_optimize(values):
    sc = _sweep_scenario(values)
    row = sweep.solve_row(sc, "dynamic_equilibrium")
    base = one_shot.one_shot_equilibrium(sc.population, sc.sigma, sc.n)
    row["one_shot_z_bar"] = base.z_bar
    row["one_shot_impact"] = base.outcome.impact
    return [row]


def cmd_simulate(values, args):
    sc = _sweep_scenario(values)
    pop = sc.population
    size = values.get("population_size", DEFAULT_POPULATION)
    seed = values.get("seed", DEFAULT_SEED)
    config = SimConfig(population_size=size, seed=seed, partitions=args.partitions)
    z = values.get("z_bar")
    if values.get("kappa") is not None:
        if z is None:
            z = dynamic.threshold_for_capacity(pop, sc.sigma, sc.n, values["kappa"])
        policy = DynamicPolicy(z, values["kappa"])
        exact = dynamic.aggregate_dynamic(pop, policy, sc.sigma)
        analytic = (exact.beta_hat, exact.yield_hat, exact.impact_hat)
    else:
        if z is None:
            z = one_shot.one_shot_equilibrium(pop, sc.sigma, sc.n).z_bar
        policy = OneShotPolicy(z)
        exact = one_shot.aggregate(pop, z, sc.sigma)
        analytic = (exact.beta, exact.yield_, exact.impact)
    est = simulate(pop, policy, sc.sigma, config, max_workers=args.workers)
    rows = []
    for name, value, emp, se in zip(("beta", "yield", "impact"), analytic,
                                    (est.beta_emp, est.yield_emp, est.impact_emp),
                                    (est.se_beta, est.se_yield, est.se_impact)):
        rows.append({"quantity": name, "analytic": value, "empirical": emp, "se": se,
                     "z_score": (emp - value) / se if se > 0 else math.nan,
                     "z_bar": z, "kappa": values.get("kappa"),
                     "challenges_attempted": est.challenges_attempted,
                     "challenges_won": est.challenges_won,
                     "population_size": size, "seed": seed})
    return rows


def cmd_sweep(values, args):
    spec = sweep.SweepSpec(parameter=args.param, lo=args.lo, hi=args.hi, steps=args.steps,
                           base=_sweep_scenario(values), solver=args.solver)
    return sweep.run_sweep(spec)


def cmd_foc(values, args):
    sc = _sweep_scenario(values)
    pop = sc.population
    lo, hi = one_shot.scan_window(sc.sigma)
    grid = np.linspace(lo, hi, args.steps)
    outcome = one_shot.aggregate(pop, grid, sc.sigma)
    resid = one_shot.foc_residual(pop, grid, sc.sigma)
    rows = [{"kind": "scan", "z_bar": float(z), "residual": float(r), "impact": float(x),
             "interior": bool(v)}
            for z, r, x, v in zip(grid, resid, outcome.impact, outcome.interior_all)]
    opt = one_shot.unconstrained_threshold(pop, sc.sigma)
    rows.append({"kind": "optimum", "z_bar": opt.z_bar, "residual": opt.residual,
                 "impact": opt.impact, "interior": True})
    return rows


def build_parser():
    parser = _Parser(prog="peerreview", description="Peer-review game solvers.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", help="scenario file or preset name")
        for key in FLOAT_KEYS:
            p.add_argument(f"--{key.replace('_', '-')}", dest=key, type=float)
        p.add_argument("--seed", type=int)
        p.add_argument("--population-size", dest="population_size", type=int)
        p.add_argument("--csv", action="store_true", help="CSV on stdout instead of a table")
        p.add_argument("--json", action="store_true", help="JSON document instead of CSV")
        p.add_argument("--out", help="write machine-readable output to this path")
        return p

    add("first-best", "first-best efforts and implementing acceptance probability")
    add("one-shot", "one-shot equilibrium at binding capacity")
    add("dynamic", "dynamic aggregates at (z_bar, kappa), or z_bar solved from capacity")
    add("optimize", "journal's optimal dynamic policy")
    p = add("simulate", "Monte Carlo estimates next to the analytic values")
    p.add_argument("--partitions", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p = add("sweep", "single-parameter comparative statics table")
    p.add_argument("--param", required=True, choices=sweep.PARAMETERS)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--solver", default="one_shot_equilibrium", choices=sweep.SOLVERS)
    p = add("foc", "impact first-order-condition scan and unconstrained optimum")
    p.add_argument("--steps", type=int, default=41)
    return parser


def run_command(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("peerreview: a command is required")
        values = _scenario(args)
        handlers = {"first-best": lambda: cmd_first_best(values),
                    "one-shot": lambda: cmd_one_shot(values),
                    "dynamic": lambda: cmd_dynamic(values),
                    "optimize": lambda: cmd_optimize(values),
                    "simulate": lambda: cmd_simulate(values, args),
                    "sweep": lambda: cmd_sweep(values, args),
                    "foc": lambda: cmd_foc(values, args)}
        rows = handlers[args.command]()
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except InfeasibleCapacityError as exc:
        print(f"infeasible: {exc}", file=stderr)
        return 1
    except RootNotFoundError as exc:
        print(f"not found: {exc}", file=stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        print(f"invalid input: {exc}", file=stderr)
        return 1

    machine = (render_json(args.command, values, rows) if args.json
               else render_csv(rows))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(machine)
    if args.json or args.csv:
        stdout.write(machine)
    else:
        stdout.write(render_table(rows))
    return 0


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
