"""Scenario runner: sweeps, CSV reports, figures and the conformance ledger.

Subcommands
-----------
run          evaluate a scenario grid and write the CSV dataset
             (optionally matplotlib figures next to it)
selftest     run every module's invariant suite at reduced resolution
conformance  emit only the closed-form conformance ledger (CONFORMANCE.md)
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import closed_forms, conformance, dynamics, quantifiers, teleport
from .config import Scenario, load_scenario
from .errors import ConfigError, InternalConsistencyError, QuantumnessError

CSV_COLUMNS = (
    "model",
    "purity",
    "alpha",
    "a",
    "tau",
    "gamma_t",
    "xi",
    "t",
    "lqu",
    "lqfi",
    "coherence",
    "f_av",
    "lqu_brute",
    "lqfi_brute",
    "dev_lqu",
    "dev_lqfi",
    "dev_coherence",
    "dev_f_av",
    "method",
)


def _num(x: float) -> str:
    return f"{x:.17g}"


def _num_or_empty(x: float | None) -> str:
    if x is None or not np.isfinite(x):
        return ""
    return _num(x)


def compute_row(scenario: Scenario, point: tuple) -> list[str]:
    """One CSV row for one grid point.  Pure function of its arguments."""
    purity, alpha, tau, time = point
    if scenario.model == "dephasing":
        xi = time
        t = 2.0 * tau * xi
        state = dynamics.dephasing_state(purity, alpha, scenario.a, tau, t)
        cells = {
            "model": "dephasing",
            "a": _num(scenario.a),
            "tau": _num(tau),
            "xi": _num(xi),
            "t": _num(t),
            "gamma_t": "",
        }
    else:
        gamma_t = time
        state = dynamics.jc_state(purity, alpha, gamma_t)
        cells = {
            "model": "jc",
            "a": "",
            "tau": "",
            "xi": "",
            "t": "",
            "gamma_t": _num(gamma_t),
        }
    cells["purity"] = _num(purity)
    cells["alpha"] = _num(alpha)
    cells["method"] = "generic"

    lqu = lqfi = coh = None
    if scenario.quantifiers:
        lqu = quantifiers.lqu_generic(state).value
        lqfi = quantifiers.lqfi_generic(state).value
        coh = quantifiers.coherence_jsd(state).value
    cells["lqu"] = _num_or_empty(lqu)
    cells["lqfi"] = _num_or_empty(lqfi)
    cells["coherence"] = _num_or_empty(coh)

    cells["lqu_brute"] = cells["lqfi_brute"] = ""
    if scenario.brute_force:
        cells["lqu_brute"] = _num(quantifiers.lqu_brute_force(state, scenario.n_dirs).value)
        cells["lqfi_brute"] = _num(quantifiers.lqfi_brute_force(state, scenario.n_dirs).value)

    f_av = None
    if scenario.teleport:
        channel = teleport.build_channel(state)
        f_av = teleport.fidelity_average(channel, scenario.theta_nodes, scenario.phi_nodes)
    cells["f_av"] = _num_or_empty(f_av)

    for key in ("dev_lqu", "dev_lqfi", "dev_coherence", "dev_f_av"):
        cells[key] = ""
    if scenario.conformance:
        if scenario.model == "dephasing":
            forms = closed_forms.dephasing_quantifier_forms(purity, alpha, scenario.a, tau, t)
            tele_forms = closed_forms.dephasing_teleport_forms(
                purity, alpha, scenario.a, tau, t, np.pi / 2.0, 0.0
            )
        else:
            forms = closed_forms.jc_quantifier_forms(purity, alpha, gamma_t)
            tele_forms = closed_forms.jc_teleport_forms(purity, alpha, gamma_t, np.pi / 2.0, 0.0)
        if lqu is not None:
            cells["dev_lqu"] = _num_or_empty(abs(forms["lqu"] - lqu))
            cells["dev_lqfi"] = _num_or_empty(abs(forms["lqfi"] - lqfi))
            cells["dev_coherence"] = _num_or_empty(abs(forms["coherence"] - coh))
        if f_av is not None:
            cells["dev_f_av"] = _num_or_empty(abs(complex(tele_forms["f_av"]).real - f_av))

    return [cells[c] for c in CSV_COLUMNS]


def run_scenario(scenario: Scenario, out_csv: Path, jobs: int = 1) -> int:
    """Sweep the grid and stream rows to the CSV in deterministic order.

    Returns the process exit code; an internal-consistency failure flushes
    the rows computed so far plus an error marker row and returns 3.
    """
    points = scenario.grid_points()
    out_csv.parent.mkdir(parents=True, exist_ok=True)
    status = 0
    with open(out_csv, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(CSV_COLUMNS) + "\n")
        try:
            if jobs > 1:
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    chunk = max(1, len(points) // (jobs * 8))
                    rows = pool.map(
                        _row_worker,
                        [(scenario, p) for p in points],
                        chunksize=chunk,
                    )
                    for row in rows:
                        fh.write(",".join(row) + "\n")
            else:
                for p in points:
                    fh.write(",".join(compute_row(scenario, p)) + "\n")
        except InternalConsistencyError as exc:
            marker = ["ERROR", str(exc).replace(",", ";")] + [""] * (len(CSV_COLUMNS) - 2)
            fh.write(",".join(marker) + "\n")
            print(f"internal consistency failure: {exc}", file=sys.stderr)
            status = 3
    return status


def _row_worker(args: tuple) -> list[str]:
    scenario, point = args
    return compute_row(scenario, point)


def _scenario_conformance_rows(scenario: Scenario) -> list:
    """Canonical conformance points plus a subsample of the scenario grid."""
    rows = conformance.canonical_rows()
    points = scenario.grid_points()
    if points:
        picks = sorted({0, len(points) // 2, len(points) - 1})
        for idx in picks:
            purity, alpha, tau, time = points[idx]
            if scenario.model == "dephasing":
                rows.extend(
                    conformance.dephasing_rows(purity, alpha, scenario.a, tau, 2.0 * tau * time)
                )
            else:
                rows.extend(conformance.jc_rows(purity, alpha, time))
    return rows


def _cmd_run(args) -> int:
    scenario = load_scenario(args.config)
    out_csv = Path(args.out) if args.out else Path(scenario.output or Path(args.config).stem + ".csv")
    status = run_scenario(scenario, out_csv, jobs=args.jobs)
    print(f"wrote {out_csv}")
    if status == 0 and scenario.conformance:
        ledger = out_csv.parent / "CONFORMANCE.md"
        conformance.write_markdown(_scenario_conformance_rows(scenario), ledger)
        print(f"wrote {ledger}")
    if status == 0 and args.plot:
        from . import plotting

        for path in plotting.render_csv(out_csv):
            print(f"wrote {path}")
    return status


def _cmd_conformance(args) -> int:
    scenario = load_scenario(args.config)
    out = Path(args.out) if args.out else Path("CONFORMANCE.md")
    rows = _scenario_conformance_rows(scenario)
    conformance.write_markdown(rows, out)
    mismatches = sum(1 for r in rows if r.verdict == "MISMATCH")
    invalid = sum(1 for r in rows if r.verdict == "invalid")
    print(f"wrote {out}: {len(rows)} rows, {mismatches} mismatches, {invalid} invalid")
    return 0


def _cmd_selftest(_args) -> int:
    from .selftest import run_selftest

    return run_selftest()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantumness",
        description="Open two-qubit channel dynamics, quantumness measures and teleportation fidelity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario sweep and write the CSV dataset")
    p_run.add_argument("--config", required=True, help="scenario file (key = value lines)")
    p_run.add_argument("--out", help="output CSV path (default: scenario 'output' or <config>.csv)")
    p_run.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    p_run.add_argument("--plot", action="store_true", help="render figures next to the CSV")
    p_run.set_defaults(func=_cmd_run)

    p_self = sub.add_parser("selftest", help="run reduced-resolution invariant suites")
    p_self.set_defaults(func=_cmd_selftest)

    p_conf = sub.add_parser("conformance", help="emit only the conformance ledger")
    p_conf.add_argument("--config", required=True, help="scenario file")
    p_conf.add_argument("--out", help="ledger path (default CONFORMANCE.md)")
    p_conf.set_defaults(func=_cmd_conformance)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except QuantumnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
