"""Command-line front end.

    subspace-mass ratios [--masses paper|pdg]
    subspace-mass freq
    subspace-mass mc-align --dim 16 --samples 100000 --seed 0
    subspace-mass mc-accrual --particle pion
    subspace-mass repcheck
    subspace-mass subspace dot A.txt B.txt | expand A.txt | count --dim 16 --sub-dim 4
    subspace-mass problems

Exit status is 0 on success, 2 on usage errors and 1 on computation errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import mass_model, phase_kinematics, repcheck, sampling, subspace_core
from .errors import SubspaceMassError

__all__ = ["RunConfig", "build_parser", "run", "main"]

CSV_FLOAT = ".6g"


@dataclass(frozen=True)
class RunConfig:
    command: str
    action: str | None = None
    paths: tuple[Path, ...] = ()
    dim: int = 16
    sub_dim: int = 4
    samples: int = 100_000
    seed: int = 0
    workers: int = 1
    format: str = "json"
    output: str | None = None
    units: str = "natural"
    masses: str = "paper"
    particle: str = "electron"

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "RunConfig":
        values = {k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__}
        values["paths"] = tuple(getattr(ns, k) for k in ("a", "b") if hasattr(ns, k))
        return cls(**values)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", default=None, help="output path (default: stdout)")
    p.add_argument("--units", choices=("natural", "si"), default="natural")
    p.add_argument("--masses", choices=("paper", "pdg"), default="paper")


def _mc(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1, help="threads; output does not depend on it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subspace-mass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("ratios", help="exact mass ratios and inferred scale"))
    _common(sub.add_parser("freq", help="Compton frequencies in ZHz"))

    p = sub.add_parser("mc-align", help="Monte Carlo alignment likelihood of a random 4-subspace")
    _common(p)
    _mc(p)
    p.add_argument("--dim", type=int, default=16)

    p = sub.add_parser("mc-accrual", help="Monte Carlo phase-accrual fraction per particle")
    _common(p)
    _mc(p)
    p.add_argument("--particle", choices=mass_model.PARTICLES, default="electron")

    _common(sub.add_parser("repcheck", help="2x2 generators for the 34 and 35 planes"))

    p = sub.add_parser("subspace", help="subspace algebra on matrix files")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("dot", help="scalar product of two subspaces")
    _common(q)
    q.add_argument("a", type=Path)
    q.add_argument("b", type=Path)
    q = ssub.add_parser("expand", help="coefficients over the coordinate subspaces")
    _common(q)
    q.add_argument("a", type=Path)
    q = ssub.add_parser("count", help="number of coordinate subspaces")
    _common(q)
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--sub-dim", type=int, required=True)

    _common(sub.add_parser("problems", help="tables for the frequency, 3-subspace and parameter-count exercises"))
    return parser


def _fmt(x: float) -> str:
    return format(float(x), CSV_FLOAT)


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _round3(x: float) -> float:
    return float(format(x, ".3g"))


def _freq_rows(masses: str, units: str) -> list[dict]:
    rows = []
    for particle, m in mass_model.masses_for(masses).items():
        nu = phase_kinematics.compton_frequency(m)
        rows.append({
            "particle": particle,
            "mass_mev": m,
            "freq_zhz": nu,
            "freq_zhz_rounded_3sf": _round3(nu),
            "rest_phase_rate": phase_kinematics.rest_phase(m, 1.0, units=units),
        })
    return rows


def _cmd_ratios(cfg) -> str:
    if cfg.format == "csv":
        return mass_model.report_csv(cfg.masses)
    return _json(mass_model.report_json(cfg.masses))


def _cmd_freq(cfg) -> str:
    rows = _freq_rows(cfg.masses, cfg.units)
    if cfg.format == "csv":
        cols = ["particle", "mass_mev", "freq_zhz", "freq_zhz_rounded_3sf"]
        return _csv(cols, [[r[c] for c in cols] for r in rows])
    return _json({"units": cfg.units, "rows": rows})


def _estimate_out(est: sampling.McEstimate, fmt: str) -> str:
    data = est.to_json()
    if fmt == "csv":
        return _csv(list(data), [["" if v is None else v for v in data.values()]])
    return _json(data)


def _cmd_mc_align(cfg) -> str:
    est = sampling.estimate_alignment(cfg.dim, cfg.samples, cfg.seed, workers=cfg.workers)
    return _estimate_out(est, cfg.format)


def _cmd_mc_accrual(cfg) -> str:
    est = sampling.estimate_accrual(cfg.particle, cfg.samples, cfg.seed, workers=cfg.workers)
    return _estimate_out(est, cfg.format)


def _cmd_repcheck(cfg) -> str:
    sigma12 = repcheck.J3
    fourth = repcheck.solve_fourth_plane(sigma12)
    fifth = [repcheck.check_fifth_plane(sigma12, s) for s in fourth.solutions]
    if cfg.format == "csv":
        rows = [["fourth_plane", "", fourth.feasible, len(fourth.solutions), fourth.residual, ""]]
        for s, r in zip(fourth.solutions, fifth):
            label = " ".join(_fmt(c) for c in s.coeffs)
            rows.append(["fifth_plane", label, r.feasible, len(r.solutions), r.residual, r.witness])
        return _csv(["check", "sigma34", "feasible", "solutions", "residual", "witness"], rows)
    return _json({
        "sigma12": [float(c) for c in sigma12.coeffs],
        "fourth_plane": fourth.to_json(),
        "fifth_plane": [r.to_json() for r in fifth],
    })


def _load_frame(path: Path) -> subspace_core.OrthonormalFrame:
    return subspace_core.build_frame(np.loadtxt(path, ndmin=2))


def _cmd_subspace(cfg) -> str:
    if cfg.action == "dot":
        a, b = (_load_frame(p) for p in cfg.paths)
        data = {"N": a.dim_ambient, "n": a.dim_sub, "dot": subspace_core.subspace_dot(a, b)}
    elif cfg.action == "expand":
        coeffs = subspace_core.expand(_load_frame(cfg.paths[0]))
        return coeffs.to_csv(CSV_FLOAT) if cfg.format == "csv" else _json(coeffs.to_json())
    else:
        data = {"N": cfg.dim, "n": cfg.sub_dim,
                "count": subspace_core.count_subspaces(cfg.dim, cfg.sub_dim)}
    if cfg.format == "csv":
        return _csv(list(data), [list(data.values())])
    return _json(data)


PROBLEM5_CASES = ((2, 3), (2, 4), (4, 8), (4, 12), (4, 16))


def _cmd_problems(cfg) -> str:
    p1 = _freq_rows(cfg.masses, cfg.units)
    p2 = [{"a": a, "count": c} for a, c in mass_model.problem2_table(4)]
    p5 = []
    for n, N in PROBLEM5_CASES:
        dof, free, ok = mass_model.grassmann_dof(n, N)
        p5.append({"n": n, "N": N, "dof": dof, "coeff_count_minus_one": free, "coefficients_suffice": ok})
    if cfg.format == "csv":
        rows = [["1", r["particle"], "freq_zhz", r["freq_zhz"]] for r in p1]
        rows += [["2", f"a={r['a']}", "count", r["count"]] for r in p2]
        for r in p5:
            key = f"n={r['n']} N={r['N']}"
            rows += [["5", key, f, r[f]] for f in ("dof", "coeff_count_minus_one", "coefficients_suffice")]
        return _csv(["problem", "case", "quantity", "value"], rows)
    return _json({"problem1": p1, "problem2": p2, "problem5": p5})


COMMANDS = {
    "ratios": _cmd_ratios,
    "freq": _cmd_freq,
    "mc-align": _cmd_mc_align,
    "mc-accrual": _cmd_mc_accrual,
    "repcheck": _cmd_repcheck,
    "subspace": _cmd_subspace,
    "problems": _cmd_problems,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig.from_namespace(args)
    try:
        text = COMMANDS[cfg.command](cfg)
    except (SubspaceMassError, OSError, ValueError) as exc:
        print(f"subspace-mass: error: {exc}", file=sys.stderr)
        return 1
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
