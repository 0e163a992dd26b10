"""``zetaline`` command-line front end."""

from __future__ import annotations

import argparse
import datetime
import itertools
import math
import os
import sys

from zetaline import constants as C
from zetaline import integral_reps as reps
from zetaline import proof_checks as pc
from zetaline.nu_series import nu_direct
from zetaline.quadrature import QuadratureConfig
from zetaline.report import ReportBundle, RunConfig, _cplx, serialize
from zetaline.results import VerificationRecord, ZetalineError
from zetaline.special_functions import eta_oracle, zeta_complex

DEFAULT_TOL = 1e-9

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1

CROSS_RE = (-0.4, 3.0)
CROSS_IM = (-2.0, 2.0)
OVERLAP_RE = (-0.45, -0.05)


class Lcg64:
    """state <- a*state + c (mod 2^64); uniforms take the top 53 bits of the new state."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0**-53)


def sample_omegas(seed: int, count: int, re_range=CROSS_RE, im_range=CROSS_IM) -> list[complex]:
    rng = Lcg64(seed)
    out = []
    for _ in range(count):
        re = rng.uniform(*re_range)
        im = rng.uniform(*im_range)
        out.append(complex(re, im))
    return out


def quad_config(cfg: RunConfig) -> QuadratureConfig:
    qtol = min(1e-3, max(1e-13, cfg.tol * 1e-2))
    return QuadratureConfig(tol=qtol, truncation_x=cfg.trunc_x, max_nodes=cfg.max_nodes)


def _label(w: complex) -> str:
    return f"{w.real:.6g}{w.imag:+.6g}i"


def corollary_records(cfg: RunConfig) -> list[VerificationRecord]:
    q = quad_config(cfg)
    return [reps.corollary_integral(c, q, tol=min(reps.CASE_TOL[c], cfg.tol)) for c in range(1, 6)] + [
        _psi_record(cfg, q)
    ]


def _psi_record(cfg: RunConfig, q: QuadratureConfig) -> VerificationRecord:
    psi = reps.psi_integral(QuadratureConfig(tol=max(1e-13, q.tol * 0.1), max_nodes=q.max_nodes))
    case5 = reps.corollary_integral(5, q)
    return VerificationRecord(
        "corollary_5_psi", case5.lhs, 2.0 * psi.value, min(1e-8, cfg.tol), "Corollary display 5: = 2 int_0^1 (psi(x+1)+gamma)/x dx"
    )


def _agreement(tag: str, a, b, tol: float, ref: str) -> VerificationRecord:
    return VerificationRecord(tag, a.value, b.value, tol + a.err_estimate + b.err_estimate, ref)


def cross_records(cfg: RunConfig) -> list[VerificationRecord]:
    q = quad_config(cfg)
    tol = min(1e-7, cfg.tol)
    out = []
    for w in sample_omegas(cfg.seed, cfg.count):
        s, h, t = nu_direct(w), reps.nu_via_critical_line(w, q), reps.nu_via_three_halves_line(w, q)
        lab = _label(w)
        out.append(_agreement(f"cross_series_half_{lab}", s, h, tol, "series = critical-line integral"))
        out.append(_agreement(f"cross_series_3half_{lab}", s, t, tol, "series = 3/2-line integral"))
        out.append(_agreement(f"cross_half_3half_{lab}", h, t, tol, "critical-line = 3/2-line integral"))
    overlap = sample_omegas(cfg.seed + 1, max(1, cfg.count // 2), OVERLAP_RE, CROSS_IM)
    for w in overlap + [-1 + 0j]:
        out.append(
            _agreement(f"overlap_3half_series_{_label(w)}", reps.nu_via_three_halves_line(w, q), nu_direct(w), tol, "3/2-line integral = series")
        )
    rhs = C.KAPPA1 + math.pi**2 / 12 - C.EULER_GAMMA**2 / 2 - C.STIELTJES_GAMMA1
    out.append(
        VerificationRecord(
            "nu_minus1_closed_form", reps.nu_via_three_halves_line(-1, q).value, rhs, tol, "nu_{-1} = kappa1 + pi^2/12 - gamma^2/2 - gamma1"
        )
    )
    return out


def _bounded(tag: str, value: float, bound: float, ref: str) -> VerificationRecord:
    """value <= bound, recorded as distance above the bound."""
    return VerificationRecord(tag, value, min(value, bound), 0.0, ref)


def proof_records(cfg: RunConfig) -> list[VerificationRecord]:
    out = [pc.sin_bound_check(R) for R in range(1, cfg.r_max + 1)]
    out.append(
        VerificationRecord("i_r_reference_R1", pc.i_r_integral(1), pc.i_r_reference(1), min(1e-9, cfg.tol), "I_R definition, fine-grid reference")
    )
    if cfg.r_max < 10:
        return out
    out.append(pc.i_r_decay_check(cfg.r_max))

    growth_R = [R for R in (5, 10, 20, 40) if R <= cfg.r_max]
    ratios = [pc.zeta_growth_on_arc(R) / math.sqrt(R) for R in growth_R]
    out.append(_bounded("zeta_growth_ratio", max(ratios), 2.0 * ratios[0], "|zeta(1/2 - i R e^{i phi})| = O(sqrt R)"))

    omegas = [cfg.omega] if cfg.omega is not None else [0j]
    for w in omegas:
        arc_R = [R for R in (5, 10, 20) if R <= cfg.r_max]
        arcs = [pc.arc_integral_decay(R, w) for R in arc_R]
        steps = sum(1 for a, b in zip(arcs, arcs[1:]) if b >= a)
        out.append(
            VerificationRecord(f"arc_decreasing_{_label(w)}", arcs[-1], arcs[-1], 0.0, "arc integral -> 0", abs_diff=float(steps))
        )
        if 20 in arc_R:
            out.append(_bounded(f"arc_envelope_{_label(w)}", arcs[-1], arcs[0] * math.sqrt(5 / 20) * 4, "arc integral = O(R^{-1/2})"))

    rtol = min(pc.RESIDUE_TOL, cfg.tol)
    for r in pc.residue_grid_records():
        out.append(VerificationRecord(r.id, r.lhs, r.rhs, rtol, r.paper_ref))

    atol = min(pc.ASSEMBLY_TOL, cfg.tol)
    grid = pc.ASSEMBLY_GRID if cfg.omega is None else [(cfg.omega, 5), (cfg.omega, 10)]
    for w, R in grid:
        r = pc.theorem1_assembly_check(w, R)
        out.append(VerificationRecord(r.id, r.lhs, r.rhs, atol, r.paper_ref))
    return out


def nu_results(cfg: RunConfig):
    w = cfg.omega if cfg.omega is not None else 0j
    q = quad_config(cfg)
    methods = {
        "series": lambda: nu_direct(w),
        "half-line": lambda: reps.nu_via_critical_line(w, q),
        "three-halves": lambda: reps.nu_via_three_halves_line(w, q),
    }
    chosen = list(methods) if cfg.method == "all" else [cfg.method]
    evals = {m: methods[m]() for m in chosen}
    results = [
        {"method": m, "value": _cplx(e.value), "err_estimate": e.err_estimate, "terms": e.terms, "nodes": e.nodes}
        for m, e in evals.items()
    ]
    records = [
        _agreement(f"nu_{a}_vs_{b}", evals[a], evals[b], cfg.tol, "agreement of evaluation routes")
        for a, b in itertools.combinations(chosen, 2)
    ]
    return results, records


def zeta_results(cfg: RunConfig):
    s = cfg.omega if cfg.omega is not None else 2 + 0j
    ztol = min(1e-3, max(1e-14, cfg.tol))
    e = zeta_complex(s, ztol) if cfg.method in ("em", "all") else eta_oracle(s, ztol)
    return [{"method": e.method, "s": _cplx(s), "value": _cplx(e.value), "err_estimate": e.err_estimate, "terms": e.terms}], []


def run(cfg: RunConfig) -> ReportBundle:
    cmd = cfg.command
    records: list[VerificationRecord] = []
    results: list[dict] = []
    if cmd == "constants":
        results = C.constant_table()
    elif cmd == "zeta":
        results, records = zeta_results(cfg)
    elif cmd == "nu":
        results, records = nu_results(cfg)
    elif cmd == "verify-corollary":
        records = corollary_records(cfg)
    elif cmd == "verify-cross":
        records = cross_records(cfg)
    elif cmd == "verify-proof":
        records = proof_records(cfg)
    elif cmd == "verify-all":
        records = corollary_records(cfg) + cross_records(cfg) + proof_records(cfg)
    else:
        raise ValueError(f"unknown command {cmd!r}")
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat() if cfg.timestamp else None
    return ReportBundle(records=records, config=cfg.echo(), results=results, timestamp=stamp)


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}") from None
    return complex(re, im)


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _default_tol() -> float:
    env = os.environ.get("ZETALINE_TOL")
    return float(env) if env else DEFAULT_TOL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_float, default=None, help="tolerance (default 1e-9, env ZETALINE_TOL)")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--max-nodes", type=int, default=2**17)
    common.add_argument("--trunc-x", type=_positive_float, default=None)
    common.add_argument("--timestamp", action="store_true", help="add a UTC timestamp to the report")

    p = argparse.ArgumentParser(prog="zetaline", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    nu = sub.add_parser("nu", parents=[common], help="evaluate nu(omega)")
    nu.add_argument("--omega", type=parse_complex, required=True, metavar="RE[,IM]")
    nu.add_argument("--method", choices=["series", "half-line", "three-halves", "all"], default="all")

    z = sub.add_parser("zeta", parents=[common], help="evaluate zeta(s), Re s >= 1/2")
    z.add_argument("--s", type=parse_complex, required=True, metavar="RE,IM")
    z.add_argument("--method", choices=["em", "eta"], default="em")

    sub.add_parser("constants", parents=[common], help="print the constant table")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=["corollary", "cross", "proof", "all"])
    _suite_flags(v)
    for suite in ("corollary", "cross", "proof", "all"):
        _suite_flags(sub.add_parser(f"verify-{suite}", parents=[common], help=f"same as 'verify {suite}'"))
    return p


def _suite_flags(p: argparse.ArgumentParser):
    p.add_argument("--count", type=int, default=20, help="random omegas in the cross sweep")
    p.add_argument("--r-max", type=int, default=50, help="largest R in the proof sweeps")
    p.add_argument("--omega", type=parse_complex, default=None, metavar="RE[,IM]", help="omega for the contour checks")


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    if command == "verify":
        command = f"verify-{args.suite}"
    omega = getattr(args, "omega", None)
    if command == "zeta":
        omega = args.s
    return RunConfig(
        command=command,
        omega=omega,
        tol=args.tol if args.tol is not None else _default_tol(),
        seed=args.seed,
        format=args.format,
        output_path=args.output,
        count=getattr(args, "count", 20),
        r_max=getattr(args, "r_max", 50),
        method=getattr(args, "method", "all"),
        max_nodes=args.max_nodes,
        trunc_x=args.trunc_x,
        timestamp=args.timestamp,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    if cfg.count < 1 or cfg.r_max < 1:
        parser.error("--count and --r-max must be positive")
    try:
        bundle = run(cfg)
    except (ZetalineError, ValueError, ArithmeticError) as exc:
        print(f"zetaline: error: {exc}", file=sys.stderr)
        return 1
    payload = serialize(bundle, cfg.format)
    if cfg.output_path:
        try:
            with open(cfg.output_path, "wb") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"zetaline: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    return bundle.exit_code


if __name__ == "__main__":
    sys.exit(main())
