"""Command-line front end.

Subcommands: check, stratum, group, orbit, transitivity, sk-verify,
geodesic, sample.  Exit codes: 0 all checks pass, 1 any check fails,
2 input error (unreadable or malformed files, bad dimensions).

Runs are reproducible: the seed comes from --seed, then the
SYMTRANS_SEED environment variable, then 0; identical (command, inputs,
seed, trials) produce byte-identical structured reports.
"""

import argparse
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from symtrans import formats, sampling
from symtrans.affine import GroupChart
from symtrans.cubic import sample_regular
from symtrans.errors import (
    InvalidDimension,
    NotInVariety,
    ParseError,
    SymtransError,
)
from symtrans.kahler import SKStructure, complex_support_dim
from symtrans.linalg import vec_add
from symtrans.report import Report
from symtrans.symplectic import SymplecticSpace

DEFAULT_TOLERANCE = 1e-8
DEFAULT_DT = 1e-3
DEFAULT_T_END = 1.0


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    seed: int = 0
    trials: int = 20
    fmt: str = "text"
    options: dict = field(default_factory=dict)


def resolve_seed(value) -> int:
    if value is not None:
        return int(value)
    env = os.environ.get("SYMTRANS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"SYMTRANS_SEED must be an integer, got {env!r}") from exc
    return 0


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _load_cubic(path):
    try:
        return formats.read_cubic(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_potential(path):
    try:
        return formats.read_potential(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _stratum_data(report: Report, stratum) -> None:
    report.data.update(
        k=stratum.k,
        isotropic=stratum.isotropic,
        in_variety=stratum.in_variety,
        translation_dim=stratum.translation_dim,
        support=formats.subspace_to_columns(stratum.support),
    )


def run_check(config: RunConfig) -> Report:
    form = _load_cubic(config.inputs[0])
    report = Report(command="check", inputs={"cubic": config.inputs[0]})
    omega = form.space.omega
    mats = form.endo_matrices()
    bad = next((i for i, m in enumerate(mats)
                if not (omega @ m + m.transpose() @ omega).is_zero()), None)
    report.add("contractions-in-sp", bad is None,
               None if bad is None else {"index": bad})
    stratum = form.in_c_sp()
    report.add("commuting-contractions", stratum.commutator_witness is None,
               None if stratum.commutator_witness is None
               else {"pair": list(stratum.commutator_witness)})
    report.add("traceless-contractions", stratum.trace_witness is None,
               None if stratum.trace_witness is None
               else {"index": stratum.trace_witness})
    report.add("variety-matches-isotropy", stratum.in_variety == stratum.isotropic,
               None if stratum.in_variety == stratum.isotropic
               else {"in_variety": stratum.in_variety, "isotropic": stratum.isotropic})
    if stratum.in_variety:
        report.add("vanishing-products", form.products_vanish())
    _stratum_data(report, stratum)
    return report.finish()


def run_stratum(config: RunConfig) -> Report:
    form = _load_cubic(config.inputs[0])
    report = Report(command="stratum", inputs={"cubic": config.inputs[0]})
    stratum = form.in_c_sp()
    witness = stratum.commutator_witness or stratum.trace_witness
    report.add("in-variety", stratum.in_variety,
               None if stratum.in_variety else {"witness": str(witness)})
    if stratum.in_variety:
        report.add("stratum-bound", stratum.k <= form.space.n,
                   None if stratum.k <= form.space.n else {"k": stratum.k})
    _stratum_data(report, stratum)
    return report.finish()


def _chart_or_fail(form, report: Report):
    stratum = form.in_c_sp()
    if not stratum.in_variety:
        witness = stratum.commutator_witness or stratum.trace_witness
        report.add("in-variety", False, {"witness": str(witness)})
        return None
    report.add("in-variety", True)
    return GroupChart(form)


def run_group(config: RunConfig) -> Report:
    form = _load_cubic(config.inputs[0])
    report = Report(command="group", seed=config.seed, trials=config.trials,
                    inputs={"cubic": config.inputs[0]})
    chart = _chart_or_fail(form, report)
    if chart is None:
        return report.finish()
    rng = sampling.as_rng(config.seed)
    dim = form.space.dim
    witness = None
    for _ in range(config.trials):
        x = sampling.random_vector(rng, dim)
        y = sampling.random_vector(rng, dim)
        ex, ey = chart.exp_element(x), chart.exp_element(y)
        exy = chart.exp_element(vec_add(x, y))
        if ex.compose(ey) != exy or ey.compose(ex) != exy:
            witness = {"x": formats.vector_to_strings(x),
                       "y": formats.vector_to_strings(y)}
            break
    report.add("abelian-group-law", witness is None, witness)
    return report.finish()


def run_orbit(config: RunConfig) -> Report:
    form = _load_cubic(config.inputs[0])
    report = Report(command="orbit", seed=config.seed, trials=config.trials,
                    inputs={"cubic": config.inputs[0]})
    chart = _chart_or_fail(form, report)
    if chart is None:
        return report.finish()
    dim = form.space.dim
    point = config.options.get("x")
    if point is not None:
        x = formats.parse_vector(point, dim)
        image = chart.orbit_map(x)
        report.data["image"] = formats.vector_to_strings(image)
        report.data["preimage_roundtrip"] = formats.vector_to_strings(
            chart.orbit_map_inverse(image))
    rng = sampling.as_rng(config.seed)
    witness = None
    for _ in range(config.trials):
        x = sampling.random_vector(rng, dim)
        if chart.orbit_map_inverse(chart.orbit_map(x)) != x:
            witness = {"x": formats.vector_to_strings(x)}
            break
    report.add("orbit-roundtrip-identity", witness is None, witness)
    return report.finish()


def run_transitivity(config: RunConfig) -> Report:
    form = _load_cubic(config.inputs[0])
    report = Report(command="transitivity", seed=config.seed, trials=config.trials,
                    inputs={"cubic": config.inputs[0]})
    chart = _chart_or_fail(form, report)
    if chart is None:
        return report.finish()
    result = chart.verify_simply_transitive(config.trials, config.seed)
    report.add("unipotent-differentials", result.passed,
               None if result.passed
               else {"v": formats.vector_to_strings(result.witness)})
    return report.finish()


def run_sk_verify(config: RunConfig) -> Report:
    potential = _load_potential(config.inputs[0])
    report = Report(command="sk-verify", seed=config.seed, trials=config.trials,
                    inputs={"potential": config.inputs[0]})
    structure = SKStructure(potential)
    space = potential.space
    rng = sampling.as_rng(config.seed)
    points = [sampling.random_vector(rng, space.dim) for _ in range(config.trials)]
    flat = structure.check_flat(points)
    by_name: dict = {}
    for verdict in flat.verdicts:
        slot = by_name.setdefault(verdict.name, [True, None])
        if not verdict.passed and slot[0]:
            slot[0] = False
            slot[1] = verdict.witness
    for name, (passed, witness) in by_name.items():
        report.add(name, passed, witness)
    bound = space.max_isotropic_dim()
    dims = [complex_support_dim(potential, space.complexify(pt)) for pt in points]
    report.add("support-dimension-bound", all(d <= bound for d in dims),
               None if all(d <= bound for d in dims) else {"dims": dims},
               max_support_dim=max(dims, default=0), bound=bound)
    report.data["constant_cubic"] = structure.is_constant_cubic
    report.data["degree"] = potential.degree
    return report.finish()


def run_geodesic(config: RunConfig) -> Report:
    potential = _load_potential(config.inputs[0])
    report = Report(command="geodesic", seed=config.seed, trials=config.trials,
                    inputs={"potential": config.inputs[0]})
    structure = SKStructure(potential)
    space = potential.space
    opts = config.options
    connection = opts.get("connection", "nabla")
    dt = opts.get("dt", DEFAULT_DT)
    t_end = opts.get("t_end", DEFAULT_T_END)
    tolerance = opts.get("tolerance", DEFAULT_TOLERANCE)
    if opts.get("p0") is not None or opts.get("v0") is not None:
        if opts.get("p0") is None or opts.get("v0") is None:
            raise ParseError("--p0 and --v0 must be given together")
        starts = [(formats.parse_vector(opts["p0"], space.dim),
                   formats.parse_vector(opts["v0"], space.dim))]
    else:
        rng = sampling.as_rng(config.seed)
        starts = [(sampling.random_vector(rng, space.dim),
                   sampling.random_vector(rng, space.dim))
                  for _ in range(config.trials)]
    first = None
    witness = None
    comparable = structure.is_constant_cubic and connection == "nabla"
    worst = 0.0
    for p0, v0 in starts:
        result = structure.geodesic(connection, p0, v0, t_end, dt)
        if first is None:
            first = result
        if result.sup_norm_diff is not None:
            worst = max(worst, result.sup_norm_diff)
            if result.sup_norm_diff > tolerance and witness is None:
                witness = {"p0": formats.vector_to_strings(p0),
                           "v0": formats.vector_to_strings(v0),
                           "sup_norm_diff": result.sup_norm_diff}
    if comparable:
        report.add("closed-form-matches-rk4", witness is None, witness,
                   sup_norm_diff=worst, tolerance=tolerance)
        p0, v0 = starts[0]
        far = Fraction(10 ** 6)
        structure.closed_form_point(p0, v0, far)
        structure.closed_form_point(p0, v0, -far)
        report.add("complete-at-huge-times", True, None, t="1e6")
    else:
        report.add("rk4-integrated", first.rk4 is not None or first.closed is not None)
    out = opts.get("out")
    if out:
        with open(out, "w", encoding="ascii") as fh:
            first.primary.write_csv(fh)
        report.data["trajectory"] = out
    report.data["connection"] = connection
    report.data["dt"] = dt
    report.data["t_end"] = t_end
    return report.finish()


def run_sample(config: RunConfig) -> Report:
    opts = config.options
    n = opts.get("n")
    k = opts.get("k")
    if n is None or k is None:
        raise ParseError("sample requires --n and --k")
    if not 0 <= k <= n:
        raise InvalidDimension(f"need 0 <= k <= n, got k={k}, n={n}")
    report = Report(command="sample", seed=config.seed,
                    inputs={"n": n, "k": k})
    space = SymplecticSpace(n)
    rng = sampling.as_rng(config.seed)
    w = space.random_isotropic(k, rng)
    form = sample_regular(space, w, rng)
    stratum = form.in_c_sp()
    report.add("sampled-support-dimension", stratum.k == k, None, k=stratum.k)
    report.add("sampled-in-variety", stratum.in_variety)
    out = opts.get("out")
    text = formats.format_cubic(form)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
        report.data["out"] = out
    else:
        report.data["cubic"] = text.splitlines()
    return report.finish()


RUNNERS = {
    "check": run_check,
    "stratum": run_stratum,
    "group": run_group,
    "orbit": run_orbit,
    "transitivity": run_transitivity,
    "sk-verify": run_sk_verify,
    "geodesic": run_geodesic,
    "sample": run_sample,
}


def run(config: RunConfig) -> Report:
    runner = RUNNERS.get(config.command)
    if runner is None:
        raise ParseError(f"unknown command {config.command!r}")
    return runner(config)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symtrans",
        description="Construct and verify Abelian simply transitive symplectic "
                    "affine groups and flat special Kahler structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, trials_default=20):
        p.add_argument("--seed", type=int, default=None,
                       help="RNG seed (default: $SYMTRANS_SEED or 0)")
        p.add_argument("--trials", type=int, default=trials_default)
        p.add_argument("--format", dest="fmt", choices=("text", "structured"),
                       default="text")

    p = sub.add_parser("check", help="verify variety membership of a cubic form file")
    p.add_argument("cubic")
    common(p)

    p = sub.add_parser("stratum", help="report the support stratum of a cubic form")
    p.add_argument("cubic")
    common(p)

    p = sub.add_parser("group", help="verify the Abelian group law on sampled pairs")
    p.add_argument("cubic")
    common(p, trials_default=100)

    p = sub.add_parser("orbit", help="verify the orbit map round trip; map a point with --x")
    p.add_argument("cubic")
    p.add_argument("--x", default=None, help="comma-separated rational point")
    common(p, trials_default=100)

    p = sub.add_parser("transitivity", help="verify unipotence of orbit differentials")
    p.add_argument("cubic")
    common(p, trials_default=100)

    p = sub.add_parser("sk-verify", help="verify the special Kahler conditions of a potential")
    p.add_argument("potential")
    common(p)

    p = sub.add_parser("geodesic", help="integrate geodesics and compare against the closed form")
    p.add_argument("potential")
    p.add_argument("--connection", choices=("d", "nabla"), default="nabla")
    p.add_argument("--p0", default=None, help="comma-separated rational start point")
    p.add_argument("--v0", default=None, help="comma-separated rational start velocity")
    p.add_argument("--dt", type=float, default=DEFAULT_DT)
    p.add_argument("--t-end", type=float, default=DEFAULT_T_END)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--out", default=None, help="trajectory CSV path")
    common(p, trials_default=5)

    p = sub.add_parser("sample", help="write a regular cubic sampled on a random isotropic subspace")
    p.add_argument("--n", type=int, required=True, help="half-dimension of the space")
    p.add_argument("--k", type=int, required=True, help="support dimension")
    p.add_argument("--out", default=None)
    common(p)

    return parser


def config_from_args(args) -> RunConfig:
    options = {}
    for key in ("x", "connection", "p0", "v0", "dt", "tolerance", "out", "n", "k"):
        if hasattr(args, key) and getattr(args, key) is not None:
            options[key] = getattr(args, key)
    if hasattr(args, "t_end") and args.t_end is not None:
        options["t_end"] = args.t_end
    inputs = []
    for key in ("cubic", "potential"):
        if hasattr(args, key):
            inputs.append(getattr(args, key))
    return RunConfig(
        command=args.command,
        inputs=inputs,
        seed=resolve_seed(args.seed),
        trials=args.trials,
        fmt=args.fmt,
        options=options,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        report = run(config)
    except (ParseError, InvalidDimension, NotInVariety) as exc:
        print(f"symtrans: error: {exc}", file=sys.stderr)
        return 2
    except SymtransError as exc:
        print(f"symtrans: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.render(config.fmt))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
