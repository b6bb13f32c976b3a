"""Command-line surface.

Exit codes: 0 success, 1 usage error (bad flags or flag values), 2 data or
format error (bad files, bad spec configs, domain failures raised by the
library, reported with the error class name), 3 verification failure.
Every numeric value is printed with 17 significant digits, so text output
round-trips to the exact double. Identical flags, files, and seeds produce
byte-identical outputs.
"""

import argparse
import json
import sys

import numpy as np

from . import diagnostics, io, schemes, subspace
from .errors import CoglError, LatentFileError, SpecConfigError

USAGE_ERROR = 1
DATA_ERROR = 2
VERIFY_FAIL = 3


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; this surface reserves 2 for
    # data errors, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


class _UsageError(Exception):
    pass


def _positive_int(name, minimum=1):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}, got {value}")
        return value
    return parse


def _seed_arg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be in [0, 2**64), got {value}")
    return value


def _unit_float(name):
    def parse(text):
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be a number, got {text!r}") from None
        if not 0.0 <= value <= 1.0:
            raise argparse.ArgumentTypeError(f"{name} must be in [0, 1], got {value}")
        return value
    return parse


def _positive_float(name):
    def parse(text):
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be a number, got {text!r}") from None
        if not value > 0.0:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {value}")
        return value
    return parse


def _confidence_arg(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--confidence must be a number, got {text!r}") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"--confidence must be in (0, 1), got {value}")
    return value


def _float_list(text, flag):
    parts = [p.strip() for p in str(text).split(",")]
    if parts == [""]:
        raise _UsageError(f"{flag} must list at least one number")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise _UsageError(f"{flag} must be comma-separated numbers, got {text!r}") from None
    if not all(np.isfinite(values)):
        raise _UsageError(f"{flag} values must be finite")
    return values


def _read_single_latent(path, label):
    latents = io.read_latents(path)
    if len(latents) != 1:
        raise LatentFileError(f"{label} file {path} holds {len(latents)} latents, expected exactly 1")
    return latents[0]


def _cmd_sample(args):
    spec = io.load_spec_config(args.spec)
    latents = diagnostics.sample_latents(spec, args.count, args.seed)
    io.write_latents(args.out, latents, dtype=io.DTYPE_F64)
    return 0


def _cmd_interpolate(args):
    spec = io.load_spec_config(args.spec)
    a = _read_single_latent(args.a, "--a")
    b = _read_single_latent(args.b, "--b")
    method = schemes.InterpolationMethod.parse(args.method)
    # v runs from 1 down to 0 so the output starts at --a and ends at --b
    if args.steps == 1:
        vs = [0.5]
    else:
        vs = np.linspace(1.0, 0.0, args.steps)
    out = [schemes.interpolate(a, b, v, method, spec) for v in vs]
    io.write_latents(args.out, out, dtype=io.DTYPE_F64)
    return 0


def _cmd_centroid(args):
    spec = io.load_spec_config(args.spec)
    method = schemes.CentroidMethod.parse(args.method)
    strict_methods = (schemes.CentroidMethod.STANDARDIZED_EUCLIDEAN,
                      schemes.CentroidMethod.MODE_NORM_EUCLIDEAN)
    if args.strict_baselines and method in strict_methods and not spec.is_unit:
        raise SpecConfigError(
            f"--strict-baselines requires a unit spec (mean 0, isotropic variance 1) "
            f"for method {method.value}"
        )
    latents = io.read_latents(args.inputs)
    result = schemes.centroid(latents, method, spec)
    io.write_latents(args.out, [result], dtype=io.DTYPE_F64)
    return 0


def _cmd_subspace_build(args):
    latents = io.read_latents(args.inputs)
    subspace.build_basis(latents)  # validates rank and dimensions
    io.write_latents(args.out, latents, dtype=io.DTYPE_F64)
    return 0


def _load_basis(path):
    return subspace.build_basis(io.read_latents(path))


def _cmd_subspace_at(args):
    spec = io.load_spec_config(args.spec)
    basis = _load_basis(args.basis)
    h = np.array(_float_list(args.coords, "--coords"))
    out = subspace.latent_at(basis, h, spec)
    io.write_latents(args.out, [out], dtype=io.DTYPE_F64)
    return 0


def _cmd_subspace_grid(args):
    spec = io.load_spec_config(args.spec)
    basis = _load_basis(args.basis)
    center = _read_single_latent(args.center, "--center")
    dims = _float_list(args.dims, "--dims")
    if len(dims) != 2 or any(int(d) != d for d in dims):
        raise _UsageError(f"--dims must be two comma-separated integers, got {args.dims!r}")
    dim_i, dim_j = int(dims[0]), int(dims[1])
    if dim_i == dim_j:
        raise _UsageError("--dims must name two different dimensions")
    grid = subspace.grid_coords(basis, center, dim_i, dim_j,
                                args.half_extent, args.rows, args.cols)
    out = [subspace.latent_at(basis, h, spec) for h in grid]
    io.write_latents(args.out, out, dtype=io.DTYPE_F64)
    return 0


def _cmd_subspace_coords(args):
    basis = _load_basis(args.basis)
    latents = io.read_latents(args.input)
    for x in latents:
        h = subspace.coords(basis, x)
        print(" ".join(_fmt(c) for c in h))
    return 0


def _cmd_diagnose(args):
    spec = io.load_spec_config(args.spec)
    latents = io.read_latents(args.input)
    reports = [diagnostics.typicality_report(x, spec) for x in latents]
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    else:
        for i, r in enumerate(reports):
            if i > 0:
                print()
            print(r.to_key_values())
    return 0


def _cmd_verify_slerp_beta(args):
    est = diagnostics.estimate_slerp_beta_ci(args.dim, args.samples, args.v,
                                             args.confidence, args.seed)
    print(f"{_fmt(est.lo)} {_fmt(est.hi)}")
    return 0


def _cmd_verify_cog_dist(args):
    spec = io.load_spec_config(args.spec)
    weights = _float_list(args.weights, "--weights")
    report = diagnostics.check_cog_distribution(spec, weights, args.trials, args.seed)
    print(f"passed={'true' if report.passed else 'false'}")
    print(f"n_trials={report.n_trials}")
    print(f"mean_error={_fmt(report.mean_error)}")
    print(f"var_error={_fmt(report.var_error)}")
    print(f"mean_limit={_fmt(report.mean_limit)}")
    print(f"var_limit={_fmt(report.var_limit)}")
    return 0 if report.passed else VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cogl", description="Gaussian latent combination toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sample", help="draw seeded latents from a spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--count", required=True, type=_positive_int("--count"))
    p.add_argument("--seed", required=True, type=_seed_arg)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("interpolate", help="interpolate between two latents")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--steps", required=True, type=_positive_int("--steps"))
    p.add_argument("--method", required=True, type=str.lower,
                   choices=[m.value for m in schemes.InterpolationMethod])
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_interpolate)

    p = sub.add_parser("centroid", help="centroid of a latent group")
    p.add_argument("--inputs", required=True)
    p.add_argument("--method", required=True, type=str.lower,
                   choices=[m.value for m in schemes.CentroidMethod])
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--strict-baselines", action="store_true",
                   help="reject non-unit specs for std-euclidean and mode-norm")
    p.set_defaults(func=_cmd_centroid)

    sp = sub.add_parser("subspace", help="build and query latent subspaces")
    ssub = sp.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = ssub.add_parser("build", help="validate latents and write a basis file")
    p.add_argument("--inputs", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_subspace_build)

    p = ssub.add_parser("at", help="corrected latent at subspace coordinates")
    p.add_argument("--basis", required=True)
    p.add_argument("--coords", required=True)
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_subspace_at)

    p = ssub.add_parser("grid", help="corrected latents on a 2-D coordinate grid")
    p.add_argument("--basis", required=True)
    p.add_argument("--center", required=True)
    p.add_argument("--dims", required=True)
    p.add_argument("--half-extent", required=True, type=_positive_float("--half-extent"))
    p.add_argument("--rows", required=True, type=_positive_int("--rows"))
    p.add_argument("--cols", required=True, type=_positive_int("--cols"))
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_subspace_grid)

    p = ssub.add_parser("coords", help="print subspace coordinates of latents")
    p.add_argument("--basis", required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_subspace_coords)

    p = sub.add_parser("diagnose", help="typicality report per latent")
    p.add_argument("--input", required=True)
    p.add_argument("--spec", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_diagnose)

    vp = sub.add_parser("verify", help="statistical verification commands")
    vsub = vp.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = vsub.add_parser("slerp-beta", help="confidence interval of spherical-weight beta")
    p.add_argument("--dim", required=True, type=_positive_int("--dim"))
    p.add_argument("--samples", required=True, type=_positive_int("--samples", minimum=100))
    p.add_argument("--v", required=True, type=_unit_float("--v"))
    p.add_argument("--confidence", required=True, type=_confidence_arg)
    p.add_argument("--seed", required=True, type=_seed_arg)
    p.set_defaults(func=_cmd_verify_slerp_beta)

    p = vsub.add_parser("cog-dist", help="Monte Carlo check of corrected combinations")
    p.add_argument("--spec", required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--trials", required=True, type=_positive_int("--trials"))
    p.add_argument("--seed", required=True, type=_seed_arg)
    p.set_defaults(func=_cmd_verify_cog_dist)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"cogl: error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except CoglError as e:
        print(f"cogl: error: {type(e).__name__}: {e}", file=sys.stderr)
        return DATA_ERROR
    except OSError as e:
        print(f"cogl: error: {e}", file=sys.stderr)
        return DATA_ERROR
    except ValueError as e:
        print(f"cogl: error: {type(e).__name__}: {e}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
