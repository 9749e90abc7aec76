"""Command-line driver.

    minimal-disks mesh --a 0.1 --nx 65 --ns 41 --format obj --out f.obj
    minimal-disks slice --a 0.1 --x 0.25 --n 41 --out slice.csv
    minimal-disks verify --grid-preset acceptance --out report.json
    minimal-disks theorem --k-list 3,6,12,24 --delta 0.1 --out theorem.json
    minimal-disks converge --k-list 3,6,12,24 --xmin 0.125 --out conv.json
    minimal-disks winding --a 0.001 --t1 0.1 --t2 0.2

Any subcommand accepts ``--config FILE`` with ``key = value`` lines using
the long flag names; flags given on the command line take precedence.
Exit status: 0 when every requested certificate passes, 1 when one fails,
2 on bad arguments.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import MinimalDiskError
from .export import FORMATS, check, export_mesh, render_mesh
from .family import FamilyParameter, slice_curve
from .limit import BLOWUP_MESH, winding_count
from .mesh import SurfaceMesh, sample_mesh


def _k_list(text):
    try:
        ks = [int(k) for k in text.split(",") if k.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None
    if not ks or min(ks) < 1:
        raise argparse.ArgumentTypeError("k values must be positive integers")
    return ks


def _family_a(text):
    try:
        return FamilyParameter(float(text)).a
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="minimal-disks",
        description="Embedded minimal disks with curvature blow-up at one point.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="key=value file with default flags")
        return p

    p = add("mesh", "sample a surface and export it")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--a", type=_family_a)
    source.add_argument("--sheet", choices=("plus", "minus", "helicoid"))
    p.add_argument("--nx", type=int, default=65)
    p.add_argument("--ns", type=int, default=41)
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.add_argument("--format", choices=FORMATS, default="obj")
    p.add_argument("--out", default="-")

    p = add("slice", "sample one horizontal slice and certify it is a graph")
    p.add_argument("--a", type=_family_a, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--n", type=int, default=41)
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.add_argument("--out", default="-")

    p = add("verify", "run the embedding certificates on a grid preset")
    p.add_argument("--grid-preset", choices=("acceptance",), default="acceptance")
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.add_argument("--out", default="-")

    p = add("theorem", "reproduce the four items of the main theorem")
    p.add_argument("--k-list", type=_k_list, default=[3, 6, 12, 24])
    p.add_argument("--delta", type=_positive, default=0.1)
    p.add_argument("--nx", type=int, default=BLOWUP_MESH[0])
    p.add_argument("--ns", type=int, default=BLOWUP_MESH[1])
    p.add_argument("--xmin", type=_positive, default=0.125)
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.add_argument("--out", default="-")

    p = add("converge", "convergence table of the anchored subsequence")
    p.add_argument("--k-list", type=_k_list, default=[3, 6, 12, 24])
    p.add_argument("--xmin", type=_positive, default=0.125)
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.add_argument("--out", default="-")

    p = add("winding", "turns of the slice direction between two heights")
    p.add_argument("--a", type=_family_a, required=True)
    p.add_argument("--t1", type=_positive, required=True)
    p.add_argument("--t2", type=_positive, required=True)
    return parser


def read_config(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.lstrip("-")] = value
    return values


def _with_config(parser, argv):
    """Prepend config-file flags so explicit flags override them."""
    if "--config" not in argv and not any(a.startswith("--config=") for a in argv):
        return argv
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    try:
        values = read_config(known.config)
    except (OSError, ValueError) as exc:
        parser.error(f"cannot read config: {exc}")
    command, rest = argv[0], argv[1:]
    extra = []
    for key, value in values.items():
        extra += [f"--{key.replace('_', '-')}", value]
    return [command, *extra, *rest]


def _emit(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _run(args):
    if args.command == "mesh":
        source = args.a if args.a is not None else args.sheet
        mesh = sample_mesh(source, args.nx, args.ns, args.tol)
        if args.out == "-":
            sys.stdout.write(render_mesh(mesh, args.format))
        else:
            n = export_mesh(mesh, args.format, args.out)
            print(f"wrote {n} bytes to {args.out}", file=sys.stderr)
        return 0

    if args.command == "slice":
        c = slice_curve(args.a, args.x, args.n, args.tol)
        z = (args.x + 1j * c.y)[None, :]
        mesh = SurfaceMesh(z=z, positions=c.positions[None], u=c.u[None],
                           v=c.v[None], normals=c.normals[None],
                           gauss_curvature=np.asarray(c.curvatures)[None],
                           axis_phase=np.array([c.u[c.middle]]),
                           triangles=np.zeros((0, 3), dtype=np.int64))
        _emit(render_mesh(mesh, "csv"), args.out)
        checks = [
            check("max |u(x,y) - u(x,0)|", c.phase_deviation(),
                  c.phase_bound() + 1e-10, "<="),
            check("min cos(u(x,y) - u(x,0))", float(c.graph_cosines().min()),
                  0.5, ">"),
            check("min step of projection", float(np.diff(c.projection()).min()),
                  0.0, ">"),
        ]
        for r in checks:
            print(f"{'PASS' if r['pass'] else 'FAIL'} {r['name']}: "
                  f"{r['measured']:.6g} {r['relation']} {r['bound']:.6g}",
                  file=sys.stderr)
        return 0 if all(r["pass"] for r in checks) else 1

    if args.command == "winding":
        turns = winding_count(args.a, args.t1, args.t2)
        limit = winding_count(None, args.t1, args.t2)
        print(f"turns {turns:.5f}")
        print(f"limit {limit:.5f}")
        return 0

    from . import reports
    if args.command == "verify":
        doc = reports.verify_report(args.grid_preset, args.tol)
    elif args.command == "theorem":
        doc = reports.theorem_report(args.k_list, args.delta,
                                     (args.nx, args.ns), args.tol, args.xmin)
    else:
        doc = reports.convergence_document(args.k_list, args.xmin, args.tol)
    _emit(doc.to_json(), args.out)
    for rec in doc.checks():
        if not rec["pass"]:
            tag = "FAIL" if rec.get("certificate", True) else "note"
            print(f"{tag}: {rec['name']} measured={rec['measured']} "
                  f"bound={rec['bound']}", file=sys.stderr)
    return 0 if doc.passed else 1


def run_cli(argv=None):
    """Run the CLI and return the exit status instead of exiting."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_with_config(parser, argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (MinimalDiskError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
