"""Command line interface: ``relspin {wigner,sweep,verify,gate-demo}``.

Exit codes: 0 ok, 1 verification failure, 2 usage or domain error, 3 I/O error.
"""

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import gates, verify
from .entanglement import concurrence_numeric, entanglement_of_formation, von_neumann_entropy
from .kinematics import BoostParameters, DomainError, ParticleKinematics, wigner_rotation
from .linalg import partial_trace_first
from .states import (
    BellMixture,
    SpinOrientation,
    TwoMomentumGeometry,
    bd_density,
    boost_density,
    relative_wigner_angle,
    spin_momentum_angle,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

CSV_HEADER = [
    "beta", "alpha", "omega1", "omega2", "phi", "omega_sum",
    "C_rest", "C_boosted", "EoF_rest", "EoF_boosted", "S_spin_rest", "S_spin_boosted",
]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepConfig:
    mixture: BellMixture
    xi: float
    tau: float
    theta: float
    energy_ratio: float
    beta_range: tuple
    output_path: Path = None
    svg: bool = False
    energy_ratio2: float = None
    theta2: float = None

    def __post_init__(self):
        start, end, steps = self.beta_range
        if not (0.0 <= start <= end < 1.0) or steps < 2:
            raise UsageError(f"beta range needs 0 <= start <= end < 1 and steps >= 2, got {self.beta_range}")

    def betas(self):
        start, end, steps = self.beta_range
        return np.linspace(start, end, steps)


def _parse_beta_range(text):
    try:
        start, end, steps = text.split(":")
        return float(start), float(end), int(steps)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected start:end:steps, got {text!r}") from None


def _fmt(x, precision):
    return f"{x:.{precision}g}"


def _angle(args, value):
    if value is None:
        return None
    return math.radians(value) if args.degrees else value


def cmd_wigner(args, out):
    theta = _angle(args, args.theta)
    boost = BoostParameters.from_beta(args.beta)
    particle = ParticleKinematics.in_yz_plane(args.energy_ratio, theta)
    w = wigner_rotation(boost, particle)
    p = args.precision
    tan_half = w.sin_half / w.cos_half
    ident = math.tanh(boost.alpha / 2) * math.tanh(particle.delta / 2)
    e_dot_p = float(np.dot(boost.e_hat, particle.p_hat))
    print(f"alpha      {_fmt(boost.alpha, p)}", file=out)
    print(f"delta      {_fmt(particle.delta, p)}", file=out)
    print(f"e.p        {_fmt(e_dot_p, p)}", file=out)
    print(f"omega      {_fmt(w.omega, p)}", file=out)
    print(f"cos_half   {_fmt(w.cos_half, p)}", file=out)
    print(f"sin_half   {_fmt(w.sin_half, p)}", file=out)
    print("axis       " + " ".join(_fmt(a, p) for a in w.axis), file=out)
    print(f"tan_half   {_fmt(tan_half, p)}", file=out)
    if abs(e_dot_p) < 1e-12:
        print(f"tanh*tanh  {_fmt(ident, p)}", file=out)
    for row in w.unitary:
        print("U          " + "  ".join(f"{_fmt(z.real, p)}{z.imag:+.{p}g}j" for z in row), file=out)
    return EXIT_OK


def sweep_rows(cfg):
    geom = TwoMomentumGeometry.in_yz_plane(cfg.energy_ratio, cfg.theta, cfg.energy_ratio2, cfg.theta2)
    s = SpinOrientation(cfg.xi, cfg.tau)
    phi = spin_momentum_angle(s, geom)
    rho = bd_density(cfg.mixture, s)
    c_rest = concurrence_numeric(rho).concurrence
    e_rest = entanglement_of_formation(c_rest)
    s_rest = von_neumann_entropy(partial_trace_first(rho))
    rows = []
    for beta in cfg.betas():
        boost = BoostParameters.from_beta(beta)
        w1 = wigner_rotation(boost, geom.k1)
        w2 = wigner_rotation(boost, geom.k2)
        rho_b = boost_density(rho, boost, geom)
        c_b = concurrence_numeric(rho_b).concurrence
        rows.append([
            float(beta), boost.alpha, w1.omega, w2.omega, phi, relative_wigner_angle(boost, geom),
            c_rest, c_b, e_rest, entanglement_of_formation(c_b),
            s_rest, von_neumann_entropy(partial_trace_first(rho_b)),
        ])
    return rows


def render_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([repr(float(x)) for x in row])
    return buf.getvalue()


def render_svg(xs, ys, xlabel="beta", ylabel="C_boosted", width=480, height=320):
    """Single-polyline SVG line plot."""
    left, right, top, bottom = 60, 20, 20, 50
    x0, x1 = float(min(xs)), float(max(xs))
    y0, y1 = 0.0, max(1e-12, float(max(ys)))
    if x1 == x0:
        x1 = x0 + 1.0
    pw, ph = width - left - right, height - top - bottom

    def px(x):
        return left + (x - x0) / (x1 - x0) * pw

    def py(y):
        return top + ph - (y - y0) / (y1 - y0) * ph

    pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">\n'
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>\n'
        f'<polyline points="{pts}" fill="none" stroke="steelblue" stroke-width="1.5"/>\n'
        f'<text x="{left + pw / 2}" y="{height - 15}" text-anchor="middle">{xlabel}</text>\n'
        f'<text x="15" y="{top + ph / 2}" text-anchor="middle" '
        f'transform="rotate(-90 15 {top + ph / 2})">{ylabel}</text>\n'
        f'<text x="{left}" y="{height - 32}" text-anchor="middle" font-size="10">{x0:.3g}</text>\n'
        f'<text x="{left + pw}" y="{height - 32}" text-anchor="middle" font-size="10">{x1:.3g}</text>\n'
        f'<text x="{left - 5}" y="{top + ph}" text-anchor="end" font-size="10">{y0:.3g}</text>\n'
        f'<text x="{left - 5}" y="{top + 10}" text-anchor="end" font-size="10">{y1:.3g}</text>\n'
        "</svg>\n"
    )


def cmd_sweep(args, out):
    if args.svg and args.out is None:
        raise UsageError("--svg requires --out")
    cfg = SweepConfig(
        mixture=BellMixture.parse(args.p),
        xi=_angle(args, args.xi),
        tau=_angle(args, args.tau),
        theta=_angle(args, args.theta),
        energy_ratio=args.energy_ratio,
        beta_range=args.beta_range,
        output_path=args.out,
        svg=args.svg,
        energy_ratio2=args.energy_ratio2,
        theta2=_angle(args, args.theta2),
    )
    rows = sweep_rows(cfg)
    text = render_csv(rows)
    if cfg.output_path is None:
        out.write(text)
        return EXIT_OK
    try:
        cfg.output_path.write_text(text, newline="")
        if cfg.svg:
            svg = render_svg([r[0] for r in rows], [r[7] for r in rows])
            cfg.output_path.with_suffix(".svg").write_text(svg)
    except OSError as exc:
        print(f"relspin: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_verify(args, out):
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    results = verify.run_suites(args.seed, args.trials)
    out.write(verify.format_report(results, args.seed, args.trials))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def _state_str(v):
    labels = ["|p1 up>", "|p1 dn>", "|p2 up>", "|p2 dn>"]
    terms = [f"({z.real:+.6f}{z.imag:+.6f}j){lab}" for z, lab in zip(v, labels) if abs(z) > 1e-12]
    return " ".join(terms) if terms else "0"


def cmd_gate_demo(args, out):
    g = gates.cnot_limit_gate()
    print("Boost gate in the limit W1 -> 0, W1 + W2 = pi (row k = image of basis ket k):", file=out)
    for row in g.matrix.real.astype(int):
        print("  [" + " ".join(f"{x:2d}" for x in row) + "]", file=out)
    for title, demo in (("entangle", gates.demo_entangle()), ("disentangle", gates.demo_disentangle())):
        print(f"{title}:", file=out)
        print(f"  before {_state_str(demo.before)}   C = {demo.concurrence_before:.12f}", file=out)
        print(f"  after  {_state_str(demo.after)}   C = {demo.concurrence_after:.12f}", file=out)
        print(f"  concurrence {demo.concurrence_before:.0f} -> {demo.concurrence_after:.0f}", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="relspin", description=__doc__.splitlines()[0])
    parser.add_argument("--degrees", action="store_true", help="angles are given in degrees")
    parser.add_argument("--precision", type=int, default=12, help="significant digits in reports")
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("wigner", help="Wigner rotation for an x-boost of a yz-plane momentum")
    w.add_argument("--beta", type=float, required=True)
    w.add_argument("--energy-ratio", type=float, required=True, help="E/m of the particle")
    w.add_argument("--theta", type=float, default=0.0, help="momentum angle from z towards y")

    s = sub.add_parser("sweep", help="concurrence and entropies over a range of boost speeds")
    s.add_argument("--p", default="0.7,0.1,0.1,0.1", help="Bell weights P1,P2,P3,P4")
    s.add_argument("--xi", type=float, default=0.0)
    s.add_argument("--tau", type=float, default=math.pi / 2)
    s.add_argument("--theta", type=float, default=0.0)
    s.add_argument("--energy-ratio", type=float, default=2.0)
    s.add_argument("--energy-ratio2", type=float, default=None, help="E/m of p2 (default: same as p1)")
    s.add_argument("--theta2", type=float, default=None, help="angle of p2 (default: theta + pi)")
    s.add_argument("--beta-range", type=_parse_beta_range, default=(0.0, 0.99, 100),
                   help="start:end:steps")
    s.add_argument("--out", type=Path, default=None, help="CSV path (default: stdout)")
    s.add_argument("--svg", action="store_true", help="also write an SVG plot next to --out")

    v = sub.add_parser("verify", help="run the seeded property suites")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--trials", type=int, default=1000)

    sub.add_parser("gate-demo", help="controlled-gate view of the boost")
    return parser



# global flags may also follow the subcommand
def _hoist_global_flags(argv):
    head, rest = [], []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a == "--degrees":
            head.append(a)
        elif a == "--precision" and i + 1 < len(argv):
            head += [a, argv[i + 1]]
            i += 1
        elif a.startswith("--precision="):
            head.append(a)
        else:
            rest.append(a)
        i += 1
    return head + rest


COMMANDS = {"wigner": cmd_wigner, "sweep": cmd_sweep, "verify": cmd_verify, "gate-demo": cmd_gate_demo}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_hoist_global_flags(argv))
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"relspin: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
