"""Command-line interface.

Subcommands: roots, qanalog, cht, orbit, bk, verify.  Weights are read
as comma-separated fundamental coordinates (or simple-root coordinates
with --root-coords); simple-root and parabolic indices are 1-based,
left to right on the Dynkin diagram.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chevalley import build_chevalley
from .config import DEFAULT_SEED
from .height import cht, cht_is_zero_fast, star
from .irreps import bk_jump_polynomial, build_irrep
from .orbits import (
    Partition,
    associated_parabolic,
    good_position_representative,
    is_even_labels,
    is_even_partition,
    levi_dimension,
    weighted_dynkin,
)
from .qanalog import lusztig_q_analog, q_partition
from .rootsystem import build_root_system
from .verify import orbit_data, vanishing_certificate, verify_theorem


def _parse_ints(text: str):
    return [int(x) for x in text.split(",") if x.strip() != ""]


def _system_from(args):
    return build_root_system(args.type, args.rank)


def _weight_from(system, text: str, root_coords: bool):
    coords = _parse_ints(text)
    return system.weight(coords, basis="root" if root_coords else "fundamental")


def _parabolic_from(system, text):
    if not text:
        return system.borel()
    return system.parabolic([i - 1 for i in _parse_ints(text)])


def _add_system_args(parser):
    parser.add_argument("--type", required=True,
                        choices=["A", "B", "C", "D", "G2", "F4"])
    parser.add_argument("--rank", required=True, type=int)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--root-coords", action="store_true",
                        help="read weights in simple-root coordinates")


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_roots(args):
    system = _system_from(args)
    roots = [
        {"rc": list(r.rc), "fc": list(r.fc), "long": r.long, "norm_sq": r.norm_sq}
        for r in system.positive_roots
    ]
    payload = {
        "type": system.type_label,
        "rank": system.rank,
        "cartan": [list(row) for row in system.cartan_matrix],
        "positive_roots": roots,
        "rho": list(system.rho.fc),
        "weyl_order": len(system.weyl_group()),
    }
    lines = [
        f"root system {system.type_label}{system.rank}",
        "cartan matrix: " + "; ".join(str(list(r)) for r in system.cartan_matrix),
        f"positive roots ({len(roots)}):",
    ]
    for r in system.positive_roots:
        kind = "long" if r.long else "short"
        lines.append(f"  {list(r.rc)}  fc={list(r.fc)}  {kind}")
    lines.append(f"rho = {list(system.rho.fc)}")
    lines.append(f"|W| = {payload['weyl_order']}")
    _emit(args, payload, lines)
    return 0


def cmd_qanalog(args):
    system = _system_from(args)
    mu = _weight_from(system, args.mu, args.root_coords)
    lam = _weight_from(system, getattr(args, "lambda"), args.root_coords)
    parabolic = _parabolic_from(system, args.parabolic)
    poly = lusztig_q_analog(mu, lam, parabolic)
    payload = {
        "mu": list(mu.fc),
        "lambda": list(lam.fc),
        "parabolic": [i + 1 for i in parabolic.key],
        "m": poly.to_json(),
    }
    _emit(args, payload, [str(poly)])
    return 0


def cmd_partition(args):
    system = _system_from(args)
    gamma = _weight_from(system, args.gamma, args.root_coords)
    parabolic = _parabolic_from(system, args.parabolic)
    poly = q_partition(gamma, parabolic)
    payload = {
        "gamma": list(gamma.fc),
        "parabolic": [i + 1 for i in parabolic.key],
        "p": poly.to_json(),
    }
    _emit(args, payload, [str(poly)])
    return 0


def cmd_cht(args):
    system = _system_from(args)
    lam = _weight_from(system, args.weight, args.root_coords)
    plus = system.weight(system.dominant_weight_fc(lam.fc))
    low = star(lam)
    value = cht(lam)
    fast = cht_is_zero_fast(lam)
    payload = {
        "weight": list(lam.fc),
        "dominant_conjugate": list(plus.fc),
        "star": list(low.fc),
        "cht": value,
        "cht_zero_fast": fast,
    }
    lines = [
        f"weight     = {list(lam.fc)}",
        f"conjugate+ = {list(plus.fc)}",
        f"star       = {list(low.fc)}",
        f"cht        = {value}",
        f"fast cht=0 = {fast}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_orbit(args):
    system = _system_from(args)
    algebra = build_chevalley(system)
    if args.partition:
        partition = Partition(tuple(_parse_ints(args.partition)))
        labels = weighted_dynkin(partition)
        name = "[%s]" % ",".join(str(p) for p in partition)
        even = is_even_partition(partition)
    elif args.orbit:
        name, labels, _ = orbit_data(system, args.orbit, args.seed)
        even = is_even_labels(labels)
    else:
        print("orbit: need --partition or --orbit", file=sys.stderr)
        return 2
    parabolic = associated_parabolic(system, labels)
    payload = {
        "orbit": name,
        "labels": list(labels),
        "parabolic": [i + 1 for i in parabolic.key],
        "even": even,
    }
    lines = [
        f"orbit      = {name}",
        f"labels     = {list(labels)}",
        f"parabolic  = {[i + 1 for i in parabolic.key]}",
        f"even       = {even}",
    ]
    if even:
        rep = good_position_representative(algebra, labels, args.seed)
        support = sorted(
            algebra.index_data(i)[2].rc for i in rep.coeffs
        )
        centralizer = algebra.centralizer_dimension(rep)
        payload.update(
            {
                "representative_support": [list(rc) for rc in support],
                "centralizer_dimension": centralizer,
                "levi_dimension": levi_dimension(system, parabolic),
            }
        )
        lines += [
            f"rep support= {[list(rc) for rc in support]}",
            f"dim g^X    = {centralizer} (levi {levi_dimension(system, parabolic)})",
        ]
    _emit(args, payload, lines)
    return 0


def cmd_bk(args):
    system = _system_from(args)
    mu = _weight_from(system, args.mu, args.root_coords)
    lam = _weight_from(system, getattr(args, "lambda"), args.root_coords)
    if args.principal:
        spec = "principal"
    elif args.partition:
        spec = Partition(tuple(_parse_ints(args.partition)))
    elif args.orbit:
        spec = args.orbit
    else:
        print("bk: need --partition, --orbit, or --principal", file=sys.stderr)
        return 2
    name, labels, rep = orbit_data(system, spec, args.seed)
    parabolic = associated_parabolic(system, labels)
    module = build_irrep(system, mu)
    report = bk_jump_polynomial(module, rep, lam, parabolic)
    payload = {
        "orbit": name,
        "mu": list(mu.fc),
        "lambda": list(lam.fc),
        "parabolic": [i + 1 for i in parabolic.key],
        "module_dimension": module.dim,
        "dims": report.subspace_dims,
        "r": report.jump_polynomial.to_json(),
    }
    lines = [
        f"orbit     = {name}  parabolic = {[i + 1 for i in parabolic.key]}",
        f"module    = V{tuple(mu.fc)}, dimension {module.dim}",
        f"filtration dims = {report.subspace_dims}",
        f"r = {report.jump_polynomial}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_verify(args):
    with open(args.config) as handle:
        instances = json.load(handle)
    if not isinstance(instances, list):
        print("verify: config must be a JSON array", file=sys.stderr)
        return 2
    reports = []
    failed = False
    for inst in instances:
        system = build_root_system(inst["type"], int(inst["rank"]))
        mu = system.weight(inst["mu"])
        lam = system.weight(inst["lambda"])
        if "partition" in inst:
            spec = Partition(tuple(inst["partition"]))
        else:
            spec = inst["orbit"]
        report = verify_theorem(system, mu, lam, spec, seed=args.seed)
        reports.append(report)
        if report.certificate.certified and not report.equal:
            failed = True
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            status = "OK " if r.equal else ("?? " if not r.certificate.certified else "FAIL")
            print(
                f"{status} {r.system_key[0]}{r.system_key[1]} orbit={r.orbit} "
                f"mu={list(r.mu)} lambda={list(r.lam)} "
                f"cert={r.certificate.verdict} r={r.r} m={r.m}"
            )
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lieq",
        description="exact q-analogs of weight multiplicity and nilpotent "
        "jump polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="print root system data")
    _add_system_args(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("qanalog", help="q-analog of weight multiplicity")
    _add_system_args(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--parabolic", default="")
    p.set_defaults(func=cmd_qanalog)

    p = sub.add_parser("partition", help="graded partition count of a weight")
    _add_system_args(p)
    p.add_argument("--gamma", required=True)
    p.add_argument("--parabolic", default="")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("cht", help="combinatorial height of a weight")
    _add_system_args(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_cht)

    p = sub.add_parser("orbit", help="nilpotent orbit data")
    _add_system_args(p)
    p.add_argument("--partition", default="")
    p.add_argument("--orbit", default="")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("bk", help="jump polynomial of the kernel filtration")
    _add_system_args(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--partition", default="")
    p.add_argument("--orbit", default="")
    p.add_argument("--principal", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_bk)

    p = sub.add_parser("verify", help="check r = m on configured instances")
    p.add_argument("--config", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
