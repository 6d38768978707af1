"""Command-line front end.

Subcommands cover the library surface: factor, order, crt, cosets,
project, salc, ring, oracle, spectrum, simulate, got-check.  Data goes
to stdout (or --out); diagnostics go to stderr.  Exit codes: 0 on
success, 1 on domain errors (bad values, overflow, exhausted
attempts), 2 on usage errors.  Numeric output carries 15 significant
digits, JSON keys keep a fixed order, and a fixed argv and seed always
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys

import numpy as np

from .arithmetic import factorize, multiplicative_order
from .formatting import csv_text, sig15, table_text
from .groups import (
    BY_N,
    CyclicGroup,
    ExtendedGroupSpec,
    coset_partition,
    crt_residues,
    slice_coordinates,
    subgroup_decompose,
)
from .oracle import (
    oracle_eval,
    residue_spectrum,
    write_spectrum_csv,
)
from .representations import project, verify_great_orthogonality
from .ring import RingSpec, analytic_modes, write_modes_csv, write_salc_csv
from .rng import SplitMix64
from .shor import (
    MODE_PAPER_ORDER,
    MODE_POWER_OF_TWO,
    RegisterConfig,
    factor,
    measure_bottom,
    prepare_uniform,
    qft_distribution,
    sample_outcome,
    write_distribution_csv,
)

CONVENTION_NOTE = "element indices are 0-based; index 0 is the identity E"

_REGISTER_MODES = {"pow2": MODE_POWER_OF_TWO, "paper": MODE_PAPER_ORDER}


def _f15(x: float) -> float:
    return float(sig15(x))


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _delta(n: int) -> np.ndarray:
    f = np.zeros(n, dtype=np.complex128)
    f[0] = 1.0
    return f


# ---------------------------------------------------------------- handlers


def _cmd_order(args, parser):
    r = multiplicative_order(args.a, args.n)
    header = ["n", "a", "order"]
    row = [str(args.n), str(args.a), str(r)]
    if args.format == "json":
        return _json_text({"n": args.n, "a": args.a, "order": r}), 0
    if args.format == "csv":
        return csv_text(header, [row]), 0
    return table_text(header, [row]), 0


def _cmd_crt(args, parser):
    n = args.n
    fact = factorize(n)
    if not fact.is_squarefree:
        raise ValueError(f"subgroup expansion needs square-free n; {n} is not")
    group = CyclicGroup(n)
    primes = fact.primes
    gens = fact.multiples
    rows = []
    for k in range(n):
        g = group.element(k)
        comps = subgroup_decompose(g)
        residues = crt_residues(g)
        terms = [
            f"C{n}^{gen * c}" for gen, c in zip(gens, comps) if c != 0
        ]
        lhs = " ".join(terms) if terms else "E"
        rhs = f"C{n}^{k}" if k else "E"
        rows.append((k, residues, comps, f"{lhs} = {rhs}"))
    header = (
        ["k"]
        + [f"res_{b}" for b in primes]
        + [f"comp_{b}" for b in primes]
        + ["identity"]
    )
    text_rows = [
        [str(k)]
        + [str(r) for r in residues]
        + [str(c) for c in comps]
        + [identity]
        for k, residues, comps, identity in rows
    ]
    if args.format == "json":
        return (
            _json_text(
                {
                    "n": n,
                    "convention": CONVENTION_NOTE,
                    "primes": list(primes),
                    "generators": list(gens),
                    "rows": [
                        {
                            "k": k,
                            "residues": list(residues),
                            "components": list(comps),
                            "identity": identity,
                        }
                        for k, residues, comps, identity in rows
                    ],
                }
            ),
            0,
        )
    if args.format == "csv":
        return csv_text(header, text_rows), 0
    notes = [
        CONVENTION_NOTE,
        f"n = {n} = " + " * ".join(str(b) for b in primes)
        + "; generator of the order-" + "/".join(str(b) for b in primes)
        + " copies: " + ", ".join(str(g) for g in gens),
    ]
    return table_text(header, text_rows, notes=notes), 0


def _cmd_cosets(args, parser):
    group = CyclicGroup(args.n)
    gen = group.element(args.j)
    cosets = coset_partition(group, gen)
    rows = [
        [
            str(c.representative.index),
            str(len(c.members)),
            " ".join(str(m.index) for m in c.members),
        ]
        for c in cosets
    ]
    header = ["representative", "size", "members"]
    if args.format == "json":
        return (
            _json_text(
                {
                    "order": args.n,
                    "generator": gen.index,
                    "convention": CONVENTION_NOTE,
                    "cosets": [
                        {
                            "representative": c.representative.index,
                            "members": [m.index for m in c.members],
                        }
                        for c in cosets
                    ],
                }
            ),
            0,
        )
    if args.format == "csv":
        return csv_text(header, rows), 0
    notes = [CONVENTION_NOTE, f"cosets of <{gen.index}> in the cyclic group of order {args.n}"]
    return table_text(header, rows, notes=notes), 0


def _cmd_project(args, parser):
    n = args.n
    if not 0 <= args.j < n:
        raise ValueError("label must lie in [0, n)")
    p = project(args.j, _delta(n))
    rows = [
        [str(k), sig15(z.real), sig15(z.imag)] for k, z in enumerate(p)
    ]
    header = ["k", "re", "im"]
    if args.format == "json":
        return (
            _json_text(
                {
                    "order": n,
                    "j": args.j,
                    "values": [[_f15(z.real), _f15(z.imag)] for z in p],
                }
            ),
            0,
        )
    if args.format == "table":
        return table_text(header, rows, notes=[f"projection of the unit impulse at slice 0, label j = {args.j}"]), 0
    return csv_text(header, rows), 0


def _cmd_salc(args, parser):
    n = args.n
    labels = range(n) if args.j is None else [args.j]
    if args.j is not None and not 0 <= args.j < n:
        raise ValueError("label must lie in [0, n)")
    buf = io.StringIO()
    write_salc_csv(buf, n, _delta(n), labels=labels)
    text = buf.getvalue()
    if args.format == "csv":
        return text, 0
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    if args.format == "json":
        return (
            _json_text(
                {
                    "n": n,
                    "rows": [
                        {
                            "j": int(r[0]),
                            "site": int(r[1]),
                            "re": float(r[2]),
                            "im": float(r[3]),
                        }
                        for r in rows
                    ],
                }
            ),
            0,
        )
    return table_text(header, rows, notes=["projected impulse profile, unit norm per label"]), 0


def _cmd_ring(args, parser):
    spec = RingSpec(n_sites=args.n)
    buf = io.StringIO()
    write_modes_csv(buf, spec)
    text = buf.getvalue()
    if args.format == "csv":
        return text, 0
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    if args.format == "json":
        modes = analytic_modes(spec)
        return (
            _json_text(
                {
                    "n_sites": spec.n_sites,
                    "onsite": _f15(spec.onsite),
                    "hopping": _f15(spec.hopping),
                    "modes": [
                        {
                            "j": m.j,
                            "energy": _f15(m.energy),
                            "coefficients": [
                                [_f15(c.real), _f15(c.imag)]
                                for c in m.orbital.coefficients
                            ],
                        }
                        for m in modes
                    ],
                }
            ),
            0,
        )
    notes = [
        f"ring of {spec.n_sites} sites, onsite {sig15(spec.onsite)}, hopping {sig15(spec.hopping)}"
    ]
    return table_text(header, rows, notes=notes), 0


def _cmd_oracle(args, parser):
    spec = ExtendedGroupSpec.of(args.n, args.a)
    rows = []
    for x in range(args.len):
        i, j = slice_coordinates(x, spec, BY_N)
        label = oracle_eval(spec, x)
        rows.append(
            [str(x), str(i), str(j), str(label.alpha), str(label.beta)]
        )
    header = ["x", "i", "j", "alpha", "beta"]
    if args.format == "json":
        return (
            _json_text(
                {
                    "n": args.n,
                    "a": args.a,
                    "convention": CONVENTION_NOTE,
                    "rows": [
                        {
                            "x": int(r[0]),
                            "i": int(r[1]),
                            "j": int(r[2]),
                            "alpha": int(r[3]),
                            "beta": int(r[4]),
                        }
                        for r in rows
                    ],
                }
            ),
            0,
        )
    if args.format == "csv":
        return csv_text(header, rows), 0
    notes = [
        CONVENTION_NOTE,
        f"a**x = alpha*n + beta for n = {args.n}, a = {args.a}; (i, j): x = i + j*{args.a}",
    ]
    return table_text(header, rows, notes=notes), 0


def _cmd_spectrum(args, parser):
    spec = ExtendedGroupSpec.of(args.n, args.a)
    spectrum = residue_spectrum(spec, args.len, 1)
    if args.format == "csv":
        buf = io.StringIO()
        write_spectrum_csv(buf, spectrum)
        return buf.getvalue(), 0
    if args.format == "json":
        return (
            _json_text(
                {
                    "n": args.n,
                    "a": args.a,
                    "length": args.len,
                    "residue": 1,
                    "magnitude_squared": [
                        _f15(float(abs(z) ** 2)) for z in spectrum
                    ],
                }
            ),
            0,
        )
    rows = [
        [str(v), sig15(float(abs(z) ** 2))] for v, z in enumerate(spectrum)
    ]
    return (
        table_text(
            ["index", "magnitude_squared"],
            rows,
            notes=[f"indicator of residue 1 over x < {args.len}, unitary transform"],
        ),
        0,
    )


def _require_pow2_for_override(args, parser):
    if args.m is not None and args.register == "paper":
        parser.error("--m cannot be combined with --register paper")


def _cmd_simulate(args, parser):
    _require_pow2_for_override(args, parser)
    mode = _REGISTER_MODES[args.register]
    config = RegisterConfig.choose(args.n, args.a, mode, args.m)
    stream = SplitMix64(args.seed)
    state = prepare_uniform(config)
    w, collapsed = measure_bottom(state, rng=stream)
    dist = qft_distribution(collapsed)
    outcome = sample_outcome(dist, stream)
    print(
        f"mode={mode} m={config.m} order={state.order} residue={w} outcome={outcome}",
        file=sys.stderr,
    )
    if args.format == "json":
        return (
            _json_text(
                {
                    "n": args.n,
                    "a": args.a,
                    "mode": mode,
                    "register_size": config.m,
                    "order": state.order,
                    "residue": w,
                    "outcome": outcome,
                    "seed": args.seed,
                    "probabilities": [_f15(p) for p in dist.probabilities],
                }
            ),
            0,
        )
    buf = io.StringIO()
    write_distribution_csv(buf, dist)
    if args.format == "csv":
        return buf.getvalue(), 0
    lines = buf.getvalue().strip().split("\n")
    return (
        table_text(
            lines[0].split(","),
            [line.split(",") for line in lines[1:]],
            notes=[f"register {config.m}, measured residue {w}"],
        ),
        0,
    )


def _cmd_factor(args, parser):
    if args.format == "csv":
        parser.error("factor emits json or table output")
    _require_pow2_for_override(args, parser)
    mode = _REGISTER_MODES[args.register]
    report = factor(
        args.n,
        a=args.a,
        mode=mode,
        max_attempts=args.max_attempts,
        seed=args.seed,
        m_override=args.m,
    )
    if args.format == "table":
        rows = [
            [str(s.outcome), str(s.candidate_r), s.status]
            for s in report.samples
        ]
        head = [
            f"n = {report.n}",
            f"factors = {report.factors[0]} * {report.factors[1]}",
            f"base a = {report.a}, order r = {report.order}",
            f"mode {report.mode}, register {report.register_size}, "
            f"attempts {report.attempts}, seed {report.seed}",
        ]
        body = table_text(["outcome", "candidate_r", "status"], rows)
        return "\n".join(head) + "\n" + body, 0
    return report.to_json() + "\n", 0


def _cmd_got_check(args, parser):
    rep = verify_great_orthogonality(args.n, tol=args.tol)
    status = "PASS" if rep.passed else "FAIL"
    if args.format == "json":
        text = _json_text(
            {
                "order": args.n,
                "max_deviation": _f15(rep.max_deviation),
                "tolerance": _f15(rep.tolerance),
                "passed": rep.passed,
            }
        )
    elif args.format == "csv":
        text = csv_text(
            ["order", "max_deviation", "tolerance", "result"],
            [[str(args.n), sig15(rep.max_deviation), sig15(rep.tolerance), status]],
        )
    else:
        text = table_text(
            ["order", "max_deviation", "tolerance", "result"],
            [[str(args.n), sig15(rep.max_deviation), sig15(rep.tolerance), status]],
        )
    if not rep.passed:
        print(
            f"error: orthogonality deviation {sig15(rep.max_deviation)} exceeds "
            f"tolerance {sig15(rep.tolerance)}",
            file=sys.stderr,
        )
        return text, 1
    return text, 0


# ------------------------------------------------------------ parser setup


def _add_format(sp, default):
    sp.add_argument(
        "--format",
        choices=["json", "csv", "table"],
        default=default,
        help=f"output format (default {default})",
    )
    sp.add_argument("--out", default=None, help="write data to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primering",
        description="cyclic-group arithmetic, symmetry projections and exact period-finding simulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factor", help="factor n through the simulated circuit")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=int, default=None, help="base (random coprime when omitted)")
    sp.add_argument("--register", choices=["pow2", "paper"], default="pow2")
    sp.add_argument("--m", type=int, default=None, help="register size override (pow2 mode)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-attempts", dest="max_attempts", type=int, default=16)
    _add_format(sp, "json")
    sp.set_defaults(handler=_cmd_factor)

    sp = sub.add_parser("order", help="multiplicative order of a mod n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    _add_format(sp, "table")
    sp.set_defaults(handler=_cmd_order)

    sp = sub.add_parser("crt", help="prime-subgroup expansion of a square-free cyclic group")
    sp.add_argument("--n", type=int, required=True)
    _add_format(sp, "table")
    sp.set_defaults(handler=_cmd_crt)

    sp = sub.add_parser("cosets", help="cosets of the subgroup generated by index j")
    sp.add_argument("--n", type=int, required=True, help="group order")
    sp.add_argument("--j", type=int, required=True, help="generator index")
    _add_format(sp, "table")
    sp.set_defaults(handler=_cmd_cosets)

    sp = sub.add_parser("project", help="project the unit impulse onto irrep j")
    sp.add_argument("--n", type=int, required=True, help="group order")
    sp.add_argument("--j", type=int, required=True, help="irrep label")
    _add_format(sp, "csv")
    sp.set_defaults(handler=_cmd_project)

    sp = sub.add_parser("salc", help="symmetry-adapted combinations on a ring")
    sp.add_argument("--n", type=int, required=True, help="number of sites")
    sp.add_argument("--j", type=int, default=None, help="single label (default: all)")
    _add_format(sp, "csv")
    sp.set_defaults(handler=_cmd_salc)

    sp = sub.add_parser("ring", help="tight-binding ring modes (alpha = 0, t = -1)")
    sp.add_argument("--n", type=int, required=True, help="number of sites")
    _add_format(sp, "csv")
    sp.set_defaults(handler=_cmd_ring)

    sp = sub.add_parser("oracle", help="a**x = alpha*n + beta table with slice coordinates")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--len", type=int, required=True, help="number of rows")
    _add_format(sp, "table")
    sp.set_defaults(handler=_cmd_oracle)

    sp = sub.add_parser("spectrum", help="unitary transform of the residue-1 indicator")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--len", type=int, required=True, help="window length")
    _add_format(sp, "csv")
    sp.set_defaults(handler=_cmd_spectrum)

    sp = sub.add_parser("simulate", help="one circuit run: distribution after the transform")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--register", choices=["pow2", "paper"], default="pow2")
    sp.add_argument("--m", type=int, default=None, help="register size override (pow2 mode)")
    sp.add_argument("--seed", type=int, default=0)
    _add_format(sp, "csv")
    sp.set_defaults(handler=_cmd_simulate)

    sp = sub.add_parser("got-check", help="character-row orthogonality check")
    sp.add_argument("--n", type=int, required=True, help="group order")
    sp.add_argument("--tol", type=float, default=1e-10)
    _add_format(sp, "table")
    sp.set_defaults(handler=_cmd_got_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.handler(args, parser)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        return code
    try:
        sys.stdout.write(text)
        sys.stdout.flush()
    except BrokenPipeError:
        # consumer closed the pipe (e.g. | head); suppress the shutdown
        # flush as well and report the conventional failure code
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
