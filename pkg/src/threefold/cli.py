"""Command-line front end: classification and verification suites.

Verbs:
  classify FILE     classify every representation in a group file
  su2               spin-j table: indicator quadrature vs structure maps
  jordan            Jordan-algebra law and state-machinery suite
  tensor-table      the 3x3 kind multiplication table, verified
  functors          scalar-conversion functor laws on random operators
  spectrum          symmetric-spectrum checks on random generators

Every verb emits a report; with --json the report is the single JSON object
{"command", "pass", "items", "elapsed_ms"}.  Identical inputs and seed give
byte-identical JSON except for elapsed_ms.  Exit codes: 0 all checks pass,
1 a check failed, 2 usage or input-parsing error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .errors import (
    InternalInconsistencyError,
    ParseError,
    PreconditionError,
    UnsupportedError,
    ValidationError,
)
from .hilbert import KMatrix, eigh_complex
from .jordan import (
    check_jordan_identity,
    cone_margin,
    dual_cone_margin,
    from_coords,
    is_positive,
    jordan_product,
    max_ignorance,
    parse_kind,
    random_element,
    random_positive,
    state_eval,
    trace,
    trace_inner,
    unit,
)
from .representations import (
    RepKind,
    classify,
    commutant_dimension,
    fs_indicator_finite,
    invariant_bilinear_form,
    load_rep_file,
    structure_map,
)
from .scalars import COMPLEXES, QUATERNIONS, REALS
from .spectra import exp_group, quaternionic_obstruction_witness, split_iA, symmetric_spectrum_check
from .structures import (
    KIND_SIGN,
    AntilinearMap,
    classify_tensor,
    complexify,
    quaternify,
    quaternify_real,
    tensor_antilinear,
    underlying_complex,
    underlying_real,
    underlying_real_quat,
)
from .su2 import classify_spin, time_reversal_check

__all__ = ["main"]


class UsageError(Exception):
    pass


def _fmt(value):
    if isinstance(value, float):
        rounded = round(value, 6)
        if rounded == 0.0:
            rounded = 0.0  # avoid displaying -0.000000
        return f"{rounded:.6f}"
    return str(value)


def _print_items(items):
    for item in items:
        fields = " ".join(
            f"{k}={_fmt(v)}" for k, v in item.items() if k not in ("label", "pass")
        )
        status = "ok" if item.get("pass", True) else "FAIL"
        print(f"{item['label']}: {fields} [{status}]")


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def cmd_classify(args):
    group, reps = load_rep_file(args.file)
    items = []
    for name, rep in reps:
        fs = fs_indicator_finite(rep)
        item = {
            "label": name,
            "dim": int(rep.dim),
            "commutant": int(commutant_dimension(rep)),
            "fs": float(fs),
        }
        if item["commutant"] != 1:
            item["kind"] = "reducible"
            item["pass"] = True
            items.append(item)
            continue
        kind = classify(rep)
        item["kind"] = str(kind)
        if kind is not RepKind.COMPLEX:
            _, sign = structure_map(rep, invariant_bilinear_form(rep))
            item["j_square"] = int(sign)
            item["pass"] = sign == KIND_SIGN[kind]
        else:
            item["j_square"] = None
            item["pass"] = abs(fs) < 1e-8
        items.append(item)
    return all(i["pass"] for i in items), items


# ---------------------------------------------------------------------------
# su2
# ---------------------------------------------------------------------------

def cmd_su2(args):
    if args.j is not None:
        twice_values = [int(round(2 * args.j))]
        if abs(2 * args.j - twice_values[0]) > 1e-12:
            raise UsageError(f"spin must be a half-integer, got {args.j}")
    else:
        top = int(round(2 * args.max_j))
        if abs(2 * args.max_j - top) > 1e-12 or top < 0:
            raise UsageError(f"--max-j must be a nonnegative half-integer, got {args.max_j}")
        twice_values = list(range(top + 1))
    items = []
    for twice in twice_values:
        j = twice / 2.0
        result = classify_spin(j, nodes=args.points, seed=args.seed)
        reversal = time_reversal_check(j, seed=args.seed)
        expected_sign = 1 if twice % 2 == 0 else -1
        ok = (
            abs(result.fs - expected_sign) < 1e-6
            and result.j_square_sign == expected_sign
            and reversal.anticommutation_defect < args.tol
            and reversal.expectation_flip_defect < args.tol
            and reversal.rotation_2pi_phase == expected_sign
        )
        items.append(
            {
                "label": f"j={j:g}",
                "dim": twice + 1,
                "fs": float(result.fs),
                "kind": str(result.kind),
                "j_square": int(result.j_square_sign),
                "time_reversal_defect": float(reversal.anticommutation_defect),
                "rotation_2pi_phase": int(reversal.rotation_2pi_phase),
                "pass": ok,
            }
        )
    return all(i["pass"] for i in items), items


# ---------------------------------------------------------------------------
# jordan
# ---------------------------------------------------------------------------

def _unit_sample(kind, rng):
    v = rng.standard_normal(kind.dim)
    return from_coords(kind, v / np.linalg.norm(v))


def cmd_jordan(args):
    try:
        kind = parse_kind(args.algebra)
    except ValidationError as err:
        raise UsageError(str(err))
    if kind.family == "hermitian" and kind.scalar_dim == 8 and kind.n != 3:
        raise UsageError("octonionic hermitian matrices go only up to 3x3")
    rng = np.random.default_rng(args.seed)
    samples = args.samples
    items = []

    identity_max = 0.0
    power_max = 0.0
    reality_min = np.inf
    symmetry_max = 0.0
    for _ in range(samples):
        a = _unit_sample(kind, rng)
        b = _unit_sample(kind, rng)
        identity_max = max(identity_max, check_jordan_identity(a, b))
        sq = jordan_product(a, a)
        power = (jordan_product(sq, sq) - jordan_product(a, jordan_product(a, sq))).norm()
        power_max = max(power_max, power)
        reality_min = min(reality_min, trace_inner(a, a))
        symmetry_max = max(symmetry_max, abs(trace_inner(a, b) - trace_inner(b, a)))
    items.append({"label": "jordan_identity_max", "value": identity_max, "pass": identity_max < 1e-9})
    items.append({"label": "power_associativity_max", "value": power_max, "pass": power_max < 1e-10})
    items.append({"label": "formal_reality_min", "value": reality_min, "pass": reality_min > 0.0})
    items.append({"label": "trace_symmetry_max", "value": symmetry_max, "pass": symmetry_max < 1e-12})

    one = unit(kind)
    ed = trace(one)
    items.append({"label": "unit_trace", "value": ed, "pass": ed == float(kind.rank)})

    rho = max_ignorance(kind)
    eval_max = 0.0
    for _ in range(min(samples, 25)):
        a = _unit_sample(kind, rng)
        eval_max = max(eval_max, abs(state_eval(rho, a) - trace(a) / ed))
    items.append({"label": "max_ignorance_eval_max", "value": eval_max, "pass": eval_max < 1e-12})

    supports_margin = not (kind.family == "hermitian" and kind.scalar_dim == 8)
    if supports_margin:
        squares_ok = True
        for _ in range(min(samples, 50)):
            a = _unit_sample(kind, rng)
            squares_ok = squares_ok and cone_margin(jordan_product(a, a)) > -1e-9
        items.append({"label": "squares_in_cone", "value": float(squares_ok), "pass": squares_ok})
        margin = dual_cone_margin(random_positive(kind, rng), min(samples, 100), seed=args.seed + 1)
        items.append({"label": "dual_cone_margin", "value": margin, "pass": margin > 0.0})
    if kind.family == "spin":
        agree = True
        for _ in range(min(samples, 50)):
            a = random_element(kind, rng)
            direct = a.t > 0.0 and a.t * a.t - float(a.x @ a.x) > 0.0
            agree = agree and (is_positive(a, tol=0.0) == direct)
        items.append({"label": "lightcone_agreement", "value": float(agree), "pass": agree})
    if kind.label == "hC:2":
        expected = np.zeros((2, 2, 2))
        expected[0, 0, 0] = expected[1, 1, 0] = 0.5
        dev = float(np.abs(rho.element.data - expected).max())
        items.append({"label": "max_ignorance_is_half_identity", "value": dev, "pass": dev == 0.0})

    return all(i["pass"] for i in items), items


# ---------------------------------------------------------------------------
# tensor-table
# ---------------------------------------------------------------------------

def cmd_tensor_table(args):
    eps = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)
    model = {
        RepKind.REAL: AntilinearMap(np.eye(2, dtype=complex)),
        RepKind.QUATERNIONIC: AntilinearMap(eps),
    }
    items = []
    for left in RepKind:
        for right in RepKind:
            result = classify_tensor(left, right)
            item = {"label": f"{left} (x) {right}", "result": str(result), "pass": True}
            if left in model and right in model:
                combined = tensor_antilinear(model[left], model[right])
                square = combined.square()
                sign = int(round(square[0, 0].real))
                exact = np.array_equal(square, sign * np.eye(4, dtype=complex))
                item["constructed_sign"] = sign
                item["pass"] = exact and sign == KIND_SIGN[left] * KIND_SIGN[right]
            items.append(item)
    return all(i["pass"] for i in items), items


# ---------------------------------------------------------------------------
# functors
# ---------------------------------------------------------------------------

def _structure_defect(conversion, pushed):
    defects = []
    for attr in ("j", "k"):
        m = getattr(conversion, attr, None)
        if m is None:
            continue
        if isinstance(m, AntilinearMap):
            defects.append(float(m.commutation_defect(pushed.to_complex())))
        else:
            defects.append((m @ pushed - pushed @ m).norm())
    return max(defects)


def cmd_functors(args):
    n = args.dim
    conversions = [
        (complexify(n), REALS),
        (underlying_real(n), COMPLEXES),
        (underlying_complex(n), QUATERNIONS),
        (quaternify(n), COMPLEXES),
        (underlying_real_quat(n), QUATERNIONS),
        (quaternify_real(n), REALS),
    ]
    rng = np.random.default_rng(args.seed)
    items = []
    for conv, system in conversions:
        s = KMatrix(system, rng.standard_normal((n, n, system.dim)))
        t = KMatrix(system, rng.standard_normal((n, n, system.dim)))
        ps, pt = conv.push(s), conv.push(t)
        scale = max(1.0, s.norm() * t.norm())
        hom = (conv.push(s @ t) - ps @ pt).norm() / scale
        dagger = (conv.push(s.adjoint()) - ps.adjoint()).norm() / max(1.0, s.norm())
        roundtrip = (conv.pull(ps) - s).norm() / max(1.0, s.norm())
        commute = _structure_defect(conv, ps) / max(1.0, s.norm())
        ok = max(hom, dagger, roundtrip, commute) < args.tol
        items.append(
            {
                "label": conv.label,
                "dim_in": int(conv.dim_in),
                "dim_out": int(conv.dim_out),
                "homomorphism_defect": hom,
                "dagger_defect": dagger,
                "roundtrip_defect": roundtrip,
                "structure_defect": commute,
                "pass": ok,
            }
        )
    return all(i["pass"] for i in items), items


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def _random_skew(system, n, rng):
    x = KMatrix(system, rng.standard_normal((n, n, system.dim)))
    return x - x.adjoint()


def cmd_spectrum(args):
    systems = {"R": REALS, "C": COMPLEXES, "H": QUATERNIONS}
    if args.system not in systems:
        raise UsageError(f"unknown system {args.system!r}; pick R, C or H")
    system = systems[args.system]
    n = args.dim
    rng = np.random.default_rng(args.seed)
    items = []
    for trial in range(args.trials):
        s = _random_skew(system, n, rng)
        scale = max(1.0, s.norm())
        if system is COMPLEXES:
            w, _ = eigh_complex(split_iA(s))
            t1, t2 = rng.uniform(-1.0, 1.0, size=2)
            law = (exp_group(s, t1 + t2) - exp_group(s, t1) @ exp_group(s, t2)).norm()
            witnessed = None
        else:
            conv = complexify(n) if system is REALS else underlying_complex(n)
            report = symmetric_spectrum_check(conv.push(s), conv, tol=args.tol)
            w = report.eigenvalues
            law = report.pairing_defect
            witnessed = report.eigenvector_defect
        item = {
            "label": f"trial_{trial}",
            "eigenvalues": [float(x) for x in w],
        }
        if system is COMPLEXES:
            item["group_law_defect"] = float(law)
            item["pass"] = law < args.tol * scale
        else:
            item["pairing_defect"] = float(law)
            item["eigenvector_defect"] = float(witnessed)
            item["pass"] = max(law, witnessed) < args.tol * scale
        items.append(item)
    if system is QUATERNIONS:
        witness = quaternionic_obstruction_witness(_random_skew(system, n, rng), seed=args.seed)
        items.append(
            {
                "label": "obstruction_witness",
                "defect": float(witness.defect),
                "threshold": float(witness.threshold),
                "pass": witness.found,
            }
        )
    return all(i["pass"] for i in items), items


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="threefold",
        description="Classification suites for real, complex and quaternionic structure.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    parser.add_argument("--tol", type=float, default=1e-8, help="residual tolerance")
    # accepted after the subcommand too; SUPPRESS keeps the subparser from
    # clobbering a value already parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("classify", help="classify representations from a group file")
    p.add_argument("file", help="JSON file with a multiplication table and representations")
    p.set_defaults(func=cmd_classify)

    p = add_parser("su2", help="spin-j indicator and time-reversal table")
    p.add_argument("--j", type=float, default=None, help="a single spin")
    p.add_argument("--max-j", type=float, default=5.0, help="run j = 0, 1/2, ..., max-j")
    p.add_argument("--points", type=int, default=2001, help="quadrature node count")
    p.set_defaults(func=cmd_su2)

    p = add_parser("jordan", help="Jordan algebra law/state suite")
    p.add_argument("--algebra", required=True, help="hR:n, hC:n, hH:n, hO:3 or spin:n")
    p.add_argument("--samples", type=int, default=100, help="random sample count")
    p.set_defaults(func=cmd_jordan)

    p = add_parser("tensor-table", help="kind multiplication table with verified signs")
    p.set_defaults(func=cmd_tensor_table)

    p = add_parser("functors", help="scalar-conversion functor laws")
    p.add_argument("--dim", type=int, default=3, help="source dimension")
    p.set_defaults(func=cmd_functors)

    p = add_parser("spectrum", help="spectrum symmetry on random generators")
    p.add_argument("--system", default="H", help="R, C or H")
    p.add_argument("--dim", type=int, default=3, help="matrix size")
    p.add_argument("--trials", type=int, default=5, help="number of random generators")
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        passed, items = args.func(args)
    except (UsageError, ParseError, ValidationError, UnsupportedError, PreconditionError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as err:
        print(f"inconsistency: {err}", file=sys.stderr)
        return 1
    elapsed_ms = int(round(1000.0 * (time.perf_counter() - start)))
    report = {
        "command": args.command,
        "pass": bool(passed),
        "items": items,
        "elapsed_ms": elapsed_ms,
    }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_items(items)
        print("PASS" if passed else "FAIL")
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
