"""JSON command-line front end.

Every subcommand reads one JSON payload (``--input FILE`` or stdin) and writes
one JSON object to stdout. Exact rationals travel as ``"num/den"`` strings;
``decimal`` fields are advisory renderings only.

Exit codes: 0 success, 2 invalid input, 3 undecided (``unknown``) verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks
from .classify import Isomorphic, NotIsomorphic, isomorphic
from .exact import PAdicInt, PAdicNumber, PAdicRational, Phase, Real, SolenoidError, Symbol, check_prime
from .ktheory import (
    K0Element,
    k0_add,
    k0_trace,
    k1_descriptor,
    range_contains,
    schur_cohomologous,
    schur_integer_difference,
    trace_range,
)
from .morita import LatticeSpec, induced_alpha, perp, perp_beta, trace_scaling_check, winding_pi
from .solenoid import Full, is_simple, psi, symmetrizer, trace_count
from .xi import XiSequence, from_values, periodicity_report

EXIT_OK, EXIT_INVALID, EXIT_UNKNOWN = 0, 2, 3


class InvalidInput(SolenoidError):
    pass


# decoding


def _require(obj: dict, key: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"missing field {key!r}")
    return obj[key]


def parse_fraction(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InvalidInput(f"expected an exact rational (integer or 'num/den' string), got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"cannot parse rational {value!r}") from exc


def parse_real(value) -> Real:
    """A rational, or {"symbol", "approx"?, "terms"?} with terms {power: coeff}
    (default: the symbol itself), or the encoding produced by :func:`enc_real`."""
    if not isinstance(value, dict):
        return Real.of(parse_fraction(value))
    name = value.get("symbol")
    if name is None:
        return Real.of(parse_fraction(value.get("q0", 0)))
    symbol = Symbol.from_decimal(name, value.get("approx"))
    if "terms" in value:
        terms = {int(e): parse_fraction(c) for e, c in value["terms"].items()}
    else:
        terms = {1: Fraction(1)}
    for key, e in (("q0", 0), ("q1", 1)):
        if key in value:
            terms[e] = parse_fraction(value[key])
    return Real(tuple(terms.items()), symbol)


def parse_word(p: int, value) -> PAdicInt:
    pre = value.get("pre", []) if isinstance(value, dict) else None
    per = value.get("per", [0]) if isinstance(value, dict) else None
    if pre is None:
        raise InvalidInput("a digit word is {'pre': [...], 'per': [...]}")
    return PAdicInt(p, tuple(int(d) for d in pre), tuple(int(d) for d in per))


def parse_padic(p: int, value) -> PAdicNumber:
    if isinstance(value, dict):
        return PAdicNumber(parse_word(p, value), int(value.get("valuation", 0)))
    return PAdicNumber.from_fraction(p, parse_fraction(value))


def parse_prime(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"p must be an integer, got {value!r}")
    return check_prime(value)


def parse_xi(value) -> XiSequence:
    p = parse_prime(_require(value, "p"))
    if "values" in value:
        return from_values(p, [parse_real(v) for v in value["values"]], value.get("tail", "repeat"),
                           value.get("period"))
    alpha0 = parse_real(_require(value, "alpha0"))
    return XiSequence(p, alpha0, parse_word(p, value.get("digits", {})))


def parse_pair(p: int, value):
    if not isinstance(value, list) or len(value) != 2:
        raise InvalidInput("a group element is a list of two rationals")
    return tuple(PAdicRational.from_fraction(p, parse_fraction(v)) for v in value)


def parse_k0(p: int, value) -> K0Element:
    return K0Element(int(_require(value, "z")), PAdicRational.from_fraction(p, parse_fraction(_require(value, "r"))))


def parse_spec(value) -> LatticeSpec:
    p = parse_prime(_require(value, "p"))
    return LatticeSpec(parse_padic(p, _require(value, "x")), parse_real(_require(value, "theta")))


# encoding


def enc_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def enc_real(x) -> dict:
    real = x.real if isinstance(x, Phase) else Real.of(x)
    out = {
        "q0": enc_fraction(real.const),
        "q1": enc_fraction(real.coeff(1)),
        "symbol": real.symbol.name if real.symbol else None,
    }
    if real.symbol is not None:
        out["approx"] = None if real.symbol.approx is None else _decimal_text(real.symbol)
    extra = {str(e): enc_fraction(c) for e, c in real.terms if e not in (0, 1)}
    if extra:
        out["terms"] = extra
    approx = real.approx()
    out["decimal"] = None if approx is None else repr(approx)
    return out


def enc_word(w: PAdicInt) -> dict:
    return {"pre": list(w.pre), "per": list(w.per)}


def enc_padic(x: PAdicNumber) -> dict:
    return {"valuation": x.valuation, **enc_word(x.unit), "value": enc_fraction(x.to_fraction())}


def enc_xi(alpha: XiSequence) -> dict:
    a0 = alpha.alpha0
    if a0.is_rational:
        alpha0 = enc_fraction(a0.const)
    else:
        sym = a0.symbol
        alpha0 = {
            "symbol": sym.name,
            "approx": None if sym.approx is None else _decimal_text(sym),
            "terms": {str(e): enc_fraction(c) for e, c in a0.terms},
        }
    return {"p": alpha.p, "alpha0": alpha0, "digits": enc_word(alpha.digits)}


def _decimal_text(sym: Symbol) -> str:
    digits = len(str(sym.radius.denominator)) - 1
    sign = "-" if sym.approx < 0 else ""
    whole, rest = divmod(abs(sym.approx.numerator) * 10**digits // sym.approx.denominator, 10**digits)
    return f"{sign}{whole}.{rest:0{digits}d}" if digits else f"{sign}{whole}"


def enc_k0(a: K0Element) -> dict:
    return {"z": a.z, "r": enc_fraction(a.r.to_fraction())}


def enc_range(alpha: XiSequence) -> dict:
    R = trace_range(alpha)
    return {"kind": R.kind, "p": R.p, "s": R.s, "range": str(R)}


# commands


def _alpha_of(payload):
    return parse_xi(payload["alpha"] if isinstance(payload, dict) and "alpha" in payload else payload)


def cmd_describe(payload, args):
    alpha = _alpha_of(payload)
    depth = args.depth if args.depth is not None else max(12, len(alpha.pre) + len(alpha.per))
    depth = max(depth, len(alpha.pre) + len(alpha.per))
    sym = symmetrizer(alpha)
    return {
        **enc_xi(alpha),
        "values": [enc_real(alpha.real_at(n)) for n in range(depth + 1)],
        "reparse": {"tail": "period", "period": len(alpha.per)},
        "periodicity": periodicity_report(alpha),
        "simple": is_simple(alpha),
        "symmetrizer": sym.describe(alpha.p) if isinstance(sym, Full) else str(sym),
        "trace": trace_count(alpha).value,
        "trace_range": enc_range(alpha),
        "k1": str(k1_descriptor(alpha)),
    }


def cmd_simplicity(payload, args):
    return {"simple": is_simple(_alpha_of(payload))}


def cmd_symmetrizer(payload, args):
    alpha = _alpha_of(payload)
    sym = symmetrizer(alpha)
    if isinstance(sym, Full):
        return {"symmetrizer": sym.describe(alpha.p), "b": sym.b}
    return {"symmetrizer": str(sym), "b": None}


def cmd_psi(payload, args):
    alpha = _alpha_of(payload)
    g1 = parse_pair(alpha.p, _require(payload, "g1"))
    g2 = parse_pair(alpha.p, _require(payload, "g2"))
    return {"phase": enc_real(psi(alpha, g1, g2))}


def cmd_k0_add(payload, args):
    alpha = _alpha_of(payload)
    a = parse_k0(alpha.p, _require(payload, "a"))
    b = parse_k0(alpha.p, _require(payload, "b"))
    total = k0_add(alpha.digits, a, b)
    return {"result": enc_k0(total), "trace": enc_real(k0_trace(alpha, total))}


def cmd_k0_trace(payload, args):
    alpha = _alpha_of(payload)
    return {"trace": enc_real(k0_trace(alpha, parse_k0(alpha.p, _require(payload, "a"))))}


def cmd_trace_range(payload, args):
    return enc_range(_alpha_of(payload))


def cmd_range_contains(payload, args):
    alpha = _alpha_of(payload)
    gamma = parse_real(_require(payload, "gamma"))
    return {"contains": range_contains(trace_range(alpha), gamma)}


def cmd_schur(payload, args):
    p = parse_prime(_require(payload, "p"))
    J = parse_word(p, _require(payload, "J"))
    K = parse_word(p, _require(payload, "K"))
    return {"cohomologous": schur_cohomologous(J, K), "difference": schur_integer_difference(J, K)}


def cmd_classify(payload, args):
    verdict = isomorphic(parse_xi(_require(payload, "alpha")), parse_xi(_require(payload, "beta")))
    if isinstance(verdict, Isomorphic):
        return {"verdict": "isomorphic", "offsets": [verdict.offset_a, verdict.offset_b],
                "reflected": verdict.reflected}
    if isinstance(verdict, NotIsomorphic):
        return {"verdict": "not-isomorphic", "reason": verdict.reason}
    return {"verdict": "unknown", "reason": verdict.reason}


def _with_values(alpha: XiSequence, depth: int) -> dict:
    return {"alpha": enc_xi(alpha), "values": [enc_real(alpha.real_at(n)) for n in range(depth + 1)]}


def cmd_morita_alpha(payload, args):
    return _with_values(induced_alpha(parse_spec(payload)), args.depth or 6)


def cmd_morita_perp(payload, args):
    ps = perp(parse_spec(payload))
    return {"x_inv": enc_padic(ps.x_inv), "theta": enc_real(ps.theta)}


def cmd_morita_beta(payload, args):
    return _with_values(perp_beta(parse_spec(payload)), args.depth or 6)


def cmd_scaling_check(payload, args):
    theta = parse_real(_require(payload, "theta"))
    if "alpha" in payload:
        alpha, beta = parse_xi(payload["alpha"]), parse_xi(_require(payload, "beta"))
    else:
        spec = parse_spec(payload)
        alpha, beta = induced_alpha(spec), perp_beta(spec)
    report = trace_scaling_check(alpha, beta, theta, depth=args.depth or 8)
    return {
        "range_alpha": enc_range(alpha),
        "range_beta": enc_range(beta),
        "candidates": [enc_real(c) for c in report.candidates],
        "matches": [enc_real(c) for c in report.matches],
        "relation_found": report.relation_found,
        "theta_direction_holds": report.theta_direction_holds,
        "method": report.method,
        "depth": report.depth,
    }


def cmd_cocycle_test(payload, args):
    payload = payload or {}
    primes = payload.get("p", [2, 3, 5, 7])
    primes = [parse_prime(p) for p in (primes if isinstance(primes, list) else [primes])]
    samples = int(payload.get("samples", checks.DEFAULT_SAMPLES))
    max_exp = int(payload.get("max_exp", checks.DEFAULT_MAX_EXP))
    suites = []
    for p in primes:
        for symbolic in (False, True):
            suites.append({"suite": "psi", **checks.psi_cocycle_suite(p, samples, args.seed, symbolic, max_exp)})
        suites.append({"suite": "xi", **checks.xi_suite(p, samples, args.seed, max_exp)})
    failures = sum(s["failures"] for s in suites)
    return {"seed": args.seed, "suites": suites, "total_failures": failures}


def cmd_pi_check(payload, args):
    p = parse_prime(_require(payload, "p"))
    gamma = parse_padic(p, _require(payload, "gamma"))
    t = parse_real(payload.get("t", 0))
    depth = args.depth if args.depth is not None else int(payload.get("depth", 12))
    point = winding_pi(gamma, t, depth)
    return {
        "p": p,
        "phases": [enc_real(ph) for ph in point.phases],
        "identity": all(ph.is_zero() for ph in point.phases),
    }


COMMANDS = {
    "describe": cmd_describe,
    "simplicity": cmd_simplicity,
    "symmetrizer": cmd_symmetrizer,
    "psi": cmd_psi,
    "k0-add": cmd_k0_add,
    "k0-trace": cmd_k0_trace,
    "trace-range": cmd_trace_range,
    "range-contains": cmd_range_contains,
    "schur-cohomologous": cmd_schur,
    "classify": cmd_classify,
    "morita-alpha": cmd_morita_alpha,
    "morita-perp": cmd_morita_perp,
    "morita-beta": cmd_morita_beta,
    "scaling-check": cmd_scaling_check,
    "cocycle-test": cmd_cocycle_test,
    "pi-check": cmd_pi_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncsolenoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--input", help="JSON payload file (default: stdin)")
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--depth", type=int, default=None)
        cmd.add_argument("--pretty", action="store_true")
        if name == "classify":
            cmd.add_argument("files", nargs="*", help="alpha and beta as two JSON files")
    return parser


def _load(path: str | None):
    text = open(path, encoding="utf-8").read() if path else sys.stdin.read()
    return json.loads(text) if text.strip() else None


def _payload(args):
    if args.command == "classify" and args.files:
        if len(args.files) != 2:
            raise InvalidInput("classify takes exactly two sequence files")
        return {"alpha": _load(args.files[0]), "beta": _load(args.files[1])}
    payload = _load(args.input)
    if payload is None and args.command != "cocycle-test":
        raise InvalidInput("empty payload")
    return payload


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    indent = 2 if args.pretty else None
    try:
        result = COMMANDS[args.command](_payload(args), args)
    except (SolenoidError, ValueError, KeyError, TypeError, ZeroDivisionError, OSError) as exc:
        # json.JSONDecodeError is a ValueError
        message = str(exc) or type(exc).__name__
        print(json.dumps({"error": message, "type": type(exc).__name__}, indent=indent))
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INVALID
    print(json.dumps(result, indent=indent, ensure_ascii=False))
    return EXIT_UNKNOWN if result.get("verdict") == "unknown" else EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))
