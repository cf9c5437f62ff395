"""Command-line interface.

Every command prints JSON on stdout by default (``--format text`` gives a
readable rendering with symbolic monomials) and diagnostics on stderr.
Exit status: 0 success, 1 a checked property is false, 2 invalid input.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys

from . import __version__
from .arl import ClosedFormWitness, check_arl_criterion, check_arl_definition
from .errors import ArlError, NotUnimodalError
from .froberg import FroebergSpec, classify_tail, froberg_to_ideal, froberg_values, normalize
from .hilbert import hilbert_report
from .ideal import (
    INF,
    MonomialIdeal,
    enumerate_index_sets,
    f_eval,
    is_strongly_stable,
    last_generator,
    reconstruct_generators,
    strong_stability_witness,
)
from .monomial import format_monomial, parse_monomial
from .sequences import HilbertSeq, is_unimodal_at_each_tail, parse_sequence, tail_analysis
from .synthesis import synthesize


class _PropertyFalse(Exception):
    """Carries a report whose checked property failed (exit 1)."""

    def __init__(self, payload):
        super().__init__()
        self.payload = payload


def _num(v):
    return "inf" if v == INF else v


def _read_json(source: str, stdin: str | None):
    if source == "-":
        text = stdin if stdin is not None else sys.stdin.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArlError(f"input is not valid JSON: {exc}") from exc


def _load_ideal(args, stdin) -> MonomialIdeal:
    if not args.ideal:
        raise ArlError("--ideal <file|-> is required")
    data = _read_json(args.ideal, stdin)
    if not isinstance(data, dict) or "n" not in data:
        raise ArlError('ideal JSON must look like {"n": 3, "generators": [[...], ...]}')
    return MonomialIdeal.from_json(data)


def _load_sequence(args, stdin) -> HilbertSeq:
    if args.sequence == "-":
        data = _read_json("-", stdin)
        if not isinstance(data, dict):
            raise ArlError('sequence JSON must look like {"prefix": [...], "tail": {...}}')
        return HilbertSeq.from_json(data)
    if args.sequence:
        return parse_sequence(args.sequence, args.tail)
    raise ArlError("--sequence <csv|-> is required")


def _spec(args) -> FroebergSpec:
    if args.n is None:
        raise ArlError("--n is required")
    degrees = ()
    if args.degrees:
        try:
            degrees = tuple(int(d) for d in args.degrees.split(",") if d.strip())
        except ValueError as exc:
            raise ArlError(f"cannot read degrees {args.degrees!r}") from exc
    return FroebergSpec(args.n, degrees)


# ---- commands -------------------------------------------------------------


def _definition_json(verdict):
    if verdict.witness is None:
        return None
    m, n = verdict.witness
    return {"M": list(m), "N": list(n)}


def _criterion_json(report):
    w = report.witness
    if w is None:
        return None
    if isinstance(w, ClosedFormWitness):
        return {"monomial": list(w.monomial), "is_generator": w.is_generator}
    return {
        "i": w.i,
        "alpha": list(w.alpha),
        "beta": list(w.beta),
        "alpha_value": _num(w.alpha_value),
        "beta_value": _num(w.beta_value),
    }


def cmd_hilbert(args, stdin):
    ideal = _load_ideal(args, stdin)
    return hilbert_report(ideal, args.max_degree).to_json()


def cmd_check(args, stdin):
    ideal = _load_ideal(args, stdin)
    out = {"is_arl": None, "method": args.mode, "witness": None,
           "strongly_stable": is_strongly_stable(ideal)}
    if args.mode == "definition":
        v = check_arl_definition(ideal)
        out["is_arl"], out["witness"] = v.is_arl, _definition_json(v)
    elif args.mode == "criterion":
        r = check_arl_criterion(ideal)
        out["is_arl"], out["witness"] = r.is_arl, _criterion_json(r)
    else:
        v = check_arl_definition(ideal)
        r = check_arl_criterion(ideal)
        if v.is_arl != r.is_arl:
            print("warning: definition and criterion disagree", file=sys.stderr)
        out["is_arl"] = v.is_arl and r.is_arl
        out["definition"] = v.is_arl
        out["criterion"] = r.is_arl
        if not out["is_arl"]:
            out["witness"] = {"definition": _definition_json(v), "criterion": _criterion_json(r)}
    if not out["is_arl"]:
        raise _PropertyFalse(out)
    return out


def cmd_gens(args, stdin):
    ideal = _load_ideal(args, stdin)
    out = {"ideal": ideal.to_json(), "strongly_stable": is_strongly_stable(ideal)}
    if ideal.is_zero or ideal.is_unit:
        out.update(last_generator=None, f1=None, index_sets=None, reconstructs=True)
        return out
    last = last_generator(ideal)
    out["last_generator"] = {"monomial": list(last.monomial), "mu": last.mu}
    out["f1"] = _num(f_eval(ideal, 1))
    sets = enumerate_index_sets(ideal)
    out["index_sets"] = [
        {
            "i": i,
            "tuples": [list(a) for a in s],
            "f_next": [_num(f_eval(ideal, i + 1, a)) for a in s],
        }
        for i, s in enumerate(sets, start=1)
    ]
    out["reconstructs"] = reconstruct_generators(ideal) == ideal
    return out


def _trace_payload(ideal, trace, args):
    out = ideal.to_json()
    if args.trace:
        out["trace"] = trace.to_json()
    return out


def cmd_synthesize(args, stdin):
    h = _load_sequence(args, stdin)
    try:
        ideal, trace = synthesize(h, args.horizon)
    except NotUnimodalError as exc:
        i, d = exc.witness
        print(f"not unimodal at each tail: {exc}", file=sys.stderr)
        raise _PropertyFalse({"unimodal_at_each_tail": False, "witness": {"i": i, "d": d}})
    return _trace_payload(ideal, trace, args)


def cmd_froberg(args, stdin):
    spec = _spec(args)
    shape = classify_tail(spec)
    tail = {"kind": type(shape).__name__, **shape.__dict__}
    return {
        "spec": spec.to_json(),
        "normalized": normalize(spec).to_json(),
        "values": froberg_values(spec, args.max_degree),
        "tail": tail,
    }


def cmd_froberg_ideal(args, stdin):
    spec = _spec(args)
    ideal, trace = froberg_to_ideal(spec, args.horizon)
    return _trace_payload(ideal, trace, args)


def cmd_validate(args, stdin):
    if args.ideal:
        data = _read_json(args.ideal, stdin)
        ideal = MonomialIdeal.from_json(data)
        given = [
            parse_monomial(g, ideal.n) if isinstance(g, str) else tuple(g)
            for g in data.get("generators", [])
        ]
        canonical = given == list(ideal.generators)
        ss = strong_stability_witness(ideal)
        return {
            "kind": "ideal",
            "valid": True,
            "canonical": canonical,
            "ideal": ideal.to_json(),
            "strongly_stable": ss is None,
        }
    h = _load_sequence(args, stdin)
    analysis = tail_analysis(h, args.horizon)
    verdict = is_unimodal_at_each_tail(h, args.horizon)
    out = {
        "kind": "sequence",
        "valid": True,
        "sequence": h.to_json(),
        "r": [_num(r) for r in analysis.r],
        "depth": analysis.depth,
        "unimodal_at_each_tail": verdict.holds,
        "witness": None if verdict.witness is None else dict(zip("id", verdict.witness)),
    }
    if not verdict.holds:
        raise _PropertyFalse(out)
    return out


COMMANDS = {
    "hilbert": cmd_hilbert,
    "check": cmd_check,
    "gens": cmd_gens,
    "synthesize": cmd_synthesize,
    "froberg": cmd_froberg,
    "froberg-ideal": cmd_froberg_ideal,
    "validate": cmd_validate,
}


# ---- text rendering -------------------------------------------------------


def _mono(v):
    return format_monomial(tuple(v))


def _render_text(command: str, payload: dict) -> str:
    lines: list[str] = []
    if "generators" in payload and "n" in payload:
        lines.append(f"ideal in {payload['n']} variables:")
        lines.append("  " + (", ".join(_mono(g) for g in payload["generators"]) or "(zero ideal)"))
    for key, value in payload.items():
        if key in ("n", "generators"):
            continue
        if key == "ideal" and isinstance(value, dict):
            lines.append(f"ideal in {value['n']} variables:")
            lines.append("  " + (", ".join(_mono(g) for g in value["generators"]) or "(zero ideal)"))
        elif key == "trace":
            for level in value["levels"]:
                lines.append(f"level n={level['n']} r0={level['r0']} |T0|={level['pool_size']}")
                for s in level["steps"]:
                    added = ", ".join(_mono(m) for m in s["added"])
                    lines.append(
                        f"  d={s['d']} t={s['t']} chosen={s['chosen']} g={s['g']} "
                        f"added: {added} |T|: {s['pool_before']} -> {s['pool_after']}"
                    )
        elif key == "last_generator" and value:
            lines.append(f"last_generator: {_mono(value['monomial'])} (mu = {value['mu']})")
        elif key == "witness" and command == "check" and value:
            lines.append(f"witness: {_render_witness(value)}")
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines) + "\n"


def _render_witness(w: dict) -> str:
    if "M" in w:
        return f"{_mono(w['M'])} > {_mono(w['N'])} but {_mono(w['M'])} is not in I"
    if "is_generator" in w:
        where = "is in G but not" if w["is_generator"] else "is missing from G but"
        return f"{_mono(w['monomial'])} {where} in the closed-form generating set"
    if "alpha" in w:
        return (
            f"i={w['i']}: {w['alpha']} > {w['beta']} but "
            f"{w['alpha_value']} > {w['beta_value']}"
        )
    return "; ".join(f"{k}: {_render_witness(v)}" for k, v in w.items() if v)


# ---- entry points ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arlideals", description="Almost reverse lexicographic monomial ideals."
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    def ideal_arg(p, required=True):
        p.add_argument("--ideal", required=required, help="JSON file, or - for stdin")

    def seq_args(p):
        p.add_argument("--sequence", help="comma-separated prefix h_0,h_1,..., or - for JSON on stdin")
        p.add_argument("--tail", default="zero", help="zero | constant:<c>")
        p.add_argument("--horizon", type=int, default=None)

    p = sub.add_parser("hilbert", help="Hilbert function of R/I")
    ideal_arg(p)
    p.add_argument("--max-degree", type=int, default=20)
    common(p)

    p = sub.add_parser("check", help="is the ideal almost reverse lexicographic?")
    ideal_arg(p)
    p.add_argument("--mode", choices=("definition", "criterion", "both"), default="both")
    common(p)

    p = sub.add_parser("gens", help="last generator, f-values and index sets")
    ideal_arg(p)
    common(p)

    p = sub.add_parser("synthesize", help="ARL ideal with a given Hilbert function")
    seq_args(p)
    p.add_argument("--trace", action="store_true")
    common(p)

    p = sub.add_parser("froberg", help="values of |n; d_1,...,d_m|")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", default="")
    p.add_argument("--max-degree", type=int, default=20)
    common(p)

    p = sub.add_parser("froberg-ideal", help="ARL ideal realizing |n; d_1,...,d_m|")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", default="")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--trace", action="store_true")
    common(p)

    p = sub.add_parser("validate", help="parse and canonicalize an ideal or a sequence")
    ideal_arg(p, required=False)
    seq_args(p)
    common(p)
    return parser


def run(argv: list[str], stdin: str | None = None) -> tuple[int, str, str]:
    """Execute one command; returns (exit code, stdout, stderr)."""
    err = io.StringIO()
    with contextlib.redirect_stderr(err):
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return (0 if exc.code == 0 else 2), "", err.getvalue()
        code = 0
        try:
            payload = COMMANDS[args.command](args, stdin)
        except _PropertyFalse as exc:
            payload, code = exc.payload, 1
        except (ArlError, ValueError, OSError, KeyError, TypeError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2, "", err.getvalue()
    if args.format == "text":
        out = _render_text(args.command, payload)
    else:
        out = json.dumps(payload, sort_keys=False) + "\n"
    return code, out, err.getvalue()


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    stdin = None
    if "-" in argv and not sys.stdin.isatty():
        stdin = sys.stdin.read()
    code, out, err = run(argv, stdin)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
