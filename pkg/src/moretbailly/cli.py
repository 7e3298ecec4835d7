"""Command-line interface.

Usage:
    moretbailly invariants --n 3 --d 1 --p 5
    moretbailly hodge --n 5 --p 7 --check-duality
    moretbailly reproduce-table --format csv
    moretbailly verdict --n 3 --d 1 --p 7 --format json
    moretbailly lambda --n 1 --d 2 --s 1 --p 5
    moretbailly mu --n 3 --p 5 --t 0 --l -1 --oracle convolve
    moretbailly bench --n 3 --p 7 --t-range 0:12

Exit codes: 0 success, 1 reproduce-table mismatch, 2 invalid parameters,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from .cohomology import FamilyParams, bott, h_exterior_frobenius, hodge_vector, splitting_type
from .combinatorics import ENUMERATION_LIMIT, is_prime, mu, mu_oracle, supersingular_witness
from .errors import ConsistencyError, ParameterError
from .hrr import (
    ObstructionInput,
    lambda3_comparison,
    lambda3_derivative_root,
    lambda_poly,
    leading_sign_audit,
    threshold_prime,
    w2_verdict,
)
from .report import invariants, reproduce_table
from .weights import Group, weight_set

__all__ = ["main", "build_parser"]

FORMATS = ("table", "csv", "json")


@dataclass
class Output:
    params: dict[str, Any]
    result: dict[str, Any]
    rows: list[dict[str, Any]]
    exit_code: int = 0
    notes: list[str] = field(default_factory=list)


def _num(value) -> Any:
    """Numerals become decimal strings; bools, None and strings pass through."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {k: _num(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_num(v) for v in value]
    return value


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def _justify(text: str, width: int) -> str:
    numeric = text.lstrip("-").replace("/", "").replace(".", "").replace("e", "").isdigit()
    return text.rjust(width) if numeric else text.ljust(width)


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        doc = {"params": _num(out.params), "result": _num(out.result)}
        return json.dumps(doc, indent=2) + "\n"
    if not out.rows:
        return ""
    columns = list(out.rows[0].keys())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in out.rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    cells = [[_cell(row.get(c)) for c in columns] for row in out.rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(_justify(v, w) for v, w in zip(r, widths)).rstrip())
    lines.extend(out.notes)
    return "\n".join(lines) + "\n"


def _kv_rows(result: dict[str, Any]) -> list[dict[str, Any]]:
    return [{"quantity": k, "value": v} for k, v in result.items()]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")


# -- commands ----------------------------------------------------------------


def cmd_invariants(args) -> Output:
    rep = invariants(FamilyParams(args.n, args.d, args.p))
    result = {
        "dim": rep.dim,
        "g": rep.g,
        "m": rep.m,
        "omega_trivial": rep.omega_trivial,
        "kodaira": rep.kodaira.value,
        "h1": rep.h1,
        "h2": rep.h2,
        "b1": rep.b1,
        "b2": rep.b2,
        f"b{rep.dim}": rep.b_middle,
        "hodge": list(rep.hodge.values) if rep.hodge else None,
        "verdict": rep.verdict.status.value,
        "verdict_s": rep.verdict.s_used,
    }
    return Output({"n": args.n, "d": args.d, "p": args.p}, result, _kv_rows(result))


def cmd_hodge(args) -> Output:
    hv = hodge_vector(args.n, args.p)
    result: dict[str, Any] = {"values": list(hv.values), "euler_characteristic": hv.euler_characteristic()}
    code = 0
    if args.check_duality:
        if args.p - 1 == args.n + 1:
            ok = hv.is_palindromic()
            result["duality"] = "pass" if ok else "fail"
            code = 0 if ok else 3
        else:
            result["duality"] = "not_applicable"
    rows = [{"i": i, "h": h} for i, h in enumerate(hv.values)]
    notes = [f"duality check: {result['duality']}"] if "duality" in result else []
    return Output({"n": args.n, "p": args.p}, result, rows, code, notes)


def cmd_reproduce_table(args) -> Output:
    table = reproduce_table()
    rows, result_rows = [], []
    for row in table:
        for i, (pub, comp) in enumerate(zip(row.published, row.computed)):
            rows.append({"p": row.p, "n": row.n, "i": i, "published": pub, "computed": comp, "match": pub == comp})
        result_rows.append({
            "p": row.p,
            "n": row.n,
            "dim": row.dim,
            "published": list(row.published),
            "computed": list(row.computed),
            "match": list(row.matches),
        })
    ok = all(r.all_match for r in table)
    return Output({}, {"rows": result_rows, "all_match": ok}, rows, 0 if ok else 1)


def cmd_verdict(args) -> Output:
    fp = FamilyParams(args.n, args.d, args.p)
    v = w2_verdict(ObstructionInput(fp, args.s, args.chiE))
    result = v.to_json()
    rows = [{"quantity": k, "value": val} for k, val in result.items() if k != "conditions"]
    rows += [{"quantity": k, "value": val} for k, val in result["conditions"].items()]
    params = {"n": args.n, "d": args.d, "p": args.p, "s": args.s, "chiE": args.chiE}
    return Output(params, result, rows)


def cmd_threshold(args) -> Output:
    th = threshold_prime(args.n, args.d, args.s)
    result = {
        "lambda": str(th.polynomial),
        "coefficients": th.polynomial.to_json(),
        "cauchy_bound": th.bound,
        "threshold_prime": th.prime,
    }
    return Output({"n": args.n, "d": args.d, "s": args.s}, result, _kv_rows(result))


def cmd_lambda(args) -> Output:
    lam = lambda_poly(args.n, args.d, args.s)
    result: dict[str, Any] = {"polynomial": str(lam), "coefficients": lam.to_json()}
    if args.n == 3 and args.s == 1:
        cmp = lambda3_comparison(args.d)
        result["published"] = str(cmp.printed)
        result["published_coefficients"] = cmp.printed.to_json()
        result["published_mismatch_powers"] = cmp.mismatched_powers
        result["derivative_root"] = lambda3_derivative_root(args.d)
    if args.p is not None:
        value = lam(args.p)
        result["value"] = value
        result["sign"] = "negative" if value < 0 else ("zero" if value == 0 else "positive")
    params = {"n": args.n, "d": args.d, "s": args.s, "p": args.p}
    if args.p is not None:
        rows = [{"quantity": "value", "value": result["value"]}, {"quantity": "sign", "value": result["sign"]}]
    else:
        rows = [{"power": i, "coefficient": c} for i, c in enumerate(lam.to_json())]
    return Output(params, result, rows)


def cmd_splitting(args) -> Output:
    _require_prime(args.p)
    st = splitting_type(args.n, args.p, args.t)
    entries = st.sorted_entries()
    result = {
        "a": st.a,
        "b": st.b,
        "rank": st.rank,
        "entries": [{"l": l, "multiplicity": m} for l, m in entries],
    }
    rows = [{"l": l, "multiplicity": m} for l, m in entries]
    return Output({"n": args.n, "p": args.p, "t": args.t}, result, rows)


def cmd_bott(args) -> Output:
    value = bott(args.n, args.r, args.s, args.l)
    result = {"h": value}
    return Output({"n": args.n, "r": args.r, "s": args.s, "l": args.l}, result, _kv_rows(result))


def cmd_exterior(args) -> Output:
    _require_prime(args.p)
    value = h_exterior_frobenius(args.n, args.p, args.r, args.t, args.s)
    result = {"h": value}
    params = {"n": args.n, "p": args.p, "r": args.r, "t": args.t, "s": args.s}
    return Output(params, result, _kv_rows(result))


def cmd_mu(args) -> Output:
    value = mu(args.n, args.p, args.t, args.l)
    result: dict[str, Any] = {"mu": value}
    if args.oracle:
        check = mu_oracle((args.n, args.p, args.t, args.l), args.oracle)
        if check != value:
            raise ConsistencyError(f"mu={value} but {args.oracle} oracle gives {check}")
        result["oracle"] = args.oracle
        result["oracle_value"] = check
    params = {"n": args.n, "p": args.p, "t": args.t, "l": args.l, "oracle": args.oracle}
    return Output(params, result, _kv_rows(result))


def cmd_weights(args) -> Output:
    _require_prime(args.p)
    result = {}
    rows = []
    for group in Group:
        ws = weight_set(group, args.p, args.l, args.w0)
        result[group.value] = ws.to_json()
        rows.append({"group": group.value, "modulus": ws.modulus, "w0": ws.w0, "residues": sorted(ws.residues)})
    return Output({"p": args.p, "l": args.l, "w0": args.w0}, result, rows)


def cmd_hasse(args) -> Output:
    w = supersingular_witness(args.p)
    result = {"has_root_in_Fp": w.has_root_in_Fp, "lambda": w.lambda_in_base_field, "p_mod_4": args.p % 4}
    return Output({"p": args.p}, result, _kv_rows(result))


def cmd_sign_audit(args) -> Output:
    rows = []
    for r in leading_sign_audit(range(2, args.max_n + 1), d=args.d):
        rows.append({
            "n": r.n,
            "n_mod_4": r.n % 4,
            "j": r.j,
            "s": r.s,
            "degree": r.degree,
            "leading": r.leading,
            "computed": r.computed.value,
            "rule": r.claimed.value,
            "agrees_with_rule": r.agrees_with_rule,
            "agrees_with_prose": r.agrees_with_prose,
        })
    return Output({"d": args.d, "max_n": args.max_n}, {"rows": rows}, rows)


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise ParameterError(f"bad range {text!r}, expected LO:HI") from exc
    return range(lo, hi + 1)


def _time(fn: Callable[[], int], repeat: int = 3) -> tuple[int, float]:
    best = float("inf")
    value = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return value, best


def cmd_bench(args) -> Output:
    _require_prime(args.p)
    rows = []
    feasible = args.p ** (args.n + 1) <= ENUMERATION_LIMIT
    for t in _parse_range(args.t_range):
        for l in range(-(args.n + 1), t // args.p + 1):
            if mu(args.n, args.p, t, l) == 0:
                continue
            q = (args.n, args.p, t, l)
            fast, t_fast = _time(lambda: mu(*q))
            conv, t_conv = _time(lambda: mu_oracle(q, "convolve"))
            row = {"t": t, "l": l, "mu": fast, "closed_form_s": f"{t_fast:.2e}", "convolve_s": f"{t_conv:.2e}"}
            if feasible:
                enum_, t_enum = _time(lambda: mu_oracle(q, "enumerate"), repeat=1)
                row["enumerate_s"] = f"{t_enum:.2e}"
                row["speedup_vs_enumerate"] = f"{t_enum / t_fast:.1f}"
            else:
                enum_ = fast
                row["enumerate_s"] = None
                row["speedup_vs_enumerate"] = None
            row["speedup_vs_convolve"] = f"{t_conv / t_fast:.1f}"
            if not fast == conv == enum_:
                raise ConsistencyError(f"counts disagree at {q}: {fast}, {conv}, {enum_}")
            rows.append(row)
    params = {"n": args.n, "p": args.p, "t_range": args.t_range}
    return Output(params, {"rows": rows}, rows)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write to a file instead of stdout")

    parser = argparse.ArgumentParser(prog="moretbailly", description="Invariants of Moret-Bailly families.")
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_: str, **flags) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        for flag, spec in flags.items():
            sp.add_argument(f"--{flag.replace('_', '-')}", dest=flag, **spec)
        return sp

    req = {"type": int, "required": True}
    opt = {"type": int, "default": None}

    add("invariants", cmd_invariants, "dimension, canonical degree, h^1, h^2, Betti numbers", n=req, d=req, p=req)
    hodge = add("hodge", cmd_hodge, "full vector h^0..h^{2n+1} of O_Y (d = 1)", n=req, p=req)
    hodge.add_argument("--check-duality", action="store_true")
    add("reproduce-table", cmd_reproduce_table, "recompute the published h^i(O_Y) table")
    add("verdict", cmd_verdict, "W2(k) non-liftability verdict", n=req, d=req, p=req, s=opt,
        chiE={"type": int, "default": 1})
    add("threshold", cmd_threshold, "least prime beyond which lambda_n < 0", n=req, d=req, s=req)
    add("lambda", cmd_lambda, "lambda_n as a polynomial in p, or its value", n=req, d=req, s=req, p=opt)
    add("splitting", cmd_splitting, "splitting type of F_*(O(t))", n=req, p=req, t=req)
    add("bott", cmd_bott, "h^s(P^n, Omega^r(l))", n=req, r=req, s=req, l=req)
    add("exterior", cmd_exterior, "h^s(Lambda^r(F^* Omega^1(1)) (x) O(t))", n=req, p=req, r=req, t=req, s=req)
    add("mu", cmd_mu, "lattice-point multiplicity mu_{t,l}", n=req, p=req, t=req, l=req,
        oracle={"choices": ("enumerate", "convolve"), "default": None})
    add("weights", cmd_weights, "weight residues of the relevant cohomology groups", p=req, l=req, w0=req)
    add("hasse", cmd_hasse, "F_p-roots of the Hasse polynomial", p=req)
    add("sign-audit", cmd_sign_audit, "leading-coefficient signs of lambda_n", d={"type": int, "default": 1},
        max_n={"type": int, "default": 9})
    add("bench", cmd_bench, "time closed-form mu against the oracles", n=req, p=req,
        t_range={"type": str, "required": True})
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, AssertionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    text = render(out, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
