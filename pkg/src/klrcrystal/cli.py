"""Command-line front end.

Column lists are written ``"5|3,4|1,2|1,2,3"``: commas inside a column,
``|`` between factors, read left to right as the tensor factors b_1 (x) ... (x) b_r.
For convolution products the rightmost factor is T_1.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .cartan import CartanA
from .crystal import (
    TensorElt,
    component,
    crystal_equivalent,
    in_highest_component,
    stats,
    to_highest_weight,
)
from .homogeneous import (
    DegreeHypothesisError,
    build_sp,
    head_shift_t,
    hom_degree_d,
    lambda_invariants,
    strongly_commute,
    verify_cyclotomic,
    verify_qha_relations,
)
from .laurent import Laurent
from .qcharacter import QChar, qch_sp, shuffle_all, solve_unitriangular
from .rmatrix import decode, format_bits, sigma_bits
from .tableaux import ColumnTableau, beta_of_column
from .transition import (
    ColumnStrictConcat,
    TransitionMatrix,
    graded_decomposition,
    parse_columns,
    simple_qcharacters,
)

EXIT_OK, EXIT_INVALID, EXIT_COMPUTE = 0, 1, 2


class UsageError(ValueError):
    pass


# -- parsing helpers ------------------------------------------------------------

def _column(text: str, n: int) -> ColumnTableau:
    try:
        entries = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad column {text!r}") from exc
    return ColumnTableau(n, entries)


def _factors(text: str, n: int) -> list[ColumnTableau]:
    """Tensor order b_1, ..., b_r."""
    return parse_columns(text, n)[::-1]


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _payload(args) -> dict:
    if args.input is None:
        return {}
    with open(args.input, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise UsageError("the JSON payload must be an object")
    # payload keys fill in flags that were not given
    for key, value in data.items():
        attr = key.replace("-", "_")
        if getattr(args, attr, None) is None:
            setattr(args, attr, value if not isinstance(value, list) else _encode_list(value))
    return data


def _encode_list(value: list) -> str:
    if value and isinstance(value[0], list):
        return "|".join(",".join(map(str, c)) for c in value)
    return ",".join(map(str, value))


def _cols_json(cols: Sequence[ColumnTableau]) -> list[list[int]]:
    return [list(c.entries) for c in cols]


# -- subcommands ------------------------------------------------------------------

def cmd_sigma(args) -> tuple[Any, str, int]:
    _need(args, "n", "first", "second")
    n = int(args.n)
    a, b = _column(str(args.first), n), _column(str(args.second), n)
    w_in, w_out = sigma_bits(a, b, n)
    first, second = decode(w_out)
    res = {
        "input": [list(a.entries), list(b.entries)],
        "bits_in": format_bits(w_in),
        "bits_out": format_bits(w_out),
        "first": list(first.entries),
        "second": list(second.entries),
    }
    text = f"{format_bits(w_in)} -> {format_bits(w_out)}\n{first} (x) {second}"
    return res, text, EXIT_OK


def cmd_crystal(args) -> tuple[Any, str, int]:
    _need(args, "n", "columns")
    n = int(args.n)
    b = TensorElt(n, tuple(_factors(args.columns, n)))
    if args.action == "raise":
        hw, path = to_highest_weight(b)
        res = {"highest": _cols_json(hw.factors), "path": path,
               "in_highest_component": in_highest_component(b)}
        text = f"{hw}\npath: {' '.join(map(str, path)) or '-'}"
    elif args.action == "component":
        comp = sorted(component(b))
        hw, _ = to_highest_weight(b)
        st = stats(hw)
        res = {"size": len(comp), "highest": _cols_json(hw.factors),
               "highest_weight": list(st.wt.coords)}
        text = f"size {len(comp)}, highest {hw}"
    else:
        _need(args, "other")
        b2 = TensorElt(n, tuple(_factors(args.other, n)))
        eq = crystal_equivalent(b, b2)
        res = {"equivalent": eq}
        text = str(eq).lower()
    return res, text, EXIT_OK


def cmd_qchar(args) -> tuple[Any, str, int]:
    if args.action == "solve" and args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
        n = int(data["n"])
        monos = [(m["label"], QChar.from_json({"n": n, "terms": m["terms"]}))
                 for m in data["monomials"]]
        matrix = {a: {b: Laurent.parse(str(c)) for b, c in row.items()}
                  for a, row in data["matrix"].items()}
        sols = solve_unitriangular(monos, matrix)
        res = {str(lab): ch.to_json()["terms"] for lab, ch in sols}
        text = "\n".join(f"L({lab}) = {ch}" for lab, ch in sols)
        return res, text, EXIT_OK
    _need(args, "n", "columns")
    n = int(args.n)
    cd = CartanA(n)
    cols = _factors(args.columns, n)
    if args.action == "sp":
        if len(cols) != 1:
            raise UsageError("qchar sp takes a single column")
        ch = qch_sp(cols[0], cd)
    elif args.action == "shuffle":
        ch = shuffle_all([qch_sp(c, cd) for c in cols], cd).shift(int(args.shift or 0))
    else:
        T = ColumnStrictConcat(n, tuple(cols[::-1]))
        sims = simple_qcharacters(T.shape, T.content(), cd)
        res = {t.label(): ch.to_json()["terms"] for t, ch in sims.items()}
        text = "\n".join(f"L({t.label()}) = {ch}" for t, ch in sims.items())
        return res, text, EXIT_OK
    res = {"terms": ch.to_json()["terms"], "bar_invariant": ch.is_bar_invariant()}
    return res, str(ch), EXIT_OK


def cmd_degrees(args) -> tuple[Any, str, int]:
    _payload(args)
    _need(args, "n")
    n = int(args.n)
    cd = CartanA(n)
    L = cd.fundamental_weight
    if args.action == "t":
        _need(args, "columns")
        cols = _factors(args.columns, n)
        val = head_shift_t([beta_of_column(c, cd) for c in cols], [L(len(c)) for c in cols], cd)
        return {"t": val}, str(val), EXIT_OK
    _need(args, "b1", "b2")
    b1, b2 = _column(str(args.b1), n), _column(str(args.b2), n)
    if args.action == "d":
        _need(args, "b1p", "b2p")
        b1p, b2p = _column(str(args.b1p), n), _column(str(args.b2p), n)
        val = hom_degree_d(b1, L(len(b1)), b2, L(len(b2)), b1p, L(len(b1p)), b2p, L(len(b2p)), cd)
        return {"d": val}, str(val), EXIT_OK
    if args.action == "lambda":
        b2p = _column(str(args.b2p), n) if args.b2p is not None else None
        inv = lambda_invariants(b1, L(len(b1)), b2, L(len(b2)), cd,
                                lam2p=L(len(b2p)) if b2p else None, b2p=b2p)
        res = {"lambda_tilde": inv.lambda_tilde, "lambda": inv.lambda_,
               "d": None if inv.d is None else str(inv.d)}
        text = f"lambda_tilde {inv.lambda_tilde}\nlambda {inv.lambda_}"
        if inv.d is not None:
            text += f"\nd {inv.d}"
        return res, text, EXIT_OK
    val = strongly_commute(b1, L(len(b1)), b2, L(len(b2)), cd)
    return {"strongly_commute": val}, str(val).lower(), EXIT_OK


def cmd_verify(args) -> tuple[Any, str, int]:
    _need(args, "n")
    n = int(args.n)
    cd = CartanA(n)
    if args.column is not None:
        targets = [_column(args.column, n)]
    else:
        from itertools import combinations

        targets = [ColumnTableau(n, c) for k in range(1, n) for c in combinations(range(1, n + 1), k)]
    res, lines, ok = [], [], True
    for T in targets:
        M = build_sp(T, cd)
        report = verify_qha_relations(M) if args.action == "relations" else verify_cyclotomic(M)
        failed = [r for r in report if r.status != "pass"]
        ok = ok and not failed
        res.append({"column": list(T.entries), "checks": len(report),
                    "failures": [r.to_json() for r in failed]})
        lines.append(f"{T}: {len(report) - len(failed)}/{len(report)} pass")
        lines += [f"  FAIL {r.relation} {r.instance}" for r in failed]
    return {"passed": ok, "modules": res}, "\n".join(lines), EXIT_OK if ok else EXIT_COMPUTE


def cmd_decompose(args) -> tuple[Any, str, int]:
    _need(args, "n", "columns")
    n = int(args.n)
    cd = CartanA(n)
    cols = parse_columns(args.columns, n)  # T_1, ..., T_r
    if args.table:
        T = ColumnStrictConcat(n, tuple(cols))
        tm = TransitionMatrix.build(T.shape, n, T.content())
        if T not in tm.rows:
            tm = TransitionMatrix(tm.rows + [T], tm.cols,
                                  {**tm.entries, **TransitionMatrix.build(
                                      T.shape, n, T.content(), rows=[T]).entries})
        data = tm.to_json()
        width = max(len(c) for c in data["cols"] + data["rows"]) + 2
        lines = ["".ljust(width) + "".join(c.ljust(width) for c in data["cols"])]
        for r, row in zip(data["rows"], data["entries"]):
            lines.append(r.ljust(width) + "".join(e.ljust(width) for e in row))
        return data, "\n".join(line.rstrip() for line in lines), EXIT_OK
    dec = graded_decomposition(cols, cd)
    res = {f"L({t.label()})": str(v) for t, v in dec.items()}
    text = "\n".join(f"{k}: {v}" for k, v in res.items()) or "0"
    return res, text, EXIT_OK


def cmd_selftest(args) -> tuple[Any, str, int]:
    from .golden import run_all

    results = run_all()
    ok = all(p for _, p in results)
    res = {"passed": ok, "cases": [{"name": n, "status": "pass" if p else "fail"} for n, p in results]}
    text = "\n".join(f"{'PASS' if p else 'FAIL'} {n}" for n, p in results)
    return res, text, EXIT_OK if ok else EXIT_COMPUTE


# -- argument parsing --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank parameter of A_{n-1}")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--input", help="JSON payload file")

    p = argparse.ArgumentParser(prog="klrcrystal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sigma", parents=[common], help="combinatorial R-matrix of two columns")
    s.add_argument("--first")
    s.add_argument("--second")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("crystal", parents=[common], help="Kashiwara operators on column tensors")
    s.add_argument("action", choices=("raise", "component", "equiv"))
    s.add_argument("--columns")
    s.add_argument("--other")
    s.set_defaults(func=cmd_crystal)

    s = sub.add_parser("qchar", parents=[common], help="q-characters and shuffles")
    s.add_argument("action", choices=("sp", "shuffle", "solve"))
    s.add_argument("--columns")
    s.add_argument("--shift", type=int)
    s.set_defaults(func=cmd_qchar)

    s = sub.add_parser("degrees", parents=[common], help="degree and commutation formulas")
    s.add_argument("action", choices=("t", "d", "lambda", "commute"))
    s.add_argument("--columns")
    for name in ("b1", "b2", "b1p", "b2p"):
        s.add_argument(f"--{name}")
    s.set_defaults(func=cmd_degrees)

    s = sub.add_parser("verify", parents=[common], help="check relations on Sp modules")
    s.add_argument("action", choices=("relations", "cyclotomic"))
    s.add_argument("--column", help="one column; omit to check every column for this n")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decompose", parents=[common], help="graded decomposition numbers")
    s.add_argument("--columns")
    s.add_argument("--table", action="store_true", help="print the transition matrix instead")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("selftest", parents=[common], help="run the worked-example suite")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        res, text, code = args.func(args)
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except (ValueError, IndexError, KeyError, TypeError, OSError, DegreeHypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.format == "json":
        print(json.dumps(res, sort_keys=True, ensure_ascii=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
