"""Command-line front end.

Subcommands: ``gmatrix`` (print reciprocal matrices, their +/-identity
variants, or solution-basis columns), ``count``, ``enumerate``, ``build``,
``verify``, and ``negacyclic``.  Output is plain text, JSON, or CSV
(counting tables only); no color is ever emitted, so NO_COLOR needs no
special handling.  The only randomness is ``enumerate --sample``, seeded
via ``--seed``; identical invocations produce byte-identical output.

JSON schemas (documented in the README): field elements are integer
arrays low-degree first; polynomials are {"basis": "xm1"|"std",
"coeffs": [[...], ...]}; codes are {"p", "m", "s", "case", "nu", "k",
"params", "generators", "ring_sign"}.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from typing import Iterable, Sequence

from .chainring import RIdealGens, is_self_dual
from .enumerator import (
    CodeSpec,
    build_code,
    classify_cases,
    count_self_dual,
    descriptor_count,
    enumerate_codes,
    sample_codes,
    to_negacyclic,
)
from .fieldcore import FieldSpec, FqElem, find_irreducible
from .gmatrix import MatrixFp, build_g_kron, column_index_range, g_truncated, solution_column
from .reciprocal import XM1_TO_STD, basis_convert


# ---------------------------------------------------------------------------
# Rendering

def _fq_str(e: FqElem) -> str:
    return ":".join(str(c) for c in e)


def _parse_fq(field: FieldSpec, text: str) -> FqElem:
    return field.element([int(part) for part in text.split(":")])


def _parse_params(field: FieldSpec, text: str) -> tuple[FqElem, ...]:
    if not text:
        return ()
    return tuple(_parse_fq(field, item) for item in text.split(","))


def _poly_str(field: FieldSpec, coeffs: Sequence[FqElem]) -> str:
    terms = []
    for d, c in enumerate(coeffs):
        if not any(c):
            continue
        cs = _fq_str(c) if field.m == 1 else f"({_fq_str(c)})"
        if d == 0:
            terms.append(cs)
        else:
            xs = "x" if d == 1 else f"x^{d}"
            terms.append(xs if cs == "1" else f"{cs}{xs}")
    return "+".join(terms) if terms else "0"


def _gen_str(field: FieldSpec, gen) -> str:
    apart = [v[0] for v in gen]
    bpart = [v[1] for v in gen]
    a_str = _poly_str(field, apart)
    b_str = _poly_str(field, bpart)
    if b_str == "0":
        return a_str
    piece = "u" if b_str == "1" else f"u*({b_str})"
    return piece if a_str == "0" else f"{a_str}+{piece}"


def _code_text(field: FieldSpec, code: CodeSpec, gens: RIdealGens, index: int) -> str:
    d = code.descriptor
    params = ",".join(_fq_str(a) for a in code.params)
    body = "; ".join(_gen_str(field, g) for g in gens.generators)
    return f"index={index} case={d.sub} nu={d.nu} k={d.k} params=[{params}] <{body}>"


def _matrix_text(mat: MatrixFp) -> str:
    width = max(1, len(str(mat.p - 1)))
    return "\n".join(" ".join(f"{int(v):>{width}}" for v in row) for row in mat.data)


# ---------------------------------------------------------------------------
# JSON import/export

def poly_to_obj(coeffs: Sequence[FqElem], basis: str = "std") -> dict:
    return {"basis": basis, "coeffs": [list(c) for c in coeffs]}


def code_to_obj(code: CodeSpec, gens: RIdealGens | None = None) -> dict:
    gens = gens if gens is not None else code.generators
    field = gens.field
    d = code.descriptor
    out_gens = []
    for g in gens.generators:
        out_gens.append(
            {
                "a": poly_to_obj([v[0] for v in g]),
                "b": poly_to_obj([v[1] for v in g]),
            }
        )
    return {
        "p": d.p,
        "m": field.m,
        "s": d.s,
        "case": d.sub,
        "nu": d.nu,
        "k": d.k,
        "params": [list(a) for a in code.params],
        "generators": out_gens,
        "ring_sign": gens.ring_sign,
    }


def _poly_from_obj(field: FieldSpec, obj: dict) -> tuple[FqElem, ...]:
    coeffs = tuple(field.element(c) for c in obj["coeffs"])
    if obj["basis"] == "xm1":
        return basis_convert(field, coeffs, XM1_TO_STD)
    if obj["basis"] != "std":
        raise ValueError(f"unknown basis {obj['basis']!r}")
    return coeffs


def obj_to_code(obj: dict) -> tuple[CodeSpec, RIdealGens]:
    """Rebuild a code from its JSON object; the stored generators are
    checked against the reconstruction.  Returns the cyclic code and the
    generators in the stored ring (cyclic or negacyclic)."""
    p, m, s = obj["p"], obj["m"], obj["s"]
    field = find_irreducible(p, m)
    match = [
        d
        for d in classify_cases(p, s)
        if d.sub == obj["case"] and d.nu == obj["nu"] and d.k == obj["k"]
    ]
    if not match:
        raise ValueError(f"no case {obj['case']!r} with nu={obj['nu']}, k={obj['k']} for p={p}, s={s}")
    code = build_code(match[0], [field.element(a) for a in obj["params"]], field)
    gens = code.generators if obj.get("ring_sign", 1) == 1 else to_negacyclic(code)
    stored = []
    for g in obj["generators"]:
        apart = _poly_from_obj(field, g["a"])
        bpart = _poly_from_obj(field, g["b"])
        stored.append(tuple(zip(apart, bpart)))
    if tuple(stored) != gens.generators:
        raise ValueError("stored generators do not match the reconstructed code")
    return code, gens


def _json_dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Subcommands

def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _cmd_gmatrix(args) -> int:
    p = args.p
    if args.lam is None and args.l is None:
        raise ValueError("gmatrix needs --lambda or --l")
    if args.delta is not None:
        if args.l is None:
            raise ValueError("--delta requires --l")
        if not 0 <= args.delta < args.l:
            raise ValueError(f"need 0 <= delta < l, got delta={args.delta}, l={args.l}")
        g = g_truncated(p, args.l)
        jmin, jmax = column_index_range(args.l, args.delta)
        vectors = [solution_column(g, j, args.delta) for j in range(jmin, jmax + 1)]
        if args.format == "json":
            obj = {
                "p": p,
                "l": args.l,
                "delta": args.delta,
                "vectors": [
                    {"j": (v.source_index + 1) // 2, "column": v.source_index, "values": list(v.values)}
                    for v in vectors
                ],
            }
            _emit(_json_dumps(obj), args.out)
        else:
            lines = [
                f"j={(v.source_index + 1) // 2} column={v.source_index} values=" + " ".join(map(str, v.values))
                for v in vectors
            ]
            _emit("\n".join(lines) if lines else "(empty basis)", args.out)
        return 0

    mat = g_truncated(p, args.l) if args.l is not None else build_g_kron(p, args.lam)
    if args.plus_i:
        mat = mat + MatrixFp.identity(p, mat.rows)
    elif args.minus_i:
        mat = mat - MatrixFp.identity(p, mat.rows)
    if args.format == "json":
        obj = {"p": p, "rows": mat.rows, "cols": mat.cols, "entries": mat.data.tolist()}
        _emit(_json_dumps(obj), args.out)
    else:
        _emit(_matrix_text(mat), args.out)
    return 0


def _cmd_count(args) -> int:
    total = count_self_dual(args.p, args.m, args.s)
    if args.format == "json":
        _emit(_json_dumps({"p": args.p, "m": args.m, "s": args.s, "count": total}), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "m", "s", "case", "count"])
        for d in classify_cases(args.p, args.s):
            label = f"{d.sub}:nu={d.nu}:k={d.k}"
            writer.writerow([args.p, args.m, args.s, label, descriptor_count(d, args.m)])
        writer.writerow([args.p, args.m, args.s, "total", total])
        _emit(buf.getvalue().rstrip("\n"), args.out)
    else:
        _emit(str(total), args.out)
    return 0


def _window(stream: Iterable, offset: int, limit: int | None):
    stop = None if limit is None else offset + limit
    return itertools.islice(stream, offset, stop)


def _emit_codes(args, pairs) -> int:
    """pairs: iterable of (index, code, generators-to-print)."""
    field = find_irreducible(args.p, args.m)
    lines = []
    for index, code, gens in pairs:
        if args.format == "json":
            lines.append(_json_dumps(code_to_obj(code, gens)))
        else:
            lines.append(_code_text(field, code, gens, index))
    _emit("\n".join(lines) if lines else "(no codes)", args.out)
    return 0


def _cmd_enumerate(args) -> int:
    if args.sample is not None:
        if args.offset or args.limit is not None:
            raise ValueError("--sample cannot be combined with --offset/--limit")
        stream = sample_codes(args.p, args.m, args.s, args.sample, seed=args.seed)
        pairs = ((i, code, code.generators) for i, code in enumerate(stream))
        return _emit_codes(args, pairs)
    stream = enumerate_codes(args.p, args.m, args.s)
    indexed = _window(enumerate(stream), args.offset, args.limit)
    pairs = ((i, code, code.generators) for i, code in indexed)
    return _emit_codes(args, pairs)


def _cmd_negacyclic(args) -> int:
    stream = enumerate_codes(args.p, args.m, args.s)
    indexed = _window(enumerate(stream), args.offset, args.limit)
    pairs = ((i, code, to_negacyclic(code)) for i, code in indexed)
    return _emit_codes(args, pairs)


def _cmd_build(args) -> int:
    field = find_irreducible(args.p, args.m)
    match = [d for d in classify_cases(args.p, args.s) if d.k == args.k]
    if not match:
        raise ValueError(f"no case has k={args.k} for p={args.p}, s={args.s}")
    code = build_code(match[0], _parse_params(field, args.params), field)
    if args.format == "json":
        _emit(_json_dumps(code_to_obj(code)), args.out)
    else:
        _emit(_code_text(field, code, code.generators, 0), args.out)
    return 0


def _cmd_verify(args) -> int:
    stream = enumerate_codes(args.p, args.m, args.s)
    if not args.all:
        stream = _window(stream, args.offset, args.limit)
    good = total = 0
    for code in stream:
        gens = to_negacyclic(code) if args.negacyclic else code.generators
        total += 1
        good += bool(is_self_dual(gens, args.s))
    _emit(f"{good}/{total} self-dual", args.out)
    return 0 if good == total else 1


# ---------------------------------------------------------------------------
# Parser

def _add_common(sub, *, m: bool = True, s: bool = True) -> None:
    sub.add_argument("-p", type=int, required=True, help="odd prime characteristic")
    if m:
        sub.add_argument("-m", type=int, required=True, help="extension degree of the field")
    if s:
        sub.add_argument("-s", type=int, required=True, help="length exponent: codes have length p^s")


def _add_window(sub) -> None:
    sub.add_argument("--offset", type=int, default=0, help="skip this many codes")
    sub.add_argument("--limit", type=int, default=None, help="stop after this many codes")


def _add_io(sub, formats=("text", "json")) -> None:
    sub.add_argument("--format", choices=formats, default="text", help="output format")
    sub.add_argument("--out", default=None, metavar="FILE", help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdcyclic",
        description="Self-dual cyclic and negacyclic codes of length p^s over F_{p^m} + u F_{p^m}.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    g = subs.add_parser("gmatrix", help="print reciprocal matrices or solution-basis columns")
    g.add_argument("-p", type=int, required=True, help="odd prime characteristic")
    g.add_argument("--lambda", dest="lam", type=int, default=None, help="print the full order-p^lambda matrix")
    g.add_argument("--l", dest="l", type=int, default=None, help="print the l x l truncation G_l")
    g.add_argument("--delta", type=int, default=None, help="with --l: print the truncated solution-basis columns")
    shift = g.add_mutually_exclusive_group()
    shift.add_argument("--plus-i", action="store_true", help="print G + I instead of G")
    shift.add_argument("--minus-i", action="store_true", help="print G - I instead of G")
    _add_io(g)
    g.set_defaults(func=_cmd_gmatrix)

    c = subs.add_parser("count", help="exact number of self-dual cyclic codes")
    _add_common(c)
    _add_io(c, formats=("text", "json", "csv"))
    c.set_defaults(func=_cmd_count)

    e = subs.add_parser("enumerate", help="stream every self-dual cyclic code")
    _add_common(e)
    _add_window(e)
    e.add_argument("--sample", type=int, default=None, help="emit this many uniform random codes instead")
    e.add_argument("--seed", type=int, default=0, help="seed for --sample")
    _add_io(e)
    e.set_defaults(func=_cmd_enumerate)

    b = subs.add_parser("build", help="build one code from its torsion exponent and parameters")
    _add_common(b)
    b.add_argument("--k", type=int, required=True, help="torsion exponent, 0 <= k <= (p^s-1)/2")
    b.add_argument(
        "--params",
        default="",
        help="comma-separated field elements, each as colon-joined coefficients low degree first (e.g. '2,1' or '1:2,0:1')",
    )
    _add_io(b)
    b.set_defaults(func=_cmd_build)

    v = subs.add_parser("verify", help="independently verify self-duality of enumerated codes")
    _add_common(v)
    v.add_argument("--all", action="store_true", help="verify the complete family")
    _add_window(v)
    v.add_argument("--negacyclic", action="store_true", help="verify the negacyclic images instead")
    v.add_argument("--out", default=None, metavar="FILE")
    v.set_defaults(func=_cmd_verify)

    n = subs.add_parser("negacyclic", help="stream the negacyclic images of all self-dual cyclic codes")
    _add_common(n)
    _add_window(n)
    _add_io(n)
    n.set_defaults(func=_cmd_negacyclic)

    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    """Run one CLI invocation; returns the process exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
