"""Command-line front end.

Exit codes: 0 success, 1 a checked property is false, 2 input/parse/domain
error, 3 enumeration capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from autcodes import classify, dihedralconstruct, fixedinteraction, primedecomp, twopmodule
from autcodes.cyclotomic import coeff_str, ideal_decomposition, poly_str
from autcodes.errors import CapacityError, DomainError, InputError, ParseError
from autcodes.gf2linalg import (
    DEFAULT_CAP,
    BinaryCode,
    format_mat,
    min_distance,
    read_mat,
    self_duality,
    weight_enumerator,
)
from autcodes.instances import hamming8, involutions
from autcodes.permaction import (
    Permutation,
    cycle_type,
    is_automorphism,
    projected_fixed_code,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


class Output:
    """Collects key/value results and renders them as text or JSON."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.lines: list[str] = []

    def put(self, key: str, value, text: str | None = None) -> None:
        self.data[key] = value
        if text is not None:
            self.lines.append(text)
        elif isinstance(value, bool):
            self.lines.append(f"{key}={'true' if value else 'false'}")
        elif isinstance(value, list):
            self.lines.append(f"{key}:")
            self.lines += [f"  {v}" for v in value]
        else:
            self.lines.append(f"{key}={value}")

    def text(self, line: str) -> None:
        self.lines.append(line)

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, sort_keys=True))
        else:
            print("\n".join(self.lines))


# ---------------------------------------------------------------------------
# input helpers


def _load_code(path: str) -> BinaryCode:
    try:
        return read_mat(path)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc


def _perm(text: str, n: int) -> Permutation:
    return Permutation.parse(text, n)


def _split_perms(texts: Sequence[str] | None, n: int) -> list[Permutation]:
    out = []
    for chunk in texts or []:
        out += [_perm(t, n) for t in chunk.split(";") if t.strip()]
    return out


def parse_bvec(text: str, p: int) -> list[tuple[int, ...]]:
    """One vector per line; entries comma-separated coefficient strings of length p."""
    vectors = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entries = []
        for e in line.split(","):
            e = e.strip()
            if len(e) != p or any(ch not in "01" for ch in e):
                raise ParseError(f"bad BVEC entry {e!r} (need {p} binary digits)")
            entries.append(sum(1 << i for i, ch in enumerate(e) if ch == "1"))
        vectors.append(tuple(entries))
    if len({len(v) for v in vectors}) > 1:
        raise ParseError("BVEC vectors have different lengths")
    return vectors


def format_bvec(vectors: Sequence[Sequence[int]], p: int) -> str:
    return "".join(",".join(coeff_str(a, p) for a in v) + "\n" for v in vectors)


def _qvec_str(u: Sequence[int], p: int) -> str:
    return ",".join(coeff_str(a, p) for a in u)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args, out: Output) -> int:
    C = _load_code(args.code)
    sd = self_duality(C)
    out.put("n", C.n)
    out.put("k", C.k)
    out.put("d", min_distance(C, args.cap) if C.k else None)
    out.put("self_orthogonal", sd.self_orthogonal)
    out.put("self_dual", sd.self_dual)
    wd = weight_enumerator(C, args.cap)
    out.put("weight_enumerator", wd, "weights: " + " ".join(f"{w}:{a}" for w, a in enumerate(wd) if a))
    return EXIT_OK


def cmd_aut_check(args, out: Output) -> int:
    C = _load_code(args.code)
    sigma = _perm(args.perm, C.n)
    ok = is_automorphism(C, sigma)
    out.put("permutation", str(sigma))
    out.put("order", sigma.order)
    out.put("automorphism", ok)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_decompose(args, out: Output) -> int:
    C = _load_code(args.code)
    sigma = _perm(args.perm, C.n)
    d = primedecomp.decompose(C, sigma)
    dec = ideal_decomposition(d.p)
    out.put("type", str(d.ctype))
    out.put("s", dec.s)
    out.put("factors", [poly_str(q) for q in dec.factors])
    out.put("idempotents", [poly_str(e) for e in dec.idempotents])
    out.put("dim_C", C.k)
    out.put("dim_fixed", d.fixed.k)
    out.put("dim_even", d.even.k)
    out.put("projected", d.projected.rows())
    out.put("projected_self_dual", self_duality(d.projected).self_dual)
    if dec.s == d.p - 1:
        image = primedecomp.phi_p_image(d)
        out.put("phi_image", [_qvec_str(u, d.p) for u in image])
    else:
        dims = primedecomp.component_dims(C, sigma)
        out.put("component_dims", [{"ideal": j, "dim": k} for j, k in dims],
                "component_dims: " + " ".join(f"I{j}:{k}" for j, k in dims))
    return EXIT_OK


def cmd_yorgov(args, out: Output) -> int:
    C = _load_code(args.code)
    res = primedecomp.yorgov_check(C, _perm(args.perm, C.n))
    out.put("a", res.a)
    out.put("b", res.b)
    return EXIT_OK if res.a == res.b else EXIT_FALSE


def _context(args) -> twopmodule.TwoPContext:
    C = _load_code(args.code)
    return twopmodule.make_context(C, _perm(args.perm, C.n))


def cmd_profile(args, out: Output) -> int:
    ctx = _context(args)
    prof = twopmodule.module_profile(ctx)
    report = twopmodule.check_profile_constraints(prof, ctx)
    proj = twopmodule.is_projective(ctx)
    out.put("p", ctx.p)
    out.put("w", ctx.w)
    out.put("x", ctx.x)
    out.put("y", list(prof.y), "y: " + " ".join(map(str, prof.y)))
    out.put("z", list(prof.z), "z: " + " ".join(map(str, prof.z)))
    out.put(
        "constraints",
        [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
        "\n".join(f"constraint {c.name}: {'pass' if c.passed else 'FAIL'} ({c.detail})" for c in report.checks),
    )
    out.put("pairing", report.pairing)
    out.put("projective_criterion", proj.criterion)
    out.put("projective_oracle", proj.oracle)
    return EXIT_OK if report.all_passed else EXIT_FALSE


def cmd_projective(args, out: Output) -> int:
    ctx = _context(args)
    proj = twopmodule.is_projective(ctx)
    chain = twopmodule.bouyuklieva_chain(ctx.code, ctx.sigma_2)
    cor = twopmodule.corollary1_check(ctx)
    out.put("criterion", proj.criterion)
    out.put("oracle", proj.oracle)
    out.put("chain_holds", chain.holds)
    out.put("dim_phi", chain.dim_phi)
    out.put("dim_proj", chain.dim_proj)
    out.put("corollary1_applicable", cor.applicable)
    if cor.applicable:
        out.put("corollary1_bound_holds", cor.bound_holds)
    ok = proj.criterion == proj.oracle and chain.holds and (cor.bound_holds or not cor.applicable)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_construct_dihedral(args, out: Output) -> int:
    A = _load_code(args.a_file)
    try:
        B = parse_bvec(Path(args.b_file).read_text(), args.p)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {args.b_file}") from exc
    ctx = dihedralconstruct.canonical_perms(args.p, args.p * A.n)
    C = dihedralconstruct.construct(dihedralconstruct.DihedralPair(A, tuple(B)), ctx)
    if args.out:
        Path(args.out).write_text(format_mat(C))
    if out.as_json:
        out.put("n", C.n)
        out.put("k", C.k)
        out.put("basis", C.rows())
    else:
        out.text(format_mat(C).rstrip("\n"))
    return EXIT_OK


def cmd_extract_dihedral(args, out: Output) -> int:
    C = _load_code(args.code)
    ctx = dihedralconstruct.canonical_perms(args.p, C.n)
    pair = dihedralconstruct.extract_pair(C, ctx, require_projective=args.require_projective)
    if args.a_out:
        Path(args.a_out).write_text(format_mat(pair.A))
    if args.b_out:
        Path(args.b_out).write_text(format_bvec(pair.B, args.p))
    out.put("A", pair.A.rows())
    out.put("B", [_qvec_str(u, args.p) for u in pair.B])
    return EXIT_OK


def cmd_fixed_sum(args, out: Output) -> int:
    C = _load_code(args.code)
    perms = _split_perms(args.perms, C.n)
    D = fixedinteraction.sum_fixed_codes(C, perms)
    out.put("dim", D.k)
    out.put("basis", D.rows())
    status = EXIT_OK
    if args.h_perms:
        eps0 = _perm(args.eps0, C.n) if args.eps0 else perms[0]
        res = fixedinteraction.theorem6_check(C, perms, _split_perms(args.h_perms, C.n), eps0)
        out.put("theorem6_holds", res.holds)
        status = EXIT_OK if res.holds else EXIT_FALSE
    if args.sigma_p:
        qp = fixedinteraction.quotient_profile(C, perms, _perm(args.sigma_p, C.n))
        out.put("quotient", qp.as_dict(), " ".join(f"{k}={v}" for k, v in qp.as_dict().items()))
    return status


def cmd_remark7(args, out: Output) -> int:
    C = _load_code(args.code)
    rep = fixedinteraction.remark7_check(C, _perm(args.perm_p, C.n), _perm(args.perm_q, C.n))
    for key, value in rep.as_dict().items():
        out.put(key, value)
    flags = [rep.a, rep.b, rep.c] + ([rep.d] if rep.d is not None else [])
    return EXIT_OK if all(flags) else EXIT_FALSE


def cmd_classify_orders(args, out: Output) -> int:
    try:
        delta = frozenset(int(d) for d in args.delta.split(",") if d.strip())
    except ValueError as exc:
        raise ParseError(f"bad --delta {args.delta!r}") from exc
    params = classify.ClassifyParams(
        n=args.n,
        admissible=frozenset(),
        f5=args.f5,
        delta=delta,
        five_cap=args.five_cap,
    )
    orders = classify.burnside_order_list(params)
    if args.json:
        out.data = classify.ClassifySummary(params, orders).as_dict()
    else:
        out.lines = [str(m) for m in orders]
    return EXIT_OK


def cmd_remark3_search(args, out: Output) -> int:
    C = _load_code(args.code) if args.code else hamming8()
    if args.perms:
        candidates = _split_perms(args.perms, C.n)
    elif C.n <= 12:
        candidates = list(involutions(C.n))
    else:
        raise InputError("remark3-search enumerates involutions only for n <= 12; pass --perms")
    good, bad = [], []
    for s in candidates:
        if s.order != 2 or not is_automorphism(C, s):
            continue
        ct = cycle_type(s, 2)
        entry = f"{s} {ct}"
        (good if self_duality(projected_fixed_code(C, s)).self_dual else bad).append(entry)
    out.put("n", C.n)
    out.put("order2_automorphisms", len(good) + len(bad))
    out.put("self_dual_projection", good)
    out.put("not_self_dual_projection", bad)
    out.put("both_occur", bool(good) and bool(bad))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    parser = argparse.ArgumentParser(
        prog="autcodes", description="Automorphism-aware analysis of binary linear codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, code: bool = True, perm: bool = False):
        sp = sub.add_parser(name, parents=[common], help=help, description=help)
        if code:
            sp.add_argument("--code", required=True, help="generator matrix in MAT format")
        if perm:
            sp.add_argument("--perm", required=True, help='permutation, e.g. "(1,2,3)(4,5,6)"')
        sp.set_defaults(func=func)
        return sp

    sp = add("analyze", cmd_analyze, "dimension, self-duality, minimum distance, weights")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help=f"enumeration dimension cap (default {DEFAULT_CAP})")
    add("aut-check", cmd_aut_check, "test whether a permutation is an automorphism", perm=True)
    add("decompose", cmd_decompose, "fixed/even decomposition for an odd prime order automorphism", perm=True)
    add("yorgov", cmd_yorgov, "self-duality versus projection + Hermitian image", perm=True)
    add("profile", cmd_profile, "module profile for an order-2p automorphism", perm=True)
    add("projective", cmd_projective, "projectivity criterion and oracle for an order-2p automorphism", perm=True)

    sp = add("construct-dihedral", cmd_construct_dihedral, "build a code from a pair (A, B)", code=False)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a-file", required=True, help="A as a MAT file (length c)")
    sp.add_argument("--b-file", required=True, help="B as a BVEC file")
    sp.add_argument("--out", help="also write the MAT result here")

    sp = add("extract-dihedral", cmd_extract_dihedral, "recover (A, B) from a dihedral code")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--require-projective", action="store_true",
                    help="also demand a self-dual projected fixed code of sigma_2")
    sp.add_argument("--a-out")
    sp.add_argument("--b-out")

    sp = add("fixed-sum", cmd_fixed_sum, "sum of fixed codes; optional semidirect-product and quotient checks")
    sp.add_argument("--perms", action="append", required=True, help="';'-separated permutations")
    sp.add_argument("--h-perms", action="append", help="generators of H acting on <perms>")
    sp.add_argument("--eps0", help="distinguished element of E (default: first of --perms)")
    sp.add_argument("--sigma-p", help="permutation acting on the quotient D^perp/D")

    sp = add("remark7", cmd_remark7, "flags for two commuting automorphisms of prime order")
    sp.add_argument("--perm-p", required=True)
    sp.add_argument("--perm-q", required=True)

    sp = add("classify-orders", cmd_classify_orders, "Burnside order candidates", code=False)
    sp.add_argument("--n", type=int, default=72, help="code length (default 72)")
    sp.add_argument("--f5", type=int, default=2, help="fixed points of an order-5 element (default 2)")
    sp.add_argument("--delta", default="0,1", help="normalizer exponents (default 0,1)")
    sp.add_argument("--five-cap", type=int, default=1, help="largest power of 5 (default 1)")

    sp = add("remark3-search", cmd_remark3_search,
             "order-2 automorphisms with and without self-dual projected fixed code", code=False)
    sp.add_argument("--code", help="MAT file (default: extended Hamming [8,4,4])")
    sp.add_argument("--perms", action="append", help="candidate involutions (required when n > 12)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json)
    try:
        status = args.func(args, out)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.emit()
    return status


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
