"""Batch command line front end.

Subcommands compute signatures, predictions, dimensions and characters
for a single highest weight, dump the classification tables and basis
sets for an algebra, or sweep a whole family of weights checking the
closed-form prediction against the algorithm.  Exit codes: 0 success,
1 usage error, 2 a sweep or check found a disagreement, 3 an internal
invariant failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .branchsig import Signature, restriction_data, w0_signature
from .charfreud import full_character, freudenthal_mult, weyl_dim
from .classify import (
    Prediction,
    _radical_exact_sum,
    hilbert_basis,
    ideal_basis,
    predict,
    table_entry,
)
from .rootsys import (
    AlgebraId,
    LatticeMembershipError,
    RootSystem,
    Weight,
    build_root_system,
    from_eps,
    parse_algebra,
    radical_congruences,
)


class UsageError(Exception):
    """Bad user input detected after argument parsing."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 is reserved for
    # verification disagreements here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_weight(text: str, rs: RootSystem, *, eps: bool) -> Weight:
    tokens = [t.strip() for t in text.split(",")]
    if eps:
        try:
            coords = tuple(Fraction(t) for t in tokens)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad coordinate in {text!r}")
        if len(coords) != rs.ambient:
            raise UsageError(
                f"expected {rs.ambient} coordinates for {rs.algebra}, "
                f"got {len(coords)}")
        try:
            w = from_eps(coords, rs)
        except LatticeMembershipError as e:
            raise UsageError(str(e))
    else:
        try:
            w = tuple(int(t) for t in tokens)
        except ValueError:
            raise UsageError(f"bad coefficient in {text!r}")
        if len(w) != rs.rank:
            raise UsageError(
                f"expected {rs.rank} coefficients for {rs.algebra}, "
                f"got {len(w)}")
    for i, c in enumerate(w):
        if c < 0:
            raise UsageError(f"weight is not dominant: c{i + 1} = {c}")
    return w


def _kind_of(sig: Signature) -> tuple[str, int | None]:
    if sig.p + sig.q == 0:
        return "NonRadical", None
    if sig.q == 0:
        return "Pure", 1
    if sig.p == 0:
        return "Pure", -1
    return "Mixed", None


def _agrees(pred: Prediction, sig: Signature) -> bool:
    kind, sign = _kind_of(sig)
    return (pred.kind, pred.sign) == (kind, sign)


def _fmt_weight(w) -> str:
    return ",".join(str(c) for c in w)


def _fmt_matrix(name: str, rows) -> str:
    head = f"{name} = ["
    pad = " " * len(head)
    out = []
    for i, row in enumerate(rows):
        body = "[" + ",".join(str(x) for x in row) + "]"
        out.append((head if i == 0 else pad) + body +
                   ("," if i < len(rows) - 1 else "]"))
    return "\n".join(out)


def _fmt_congruence(coeffs, modulus) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        terms.append(f"c{i + 1}" if c == 1 else f"{c}*c{i + 1}")
    lhs = " + ".join(terms) if terms else "0"
    return f"{lhs} == 0 (mod {modulus})"


def _cmd_signature(id: AlgebraId, lam: Weight, as_json: bool) -> tuple[str, int]:
    sig = w0_signature(id, lam)
    dim = weyl_dim(lam, build_root_system(id))
    kind, sign = _kind_of(sig)
    if as_json:
        payload = {"algebra": str(id), "weight": list(lam), "dim": dim,
                   "p": sig.p, "q": sig.q, "kind": kind, "sign": sign}
        return json.dumps(payload, indent=1), 0
    lines = [f"algebra: {id}",
             f"weight: {_fmt_weight(lam)}",
             f"dim: {dim}",
             f"zero-weight multiplicity: {sig.p + sig.q}",
             f"signature: ({sig.p}, {sig.q})"]
    if kind == "NonRadical":
        lines.append("verdict: trivial zero weight space")
    elif kind == "Mixed":
        lines.append("verdict: mixed")
    else:
        lines.append(f"verdict: pure, sign {sign:+d}")
    return "\n".join(lines), 0


def _cmd_predict(id: AlgebraId, lam: Weight, as_json: bool,
                 check: bool) -> tuple[str, int]:
    pred = predict(id, lam)
    code = 0
    sig = None
    if check:
        sig = w0_signature(id, lam)
        if not _agrees(pred, sig):
            code = 2
    if as_json:
        payload = {"algebra": str(id), "weight": list(lam),
                   "kind": pred.kind, "sign": pred.sign}
        if sig is not None:
            payload["dim"] = weyl_dim(lam, build_root_system(id))
            payload["p"] = sig.p
            payload["q"] = sig.q
        return json.dumps(payload, indent=1), code
    lines = [f"algebra: {id}", f"weight: {_fmt_weight(lam)}"]
    if pred.kind == "Pure":
        lines.append(f"prediction: Pure, sign {pred.sign:+d}")
    elif pred.kind == "NonRadical":
        lines.append("prediction: NonRadical (zero weight space is trivial)")
    else:
        lines.append("prediction: Mixed")
    if sig is not None:
        lines.append(f"signature: ({sig.p}, {sig.q})")
        lines.append(f"agreement: {'yes' if code == 0 else 'NO'}")
    return "\n".join(lines), code


def _cmd_dimension(id: AlgebraId, lam: Weight, as_json: bool) -> tuple[str, int]:
    dim = weyl_dim(lam, build_root_system(id))
    if as_json:
        payload = {"algebra": str(id), "weight": list(lam), "dim": dim}
        return json.dumps(payload, indent=1), 0
    return "\n".join([f"algebra: {id}", f"weight: {_fmt_weight(lam)}",
                      f"dim: {dim}"]), 0


def _cmd_character(id: AlgebraId, lam: Weight, as_json: bool) -> tuple[str, int]:
    rs = build_root_system(id)
    char = full_character(tuple(lam), rs)
    rows = sorted(char.entries.items(), reverse=True)
    if as_json:
        payload = {"algebra": str(id), "weight": list(lam),
                   "dim": char.total_dim(),
                   "character": [{"weight": list(mu), "mult": m}
                                 for mu, m in rows]}
        return json.dumps(payload, indent=1), 0
    lines = [f"algebra: {id}", f"weight: {_fmt_weight(lam)}",
             f"dim: {char.total_dim()}", "weights:"]
    lines.extend(f"{_fmt_weight(mu)}: {m}" for mu, m in rows)
    return "\n".join(lines), 0


def _cmd_basis(id: AlgebraId, as_json: bool, *, ideal: bool) -> tuple[str, int]:
    basis = sorted(ideal_basis(id) if ideal else hilbert_basis(id))
    label = "ideal basis" if ideal else "monoid generators"
    if as_json:
        payload = [{"algebra": str(id), "weight": list(w)} for w in basis]
        return json.dumps(payload, indent=1), 0
    lines = [f"algebra: {id}", f"{label} ({len(basis)} elements):"]
    lines.extend(_fmt_weight(w) for w in basis)
    return "\n".join(lines), 0


def _cmd_tables(id: AlgebraId, as_json: bool) -> tuple[str, int]:
    entries = [table_entry(id, i) for i in range(1, id.rank + 1)]
    congs = radical_congruences(id)
    matrix = restriction_data(id).matrix
    if as_json:
        payload = {
            "algebra": str(id),
            "classification": [
                {"index": e.index, "multiplier": e.multiplier,
                 "pure_limit": e.pure_limit, "sign": e.sign}
                for e in entries],
            "congruences": [{"coeffs": list(v), "modulus": m}
                            for v, m in congs],
            "matrix": [list(row) for row in matrix],
        }
        return json.dumps(payload, indent=1), 0
    lines = [f"algebra: {id}", "classification:"]
    for e in entries:
        limit = "unbounded" if e.pure_limit is None else str(e.pure_limit)
        sign = "n/a" if e.sign is None else f"{e.sign:+d}"
        lines.append(f"  i={e.index}: multiplier {e.multiplier}, "
                     f"limit {limit}, sign {sign}")
    lines.append("root-lattice congruences:")
    if congs:
        lines.extend(f"  {_fmt_congruence(v, m)}" for v, m in congs)
    else:
        lines.append("  (none; every dominant weight is radical)")
    lines.append("restriction matrix:")
    lines.append(_fmt_matrix(str(id), matrix))
    return "\n".join(lines), 0


def _cmd_verify(id: AlgebraId, as_json: bool, max_sum: int,
                max_dim: int | None) -> tuple[str, int]:
    rs = build_root_system(id)
    checked = 0
    bad = []
    for total in range(max_sum + 1):
        for lam in _radical_exact_sum(id, total):
            if max_dim is not None and weyl_dim(lam, rs) > max_dim:
                continue
            sig = w0_signature(id, lam)
            pred = predict(id, lam)
            checked += 1
            if not _agrees(pred, sig):
                bad.append((lam, pred, sig))
    code = 2 if bad else 0
    if as_json:
        payload = {
            "algebra": str(id), "max_sum": max_sum, "max_dim": max_dim,
            "checked": checked,
            "disagreements": [
                {"weight": list(lam), "kind": pred.kind, "sign": pred.sign,
                 "p": sig.p, "q": sig.q}
                for lam, pred, sig in bad],
        }
        return json.dumps(payload, indent=1), code
    lines = [f"algebra: {id}",
             f"max coefficient sum: {max_sum}"]
    if max_dim is not None:
        lines.append(f"max dimension: {max_dim}")
    lines.append(f"checked: {checked}")
    lines.append(f"disagreements: {len(bad)}")
    for lam, pred, sig in bad:
        lines.append(f"disagree: weight {_fmt_weight(lam)} predicted "
                     f"{pred.kind}/{pred.sign} computed ({sig.p}, {sig.q})")
    return "\n".join(lines), code


def _build_parser() -> _Parser:
    parser = _Parser(prog="w0sig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, *, weight, verify=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("algebra", help="algebra name, e.g. A3 or E8")
        if weight:
            p.add_argument("weight",
                           help="comma-separated coefficients, e.g. 1,0,2")
            p.add_argument("--eps", action="store_true",
                           help="read the weight as exact rational "
                                "ambient coordinates")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.add_argument("--out", metavar="FILE",
                       help="write the report to FILE instead of stdout")
        if verify:
            p.add_argument("--max-sum", type=int, required=True, metavar="N",
                           help="bound on the sum of Dynkin coefficients")
            p.add_argument("--max-dim", type=int, metavar="D",
                           help="skip weights whose dimension exceeds D")
        return p

    add("signature", "compute the longest-element signature", weight=True)
    p = add("predict", "closed-form purity prediction", weight=True)
    p.add_argument("--check", action="store_true",
                   help="also run the algorithm and compare")
    add("dimension", "dimension of the irreducible", weight=True)
    add("character", "full weight multiset of the irreducible", weight=True)
    add("ideal-basis", "minimal generators of the mixed ideal", weight=False)
    add("hilbert-basis", "generators of the dominant radical monoid",
        weight=False)
    add("tables", "dump classification data for an algebra", weight=False)
    add("verify", "sweep dominant radical weights, compare prediction "
        "against the algorithm", weight=False, verify=True)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    try:
        id = parse_algebra(args.algebra)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        if args.command in ("signature", "predict", "dimension", "character"):
            rs = build_root_system(id)
            lam = _parse_weight(args.weight, rs, eps=args.eps)
            if args.command == "signature":
                report, code = _cmd_signature(id, lam, args.json)
            elif args.command == "predict":
                report, code = _cmd_predict(id, lam, args.json, args.check)
            elif args.command == "dimension":
                report, code = _cmd_dimension(id, lam, args.json)
            else:
                report, code = _cmd_character(id, lam, args.json)
        elif args.command == "ideal-basis":
            report, code = _cmd_basis(id, args.json, ideal=True)
        elif args.command == "hilbert-basis":
            report, code = _cmd_basis(id, args.json, ideal=False)
        elif args.command == "tables":
            report, code = _cmd_tables(id, args.json)
        else:
            if args.max_sum < 0:
                raise UsageError("--max-sum must be nonnegative")
            report, code = _cmd_verify(id, args.json, args.max_sum,
                                       args.max_dim)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (AssertionError, RuntimeError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report + "\n")
    else:
        print(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
