"""Shared helpers for the test suite."""

from __future__ import annotations

from w0sig.branchsig import (
    RestrictionData,
    Signature,
    abelian_signature,
    peel_branch,
    restrict_character,
    sl2_signature,
    tensor_signature,
)
from w0sig.charfreud import full_character
from w0sig.classify import Prediction
from w0sig.rootsys import AlgebraId, build_root_system


def all_algebras(max_rank: int = 8) -> list[AlgebraId]:
    """Every valid id up to the given rank, repeated small types included."""
    out = []
    for fam, lo in [("A", 1), ("B", 2), ("C", 2), ("D", 3)]:
        out.extend(AlgebraId(fam, r) for r in range(lo, max_rank + 1))
    out.extend(AlgebraId("E", r) for r in (6, 7, 8) if r <= max_rank)
    if max_rank >= 4:
        out.append(AlgebraId("F", 4))
    out.append(AlgebraId("G", 2))
    return out


def _exact_sum(prefix: list[int], left: int, rank: int):
    if len(prefix) == rank - 1:
        yield tuple(prefix) + (left,)
        return
    for c in range(left + 1):
        yield from _exact_sum(prefix + [c], left - c, rank)


def dominant_weights(rank: int, max_sum: int):
    """All dominant weights with coefficient sum at most max_sum."""
    for total in range(max_sum + 1):
        yield from _exact_sum([], total, rank)


def signature_via(id: AlgebraId, lam, rd: RestrictionData) -> Signature:
    """Signature recomputed through an explicitly supplied restriction."""
    rs = build_root_system(id)
    parts = peel_branch(restrict_character(full_character(tuple(lam), rs), rd))
    p = q = 0
    for rw, m in parts:
        sig = abelian_signature(rw.charges)
        for k in rw.sl2_labels:
            sig = tensor_signature(sig, sl2_signature(k))
        p += m * sig.p
        q += m * sig.q
    return Signature(p, q)


def prediction_matches(pred: Prediction, sig: Signature) -> bool:
    """Shape agreement between the closed form and a computed signature."""
    if pred.kind == "NonRadical":
        return sig.p == 0 and sig.q == 0
    if pred.kind == "Mixed":
        return sig.p > 0 and sig.q > 0
    if sig.p + sig.q == 0 or (sig.p > 0 and sig.q > 0):
        return False
    return pred.sign == (1 if sig.q == 0 else -1)
