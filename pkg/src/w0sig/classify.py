"""Closed-form classification of signatures, and the mixed-weight monoid.

For each node of the diagram three quantities settle the signature of
every weight supported on that node alone: the least multiple of the
fundamental weight lying in the root lattice, the number of steps along
that ray whose signature stays pure, and the alternating sign.  A
predictor reads them off; everything not covered is mixed, and the
mixed weights form an ideal of the monoid of dominant radical weights
whose minimal generators are computed by bounded search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .branchsig import w0_signature
from .rootsys import (
    AlgebraId,
    Weight,
    build_root_system,
    is_radical,
    radical_congruences,
)


@dataclass(frozen=True)
class ClassEntry:
    """Per-node classification data.

    `multiplier` is the least k making k times the fundamental weight
    radical; `pure_limit` counts how many of its multiples are pure
    (None meaning all of them); `sign` alternates along the ray and is
    undefined exactly when no nonzero multiple is pure.
    """

    index: int
    multiplier: int
    pure_limit: int | None
    sign: int | None

    def __post_init__(self):
        assert (self.sign is None) == (self.pure_limit == 0)


@dataclass(frozen=True)
class Prediction:
    kind: str  # "NonRadical" | "Pure" | "Mixed"
    sign: int | None = None


def table_entry(id: AlgebraId, i: int) -> ClassEntry:
    """Classification data for the i-th node (1-based, Bourbaki order)."""
    fam, r = id.family, id.rank
    if not 1 <= i <= r:
        raise ValueError(f"index {i} out of range for {id}")
    if fam == "A":
        if i in (1, r):
            sign = -1 if ((r + 1) // 2) % 2 else 1
            return ClassEntry(i, r + 1, None, sign)
        p = (r + 1) // gcd(i, r + 1)
        if r == 3:
            return ClassEntry(i, p, None, 1)
        return ClassEntry(i, p, 0, None)
    if fam == "B":
        sign = -1 if (r * i - i // 2) % 2 else 1
        if i == 1:
            return ClassEntry(i, 1, None, sign)
        if i == r:
            return ClassEntry(i, 2, None if r <= 2 else 1, sign)
        if i == 2:
            return ClassEntry(i, 1, 2, sign)
        return ClassEntry(i, 1, 1, sign)
    if fam == "C":
        if i == 1:
            return ClassEntry(i, 2, None, -1)
        if i == 2:
            return ClassEntry(i, 1, None if r == 2 else 2, 1)
        if i % 2:
            if i == r == 3:
                return ClassEntry(i, 2, 1, -1)
            return ClassEntry(i, 2, 0, None)
        return ClassEntry(i, 1, 2 if i == r == 4 else 1, 1)
    if fam == "D":
        if r % 2:
            if i == 1:
                return ClassEntry(i, 2, None, 1)
            if i >= r - 1:
                if r == 3:
                    return ClassEntry(i, 4, None, 1)
                return ClassEntry(i, 4, 0, None)
            return ClassEntry(i, 2 if i % 2 else 1, 0, None)
        if i == 1:
            return ClassEntry(i, 2, None, 1)
        if i >= r - 1:
            sign = -1 if (r // 2) % 2 else 1
            return ClassEntry(i, 2, None if r == 4 else 1, sign)
        if i == 2:
            return ClassEntry(i, 1, 2, -1)
        if i % 2:
            return ClassEntry(i, 2, 0, None)
        return ClassEntry(i, 1, 1, -1 if (i // 2) % 2 else 1)
    if fam == "E":
        if r == 6:
            if i in (1, 3, 5, 6):
                return ClassEntry(i, 3, 0, None)
            return ClassEntry(i, 1, 0, None)
        if r == 7:
            data = {1: (1, 2, -1), 2: (2, 0, None), 3: (1, 0, None),
                    4: (1, 0, None), 5: (2, 0, None), 6: (1, 1, 1),
                    7: (2, 1, -1)}
            return ClassEntry(i, *data[i])
        if i == 1:
            return ClassEntry(i, 1, 1, 1)
        if i == 8:
            return ClassEntry(i, 1, 2, -1)
        return ClassEntry(i, 1, 0, None)
    if fam == "F":
        data = {1: (1, 2, -1), 2: (1, 0, None), 3: (1, 0, None),
                4: (1, 2, 1)}
        return ClassEntry(i, *data[i])
    return ClassEntry(i, 1, 2, -1)  # G2, both nodes


def _pure_family_power(id: AlgebraId, w: Weight):
    """If w is a pure-family multiple, the pair (entry, k); else None."""
    support = [j for j, c in enumerate(w) if c]
    if not support:
        return None  # the zero weight is handled by callers
    if len(support) > 1:
        return None
    j = support[0]
    entry = table_entry(id, j + 1)
    k, rem = divmod(w[j], entry.multiplier)
    assert rem == 0, "single-node radical weight not a multiple of the least one"
    if entry.pure_limit is None or k <= entry.pure_limit:
        return entry, k
    return None


def predict(id: AlgebraId, lam: Weight) -> Prediction:
    """Signature shape of the irreducible with highest weight lam,
    from the tabulated data alone (no character computation)."""
    rs = build_root_system(id)
    if any(c < 0 for c in lam):
        raise ValueError(f"weight {lam} is not dominant")
    lam = tuple(lam)
    if not is_radical(lam, rs):
        return Prediction("NonRadical")
    if not any(lam):
        return Prediction("Pure", 1)
    hit = _pure_family_power(id, lam)
    if hit is None:
        return Prediction("Mixed")
    entry, k = hit
    sign = 1 if entry.sign == 1 or k % 2 == 0 else -1
    return Prediction("Pure", sign)


# ---------------------------------------------------------------------------
# the monoid of dominant radical weights and its mixed ideal

def _search_bound(id: AlgebraId) -> tuple[int, int]:
    """Coefficient-sum search bound and the width of the audit shell.

    Monoid generators have every coefficient below the node multiplier,
    and minimal mixed elements exceed a pure element by at most one
    generator, so everything sought fits well under the bound; a find
    inside the top shell means the bound reasoning broke, and the search
    errors out instead of returning a silent truncation.
    """
    max_p = max(table_entry(id, i).multiplier for i in range(1, id.rank + 1))
    max_mod = max((m for _, m in radical_congruences(id)), default=1)
    bound = 2 * max_p * id.rank + max_mod
    return bound, max_p + max_mod


def _radical_exact_sum(id: AlgebraId, total: int):
    """Dominant radical weights with the given coefficient sum, lex order."""
    r = id.rank
    congs = radical_congruences(id)
    out: list[Weight] = []
    prefix = [0] * r

    def rec(pos: int, remaining: int, residues: tuple[int, ...]):
        if pos == r - 1:
            res = tuple(
                (v + coeffs[pos] * remaining) % m
                for v, (coeffs, m) in zip(residues, congs)
            )
            if not any(res):
                prefix[pos] = remaining
                out.append(tuple(prefix))
            return
        for c in range(remaining + 1):
            prefix[pos] = c
            rec(pos + 1, remaining - c,
                tuple(v + coeffs[pos] * c for v, (coeffs, m) in zip(residues, congs)))

    rec(0, total, tuple(0 for _ in congs))
    return out


def _minimal_new_elements(id: AlgebraId, wanted) -> frozenset[Weight]:
    """Componentwise-minimal weights among those `wanted` accepts.

    Streams dominant radical weights in increasing coefficient sum, so a
    candidate is minimal exactly when no kept element sits below it.
    """
    bound, width = _search_bound(id)
    kept: list[Weight] = []
    for total in range(1, bound + 1):
        for w in _radical_exact_sum(id, total):
            if not wanted(w):
                continue
            if any(all(a <= b for a, b in zip(g, w)) for g in kept):
                continue
            if total > bound - width:
                raise RuntimeError(
                    f"minimal element {w} of {id} lands in the audit shell; "
                    f"the search bound {bound} is not trustworthy"
                )
            kept.append(w)
    return frozenset(kept)


@lru_cache(maxsize=None)
def hilbert_basis(id: AlgebraId) -> frozenset[Weight]:
    """The unique minimal generating set of the dominant radical monoid."""
    return _minimal_new_elements(id, lambda w: True)


@lru_cache(maxsize=None)
def ideal_basis(id: AlgebraId) -> frozenset[Weight]:
    """Minimal elements of the set of mixed dominant radical weights.

    Every mixed weight is one of these plus a dominant radical weight,
    and no listed element sits above another.
    """
    return _minimal_new_elements(
        id, lambda w: _pure_family_power(id, w) is None
    )


def ideal_property_check(id: AlgebraId, lam: Weight, mu: Weight) -> bool:
    """Whether lam + mu is mixed; with lam mixed this must always hold."""
    rs = build_root_system(id)
    for w in (lam, mu):
        if any(c < 0 for c in w):
            raise ValueError(f"weight {w} is not dominant")
        if not is_radical(tuple(w), rs):
            raise ValueError(f"weight {w} is not radical")
    total = tuple(a + b for a, b in zip(lam, mu))
    sig = w0_signature(id, total)
    return sig.p > 0 and sig.q > 0


# ---------------------------------------------------------------------------
# diagram symmetries, for collapsing equivalent table rows

def diagram_automorphisms(id: AlgebraId) -> tuple[tuple[int, ...], ...]:
    """All symmetries of the diagram, as permutations of node positions."""
    fam, r = id.family, id.rank
    ident = tuple(range(r))
    if fam == "A" and r >= 2:
        return (ident, tuple(reversed(ident)))
    if fam == "D" and r == 4:
        from itertools import permutations

        out = []
        for legs in permutations((0, 2, 3)):
            perm = list(ident)
            for pos, leg in zip((0, 2, 3), legs):
                perm[pos] = leg
            out.append(tuple(perm))
        return tuple(out)
    if fam == "D":
        swap = list(ident)
        swap[r - 2], swap[r - 1] = swap[r - 1], swap[r - 2]
        return (ident, tuple(swap))
    if fam == "E" and r == 6:
        return (ident, (5, 1, 4, 3, 2, 0))
    return (ident,)


def canonical_under_symmetry(id: AlgebraId, w: Weight) -> Weight:
    """Lexicographically least image of w under the diagram symmetries."""
    return min(tuple(w[p] for p in perm) for perm in diagram_automorphisms(id))
