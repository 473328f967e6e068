"""Signatures of the longest Weyl element on zero weight spaces.

The longest element acts on the Cartan dual as an involution; its -1
eigenspace is spanned by a standard set of strongly orthogonal positive
roots.  Those roots generate a subalgebra isomorphic to sl2^s x C^t
(s + t = rank) whose zero weight space coincides with that of the whole
algebra, so the signature of any irreducible can be read off from its
restriction: split the character through an integer restriction matrix,
peel the result into irreducible summands of the product, and combine
per-factor signatures multiplicatively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from .charfreud import WeightMultiset, freudenthal_mult, full_character
from .exactla import mat_det, hnf_rows
from .rootsys import (
    AlgebraId,
    EpsCoords,
    Weight,
    apply_w0,
    build_root_system,
    longest_element,
    pairing,
)


class MalformedCharacterError(Exception):
    """A multiset that cannot be the restriction of a finite-dim character."""


class Signature(NamedTuple):
    """Dimensions (p, q) of the +1 and -1 eigenspaces on the zero weight space."""

    p: int
    q: int


class RestrictedWeight(NamedTuple):
    sl2_labels: tuple[int, ...]
    charges: tuple[int, ...]


@dataclass(frozen=True)
class RestrictionData:
    """Restriction bookkeeping for one algebra.

    `matrix` is rank x rank over the integers: row k is the image of the
    k-th fundamental weight, the first s columns being coroot pairings
    against the orthogonal roots and the last t columns coordinates over
    a basis of the fixed subspace of the longest element.
    """

    algebra: AlgebraId
    ortho_roots: tuple[EpsCoords, ...]
    s: int
    t: int
    matrix: tuple[tuple[int, ...], ...]


def _zero(n: int) -> list[Fraction]:
    return [Fraction(0)] * n


def _pm_pair(n, i, j):
    """e_i + e_j followed by e_i - e_j."""
    plus, minus = _zero(n), _zero(n)
    plus[i] = plus[j] = Fraction(1)
    minus[i], minus[j] = Fraction(1), Fraction(-1)
    return [tuple(plus), tuple(minus)]


def orthogonal_root_set(id: AlgebraId) -> list[EpsCoords]:
    """Strongly orthogonal positive roots spanning the -1 eigenspace of w0."""
    fam, r = id.family, id.rank
    out: list[EpsCoords] = []
    if fam == "A":
        n = r + 1
        for i in range((r + 1) // 2):
            v = _zero(n)
            v[i], v[n - 1 - i] = Fraction(1), Fraction(-1)
            out.append(tuple(v))
    elif fam == "B":
        for i in range(0, r - 1, 2):
            out.extend(_pm_pair(r, i, i + 1))
        if r % 2:
            v = _zero(r)
            v[r - 1] = Fraction(1)
            out.append(tuple(v))
    elif fam == "C":
        for i in range(r):
            v = _zero(r)
            v[i] = Fraction(2)
            out.append(tuple(v))
    elif fam == "D":
        npairs = r // 2
        for k in range(npairs):
            pair = _pm_pair(r, 2 * k, 2 * k + 1)
            if r % 2 == 0 and k == npairs - 1:
                pair.reverse()  # the final plane flips orientation
            out.extend(pair)
    elif fam == "E" and r == 6:
        a = _zero(8)
        a[0], a[3] = Fraction(-1), Fraction(1)
        b = _zero(8)
        b[1], b[2] = Fraction(-1), Fraction(1)
        half = Fraction(1, 2)
        cplus = (half, half, half, half, half, -half, -half, half)
        cminus = (-half, -half, -half, -half, half, -half, -half, half)
        out = [tuple(a), tuple(b), cplus, cminus]
    elif fam == "E":
        for i in range(0, r - 1, 2):
            # +- e_i + e_{i+1}, both positive roots
            out.extend(_pm_pair(8, i + 1, i))
        if r == 7:
            v = _zero(8)
            v[6], v[7] = Fraction(-1), Fraction(1)
            out.append(tuple(v))
    elif fam == "F":
        out.extend(_pm_pair(4, 0, 1))
        out.extend(_pm_pair(4, 2, 3))
    else:  # G
        out = [
            (Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(-1), Fraction(-1), Fraction(2)),
        ]
    return out


def restriction_data(id: AlgebraId, *, filler_variant: bool = False) -> RestrictionData:
    """Build the restriction matrix for the given algebra.

    The first s columns are forced by the orthogonal roots; the filler
    columns are coordinates over a triangular integer basis of the fixed
    subspace, so every weight restricts to integer charges.  Passing
    filler_variant picks a different (equally valid) basis; results of
    the downstream pipeline must not depend on it.
    """
    rs = build_root_system(id)
    r = rs.rank
    ortho = orthogonal_root_set(id)
    s = len(ortho)
    t = r - s

    rows = []
    for fw in rs.fundamental_weights:
        row = []
        for alpha in ortho:
            p = pairing(fw, alpha)
            assert p.denominator == 1
            row.append(int(p))
        rows.append(row)

    if t:
        word = longest_element(rs)
        doubled = []
        for k in range(r):
            unit = tuple(int(j == k) for j in range(r))
            img = apply_w0(word, unit)
            doubled.append([a + b for a, b in zip(unit, img)])
        basis = hnf_rows(doubled)
        assert len(basis) == t
        if filler_variant:
            basis = [
                [a + b for a, b in zip(basis[i], basis[i + 1])]
                for i in range(t - 1)
            ] + [[-x for x in basis[-1]]]
        pivots = [next(c for c in range(r) if row[c]) for row in basis]
        for k in range(r):
            v = list(doubled[k])
            for row, piv in zip(basis, pivots):
                q, rem = divmod(v[piv], row[piv])
                assert rem == 0
                rows[k].append(q)
                if q:
                    v = [a - q * b for a, b in zip(v, row)]
            assert not any(v)

    matrix = tuple(tuple(row) for row in rows)
    assert mat_det([list(map(Fraction, row)) for row in matrix]) != 0
    return RestrictionData(id, tuple(ortho), s, t, matrix)


def restrict_character(
    char: WeightMultiset, rd: RestrictionData
) -> dict[RestrictedWeight, int]:
    """Push a character through the restriction matrix.

    Each weight row-multiplies the matrix; the first s entries are sl2
    labels, the rest abelian charges.  Total multiplicity is preserved.
    """
    r = len(rd.matrix)
    s = rd.s
    out: dict[RestrictedWeight, int] = {}
    for w, m in char.items():
        image = [0] * r
        for k, c in enumerate(w):
            if c:
                row = rd.matrix[k]
                for j in range(r):
                    image[j] += c * row[j]
        key = RestrictedWeight(tuple(image[:s]), tuple(image[s:]))
        out[key] = out.get(key, 0) + m
    return out


def peel_branch(
    restricted: dict[RestrictedWeight, int]
) -> list[tuple[RestrictedWeight, int]]:
    """Decompose a restricted character into product-irreducible summands.

    Greedy from the top: the largest remaining weight (lexicographically
    on labels then charges) must be a highest weight; subtract its full
    product character and repeat.  Since subtraction only ever touches
    strictly smaller keys, one descending pass suffices.
    """
    remaining = {rw: m for rw, m in restricted.items() if m}
    total_in = sum(remaining.values())
    order = sorted(remaining, key=lambda rw: rw.sl2_labels + rw.charges,
                   reverse=True)
    out = []
    total_out = 0
    for rw in order:
        m = remaining.get(rw, 0)
        if m == 0:
            continue
        if any(k < 0 for k in rw.sl2_labels):
            raise MalformedCharacterError(
                f"maximal weight {rw} has a negative label"
            )
        out.append((rw, m))
        for labels in product(*(range(k, -k - 1, -2) for k in rw.sl2_labels)):
            key = RestrictedWeight(labels, rw.charges)
            left = remaining.get(key, 0) - m
            if left < 0:
                raise MalformedCharacterError(
                    f"multiplicity of {key} drops below zero"
                )
            if left:
                remaining[key] = left
            else:
                remaining.pop(key, None)
            total_out += m
    assert not remaining
    assert total_out == total_in
    return out


def sl2_signature(k: int) -> Signature:
    """Signature of the (k+1)-dimensional irreducible of sl2."""
    if k % 2:
        return Signature(0, 0)
    return Signature(1, 0) if k % 4 == 0 else Signature(0, 1)


def abelian_signature(charges: tuple[int, ...]) -> Signature:
    """(1,0) for the trivial character of the torus factor, else (0,0)."""
    return Signature(1, 0) if not any(charges) else Signature(0, 0)


def tensor_signature(a: Signature, b: Signature) -> Signature:
    return Signature(a.p * b.p + a.q * b.q, a.p * b.q + a.q * b.p)


def w0_signature(id: AlgebraId, lam: Weight) -> Signature:
    """The (p, q) eigenvalue split of the longest element on the zero
    weight space of the irreducible with highest weight lam."""
    rs = build_root_system(id)
    char = full_character(tuple(lam), rs)
    rd = restriction_data(id)
    parts = peel_branch(restrict_character(char, rd))
    p = q = 0
    for rw, m in parts:
        sig = abelian_signature(rw.charges)
        for k in rw.sl2_labels:
            sig = tensor_signature(sig, sl2_signature(k))
        p += m * sig.p
        q += m * sig.q
    zero = (0,) * rs.rank
    assert p + q == freudenthal_mult(tuple(lam), zero, rs)
    return Signature(p, q)


def shipped_restriction_matrices() -> dict[AlgebraId, tuple[tuple[int, ...], ...]]:
    """Parse the bundled restriction matrices, keyed by algebra.

    The file stores one full matrix per algebra in bracket layout; only
    the first s columns are pinned down by the orthogonal roots, the
    rest depend on a choice of basis for the fixed sublattice.
    """
    import re
    from ast import literal_eval
    from importlib import resources

    text = resources.files("w0sig.data").joinpath(
        "restriction_matrices.txt").read_text()
    out: dict[AlgebraId, tuple[tuple[int, ...], ...]] = {}
    entries = re.split(r"^([A-G]\d) = ", text, flags=re.M)[1:]
    for name, body in zip(entries[0::2], entries[1::2]):
        rows = literal_eval(body.strip())
        out[AlgebraId(name[0], int(name[1:]))] = tuple(
            tuple(row) for row in rows)
    return out
