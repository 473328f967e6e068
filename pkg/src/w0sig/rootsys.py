"""Root systems of the simple complex Lie algebras, in exact arithmetic.

Simple roots are realized in a rational ambient space following the
Bourbaki plates, and weights are integer vectors of coroot pairings
(Dynkin coordinates).  The epsilon-coordinate view is derived from that
and uses Fractions throughout; no floats appear anywhere.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

Weight = tuple[int, ...]
EpsCoords = tuple[Fraction, ...]

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# accepted on input but renamed before any construction happens
_ALIASES = {("B", 1): ("A", 1), ("C", 1): ("A", 1),
            ("C", 2): ("B", 2), ("D", 3): ("A", 3)}


class LatticeMembershipError(ValueError):
    """Coordinates that do not describe an integral weight."""


class InvalidRootError(ValueError):
    """A vector used as a root where it cannot be one."""


@dataclass(frozen=True)
class AlgebraId:
    """A simple type: family letter A..G plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        rng = _RANK_RANGE.get(self.family)
        if rng is None:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = rng
        ok = isinstance(self.rank, int) and self.rank >= lo
        if hi is not None:
            ok = ok and self.rank <= hi
        if not ok:
            span = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise ValueError(
                f"rank {self.rank} invalid for family {self.family} "
                f"(allowed: {span})"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_algebra(text: str) -> AlgebraId:
    """Parse names like "B3" or "e6", renaming the repeated small types."""
    s = text.strip().upper()
    if len(s) < 2 or s[0] not in _RANK_RANGE or not s[1:].isdigit():
        raise ValueError(f"cannot parse algebra name {text!r}")
    family, rank = s[0], int(s[1:])
    alias = _ALIASES.get((family, rank))
    if alias is not None:
        norm = AlgebraId(*alias)
        warnings.warn(f"{family}{rank} is isomorphic to {norm}; using {norm}",
                      stacklevel=2)
        return norm
    return AlgebraId(family, rank)


# ---------------------------------------------------------------------------
# ambient realizations

def _unit(n: int, i: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def _simple_roots(algebra: AlgebraId) -> list[EpsCoords]:
    fam, r = algebra.family, algebra.rank
    if fam == "A":
        n = r + 1
        out = []
        for i in range(r):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            out.append(v)
    elif fam in ("B", "C", "D"):
        n = r
        out = []
        for i in range(r - 1):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            out.append(v)
        if fam == "B":
            out.append(_unit(n, r - 1))
        elif fam == "C":
            v = _unit(n, r - 1)
            v[r - 1] = Fraction(2)
            out.append(v)
        else:
            v = _unit(n, r - 2)
            v[r - 1] = Fraction(1)
            out.append(v)
    elif fam == "E":
        half = Fraction(1, 2)
        first = [half, -half, -half, -half, -half, -half, -half, half]
        second = _unit(8, 0)
        second[1] = Fraction(1)
        chain = []
        for i in range(6):
            v = _unit(8, i + 1)
            v[i] = Fraction(-1)
            chain.append(v)
        out = ([first, second] + chain)[:r]
    elif fam == "F":
        half = Fraction(1, 2)
        out = [
            [Fraction(0), Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1), Fraction(-1)],
            [Fraction(0), Fraction(0), Fraction(0), Fraction(1)],
            [half, -half, -half, -half],
        ]
    else:  # G
        out = [
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(-2), Fraction(1), Fraction(1)],
        ]
    return [tuple(v) for v in out]


def _expected_positive_count(algebra: AlgebraId) -> int:
    fam, r = algebra.family, algebra.rank
    if fam == "A":
        return r * (r + 1) // 2
    if fam in ("B", "C"):
        return r * r
    if fam == "D":
        return r * (r - 1)
    if fam == "E":
        return {6: 36, 7: 63, 8: 120}[r]
    if fam == "F":
        return 24
    return 6


def inner(u, v) -> Fraction:
    return sum(a * b for a, b in zip(u, v))


def pairing(e: EpsCoords, root: EpsCoords) -> Fraction:
    """Coroot pairing 2(e, root)/(root, root)."""
    rr = inner(root, root)
    if rr == 0:
        raise InvalidRootError("zero vector used as a root")
    return 2 * inner(e, root) / rr


@dataclass(frozen=True)
class WeylWord:
    """A reduced word for the longest element, tied to its root system."""

    system: "RootSystem"
    indices: tuple[int, ...]

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


class RootSystem:
    """Root data for one simple type, built once and shared.

    `cartan_matrix[i][j]` is the pairing of the j-th simple root against
    the i-th coroot, so column j holds the Dynkin coordinates of alpha_j.
    Positive roots are listed by increasing height; the highest root is
    last.
    """

    def __init__(self, algebra: AlgebraId):
        self.algebra = algebra
        self.rank = algebra.rank
        simples = _simple_roots(algebra)
        self.simple_roots: tuple[EpsCoords, ...] = tuple(simples)
        self.ambient = len(simples[0])

        r = self.rank
        cartan = []
        for i in range(r):
            row = []
            for j in range(r):
                p = pairing(simples[j], simples[i])
                assert p.denominator == 1
                row.append(int(p))
            cartan.append(tuple(row))
        self.cartan_matrix: tuple[tuple[int, ...], ...] = tuple(cartan)

        self.invariant_form = tuple(
            tuple(int(i == j) for j in range(self.ambient))
            for i in range(self.ambient)
        )

        # columns of the inverse Cartan matrix give the fundamental
        # weights as combinations of simple roots
        inv = _invert_integer_matrix(cartan)
        fw = []
        for j in range(r):
            v = [Fraction(0)] * self.ambient
            for k in range(r):
                c = inv[k][j]
                if c:
                    for t in range(self.ambient):
                        v[t] += c * simples[k][t]
            fw.append(tuple(v))
        self.fundamental_weights: tuple[EpsCoords, ...] = tuple(fw)

        self._refl_cols = tuple(
            tuple((k, cartan[k][i]) for k in range(r) if cartan[k][i])
            for i in range(r)
        )

        mvecs, dynkins = _positive_closure(cartan)
        eps_list = []
        for mv in mvecs:
            v = [Fraction(0)] * self.ambient
            for i, m in enumerate(mv):
                if m:
                    for t in range(self.ambient):
                        v[t] += m * simples[i][t]
            eps_list.append(tuple(v))
        self.positive_roots: tuple[EpsCoords, ...] = tuple(eps_list)
        self.positive_roots_dynkin: tuple[Weight, ...] = tuple(dynkins)
        self.positive_roots_mvec: tuple[tuple[int, ...], ...] = tuple(mvecs)
        count = _expected_positive_count(algebra)
        assert len(self.positive_roots) == count, algebra
        self.highest_root: EpsCoords = self.positive_roots[-1]

        self.w0_word = WeylWord(self, self._build_w0_word())
        self._domrep: dict[Weight, tuple[Weight, int]] = {}

    def __repr__(self):
        return f"RootSystem({self.algebra})"

    def reflect(self, w: Weight, i: int) -> Weight:
        """Apply the i-th simple reflection in Dynkin coordinates."""
        ci = w[i]
        if ci == 0:
            return w
        out = list(w)
        for k, a in self._refl_cols[i]:
            out[k] -= ci * a
        return tuple(out)

    def _build_w0_word(self) -> tuple[int, ...]:
        c = (1,) * self.rank
        word = []
        while True:
            i = next((k for k, x in enumerate(c) if x > 0), None)
            if i is None:
                break
            word.append(i)
            c = self.reflect(c, i)
        assert c == (-1,) * self.rank
        assert len(word) == len(self.positive_roots)
        return tuple(word)


def _invert_integer_matrix(rows) -> list[list[Fraction]]:
    n = len(rows)
    aug = [[Fraction(x) for x in row] + _unit(n, i)
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _positive_closure(cartan):
    """All positive roots by root-string closure, ordered by height."""
    r = len(cartan)
    roots: dict[tuple[int, ...], Weight] = {}
    layer = []
    for i in range(r):
        mv = tuple(int(k == i) for k in range(r))
        roots[mv] = tuple(cartan[k][i] for k in range(r))
        layer.append(mv)
    ordered = list(layer)
    while layer:
        nxt = []
        for mv in layer:
            dyn = roots[mv]
            for i in range(r):
                back = 0
                probe = list(mv)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in roots:
                        break
                    back += 1
                if back - dyn[i] >= 1:
                    new = list(mv)
                    new[i] += 1
                    new = tuple(new)
                    if new not in roots:
                        roots[new] = tuple(
                            d + cartan[k][i] for k, d in enumerate(dyn)
                        )
                        nxt.append(new)
        ordered.extend(nxt)
        layer = nxt
    return ordered, [roots[mv] for mv in ordered]


@lru_cache(maxsize=None)
def build_root_system(id: AlgebraId) -> RootSystem:
    """Construct (once) the shared root system for the given type."""
    return RootSystem(id)


# ---------------------------------------------------------------------------
# coordinate conversions

def to_eps(w: Weight, rs: RootSystem) -> EpsCoords:
    """Dynkin coordinates -> ambient coordinates.

    For the A family this lands in the sum-zero hyperplane of the
    (rank+1)-dimensional ambient space.
    """
    v = [Fraction(0)] * rs.ambient
    for c, fw in zip(w, rs.fundamental_weights):
        if c:
            for t in range(rs.ambient):
                v[t] += c * fw[t]
    return tuple(v)


def from_eps(e: EpsCoords, rs: RootSystem) -> Weight:
    """Ambient coordinates -> Dynkin coordinates.

    Accepts any representative for the A family (adding a multiple of
    (1,...,1) does not change the weight); everything else must match
    exactly.  Raises LatticeMembershipError off the weight lattice.
    """
    if len(e) != rs.ambient:
        raise LatticeMembershipError(
            f"expected {rs.ambient} coordinates, got {len(e)}"
        )
    e = tuple(Fraction(x) for x in e)
    coeffs = []
    for alpha in rs.simple_roots:
        p = pairing(e, alpha)
        if p.denominator != 1:
            raise LatticeMembershipError(f"non-integral coroot pairing {p}")
        coeffs.append(int(p))
    w = tuple(coeffs)
    residual = [a - b for a, b in zip(e, to_eps(w, rs))]
    if rs.algebra.family == "A":
        if len(set(residual)) > 1:
            raise LatticeMembershipError("not a weight modulo the diagonal")
    elif any(residual):
        raise LatticeMembershipError("outside the span of the weights")
    return w


# ---------------------------------------------------------------------------
# Weyl group action

def dominant_representative(w: Weight, rs: RootSystem) -> tuple[Weight, int]:
    """The dominant weight in the orbit of w, with the sign of the element used."""
    cached = rs._domrep.get(w)
    if cached is not None:
        return cached
    cur, parity, steps = w, 1, 0
    bound = len(rs.positive_roots)
    while True:
        i = next((k for k, x in enumerate(cur) if x < 0), None)
        if i is None:
            break
        cur = rs.reflect(cur, i)
        parity = -parity
        steps += 1
        assert steps <= bound
    rs._domrep[w] = (cur, parity)
    return cur, parity


def longest_element(rs: RootSystem) -> WeylWord:
    return rs.w0_word


def apply_w0(word: WeylWord, w: Weight) -> Weight:
    rs = word.system
    for i in word.indices:
        w = rs.reflect(w, i)
    return w


# ---------------------------------------------------------------------------
# root lattice membership

def _congruences(family: str, rank: int, w: Weight) -> list[tuple[int, int]]:
    """(value, modulus) pairs that all must vanish for w to be radical."""
    r = rank
    if family == "A":
        return [(sum((i + 1) * c for i, c in enumerate(w)), r + 1)]
    if family == "B":
        return [(w[r - 1], 2)]
    if family == "C":
        return [(sum(w[0::2]), 2)]
    if family == "D":
        if r % 2 == 0:
            s = sum(w[0:r - 2:2])
            return [(s + w[r - 2], 2), (s + w[r - 1], 2)]
        t = sum(w[0:r - 2:2])
        return [(2 * t + w[r - 2] - w[r - 1], 4)]
    if family == "E":
        if r == 6:
            return [(w[0] - w[2] + w[4] - w[5], 3)]
        if r == 7:
            return [(w[1] + w[4] + w[6], 2)]
        return []
    return []  # E8, F4, G2: every weight is radical


def is_radical(w: Weight, rs: RootSystem) -> bool:
    """Whether w lies in the root lattice."""
    fam = rs.algebra.family
    return all(v % m == 0 for v, m in _congruences(fam, rs.rank, w))


def radical_congruences(id: AlgebraId) -> list[tuple[tuple[int, ...], int]]:
    """The root-lattice conditions as (coefficient vector, modulus) pairs.

    w is radical iff coeffs . w vanishes mod the modulus for every pair;
    the list is empty when the weight and root lattices coincide.
    """
    r = id.rank
    zero = _congruences(id.family, r, (0,) * r)
    units = [
        _congruences(id.family, r, tuple(int(k == j) for k in range(r)))
        for j in range(r)
    ]
    return [
        (tuple(units[j][c][0] % m for j in range(r)), m)
        for c, (_, m) in enumerate(zero)
    ]


def min_radical_multiplier(id: AlgebraId, i: int) -> int:
    """Least k >= 1 making k times the i-th fundamental weight radical; i is 1-based."""
    if not 1 <= i <= id.rank:
        raise ValueError(f"index {i} out of range for {id}")
    w = tuple(int(k == i - 1) for k in range(id.rank))
    k = 1
    for v, m in _congruences(id.family, id.rank, w):
        k = lcm(k, m // gcd(v % m, m))
    return k
