"""Dimensions, weight multiplicities, and full characters.

Multiplicities come from the Freudenthal recursion evaluated in scaled
integer arithmetic (Python integers never overflow, so the multiplicity
contract is met structurally); characters are assembled by expanding
each dominant multiplicity along its Weyl orbit.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .rootsys import RootSystem, Weight, dominant_representative, inner, to_eps


class WeightMultiset:
    """Finite map from weight to positive multiplicity."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict[Weight, int]):
        for w, m in entries.items():
            if m <= 0:
                raise ValueError(f"multiplicity {m} for {w} not positive")
        self.entries = dict(entries)

    def __getitem__(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self.entries == other.entries

    def items(self):
        return self.entries.items()

    def total_dim(self) -> int:
        return sum(self.entries.values())

    def convolve(self, other: "WeightMultiset") -> "WeightMultiset":
        """Character of the tensor product: weights add, counts multiply."""
        out: dict[Weight, int] = {}
        for w1, m1 in self.entries.items():
            for w2, m2 in other.entries.items():
                key = tuple(a + b for a, b in zip(w1, w2))
                out[key] = out.get(key, 0) + m1 * m2
        return WeightMultiset(out)


def _require_dominant(w: Weight, rs: RootSystem):
    if len(w) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(w)}")
    if any(c < 0 for c in w):
        raise ValueError(f"weight {w} is not dominant")


def weyl_dim(lam: Weight, rs: RootSystem) -> int:
    """Dimension of the irreducible with highest weight lam."""
    _require_dominant(lam, rs)
    lam_rho = to_eps(tuple(c + 1 for c in lam), rs)
    rho = to_eps((1,) * rs.rank, rs)
    num = Fraction(1)
    for alpha in rs.positive_roots:
        num *= inner(lam_rho, alpha) / inner(rho, alpha)
    assert num.denominator == 1
    return int(num)


def dominant_weights_below(lam: Weight, rs: RootSystem) -> list[Weight]:
    """Dominant weights under lam in the root order, nearest first.

    Walks the dominance order downward one positive root at a time;
    consecutive dominant weights always differ by a positive root, so
    this reaches everything.  Sorted by depth (height of the difference
    from lam), then lexicographically.
    """
    _require_dominant(lam, rs)
    root_cols = [
        (dyn, sum(mv))
        for dyn, mv in zip(rs.positive_roots_dynkin, rs.positive_roots_mvec)
    ]
    depth = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            d = depth[w]
            for dyn, h in root_cols:
                v = tuple(a - b for a, b in zip(w, dyn))
                if v not in depth and all(c >= 0 for c in v):
                    depth[v] = d + h
                    nxt.append(v)
        frontier = nxt
    return sorted(depth, key=lambda w: (depth[w], w))


def _scaled_weight_eps(rs: RootSystem):
    # integer multiples of the fundamental weights, cached on the system
    cached = getattr(rs, "_scaled_fw", None)
    if cached is None:
        scale = lcm(*(x.denominator for fw in rs.fundamental_weights for x in fw))
        cached = tuple(
            tuple(int(x * scale) for x in fw) for fw in rs.fundamental_weights
        )
        rs._scaled_fw = cached
    return cached


def _freudenthal_table(lam: Weight, rs: RootSystem) -> dict[Weight, int]:
    cache = getattr(rs, "_freud_cache", None)
    if cache is None:
        cache = rs._freud_cache = {}
    table = cache.get(lam)
    if table is not None:
        return table

    sfw = _scaled_weight_eps(rs)
    n = rs.ambient

    def seps(w):
        v = [0] * n
        for c, row in zip(w, sfw):
            if c:
                for t in range(n):
                    v[t] += c * row[t]
        return v

    def sdot(u, v):
        return sum(a * b for a, b in zip(u, v))

    roots = []
    for dyn in rs.positive_roots_dynkin:
        se = seps(dyn)
        roots.append((dyn, se, sdot(se, se)))

    lam_rho = seps(tuple(c + 1 for c in lam))
    top_norm = sdot(lam_rho, lam_rho)

    table = {lam: 1}
    for mu in dominant_weights_below(lam, rs)[1:]:
        mu_rho = seps(tuple(c + 1 for c in mu))
        denom = top_norm - sdot(mu_rho, mu_rho)
        smu = seps(mu)
        total = 0
        for dyn, se, norm in roots:
            base = sdot(smu, se)
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, dyn))
                m = table.get(dominant_representative(nu, rs)[0])
                if m is None:
                    break  # weight strings have no gaps
                total += m * (base + k * norm)
                k += 1
        mult, rem = divmod(2 * total, denom)
        assert rem == 0 and mult > 0, (lam, mu)
        table[mu] = mult
    cache[lam] = table
    return table


def freudenthal_mult(lam: Weight, mu: Weight, rs: RootSystem) -> int:
    """Multiplicity of the weight mu in the irreducible with highest weight lam."""
    _require_dominant(lam, rs)
    rep, _ = dominant_representative(tuple(mu), rs)
    return _freudenthal_table(lam, rs).get(rep, 0)


def weyl_orbit(w: Weight, rs: RootSystem) -> list[Weight]:
    """The full Weyl orbit, starting from the dominant representative."""
    top, _ = dominant_representative(tuple(w), rs)
    seen = {top}
    out = [top]
    frontier = [top]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                if v[i] > 0:
                    u = rs.reflect(v, i)
                    if u not in seen:
                        seen.add(u)
                        out.append(u)
                        nxt.append(u)
        frontier = nxt
    return out


def full_character(lam: Weight, rs: RootSystem) -> WeightMultiset:
    """Every weight of the irreducible with highest weight lam, with multiplicity."""
    table = _freudenthal_table(lam, rs)
    entries: dict[Weight, int] = {}
    for mu, m in table.items():
        for w in weyl_orbit(mu, rs):
            entries[w] = m
    char = WeightMultiset(entries)
    assert char.total_dim() == weyl_dim(lam, rs)
    return char
