"""End-to-end acceptance checks, one test per criterion.

Run with -v to get one pass/fail line per criterion.  Criterion 5
asserts the externally stated basis-count totals verbatim; see the
failure message for the computed values and the reconciliation.
"""

import json
import random
from importlib import resources

import oracles
from conftest import (
    all_algebras,
    dominant_weights,
    prediction_matches,
    signature_via,
)
from w0sig.branchsig import (
    restriction_data,
    shipped_restriction_matrices,
    w0_signature,
)
from w0sig.charfreud import freudenthal_mult, weyl_dim
from w0sig.classify import (
    _radical_exact_sum,
    canonical_under_symmetry,
    ideal_basis,
    ideal_property_check,
    predict,
)
from w0sig.rootsys import (
    AlgebraId,
    apply_w0,
    build_root_system,
    from_eps,
    is_radical,
    longest_element,
    to_eps,
)


def _id(name: str) -> AlgebraId:
    return AlgebraId(name[0], int(name[1:]))


def _ids(*names: str) -> list[AlgebraId]:
    return [_id(n) for n in names]


# (algebra, dim) -> signature, as enumerated in the acceptance statement
STATED_ROWS = {
    ("E7", 1463): (0, 21), ("E7", 1539): (27, 0), ("E7", 133): (0, 7),
    ("E7", 7371): (63, 0),
    ("E8", 248): (0, 8), ("E8", 27000): (120, 0), ("E8", 3875): (35, 0),
    ("F4", 26): (2, 0), ("F4", 324): (12, 0), ("F4", 52): (0, 4),
    ("F4", 1053): (21, 0),
    ("G2", 14): (0, 2), ("G2", 77): (5, 0), ("G2", 7): (0, 1),
    ("G2", 27): (3, 0),
    ("C3", 84): (0, 4), ("C4", 594): (10, 0),
}


def test_criterion_1_reference_signatures():
    raw = resources.files("w0sig.data").joinpath(
        "reference_signatures.json").read_text()
    rows = json.loads(raw)
    covered = {(row["algebra"], row["dim"]): (row["p"], row["q"])
               for row in rows}
    assert covered == STATED_ROWS
    for row in rows:
        id = _id(row["algebra"])
        rs = build_root_system(id)
        lam = tuple(row["weight"])
        assert weyl_dim(lam, rs) == row["dim"], row
        assert to_eps(lam, rs) == tuple(row["eps"]), row
        assert w0_signature(id, lam) == (row["p"], row["q"]), row


def test_criterion_2_adjoint_law():
    expected_t = {"A1": 0, "A2": 1, "A3": 1, "A4": 2, "A5": 2, "A6": 3,
                  "B2": 0, "B3": 0, "B4": 0, "C3": 0, "C4": 0, "C5": 0,
                  "D4": 0, "D5": 1, "D6": 0, "E6": 2, "E7": 0,
                  "F4": 0, "G2": 0}
    for name, t in expected_t.items():
        id = _id(name)
        rs = build_root_system(id)
        rd = restriction_data(id)
        adjoint = from_eps(rs.highest_root, rs)
        sig = w0_signature(id, adjoint)
        assert sig == (t, id.rank - t), (name, sig)
        assert sig == (rd.t, rd.s), (name, sig)


def test_criterion_3_prediction_sweep():
    scope = _ids("A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3",
                 "D4", "G2", "F4")
    disagreements = []
    checked = 0
    for id in scope:
        rs = build_root_system(id)
        for total in range(7):
            for lam in _radical_exact_sum(id, total):
                if weyl_dim(lam, rs) > 50000:
                    continue
                sig = w0_signature(id, lam)
                pred = predict(id, lam)
                checked += 1
                if not prediction_matches(pred, sig):
                    disagreements.append((id, lam, pred, sig))
    assert checked >= 300
    assert disagreements == []


def test_criterion_4_restriction_matrices():
    shipped = shipped_restriction_matrices()
    assert len(shipped) == 31
    for id, reference in shipped.items():
        rd = restriction_data(id)
        mine = tuple(tuple(row[:rd.s]) for row in rd.matrix)
        theirs = tuple(tuple(row[:rd.s]) for row in reference)
        assert mine == theirs, id


def test_criterion_5_basis_counts():
    stated_list = ("A1 A2 A3 A4 A5 B2 B3 B4 C2 C3 C4 C5 "
                   "D4 D5 D6 E6 E7 E8 F4 G2").split()
    sizes = {name: len(ideal_basis(_id(name))) for name in stated_list}
    stated_sum = sum(sizes.values())
    # C2 carries the same table row as B2 under node relabeling
    distinct_sum = stated_sum - sizes["C2"]

    orbit_total = len(STATED_ROWS)  # reference rows: trivial symmetry groups
    for name in stated_list:
        if name == "C2":
            continue
        id = _id(name)
        orbit_total += len({canonical_under_symmetry(id, w)
                            for w in ideal_basis(id)})

    detail = (
        f"ideal basis sizes: {sizes}; "
        f"sum over the stated 20-algebra list = {stated_sum} (stated: 149); "
        f"sum over the 19 distinct algebras = {distinct_sum}; "
        f"distinct sum + 17 reference rows = {distinct_sum + 17}, matching "
        f"the combined row count 167 that the stated 149 was derived from "
        f"as 167 - 18; the reference table has 17 rows, not 18, and C2 "
        f"duplicates B2, so no scoping of the sum attains 149; "
        f"outer-automorphism orbit count across both tables = {orbit_total} "
        f"(stated: 138)")
    assert orbit_total == 138, detail
    assert stated_sum == 149, detail


def test_criterion_6_oracle_suites():
    # Freudenthal against the brute-force alternating-sum oracle
    from w0sig.charfreud import dominant_weights_below

    pairs = 0
    for name in ["A1", "A2", "B2", "G2"]:
        id = _id(name)
        rs = build_root_system(id)
        for lam in dominant_weights(id.rank, 4):
            for mu in dominant_weights_below(lam, rs):
                assert freudenthal_mult(lam, mu, rs) == \
                    oracles.kostant_mult(name, lam, mu), (name, lam, mu)
                pairs += 1
    assert pairs > 200

    # longest-element action: involution on pseudorandom weights, and
    # negation of the positive roots as a set
    rng = random.Random(0)
    for id in all_algebras(8):
        rs = build_root_system(id)
        word = longest_element(rs)
        for _ in range(1000):
            w = tuple(rng.randrange(-5, 6) for _ in range(id.rank))
            assert apply_w0(word, apply_w0(word, w)) == w
        positives = {from_eps(a, rs) for a in rs.positive_roots}
        negated = {tuple(-c for c in apply_w0(word, w)) for w in positives}
        assert negated == positives

    # signatures do not depend on the filler columns of the matrix
    filler_cases = [
        ("A2", (1, 1)), ("A2", (3, 0)), ("A2", (2, 2)),
        ("A3", (1, 0, 1)), ("A3", (0, 1, 2)), ("A3", (1, 1, 1)),
        ("A4", (1, 0, 0, 1)), ("A4", (0, 1, 1, 0)),
        ("A5", (1, 0, 0, 0, 1)), ("A5", (0, 0, 2, 0, 0)),
        ("A6", (1, 0, 0, 0, 0, 1)), ("A7", (1, 0, 0, 0, 0, 0, 1)),
        ("D5", (0, 1, 0, 0, 0)), ("D5", (0, 0, 0, 1, 1)),
        ("D5", (2, 0, 0, 0, 0)), ("D7", (0, 1, 0, 0, 0, 0, 0)),
        ("E6", (0, 1, 0, 0, 0, 0)), ("E6", (1, 0, 0, 0, 0, 1)),
        ("E6", (0, 0, 0, 1, 0, 0)), ("A2", (4, 1)), ("A4", (1, 1, 1, 1)),
    ]
    assert len(filler_cases) >= 20
    for name, lam in filler_cases:
        id = _id(name)
        base = restriction_data(id)
        alt = restriction_data(id, filler_variant=True)
        assert base.matrix != alt.matrix, name
        assert signature_via(id, lam, base) == signature_via(id, lam, alt), \
            (name, lam)

    # mixedness is preserved under adding any dominant radical weight,
    # and p + q always equals the zero-weight multiplicity
    rng = random.Random(1)
    candidates = []
    for id in all_algebras(4):
        basis = sorted(ideal_basis(id))
        if not basis:
            continue
        rs = build_root_system(id)
        mus = [mu for mu in dominant_weights(id.rank, 2)
               if is_radical(mu, rs)]
        for lam in basis:
            for mu in mus:
                total = tuple(a + b for a, b in zip(lam, mu))
                if weyl_dim(total, rs) <= 60000:
                    candidates.append((id, lam, mu, total))
    rng.shuffle(candidates)
    sampled = candidates[:250]
    assert len(sampled) >= 200
    for n, (id, lam, mu, total) in enumerate(sampled):
        assert ideal_property_check(id, lam, mu), (id, lam, mu)
        if n < 50:
            rs = build_root_system(id)
            sig = w0_signature(id, total)
            zero = (0,) * id.rank
            assert sig.p + sig.q == freudenthal_mult(total, zero, rs)
