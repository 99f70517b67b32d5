"""Acceptance suite: one group of tests per criterion.

Every test carries ``@pytest.mark.acceptance(n, title)``; the terminal summary
(see ``conftest.py``) prints one PASS/FAIL line per criterion.  All
comparisons are exact; the only tolerances are the wall-clock limits below.
"""

from __future__ import annotations

import json
import math
import random
import subprocess
import sys
import time

import pytest

from liespecial import (
    LieType,
    WeightVector,
    apply_word,
    cartan_data,
    enumerate_group,
    fundamental_weight,
    reflect,
    sym_product,
    weight_to_root,
)
from liespecial.atype import closed_form_union, counting_identity, diophantine_solutions, duality_holds
from liespecial.cli import main
from liespecial.special import (
    gamma_set,
    gram_expansion_holds,
    gram_pair_holds,
    level_formula_audit,
    special_root_table,
    verify_conjecture1,
    verify_conjecture2,
)
from liespecial.weyl import braid_order

from conftest import parse_alpha, parse_sigma

# Wall-clock limits in seconds.
LIMIT_TABLE_A3 = 1.0
LIMIT_CONJECTURE1 = 60.0
LIMIT_CONJECTURE2 = 300.0
LIMIT_ATYPE = 30.0
LIMIT_ORDERS = 60.0

SAMPLES = 1000

SUITE = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]
GRAM_SUITE = ["A1", "A2", "A3", "B2", "G2", "B3"]


def criterion(n: int, title: str):
    return pytest.mark.acceptance(n, title)


# -- 1 -------------------------------------------------------------------------

C1 = criterion(1, "golden A3 table")


@C1
def test_golden_a3_table(capsys):
    data = json.loads((__import__("conftest").GOLDEN / "a3_table.json").read_text())
    expected = [[list(parse_sigma(w)), [list(parse_alpha(g, 3)) for g in gs]] for w, gs in data["rows"]]
    start = time.perf_counter()
    status = main(["table", "A3", "--format", "json"])
    elapsed = time.perf_counter() - start
    out = json.loads(capsys.readouterr().out)
    assert status == 0
    got = [[row["word"], row["gammas"]] for row in out["rows"]]
    assert got == expected
    assert [row["A"] for row in out["rows"]] == list(range(1, 25))
    assert out["rows"][18]["gammas"] == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    assert elapsed < LIMIT_TABLE_A3, f"{elapsed:.3f}s"


# -- 2 -------------------------------------------------------------------------

C2 = criterion(2, "conjecture 1 over the test matrix")


@pytest.fixture(scope="module")
def conjecture1_reports():
    start = time.perf_counter()
    reports = {name: verify_conjecture1(LieType.parse(name)) for name in SUITE}
    return reports, time.perf_counter() - start


@C2
@pytest.mark.parametrize("name", SUITE)
def test_conjecture1_sizes(conjecture1_reports, name):
    rep = conjecture1_reports[0][name]
    bad = [(e.index, e.gamma_size, e.orbit_size) for e in rep.entries if e.gamma_size != e.orbit_size]
    assert not bad, f"(i, |Gamma(i)+|, |orbit|) mismatches: {bad}"


@C2
@pytest.mark.parametrize("name", SUITE)
def test_conjecture1_disjoint(conjecture1_reports, name):
    rep = conjecture1_reports[0][name]
    bad = [(e.index, [str(v) for v in e.overlap]) for e in rep.entries if e.overlap]
    assert not bad, f"Gamma(i)+ meets orbit(lambda_i): {bad}"


@C2
def test_conjecture1_time(conjecture1_reports):
    assert conjecture1_reports[1] < LIMIT_CONJECTURE1


# -- 3 -------------------------------------------------------------------------

C3 = criterion(3, "conjecture 2 Gram solver equals group table")

_c2_elapsed: dict[str, float] = {}


@C3
@pytest.mark.parametrize("name, order", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("B3", 48)])
def test_conjecture2(name, order):
    start = time.perf_counter()
    rep = verify_conjecture2(LieType.parse(name))
    _c2_elapsed[name] = time.perf_counter() - start
    assert rep.group_order == order
    assert rep.solver_count == order
    assert rep.injective and rep.surjective
    assert not rep.membership_failures
    assert rep.passed


@C3
def test_conjecture2_time():
    assert set(_c2_elapsed) == set(GRAM_SUITE)
    assert sum(_c2_elapsed.values()) < LIMIT_CONJECTURE2


# -- 4 -------------------------------------------------------------------------

C4 = criterion(4, "weight differences lie in Gamma(i)+")


@C4
@pytest.mark.parametrize("name", SUITE)
def test_identity_consistency(name):
    t = LieType.parse(name)
    cd = cartan_data(t)
    group = enumerate_group(t)
    lams = [fundamental_weight(i, cd) for i in range(1, t.rank + 1)]
    gammas = [gamma_set(i, t) for i in range(1, t.rank + 1)]
    for img in group.images:
        for lam, gs, labels in zip(lams, gammas, img):
            assert weight_to_root(lam - WeightVector(labels), cd) in gs


# -- 5 -------------------------------------------------------------------------

C5 = criterion(5, "A_r closed forms for r <= 6")


@C5
def test_atype_closed_forms():
    start = time.perf_counter()
    for r in range(1, 7):
        for k in range(1, r + 1):
            closed = set(closed_form_union(k, r))
            assert closed == set(diophantine_solutions(k, r)), (r, k)
            assert closed == set(gamma_set(k, LieType("A", r)).members), (r, k)
            lhs, rhs = counting_identity(k, r)
            assert lhs == rhs == math.comb(r + 1, k), (r, k)
            assert duality_holds(k, r), (r, k)
    assert time.perf_counter() - start < LIMIT_ATYPE


# -- 6 -------------------------------------------------------------------------

C6 = criterion(6, "Weyl group orders")

ORDERS = {f"A{r}": math.factorial(r + 1) for r in range(1, 6)} | {
    "B2": 8, "B3": 48, "C3": 48, "B4": 384, "C4": 384, "D4": 192, "G2": 12, "F4": 1152}


@C6
def test_group_orders():
    start = time.perf_counter()
    got = {name: enumerate_group(LieType.parse(name)).order for name in ORDERS}
    assert got == ORDERS
    assert time.perf_counter() - start < LIMIT_ORDERS


# -- 7 -------------------------------------------------------------------------

C7 = criterion(7, "algebraic properties")


@C7
@pytest.mark.parametrize("name", SUITE)
def test_form_invariance(name):
    t = LieType.parse(name)
    cd = cartan_data(t)
    rng = random.Random(f"form-{name}")
    for _ in range(SAMPLES):
        word = [rng.randint(1, t.rank) for _ in range(rng.randint(0, 16))]
        x = WeightVector([rng.randint(-5, 5) for _ in range(t.rank)])
        y = WeightVector([rng.randint(-5, 5) for _ in range(t.rank)])
        assert sym_product(apply_word(word, x, cd), apply_word(word, y, cd), cd) == sym_product(x, y, cd)


@C7
@pytest.mark.parametrize("name", SUITE)
def test_involution_and_braid(name):
    t = LieType.parse(name)
    cd = cartan_data(t)
    rng = random.Random(f"braid-{name}")
    vectors = [WeightVector([rng.randint(-5, 5) for _ in range(t.rank)]) for _ in range(50)]
    vectors += [fundamental_weight(k, cd) for k in range(1, t.rank + 1)]
    for i in range(1, t.rank + 1):
        assert all(reflect(reflect(v, i, cd), i, cd) == v for v in vectors)
        for j in range(i + 1, t.rank + 1):
            m = braid_order(i, j, cd)
            assert all(apply_word((i, j) * m, v, cd) == v for v in vectors)
            assert all(any(apply_word((i, j) * k, v, cd) != v for v in vectors) for k in range(1, m))


@C7
@pytest.mark.parametrize("name", SUITE)
def test_gram_expansion_equivalence(name):
    t = LieType.parse(name)
    cd = cartan_data(t)
    rng = random.Random(f"gram-{name}")
    sets = [gamma_set(i, t).members for i in range(1, t.rank + 1)]
    for _ in range(SAMPLES):
        tup = [rng.choice(s) for s in sets]
        for i in range(t.rank):
            for j in range(i + 1, t.rank):
                direct = gram_pair_holds(i + 1, j + 1, tup[i], tup[j], cd)
                assert direct == gram_expansion_holds(i + 1, j + 1, tup[i], tup[j], cd)


@C7
@pytest.mark.parametrize("name", SUITE)
def test_norm_preservation(name):
    t = LieType.parse(name)
    cd = cartan_data(t)
    table = special_root_table(t)
    norms = [cd.fundamental_gram[i][i] for i in range(t.rank)]
    for a in range(len(table)):
        assert [sym_product(w, w, cd) for w in table.special_weights(a)] == norms


# -- 8 -------------------------------------------------------------------------

C8 = criterion(8, "level-formula audit on A3")


@C8
def test_level_audit(capsys):
    t = LieType("A", 3)
    cd = cartan_data(t)
    table = special_root_table(t)
    audit = level_formula_audit(table)
    assert audit.rows_checked == 24
    assert audit.pairs_passed + audit.pairs_failed == audit.pairs_checked
    assert audit.gram_failures == ()
    for _, gammas in table.rows:
        for i in range(t.rank):
            for j in range(i + 1, t.rank):
                assert gram_pair_holds(i + 1, j + 1, gammas[i], gammas[j], cd)
    with capsys.disabled():
        print(f"\nlevel formula on A3: {audit.pairs_passed}/{audit.pairs_checked} pairs, "
              f"{audit.rows_passed}/{audit.rows_checked} rows")


# -- 9 -------------------------------------------------------------------------

C9 = criterion(9, "cache determinism")


@C9
def test_cache_cold_and_warm_identical(tmp_path):
    cmd = [sys.executable, "-m", "liespecial", "table", "A3", "--format", "json", "--cache-dir", str(tmp_path)]
    cold = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert (tmp_path / "A3.json").exists()
    warm = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert cold == warm
    plain = subprocess.run(cmd[:-2], capture_output=True, check=True).stdout
    assert plain == cold
