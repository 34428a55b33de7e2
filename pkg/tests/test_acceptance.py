"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""
import contextlib
import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from upqtriples import (
    HiggsType,
    Inside,
    MinimaType,
    OnWall,
    TripleType,
    alpha_max,
    chamber_of,
    census,
    critical_values,
    expected_dim,
    higgs_to_triple,
    mw_alpha_consistency,
    mw_bound,
    mw_value,
    triple_to_higgs,
)
from upqtriples import sweeps
from upqtriples.walls import minima_triple

F = Fraction


@contextlib.contextmanager
def criterion(name, budget=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"{name}: {elapsed:.1f}s exceeds {budget}s"
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"FAIL  {name}  ({exc.__class__.__name__}: {exc})")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {name}  [{time.perf_counter() - start:.2f}s]")


def test_mw_census():
    with criterion("Milnor-Wood census (14 and 8 pairs)", budget=1):
        assert len(census(1, 1, 2, (0, 3), (0, 3))) == 14
        assert len(census(2, 1, 2, (0, 3), (0, 1))) == 8


def test_mw_alpha_equivalence():
    with criterion("Milnor-Wood <=> 2g-2 <= alpha_M, p != q <= 4, g in 2..4, |d| <= 10",
                   budget=30):
        checked = 0
        for p, q in itertools.product(range(1, 5), repeat=2):
            if p == q:
                continue
            for g in (2, 3, 4):
                rep = mw_alpha_consistency(p, q, g, (-10, 10), (-10, 10))
                assert rep.violations == [], (p, q, g, rep.violations[:5])
                checked += rep.checked
        assert checked == 12 * 3 * 21 * 21
        h = HiggsType(2, 1, 3, 0)
        assert mw_value(h) == mw_bound(2, 1, 2) == 1
        assert alpha_max(minima_triple(h, 2)).value == 2 == 2 * 2 - 2


def test_chamber_oracle_equivalence():
    with criterion("critical_values == oracle_critical_values, n1+n2 <= 5, |d| <= 6", budget=60):
        res = sweeps.sweep_oracle(rank_sum=5, degree_bound=6, cap=F(10))
        assert res.checked == 6 * 13 * 13
        assert res.passed, res.failures[:5]


def test_worked_chamber_instance():
    with criterion("worked instance (2,1,3,0)"):
        t = TripleType(2, 1, 3, 0)
        assert alpha_max(t).value == 6
        assert [w.alpha for w in critical_values(t)] == [0, F(3, 2), 3, F(9, 2), 6]
        loc = chamber_of(t, 2)
        assert isinstance(loc, Inside)
        assert (loc.chamber.lower, loc.chamber.upper) == (F(3, 2), 3)
        assert isinstance(chamber_of(t, 3), OnWall)


def test_expected_dimension():
    with criterion("expected_dim closed form and twist invariance, n1+n2 <= 6"):
        assert expected_dim(TripleType(2, 1, 3, 0), 2) == 7
        res = sweeps.sweep_expected_dim(rank_sum=6, degree_bound=6, genera=(2, 3, 4))
        assert res.checked == 15 * 13 * 13 * 3
        assert res.passed, res.failures[:5]


def test_vhs_minima_suite():
    with criterion("VHS minima: m <= 2 minimum, m >= 3 never, grading sums"):
        res = sweeps.sweep_vhs(max_length=5, max_rank=3, degree_bound=3, genera=(2, 3))
        expected = sum(3 ** m * 7 ** m for m in range(1, 6)) * 2
        assert res.checked == expected
        assert res.passed, res.failures[:5]


def test_duality_twist_roundtrip():
    with criterion("duality and twist invariance of walls; 10^4 random roundtrips"):
        for sweep in (sweeps.sweep_duality, sweeps.sweep_twist, sweeps.sweep_wall_witnesses):
            res = sweep(rank_sum=5, degree_bound=6, cap=F(10))
            assert res.passed, (res.name, res.failures[:5])
        rng = random.Random(20011)
        for _ in range(10 ** 4):
            h = HiggsType(rng.randint(1, 12), rng.randint(1, 12),
                          rng.randint(-500, 500), rng.randint(-500, 500))
            g = rng.randint(2, 30)
            side = rng.choice([MinimaType.CZero, MinimaType.BZero])
            assert triple_to_higgs(higgs_to_triple(h, g, side), g, side) == h


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "upqtriples", *argv],
                          capture_output=True, timeout=600)


@pytest.mark.parametrize("argv", [
    ["chambers", "--n1", "2", "--n2", "1", "--d1", "3", "--d2", "0", "--genus", "2"],
    ["census", "--p", "2", "--q", "3", "--genus", "3", "--dv", "-6:6", "--dw", "-6:6",
     "--format", "csv"],
    ["walls", "--n1", "2", "--n2", "2", "--d1", "1", "--d2", "-3", "--cap", "10",
     "--format", "text"],
])
def test_cli_determinism(argv):
    with criterion(f"CLI byte-identical output: {argv[0]} --format "
                   f"{argv[argv.index('--format') + 1] if '--format' in argv else 'json'}"):
        runs = [_cli(*argv) for _ in range(3)]
        assert all(r.returncode == 0 for r in runs)
        assert len({r.stdout for r in runs}) == 1 and runs[0].stdout


def test_cli_check_exits_zero():
    with criterion("CLI check exits 0 on the full suite"):
        r = _cli("check")
        assert r.returncode == 0, r.stdout[-2000:]
