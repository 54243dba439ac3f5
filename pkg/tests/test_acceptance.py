"""End-to-end acceptance battery.

Each test covers one release criterion and prints a single
"ACCEPT <name>: PASS" line on success (shown with `pytest -s` or in the
captured output of `pytest -v`).  Tolerances are pinned, not derived.
"""

import cmath
import math

import numpy as np
import pytest

from phasegain import bounds, fading, geometry as G, sets, solver
from tests.conftest import random_polygon

TWO_PI = 2.0 * math.pi


def _report(name):
    print(f"ACCEPT {name}: PASS")


def test_accept_golden_constants():
    expected = {2: (0.63662, -3.92), 4: (0.90032, -0.91), 8: (0.97450, -0.22)}
    for m, (ratio, db) in expected.items():
        fset = sets.RegularMGon(m)
        exact = (m / math.pi) * math.sin(math.pi / m)
        assert abs(bounds.best_constant(fset) - exact) <= 1e-9
        assert round(exact, 5) == ratio
        assert bounds.shortfall_db(fset) == pytest.approx(db, abs=0.005)
    _report("golden-constants")


def test_accept_onoff_subset_guarantee():
    fset = sets.OnOff()
    assert bounds.best_constant(fset) == pytest.approx(1 / math.pi, abs=1e-12)
    rng = np.random.default_rng(20240815)
    floor = 1 / math.pi - 1e-9
    for _ in range(1000):
        n = int(rng.integers(1, 21))
        h = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2)
        _, ratio = solver.onoff_subset_check(solver.PhasorChannel(tuple(h)))
        assert ratio >= floor
    _report("onoff-subset-guarantee")


def test_accept_oracle_equivalence():
    rng = np.random.default_rng(777)
    for _ in range(200):
        n_ant = int(rng.integers(1, 7))
        n_pts = int(rng.integers(2, 6))
        pts = rng.standard_normal(n_pts) + 1j * rng.standard_normal(n_pts)
        pts /= np.maximum(1.0, np.abs(pts))
        fset = sets.Discrete(tuple(pts))
        h = rng.standard_normal(n_ant) + 1j * rng.standard_normal(n_ant)
        ch = solver.PhasorChannel(tuple(h))
        gains = [solver.solve_angle_sweep(ch, fset).gain,
                 solver.solve_minkowski(ch, fset).gain,
                 solver.brute_force(ch, fset).gain]
        scale = max(max(gains), 1.0)
        assert (max(gains) - min(gains)) / scale <= 1e-9
    _report("oracle-equivalence")


def test_accept_universal_lower_bound():
    rng = np.random.default_rng(31337)
    battery = [sets.RegularMGon(2), sets.RegularMGon(4), sets.RegularMGon(8),
               sets.OnOff(), sets.RisLorentz(2.0, 0.2),
               sets.Arc(-2.0, 2.0, 1.0), sets.ShiftedCircle(0.3j, 0.6)]
    for fset in battery:
        constant = bounds.best_constant(fset)
        for _ in range(50):
            n = int(rng.integers(1, 12))
            h = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            ch = solver.PhasorChannel(tuple(h))
            res = None if fset.is_discrete else 8192
            sol = solver.solve_angle_sweep(ch, fset, resolution=res)
            assert sol.gain >= constant * sol.ideal_gain - 1e-9
    _report("universal-lower-bound")


def test_accept_fixed_n_equality():
    for m, n in [(2, 2), (2, 4), (4, 2), (4, 4), (8, 3)]:
        fset = sets.RegularMGon(m)
        sol = solver.solve_angle_sweep(solver.tightness_channel(m, n), fset)
        assert abs(sol.ratio - bounds.refined_constant(fset, n)) <= 1e-9
    gap_db = 20 * math.log10(bounds.refined_constant(sets.RegularMGon(2), 2)
                             / bounds.best_constant(sets.RegularMGon(2)))
    assert gap_db == pytest.approx(0.91, abs=0.005)
    _report("fixed-n-equality")


def test_accept_worst_case_tightness():
    sol = solver.solve_angle_sweep(solver.worst_case_channel(512),
                                   sets.RegularMGon(4))
    assert abs(sol.ratio - 0.90032) <= 1e-4
    _report("worst-case-tightness")


def test_accept_cauchy_formula():
    rng = np.random.default_rng(4242)
    checked = 0
    while checked < 100:
        poly = random_polygon(rng)
        if len(poly) < 3:
            continue
        per = G.perimeter(poly)
        assert abs(G.mean_width(poly, 100_000) * math.pi - per) <= 1e-5 * (1 + per)
        checked += 1
    _report("cauchy-surface-area")


def test_accept_minkowski_additivity():
    rng = np.random.default_rng(9009)
    checked = 0
    while checked < 100:
        a = random_polygon(rng)
        b = random_polygon(rng)
        if len(a) < 3 or len(b) < 3:
            continue
        s = G.minkowski_sum(a, b)
        assert abs(G.perimeter(s) - G.perimeter(a) - G.perimeter(b)) <= 1e-9
        for theta in rng.uniform(0, TWO_PI, size=8):
            lhs = G.support(s, float(theta)).value
            rhs = (G.support(a, float(theta)).value
                   + G.support(b, float(theta)).value)
            assert abs(lhs - rhs) <= 1e-9
        checked += 1
    _report("minkowski-additivity")


def test_accept_fading_hardening():
    cfg = fading.FadingConfig(fset=sets.RegularMGon(4), n_list=(4096,),
                              trials=64, seed=0)
    (rec,), _ = fading.convergence_experiment(cfg)
    target = math.sqrt(math.pi) / 2 * (4 / math.pi) * math.sin(math.pi / 4)
    assert target == pytest.approx(0.79787, abs=5e-5)
    assert abs(rec.mean_normalized_gain - target) <= 0.01 * target
    assert abs(rec.p_norm_estimates[2] - target ** 2) <= 0.02 * target ** 2
    _report("fading-hardening")


def test_accept_three_bit_example_reproduction():
    coords = [(10, 0.9), (60, 0.75), (100, 0.9), (140, 0.9),
              (175, 0.5), (220, 0.8), (260, 0.7), (315, 0.8)]
    fset = sets.Discrete(tuple(r * cmath.exp(1j * math.radians(d))
                               for d, r in coords))
    poly = fset.to_polygon()
    assert len(poly) == 7  # one of the eight states is interior
    assert G.perimeter(poly) == pytest.approx(5.01, abs=0.01)
    assert bounds.best_constant(fset) == pytest.approx(0.80, abs=0.005)
    assert bounds.shortfall_db(fset) == pytest.approx(-2.0, abs=0.05)
    _report("three-bit-example")
