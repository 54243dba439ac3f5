import cmath
import math

import pytest

from phasegain import bounds, sets
from phasegain.errors import DegenerateSet, NotPolygon, Unsupported


def test_best_constant_golden_values():
    assert bounds.best_constant(sets.RegularMGon(2)) == pytest.approx(2 / math.pi, abs=1e-12)
    assert bounds.best_constant(sets.OnOff()) == pytest.approx(1 / math.pi, abs=1e-12)
    assert bounds.best_constant(sets.RegularMGon(8)) == pytest.approx(
        (8 / math.pi) * math.sin(math.pi / 8), abs=1e-12)


def test_shortfall_db_golden_values():
    assert bounds.shortfall_db(sets.RegularMGon(2)) == pytest.approx(-3.92, abs=0.005)
    assert bounds.shortfall_db(sets.RegularMGon(4)) == pytest.approx(-0.912, abs=0.0005)


def test_shortfall_fig1_heptagon():
    coords = [(10, 0.9), (60, 0.75), (100, 0.9), (140, 0.9),
              (175, 0.5), (220, 0.8), (260, 0.7), (315, 0.8)]
    fset = sets.Discrete(tuple(r * cmath.exp(1j * math.radians(d)) for d, r in coords))
    assert bounds.shortfall_db(fset) == pytest.approx(-2.0, abs=0.05)


def test_shortfall_ideal_limit():
    dense = sets.RegularMGon(1 << 14)
    assert bounds.shortfall_db(dense) == pytest.approx(0.0, abs=1e-6)


def test_shortfall_degenerate():
    with pytest.raises(DegenerateSet):
        bounds.shortfall_db(sets.Discrete((0.5 + 0.5j,)))


def test_crude_constant_values():
    assert bounds.crude_constant(sets.RegularMGon(4)) == pytest.approx(
        math.cos(math.pi / 4), abs=1e-12)
    assert bounds.crude_constant(sets.RegularMGon(6)) == pytest.approx(
        math.cos(math.pi / 6), abs=1e-12)
    assert bounds.crude_constant(sets.OnOff()) == pytest.approx(0.0, abs=1e-12)


def test_refined_constant_values():
    assert bounds.refined_constant(sets.RegularMGon(2), 2) == pytest.approx(
        math.sin(math.pi / 2) / (2 * math.sin(math.pi / 4)), abs=1e-12)
    assert bounds.refined_constant(sets.RegularMGon(4), 1) == pytest.approx(1.0, abs=1e-12)
    # large-N limit reverts to the perimeter constant
    for m in (2, 3, 4, 8):
        limit = (m / math.pi) * math.sin(math.pi / m)
        assert bounds.refined_constant(sets.RegularMGon(m), 10 ** 7) == pytest.approx(
            limit, rel=1e-9)


def test_refined_constant_gap_at_2_2_in_db():
    gap = 20 * math.log10(bounds.refined_constant(sets.RegularMGon(2), 2)
                          / bounds.best_constant(sets.RegularMGon(2)))
    assert gap == pytest.approx(0.91, abs=0.005)


def test_refined_constant_monotone_decreasing():
    fset = sets.RegularMGon(3)
    values = [bounds.refined_constant(fset, n) for n in range(1, 40)]
    assert all(b <= a + 1e-15 for a, b in zip(values, values[1:]))


def test_refined_constant_rejects_continuous():
    with pytest.raises(NotPolygon):
        bounds.refined_constant(sets.ShiftedCircle(0.5j, 0.5), 4)
    with pytest.raises(NotPolygon):
        bounds.refined_constant(sets.Discrete((0.5 + 0j,)), 4)


def test_asymptotic_constants():
    crude, best = bounds.asymptotic_constants(64)
    assert crude == pytest.approx(math.cos(math.pi / 64), abs=1e-5)
    assert best == pytest.approx((64 / math.pi) * math.sin(math.pi / 64), abs=1e-5)
    crude_big, best_big = bounds.asymptotic_constants(10 ** 6)
    assert crude_big == pytest.approx(1.0, abs=1e-11)
    assert best_big == pytest.approx(1.0, abs=1e-11)


def test_gap_ratio_approaches_three():
    m = 256
    crude = bounds.crude_constant(sets.RegularMGon(m))
    best = bounds.best_constant(sets.RegularMGon(m))
    assert (1 - crude) / (1 - best) == pytest.approx(3.0, rel=0.01)


def test_onoff_small_n_constant():
    assert bounds.onoff_small_n_constant(2) == 0.5
    assert bounds.onoff_small_n_constant(3) == pytest.approx(1 / 3)
    with pytest.raises(Unsupported):
        bounds.onoff_small_n_constant(4)


@pytest.mark.parametrize("fset", [
    sets.RegularMGon(2), sets.RegularMGon(5), sets.OnOff(),
    sets.Discrete((0.3 + 0.1j, -0.5j, 0.9, -0.2 - 0.6j)),
    sets.Arc(-1.0, 1.0, 0.9), sets.ShiftedCircle(0.4j, 0.4),
    sets.RisLorentz(2.0, 0.5),
], ids=lambda s: type(s).__name__)
def test_constant_ordering(fset):
    crude = bounds.crude_constant(fset)
    best = bounds.best_constant(fset)
    assert crude <= best + 1e-12
    assert best <= 1.0 + 1e-12


def test_report_fields():
    rep = bounds.build_report(sets.RegularMGon(4), N=2)
    assert rep.best_constant == pytest.approx(rep.perimeter / (2 * math.pi), abs=1e-12)
    assert rep.hull_vertex_count == 4
    assert rep.refined_constant >= rep.best_constant
    assert rep.shortfall_db <= 0.0
    assert rep.to_dict()["refined_constant"] == rep.refined_constant
