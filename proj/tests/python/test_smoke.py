"""Smoke tests for the homsim python bindings."""

import math
from fractions import Fraction

import pytest

import homsim


@pytest.fixture
def model():
    return homsim.OverlapModel(homsim.sigma_from_filter(4e-9, 780e-9))


def test_overlap_roundtrip(model):
    assert homsim.overlap_from_delay(model, 0.0) == 1.0
    x = homsim.delay_from_overlap(model, 0.5)
    assert homsim.overlap_from_delay(model, x) ** 2 == pytest.approx(0.5, abs=1e-12)
    assert 30e-6 < x < 80e-6


def test_decompose_weights():
    terms = homsim.decompose(2, math.sqrt(0.5))
    assert [t.j for t in terms] == [2, 1, 0]
    assert [t.label for t in terms] == [
        homsim.TypeLabel.indis,
        homsim.TypeLabel.inter,
        homsim.TypeLabel.dist,
    ]
    assert [t.weight for t in terms] == pytest.approx([0.25, 0.5, 0.25], abs=1e-14)
    assert sum(t.weight for t in homsim.decompose(5, 0.73)) == pytest.approx(1.0, abs=1e-14)


def test_species_distribution_suppression():
    dist = homsim.species_distribution(homsim.Species(1, 1), homsim.CouplerSpec())
    assert dist.prob(1, 1) == 0.0
    assert dist.prob(2, 0) == 0.5


def test_event_probability_certificate_values():
    coupler = homsim.CouplerSpec()
    assert homsim.event_probability(2, 1.0, (2, 2), coupler) == pytest.approx(0.25, abs=1e-14)
    assert homsim.event_probability(2, 0.0, (2, 2), coupler) == pytest.approx(0.375, abs=1e-14)
    assert homsim.event_probability(2, math.sqrt(2 / 3), (2, 2), coupler) == pytest.approx(
        5 / 24, abs=1e-13
    )


def test_find_extrema_certificate():
    report = homsim.find_extrema(2, (2, 2))
    assert report.classification == homsim.Monotonicity.non_monotonic
    (ext,) = report.interior
    assert ext.is_minimum
    assert ext.u == pytest.approx(2 / 3, abs=1e-8)
    assert ext.p == pytest.approx(5 / 24, abs=1e-12)
    assert homsim.find_extrema(2, (4, 0)).classification == homsim.Monotonicity.monotonic


def test_oracle_matches_assembly():
    coupler = homsim.CouplerSpec()
    for k in (1, 2, 3):
        for event in homsim.all_events(k):
            for alpha in (0.0, 0.3, 0.8, 1.0):
                direct = homsim.event_probability(k, alpha, event, coupler)
                oracle = homsim.oracle_event_probability(k, alpha, event, coupler)
                assert abs(direct - oracle) <= 1e-12


def test_exact_fraction_table():
    table = homsim.detection_table_exact(2)
    assert table[2][(4, 0)] == Fraction(3, 8)
    assert table[1][(4, 0)] == Fraction(3, 16)
    assert table[0][(4, 0)] == Fraction(1, 16)
    assert table[2][(2, 2)] == Fraction(1, 4)
    assert table[1][(2, 2)] == Fraction(1, 8)
    assert table[0][(2, 2)] == Fraction(3, 8)
    assert sum(table[1].values()) == Fraction(1)


def test_scan_rows_and_serialization(model):
    xs = homsim.linspace(-1e-4, 1e-4, 11)
    result = homsim.scan(2, model, xs, [(2, 2), (4, 0)])
    assert len(result.rows) == 11
    mid = result.rows[5]
    assert mid.x == 0.0
    assert mid.alpha_sq == 1.0
    assert mid.event_probs == pytest.approx([0.25, 0.375], abs=1e-14)
    csv = result.to_csv()
    assert csv.splitlines()[0] == "x_um,alpha_sq,W_j2,W_j1,W_j0,W_indis,W_inter,W_dist,P_2_2,P_4_0"
    assert result.to_json() == result.to_json()


def test_figure_pack(tmp_path, model):
    xs = homsim.linspace(-4e-4, 4e-4, 21)
    written = homsim.emit_figure_pack([1, 2], model, xs, homsim.CouplerSpec(), tmp_path)
    names = sorted(p.name for p in written)
    assert names == ["probs_N4.csv", "weights_N2.csv", "weights_N4.csv"]


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        homsim.decompose(0, 0.5)
    with pytest.raises(ValueError):
        homsim.event_probability(2, 0.5, (1, 1), homsim.CouplerSpec())
    with pytest.raises(ValueError):
        homsim.delay_from_overlap(homsim.OverlapModel(1e13), 0.0)
