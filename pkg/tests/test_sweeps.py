"""Sweep grids: consistency, trends, replicate statistics, power ratios."""

import pytest

from fanetsim import (
    AreaSpec,
    RadioParams,
    SweepResult,
    SweepRow,
    generate_topology,
    mean_pair_loss_percent,
    power_ratio_report,
    run_area_sweep,
    run_count_sweep,
    run_frequency_sweep,
    run_packet_power_sweep,
)
from fanetsim.sweeps import SweepAxis, SweepSpec

SIZES = (10, 100, 1000, 10000)


def _table(result):
    return {(row.axis_value, row.packet_size_bits): row.mean_loss_percent for row in result.rows}


def _power_spec(**kwargs):
    return SweepSpec(base_seed=42, axis=SweepAxis.POWER_DBM, axis_values=(5.0, 7.0, 9.0), **kwargs)


@pytest.fixture(scope="module")
def power_result():
    return run_packet_power_sweep(_power_spec())


def test_degenerate_sweep_equals_direct_mean(seed42_topology):
    spec = SweepSpec(
        base_seed=42, axis=SweepAxis.POWER_DBM, axis_values=(7.0,), packet_sizes=(1000,)
    )
    result = run_packet_power_sweep(spec)
    assert len(result.rows) == 1
    row = result.rows[0]
    assert row.mean_loss_percent == mean_pair_loss_percent(seed42_topology, RadioParams(), 1000)
    assert row.std_loss_percent == 0.0


def test_power_sweep_shape_and_bounds(power_result):
    assert len(power_result.rows) == 12
    keys = [(row.axis_value, row.packet_size_bits) for row in power_result.rows]
    assert keys == sorted(keys)
    for row in power_result.rows:
        assert 0.0 <= row.mean_loss_percent <= 100.0
        assert row.std_loss_percent == 0.0  # single replicate


def test_loss_increases_strictly_with_packet_size(power_result):
    table = _table(power_result)
    for power in (5.0, 7.0, 9.0):
        losses = [table[(power, size)] for size in SIZES]
        assert all(b > a for a, b in zip(losses, losses[1:]))


def test_loss_decreases_strictly_with_power(power_result):
    table = _table(power_result)
    for size in SIZES:
        assert table[(5.0, size)] > table[(7.0, size)] > table[(9.0, size)]


def test_frequency_sweep_consistent_with_power_sweep():
    freq = run_frequency_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.FREQUENCY_HZ, axis_values=(2.4e9,))
    )
    power = run_packet_power_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.POWER_DBM, axis_values=(7.0,))
    )
    assert [r.mean_loss_percent for r in freq.rows] == [r.mean_loss_percent for r in power.rows]


def test_loss_nondecreasing_with_frequency():
    result = run_frequency_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.FREQUENCY_HZ, axis_values=(2.4e9, 5.8e9, 2.8e10))
    )
    table = _table(result)
    for size in SIZES:
        losses = [table[(f, size)] for f in (2.4e9, 5.8e9, 2.8e10)]
        assert all(b >= a for a, b in zip(losses, losses[1:]))


def test_area_sweep_single_cell_matches_power_sweep():
    area = run_area_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.AREA_SIDE_M, axis_values=(1500.0,))
    )
    power = run_packet_power_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.POWER_DBM, axis_values=(7.0,))
    )
    assert [r.mean_loss_percent for r in area.rows] == [r.mean_loss_percent for r in power.rows]


def test_area_sweep_mean_nondecreasing_with_32_replicates():
    sides = (500.0, 1000.0, 1500.0, 2000.0, 3000.0)
    result = run_area_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.AREA_SIDE_M, axis_values=sides, replicates=32)
    )
    table = _table(result)
    for size in SIZES:
        losses = [table[(side, size)] for side in sides]
        assert all(b >= a for a, b in zip(losses, losses[1:]))
    for row in result.rows:
        assert row.std_loss_percent >= 0.0


def test_count_sweep_row_matches_power_sweep_at_default_count():
    count = run_count_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.UAV_COUNT, axis_values=(5.0, 10.0, 20.0, 40.0, 80.0))
    )
    power = run_packet_power_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.POWER_DBM, axis_values=(7.0,))
    )
    count_table = _table(count)
    power_table = _table(power)
    for size in SIZES:
        assert count_table[(20.0, size)] == power_table[(7.0, size)]


def test_count_sweep_exhaustive_pairing():
    spec = SweepSpec(
        base_seed=11,
        axis=SweepAxis.UAV_COUNT,
        axis_values=(2.0,),
        num_pairs=2,
        packet_sizes=(1000,),
    )
    result = run_count_sweep(spec)
    topo = generate_topology(11, 2, spec.area, 2)
    assert set(topo.pairs) == {(0, 1), (1, 0)}
    assert result.rows[0].mean_loss_percent == mean_pair_loss_percent(topo, RadioParams(), 1000)


def test_count_sweep_argument_errors():
    with pytest.raises(ValueError):
        run_count_sweep(SweepSpec(base_seed=1, axis=SweepAxis.UAV_COUNT, axis_values=(1.0, 5.0)))
    with pytest.raises(ValueError):
        run_count_sweep(SweepSpec(base_seed=1, axis=SweepAxis.UAV_COUNT, axis_values=(2.5, 5.0)))
    with pytest.raises(ValueError):
        # 3 UAVs offer 6 ordered pairs; the default asks for 10
        run_count_sweep(SweepSpec(base_seed=1, axis=SweepAxis.UAV_COUNT, axis_values=(3.0,)))


def test_runners_reject_mismatched_axis():
    spec = _power_spec()
    with pytest.raises(ValueError):
        run_frequency_sweep(spec)
    with pytest.raises(ValueError):
        run_area_sweep(spec)
    with pytest.raises(ValueError):
        run_count_sweep(spec)


def test_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=())
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(9.0, 5.0))
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0,), replicates=0)
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0,), packet_sizes=())
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0,), packet_sizes=(100, 10))
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0,), packet_sizes=(0, 10))
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0,), num_uavs=1)
    with pytest.raises(ValueError):
        SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0,), num_pairs=0)


def test_identical_specs_give_identical_results(power_result):
    again = run_packet_power_sweep(_power_spec())
    assert again == power_result


def test_replicates_spread_statistics():
    spec = SweepSpec(
        base_seed=42,
        axis=SweepAxis.AREA_SIDE_M,
        axis_values=(1500.0,),
        packet_sizes=(1000,),
        replicates=3,
    )
    result = run_area_sweep(spec)
    row = result.rows[0]
    losses = [
        mean_pair_loss_percent(generate_topology(42 + r, 20, AreaSpec(1500.0, 1500.0), 10), RadioParams(), 1000)
        for r in range(3)
    ]
    assert row.mean_loss_percent == pytest.approx(sum(losses) / 3, rel=1e-12)
    assert row.std_loss_percent > 0.0


def test_power_ratio_report_identical_columns_all_ones():
    spec = SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0, 9.0), packet_sizes=(10, 100))
    rows = tuple(
        SweepRow(power, size, 33.0, 0.0) for power in (5.0, 9.0) for size in (10, 100)
    )
    report = power_ratio_report(SweepResult(spec, rows))
    assert len(report) == 1
    pair = report[0]
    assert pair.nominal_power_ratio == pytest.approx(1.8)
    assert [cell.loss_ratio for cell in pair.cells] == [1.0, 1.0]
    assert pair.mean_loss_ratio == 1.0


def test_power_ratio_report_zero_high_loss_reported_absent():
    spec = SweepSpec(base_seed=1, axis=SweepAxis.POWER_DBM, axis_values=(5.0, 9.0), packet_sizes=(10, 100))
    rows = (
        SweepRow(5.0, 10, 10.0, 0.0),
        SweepRow(5.0, 100, 20.0, 0.0),
        SweepRow(9.0, 10, 0.0, 0.0),
        SweepRow(9.0, 100, 5.0, 0.0),
    )
    pair = power_ratio_report(SweepResult(spec, rows))[0]
    assert pair.cells[0].loss_ratio is None
    assert pair.cells[1].loss_ratio == pytest.approx(4.0)
    assert pair.mean_loss_ratio == pytest.approx(4.0)


def test_power_ratio_report_golden_values(power_result):
    report = power_ratio_report(power_result)
    assert [(p.power_low_dbm, p.power_high_dbm) for p in report] == [(5.0, 7.0), (5.0, 9.0), (7.0, 9.0)]
    five_nine = report[1]
    # Frozen from the first run on the golden sweep.
    expected = (2.5251871447001055, 1.38051150356639, 1.1346073230939762, 1.0488498033769034)
    for cell, want in zip(five_nine.cells, expected):
        assert cell.loss_ratio == pytest.approx(want, rel=1e-9)
    assert five_nine.mean_loss_ratio == pytest.approx(1.5222889436843439, rel=1e-9)
    ratios = [cell.loss_ratio for cell in five_nine.cells]
    assert all(r > 1.0 for r in ratios)
    assert all(b < a for a, b in zip(ratios, ratios[1:]))


def test_power_ratio_report_requires_power_axis_and_two_powers():
    freq = run_frequency_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.FREQUENCY_HZ, axis_values=(2.4e9,), packet_sizes=(10,))
    )
    with pytest.raises(ValueError):
        power_ratio_report(freq)
    single = run_packet_power_sweep(
        SweepSpec(base_seed=42, axis=SweepAxis.POWER_DBM, axis_values=(7.0,), packet_sizes=(10,))
    )
    with pytest.raises(ValueError):
        power_ratio_report(single)
