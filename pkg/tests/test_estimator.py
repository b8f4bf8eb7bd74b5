import math

import pytest

from distqre.catalog import lookup, preset
from distqre.distillation import PauliErrorRates
from distqre.distillation.factory import MultiLevelFactory
from distqre.estimator import (ApplicationProfile, EstimateConfig, HardwareModel,
                               InfeasibleError, NodeOverflowError, estimate,
                               gadget_period, node_count, overhead,
                               required_distance, search, split_budget)
from distqre.magic_state import MsdfFactory
from distqre.surface_code import PhysicalQubitModel, min_distance

ZERO = PauliErrorRates.zero()


def _msdf(steps, outputs=1, qubits=1000, error=0.0):
    return MsdfFactory((), "sequential", qubits, steps, 15.0, outputs, error, 1e-3)


def _edf(steps, raw_inputs, qubits=100, outputs=1):
    return MultiLevelFactory((), "sequential", qubits, steps, raw_inputs, outputs,
                             ZERO, ZERO)


def _hw(eta=1e6, node_size=45000, c=6.0, t_op=50e-9, p=1e-4):
    return HardwareModel(PhysicalQubitModel(t_op, p),
                         PauliErrorRates.depolarizing(0.01), eta, node_size, c)


@pytest.fixture(scope="module")
def ising():
    return lookup("ising")


@pytest.fixture(scope="module")
def table4_hw():
    return preset("fast-optimistic").hardware(0.01, 10e6, 45000)


def test_split_budget():
    b = split_budget(0.01)
    assert (b.eps_L, b.eps_M, b.eps_E) == pytest.approx((0.01 / 3,) * 3)
    b = split_budget(0.01, (1, 0.5, 0.5))
    assert (b.eps_L, b.eps_M, b.eps_E) == pytest.approx((0.005, 0.0025, 0.0025))
    assert split_budget(0.01, (0.5, 0.5, 0)).eps_E == 0
    with pytest.raises(ValueError):
        split_budget(0.01, (1, 1))
    with pytest.raises(ValueError):
        split_budget(1.5)


def test_gadget_period_takes_the_slowest_term():
    hw = _hw(eta=1e6)
    tg = gadget_period(9, hw, _msdf(100), 1, _edf(20, 8), 1, n_nodes=2)
    assert tg == pytest.approx(8e-6)


def test_gadget_period_compute_bound():
    hw = _hw()
    assert gadget_period(9, hw, _msdf(1), 1, _edf(1, 1), 1) == pytest.approx(hw.tau(9))


def test_gadget_period_saturates_in_eta():
    slow = gadget_period(9, _hw(eta=1e9), _msdf(100), 1, _edf(20, 8), 1)
    fast = gadget_period(9, _hw(eta=1e12), _msdf(100), 1, _edf(20, 8), 1)
    assert slow == fast == pytest.approx(5e-6)


def test_refined_bell_term_uses_node_count():
    hw = _hw(eta=1e6)
    strict = gadget_period(1, hw, _msdf(1), 1, _edf(1, 8), 4, n_nodes=3, mode="strict")
    refined = gadget_period(1, hw, _msdf(1), 1, _edf(1, 8), 4, n_nodes=3, mode="refined")
    assert strict == pytest.approx(32e-6)
    assert refined == pytest.approx(16e-6)


def test_required_distance_ratio_one():
    hw = _hw(c=8)
    d = required_distance(0.01 / 3, 230, 9.54e5, hw, hw.tau)
    assert d == 9 == min_distance(1e-4, 0.01 / 3 / (230 * 9.54e5))


def test_required_distance_slow_factory_raises_d():
    hw = _hw(c=8)
    d = required_distance(0.01 / 3, 230, 9.54e5, hw, lambda x: 100 * hw.tau(9))
    assert d > 9


def test_node_count_examples():
    m = _msdf(1, qubits=5000)
    assert node_count(230, 9, m, 1, None, 0, 45000) == 1
    need = 161 * 230 + 5000
    assert node_count(230, 9, m, 1, None, 0, need + 1) == 1
    with pytest.raises(NodeOverflowError):
        node_count(230, 9, m, 1, _edf(1, 1, qubits=22500), 1, 45000)


def test_application_invariants():
    with pytest.raises(ValueError):
        ApplicationProfile("x", 10, 0)
    with pytest.raises(ValueError):
        ApplicationProfile("x", 0, 10)


def test_monolithic_self_consistent(ising, table4_hw):
    res = search(ising, table4_hw, monolithic=True)
    rep = res.representative
    again = estimate(ising, table4_hw, rep.config, monolithic=True)
    assert again.total_physical_qubits == rep.total_physical_qubits
    assert again.runtime == pytest.approx(rep.runtime)
    assert rep.qubits_edf == 0 and rep.nodes == 1
    assert rep.spacetime_volume == pytest.approx(rep.total_physical_qubits * rep.runtime)


def test_distributed_frontier(ising, table4_hw):
    res = search(ising, table4_hw)
    front = res.frontier
    assert res.representative in front
    for a in front:
        for b in front:
            if a is not b:
                assert not (b.total_physical_qubits <= a.total_physical_qubits
                            and b.runtime <= a.runtime)
    for r in front:
        assert r.frac_edf + r.frac_msdf + r.frac_data == pytest.approx(1.0)
        assert r.qubits_idle >= 0
        assert 2 * r.config.edf.qubits * r.config.n_e < table4_hw.node_size or r.nodes == 1
    vol = min(r.spacetime_volume for r in front)
    assert res.representative.spacetime_volume == vol


def test_distributed_result_reproducible_by_estimate(ising, table4_hw):
    rep = search(ising, table4_hw).representative
    if rep.nodes > 1:
        again = estimate(ising, table4_hw, rep.config)
        assert again.nodes == rep.nodes
        assert again.runtime == pytest.approx(rep.runtime)


def test_overhead_identity(ising, table4_hw):
    rep = search(ising, table4_hw, monolithic=True).representative
    assert overhead(rep, rep) == 1.0


def test_min_volume_non_increasing_in_eta(ising):
    pr = preset("fast-optimistic")
    vols = [search(ising, pr.hardware(0.05, eta, 45000)).representative.spacetime_volume
            for eta in (1e5, 1e6, 1e7, 1e8)]
    assert all(b <= a * (1 + 1e-12) for a, b in zip(vols, vols[1:]))


def test_tiny_node_is_rejected(ising):
    hw = preset("fast-optimistic").hardware(0.01, 10e6, 100)
    with pytest.raises(NodeOverflowError):
        search(ising, hw)


def test_impossible_budget():
    app = ApplicationProfile("huge", 100, 1e30)
    hw = preset("fast-pessimistic").hardware(0.05, 1e6, 45000)
    with pytest.raises((InfeasibleError, ValueError)):
        search(app, hw)


def test_bad_mode(ising, table4_hw):
    with pytest.raises(ValueError):
        search(ising, table4_hw, mode="loose")
    assert math.isfinite(table4_hw.tau(9))
