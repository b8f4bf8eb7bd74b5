import pytest

from distqre.chain import LevelShape, RegimeError, aggregate, expected_runs, pareto_mask
from distqre.distillation import PauliErrorRates, UnitKind
from distqre.distillation.factory import (EmptyCatalogError, FactoryCatalog,
                                          compose_multilevel, explore_chains,
                                          search_factories)

K = UnitKind
RAW = PauliErrorRates.depolarizing(0.05)
WORKED = [(K.REPETITION_Z, 1), (K.FIVE_QUBIT_PERFECT, 3),
          (K.REPETITION_Z, 7), (K.REPETITION_X, 9)]


@pytest.fixture(scope="module")
def catalog():
    return search_factories(RAW, 1e-4, 1e-9)


def test_worked_chain():
    f = compose_multilevel(WORKED, RAW, 1e-4)
    assert f.qubits == pytest.approx(324, rel=0.10)
    assert f.time_steps == pytest.approx(873, rel=0.15)
    assert f.raw_inputs == pytest.approx(55, rel=0.15)
    assert 4.5e-10 / 3 <= f.output_error <= 4.5e-10 * 3


def test_two_physical_repetition_levels():
    f = compose_multilevel([(K.REPETITION_Z, 1), (K.REPETITION_X, 1)], RAW, 1e-4)
    assert f.physical_qubits == 4
    assert f.op_layers == 4
    assert f.output_error <= 0.013


def test_zero_error_chain_uses_nominal_inputs():
    f = compose_multilevel(WORKED, PauliErrorRates.zero(), 0.0)
    assert f.output_error == 0
    assert f.raw_inputs == pytest.approx(f.nominal_inputs()) == 40


def test_chain_that_adds_error_is_rejected():
    with pytest.raises(RegimeError):
        compose_multilevel([(K.REPETITION_Z, 1), (K.REPETITION_Z, 1)], RAW, 1e-4)


def test_even_distance_rejected():
    with pytest.raises(ValueError):
        compose_multilevel([(K.REPETITION_Z, 2)], RAW, 1e-4)


def test_pipelined_is_faster_and_larger():
    seq = compose_multilevel(WORKED, RAW, 1e-4, schedule="sequential")
    pipe = compose_multilevel(WORKED, RAW, 1e-4, schedule="pipelined")
    assert pipe.time_steps < seq.time_steps
    assert pipe.qubits >= seq.qubits
    assert pipe.output_rates == seq.output_rates


def test_catalog_has_repetition_only_chain(catalog):
    assert catalog.entries
    assert any(f.is_repetition_only() for f in catalog.entries)
    assert all(f.output_error <= 1e-9 for f in catalog.entries)


def test_catalog_is_pareto(catalog):
    pts = [(f.qubits, f.time_steps, f.raw_inputs) for f in catalog.entries]
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            if i != j:
                assert not all(x <= y for x, y in zip(b, a))


def test_catalog_json_round_trip(catalog):
    again = FactoryCatalog.from_json(catalog.to_json())
    assert again.to_json() == catalog.to_json()


def test_zero_raw_error_is_pass_through():
    cat = search_factories(PauliErrorRates.zero(), 1e-4, 1e-9)
    assert len(cat.entries) == 1
    assert cat.entries[0].levels == ()
    assert cat.entries[0].raw_inputs == 1


def test_above_threshold_catalog_is_empty():
    with pytest.raises(EmptyCatalogError):
        search_factories(RAW, 1e-2, 1e-9)


def test_explored_distances_never_decrease():
    for chain in explore_chains(RAW, 1e-4, 1e-9, max_levels=3):
        ds = [d for _, d in chain]
        assert ds == sorted(ds)


def test_expected_runs_account_for_rejection():
    shapes = [LevelShape(2, 1, 2, 2, 2, 1, 0.5), LevelShape(2, 1, 2, 2, 2, 3, 0.8)]
    assert expected_runs(shapes) == pytest.approx([2 * 2 / 0.8, 1 / 0.8])
    tot = aggregate(shapes, 8, "sequential")
    assert tot.raw_inputs == pytest.approx(2 * 2 / 0.8 * 2)
    assert tot.qubits == 2 + 2 * 17


def test_pareto_mask():
    pts = [(1, 5), (2, 2), (3, 3), (1, 5), (5, 1)]
    assert pareto_mask(pts) == [True, True, False, False, True]
    assert pareto_mask([]) == []
