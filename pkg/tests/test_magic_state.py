import pytest

from distqre.chain import RegimeError
from distqre.magic_state import (FIFTEEN_TO_ONE, TWENTY_TO_FOUR, MsdfFactory,
                                 catalog_to_json, compose_msdf, msdf_catalog,
                                 tstate_period, unit_with)


def _fake(steps, outputs):
    return MsdfFactory((), "sequential", 0, steps, 1.0, outputs, 0.0, 0.0)


@pytest.mark.parametrize("steps, n, outputs, expected", [
    (873, 1, 1, 873), (873, 3, 1, 291), (400, 2, 4, 50)])
def test_tstate_period(steps, n, outputs, expected):
    assert tstate_period(_fake(steps, outputs), n) == pytest.approx(expected)


def test_tstate_period_needs_a_factory():
    with pytest.raises(ValueError):
        tstate_period(_fake(10, 1), 0)


def test_two_level_fifteen_to_one_present():
    cat = msdf_catalog(1e-4, 1e-10)
    chains = {tuple(name for name, _ in f.chain) for f in cat}
    assert ("15-to-1", "15-to-1") in chains
    assert all(f.output_error <= 1e-10 for f in cat)


def test_noiseless_single_unit():
    cat = msdf_catalog(0.0, 1e-12)
    assert cat
    assert all(len(f.levels) == 1 and f.output_error == 0 for f in cat)


def test_deep_target_needs_two_levels():
    cat = msdf_catalog(1e-3, 1e-15)
    assert cat and all(len(f.levels) >= 2 for f in cat)


def test_single_level_cubic_suppression():
    f = compose_msdf([(FIFTEEN_TO_ONE, 15)], 1e-3, 1e-4)
    assert f.output_error == pytest.approx(35e-9, rel=0.01)
    assert f.raw_inputs == pytest.approx(15 / f.accept_probs[0])


def test_twenty_to_four_outputs():
    f = compose_msdf([(TWENTY_TO_FOUR, 9)], 1e-3, 1e-4)
    assert f.outputs == 4
    assert f.output_error == pytest.approx(22e-6, rel=0.01)


def test_regime_and_distance_checks():
    with pytest.raises(RegimeError):
        compose_msdf([(FIFTEEN_TO_ONE, 3)], 1e-9, 1e-3)
    with pytest.raises(ValueError):
        compose_msdf([(FIFTEEN_TO_ONE, 1)], 1e-3, 1e-4)
    with pytest.raises(ValueError):
        compose_msdf([], 1e-3, 1e-4)


def test_unit_override():
    u = unit_with(FIFTEEN_TO_ONE, tiles=20)
    assert u.tiles == 20 and u.inputs == 15
    f = compose_msdf([(u, 11)], 1e-3, 1e-4)
    assert f.qubits == 20 * (2 * 121 - 1)


def test_catalog_json_is_stable():
    cat = msdf_catalog(1e-4, 1e-12)
    assert catalog_to_json(cat) == catalog_to_json(msdf_catalog(1e-4, 1e-12))
