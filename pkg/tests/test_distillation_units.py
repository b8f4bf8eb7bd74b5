import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distqre.distillation import (TABLE_MODELS, UNITS, InvalidRegimeError,
                                  PauliErrorRates, UnitKind, enumerate_unit_model,
                                  evaluate_unit)
from distqre.distillation.oracle import clifford_fault_terms, enumerate_outcomes
from distqre.polynomial import poly

K = UnitKind
rate = st.floats(0.0, 0.03)


def test_2qz_row_example():
    accept, out = evaluate_unit(UNITS[K.REPETITION_Z],
                                PauliErrorRates(0.01, 0.01, 0.01), 0.0)
    assert 1 - accept == pytest.approx(0.0404)
    assert out.pz == pytest.approx(0.02)
    assert out.px == pytest.approx(2e-4)
    assert out.py == pytest.approx(2e-4)


def test_2qx_row_as_printed():
    accept, out = evaluate_unit(UNITS[K.REPETITION_X], PauliErrorRates(0.02, 0, 0), 0.0)
    assert accept == 1.0
    assert out.as_tuple() == pytest.approx((0.04, 0.0, 0.0))


def test_zero_error_fixed_point():
    for unit in UNITS.values():
        accept, out = evaluate_unit(unit, PauliErrorRates.zero(), 0.0)
        assert accept == 1.0
        assert out.total == 0.0


def test_regime_guard():
    with pytest.raises(InvalidRegimeError):
        evaluate_unit(UNITS[K.REPETITION_Z], PauliErrorRates(0.3, 0.3, 0.3), 0.0)
    with pytest.raises(InvalidRegimeError):
        evaluate_unit(UNITS[K.REPETITION_Z], PauliErrorRates.zero(), 0.2)


def test_pauli_rates_validation():
    with pytest.raises(ValueError):
        PauliErrorRates(-0.1, 0, 0)
    with pytest.raises(ValueError):
        PauliErrorRates(0.5, 0.4, 0.3)
    assert PauliErrorRates.depolarizing(0.03).total == pytest.approx(0.03)


@given(rate, rate, rate)
def test_repetition_axis_symmetry(px, py, pz):
    # 2Q(X) is 2Q(Z) with X and Z relabelled
    rz = evaluate_unit(UNITS[K.REPETITION_Z], PauliErrorRates(px, py, pz), 0.0)
    rx = evaluate_unit(UNITS[K.REPETITION_X], PauliErrorRates(pz, py, px), 0.0)
    assert rx[0] == pytest.approx(rz[0])
    assert rx[1].px == pytest.approx(rz[1].pz)
    assert rx[1].pz == pytest.approx(rz[1].px)
    assert rx[1].py == pytest.approx(rz[1].py)


@given(rate, rate, rate, st.floats(0.0, 0.03))
def test_outputs_monotone_in_inputs(px, py, pz, bump):
    lo = PauliErrorRates(px, py, pz)
    hi = PauliErrorRates(px + bump / 3, py + bump / 3, pz + bump / 3)
    for unit in UNITS.values():
        _, a = evaluate_unit(unit, lo, 1e-4)
        _, b = evaluate_unit(unit, hi, 1e-4)
        assert a.dominated_by(b)


_EXACT = {kind: enumerate_outcomes(kind, 5 if kind is K.FIVE_QUBIT_PERFECT else 2,
                                   exact=True)
          for kind in (K.REPETITION_Z, K.REPETITION_X, K.FIVE_QUBIT_PERFECT)}


@settings(max_examples=50)
@given(rate, rate, rate)
def test_exact_outcome_probabilities_sum_to_one(px, py, pz):
    for out in _EXACT.values():
        total = sum(f(px, py, pz) for f in out.values())
        assert total == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("kind", list(K))
def test_oracle_matches_table_input_terms(kind):
    order = 3 if kind is K.FIVE_QUBIT_PERFECT else 2
    derived = enumerate_unit_model(kind, order)
    for name, table_poly in TABLE_MODELS[kind].polynomials().items():
        got = getattr(derived, name).input_terms().as_dict()
        for exps, coeff in table_poly.input_terms().as_dict().items():
            assert got.get(exps) == pytest.approx(coeff), (name, exps)


@pytest.mark.parametrize("kind", [K.REPETITION_X, K.REPETITION_Y, K.REPETITION_Z])
def test_repetition_rows_have_no_extra_input_terms(kind):
    derived = enumerate_unit_model(kind, 2)
    for name, table_poly in TABLE_MODELS[kind].polynomials().items():
        assert (getattr(derived, name).input_terms().as_dict()
                == pytest.approx(table_poly.input_terms().as_dict()))


def test_oracle_examples():
    rz = enumerate_unit_model(K.REPETITION_Z, 2)
    rej = rz.rejection.input_terms().as_dict()
    assert rej[(1, 0, 0, 0)] == 2 and rej[(0, 1, 0, 0)] == 2
    assert (0, 0, 1, 0) not in rej
    five = enumerate_unit_model(K.FIVE_QUBIT_PERFECT, 1)
    assert five.rejection.as_dict() == poly("5*px + 5*py + 5*pz").as_dict()
    rx = enumerate_unit_model(K.REPETITION_X, 2)
    assert rx.out_z.input_terms().as_dict() == poly("py^2 + pz^2").as_dict()


def test_clifford_terms_first_order():
    # single faults give p-linear terms of the same size as the table's
    for kind in (K.REPETITION_X, K.REPETITION_Z):
        terms = clifford_fault_terms(kind)
        for key in ("X", "Y", "Z"):
            coeff = terms[key].as_dict()[(0, 0, 0, 1)]
            assert 0.3 < coeff < 1.5
    with pytest.raises(ValueError):
        clifford_fault_terms(K.FIVE_QUBIT_PERFECT)
