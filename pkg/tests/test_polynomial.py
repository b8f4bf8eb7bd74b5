import pytest

from distqre.polynomial import Polynomial, poly


def test_parse_and_evaluate():
    f = poly("2*px + py^2 + 0.8*p")
    assert f(0.1, 0.2, 0.0, 0.5) == pytest.approx(0.2 + 0.04 + 0.4)


def test_arithmetic():
    x, y = Polynomial.variable("px"), Polynomial.variable("py")
    f = (x + y) * (x + y)
    assert f.as_dict() == poly("px^2 + 2*px*py + py^2").as_dict()
    assert (f - f).terms == ()


def test_truncate_and_split():
    f = poly("5*px + 10*px^2 + 3*px*py*pz + 1.7*p")
    assert f.truncate(2).input_terms().as_dict() == poly("5*px + 10*px^2").as_dict()
    assert f.clifford_terms().as_dict() == poly("1.7*p").as_dict()
    assert f.lowest_order().as_dict() == poly("5*px").as_dict()


def test_permute_swaps_axes():
    f = poly("2*px + pz^2")
    assert f.permute((2, 1, 0)).as_dict() == poly("2*pz + px^2").as_dict()


def test_bad_input():
    with pytest.raises(ValueError):
        poly("2*q")
