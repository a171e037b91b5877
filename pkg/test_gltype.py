import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from src.data.spec_loader import TypeSpecLoader, load_type, type_from_dict
from src.errors import GeneralPositionError, InputError, SpecFileError, StratumError, WeightError
from src.geometry.gltype import GLType, check_stratum, require_valid, strata, validate_type
from strategies import gl_types


def test_worked_types_are_valid(d1, d2):
    assert validate_type(d1).ok
    assert validate_type(d2).ok
    assert validate_type(GLType.create(1, [2, 2, 2], [[1, 0], [0, 1], [1, 1]])).ok


def test_dependent_rows_reported():
    t = GLType.create(2, [2, 2, 2], [[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    report = validate_type(t)
    assert not report.ok
    assert report.violations == [((0, 1, 2), 2)]


def test_repeated_point_on_line():
    t = GLType.create(1, [2, 3], [[1, 1], [2, 2]])
    assert validate_type(t).violations == [((0, 1), 1)]


def test_rational_coefficients():
    t = GLType.create(1, [2, 2], [["1/2", "1/3"], [1, Fraction(-1, 7)]])
    assert t.hyperplanes[0] == (Fraction(1, 2), Fraction(1, 3))
    assert validate_type(t).ok


@pytest.mark.parametrize("d, weights, rows, error", [
    (1, [2, 0], [[1, 0], [0, 1]], WeightError),
    (1, [2, -1], [[1, 0], [0, 1]], WeightError),
    (1, [2, 2], [[1, 0]], InputError),
    (2, [2], [[1, 0]], InputError),
    (1, [2], [[0, 0]], InputError),
    (0, [], [], InputError),
    (1, [2], [["x", 1]], InputError),
    (1, [True], [[1, 0]], InputError),
])
def test_malformed_types(d, weights, rows, error):
    with pytest.raises(error):
        GLType.create(d, weights, rows)


def test_require_valid_raises_with_report():
    t = GLType.create(2, [2, 2, 2], [[1, 0, 0], [0, 1, 0], [1, 1, 0]])
    with pytest.raises(GeneralPositionError) as info:
        require_valid(t)
    assert not info.value.report.ok
    assert "{1,2,3} rank 2" in str(info.value)


def test_order_rank(d2, beilinson):
    assert d2.order_rank == 16
    assert beilinson.order_rank == 1


def test_strata_d2(d2):
    result = strata(d2)
    assert result[0] == ()
    assert len([s for s in result if len(s) == 1]) == 4
    assert len([s for s in result if len(s) == 2]) == 6
    assert not [s for s in result if len(s) >= 3]


def test_strata_d1(d1):
    assert strata(d1) == [(), (0,), (1,), (2,)]


def test_strata_of_invalid_type():
    t = GLType.create(1, [2, 2], [[1, 0], [3, 0]])
    with pytest.raises(GeneralPositionError):
        strata(t)


def test_check_stratum(d2):
    assert check_stratum([1, 0], d2) == (0, 1)
    with pytest.raises(StratumError):
        check_stratum([0, 1, 2], d2)
    with pytest.raises(StratumError):
        check_stratum([4], d2)
    with pytest.raises(StratumError):
        check_stratum([1, 1], d2)


@given(gl_types(max_d=3, max_n=5))
def test_strata_count(t):
    assert len(strata(t)) == sum(comb(t.n, m) for m in range(t.d + 1))


rows_strategy = st.integers(1, 2).flatmap(lambda d: st.tuples(
    st.just(d),
    st.lists(st.lists(st.integers(-2, 2), min_size=d + 1, max_size=d + 1).filter(any), min_size=1, max_size=4),
))


@given(rows_strategy, st.randoms(use_true_random=False))
def test_validation_permutation_invariant(data, rnd):
    d, rows = data
    t = GLType.create(d, [2] * len(rows), rows)
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert validate_type(t).ok == validate_type(GLType.create(d, [2] * len(rows), shuffled)).ok


@given(rows_strategy, st.integers(1, 5), st.integers(1, 5))
def test_validation_scaling_invariant(data, num, den):
    d, rows = data
    t = GLType.create(d, [2] * len(rows), rows)
    scaled = [[Fraction(-num, den) * v for v in rows[0]]] + rows[1:]
    assert validate_type(t).ok == validate_type(GLType.create(d, [2] * len(rows), scaled)).ok


def test_dict_roundtrip(d2):
    assert type_from_dict(d2.to_dict()) == d2
    t = GLType.create(1, [2, 2], [["1/2", 1], [0, 1]])
    assert t.to_dict()['hyperplanes'][0] == ["1/2", 1]
    assert type_from_dict(t.to_dict()) == t


def test_load_shipped_specs(spec_dir, d1, d2):
    assert load_type(f"{spec_dir}/d1_p222.json") == d1
    assert load_type(f"{spec_dir}/d2_p2222.json") == d2
    assert load_type(f"{spec_dir}/beilinson_d2.json").n == 0
    yaml_type = load_type(f"{spec_dir}/d1_p234.yaml")
    assert yaml_type.weights == (2, 3, 4)
    assert yaml_type.hyperplanes[2] == (Fraction(1, 2), Fraction(-3, 2))


def test_loader_errors(tmp_path):
    with pytest.raises(SpecFileError):
        load_type(tmp_path / "missing.json")

    broken = tmp_path / "broken.json"
    broken.write_text("{\"d\": 1, ")
    with pytest.raises(SpecFileError):
        load_type(broken)

    partial = tmp_path / "partial.json"
    partial.write_text(json.dumps({"d": 1, "weights": [2]}))
    with pytest.raises(SpecFileError, match="hyperplanes"):
        load_type(partial)

    listed = tmp_path / "list.yaml"
    listed.write_text("- 1\n- 2\n")
    with pytest.raises(SpecFileError):
        TypeSpecLoader(listed)

    zero_weight = tmp_path / "zero.json"
    zero_weight.write_text(json.dumps({"d": 1, "weights": [0], "hyperplanes": [[1, 0]]}))
    with pytest.raises(WeightError):
        load_type(zero_weight)
