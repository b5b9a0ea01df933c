import pytest

from nsbell.sim.features.shared.conversion.param_conversion import parse_float_list, parse_int_list


class TestParseFloatList:
    def test_valid(self):
        assert parse_float_list("0.1, 0.5,1", "mu") == ([0.1, 0.5, 1.0], None)

    def test_trailing_comma_ignored(self):
        assert parse_float_list("3,4,", "radii") == ([3.0, 4.0], None)

    @pytest.mark.parametrize("value", [None, "", "  ", ","])
    def test_empty(self, value):
        values, error = parse_float_list(value, "mu")

        assert values is None
        assert "at least one number" in error

    def test_non_numeric(self):
        values, error = parse_float_list("0.5,abc", "mu", example="0.5")

        assert values is None
        assert "'abc'" in error
        assert "Example: '0.5'" in error


class TestParseIntList:
    def test_valid(self):
        assert parse_int_list("1,10,100", "samples") == ([1, 10, 100], None)

    def test_minimum(self):
        values, error = parse_int_list("0,10", "samples")

        assert values is None
        assert "at least 1" in error

    def test_float_rejected(self):
        values, error = parse_int_list("1.5", "samples")

        assert values is None
        assert "integers only" in error
