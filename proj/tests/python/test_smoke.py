import json
import math

import pytest

import cantor_intersect as ci


def test_classify():
    assert ci.classify(8, [0, 5, 7])["sparse"]
    assert ci.classify(3, [0, 2])["uniform"]
    assert not ci.classify(17, [0, 2, 4, 7, 10, 13])["sparse"]


def test_validation_error_carries_code():
    with pytest.raises(ci.CantorError) as info:
        ci.classify(3, [0, 1, 2])
    assert info.value.code == "TooManyDigits"
    assert isinstance(info.value, ValueError)


def test_expansions():
    assert ci.to_fraction(3, "0.(20)") == (3, 4)
    assert ci.to_fraction(3, "3/4") == (3, 4)
    assert ci.to_fraction(17, "0.([2])") == (1, 8)


def test_mu_matches_oracle():
    mus = ci.mu(3, [0, 2], "3/4", 8)
    assert mus == [1, 1, 2, 2, 4, 4, 8, 8, 16]
    for k, value in enumerate(mus):
        c = ci.oracle_counts(3, [0, 2], "3/4", k)
        assert c["interval"] + c["potential"] == value


def test_sigma_and_refusal():
    assert ci.sigma(3, [0, 2], "1/4", 4) == ["1"] * 5
    assert ci.sigma(8, [0, 5, 7], "0.(3)", 2)[1] == "0"
    assert ci.sigma(17, [0, 2, 4, 7, 10, 13], "0.([2])", 3)[1:] == ["i", "i", "i"]
    with pytest.raises(ci.CantorError) as info:
        ci.mu(17, [0, 2, 4, 7, 10, 13], "0.([2])", 3)
    assert info.value.code == "SimultaneousStateEncountered"
    assert info.value.level == 1


def test_bounds():
    r = ci.bounds(3, [0, 2], "3/4")
    assert r["s"]["symbolic"] == "log_9(2)"
    assert r["beta"]["symbolic"] == "1/2"
    expected = 0.25 ** (math.log(2) / math.log(9))
    assert abs(float(r["upper_bound"]["decimal"]) - expected) < 1e-12


def test_run_cli():
    code, out, err = ci.run_cli(["bounds", "--n", "3", "--digits", "0,2", "--t", "2/3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "cantor-intersect/1"
    assert doc["lower_bound"]["symbolic"] == "1/4"
    code, _, err = ci.run_cli(["classify", "--n", "3", "--digits", "0,1,2"])
    assert code == 2 and "TooManyDigits" in err
