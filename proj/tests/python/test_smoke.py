import pytest

import qshuffle


def test_shuffle_examples():
    assert qshuffle.shuffle("x[1]", "x[1]", 2, "R") == "x[2]"
    assert qshuffle.shuffle("y[1]", "y[1]", 3) == "y[2] + 2*y[1,1]"
    assert qshuffle.shuffle("1", "x[5]", 4, "R") == "x[5]"


def test_structure_maps_round_trip():
    u = qshuffle.phi("x[1] (x) x[2]", 2)
    assert u == "x[3] + x[1,2] + x[1]y[2]"
    assert qshuffle.phi_inv(u, 2) == "x[1] (x) x[2]"
    assert qshuffle.pi_hat(qshuffle.ehat("x[1,2]", 2), 2) == "x[1,2]"


def test_zeta_and_oracles():
    series = qshuffle.zeta_series([1], 2, 10)
    assert series["valuation"] == 0
    assert series["precision"] == 10
    assert qshuffle.oracle([1, 1], [2], 3, 20)
    assert qshuffle.thakur(3, 30)


def test_goss():
    assert qshuffle.goss(4, 3) == "X^4 + a1*X^2"


def test_verify_report():
    report = qshuffle.verify("assoc-E", 2, 3)
    assert report["schema"] == 1
    assert report["failed"] == 0
    assert report["checked"] > 0
    assert "lemma-3-9" in qshuffle.properties()


def test_errors():
    with pytest.raises(ValueError):
        qshuffle.shuffle("x[0]", "x[1]", 2)
    with pytest.raises(ValueError):
        qshuffle.verify("nope", 2, 3)
    code, out, err = qshuffle.run(["goss", "--n", "0"])
    assert code == 2
    assert "error" in err


def test_cli_passthrough():
    code, out, _ = qshuffle.run(["phi", "--q", "2"], "x[1] (x) x[2]")
    assert code == 0
    assert out == "x[3] + x[1,2] + x[1]y[2]\n"
