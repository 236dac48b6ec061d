import pytest

import ggt


def test_orbit_selfdual():
    o = ggt.orbit("1/7", 3)
    assert o["size"] == 6
    assert o["selfdual"]
    assert o["elements"][3] == "6/7"


def test_prime_pair_revalidates():
    cert = ggt.find_pq(2, 3, 2, 5)
    assert (cert["p"], cert["q"]) == (17, 769)
    assert all(c["pass"] for c in ggt.validate_certificate(cert))
    cert["q"] = 773
    assert not all(c["pass"] for c in ggt.validate_certificate(cert))


def test_tame_parameter():
    t = ggt.tame_parameter(5, 3, 1)
    assert t["image_order"] == 6
    assert all(t["checks"].values())
    assert ggt.mult_order(7, 43) == 6


def test_weyl_orders():
    assert ggt.weyl_orders("G2")["maximal"] == [6]
    assert ggt.weyl_orders("A2+B2")["maximal"] == [12]
    assert ggt.uniqueness_scan(4, [8, 12]) == ["F4"]
    with pytest.raises(ggt.BoundExceeded):
        ggt.weyl_orders("E8", "exact")
    with pytest.raises(ggt.DomainError):
        ggt.weyl_orders("Q3")


def test_minuscule_and_eigs():
    assert ggt.almost_minuscule("C3") == {"dim": 14, "zero_mult": 2, "short_roots": 12}
    eigs = ["1/7", "-1/7", "2/7", "-2/7", "4/7", "-4/7", "0/1"]
    assert ggt.g2_admissible(eigs)
    assert ggt.char_poly_shape(eigs)["g_rational"] == [1] * 7
    assert not ggt.g2_admissible(["0/1"] * 5 + ["1/2"] * 2)


def test_cli_roundtrip():
    code, report = ggt.cli("group", "analyze", "--preset", "metacyclic", "--m", "6", "--p", "7", "--gamma-d", "6")
    assert code == 0
    assert report["results"]["gamma_d"]["order"] == 7
    assert ggt.cli("weyl", "orders", "--type", "E8")[0] == 3
