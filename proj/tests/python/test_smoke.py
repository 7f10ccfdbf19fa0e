from fractions import Fraction

import pytest

import nilgr


def identity(m):
    return [[1 if i == j else 0 for j in range(m)] for i in range(m)]


def test_sp10_orbits():
    dims = [d for _, d in nilgr.orbits("sympA", 5)]
    assert dims == [40, 36, 32, 28, 24, 16, 0]


def test_small_weights():
    assert nilgr.small_weights("C", 3) == [[0, 0, 0], [1, 1, 0], [2, 0, 0], [2, 1, 1]]


def test_cell_pi_iota_roundtrip():
    g = nilgr.witness("A2lMinus1", 3, (2, 1, 1), "3^2", branch="II")
    assert nilgr.sigma_fixed("A2lMinus1", 3, g)
    assert nilgr.cell_of("A2lMinus1", 3, g) == (2, 1, 1)
    assert nilgr.pi(g) == g[-1]
    h = nilgr.iota(g)
    assert h[-1] == g[-1]
    assert nilgr.cell_of("A2lMinus1", 3, h) == (2, 1, 1)
    assert nilgr.cell_of("A2l", 2, {0: identity(5)}) == (0, 0)


def test_fractions_accepted():
    x = [[0] * 5 for _ in range(5)]
    x[0][4] = Fraction(3, 2)
    assert nilgr.pi({0: identity(5), -1: x})[0][4] == Fraction(3, 2)


def test_verify_table_and_duality():
    rep = nilgr.verify_table("D", 3, seed=1, conjugates=2)
    assert rep["pass"] is True
    assert all(row["pass"] for row in rep["rows"])
    assert all(r["ok"] for r in nilgr.duality(5))
    assert nilgr.fiber_profile("D", 4) == ("[2^4 1]", 16)


def test_errors_map_to_exceptions():
    with pytest.raises(nilgr.InvalidInput):
        nilgr.orbits("nope", 3)
    with pytest.raises(nilgr.MembershipError):
        nilgr.sigma_fixed("A2l", 1, {1: identity(3)})
    with pytest.raises(ValueError):
        nilgr.small_weights("D", 2)


def test_cli_entry():
    code, out, _ = nilgr.cli(["duality", "--n", "2"])
    assert code == 0 and "orthOddA/lieSp" in out
    code, _, err = nilgr.cli(["orbits", "--case", "bad", "--n", "1"])
    assert code == 2 and err
