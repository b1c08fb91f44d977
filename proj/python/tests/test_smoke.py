import pytest

dklr = pytest.importorskip("dklr")

TABLE = dklr.Constraints(2, 4, 1, 3)
CODEBOOK = [
    "01000010", "01000100", "01001000", "01001001", "10000100",
    "10001000", "10001001", "10010001", "10010010",
]


def test_codebook_order_and_roundtrip():
    assert dklr.codebook_size(8, TABLE) == 9
    assert [dklr.encode(i, 8, TABLE) for i in range(9)] == CODEBOOK
    assert [dklr.decode(x, TABLE) for x in CODEBOOK] == list(range(9))
    assert dklr.enumerate_all(8, TABLE) == CODEBOOK


def test_masked_codec():
    words = [dklr.encode(i, 8, TABLE, charges=[0]) for i in range(dklr.codebook_size(8, TABLE, charges=[0]))]
    assert words == ["01000100", "01001001", "10001000", "10010001"]
    assert dklr.decode("10010001", TABLE, charges=[0]) == 3
    assert dklr.codebook_size(8, TABLE, weights=[3]) == 4


def test_counts_and_tables():
    assert dklr.count_weight(8, 2, TABLE) == 5
    assert dklr.count_charge(8, -2, TABLE, dklr.Variant.first_one) == 3
    assert dklr.distribution_table(8, TABLE, "charge")[8] == [0, 0, 0, 4, 4, 1, 0, 0, 0]
    assert dklr.count_dklr(8, TABLE) == 9
    assert dklr.weight_bounds(8, TABLE) == (2, 3)


def test_big_integers():
    c = dklr.Constraints(0, 10, 10, 10)
    n = 200
    size = dklr.codebook_size(n, c)
    assert size > 2**64
    last = dklr.encode(size - 1, n, c)
    assert dklr.decode(last, c) == size - 1


def test_rds_codec():
    c = dklr.Constraints(1, 3, 3, 3)
    assert dklr.codebook_size(10, c, rds=(-3, 3)) == 53
    assert dklr.encode(0, 10, c, rds=(-3, 3)) == "0001000100"


def test_generating_functions():
    coeffs = dklr.gf_dkr_coefficients(TABLE, 12)
    assert coeffs[1:] == [dklr.count_dkr(n, TABLE) for n in range(1, 13)]
    value, fallback, _ = dklr.eval_weight_poly(10, 2.0, TABLE)
    exact = sum(dklr.count_weight(10, nu, TABLE, dklr.Variant.first_one) * 2.0**nu for nu in range(1, 11))
    assert not fallback
    assert value == pytest.approx(exact, rel=1e-9)


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        dklr.Constraints(3, 2, 0, 0)
    with pytest.raises(ValueError):
        dklr.encode(9, 8, TABLE)
    with pytest.raises(ValueError):
        dklr.decode("11", TABLE)


def test_peak_shift():
    assert dklr.peak_shift("01000100", 2, "right") == "01000010"
    assert dklr.stats("01000010")["charge"] == -2
