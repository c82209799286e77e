from fractions import Fraction

import pytest

import iprnear

SCHUR = [[1, 0], [0, 1], [1, 1]]
AP3 = [[1, 0], [1, 1], [1, 2]]


def test_verify_and_min_n():
    forced = iprnear.verify_ipr_at(SCHUR, 2, 5)
    assert forced["verdict"] == "forced"
    escaped = iprnear.verify_ipr_at(SCHUR, 2, 4)
    assert escaped["verdict"] == "escaped"
    assert escaped["coloring"] == [1, 2, 2, 1]
    assert iprnear.min_forcing_n(SCHUR, 2) == 5
    assert iprnear.min_forcing_n(AP3, 2, n_max=20) == 9
    assert iprnear.min_forcing_n(SCHUR, 2, n_max=4) is None


def test_rational_entries_as_strings():
    m = [["1/2", "0"], ["0", "1/2"], ["1/2", "1/2"]]
    # halving the matrix relabels the witnesses but keeps the same
    # integer-valued images, so the threshold is unchanged
    assert iprnear.min_forcing_n(m, 2, n_max=10) == 5


def test_first_entries_and_validate():
    rep = iprnear.check_first_entries(SCHUR)
    assert rep["satisfies"] and rep["monic"]
    bad = iprnear.check_first_entries([[1, 0], [2, 1]])
    assert not bad["satisfies"]
    with pytest.raises(iprnear.IprError):
        iprnear.verify_ipr_at([[1, -1]], 2, 3)


def test_compress_fs_mt():
    assert iprnear.compress([0, 1, 0, 0, 1, 2, 0, 2, 0, 0]) == [1, 2]
    fs = iprnear.fs_enumerate([1, 3, 9])
    assert fs == ["1", "3", "4", "9", "10", "12", "13"]
    assert iprnear.mt_enumerate([1], [1, 3, 9]) == fs
    rows = iprnear.mt_matrix_rows([2, 1], 2)
    assert rows == [["2", "1"]]


def test_insertion_matches_the_worked_example():
    c = [[1, 0], [2, 1]]
    b0 = [[1, 1], [5, 7]]
    b1 = [[0, 1], [3, 3]]
    out = iprnear.build_insertion(c, [b0, b1])
    assert out == [
        ["1", "1", "0", "0"],
        ["5", "7", "0", "0"],
        ["2", "2", "0", "1"],
        ["2", "2", "3", "3"],
        ["10", "14", "0", "1"],
        ["10", "14", "3", "3"],
    ]


def test_witness_for_coloring():
    w = iprnear.witness_for_coloring(SCHUR, 1, [1, 1, 1])
    assert w == {"color": 1, "x": [1, 1], "image": [1, 1, 2]}
    assert iprnear.witness_for_coloring(SCHUR, 2, [1, 2, 2, 1]) is None


def test_near_zero_transfer_with_a_python_oracle():
    def oracle(q):
        return 1 if Fraction(q).numerator % 2 else 2

    w = iprnear.near_zero_transfer(SCHUR, 2, 6, 5, oracle)
    assert Fraction(w["scale"]) == Fraction(1, 512)
    for entry in w["image"]:
        v = Fraction(entry)
        assert 0 < v < Fraction(1, 64)
        assert oracle(entry) == w["color"]


def test_diag_sum_witness():
    b = [[1], [2]]
    w = iprnear.diag_sum_witness(SCHUR, b, 2, 3, 5, lambda q: 1 if "/" in q else 2)
    assert len(w["z"]) == 3
    assert len(w["image"]) == 5
    image = [Fraction(v) for v in w["image"]]
    assert all(0 < v < Fraction(1, 8) for v in image)


def test_ip_star_falsify():
    hit = iprnear.ip_star_falsify(
        lambda q: Fraction(q).denominator == 1 and Fraction(q).numerator % 3 == 0,
        2,
        6,
    )
    assert hit["generators"] == ["1", "4"]
    assert iprnear.ip_star_falsify(lambda q: True, 1, 10) is None


def test_segmented_check():
    rep = iprnear.segmented_check(SCHUR, [0, 2], 2, 5)
    assert rep["verdict"] == "monic segmented first entries"
    assert rep["blocks"][0]["classification"] == "monic-first-entries"
