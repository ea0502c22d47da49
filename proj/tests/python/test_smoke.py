import pytest

import heckelib


def test_partition_utilities():
    assert heckelib.conjugate("3,2") == "2,2,1"
    h = heckelib.hooks("3,2")
    assert h["hooks"] == [4, 3, 1, 2, 1]
    assert h["product"] == 24
    assert h["dim"] == 5


def test_tableaux():
    assert heckelib.column_tableau("3,2") == "1,3,5/2,4"
    assert len(heckelib.standard_tableaux("3,2")) == 5
    gamma = heckelib.gamma_tableau("3,2", "2,1", [2, 1], "1,2/3")
    assert gamma == "6,7,2,4/8,1,3,5"


def test_closed_forms():
    # Single box against single box: (u-1)/(u+1).
    h = heckelib.h_ratio("1", "1")
    assert h["num"] == ["-1", "1"]
    assert h["den"] == ["1", "1"]
    assert h["scale"] == "1"

    r = heckelib.r_gamma("1,1", "1", [1, 2])
    assert (r["num"], r["den"]) == (["-2", "1"], ["-1", "1"])


def test_brute_force_matches_closed_form():
    # (u-2)/(u-1) at u = 13/2 is 9/11.
    assert heckelib.eigenvalue_at("1,1", "1", "2,1", "13/2") == "9/11"
    assert heckelib.multiplicity("2,1", "2,1", "3,2,1") == 2


def test_fusion():
    assert heckelib.fused_F_matches("1,3/2")
    assert heckelib.matrix_element_F("1,2")[0] == ("1,2", "1")


def test_dset_excludes_zero_on_the_large_example():
    points = heckelib.dset("8,3,2,1", "6,4,4")
    assert 0 not in points
    assert points  # nonempty


def test_suite_run():
    report = heckelib.run_suite("yangbaxter", samples=5, seed=3)
    assert report["pass"]
    assert report["failures"] == 0


def test_errors():
    with pytest.raises(ValueError):
        heckelib.conjugate("2,3")
    with pytest.raises(ValueError):
        heckelib.eigenvalue_at("1", "1", "2", "1")  # integer point in range
