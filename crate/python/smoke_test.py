"""Smoke test for the hsalg extension module.

Build first:  pip install --no-build-isolation ./crates/python
Run:          python -m pytest python/smoke_test.py
"""

import pytest

import hsalg


def test_exact_scalars():
    half = hsalg.GaussianRational("1/2")
    z = half + hsalg.GaussianRational.i()
    assert z.re == "1/2" and z.im == "1"
    assert (z * z.conj()).im == "0"
    assert (z / z) == hsalg.GaussianRational("1")
    with pytest.raises(ValueError):
        hsalg.GaussianRational("0.5")
    with pytest.raises(ZeroDivisionError):
        z / hsalg.GaussianRational("0")


def test_young_dimensions():
    assert hsalg.YoungDiagram([2, 2]).o_dim(5) == 35
    assert hsalg.YoungDiagram.parse("[2,1]").gl_dim(3) == 8
    with pytest.raises(ValueError):
        hsalg.YoungDiagram([1, 2])


def test_singleton_and_hs_table():
    label = hsalg.singleton(3, "0")
    assert label["e0"] == "1/2"
    with pytest.raises(ValueError):
        hsalg.singleton(3, "1")
    diagrams = hsalg.hs_diagrams(4, "0", 4)
    assert [d["diagram"] for d in diagrams][:3] == [[], [1, 1], [2, 2]]


def test_weyl_and_verma():
    assert hsalg.hs_dims(3, 4) == [1, 10, 35]
    assert hsalg.howe_check(3)["report"]["checks"][0]["passed"]
    assert hsalg.null_vector_count(3, 2, "1/2") == 1
    _, roots = hsalg.gram_det(3, 2)
    assert "1/2" in roots


def test_super_and_criteria():
    report = hsalg.super_check("osp", 3, 1)
    assert all(c["passed"] for c in report["checks"])
    passed, _ = hsalg.criterion(1)
    assert passed


def test_run_matches_cli_envelope():
    out = hsalg.run(["weyl", "hs-dim", "--n", "3", "--deg", "2"])
    assert out["schema"] == hsalg.SCHEMA
    assert out["status"] == "pass"
    assert out["payload"]["dims"]["deg2"] == 10
    with pytest.raises(ValueError):
        hsalg.run(["young", "singleton", "--n", "3", "--s", "1"])
