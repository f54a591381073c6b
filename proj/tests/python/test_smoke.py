import math

import pytest

import boppana

PHI_INV = (math.sqrt(5.0) - 1.0) / 2.0


def test_scalar_functions():
    assert boppana.entropy(0.5) == pytest.approx(math.log(2.0), abs=1e-16)
    assert boppana.entropy(0.25) == boppana.entropy(0.75)
    assert boppana.q(2, 0.0) == 0.5
    assert boppana.q(2, PHI_INV) == pytest.approx(PHI_INV, abs=1e-12)
    assert boppana.u_fn(0.3) == pytest.approx(boppana.u_fn(0.7), rel=1e-15)
    assert boppana.log_mean(4.0, 2.0) == pytest.approx(2.0 / math.log(2.0), rel=1e-15)
    assert boppana.defect(2, PHI_INV, 0.3) > 0.0


def test_domain_errors():
    with pytest.raises(ValueError):
        boppana.entropy(1.5)
    with pytest.raises(boppana.DomainError):
        boppana.solve_alpha(1.0)
    with pytest.raises(ValueError):
        boppana.certify(2, max_depth=0)


def test_alpha_certificate():
    cert = boppana.solve_alpha(2)
    lo, hi = float(cert["lo"]), float(cert["hi"])
    assert lo <= PHI_INV <= hi
    assert hi - lo <= 1e-12
    assert cert["status"] == "converged"
    lo, hi = boppana.frequency_threshold(2)
    assert lo <= (3.0 - math.sqrt(5.0)) / 2.0 <= hi
    lo, hi = boppana.equality_point(3)
    assert lo <= 0.68232780382801933 <= hi


def test_certify():
    report = boppana.certify(2, max_depth=40)
    assert report["overall"] == "certified_except_zones"
    assert report["min_certified_margin"] > 0.0
    assert float(report["regions"][0]["lo"]) == 0.0
    assert float(report["regions"][-1]["hi"]) == 1.0
    assert boppana.certify(2, max_depth=40, workers=4) == report


def test_scan():
    rows = boppana.scan(2, 5)
    assert len(rows) == 5
    assert rows[0][:2] == (0.0, 0.5)


def test_set_families():
    assert boppana.is_union_closed(2, [[], [1], [1, 2]])
    assert not boppana.is_union_closed(2, [[], [1], [2]])
    stats = boppana.closure_stats(2, [[], [1], [2]], k=2)
    assert (stats["c"]["num"], stats["c"]["den"]) == (7, 9)
    assert stats["satisfied"]
    report = boppana.exhaustive_check(3, k=2)
    assert report["families_checked"] == 254
    assert report["violations"] == []
    probe = boppana.random_probe(5, k=3, trials=200, seed=7)
    assert probe["families_checked"] == 200
    assert probe["violations"] == []
