import pytest

import idemarith as ia


def test_scalars():
    assert [ia.ramanujan_sum(6, j) for j in range(1, 7)] == [1, -1, -2, -1, 1, 2]
    assert ia.jordan_totient(2, 6) == 24
    assert ia.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert ia.crt_solve(3, 4, 5, 6) == 11
    assert ia.crt_solve(0, 2, 1, 2) is None
    assert abs(ia.ramanujan_sum_roots(9, 3) - (-3)) < 1e-9
    assert ia.lcm_tuple_count(3, 12) == 133


def test_domain_errors_are_value_errors():
    with pytest.raises(ValueError):
        ia.mobius(0)
    with pytest.raises(ia.DomainError):
        ia.factorize(0)


def test_operators():
    assert ia.projection(1, 2, dim=4) == [0, 1, 0, 1]
    assert ia.projection(1, 2, dim=4, offset=1) == [1, 0, 1, 0]
    c = ia.c_operator(1, 6, dim=6)
    assert [round(v.real) for v in c] == [ia.ramanujan_sum(6, m - 1) for m in range(6)]
    t = ia.t_operator(3, 0, 6, dim=6)
    assert [round(v.real) for v in t] == [0, 0, 1, 0, 1, 0]


def test_determinant_sign():
    d = ia.det_c0(30, 7)
    assert d["direct"] == -16
    assert d["closed_form"] == 16
    assert not d["agree"] and d["corrected_agree"]
    assert ia.trace_identities(30, 64)["summary"]["failed"] == 0


def test_rf_transform():
    rf = ia.rf_transform(4, {1: 1, 2: 2, 4: 4})
    assert rf["scale_residual"] < 1e-9
    for r, a in rf["orthogonal"].items():
        assert abs(rf["paper"][r] - 4 * a) < 1e-9


def test_suites():
    assert "product-law" in ia.suite_names()
    report = ia.run_suite("product-law", n_max=2, dim=4)
    assert report["summary"]["pass"]
    assert report["suites"][0]["cases"] == 9
    with pytest.raises(ValueError):
        ia.run_suite("nonsense")
