import pytest

import eulerpart as ep


def test_worked_example():
    lam = [17, 16, 14, 10, 7, 4, 2, 1]
    trace = ep.delta_trace(lam)
    assert trace["alpha"] == [15, 12, 10, 9, 8, 6, 6, 4, 1]
    assert trace["beta"] == [19, 18, 13, 10, 6, 5]
    assert trace["mu"] == [19, 13, 9, 9, 5, 5, 5, 3, 3]
    assert ep.delta_inv(trace["mu"]) == sorted(lam, reverse=True)

    stats = ep.statistics(lam)
    assert (stats["lo"], stats["la"]) == (3, 9)
    mu_stats = ep.statistics(trace["mu"])
    assert (mu_stats["no"], mu_stats["l"]) == (3, 9)


def test_maps_compose():
    lam = [17, 16, 14, 10, 7, 4, 2, 1]
    alpha = ep.varphi(lam)
    beta = ep.phi(alpha)
    assert ep.psi_inv(beta) == ep.delta(lam)
    assert ep.phi_inv(beta) == alpha
    assert ep.psi([15, 9, 7, 7, 3, 1]) == [15, 14, 9, 3, 1]


def test_families():
    assert ep.cardinality("D", 7) == ep.cardinality("O", 7) == 5
    assert ep.enumerate_family("D", 7)[0] == [7]
    assert ep.contains("A1", [7, 3, 2])
    assert not ep.contains("A1", [6, 1])
    for n in range(25):
        assert ep.cardinality("D", n) == ep.cardinality("O", n)


def test_text_round_trip():
    assert ep.parse_partition("3^2,5^3,9^2,13,19") == [19, 13, 9, 9, 5, 5, 5, 3, 3]
    assert ep.format_partition([1, 3, 2]) == "3,2,1"


def test_verify_small():
    results = ep.verify("refinements", max_n=12, order=8)
    assert results and all(r["ok"] for r in results)


def test_invalid_input():
    with pytest.raises(ValueError):
        ep.delta([3, 3])
    with pytest.raises(ValueError):
        ep.parse_partition("bogus")
