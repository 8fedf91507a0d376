import pytest

import tracecode
from oracle import Field as Oracle


def to_basis(counts):
    """sum_t counts[t] zeta^t in the basis 1..zeta^(p-2)."""
    top = counts[-1]
    return [c - top for c in counts[:-1]]


@pytest.fixture(scope="module")
def f351():
    return tracecode.Field(3, 5, 1), Oracle(3, 5, 1)


def test_params():
    fp = tracecode.validate_params(3, 7, 1)
    assert (fp.N, fp.e, fp.q, fp.sqrt_q) == (14, 6, 729, 27)
    with pytest.raises(tracecode.TracecodeError, match="primitive"):
        tracecode.validate_params(3, 11, 1)


def test_primitive_element_matches_oracle(f351):
    field, oracle = f351
    assert field.g == list(oracle.first_primitive())


def test_weight_distributions_match_oracle(f351):
    field, oracle = f351
    for alpha in range(3):
        for t in (None, 0, 1, 3, 7):
            beta = tuple(field.g_power(t)) if t is not None else (0,) * 4
            n, dist = oracle.weight_distribution(alpha, beta)
            got = field.weight_distribution(alpha, t)
            if n == 0:
                assert got == {}
            else:
                assert got == dist, (alpha, t)


def test_binomial_sums_match_oracle(f351):
    field, oracle = f351
    for a in (1, 2):
        for t in range(10):
            b = field.g_power(t)
            expected = to_basis(oracle.binomial_counts(a, tuple(b)))
            assert field.s_binomial_brute([a], b) == expected
            assert tracecode.s_binomial_closed(field.params, a, field.j_index(b)) == expected


def test_y_count(f351):
    field, oracle = f351
    for alpha in range(3):
        for t in range(10):
            b = field.g_power(t)
            cls = tracecode.classify_j(5, 1, field.j_index(b))
            assert field.y_count_brute(alpha, b) == tracecode.y_count_closed(field.params, alpha, cls)


def test_code_report_example():
    r = tracecode.code_report(7, 5, 1, 1)
    assert r["code"]["distribution"] == [[798, 960], [840, 1440]]
    assert all(r["checks"].values())
    assert r["dual"]["d"] == "2"
    assert r["secret_sharing"]["ok"] is True


def test_closed_mode_large_field():
    r = tracecode.code_report(3, 5, 2, 0, mode="closed")
    assert r["code"] is None
    assert r["prediction"]["n"] > 0


def test_predict_and_w():
    fp = tracecode.validate_params(5, 3, 2)
    pr = tracecode.predict(fp, 0)
    assert pr["n"] == 10416
    assert pr["enumerators"] == {8300: 10416, 8400: 5208}
    assert tracecode.w_closed(fp, 0) == 36456
    assert tracecode.sphere_packing_optimal(10416, 10410, 5)
    assert tracecode.secret_sharing_check({294: 2394, 343: 6}, 7) == (294, 343, False)
