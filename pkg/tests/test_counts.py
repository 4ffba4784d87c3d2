from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ordtrees import counts
from ordtrees.counts import (
    CountTable,
    DivisibilityError,
    binomial,
    catalan,
    count_by_degree,
    count_by_level,
    count_class,
    count_cumulative,
    count_outdeg_level,
    exact_div,
    half_vertices,
    outdeg_level_closed_form,
)


def pascal_rows(size):
    rows = [[1]]
    for a in range(1, size + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, a)] + [1])
    return rows


PASCAL = pascal_rows(200)


def test_binomial_against_pascal():
    for a in range(0, 60):
        for b in range(-2, a + 3):
            expected = PASCAL[a][b] if 0 <= b <= a else 0
            assert binomial(a, b) == expected
    big = binomial(200, 100)
    assert big == PASCAL[200][100]
    assert len(str(big)) == 59


def test_binomial_examples():
    assert binomial(5, 3) == 10
    assert binomial(6, 3) == 20
    assert binomial(3, -1) == 0 and binomial(3, 4) == 0
    assert binomial(-1, 0) == 0


@given(st.integers(0, 300), st.integers(0, 300))
def test_binomial_symmetry(a, b):
    assert binomial(a, b) == binomial(a, a - b)


def test_catalan():
    assert [catalan(n) for n in range(11)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_half_vertices():
    assert half_vertices(3) == 10
    assert half_vertices(1) == 1
    assert half_vertices(6) == 462


def test_exact_div_faults_on_remainder():
    assert exact_div(12, 4) == 3
    with pytest.raises(DivisibilityError):
        exact_div(13, 4)


def test_count_class_examples():
    assert count_class(3, 1, 1) == 2
    assert count_class(1, 1, 1) == 1
    assert count_class(3, 2, 1) == 2
    assert count_class(3, 0, 1) == 0 and count_class(3, 4, 1) == 0 and count_class(3, 1, 4) == 0


def test_count_cumulative_examples():
    assert count_cumulative(3, 0, 0) == 20
    assert count_cumulative(3, 1, 1) == 5
    assert count_cumulative(1, 1, 1) == 0


def test_count_outdeg_level_examples():
    assert count_outdeg_level(3, 0, 1) == 5
    assert count_outdeg_level(3, 1, 0) == 2
    assert count_outdeg_level(3, 0, 0) == 0


def test_count_by_degree_examples():
    assert count_by_degree(3, 1) == 6
    assert count_by_degree(3, 3) == 1
    assert count_by_degree(3, 2) == 3


def test_count_by_level_examples():
    assert count_by_level(3, 1) == 5
    assert count_by_level(3, 3) == 1
    assert count_by_level(3, 2) == 4


RANGE30 = [(n, k, l) for n in range(1, 31) for k in range(1, n + 1) for l in range(1, n + 1)]


def test_telescoping_identities_exact_to_30():
    for n, k, l in RANGE30:
        term = Fraction(k + 2 * l - 2, 2 * n - k) * binomial(2 * n - k, n + l - 1)
        assert term == binomial(2 * n - k - 1, n + l - 2) - binomial(2 * n - k - 1, n + l - 1)
        assert term == (Fraction(k + 2 * l - 1, 2 * n - k + 1) * binomial(2 * n - k + 1, n + l)
                        - Fraction(k + 2 * l, 2 * n - k) * binomial(2 * n - k, n + l))
        lhs, rhs = counts.telescope_by_level(n, k, l)
        assert lhs == rhs
        lhs, rhs = counts.telescope_by_degree(n, k, l)
        assert lhs == rhs
        assert count_class(n, k, l) == term


def test_sieve_matches_closed_form_to_30():
    for n in range(1, 31):
        for k in range(n + 1):
            for l in range(n + 1):
                assert count_outdeg_level(n, k, l) == outdeg_level_closed_form(n, k, l)


def test_summation_closures():
    for n in range(1, 31):
        for k in range(1, n + 1):
            assert sum(count_class(n, k, l) for l in range(1, n + 1)) == count_by_degree(n, k)
        for l in range(1, n + 1):
            assert sum(count_class(n, k, l) for k in range(1, n + 1)) == count_by_level(n, l)
        total = sum(count_outdeg_level(n, k, l) for k in range(n + 1) for l in range(n + 1))
        assert total == binomial(2 * n, n)


def test_class_count_is_shifted_outdeg_level():
    for n in range(1, 20):
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                assert count_class(n, k, l) == count_outdeg_level(n, k, l - 1)


def test_level_parity_by_degree():
    for n in range(1, 31):
        for k in range(1, n + 1):
            odd = sum(counts.count_degree_level(n, k, l) for l in range(1, n + 1, 2))
            even = sum(counts.count_degree_level(n, k, l) for l in range(0, n + 1, 2))
            assert odd == even


def test_count_table_export_is_stable():
    t = counts.formula_table(3)
    csv_text = counts.to_csv([t])
    assert csv_text.splitlines()[0] == "n,k,l,statistic,count"
    assert "3,1,1,class,2" in csv_text.splitlines()
    assert csv_text == counts.to_csv([counts.formula_table(3)])
    js = counts.to_json([t])
    assert '"statistic": "class"' in js
    assert all(v >= 0 for v in t.entries.values())


def test_count_table_merge():
    a = CountTable(2, {(1, 1, "A"): 1})
    b = CountTable(2, {(1, 1, "A"): 2, (0, 1, "x"): 1})
    assert a.merge(b).entries == {(1, 1, "A"): 3, (0, 1, "x"): 1}
    assert a.merge(b) == b.merge(a)
    with pytest.raises(ValueError):
        a.merge(CountTable(3))
