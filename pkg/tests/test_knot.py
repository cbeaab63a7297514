from math import gcd

import pytest

from cmlens import InvalidInput
from cmlens import knot as kn
from cmlens.oracles import poly_from_roots_of_unity

TORUS = [(p, q) for p in range(2, 9) for q in range(p + 1, 31) if gcd(p, q) == 1 and p * q <= 60]


@pytest.mark.parametrize("pq, text", [((2, 3), "T - 1 + T^-1"),
                                      ((2, 5), "T^2 - T + 1 - T^-1 + T^-2")])
def test_torus_alexander_strings(pq, text):
    assert str(kn.torus_alexander(*pq)) == text


def test_torus_3_4_degree():
    poly = kn.torus_alexander(3, 4)
    assert poly.degree == 3 and poly[3] == 1


@pytest.mark.parametrize("pq", TORUS)
def test_torus_alexander_against_division_oracle(pq):
    poly = kn.torus_alexander(*pq)
    assert dict(poly.coeffs) == poly_from_roots_of_unity(*pq)
    assert poly.evaluate_at_one() == 1
    assert poly.degree == (pq[0] - 1) * (pq[1] - 1) // 2


@pytest.mark.parametrize("pq", [(2, 4), (3, 6), (1, 5)])
def test_torus_alexander_rejects(pq):
    with pytest.raises(InvalidInput):
        kn.torus_alexander(*pq)


def test_laurent_poly_must_be_symmetric():
    with pytest.raises(InvalidInput):
        kn.LaurentPoly({1: 1, 0: -1})


def test_torsion_coefficients():
    assert kn.torus_v(2, 3).values == (1, 0)
    assert kn.torsion_coeffs(kn.LaurentPoly({0: 1})).values == (0,)
    assert kn.torus_v(2, 5).values == (1, 1, 0)


@pytest.mark.parametrize("pq", TORUS)
def test_torsion_tail(pq):
    v = kn.torus_v(*pq)
    g = (pq[0] - 1) * (pq[1] - 1) // 2
    assert v[g] == 0 and v[g - 1] == 1


@pytest.mark.parametrize("bad", [[-1], [3, 1], [2, 2], [1, 0, 1]])
def test_vsequence_validation(bad):
    with pytest.raises(InvalidInput):
        kn.VSequence(bad)


def test_vsequence_basics():
    v = kn.VSequence([2, 1, 1])
    assert v.values == (2, 1, 1, 0)
    assert v[10] == 0 and v.nu_plus == 3
    assert v.count_between(2, 0) == 3 and v.count_between(1, 0) == 2
    assert kn.VSequence([]).values == (0,)
    assert kn.VSequence([1, 0, 0, 0]).values == (1, 0)


def test_vsequence_json_forms():
    v = kn.VSequence([1, 1, 0])
    assert kn.VSequence.from_json(v.to_json()) == v
    assert kn.VSequence.from_json("[1, 1]") == v
    assert kn.VSequence.from_json({"torus": [2, 5]}) == v
    with pytest.raises(InvalidInput):
        kn.VSequence.from_json({"x": 1})


@pytest.mark.parametrize("pq", TORUS)
def test_extract_r1_is_identity(pq):
    v = kn.torus_v(*pq)
    view = kn.extract_relevant(v, 1)
    assert view.v_rel == v.values and view.offset == 0
    assert view.nu_plus_rel == v.nu_plus


def test_extract_trefoil_parities():
    v = kn.torus_v(2, 3)
    even = kn.extract_relevant(v, 2, "even")
    odd = kn.extract_relevant(v, 2, "odd")
    assert even.v_rel == (1, 0) and even.nu_plus_rel == 1
    assert odd.v_rel == (0,) and odd.nu_plus_rel == 0 and odd.offset == 1


def test_extract_requires_parity_for_even_r():
    with pytest.raises(InvalidInput):
        kn.extract_relevant(kn.torus_v(2, 3), 2)
    with pytest.raises(InvalidInput):
        kn.extract_relevant(kn.torus_v(2, 3), 0)


def test_t_rel_and_mu():
    view = kn.extract_relevant(kn.VSequence([3, 2, 2, 1, 0]), 1)
    assert [view.t_rel(m) for m in range(-1, 5)] == [0, 0, 1, 3, 4, 4]
    assert view.mu == 1
    assert kn.extract_relevant(kn.torus_v(2, 3), 1).mu is None


def test_conversion_window():
    v = kn.torus_v(2, 3)
    view = kn.extract_relevant(v, 1)
    assert kn.conversion_window(view, 1, 0) == (0, 2)
    assert kn.conversion_window(view, 5, 3) == (-1, 1)
    with pytest.raises(InvalidInput):
        kn.conversion_window(view, 0, 1)


@pytest.mark.parametrize("pq", TORUS)
@pytest.mark.parametrize("r", [2, 3, 4])
def test_conversion_window_brackets_count(pq, r):
    v = kn.torus_v(*pq)
    for parity in ("odd", "even"):
        view = kn.extract_relevant(v, r, parity)
        for m1 in range(1, v[0] + 1):
            for m2 in range(m1):
                lo, hi = kn.conversion_window(view, m1, m2)
                # every index with m1 >= V_i > m2 lies within r of a sampled one
                assert lo <= v.count_between(m1, m2) <= hi
