import math
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from spectral_split.cache import SpectralCache
from spectral_split.config import SpectralSettings
from spectral_split.constants import (
    CERT_ENCLOSURES,
    CERT_GCD,
    CERT_STURM,
    EQUAL,
    EXACT_ALWAYS,
    FAMILY_CYCLE,
    FAMILY_PATH,
    FAMILY_STAR,
    GREATER,
    LESS,
)
from spectral_split.errors import EmptyGraph, NotConnected, ParameterOutOfRange, SizeCap
from spectral_split.graph_core import NamedFamily, build_graph, make_family
from spectral_split.spectral import (
    SturmChain,
    cached_spectral_radius,
    char_poly,
    check_perron_positive,
    collatz_bounds,
    cycle_eigenvalues,
    largest_root_interval,
    rho_compare,
    root_separation_bound,
    spectral_radius,
    star_radius_poly,
)
from spectral_split.verify.enumeration import enumerate_connected


def star(m):
    return make_family(NamedFamily(FAMILY_STAR, m))


def cycle(k):
    return make_family(NamedFamily(FAMILY_CYCLE, k))


def path(k):
    return make_family(NamedFamily(FAMILY_PATH, k))


def sympy_char_poly(g):
    x = sp.Symbol("x")
    matrix = sp.Matrix(g.n, g.n, lambda i, j: 1 if g.has_edge(i, j) else 0)
    return tuple(int(c) for c in reversed(matrix.charpoly(x).all_coeffs()))


def numpy_radius(g):
    return float(np.linalg.eigvalsh(g.adjacency_matrix()).max())


def test_single_edge_radius():
    result = spectral_radius(build_graph(2, [(0, 1)]))
    assert result.rho == pytest.approx(1.0, abs=1e-12)
    assert result.perron == (1.0, 1.0)
    assert result.lo <= 1 <= result.hi


@pytest.mark.parametrize("g", [cycle(6), star(4)])
def test_radius_two_within_enclosure(g):
    result = spectral_radius(g)
    assert result.lo <= 2 <= result.hi
    assert result.width <= Fraction(1, 10**9)
    assert abs(result.rho - 2) < 1e-9


@pytest.mark.parametrize("k", range(3, 13))
def test_cycles_have_radius_two(k):
    result = spectral_radius(cycle(k))
    assert result.lo <= 2 <= result.hi


def test_narrow_enclosure_beyond_float_precision():
    g = path(5)
    result = spectral_radius(g, enclosure_width=Fraction(1, 10**20))
    assert result.width <= Fraction(1, 10**20)
    assert result.lo <= Fraction(math.isqrt(3 * 10**40), 10**20) + Fraction(1, 10**20)
    assert abs(result.rho - math.sqrt(3)) < 1e-12


def test_disconnected_radius_uses_best_component():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4)])
    result = spectral_radius(g)
    assert result.rho == pytest.approx(math.sqrt(2), abs=1e-9)
    assert result.component == (2, 3, 4)
    assert result.perron[0] == 0.0 and result.perron[1] == 0.0
    assert result.lo <= Fraction(141421356237, 10**11) + Fraction(1, 10**9)


def test_empty_graph():
    with pytest.raises(EmptyGraph):
        spectral_radius(build_graph(0, []))


def test_nonpositive_width():
    with pytest.raises(ParameterOutOfRange):
        spectral_radius(path(3), enclosure_width=0)


@pytest.mark.parametrize("m, root", [(4, 2), (9, 3), (16, 4)])
def test_star_with_rational_eigenvector_is_exact(m, root):
    result = spectral_radius(star(m))
    assert result.enclosure == (root, root)
    assert result.vector == (1,) + (Fraction(1, root),) * m


def test_irrational_eigenvector_keeps_positive_width():
    result = spectral_radius(star(5))
    assert 0 < result.width <= Fraction(1, 10**9)


def test_collatz_bounds_regular_graph():
    assert collatz_bounds(cycle(5), [1] * 5) == (2, 2)


def test_enclosures_contain_numpy_radius():
    for g in enumerate_connected(5):
        result = spectral_radius(g)
        radius = numpy_radius(g)
        assert float(result.lo) - 1e-12 <= radius <= float(result.hi) + 1e-12
        assert result.width <= Fraction(1, 10**9)


@pytest.mark.parametrize(
    "g, coefficients",
    [
        (build_graph(2, [(0, 1)]), (-1, 0, 1)),
        (star(4), (0, 0, 0, -4, 0, 1)),
        (cycle(4), (0, 0, -4, 0, 1)),
    ],
)
def test_char_poly_examples(g, coefficients):
    assert char_poly(g).coefficients == coefficients


def test_char_poly_matches_sympy():
    for g in enumerate_connected(4):
        assert char_poly(g).coefficients == sympy_char_poly(g)


@pytest.mark.parametrize("m", range(1, 10))
def test_star_radius_poly(m):
    assert char_poly(star(m)) == star_radius_poly(m)
    a, b = largest_root_interval(star_radius_poly(m), *spectral_radius(star(m)).enclosure)
    assert a < Fraction(math.isqrt(m * 10**30), 10**15) + Fraction(1, 10**12)
    assert float(b) == pytest.approx(math.sqrt(m), abs=1e-9)


def test_char_poly_size_cap():
    settings = SpectralSettings.from_dict({"exact_size_cap": 3})
    with pytest.raises(SizeCap):
        char_poly(path(4), settings)


def test_char_poly_str():
    assert str(char_poly(star(4))) == "x**5 - 4*x**3"


def test_sturm_counts_distinct_roots():
    chain = SturmChain.from_poly(char_poly(cycle(4)).as_sympy())
    assert chain.count(Fraction(-3), Fraction(3)) == 3
    assert chain.count(Fraction(1), Fraction(3)) == 1
    assert chain.count(Fraction(2), Fraction(3)) == 0


def test_largest_root_interval_star():
    poly = char_poly(star(4))
    result = spectral_radius(star(4))
    a, b = largest_root_interval(poly, result.lo, result.hi, width=Fraction(1, 10**12))
    assert a < 2 <= b
    assert b - a <= Fraction(1, 10**12)


def test_root_separation_bound_positive():
    assert 0 < root_separation_bound(char_poly(cycle(6))) < 1
    assert root_separation_bound(char_poly(build_graph(1, []))) == 1


def test_compare_star_with_cycle_is_equal():
    ordering = rho_compare(star(4), cycle(9))
    assert ordering.relation == EQUAL
    assert ordering.certificate == CERT_GCD


def test_compare_larger_star():
    ordering = rho_compare(star(5), star(4))
    assert ordering.relation == GREATER
    assert ordering.certificate == CERT_ENCLOSURES
    assert rho_compare(star(4), star(5)).relation == LESS


def test_compare_always_exact():
    ordering = rho_compare(star(5), star(4), exact_mode=EXACT_ALWAYS)
    assert ordering.relation == GREATER
    assert ordering.certificate == CERT_STURM


@pytest.mark.parametrize("g", [path(4), cycle(5), star(3)])
def test_compare_with_itself(g):
    ordering = rho_compare(g, g)
    assert ordering.relation == EQUAL
    assert ordering.certificate == CERT_GCD


def test_perron_positive_star():
    g = star(5)
    result = spectral_radius(g)
    assert check_perron_positive(g, result)
    assert result.perron[0] == 1.0
    for leaf in range(1, 6):
        assert result.perron[leaf] == pytest.approx(1 / math.sqrt(5), abs=1e-9)


def test_perron_positive_uses_configured_floor():
    g = star(5)
    result = spectral_radius(g)
    # 叶子分量约为 1/√5 ≈ 0.447
    assert check_perron_positive(g, result, SpectralSettings.from_dict({"positivity_floor": 0.4}))
    assert not check_perron_positive(g, result, SpectralSettings.from_dict({"positivity_floor": 0.5}))


def test_perron_positive_path():
    g = path(3)
    result = spectral_radius(g)
    assert check_perron_positive(g, result)
    assert result.perron == pytest.approx((1 / math.sqrt(2), 1.0, 1 / math.sqrt(2)), abs=1e-9)


def test_perron_positive_requires_connected():
    g = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(NotConnected):
        check_perron_positive(g, spectral_radius(g))


def test_cycle_eigenvalues():
    assert cycle_eigenvalues(3) == pytest.approx([2, -1, -1], abs=1e-12)
    assert cycle_eigenvalues(4) == pytest.approx([2, 0, -2, 0], abs=1e-12)
    with pytest.raises(ParameterOutOfRange):
        cycle_eigenvalues(2)


def test_cycle_eigenvalues_match_numpy():
    for k in range(3, 10):
        expected = sorted(np.linalg.eigvalsh(cycle(k).adjacency_matrix()))
        assert sorted(cycle_eigenvalues(k)) == pytest.approx(expected, abs=1e-9)


def test_cache_reuses_results():
    cache = SpectralCache()
    g = cycle(5)
    first = cached_spectral_radius(g, cache=cache)
    second = cached_spectral_radius(g, cache=cache)
    assert first is second
    assert cache.hits == 1 and cache.misses == 1


def test_cache_evicts_oldest():
    cache = SpectralCache(max_entries=2)
    for key in ("a", "b", "c"):
        cache.put(key, key)
    assert cache.get("a") is None
    assert cache.get("c") == "c"


@pytest.mark.slow
def test_enclosures_contain_exact_root():
    """n ≤ 6 的所有连通图：认证区间包含特征多项式的最大根"""
    for n in range(1, 7):
        for g in enumerate_connected(n):
            result = spectral_radius(g)
            chain = SturmChain.from_poly(char_poly(g).as_sympy())
            assert chain.count(result.hi, result.hi + n) == 0
            assert chain.count(result.lo - Fraction(1, 2**30), result.hi) >= 1
            assert abs(result.rho - numpy_radius(g)) < 1e-9
