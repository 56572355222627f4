"""Root-set formulas, symmetry checks, and the homogeneous taxonomy."""

from fractions import Fraction

import pytest

from bs3.bsroots import (RootSet, blf_roots, check_partial_symmetry,
                         homogeneous_taxonomy, new_roots,
                         reconstruct_zero_set, roots_isolated, sigma,
                         small_roots, tlct_holds, xi_set)
from bs3.milnor import milnor_profile
from bs3.polyring import PreconditionError, WeightSystem, parse_polynomial

W1 = WeightSystem((1, 1, 1))


def profile(text, weights=(1, 1, 1)):
    return milnor_profile(parse_polynomial(text), WeightSystem(weights))


def Q(*pairs):
    return [Fraction(p, q) for p, q in pairs]


def test_rootset_is_sorted_and_deduplicated():
    s = RootSet([Fraction(-1), Fraction(-2), Fraction(-1), Fraction(-1, 2)])
    assert list(s) == Q((-2, 1), (-1, 1), (-1, 2))
    assert Fraction(-2) in s
    assert repr(s) == "{-2, -1, -1/2}"


def test_rootset_window_half_open_at_the_left():
    s = RootSet(Q((-3, 1), (-5, 2), (-2, 1), (-3, 2)))
    assert list(s.window(-3, -2)) == Q((-5, 2), (-2, 1))


def test_sigma_is_an_involution():
    for r in Q((-16, 9), (-1, 1), (0, 1), (-5, 3)):
        assert sigma(sigma(r)) == r
    assert sigma(Fraction(-1)) == -1


def test_roots_isolated_quadric_and_cubic():
    assert roots_isolated(profile("x^2+y^2+z^2")) == Q((-3, 2), (-1, 1))
    assert roots_isolated(profile("x^3+y^3+z^3")) == \
        Q((-2, 1), (-5, 3), (-4, 3), (-1, 1))


def test_roots_isolated_rejects_nonisolated():
    with pytest.raises(PreconditionError):
        roots_isolated(profile("x^2+y^3", (3, 2, 1)))


def test_new_roots_fermat_cubic():
    assert new_roots(profile("x^3+y^3+z^3")) == \
        Q((-2, 1), (-5, 3), (-4, 3), (-1, 1))


def test_new_roots_empty_for_saturated_jacobian():
    assert len(new_roots(profile("x*y*z"))) == 0


def test_blf_roots_fermat_cubic():
    assert blf_roots(profile("x^3+y^3+z^3")) == \
        Q((0, 1), (1, 3), (2, 3), (1, 1))


def test_new_roots_are_blf_roots_shifted_by_two():
    for text, w in [("x^3+y^3+z^3", (1, 1, 1)),
                    ("x^2*y*z + x*y^2*z + x*y*z^2", (1, 1, 1)),
                    ("x^2+y^3+z^5", (15, 10, 6))]:
        prof = profile(text, w)
        assert new_roots(prof) == RootSet(r - 2 for r in blf_roots(prof))


def test_xi_set_fermat_cubic():
    report = xi_set(profile("x^3+y^3+z^3"))
    assert report.xi_set == Q((-2, 1), (-5, 3), (-4, 3), (-1, 1),
                              (-2, 3), (-1, 3), (0, 1))


def test_partial_symmetry_examples():
    empty = RootSet()
    assert len(check_partial_symmetry(RootSet(Q((-1, 1))),
                                      empty).asymmetric_outside_xi) == 0
    ok = check_partial_symmetry(RootSet(Q((-3, 4), (-1, 1), (-5, 4))), empty)
    assert len(ok.asymmetric_outside_xi) == 0
    assert (Fraction(-5, 4), Fraction(-3, 4)) in ok.sigma_pairs
    bad = check_partial_symmetry(RootSet(Q((-1, 2))), empty)
    assert bad.asymmetric_outside_xi == Q((-1, 2))


def test_small_roots():
    assert small_roots(profile("x^3+y^3+z^3")) == Q((-2, 1))
    assert len(small_roots(profile("x^2+y^2+z^2"))) == 0


def test_small_roots_equal_new_roots_in_window():
    prof = profile("x^4+y^4+z^4")
    assert small_roots(prof) == new_roots(prof).window(-3, -2)


def test_tlct():
    prof = profile("x^3+y^3+z^3")
    assert tlct_holds(prof, Fraction(0)) is False
    assert tlct_holds(prof, Fraction(-1, 3)) is True
    with pytest.raises(PreconditionError):
        tlct_holds(prof, Fraction(1))


def test_tlct_matches_small_roots_on_unit_window():
    prof = profile("x^4+y^4+z^4")
    small = small_roots(prof)
    for num in range(-9, 1):
        lam = Fraction(num, 10)
        assert tlct_holds(prof, lam) == (lam - 2 not in small)


def test_taxonomy_fermat_cubic():
    tax = homogeneous_taxonomy(profile("x^3+y^3+z^3"),
                               RootSet([Fraction(-1)]))
    assert tax.tau == 0
    assert tax.upsilon == Q((-2, 1), (-5, 3), (-4, 3), (-1, 1))
    assert tax.reconstruction == Q((-2, 1), (-5, 3), (-4, 3), (-1, 1))
    assert tax.determined_by["degree"] == 3


def test_taxonomy_requires_sections():
    with pytest.raises(PreconditionError):
        homogeneous_taxonomy(profile("x*y*z"), RootSet())


def test_taxonomy_requires_standard_weights():
    with pytest.raises(PreconditionError):
        homogeneous_taxonomy(profile("x^2+y^3+z^5", (15, 10, 6)), RootSet())


def test_reconstruction_without_sections_uses_interval_only():
    interval = RootSet(Q((-1, 1), (-5, 6), (-2, 3), (-1, 2)))
    upsilon, small, full = reconstruct_zero_set(None, 6, interval)
    assert len(upsilon) == 0
    assert len(small) == 0
    assert full == Q((-3, 2), (-4, 3), (-7, 6), (-1, 1),
                     (-5, 6), (-2, 3), (-1, 2))


def test_reconstruction_rejects_roots_outside_interval():
    with pytest.raises(PreconditionError):
        reconstruct_zero_set(0, 3, RootSet([Fraction(-3, 2)]))
