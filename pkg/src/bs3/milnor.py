"""Jacobian ideals, Milnor algebra degree data, and logarithmic derivations.

The central object is the MilnorProfile of a quasi-homogeneous polynomial:
its Jacobian ideal, the degree data of the finite-length part of the Milnor
algebra (the local cohomology H0_m of R/(partial f)), an isolated-singularity
flag, and, in the isolated case, the full degree data of the Milnor algebra.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from . import linalg
from .graded import DegreeData, h0_degree_data, weighted_monomials
from .groebner import Ideal, MonomialOrder, buchberger
from .polyring import (Bs3Error, PreconditionError, mono_divides, mono_mul,
                       partial_derivative, wdeg)

INFINITE = "infinite"


class MilnorProfile:
    """Everything the root formulas need to know about one polynomial."""

    __slots__ = ("f", "weights", "wdeg_f", "jacobian", "h0", "is_isolated",
                 "milnor_algebra_degrees")

    def __init__(self, f, weights, wdeg_f, jacobian, h0, is_isolated,
                 milnor_algebra_degrees):
        self.f = f
        self.weights = weights
        self.wdeg_f = wdeg_f
        self.jacobian = jacobian
        self.h0 = h0
        self.is_isolated = is_isolated
        self.milnor_algebra_degrees = milnor_algebra_degrees

    @property
    def weight_sum(self):
        return self.weights.weight_sum

    def __repr__(self):
        return ("MilnorProfile(f=%s, wdeg=%s, isolated=%s, h0=%r)"
                % (self.f, self.wdeg_f, self.is_isolated, self.h0))


def jacobian_ideal(f):
    """The ideal of the three partial derivatives; zero partials dropped."""
    if f.is_zero() or f.is_constant():
        raise PreconditionError("constant polynomial has no Jacobian ideal")
    partials = [partial_derivative(f, i) for i in (1, 2, 3)]
    return Ideal([p for p in partials if not p.is_zero()], f.variable_count)


def _has_pure_powers(lead_monomials, n=3):
    """Zero-dimensionality test: a pure power of every variable among the
    leading monomials."""
    for i in range(n):
        if not any(m[i] > 0 and all(m[j] == 0 for j in range(n) if j != i)
                   for m in lead_monomials):
            return False
    return True


def _artinian_degree_data(gb, w, n=3):
    """Degree data of R/I for Artinian I, via the finite staircase."""
    lms = gb.leading_monomials
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lms
                if m[i] > 0 and all(m[j] == 0 for j in range(n) if j != i)]
        bounds.append(min(pure))
    entries = {}
    for e in product(*(range(b) for b in bounds)):
        if any(mono_divides(lm, e) for lm in lms):
            continue
        q = w.mono_wdeg(e)
        entries[q] = entries.get(q, 0) + 1
    return DegreeData(entries)


def milnor_profile(f, w, step_cap=None):
    """Assemble the degree data controlling the root formulas.

    Reducedness and local quasi-homogeneity of f are the caller's
    responsibility; quasi-homogeneity itself is checked here.
    """
    d = wdeg(f, w)
    if d is None:
        raise PreconditionError("polynomial is not quasi-homogeneous for "
                                "weights %s" % (w.weights,))
    if d <= 0:
        raise PreconditionError("constant polynomial has no Milnor profile")
    jac = jacobian_ideal(f)
    gb = buchberger(jac, MonomialOrder.grevlex(f.variable_count), step_cap)
    isolated = _has_pure_powers(gb.leading_monomials, f.variable_count)
    h0 = h0_degree_data(jac, w, step_cap)
    if isolated:
        degrees = _artinian_degree_data(gb, w, f.variable_count)
        if degrees != h0:
            raise Bs3Error("internal inconsistency: Artinian degree data "
                           "disagrees with the saturation route")
    else:
        degrees = INFINITE
    return MilnorProfile(f, w, d, jac, h0, isolated, degrees)


def der_log0_graded_dimension(f, w, k, step_cap=None):
    """dim of the degree-k piece of the derivations annihilating f:
    kernel of (a1,a2,a3) -> sum a_i * (d_i f) with a_i in R_{k+w_i}.

    The image is exactly the degree k+wdeg(f) piece of the Jacobian ideal,
    so the kernel dimension is sum_i dim R_{k+w_i} minus that piece.
    """
    d = wdeg(f, w)
    if d is None:
        raise PreconditionError("polynomial is not quasi-homogeneous for "
                                "weights %s" % (w.weights,))
    k = Fraction(k)
    n = f.variable_count
    domain = sum(len(weighted_monomials(w, k + wi, n)) for wi in w.weights)
    if domain == 0:
        return 0
    jac = jacobian_ideal(f)
    gb = buchberger(jac, MonomialOrder.grevlex(n), step_cap)
    target = len(weighted_monomials(w, k + d, n))
    quotient = sum(1 for m in weighted_monomials(w, k + d, n)
                   if not any(mono_divides(lm, m)
                              for lm in gb.leading_monomials))
    image = target - quotient
    return domain - image


def der_log0_kernel_dimension_by_rank(f, w, k):
    """Same dimension via an explicit kernel matrix; independent of any
    Groebner basis, kept as a cross-check."""
    d = wdeg(f, w)
    if d is None:
        raise PreconditionError("polynomial is not quasi-homogeneous")
    k = Fraction(k)
    n = f.variable_count
    partials = [partial_derivative(f, i + 1) for i in range(n)]
    target = weighted_monomials(w, k + d, n)
    index = {m: i for i, m in enumerate(target)}
    columns = []
    for i, wi in enumerate(w.weights):
        for m in weighted_monomials(w, k + wi, n):
            col = [0] * len(target)
            for pm, c in partials[i].terms.items():
                col[index[mono_mul(m, pm)]] = c
            columns.append(col)
    if not columns:
        return 0
    return len(columns) - linalg.rank(columns)
