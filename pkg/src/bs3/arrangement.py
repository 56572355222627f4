"""Central essential indecomposable line arrangement pipeline.

Validates arrangements of linear forms in three variables, computes the
intersection lattice, the combinatorial root set, formality, and the six
equivalent conditions deciding whether the single candidate non-combinatorial
root (-2d+2)/d actually occurs, then assembles the full Bernstein-Sato zero
set.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .bsroots import RootSet
from .graded import (STANDARD, graded_dimension, h0_degree_data,
                     regularity_report)
from .groebner import MonomialOrder, buchberger
from .milnor import der_log0_graded_dimension, jacobian_ideal, milnor_profile
from .polyring import (Bs3Error, Polynomial, PreconditionError, parse_polynomial)


class LinearForm:
    """A nonzero linear form ax+by+cz, normalized so its first nonzero
    coefficient is 1."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if len(coeffs) != 3:
            raise ValueError("a linear form needs exactly 3 coefficients")
        lead = next((c for c in coeffs if c != 0), None)
        if lead is None:
            raise PreconditionError("zero linear form")
        self.coefficients = tuple(c / lead for c in coeffs)

    @classmethod
    def parse(cls, text):
        p = parse_polynomial(text)
        coeffs = [Fraction(0)] * 3
        for m, c in p.terms.items():
            if sum(m) != 1:
                raise PreconditionError(
                    "%r is not a homogeneous linear form" % text)
            coeffs[m.index(1)] = c
        return cls(coeffs)

    def polynomial(self):
        terms = {}
        for i, c in enumerate(self.coefficients):
            if c != 0:
                e = [0, 0, 0]
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(terms, 3)

    def evaluate(self, point):
        return sum((c * Fraction(v) for c, v in zip(self.coefficients, point)),
                   Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, LinearForm)
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        return str(self.polynomial())

    def __repr__(self):
        return "LinearForm(%s)" % self


class Arrangement:
    """A validated arrangement; use validate() to construct one."""

    __slots__ = ("forms",)

    def __init__(self, forms):
        self.forms = tuple(forms)

    @property
    def degree(self):
        return len(self.forms)

    def defining_polynomial(self):
        f = Polynomial.constant(1, 3)
        for form in self.forms:
            f = f * form.polynomial()
        return f

    def __repr__(self):
        return "Arrangement(%s)" % ", ".join(str(f) for f in self.forms)


class SingularPoint:
    __slots__ = ("point", "multiplicity")

    def __init__(self, point, multiplicity):
        self.point = point
        self.multiplicity = multiplicity

    def __repr__(self):
        return "SingularPoint(%s, m=%d)" % (list(self.point),
                                            self.multiplicity)


class ConditionReport:
    __slots__ = ("cond_b", "cond_c", "cond_d", "cond_e", "cond_f", "cond_g",
                 "witness_dims", "consistent")

    def __init__(self, cond_b, cond_c, cond_d, cond_e, cond_f, cond_g,
                 witness_dims):
        self.cond_b = cond_b
        self.cond_c = cond_c
        self.cond_d = cond_d
        self.cond_e = cond_e
        self.cond_f = cond_f
        self.cond_g = cond_g
        self.witness_dims = witness_dims
        flags = (cond_b, cond_c, cond_d, cond_e, cond_f, cond_g)
        self.consistent = len(set(flags)) == 1

    def flags(self):
        return {"b": self.cond_b, "c": self.cond_c, "d": self.cond_d,
                "e": self.cond_e, "f": self.cond_f, "g": self.cond_g}

    def __repr__(self):
        return "ConditionReport(%s, consistent=%s)" % (self.flags(),
                                                       self.consistent)


class ArrangementRootReport:
    __slots__ = ("comb_roots", "non_comb_root", "non_comb_present",
                 "full_zero_set", "conditions", "singular_points")

    def __init__(self, comb_roots, non_comb_root, non_comb_present,
                 full_zero_set, conditions, singular_points):
        self.comb_roots = comb_roots
        self.non_comb_root = non_comb_root
        self.non_comb_present = non_comb_present
        self.full_zero_set = full_zero_set
        self.conditions = conditions
        self.singular_points = singular_points

    def __repr__(self):
        return ("ArrangementRootReport(full=%r, non_comb_present=%s)"
                % (self.full_zero_set, self.non_comb_present))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _normal_rank(forms):
    return linalg.rank([list(f.coefficients) for f in forms])


def is_indecomposable(forms):
    """No partition of the normals into two blocks with rank sum 3."""
    d = len(forms)
    normals = [list(f.coefficients) for f in forms]
    for mask in range(1, 1 << (d - 1)):
        left = [normals[i] for i in range(d) if mask >> i & 1]
        right = [normals[i] for i in range(d) if not mask >> i & 1]
        if linalg.rank(left) + linalg.rank(right) == 3:
            return False
    return True


def validate(forms):
    """Check reduced + central + essential + indecomposable; raise otherwise."""
    forms = [f if isinstance(f, LinearForm) else LinearForm.parse(f)
             for f in forms]
    if len(forms) < 3:
        raise PreconditionError("an arrangement needs at least 3 forms")
    seen = {}
    for f in forms:
        if f.coefficients in seen:
            raise PreconditionError("not reduced: duplicate form %s" % f)
        seen[f.coefficients] = f
    if _normal_rank(forms) < 3:
        raise PreconditionError("not essential: normals span rank %d < 3"
                                % _normal_rank(forms))
    if not is_indecomposable(forms):
        raise PreconditionError("decomposable: the forms split into blocks "
                                "using disjoint coordinates")
    return Arrangement(forms)


def _canonical_point(p):
    lead = next((c for c in p if c != 0), None)
    if lead is None:
        return None
    return tuple(c / lead for c in p)


def singular_points(arr):
    """All pairwise intersection points in the projective plane with their
    line counts, canonically scaled and deduplicated."""
    forms = arr.forms
    found = {}
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            pt = _canonical_point(_cross(forms[i].coefficients,
                                         forms[j].coefficients))
            if pt is None:
                # parallel normals cannot happen in a reduced arrangement
                raise Bs3Error("internal: duplicate forms slipped through")
            found[pt] = None
    points = []
    for pt in sorted(found):
        m = sum(1 for f in forms if f.evaluate(pt) == 0)
        points.append(SingularPoint(pt, m))
    return points


def comb_roots(arr):
    """CombRoots: -k/d for 3 <= k <= 2d-3 together with -i/m_z for
    2 <= i <= 2m_z - 2 at every singular point."""
    d = arr.degree
    roots = [Fraction(-k, d) for k in range(3, 2 * d - 2)]
    for sp in singular_points(arr):
        m = sp.multiplicity
        roots.extend(Fraction(-i, m) for i in range(2, 2 * m - 1))
    return RootSet(roots)


def relation_space_dimension(arr):
    """Kernel dimension of the 3 x d matrix of normal columns (= d - 3)."""
    rows = [[f.coefficients[i] for f in arr.forms] for i in range(3)]
    return linalg.kernel_dimension(rows)


def _length3_relations(arr):
    """One relation vector per concurrent triple, coefficients from the
    adjugate of the 3 x 3 normal matrix."""
    forms = arr.forms
    d = len(forms)
    by_point = {}
    for i in range(d):
        for j in range(i + 1, d):
            pt = _canonical_point(_cross(forms[i].coefficients,
                                         forms[j].coefficients))
            by_point.setdefault(pt, set()).update((i, j))
    relations = []
    for pt in sorted(p for p, lines in by_point.items() if len(lines) >= 3):
        lines = sorted(by_point[pt])
        for a in range(len(lines)):
            for b in range(a + 1, len(lines)):
                for c in range(b + 1, len(lines)):
                    idx = (lines[a], lines[b], lines[c])
                    n0, n1, n2 = (forms[i].coefficients for i in idx)
                    # (w0.u) n0 + (w1.u) n1 + (w2.u) n2 = det(n0,n1,n2) u = 0
                    # for every u, so any nonzero coordinate slice works
                    w0 = _cross(n1, n2)
                    w1 = _cross(n2, n0)
                    w2 = _cross(n0, n1)
                    rel = None
                    for k in range(3):
                        cand = (w0[k], w1[k], w2[k])
                        if any(v != 0 for v in cand):
                            rel = cand
                            break
                    if rel is None:
                        raise Bs3Error("internal: concurrent triple without "
                                       "a dependency")
                    vec = [Fraction(0)] * d
                    for pos, v in zip(idx, rel):
                        vec[pos] = v
                    relations.append(vec)
    return relations


def is_formal(arr):
    """Formal iff length-3 relations span the whole relation space."""
    target = relation_space_dimension(arr)
    rels = _length3_relations(arr)
    return linalg.span_dimension(rels) == target


def condition_report(arr, step_cap=None):
    """Evaluate the six equivalent conditions for the presence of the
    non-combinatorial root, with every dimension witness recorded."""
    d = arr.degree
    f = arr.defining_polynomial()
    jac = jacobian_ideal(f)
    gb = buchberger(jac, MonomialOrder.grevlex(3), step_cap)
    h0 = h0_degree_data(jac, STANDARD, step_cap)
    reg = regularity_report(jac, step_cap)
    if reg.sheaf_dim_e is None:
        raise PreconditionError("no stabilized section dimension; "
                                "arrangement pipeline requires one")
    e = reg.sheaf_dim_e
    h0_d1 = h0.dimension(d - 1)
    h0_2d5 = h0.dimension(2 * d - 5)
    milnor_d1 = graded_dimension(gb, STANDARD, d - 1)
    milnor_2d5 = graded_dimension(gb, STANDARD, 2 * d - 5)
    der0 = der_log0_graded_dimension(f, STANDARD, d - 2, step_cap)
    binom = (d + 1) * d // 2 - 3
    # global sections of the twisted Milnor sheaf at twist d-1, computed
    # through the exact sequence with H1 realized by degree-(d-2) derivations
    sections_d1 = milnor_d1 - h0_d1 + der0
    cond_b = h0_d1 > 0
    cond_c = h0_2d5 > 0
    cond_d = reg.regularity == 2 * d - 5
    cond_e = e < milnor_2d5
    cond_f = sections_d1 < der0 + binom
    cond_g = not is_formal(arr)
    witness = {
        "sheaf_dim_e": e,
        "milnor_dim_2d_minus_5": milnor_2d5,
        "milnor_dim_d_minus_1": milnor_d1,
        "h0_dim_d_minus_1": h0_d1,
        "h0_dim_2d_minus_5": h0_2d5,
        "der_log0_dim_d_minus_2": der0,
        "binom_d_plus_1_2_minus_3": binom,
        "sections_twist_d_minus_1": sections_d1,
        "sections_bound_twist_d_minus_1": der0 + binom,
        "regularity": reg.regularity,
        "regularity_target": 2 * d - 5,
    }
    return ConditionReport(cond_b, cond_c, cond_d, cond_e, cond_f, cond_g,
                           witness)


def full_root_report(arr, step_cap=None):
    """CombRoots plus the non-combinatorial root exactly when the six
    conditions hold; raises if the six conditions disagree."""
    conditions = condition_report(arr, step_cap)
    if not conditions.consistent:
        raise Bs3Error("the six equivalent conditions disagree; this "
                       "signals an implementation bug, not a property of "
                       "the input: %r" % conditions)
    d = arr.degree
    comb = comb_roots(arr)
    non_comb = Fraction(-2 * d + 2, d)
    present = conditions.cond_b
    full = comb.union([non_comb]) if present else comb
    if any(not (-3 < r < 0) for r in full):
        raise Bs3Error("root outside (-3, 0); implementation bug")
    return ArrangementRootReport(comb, non_comb, present, full, conditions,
                                 singular_points(arr))


def arrangement_profile(arr, step_cap=None):
    """MilnorProfile of the defining polynomial under the standard grading."""
    return milnor_profile(arr.defining_polynomial(), STANDARD, step_cap)
