"""Buchberger's algorithm over Q with elimination, colon and saturation tools.

Internally all basis computations run on primitive integer coefficient
dictionaries (content-stripped after every reduction step), so no Fraction
arithmetic happens in inner loops.  Final bases are converted back to monic
rational polynomials and fully interreduced, giving the unique reduced
Groebner basis for the chosen order.

The irrelevant-ideal saturation uses a fast path (saturate by one generic
linear form via the last-variable trick for graded reverse lex) whose result
is certified exactly before being returned; on certification failure it falls
back to intersecting the three single-variable saturations.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .polyring import (Bs3Error, Polynomial, PreconditionError, grevlex_key,
                       mono_div, mono_divides, mono_lcm, mono_mul)

DEFAULT_STEP_CAP = 10_000_000


class ResourceLimitError(Bs3Error):
    """Raised when a computation exceeds its reduction step cap."""


class _Budget:
    __slots__ = ("cap", "used")

    def __init__(self, cap):
        self.cap = cap if cap is not None else DEFAULT_STEP_CAP
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.cap:
            raise ResourceLimitError(
                "computation too large: exceeded %d reduction steps" % self.cap)


class MonomialOrder:
    """A monomial order given by a sort key; larger key = larger monomial.

    Three kinds: graded reverse lex, lex, and a block (elimination) order
    that compares the first elim_count exponents lexicographically and
    breaks ties by graded reverse lex on the remaining ones.
    """

    __slots__ = ("kind", "variable_count", "elim_count")

    def __init__(self, kind, variable_count, elim_count=0):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError("unknown order kind %r" % kind)
        self.kind = kind
        self.variable_count = variable_count
        self.elim_count = elim_count

    @classmethod
    def grevlex(cls, n=3):
        return cls("grevlex", n)

    @classmethod
    def lex(cls, n=3):
        return cls("lex", n)

    @classmethod
    def block(cls, elim_count, n):
        if not 0 < elim_count < n:
            raise ValueError("elim_count must be strictly between 0 and n")
        return cls("block", n, elim_count)

    def key(self, m):
        if self.kind == "grevlex":
            return grevlex_key(m)
        if self.kind == "lex":
            return tuple(m)
        k = self.elim_count
        return (tuple(m[:k]), grevlex_key(m[k:]))

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.variable_count == other.variable_count
                and self.elim_count == other.elim_count)

    def __hash__(self):
        return hash((self.kind, self.variable_count, self.elim_count))

    def __repr__(self):
        if self.kind == "block":
            return "MonomialOrder.block(%d, %d)" % (self.elim_count,
                                                    self.variable_count)
        return "MonomialOrder.%s(%d)" % (self.kind, self.variable_count)


class Ideal:
    """An ideal given by a finite list of generators.

    The zero ideal is represented by an empty generator tuple.
    """

    __slots__ = ("generators", "variable_count")

    def __init__(self, generators, variable_count=None):
        gens = tuple(g for g in generators if not g.is_zero())
        if variable_count is None:
            if not gens:
                raise ValueError("variable_count required for the zero ideal")
            variable_count = gens[0].variable_count
        for g in gens:
            if g.variable_count != variable_count:
                raise ValueError("mixed variable counts among generators")
        self.generators = gens
        self.variable_count = variable_count

    def is_zero(self):
        return not self.generators

    def __eq__(self, other):
        # literal generator comparison; use groebner bases for true equality
        return (isinstance(other, Ideal)
                and self.variable_count == other.variable_count
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.variable_count, self.generators))

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, fully interreduced,
    sorted by increasing leading monomial."""

    __slots__ = ("order", "elements", "_int_basis")

    def __init__(self, order, elements):
        self.order = order
        self.elements = tuple(elements)
        self._int_basis = [_to_int_poly(p, order) for p in self.elements]

    @property
    def leading_monomials(self):
        return tuple(b[0] for b in self._int_basis)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "GroebnerBasis(%s)" % ", ".join(str(g) for g in self.elements)


# -- integer polynomial plumbing --------------------------------------------


def _strip_content(d):
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return d
    if g > 1:
        return {m: v // g for m, v in d.items()}
    return d


def _to_int_poly(p, order):
    """Polynomial -> (lead mono, lead coeff, primitive int dict), lead > 0."""
    denom = 1
    for c in p.terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    d = {m: c.numerator * (denom // c.denominator) for m, c in p.terms.items()}
    d = _strip_content(d)
    lm = max(d, key=order.key)
    if d[lm] < 0:
        d = {m: -v for m, v in d.items()}
    return (lm, d[lm], d)


def _from_int_poly(d, n, monic_order=None):
    terms = {m: Fraction(v) for m, v in d.items()}
    p = Polynomial(terms, n)
    if monic_order is not None and terms:
        lm = max(terms, key=monic_order.key)
        p = p * (1 / terms[lm])
    return p


def _head_reduce(d, basis, order, budget):
    """Reduce the leading term of d against basis until it is irreducible
    or d vanishes.  basis entries are (lm, lc, dict) triples."""
    if not d:
        return d
    d = dict(d)
    key = order.key
    while d:
        lm = max(d, key=key)
        lc = d[lm]
        hit = None
        for b in basis:
            if mono_divides(b[0], lm):
                hit = b
                break
        if hit is None:
            return d
        budget.spend()
        blm, blc, bterms = hit
        g = gcd(lc, blc)
        a = blc // g
        c = lc // g
        if a < 0:
            a, c = -a, -c
        q = mono_div(lm, blm)
        if a != 1:
            d = {m: a * v for m, v in d.items()}
        for bm, bv in bterms.items():
            mm = mono_mul(bm, q)
            s = d.get(mm, 0) - c * bv
            if s == 0:
                d.pop(mm, None)
            else:
                d[mm] = s
        d = _strip_content(d)
    return d


def _s_poly_int(f, g, budget):
    """Integer S-polynomial of two (lm, lc, dict) triples."""
    budget.spend()
    lcm = mono_lcm(f[0], g[0])
    g0 = gcd(f[1], g[1])
    af = g[1] // g0
    ag = f[1] // g0
    qf = mono_div(lcm, f[0])
    qg = mono_div(lcm, g[0])
    out = {}
    for m, v in f[2].items():
        out[mono_mul(m, qf)] = af * v
    for m, v in g[2].items():
        mm = mono_mul(m, qg)
        s = out.get(mm, 0) - ag * v
        if s == 0:
            out.pop(mm, None)
        else:
            out[mm] = s
    return _strip_content(out)


def s_polynomial(f, g, order):
    """S-polynomial of two rational polynomials (used by consistency checks)."""
    bf = _to_int_poly(f, order)
    bg = _to_int_poly(g, order)
    d = _s_poly_int(bf, bg, _Budget(None))
    return _from_int_poly(d, f.variable_count)


def _nf_fraction(p, basis, order, budget):
    """Full normal form with rational arithmetic.  basis: list of monic
    Polynomials paired with their leading monomials."""
    key = order.key
    work = dict(p.terms)
    result = {}
    while work:
        lm = max(work, key=key)
        lc = work[lm]
        hit = None
        for blm, bp in basis:
            if mono_divides(blm, lm):
                hit = (blm, bp)
                break
        if hit is None:
            result[lm] = lc
            del work[lm]
            continue
        budget.spend()
        blm, bp = hit
        q = mono_div(lm, blm)
        for bm, bv in bp.terms.items():
            mm = mono_mul(bm, q)
            s = work.get(mm, Fraction(0)) - lc * bv
            if s == 0:
                work.pop(mm, None)
            else:
                work[mm] = s
    return Polynomial(result, p.variable_count)


# -- Buchberger --------------------------------------------------------------


def _buchberger_int(gens, order, budget):
    """Core loop; returns the final list of (lm, lc, dict) triples."""
    key = order.key
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        basis.append(_to_int_poly(g, order))
    if not basis:
        return []

    def lcm_of(i, j):
        return mono_lcm(basis[i][0], basis[j][0])

    heap = []

    def push_pairs(t):
        for i in range(t):
            lcm = mono_lcm(basis[i][0], basis[t][0])
            if lcm == mono_mul(basis[i][0], basis[t][0]):
                continue  # product criterion
            heapq.heappush(heap, (sum(lcm), key(lcm), i, t, lcm))

    for t in range(1, len(basis)):
        push_pairs(t)

    while heap:
        _, _, i, j, lcm = heapq.heappop(heap)
        # chain criterion: a third element strictly inside the lcm
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if mono_divides(basis[k][0], lcm):
                if lcm_of(i, k) != lcm and lcm_of(j, k) != lcm:
                    skip = True
                    break
        if skip:
            continue
        s = _s_poly_int(basis[i], basis[j], budget)
        r = _head_reduce(s, basis, order, budget)
        if r:
            lm = max(r, key=key)
            if r[lm] < 0:
                r = {m: -v for m, v in r.items()}
            basis.append((lm, r[lm], r))
            push_pairs(len(basis) - 1)
    return basis


def buchberger(ideal, order=None, step_cap=None):
    """Reduced Groebner basis of an ideal for the given order.

    Results are memoized: the function is pure and the pipeline asks for
    the same basis from several entry points.
    """
    if order is None:
        order = MonomialOrder.grevlex(ideal.variable_count)
    if order.variable_count != ideal.variable_count:
        raise ValueError("order arity does not match the ideal")
    return _buchberger_cached(ideal, order, step_cap)


@lru_cache(maxsize=64)
def _buchberger_cached(ideal, order, step_cap):
    budget = _Budget(step_cap)
    return _finish_basis(
        _buchberger_int(ideal.generators, order, budget),
        order, ideal.variable_count, budget)


def _finish_basis(raw, order, n, budget):
    """Minimalize, make monic, fully interreduce, sort.  Returns the
    unique reduced Groebner basis."""
    key = order.key
    raw = sorted(raw, key=lambda b: key(b[0]))
    kept = []
    for b in raw:
        if any(mono_divides(kb[0], b[0]) for kb in kept):
            continue
        kept.append(b)
    polys = [_from_int_poly(b[2], n, monic_order=order) for b in kept]
    lms = [b[0] for b in kept]
    for i in range(len(polys)):
        others = [(lms[j], polys[j]) for j in range(len(polys)) if j != i]
        polys[i] = _nf_fraction(polys[i], others, order, budget)
        lc = polys[i].terms[lms[i]]
        if lc != 1:
            polys[i] = polys[i] * (1 / lc)
    return GroebnerBasis(order, polys)


def normal_form(p, gb, step_cap=None):
    """Unique remainder of p modulo a reduced Groebner basis."""
    pairs = [(b[0], e) for b, e in zip(gb._int_basis, gb.elements)]
    return _nf_fraction(p, pairs, gb.order, _Budget(step_cap))


def _member(p, gb, budget):
    """Ideal membership test against a Groebner basis, integer arithmetic."""
    if p.is_zero():
        return True
    _, _, d = _to_int_poly(p, gb.order)
    return not _head_reduce(d, gb._int_basis, gb.order, budget)


# -- elimination and derived operations --------------------------------------


def _project_poly(p, drop):
    out = {}
    for m, c in p.terms.items():
        out[m[drop:]] = c
    return Polynomial(out, p.variable_count - drop)


def eliminate(ideal, drop_count, step_cap=None):
    """Intersect with the subring omitting the first drop_count variables.

    The result's generators are the reduced graded-reverse-lex Groebner
    basis of the elimination ideal, viewed in the smaller ring.
    """
    n = ideal.variable_count
    if not 0 < drop_count < n:
        raise ValueError("drop_count must be strictly between 0 and n")
    order = MonomialOrder.block(drop_count, n)
    gb = buchberger(ideal, order, step_cap)
    kept = []
    for e in gb.elements:
        if all(all(v == 0 for v in m[:drop_count]) for m in e.terms):
            kept.append(_project_poly(e, drop_count))
    return Ideal(kept, n - drop_count)


def _lift_poly(p, prepend=1):
    out = {}
    for m, c in p.terms.items():
        out[(0,) * prepend + m] = c
    return Polynomial(out, p.variable_count + prepend)


def saturate_by_poly(ideal, g, step_cap=None):
    """I : g^infinity via the extra-variable localization trick:
    adjoin t, add t*g - 1, eliminate t."""
    if g.is_zero():
        raise PreconditionError("cannot saturate by the zero polynomial")
    n = ideal.variable_count
    if ideal.is_zero():
        return Ideal((), n)
    lifted = [_lift_poly(f) for f in ideal.generators]
    t = Polynomial.variable(0, n + 1)
    lifted.append(t * _lift_poly(g) - 1)
    return eliminate(Ideal(lifted, n + 1), 1, step_cap)


def ideal_intersection(I, J, step_cap=None):
    """I intersect J via t*I + (1-t)*J and elimination of t."""
    if I.variable_count != J.variable_count:
        raise ValueError("mixed variable counts")
    n = I.variable_count
    if I.is_zero() or J.is_zero():
        return Ideal((), n)
    t = Polynomial.variable(0, n + 1)
    one_minus_t = Polynomial.constant(1, n + 1) - t
    gens = [t * _lift_poly(f) for f in I.generators]
    gens += [one_minus_t * _lift_poly(g) for g in J.generators]
    return eliminate(Ideal(gens, n + 1), 1, step_cap)


# -- saturation with respect to the irrelevant maximal ideal -----------------


def _is_standard_homogeneous(ideal):
    for g in ideal.generators:
        degs = {sum(m) for m in g.terms}
        if len(degs) > 1:
            return False
    return True


def _substitute_last(p, c1, c2):
    """Replace z by z + c1*x + c2*y (three-variable polynomials)."""
    if c1 == 0 and c2 == 0:
        return p
    n = p.variable_count
    x = Polynomial.variable(0, n)
    y = Polynomial.variable(1, n)
    z = Polynomial.variable(2, n)
    newz = z + x * c1 + y * c2
    powers = {0: Polynomial.constant(1, n)}
    maxe = max((m[2] for m in p.terms), default=0)
    for e in range(1, maxe + 1):
        powers[e] = powers[e - 1] * newz
    out = Polynomial.zero(n)
    for m, c in p.terms.items():
        mono = Polynomial({(m[0], m[1], 0): c}, n)
        out = out + mono * powers[m[2]]
    return out


def _divide_out_z(p):
    """Divide by the largest power of the last variable dividing p."""
    k = min(m[2] for m in p.terms)
    if k == 0:
        return p
    return Polynomial({(m[0], m[1], m[2] - k): c for m, c in p.terms.items()},
                      p.variable_count)


def _certify_saturation(candidates, gb_I, budget, kcap):
    """Check every candidate is sent into the ideal by a power of each
    variable; by pigeonhole this certifies membership in I : m^infinity."""
    n = 3
    for g in candidates:
        for v in range(n):
            xv = Polynomial.variable(v, n)
            p = g
            ok = False
            for _ in range(kcap):
                if _member(p, gb_I, budget):
                    ok = True
                    break
                p = p * xv
            if not ok and not _member(p, gb_I, budget):
                return False
    return True


_GENERIC_SHIFTS = ((0, 0), (1, 2), (2, 3), (3, 5), (5, 8))


def saturate_irrelevant(ideal, step_cap=None):
    """I : (x, y, z)^infinity, equal to the intersection of the three
    single-variable saturations I : x_i^infinity.  Memoized like buchberger."""
    n = ideal.variable_count
    if n != 3:
        raise PreconditionError("irrelevant-ideal saturation needs 3 variables")
    if ideal.is_zero():
        return Ideal((), n)
    return _saturate_cached(ideal, step_cap)


@lru_cache(maxsize=32)
def _saturate_cached(ideal, step_cap):
    n = ideal.variable_count
    budget = _Budget(step_cap)
    if _is_standard_homogeneous(ideal):
        result = _saturate_fast(ideal, budget)
        if result is not None:
            return result
    # reference route
    parts = [saturate_by_poly(ideal, Polynomial.variable(v, n), step_cap)
             for v in range(n)]
    meet = ideal_intersection(parts[0], parts[1], step_cap)
    meet = ideal_intersection(meet, parts[2], step_cap)
    gb = buchberger(meet, MonomialOrder.grevlex(n), step_cap)
    return Ideal(gb.elements, n)


def _saturate_fast(ideal, budget):
    """Saturate by a generic linear form using the grevlex last-variable
    division trick, then certify the answer exactly.  Returns None when no
    candidate form passes certification."""
    n = 3
    order = MonomialOrder.grevlex(n)
    for c1, c2 in _GENERIC_SHIFTS:
        moved = [_substitute_last(g, -c1, -c2) for g in ideal.generators]
        gb_I = _finish_basis(_buchberger_int(moved, order, budget), order, n,
                             budget)
        divided = [_divide_out_z(e) for e in gb_I.elements]
        gb_J = _finish_basis(_buchberger_int(divided, order, budget), order, n,
                             budget)
        maxdeg = max((e.total_degree() for e in gb_I.elements), default=0)
        kcap = 3 * maxdeg + 3
        if _certify_saturation(gb_J.elements, gb_I, budget, kcap):
            back = [_substitute_last(e, c1, c2) for e in gb_J.elements]
            gb = _finish_basis(_buchberger_int(back, order, budget), order, n,
                               budget)
            return Ideal(gb.elements, n)
    return None
