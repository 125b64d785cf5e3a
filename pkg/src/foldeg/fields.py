"""Polynomial vector fields on P^3, antisymmetric forms, and contraction.

Phi_d is the space of degree-d polynomial vector fields sum c*mu*d/dx_j
with identically zero divergence; it has dimension (d+4)(d+2)(d+1)/2 and
models the global vector fields of the plane-field geometry twisted so
that coefficients are degree-d forms.  A torus with coordinate weights
w_1..w_4 gives the monomial field mu*d/dx_j the weight wt(mu) - w_j, and
divergence preserves that grading, so the basis is assembled one weight
block at a time with exact kernels.

An antisymmetric form is written in the Koszul coordinates kappa_ij
(kappa_12 has components (x_2, -x_1, 0, 0), etc.); contraction with a
field multiplies components and sums, landing in degree d+1.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from .exact import (
    DEFAULT_WEIGHTS,
    WeightMultiset,
    WeightSystem,
    as_weight_system,
    monomial_string,
    monomial_weight,
    monomials_of_degree,
    scalar_to_string,
)
from .linalg import fraction_rows_to_int, kernel_basis, rank

P5_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def complementary_pair(pair):
    """The other two indices, e.g. (1, 3) -> (2, 4)."""
    i, j = pair
    return tuple(k for k in (1, 2, 3, 4) if k != i and k != j)


def phi_dimension(d):
    """dim Phi_d = (d+4)(d+2)(d+1)/2."""
    return (d + 4) * (d + 2) * (d + 1) // 2


def contact_kernel_dimension(d):
    """Tangency-kernel dimension (d+4)(d+2)d/3 at any contact form."""
    return (d + 4) * (d + 2) * d // 3


MonomialField = namedtuple("MonomialField", "coefficient monomial direction")
MonomialField.__doc__ = (
    "One term c * mu * d/dx_j of a polynomial field "
    "(direction j is 1-based)."
)


def field_weight(term, weights):
    """Torus weight wt(mu) - w_j of a monomial field."""
    w = as_weight_system(weights)
    return monomial_weight(term.monomial, w) - w.weight(term.direction)


def _lower(mono, j):
    out = list(mono)
    out[j - 1] -= 1
    return tuple(out)


def _bump(mono, var):
    out = list(mono)
    out[var - 1] += 1
    return tuple(out)


def _terms_of(field):
    terms = field.terms if isinstance(field, BasisField) else tuple(field)
    if len({sum(t.monomial) for t in terms}) > 1:
        raise ValueError("field mixes monomial degrees")
    return terms


def divergence(field):
    """Divergence as {monomial: coefficient}; zero coefficients dropped.

    >>> divergence([MonomialField(Fraction(1), (2, 0, 0, 0), 1)])
    {(1, 0, 0, 0): Fraction(2, 1)}
    """
    out = {}
    for coeff, mono, j in _terms_of(field):
        e = mono[j - 1]
        if e:
            m = _lower(mono, j)
            out[m] = out.get(m, 0) + coeff * e
    return {m: v for m, v in out.items() if v}


class AntisymmetricForm:
    """A nonzero form sum alpha_ij * kappa_ij in the Koszul coordinates.

    Contact forms are the ones with nonzero Pfaffian
    alpha_12*alpha_34 - alpha_13*alpha_24 + alpha_14*alpha_23.
    """

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        """alpha: mapping {pair: coefficient} or a 6-sequence in the
        canonical pair order (1,2),(1,3),(1,4),(2,3),(2,4),(3,4)."""
        if isinstance(alpha, dict):
            extra = set(alpha) - set(P5_PAIRS)
            if extra:
                raise ValueError("unknown pairs %r" % (sorted(extra),))
            coeffs = tuple(Fraction(alpha.get(p, 0)) for p in P5_PAIRS)
        else:
            coeffs = tuple(Fraction(a) for a in alpha)
            if len(coeffs) != 6:
                raise ValueError("need 6 coefficients")
        if not any(coeffs):
            raise ValueError("the zero form is not allowed")
        self.alpha = coeffs

    @classmethod
    def koszul(cls, pair):
        """The basis form kappa_ij itself."""
        return cls({tuple(pair): 1})

    def coefficient(self, pair):
        return self.alpha[P5_PAIRS.index(tuple(pair))]

    def pfaffian(self):
        a12, a13, a14, a23, a24, a34 = self.alpha
        return a12 * a34 - a13 * a24 + a14 * a23

    def is_contact(self):
        return self.pfaffian() != 0

    def linear_forms(self):
        """Components (a_1..a_4), each {variable: coefficient}, where
        contraction with a field (p_1..p_4) is sum a_i * p_i and
        kappa_ij contributes x_j to a_i and -x_i to a_j."""
        a = ({}, {}, {}, {})
        for (i, j), c in zip(P5_PAIRS, self.alpha):
            if c:
                a[i - 1][j] = a[i - 1].get(j, 0) + c
                a[j - 1][i] = a[j - 1].get(i, 0) - c
        return a

    def __eq__(self, other):
        if isinstance(other, AntisymmetricForm):
            return self.alpha == other.alpha
        return NotImplemented

    def __hash__(self):
        return hash(self.alpha)

    def __repr__(self):
        inside = ", ".join(
            "(%d,%d): %s" % (p[0], p[1], scalar_to_string(c))
            for p, c in zip(P5_PAIRS, self.alpha)
            if c
        )
        return "AntisymmetricForm({%s})" % inside


class PerturbedForm:
    """omega_t = kappa(base) + t * kappa(complement).

    The straight-line path that moves the degenerate fixed form kappa_ij
    toward the contact locus; equivariance forces the deformation
    parameter t to carry the weight s_base - s_complement, which is
    nonzero for admissible weights.
    """

    __slots__ = ("base_pair", "perturb_pair")

    def __init__(self, base_pair):
        pair = tuple(base_pair)
        if pair not in P5_PAIRS:
            raise ValueError("base pair must be one of %r" % (P5_PAIRS,))
        self.base_pair = pair
        self.perturb_pair = complementary_pair(pair)

    def t_weight(self, weights):
        w = as_weight_system(weights)
        return w.pair_sum(self.base_pair) - w.pair_sum(self.perturb_pair)

    def linear_forms(self):
        """Components {variable: (c0, c1)} with entries c0 + c1*t."""
        a = ({}, {}, {}, {})
        bi, bj = self.base_pair
        pi, pj = self.perturb_pair
        a[bi - 1][bj] = (Fraction(1), Fraction(0))
        a[bj - 1][bi] = (Fraction(-1), Fraction(0))
        a[pi - 1][pj] = (Fraction(0), Fraction(1))
        a[pj - 1][pi] = (Fraction(0), Fraction(-1))
        return a

    def __repr__(self):
        return "PerturbedForm(base=%r, perturb=%r)" % (
            self.base_pair,
            self.perturb_pair,
        )


def contract(form, field):
    """Contraction of a form with a degree-d field: a degree-(d+1) poly.

    Returns {monomial: coefficient}; for a PerturbedForm each coefficient
    is a pair (c0, c1) meaning c0 + c1*t.  A field is tangent to the
    plane field cut out by the form exactly when this vanishes.
    """
    terms = _terms_of(field)
    a = form.linear_forms()
    if isinstance(form, PerturbedForm):
        out = {}
        for coeff, mono, direction in terms:
            for var, (c0, c1) in a[direction - 1].items():
                m = _bump(mono, var)
                o0, o1 = out.get(m, (0, 0))
                out[m] = (o0 + coeff * c0, o1 + coeff * c1)
        return {m: v for m, v in out.items() if v[0] or v[1]}
    out = {}
    for coeff, mono, direction in terms:
        for var, c in a[direction - 1].items():
            m = _bump(mono, var)
            out[m] = out.get(m, 0) + coeff * c
    return {m: v for m, v in out.items() if v}


class BasisField:
    """A divergence-free field, homogeneous of one torus weight."""

    __slots__ = ("terms", "weight")

    def __init__(self, terms, weight):
        self.terms = tuple(terms)
        self.weight = weight

    def render(self):
        parts = []
        for coeff, mono, j in self.terms:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            head = "" if mag == 1 else scalar_to_string(mag) + "*"
            parts.append((sign, head + monomial_string(mono) + "*d/dx%d" % j))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __eq__(self, other):
        if isinstance(other, BasisField):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "BasisField(%s; weight=%d)" % (self.render(), self.weight)


class SectionBasis:
    """Weight-graded basis of Phi_d, blocks in ascending weight order."""

    __slots__ = ("d", "weights", "fields")

    def __init__(self, d, weights, fields):
        self.d = d
        self.weights = weights
        self.fields = tuple(fields)

    def __len__(self):
        return len(self.fields)

    def __iter__(self):
        return iter(self.fields)

    def __getitem__(self, i):
        return self.fields[i]

    def weight_multiset(self):
        return WeightMultiset(f.weight for f in self.fields)

    def __repr__(self):
        return "SectionBasis(d=%d, weights=%r, %d fields)" % (
            self.d,
            self.weights.values,
            len(self.fields),
        )


def build_phi_basis(d, weights=DEFAULT_WEIGHTS):
    """Weight-graded basis of the divergence-free degree-d fields.

    Monomial fields are enumerated direction-major (all d/dx1 fields
    first, monomials in graded-lex order within a direction), grouped by
    torus weight; each block contributes the exact kernel of its
    divergence matrix, canonicalized to reduced echelon form with +1
    pivots.  Blocks are concatenated by ascending weight.
    """
    w = as_weight_system(weights)
    w.require_admissible()
    if d < 1:
        raise ValueError("field degree must be >= 1, got %r" % (d,))
    return _phi_basis_cached(d, w.values)


@lru_cache(maxsize=None)
def _phi_basis_cached(d, wvalues):
    w = WeightSystem(wvalues)
    monos = monomials_of_degree(d)
    groups = {}
    for j in (1, 2, 3, 4):
        wj = w.weight(j)
        for m in monos:
            groups.setdefault(monomial_weight(m, w) - wj, []).append((m, j))
    fields = []
    for wt in sorted(groups):
        block = groups[wt]
        rows = [
            m
            for m in monomials_of_degree(d - 1)
            if monomial_weight(m, w) == wt
        ]
        rowindex = {m: i for i, m in enumerate(rows)}
        mat = [[0] * len(block) for _ in rows]
        for c, (m, j) in enumerate(block):
            e = m[j - 1]
            if e:
                mat[rowindex[_lower(m, j)]][c] = e
        for vec in kernel_basis(mat, len(block)):
            terms = [
                MonomialField(coeff, m, j)
                for coeff, (m, j) in zip(vec, block)
                if coeff
            ]
            fields.append(BasisField(terms, wt))
    if len(fields) != phi_dimension(d):
        raise ArithmeticError(
            "basis size %d != %d for d=%d, weights %r"
            % (len(fields), phi_dimension(d), d, wvalues)
        )
    return SectionBasis(d, w, fields)


def tangent_kernel_dimension(form, d, weights=DEFAULT_WEIGHTS):
    """Dimension of the fields in Phi_d tangent to the given form.

    Computed as dim Phi_d minus the exact rank of the contraction matrix;
    the answer does not depend on the admissible weight system used to
    organize the computation.
    """
    basis = build_phi_basis(d, weights)
    monos = monomials_of_degree(d + 1)
    mindex = {m: i for i, m in enumerate(monos)}
    mat = [[Fraction(0)] * len(basis) for _ in monos]
    for cidx, f in enumerate(basis):
        for m, v in contract(form, f).items():
            mat[mindex[m]][cidx] = v
    int_rows = fraction_rows_to_int(mat)
    return len(basis) - rank(int_rows, len(basis))
