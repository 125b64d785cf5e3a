"""Limits of tangency data along the contact deformation, exactly.

At each torus-fixed form kappa_ij the straight path
omega_t = kappa_ij + t * kappa_kl ({k,l} the complementary pair) enters
the contact locus for t != 0.  Contraction against the degree-d field
basis gives a matrix over Q[t]; what survives at t = 0 after saturating
by t is computed here by two deliberately independent routes:

* image-fiber: a one-pass unit-pivot elimination over Q[t] localized at
  t (the limit_rows kernel) gives a basis of the limit of the row span;
  its pivot columns name basis fields whose weights are the fiber of the
  image sheaf at the fixed point.
* kernel-limit: a fraction-free (Bareiss) nullspace over Z[t], followed
  by the classical re-adaptation loop — evaluate at t = 0, and while the
  evaluations are dependent, push a dependency back into the family,
  divide by t, try again.

Torus equivariance makes the matrix block-diagonal after grouping rows
and columns by weight (t itself carries the weight difference of the two
pairs), so both routes run on small connected blocks.
"""

from collections import namedtuple
from fractions import Fraction
from math import comb, gcd

from .exact import (
    DEFAULT_WEIGHTS,
    WeightMultiset,
    as_weight_system,
)
from .fields import (
    P5_PAIRS,
    BasisField,
    PerturbedForm,
    build_phi_basis,
    complementary_pair,
    contact_kernel_dimension,
    contract,
    monomials_of_degree,
)
from .linalg import kernel_basis, limit_rows, rank
from .tpolys import (
    TP_ZERO,
    tp_add,
    tp_constant_term,
    tp_divexact,
    tp_from_coeffs,
    tp_mul,
    tp_neg,
    tp_scale,
    tp_shift_down,
    tp_sub,
    tp_valuation,
)

METHOD_IMAGE = "image-fiber"
METHOD_KERNEL = "kernel-limit"
METHOD_BOTH = "both"
METHODS = (METHOD_IMAGE, METHOD_KERNEL, METHOD_BOTH)


class SaturationRankError(ArithmeticError):
    """The saturated limit has the wrong rank — a computation bug, never
    a property of the input, so it is raised loudly instead of patched."""


class MethodDisagreement(ArithmeticError):
    """The two limit routes produced different weight multisets."""


class FixedPointP5(namedtuple("FixedPointP5", "pair")):
    """A torus-fixed form [kappa_ij] in the space of antisymmetric forms."""

    __slots__ = ()

    @property
    def complement(self):
        return complementary_pair(self.pair)

    def __repr__(self):
        return "FixedPointP5(%d,%d)" % self.pair


def fixed_points_p5():
    """The six fixed points in canonical pair order."""
    return tuple(FixedPointP5(p) for p in P5_PAIRS)


def as_fixed_point(fp):
    if isinstance(fp, FixedPointP5):
        return fp
    pair = tuple(fp)
    if pair not in P5_PAIRS:
        raise ValueError("not a fixed-point pair: %r" % (fp,))
    return FixedPointP5(pair)


class ContractionMatrix:
    """Contraction of omega_t against a field basis, rows indexed by the
    degree-(d+1) monomials, columns by the basis fields; entries are
    pairs (c0, c1) for c0 + c1*t."""

    __slots__ = ("fp", "d", "basis", "row_monomials", "entries")

    def __init__(self, fp, d, basis, row_monomials, entries):
        self.fp = fp
        self.d = d
        self.basis = basis
        self.row_monomials = row_monomials
        self.entries = entries

    @property
    def shape(self):
        return (len(self.row_monomials), len(self.basis))

    def __repr__(self):
        return "ContractionMatrix(fp=%r, d=%d, shape=%r, %d entries)" % (
            self.fp,
            self.d,
            self.shape,
            len(self.entries),
        )


def build_contraction_matrix(fp, d, basis):
    """Assemble the sparse matrix of phi -> contract(omega_t, phi)."""
    fp = as_fixed_point(fp)
    if basis.d != d:
        raise ValueError(
            "basis is for degree %d, not %d" % (basis.d, d)
        )
    form = PerturbedForm(fp.pair)
    monos = monomials_of_degree(d + 1)
    mindex = {m: i for i, m in enumerate(monos)}
    entries = {}
    for c, f in enumerate(basis):
        for m, pair in contract(form, f).items():
            entries[(mindex[m], c)] = pair
    return ContractionMatrix(fp, d, basis, monos, entries)


def _connected_blocks(matrix):
    """Column/row index sets of the connected components of the bipartite
    incidence graph; every column appears in exactly one block (columns
    with no entries form row-less singletons)."""
    nrows, ncols = matrix.shape
    parent = list(range(nrows + ncols))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for (r, c) in matrix.entries:
        a, b = find(r), find(nrows + c)
        if a != b:
            parent[a] = b

    cols_of = {}
    for c in range(ncols):
        cols_of.setdefault(find(nrows + c), []).append(c)
    rows_of = {root: [] for root in cols_of}
    for r in range(nrows):
        root = find(r)
        if root in rows_of:
            rows_of[root].append(r)
    order = sorted(cols_of, key=lambda root: cols_of[root][0])
    return [(rows_of[root], cols_of[root]) for root in order]


def _int_block(matrix, row_idx, col_idx):
    """Dense t-polynomial rows of a block, denominators cleared per row."""
    colpos = {c: k for k, c in enumerate(col_idx)}
    sparse_rows = {r: [] for r in row_idx}
    for (r, c), (c0, c1) in matrix.entries.items():
        if r in sparse_rows and c in colpos:
            sparse_rows[r].append((colpos[c], c0, c1))
    out = []
    for r in row_idx:
        den = 1
        for _, c0, c1 in sparse_rows[r]:
            for e in (c0, c1):
                d = e.denominator
                den = den * d // gcd(den, d)
        row = [TP_ZERO] * len(col_idx)
        for k, c0, c1 in sparse_rows[r]:
            row[k] = tp_from_coeffs((int(c0 * den), int(c1 * den)))
        out.append(row)
    return out


def _tpoly_echelon(rows, ncols):
    """Fraction-free row echelon over Z[t] (Bareiss: every 2x2 cross is
    divided by the previous pivot, exactly).  Returns (rows, pivot_cols)."""
    mat = [list(r) for r in rows]
    pivots = []
    prev = (1,)
    rk = 0
    for col in range(ncols):
        best = -1
        best_key = None
        for r in range(rk, len(mat)):
            e = mat[r][col]
            if e:
                key = (len(e), max(abs(c) for c in e).bit_length(), r)
                if best < 0 or key < best_key:
                    best, best_key = r, key
        if best < 0:
            continue
        mat[rk], mat[best] = mat[best], mat[rk]
        prow = mat[rk]
        p = prow[col]
        for r in range(rk + 1, len(mat)):
            row = mat[r]
            e = row[col]
            row[col] = TP_ZERO
            for c in range(col + 1, ncols):
                num = tp_sub(tp_mul(p, row[c]), tp_mul(e, prow[c]))
                row[c] = tp_divexact(num, prev) if num else TP_ZERO
        pivots.append(col)
        prev = p
        rk += 1
    return mat[:rk], pivots


def _tpoly_nullspace(rows, ncols):
    """Basis of the right kernel over the fraction field Q(t), with
    entries cleared to Z[t] (Cramer scaling keeps every division exact)."""
    ech, pivots = _tpoly_echelon(rows, ncols)
    pivot_set = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        active = [i for i, c in enumerate(pivots) if c < f]
        scale = (1,)
        for i in active:
            scale = tp_mul(scale, ech[i][pivots[i]])
        x = [TP_ZERO] * ncols
        x[f] = scale
        for i in reversed(active):
            ci = pivots[i]
            s = TP_ZERO
            for j in range(ci + 1, ncols):
                if ech[i][j] and x[j]:
                    s = tp_add(s, tp_mul(ech[i][j], x[j]))
            if s:
                x[ci] = tp_neg(tp_divexact(s, ech[i][ci]))
        vecs.append(x)
    return vecs


def _vec_normalize(v):
    """Divide a t-polynomial vector by its t-valuation and int content."""
    val = None
    for e in v:
        if e:
            ev = tp_valuation(e)
            if val is None or ev < val:
                val = ev
    if val is None:
        raise SaturationRankError("zero vector in kernel family")
    if val:
        v = [tp_shift_down(e, val) if e else e for e in v]
    g = 0
    for e in v:
        for c in e:
            g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        v = [tuple(c // g for c in e) for e in v]
    return v


def _limit_kernel_vectors(int_rows, ncols):
    """t -> 0 limit of the kernel family by repeated re-adaptation.

    Start with a Z[t] kernel basis; evaluate at t = 0; while the
    evaluations are linearly dependent, replace one member by the
    dependency combination divided by its t-valuation, and repeat.
    Returns (vectors over Z[t], their values at t = 0)."""
    vecs = [_vec_normalize(v) for v in _tpoly_nullspace(int_rows, ncols)]
    for _ in range(10000):
        evaluated = [[tp_constant_term(e) for e in v] for v in vecs]
        if not vecs or rank(evaluated, ncols) == len(vecs):
            return vecs, evaluated
        deps = kernel_basis([list(col) for col in zip(*evaluated)], len(vecs))
        coeffs = deps[0]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        k = max(i for i, c in enumerate(ints) if c)
        combo = [TP_ZERO] * ncols
        for i, ci in enumerate(ints):
            if ci:
                for pos in range(ncols):
                    if vecs[i][pos]:
                        combo[pos] = tp_add(
                            combo[pos], tp_scale(vecs[i][pos], ci)
                        )
        vecs[k] = _vec_normalize(combo)
    raise SaturationRankError("kernel re-adaptation failed to stabilize")


def _kernel_weights_for_block(evaluated, col_idx, basis):
    """Weights of a T-stable kernel limit: project the limit vectors onto
    each weight's coordinates; the projection ranks are the
    multiplicities (and must add up to the kernel dimension)."""
    if not evaluated:
        return []
    weights = sorted({basis[c].weight for c in col_idx})
    out = []
    for chi in weights:
        pos = [k for k, c in enumerate(col_idx) if basis[c].weight == chi]
        proj = [[v[k] for k in pos] for v in evaluated]
        out += [chi] * rank(proj, len(pos))
    if len(out) != len(evaluated):
        raise SaturationRankError(
            "limit kernel is not a sum of weight spaces"
        )
    return out


class LimitFiberResult:
    """Fiber weights at one fixed point: quotient_weights is the fiber of
    the image sheaf (what the Euler class is made of), kernel_weights its
    complement inside the weights of the full field basis."""

    __slots__ = ("pair", "d", "quotient_weights", "kernel_weights", "method")

    def __init__(self, pair, d, quotient_weights, kernel_weights, method):
        self.pair = pair
        self.d = d
        self.quotient_weights = quotient_weights
        self.kernel_weights = kernel_weights
        self.method = method

    def to_json_dict(self):
        return {
            "pair": list(self.pair),
            "d": self.d,
            "weights": list(self.quotient_weights),
            "kernel_weights": list(self.kernel_weights),
            "method": self.method,
        }

    def __repr__(self):
        return "LimitFiberResult(pair=%r, d=%d, %d quotient / %d kernel)" % (
            self.pair,
            self.d,
            len(self.quotient_weights),
            len(self.kernel_weights),
        )


def limit_fiber_weights(fp, d, weights=DEFAULT_WEIGHTS, method=METHOD_IMAGE):
    """Quotient and kernel weight multisets of the contraction limit at a
    fixed point.

    method "image-fiber" saturates the row module, "kernel-limit" adapts
    the kernel family, "both" runs the two and insists they agree.
    Either way the image rank must come out as C(d+4, 3) and the kernel
    as (d+4)(d+2)d/3, or SaturationRankError is raised.
    """
    fp = as_fixed_point(fp)
    w = as_weight_system(weights)
    w.require_admissible()
    if method not in METHODS:
        raise ValueError("unknown method %r" % (method,))
    if method == METHOD_BOTH:
        img = limit_fiber_weights(fp, d, w, METHOD_IMAGE)
        ker = limit_fiber_weights(fp, d, w, METHOD_KERNEL)
        if (
            img.quotient_weights != ker.quotient_weights
            or img.kernel_weights != ker.kernel_weights
        ):
            raise MethodDisagreement(
                "image-fiber and kernel-limit disagree at %r, d=%d"
                % (fp, d)
            )
        return LimitFiberResult(
            fp.pair, d, img.quotient_weights, img.kernel_weights, METHOD_BOTH
        )

    basis = build_phi_basis(d, w)
    matrix = build_contraction_matrix(fp, d, basis)
    blocks = _connected_blocks(matrix)
    all_weights = basis.weight_multiset()

    if method == METHOD_IMAGE:
        quotient_cols = []
        for row_idx, col_idx in blocks:
            int_rows = _int_block(matrix, row_idx, col_idx)
            _, pivots_local = limit_rows(int_rows, len(col_idx))
            quotient_cols += [col_idx[k] for k in pivots_local]
        expected = comb(d + 4, 3)
        if len(quotient_cols) != expected:
            raise SaturationRankError(
                "limit image rank %d != %d at %r, d=%d"
                % (len(quotient_cols), expected, fp, d)
            )
        qw = WeightMultiset(basis[c].weight for c in quotient_cols)
        kw = all_weights.difference(qw)
    else:
        kernel_list = []
        for row_idx, col_idx in blocks:
            int_rows = _int_block(matrix, row_idx, col_idx)
            _, evaluated = _limit_kernel_vectors(int_rows, len(col_idx))
            kernel_list += _kernel_weights_for_block(
                evaluated, col_idx, basis
            )
        expected = contact_kernel_dimension(d)
        if len(kernel_list) != expected:
            raise SaturationRankError(
                "limit kernel rank %d != %d at %r, d=%d"
                % (len(kernel_list), expected, fp, d)
            )
        kw = WeightMultiset(kernel_list)
        qw = all_weights.difference(kw)

    return LimitFiberResult(fp.pair, d, qw, kw, method)
