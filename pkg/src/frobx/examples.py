"""Built-in algebras and extension fixtures.

Permutations are tuples in one-line notation on {0,...,n-1}; bases are sorted
by (length, tuple) so the identity comes first and the longest element last.
"""

import itertools
from math import comb

from .fields import QQ
from .frobenius import FrobeniusAlgebraData, make_trace, nakayama_automorphism
from .gsalg import (Degree, GradedLinearMap, GradedSuperAlgebra,
                    SubalgebraEmbedding, ground_field_algebra)


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def compose(w, v):
    """(w v)(i) = w(v(i))."""
    return tuple(w[v[i]] for i in range(len(v)))


def longest_element(n):
    return tuple(range(n - 1, -1, -1))


def sorted_permutations(n):
    return sorted(itertools.permutations(range(n)), key=lambda w: (inversions(w), w))


def perm_label(w):
    return "".join(str(i + 1) for i in w)


def nilcoxeter(n, field=QQ):
    """Nil-Coxeter algebra of S_n: u_w u_v = u_{wv} when lengths add, else 0.

    Generators sit in degree (1; 1); the Frobenius trace picks the coefficient
    of the longest element, degree (C(n,2); C(n,2) mod 2).
    """
    perms = sorted_permutations(n)
    index = {w: i for i, w in enumerate(perms)}
    dim = len(perms)
    degrees = [Degree((inversions(w),), inversions(w)) for w in perms]
    table = []
    for w in perms:
        row = []
        for v in perms:
            vec = [field.zero()] * dim
            wv = compose(w, v)
            if inversions(wv) == inversions(w) + inversions(v):
                vec[index[wv]] = field.one()
            row.append(vec)
        table.append(row)
    unit = [field.zero()] * dim
    unit[index[tuple(range(n))]] = field.one()
    A = GradedSuperAlgebra([perm_label(w) for w in perms], degrees, table, unit,
                           field, name="N%d" % n)
    ell = comb(n, 2)
    w0 = longest_element(n)
    values = [field.one() if w == w0 else field.zero() for w in perms]
    return FrobeniusAlgebraData(A, make_trace(A, values, Degree((ell,), ell)))


def symmetric_group_algebra(n, field=QQ):
    """Group algebra of S_n with trivial grading; trace picks the coefficient
    of the longest element.  Kept small (n <= 4) so linear algebra stays cheap.
    """
    assert n <= 4, "symmetric group algebras are capped at n = 4"
    perms = sorted_permutations(n)
    index = {w: i for i, w in enumerate(perms)}
    dim = len(perms)
    zero_deg = Degree((0,), 0)
    table = []
    for w in perms:
        row = []
        for v in perms:
            vec = [field.zero()] * dim
            vec[index[compose(w, v)]] = field.one()
            row.append(vec)
        table.append(row)
    unit = [field.zero()] * dim
    unit[index[tuple(range(n))]] = field.one()
    A = GradedSuperAlgebra([perm_label(w) for w in perms], [zero_deg] * dim,
                           table, unit, field, name="FS%d" % n)
    w0 = longest_element(n)
    values = [field.one() if w == w0 else field.zero() for w in perms]
    return FrobeniusAlgebraData(A, make_trace(A, values, zero_deg))


def truncated_polynomial(k, field=QQ):
    """F[x]/(x^k) with x in degree (1; 0) and trace = top coefficient."""
    assert k >= 1
    degrees = [Degree((i,), 0) for i in range(k)]
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            vec = [field.zero()] * k
            if i + j < k:
                vec[i + j] = field.one()
            row.append(vec)
        table.append(row)
    unit = [field.zero()] * k
    unit[0] = field.one()
    labels = ["1"] + ["x" if i == 1 else "x%d" % i for i in range(1, k)]
    A = GradedSuperAlgebra(labels, degrees, table, unit, field, name="P%d" % k)
    values = [field.one() if i == k - 1 else field.zero() for i in range(k)]
    return FrobeniusAlgebraData(A, make_trace(A, values, Degree((k - 1,), 0)))


def exterior_algebra(m, field=QQ):
    """Exterior algebra on odd generators t_1..t_m of degree (1; 1); trace =
    coefficient of the top form."""
    assert 2 ** m <= 16, "exterior algebras are capped at 16 dimensions"
    subsets = sorted((s for r in range(m + 1)
                      for s in itertools.combinations(range(m), r)),
                     key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(subsets)}
    dim = len(subsets)
    degrees = [Degree((len(s),), len(s)) for s in subsets]

    def wedge(s, t):
        if set(s) & set(t):
            return None, 0
        merged = list(s) + list(t)
        sign = 1
        # bubble sort, counting transpositions of odd generators
        for i in range(len(merged)):
            for j in range(len(merged) - 1 - i):
                if merged[j] > merged[j + 1]:
                    merged[j], merged[j + 1] = merged[j + 1], merged[j]
                    sign = -sign
        return tuple(merged), sign

    table = []
    for s in subsets:
        row = []
        for t in subsets:
            vec = [field.zero()] * dim
            merged, sign = wedge(s, t)
            if merged is not None:
                vec[index[merged]] = field.one() if sign > 0 else -field.one()
            row.append(vec)
        table.append(row)
    unit = [field.zero()] * dim
    unit[index[()]] = field.one()
    labels = ["e"] + ["t" + "".join(str(i + 1) for i in s) for s in subsets[1:]]
    A = GradedSuperAlgebra(labels, degrees, table, unit, field, name="E%d" % m)
    top = subsets[-1]
    values = [field.one() if s == top else field.zero() for s in subsets]
    return FrobeniusAlgebraData(A, make_trace(A, values, Degree((m,), m)))


def conjugation_by_longest(fa):
    """w |-> w0 w w0 on a permutation-basis algebra (Nakayama for both the
    nil-Coxeter and symmetric group families)."""
    A = fa.algebra
    n = len(A.labels[0])
    perms = sorted_permutations(n)
    index = {w: i for i, w in enumerate(perms)}
    w0 = longest_element(n)
    cols = []
    for w in perms:
        v = A.zero()
        v[index[compose(w0, compose(w, w0))]] = A.field.one()
        cols.append(v)
    return GradedLinearMap(A, A, Degree.zero(A.rank), cols)


def nilcoxeter_scaling(fa, c):
    """u_w |-> c^{len(w)} u_w, a graded automorphism for any nonzero c."""
    A = fa.algebra
    cols = []
    for i in range(A.dim):
        v = A.zero()
        v[i] = c ** A.degrees[i].lam[0]
        cols.append(v)
    return GradedLinearMap(A, A, Degree.zero(A.rank), cols)


class ExtensionPair:
    """A subalgebra pair with candidate twists and both algebra-level traces."""

    def __init__(self, emb, fa_A, fa_B, alpha, beta):
        self.emb = emb
        self.A = emb.A
        self.B = emb.B
        self.fa_A = fa_A
        self.fa_B = fa_B
        self.alpha = alpha  # automorphism of A
        self.beta = beta    # automorphism of B

    @property
    def degree(self):
        """Expected degree of the induced trace: difference of Frobenius
        degrees, with the parities added."""
        dA, dB = self.fa_A.degree, self.fa_B.degree
        return Degree(tuple(a - b for a, b in zip(dA.lam, dB.lam)),
                      dA.parity + dB.parity)


def _permutation_embedding(fa_B, fa_A, m, n):
    A, B = fa_A.algebra, fa_B.algebra
    perms_n = sorted_permutations(n)
    index = {w: i for i, w in enumerate(perms_n)}
    cols = []
    for w in sorted_permutations(m):
        ext = tuple(w) + tuple(range(m, n))
        v = A.zero()
        v[index[ext]] = A.field.one()
        cols.append(v)
    inc = GradedLinearMap(B, A, Degree.zero(A.rank), cols)
    return SubalgebraEmbedding(A, B, inc)


def nilcoxeter_extension(m, n, field=QQ):
    """N_m inside N_n with the Nakayama automorphisms as twists."""
    assert 1 <= m <= n
    fa_A = nilcoxeter(n, field)
    fa_B = nilcoxeter(m, field)
    emb = _permutation_embedding(fa_B, fa_A, m, n)
    return ExtensionPair(emb, fa_A, fa_B,
                         nakayama_automorphism(fa_A), nakayama_automorphism(fa_B))


def symmetric_group_extension(m, n, field=QQ):
    """FS_m inside FS_n, twists = the Nakayama automorphisms (which here are
    conjugation by the longest elements, the grading being trivial)."""
    assert 1 <= m <= n <= 4
    fa_A = symmetric_group_algebra(n, field)
    fa_B = symmetric_group_algebra(m, field)
    emb = _permutation_embedding(fa_B, fa_A, m, n)
    return ExtensionPair(emb, fa_A, fa_B,
                         nakayama_automorphism(fa_A), nakayama_automorphism(fa_B))


def non_projective_pair(field=QQ):
    """A = F[x]/(x^3) over the subalgebra B spanned by 1 and x^2.

    A is not projective as a B-module, so no trace can make the pair a twisted
    Frobenius extension.
    """
    fa_A = truncated_polynomial(3, field)
    A = fa_A.algebra
    degrees = [Degree((0,), 0), Degree((2,), 0)]
    zero, one = field.zero(), field.one()
    table = [[[one, zero], [zero, one]], [[zero, one], [zero, zero]]]
    B = GradedSuperAlgebra(["1", "x2"], degrees, table, [one, zero], field,
                           name="B(1,x2)")
    cols = [A.basis_vector(0), A.basis_vector(2)]
    inc = GradedLinearMap(B, A, Degree.zero(1), cols)
    return SubalgebraEmbedding(A, B, inc)


def self_extension(A):
    """The trivial pair B = A with identity inclusion."""
    return SubalgebraEmbedding(A, A, GradedLinearMap.identity(A))


def ground_field_embedding(A):
    F = ground_field_algebra(A.field, A.rank)
    inc = GradedLinearMap(F, A, Degree.zero(A.rank), [A.one()])
    return SubalgebraEmbedding(A, F, inc)
