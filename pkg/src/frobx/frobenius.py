"""Frobenius structure on a single graded superalgebra over its ground field:
trace validity via the Gram matrix, Nakayama automorphism, dual bases."""

from .gsalg import (Degree, GradedLinearMap, Report, check_automorphism,
                    ground_field_algebra, parity_sign)
from .linalg import Matrix, invert, solve


class FrobeniusAlgebraData:
    """An algebra together with a validated ground-field trace.

    trace is a GradedLinearMap into the one-dimensional ground-field algebra;
    its shift is (-lam, parity) where (lam, parity) is the Frobenius degree.
    """

    def __init__(self, algebra, trace):
        self.algebra = algebra
        self.trace = trace
        self.degree = Degree(tuple(-a for a in trace.shift.lam), trace.shift.parity)

    def trace_scalar(self, x):
        return self.trace.apply(x)[0]

    def gram_matrix(self):
        A = self.algebra
        n = A.dim
        rows = [[self.trace_scalar(A.table[i][j]) for j in range(n)]
                for i in range(n)]
        return Matrix(A.field, rows)


def make_trace(A, values, frobenius_degree):
    """Ground-field trace from per-basis-element scalars."""
    F = ground_field_algebra(A.field, A.rank)
    shift = -frobenius_degree
    return GradedLinearMap(A, F, shift, [[v] for v in values])


def check_frobenius(fa: FrobeniusAlgebraData) -> Report:
    """Trace homogeneity plus nondegeneracy of the induced bilinear form."""
    report = Report("frobenius structure on %s" % fa.algebra.name)
    if not fa.trace.respects_grading():
        report.record("trace is not homogeneous of degree %r" % (fa.trace.shift,))
    gram = fa.gram_matrix()
    if invert(gram) is None:
        report.record("bilinear form tr(a1*a2) is degenerate")
    report.note("frobenius degree %r" % (fa.degree,))
    return report


def nakayama_automorphism(fa: FrobeniusAlgebraData) -> GradedLinearMap:
    """The automorphism psi with tr(a1*a2) = (-1)^{|a1||a2|} tr(a2*psi(a1)).

    Raises if the form is degenerate or the solution fails the automorphism
    re-check.
    """
    A = fa.algebra
    gram = fa.gram_matrix()
    cols = []
    for i in range(A.dim):
        pi = A.parity(i)
        rhs = [gram.data[i][j] if parity_sign(pi, A.parity(j)) > 0
               else -gram.data[i][j] for j in range(A.dim)]
        c = solve(gram, rhs)
        if c is None:
            raise ValueError("degenerate trace form, no Nakayama automorphism")
        cols.append(c)
    psi = GradedLinearMap(A, A, Degree.zero(A.rank), cols)
    rep = check_automorphism(A, psi)
    if not rep:
        raise ValueError("Nakayama candidate failed re-check:\n" + rep.summary())
    return psi


def right_dual_basis(fa: FrobeniusAlgebraData):
    """Vectors b_j with tr(e_i * b_j) = delta_ij (columns of the Gram inverse)."""
    gram_inv = invert(fa.gram_matrix())
    if gram_inv is None:
        raise ValueError("degenerate trace form, no dual basis")
    return gram_inv.columns()


def verify_right_dual_basis(fa: FrobeniusAlgebraData, duals) -> Report:
    report = Report("right dual basis")
    A = fa.algebra
    for i in range(A.dim):
        for j, bj in enumerate(duals):
            val = fa.trace_scalar(A.multiply(A.basis_vector(i), bj))
            want = A.field.one() if i == j else A.field.zero()
            if val != want:
                report.record("tr(e_%s * b_%d) = %s" % (A.labels[i], j, val))
    return report
