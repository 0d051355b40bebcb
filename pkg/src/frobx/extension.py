"""Twisted Frobenius structure on a subalgebra pair B <= A.

The central object is TraceMap: a homogeneous linear map A -> B of degree
(-lam; pi) together with a pair of twisting automorphisms (alpha on A, beta on
B).  A valid left trace satisfies

    tr(beta(b) * x * alpha(b')) = (-1)^{pi |b|} b tr(x) b'

plus nondegeneracy (no a with tr(Aa) = 0) and fullness (every equivariant map
A -> B is tr composed with a signed right multiplication).  Everything here is
exact linear algebra over the coefficient field; no numerical tolerances.
"""

import itertools
import os

from .gsalg import (Degree, GradedLinearMap, Report, SubalgebraEmbedding,
                    centralizer, parity_sign, signed_right_mult,
                    twisted_equivariance_check, vec_add, vec_is_zero, vec_scale,
                    vec_sub)
from .linalg import EquationSystem, Matrix, is_invertible


def candidate_cap(default=1000):
    try:
        return int(os.environ.get("FROBX_CANDIDATE_CAP", default))
    except ValueError:
        return default


class TraceMap:
    """A candidate twisted trace for an embedding B <= A.

    mapping: GradedLinearMap A -> B with shift (-lam; pi).
    alpha: automorphism of A (right twist); beta: automorphism of B (left
    twist).  degree is (lam; pi).
    """

    def __init__(self, emb, mapping, alpha, beta):
        if mapping.source is not emb.A or mapping.target is not emb.B:
            raise ValueError("trace must map A into B")
        self.emb = emb
        self.mapping = mapping
        self.alpha = alpha
        self.beta = beta
        self.degree = -mapping.shift
        self._alpha_inv = None
        self._beta_inv = None

    @property
    def A(self):
        return self.emb.A

    @property
    def B(self):
        return self.emb.B

    @property
    def alpha_inv(self):
        if self._alpha_inv is None:
            self._alpha_inv = self.alpha.inverse()
        return self._alpha_inv

    @property
    def beta_inv(self):
        if self._beta_inv is None:
            self._beta_inv = self.beta.inverse()
        return self._beta_inv

    def value(self, x):
        return self.mapping.apply(x)

    def right_mapping(self):
        """The companion right trace beta o tr o alpha as a map A -> B."""
        return self.beta.compose(self.mapping).compose(self.alpha)


def _entry(x, j, dimB):
    return x * dimB + j


def left_hom_space(emb, beta):
    """Echelon basis of all maps f: A -> B with f(beta(b) x) equal to
    (-1)^{|f| |b|} b f(x), summed over all homogeneous degrees of f.

    Vectors are flattened entry tables u[x*dimB + j] = coefficient of e_j in
    f(e_x); the entry (x, j) lies in the component of parity |x| + |j|.
    """
    A, B = emb.A, emb.B
    dimB = B.dim
    system = EquationSystem(A.dim * dimB, A.field)
    for bi in range(B.dim):
        bb = emb.embed(beta.apply(B.basis_vector(bi)))
        pb = B.parity(bi)
        for x in range(A.dim):
            prod = A.multiply(bb, A.basis_vector(x))
            for j in range(dimB):
                gamma = (A.parity(x) + pb + B.parity(j)) % 2
                sgn = parity_sign(gamma, pb)
                coeffs = {}
                for m, c in enumerate(prod):
                    if c:
                        key = _entry(m, j, dimB)
                        coeffs[key] = coeffs.get(key, A.field.zero()) + c
                for i in range(dimB):
                    t = B.table[bi][i][j]
                    if t:
                        key = _entry(x, i, dimB)
                        val = t if sgn > 0 else -t
                        coeffs[key] = coeffs.get(key, A.field.zero()) - val
                coeffs = {k: v for k, v in coeffs.items() if v}
                if coeffs:
                    system.add(coeffs)
    return system.kernel_basis()


def right_hom_space(emb, beta):
    """Echelon basis of all maps f: A -> B with f(x beta^{-1}(b)) = f(x) b."""
    A, B = emb.A, emb.B
    dimB = B.dim
    beta_inv = beta.inverse()
    system = EquationSystem(A.dim * dimB, A.field)
    for bi in range(B.dim):
        bb = emb.embed(beta_inv.apply(B.basis_vector(bi)))
        for x in range(A.dim):
            prod = A.multiply(A.basis_vector(x), bb)
            for j in range(dimB):
                coeffs = {}
                for m, c in enumerate(prod):
                    if c:
                        key = _entry(m, j, dimB)
                        coeffs[key] = coeffs.get(key, A.field.zero()) + c
                for i in range(dimB):
                    t = B.table[i][bi][j]
                    if t:
                        key = _entry(x, i, dimB)
                        coeffs[key] = coeffs.get(key, A.field.zero()) - t
                coeffs = {k: v for k, v in coeffs.items() if v}
                if coeffs:
                    system.add(coeffs)
    return system.kernel_basis()


def left_realization_matrix(tr: TraceMap) -> Matrix:
    """Matrix of a |-> tr o rho_a into flattened entry tables, where rho_a is
    the signed right multiplication m -> (-1)^{|a||m|} m a."""
    A, B = tr.A, tr.B
    dimB = B.dim
    cols = []
    for a in range(A.dim):
        rho = signed_right_mult(A, A.basis_vector(a))
        col = [A.field.zero()] * (A.dim * dimB)
        for m in range(A.dim):
            val = tr.mapping.apply(rho.columns[m])
            for j in range(dimB):
                if val[j]:
                    col[_entry(m, j, dimB)] = val[j]
        cols.append(col)
    return Matrix.from_columns(A.field, cols, A.dim * dimB)


def right_realization_matrix(tr: TraceMap) -> Matrix:
    """Matrix of a |-> tr_R o lambda_a (plain left multiplication)."""
    A, B = tr.A, tr.B
    dimB = B.dim
    rmap = tr.right_mapping()
    cols = []
    for a in range(A.dim):
        ea = A.basis_vector(a)
        col = [A.field.zero()] * (A.dim * dimB)
        for m in range(A.dim):
            val = rmap.apply(A.multiply(ea, A.basis_vector(m)))
            for j in range(dimB):
                if val[j]:
                    col[_entry(m, j, dimB)] = val[j]
        cols.append(col)
    return Matrix.from_columns(A.field, cols, A.dim * dimB)


def check_left_trace(tr: TraceMap) -> Report:
    """Homogeneity, two-sided equivariance, nondegeneracy, and fullness."""
    report = Report("left trace of degree %r" % (tr.degree,))
    if not tr.mapping.respects_grading():
        report.record("trace is not homogeneous of degree %r" % (tr.mapping.shift,))
    eq = twisted_equivariance_check(tr.mapping, tr.beta, tr.alpha, tr.emb,
                                    tr.mapping.shift)
    if not eq:
        report.record("equivariance: %d violations, first: %s"
                      % (len(eq.violations), eq.violations[0]))
        return report
    real = left_realization_matrix(tr)
    if real.rank() < tr.A.dim:
        report.record("nondegeneracy fails: tr(A a) = 0 for some nonzero a")
    hom_dim = len(left_hom_space(tr.emb, tr.beta))
    if real.rank() != hom_dim:
        report.record("fullness fails: realization rank %d < hom space dim %d"
                      % (real.rank(), hom_dim))
    report.note("hom space dimension %d" % hom_dim)
    return report


def check_right_trace(tr: TraceMap) -> Report:
    """The companion right trace beta o tr o alpha, checked on its own terms."""
    report = Report("right trace of degree %r" % (tr.degree,))
    rmap = tr.right_mapping()
    if not rmap.respects_grading():
        report.record("right trace is not homogeneous")
    eq = twisted_equivariance_check(rmap, tr.alpha_inv, tr.beta_inv, tr.emb,
                                    rmap.shift)
    if not eq:
        report.record("equivariance: %d violations, first: %s"
                      % (len(eq.violations), eq.violations[0]))
        return report
    real = right_realization_matrix(tr)
    if real.rank() < tr.A.dim:
        report.record("nondegeneracy fails: tr_R(a A) = 0 for some nonzero a")
    hom_dim = len(right_hom_space(tr.emb, tr.beta))
    if real.rank() != hom_dim:
        report.record("fullness fails: realization rank %d < hom space dim %d"
                      % (real.rank(), hom_dim))
    report.note("hom space dimension %d" % hom_dim)
    return report


class ProjectiveBasis:
    """Pairs (x_i, phi_i) with x = sum_i (-1)^{|x||x_i|} phi_i(x) x_i.

    Each x_i is a basis element of A and phi_i a homogeneous B-linear map
    A -> B of degree -deg(x_i).
    """

    def __init__(self, emb, items):
        self.emb = emb
        self.items = items  # list of (basis index, GradedLinearMap)

    def verify(self) -> Report:
        A, B = self.emb.A, self.emb.B
        report = Report("projective basis")
        for i, phi in self.items:
            if not phi.respects_grading():
                report.record("phi_%s not homogeneous" % A.labels[i])
            gi = A.parity(i)
            for bi in range(B.dim):
                bb = self.emb.embed(B.basis_vector(bi))
                sgn = parity_sign(gi, B.parity(bi))
                for x in range(A.dim):
                    lhs = phi.apply(A.multiply(bb, A.basis_vector(x)))
                    rhs = B.multiply(B.basis_vector(bi), phi.apply(A.basis_vector(x)))
                    if sgn < 0:
                        rhs = [-c for c in rhs]
                    if lhs != rhs:
                        report.record("phi_%s not B-linear at (%s, %s)"
                                      % (A.labels[i], B.labels[bi], A.labels[x]))
        for x in range(A.dim):
            acc = A.zero()
            for i, phi in self.items:
                coeff = self.emb.embed(phi.apply(A.basis_vector(x)))
                term = A.multiply(coeff, A.basis_vector(i))
                if parity_sign(A.parity(x), A.parity(i)) < 0:
                    term = [-c for c in term]
                acc = vec_add(acc, term)
            if acc != A.basis_vector(x):
                report.record("reconstruction fails on e_%s" % A.labels[x])
        return report


def find_projective_basis(emb: SubalgebraEmbedding):
    """Dual basis for A as a left B-module, generators = the full A-basis.

    Returns a ProjectiveBasis, or None when the defining linear system is
    infeasible -- which certifies that A is not projective over B.
    """
    A, B = emb.A, emb.B
    field = A.field
    index = {}
    for i in range(A.dim):
        di = A.degrees[i]
        for x in range(A.dim):
            want = A.degrees[x] - di
            for j in range(B.dim):
                if B.degrees[j] == want:
                    index[(i, x, j)] = len(index)
    system = EquationSystem(len(index), field)
    embedded_B = [emb.embed(B.basis_vector(bi)) for bi in range(B.dim)]
    for i in range(A.dim):
        gi = A.parity(i)
        di = A.degrees[i]
        for bi in range(B.dim):
            sgn = parity_sign(gi, B.parity(bi))
            db = B.degrees[bi]
            for x in range(A.dim):
                prod = A.multiply(embedded_B[bi], A.basis_vector(x))
                for j in range(B.dim):
                    if B.degrees[j] != db + A.degrees[x] - di:
                        continue
                    coeffs = {}
                    for m, c in enumerate(prod):
                        if c:
                            key = index[(i, m, j)]
                            coeffs[key] = coeffs.get(key, field.zero()) + c
                    for t in range(B.dim):
                        v = B.table[bi][t][j]
                        if v:
                            key = index[(i, x, t)]
                            val = v if sgn > 0 else -v
                            coeffs[key] = coeffs.get(key, field.zero()) - val
                    coeffs = {k: v for k, v in coeffs.items() if v}
                    if coeffs:
                        system.add(coeffs)
    # reconstruction: sum_i (-1)^{|x||x_i|} embed(phi_i(e_x)) e_i = e_x
    for x in range(A.dim):
        px = A.parity(x)
        row_coeffs = [dict() for _ in range(A.dim)]
        for i in range(A.dim):
            sgn = parity_sign(px, A.parity(i))
            for j in range(B.dim):
                if (i, x, j) not in index:
                    continue
                prod = A.multiply(embedded_B[j], A.basis_vector(i))
                for k, c in enumerate(prod):
                    if c:
                        key = index[(i, x, j)]
                        d = row_coeffs[k]
                        d[key] = d.get(key, field.zero()) + (c if sgn > 0 else -c)
        for k in range(A.dim):
            coeffs = {key: v for key, v in row_coeffs[k].items() if v}
            rhs = field.one() if k == x else field.zero()
            if coeffs or rhs:
                system.add(coeffs, rhs)
    sol = system.solve()
    if sol is None:
        return None
    items = []
    for i in range(A.dim):
        cols = [[field.zero()] * B.dim for _ in range(A.dim)]
        nonzero = False
        for x in range(A.dim):
            for j in range(B.dim):
                key = index.get((i, x, j))
                if key is not None and sol[key]:
                    cols[x][j] = sol[key]
                    nonzero = True
        if nonzero:
            phi = GradedLinearMap(A, B, -A.degrees[i], cols)
            items.append((i, phi))
    return ProjectiveBasis(emb, items)


class DualGenerators:
    """Pairs (x_i, y_i) exhibiting the trace as a Frobenius form."""

    def __init__(self, tr, pairs):
        self.tr = tr
        self.pairs = pairs  # list of (x vector, y vector) in A-coordinates


def find_dual_generators(tr: TraceMap, pb: ProjectiveBasis = None):
    """Solve for y_i with (-1)^{pi g_i} beta^{-1}(phi_i(m)) matching
    (-1)^{|y_i||m|} tr(m y_i); returns None if A is not projective over B."""
    emb = tr.emb
    A, B = tr.A, tr.B
    field = A.field
    if pb is None:
        pb = find_projective_basis(emb)
        if pb is None:
            return None
    lam, pi = tr.degree.lam, tr.degree.parity
    beta_inv = tr.beta_inv
    pairs = []
    for i, phi in pb.items:
        gi = A.parity(i)
        y_deg = Degree(tuple(l - m for l, m in zip(lam, A.degrees[i].lam)),
                       pi + gi)
        comp = A.component_indices(y_deg)
        py = y_deg.parity
        system = EquationSystem(len(comp), field)
        for m in range(A.dim):
            target = beta_inv.apply(phi.apply(A.basis_vector(m)))
            s1 = parity_sign(pi, gi)
            sm = parity_sign(py, A.parity(m))
            traces = [tr.mapping.apply(A.multiply(A.basis_vector(m),
                                                  A.basis_vector(t)))
                      for t in comp]
            for j in range(B.dim):
                coeffs = {}
                for ci, tv in enumerate(traces):
                    if tv[j]:
                        coeffs[ci] = tv[j] if sm > 0 else -tv[j]
                rhs = target[j] if s1 > 0 else -target[j]
                if coeffs or rhs:
                    system.add(coeffs, rhs)
        sol = system.solve()
        if sol is None:
            return None
        y = A.zero()
        for ci, t in enumerate(comp):
            y[t] = sol[ci]
        pairs.append((A.basis_vector(i), y))
    return DualGenerators(tr, pairs)


def verify_dual_generators(dg: DualGenerators) -> Report:
    """Both reconstruction identities, on every basis element of A."""
    tr = dg.tr
    A = tr.A
    emb = tr.emb
    pi = tr.degree.parity
    report = Report("dual generators")
    alpha_inv = tr.alpha_inv
    for k in range(A.dim):
        a = A.basis_vector(k)
        pa = A.parity(k)
        acc = A.zero()
        for x, y in dg.pairs:
            coeff = emb.embed(tr.beta.apply(tr.mapping.apply(A.multiply(a, y))))
            term = A.multiply(coeff, x)
            sgn = parity_sign(pi, pa) * parity_sign(pi, A.degree_of(x).parity)
            if sgn < 0:
                term = [-c for c in term]
            acc = vec_add(acc, term)
        if acc != a:
            report.record("left identity fails on e_%s" % A.labels[k])
        acc = A.zero()
        aa = tr.alpha.apply(a)
        for x, y in dg.pairs:
            coeff = emb.embed(tr.mapping.apply(A.multiply(x, aa)))
            acc = vec_add(acc, A.multiply(alpha_inv.apply(y), coeff))
        if acc != a:
            report.record("right identity fails on e_%s" % A.labels[k])
    return report


def induced_trace(pair):
    """Trace for B <= A induced by ground-field traces on both: for the
    Nakayama twists this is tr(a) = sum_b (-1)^{pi*|b|} tr_A(psi_B(b) a) b-dual,
    where pi is the parity of the extension degree.  The Koszul weight on the
    summation index is what makes the result (beta, alpha)-equivariant; dropping
    it breaks left equivariance exactly when pi = 1 and B has odd elements."""
    from .frobenius import nakayama_automorphism, right_dual_basis

    emb, fa_A, fa_B = pair.emb, pair.fa_A, pair.fa_B
    A, B = emb.A, emb.B
    psi_B = nakayama_automorphism(fa_B)
    duals = right_dual_basis(fa_B)
    pi = pair.degree.parity
    cols = []
    for k in range(A.dim):
        out = B.zero()
        for bi in range(B.dim):
            lead = emb.embed(psi_B.apply(B.basis_vector(bi)))
            c = fa_A.trace_scalar(A.multiply(lead, A.basis_vector(k)))
            if c:
                if parity_sign(pi, B.parity(bi)) < 0:
                    c = -c
                out = vec_add(out, vec_scale(c, duals[bi]))
        cols.append(out)
    shift = -pair.degree
    mapping = GradedLinearMap(A, B, shift, cols)
    return TraceMap(emb, mapping, pair.alpha, pair.beta)


def bilinear_form_check(tr: TraceMap) -> Report:
    """Compatibility of the two bimodule pairings built from the trace:
    beta^{-1}(Psi(1)(alpha^{-1}(a1) a2)) = Phi(1)(a1 alpha(a2)), where
    Phi(a) = tr o rho_{alpha(a)} and Psi(a)(x) = beta(tr(a alpha(x)))."""
    A = tr.A
    report = Report("bilinear form compatibility")
    alpha_inv = tr.alpha_inv
    beta_inv = tr.beta_inv
    for i in range(A.dim):
        a1 = A.basis_vector(i)
        for j in range(A.dim):
            a2 = A.basis_vector(j)
            lhs = beta_inv.apply(tr.beta.apply(tr.mapping.apply(
                tr.alpha.apply(A.multiply(alpha_inv.apply(a1), a2)))))
            rhs = tr.mapping.apply(A.multiply(a1, tr.alpha.apply(a2)))
            if lhs != rhs:
                report.record("mismatch at (%s, %s)" % (A.labels[i], A.labels[j]))
    return report


class NakayamaIsomorphism:
    """psi: C_A(B) -> C_A(alpha(B)) with tr(c x) = (-1)^{|x||c|} tr(x psi(c))."""

    def __init__(self, tr, source_basis, target_basis, matrix):
        self.tr = tr
        self.source_basis = source_basis  # vectors in A spanning C_A(B)
        self.target_basis = target_basis  # vectors in A spanning C_A(alpha(B))
        self.matrix = matrix              # target coords of each source vector

    def apply(self, c):
        """Image of an element of C_A(B) given in A-coordinates."""
        from .linalg import solve

        A = self.tr.A
        span = Matrix.from_columns(A.field, self.source_basis, A.dim)
        coords = solve(span, c)
        if coords is None:
            raise ValueError("element is not in the source centralizer")
        out = A.zero()
        for ci, w in enumerate(coords):
            if w:
                img = self.matrix.column(ci)
                for ti, v in enumerate(img):
                    if v:
                        out = vec_add(out, vec_scale(w * v, self.target_basis[ti]))
        return out

    def is_bijective(self):
        return self.matrix.rows == self.matrix.cols and is_invertible(self.matrix)


def nakayama_isomorphism(tr: TraceMap) -> NakayamaIsomorphism:
    """Solve the defining identity degreewise over the two centralizers."""
    from .linalg import solve as _solve

    emb = tr.emb
    A = tr.A
    field = A.field
    src = centralizer(emb)
    tgt = centralizer(emb, twist=tr.alpha)
    cols = []
    for c in src:
        pc = A.degree_of(c).parity
        system = EquationSystem(len(tgt), field)
        for x in range(A.dim):
            lhs = tr.mapping.apply(A.multiply(c, A.basis_vector(x)))
            sx = parity_sign(A.parity(x), pc)
            rvals = [tr.mapping.apply(A.multiply(A.basis_vector(x), z))
                     for z in tgt]
            for j in range(tr.B.dim):
                coeffs = {}
                for ti, rv in enumerate(rvals):
                    if rv[j]:
                        coeffs[ti] = rv[j] if sx > 0 else -rv[j]
                if coeffs or lhs[j]:
                    system.add(coeffs, lhs[j])
        sol = system.solve()
        if sol is None:
            raise ValueError("Nakayama identity has no solution; "
                             "trace is not a valid left trace")
        cols.append(sol)
    matrix = Matrix.from_columns(field, cols, len(tgt))
    return NakayamaIsomorphism(tr, src, tgt, matrix)


def nakayama_explicit(tr: TraceMap, dg: DualGenerators):
    """Closed forms from dual generators:

    psi(a)      = sum_i (-1)^{|a||x_i|} y_i alpha(tr(a x_i))
    psi_inv(a)  = sum_i (-1)^{(|a|+pi)|x_i|} beta(tr(y_i a)) x_i
    """
    A = tr.A
    emb = tr.emb
    pi = tr.degree.parity

    def psi(a):
        pa = A.degree_of(a).parity
        out = A.zero()
        for x, y in dg.pairs:
            px = A.degree_of(x).parity
            coeff = tr.alpha.apply(emb.embed(tr.mapping.apply(A.multiply(a, x))))
            term = A.multiply(y, coeff)
            if parity_sign(pa, px) < 0:
                term = [-c for c in term]
            out = vec_add(out, term)
        return out

    def psi_inv(a):
        pa = A.degree_of(a).parity
        out = A.zero()
        for x, y in dg.pairs:
            px = A.degree_of(x).parity
            coeff = emb.embed(tr.beta.apply(tr.mapping.apply(A.multiply(y, a))))
            term = A.multiply(coeff, x)
            if parity_sign((pa + pi) % 2, px) < 0:
                term = [-c for c in term]
            out = vec_add(out, term)
        return out

    return psi, psi_inv


def mutated_trace(tr: TraceMap, a) -> TraceMap:
    """tr o rho_a for an even element a: x |-> tr(x a); same degree and twists
    when a is central for alpha(B) and of degree (0, 0)."""
    A = tr.A
    cols = [tr.mapping.apply(A.multiply(A.basis_vector(m), a))
            for m in range(A.dim)]
    mapping = GradedLinearMap(A, tr.B, tr.mapping.shift, cols)
    return TraceMap(tr.emb, mapping, tr.alpha, tr.beta)


def trace_uniqueness_witness(tr: TraceMap, tr2: TraceMap):
    """The unique a in C_A(alpha(B))_{(0,0)} with tr2 = tr o rho_a, or None.

    Valid traces with the same twists and degree always differ by such an a;
    the witness is invertible exactly when tr2 is itself nondegenerate.
    """
    if tr2.degree != tr.degree:
        return None
    A = tr.A
    field = A.field
    cent = [z for z in centralizer(tr.emb, twist=tr.alpha)
            if A.degree_of(z).is_zero()]
    if not cent:
        return None
    system = EquationSystem(len(cent), field)
    prods = [[tr.mapping.apply(A.multiply(A.basis_vector(m), z)) for z in cent]
             for m in range(A.dim)]
    for m in range(A.dim):
        want = tr2.mapping.apply(A.basis_vector(m))
        for j in range(tr.B.dim):
            coeffs = {ci: prods[m][ci][j] for ci in range(len(cent))
                      if prods[m][ci][j]}
            if coeffs or want[j]:
                system.add(coeffs, want[j])
    sol = system.solve()
    if sol is None:
        return None
    out = A.zero()
    for ci, z in enumerate(cent):
        if sol[ci]:
            out = vec_add(out, vec_scale(sol[ci], z))
    return out


def data_uniqueness_witness(emb, alpha, beta, degree, alpha2, beta2, degree2,
                            cap=None):
    """Invertible mu in the (degree2 - degree)-component of A intertwining the
    two twist pairs: mu sigma(b) = varsigma(b) mu for all b in B, where
    sigma = alpha2^{-1} alpha and varsigma = beta2^{-1} beta.  Returns None
    when no witness exists (or none is found within the candidate cap)."""
    A, B = emb.A, emb.B
    field = A.field
    if cap is None:
        cap = candidate_cap()
    sigma = alpha2.inverse().compose(alpha)
    varsigma = beta2.inverse().compose(beta)
    target = degree2 - degree
    comp = A.component_indices(target)
    if not comp:
        return None
    lifted = [(sigma.apply(emb.embed(B.basis_vector(bi))),
               emb.embed(varsigma.apply(B.basis_vector(bi))))
              for bi in range(B.dim)]

    def satisfies(mu):
        return all(A.multiply(mu, sb) == A.multiply(vb, mu)
                   for sb, vb in lifted)

    def good(mu):
        return (not vec_is_zero(mu) and satisfies(mu)
                and is_invertible(A.left_mult_matrix(mu)))

    system = EquationSystem(len(comp), field)
    for sb, vb in lifted:
        diffs = [vec_sub(A.multiply(A.basis_vector(t), sb),
                         A.multiply(vb, A.basis_vector(t)))
                 for t in comp]
        for k in range(A.dim):
            coeffs = {ci: d[k] for ci, d in enumerate(diffs) if d[k]}
            if coeffs:
                system.add(coeffs)
    kernel = system.kernel_basis()
    if not kernel:
        return None

    def unflatten(v):
        mu = A.zero()
        for ci, t in enumerate(comp):
            mu[t] = v[ci]
        return mu

    candidates = []
    if target.is_zero():
        candidates.append(A.one())
    for t in sorted(comp, reverse=True):
        candidates.append(A.basis_vector(t))
    solutions = [unflatten(v) for v in kernel]
    candidates.extend(solutions)
    for s, t in itertools.combinations(range(len(solutions)), 2):
        candidates.append(vec_add(solutions[s], solutions[t]))
    tried = 0
    for mu in candidates:
        if tried >= cap:
            break
        tried += 1
        if good(mu):
            return mu
    return None


class TwistedFrobeniusResult:
    """Outcome of the full existence pipeline."""

    def __init__(self, status, stage, trace=None, dual_generators=None,
                 details=None):
        self.status = status  # "certified" | "refuted" | "inconclusive"
        self.stage = stage
        self.trace = trace
        self.dual_generators = dual_generators
        self.details = details or []

    def __bool__(self):
        return self.status == "certified"

    def summary(self):
        lines = ["%s (stage: %s)" % (self.status, self.stage)]
        lines += ["  " + d for d in self.details]
        return "\n".join(lines)


def bimodule_map_space(emb, alpha, beta, degree):
    """Echelon basis of homogeneous maps A -> B of degree (-lam; pi) with the
    two-sided trace equivariance, as flattened entry tables."""
    A, B = emb.A, emb.B
    field = A.field
    dimB = B.dim
    shift = -degree
    pi = degree.parity
    support = set()
    for x in range(A.dim):
        want = A.degrees[x] + shift
        for j in range(dimB):
            if B.degrees[j] == want:
                support.add(_entry(x, j, dimB))
    if not support:
        return []
    system = EquationSystem(A.dim * dimB, field)
    for key in range(A.dim * dimB):
        if key not in support:
            system.add({key: field.one()})
    for bi in range(B.dim):
        lb = emb.embed(beta.apply(B.basis_vector(bi)))
        rb = alpha.apply(emb.embed(B.basis_vector(bi)))
        sgn = parity_sign(pi, B.parity(bi))
        for x in range(A.dim):
            lprod = A.multiply(lb, A.basis_vector(x))
            rprod = A.multiply(A.basis_vector(x), rb)
            for j in range(dimB):
                coeffs = {}
                for m, c in enumerate(lprod):
                    if c:
                        key = _entry(m, j, dimB)
                        coeffs[key] = coeffs.get(key, field.zero()) + c
                for i in range(dimB):
                    t = B.table[bi][i][j]
                    if t:
                        key = _entry(x, i, dimB)
                        val = t if sgn > 0 else -t
                        coeffs[key] = coeffs.get(key, field.zero()) - val
                coeffs = {k: v for k, v in coeffs.items() if v}
                if coeffs:
                    system.add(coeffs)
                coeffs = {}
                for m, c in enumerate(rprod):
                    if c:
                        key = _entry(m, j, dimB)
                        coeffs[key] = coeffs.get(key, field.zero()) + c
                for i in range(dimB):
                    t = B.table[i][bi][j]
                    if t:
                        key = _entry(x, i, dimB)
                        coeffs[key] = coeffs.get(key, field.zero()) - t
                coeffs = {k: v for k, v in coeffs.items() if v}
                if coeffs:
                    system.add(coeffs)
    return system.kernel_basis()


def _trace_from_table(emb, alpha, beta, shift, flat):
    A, B = emb.A, emb.B
    cols = [[flat[_entry(x, j, B.dim)] for j in range(B.dim)]
            for x in range(A.dim)]
    return TraceMap(emb, GradedLinearMap(A, B, shift, cols), alpha, beta)


def is_twisted_frobenius(emb, alpha, beta, cap=None) -> TwistedFrobeniusResult:
    """Decide whether B <= A carries a (beta, alpha)-twisted Frobenius
    structure of some degree, by a deterministic candidate scan.

    Refutations are certified (failed embedding axioms, non-projectivity, or
    empty equivariant-map spaces); a scan that exhausts the candidate cap
    without a valid trace reports "inconclusive".
    """
    A, B = emb.A, emb.B
    if cap is None:
        cap = candidate_cap()
    rep = emb.validate()
    if not rep:
        return TwistedFrobeniusResult("refuted", "embedding",
                                      details=rep.violations)
    pb = find_projective_basis(emb)
    if pb is None:
        return TwistedFrobeniusResult(
            "refuted", "projectivity",
            details=["A admits no dual basis over B, hence is not projective"])
    degrees = []
    for x in range(A.dim):
        for j in range(B.dim):
            d = A.degrees[x] - B.degrees[j]
            if d not in degrees:
                degrees.append(d)
    degrees.sort(key=lambda d: (d.lam, d.parity))
    any_space = False
    for degree in degrees:
        space = bimodule_map_space(emb, alpha, beta, degree)
        if not space:
            continue
        any_space = True
        candidates = list(space)
        for s, t in itertools.combinations(range(len(space)), 2):
            candidates.append(vec_add(space[s], space[t]))
        tried = 0
        for flat in candidates:
            if tried >= cap:
                break
            tried += 1
            tr = _trace_from_table(emb, alpha, beta, -degree, flat)
            if not check_left_trace(tr):
                continue
            dg = find_dual_generators(tr, pb)
            if dg is None or not verify_dual_generators(dg):
                continue
            return TwistedFrobeniusResult(
                "certified", "trace-search", trace=tr, dual_generators=dg,
                details=["degree %r" % (degree,)])
    if not any_space:
        return TwistedFrobeniusResult(
            "refuted", "trace-space",
            details=["no nonzero equivariant maps A -> B for any degree"])
    return TwistedFrobeniusResult(
        "inconclusive", "trace-search",
        details=["candidate cap %d exhausted without a valid trace" % cap])
