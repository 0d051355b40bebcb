"""Unit and counit for the induction/restriction adjunction attached to a
twisted trace, and the two triangle identities.

Both tensor products are modelled inside the ambient space A (x) A (indices
flattened as p * dim + q) and cut down by the balanced relations:

  T1 = A (x)_B A':   (x b) (x) m  ~  (-1)^{pi |b|} x (x) (beta(b) m)
  T2 = A' (x)_A A:   (a1 alpha(a)) (x) a2  ~  a1 (x) (a a2)

where A' carries the shifted, twisted actions of the trace.  Elements of a
quotient are ambient vectors supported on the free coordinates of the reduced
relation system.
"""

from .gsalg import parity_sign, vec_add, vec_scale
from .linalg import sparse_rref


class BalancedTensor:
    """Quotient of A (x) A by a list of relation vectors."""

    def __init__(self, A, relations):
        self.A = A
        self.ambient = A.dim * A.dim
        reduced, pivots = sparse_rref(relations, self.ambient, A.field)
        self.reduced = reduced
        self.pivots = pivots
        pivot_set = set(pivots)
        self.free = [c for c in range(self.ambient) if c not in pivot_set]

    @property
    def dim(self):
        return len(self.free)

    def tensor(self, u, v):
        """Ambient vector of u (x) v."""
        A = self.A
        out = [A.field.zero()] * self.ambient
        for p, up in enumerate(u):
            if not up:
                continue
            base = p * A.dim
            for q, vq in enumerate(v):
                if vq:
                    out[base + q] = out[base + q] + up * vq
        return out

    def project(self, w):
        """Canonical representative: eliminate every pivot coordinate."""
        w = list(w)
        for row, piv in zip(self.reduced, self.pivots):
            c = w[piv]
            if c:
                for col, val in row.items():
                    w[col] = w[col] - c * val
        return w


def build_t1(tr):
    """A (x)_B (shifted twisted A), the target of the adjunction unit."""
    A, B = tr.A, tr.B
    emb = tr.emb
    pi = tr.degree.parity
    relations = []
    for bi in range(B.dim):
        xb_cols = [A.multiply(A.basis_vector(x), emb.embed(B.basis_vector(bi)))
                   for x in range(A.dim)]
        bm = emb.embed(tr.beta.apply(B.basis_vector(bi)))
        bm_cols = [A.multiply(bm, A.basis_vector(m)) for m in range(A.dim)]
        sgn = parity_sign(pi, B.parity(bi))
        for x in range(A.dim):
            for m in range(A.dim):
                row = {}
                for k, c in enumerate(xb_cols[x]):
                    if c:
                        row[k * A.dim + m] = row.get(k * A.dim + m, A.field.zero()) + c
                for l, c in enumerate(bm_cols[m]):
                    if c:
                        key = x * A.dim + l
                        val = c if sgn > 0 else -c
                        row[key] = row.get(key, A.field.zero()) - val
                row = {k: v for k, v in row.items() if v}
                if row:
                    relations.append(row)
    return BalancedTensor(A, relations)


def build_t2(tr):
    """(shifted twisted A) (x)_A A, the source of the adjunction counit."""
    A = tr.A
    relations = []
    for a in range(A.dim):
        aa = tr.alpha.apply(A.basis_vector(a))
        left_cols = [A.multiply(A.basis_vector(p), aa) for p in range(A.dim)]
        right_cols = [A.multiply(A.basis_vector(a), A.basis_vector(q))
                      for q in range(A.dim)]
        for p in range(A.dim):
            for q in range(A.dim):
                row = {}
                for k, c in enumerate(left_cols[p]):
                    if c:
                        row[k * A.dim + q] = row.get(k * A.dim + q, A.field.zero()) + c
                for l, c in enumerate(right_cols[q]):
                    if c:
                        key = p * A.dim + l
                        row[key] = row.get(key, A.field.zero()) - c
                row = {k: v for k, v in row.items() if v}
                if row:
                    relations.append(row)
    return BalancedTensor(A, relations)


def unit_vector(tr, dg, t1, a):
    """eta(a) = sum_i (a alpha^{-1}(y_i)) (x) x_i, projected into T1."""
    A = tr.A
    out = [A.field.zero()] * t1.ambient
    for x, y in dg.pairs:
        left = A.multiply(a, tr.alpha_inv.apply(y))
        out = vec_add(out, t1.tensor(left, x))
    return t1.project(out)


def counit_value(tr, w):
    """epsilon(a1 (x) a2) = tr(a1 alpha(a2)), extended to ambient vectors."""
    A, B = tr.A, tr.B
    out = B.zero()
    for idx, c in enumerate(w):
        if not c:
            continue
        p, q = divmod(idx, A.dim)
        val = tr.mapping.apply(A.multiply(A.basis_vector(p),
                                          tr.alpha.columns[q]))
        out = vec_add(out, vec_scale(c, val))
    return out


def check_unit(tr, dg, t1):
    """eta is a bimodule map: a' eta(1) and eta(1) a' agree in T1 (right
    action on the second factor twisted by alpha)."""
    from .gsalg import Report

    A = tr.A
    report = Report("adjunction unit")
    for a in range(A.dim):
        ea = A.basis_vector(a)
        left_act = [A.field.zero()] * t1.ambient
        for x, y in dg.pairs:
            left_act = vec_add(left_act,
                               t1.tensor(A.multiply(ea, tr.alpha_inv.apply(y)), x))
        right_act = [A.field.zero()] * t1.ambient
        aa = tr.alpha.apply(ea)
        for x, y in dg.pairs:
            right_act = vec_add(right_act,
                                t1.tensor(tr.alpha_inv.apply(y),
                                          A.multiply(x, aa)))
        if t1.project(left_act) != t1.project(right_act):
            report.record("a eta(1) != eta(1) a for a = e_%s" % A.labels[a])
    return report


def check_counit(tr, t2):
    """epsilon kills the balanced relations and is (B, B)-equivariant."""
    from .gsalg import Report

    A, B = tr.A, tr.B
    emb = tr.emb
    pi = tr.degree.parity
    report = Report("adjunction counit")
    for p in range(A.dim):
        for q in range(A.dim):
            w = [A.field.zero()] * t2.ambient
            w[p * A.dim + q] = A.field.one()
            if counit_value(tr, t2.project(w)) != counit_value(tr, w):
                report.record("not constant on the class of (%s, %s)"
                              % (A.labels[p], A.labels[q]))
    for bi in range(B.dim):
        bb = emb.embed(tr.beta.apply(B.basis_vector(bi)))
        plain = emb.embed(B.basis_vector(bi))
        sgn = parity_sign(pi, B.parity(bi))
        for p in range(A.dim):
            for q in range(A.dim):
                w = [A.field.zero()] * t2.ambient
                w[p * A.dim + q] = A.field.one()
                lhs = counit_value(tr, t2.tensor(A.multiply(bb, A.basis_vector(p)),
                                                 A.basis_vector(q)))
                if sgn < 0:
                    lhs = [-c for c in lhs]
                rhs = B.multiply(B.basis_vector(bi), counit_value(tr, w))
                if lhs != rhs:
                    report.record("left equivariance fails at (b=%s, %s, %s)"
                                  % (B.labels[bi], A.labels[p], A.labels[q]))
                lhs = counit_value(tr, t2.tensor(A.basis_vector(p),
                                                 A.multiply(A.basis_vector(q), plain)))
                rhs = B.multiply(counit_value(tr, w), B.basis_vector(bi))
                if lhs != rhs:
                    report.record("right equivariance fails at (b=%s, %s, %s)"
                                  % (B.labels[bi], A.labels[p], A.labels[q]))
    return report


def _triangle_one_step(tr, dg, p, q):
    """Image of the class of e_p (x) e_q under the T2-side collapse map."""
    A = tr.A
    emb = tr.emb
    pi = tr.degree.parity
    z = A.multiply(A.basis_vector(p), tr.alpha.columns[q])
    pz = (A.parity(p) + A.parity(q)) % 2
    out = A.zero()
    for x, y in dg.pairs:
        px = A.degree_of(x).parity
        coeff = emb.embed(tr.beta.apply(tr.mapping.apply(A.multiply(z, y))))
        term = A.multiply(coeff, x)
        if parity_sign(pi, (pz + px) % 2) < 0:
            term = [-c for c in term]
        out = vec_add(out, term)
    return out


def check_triangle_identities(tr, dg, t1=None, t2=None):
    """Both adjunction triangles, computed through the quotient projections.

    Triangle 1: send a to the class of a (x) 1 in T2, then collapse with the
    dual generators; the composite must be the identity of A.  Triangle 2:
    pair eta(1) in T1 against the counit; again the identity of A.
    """
    from .gsalg import Report

    A = tr.A
    emb = tr.emb
    report = Report("triangle identities")
    if t1 is None:
        t1 = build_t1(tr)
    if t2 is None:
        t2 = build_t2(tr)
    step = {}
    for p in range(A.dim):
        for q in range(A.dim):
            step[(p, q)] = _triangle_one_step(tr, dg, p, q)
    # the collapse map must be constant on balanced classes
    for row in t2.reduced:
        acc = A.zero()
        for idx, c in row.items():
            acc = vec_add(acc, vec_scale(c, step[divmod(idx, A.dim)]))
        if any(acc):
            report.record("triangle-1 collapse is not balanced")
            break
    for a in range(A.dim):
        w = t2.project(t2.tensor(A.basis_vector(a), A.one()))
        out = A.zero()
        for idx, c in enumerate(w):
            if c:
                out = vec_add(out, vec_scale(c, step[divmod(idx, A.dim)]))
        if out != A.basis_vector(a):
            report.record("triangle 1 fails on e_%s" % A.labels[a])
    v = unit_vector(tr, dg, t1, A.one())
    for a in range(A.dim):
        out = A.zero()
        for idx, c in enumerate(v):
            if not c:
                continue
            p, q = divmod(idx, A.dim)
            val = counit_value(tr, t2.project(
                t2.tensor(A.basis_vector(q), A.basis_vector(a))))
            out = vec_add(out, vec_scale(
                c, A.multiply(A.basis_vector(p), emb.embed(val))))
        if out != A.basis_vector(a):
            report.record("triangle 2 fails on e_%s" % A.labels[a])
    return report
