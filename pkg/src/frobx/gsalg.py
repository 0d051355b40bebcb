"""Graded superalgebra kernel: Z^r x Z2 degrees, structure constants, Koszul
sign conventions, morphisms and centralizers.

Elements are coordinate vectors (lists of field scalars) over the algebra's
fixed homogeneous basis.  All sign bookkeeping flows through parity_sign() and
the shift stored on each GradedLinearMap; no signs are hand-coded per example.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import check_same_field
from .linalg import EquationSystem, Matrix, invert, kernel_basis


@dataclass(frozen=True)
class Degree:
    """An element of Z^r x Z2: free-abelian part plus parity."""

    lam: tuple
    parity: int

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        object.__setattr__(self, "parity", int(self.parity) % 2)

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank, 0)

    @property
    def rank(self):
        return len(self.lam)

    def __add__(self, other):
        if self.rank != other.rank:
            raise ValueError("grading rank mismatch")
        return Degree(tuple(a + b for a, b in zip(self.lam, other.lam)),
                      self.parity + other.parity)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Degree(tuple(-a for a in self.lam), self.parity)

    def is_zero(self):
        return self.parity == 0 and all(a == 0 for a in self.lam)

    def __repr__(self):
        return "(%s; %d)" % (",".join(str(a) for a in self.lam), self.parity)


def parity_sign(p1: int, p2: int) -> int:
    """Koszul sign (-1)^{p1*p2} as +-1."""
    return -1 if (p1 % 2) and (p2 % 2) else 1


def zero_vector(field, n):
    return [field.zero()] * n


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * x for x in v]


def vec_is_zero(v):
    return not any(v)


class NonHomogeneousError(ValueError):
    pass


class GradedSuperAlgebra:
    """Finite-dimensional graded superalgebra given by structure constants.

    table[i][j] is the coordinate vector of e_i * e_j; unit is the coordinate
    vector of the identity element.
    """

    def __init__(self, labels, degrees, table, unit, field, name="A"):
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.table = table
        self.unit = list(unit)
        self.field = field
        self.name = name
        n = len(self.labels)
        if len(self.degrees) != n or len(self.unit) != n:
            raise ValueError("inconsistent basis data")
        ranks = {d.rank for d in self.degrees}
        if len(ranks) > 1:
            raise ValueError("mixed grading ranks")
        self.rank = ranks.pop() if ranks else 1
        if len(set(self.labels)) != n:
            raise ValueError("duplicate basis labels")

    @property
    def dim(self):
        return len(self.labels)

    def zero(self):
        return zero_vector(self.field, self.dim)

    def one(self):
        return list(self.unit)

    def basis_vector(self, i):
        v = self.zero()
        v[i] = self.field.one()
        return v

    def element(self, label_coeffs):
        """Element from {label: coefficient}."""
        v = self.zero()
        for label, c in label_coeffs.items():
            v[self.labels.index(label)] = c
        return v

    def parity(self, i):
        return self.degrees[i].parity

    def multiply(self, x, y):
        out = self.zero()
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, t in enumerate(row[j]):
                    if t:
                        out[k] = out[k] + c * t
        return out

    def product_all(self, *elts):
        acc = elts[0]
        for e in elts[1:]:
            acc = self.multiply(acc, e)
        return acc

    def homogeneous_components(self, x):
        """Decompose into {Degree: vector}, dropping zero components."""
        comps = {}
        for i, xi in enumerate(x):
            if xi:
                d = self.degrees[i]
                if d not in comps:
                    comps[d] = self.zero()
                comps[d][i] = xi
        return comps

    def degree_of(self, x):
        """Degree of a homogeneous element (zero element gets degree 0)."""
        comps = self.homogeneous_components(x)
        if len(comps) > 1:
            raise NonHomogeneousError("element is not homogeneous: %r" % (x,))
        if not comps:
            return Degree.zero(self.rank)
        return next(iter(comps))

    def parity_of(self, x):
        return self.degree_of(x).parity

    def component_indices(self, degree):
        return [i for i, d in enumerate(self.degrees) if d == degree]

    def degrees_present(self):
        seen = []
        for d in self.degrees:
            if d not in seen:
                seen.append(d)
        return seen

    def left_mult_matrix(self, a):
        """Matrix of m -> a*m in the fixed basis."""
        cols = [self.multiply(a, self.basis_vector(m)) for m in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_mult_matrix(self, a):
        cols = [self.multiply(self.basis_vector(m), a) for m in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)


def ground_field_algebra(field, rank, name="F"):
    """The ground field as a one-dimensional algebra in degree (0, 0)."""
    one = field.one()
    return GradedSuperAlgebra(
        ["1"], [Degree.zero(rank)], [[[one]]], [one], field, name=name)


class GradedLinearMap:
    """Linear map between algebras' underlying spaces with a degree shift.

    columns[i] is the target-coordinate vector of the i-th source basis
    element; a map of shift (mu, gamma) sends degree-d vectors into the
    (d + shift)-component.
    """

    def __init__(self, source, target, shift, columns):
        check_same_field(source.field, target.field)
        self.source = source
        self.target = target
        self.shift = shift
        self.columns = [list(c) for c in columns]
        if len(self.columns) != source.dim:
            raise ValueError("need one column per source basis element")
        for c in self.columns:
            if len(c) != target.dim:
                raise ValueError("column length mismatch")

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, Degree.zero(algebra.rank),
                   [algebra.basis_vector(i) for i in range(algebra.dim)])

    @classmethod
    def zero(cls, source, target, shift):
        return cls(source, target, shift, [target.zero()] * source.dim)

    def apply(self, x):
        out = self.target.zero()
        for i, xi in enumerate(x):
            if not xi:
                continue
            for k, c in enumerate(self.columns[i]):
                if c:
                    out[k] = out[k] + xi * c
        return out

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target.dim != self.source.dim:
            raise ValueError("composition mismatch")
        cols = [self.apply(c) for c in other.columns]
        return GradedLinearMap(other.source, self.target, self.shift + other.shift, cols)

    def as_matrix(self):
        return Matrix.from_columns(self.target.field, self.columns, self.target.dim)

    def inverse(self):
        inv = invert(self.as_matrix())
        if inv is None:
            return None
        return GradedLinearMap(self.target, self.source, -self.shift, inv.columns())

    def respects_grading(self):
        """Each column supported in degree (source degree + shift)."""
        for i, col in enumerate(self.columns):
            want = self.source.degrees[i] + self.shift
            for k, c in enumerate(col):
                if c and self.target.degrees[k] != want:
                    return False
        return True

    def __eq__(self, other):
        return (isinstance(other, GradedLinearMap)
                and self.shift == other.shift and self.columns == other.columns)


@dataclass
class Report:
    """Outcome of a structural check; falsy iff any violation was recorded."""

    title: str
    violations: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    def record(self, message):
        self.violations.append(message)

    def note(self, message):
        self.notes.append(message)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def summary(self):
        lines = ["%s: %s" % (self.title, "ok" if self.ok else "FAILED")]
        lines += ["  violation: %s" % v for v in self.violations]
        lines += ["  note: %s" % n for n in self.notes]
        return "\n".join(lines)


def validate_algebra(A: GradedSuperAlgebra) -> Report:
    """Grading compatibility, associativity on basis triples, homogeneous unit."""
    report = Report("algebra %s" % A.name)
    for i in range(A.dim):
        for j in range(A.dim):
            dij = A.degrees[i] + A.degrees[j]
            for k, c in enumerate(A.table[i][j]):
                if c and A.degrees[k] != dij:
                    report.record(
                        "grading: e_%s*e_%s hits e_%s of degree %r, expected %r"
                        % (A.labels[i], A.labels[j], A.labels[k], A.degrees[k], dij))
    for i in range(A.dim):
        ei = A.basis_vector(i)
        for j in range(A.dim):
            eij = A.table[i][j]
            for k in range(A.dim):
                left = A.multiply(eij, A.basis_vector(k))
                right = A.multiply(ei, A.table[j][k])
                if left != right:
                    report.record("associativity fails on (%s, %s, %s)"
                                  % (A.labels[i], A.labels[j], A.labels[k]))
    try:
        du = A.degree_of(A.unit)
        if not du.is_zero():
            report.record("unit is homogeneous of degree %r, not (0,0)" % du)
    except NonHomogeneousError:
        report.record("unit is not homogeneous")
    for i in range(A.dim):
        ei = A.basis_vector(i)
        if A.multiply(A.unit, ei) != ei or A.multiply(ei, A.unit) != ei:
            report.record("unit fails on e_%s" % A.labels[i])
    return report


def left_mult_map(A, a) -> GradedLinearMap:
    """The operator m -> a*m for homogeneous a, as a map of shift deg(a)."""
    shift = A.degree_of(a)
    cols = [A.multiply(a, A.basis_vector(m)) for m in range(A.dim)]
    return GradedLinearMap(A, A, shift, cols)


def signed_right_mult(A, a) -> GradedLinearMap:
    """The operator m -> (-1)^{|a||m|} m*a for homogeneous a."""
    shift = A.degree_of(a)
    pa = shift.parity
    cols = []
    for m in range(A.dim):
        col = A.multiply(A.basis_vector(m), a)
        if parity_sign(pa, A.parity(m)) < 0:
            col = [-c for c in col]
        cols.append(col)
    return GradedLinearMap(A, A, shift, cols)


def signed_right_mult_general(A, a):
    """Sum of signed_right_mult over homogeneous components; plain Matrix."""
    total = Matrix.zeros(A.field, A.dim, A.dim)
    for comp in A.homogeneous_components(a).values():
        m = signed_right_mult(A, comp).as_matrix()
        total = Matrix(A.field, [vec_add(r, s) for r, s in zip(total.data, m.data)])
    return total


def check_automorphism(A, f: GradedLinearMap) -> Report:
    """Graded superring automorphism test: bijective, unital, multiplicative,
    degree-preserving."""
    if not f.shift.is_zero():
        raise ValueError("automorphism candidate must have shift (0,0)")
    report = Report("automorphism on %s" % A.name)
    if not f.respects_grading():
        report.record("not degree-preserving")
    if f.inverse() is None:
        report.record("not bijective")
    if f.apply(A.unit) != A.unit:
        report.record("does not fix the unit")
    for i in range(A.dim):
        fi = f.columns[i]
        for j in range(A.dim):
            if f.apply(A.table[i][j]) != A.multiply(fi, f.columns[j]):
                report.record("not multiplicative on (%s, %s)"
                              % (A.labels[i], A.labels[j]))
    return report


class SubalgebraEmbedding:
    """A pair B <= A with a degree-preserving inclusion in fixed coordinates."""

    def __init__(self, A, B, inclusion: GradedLinearMap):
        if inclusion.source is not B or inclusion.target is not A:
            raise ValueError("inclusion must map B into A")
        if not inclusion.shift.is_zero():
            raise ValueError("inclusion must have shift (0,0)")
        self.A = A
        self.B = B
        self.inclusion = inclusion

    def embed(self, b):
        return self.inclusion.apply(b)

    def validate(self) -> Report:
        report = Report("embedding %s <= %s" % (self.B.name, self.A.name))
        if not self.inclusion.respects_grading():
            report.record("inclusion is not degree-preserving")
        if kernel_basis(self.inclusion.as_matrix()):
            report.record("inclusion is not injective")
        if self.embed(self.B.unit) != self.A.unit:
            report.record("inclusion does not preserve the unit")
        for i in range(self.B.dim):
            for j in range(self.B.dim):
                lhs = self.embed(self.B.table[i][j])
                rhs = self.A.multiply(self.embed(self.B.basis_vector(i)),
                                      self.embed(self.B.basis_vector(j)))
                if lhs != rhs:
                    report.record("inclusion not multiplicative on (%s, %s)"
                                  % (self.B.labels[i], self.B.labels[j]))
        return report


def trivial_embedding(A) -> SubalgebraEmbedding:
    return SubalgebraEmbedding(A, A, GradedLinearMap.identity(A))


def centralizer(emb: SubalgebraEmbedding, twist: GradedLinearMap = None):
    """Homogeneous basis of the super-centralizer C_A(tau(B)).

    twist, when given, is an automorphism of A applied to the embedded
    subalgebra (used for the centralizer of alpha(B)).  Output vectors are
    homogeneous and canonicalized by echelon form.
    """
    A = emb.A
    system = EquationSystem(A.dim, A.field)
    rows = {}
    for bi in range(emb.B.dim):
        tb = emb.embed(emb.B.basis_vector(bi))
        if twist is not None:
            tb = twist.apply(tb)
        pb = emb.B.parity(bi)
        cols = []
        for m in range(A.dim):
            em = A.basis_vector(m)
            diff = A.multiply(em, tb)
            back = A.multiply(tb, em)
            sgn = parity_sign(A.parity(m), pb)
            col = [d - (b if sgn > 0 else -b) for d, b in zip(diff, back)]
            cols.append(col)
        for k in range(A.dim):
            coeffs = {m: cols[m][k] for m in range(A.dim) if cols[m][k]}
            if coeffs:
                key = (bi, k)
                rows[key] = coeffs
    for coeffs in rows.values():
        system.add(coeffs)
    return system.kernel_basis()


def twisted_equivariance_check(f: GradedLinearMap, left_twist, right_twist,
                               emb: SubalgebraEmbedding, shift_target: Degree) -> Report:
    """Bimodule-homomorphism test for f: A -> B into the shifted codomain.

    Verifies f(beta(b) * x * alpha(b')) = (-1)^{gamma |b|} b f(x) b' over all
    basis pairs of B and basis elements of A, with gamma the parity of
    shift_target.  left_twist acts on B (or on A, applied after embedding);
    right_twist likewise.
    """
    A, B = emb.A, emb.B
    if f.shift != shift_target:
        raise ValueError("map shift %r does not match target %r"
                         % (f.shift, shift_target))

    def lift(twist, b_vec):
        if twist is None:
            return emb.embed(b_vec)
        if twist.source is B:
            return emb.embed(twist.apply(b_vec))
        return twist.apply(emb.embed(b_vec))

    gamma = shift_target.parity
    report = Report("bimodule equivariance")
    for bi in range(B.dim):
        lb = lift(left_twist, B.basis_vector(bi))
        sgn = parity_sign(gamma, B.parity(bi))
        for bj in range(B.dim):
            rb = lift(right_twist, B.basis_vector(bj))
            for x in range(A.dim):
                mid = A.multiply(A.multiply(lb, A.basis_vector(x)), rb)
                lhs = f.apply(mid)
                rhs = B.multiply(B.multiply(B.basis_vector(bi), f.apply(A.basis_vector(x))),
                                 B.basis_vector(bj))
                if sgn < 0:
                    rhs = [-c for c in rhs]
                if lhs != rhs:
                    report.record("equivariance fails at (b=%s, x=%s, b'=%s)"
                                  % (B.labels[bi], A.labels[x], B.labels[bj]))
    return report


class InvertiblesReport:
    """Result of the homogeneous-units-are-scalars decision."""

    def __init__(self, result, certified, details):
        self.result = result
        self.certified = certified
        self.details = details

    def __bool__(self):
        return self.result


def homogeneous_invertibles_are_scalars(A) -> InvertiblesReport:
    """True iff every invertible homogeneous element is a scalar multiple of 1.

    Components of nonzero Z^r-degree are certified non-invertible by graded
    nilpotence.  Zero-Z^r-degree odd components are decided by the generic
    determinant of the left-multiplication pencil; the (0,0) component by
    dimension count (over Q) or exhaustive scan (small prime fields).
    """
    details = []
    certified = True
    zero_deg = Degree.zero(A.rank)
    from .fields import PrimeField

    for d in A.degrees_present():
        idxs = A.component_indices(d)
        if d == zero_deg:
            if len(idxs) > 1:
                if isinstance(A.field, PrimeField) and A.field.p ** len(idxs) > 10 ** 6:
                    details.append("degree %r: large component over %r, basis-point heuristic"
                                   % (d, A.field))
                    certified = False
                details.append("degree %r: component of dimension %d > 1 contains "
                               "non-scalar units" % (d, len(idxs)))
                return InvertiblesReport(False, certified, details)
            details.append("degree %r: scalar component" % (d,))
            continue
        if any(d.lam):
            details.append("degree %r: nonzero free-abelian degree, elements are "
                           "nilpotent (certified)" % (d,))
            continue
        # zero lambda-part, odd parity: generic pencil determinant
        if isinstance(A.field, PrimeField):
            p, k = A.field.p, len(idxs)
            if p ** k <= 10 ** 6:
                import itertools

                found = None
                for coeffs in itertools.product(range(p), repeat=k):
                    if not any(coeffs):
                        continue
                    a = A.zero()
                    for i, c in zip(idxs, coeffs):
                        a[i] = A.field.from_int(c)
                    if invert(A.left_mult_matrix(a)) is not None:
                        found = a
                        break
                if found is not None:
                    details.append("degree %r: invertible element found by scan" % (d,))
                    return InvertiblesReport(False, certified, details)
                details.append("degree %r: exhaustive scan, no units (certified)" % (d,))
            else:
                certified = False
                bad = False
                for i in idxs:
                    if invert(A.left_mult_matrix(A.basis_vector(i))) is not None:
                        bad = True
                if bad:
                    details.append("degree %r: invertible basis element" % (d,))
                    return InvertiblesReport(False, certified, details)
                details.append("degree %r: basis-point heuristic only" % (d,))
            continue
        import sympy

        ts = sympy.symbols("t0:%d" % len(idxs))
        n = A.dim
        M = sympy.zeros(n, n)
        for t, i in zip(ts, idxs):
            mat = A.left_mult_matrix(A.basis_vector(i))
            for r in range(n):
                for c in range(n):
                    v = mat.data[r][c]
                    if v:
                        M[r, c] += t * sympy.Rational(str(v))
        det = sympy.expand(M.det(method="berkowitz"))
        if det == 0:
            details.append("degree %r: generic determinant vanishes (certified)" % (d,))
        else:
            details.append("degree %r: generic determinant nonzero, units exist" % (d,))
            return InvertiblesReport(False, certified, details)
    return InvertiblesReport(True, certified, details)
