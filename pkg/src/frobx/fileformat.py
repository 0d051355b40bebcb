"""Line-oriented input files for algebras, embeddings, maps, traces and
certificates.

A file is a sequence of blocks opened by a [header] line.  Inside a block,
each nonempty line is a directive; '#' starts a comment.  Linear combinations
are written as alternating coefficient/label tokens ("1 e -1/2 u1"); an empty
combination is zero.  Products missing from an [algebra] block are zero.

    [field]                 rational | prime P
    [algebra NAME]          rank R / basis L lam.. par / unit .. / mul L L = ..
    [embed B A]             L = combination in A
    [map NAME ALG]          optional "shift lam.. par", then L = combination
    [trace NAME]            degree lam.. par / alpha M / beta M / L = comb in B
    [certificate]           trace NAME / status .. / dual comb | comb

Serialization is deterministic, so load followed by save is idempotent.
"""

from .extension import TraceMap
from .fields import field_from_string
from .gsalg import Degree, GradedLinearMap, GradedSuperAlgebra, SubalgebraEmbedding


class FormatError(ValueError):
    pass


def _tokenize(path_or_text, from_string):
    text = path_or_text if from_string else open(path_or_text).read()
    blocks = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise FormatError("line %d: malformed header %r" % (lineno, raw))
            current = (line[1:-1].split(), [])
            blocks.append(current)
        else:
            if current is None:
                raise FormatError("line %d: directive before any [header]" % lineno)
            current[1].append((lineno, line))
    return blocks


def _parse_combination(tokens, algebra, lineno):
    if len(tokens) % 2:
        raise FormatError("line %d: combination needs coeff/label pairs" % lineno)
    v = algebra.zero()
    for k in range(0, len(tokens), 2):
        c = algebra.field.parse(tokens[k])
        label = tokens[k + 1]
        try:
            idx = algebra.labels.index(label)
        except ValueError:
            raise FormatError("line %d: unknown basis label %r in %s"
                              % (lineno, label, algebra.name))
        v[idx] = v[idx] + c
    return v


def _format_scalar(field, c):
    return field.format(c)


def format_combination(algebra, v):
    parts = []
    for i, c in enumerate(v):
        if c:
            parts.append("%s %s" % (_format_scalar(algebra.field, c),
                                    algebra.labels[i]))
    return " ".join(parts)


def _parse_degree(tokens, rank, lineno):
    if len(tokens) != rank + 1:
        raise FormatError("line %d: degree needs %d integers + parity"
                          % (lineno, rank))
    return Degree(tuple(int(t) for t in tokens[:-1]), int(tokens[-1]))


class ProblemFile:
    """Parsed contents of an input file."""

    def __init__(self, field):
        self.field = field
        self.algebras = {}   # name -> GradedSuperAlgebra
        self.embedding = None
        self.maps = {}       # name -> GradedLinearMap
        self.traces = {}     # name -> TraceMap
        self.certificates = []

    def single_algebra(self):
        if len(self.algebras) != 1:
            raise FormatError("expected exactly one algebra, found %d"
                              % len(self.algebras))
        return next(iter(self.algebras.values()))


def _build_algebra(name, lines, field):
    rank = 1
    basis = []
    unit_line = None
    muls = []
    for lineno, line in lines:
        tokens = line.split()
        if tokens[0] == "rank":
            rank = int(tokens[1])
        elif tokens[0] == "basis":
            basis.append((lineno, tokens[1], tokens[2:]))
        elif tokens[0] == "unit":
            unit_line = (lineno, tokens[1:])
        elif tokens[0] == "mul":
            if "=" not in tokens:
                raise FormatError("line %d: mul needs '='" % lineno)
            eq = tokens.index("=")
            if eq != 3:
                raise FormatError("line %d: mul takes two labels" % lineno)
            muls.append((lineno, tokens[1], tokens[2], tokens[eq + 1:]))
        else:
            raise FormatError("line %d: unknown directive %r" % (lineno, tokens[0]))
    labels = [b[1] for b in basis]
    degrees = [_parse_degree(b[2], rank, b[0]) for b in basis]
    n = len(labels)
    zero_vec = [field.zero()] * n
    table = [[list(zero_vec) for _ in range(n)] for _ in range(n)]
    A = GradedSuperAlgebra(labels, degrees, table, list(zero_vec), field, name=name)
    for lineno, l1, l2, rhs in muls:
        try:
            i, j = labels.index(l1), labels.index(l2)
        except ValueError:
            raise FormatError("line %d: unknown label in mul" % lineno)
        table[i][j] = _parse_combination(rhs, A, lineno)
    if unit_line is None:
        raise FormatError("algebra %s has no unit line" % name)
    A.unit[:] = _parse_combination(unit_line[1], A, unit_line[0])
    return A


def _build_map(header, lines, problem):
    name = header[1]
    alg = problem.algebras[header[2]]
    target = problem.algebras[header[3]] if len(header) > 3 else alg
    shift = Degree.zero(alg.rank)
    cols = {}
    for lineno, line in lines:
        tokens = line.split()
        if tokens[0] == "shift":
            shift = _parse_degree(tokens[1:], alg.rank, lineno)
            continue
        if len(tokens) < 2 or tokens[1] != "=":
            raise FormatError("line %d: expected 'LABEL = combination'" % lineno)
        idx = alg.labels.index(tokens[0])
        cols[idx] = _parse_combination(tokens[2:], target, lineno)
    columns = [cols.get(i, target.zero()) for i in range(alg.dim)]
    problem.maps[name] = GradedLinearMap(alg, target, shift, columns)


def _resolve_map(name, algebra, problem):
    if name == "id":
        return GradedLinearMap.identity(algebra)
    if name not in problem.maps:
        raise FormatError("unknown map %r" % name)
    return problem.maps[name]


def _build_trace(header, lines, problem):
    name = header[1]
    if problem.embedding is None:
        raise FormatError("a [trace] block needs an [embed] block first")
    emb = problem.embedding
    A, B = emb.A, emb.B
    degree = None
    alpha = beta = None
    cols = {}
    for lineno, line in lines:
        tokens = line.split()
        if tokens[0] == "degree":
            degree = _parse_degree(tokens[1:], A.rank, lineno)
        elif tokens[0] == "alpha":
            alpha = _resolve_map(tokens[1], A, problem)
        elif tokens[0] == "beta":
            beta = _resolve_map(tokens[1], B, problem)
        elif len(tokens) >= 2 and tokens[1] == "=":
            idx = A.labels.index(tokens[0])
            cols[idx] = _parse_combination(tokens[2:], B, lineno)
        else:
            raise FormatError("line %d: bad trace directive" % lineno)
    if degree is None:
        raise FormatError("trace %s has no degree line" % name)
    if alpha is None:
        alpha = GradedLinearMap.identity(A)
    if beta is None:
        beta = GradedLinearMap.identity(B)
    columns = [cols.get(i, B.zero()) for i in range(A.dim)]
    mapping = GradedLinearMap(A, B, -degree, columns)
    problem.traces[name] = TraceMap(emb, mapping, alpha, beta)


def load(path):
    return loads(open(path).read())


def loads(text):
    blocks = _tokenize(text, from_string=True)
    field = None
    problem = None
    for header, lines in blocks:
        kind = header[0]
        if kind == "field":
            if len(lines) != 1:
                raise FormatError("[field] needs exactly one line")
            field = field_from_string(lines[0][1])
            problem = ProblemFile(field)
        elif problem is None:
            raise FormatError("the first block must be [field]")
        elif kind == "algebra":
            name = header[1] if len(header) > 1 else "A"
            problem.algebras[name] = _build_algebra(name, lines, field)
        elif kind == "embed":
            B = problem.algebras[header[1]]
            A = problem.algebras[header[2]]
            cols = {}
            for lineno, line in lines:
                tokens = line.split()
                if len(tokens) < 2 or tokens[1] != "=":
                    raise FormatError("line %d: expected 'LABEL = combination'"
                                      % lineno)
                cols[B.labels.index(tokens[0])] = _parse_combination(
                    tokens[2:], A, lineno)
            columns = [cols.get(i, A.zero()) for i in range(B.dim)]
            inc = GradedLinearMap(B, A, Degree.zero(A.rank), columns)
            problem.embedding = SubalgebraEmbedding(A, B, inc)
        elif kind == "map":
            _build_map(header, lines, problem)
        elif kind == "trace":
            _build_trace(header, lines, problem)
        elif kind == "certificate":
            problem.certificates.append((header[1:], lines))
        else:
            raise FormatError("unknown block [%s]" % " ".join(header))
    if problem is None:
        raise FormatError("empty file")
    return problem


def _dump_degree(d):
    return " ".join(str(x) for x in d.lam) + " " + str(d.parity)


def dump_algebra(A, out):
    out.append("[algebra %s]" % A.name)
    out.append("rank %d" % A.rank)
    for i, label in enumerate(A.labels):
        out.append("basis %s %s" % (label, _dump_degree(A.degrees[i])))
    out.append("unit %s" % format_combination(A, A.unit))
    for i in range(A.dim):
        for j in range(A.dim):
            if any(A.table[i][j]):
                out.append("mul %s %s = %s" % (A.labels[i], A.labels[j],
                                               format_combination(A, A.table[i][j])))
    out.append("")


def dump_map(name, f, out, header_extra=None):
    extra = header_extra or "%s %s" % (f.source.name, f.target.name)
    out.append("[map %s %s]" % (name, extra))
    if not f.shift.is_zero():
        out.append("shift %s" % _dump_degree(f.shift))
    for i, label in enumerate(f.source.labels):
        if any(f.columns[i]):
            out.append("%s = %s" % (label, format_combination(f.target,
                                                              f.columns[i])))
    out.append("")


def dump_certificate(tr, dual_pairs, out):
    """Append a [certificate] block re-stating the trace data and dual pairs."""
    A, B = tr.A, tr.B
    out.append("[certificate]")
    out.append("degree %s" % _dump_degree(tr.degree))
    for p, (x, y) in enumerate(dual_pairs):
        out.append("dual %s | %s" % (format_combination(A, x),
                                     format_combination(A, y)))
    out.append("")


def dumps_extension(tr, dual_pairs=None, alpha_name="alpha", beta_name="beta"):
    """Serialize a full extension problem (and optional certificate)."""
    A, B = tr.A, tr.B
    out = ["[field]", A.field.name, ""]
    dump_algebra(A, out)
    dump_algebra(B, out)
    out.append("[embed %s %s]" % (B.name, A.name))
    for i, label in enumerate(B.labels):
        out.append("%s = %s" % (label,
                                format_combination(A, tr.emb.embed(B.basis_vector(i)))))
    out.append("")
    dump_map(alpha_name, tr.alpha, out)
    dump_map(beta_name, tr.beta, out)
    out.append("[trace tr]")
    out.append("degree %s" % _dump_degree(tr.degree))
    out.append("alpha %s" % alpha_name)
    out.append("beta %s" % beta_name)
    for i, label in enumerate(A.labels):
        if any(tr.mapping.columns[i]):
            out.append("%s = %s" % (label,
                                    format_combination(B, tr.mapping.columns[i])))
    out.append("")
    if dual_pairs is not None:
        dump_certificate(tr, dual_pairs, out)
    return "\n".join(out)


def parse_certificate(problem):
    """Dual pairs from the first [certificate] block of a loaded file."""
    if not problem.certificates:
        return None
    _, lines = problem.certificates[0]
    emb = problem.embedding
    pairs = []
    degree = None
    for lineno, line in lines:
        tokens = line.split()
        if tokens[0] == "degree":
            degree = _parse_degree(tokens[1:], emb.A.rank, lineno)
        elif tokens[0] == "dual":
            if "|" not in tokens:
                raise FormatError("line %d: dual needs 'x | y'" % lineno)
            bar = tokens.index("|")
            x = _parse_combination(tokens[1:bar], emb.A, lineno)
            y = _parse_combination(tokens[bar + 1:], emb.A, lineno)
            pairs.append((x, y))
        else:
            raise FormatError("line %d: bad certificate directive" % lineno)
    return degree, pairs
