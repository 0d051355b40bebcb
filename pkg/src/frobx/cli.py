"""Command-line interface.

Specs name either a builtin ("nilcoxeter:3", "nilcoxeter:2:3", "symgrp:2:4",
"truncpoly:4", "exterior:2", "nonprojective") or a path to a problem file.
Exit codes: 0 = checks passed / certified, 1 = a check failed or the
structure was refuted, 2 = usage or parse error, 3 = inconclusive.
"""

import argparse
import sys

from . import examples
from .adjunction import build_t1, build_t2, check_counit, check_triangle_identities, check_unit
from .extension import (check_left_trace, check_right_trace, find_dual_generators,
                        induced_trace, is_twisted_frobenius, verify_dual_generators)
from .fileformat import FormatError, dumps_extension, load
from .frobenius import check_frobenius, nakayama_automorphism
from .gsalg import validate_algebra

BUILTIN_ALGEBRAS = {
    "nilcoxeter": examples.nilcoxeter,
    "symgrp": examples.symmetric_group_algebra,
    "truncpoly": examples.truncated_polynomial,
    "exterior": examples.exterior_algebra,
}

BUILTIN_EXTENSIONS = {
    "nilcoxeter": examples.nilcoxeter_extension,
    "symgrp": examples.symmetric_group_extension,
}


class SpecError(ValueError):
    pass


def parse_spec(spec):
    """Returns ("algebra", fa), ("extension", pair), ("embedding", emb) or
    ("file", problem)."""
    if ":" in spec:
        head, *args = spec.split(":")
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise SpecError("non-integer parameter in %r" % spec)
        if len(nums) == 1:
            if head not in BUILTIN_ALGEBRAS:
                raise SpecError("unknown builtin %r" % head)
            return "algebra", BUILTIN_ALGEBRAS[head](nums[0])
        if len(nums) == 2:
            if head not in BUILTIN_EXTENSIONS:
                raise SpecError("no builtin extension family %r" % head)
            return "extension", BUILTIN_EXTENSIONS[head](nums[0], nums[1])
        raise SpecError("too many parameters in %r" % spec)
    if spec == "nonprojective":
        return "embedding", examples.non_projective_pair()
    try:
        return "file", load(spec)
    except FileNotFoundError:
        raise SpecError("no builtin or file named %r" % spec)


def _emit(report, verbose=True):
    print(report.summary())
    return 0 if report.ok else 1


def cmd_validate(args):
    kind, obj = parse_spec(args.spec)
    rc = 0
    if kind == "algebra":
        rc |= _emit(validate_algebra(obj.algebra))
    elif kind == "extension":
        rc |= _emit(validate_algebra(obj.A))
        rc |= _emit(validate_algebra(obj.B))
        rc |= _emit(obj.emb.validate())
    elif kind == "embedding":
        rc |= _emit(validate_algebra(obj.A))
        rc |= _emit(validate_algebra(obj.B))
        rc |= _emit(obj.validate())
    else:
        for A in obj.algebras.values():
            rc |= _emit(validate_algebra(A))
        if obj.embedding is not None:
            rc |= _emit(obj.embedding.validate())
    return rc


def _want_algebra(args):
    kind, obj = parse_spec(args.spec)
    if kind == "algebra":
        return obj
    raise SpecError("%r does not name a single builtin algebra" % args.spec)


def cmd_frobenius_check(args):
    fa = _want_algebra(args)
    return _emit(check_frobenius(fa))


def cmd_nakayama(args):
    fa = _want_algebra(args)
    rep = check_frobenius(fa)
    if not rep:
        return _emit(rep)
    psi = nakayama_automorphism(fa)
    A = fa.algebra
    from .fileformat import format_combination

    for i, label in enumerate(A.labels):
        print("%s -> %s" % (label, format_combination(A, psi.columns[i])))
    return 0


def _trace_for(args, kind, obj):
    if kind == "extension":
        return induced_trace(obj)
    if kind == "file":
        if not obj.traces:
            raise SpecError("file defines no trace")
        return next(iter(obj.traces.values()))
    raise SpecError("spec carries no trace data")


def cmd_extension_check(args):
    kind, obj = parse_spec(args.spec)
    if kind == "extension":
        emb, alpha, beta = obj.emb, obj.alpha, obj.beta
    elif kind == "embedding":
        from .gsalg import GradedLinearMap

        emb = obj
        alpha = GradedLinearMap.identity(emb.A)
        beta = GradedLinearMap.identity(emb.B)
    elif kind == "file" and obj.traces:
        tr = next(iter(obj.traces.values()))
        emb, alpha, beta = tr.emb, tr.alpha, tr.beta
    else:
        raise SpecError("%r does not describe an extension" % args.spec)
    result = is_twisted_frobenius(emb, alpha, beta)
    print(result.summary())
    return {"certified": 0, "refuted": 1, "inconclusive": 3}[result.status]


def cmd_dual_gens(args):
    kind, obj = parse_spec(args.spec)
    tr = _trace_for(args, kind, obj)
    dg = find_dual_generators(tr)
    if dg is None:
        print("no dual generators: A is not projective over B")
        return 1
    rep = verify_dual_generators(dg)
    from .fileformat import format_combination

    for x, y in dg.pairs:
        print("x = %s   y = %s" % (format_combination(tr.A, x),
                                   format_combination(tr.A, y)))
    return _emit(rep)


def cmd_adjunction_check(args):
    kind, obj = parse_spec(args.spec)
    tr = _trace_for(args, kind, obj)
    dg = find_dual_generators(tr)
    if dg is None:
        print("not projective, no adjunction data")
        return 1
    t1, t2 = build_t1(tr), build_t2(tr)
    rc = 0
    rc |= _emit(check_unit(tr, dg, t1))
    rc |= _emit(check_counit(tr, t2))
    rc |= _emit(check_triangle_identities(tr, dg, t1, t2))
    return rc


def cmd_certify(args):
    kind, obj = parse_spec(args.spec)
    if kind == "embedding":
        from .gsalg import GradedLinearMap

        alpha = GradedLinearMap.identity(obj.A)
        beta = GradedLinearMap.identity(obj.B)
        result = is_twisted_frobenius(obj, alpha, beta)
        print(result.summary())
        return {"certified": 0, "refuted": 1, "inconclusive": 3}[result.status]
    tr = _trace_for(args, kind, obj)
    rc = 0
    rc |= _emit(check_left_trace(tr))
    rc |= _emit(check_right_trace(tr))
    dg = find_dual_generators(tr)
    if dg is None:
        print("dual generators: not projective")
        return 1
    rc |= _emit(verify_dual_generators(dg))
    if rc == 0 and args.output:
        with open(args.output, "w") as fh:
            fh.write(dumps_extension(tr, dual_pairs=dg.pairs))
        print("certificate written to %s" % args.output)
    return rc


def cmd_builtin(args):
    if args.name == "list":
        for fam in sorted(BUILTIN_ALGEBRAS):
            print("%s:N" % fam)
        for fam in sorted(BUILTIN_EXTENSIONS):
            print("%s:M:N" % fam)
        print("nonprojective")
        return 0
    kind, obj = parse_spec(args.name)
    if kind == "algebra":
        A = obj.algebra
        print("algebra %s, dimension %d, frobenius degree %r"
              % (A.name, A.dim, obj.degree))
        for i, label in enumerate(A.labels):
            print("  %s  degree %r" % (label, A.degrees[i]))
    elif kind == "extension":
        print("extension %s <= %s, expected trace degree %r"
              % (obj.B.name, obj.A.name, obj.degree))
    else:
        print("embedding %s <= %s" % (obj.B.name, obj.A.name))
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="frobx",
        description="exact checks for twisted Frobenius extensions of graded "
                    "superalgebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, output=False):
        p = sub.add_parser(name)
        if name == "builtin":
            p.add_argument("name")
        else:
            p.add_argument("spec")
        if output:
            p.add_argument("-o", "--output", default=None)
        p.set_defaults(fn=fn)

    add("validate", cmd_validate)
    add("frobenius-check", cmd_frobenius_check)
    add("nakayama", cmd_nakayama)
    add("extension-check", cmd_extension_check)
    add("dual-gens", cmd_dual_gens)
    add("adjunction-check", cmd_adjunction_check)
    add("certify", cmd_certify, output=True)
    add("builtin", cmd_builtin)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (SpecError, FormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
